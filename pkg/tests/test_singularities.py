from fractions import Fraction

import pytest

from algentropy.catalog import catalog_get
from algentropy.errors import NonRationalSingularity, NotConfined
from algentropy.mapping import step
from algentropy.parser import parse_mapping
from algentropy.rationals import INDETERMINATE, ExtRational
from algentropy.singularities import (find_singular_values,
                                      pattern_for_late_confinement,
                                      trace_singularity)
from algentropy.tokens import ValueToken


def tokens(ts):
    return [str(t) for t in ts]


def test_find_singular_values_catalog():
    assert tokens(find_singular_values(catalog_get("eq1-qrt"), 1)) == ["1", "3"]
    assert tokens(find_singular_values(catalog_get("eq14-hv"), 1)) == ["0"]
    assert tokens(find_singular_values(catalog_get("eq12-dp1-mult"), 1)) == ["0"]
    assert tokens(find_singular_values(catalog_get("eq20-bedford-kim"), 1)) == ["2"]


def test_find_singular_values_excludes_regular_infinity():
    # for the cubic-forcing map x = inf maps to inf for every x_{n-1};
    # that is regular fixed behaviour and must not be flagged
    hv = catalog_get("eq14-hv")
    assert ValueToken.infinity() not in find_singular_values(hv, 1)


def test_find_singular_values_exclusion_list():
    eq1 = catalog_get("eq1-qrt")
    got = find_singular_values(eq1, 1, exclude=[ValueToken.finite(1)])
    assert tokens(got) == ["3"]


def test_nonrational_singularity_reported():
    m = parse_mapping("(x^2 - 2)/y")  # blown down at x = +-sqrt(2)
    with pytest.raises(NonRationalSingularity):
        find_singular_values(m, 1)


def test_eq1_pattern_with_parameter_recognition():
    eq1 = catalog_get("eq1-qrt")
    r = trace_singularity(eq1, 1)
    assert r.confined and r.steps_to_confine == 5
    assert r.values() == ["1", "inf", "param:a", "0", "param:b", "free"]
    r2 = trace_singularity(eq1, 3)
    assert r2.values() == ["param:b", "0", "param:a", "inf", "1", "free"]
    assert str(r2.entering) == "param:b"


def test_parameter_values_resolve_to_bound_rationals():
    eq1 = catalog_get("eq1-qrt")
    r = trace_singularity(eq1, 1)
    resolved = {e.value.name: e.value.resolved() for e in r.entries
                if e.value.kind == "param"}
    assert resolved == {"a": Fraction(2), "b": Fraction(3)}


def test_dp1_multiplicative_pattern():
    r = trace_singularity(catalog_get("eq12-dp1-mult"), 0)
    assert r.values() == ["0", "inf^2", "0", "free"]
    assert r.steps_to_confine == 3
    assert [e.multiplicity for e in r.entries] == [1, 2, 1, 1]


def test_hv_pattern_multiplicities():
    r = trace_singularity(catalog_get("eq14-hv"), 0)
    assert r.values() == ["0", "inf^2", "inf^2", "0", "free"]
    assert r.steps_to_confine == 4
    assert [e.multiplicity for e in r.entries] == [1, 2, 2, 1, 1]


def test_eq17_pattern():
    r = trace_singularity(catalog_get("eq17-hv-k"), 0)
    assert r.values() == ["0", "inf^2", "1", "inf^2", "0", "free"]


def test_eq27_base_pattern():
    r = trace_singularity(catalog_get("eq27-dp1-add"), 0)
    assert r.values() == ["0", "inf", "inf", "0", "free"]


def test_eq27_late_confinement_block():
    m = catalog_get("eq27-dp1-add", variant="late2")
    r = pattern_for_late_confinement(m, 0)
    assert r.values() == ["0", "inf", "inf", "0", "inf", "inf", "0", "free"]
    assert r.steps_to_confine == 7


def test_eq27_generic_never_confines():
    m = catalog_get("eq27-dp1-add", variant="generic")
    with pytest.raises(NotConfined) as exc:
        pattern_for_late_confinement(m, 0, max_steps=12)
    rep = exc.value.report
    assert rep is not None and not rep.confined
    assert rep.steps_to_confine is None
    assert len(rep.entries) == 13  # opening entry plus max_steps forced ones


def test_seed_stability_of_evidence():
    r = trace_singularity(catalog_get("eq14-hv"), 0)
    run1, run2 = r.evidence
    # valuations (hence multiplicities) agree on every pre-confinement step
    assert [v for v, _ in run1[:-1]] == [v for v, _ in run2[:-1]]
    # and the recovered free values differ between the seeds
    assert run1[-1] != run2[-1]


def test_replay_through_projective_steps():
    # the traced constants replay exactly under plain projective iteration;
    # the first indeterminate form appears at the confinement step, except
    # that a pattern passing through two consecutive infinities reaches the
    # (inf, inf) corner earlier, where the projective value is genuinely
    # path-dependent and (0 : 0) is the correct answer
    cases = [("eq1-qrt", 1), ("eq1-qrt", 3), ("eq12-dp1-mult", 0),
             ("eq14-hv", 0), ("eq27-dp1-add", 0)]
    for name, entering in cases:
        m = catalog_get(name)
        rep = trace_singularity(m, entering)
        prev = ExtRational(5)
        cur = ExtRational(Fraction(entering))
        for k in range(1, rep.steps_to_confine + 1):
            nxt = step(m, k, cur, prev)
            if nxt is INDETERMINATE:
                corner = (k >= 2 and rep.entries[k - 1].value.is_infinite
                          and rep.entries[k - 2].value.is_infinite)
                assert k == rep.steps_to_confine or corner, (name, k)
                break
            want = rep.entries[k].value
            if want.is_infinite:
                assert nxt.is_infinite, (name, k)
            else:
                assert nxt == ExtRational(want.resolved()), (name, k)
            cur, prev = nxt, cur
        else:
            raise AssertionError(f"{name}: replay never hit an indeterminate")
