"""algentropy: exact integrability analysis of three-point rational mappings.

The toolkit decides whether a mapping x_{n+1} = N(x_n, x_{n-1}; n) / D(...)
is integrable by computing its algebraic entropy three independent ways:

  * direct degree growth of the exact symbolic iterates,
  * the singularity-pattern route (count equations -> characteristic
    polynomial -> dynamical degree, decided by exact root isolation),
  * Diophantine height growth of exact rational orbits.

All verdict-relevant decisions are made in exact arithmetic.
"""

from .rationals import INDETERMINATE, INF, ExtRational, ext_rational_arith
from .polynomials import NEG_INFINITY, Polynomial, poly_gcd
from .ratfun import RationalFunction, ratfun_reduce
from .laurent import LaurentSeries, laurent_arith
from .roots import RootInterval, isolate_largest_real_root
from .streams import CoefficientStream
from .mapping import Mapping, step, step_series, step_symbolic
from .parser import parse_mapping, format_mapping
from .catalog import CatalogEntry, catalog_entry, catalog_get, catalog_names
from .degrees import (DegreeSequence, GrowthVerdict, classify_growth,
                      degree_sequence, qrt_degree_closed_form,
                      verify_recurrence)
from .singularities import (PatternEntry, PatternReport, ValueToken,
                            find_singular_values,
                            pattern_for_late_confinement, trace_singularity)
from .express import (EquationSystem, PatternSpec, ShiftPolynomial, Verdict,
                      build_equations, characteristic_from_equations,
                      characteristic_polynomial, late_confinement_limit,
                      late_confinement_polynomial, verdict)
from .heights import HeightTrace, diophantine_degree, height

__version__ = "0.1.0"
