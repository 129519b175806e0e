"""Free A-module representations and dimensions of A[x1, ..., xn]/I over ZZ, QQ and Fp."""

from .coeff import QQ, ZZ, CoefficientDomain, domain_info, euclid_divrem, ext_gcd
from .dimension import (
    DimensionReport, OrderError, UnitIdealError, combinatorial_dimension,
    dimension_report, is_strongly_independent, krull_dimension_lex, left_basic_set,
    maximal_independent_sets,
)
from .groebner import (
    FreenessReport, GroebnerBasis, LeadingCoeffIdeal, NotFreeError, extend_mod_p,
    g_polynomial, is_free_representation, is_groebner, leading_coeff_ideal,
    s_polynomial, strong_groebner,
)
from .hilbert import (
    HilbertPolynomial, HilbertSeries, MonomialIdeal, hilbert_function_oracle,
    hilbert_polynomial, hilbert_series, krull_dimension_degcompat, series_coefficients,
)
from .parser import ParseError, ProblemError, ProblemSpec, parse_polynomial, parse_problem
from .polyring import (
    DEGLEX, DEGREVLEX, LEX, MonomialOrder, Polynomial, PolynomialRing, Term, compare,
    divide, leading_term, reduce,
)

__version__ = "0.1.0"
