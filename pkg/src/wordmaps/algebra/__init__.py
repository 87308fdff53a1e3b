from .elimination import (
    DegenerateElimination,
    DivisionResult,
    gcd_divides,
    poly_gcd,
    resultant,
    sylvester_matrix,
)
from .numbers import I, GaussianRational
from .poly import NotDivisible, Poly, PolySyntaxError, parse_poly, variables
from .quotient import UniQuotient, quotient_reduce
from .roots import RootConfig, RootFindingError, complex_roots

resultant_eliminate = resultant
