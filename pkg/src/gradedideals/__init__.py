"""Exact multigraded ideal computations: I*, socles, indices of reducibility."""

from .errors import (
    DimensionError,
    ParseError,
    PreconditionError,
    UsageError,
    VerificationError,
)
from .scalar import GF, QQ, FieldElement, PrimeField, RationalField
from .ring import GradingMap, MonomialOrder, Polynomial, PolynomialRing
from .groebner import GroebnerBasis, buchberger, normal_form
from .idealops import (
    Ideal,
    eliminate,
    ideal_equal,
    ideal_membership,
    intersect,
    quotient,
    saturate,
)
from .star import StarResult, is_graded, star, star_of_prime_check, star_truncated_oracle
from .artinian import (
    index_of_reducibility_primary,
    is_irreducible_primary,
    is_m_primary,
    socle,
    standard_monomials,
)
from .monomial import (
    MonomialIdeal,
    index_of_reducibility_monomial,
    irreducible_decomposition,
    minimal_primes_squarefree,
)
from .gradedfield import (
    GradedFieldPresentation,
    HomogeneousMatrix,
    graded_free_basis,
    parse_matrix,
    support_lattice,
)
from .harness import PointConfiguration, ideal_of_points, reproduce_paper_examples, theorem51_check

__version__ = "0.1.0"
