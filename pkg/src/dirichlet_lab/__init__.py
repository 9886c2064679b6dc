"""Dirichlet L-value identities through Gauss sums, checked against an
independent Hurwitz-zeta oracle."""

__version__ = "0.1.0"

from .characters import (  # noqa: E402
    CharacterGroup,
    DirichletCharacter,
    build_group,
    chi_eval,
    conductor,
    enumerate_characters,
    parity,
)
from .exact import ComplexApprox, DomainError, PiPoly, PiScalar, factorize, primitive_root  # noqa: E402
from .gauss import GaussTable, check_separability, gauss_sum, gauss_table  # noqa: E402
from .identities import (  # noqa: E402
    ConventionSet,
    VerificationRecord,
    adjudicate,
    alkan_L,
    corollary_even_L2,
    corollary_odd_L2,
    theorem1_L,
    theorem2_L,
)
from .oracle import LValue, digamma, hurwitz_zeta, l_direct, l_value  # noqa: E402

__all__ = [
    "CharacterGroup", "ComplexApprox", "ConventionSet", "DirichletCharacter", "DomainError",
    "GaussTable", "LValue", "PiPoly", "PiScalar", "VerificationRecord", "adjudicate",
    "alkan_L", "build_group", "check_separability", "chi_eval", "conductor",
    "corollary_even_L2", "corollary_odd_L2", "digamma", "enumerate_characters", "factorize",
    "gauss_sum", "gauss_table", "hurwitz_zeta", "l_direct", "l_value", "parity",
    "primitive_root", "theorem1_L", "theorem2_L",
]
