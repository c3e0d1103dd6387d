"""
Schubert polynomials and Kraśkiewicz–Pragacz modules in exact arithmetic.

The subpackages build Schubert polynomials, realize the modules whose
characters they are, and certify tensor-product filtrations by explicit
linear algebra over the rationals.
"""

from .errors import ResourceLimitError, VerificationError
from .kpfiltration import (
    FiltrationCertificate, PhiMap, iterated_monk_filtration, monk_filtration,
    phi_pq, t_w_module, tensor_kp_verify, v_pq,
)
from .perm import Permutation, identity, longest, monk_set, parse_perm, simple, transposition
from .polynomial import Partition, SparsePoly, monomial, variable
from .schubert import expand_in_schubert, monk_product, schubert, structure_constants
from .weightmod import coinvariant_hom_dim, kp_module, tensor

__version__ = "0.1.0"

__all__ = [
    "ResourceLimitError", "VerificationError",
    "FiltrationCertificate", "PhiMap", "iterated_monk_filtration", "monk_filtration",
    "phi_pq", "t_w_module", "tensor_kp_verify", "v_pq",
    "Permutation", "identity", "longest", "monk_set", "parse_perm", "simple", "transposition",
    "Partition", "SparsePoly", "monomial", "variable",
    "expand_in_schubert", "monk_product", "schubert", "structure_constants",
    "coinvariant_hom_dim", "kp_module", "tensor",
]
