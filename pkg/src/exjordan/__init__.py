"""Exceptional Jordan pairs and triple systems with exact arithmetic over Q(zeta_24).

Submodules: ``exactfield`` (the scalar field), ``exactlinalg`` (exact
matrices and Smith normal form), ``octonion``, ``albert``, ``jordan``
(pairs and triples as structure tensors), ``gradings``, ``tkk`` (the
associated Lie algebras) and ``autos`` (explicit automorphisms).
"""

from .exactfield import Scalar
from .exactlinalg import Matrix
from .octonion import Octonion
from .albert import AlbertElem
from .jordan import JordanSystem, get_system
from .gradings import CATALOG, Grading, catalog, universal_group, verify_grading
from .tkk import LieAlgebra
from .autos import LinearOpPair, build, is_automorphism

__all__ = [
    "Scalar", "Matrix", "Octonion", "AlbertElem", "JordanSystem", "get_system",
    "CATALOG", "Grading", "catalog", "universal_group", "verify_grading",
    "LieAlgebra", "LinearOpPair", "build", "is_automorphism",
]
__version__ = "0.1.0"
