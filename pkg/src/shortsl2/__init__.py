"""Exact computations with short sl2 Lie superalgebras and J-ternary data."""
from ._backend import BACKEND
from .algebras import (AlgebraTable, BilinearMap, Sl2Data, TrilinearMap, check_lie,
                       check_super_jacobi, check_super_jordan, check_super_jordan_via_brackets)
from .constructions import (AssembledLie, BsAlgebra, QuotientFromModule, bs_quotient,
                            quotient_from_module, rs_relations, tag, tag_on_morphism, tkk)
from .exactlin import Matrix, Subspace
from .jternary import JTernaryData, check_jternary, innder_basis, validate
from .report import Check, CheckFailed, Report
from .shortdec import (ExtractedOps, NotShort, ShortDecomposition, decompose, extract_ternary,
                       phi_map, roundtrip_check, verify_short_structure)
from .superspace import SuperSpace

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AlgebraTable", "BilinearMap", "Sl2Data", "TrilinearMap", "check_lie",
    "check_super_jacobi", "check_super_jordan", "check_super_jordan_via_brackets",
    "AssembledLie", "BsAlgebra", "QuotientFromModule", "bs_quotient", "quotient_from_module",
    "rs_relations", "tag", "tag_on_morphism", "tkk", "Matrix", "Subspace", "JTernaryData",
    "check_jternary", "innder_basis", "validate", "Check", "CheckFailed", "Report",
    "ExtractedOps", "NotShort", "ShortDecomposition", "decompose", "extract_ternary", "phi_map",
    "roundtrip_check", "verify_short_structure", "SuperSpace",
]
