"""Realizability checks, ideal builders, refutation search and the case catalog."""

from .catalog import CASE_NAMES, CaseResult, run_all, run_paper_case
from .certificate import (
    Certificate,
    InvarianceViolation,
    Verdict,
    check_full,
    check_invariance,
    verify_certificate,
)
from .ideals import (
    IDEAL_KINDS,
    c2c4_ideal,
    c6_ideal,
    centralizer_ideal,
    paper_ideal,
    product_ideal,
    sdp_c3_ideal,
    sdp_c4_ideal,
    v4_ideal,
)
from .matrices import verify_matrix_decomposition
from .refute import Leaf, LeafReason, RefutationTree, default_seeds, refute_full, verify_refutation
from .witness import self_centralizing_witness

__all__ = [
    "CASE_NAMES",
    "CaseResult",
    "Certificate",
    "IDEAL_KINDS",
    "InvarianceViolation",
    "Leaf",
    "LeafReason",
    "RefutationTree",
    "Verdict",
    "c2c4_ideal",
    "c6_ideal",
    "centralizer_ideal",
    "check_full",
    "check_invariance",
    "default_seeds",
    "paper_ideal",
    "product_ideal",
    "refute_full",
    "run_all",
    "run_paper_case",
    "sdp_c3_ideal",
    "sdp_c4_ideal",
    "self_centralizing_witness",
    "v4_ideal",
    "verify_certificate",
    "verify_matrix_decomposition",
    "verify_refutation",
]
