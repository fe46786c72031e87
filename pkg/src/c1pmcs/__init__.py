"""Decide whether a row of a 0-1 matrix lies in a minimal conflicting set
for the consecutive ones property, with a checkable certificate."""

from .c1p import C1PResult, OracleBoundError, is_c1p, is_c1p_bruteforce
from .cascade import CertificateRejected, MembershipAnswer, classify_certificate, mcs_membership, membership_all
from .detectors import MCSCertificate
from .fixtures import fixture
from .matrix import BinaryMatrix, ParseError, RowSet, overlap, parse_matrix, serialize
from .oracle import OracleReport, enumerate_mcs, random_matrix, search_fixture
from .verify import ClassificationError, classify, explain, verify_mcs

__all__ = [
    "BinaryMatrix",
    "C1PResult",
    "CertificateRejected",
    "ClassificationError",
    "MCSCertificate",
    "MembershipAnswer",
    "OracleBoundError",
    "OracleReport",
    "ParseError",
    "RowSet",
    "classify",
    "classify_certificate",
    "enumerate_mcs",
    "explain",
    "fixture",
    "is_c1p",
    "is_c1p_bruteforce",
    "mcs_membership",
    "membership_all",
    "overlap",
    "parse_matrix",
    "random_matrix",
    "search_fixture",
    "serialize",
    "verify_mcs",
]
