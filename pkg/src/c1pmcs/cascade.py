"""Membership of a row in some MCS, by running the detectors in order."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .detectors import STAGES, Instance, MCSCertificate
from .matrix import BinaryMatrix
from .verify import classify, verify_mcs

STAGE_NAMES = tuple(name for name, _ in STAGES)


class CertificateRejected(RuntimeError):
    """A detector produced a certificate that fails re-verification."""


@dataclass(frozen=True)
class MembershipAnswer:
    row: int
    member: bool
    certificate: Optional[MCSCertificate]
    stage_trace: tuple[tuple[str, bool], ...]

    @property
    def stage(self) -> Optional[str]:
        return next((name for name, hit in self.stage_trace if hit), None)

    def to_dict(self) -> dict:
        out: dict = {"row": self.row, "member": self.member}
        cert = self.certificate
        if cert is not None:
            out["mcs"] = list(cert.rows)
            out["form"] = cert.form
            out["role"] = cert.role
            if cert.witness_columns is not None:
                out["witness_columns"] = list(cert.witness_columns)
        out["stages"] = [{"name": name, "hit": hit} for name, hit in self.stage_trace]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def mcs_membership(matrix: BinaryMatrix, r: int, instance: Optional[Instance] = None) -> MembershipAnswer:
    """Run the eleven stages for row ``r``; stop at the first certificate.

    Later stages rely on earlier ones having found nothing, so the order is
    fixed.  The returned certificate is re-verified here as well.
    """
    if not 0 <= r < matrix.m:
        raise IndexError(f"row {r} out of range for m={matrix.m}")
    inst = instance if instance is not None else Instance(matrix)
    trace = []
    for name, detect in STAGES:
        cert = detect(inst, r)
        trace.append((name, cert is not None))
        if cert is not None:
            if not verify_mcs(matrix, cert.rows) or r not in cert.rows:
                raise CertificateRejected(f"stage {name} returned a non-MCS {cert.rows} for row {r}")
            return MembershipAnswer(r, True, cert, tuple(trace))
    return MembershipAnswer(r, False, None, tuple(trace))


def membership_all(matrix: BinaryMatrix, threads: int = 1) -> list[MembershipAnswer]:
    """Answers for every row, in row order, optionally on a thread pool."""
    inst = Instance(matrix)
    rows = range(matrix.m)
    if threads <= 1:
        return [mcs_membership(matrix, r, inst) for r in rows]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda r: mcs_membership(matrix, r, inst), rows))


def classify_certificate(matrix: BinaryMatrix, rows) -> tuple[str, list[int]]:
    """Form and kernels of a verified MCS; raises ``ValueError`` otherwise."""
    if not verify_mcs(matrix, rows):
        raise ValueError(f"{sorted(rows)} is not an MCS")
    return classify(matrix, rows)
