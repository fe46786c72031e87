"""Searches for a forbidden configuration responsible for an MCS through a row.

Every detector takes an ``Instance`` (matrix plus its row graph and overlap
relation) and the queried row ``r``.  It returns the first candidate, in
ascending order of the candidate tuple, that passes ``verify_mcs``; a
candidate that fails verification is skipped and the scan goes on.  ``None``
means no configuration of that kind was found.

Rows are bit vectors (see ``matrix``); vertex sets are bit masks over row
indices.  ``x & ~y`` is the set difference x - y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Optional

from .c1p import c1p_holds
from .graph import Graph, RowGraph, find_induced_cycle_through, members, shortest_induced_path, span
from .matrix import BinaryMatrix, overlap
from .verify import _size3_form, verify_mcs

FORMS = ("I", "II", "III", "IV", "V")
ROLES = ("cycle_member", "kernel", "kernel_1", "kernel_2", "non_kernel")


@dataclass(frozen=True)
class MCSCertificate:
    rows: tuple[int, ...]
    form: str
    queried_row: int
    role: str
    witness_columns: Optional[tuple[int, ...]] = None


class Instance:
    """A matrix with the derived structure every detector reads.

    Verification results are cached per row set; the cache is the only
    mutable state and holds pure function values, so sharing an instance
    between threads is safe.
    """

    def __init__(self, matrix: BinaryMatrix) -> None:
        self.matrix = matrix
        self.R = matrix.rows
        self.graph = RowGraph.from_matrix(matrix)
        self.adj = self.graph.adj
        self.ov = tuple(
            sum(1 << j for j, y in enumerate(self.R) if j != i and overlap(x, y)) for i, x in enumerate(self.R)
        )
        self._verified: dict[int, bool] = {}

    def accepts(self, rows: Iterable[int]) -> bool:
        mask = 0
        for x in rows:
            mask |= 1 << x
        hit = self._verified.get(mask)
        if hit is None:
            hit = verify_mcs(self.matrix, members(mask))
            self._verified[mask] = hit
        return hit

    def is_size3_mcs(self, i: int, j: int, k: int) -> bool:
        """The size-3 test applied to a triple: pairwise overlapping plus a IV/V pattern."""
        ov, R = self.ov, self.R
        if not (ov[i] >> j & 1 and ov[i] >> k & 1 and ov[j] >> k & 1):
            return False
        return _size3_form(R[i], R[j], R[k]) is not None


def _cert(
    inst: Instance, rows: Iterable[int], form: str, r: int, role: str, cols: Optional[tuple[int, ...]] = None
) -> Optional[MCSCertificate]:
    rows = tuple(sorted(set(rows)))
    if not inst.accepts(rows):
        return None
    return MCSCertificate(rows, form, r, role, cols)


def _bit(x: int) -> int:
    return 1 << x


# ---------------------------------------------------------------------------
# step 1: chordless cycles


def check_form_I(inst: Instance, r: int) -> Optional[MCSCertificate]:
    for cycle in find_induced_cycle_through(inst.graph, r):
        cert = _cert(inst, cycle, "I", r, "cycle_member")
        if cert:
            return cert
    return None


# ---------------------------------------------------------------------------
# step 2: three pairwise overlapping rows


def check_size3(inst: Instance, r: int) -> Optional[MCSCertificate]:
    R, ov = inst.R, inst.ov
    x = R[r]
    for i in members(ov[r]):
        for j in members(ov[r] & ov[i] & ~((_bit(i + 1)) - 1)):
            a, b = R[i], R[j]
            form = _size3_form(x, a, b)
            if form is None:
                continue
            cert = _cert(inst, (r, i, j), form, r, "kernel")
            if cert:
                return cert
    return None


# ---------------------------------------------------------------------------
# steps 3-5: four rows


def check_form_II_size4(inst: Instance, r: int) -> Optional[MCSCertificate]:
    adj, ov = inst.adj, inst.ov
    # r is the kernel over three pairwise disjoint rows
    for i in members(ov[r]):
        for j in members(ov[r] & ~adj[i] & ~(_bit(i + 1) - 1)):
            for k in members(ov[r] & ~adj[i] & ~adj[j] & ~(_bit(j + 1) - 1)):
                cert = _cert(inst, (r, i, j, k), "II", r, "kernel")
                if cert:
                    return cert
    # r is one of the three leaves of kernel i
    for i in members(ov[r]):
        leaves = ov[i] & ~adj[r] & ~_bit(r)
        for j in members(leaves):
            for k in members(leaves & ~adj[j] & ~(_bit(j + 1) - 1)):
                cert = _cert(inst, (i, r, j, k), "II", r, "non_kernel")
                if cert:
                    return cert
    return None


def check_form_III_size4(inst: Instance, r: int) -> Optional[MCSCertificate]:
    R, adj, ov = inst.R, inst.adj, inst.ov
    x = R[r]
    # r is kernel_1 over the path i - j - k
    for i in members(ov[r]):
        for j in members(ov[r] & ~_bit(i)):
            if not (R[i] & R[j] & ~x):
                continue
            for k in members(ov[r] & ~adj[i] & ~_bit(j) & ~(_bit(i + 1) - 1)):
                if x & ~(R[i] & R[j] & R[k]) and R[j] & R[k] & ~x:
                    cert = _cert(inst, (r, i, j, k), "III", r, "kernel_1")
                    if cert:
                        return cert
    # r is an end of the path r - j - k under kernel_1 = i
    for i in members(ov[r]):
        a = R[i]
        for j in members(ov[i] & ~_bit(r)):
            if not (x & R[j] & ~a):
                continue
            for k in members(ov[i] & ~adj[r] & ~_bit(r) & ~_bit(j)):
                if (
                    a & ~(x & R[j] & R[k])
                    and R[j] & R[k] & ~a
                    and not inst.is_size3_mcs(i, j, k)
                ):
                    cert = _cert(inst, (i, r, j, k), "III", r, "non_kernel")
                    if cert:
                        return cert
    # r is kernel_2, the middle of the path j - r - k under kernel_1 = i
    for i in members(ov[r]):
        a = R[i]
        for j in members(ov[i] & ~_bit(r)):
            if not (R[j] & x & ~a):
                continue
            for k in members(ov[i] & ~adj[j] & ~_bit(r) & ~(_bit(j + 1) - 1)):
                if a & ~(x & R[j] & R[k]) and x & R[k] & ~a:
                    cert = _cert(inst, (i, j, r, k), "III", r, "kernel_2")
                    if cert:
                        return cert
    return None


def check_form_IV_size4(inst: Instance, r: int) -> Optional[MCSCertificate]:
    R, adj = inst.R, inst.adj
    x = R[r]
    # r is kernel_1 over the path i - j - k
    for i in members(adj[r]):
        for j in members(adj[r] & adj[i]):
            for k in members(adj[r] & adj[j] & ~adj[i] & ~_bit(i) & ~(_bit(i + 1) - 1)):
                if (
                    x & ~(R[i] & R[j] & R[k])
                    and R[i] & ~(x | R[j])
                    and R[k] & ~(x | R[j])
                ):
                    cert = _cert(inst, (r, i, j, k), "IV", r, "kernel_1")
                    if cert:
                        return cert
    # r is an end of the path r - j - k under kernel_1 = i
    for i in members(adj[r]):
        a = R[i]
        for j in members(adj[i] & adj[r]):
            for k in members(adj[i] & adj[j] & ~adj[r] & ~_bit(r)):
                if (
                    a & ~(x & R[j] & R[k])
                    and x & ~(a | R[j])
                    and R[k] & ~(a | R[j])
                    and not inst.is_size3_mcs(i, j, k)
                ):
                    cert = _cert(inst, (i, r, j, k), "IV", r, "non_kernel")
                    if cert:
                        return cert
    # r is kernel_2, the middle of the path j - r - k under kernel_1 = i
    for i in members(adj[r]):
        a = R[i]
        for j in members(adj[i] & adj[r]):
            for k in members(adj[i] & adj[r] & ~adj[j] & ~_bit(j) & ~(_bit(j + 1) - 1)):
                if a & ~(x & R[j] & R[k]) and R[j] & ~(x | a) and R[k] & ~(x | a):
                    cert = _cert(inst, (i, j, r, k), "IV", r, "kernel_2")
                    if cert:
                        return cert
    return None


# ---------------------------------------------------------------------------
# step 5: form IV with more than four rows


def _minimal_subpath(path: list[int], ok_pair) -> Optional[list[int]]:
    """Shortest contiguous piece of ``path`` whose two ends satisfy ``ok_pair``.

    Ties go to the leftmost piece.  ``ok_pair(u, v)`` is tried both ways.
    """
    n = len(path)
    for length in range(2, n + 1):
        for start in range(n - length + 1):
            u, v = path[start], path[start + length - 1]
            if ok_pair(u, v) or ok_pair(v, u):
                return path[start : start + length]
    return None


def check_form_IV_kernel(inst: Instance, r: int) -> Optional[MCSCertificate]:
    """r is the only kernel; the other rows are a chordless path under r."""
    R, adj, ov, g = inst.R, inst.adj, inst.ov, inst.graph

    def ok(u: int, v: int) -> bool:
        return not adj[u] >> v & 1 and bool(ov[r] >> u & 1) and bool(ov[r] >> v & 1)

    for c in members(R[r]):
        h = g.induced(adj[r] & ~span(inst.matrix, c))
        for comp in h.components():
            cg = h.induced(comp)
            ends = comp & ov[r]
            for i in members(ends):
                for j in members(ends & ~adj[i] & ~(_bit(i + 1) - 1)):
                    path = shortest_induced_path(cg, i, j)
                    if path is None:
                        continue
                    q = _minimal_subpath(path, ok)
                    if q is None:
                        continue
                    cert = _cert(inst, [r] + q, "IV", r, "kernel", (c,))
                    if cert:
                        return cert
    return None


@dataclass
class NonKernelCycle:
    """A cycle through ``r`` in the auxiliary graph, with its artificial edges."""

    kernels: tuple[int, ...]
    column: int
    cycle: list[int]
    artificial: list[tuple[int, int]] = field(default_factory=list)


def _cycle_edges(cycle: list[int]) -> list[tuple[int, int]]:
    return [(cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle))]


def iv_nonkernel_cycles(inst: Instance, r: int) -> Iterator[NonKernelCycle]:
    """Cycles through r in D = C + E_a for every kernel a in N(r) and c in a - r.

    C is the component of r in G[N(a) - L(c)]; E_a joins every disjoint pair
    of rows of C that each leave a.
    """
    R, adj, g = inst.R, inst.adj, inst.graph
    for a in members(adj[r]):
        A = R[a]
        for c in members(A & ~R[r]):
            h = g.induced(adj[a] & ~span(inst.matrix, c))
            comp = h.component_of(r)
            va = [u for u in members(comp) if R[u] & ~A]
            extra = [(u, v) for t, u in enumerate(va) for v in va[t + 1 :] if not R[u] & R[v]]
            d = Graph(g.adj, comp).with_edges(extra)
            for cycle in find_induced_cycle_through(d, r):
                art = [(u, v) for u, v in _cycle_edges(cycle) if not R[u] & R[v]]
                yield NonKernelCycle((a,), c, cycle, art)


def check_form_IV_nonkernel(inst: Instance, r: int) -> Optional[MCSCertificate]:
    for found in iv_nonkernel_cycles(inst, r):
        if len(found.artificial) != 1:
            continue
        cert = _cert(inst, found.kernels + tuple(found.cycle), "IV", r, "non_kernel", (found.column,))
        if cert:
            return cert
    return None


# ---------------------------------------------------------------------------
# step 6: form V


def check_form_V_size4(inst: Instance, r: int) -> Optional[MCSCertificate]:
    R, adj = inst.R, inst.adj
    x = R[r]
    for i in members(adj[r]):
        for j in members(adj[r] & adj[i]):
            for k in members(adj[r] & adj[i] & adj[j]):
                a, b, c = R[i], R[j], R[k]
                if not (x & a & ~(b | c) and b & c & ~(x | a)):
                    continue
                if inst.is_size3_mcs(i, j, k):
                    continue
                # third private pair either avoids r or contains it
                if a & b & ~(x | c):
                    cert = _cert(inst, (r, i, j, k), "V", r, "non_kernel")
                    if cert:
                        return cert
                if x & b & ~(a | c):
                    cert = _cert(inst, (i, r, j, k), "V", r, "kernel")
                    if cert:
                        return cert
    return None


def _private(R, s: list[int], u: int, v: int) -> bool:
    """Some column shared by u and v lies in no other row of ``s``."""
    rest = 0
    for w in s:
        if w != u and w != v:
            rest |= R[w]
    return bool(R[u] & R[v] & ~rest)


def _quads_missing_one_edge(inst: Instance, r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, int]]]:
    """4-sets Q with {r} + Q pairwise intersecting except for one pair."""
    adj = inst.adj
    n_r = adj[r]
    cand = n_r
    for v in members(n_r):
        cand |= adj[v]
    cand &= ~_bit(r)
    cl = members(cand)

    def miss(u: int, v: int) -> int:
        return 0 if adj[u] >> v & 1 else 1

    for t1, i in enumerate(cl):
        m1 = 1 - (n_r >> i & 1)
        for t2 in range(t1 + 1, len(cl)):
            j = cl[t2]
            m2 = m1 + (1 - (n_r >> j & 1)) + miss(i, j)
            if m2 > 1:
                continue
            for t3 in range(t2 + 1, len(cl)):
                k = cl[t3]
                m3 = m2 + (1 - (n_r >> k & 1)) + miss(i, k) + miss(j, k)
                if m3 > 1:
                    continue
                for t4 in range(t3 + 1, len(cl)):
                    l = cl[t4]
                    m4 = m3 + (1 - (n_r >> l & 1)) + miss(i, l) + miss(j, l) + miss(k, l)
                    if m4 != 1:
                        continue
                    s = (r, i, j, k, l)
                    gap = next((u, v) for t, u in enumerate(s) for v in s[t + 1 :] if miss(u, v))
                    yield (i, j, k, l), gap


def check_form_V_size5(inst: Instance, r: int) -> Optional[MCSCertificate]:
    """Five rows intersecting pairwise except one pair (ra, rb).

    Two rows a, b outside the missing pair share a private column, and each
    of a, b shares another private column with one end of the missing pair.
    """
    R, m = inst.R, inst.matrix
    for quad, (ra, rb) in _quads_missing_one_edge(inst, r):
        if not c1p_holds(m, quad):
            continue
        s = [r, *quad]
        inner = [u for u in s if u != ra and u != rb]
        for a, b in permutations(inner, 2):
            if not _private(R, s, a, b):
                continue
            for x, y in ((ra, rb), (rb, ra)):
                if _private(R, s, x, a) and _private(R, s, y, b):
                    role = "non_kernel" if r in (ra, rb) else "kernel"
                    cert = _cert(inst, s, "V", r, role)
                    if cert:
                        return cert
    return None


def check_form_V_kernel(inst: Instance, r: int) -> Optional[MCSCertificate]:
    """r and a second kernel a share a private column c over a chordless path."""
    R, adj, g = inst.R, inst.adj, inst.graph
    x = R[r]
    for a in members(adj[r]):
        A = R[a]

        def ok(u: int, v: int) -> bool:
            return not adj[u] >> v & 1 and bool(R[u] & x & ~A) and bool(R[v] & A & ~x)

        # a path row with a column outside r | a would, with a path end, give
        # a form-IV obstruction under r or under a; such rows are never on
        # the path of a minimal tent, and letting BFS route through them
        # hides valid paths
        inside = sum(1 << u for u in members(adj[r] & adj[a]) if not R[u] & ~(x | A))
        for c in members(x & A):
            h = g.induced(inside & ~span(inst.matrix, c))
            for comp in h.components():
                cg = h.induced(comp)
                starts = [u for u in members(comp) if R[u] & x & ~A]
                ends = [v for v in members(comp) if R[v] & A & ~x]
                for i in starts:
                    for j in ends:
                        if i == j or adj[i] >> j & 1:
                            continue
                        path = shortest_induced_path(cg, i, j)
                        if path is None:
                            continue
                        q = _minimal_subpath(path, ok)
                        if q is None:
                            continue
                        cert = _cert(inst, [r, a] + q, "V", r, "kernel", (c,))
                        if cert:
                            return cert
    return None


@dataclass
class VCycle(NonKernelCycle):
    in_ab: list[tuple[int, int]] = field(default_factory=list)
    in_a_or_b: list[tuple[int, int]] = field(default_factory=list)


def v_nonkernel_cycles(inst: Instance, r: int) -> Iterator[VCycle]:
    """Cycles through r in D = C + E_AB + E_a + E_b for adjacent kernels a, b.

    C is the component of r in G[N(a, b) - L(c)] for c in (a & b) - r.
    """
    R, adj, g = inst.R, inst.adj, inst.graph
    for a in members(adj[r]):
        for b in members(adj[r] & adj[a] & ~(_bit(a + 1) - 1)):
            A, B = R[a], R[b]
            for c in members(A & B & ~R[r]):
                h = g.induced(adj[a] & adj[b] & ~span(inst.matrix, c))
                comp = h.component_of(r)
                vc = members(comp)
                v_big_a = {u for u in vc if R[u] & A & ~B}
                v_big_b = {u for u in vc if R[u] & B & ~A}
                v_a = [u for u in vc if R[u] & ~A]
                v_b = [u for u in vc if R[u] & ~B]

                def disjoint_pairs(vs: list[int]) -> set[tuple[int, int]]:
                    return {(u, v) for t, u in enumerate(vs) for v in vs[t + 1 :] if not R[u] & R[v]}

                e_ab = {
                    (min(u, v), max(u, v)) for u in v_big_a for v in v_big_b if u != v and not R[u] & R[v]
                }
                e_single = disjoint_pairs(v_a) | disjoint_pairs(v_b)
                d = Graph(g.adj, comp).with_edges(e_ab | e_single)
                for cycle in find_induced_cycle_through(d, r):
                    art = [(u, v) for u, v in _cycle_edges(cycle) if not R[u] & R[v]]
                    norm = [(min(u, v), max(u, v)) for u, v in art]
                    yield VCycle(
                        (a, b),
                        c,
                        cycle,
                        art,
                        in_ab=[e for e in norm if e in e_ab],
                        in_a_or_b=[e for e in norm if e in e_single],
                    )


def check_form_V_nonkernel(inst: Instance, r: int) -> Optional[MCSCertificate]:
    for found in v_nonkernel_cycles(inst, r):
        if len(found.artificial) != 1 or found.in_a_or_b or not found.in_ab:
            continue
        cert = _cert(inst, found.kernels + tuple(found.cycle), "V", r, "non_kernel", (found.column,))
        if cert:
            return cert
    return None


# name -> detector, in cascade order
STAGES = (
    ("I", check_form_I),
    ("size3", check_size3),
    ("II_4", check_form_II_size4),
    ("III_4", check_form_III_size4),
    ("IV_4", check_form_IV_size4),
    ("IV_kernel", check_form_IV_kernel),
    ("IV_nonkernel", check_form_IV_nonkernel),
    ("V_4", check_form_V_size4),
    ("V_5", check_form_V_size5),
    ("V_kernel", check_form_V_kernel),
    ("V_nonkernel", check_form_V_nonkernel),
)
