"""Tanner graphs, cycle enumeration with the full rank condition, girth and
small-minor audits."""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .analysis import default_budget
from .field import FieldElement, FieldMatrix


@dataclass(frozen=True)
class TannerGraph:
    n_checks: int
    n_vars: int
    edges: tuple[tuple[int, int, int], ...]  # (check, variable, label encoding)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[list[list[int]], list[list[int]]]:
        """(variables of each check, checks of each variable)."""
        checks: list[list[int]] = [[] for _ in range(self.n_checks)]
        vars_: list[list[int]] = [[] for _ in range(self.n_vars)]
        for c, v, _ in self.edges:
            checks[c].append(v)
            vars_[v].append(c)
        return checks, vars_


def build_tanner(H: FieldMatrix) -> TannerGraph:
    rows, cols = np.nonzero(H.vals)
    edges = tuple((int(r), int(c), int(H.vals[r, c])) for r, c in zip(rows, cols))
    return TannerGraph(H.rows, H.cols, edges)


@dataclass(frozen=True)
class CycleWitness:
    """A ``2*ell``-cycle through ``rows[h] - cols[h] - rows[h+1]``.

    ``A`` keeps only the cycle entries, with rows in traversal order and columns
    ordered ``cols[-1], cols[0], ..., cols[-2]``, so the entries met first in each
    row sit on the diagonal.
    """

    ell: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    A: FieldMatrix
    det: FieldElement
    has_chord: bool

    @property
    def frc(self) -> bool:
        return bool(self.det)

    @property
    def odd_entries(self) -> list[int]:
        """``a_1, a_3, ...`` (diagonal of ``A``)."""
        return [int(self.A.vals[h, h]) for h in range(self.ell)]

    @property
    def even_entries(self) -> list[int]:
        return [int(self.A.vals[h, (h + 1) % self.ell]) for h in range(self.ell)]

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "rows": list(self.rows),
            "cols": list(self.cols),
            "A": self.A.to_text().splitlines(),
            "det": self.A.field.element_str(int(self.det)),
            "frc": self.frc,
            "has_chord": self.has_chord,
        }


def product_formula_det(F, odd: list[int], even: list[int]) -> int:
    """``prod(odd) + prod(even)`` for an odd cycle length, ``-`` for even."""
    po, pe = 1, 1
    for a in odd:
        po = F.mul(po, a)
    for a in even:
        pe = F.mul(pe, a)
    return F.add(po, pe) if len(odd) % 2 else F.sub(po, pe)


def make_witness(H: FieldMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> CycleWitness:
    F = H.field
    ell = len(rows)
    order = (cols[-1],) + cols[:-1]
    A = np.zeros((ell, ell), dtype=np.int64)
    for h, r in enumerate(rows):
        A[h, h] = H.vals[r, order[h]]
        A[h, (h + 1) % ell] = H.vals[r, cols[h]]
    Am = FieldMatrix(F, A)
    det = product_formula_det(F, np.diag(A).tolist(), [int(A[h, (h + 1) % ell]) for h in range(ell)])
    sub_nnz = int(np.count_nonzero(H.vals[np.ix_(rows, cols)]))
    return CycleWitness(ell, tuple(rows), tuple(cols), Am, FieldElement(F, det), sub_nnz > 2 * ell)


def frc_check(cycle: CycleWitness) -> bool:
    """``det A != 0``, after confirming the two-product formula by elimination."""
    direct = cycle.A.det()
    if direct != cycle.det:
        raise AssertionError(f"determinant mismatch on cycle {cycle.rows}/{cycle.cols}")
    return bool(direct)


def natural_cycle_bound(H: FieldMatrix) -> int:
    """No cycle can use more rows than there are rows, or columns of weight >= 2."""
    heavy = int(np.count_nonzero(np.count_nonzero(H.vals, axis=0) >= 2))
    return min(H.rows, heavy)


@dataclass
class CycleEnumeration:
    cycles: list[CycleWitness]
    lmax: int
    budget_exceeded: bool = False

    def by_length(self) -> dict[int, list[CycleWitness]]:
        out: dict[int, list[CycleWitness]] = {}
        for c in self.cycles:
            out.setdefault(c.ell, []).append(c)
        return out

    def violations(self) -> list[CycleWitness]:
        return [c for c in self.cycles if not c.frc]

    def girth(self) -> float:
        if self.budget_exceeded:
            raise RuntimeError("enumeration incomplete; girth unknown")
        return 2 * min(c.ell for c in self.cycles) if self.cycles else math.inf


def enumerate_cycles(
    H: FieldMatrix,
    lmax: int | None = None,
    budget: int | None = None,
    use_extension: bool | None = None,
) -> CycleEnumeration:
    """Every ``2*ell``-cycle with ``2 <= ell <= lmax`` (capped by
    :func:`natural_cycle_bound`), each once, sorted by length then rows."""
    if lmax is not None and lmax < 2:
        raise ValueError("lmax must be at least 2")
    bound = natural_cycle_bound(H)
    lmax = bound if lmax is None else min(lmax, bound)
    budget = default_budget() if budget is None else budget
    if lmax < 2:
        return CycleEnumeration([], lmax)
    raw, over = kernels.cycle_search(H.vals != 0, lmax, budget, use_extension)
    raw.sort(key=lambda rc: (len(rc[0]), rc[0], rc[1]))
    return CycleEnumeration([make_witness(H, r, c) for r, c in raw], lmax, over)


def girth(H: FieldMatrix) -> float:
    """Length of the shortest cycle of the Tanner graph (BFS from every node)."""
    nr, nc = H.shape
    checks, vars_ = build_tanner(H).adjacency()
    # nodes: checks 0..nr-1, variables nr..nr+nc-1
    adj = [[nr + v for v in checks[c]] for c in range(nr)] + [list(vars_[v]) for v in range(nc)]
    best = math.inf
    for s in range(nr + nc):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for x in adj[u]:
                if x not in dist:
                    dist[x] = dist[u] + 1
                    parent[x] = u
                    queue.append(x)
                elif parent[u] != x:
                    best = min(best, dist[u] + dist[x] + 1)
    return best


# ---------------------------------------------------------------------------
# Minor audits


@dataclass
class MinorAudit:
    size: int
    checked: int = 0
    vanishing: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    budget_exceeded: bool = False
    shapes: Counter = field(default_factory=Counter)  # nonzero count -> submatrices checked

    @property
    def clean(self) -> bool:
        return not self.vanishing and not self.budget_exceeded

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "checked": self.checked,
            "vanishing": [{"rows": list(r), "cols": list(c)} for r, c in self.vanishing],
            "budget_exceeded": self.budget_exceeded,
        }


def audit_minors(H: FieldMatrix, size: int, budget: int | None = None, max_witnesses: int = 50) -> MinorAudit:
    """Determinants of all ``size x size`` submatrices whose zero pattern does
    not force a zero determinant.

    For ``size == 2`` these are the submatrices without zeros.  For
    ``size == 3`` every row and column must carry at least two nonzeros, which
    leaves the full pattern and, up to permutations, one zero, two zeros in
    distinct lines, or three zeros on a transversal.
    """
    if size not in (2, 3):
        raise ValueError("size must be 2 or 3")
    budget = default_budget() if budget is None else budget
    P = H.vals != 0
    audit = MinorAudit(size)
    for rows in itertools.combinations(range(H.rows), size):
        counts = P[list(rows)].sum(axis=0)
        cand = np.flatnonzero(counts >= (size if size == 2 else 2)).tolist()
        for cols in itertools.combinations(cand, size):
            sub = P[np.ix_(rows, cols)]
            if size == 3 and (sub.sum(axis=1) < 2).any():
                continue
            audit.checked += 1
            if audit.checked > budget:
                audit.budget_exceeded = True
                return audit
            audit.shapes[int(sub.sum())] += 1
            if not H.submatrix(rows, cols).det():
                if len(audit.vanishing) < max_witnesses:
                    audit.vanishing.append((rows, cols))
    return audit


# ---------------------------------------------------------------------------
# Structure and report


def column_origin(col: int, n: int) -> tuple[int, int]:
    """(base column, block shift) of a window column."""
    return col % n, col // n


def cycle_report(H: FieldMatrix, enum: CycleEnumeration, samples: int = 3) -> dict:
    per = {}
    for ell, cs in sorted(enum.by_length().items()):
        per[str(ell)] = {
            "count": len(cs),
            "frc_violations": sum(1 for c in cs if not c.frc),
            "with_chord": sum(1 for c in cs if c.has_chord),
            "samples": [c.to_dict() for c in cs[:samples]],
        }
    return {
        "rows": H.rows,
        "cols": H.cols,
        "lmax": enum.lmax,
        "budget_exceeded": enum.budget_exceeded,
        "girth": None if enum.budget_exceeded else _girth_str(enum.girth()),
        "max_ell": max((c.ell for c in enum.cycles), default=None),
        "by_length": per,
    }


def _girth_str(g: float):
    return "infinity" if g == math.inf else int(g)
