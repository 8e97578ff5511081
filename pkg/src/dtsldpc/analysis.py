"""Parameters of constructed convolutional codes: degree, reducedness,
basicness, density, column distances and free distance."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels, poly
from .construction import BaseMatrix, PolynomialMatrix, full_sliding, sliding, to_polynomial, window
from .field import FieldMatrix, in_span

DEFAULT_BUDGET = 10_000_000


def default_budget() -> int:
    """Node budget for exhaustive searches (``DTSLDPC_BUDGET`` overrides)."""
    env = os.environ.get("DTSLDPC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran out of its node budget."""


# ---------------------------------------------------------------------------
# Polynomial matrix properties


def maximal_minors(Hz: PolynomialMatrix) -> dict[tuple[int, ...], poly.Poly]:
    F = Hz.field
    entries = Hz.entries()
    out = {}
    for cols in itertools.combinations(range(Hz.cols), Hz.rows):
        M = [[entries[r][c] for c in cols] for r in range(Hz.rows)]
        out[cols] = poly.det(F, M)
    return out


def degree(Hz: PolynomialMatrix) -> int:
    """Largest degree among the full-size minors."""
    if Hz.rows > Hz.cols:
        raise ValueError("more rows than columns")
    degs = [poly.degree(m) for m in maximal_minors(Hz).values() if m]
    if not degs:
        raise ValueError("matrix is not of full row rank")
    return max(degs)


def row_degrees(Hz: PolynomialMatrix) -> list[int]:
    entries = Hz.entries()
    return [max(poly.degree(e) for e in row) for row in entries]


def highest_row_coefficient(Hz: PolynomialMatrix) -> FieldMatrix:
    """Row ``r`` holds the coefficients of ``z^{deg_r}`` (zero row for a zero row)."""
    degs = row_degrees(Hz)
    vals = np.zeros((Hz.rows, Hz.cols), dtype=np.int64)
    for r, d in enumerate(degs):
        if d >= 0:
            vals[r] = Hz.coeffs[d].vals[r]
    return FieldMatrix(Hz.field, vals)


def is_reduced(Hz: PolynomialMatrix) -> bool:
    return highest_row_coefficient(Hz).rank() == Hz.rows


def is_basic(Hz: PolynomialMatrix) -> bool:
    """The gcd of the full-size minors is a nonzero constant."""
    if Hz.rows > Hz.cols:
        return False
    g: poly.Poly = ()
    for m in maximal_minors(Hz).values():
        g = poly.gcd(Hz.field, g, m)
        if g == (1,):
            return True
    return g == (1,)


# ---------------------------------------------------------------------------
# Density


def density(n: int, k: int, w: int, mu: int, N: int) -> Fraction:
    """Nonzero fraction of the sliding matrix for codewords of at most ``N`` symbols."""
    if n <= k:
        raise ValueError("need n > k")
    if N <= 0 or N % n:
        raise ValueError(f"N={N} is not a positive multiple of n={n}")
    return Fraction(w * k + n - k, (n - k) * (mu * n + N))


def density_by_count(base: BaseMatrix, N: int) -> Fraction:
    M = full_sliding(base, N).matrix
    return Fraction(M.nnz, M.rows * M.cols)


# ---------------------------------------------------------------------------
# Distances


@dataclass
class DistanceCertificate:
    witness: list[int] | None = None  # codeword coefficients, block after block
    weight: int | None = None
    exhausted_below: int = 0  # no kernel vector with v_0 != 0 has weight < this
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "witness": self.witness,
            "weight": self.weight,
            "exhausted_below": self.exhausted_below,
            "nodes": self.nodes,
        }


@dataclass
class ColumnDistance:
    j: int
    value: int | None
    status: str  # "exact" or "budget-exceeded"
    certificate: DistanceCertificate


def _kernel_vector(H: FieldMatrix, support: list[int]) -> list[int]:
    """Kernel vector of ``H`` supported on ``support`` with coefficient 1 at
    ``support[0]``, which must lie in the span of the rest."""
    order = support[1:] + support[:1]
    sub = H.submatrix(range(H.rows), order)
    for v in sub.nullspace():
        if v[-1] == 1:
            break
    else:  # pragma: no cover - guarded by the search
        raise AssertionError("support does not carry a dependency")
    full = [0] * H.cols
    for c, x in zip(order, v):
        full[c] = x
    return full


def _first_block_columns(base: BaseMatrix) -> int:
    # H_0 = [A_0 | I]: a kernel vector vanishing on the information part of
    # block 0 also vanishes on its parity part, so the k leading columns suffice
    return base.k


def column_distance(
    base: BaseMatrix,
    j: int,
    start: int = 1,
    budget: int | None = None,
    use_extension: bool | None = None,
) -> ColumnDistance:
    """``d_j^c``: minimum weight of a kernel vector of ``H_j^c`` with ``v_0 != 0``.

    ``start`` is a known lower bound (e.g. ``d_{j-1}^c``).  Exceeding the node
    budget yields status ``budget-exceeded`` with the radius exhausted so far.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    budget = default_budget() if budget is None else budget
    H = sliding(base, j).matrix
    n_first = _first_block_columns(base)
    total = 0
    d = max(start, 1)
    while d <= H.cols:
        found, nodes, over = kernels.circuit_search(H, n_first, d, budget - total, use_extension)
        total += nodes
        if over:
            return ColumnDistance(j, None, "budget-exceeded", DistanceCertificate(exhausted_below=d, nodes=total))
        if found is not None:
            v = _kernel_vector(H, found)
            weight = sum(1 for x in v if x)
            if weight != d or any(H.mul_vector(v)):  # pragma: no cover - self check
                raise AssertionError("inconsistent dependency search result")
            return ColumnDistance(j, d, "exact", DistanceCertificate(v, weight, d, total))
        d += 1
    raise AssertionError("no dependency among all columns")  # pragma: no cover


@dataclass
class FreeDistance:
    value: int | None
    status: str  # "exact", "lower-bounded" or "budget-exceeded"
    lower: int
    upper: int
    column_distances: list[ColumnDistance] = field(default_factory=list)
    certificate: DistanceCertificate | None = None

    @property
    def profile(self) -> list[int | None]:
        return [cd.value for cd in self.column_distances]


def column_codeword(base: BaseMatrix, l: int) -> list[int]:
    """Codeword with information ``e_l`` at time 0 and parity ``-column l``."""
    F = base.field
    n, nk, mu = base.n, base.nk, base.mu
    v = [0] * ((mu + 1) * n)
    v[l] = 1
    for i in range(mu + 1):
        for r in range(nk):
            h = int(base.matrix.vals[i * nk + r, l])
            v[i * n + base.k + r] = F.neg(h)
    return v


def is_codeword(base: BaseMatrix, v: list[int]) -> bool:
    """``v`` (whole blocks, zero afterwards) is annihilated by the sliding matrix."""
    n = base.n
    if len(v) % n:
        raise ValueError("codeword length must be a multiple of n")
    M = full_sliding(base, len(v)).matrix
    return not any(M.mul_vector(v))


def free_distance(
    base: BaseMatrix,
    horizon: int | None = None,
    budget: int | None = None,
    use_extension: bool | None = None,
) -> FreeDistance:
    """Column distances until they meet an upper bound from an explicit codeword.

    Stops as soon as ``d_j^c`` equals the weight of a known codeword (exact),
    otherwise after ``horizon`` (default ``3(mu+1)``) with status
    ``lower-bounded`` and the last column distance as value.
    """
    budget = default_budget() if budget is None else budget
    horizon = 3 * (base.mu + 1) if horizon is None else horizon
    weights = [int(np.count_nonzero(base.matrix.vals[:, l])) for l in range(base.k)]
    lbest = int(np.argmin(weights))
    upper_word = column_codeword(base, lbest)
    upper = weights[lbest] + 1

    result = FreeDistance(None, "lower-bounded", 0, upper)
    used = 0
    prev = 1
    for j in range(horizon + 1):
        cd = column_distance(base, j, start=prev, budget=budget - used, use_extension=use_extension)
        used += cd.certificate.nodes
        result.column_distances.append(cd)
        if cd.status != "exact":
            result.status = "budget-exceeded"
            result.value = None
            return result
        prev = cd.value
        result.lower = cd.value
        if cd.value >= upper:
            result.value, result.status = upper, "exact"
            result.certificate = DistanceCertificate(upper_word, upper, cd.value, used)
            return result
        if is_codeword(base, cd.certificate.witness):
            # the truncated witness already is a terminated codeword
            result.value, result.status, result.upper = cd.value, "exact", cd.value
            result.certificate = DistanceCertificate(cd.certificate.witness, cd.value, cd.value, used)
            return result
    result.value = result.lower
    result.certificate = DistanceCertificate(upper_word, upper, result.lower, used)
    return result


def truncated_column_weight(base: BaseMatrix, j: int) -> int:
    """Smallest weight among the non-systematic columns of ``A_0, ..., A_j`` stacked."""
    rows = min((j + 1) * base.nk, base.matrix.rows)
    return int(np.count_nonzero(base.matrix.vals[:rows, : base.k], axis=0).min())


# ---------------------------------------------------------------------------
# Span hypothesis behind the distance sandwich


@dataclass
class SpanCheck:
    holds: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None  # (I, J), 0-based
    checked: int = 0


def leading_column_span_condition(base: BaseMatrix, w_tilde: int, budget: int | None = None) -> SpanCheck:
    """Check that no leading column ``j1 < k`` of the window, restricted to its
    own support ``I``, lies in the span of at most ``w_tilde - 1`` later columns
    (also restricted to ``I``).

    When this holds, every kernel vector with ``v_0 != 0`` has weight above
    ``w_tilde``; a violation comes with its ``(I, J)`` witness.
    """
    if w_tilde < 1 or w_tilde > base.w:
        raise ValueError(f"w_tilde must lie in [1, {base.w}]")
    budget = default_budget() if budget is None else budget
    H = window(base).matrix
    F = H.field
    vals = H.vals
    checked = 0
    for j1 in range(base.k):
        I = tuple(int(r) for r in np.flatnonzero(vals[:, j1]))
        target = vals[list(I), j1].tolist()
        others = [c for c in range(j1 + 1, H.cols) if np.any(vals[list(I), c])]
        for size in range(1, w_tilde):
            for J in itertools.combinations(others, size):
                checked += 1
                if checked > budget:
                    raise BudgetExceeded(f"span check exceeded {budget} subsets")
                if in_span(target, [vals[list(I), c].tolist() for c in J], F):
                    return SpanCheck(False, (I, (j1,) + J), checked)
    return SpanCheck(True, None, checked)


# ---------------------------------------------------------------------------
# Report


@dataclass
class CodeParameters:
    n: int
    k: int
    mu: int
    delta: int
    reduced: bool
    basic: bool
    free: FreeDistance
    density: Fraction | None = None
    density_length: int | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "mu": self.mu,
            "delta": self.delta,
            "reduced": self.reduced,
            "basic": self.basic,
            "column_distances": [
                {
                    "j": cd.j,
                    "value": cd.value,
                    "status": cd.status,
                    "certificate": cd.certificate.to_dict(),
                }
                for cd in self.free.column_distances
            ],
            "free_distance": {
                "value": self.free.value,
                "status": self.free.status,
                "lower": self.free.lower,
                "upper": self.free.upper,
                "certificate": self.free.certificate.to_dict() if self.free.certificate else None,
            },
            "density": None
            if self.density is None
            else {"N": self.density_length, "value": f"{self.density.numerator}/{self.density.denominator}"},
        }


def analyze(
    base: BaseMatrix,
    N: int | None = None,
    horizon: int | None = None,
    budget: int | None = None,
) -> CodeParameters:
    Hz = to_polynomial(base)
    free = free_distance(base, horizon=horizon, budget=budget)
    N = N if N is not None else (base.mu + 1) * base.n
    dens = density(base.n, base.k, base.w, base.mu, N)
    return CodeParameters(
        base.n, base.k, base.mu, degree(Hz), is_reduced(Hz), is_basic(Hz), free, dens, N
    )
