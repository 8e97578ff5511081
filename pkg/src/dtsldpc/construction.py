"""Parity-check matrices of LDPC convolutional codes built from difference
triangle sets: the base matrix, its sliding truncations and the polynomial
form ``H(z) = sum_i H_i z^i``."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np
from sympy import isprime

from . import poly
from .dts import DifferenceTriangleSet
from .field import FiniteField, FieldMatrix, make_field

VARIANTS = ("support", "alpha", "alphaP")


def mu(dts: DifferenceTriangleSet, n: int, k: int) -> int:
    """Memory of the code: ``ceil(scope / (n - k)) - 1``."""
    if n <= k:
        raise ValueError("need n > k")
    return -(-dts.scope // (n - k)) - 1


@dataclass(frozen=True)
class CodeDescriptor:
    n: int
    k: int
    field: FiniteField
    dts: DifferenceTriangleSet
    variant: str = "support"
    P: int | None = None
    # support variant: None (all ones), one constant, or k lists of w encodings
    values: int | tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if not (self.n > self.k >= 1):
            raise ValueError(f"n > k required and k >= 1 (got n={self.n}, k={self.k})")
        if self.dts.k != self.k:
            raise ValueError(f"difference triangle set has {self.dts.k} sets, expected k={self.k}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == "alphaP":
            if self.P is None or not isprime(self.P):
                raise ValueError(f"alphaP needs a prime P, got {self.P!r}")
        if self.values is not None:
            if self.variant != "support":
                raise ValueError("explicit values only apply to the support variant")
            if isinstance(self.values, (int, np.integer)):
                v = int(self.values)
                self._check_value(v)
                object.__setattr__(self, "values", v)
            else:
                vals = tuple(tuple(int(x) for x in col) for col in self.values)
                if len(vals) != self.k or any(len(col) != self.dts.w for col in vals):
                    raise ValueError(f"values must be {self.k} lists of {self.dts.w} entries")
                for col in vals:
                    for x in col:
                        self._check_value(x)
                object.__setattr__(self, "values", vals)

    def _check_value(self, v: int) -> None:
        if v == 0:
            raise ValueError("support positions need nonzero values")
        if not 0 < v < self.field.q:
            raise ValueError(f"value {v} is not a field element")

    @property
    def w(self) -> int:
        return self.dts.w

    @property
    def mu(self) -> int:
        return mu(self.dts, self.n, self.k)

    def to_dict(self) -> dict:
        out: dict = {
            "n": self.n,
            "k": self.k,
            "p": self.field.p,
            "N": self.field.N,
            "variant": self.variant,
            "dts": self.dts.to_dict(),
        }
        if self.P is not None:
            out["P"] = self.P
        if self.values is not None:
            out["values"] = self.values if isinstance(self.values, int) else [list(c) for c in self.values]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CodeDescriptor":
        missing = [key for key in ("n", "k", "p", "dts") if key not in data]
        if missing:
            raise ValueError(f"descriptor lacks {', '.join(missing)}")
        F = make_field(int(data["p"]), int(data.get("N", 1)))
        dts = DifferenceTriangleSet.from_dict(data["dts"])
        values = data.get("values")
        if isinstance(values, list):
            values = tuple(tuple(c) for c in values)
        return cls(int(data["n"]), int(data["k"]), F, dts, data.get("variant", "support"), data.get("P"), values)


def random_values(field: FiniteField, dts: DifferenceTriangleSet, seed: int) -> tuple[tuple[int, ...], ...]:
    """Seeded nonzero values for every support position."""
    rng = np.random.default_rng(seed)
    return tuple(tuple(int(x) for x in rng.integers(1, field.q, size=dts.w)) for _ in range(dts.k))


@dataclass(frozen=True)
class BaseMatrix:
    """The ``(mu+1)(n-k) x n`` matrix whose block rows are ``H_0, ..., H_mu``."""

    descriptor: CodeDescriptor
    matrix: FieldMatrix
    supports: tuple[tuple[int, ...], ...] = dc_field(default=())

    @property
    def field(self) -> FiniteField:
        return self.matrix.field

    @property
    def n(self) -> int:
        return self.descriptor.n

    @property
    def k(self) -> int:
        return self.descriptor.k

    @property
    def nk(self) -> int:
        return self.descriptor.n - self.descriptor.k

    @property
    def mu(self) -> int:
        return self.descriptor.mu

    @property
    def w(self) -> int:
        return self.descriptor.w

    def block(self, i: int) -> FieldMatrix:
        """``H_i``; zero for ``i`` outside ``[0, mu]``."""
        if not 0 <= i <= self.mu:
            return FieldMatrix.zeros(self.field, self.nk, self.n)
        return FieldMatrix(self.field, self.matrix.vals[i * self.nk : (i + 1) * self.nk].copy())


def build_base(desc: CodeDescriptor) -> BaseMatrix:
    F = desc.field
    n, k, nk, m = desc.n, desc.k, desc.n - desc.k, desc.mu
    vals = np.zeros(((m + 1) * nk, n), dtype=np.int64)
    for l, T in enumerate(desc.dts.sets, start=1):
        for idx, i in enumerate(T):
            if desc.variant == "alpha":
                v = F.exp(i * l)
            elif desc.variant == "alphaP":
                v = F.exp(pow(desc.P, i, F.order) * l) if F.order > 1 else 1
            elif desc.values is None:
                v = 1
            elif isinstance(desc.values, int):
                v = desc.values
            else:
                v = desc.values[l - 1][idx]
            vals[i - 1, l - 1] = v
    for r in range(nk):
        vals[r, k + r] = 1
    return BaseMatrix(desc, FieldMatrix(F, vals), desc.dts.sets)


@dataclass(frozen=True)
class SlidingMatrix:
    base: BaseMatrix
    matrix: FieldMatrix
    j: int
    block_cols: int
    block_rows: int

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def nk(self) -> int:
        return self.base.nk

    def column_block(self, col: int) -> int:
        return col // self.base.n


def _stack(base: BaseMatrix, block_rows: int, block_cols: int) -> np.ndarray:
    nk, n, m = base.nk, base.n, base.mu
    out = np.zeros((block_rows * nk, block_cols * n), dtype=np.int64)
    blocks = [base.block(i).vals for i in range(m + 1)]
    for c in range(block_cols):
        for i in range(m + 1):
            r = c + i
            if r >= block_rows:
                break
            out[r * nk : (r + 1) * nk, c * n : (c + 1) * n] = blocks[i]
    return out


def sliding(base: BaseMatrix, j: int) -> SlidingMatrix:
    """``H_j^c``: ``j+1`` block rows and columns, block ``(r, c) = H_{r-c}``."""
    if j < 0:
        raise ValueError("j must be non-negative")
    vals = _stack(base, j + 1, j + 1)
    return SlidingMatrix(base, FieldMatrix(base.field, vals), j, j + 1, j + 1)


def window(base: BaseMatrix) -> SlidingMatrix:
    """The finite window ``H_mu^c`` used for cycle and minor questions."""
    return sliding(base, base.mu)


def full_sliding(base: BaseMatrix, length: int) -> SlidingMatrix:
    """Parity-check matrix for codewords of ``length`` symbols (a multiple of n):
    ``length/n`` block columns and ``length/n + mu`` block rows."""
    if length <= 0 or length % base.n:
        raise ValueError(f"codeword length {length} is not a positive multiple of n={base.n}")
    cols = length // base.n
    rows = cols + base.mu
    vals = _stack(base, rows, cols)
    return SlidingMatrix(base, FieldMatrix(base.field, vals), cols - 1, cols, rows)


@dataclass(frozen=True)
class PolynomialMatrix:
    """``H(z) = H_0 + H_1 z + ... + H_mu z^mu``."""

    field: FiniteField
    coeffs: tuple[FieldMatrix, ...]

    @property
    def rows(self) -> int:
        return self.coeffs[0].rows

    @property
    def cols(self) -> int:
        return self.coeffs[0].cols

    @property
    def mu(self) -> int:
        return len(self.coeffs) - 1

    def entry(self, r: int, c: int) -> poly.Poly:
        return poly.trim([int(C.vals[r, c]) for C in self.coeffs])

    def entries(self) -> list[list[poly.Poly]]:
        return [[self.entry(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def stack(self, j: int) -> FieldMatrix:
        """Rebuild the truncated sliding matrix with ``j+1`` block rows/columns."""
        nk, n = self.rows, self.cols
        out = np.zeros(((j + 1) * nk, (j + 1) * n), dtype=np.int64)
        for c in range(j + 1):
            for i, C in enumerate(self.coeffs):
                r = c + i
                if r > j:
                    break
                out[r * nk : (r + 1) * nk, c * n : (c + 1) * n] = C.vals
        return FieldMatrix(self.field, out)

    @classmethod
    def from_entries(cls, field: FiniteField, entries: Sequence[Sequence[Sequence[int]]]) -> "PolynomialMatrix":
        """From a nested list of coefficient lists (low degree first)."""
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        deg = max((len(poly.trim(e)) for row in entries for e in row), default=1)
        deg = max(deg, 1)
        coeffs = []
        for d in range(deg):
            vals = [[(e[d] if d < len(e) else 0) for e in row] for row in entries]
            coeffs.append(FieldMatrix(field, np.array(vals, dtype=np.int64).reshape(rows, cols)))
        return cls(field, tuple(coeffs))


def to_polynomial(base: BaseMatrix) -> PolynomialMatrix:
    return PolynomialMatrix(base.field, tuple(base.block(i) for i in range(base.mu + 1)))
