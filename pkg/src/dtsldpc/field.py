"""Finite fields GF(p^N) with a canonical primitive element, and small dense
linear algebra over them.

Elements are encoded as integers in ``[0, q)``: the base-``p`` digits of the
integer are the coefficients of the polynomial representative (digit ``i`` is
the coefficient of ``x^i``).  Fields with ``q`` up to the table cap carry
exp/log/Zech tables; larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import isqrt
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

DEFAULT_TABLE_CAP = 1 << 20
MAX_ORDER = 1 << 63


class FieldMismatchError(ValueError):
    """Arithmetic between elements or matrices of different fields."""


# ---------------------------------------------------------------------------
# GF(p)[x] helpers (coefficient lists, low degree first, no trailing zeros)


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _ptrim(a)
    return a


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1."""
    n = len(f) - 1
    x = [0, 1]
    if _psub(_ppowmod(x, p**n, f, p), x, p) != []:
        return False
    for r in factorint(n):
        h = _psub(_ppowmod(x, p ** (n // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _x_is_primitive(f: list[int], p: int, order: int, factors: Iterable[int]) -> bool:
    x = [0, 1]
    for r in factors:
        if _ppowmod(x, order // r, f, p) == [1]:
            return False
    return True


def _matpow_mod(C: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(C.shape[0], dtype=np.int64)
    base = C % p
    while e:
        if e & 1:
            result = result @ base % p
        base = base @ base % p
        e >>= 1
    return result


# ---------------------------------------------------------------------------


class FiniteField:
    """GF(p^N) with modulus chosen deterministically (see :func:`make_field`)."""

    def __init__(self, p: int, N: int, table_cap: int = DEFAULT_TABLE_CAP):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if not isinstance(N, int) or N < 1:
            raise ValueError(f"extension degree must be >= 1, got {N!r}")
        q = p**N
        if q > MAX_ORDER:
            raise ValueError(f"field order {p}^{N} exceeds 2^63")
        self.p = p
        self.N = N
        self.q = q
        self.order = q - 1
        self._qfactors = tuple(factorint(self.order)) if self.order > 1 else ()

        if N == 1:
            g = self._smallest_primitive_root()
            self.modulus: tuple[int, ...] = ((-g) % p, 1)
            self._alpha_value = g
        else:
            self.modulus = self._find_primitive_modulus()
            self._alpha_value = p  # the encoding of x

        self._mod_list = list(self.modulus)
        self.tabled = q <= table_cap
        if self.tabled:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _smallest_primitive_root(self) -> int:
        p = self.p
        if p == 2:
            return 1
        for g in range(2, p):
            if all(pow(g, self.order // r, p) != 1 for r in self._qfactors):
                return g
        raise AssertionError("no primitive root found")  # pragma: no cover

    def _find_primitive_modulus(self) -> tuple[int, ...]:
        p, N = self.p, self.N
        pm1_factors = tuple(factorint(p - 1)) if p > 2 else ()
        # the norm (-1)^N c0 of a primitive x must generate GF(p)*
        for c0 in range(1, p):
            norm = (-1) ** N * c0 % p
            if any(pow(norm, (p - 1) // r, p) == 1 for r in pm1_factors):
                continue
            for rest in itertools.product(range(p), repeat=N - 1):
                f = [c0, *rest, 1]
                if _is_irreducible(f, p) and _x_is_primitive(f, p, self.order, self._qfactors):
                    return tuple(f)
        raise AssertionError("no primitive polynomial found")  # pragma: no cover

    def _build_tables(self) -> None:
        p, N, q, m = self.p, self.N, self.q, self.order
        # multiplication by alpha as a companion matrix acting on digit vectors
        C = np.zeros((N, N), dtype=np.int64)
        if N == 1:
            C[0, 0] = self._alpha_value
        else:
            C[1:, :-1] = np.eye(N - 1, dtype=np.int64)
            C[:, -1] = [(-c) % p for c in self.modulus[:-1]]
        block = min(m, 1024)
        D = np.zeros((N, block), dtype=np.int64)
        v = np.zeros(N, dtype=np.int64)
        v[0] = 1
        for s in range(block):
            D[:, s] = v
            v = C @ v % p
        step = np.eye(N, dtype=np.int64)
        Cb = _matpow_mod(C, block, p)
        weights = p ** np.arange(N, dtype=np.int64)
        chunks = []
        for _ in range(-(-m // block)):
            chunks.append(weights @ (step @ D % p))
            step = step @ Cb % p
        exp = np.concatenate(chunks)[:m].astype(np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(m, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("alpha is not primitive")  # pragma: no cover
        # zech[t] = log(1 + alpha^t), -1 when 1 + alpha^t = 0
        d0 = exp % p
        ones = exp - d0 + (d0 + 1) % p
        zech = np.where(ones == 0, -1, log[ones]).astype(np.int64)
        self.exp_table = exp
        self.log_table = log
        self.zech_table = zech
        self._exp = exp.tolist()
        self._log = log.tolist()
        self._zech = zech.tolist()

    # -- raw polynomial-encoded arithmetic --------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        while a:
            a, d = divmod(a, p)
            out.append(d)
        return out

    def _undigits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _add_poly(self, a: int, b: int) -> int:
        if self.N == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits(a), self._digits(b)
        n = max(len(da), len(db))
        da += [0] * (n - len(da))
        db += [0] * (n - len(db))
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def _mul_poly(self, a: int, b: int) -> int:
        if self.N == 1:
            return a * b % self.p
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.N & 1:
                    a ^= self._undigits(self._mod_list)
            return r
        prod = _pmul(self._digits(a), self._digits(b), self.p)
        return self._undigits(_pmod(prod, self._mod_list, self.p))

    # -- public integer-level arithmetic ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.N == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self.tabled:
            la, lb = self._log[a], self._log[b]
            z = self._zech[(lb - la) % self.order]
            return 0 if z < 0 else self._exp[(la + z) % self.order]
        return self._add_poly(a, b)

    def neg(self, a: int) -> int:
        if not a or self.p == 2:
            return a
        if self.N == 1:
            return self.p - a
        return self._undigits([(-d) % self.p for d in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.N == 1:
            return a * b % self.p
        if self.tabled:
            return self._exp[(self._log[a] + self._log[b]) % self.order]
        return self._mul_poly(a, b)

    def power(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        if self.tabled:
            return self._exp[self._log[a] * e % self.order]
        e %= self.order
        if self.N == 1:
            return pow(a, e, self.p)
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("zero has no inverse")
        if self.tabled:
            return self._exp[(-self._log[a]) % self.order]
        if self.N == 1:
            return pow(a, self.p - 2, self.p)
        return self.power(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def exp(self, e: int) -> int:
        """Encoding of alpha^e; ``e`` may be negative or arbitrarily large."""
        e %= self.order
        if self.tabled:
            return self._exp[e]
        return self.power(self._alpha_value, e)

    def log(self, a: int) -> int:
        """Discrete logarithm base alpha of a nonzero element."""
        if not a:
            raise ValueError("log of zero")
        if self.tabled:
            return self._log[a]
        return self._pohlig_hellman(a)

    def _pohlig_hellman(self, a: int) -> int:
        m = self.order
        residues, moduli = [], []
        for r, k in factorint(m).items():
            rk = r**k
            g = self.power(self._alpha_value, m // rk)
            h = self.power(a, m // rk)
            gamma = self.power(g, rk // r)  # order r
            x = 0
            for i in range(k):
                hi = self.power(self.mul(self.power(g, -x), h), rk // r ** (i + 1))
                x += self._bsgs(gamma, hi, r) * r**i
            residues.append(x)
            moduli.append(rk)
        x, mod = 0, 1
        for res, md in zip(residues, moduli):
            # combine by CRT
            t = ((res - x) * pow(mod, -1, md)) % md
            x += mod * t
            mod *= md
        return x % m

    def _bsgs(self, g: int, h: int, n: int) -> int:
        s = isqrt(n) + 1
        baby = {}
        v = 1
        for j in range(s):
            baby.setdefault(v, j)
            v = self.mul(v, g)
        giant = self.power(g, -s)
        y = h
        for i in range(s + 1):
            if y in baby:
                return (i * s + baby[y]) % n
            y = self.mul(y, giant)
        raise ValueError("discrete log does not exist")  # pragma: no cover

    # -- elements ----------------------------------------------------------------

    def __call__(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of GF({self.q})")
        return FieldElement(self, int(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, self._alpha_value)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    def logs(self, values: np.ndarray) -> np.ndarray:
        """Vectorised discrete logs, -1 marking zero entries."""
        values = np.asarray(values, dtype=np.int64)
        if self.tabled:
            return self.log_table[values]
        out = np.full(values.shape, -1, dtype=np.int64)
        for idx, v in np.ndenumerate(values):
            if v:
                out[idx] = self.log(int(v))
        return out

    def element_str(self, a: int) -> str:
        return "0" if not a else f"a^{self.log(a)}"

    @property
    def key(self) -> tuple:
        return (self.p, self.N, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.N})" if self.N > 1 else f"GF({self.p})"


@lru_cache(maxsize=None)
def make_field(p: int, N: int = 1, table_cap: int = DEFAULT_TABLE_CAP) -> FiniteField:
    """Return GF(p^N).

    For ``N == 1`` alpha is the smallest primitive root mod ``p``.  Otherwise
    the modulus is the lexicographically smallest (by coefficient tuple, low
    degree first) monic irreducible polynomial whose root ``x`` is primitive,
    and alpha is that root.  Results are cached, so equal parameters return
    the same object.
    """
    return FiniteField(p, N, table_cap)


def alpha_pow(field: FiniteField, e: int) -> "FieldElement":
    return FieldElement(field, field.exp(e))


def alpha_pow_tower(field: FiniteField, base: int, height: int, mult: int = 1) -> "FieldElement":
    """alpha^(base^height * mult) without materialising the exponent."""
    return alpha_pow(field, pow(base, height, field.order) * mult)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            # plain integers are read as element encodings
            if not 0 <= other < self.field.q:
                raise ValueError(f"{other} is not an element encoding of {self.field}")
            return int(other)
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def log(self) -> int | None:
        return None if not self.value else self.field.log(self.value)

    def order(self) -> int:
        if not self.value:
            raise ValueError("zero has no multiplicative order")
        m = self.field.order
        for d in sorted(_divisors(m)):
            if self.field.power(self.value, d) == 1:
                return d
        raise AssertionError  # pragma: no cover

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.key, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return self.field.element_str(self.value)


def _divisors(m: int) -> list[int]:
    divs = [1]
    for r, k in factorint(m).items():
        divs = [d * r**i for d in divs for i in range(k + 1)]
    return divs


# ---------------------------------------------------------------------------


class FieldMatrix:
    """Dense matrix over a finite field; entries held as element encodings."""

    __slots__ = ("field", "vals")

    def __init__(self, field: FiniteField, vals):
        arr = np.array(vals, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError("entry outside the field")
        self.field = field
        self.vals = arr

    @classmethod
    def zeros(cls, field: FiniteField, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "FieldMatrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, field: FiniteField, rows: Sequence[Sequence]) -> "FieldMatrix":
        data = [[int(x) for x in row] for row in rows]
        return cls(field, data)

    @classmethod
    def from_logs(cls, field: FiniteField, logs) -> "FieldMatrix":
        """Build from exponents; ``None`` (or a negative number) marks zero."""
        data = [[0 if (e is None or e < 0) else field.exp(e) for e in row] for row in logs]
        return cls(field, data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.vals.shape

    @property
    def rows(self) -> int:
        return self.vals.shape[0]

    @property
    def cols(self) -> int:
        return self.vals.shape[1]

    def __getitem__(self, idx):
        r, c = idx
        if isinstance(r, (int, np.integer)) and isinstance(c, (int, np.integer)):
            return FieldElement(self.field, int(self.vals[r, c]))
        sub = self.vals[r, c]
        if sub.ndim == 1:
            sub = sub.reshape(1, -1) if isinstance(r, (int, np.integer)) else sub.reshape(-1, 1)
        return FieldMatrix(self.field, sub)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "FieldMatrix":
        return FieldMatrix(self.field, self.vals[np.ix_(list(rows), list(cols))])

    def column(self, c: int) -> list[int]:
        return self.vals[:, c].tolist()

    def pattern(self) -> np.ndarray:
        return self.vals != 0

    @property
    def nnz(self) -> int:
        return int(np.count_nonzero(self.vals))

    def logs(self) -> np.ndarray:
        return self.field.logs(self.vals)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.vals.T.copy())

    def _check(self, other: "FieldMatrix") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        out = np.zeros((self.rows, other.cols), dtype=np.int64)
        a, b = self.vals.tolist(), other.vals.tolist()
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    if a[i][t] and b[t][j]:
                        acc = F.add(acc, F.mul(a[i][t], b[t][j]))
                out[i, j] = acc
        return FieldMatrix(F, out)

    def mul_vector(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        for row in self.vals.tolist():
            acc = 0
            for a, x in zip(row, v):
                if a and x:
                    acc = F.add(acc, F.mul(a, x))
            out.append(acc)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.vals.shape == other.vals.shape
            and bool((self.vals == other.vals).all())
        )

    def __hash__(self):  # pragma: no cover - mutable numpy payload
        raise TypeError("FieldMatrix is unhashable")

    def to_text(self) -> str:
        """One row per line, entries ``0`` or ``a^e``."""
        logs = self.logs()
        lines = [" ".join("0" if e < 0 else f"a^{e}" for e in row) for row in logs.tolist()]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"FieldMatrix({self.field}, {self.rows}x{self.cols})\n" + self.to_text()

    # -- linear algebra ----------------------------------------------------------

    def row_reduce(self) -> tuple[list[list[int]], list[int]]:
        """Reduced row echelon form and pivot columns."""
        F = self.field
        m = self.vals.tolist()
        nrows, ncols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = next((i for i in range(r, nrows) if m[i][c]), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = F.inv(m[r][c])
            m[r] = [F.mul(x, inv) for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return m, pivots

    def rank(self) -> int:
        return len(self.row_reduce()[1])

    def det(self) -> FieldElement:
        if self.rows != self.cols:
            raise ValueError(f"determinant of non-square {self.shape} matrix")
        F = self.field
        m = self.vals.tolist()
        n = self.rows
        d = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return FieldElement(F, 0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = F.neg(d)
            d = F.mul(d, m[c][c])
            inv = F.inv(m[c][c])
            for i in range(c + 1, n):
                if m[i][c]:
                    f = F.mul(m[i][c], inv)
                    m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[c])]
        return FieldElement(F, d)

    def nullspace(self) -> list[list[int]]:
        """Basis of the right kernel as lists of encodings."""
        F = self.field
        rref, pivots = self.row_reduce()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(rref[r][fc])
            basis.append(v)
        return basis


def det(M: FieldMatrix) -> FieldElement:
    return M.det()


def rank(M: FieldMatrix) -> int:
    return M.rank()


def in_span(target: Sequence[int], others: Sequence[Sequence[int]], field: FiniteField) -> bool:
    """True iff ``target`` is a linear combination of the vectors in ``others``."""
    target = [int(x) for x in target]
    cols = [[int(x) for x in v] for v in others]
    if any(len(v) != len(target) for v in cols):
        raise ValueError("dimension mismatch")
    if not cols:
        return not any(target)
    base = FieldMatrix(field, np.array(cols, dtype=np.int64).T)
    both = FieldMatrix(field, np.array(cols + [target], dtype=np.int64).T)
    return base.rank() == both.rank()
