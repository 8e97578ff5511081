"""Univariate polynomials over a :class:`FiniteField`.

A polynomial is a tuple of element encodings, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from typing import Sequence

from .field import FiniteField

Poly = tuple


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Poly) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(a) - 1


def add(F: FiniteField, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F: FiniteField, a: Poly) -> Poly:
    return tuple(F.neg(c) for c in a)


def sub(F: FiniteField, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def scale(F: FiniteField, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(F.mul(x, c) for x in a)


def mul(F: FiniteField, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F: FiniteField, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = F.mul(r[-1], inv_lead)
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, y))
        r = list(trim(r))
    return trim(q), trim(r)


def exact_div(F: FiniteField, a: Poly, b: Poly) -> Poly:
    q, r = divmod_(F, a, b)
    if r:
        raise ArithmeticError("division leaves a remainder")
    return q


def monic(F: FiniteField, a: Poly) -> Poly:
    if not a:
        return ()
    return scale(F, a, F.inv(a[-1]))


def gcd(F: FiniteField, a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (``()`` when both are zero)."""
    while b:
        a, b = b, divmod_(F, a, b)[1]
    return monic(F, a)


def evaluate(F: FiniteField, a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def det(F: FiniteField, M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by fraction-free elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    if n == 0:
        return (1,)
    m = [[trim(x) for x in row] for row in M]
    sign = False
    prev: Poly = (1,)
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return ()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = not sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                num = sub(F, mul(F, m[c][c], m[i][j]), mul(F, m[i][c], m[c][j]))
                m[i][j] = exact_div(F, num, prev)
            m[i][c] = ()
        prev = m[c][c]
    out = m[n - 1][n - 1]
    return neg(F, out) if sign else out
