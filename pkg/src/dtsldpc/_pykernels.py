"""Pure-Python search kernels.

Both kernels take a sparse description of a matrix (per-column and per-row
index lists).  The dependency search works on element encodings with a
:class:`FiniteField`, so it also covers fields without log tables.
"""

from __future__ import annotations

from typing import Sequence

from .field import FiniteField

IMPLEMENTATION = "python"


def _in_span_last(F: FiniteField, vals, cols: Sequence[int], rows: Sequence[int]) -> bool:
    """Is the first of ``cols`` a combination of the others (restricted to ``rows``)?"""
    order = list(cols[1:]) + [cols[0]]
    m = [[vals[r][c] for c in order] for r in rows]
    used = [False] * len(rows)
    last = len(order) - 1
    for j in range(last):
        piv = next((i for i in range(len(rows)) if not used[i] and m[i][j]), None)
        if piv is None:
            continue
        used[piv] = True
        inv = F.inv(m[piv][j])
        for i in range(len(rows)):
            if i != piv and not used[i] and m[i][j]:
                f = F.mul(m[i][j], inv)
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[piv])]
    return all(m[i][last] == 0 for i in range(len(rows)) if not used[i])


def circuit_search(
    F: FiniteField,
    vals,
    col_rows: Sequence[Sequence[int]],
    row_cols: Sequence[Sequence[int]],
    n_first: int,
    dmax: int,
    budget: int,
) -> tuple[list[int] | None, int, bool]:
    """Find a column set ``X`` of size at most ``dmax`` containing some column
    ``c < n_first`` with ``c`` in the span of ``X \\ {c}``.

    Returns ``(X or None, nodes visited, budget exceeded)``.  ``vals`` is a
    nested list of encodings.
    """
    nrows = len(row_cols)
    maxw = max((len(r) for r in col_rows), default=0)
    cover = [0] * nrows
    chosen: list[int] = []
    in_set = [False] * len(col_rows)
    nodes = 0

    def add(c: int) -> None:
        chosen.append(c)
        in_set[c] = True
        for r in col_rows[c]:
            cover[r] += 1

    def remove() -> None:
        c = chosen.pop()
        in_set[c] = False
        for r in col_rows[c]:
            cover[r] -= 1

    c0 = 0

    # sets holding a smaller first-block column were covered by earlier starts
    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return False
        touched = sorted({r for c in chosen for r in col_rows[c]})
        single = [r for r in touched if cover[r] == 1]
        if not single:
            if _in_span_last(F, vals, chosen, touched):
                return True
        slots = dmax - len(chosen)
        if slots <= 0 or len(single) > slots * maxw:
            return False
        if single:
            branch = [c for c in row_cols[single[0]] if not in_set[c] and c > c0]
        else:
            seen = set()
            branch = []
            for r in touched:
                for c in row_cols[r]:
                    if not in_set[c] and c > c0 and c not in seen:
                        seen.add(c)
                        branch.append(c)
            branch.sort()
        for c in branch:
            add(c)
            if rec():
                return True
            remove()
            if nodes > budget:
                return False
        return False

    for start in range(n_first):
        c0 = start
        if not col_rows[c0]:
            # a zero column is a dependency on its own
            return [c0], nodes + 1, False
        add(c0)
        found = rec()
        if found:
            return list(chosen), nodes, False
        remove()
        if nodes > budget:
            return None, nodes, True
    return None, nodes, False


def cycle_search(
    col_rows: Sequence[Sequence[int]],
    row_cols: Sequence[Sequence[int]],
    lmax: int,
    budget: int,
) -> tuple[list[tuple[tuple[int, ...], tuple[int, ...]]], bool]:
    """All cycles through at most ``lmax`` rows, each once.

    A cycle is ``(rows, cols)`` with ``rows[0]`` the smallest row, ``cols[h]``
    joining ``rows[h]`` and ``rows[h+1]`` (cyclically) and ``cols[-1] > cols[0]``.
    """
    nrows = len(row_cols)
    member = [set(rs) for rs in col_rows]
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    rows: list[int] = []
    cols: list[int] = []
    used_r = [False] * nrows
    used_c = [False] * len(col_rows)
    steps = 0

    def rec(r0: int) -> bool:
        nonlocal steps
        r = rows[-1]
        for c in row_cols[r]:
            if used_c[c]:
                continue
            steps += 1
            if steps > budget:
                return False
            cols.append(c)
            used_c[c] = True
            if len(rows) >= 2 and c > cols[0] and r0 in member[c]:
                out.append((tuple(rows), tuple(cols)))
            if len(rows) < lmax:
                for r2 in col_rows[c]:
                    if r2 > r0 and not used_r[r2]:
                        rows.append(r2)
                        used_r[r2] = True
                        ok = rec(r0)
                        used_r[r2] = False
                        rows.pop()
                        if not ok:
                            return False
            used_c[c] = False
            cols.pop()
        return True

    for r0 in range(nrows):
        rows.append(r0)
        used_r[r0] = True
        ok = rec(r0)
        used_r[r0] = False
        rows.pop()
        if not ok:
            return out, True
    return out, False
