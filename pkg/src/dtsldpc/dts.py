"""(Weak) difference triangle sets: validation, search and the combinatorial
side conditions used for cycle freedom."""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

MODES = ("weak", "strict", "relaxed")


@dataclass(frozen=True)
class DifferenceTriangleSet:
    sets: tuple[tuple[int, ...], ...]
    mode: str = "weak"
    d: int | None = None

    def __post_init__(self):
        sets = tuple(tuple(int(a) for a in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if not sets:
            raise ValueError("a difference triangle set needs at least one set")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "relaxed" and (self.d is None or self.d < 1):
            raise ValueError("relaxed mode needs a positive modulus d")
        for i, s in enumerate(sets):
            if not s:
                raise ValueError(f"set {i + 1} is empty")
            if any(a < 1 for a in s):
                raise ValueError(f"set {i + 1} has non-positive entries: {s}")
            if any(b <= a for a, b in zip(s, s[1:])):
                raise ValueError(f"set {i + 1} is not strictly increasing: {s}")
        if len({len(s) for s in sets}) != 1:
            raise ValueError("all sets must have the same size")

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def w(self) -> int:
        return len(self.sets[0])

    @property
    def scope(self) -> int:
        return max(s[-1] for s in self.sets)

    def differences(self, i: int) -> list[tuple[int, int, int]]:
        """(difference, larger, smaller) for all pairs inside set ``i`` (0-based)."""
        s = self.sets[i]
        return [(s[j] - s[m], s[j], s[m]) for j in range(len(s)) for m in range(j)]

    def to_dict(self) -> dict:
        out: dict = {"sets": [list(s) for s in self.sets], "mode": self.mode}
        if self.d is not None:
            out["d"] = self.d
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DifferenceTriangleSet":
        return cls(tuple(tuple(s) for s in data["sets"]), data.get("mode", "weak"), data.get("d"))


@dataclass(frozen=True)
class Violation:
    sets: tuple[int, int]  # 1-based set indices
    pairs: tuple[tuple[int, int], tuple[int, int]]  # colliding (larger, smaller) pairs
    clause: str  # "within", "cross" or "within-divisible"


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    d: int | None
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def validate(dts: DifferenceTriangleSet, mode: str | None = None, d: int | None = None) -> ValidationReport:
    """Check the difference condition of ``mode`` (defaults to the set's own).

    ``relaxed`` needs a modulus ``d``: differences from different sets must be
    distinct, and equal differences ``a_j1 - a_s1 = a_j2 - a_s2`` inside one
    set only collide when ``d`` divides ``a_j1 - a_j2``.
    """
    mode = mode or dts.mode
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "relaxed":
        d = d if d is not None else dts.d
        if d is None or d < 1:
            raise ValueError("relaxed mode needs a positive modulus d")

    by_value: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for i in range(dts.k):
        for diff, hi, lo in dts.differences(i):
            by_value[diff].append((i, hi, lo))

    violations = []
    for diff in sorted(by_value):
        entries = by_value[diff]
        for (i1, h1, l1), (i2, h2, l2) in itertools.combinations(entries, 2):
            pair = ((h1, l1), (h2, l2))
            if i1 == i2:
                if mode in ("weak", "strict"):
                    violations.append(Violation((i1 + 1, i2 + 1), pair, "within"))
                elif (h1 - h2) % d == 0:
                    violations.append(Violation((i1 + 1, i2 + 1), pair, "within-divisible"))
            elif mode in ("strict", "relaxed"):
                violations.append(Violation((i1 + 1, i2 + 1), pair, "cross"))
    return ValidationReport(mode, d if mode == "relaxed" else None, tuple(violations))


def within_set_valid(dts: DifferenceTriangleSet, d: int | None = None) -> bool:
    """Each set on its own meets the weak condition, or with a modulus ``d`` the
    relaxed within-set rule; repeats across sets are ignored."""
    if d is None:
        return validate(dts, "weak").valid
    return not any(v.clause != "cross" for v in validate(dts, "relaxed", d).violations)


def scope(dts: DifferenceTriangleSet) -> int:
    return dts.scope


def triangles(dts: DifferenceTriangleSet) -> list[list[tuple[int, ...]]]:
    """Row ``r`` (1-based) of triangle ``i`` holds ``a_{i,j+r} - a_{i,j}``."""
    out = []
    for s in dts.sets:
        out.append([tuple(s[j + r] - s[j] for j in range(len(s) - r)) for r in range(1, len(s))])
    return out


def search_min_scope(
    k: int, w: int, mode: str = "weak", scope_cap: int = 30, d: int | None = None
) -> DifferenceTriangleSet | None:
    """Exhaustive backtracking for a minimum-scope set collection.

    Among all collections of minimum scope (at most ``scope_cap``) returns the
    lexicographically smallest tuple of sets, or ``None``.
    """
    if k < 1 or w < 1:
        raise ValueError("k and w must be positive")
    if mode == "relaxed" and (d is None or d < 1):
        raise ValueError("relaxed mode needs a positive modulus d")

    def within_ok(s: tuple[int, ...]) -> bool:
        seen: dict[int, tuple[int, int]] = {}
        for j in range(len(s)):
            for m in range(j):
                diff = s[j] - s[m]
                if diff in seen:
                    if mode != "relaxed" or (s[j] - seen[diff][0]) % d == 0:
                        return False
                else:
                    seen[diff] = (s[j], s[m])
        return True

    for top in range(w, scope_cap + 1):
        candidates = [c for c in itertools.combinations(range(1, top + 1), w) if within_ok(c)]
        diff_sets = [frozenset(c[j] - c[m] for j in range(w) for m in range(j)) for c in candidates]
        cross = mode in ("strict", "relaxed")
        chosen: list[int] = []

        def rec(start: int, used: frozenset) -> list[int] | None:
            if len(chosen) == k:
                if any(candidates[i][-1] == top for i in chosen):
                    return list(chosen)
                return None
            for idx in range(start, len(candidates)):
                if cross and diff_sets[idx] & used:
                    continue
                # the last set must reach the scope if nothing else has
                if len(chosen) == k - 1 and candidates[idx][-1] != top and not any(
                    candidates[i][-1] == top for i in chosen
                ):
                    continue
                chosen.append(idx)
                got = rec(idx if not cross or w == 1 else idx + 1, used | diff_sets[idx])
                if got:
                    return got
                chosen.pop()
            return None

        found = rec(0, frozenset())
        if found is not None:
            return DifferenceTriangleSet(tuple(candidates[i] for i in found), mode, d if mode == "relaxed" else None)
    return None


def no_difference_divisible(dts: DifferenceTriangleSet, d: int) -> bool:
    """True iff no difference inside any single set is a multiple of ``d``."""
    if d <= 0:
        raise ValueError("d must be positive")
    return all(diff % d for i in range(dts.k) for diff, _, _ in dts.differences(i))


def cyclefree_conditions(dts: DifferenceTriangleSet, n: int, k: int) -> bool:
    """Every set starts at 1 and ``n - k`` divides no nonzero difference
    between any two entries (across sets included)."""
    if dts.k != k:
        raise ValueError(f"expected {k} sets, got {dts.k}")
    if not validate(dts, "strict"):
        raise ValueError("cycle-freedom conditions apply to strict difference triangle sets")
    if any(s[0] != 1 for s in dts.sets):
        return False
    values = sorted({a for s in dts.sets for a in s})
    d = n - k
    return all((b - a) % d for a, b in itertools.combinations(values, 2))


# ---------------------------------------------------------------------------
# Even-length cycle exponent condition


@dataclass(frozen=True)
class FConfig:
    """One labelled traversal of a cycle: base columns ``s``, row steps ``i``."""

    s: tuple[int, ...]
    i: tuple[int, ...]
    f: int
    rows: tuple[int, ...] = ()  # window rows R_1..R_l, empty for the literal form
    shifts: tuple[int, ...] = ()


@dataclass
class FReport:
    ell: int
    realizable: bool
    configurations: int = 0
    witnesses: list[FConfig] = field(default_factory=list)
    truncated: bool = False

    @property
    def nonzero(self) -> bool:
        return not self.witnesses and not self.truncated


def f_value(i: Sequence[int], s: Sequence[int]) -> int:
    return sum(ih * (s[h + 1] - s[0]) for h, ih in enumerate(i))


def _mu(dts: DifferenceTriangleSet, n: int, k: int) -> int:
    return -(-dts.scope // (n - k)) - 1


def iter_cycle_configurations(dts: DifferenceTriangleSet, n: int, k: int, ell: int) -> Iterator[FConfig]:
    """All labelled ``2*ell``-cycles among the non-systematic columns of the
    finite sliding window, expressed through base columns and row steps.

    Each cycle appears ``2*ell`` times (choice of first row and direction).
    """
    d = n - k
    mu = _mu(dts, n, k)
    W = (mu + 1) * d
    sets = [set(s) for s in dts.sets]
    ordered = dts.sets

    rows: list[int] = []
    cols: list[tuple[int, int]] = []
    svals: list[int] = []

    def extend(h: int) -> Iterator[FConfig]:
        prev = rows[-1]
        if h == ell:
            s1, c1 = cols[0]
            lower = prev - c1 * d
            if lower in sets[s1 - 1] and lower != rows[0] - c1 * d:
                steps = tuple(b - a for a, b in zip(rows, rows[1:]))
                s = tuple(svals)
                yield FConfig(s, steps, f_value(steps, s), tuple(rows), tuple(c for _, c in cols))
            return
        for sh in range(1, dts.k + 1):
            for upper in ordered[sh - 1]:
                off = prev - upper
                if off < 0 or off % d:
                    continue
                c = off // d
                if c > mu or (sh, c) in cols:
                    continue
                for lower in ordered[sh - 1]:
                    if lower == upper:
                        continue
                    r = lower + c * d
                    if r > W or r in rows:
                        continue
                    rows.append(r)
                    cols.append((sh, c))
                    svals.append(sh)
                    yield from extend(h + 1)
                    rows.pop()
                    cols.pop()
                    svals.pop()

    for r1 in range(1, W + 1):
        for s1 in range(1, dts.k + 1):
            for upper in ordered[s1 - 1]:
                off = r1 - upper
                if off < 0 or off % d or off // d > mu:
                    continue
                rows.append(r1)
                cols.append((s1, off // d))
                svals.append(s1)
                yield from extend(1)
                rows.pop()
                cols.pop()
                svals.pop()


def even_cycle_f_nonzero(
    dts: DifferenceTriangleSet,
    n: int,
    k: int,
    ell: int,
    realizable: bool = True,
    ell_cap: int = 10,
    max_witnesses: int = 20,
) -> FReport:
    """Search for row-step patterns whose exponent combination
    ``f(i, s) = sum_h i_h (s_{h+1} - s_1)`` vanishes over the integers.

    With ``realizable=True`` only step patterns that occur as actual cycles of
    the finite sliding window are considered.  Otherwise every tuple ``s`` (not
    all equal) and every signed step vector with ``|i_h|`` a difference of
    ``T_{s_{h+1}}`` and ``|sum i|`` a difference of ``T_{s_1}`` is examined.
    """
    if ell % 2:
        raise ValueError("ell must be even")
    if ell < 2 or ell > ell_cap:
        raise ValueError(f"ell must lie in [2, {ell_cap}]")
    if dts.k != k:
        raise ValueError(f"expected {k} sets, got {dts.k}")
    if not no_difference_divisible(dts, n - k):
        raise ValueError(f"some difference is divisible by n - k = {n - k}")

    report = FReport(ell, realizable)
    if realizable:
        configs: Iterator[FConfig] = iter_cycle_configurations(dts, n, k, ell)
    else:
        configs = _literal_configurations(dts, ell)
    for cfg in configs:
        report.configurations += 1
        if cfg.f == 0:
            if len(report.witnesses) < max_witnesses:
                report.witnesses.append(cfg)
            else:
                report.truncated = True
    return report


def _literal_configurations(dts: DifferenceTriangleSet, ell: int) -> Iterator[FConfig]:
    diffs = [sorted({diff for diff, _, _ in dts.differences(i)}) for i in range(dts.k)]
    signed = [[-x for x in reversed(ds)] + ds for ds in diffs]
    for s in itertools.product(range(1, dts.k + 1), repeat=ell):
        if len(set(s)) == 1:
            continue
        first = set(diffs[s[0] - 1])
        for i in itertools.product(*(signed[s[h + 1] - 1] for h in range(ell - 1))):
            if abs(sum(i)) in first:
                yield FConfig(s, i, f_value(i, s))
