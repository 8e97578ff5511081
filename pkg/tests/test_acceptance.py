"""Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line with the measured quantity and runtime."""

from __future__ import annotations

import math
import time
from collections import Counter

import numpy as np
import pytest

from conftest import code72_descriptor, cyclefree_descriptor, binary31_descriptor, alpha32_descriptor
from dtsldpc.analysis import degree, density, density_by_count, free_distance
from dtsldpc.bounds import n_bound_3x3, p_construction_bound, q_bound_2x2, q_bound_even_cycle
from dtsldpc.construction import CodeDescriptor, build_base, random_values, to_polynomial, window
from dtsldpc.cycles import audit_minors, enumerate_cycles, girth, natural_cycle_bound
from dtsldpc.dts import DifferenceTriangleSet, validate
from dtsldpc.field import make_field


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, ok: bool, detail: str, seconds: float) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number:2d} ({title}): {detail} [{seconds:.2f} s]")
        assert ok, detail

    return emit


def test_01_golden_matrices(golden, verdict):
    t0 = time.perf_counter()
    base = build_base(alpha32_descriptor(13))
    base_ok = base.matrix.to_text() == golden("alpha32_base.txt")
    window_ok = window(base).matrix.to_text() == golden("alpha32_window.txt")
    dt = time.perf_counter() - t0
    verdict(1, "golden base and sliding matrices", base_ok and window_ok and dt < 1.0,
            f"base match={base_ok}, window match={window_ok}", dt)


def test_02_distance_profile(verdict):
    t0 = time.perf_counter()
    fd = free_distance(build_base(alpha32_descriptor(13)))
    dt = time.perf_counter() - t0
    ok = fd.profile == [2, 3, 3, 3, 3, 4] and fd.value == 4 and fd.status == "exact" and dt < 60
    verdict(2, "column distance profile over GF(13)", ok,
            f"profile={fd.profile}, d_free={fd.value} ({fd.status})", dt)


def test_03_dts_codes_reach_w_plus_one(verdict):
    t0 = time.perf_counter()
    dts = DifferenceTriangleSet(((1, 4, 16, 20), (1, 7, 12, 14), (1, 9, 18, 19)), "strict")
    assert validate(dts).valid
    F = make_field(13)
    found = Counter()
    for nk in (1, 2):
        for seed in range(10):
            desc = CodeDescriptor(3 + nk, 3, F, dts, values=random_values(F, dts, seed))
            fd = free_distance(build_base(desc))
            found[(nk, fd.value, fd.status)] += 1
    dt = time.perf_counter() - t0
    ok = found == Counter({(1, 5, "exact"): 10, (2, 5, "exact"): 10}) and dt < 300
    verdict(3, "(3,4) strict set, n-k in {1,2}, 10 seeds each", ok, f"outcomes={dict(found)}", dt)


def test_04_density(verdict):
    t0 = time.perf_counter()
    base = build_base(alpha32_descriptor(13))
    pairs = {N: (density(3, 2, 3, base.mu, N), density_by_count(base, N)) for N in (15, 30, 60)}
    dt = time.perf_counter() - t0
    ok = all(a == b for a, b in pairs.values())
    verdict(4, "density formula vs nonzero count", ok,
            ", ".join(f"N={N}: {a} vs {b}" for N, (a, b) in pairs.items()), dt)


def test_05_cycle_free_code(verdict):
    t0 = time.perf_counter()
    details = []
    ok = True
    for p in (2, 7):
        H = window(build_base(cyclefree_descriptor(p))).matrix
        enum = enumerate_cycles(H)  # natural bound, at least the row-count bound
        g_enum = enum.girth()
        g_bfs = girth(H)
        ok &= enum.lmax >= 4 and not enum.budget_exceeded and g_enum == g_bfs == math.inf
        details.append(f"GF({p}): cycles={len(enum.cycles)} up to l={enum.lmax}, girth={g_bfs}")
    dt = time.perf_counter() - t0
    verdict(5, "cycle-free (7,2,1) code", ok and dt < 10, "; ".join(details), dt)


def test_06_bounds_vs_enumeration(verdict):
    t0 = time.perf_counter()
    b2 = q_bound_2x2(7, 2, 1)
    b6 = n_bound_3x3(7, 2, 1)[1]
    b8 = q_bound_even_cycle(7, 2, 1, 4)
    H = window(build_base(code72_descriptor(23))).matrix
    enum = enumerate_cycles(H, lmax=4)
    counts = dict(Counter(c.ell for c in enum.cycles))
    bad = len(enum.violations())
    dt = time.perf_counter() - t0
    ok = (b2, b6, b8) == (11, 19, 19) and bad == 0 and not enum.budget_exceeded and dt < 120
    verdict(6, "(7,2) code bounds and FRC at q=23", ok,
            f"bounds=({b2},{b6},{b8}), cycles by l={counts}, violations={bad}", dt)


def test_07_p_construction(verdict):
    t0 = time.perf_counter()
    b5 = p_construction_bound(6, 2, 1, 5)
    b3 = p_construction_bound(6, 2, 1, 3)
    dt = time.perf_counter() - t0
    ok = (
        b5.P == 11 and f"{b5.threshold:.3e}" == "4.716e+08"
        and b3.P == 7 and f"{b3.threshold:.2e}" == "1.35e+07"
        and b5.threshold == 471589539 and b3.threshold == 13451089
    )
    verdict(7, "modified construction thresholds", ok,
            f"l=5: P={b5.P}, q>{b5.threshold}; l=3: P={b3.P}, q>{b3.threshold}", dt)


PRIME_POWERS = [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (2, 5), (3, 3), (2, 6)]


def random_weak_dts(rng, k, w, cap=12):
    while True:
        sets = tuple(tuple(sorted(rng.choice(np.arange(1, cap + 1), size=w, replace=False).tolist())) for _ in range(k))
        t = DifferenceTriangleSet(sets)
        if validate(t, "weak").valid:
            return t


def test_08_degree_sandwich(verdict):
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    checked = full_rank_cases = positive_mu = 0
    failures = []
    while checked < 200:
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, min(4, n - 1) + 1))
        w = int(rng.integers(1, 5))
        t = random_weak_dts(rng, k, w)
        F = make_field(*PRIME_POWERS[int(rng.integers(len(PRIME_POWERS)))])
        base = build_base(CodeDescriptor(n, k, F, t, values=random_values(F, t, int(rng.integers(1 << 31)))))
        m, nk = base.mu, n - k
        delta = degree(to_polynomial(base))
        full = base.block(m).rank() == nk
        full_rank_cases += full
        positive_mu += m > 0
        if not (m <= delta <= m * nk) or ((delta == m * nk) != full):
            failures.append((n, k, t.sets, F.q, m, delta, full))
        checked += 1
    dt = time.perf_counter() - t0
    verdict(8, "mu <= delta <= mu(n-k), equality iff H_mu full rank", not failures and positive_mu >= 100 and dt < 300,
            f"{checked} descriptors ({positive_mu} with mu > 0), {full_rank_cases} with full-rank H_mu, failures={failures[:3]}", dt)


def test_09_minor_and_six_cycle_audit(verdict):
    t0 = time.perf_counter()
    H = window(build_base(alpha32_descriptor(13))).matrix
    a2 = audit_minors(H, 2)
    six = [c for c in enumerate_cycles(H, lmax=3).cycles if c.ell == 3]
    bad6 = sum(1 for c in six if not c.frc)
    dt = time.perf_counter() - t0
    ok = a2.clean and bad6 == 0 and dt < 120
    verdict(9, "q=13 audit of 2x2 minors and 6-cycles", ok,
            f"2x2 checked={a2.checked}, vanishing={len(a2.vanishing)}; 6-cycles={len(six)}, violations={bad6}", dt)


def test_10_binary_golden(golden, verdict):
    t0 = time.perf_counter()
    H = window(build_base(binary31_descriptor())).matrix
    expected = [[int(x) for x in line.split()] for line in golden("binary31_window.txt").splitlines()]
    got = H.vals.tolist()
    dt = time.perf_counter() - t0
    verdict(10, "(3,1) binary sliding matrix", got == expected, f"rows={got}", dt)
