from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from dtsldpc import kernels
from dtsldpc.field import FieldMatrix, make_field

needs_ext = pytest.mark.skipif(not kernels.HAVE_EXTENSION, reason="compiled kernels not built")

FIELDS = [(2, 1), (3, 1), (13, 1), (2, 4), (3, 2)]


@needs_ext
@pytest.mark.parametrize("p,N", FIELDS)
def test_circuit_search_equivalence(p, N):
    F = make_field(p, N)
    rng = np.random.default_rng(p * 10 + N)
    for _ in range(25):
        rows, cols = int(rng.integers(2, 7)), int(rng.integers(3, 10))
        vals = rng.integers(1, F.q, size=(rows, cols)) * (rng.random((rows, cols)) < 0.5)
        H = FieldMatrix(F, vals)
        n_first = int(rng.integers(1, cols + 1))
        for dmax in range(1, rows + 2):
            a = kernels.circuit_search(H, n_first, dmax, 10**6, use_extension=True)
            b = kernels.circuit_search(H, n_first, dmax, 10**6, use_extension=False)
            assert (a[0] is None) == (b[0] is None)
            if a[0] is not None:
                assert len(a[0]) == len(b[0]) == dmax
                # both supports carry a dependency through a leading column
                for X in (a[0], b[0]):
                    assert min(X) < n_first
                    assert H.submatrix(range(rows), sorted(X)).rank() < len(X)
                break


@needs_ext
def test_cycle_search_equivalence():
    rng = np.random.default_rng(0)
    for _ in range(30):
        P = rng.random((int(rng.integers(2, 8)), int(rng.integers(2, 9)))) < 0.45
        a, _ = kernels.cycle_search(P, 6, 10**6, use_extension=True)
        b, _ = kernels.cycle_search(P, 6, 10**6, use_extension=False)
        assert sorted(a) == sorted(b)


@needs_ext
def test_budget_flag_both_kernels():
    P = np.ones((5, 5), dtype=bool)
    for ext in (True, False):
        _, over = kernels.cycle_search(P, 5, 10, use_extension=ext)
        assert over


def test_pure_python_switch():
    env = dict(os.environ, DTSLDPC_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import dtsldpc.kernels as k; print(k.IMPLEMENTATION, k.HAVE_EXTENSION)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.split() == ["python", "False"]


def test_extension_request_without_extension(monkeypatch):
    monkeypatch.setattr(kernels, "HAVE_EXTENSION", False)
    with pytest.raises(RuntimeError):
        kernels.cycle_search(np.ones((2, 2), dtype=bool), 2, 10, use_extension=True)
