from __future__ import annotations

from pathlib import Path

import pytest

from dtsldpc.construction import CodeDescriptor, build_base
from dtsldpc.dts import DifferenceTriangleSet
from dtsldpc.field import make_field

GOLDEN = Path(__file__).parent / "golden"


def alpha32_descriptor(q: int = 13) -> CodeDescriptor:
    dts = DifferenceTriangleSet(((1, 2, 6), (1, 2, 4)), "weak")
    return CodeDescriptor(3, 2, make_field(q), dts, "alpha")


def code72_descriptor(q: int = 23) -> CodeDescriptor:
    dts = DifferenceTriangleSet(((1, 2, 5, 9), (1, 2, 4, 10)), "relaxed", 5)
    return CodeDescriptor(7, 2, make_field(q), dts, "alpha")


def cyclefree_descriptor(p: int = 7) -> CodeDescriptor:
    dts = DifferenceTriangleSet(((1, 2, 5), (1, 3, 9)), "strict")
    return CodeDescriptor(7, 2, make_field(p), dts, "alpha")


def binary31_descriptor() -> CodeDescriptor:
    return CodeDescriptor(3, 1, make_field(2), DifferenceTriangleSet(((1, 2, 3),), "weak"))


@pytest.fixture
def golden():
    return lambda name: (GOLDEN / name).read_text()


@pytest.fixture(scope="session")
def alpha32():
    return build_base(alpha32_descriptor())
