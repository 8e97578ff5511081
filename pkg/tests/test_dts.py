from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dtsldpc.dts import (
    DifferenceTriangleSet,
    cyclefree_conditions,
    even_cycle_f_nonzero,
    iter_cycle_configurations,
    no_difference_divisible,
    search_min_scope,
    triangles,
    validate,
    within_set_valid,
)

WEAK_EX = ((1, 2, 4, 8), (1, 3, 7, 15), (1, 5, 10, 16))
STRICT_EX = ((1, 4, 16, 20), (1, 7, 12, 14), (1, 9, 18, 19))


def test_examples_validate():
    w = DifferenceTriangleSet(WEAK_EX, "weak")
    assert validate(w, "weak").valid
    assert not validate(w, "strict").valid
    s = DifferenceTriangleSet(STRICT_EX, "strict")
    assert validate(s).valid
    assert s.scope == 20


def test_triangles():
    s = DifferenceTriangleSet(STRICT_EX)
    assert triangles(s)[0] == [(3, 12, 4), (15, 16), (19,)]
    assert triangles(DifferenceTriangleSet(WEAK_EX))[2] == [(4, 5, 6), (9, 11), (15,)]


def test_weak_violation_reported():
    rep = validate(DifferenceTriangleSet(((1, 2, 3),)), "weak")
    assert not rep.valid
    assert rep.violations[0].clause == "within"
    assert rep.violations[0].pairs == ((2, 1), (3, 2))


def test_relaxed_within_set_rule():
    # 3-2 = 2-1 but 3-2 = 1 is not a multiple of 2
    t = DifferenceTriangleSet(((1, 2, 3),), "relaxed", 2)
    assert validate(t).valid
    assert not validate(t, "relaxed", 1).valid
    # T1 of the (7,2) code: 9-5 = 5-1 with 9-5 not divisible by 5
    t72 = DifferenceTriangleSet(((1, 2, 5, 9), (1, 2, 4, 10)), "relaxed", 5)
    assert within_set_valid(t72, 5)
    assert not within_set_valid(t72)


@pytest.mark.parametrize(
    "bad",
    [
        dict(sets=()),
        dict(sets=((1, 1, 2),)),
        dict(sets=((0, 1),)),
        dict(sets=((1, 2), (1, 2, 3))),
        dict(sets=((1, 2),), mode="relaxed"),
        dict(sets=((1, 2),), mode="bogus"),
    ],
)
def test_invalid_construction(bad):
    with pytest.raises(ValueError):
        DifferenceTriangleSet(**bad)


def brute_min_scope(k, w, mode, cap):
    """Independent oracle: smallest scope over all multisets of k subsets."""
    for top in range(w, cap + 1):
        cands = list(itertools.combinations(range(1, top + 1), w))
        for combo in itertools.combinations_with_replacement(cands, k):
            if max(c[-1] for c in combo) != top:
                continue
            try:
                t = DifferenceTriangleSet(combo, mode)
            except ValueError:
                continue
            if validate(t).valid:
                return top
    return None


@pytest.mark.parametrize("k,w,mode", [(1, 3, "weak"), (1, 4, "weak"), (2, 2, "strict"), (2, 3, "strict"), (2, 3, "weak"), (3, 2, "strict")])
def test_search_matches_bruteforce_scope(k, w, mode):
    got = search_min_scope(k, w, mode, scope_cap=12)
    assert got is not None and validate(got, mode).valid
    assert got.scope == brute_min_scope(k, w, mode, 12)


def test_search_known_results():
    assert search_min_scope(1, 3, "weak").sets == ((1, 2, 4),)
    assert search_min_scope(2, 3, "strict").sets == ((1, 2, 5), (1, 3, 8))
    assert search_min_scope(3, 4, "strict").scope == 20


def test_search_gives_up_below_cap():
    assert search_min_scope(2, 3, "strict", scope_cap=7) is None


sets_strategy = st.lists(
    st.lists(st.integers(1, 14), min_size=3, max_size=3, unique=True).map(sorted),
    min_size=1,
    max_size=3,
)


@settings(max_examples=300, deadline=None)
@given(sets_strategy, st.integers(1, 5))
def test_mode_implications(sets, d):
    t = DifferenceTriangleSet(tuple(map(tuple, sets)))
    strict = validate(t, "strict").valid
    weak = validate(t, "weak").valid
    relaxed = validate(t, "relaxed", d).valid
    cross = not any(v.clause == "cross" for v in validate(t, "strict").violations)
    if strict:
        assert weak and relaxed
    if weak and cross:
        assert relaxed


def test_divisibility_helpers():
    t = DifferenceTriangleSet(((1, 2, 5), (1, 3, 9)))
    assert no_difference_divisible(t, 5)
    assert not no_difference_divisible(t, 4)
    with pytest.raises(ValueError):
        no_difference_divisible(t, 0)


def test_cyclefree_conditions():
    assert cyclefree_conditions(DifferenceTriangleSet(((1, 2, 5), (1, 3, 9))), 7, 2)
    assert not cyclefree_conditions(DifferenceTriangleSet(((1, 6), (1, 2))), 7, 2)
    with pytest.raises(ValueError):
        cyclefree_conditions(DifferenceTriangleSet(((1, 2, 3),)), 3, 1)
    with pytest.raises(ValueError):
        cyclefree_conditions(DifferenceTriangleSet(((1, 2, 5),)), 7, 2)


def test_even_cycle_condition_on_72_code():
    t = DifferenceTriangleSet(((1, 2, 5, 9), (1, 2, 4, 10)), "relaxed", 5)
    rep = even_cycle_f_nonzero(t, 7, 2, 4)
    assert rep.nonzero
    # four 8-cycles, each seen from 2*ell starting points and directions
    assert rep.configurations == 32
    configs = list(iter_cycle_configurations(t, 7, 2, 4))
    assert all(c.s[0] == c.s[2] and c.s[1] == c.s[3] and c.s[0] != c.s[1] for c in configs)
    # |f| stays within ((mu+1)(n-k)-1) * ((k-1)l/2 + (k-2)(l-2)/2) = 18
    assert {abs(c.f) for c in configs} == {10, 11, 12}
    # every labelled configuration is one of the 8-cycles found on the window
    from dtsldpc.construction import CodeDescriptor, build_base, window
    from dtsldpc.cycles import enumerate_cycles
    from dtsldpc.field import make_field

    H = window(build_base(CodeDescriptor(7, 2, make_field(23), t, "alpha"))).matrix
    eights = {frozenset(c.rows) for c in enumerate_cycles(H, lmax=4).cycles if c.ell == 4}
    assert {frozenset(r - 1 for r in c.rows) for c in configs} == eights
    literal = even_cycle_f_nonzero(t, 7, 2, 4, realizable=False)
    assert not literal.nonzero


def test_even_cycle_argument_checks():
    t = DifferenceTriangleSet(((1, 2, 5, 9), (1, 2, 4, 10)))
    with pytest.raises(ValueError):
        even_cycle_f_nonzero(t, 7, 2, 3)
    with pytest.raises(ValueError):
        even_cycle_f_nonzero(DifferenceTriangleSet(((1, 6), (1, 2))), 7, 2, 2)


def test_dict_roundtrip():
    t = DifferenceTriangleSet(((1, 2, 5, 9), (1, 2, 4, 10)), "relaxed", 5)
    assert DifferenceTriangleSet.from_dict(t.to_dict()) == t
