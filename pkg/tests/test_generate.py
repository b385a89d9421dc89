from collections import Counter

from polyrings.generate import (
    convex_polyominoes,
    fixed_polyominoes,
    stack_polyominoes,
    unimodal_compositions,
)
from polyrings.polyomino import is_convex, is_stack


def _by_size(it):
    counts = Counter()
    for p in it:
        counts[len(p)] += 1
    return counts


def test_fixed_counts():
    # 1, 2, 6, 19, 63, 216, 760: fixed polyominoes by cell count
    counts = _by_size(fixed_polyominoes(7))
    assert [counts[k] for k in range(1, 8)] == [1, 2, 6, 19, 63, 216, 760]


def test_convex_counts_and_membership():
    counts = _by_size(convex_polyominoes(6))
    assert [counts[k] for k in range(1, 7)] == [1, 2, 6, 19, 59, 176]
    got = {p.cells for p in convex_polyominoes(6)}
    want = {p.cells for p in fixed_polyominoes(6) if is_convex(p)}
    assert got == want


def test_stack_counts():
    counts = _by_size(stack_polyominoes(10))
    assert [counts[k] for k in range(1, 11)] == [
        1, 2, 4, 8, 15, 27, 47, 79, 130, 209,
    ]


def test_stack_generator_equals_filtered_fixed():
    got = {p.cells for p in stack_polyominoes(7)}
    want = {p.cells for p in fixed_polyominoes(7) if is_stack(p)}
    assert got == want


def test_generated_stacks_are_stacks_and_unique():
    seen = set()
    for p in stack_polyominoes(8):
        assert is_stack(p)
        assert p.cells not in seen
        seen.add(p.cells)


def test_unimodal_compositions_shape():
    for comp in unimodal_compositions(5):
        assert sum(comp) <= 5
        assert all(c >= 1 for c in comp)
        peak = comp.index(max(comp))
        assert list(comp[: peak + 1]) == sorted(comp[: peak + 1])
        assert list(comp[peak:]) == sorted(comp[peak:], reverse=True)
