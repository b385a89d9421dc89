"""Gorenstein classification of convex and stack polyominoes.

The convex test sweeps subsets T of X: whenever N_Y(T) is a neighbor
vertical interval and Y \\ N_Y(T) pulls back exactly to X \\ T along a
neighbor horizontal interval, the ring is Gorenstein only if
|N_Y(T)| = |T| + 1. Matching failure (no perfect matching on the side
graph) rules the ring out before any sweep.

For stacks two shortcuts exist: the level-set test (m = n and every
admissible column set T has |N_Y(T)| = |T| + 1) and the inside-corner
test (m = n and the cells at or above every inside corner level form a
square box).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import (
    BipartiteGraph,
    SideSubset,
    _contiguous,
    build_graph,
    has_perfect_matching,
    hall_violator,
)
from .errors import NotConvex, NotStack, TooLarge
from .polyomino import Polyomino, cells_at_or_above, corners, heights, is_convex, is_stack


@dataclass(frozen=True)
class Violation:
    """Why the ring fails: kind 'hall' needs |N(T)| >= required = |T|,
    kind 'cardinality' needs |N_Y(T)| == required = |T| + 1."""

    kind: str
    subset: SideSubset
    observed: int
    required: int

    def __str__(self) -> str:
        side = "N_Y" if self.subset.side == "X" else "N_X"
        return (
            f"T={self.subset}, |{side}(T)|={self.observed}, need {self.required}"
        )


@dataclass(frozen=True)
class Certificate:
    """An admissible T that passed, together with N_Y(T)."""

    subset: SideSubset
    neighbors: SideSubset


@dataclass(frozen=True)
class GorensteinVerdict:
    gorenstein: bool
    violation: Violation | None
    certificates: tuple[Certificate, ...]
    method: str

    def __bool__(self) -> bool:
        return self.gorenstein


def _hall_verdict(g: BipartiteGraph, method: str) -> GorensteinVerdict | None:
    """Matching-based gate; returns a failing verdict or None to continue."""
    if g.m != g.n:
        if g.m < g.n:
            subset = SideSubset("Y", (1 << g.n) - 1, g.n)
            observed, required = g.m, g.n
        else:
            subset = SideSubset("X", (1 << g.m) - 1, g.m)
            observed, required = g.n, g.m
        return GorensteinVerdict(
            False, Violation("hall", subset, observed, required), (), method
        )
    if not has_perfect_matching(g):
        viol = hall_violator(g)
        observed = len(_neighbors(g, viol))
        return GorensteinVerdict(
            False, Violation("hall", viol, observed, len(viol)), (), method
        )
    return None


def _neighbors(g: BipartiteGraph, s: SideSubset) -> SideSubset:
    if s.side == "X":
        bits = 0
        for i in s.indices():
            bits |= g.adj_x[i]
        return SideSubset("Y", bits, g.n)
    bits = 0
    for j in s.indices():
        bits |= g.adj_y[j]
    return SideSubset("X", bits, g.m)


def is_gorenstein_convex(p: Polyomino, max_bits: int = 24) -> GorensteinVerdict:
    """Full subset-sweep test for convex polyominoes.

    Sweeps nonempty proper T in increasing bit order; the first admissible
    T with |N_Y(T)| != |T| + 1 becomes the violation. When the verdict is
    positive every admissible T is returned as a certificate.
    """
    if not is_convex(p):
        raise NotConvex("the convex Gorenstein test needs a convex polyomino")
    g = build_graph(p)
    if g.m > max_bits:
        raise TooLarge(f"m = {g.m} exceeds the subset sweep limit {max_bits}")
    gate = _hall_verdict(g, "convex")
    if gate is not None:
        return gate
    m, n = g.m, g.n
    full_x = (1 << m) - 1
    full_y = (1 << n) - 1
    adj_x, adj_y = g.adj_x, g.adj_y
    vstep, hstep = g.vstep, g.hstep
    certs = []
    for t in range(1, full_x):
        nbits = 0
        stepv = 0
        rest = t
        i = 1
        while rest:
            if rest & 1:
                nbits |= adj_x[i]
                stepv |= vstep[i]
            rest >>= 1
            i += 1
        # (b) the untouched levels must pull back exactly to X \ T ...
        u = full_y & ~nbits
        if u == 0:
            continue
        nx = 0
        steph = 0
        rest = u
        j = 1
        while rest:
            if rest & 1:
                nx |= adj_y[j]
                steph |= hstep[j]
            rest >>= 1
            j += 1
        if nx != full_x & ~t:
            continue
        # ... along a neighbor horizontal interval
        if not _contiguous(nx) or (nx & nx >> 1) & ~steph:
            continue
        # (a) N_Y(T) must be a neighbor vertical interval
        if not _contiguous(nbits) or (nbits & nbits >> 1) & ~stepv:
            continue
        t_sub = SideSubset("X", t, m)
        n_sub = SideSubset("Y", nbits, n)
        if nbits.bit_count() != t.bit_count() + 1:
            return GorensteinVerdict(
                False,
                Violation("cardinality", t_sub, nbits.bit_count(), t.bit_count() + 1),
                tuple(certs),
                "convex",
            )
        certs.append(Certificate(t_sub, n_sub))
    return GorensteinVerdict(True, None, tuple(certs), "convex")


@dataclass(frozen=True)
class SubsetProfile:
    """How a single column set T fares against the sweep conditions.

    vertical_interval: N_Y(T) is a neighbor vertical interval.
    pullback_equal: N_X(Y \\ N_Y(T)) == X \\ T as sets.
    horizontal_interval: N_X(Y \\ N_Y(T)) is a neighbor horizontal interval.
    admissible: all three hold, so the cardinality rule applies.
    cardinality_ok: |N_Y(T)| == |T| + 1 (None unless admissible).
    """

    subset: SideSubset
    neighbors: SideSubset
    vertical_interval: bool
    pullback_equal: bool
    horizontal_interval: bool
    admissible: bool
    cardinality_ok: bool | None


def subset_profile(p: Polyomino, indices) -> SubsetProfile:
    """Explain why one T passes or drops out of the convex sweep."""
    from .bigraph import (
        is_neighbor_horizontal_interval,
        is_neighbor_vertical_interval,
        neighbors_x,
        neighbors_y,
    )

    g = build_graph(p)
    t = g.x_subset(indices)
    if not 0 < len(t) < g.m:
        raise ValueError("T must be a nonempty proper subset of X")
    ny = neighbors_y(g, t)
    vert = is_neighbor_vertical_interval(g, t)
    u = ny.complement()
    if len(u):
        nx = neighbors_x(g, u)
        equal = nx.bits == t.complement().bits
        horiz = is_neighbor_horizontal_interval(g, u)
    else:
        equal = horiz = False
    admissible = vert and equal and horiz
    card = len(ny) == len(t) + 1 if admissible else None
    return SubsetProfile(t, ny, vert, equal, horiz, admissible, card)


def is_gorenstein_stack_subsets(p: Polyomino) -> GorensteinVerdict:
    """Level-set test for stacks.

    The side condition (every column outside T reaches strictly above
    max N_Y(T)) forces T to be a full height level set, so only the sets
    {x : height(x) <= s} for attained heights s < n need the cardinality
    check. Nonempty T only; smaller s first.
    """
    if not is_stack(p):
        raise NotStack("the level-set Gorenstein test needs a stack polyomino")
    g = build_graph(p)
    gate = _hall_verdict(g, "stack-subsets")
    if gate is not None:
        return gate
    hs = heights(p)
    certs = []
    for s in sorted({h for h in hs if h < g.n}):
        t_sub = g.x_subset([i for i, h in enumerate(hs, start=1) if h <= s])
        n_sub = SideSubset("Y", (1 << s) - 1, g.n)
        if s != len(t_sub) + 1:
            return GorensteinVerdict(
                False,
                Violation("cardinality", t_sub, s, len(t_sub) + 1),
                tuple(certs),
                "stack-subsets",
            )
        certs.append(Certificate(t_sub, n_sub))
    return GorensteinVerdict(True, None, tuple(certs), "stack-subsets")


def is_gorenstein_stack_corners(p: Polyomino) -> bool:
    """Inside-corner test for stacks: m = n and every inside corner level
    cuts off a square-box upper part."""
    if not is_stack(p):
        raise NotStack("the corner Gorenstein test needs a stack polyomino")
    if p.m != p.n:
        return False
    for _, level in sorted(corners(p)["inside"]):
        upper = cells_at_or_above(p, level)
        if upper.m != upper.n:
            return False
    return True
