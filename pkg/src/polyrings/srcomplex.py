"""Flag complex of the initial ideal: facets, f-vector, Hilbert data.

Faces are the squarefree monomials outside the initial ideal, so the
complex is determined by its forbidden pairs (the quadratic generators).
Facets are maximal independent sets of the forbidden-pair graph. The
numerator Q(t) of the Hilbert series comes from the f-vector and yields
multiplicity Q(1), regularity deg Q, and a-invariant deg Q - d where
d = m + n - 1 is the Krull dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import DecompositionFailed, NotAFacet, NotPure, TooLarge
from .polyomino import Polyomino, heights
from .toric import Variable, VarOrder, initial_ideal

Facet = frozenset[Variable]


@dataclass(eq=False)
class FlagComplex:
    poly: Polyomino
    order: VarOrder
    vertices: tuple[Variable, ...]
    forbidden: frozenset[Facet]
    d: int
    _index: dict = field(default_factory=dict, repr=False)
    _adj: tuple = field(default=(), repr=False)
    _facets: tuple | None = field(default=None, repr=False)
    _counts: tuple | None = field(default=None, repr=False)
    _links: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {v: k for k, v in enumerate(self.vertices)}
        adj = [0] * len(self.vertices)
        for pair in self.forbidden:
            a, b = sorted(pair)
            ia, ib = self._index[a], self._index[b]
            adj[ia] |= 1 << ib
            adj[ib] |= 1 << ia
        self._adj = tuple(adj)


def build_complex(p: Polyomino, order: VarOrder | None = None) -> FlagComplex:
    ideal = initial_ideal(p, order)
    return FlagComplex(
        poly=p,
        order=ideal.order,
        vertices=tuple(sorted(p.vertices)),
        forbidden=ideal.generators,
        d=p.m + p.n - 1,
    )


def _max_independent_sets(adj: tuple, mask: int) -> list[int]:
    """Maximal independent sets inside mask, as bit masks (Bron-Kerbosch
    with pivot on the complement graph)."""
    comp = {}

    def cadj(v: int) -> int:
        got = comp.get(v)
        if got is None:
            got = mask & ~adj[v] & ~(1 << v)
            comp[v] = got
        return got

    out: list[int] = []

    def expand(r: int, p_: int, x: int):
        if p_ == 0 and x == 0:
            out.append(r)
            return
        px = p_ | x
        pivot = -1
        best = -1
        probe = px
        while probe:
            v = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            cnt = (p_ & cadj(v)).bit_count()
            if cnt > best:
                best = cnt
                pivot = v
        cand = p_ & ~cadj(pivot)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r | 1 << v, p_ & cadj(v), x & cadj(v))
            p_ &= ~(1 << v)
            x |= 1 << v
    expand(0, mask, 0)
    return out


def _mask_to_facet(c: FlagComplex, mask: int) -> Facet:
    return frozenset(
        c.vertices[k] for k in range(len(c.vertices)) if mask >> k & 1
    )


def facets(c: FlagComplex, max_vertices: int = 40) -> tuple[Facet, ...]:
    """All facets, sorted; asserts purity (every facet has size d)."""
    if c._facets is not None:
        return c._facets
    nv = len(c.vertices)
    if nv > max_vertices:
        raise TooLarge(f"{nv} vertices exceed the facet guard {max_vertices}")
    masks = _max_independent_sets(c._adj, (1 << nv) - 1)
    out = sorted(
        (_mask_to_facet(c, mk) for mk in masks), key=lambda f: sorted(f)
    )
    for f in out:
        if len(f) != c.d:
            raise NotPure(
                f"facet of size {len(f)}, expected d = {c.d}: {sorted(f)}"
            )
    c._facets = tuple(out)
    return c._facets


def _independent_counts(adj: tuple, mask: int, memo: dict) -> tuple[int, ...]:
    """Coefficient k = number of independent sets of size k inside mask."""
    if mask == 0:
        return (1,)
    got = memo.get(mask)
    if got is not None:
        return got
    # find a vertex with conflicts inside mask; branch on the busiest one
    pivot = -1
    best = 0
    probe = mask
    while probe:
        v = (probe & -probe).bit_length() - 1
        probe &= probe - 1
        deg = (adj[v] & mask).bit_count()
        if deg > best:
            best = deg
            pivot = v
    if pivot < 0:
        k = mask.bit_count()
        result = tuple(comb(k, i) for i in range(k + 1))
    else:
        without = _independent_counts(adj, mask & ~(1 << pivot), memo)
        with_v = _independent_counts(adj, mask & ~(adj[pivot] | 1 << pivot), memo)
        size = max(len(without), len(with_v) + 1)
        acc = [0] * size
        for i, val in enumerate(without):
            acc[i] += val
        for i, val in enumerate(with_v):
            acc[i + 1] += val
        result = tuple(acc)
    memo[mask] = result
    return result


def f_vector(c: FlagComplex, max_vertices: int = 24) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_{d-1}) by independent-set counting."""
    if c._counts is not None:
        return c._counts
    nv = len(c.vertices)
    if nv > max_vertices:
        raise TooLarge(f"{nv} vertices exceed the f-vector guard {max_vertices}")
    counts = _independent_counts(c._adj, (1 << nv) - 1, {})
    if len(counts) != c.d + 1:
        raise NotPure(
            f"face sizes reach {len(counts) - 1}, expected d = {c.d}"
        )
    c._counts = counts
    return counts


def hilbert_numerator(c: FlagComplex) -> tuple[int, ...]:
    """Coefficients of Q(t) = sum f_(i-1) t^i (1-t)^(d-i), trailing zeros cut."""
    fv = f_vector(c)
    d = c.d
    q = [0] * (d + 1)
    for i, fi in enumerate(fv):
        for k in range(d - i + 1):
            q[i + k] += fi * comb(d - i, k) * (-1) ** k
    while q and q[-1] == 0:
        q.pop()
    if not q or q[0] != 1 or sum(q) != fv[-1]:
        raise NotPure("Hilbert numerator failed its sanity identities")
    return tuple(q)


@dataclass(frozen=True)
class ComplexInvariants:
    multiplicity: int
    regularity: int | None
    a_invariant: int | None
    h_vector: tuple[int, ...] | None


def invariants_from_complex(
    c: FlagComplex, max_fvector_vertices: int = 24, max_facet_vertices: int = 40
) -> ComplexInvariants:
    """Multiplicity always; regularity, a-invariant and h-vector when the
    f-vector DP is within its size guard."""
    if len(c.vertices) <= max_fvector_vertices:
        q = hilbert_numerator(c)
        deg = len(q) - 1
        return ComplexInvariants(sum(q), deg, deg - c.d, q)
    fs = facets(c, max_facet_vertices)
    return ComplexInvariants(len(fs), None, None, None)


def link_facets(c: FlagComplex, v: Variable, max_vertices: int = 40) -> tuple[Facet, ...]:
    """Facets of the complex that contain v, each with v removed.

    In a flag complex these are exactly the facets of lk(v), so together
    with deletion_facets they partition the facet list.
    """
    got = c._links.get(("link", v))
    if got is not None:
        return got
    if v not in c._index:
        raise ValueError(f"{v} is not a vertex of the complex")
    out = tuple(f - {v} for f in facets(c, max_vertices) if v in f)
    c._links[("link", v)] = out
    return out


def deletion_facets(c: FlagComplex, v: Variable, max_vertices: int = 40) -> tuple[Facet, ...]:
    """Facets of the complex that avoid v.

    The deletion subcomplex can have further maximal faces of smaller
    size hiding under facets through v; those never take part in the
    facet counting, so they are not reported.
    """
    got = c._links.get(("del", v))
    if got is not None:
        return got
    if v not in c._index:
        raise ValueError(f"{v} is not a vertex of the complex")
    out = tuple(f for f in facets(c, max_vertices) if v not in f)
    c._links[("del", v)] = out
    return out


def _check_transport_args(f: frozenset, i: int, h: int, m: int):
    if not f:
        raise NotAFacet("empty vertex set")
    for a, b in f:
        if not (1 <= a <= m) or b < 1:
            raise NotAFacet(f"vertex {(a, b)} outside the box of width {m}")
    if not (1 <= i <= m) or h < 2:
        raise NotAFacet(f"bad transport parameters i={i}, h={h}, m={m}")


def transport_facet(f: frozenset, i: int, h: int, m: int) -> frozenset:
    """Carry a facet avoiding (i, h) across the top-cell deletion.

    Identity when i == 1 or i == m (the cell deletion then happens in the
    pivot's own column and nothing moves). Otherwise three passes over
    levels k <= h with every membership test against the input set: clear
    and refill column m from column i, then shift columns i+1..m-1 down
    by one, then drop what column m held onto column m-1. Net effect is a
    circular column rearrangement on the low levels.
    """
    orig = frozenset(f)
    _check_transport_args(orig, i, h, m)
    if (i, h) in orig:
        raise NotAFacet(f"facet must avoid the pivot vertex {(i, h)}")
    if i == 1 or i == m:
        return orig
    cur = set(orig)
    for k in range(1, h + 1):
        if (m, k) in orig:
            cur.remove((m, k))
        if (i, k) in orig:
            cur.remove((i, k))
            cur.add((m, k))
    for j in range(i + 1, m):
        for k in range(1, h + 1):
            if (j, k) in orig:
                cur.remove((j, k))
                cur.add((j - 1, k))
    for k in range(1, h + 1):
        if (m, k) in orig:
            cur.add((m - 1, k))
    if len(cur) != len(orig):
        raise NotAFacet("transport collapsed two vertices; input was not a facet")
    return frozenset(cur)


def transport_facet_inverse(f: frozenset, i: int, h: int, m: int) -> frozenset:
    """Inverse rearrangement: refill column i from column m, shift
    columns i..m-2 up by one, restore column m from column m-1."""
    orig = frozenset(f)
    _check_transport_args(orig, i, h, m)
    if i == 1 or i == m:
        return orig
    cur = set(orig)
    for k in range(1, h + 1):
        if (m - 1, k) in orig:
            cur.remove((m - 1, k))
    if i <= m - 2:
        for j in range(m - 2, i - 1, -1):
            for k in range(1, h + 1):
                if (j, k) in orig:
                    cur.remove((j, k))
                    cur.add((j + 1, k))
    for k in range(1, h + 1):
        if (m, k) in orig:
            cur.remove((m, k))
            cur.add((i, k))
        if (m - 1, k) in orig:
            cur.add((m, k))
    if len(cur) != len(orig):
        raise NotAFacet("transport collapsed two vertices; input was not a facet")
    return frozenset(cur)


@lru_cache(maxsize=None)
def complex_for(p: Polyomino) -> FlagComplex:
    """Shared default-order complex per polyomino."""
    return build_complex(p)


def link_decompose(c: FlagComplex, v: Variable, f: frozenset) -> tuple[frozenset, frozenset]:
    """Split a link facet F of the distinguished vertex v = (i, height(i))
    into G1 u G2, where G2 collects the level-j vertices lost by the upper
    part plus the column-i vertices below v, and G1 renormalizes to a
    facet of the upper part's complex.

    Returns (g1, g2) in the original coordinates.
    """
    p = c.poly
    i, j = v
    hs = heights(p)
    canonical = min(range(1, p.m + 1), key=lambda col: (hs[col - 1], col))
    if i != canonical or j != hs[i - 1]:
        raise DecompositionFailed(
            f"{v} is not the minimal-height top vertex {(canonical, hs[canonical - 1])}"
        )
    upper = {(cc, rr) for cc, rr in p.cells if rr >= j}
    if not upper:
        raise DecompositionFailed("rectangle: no cells at or above the top level")
    f = frozenset(f)
    if f not in set(link_facets(c, v)):
        raise DecompositionFailed("input is not a facet of the link")
    lo = min(cc for cc, _ in upper)
    hi = max(cc for cc, _ in upper) + 1
    g2 = {(a, j) for a in range(1, p.m + 1) if (a, j) in p.vertices and not lo <= a <= hi}
    g2 |= {(i, k) for k in range(1, j)}
    g2 = frozenset(g2)
    fv = f | {v}
    if not g2 <= fv:
        raise DecompositionFailed("facet does not contain the boundary block G2")
    g1 = fv - g2
    p2 = Polyomino(upper)
    g1n = frozenset((a - (lo - 1), b - (j - 1)) for a, b in g1)
    if g1n not in set(facets(complex_for(p2))):
        raise DecompositionFailed("G1 does not renormalize to a facet of the upper part")
    return g1, g2
