"""Ring invariants of stack (and convex) polyominoes.

For a stack on the vertex box [m] x [n] the multiplicity satisfies
e(P) = e(P1) + e(P2) where P1 deletes the distinguished top cell and P2
keeps the cells at or above the distinguished level; full rectangles
ground the recursion at e = binom(m+n-2, m-1). That identity holds and
is enforced. The closed forms a = -max(m, n) and reg = min(m, n) - 1
are only predictions: -a is always >= max(m, n) (row cuts and column
cuts each give a disjoint family) but shapes with a tall narrow tower
on a wide low base beat the bound, the smallest being the 5-cell stack
with heights [2,2,4,4], where -a = 5 and reg = 2. True values come
from the facet complex; full_report prefers them and records any
disagreement in its notes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    BadParameters,
    ConsistencyError,
    GroebnerUnverified,
    IsRectangle,
    NotConvex,
    NotStack,
)
from .gorenstein import is_gorenstein_convex
from .polyomino import (
    Polyomino,
    cells_at_or_above,
    delete_cell,
    heights,
    is_convex,
    is_rectangle,
    is_stack,
)
from .srcomplex import build_complex, invariants_from_complex
from .toric import VarOrder


def a_invariant_stack(p: Polyomino) -> int:
    """Closed-form prediction -max(m, n). An upper bound on the true
    a-invariant, not always attained; see the module docstring."""
    if not is_stack(p):
        raise NotStack("a-invariant formula needs a stack polyomino")
    return -max(p.m, p.n)


def regularity_stack(p: Polyomino) -> int:
    """Closed-form prediction min(m, n) - 1. An upper bound on the true
    regularity, not always attained; see the module docstring."""
    if not is_stack(p):
        raise NotStack("regularity formula needs a stack polyomino")
    return min(p.m, p.n) - 1


@dataclass(frozen=True)
class Decomposition:
    """Distinguished vertex v plus the two smaller stacks P1 and P2."""

    v: tuple[int, int]
    p1: Polyomino
    p2: Polyomino


def distinguished_vertex(p: Polyomino) -> tuple[int, int]:
    """(i, height(i)) for the lowest column, leftmost on ties."""
    hs = heights(p)
    i = min(range(1, p.m + 1), key=lambda col: (hs[col - 1], col))
    return i, hs[i - 1]


def decompose(p: Polyomino) -> Decomposition:
    """One step of the multiplicity recursion.

    P1 deletes the top cell of cell column 1 when the distinguished
    column is the first, of cell column m-1 otherwise. P2 keeps the
    cells at or above the distinguished level, renormalized.
    """
    if not is_stack(p):
        raise NotStack("decompose needs a stack polyomino")
    if is_rectangle(p):
        raise IsRectangle("a full rectangle is the recursion base, not a step")
    hs = heights(p)
    i, level = distinguished_vertex(p)
    if i == 1:
        top_cell = (1, hs[0] - 1)
    else:
        top_cell = (p.m - 1, hs[p.m - 1] - 1)
    p1 = delete_cell(p, top_cell)
    p2 = cells_at_or_above(p, level)
    return Decomposition((i, level), p1, p2)


def multiplicity_rectangle(m: int, n: int) -> int:
    """e of the full [m] x [n] rectangle."""
    if m < 2 or n < 2:
        raise BadParameters(f"rectangle box needs m, n >= 2, got {m}, {n}")
    return comb(m + n - 2, m - 1)


_mult_memo: dict[frozenset, int] = {}


def multiplicity_recursive(p: Polyomino) -> int:
    """e(P) by the deletion recursion, memoized on normalized cell sets."""
    if not is_stack(p):
        raise NotStack("the multiplicity recursion needs a stack polyomino")
    got = _mult_memo.get(p.cells)
    if got is not None:
        return got
    if is_rectangle(p):
        value = multiplicity_rectangle(p.m, p.n)
    else:
        dec = decompose(p)
        value = multiplicity_recursive(dec.p1) + multiplicity_recursive(dec.p2)
    _mult_memo[p.cells] = value
    return value


def pk_polyomino(m: int, n: int, k: int) -> Polyomino:
    """Rectangle of full columns plus one last cell column of top vertex k."""
    _check_pk(m, n, k)
    cells = [(c, r) for c in range(1, m - 1) for r in range(1, n)]
    cells += [(m - 1, r) for r in range(1, k)]
    return Polyomino(cells)


def _check_pk(m: int, n: int, k: int):
    if m < 3 or n < 2 or not 2 <= k < n:
        raise BadParameters(
            f"need m >= 3 and 2 <= k < n, got m={m}, n={n}, k={k}"
        )


def multiplicity_pk(m: int, n: int, k: int) -> int:
    """Closed form for the one-step ladder: full rectangle minus a tail."""
    _check_pk(m, n, k)
    return comb(m + n - 2, m - 1) - comb(m + n - k - 2, m - 1)


def ladder_polyomino(m: int, n: int, ks) -> Polyomino:
    """Full-height columns followed by steps: the last len(ks) vertex
    columns have heights ks (weakly decreasing, between 2 and n)."""
    ks = tuple(int(k) for k in ks)
    if m < 2 or n < 2 or len(ks) > m - 1:
        raise BadParameters(f"need m, n >= 2 and at most m-1 steps, got m={m}, n={n}, ks={ks}")
    if any(not 2 <= k <= n for k in ks):
        raise BadParameters(f"step heights must lie in 2..n, got {ks}")
    if any(a < b for a, b in zip(ks, ks[1:])):
        raise BadParameters(f"step heights must be weakly decreasing, got {ks}")
    l = len(ks)
    cells = []
    for c in range(1, m):
        top = n if c < m - l else ks[c - m + l]
        for r in range(1, top):
            cells.append((c, r))
    p = Polyomino(cells)
    if p.m != m or p.n != n:
        raise BadParameters(
            f"declared box [{m}]x[{n}] is not realized (got [{p.m}]x[{p.n}])"
        )
    return p


def _ladder_value(m: int, n: int, ks: tuple[int, ...]) -> int:
    while ks and ks[0] == n:
        ks = ks[1:]
    while ks and ks[-1] == 1:
        ks = ks[:-1]
        m -= 1
    if not ks:
        return multiplicity_rectangle(m, n)
    last = ks[-1]
    return sum(
        _ladder_value(m - 1, n - j, tuple(k - j for k in ks[:-1]))
        for j in range(last)
    )


def multiplicity_ladder(m: int, n: int, ks) -> int:
    """e of the ladder by its own one-step recursion (peeling the last
    step column), independent of the generic deletion recursion."""
    ladder_polyomino(m, n, ks)
    return _ladder_value(m, n, tuple(int(k) for k in ks))


@dataclass(eq=False)
class InvariantReport:
    m: int
    n: int
    d: int
    a_invariant: int | None
    regularity: int | None
    multiplicity: int | None
    h_vector: tuple[int, ...] | None
    gorenstein: bool | None
    methods: dict[str, str]
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "a_invariant": self.a_invariant,
            "regularity": self.regularity,
            "multiplicity": self.multiplicity,
            "h_vector": list(self.h_vector) if self.h_vector is not None else None,
            "gorenstein": self.gorenstein,
            "methods": dict(sorted(self.methods.items())),
            "notes": list(self.notes),
        }


def full_report(
    p: Polyomino,
    order: VarOrder | None = None,
    max_subset_bits: int = 24,
    max_fvector_vertices: int = 24,
    max_facet_vertices: int = 40,
) -> InvariantReport:
    """Every invariant this package can certify for p, with method tags.

    Complex-derived values win wherever the size guards allow the facet
    enumeration: the multiplicity recursion must then agree (any split
    raises ConsistencyError), while the closed forms for a and
    regularity are demoted to predictions. They disagree with the truth
    on some stacks (smallest: 5 cells, a base row of three cells with a
    two-cell tower), and a disagreement is reported in notes, never
    raised. With the complex unavailable the closed forms are reported
    under the "formula" method tag, meaning unverified prediction.
    Non-stack convex shapes get complex-derived values only when a
    supplied order passes the Groebner check, plus the Gorenstein
    verdict from the subset sweep.
    """
    if not is_convex(p):
        raise NotConvex("full_report needs a convex polyomino")
    stack = is_stack(p)
    methods: dict[str, str] = {}
    notes: list[str] = []
    a = reg = mult = None
    h = None
    if stack:
        a = a_invariant_stack(p)
        reg = regularity_stack(p)
        mult = multiplicity_recursive(p)
        methods["a_invariant"] = "formula"
        methods["regularity"] = "formula"
        methods["multiplicity"] = "recursion"
    ci = None
    if (stack or order is not None) and len(p.vertices) <= max_facet_vertices:
        try:
            c = build_complex(p, order)
        except GroebnerUnverified:
            c = None
        if c is not None:
            ci = invariants_from_complex(c, max_fvector_vertices, max_facet_vertices)
    if ci is not None:
        if mult is None:
            mult = ci.multiplicity
            methods["multiplicity"] = "complex"
        elif ci.multiplicity != mult:
            raise ConsistencyError(
                f"multiplicity: recursion {mult} vs complex {ci.multiplicity}"
            )
        if ci.regularity is not None:
            if reg is not None and (reg, a) != (ci.regularity, ci.a_invariant):
                notes.append(
                    f"closed forms predict a={a}, regularity={reg}; "
                    f"the complex gives a={ci.a_invariant}, "
                    f"regularity={ci.regularity} (reported)"
                )
            reg = ci.regularity
            a = ci.a_invariant
            methods["regularity"] = "complex"
            methods["a_invariant"] = "complex"
            h = ci.h_vector
            methods["h_vector"] = "complex"
    gor = None
    if p.m <= max_subset_bits:
        gor = is_gorenstein_convex(p, max_subset_bits).gorenstein
        methods["gorenstein"] = "interval criterion"
    for name in ("a_invariant", "regularity", "multiplicity", "h_vector", "gorenstein"):
        methods.setdefault(name, "unavailable")
    if reg is not None and a is not None:
        d = p.m + p.n - 1
        if reg != d + a:
            raise ConsistencyError(f"regularity {reg} != d + a = {d + a}")
    if h is not None and mult is not None and sum(h) != mult:
        raise ConsistencyError(f"h-vector sums to {sum(h)}, multiplicity {mult}")
    return InvariantReport(
        m=p.m,
        n=p.n,
        d=p.m + p.n - 1,
        a_invariant=a,
        regularity=reg,
        multiplicity=mult,
        h_vector=h,
        gorenstein=gor,
        methods=methods,
        notes=tuple(notes),
    )
