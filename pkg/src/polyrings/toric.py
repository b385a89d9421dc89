"""Inner 2-minors, the height term order, and the Groebner verdict.

Variables x_ij sit on the vertices (i, j) of the polyomino. An inner
minor at corners (i, j) < (k, l) is the binomial

    x_il * x_kj  -  x_ij * x_kl       (antidiagonal minus diagonal)

and exists when every cell of [i..k-1] x [j..l-1] lies in P. The term
order is reverse lexicographic for the descending variable ranking by
(column height, column, level). Under revlex, of two squarefree
quadratics the one containing the overall smallest variable is the
smaller, which fixes each minor's leading term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConsistencyError, GroebnerUnverified
from .polyomino import Polyomino, heights, is_stack

Variable = tuple[int, int]
Monomial = tuple[Variable, ...]


def var_str(v: Variable) -> str:
    i, j = v
    if i <= 9 and j <= 9:
        return f"x{i}{j}"
    return f"x({i},{j})"


def mono_str(mono: Iterable[Variable]) -> str:
    return "".join(var_str(v) for v in sorted(mono))


class VarOrder:
    """A descending variable ranking inducing a revlex term order.

    advisory is set when the ranking was produced mechanically for a
    non-stack polyomino; such an order needs verify_groebner before the
    initial ideal may be trusted.
    """

    def __init__(self, ranked: Sequence[Variable], advisory: bool = False):
        self.ranked = tuple(ranked)
        self.advisory = advisory
        self._pos = {v: k for k, v in enumerate(self.ranked)}
        if len(self._pos) != len(self.ranked):
            raise ValueError("duplicate variable in order")

    def position(self, v: Variable) -> int:
        return self._pos[v]

    def greater(self, a: Variable, b: Variable) -> bool:
        return self._pos[a] < self._pos[b]

    def smallest(self) -> Variable:
        return self.ranked[-1]

    def revlex_less(self, a: Iterable[Variable], b: Iterable[Variable]) -> bool:
        """a < b in revlex; a and b are equal-degree variable multisets."""
        ca: dict[Variable, int] = {}
        cb: dict[Variable, int] = {}
        for v in a:
            ca[v] = ca.get(v, 0) + 1
        for v in b:
            cb[v] = cb.get(v, 0) + 1
        for v in reversed(self.ranked):
            ea = ca.get(v, 0)
            eb = cb.get(v, 0)
            if ea != eb:
                return ea > eb
        return False

    def __repr__(self):
        tag = ", advisory" if self.advisory else ""
        return f"VarOrder({' > '.join(var_str(v) for v in self.ranked)}{tag})"


def variable_order(p: Polyomino) -> VarOrder:
    """Ranking by descending (column height, column, level).

    Meaningful for convex polyominoes; for stacks the induced revlex
    order makes the inner minors a Groebner basis, for other convex
    shapes the order is advisory and must be verified.
    """
    hs = heights(p)
    ranked = sorted(p.vertices, key=lambda v: (-hs[v[0] - 1], -v[0], -v[1]))
    return VarOrder(ranked, advisory=not is_stack(p))


@dataclass(frozen=True)
class InnerMinor:
    """Corners (i, j) < (k, l) with every cell of the interval inside P."""

    i: int
    j: int
    k: int
    l: int

    @property
    def diagonal(self) -> frozenset[Variable]:
        return frozenset(((self.i, self.j), (self.k, self.l)))

    @property
    def antidiagonal(self) -> frozenset[Variable]:
        return frozenset(((self.i, self.l), (self.k, self.j)))

    @property
    def corners(self) -> tuple[Variable, Variable]:
        return (self.i, self.j), (self.k, self.l)

    def __str__(self):
        return f"{mono_str(self.antidiagonal)} - {mono_str(self.diagonal)}"


def inner_minors(p: Polyomino) -> list[InnerMinor]:
    """All inner minors, sorted by (k, l, i, j)."""
    out = []
    cells = p.cells
    for k in range(2, p.m + 1):
        for l in range(2, p.n + 1):
            for i in range(1, k):
                for j in range(1, l):
                    if all(
                        (c, r) in cells
                        for c in range(i, k)
                        for r in range(j, l)
                    ):
                        out.append(InnerMinor(i, j, k, l))
    return out


def leading_term(minor: InnerMinor, order: VarOrder) -> frozenset[Variable]:
    """The revlex-larger of the minor's two monomials."""
    if order.revlex_less(minor.antidiagonal, minor.diagonal):
        return minor.diagonal
    return minor.antidiagonal


def trailing_term(minor: InnerMinor, order: VarOrder) -> frozenset[Variable]:
    lead = leading_term(minor, order)
    return minor.diagonal if lead == minor.antidiagonal else minor.antidiagonal


@dataclass(frozen=True, eq=False)
class InitialIdeal:
    """Squarefree quadratic generators of in(I_P) plus the order used."""

    generators: frozenset[frozenset[Variable]]
    order: VarOrder
    minors: tuple[InnerMinor, ...]


def initial_ideal(p: Polyomino, order: VarOrder | None = None) -> InitialIdeal:
    """Leading terms of the inner minors, one per minor.

    For a stack with its height order this is the initial ideal outright;
    any advisory order is first run through verify_groebner.
    """
    if order is None:
        order = variable_order(p)
    if order.advisory and not verify_groebner(p, order):
        raise GroebnerUnverified(
            "inner minors are not a Groebner basis for the given order"
        )
    minors = tuple(inner_minors(p))
    terms = frozenset(leading_term(mn, order) for mn in minors)
    if len(terms) != len(minors):
        raise ConsistencyError("leading terms collide across minors")
    return InitialIdeal(terms, order, minors)


def _reduce(mono: Monomial, gens) -> Monomial:
    """First-match normal form of a variable multiset against (lead, trail) pairs."""
    current = list(mono)
    reduced = True
    while reduced:
        reduced = False
        for (u, v), (s, t) in gens:
            if u in current and v in current:
                current.remove(u)
                current.remove(v)
                current.append(s)
                current.append(t)
                reduced = True
                break
    return tuple(sorted(current))


def verify_groebner(p: Polyomino, order: VarOrder | None = None) -> bool:
    """Buchberger check that the inner minors form a Groebner basis.

    S-pairs with coprime leading terms are skipped; the rest stay
    binomial of degree three, and both sides are reduced monomial-wise
    to normal form. Sound and complete for the yes/no verdict.
    """
    if order is None:
        order = variable_order(p)
    minors = inner_minors(p)
    gens = []
    for mn in minors:
        lead = tuple(sorted(leading_term(mn, order)))
        trail = tuple(sorted(trailing_term(mn, order)))
        gens.append((lead, trail))
    for a in range(len(gens)):
        la = frozenset(gens[a][0])
        for b in range(a + 1, len(gens)):
            lb = frozenset(gens[b][0])
            shared = la & lb
            if not shared:
                continue
            lcm = sorted(la | lb)
            one = _spoly_side(lcm, gens[a])
            two = _spoly_side(lcm, gens[b])
            if _reduce(one, gens) != _reduce(two, gens):
                return False
    return True


def _spoly_side(lcm: list[Variable], gen) -> Monomial:
    lead, trail = gen
    rest = list(lcm)
    for v in lead:
        rest.remove(v)
    return tuple(sorted(rest + list(trail)))
