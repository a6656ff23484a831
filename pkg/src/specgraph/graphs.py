"""Prime graphs of squarefree monomial ideals and their connectivity certificates.

Three graphs are built on monomial primes:

* ``DEF51``: minimal primes of ``A = R/J`` outside ``V(I)``, joined when some
  prime outside ``V(I)`` contains both.  The sum ``p + q`` of monomial primes
  has radical equal to the monomial prime on ``p | q``, so the existential test
  over all primes reduces to checking that one prime.
* ``DEF61``: top-dimensional minimal primes of ``A``, joined when ``p + q`` has
  height one in ``A`` ("connected in codimension one").
* ``PUNCTURED``: minimal primes of ``I`` other than the maximal ideal, joined
  when ``p | q`` is not the full variable set, so ``V(p)`` and ``V(q)`` meet
  away from the closed point.

``FACET_RIDGE`` is the facet-ridge graph of a simplicial complex, used as an
independent cross-check through the Stanley-Reisner correspondence.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .decompose import height, minimal_primes, minimal_transversals, top_components
from .errors import DomainError, InputError, InvariantError
from .ideal import (
    MonomialPrime,
    SquarefreeIdeal,
    VariableContext,
    contained_in_prime,
    lex_key,
    make_ideal,
    popcount,
    zero_ideal,
)


class GraphKind(str, enum.Enum):
    DEF51 = "def51"
    DEF61 = "def61"
    PUNCTURED = "punctured"
    FACET_RIDGE = "facet-ridge"


class Connectivity(str, enum.Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"
    EMPTY = "empty"


@dataclass(frozen=True)
class PrimeGraph:
    kind: GraphKind
    ctx: VariableContext
    vertices: tuple[MonomialPrime, ...]
    edges: tuple[tuple[int, int], ...]
    J: SquarefreeIdeal | None = None
    I: SquarefreeIdeal | None = None

    def __post_init__(self) -> None:
        nv = len(self.vertices)
        for a, b in self.edges:
            if not (0 <= a < b < nv):
                raise InvariantError(f"bad edge ({a}, {b}) in graph with {nv} vertices")

    @property
    def n(self) -> int:
        return self.ctx.n

    def vertex_masks(self) -> tuple[int, ...]:
        return tuple(v.mask for v in self.vertices)

    def edge_masks(self) -> set[frozenset[int]]:
        """Edges as unordered pairs of vertex masks, independent of vertex order."""
        return {frozenset((self.vertices[a].mask, self.vertices[b].mask)) for a, b in self.edges}

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def _build(kind, ctx, vertex_masks, edge_rule, J=None, I=None) -> PrimeGraph:
    masks = sorted(vertex_masks, key=lex_key)
    edges = tuple(
        (a, b) for a, b in combinations(range(len(masks)), 2) if edge_rule(masks[a], masks[b])
    )
    vertices = tuple(MonomialPrime(ctx, m) for m in masks)
    return PrimeGraph(kind, ctx, vertices, edges, J, I)


def graph_def51(J: SquarefreeIdeal, I: SquarefreeIdeal) -> PrimeGraph:
    """Graph of minimal primes of ``R/J`` not containing ``I``."""
    if J.ctx != I.ctx:
        raise InputError("J and I live in different variable contexts")
    if I.is_unit:
        raise DomainError("I must be a proper ideal")
    ctx = I.ctx
    vertices = [p.mask for p in minimal_primes(J) if not contained_in_prime(I, p)]

    def joined(p: int, q: int) -> bool:
        return not contained_in_prime(I, MonomialPrime(ctx, p | q))

    return _build(GraphKind.DEF51, ctx, vertices, joined, J, I)


def height_in_quotient(J: SquarefreeIdeal, P: MonomialPrime) -> int:
    """Height of ``P/J`` in ``R/J``: ``|P|`` minus the smallest minimal prime of ``J`` inside ``P``."""
    if not contained_in_prime(J, P):
        raise DomainError(f"{P} does not contain {J}")
    inside = [r.height for r in minimal_primes(J) if r.mask & P.mask == r.mask]
    return P.height - min(inside)


def graph_def61(J: SquarefreeIdeal) -> PrimeGraph:
    """Top-dimensional minimal primes of ``R/J``, joined through height-one sums."""
    ctx = J.ctx
    c = height(J)

    def joined(p: int, q: int) -> bool:
        by_height = height_in_quotient(J, MonomialPrime(ctx, p | q)) == 1
        by_count = popcount(p | q) == c + 1
        if by_height != by_count:
            raise InvariantError(
                f"height criterion and cardinality criterion disagree on {p:#x}, {q:#x}"
            )
        return by_height

    return _build(GraphKind.DEF61, ctx, [p.mask for p in top_components(J)], joined, J)


def graph_punctured(I: SquarefreeIdeal) -> PrimeGraph:
    """Irreducible pieces of ``V(I)`` minus the maximal ideal, joined when they meet."""
    ctx = I.ctx
    full = ctx.full_mask
    vertices = [p.mask for p in minimal_primes(I) if p.mask != full]
    return _build(GraphKind.PUNCTURED, ctx, vertices, lambda p, q: (p | q) != full, I=I)


@dataclass(frozen=True)
class ConnectivityCertificate:
    """Components plus a witness: a spanning tree, or a crossing-free bipartition."""

    status: Connectivity
    components: tuple[tuple[int, ...], ...]
    spanning_tree: tuple[tuple[int, int], ...] | None = None
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def connected(self) -> bool:
        return self.status is Connectivity.CONNECTED

    def validate(self, graph: PrimeGraph) -> bool:
        nv = len(graph.vertices)
        edges = set(graph.edges)
        covered = sorted(i for comp in self.components for i in comp)
        if covered != list(range(nv)):
            return False
        if self.status is Connectivity.EMPTY:
            return nv == 0
        if self.status is Connectivity.CONNECTED:
            tree = self.spanning_tree or ()
            if len(self.components) != 1 or len(tree) != nv - 1:
                return False
            if any(tuple(sorted(e)) not in edges for e in tree):
                return False
            # nv - 1 graph edges reaching every vertex form a spanning tree
            return len(_components(nv, tree)) == 1
        if self.bipartition is None or len(self.components) < 2:
            return False
        side_a, side_b = self.bipartition
        if not side_a or not side_b or sorted(side_a + side_b) != covered:
            return False
        a = set(side_a)
        return not any((x in a) != (y in a) for x, y in graph.edges)


def _components(nv: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(nv)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * nv
    comps = []
    for start in range(nv):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def connectivity(graph: PrimeGraph) -> ConnectivityCertificate:
    nv = len(graph.vertices)
    if nv == 0:
        return ConnectivityCertificate(Connectivity.EMPTY, ())
    adj = graph.adjacency()
    seen = [False] * nv
    comps: list[tuple[int, ...]] = []
    tree: list[tuple[int, int]] = []
    for start in range(nv):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    tree.append((min(v, w), max(v, w)))
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    if len(comps) == 1:
        return ConnectivityCertificate(Connectivity.CONNECTED, tuple(comps), tuple(tree))
    rest = tuple(sorted(i for comp in comps[1:] for i in comp))
    return ConnectivityCertificate(
        Connectivity.DISCONNECTED, tuple(comps), bipartition=(comps[0], rest)
    )


@dataclass(frozen=True)
class SimplicialComplex:
    ctx: VariableContext
    facets: tuple[int, ...]

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) == 1

    @property
    def dimension(self) -> int:
        return max(popcount(f) for f in self.facets) - 1


def make_complex(ctx: VariableContext, facets: Sequence) -> SimplicialComplex:
    """Complex generated by ``facets``; non-maximal entries are dropped."""
    masks = {ctx.mask(f) for f in facets}
    if not masks:
        raise InputError("a simplicial complex needs at least one facet")
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    return SimplicialComplex(ctx, tuple(sorted(maximal, key=lex_key)))


def stanley_reisner(ctx: VariableContext, delta: SimplicialComplex) -> SquarefreeIdeal:
    """Ideal generated by the minimal non-faces of ``delta``.

    A set is a non-face exactly when it meets the complement of every facet, so
    the minimal non-faces are the minimal transversals of the complements.
    """
    if delta.ctx != ctx:
        raise InputError("complex and context differ")
    if not delta.facets:
        raise InputError("a simplicial complex needs at least one facet")
    complements = [ctx.full_mask & ~f for f in delta.facets]
    if 0 in complements:
        return zero_ideal(ctx)
    return make_ideal(ctx, minimal_transversals(complements))


def facet_ridge_graph(delta: SimplicialComplex) -> PrimeGraph:
    """Maximum-size facets, adjacent when they share a ridge (codimension-one face)."""
    if not delta.facets:
        raise InputError("a simplicial complex needs at least one facet")
    top = max(popcount(f) for f in delta.facets)
    vertices = [f for f in delta.facets if popcount(f) == top]
    return _build(
        GraphKind.FACET_RIDGE,
        delta.ctx,
        vertices,
        lambda f, g: popcount(f & g) == top - 1,
    )


def complement_map(graph: PrimeGraph) -> dict[int, int]:
    full = graph.ctx.full_mask
    return {v.mask: full & ~v.mask for v in graph.vertices}


__all__ = [
    "Connectivity",
    "ConnectivityCertificate",
    "GraphKind",
    "PrimeGraph",
    "SimplicialComplex",
    "complement_map",
    "connectivity",
    "facet_ridge_graph",
    "graph_def51",
    "graph_def61",
    "graph_punctured",
    "height_in_quotient",
    "make_complex",
    "stanley_reisner",
]
