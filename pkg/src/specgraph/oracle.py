"""Brute-force reference answers obtained by enumerating every monomial prime.

Nothing here calls into the transversal or graph code; the only shared logic
is the containment test ``contained_in_prime`` from the ideal core.  Every
function visits all ``2**n`` variable subsets and refuses ``n > ORACLE_MAX_N``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import CapacityError, DomainError
from .ideal import MonomialPrime, SquarefreeIdeal, VariableContext, contained_in_prime

ORACLE_MAX_N = 14


@dataclass(frozen=True)
class PrimeEnumeration:
    """All monomial primes of a context, in increasing mask order."""

    ctx: VariableContext

    def __post_init__(self) -> None:
        _guard(self.ctx)

    def __iter__(self) -> Iterator[MonomialPrime]:
        for mask in range(1 << self.ctx.n):
            yield MonomialPrime(self.ctx, mask)

    def __len__(self) -> int:
        return 1 << self.ctx.n


def _guard(ctx: VariableContext) -> None:
    if ctx.n > ORACLE_MAX_N:
        raise CapacityError(f"oracle enumeration limited to n <= {ORACLE_MAX_N}, got n={ctx.n}")


def _size(mask: int) -> int:
    return bin(mask).count("1")


def _containing(I: SquarefreeIdeal) -> list[int]:
    return [P.mask for P in PrimeEnumeration(I.ctx) if contained_in_prime(I, P)]


def oracle_minimal_primes(I: SquarefreeIdeal) -> list[MonomialPrime]:
    """Monomial primes over ``I`` none of whose one-smaller subsets is over ``I``."""
    _guard(I.ctx)
    if I.is_unit:
        raise DomainError("the unit ideal has no minimal primes")
    over = set(_containing(I))
    minimal = [
        m for m in over if not any(m & ~(1 << i) in over for i in range(I.ctx.n) if m >> i & 1)
    ]
    return [MonomialPrime(I.ctx, m) for m in sorted(minimal, key=_indices)]


def _indices(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def oracle_top_components(I: SquarefreeIdeal) -> list[MonomialPrime]:
    primes = oracle_minimal_primes(I)
    c = min(_size(p.mask) for p in primes)
    return [p for p in primes if _size(p.mask) == c]


def oracle_edge_def51(
    J: SquarefreeIdeal, I: SquarefreeIdeal, p: MonomialPrime, q: MonomialPrime
) -> bool:
    """Is some monomial prime containing ``p + q`` outside ``V(I)``?"""
    _guard(I.ctx)
    if p.mask == q.mask:
        raise DomainError("edge query needs two distinct vertices")
    for P in (p, q):
        if not contained_in_prime(J, P) or contained_in_prime(I, P):
            raise DomainError(f"{P} is not a vertex: it must contain J and miss V(I)")
    base = p.mask | q.mask
    return any(
        not contained_in_prime(I, P) for P in PrimeEnumeration(I.ctx) if P.mask & base == base
    )


def oracle_height_in_quotient(J: SquarefreeIdeal, P: MonomialPrime) -> int:
    """Longest strictly increasing chain of monomial primes over ``J`` ending at ``P``."""
    _guard(J.ctx)
    if not contained_in_prime(J, P):
        raise DomainError(f"{P} does not contain {J}")
    n = J.ctx.n
    # chain[S] = longest chain of primes over J that ends in S, for S inside P
    chain: dict[int, int] = {}
    for S in sorted((m for m in range(1 << n) if m & P.mask == m), key=_size):
        if not contained_in_prime(J, MonomialPrime(J.ctx, S)):
            continue
        below = [chain[S & ~(1 << i)] + 1 for i in range(n) if S >> i & 1 and S & ~(1 << i) in chain]
        chain[S] = max(below, default=0)
    return chain[P.mask]


def oracle_graph_def51(J: SquarefreeIdeal, I: SquarefreeIdeal) -> tuple[list[int], set[frozenset[int]]]:
    """Vertex masks and edge set of the ideal-transform graph, by enumeration."""
    vertices = [p for p in oracle_minimal_primes(J) if not contained_in_prime(I, p)]
    edges = {
        frozenset((p.mask, q.mask))
        for p, q in combinations(vertices, 2)
        if oracle_edge_def51(J, I, p, q)
    }
    return [p.mask for p in vertices], edges


def oracle_graph_def61(J: SquarefreeIdeal) -> tuple[list[int], set[frozenset[int]]]:
    """Vertex masks and edge set of the codimension-one graph, by enumeration."""
    vertices = oracle_top_components(J)
    edges = {
        frozenset((p.mask, q.mask))
        for p, q in combinations(vertices, 2)
        if oracle_height_in_quotient(J, MonomialPrime(J.ctx, p.mask | q.mask)) == 1
    }
    return [p.mask for p in vertices], edges


def oracle_punctured_components(I: SquarefreeIdeal) -> int | str:
    """Components of the comparability graph on primes over ``I`` other than the maximal ideal.

    Two comparable primes over ``I`` are linked by a chain of single-variable
    steps that stays over ``I`` and below the larger one, so covering steps
    give the same components as full comparability.  Returns ``"empty"`` when
    no such prime exists.
    """
    _guard(I.ctx)
    full = I.ctx.full_mask
    nodes = {m for m in _containing(I) if m != full}
    if not nodes:
        return "empty"
    seen: set[int] = set()
    count = 0
    for start in sorted(nodes):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            m = queue.popleft()
            for i in range(I.ctx.n):
                other = m ^ (1 << i)
                if other in nodes and other not in seen:
                    seen.add(other)
                    queue.append(other)
    return count


def oracle_separated(I: SquarefreeIdeal, U: SquarefreeIdeal, V: SquarefreeIdeal) -> bool:
    """Does every monomial prime containing ``U + V`` also contain ``I``?"""
    _guard(I.ctx)
    return all(
        contained_in_prime(I, P)
        for P in PrimeEnumeration(I.ctx)
        if contained_in_prime(U, P) and contained_in_prime(V, P)
    )


def oracle_is_member(I: SquarefreeIdeal, support: int) -> bool:
    """Membership of a squarefree monomial: some generator divides it."""
    if I.is_unit:
        return True
    return any(g & support == g for g in I.gens)
