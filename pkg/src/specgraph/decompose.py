"""Minimal primes, heights and the derived ideals of a squarefree monomial ideal.

Squarefree monomial ideals are radical, so the reduced primary decomposition is
the decomposition into minimal primes, and those are exactly the minimal
transversals (vertex covers) of the hypergraph of generator supports.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError
from .ideal import (
    MonomialPrime,
    SquarefreeIdeal,
    bits,
    contained_in_prime,
    ideal_sum,
    intersect_primes,
    lex_key,
    make_ideal,
    minimalize,
    popcount,
)


def minimal_transversals(edges: Iterable[int]) -> tuple[int, ...]:
    """All inclusion-minimal sets meeting every edge (Berge multiplication).

    Edges are folded in one at a time, smallest first, keeping the antichain of
    minimal transversals of the edges seen so far.  No edges gives ``(0,)``.
    """
    transversals = [0]
    for edge in sorted(set(edges), key=lambda e: (popcount(e), lex_key(e))):
        if edge == 0:
            return ()
        hit = [t for t in transversals if t & edge]
        missed = [t for t in transversals if not t & edge]
        if not missed:
            continue
        grown = [t | (1 << v) for t in missed for v in bits(edge)]
        # partial transversals that already hit the edge absorb their supersets
        grown = [g for g in grown if not any(h & g == h for h in hit)]
        transversals = hit + list(minimalize(grown))
    return tuple(sorted(transversals, key=lex_key))


@lru_cache(maxsize=4096)
def _minimal_prime_masks(I: SquarefreeIdeal) -> tuple[int, ...]:
    if I.is_unit:
        raise DomainError("the unit ideal has no minimal primes")
    return minimal_transversals(I.gens)


def minimal_primes(I: SquarefreeIdeal) -> list[MonomialPrime]:
    return [MonomialPrime(I.ctx, m) for m in _minimal_prime_masks(I)]


def height(I: SquarefreeIdeal) -> int:
    return min(popcount(m) for m in _minimal_prime_masks(I))


def dim_quotient(I: SquarefreeIdeal) -> int:
    """Krull dimension of ``R/I``."""
    return I.ctx.n - height(I)


def top_components(I: SquarefreeIdeal) -> list[MonomialPrime]:
    c = height(I)
    return [p for p in minimal_primes(I) if p.height == c]


def lower_components(I: SquarefreeIdeal) -> list[MonomialPrime]:
    c = height(I)
    return [p for p in minimal_primes(I) if p.height > c]


def ideal_top(I: SquarefreeIdeal) -> SquarefreeIdeal:
    """Intersection of the top-dimensional components of ``I``."""
    return intersect_primes(top_components(I), I.ctx)


def lower_part(I: SquarefreeIdeal) -> SquarefreeIdeal:
    """Intersection of the components of dimension below ``dim R/I``; unit if unmixed."""
    return intersect_primes(lower_components(I), I.ctx)


def is_unmixed(I: SquarefreeIdeal) -> bool:
    return not lower_components(I)


@dataclass(frozen=True)
class ReductionCheck:
    ht_lower_ok: bool
    ht_sum_ok: bool
    c: int


def reduction_assertions(I: SquarefreeIdeal) -> ReductionCheck:
    """Height bounds that make ``H^c_I(R)`` and ``H^c_{I_d}(R)`` agree.

    With ``J`` the lower-dimensional part, ``ht J >= c+1`` and
    ``ht(I_d + J) >= c+2`` must hold; a failure means a bug here, not a
    mathematical outcome.
    """
    if I.is_unit:
        raise DomainError("the unit ideal has no decomposition")
    lower = lower_part(I)
    if lower.is_unit:
        raise DomainError("no reduction needed: the ideal is unmixed")
    c = height(I)
    return ReductionCheck(
        ht_lower_ok=height(lower) >= c + 1,
        ht_sum_ok=height(ideal_sum(ideal_top(I), lower)) >= c + 2,
        c=c,
    )


def ext_height_mod_prime(I: SquarefreeIdeal, p: MonomialPrime) -> int:
    """Height of ``(I + p)/p`` in the polynomial ring on the variables outside ``p``.

    Generators meeting ``p`` vanish modulo ``p``; if none survive the image is
    zero and the height is 0.
    """
    if I.is_unit:
        raise DomainError("the unit ideal is not proper")
    surviving = [g for g in I.gens if not g & p.mask]
    return height(make_ideal(I.ctx, surviving))


def u_ideal(J: SquarefreeIdeal, I: SquarefreeIdeal) -> SquarefreeIdeal:
    """Intersection of the components ``p`` of ``J`` with ``dim R/(I + p) > 0``.

    This represents ``u_A(I)`` for ``A = R/J``; an empty family yields the unit
    ideal, i.e. ``u = A``.
    """
    if I.is_unit:
        raise DomainError("I must be proper")
    kept = [p for p in minimal_primes(J) if dim_quotient(ideal_sum(I, p.as_ideal())) > 0]
    return intersect_primes(kept, J.ctx)


@dataclass(frozen=True)
class Decomposition:
    ideal: SquarefreeIdeal
    min_primes: tuple[MonomialPrime, ...]
    height_c: int
    dim_d: int

    @property
    def top(self) -> tuple[MonomialPrime, ...]:
        return tuple(p for p in self.min_primes if p.height == self.height_c)

    @property
    def unmixed(self) -> bool:
        return all(p.height == self.height_c for p in self.min_primes)

    def check(self) -> None:
        """Re-validate the minimal-transversal invariants."""
        I = self.ideal
        for p in self.min_primes:
            if not contained_in_prime(I, p):
                raise AssertionError(f"{p} does not contain {I}")
            for v in bits(p.mask):
                if contained_in_prime(I, MonomialPrime(I.ctx, p.mask & ~(1 << v))):
                    raise AssertionError(f"{p} is not minimal over {I}")


def decompose(I: SquarefreeIdeal) -> Decomposition:
    primes = tuple(minimal_primes(I))
    c = min(p.height for p in primes)
    return Decomposition(I, primes, c, I.ctx.n - c)

