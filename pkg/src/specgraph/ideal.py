"""Squarefree monomial ideals and monomial primes over k[x_1..x_n].

Variable subsets are stored as integer bitmasks: bit ``i`` set means the
variable ``names[i]`` occurs.  A squarefree monomial ideal is determined by
the antichain of supports of its minimal generators, and since such ideals are
radical, equality of ideals is equality of these antichains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import CapacityError, InputError

MAX_VARIABLES = 64

Support = Union[int, Iterable[Union[int, str]]]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key ordering subsets lexicographically by their sorted index tuples."""
    return tuple(bits(mask))


def minimalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal elements of ``masks``, sorted by :func:`lex_key`."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lex_key))


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names of the ambient polynomial ring."""

    names: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def mask(self, support: Support) -> int:
        """Bitmask of a support given as a mask, indices or variable names."""
        if isinstance(support, int):
            if support < 0 or support >> self.n:
                raise InputError(f"support mask {support} out of range for n={self.n}")
            return support
        if isinstance(support, str):
            support = [support]
        m = 0
        for v in support:
            if isinstance(v, str):
                i = self.index(v)
            elif isinstance(v, int) and not isinstance(v, bool):
                if not 0 <= v < self.n:
                    raise InputError(f"variable index {v} out of range for n={self.n}")
                i = v
            else:
                raise InputError(f"invalid variable reference {v!r}")
            m |= 1 << i
        return m

    def support_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def format_monomial(self, mask: int) -> str:
        return "*".join(self.support_names(mask)) if mask else "1"


def make_context(names: Sequence[str]) -> VariableContext:
    names = list(names)
    if not names:
        raise InputError("at least one variable is required")
    for name in names:
        if not isinstance(name, str) or not name:
            raise InputError(f"variable names must be nonempty strings, got {name!r}")
    if len(set(names)) != len(names):
        dupes = sorted({x for x in names if names.count(x) > 1})
        raise InputError(f"duplicate variable names: {', '.join(dupes)}")
    if len(names) > MAX_VARIABLES:
        raise CapacityError(f"{len(names)} variables exceeds the limit of {MAX_VARIABLES}")
    return VariableContext(tuple(names))


@dataclass(frozen=True, order=False)
class MonomialPrime:
    """The prime ideal generated by a subset of the variables."""

    ctx: VariableContext = field(repr=False)
    mask: int

    @property
    def vars(self) -> tuple[int, ...]:
        return lex_key(self.mask)

    @property
    def height(self) -> int:
        return popcount(self.mask)

    @property
    def is_maximal(self) -> bool:
        return self.mask == self.ctx.full_mask

    def as_ideal(self) -> SquarefreeIdeal:
        return SquarefreeIdeal(self.ctx, tuple(1 << i for i in bits(self.mask)))

    def union(self, other: MonomialPrime) -> MonomialPrime:
        _check_same(self.ctx, other.ctx)
        return MonomialPrime(self.ctx, self.mask | other.mask)

    def sort_key(self) -> tuple[int, ...]:
        return lex_key(self.mask)

    def __str__(self) -> str:
        if not self.mask:
            return "(0)"
        return "(" + ", ".join(self.ctx.support_names(self.mask)) + ")"

    def __repr__(self) -> str:
        return f"MonomialPrime({str(self)!r})"


def make_prime(ctx: VariableContext, support: Support) -> MonomialPrime:
    return MonomialPrime(ctx, ctx.mask(support))


@dataclass(frozen=True)
class SquarefreeIdeal:
    """A squarefree monomial ideal, stored as its antichain of generator supports.

    Build instances with :func:`make_ideal`; the constructor does not normalize.
    The zero ideal has no generators; the unit ideal is flagged by ``is_unit``.
    """

    ctx: VariableContext = field(repr=False)
    gens: tuple[int, ...]
    is_unit: bool = False

    @property
    def is_zero(self) -> bool:
        return not self.is_unit and not self.gens

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def supports(self) -> list[tuple[int, ...]]:
        return [lex_key(g) for g in self.gens]

    def contains_monomial(self, support: Support) -> bool:
        """Membership of the squarefree monomial with the given support."""
        if self.is_unit:
            return True
        m = self.ctx.mask(support)
        return any(g & m == g for g in self.gens)

    def __add__(self, other: SquarefreeIdeal) -> SquarefreeIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: SquarefreeIdeal) -> SquarefreeIdeal:
        return intersect(self, other)

    def __str__(self) -> str:
        if self.is_unit:
            return "(1)"
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(self.ctx.format_monomial(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"SquarefreeIdeal({str(self)!r})"


def zero_ideal(ctx: VariableContext) -> SquarefreeIdeal:
    return SquarefreeIdeal(ctx, ())


def unit_ideal(ctx: VariableContext) -> SquarefreeIdeal:
    return SquarefreeIdeal(ctx, (), is_unit=True)


def _from_masks(ctx: VariableContext, masks: Iterable[int]) -> SquarefreeIdeal:
    gens = minimalize(masks)
    if gens and gens[0] == 0:
        return unit_ideal(ctx)
    return SquarefreeIdeal(ctx, gens)


def make_ideal(ctx: VariableContext, supports: Iterable[Support]) -> SquarefreeIdeal:
    """Normalize generator supports into an antichain of minimal supports.

    An empty list gives the zero ideal; an empty support gives the unit ideal.
    """
    return _from_masks(ctx, [ctx.mask(s) for s in supports])


def _check_same(a: VariableContext, b: VariableContext) -> None:
    if a != b:
        raise InputError("operands live in different variable contexts")


def ideal_sum(I: SquarefreeIdeal, J: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_same(I.ctx, J.ctx)
    if I.is_unit or J.is_unit:
        return unit_ideal(I.ctx)
    return _from_masks(I.ctx, I.gens + J.gens)


def intersect(I: SquarefreeIdeal, J: SquarefreeIdeal) -> SquarefreeIdeal:
    _check_same(I.ctx, J.ctx)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    return _from_masks(I.ctx, (g | h for g in I.gens for h in J.gens))


def intersect_primes(
    primes: Iterable[MonomialPrime], ctx: VariableContext | None = None
) -> SquarefreeIdeal:
    """Intersection of monomial primes; the empty family gives the unit ideal."""
    primes = list(primes)
    if not primes:
        if ctx is None:
            raise InputError("an empty family of primes needs an explicit context")
        return unit_ideal(ctx)
    ctx = ctx or primes[0].ctx
    for p in primes:
        _check_same(ctx, p.ctx)
    return reduce(intersect, (p.as_ideal() for p in primes), unit_ideal(ctx))


def contained_in_prime(I: SquarefreeIdeal, P: MonomialPrime) -> bool:
    """Whether ``I`` lies in the monomial prime ``P``, i.e. ``P`` is a transversal."""
    _check_same(I.ctx, P.ctx)
    if I.is_unit:
        return False
    return all(g & P.mask for g in I.gens)


def equals(I: SquarefreeIdeal, J: SquarefreeIdeal) -> bool:
    _check_same(I.ctx, J.ctx)
    return I == J
