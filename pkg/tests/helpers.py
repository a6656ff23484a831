"""Small constructors and hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from specgraph import make_context, make_ideal, make_prime, parse_ideal_expression


def ctx_of(names):
    return make_context(list(names))


def ideal(ctx, expr):
    return make_ideal(ctx, parse_ideal_expression(expr, ctx))


def prime(ctx, names):
    return make_prime(ctx, list(names))


def masks_of(primes):
    return [p.mask for p in primes]


@st.composite
def ideals(draw, min_n=1, max_n=8, max_gens=8, allow_zero=False):
    """A random proper squarefree ideal over ``x1..xn``."""
    n = draw(st.integers(min_n, max_n))
    ctx = make_context([f"x{i}" for i in range(1, n + 1)])
    full = (1 << n) - 1
    lo = 0 if allow_zero else 1
    gens = draw(st.lists(st.integers(1, full), min_size=lo, max_size=max_gens))
    return make_ideal(ctx, gens)


@st.composite
def ideal_pairs(draw, max_n=8, max_gens=6):
    """Two proper ideals in one context."""
    I = draw(ideals(max_n=max_n, max_gens=max_gens))
    full = I.ctx.full_mask
    gens = draw(st.lists(st.integers(1, full), min_size=0, max_size=max_gens))
    return I, make_ideal(I.ctx, gens)
