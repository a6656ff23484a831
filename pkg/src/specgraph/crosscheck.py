"""Compare the main computations against the brute-force oracle."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations

from . import oracle
from .decompose import ideal_top, is_unmixed, minimal_primes, reduction_assertions
from .graphs import connectivity, graph_def51, graph_def61, graph_punctured, height_in_quotient
from .ideal import (
    MonomialPrime,
    SquarefreeIdeal,
    VariableContext,
    intersect_primes,
    make_context,
    make_ideal,
    zero_ideal,
)

DEFAULT_SEED = 20240601
SEPARATION_MAX_N = 8


def seed_from_env(default: int = DEFAULT_SEED) -> int:
    raw = os.environ.get("SPECGRAPH_SEED")
    return int(raw) if raw else default


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _masks(primes) -> list[int]:
    return [p.mask for p in primes]


def check_minimal_primes(I: SquarefreeIdeal, label: str = "I") -> Check:
    main = _masks(minimal_primes(I))
    ref = _masks(oracle.oracle_minimal_primes(I))
    return Check(f"minimal_primes({label})", main == ref, "" if main == ref else f"{main} != {ref}")


def check_def61(J: SquarefreeIdeal, label: str = "I") -> Check:
    g = graph_def61(J)
    verts, edges = oracle.oracle_graph_def61(J)
    ok = set(g.vertex_masks()) == set(verts) and g.edge_masks() == edges
    return Check(f"def61_graph({label})", ok)


def check_def51(J: SquarefreeIdeal, I: SquarefreeIdeal) -> Check:
    g = graph_def51(J, I)
    verts, edges = oracle.oracle_graph_def51(J, I)
    ok = set(g.vertex_masks()) == set(verts) and g.edge_masks() == edges
    return Check("def51_graph(J, I)", ok)


def check_heights(J: SquarefreeIdeal, label: str = "I") -> Check:
    """height_in_quotient against chain enumeration on pairwise unions, minimal primes and m."""
    ctx = J.ctx
    primes = minimal_primes(J)
    targets = {p.mask for p in primes} | {p.mask | q.mask for p, q in combinations(primes, 2)}
    targets.add(ctx.full_mask)
    bad = []
    for mask in sorted(targets):
        P = MonomialPrime(ctx, mask)
        if height_in_quotient(J, P) != oracle.oracle_height_in_quotient(J, P):
            bad.append(str(P))
    return Check(f"height_in_quotient({label})", not bad, ", ".join(bad))


def check_punctured(I: SquarefreeIdeal) -> Check:
    cert = connectivity(graph_punctured(I))
    main = "empty" if not cert.components else len(cert.components)
    ref = oracle.oracle_punctured_components(I)
    return Check("punctured_components(I)", main == ref, "" if main == ref else f"{main} != {ref}")


def check_top_invariance(I: SquarefreeIdeal) -> Check:
    a, b = graph_def61(I), graph_def61(ideal_top(I))
    ok = a.vertex_masks() == b.vertex_masks() and a.edge_masks() == b.edge_masks()
    if ok and not is_unmixed(I):
        r = reduction_assertions(I)
        ok = r.ht_lower_ok and r.ht_sum_ok
    return Check("I_d_invariance(I)", ok)


def check_separation(J: SquarefreeIdeal, I: SquarefreeIdeal) -> Check:
    g = graph_def51(J, I)
    cert = connectivity(g)
    U = [intersect_primes([g.vertices[i] for i in comp], g.ctx) for comp in cert.components]
    bad = [(str(a), str(b)) for a, b in combinations(U, 2) if not oracle.oracle_separated(I, a, b)]
    return Check("component_separation(J, I)", not bad, str(bad) if bad else "")


def cross_check(I: SquarefreeIdeal, J: SquarefreeIdeal | None = None) -> list[Check]:
    """Every oracle comparison applicable to ``I`` (and ``J``)."""
    J0 = zero_ideal(I.ctx) if J is None else J
    checks = [check_minimal_primes(I), check_punctured(I)]
    if not I.is_zero and not I.is_unit:
        checks += [check_def61(I), check_heights(I), check_top_invariance(I)]
    if J is not None and not J.is_unit:
        checks += [check_minimal_primes(J, "J"), check_def61(J, "J"), check_heights(J, "J")]
    if not I.is_unit and not J0.is_unit:
        checks.append(check_def51(J0, I))
        if I.ctx.n <= SEPARATION_MAX_N:
            checks.append(check_separation(J0, I))
    return checks


def random_ideal(
    rng: random.Random, ctx: VariableContext, max_gens: int = 12, max_support: int | None = None
) -> SquarefreeIdeal:
    """A random nonzero proper squarefree ideal with at most ``max_gens`` generators."""
    n = ctx.n
    max_support = max_support or n
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        size = rng.randint(1, min(max_support, n))
        gens.append(rng.sample(range(n), size))
    return make_ideal(ctx, gens)


def random_context(rng: random.Random, lo: int = 3, hi: int = 10) -> VariableContext:
    return make_context([f"x{i}" for i in range(1, rng.randint(lo, hi) + 1)])


def random_mixed_ideal(rng: random.Random, ctx: VariableContext) -> SquarefreeIdeal:
    """Intersection of random monomial primes of at least two distinct heights."""
    n = ctx.n
    while True:
        k = rng.randint(2, 5)
        primes = [MonomialPrime(ctx, _random_mask(rng, n, rng.randint(1, n - 1))) for _ in range(k)]
        I = intersect_primes(primes, ctx)
        if not is_unmixed(I):
            return I


def _random_mask(rng: random.Random, n: int, size: int) -> int:
    m = 0
    for i in rng.sample(range(n), size):
        m |= 1 << i
    return m


def random_pure_complex_facets(rng: random.Random, n: int) -> list[int]:
    dim = rng.randint(1, n - 1)
    count = rng.randint(1, 6)
    return list({_random_mask(rng, n, dim) for _ in range(count)})
