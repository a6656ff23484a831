import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import ctx_of, ideal, ideals, prime
from specgraph import (
    Connectivity,
    DomainError,
    GraphKind,
    InputError,
    MonomialPrime,
    PrimeGraph,
    connectivity,
    facet_ridge_graph,
    graph_def51,
    graph_def61,
    graph_punctured,
    height,
    height_in_quotient,
    ideal_sum,
    ideal_top,
    make_complex,
    make_ideal,
    minimal_primes,
    stanley_reisner,
    unit_ideal,
    zero_ideal,
)
from specgraph import oracle
from specgraph.crosscheck import random_pure_complex_facets

C4 = ctx_of("xyzw")
C3 = ctx_of("xyz")
C2 = ctx_of("xy")
CONE = ideal(C4, "(x*z, x*w, y*z, y*w)")


def verts(g):
    return [str(v) for v in g.vertices]


def test_def51_examples():
    g = graph_def51(ideal(C2, "(x*y)"), ideal(C2, "(x, y)"))
    assert verts(g) == ["(x)", "(y)"] and g.edges == ()
    assert not oracle.oracle_edge_def51(g.J, g.I, *g.vertices)

    g = graph_def51(zero_ideal(C2), ideal(C2, "(x)"))
    assert verts(g) == ["(0)"] and connectivity(g).connected

    g = graph_def51(ideal(C3, "(x*z)"), ideal(C3, "(z)"))
    assert verts(g) == ["(x)"] and connectivity(g).connected

    with pytest.raises(DomainError):
        graph_def51(zero_ideal(C2), unit_ideal(C2))


def test_def51_edge_exists_when_some_prime_avoids_I():
    g = graph_def51(ideal(C4, "(x*z)"), ideal(C4, "(w)"))
    assert verts(g) == ["(x)", "(z)"]
    assert g.edges == ((0, 1),)
    assert oracle.oracle_edge_def51(g.J, g.I, *g.vertices)


def test_def61_examples():
    g = graph_def61(CONE)
    assert verts(g) == ["(x, y)", "(z, w)"] and g.edges == ()
    assert connectivity(g).status is Connectivity.DISCONNECTED

    g = graph_def61(ideal(C3, "(y, x*z)"))
    assert verts(g) == ["(x, y)", "(y, z)"] and g.edges == ((0, 1),)
    assert connectivity(g).connected

    g = graph_def61(ideal(C3, "(x)"))
    assert len(g.vertices) == 1 and connectivity(g).connected


def test_height_in_quotient():
    assert height_in_quotient(zero_ideal(C4), prime(C4, "xy")) == 2
    assert height_in_quotient(CONE, prime(C4, "xyzw")) == 2
    assert height_in_quotient(ideal(C3, "(y, x*z)"), prime(C3, "xyz")) == 1
    with pytest.raises(DomainError):
        height_in_quotient(CONE, prime(C4, "xw"))


def test_punctured_examples():
    g = graph_punctured(CONE)
    assert len(g.vertices) == 2 and g.edges == ()
    assert connectivity(g).status is Connectivity.DISCONNECTED

    g = graph_punctured(ideal(C3, "(y, x*z)"))
    assert verts(g) == ["(x, y)", "(y, z)"] and g.edges == ()

    g = graph_punctured(ideal(C3, "(x, y, z)"))
    assert g.vertices == () and connectivity(g).status is Connectivity.EMPTY


def _graph(nv, edges):
    ctx = ctx_of([f"v{i}" for i in range(max(nv, 1))])
    return PrimeGraph(GraphKind.DEF51, ctx, tuple(MonomialPrime(ctx, 1 << i) for i in range(nv)), tuple(edges))


def test_connectivity_certificates():
    cert = connectivity(_graph(2, []))
    assert cert.status is Connectivity.DISCONNECTED
    assert cert.components == ((0,), (1,))
    assert cert.bipartition == ((0,), (1,))

    path = _graph(3, [(0, 1), (1, 2)])
    cert = connectivity(path)
    assert cert.connected and cert.spanning_tree == ((0, 1), (1, 2))
    assert cert.validate(path)

    assert connectivity(_graph(0, [])).status is Connectivity.EMPTY


def test_certificate_validation_rejects_forgeries():
    g = _graph(3, [(0, 1), (1, 2)])
    cert = connectivity(g)
    forged = type(cert)(cert.status, cert.components, ((0, 2), (1, 2)))
    assert not forged.validate(g)
    split = type(cert)(Connectivity.DISCONNECTED, ((0, 1), (2,)), bipartition=((0, 1), (2,)))
    assert not split.validate(g)


def test_bad_edges_rejected():
    from specgraph import InvariantError

    with pytest.raises(InvariantError):
        _graph(2, [(0, 0)])
    with pytest.raises(InvariantError):
        _graph(2, [(0, 5)])


def test_stanley_reisner_examples():
    c = ctx_of("abcd")
    delta = make_complex(c, [list("abc"), list("bcd")])
    assert stanley_reisner(c, delta) == ideal(c, "(a*d)")
    assert connectivity(facet_ridge_graph(delta)).connected

    c5 = ctx_of("abcde")
    delta = make_complex(c5, [list("abc"), list("cde")])
    assert connectivity(facet_ridge_graph(delta)).status is Connectivity.DISCONNECTED

    single = make_complex(C2, [["x", "y"]])
    g = facet_ridge_graph(single)
    assert len(g.vertices) == 1 and connectivity(g).connected
    assert stanley_reisner(C2, single).is_zero

    with pytest.raises(InputError):
        make_complex(C2, [])


def test_stanley_reisner_is_minimal_nonfaces():
    c = ctx_of("abcde")
    delta = make_complex(c, [list("abc"), list("cde"), list("bd")])
    faces = {m for m in range(1 << c.n) if any(m & f == m for f in delta.facets)}
    nonfaces = [m for m in range(1 << c.n) if m not in faces]
    minimal = sorted(
        (m for m in nonfaces if all(m & ~(1 << i) in faces for i in range(c.n) if m >> i & 1)),
        key=lambda m: [i for i in range(c.n) if m >> i & 1],
    )
    assert list(stanley_reisner(c, delta).gens) == minimal


@settings(max_examples=100)
@given(ideals(max_n=10, max_gens=10))
def test_def61_reduced_criterion(J):
    """Height one in R/J and |p u q| = ht J + 1 agree for all pairs of top components."""
    c = height(J)
    tops = [p for p in minimal_primes(J) if p.height == c]
    for p in tops:
        for q in tops:
            if p != q:
                P = p.union(q)
                assert (height_in_quotient(J, P) == 1) == (P.height == c + 1)


@given(ideals(max_n=9, max_gens=10))
def test_top_part_invariance(I):
    a, b = graph_def61(I), graph_def61(ideal_top(I))
    assert a.vertex_masks() == b.vertex_masks()
    assert a.edge_masks() == b.edge_masks()


@given(st.integers(0, 10_000))
def test_facet_ridge_isomorphism(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 10)
    c = ctx_of([f"x{i}" for i in range(n)])
    delta = make_complex(c, random_pure_complex_facets(rng, n))
    fr = facet_ridge_graph(delta)
    g61 = graph_def61(stanley_reisner(c, delta))
    full = c.full_mask
    assert {full & ~m for m in fr.vertex_masks()} == set(g61.vertex_masks())
    mapped = {frozenset(full & ~m for m in e) for e in fr.edge_masks()}
    assert mapped == g61.edge_masks()


@settings(max_examples=60)
@given(ideals(max_n=7, max_gens=5), st.data())
def test_def51_monotone_in_I(I, data):
    """Enlarging I shrinks V(I), so vertices and edges can only be gained."""
    J = make_ideal(I.ctx, data.draw(st.lists(st.integers(1, I.ctx.full_mask), max_size=4)))
    extra = make_ideal(I.ctx, data.draw(st.lists(st.integers(1, I.ctx.full_mask), min_size=1, max_size=3)))
    small, big = graph_def51(J, I), graph_def51(J, ideal_sum(I, extra))
    assert set(small.vertex_masks()) <= set(big.vertex_masks())
    assert small.edge_masks() <= big.edge_masks()


@settings(max_examples=100)
@given(ideals(max_n=10, max_gens=10))
def test_punctured_matches_oracle(I):
    cert = connectivity(graph_punctured(I))
    count = "empty" if cert.status is Connectivity.EMPTY else len(cert.components)
    assert count == oracle.oracle_punctured_components(I)
