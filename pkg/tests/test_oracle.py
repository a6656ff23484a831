import pytest

from helpers import ctx_of, ideal, prime
from specgraph import CapacityError, DomainError, make_context, make_ideal, zero_ideal
from specgraph.oracle import (
    PrimeEnumeration,
    oracle_edge_def51,
    oracle_height_in_quotient,
    oracle_minimal_primes,
    oracle_punctured_components,
    oracle_separated,
)

C4 = ctx_of("xyzw")
C3 = ctx_of("xyz")
C2 = ctx_of("xy")
CONE = ideal(C4, "(x*z, x*w, y*z, y*w)")


def test_enumeration_visits_each_subset_once():
    masks = [p.mask for p in PrimeEnumeration(C3)]
    assert masks == list(range(8))
    assert len(PrimeEnumeration(C4)) == 16


def test_minimal_primes():
    assert [str(p) for p in oracle_minimal_primes(CONE)] == ["(x, y)", "(z, w)"]
    assert [str(p) for p in oracle_minimal_primes(ideal(C3, "(x)"))] == ["(x)"]
    assert [str(p) for p in oracle_minimal_primes(zero_ideal(C3))] == ["(0)"]


def test_edge_def51():
    assert not oracle_edge_def51(ideal(C2, "(x*y)"), ideal(C2, "(x, y)"), prime(C2, "x"), prime(C2, "y"))
    assert oracle_edge_def51(ideal(C4, "(x*z)"), ideal(C4, "(w)"), prime(C4, "x"), prime(C4, "z"))
    with pytest.raises(DomainError):
        oracle_edge_def51(ideal(C2, "(x*y)"), ideal(C2, "(x, y)"), prime(C2, "x"), prime(C2, "x"))


def test_height_in_quotient():
    assert oracle_height_in_quotient(zero_ideal(C2), prime(C2, "xy")) == 2
    assert oracle_height_in_quotient(ideal(C3, "(y, x*z)"), prime(C3, "xyz")) == 1
    assert oracle_height_in_quotient(CONE, prime(C4, "xyzw")) == 2


def test_punctured_components():
    assert oracle_punctured_components(CONE) == 2
    assert oracle_punctured_components(ideal(C4, "(x, y)")) == 1
    assert oracle_punctured_components(ideal(C3, "(x, y, z)")) == "empty"


def test_separated():
    I = ideal(C2, "(x, y)")
    assert oracle_separated(I, ideal(C2, "(x)"), ideal(C2, "(y)"))


def test_cost_guard():
    ctx = make_context([f"v{i}" for i in range(15)])
    I = make_ideal(ctx, [[0]])
    with pytest.raises(CapacityError):
        oracle_minimal_primes(I)
    with pytest.raises(CapacityError):
        oracle_punctured_components(I)
    with pytest.raises(CapacityError):
        PrimeEnumeration(ctx)


def test_oracle_is_independent_of_main_path():
    import ast
    import inspect

    import specgraph.oracle as mod

    tree = ast.parse(inspect.getsource(mod))
    imported = {
        node.module
        for node in ast.walk(tree)
        if isinstance(node, ast.ImportFrom) and node.module is not None
    }
    assert not imported & {"decompose", "graphs", "verdicts", "crosscheck"}
