"""Connectedness verdicts with certificates.

Each verdict pairs a computed graph property with the module-theoretic
statement it implies.  The modules themselves (local cohomology, ideal
transforms, formal functions) are never computed; they appear only in the
rendered statements, together with the hypotheses those statements need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Union

from .decompose import (
    decompose,
    dim_quotient,
    ext_height_mod_prime,
    height,
    ideal_top,
    is_unmixed,
    minimal_primes,
    reduction_assertions,
    u_ideal,
)
from .errors import DomainError, InputError, InvariantError
from .graphs import (
    Connectivity,
    ConnectivityCertificate,
    PrimeGraph,
    SimplicialComplex,
    connectivity,
    facet_ridge_graph,
    graph_def51,
    graph_def61,
    graph_punctured,
)
from .ideal import (
    SquarefreeIdeal,
    VariableContext,
    contained_in_prime,
    ideal_sum,
    intersect,
    intersect_primes,
    zero_ideal,
)

Result = Union[bool, str]

COMPLETION_NOTE = (
    "stated for complete local rings; minimal primes, unions and cardinalities of the "
    "monomial ideal are the same in R and in its completion"
)

# One place for every cited result.  Keys are stable identifiers used in the
# JSON output; labels and statements are rendered verbatim.
CITATIONS: dict[str, tuple[str, str]] = {
    "top-local-cohomology": (
        "Indecomposability criterion for H^c_I (Gorenstein ambient)",
        "H^c_I(R), c = height I, is indecomposable iff the graph G_{R/I} on top-dimensional "
        "minimal primes with height-one joins is connected, i.e. iff V(I_d) is connected "
        "in codimension one",
    ),
    "top-local-cohomology-splitting": (
        "Splitting of H^c_I along graph components",
        "if G_{R/I} has components G_1..G_t and I_i is the intersection of the primes in G_i, "
        "then H^c_I(R) is the direct sum of the nonzero modules H^c_{I_i}(R)",
    ),
    "ideal-transform": (
        "Indecomposability criterion for ideal transforms",
        "for a proper ideal I of a Noetherian ring A, D_I(A) is indecomposable as an A-module "
        "iff Spec A \\ V(I) is connected",
    ),
    "ideal-transform-splitting": (
        "Splitting of D_I(A) along the graph G(I)",
        "D_I(A) is the direct sum of the indecomposable modules D_I(A/U_i), U_i the "
        "intersection of the zero-ideal components indexed by the i-th component of G(I)",
    ),
    "ideal-transform-local": (
        "Locality of D_I(A)",
        "for a complete local ring A with height (I + p)/p > 1 for every p in Ass A, "
        "D_I(A) is a local ring iff Spec A \\ V(I) is connected",
    ),
    "grade-two": (
        "Hartshorne connectedness",
        "grade I >= 2 gives D_I(A) = A, hence Spec A \\ V(I) is connected",
    ),
    "top-cohomology-maximal": (
        "Hochster-Huneke criterion",
        "for a d-dimensional complete local ring A: H^d_m(A) is indecomposable iff "
        "Hom_A(H^d_m(A), H^d_m(A)) is a local Noetherian ring finite over A iff G_A is "
        "connected iff V(0_d) is connected in codimension one",
    ),
    "formal-functions": (
        "Ring of formal functions on the punctured spectrum",
        "for a complete local ring A, D^I(A) is indecomposable as a ring iff "
        "V(I) \\ {m} is connected",
    ),
    "formal-cohomology": (
        "Vanishing of formal cohomology forces punctured connectedness",
        "if lim H^i_m(A/I^a) = 0 for i = 0, 1 then V(I A^) \\ {m} is connected",
    ),
    "endomorphism-ring": (
        "Endomorphism ring of H^c_I for one-dimensional quotients",
        "for an n-dimensional Gorenstein ring R and dim R/I = 1, Hom_R(H^c_I(R), H^c_I(R)) "
        "is isomorphic to R^I / u(I) (R^I the I-adic completion), a commutative local "
        "Noetherian ring",
    ),
    "endomorphism-open": (
        "Open question on endomorphism rings",
        "for dim R/I >= 2 it is not known in general whether Hom_R(H^c_I(R), H^c_I(R)) is "
        "Noetherian, nor whether that property is equivalent to connectedness of G_{R/I}",
    ),
}


@dataclass(frozen=True)
class Verdict:
    claim: str
    statement: str
    basis: str | None
    result: Result
    certificate: ConnectivityCertificate | None = None
    graph: PrimeGraph | None = None
    side_data: dict[str, Any] = field(default_factory=dict)
    consequences: tuple[Verdict, ...] = ()

    def citation(self) -> tuple[str, str] | None:
        return CITATIONS[self.basis] if self.basis else None

    def revalidate(self) -> bool:
        ok = self.certificate is None or (
            self.graph is not None and self.certificate.validate(self.graph)
        )
        return ok and all(v.revalidate() for v in self.consequences)


def _status(cert: ConnectivityCertificate) -> Result:
    if cert.status is Connectivity.EMPTY:
        return "empty"
    return cert.connected


def _component_ideals(graph: PrimeGraph, cert: ConnectivityCertificate) -> list[SquarefreeIdeal]:
    return [intersect_primes([graph.vertices[i] for i in comp], graph.ctx) for comp in cert.components]


def _require_proper(I: SquarefreeIdeal, what: str = "I") -> None:
    if I.is_unit:
        raise DomainError(f"{what} must be a proper ideal")


def analyze_Hc(I: SquarefreeIdeal) -> Verdict:
    """Indecomposability of ``H^c_I(R)`` through the codimension-one graph of ``R/I``."""
    _require_proper(I)
    if I.is_zero:
        raise DomainError("I must be nonzero: H^c_I(R) is only analyzed for c >= 1")
    graph = graph_def61(I)
    cert = connectivity(graph)
    c = height(I)
    d = I.ctx.n - c
    side: dict[str, Any] = {
        "c": c,
        "d": d,
        "I_d": ideal_top(I),
        "unmixed": is_unmixed(I),
    }
    if not is_unmixed(I):
        check = reduction_assertions(I)
        if not (check.ht_lower_ok and check.ht_sum_ok):
            raise InvariantError(f"height bounds for the reduction to I_d failed on {I}")
        side["reduction"] = {"ht_lower_ok": check.ht_lower_ok, "ht_sum_ok": check.ht_sum_ok}
    parts = _component_ideals(graph, cert)
    side["components"] = parts
    if cert.connected:
        statement = f"H^{c}_I(R) is indecomposable"
        consequences: tuple[Verdict, ...] = ()
    else:
        statement = f"H^{c}_I(R) is decomposable"
        consequences = (
            Verdict(
                claim="Hc-splitting",
                statement=(
                    f"H^{c}_I(R) is the direct sum of H^{c}_{{I_i}}(R) over the "
                    f"{len(parts)} components I_i"
                ),
                basis="top-local-cohomology-splitting",
                result=True,
                side_data={"components": parts},
            ),
        )
    return Verdict(
        claim="Hc-indecomposable",
        statement=statement,
        basis="top-local-cohomology",
        result=cert.connected,
        certificate=cert,
        graph=graph,
        side_data=side,
        consequences=consequences,
    )


def split_Hc(I: SquarefreeIdeal) -> list[SquarefreeIdeal]:
    """Ideals ``I_i`` with ``H^c_I(R)`` the direct sum of the ``H^c_{I_i}(R)``.

    One ideal per connected component of the codimension-one graph; a single
    ``[I_d]`` when the graph is connected.
    """
    _require_proper(I)
    if I.is_zero:
        raise DomainError("I must be nonzero")
    graph = graph_def61(I)
    return _component_ideals(graph, connectivity(graph))


def _ambient(J: SquarefreeIdeal | None, ctx: VariableContext) -> SquarefreeIdeal:
    if J is None:
        return zero_ideal(ctx)
    if J.ctx != ctx:
        raise InputError("J and I live in different variable contexts")
    _require_proper(J, "J")
    return J


def separation_holds(I: SquarefreeIdeal, U: SquarefreeIdeal, V: SquarefreeIdeal) -> bool:
    """Whether every prime containing ``U + V`` contains ``I``.

    Primes over ``U + V`` are those above one of its minimal primes, so checking
    the minimal primes suffices.
    """
    s = ideal_sum(U, V)
    if s.is_unit:
        return True
    return all(contained_in_prime(I, p) for p in minimal_primes(s))


def analyze_ideal_transform(J: SquarefreeIdeal | None, I: SquarefreeIdeal) -> Verdict:
    """Decomposition of ``D_I(A)``, ``A = R/J``, from the graph ``G(I)``."""
    J = _ambient(J, I.ctx)
    _require_proper(I)
    graph = graph_def51(J, I)
    cert = connectivity(graph)
    U = _component_ideals(graph, cert)
    all_vertices = intersect_primes(graph.vertices, I.ctx)
    meet = intersect_primes([], I.ctx)
    for u in U:
        meet = intersect(meet, u)
    side: dict[str, Any] = {
        "U": U,
        "H0": all_vertices,
        "H0_check": meet == all_vertices,
        "separated": all(separation_holds(I, a, b) for a, b in combinations(U, 2)),
    }
    if not side["H0_check"] or not side["separated"]:
        raise InvariantError(f"component ideals of G(I) are inconsistent for J={J}, I={I}")

    if cert.status is Connectivity.EMPTY:
        return Verdict(
            claim="DI-indecomposable",
            statement="Spec A \\ V(I) is empty (I lies in the nilradical of A), so D_I(A) = 0",
            basis=None,
            result="empty",
            certificate=cert,
            graph=graph,
            side_data=side,
        )

    consequences: list[Verdict] = []
    if cert.connected:
        statement = "D_I(A) is indecomposable as an A-module"
    else:
        statement = "D_I(A) decomposes"
        consequences.append(
            Verdict(
                claim="DI-splitting",
                statement=(
                    "D_I(A) is the direct sum of the indecomposable modules D_I(A/U_i), "
                    f"i = 1..{len(U)}"
                ),
                basis="ideal-transform-splitting",
                result=True,
                side_data={"U": U},
            )
        )

    ext_heights = {str(p): ext_height_mod_prime(I, p) for p in minimal_primes(J)}
    if all(h > 1 for h in ext_heights.values()):
        local = cert.connected
        consequences.append(
            Verdict(
                claim="DI-local",
                statement=(
                    f"D_I(A^) is {'a' if local else 'not a'} local ring for the completion A^ "
                    f"of A at m ({COMPLETION_NOTE})"
                ),
                basis="ideal-transform-local",
                result=local,
                side_data={"ext_heights": ext_heights},
            )
        )
    if J.is_zero and height(I) >= 2:
        if not cert.connected:
            raise InvariantError(f"grade I >= 2 but Spec R \\ V(I) is disconnected for I={I}")
        consequences.append(
            Verdict(
                claim="grade-two",
                statement=(
                    f"grade I = height I = {height(I)} >= 2 (R is Cohen-Macaulay), so "
                    "D_I(R) = R and Spec R \\ V(I) is connected"
                ),
                basis="grade-two",
                result=True,
            )
        )
    return Verdict(
        claim="DI-indecomposable",
        statement=statement,
        basis="ideal-transform",
        result=_status(cert),
        certificate=cert,
        graph=graph,
        side_data=side,
        consequences=tuple(consequences),
    )


def analyze_top_cohomology(J: SquarefreeIdeal | None, ctx: VariableContext | None = None) -> Verdict:
    """Hochster-Huneke verdict for ``H^d_m(A)``, ``A = R/J``."""
    if J is None:
        if ctx is None:
            raise InputError("a context is needed when J is the zero ideal")
        J = zero_ideal(ctx)
    _require_proper(J, "J")
    graph = graph_def61(J)
    cert = connectivity(graph)
    d = dim_quotient(J)
    if cert.connected:
        statement = (
            f"H^{d}_m(A) is indecomposable and Hom_A(H^{d}_m(A), H^{d}_m(A)) is a local "
            f"Noetherian ring ({COMPLETION_NOTE})"
        )
    else:
        statement = (
            f"H^{d}_m(A) is decomposable and Hom_A(H^{d}_m(A), H^{d}_m(A)) is not a local "
            f"ring ({COMPLETION_NOTE})"
        )
    return Verdict(
        claim="Hd-indecomposable",
        statement=statement,
        basis="top-cohomology-maximal",
        result=cert.connected,
        certificate=cert,
        graph=graph,
        side_data={"d": d, "0_d": ideal_top(J)},
    )


def analyze_punctured(I: SquarefreeIdeal) -> Verdict:
    """Connectedness of ``V(I)`` minus the closed point."""
    _require_proper(I)
    graph = graph_punctured(I)
    cert = connectivity(graph)
    if cert.status is Connectivity.EMPTY:
        return Verdict(
            claim="punctured-connected",
            statement="V(I) \\ {m} is empty: I is m-primary, no connectedness statement applies",
            basis=None,
            result="empty",
            certificate=cert,
            graph=graph,
        )
    if cert.connected:
        statement = (
            "V(I) \\ {m} is connected, so D^I(R^) is indecomposable as a ring; whether it is "
            "also indecomposable as an R^-module is left open"
        )
        consequences: tuple[Verdict, ...] = ()
    else:
        statement = "V(I) \\ {m} is disconnected, so D^I(R^) decomposes as a ring"
        consequences = (
            Verdict(
                claim="formal-cohomology",
                statement=(
                    "lim H^i_m(R/I^a) is nonzero for some i in {0, 1}; equivalently "
                    f"H^n_I(R) or H^(n-1)_I(R) is nonzero (n = {I.ctx.n})"
                ),
                basis="formal-cohomology",
                result=True,
            ),
        )
    return Verdict(
        claim="punctured-connected",
        statement=f"{statement} ({COMPLETION_NOTE})",
        basis="formal-functions",
        result=_status(cert),
        certificate=cert,
        graph=graph,
        consequences=consequences,
    )


def _quotient_dim(J: SquarefreeIdeal, I: SquarefreeIdeal) -> int:
    return dim_quotient(ideal_sum(I, J))


def endomorphism_report(J: SquarefreeIdeal | None, I: SquarefreeIdeal) -> Verdict:
    J = _ambient(J, I.ctx)
    _require_proper(I)
    dim = _quotient_dim(J, I)
    if dim != 1:
        raise DomainError(f"the endomorphism ring report requires dim A/IA = 1, got {dim}")
    u = u_ideal(J, I)
    statement = (
        "Hom(H^c_I, H^c_I) is isomorphic to the I-adic completion of A modulo u, "
        "a commutative local Noetherian ring"
    )
    if not J.is_zero:
        statement += " (the isomorphism needs a Gorenstein ambient; A = R/J need not be one)"
    return Verdict(
        claim="endomorphism-ring",
        statement=statement,
        basis="endomorphism-ring",
        result=True,
        side_data={"u": u, "dim": dim},
    )


def endomorphism_open_note(J: SquarefreeIdeal | None, I: SquarefreeIdeal) -> Verdict:
    J = _ambient(J, I.ctx)
    dim = _quotient_dim(J, I)
    return Verdict(
        claim="endomorphism-ring",
        statement=f"dim A/IA = {dim} >= 2: Noetherianity of Hom(H^c_I, H^c_I) is an open question",
        basis="endomorphism-open",
        result="open",
        side_data={"dim": dim},
    )


@dataclass(frozen=True)
class AnalysisReport:
    ctx: VariableContext
    J: SquarefreeIdeal | None
    I: SquarefreeIdeal
    min_primes: tuple
    c: int
    d: int
    I_d: SquarefreeIdeal
    verdicts: tuple[Verdict, ...]
    complex: SimplicialComplex | None = None
    facet_check: dict[str, Any] | None = None

    def revalidate(self) -> bool:
        return all(v.revalidate() for v in self.verdicts)


def build_report(
    I: SquarefreeIdeal,
    J: SquarefreeIdeal | None = None,
    complex: SimplicialComplex | None = None,
) -> AnalysisReport:
    """Run every applicable verdict on ``I`` (and ``A = R/J`` when ``J`` is given)."""
    _require_proper(I)
    dec = decompose(I)
    verdicts = [analyze_Hc(I)]
    if J is not None:
        verdicts.append(analyze_ideal_transform(J, I))
        verdicts.append(analyze_top_cohomology(J))
    verdicts.append(analyze_punctured(I))
    dim = _quotient_dim(_ambient(J, I.ctx), I)
    if dim == 1:
        verdicts.append(endomorphism_report(J, I))
    elif dim >= 2:
        verdicts.append(endomorphism_open_note(J, I))

    facet_check = None
    if complex is not None:
        fr = connectivity(facet_ridge_graph(complex))
        hc = verdicts[0].certificate
        facet_check = {
            "facet_ridge_components": len(fr.components),
            "def61_components": len(hc.components),
            "agree": len(fr.components) == len(hc.components),
        }
        if not facet_check["agree"]:
            raise InvariantError("facet-ridge graph and codimension-one graph disagree")

    report = AnalysisReport(
        ctx=I.ctx,
        J=J,
        I=I,
        min_primes=dec.min_primes,
        c=dec.height_c,
        d=dec.dim_d,
        I_d=ideal_top(I),
        verdicts=tuple(verdicts),
        complex=complex,
        facet_check=facet_check,
    )
    if not report.revalidate():
        raise InvariantError("a connectivity certificate failed to re-validate")
    return report
