"""JSON input documents.

Two shapes are accepted::

    {"variables": ["x", "y", "z", "w"], "J": null, "I": "(x*z, x*w, y*z, y*w)"}
    {"variables": ["a", "b", "c", "d"], "facets": [["a", "b", "c"], ["b", "c", "d"]]}

``J`` is optional and defaults to the zero ideal (``A = R``).
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .graphs import SimplicialComplex, make_complex, stanley_reisner
from .ideal import SquarefreeIdeal, VariableContext, make_context, make_ideal
from .parser import parse_ideal_expression


@dataclass(frozen=True)
class InputDocument:
    variables: tuple[str, ...]
    I: str | None = None
    J: str | None = None
    facets: tuple[tuple[str, ...], ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"variables": list(self.variables)}
        if self.facets is not None:
            out["facets"] = [list(f) for f in self.facets]
        else:
            out["J"] = self.J
            out["I"] = self.I
        return out


_IDEAL_KEYS = {"variables", "J", "I"}
_FACET_KEYS = {"variables", "facets"}


def document_from_json(data) -> InputDocument:
    if not isinstance(data, dict):
        raise InputError("document must be a JSON object")
    variables = data.get("variables")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputError('"variables" must be a list of strings')
    has_ideal = "I" in data
    has_facets = "facets" in data
    if has_ideal == has_facets:
        raise InputError('document needs exactly one of "I" or "facets"')
    extra = set(data) - (_IDEAL_KEYS if has_ideal else _FACET_KEYS)
    if extra:
        raise InputError(f"unexpected fields: {', '.join(sorted(extra))}")
    if has_facets:
        facets = data["facets"]
        if (
            not isinstance(facets, list)
            or not facets
            or not all(isinstance(f, list) and all(isinstance(v, str) for v in f) for f in facets)
        ):
            raise InputError('"facets" must be a nonempty list of lists of variable names')
        return InputDocument(tuple(variables), facets=tuple(tuple(f) for f in facets))
    I, J = data["I"], data.get("J")
    if not isinstance(I, str):
        raise InputError('"I" must be an ideal expression string')
    if J is not None and not isinstance(J, str):
        raise InputError('"J" must be an ideal expression string or null')
    return InputDocument(tuple(variables), I=I, J=J)


def parse_document(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return document_from_json(data)


def load_document(path: str | Path) -> InputDocument:
    """Read a document from a file path, or from stdin when ``path`` is ``-``."""
    if str(path) == "-":
        return parse_document(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def dump_document(doc: InputDocument) -> str:
    return json.dumps(doc.to_json(), indent=2) + "\n"


@dataclass(frozen=True)
class ResolvedInput:
    ctx: VariableContext
    I: SquarefreeIdeal
    J: SquarefreeIdeal | None
    complex: SimplicialComplex | None


def resolve(doc: InputDocument) -> ResolvedInput:
    """Build the context, ideals and (for facet documents) the complex."""
    ctx = make_context(doc.variables)
    if doc.facets is not None:
        delta = make_complex(ctx, doc.facets)
        return ResolvedInput(ctx, stanley_reisner(ctx, delta), None, delta)
    I = make_ideal(ctx, parse_ideal_expression(doc.I, ctx))
    J = None if doc.J is None else make_ideal(ctx, parse_ideal_expression(doc.J, ctx))
    return ResolvedInput(ctx, I, J, None)
