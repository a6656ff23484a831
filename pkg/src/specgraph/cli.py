"""Command line interface: ``specgraph {analyze,min-primes,graph,split,verify}``.

Exit codes: 0 success, 1 input/parse/domain error, 2 capacity or cost guard,
3 internal invariant failure (including oracle disagreement in ``verify``).
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import crosscheck
from .decompose import decompose
from .document import InputDocument, load_document, resolve
from .errors import CapacityError, DomainError, InputError, InvariantError
from .graphs import (
    connectivity,
    facet_ridge_graph,
    graph_def51,
    graph_def61,
    graph_punctured,
)
from .ideal import zero_ideal
from .report import certificate_json, dumps, envelope, graph_json, render_text, report_json
from .verdicts import build_report, split_Hc

log = logging.getLogger("specgraph")

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_INVARIANT = 0, 1, 2, 3


def _analyze(doc: InputDocument, args) -> dict:
    r = resolve(doc)
    report = build_report(r.I, r.J, r.complex)
    return envelope("analyze", doc, report_json(report))


def _min_primes(doc: InputDocument, args) -> dict:
    r = resolve(doc)
    dec = decompose(r.I)
    return envelope(
        "min-primes",
        doc,
        {"c": dec.height_c, "d": dec.dim_d, "minimal_primes": [str(p) for p in dec.min_primes]},
    )


def _graph(doc: InputDocument, args) -> dict:
    r = resolve(doc)
    kind = args.kind
    if kind == "def51":
        g = graph_def51(r.J if r.J is not None else zero_ideal(r.ctx), r.I)
    elif kind == "def61":
        g = graph_def61(r.J if args.of_J and r.J is not None else r.I)
    elif kind == "punctured":
        g = graph_punctured(r.I)
    else:
        if r.complex is None:
            raise InputError("--kind facet-ridge needs a facets document")
        g = facet_ridge_graph(r.complex)
    cert = connectivity(g)
    if not cert.validate(g):
        raise InvariantError("connectivity certificate failed to re-validate")
    return envelope("graph", doc, {"graph": graph_json(g), "certificate": certificate_json(cert)})


def _split(doc: InputDocument, args) -> dict:
    r = resolve(doc)
    return envelope("split", doc, {"components": [str(c) for c in split_Hc(r.I)]})


def _verify(doc: InputDocument, args) -> dict:
    r = resolve(doc)
    checks = crosscheck.cross_check(r.I, r.J)
    return envelope(
        "verify",
        doc,
        {"checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]},
    )


COMMANDS: dict[str, Callable[[InputDocument, argparse.Namespace], dict]] = {
    "analyze": _analyze,
    "min-primes": _min_primes,
    "graph": _graph,
    "split": _split,
    "verify": _verify,
}


def _exit_code(model: dict) -> int:
    if model.get("command") == "verify" and not all(c["ok"] for c in model["checks"]):
        return EXIT_INVARIANT
    return EXIT_OK


def _run_one(command: str, args, doc_path) -> tuple[int, str, bool]:
    """Exit code, output text, and whether the text is an error message."""
    try:
        doc = load_document(doc_path)
        model = COMMANDS[command](doc, args)
    except (InputError, DomainError) as exc:
        return EXIT_INPUT, f"error: {exc}\n", True
    except CapacityError as exc:
        return EXIT_CAPACITY, f"error: {exc}\n", True
    except InvariantError as exc:
        return EXIT_INVARIANT, f"invariant failure: {exc}\n", True
    log.debug("%s on %s done", command, doc_path)
    text = dumps(model) if args.format == "json" else render_text(model)
    return _exit_code(model), text, False


def _random_sweep(args) -> int:
    seed = crosscheck.seed_from_env()
    rng = random.Random(seed)
    failures = 0
    for _ in range(args.random):
        ctx = crosscheck.random_context(rng)
        I = crosscheck.random_ideal(rng, ctx)
        J = crosscheck.random_ideal(rng, ctx) if rng.random() < 0.5 else None
        bad = [c for c in crosscheck.cross_check(I, J) if not c.ok]
        if bad:
            failures += 1
            replay = {"variables": list(ctx.names), "J": None if J is None else str(J), "I": str(I)}
            print(f"FAIL {', '.join(c.name for c in bad)}: {dumps(replay).strip()}")
    print(f"random sweep: {args.random} cases, {failures} failures, seed {seed}")
    return EXIT_INVARIANT if failures else EXIT_OK


def _batch(command: str, args) -> int:
    src = Path(args.batch)
    if not src.is_dir():
        print(f"error: {src} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    out_dir = Path(args.out) if args.out else src
    out_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(p for p in src.glob("*.json") if not p.name.endswith(".report.json"))
    suffix = ".report.json" if args.format == "json" else ".report.txt"
    with ThreadPoolExecutor() as pool:
        results = list(pool.map(lambda p: _run_one(command, args, p), files))
    worst = EXIT_OK
    for path, (code, text, _) in zip(files, results):
        (out_dir / (path.stem + suffix)).write_text(text, encoding="utf-8")
        print(f"{path.name}: exit {code}")
        worst = max(worst, code)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specgraph",
        description="Connectedness and indecomposability verdicts for squarefree monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default="-", help="input JSON document ('-' for stdin)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--batch", metavar="DIR", help="process every *.json file in DIR")
    common.add_argument("--out", metavar="DIR", help="output directory for --batch (default: DIR)")
    common.add_argument("-v", "--verbose", action="store_true")

    sub.add_parser("analyze", parents=[common], help="full report with all applicable verdicts")
    sub.add_parser("min-primes", parents=[common], help="minimal primes, height and dimension")
    g = sub.add_parser("graph", parents=[common], help="one prime graph with its certificate")
    g.add_argument(
        "--kind", choices=("def51", "def61", "punctured", "facet-ridge"), required=True
    )
    g.add_argument(
        "--of-J", action="store_true", help="for def61: build the graph of R/J instead of R/I"
    )
    sub.add_parser("split", parents=[common], help="summand ideals I_i of H^c_I(R)")
    v = sub.add_parser("verify", parents=[common], help="cross-check against brute-force enumeration")
    v.add_argument(
        "--random",
        type=int,
        metavar="N",
        help="instead of an input, check N random ideals (seed from SPECGRAPH_SEED)",
    )
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors are input errors; keep exit 2 for the capacity guard
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.command == "verify" and args.random:
        return _random_sweep(args)
    if args.batch:
        return _batch(args.command, args)
    code, text, is_error = _run_one(args.command, args, args.input)
    (sys.stderr if is_error else sys.stdout).write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
