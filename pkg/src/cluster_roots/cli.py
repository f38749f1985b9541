"""Command-line front end: mutation, enumeration, roots, Schur tests,
theorem verification, counterexample checks, and the session service.

One binary covers script use and the explorer service. Output comes in two
forms: `text` for reading, `machine` for diffing, the latter as
line-delimited json with sorted keys and no whitespace so byte comparison
is meaningful. Defaults for the shared knobs fall back to environment
variables prefixed CLUSTER_ROOTS_ (CONVENTION, OUTPUT, PRIME, TRIALS,
SEED, PORT, and the service caps).

Exit codes: `verify` returns 0/1/2 for pass/fail/inconclusive, `examples`
returns 0 when the vector is absent as claimed, and malformed input exits 2
with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .presets import preset, preset_names
from .quiver import ExchangeMatrix, from_arrows, initial_seed, parse_quiver_document
from .roots import forms_of
from .schur import DEFAULT_PRIME, DEFAULT_TRIALS, is_real_schur_root
from .search import DEFAULT_SEED_CAP, enumerate_c_vectors
from .verify import (
    verify_counterexample_atilde2,
    verify_counterexample_markov,
    verify_main_theorem,
)

_ENV = "CLUSTER_ROOTS_"


def _env(name: str, default):
    raw = os.environ.get(_ENV + name)
    if raw is None:
        return default
    return type(default)(raw) if not isinstance(default, str) else raw


def machine_line(doc) -> str:
    """The one serialization every machine-mode line uses; byte stable."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _load_quiver(arg: str, convention: str) -> ExchangeMatrix:
    if arg.lower() in preset_names():
        b = from_arrows(preset(arg))
    elif arg.lstrip().startswith("{"):
        b = parse_quiver_document(arg)
    elif Path(arg).exists():
        b = parse_quiver_document(Path(arg).read_text())
    else:
        raise ValueError(
            f"quiver {arg!r} is not a preset ({', '.join(preset_names())}), "
            "an existing file, or inline json"
        )
    return b.transposed() if convention == "transpose" else b


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    if not parts:
        raise ValueError(f"empty {what}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from None


def _matrix_text(rows) -> str:
    cells = [[str(x) for x in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join("  [" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _print_matrices(seed, output: str) -> None:
    named = [("B", seed.b.b), ("C", seed.c), ("G", seed.g)]
    if output == "machine":
        for name, rows in named:
            print(machine_line({"name": name, "rows": [list(r) for r in rows]}))
    else:
        print("word: " + (",".join(map(str, seed.word)) or "(empty)"))
        for name, rows in named:
            print(f"{name}:")
            print(_matrix_text(rows))


def _cmd_mutate(args) -> int:
    b = _load_quiver(args.quiver, args.convention)
    seed = initial_seed(b)
    for k in _parse_ints(args.word, "mutation word"):
        seed = seed.mutate(k)
    _print_matrices(seed, args.output)
    return 0


def _cmd_enumerate(args) -> int:
    b = _load_quiver(args.quiver, args.convention)
    stream = open(args.stream, "a", encoding="utf-8") if args.stream else None
    try:
        report = enumerate_c_vectors(
            b, args.depth, max_seeds=args.max_seeds, stream=stream
        )
    finally:
        if stream is not None:
            stream.close()
    vectors = sorted(report.positive_c_vectors)
    if args.output == "machine":
        print(
            machine_line(
                {
                    "capped": report.capped,
                    "closed": report.closed,
                    "depth_reached": report.depth_reached,
                    "negative_count": report.negative_count,
                    "positive_c_vectors": [list(v) for v in vectors],
                    "seeds_visited": report.seeds_visited,
                }
            )
        )
    else:
        print(f"seeds visited: {report.seeds_visited}")
        print(f"depth reached: {report.depth_reached}")
        print(f"closed: {str(report.closed).lower()}")
        if report.capped:
            print("capped: true (visited-set cap hit; results partial)")
        print(f"distinct negative columns: {report.negative_count}")
        print(f"positive c-vectors ({len(vectors)}):")
        for v in vectors:
            print("  (" + ", ".join(map(str, v)) + ")")
    return 0


def _cmd_roots(args) -> int:
    b = _load_quiver(args.quiver, args.convention)
    roots = sorted(forms_of(b).enumerate_positive_real_roots(args.height))
    if args.output == "machine":
        print(machine_line({"height": args.height, "roots": [list(r) for r in roots]}))
    else:
        print(f"positive real roots of coordinate sum <= {args.height} ({len(roots)}):")
        for r in roots:
            print("  (" + ", ".join(map(str, r)) + ")")
    return 0


def _cmd_schur(args) -> int:
    b = _load_quiver(args.quiver, args.convention)
    quiver = _spec_of(b)
    d = _parse_ints(args.vector, "dimension vector")
    verdict = is_real_schur_root(
        quiver, d, trials=args.trials, p=args.prime, rng_seed=args.seed
    )
    if args.output == "machine":
        witness = None
        if verdict.witness is not None:
            witness = {
                "d": list(verdict.witness.d),
                "matrices": [m.tolist() for m in verdict.witness.matrices],
                "p": verdict.witness.p,
                "rng_seed": verdict.witness.rng_seed,
            }
        print(
            machine_line(
                {
                    "d": list(d),
                    "kind": verdict.kind,
                    "trials": verdict.trials,
                    "witness": witness,
                }
            )
        )
    else:
        print(f"vector ({', '.join(map(str, d))}): {verdict.kind}")
        print(f"samples drawn: {verdict.trials}")
        if verdict.witness is not None:
            w = verdict.witness
            shapes = ", ".join("x".join(map(str, m.shape)) for m in w.matrices)
            print(f"witness: p={w.p} rng_seed={w.rng_seed} matrices {shapes}")
    return 0


def _spec_of(b: ExchangeMatrix):
    from .quiver import QuiverSpec

    return QuiverSpec.from_exchange_matrix(b)


def _cmd_verify(args) -> int:
    b = _load_quiver(args.quiver, args.convention)
    report = verify_main_theorem(
        b,
        args.depth,
        args.height,
        trials=args.trials,
        p=args.prime,
        rng_seed=args.seed,
        quiver_id=args.quiver,
        max_seeds=args.max_seeds,
    )
    if args.output == "machine":
        print(
            machine_line(
                {
                    "c_not_schur": [[list(v), tag] for v, tag in report.c_not_schur],
                    "certified_count": report.certified_count,
                    "closed": report.closed,
                    "depth": report.depth,
                    "height": report.height,
                    "notes": list(report.notes),
                    "positive_c_count": report.positive_c_count,
                    "quiver": report.quiver_id,
                    "schur_not_c": [[list(v), d] for v, d in report.schur_not_c],
                    "verdict": report.verdict,
                }
            )
        )
    else:
        print(f"quiver: {report.quiver_id or args.quiver}")
        print(f"depth: {report.depth}  height: {report.height}")
        print(f"closed search: {str(report.closed).lower()}")
        print(
            f"positive c-vectors: {report.positive_c_count}  "
            f"certified Schur roots: {report.certified_count}"
        )
        print(f"c-vectors failing the Schur side: {len(report.c_not_schur)}")
        for v, tag in report.c_not_schur:
            print(f"  ({', '.join(map(str, v))}) [{tag}]")
        print(f"certified roots missing as c-vectors: {len(report.schur_not_c)}")
        for v, d in report.schur_not_c:
            print(f"  ({', '.join(map(str, v))}) searched to depth {d}")
        for note in report.notes:
            print(f"note: {note}")
        print(f"verdict: {report.verdict}")
    return {"pass": 0, "fail": 1, "inconclusive": 2}[report.verdict]


def _cmd_examples(args) -> int:
    if args.which == "markov":
        absent = verify_counterexample_markov(args.depth)
        vector = (4, 4, 4)
    else:
        absent = verify_counterexample_atilde2(args.depth)
        vector = (1, 2, 1)
    if args.output == "machine":
        print(
            machine_line(
                {
                    "absent": absent,
                    "depth": args.depth,
                    "quiver": args.which,
                    "vector": list(vector),
                }
            )
        )
    else:
        print(
            f"({', '.join(map(str, vector))}) absent as a c-vector of "
            f"{args.which} to depth {args.depth}: {str(absent).lower()}"
        )
    return 0 if absent else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import build_app

    app = build_app(
        idle_timeout=args.idle_timeout,
        enumerate_cap=args.enumerate_cap,
        max_seeds=args.max_seeds,
        trials=args.trials,
        p=args.prime,
        rng_seed=args.seed,
        static_dir=args.ui,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cluster-roots",
        description="Exact c-vector / g-vector mutation engine with real "
        "Schur root certification for acyclic quivers.",
    )
    parser.add_argument(
        "--convention",
        choices=("standard", "transpose"),
        default=_env("CONVENTION", "standard"),
        help="transpose flips the arrow-count convention of every input matrix",
    )
    parser.add_argument(
        "--output",
        choices=("text", "machine"),
        default=_env("OUTPUT", "text"),
        help="machine prints line-delimited json with stable key order",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    quiver_help = (
        "preset name (%s), a json file path, or inline json" % ", ".join(preset_names())
    )

    p_mutate = sub.add_parser("mutate", help="apply a mutation word, print B, C, G")
    p_mutate.add_argument("quiver", help=quiver_help)
    p_mutate.add_argument("word", help="comma-separated 1-based vertices, e.g. 1,2,1")
    p_mutate.set_defaults(func=_cmd_mutate)

    p_enum = sub.add_parser("enumerate", help="walk the mutation tree, collect c-vectors")
    p_enum.add_argument("quiver", help=quiver_help)
    p_enum.add_argument("--depth", type=int, required=True)
    p_enum.add_argument("--max-seeds", type=int, default=DEFAULT_SEED_CAP)
    p_enum.add_argument("--stream", help="append visited seeds to this file, one per line")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_roots = sub.add_parser("roots", help="enumerate positive real roots by height")
    p_roots.add_argument("quiver", help=quiver_help)
    p_roots.add_argument("--height", type=int, required=True)
    p_roots.set_defaults(func=_cmd_roots)

    p_schur = sub.add_parser("schur", help="test one dimension vector for Schur-ness")
    p_schur.add_argument("quiver", help=quiver_help)
    p_schur.add_argument("vector", help="comma-separated entries, e.g. 2,1")
    _oracle_flags(p_schur)
    p_schur.set_defaults(func=_cmd_schur)

    p_verify = sub.add_parser("verify", help="two-sided theorem check, exit 0/1/2")
    p_verify.add_argument("quiver", help=quiver_help)
    p_verify.add_argument("--depth", type=int, required=True)
    p_verify.add_argument("--height", type=int, required=True)
    p_verify.add_argument("--max-seeds", type=int, default=DEFAULT_SEED_CAP)
    _oracle_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_ex = sub.add_parser("examples", help="bounded-depth counterexample checks")
    p_ex.add_argument("which", choices=("markov", "atilde2"))
    p_ex.add_argument("--depth", type=int, default=10)
    p_ex.set_defaults(func=_cmd_examples)

    p_serve = sub.add_parser("serve", help="run the session service")
    p_serve.add_argument("--port", type=int, default=_env("PORT", 8000))
    p_serve.add_argument("--host", default=_env("HOST", "127.0.0.1"))
    p_serve.add_argument("--ui", default=None, help="serve this directory at /")
    p_serve.add_argument(
        "--idle-timeout", type=float, default=_env("IDLE_TIMEOUT", 900.0)
    )
    p_serve.add_argument(
        "--enumerate-cap", type=int, default=_env("ENUMERATE_CAP", 12)
    )
    p_serve.add_argument("--max-seeds", type=int, default=DEFAULT_SEED_CAP)
    _oracle_flags(p_serve)
    p_serve.set_defaults(func=_cmd_serve)
    return parser


def _oracle_flags(sub_parser) -> None:
    sub_parser.add_argument("--trials", type=int, default=_env("TRIALS", DEFAULT_TRIALS))
    sub_parser.add_argument("--prime", type=int, default=_env("PRIME", DEFAULT_PRIME))
    sub_parser.add_argument(
        "--seed", type=int, default=_env("SEED", 0), help="oracle rng seed"
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, IndexError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
