"""Command-line surface: construct, verify, endpoints, scan.

Exit codes form a trichotomy so shell pipelines can tell outcomes apart:
0 means success, 2 means a principled negative answer (the endpoint
congruence refuses a construction, or a word fails verification), and 1
means an actual error (bad arguments, unsupported sizes, parse failures).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .torus import TorusSpec, Vertex
from .words import (
    PathCertificate,
    Word,
    trace,
    verify_ham_path,
    word_from_flat,
    word_from_text,
    word_to_text,
)
from .paths import Refusal, hamiltonian_path
from .oracle import (
    DEFAULT_CAP,
    HARD_CAP,
    EndpointReport,
    SizeCapError,
    endpoint_set,
    enumerate_torus_specs,
    ham_cycle_exists_2d,
)

DOT_VERTEX_LIMIT = 512


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; keep 2 reserved for refusals
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_vertex(text: str, k: int | None = None) -> Vertex:
    parts = text.split(",")
    coords = []
    for pos, part in enumerate(parts, start=1):
        token = part.strip()
        if not token or not token.lstrip("-").isdigit():
            raise ValueError(f"bad vertex component {token!r} at position {pos}")
        coords.append(int(token))
    if k is not None and len(coords) != k:
        raise ValueError(f"expected {k} coordinates, got {len(coords)}")
    return tuple(coords)


def parse_moduli(text: str) -> tuple[int, ...]:
    parts = text.split(",")
    moduli = []
    for pos, part in enumerate(parts, start=1):
        token = part.strip()
        if not token.isdigit():
            raise ValueError(f"bad modulus {token!r} at position {pos}")
        moduli.append(int(token))
    return tuple(moduli)


def certificate_record(cert: PathCertificate) -> dict:
    return {
        "moduli": list(cert.spec.moduli),
        "from": list(cert.start),
        "to": list(cert.target),
        "word": {"nested": word_to_text(cert.word)},
        "verified": cert.verified,
        "length": cert.length,
    }


def endpoint_record(report: EndpointReport) -> dict:
    return {
        "moduli": list(report.spec.moduli),
        "start": list(report.start),
        "predicted": [list(v) for v in report.predicted],
        "reachable": [list(v) for v in report.reachable],
        "agreement": report.agreement,
        "counterexamples": [list(v) for v in report.counterexamples],
    }


def word_from_record(value) -> Word:
    if isinstance(value, dict):
        if "nested" in value:
            return word_from_text(value["nested"])
        if "flat" in value:
            return word_from_flat(value["flat"])
        raise ValueError("word object needs a 'nested' or 'flat' entry")
    if isinstance(value, list):
        return word_from_flat(value)
    if isinstance(value, str):
        return word_from_text(value)
    raise ValueError(f"cannot read a word from {type(value).__name__}")


def _env_cap() -> int | None:
    raw = os.environ.get("TORUS_HAM_CAP")
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"TORUS_HAM_CAP must be an integer, got {raw!r}") from None
    return cap


def _resolve_cap(flag: int | None) -> int:
    cap = flag if flag is not None else _env_cap()
    if cap is None:
        cap = DEFAULT_CAP
    if cap > HARD_CAP:
        raise SizeCapError(f"cap {cap} exceeds the hard limit of {HARD_CAP} vertices")
    return cap


def _emit_dot(cert: PathCertificate, stream) -> None:
    spec = cert.spec
    path_arcs = set()
    vs = list(trace(spec, cert.start, cert.word))
    for a, b in zip(vs, vs[1:]):
        path_arcs.add((a, b))
    name = ",".join
    print("digraph torus {", file=stream)
    print('  node [shape=plaintext];', file=stream)
    for v in spec.vertices():
        for g in range(spec.k):
            w = spec.add_step(v, g)
            attr = " [color=red, penwidth=2.0]" if (v, w) in path_arcs else ""
            print(f'  "{name(map(str, v))}" -> "{name(map(str, w))}"{attr};', file=stream)
    print("}", file=stream)


def cmd_construct(args) -> int:
    try:
        start = parse_vertex(args.from_, args.k) if args.from_ else (0,) * args.k
        target = parse_vertex(args.to, args.k)
        outcome = hamiltonian_path(args.m, args.k, start, target)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(outcome, Refusal):
        print(f"refused: {outcome.message}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(certificate_record(outcome)))
    elif args.format == "word":
        print(word_to_text(outcome.word))
    elif args.format == "vertices":
        for v in trace(outcome.spec, outcome.start, outcome.word):
            print(",".join(map(str, v)))
    elif args.format == "dot":
        if outcome.spec.vertex_count > DOT_VERTEX_LIMIT:
            print(
                f"error: dot export is capped at {DOT_VERTEX_LIMIT} vertices, "
                f"got {outcome.spec.vertex_count}",
                file=sys.stderr,
            )
            return 1
        _emit_dot(outcome, sys.stdout)
    return 0


def cmd_verify(args) -> int:
    try:
        if args.file:
            with open(args.file, "r", encoding="utf-8") as fh:
                raw = fh.read()
        else:
            raw = sys.stdin.read()
        raw = raw.strip()
        if not raw:
            raise ValueError("no word supplied on stdin or via --file")
        moduli = None
        start_text, target_text = args.from_, args.to
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError:
            word = word_from_text(raw)
        else:
            if isinstance(payload, dict):
                word = word_from_record(payload.get("word", payload))
                if "moduli" in payload:
                    moduli = tuple(payload["moduli"])
                if start_text is None and "from" in payload:
                    start_text = ",".join(map(str, payload["from"]))
                if target_text is None and "to" in payload:
                    target_text = ",".join(map(str, payload["to"]))
            else:
                word = word_from_record(payload)
        if args.m is not None and args.k is not None:
            moduli = (args.m,) * args.k
        if moduli is None:
            raise ValueError("need --m and --k (or a JSON record with moduli)")
        spec = TorusSpec(moduli)
        if target_text is None:
            raise ValueError("need --to (or a JSON record with a 'to' entry)")
        start = parse_vertex(start_text, spec.k) if start_text else spec.zero()
        target = parse_vertex(target_text, spec.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cert = verify_ham_path(spec, start, target, word)
    if cert.verified:
        print(json.dumps(certificate_record(cert)))
        return 0
    where = "" if cert.failure_position is None else f" at step {cert.failure_position}"
    print(f"not a hamiltonian path: {cert.failure}{where}", file=sys.stderr)
    return 2


def cmd_endpoints(args) -> int:
    try:
        spec = TorusSpec(parse_moduli(args.moduli))
        cap = _resolve_cap(args.cap)
        report = endpoint_set(spec, spec.zero(), cap=cap)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(endpoint_record(report)))
    return 0


def cmd_scan(args) -> int:
    try:
        cap = _resolve_cap(args.max_vertices)
        specs = list(enumerate_torus_specs(args.k, args.max_vertices))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for spec in specs:
        report = endpoint_set(spec, spec.zero(), cap=cap)
        record = endpoint_record(report)
        if args.k == 2:
            record["cycle_exists"] = ham_cycle_exists_2d(*spec.moduli)
        if not report.agreement:
            print(
                f"counterexample: {spec.moduli} has unreachable predicted endpoints "
                f"{list(report.counterexamples)}",
                file=sys.stderr,
            )
        print(json.dumps(record))
        sys.stdout.flush()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torusham", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[], help="build a certified hamiltonian path")
    p.add_argument("--m", type=int, required=True, help="cycle length")
    p.add_argument("--k", type=int, required=True, help="number of factors (k >= 3)")
    p.add_argument("--from", dest="from_", default=None, metavar="V", help="start vertex, default 0")
    p.add_argument("--to", required=True, metavar="V", help="target vertex, e.g. 2,0,0")
    p.add_argument(
        "--format", choices=("json", "word", "vertices", "dot"), default="json"
    )
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a word against a path claim")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--from", dest="from_", default=None, metavar="V")
    p.add_argument("--to", default=None, metavar="V")
    p.add_argument("--file", default=None, help="read the word from a file instead of stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("endpoints", help="brute-force endpoint set from 0")
    p.add_argument("--moduli", required=True, help="comma-separated cycle lengths")
    p.add_argument("--cap", type=int, default=None, help=f"search cap (default {DEFAULT_CAP}, max {HARD_CAP})")
    p.set_defaults(func=cmd_endpoints)

    p = sub.add_parser("scan", help="endpoint reports over all small specs")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
