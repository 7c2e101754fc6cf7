"""``finring`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .. import analysis as an
from ..claims import Caps, RingCache, corpus_entries, explain, run_claims
from ..constructions import iso
from ..errors import ParseError, RingError
from ..kernel import STRUCTURE_CAP, TABLE_CAP, FiniteRing, Subset, table_cap_override
from .evaluate import EvalCaps, evaluate
from .expr import Ring, parse

__all__ = ["Config", "main", "build_parser", "PRINT_CAP"]

PRINT_CAP = 64
ENV_PREFIX = "FINRING_"


@dataclass(frozen=True)
class Config:
    table_cap: int = TABLE_CAP
    structure_cap: int = STRUCTURE_CAP
    nstar_cap: int = an.NSTAR_CAP
    seed: int = 0
    output_format: str = "text"

    @property
    def eval_caps(self) -> EvalCaps:
        return EvalCaps(self.table_cap, self.structure_cap)

    def as_dict(self) -> dict:
        return {"table_cap": self.table_cap, "structure_cap": self.structure_cap,
                "nstar_cap": self.nstar_cap, "seed": self.seed}


# (option, attribute, type, default); each option also reads FINRING_<ATTRIBUTE>.
_COMMON = [
    ("--format", "output_format", str, "text"),
    ("--seed", "seed", int, 0),
    ("--table-cap", "table_cap", int, TABLE_CAP),
    ("--structure-cap", "structure_cap", int, STRUCTURE_CAP),
    ("--nstar-cap", "nstar_cap", int, an.NSTAR_CAP),
]
_ENV_NAMES = {"output_format": "FORMAT"}


def _common_options(parser: argparse.ArgumentParser) -> None:
    for flag, dest, typ, _ in _COMMON:
        kwargs = {"choices": ["json", "text"]} if dest == "output_format" else {}
        parser.add_argument(flag, dest=dest, type=typ, default=argparse.SUPPRESS, **kwargs)


def _config(args: argparse.Namespace, env: dict[str, str]) -> Config:
    values = {}
    for flag, dest, typ, default in _COMMON:
        name = ENV_PREFIX + _ENV_NAMES.get(dest, dest.upper())
        if hasattr(args, dest):
            values[dest] = getattr(args, dest)
        elif name in env:
            try:
                values[dest] = typ(env[name])
            except ValueError:
                raise RingError(f"{name}={env[name]!r} is not a valid {typ.__name__}") from None
        else:
            values[dest] = default
    if values["output_format"] not in ("json", "text"):
        raise RingError(f"unknown output format {values['output_format']!r}")
    for key in ("table_cap", "structure_cap", "nstar_cap"):
        if values[key] < 1:
            raise RingError(f"{key} must be positive")
    return Config(**values)


class _Parser(argparse.ArgumentParser):
    """Usage errors come out as one JSON line, like every other error."""

    def error(self, message: str):
        print(json.dumps({"error": "UsageError", "message": message}, sort_keys=True), file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="finring", description="Explore finite rings and check UQ-ring claims.")
    _common_options(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="subsets and classifier flags of a ring")
    p.add_argument("expr")
    _common_options(p)

    p = sub.add_parser("classify", help="classifier flags of a ring")
    p.add_argument("expr")
    _common_options(p)

    p = sub.add_parser("claims", help="run the claim registry over rings")
    p.add_argument("--only", nargs="+", metavar="ID", help="claim ids (space or comma separated)")
    p.add_argument("--rings", nargs="+", metavar="EXPR", help="ring expressions instead of the default corpus")
    p.add_argument("--literal", action="store_true", help="check the literal forms of statements with known discrepancies")
    p.add_argument("--out", metavar="FILE", help="also write the JSON report here")
    p.add_argument("--strict", action="store_true", help="exit nonzero on flagged cells too")
    p.add_argument("--timings", action="store_true", help="record per-cell milliseconds (makes reports nondeterministic)")
    p.add_argument("--jobs", type=int, default=1, help="rings processed in parallel")
    _common_options(p)

    p = sub.add_parser("explain", help="describe a claim")
    p.add_argument("claim_id")
    _common_options(p)

    p = sub.add_parser("iso", help="decide whether two rings are isomorphic")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    _common_options(p)

    p = sub.add_parser("corpus", help="the default ring corpus")
    p.add_argument("--list", action="store_true", help="list labels and sizes")
    _common_options(p)
    return parser


def _subset_record(R: FiniteRing, S: Subset | None) -> dict | None:
    if S is None:
        return None
    out: dict = {"size": len(S)}
    if len(S) <= PRINT_CAP:
        out["members"] = [R.describe(int(a)) for a in S]
    else:
        out["elided"] = True
    return out


def _emit(data: dict, text: str, config: Config) -> None:
    if config.output_format == "json":
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _flags_text(flags: dict) -> list[str]:
    return [f"  {k} = {('n/a' if v is None else str(v).lower())}" for k, v in flags.items()]


def cmd_analyze(args, config: Config) -> int:
    R = evaluate(parse(args.expr), config.eval_caps)
    P = an.classify(R, config.nstar_cap)
    subsets = {k: _subset_record(R, S) for k, S in P.subsets().items()}
    data = {"ring": R.label, "size": R.size, "subsets": subsets, "flags": P.flags()}
    lines = [f"{R.label}: {R.size} elements"]
    for k, rec in subsets.items():
        if rec is None:
            lines.append(f"  {k}: not computed (size above the N* cap {config.nstar_cap})")
        elif "members" in rec:
            lines.append(f"  {k} ({rec['size']}): {', '.join(rec['members'])}")
        else:
            lines.append(f"  {k} ({rec['size']}): members elided")
    lines += _flags_text(P.flags())
    _emit(data, "\n".join(lines), config)
    return 0


def cmd_classify(args, config: Config) -> int:
    R = evaluate(parse(args.expr), config.eval_caps)
    flags = an.classify(R, config.nstar_cap).flags()
    _emit({"ring": R.label, "size": R.size, "flags": flags},
          "\n".join([f"{R.label}: {R.size} elements"] + _flags_text(flags)), config)
    return 0


def _claim_ids(values: Sequence[str] | None) -> list[str] | None:
    if not values:
        return None
    return [v.strip() for item in values for v in item.split(",") if v.strip()]


def cmd_claims(args, config: Config) -> int:
    cache = RingCache()
    if args.rings:
        rings = [evaluate(parse(e), config.eval_caps) for e in args.rings]
    else:
        entries, _ = corpus_entries(Caps(config.table_cap, config.structure_cap), cache)
        rings = [e.make() for e in entries]
    report = run_claims(
        rings, _claim_ids(args.only), literal=args.literal, seed=config.seed, timings=args.timings,
        nstar_cap=config.nstar_cap, jobs=max(1, args.jobs), cache=cache,
        config={"table_cap": config.table_cap, "structure_cap": config.structure_cap},
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())
    sys.stdout.write(report.to_json() if config.output_format == "json" else report.to_text())
    summary = report.summary()
    if summary["fail"] or (args.strict and summary["flagged"]):
        return 1
    return 0


def cmd_explain(args, config: Config) -> int:
    text = explain(args.claim_id)
    _emit({"claim": args.claim_id, "text": text}, text, config)
    return 0


# Domain constructor -> (isomorphism kind, codomain constructor) for the explicit maps.
_EXPLICIT = {"A": ("A->T", "Tnm"), "B": ("B->S", "S"), "C": ("C->U", "U")}


def _explicit_pattern(a: Ring, b: Ring) -> tuple[str, int, int | None, Ring] | None:
    if a.op not in _EXPLICIT or _EXPLICIT[a.op][1] != b.op:
        return None
    kind = _EXPLICIT[a.op][0]
    if kind == "C->U":
        n, base = a.args[0], a.args[1]
        return (kind, n, None, base) if b.args == (n, base) else None
    n, m, base = a.args
    want = (m, n, base) if kind == "B->S" else (n, m, base)
    return (kind, n, m, base) if b.args == want else None


def _map_record(dom: FiniteRing, cod: FiniteRing, f) -> dict:
    out: dict = {"size": int(len(f))}
    if len(f) <= PRINT_CAP:
        out["pairs"] = [[dom.describe(i), cod.describe(int(f[i]))] for i in range(len(f))]
    else:
        out["elided"] = True
    return out


def cmd_iso(args, config: Config) -> int:
    a, b = parse(args.expr_a), parse(args.expr_b)
    pattern, swapped = _explicit_pattern(a, b), False
    if pattern is None:
        pattern, swapped = _explicit_pattern(b, a), True
    if pattern is not None:
        kind, n, m, base_node = pattern
        base = evaluate(base_node, config.eval_caps)
        res = iso.lemma51_iso(kind, n, m, base)
        dom, cod, f = res.domain, res.codomain, res.map
        if swapped:
            dom, cod = cod, dom
            inv = [0] * len(f)
            for i, j in enumerate(f):
                inv[int(j)] = i
            f = inv
        data = {"isomorphic": True, "method": "explicit", "from": dom.label, "to": cod.label,
                "verification": {"mode": res.mode, "pairs": res.pairs}, "map": _map_record(dom, cod, f)}
    else:
        R, S = evaluate(a, config.eval_caps), evaluate(b, config.eval_caps)
        f = iso.brute_force_isomorphic(R, S)
        data = {"isomorphic": f is not None, "method": "search", "from": R.label, "to": S.label}
        if f is not None:
            data["map"] = _map_record(R, S, f)
    if data["isomorphic"]:
        lines = [f"isomorphic ({data['method']}): {data['from']} -> {data['to']}"]
        rec = data["map"]
        lines += [f"  {x} -> {y}" for x, y in rec.get("pairs", [])] or [f"  map on {rec['size']} elements elided"]
    else:
        lines = [f"not isomorphic: {data['from']}, {data['to']}"]
    _emit(data, "\n".join(lines), config)
    return 0


def cmd_corpus(args, config: Config) -> int:
    entries, dropped = corpus_entries(Caps(config.table_cap, config.structure_cap))
    data = {"rings": [{"label": e.label, "size": e.size} for e in entries],
            "excluded": [{"label": lab, "size": s} for lab, s in dropped]}
    lines = [f"{e.label}\t{e.size}" for e in entries]
    lines.append(f"# {len(entries)} rings; excluded by caps: " + (", ".join(f"{lab} ({s})" for lab, s in dropped) or "none"))
    _emit(data, "\n".join(lines), config)
    return 0


_COMMANDS = {"analyze": cmd_analyze, "classify": cmd_classify, "claims": cmd_claims, "explain": cmd_explain,
             "iso": cmd_iso, "corpus": cmd_corpus}


def _error_line(exc: Exception) -> str:
    record = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        record["position"] = exc.position
    return json.dumps(record, sort_keys=True)


def main(argv: Sequence[str] | None = None, env: dict[str, str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    try:
        config = _config(args, dict(os.environ) if env is None else env)
        with table_cap_override(config.table_cap):
            return _COMMANDS[args.command](args, config)
    except RingError as exc:
        print(_error_line(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(_error_line(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
