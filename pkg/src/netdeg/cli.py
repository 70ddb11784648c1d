"""Command-line interface.

Exit codes: 0 yes / success, 1 a definite no, 2 usage or bound errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, counting, oracle
from .characterize import (
    TightnessWitness,
    is_tight_bidirected,
    is_tight_directed,
    is_tight_undirected,
    violation,
)
from .errors import BoundExceeded, DomainRestricted, NetdegError, NotRealizable, PreconditionFailed
from .formats import dumps_json, dumps_text, format_sequence, loads, parse_sequence, write_graph
from .graphs import BIDIRECTED, DIRECTED, UNDIRECTED, Bigraph, Digraph, Graph, kind_of, net_degree
from .ops import dumps_script, loads_script, replay, script_from_json, script_to_json, transform
from .ops.script import FILE_KIND, KIND_FILE
from .realize import realize

_TIGHT = {UNDIRECTED: is_tight_undirected, DIRECTED: is_tight_directed, BIDIRECTED: is_tight_bidirected}


class UsageError(Exception):
    pass


def _witness_obj(v):
    return {
        "reason": v.reason,
        "S": sorted(v.S),
        "T": sorted(v.T),
        "I": None if v.I is None else sorted(v.I),
        "index": v.index,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "text": v.describe(),
    }


def _tight_obj(w: TightnessWitness):
    return {"S": sorted(w.S), "T": sorted(w.T), "index": w.index}


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# --- subcommands --------------------------------------------------------------


def cmd_check(args) -> int:
    kind = FILE_KIND[args.kind]
    d = parse_sequence(args.seq)
    v = violation(d, kind)
    if v is None:
        _emit(args, {"kind": args.kind, "seq": list(d), "realizable": True}, "realizable")
        return 0
    _emit(args, {"kind": args.kind, "seq": list(d), "realizable": False, "witness": _witness_obj(v)},
          f"not realizable: {v.describe()}")
    return 1


def cmd_realize(args) -> int:
    kind = FILE_KIND[args.kind]
    d = parse_sequence(args.seq)
    g = realize(d, kind)
    if args.out:
        write_graph(g, args.out, as_json=args.json)
    else:
        sys.stdout.write(dumps_json(g) + "\n" if args.json else dumps_text(g))
    return 0


def _read(path):
    with open(path) as fh:
        return fh.read()


def cmd_transform(args) -> int:
    a = loads(_read(args.a))
    b = loads(_read(args.b))
    if type(a) is not type(b):
        raise UsageError(f"{args.a} and {args.b} hold different graph kinds")
    kind = kind_of(a)
    if args.replay:
        text = _read(args.replay)
        skind, script = script_from_json(text) if text.lstrip().startswith("{") else loads_script(text)
        if skind != kind:
            raise UsageError(f"script is for {KIND_FILE[skind]}s, inputs are {KIND_FILE[kind]}s")
        try:
            end = replay(a, script)
        except (PreconditionFailed, AssertionError) as exc:
            _emit(args, {"ok": False, "error": str(exc)}, f"replay failed: {exc}")
            return 1
        ok = end == b
        _emit(args, {"ok": ok, "steps": len(script)},
              f"replay ok: target reached after {len(script)} operation(s)" if ok else "replay ends away from the target")
        return 0 if ok else 1
    script = transform(a, b)
    out = script_to_json(script, kind) + "\n" if args.json else dumps_script(script, kind)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _classify_sequence(kind, d, g=None) -> dict:
    """Sequence-level facts, then graph classes of ``g`` (default: the canonical realization)."""
    report = {"kind": KIND_FILE[kind], "seq": list(d)}
    v = violation(d, kind)
    report["realizable"] = v is None
    if v is not None:
        report["witness"] = _witness_obj(v)
        return report
    w = _TIGHT[kind](d)
    report["tight"] = w is not None
    if w is not None:
        report["tight_witness"] = _tight_obj(w)
    if g is None:
        g = realize(d, kind)
    if kind == UNDIRECTED:
        report["unique"] = classify.is_unique_undirected(d)
    elif kind == DIRECTED:
        report["unique"] = classify.is_unique_digraph(g)
    else:
        report["unique"] = classify.is_unique_bigraph_sequence(d)
    report.update(_classify_graph(g))
    return report


def _classify_graph(g) -> dict:
    out: dict = {}
    classes = []
    if isinstance(g, Graph):
        if classify.is_threshold(g):
            classes.append("threshold")
            out["certificate"] = list(classify.vertex_certificate_undirected(g))
        ws = classify.is_weakly_split_graph(g)
        if ws is not None:
            classes.append("weakly-split")
            out["partition"] = {"V_c": sorted(ws.V_c), "V_i": sorted(ws.V_i), "V_o": sorted(ws.V_o)}
    elif isinstance(g, Digraph):
        ws = classify.is_weakly_split_digraph(g)
        if ws is not None:
            classes.append("weakly-split")
            out["partition"] = {"V_s": sorted(ws.V_s), "V_t": sorted(ws.V_t)}
        if classify.is_poset(g):
            classes.append("poset")
        if classify.is_unique_digraph_structural(g):
            classes.append("unique-poset")
            out["rank_partition"] = [sorted(b) for b in classify.rank_partition(g)]
            out["incomparable_pairs"] = classify.incomparable_pairs(g)
        else:
            out["forbidden"] = [[lab, list(t)] for lab, t in classify.forbidden_triples(g)][:5]
    elif isinstance(g, Bigraph):
        if classify.is_unique_bigraph(g):
            classes.append("sinks-and-sources")
    out["classes"] = classes
    return out


def _classify_text(report) -> str:
    lines = [f"kind: {report['kind']}"]
    if "seq" in report:
        lines.append(f"sequence: {format_sequence(report['seq'])}")
    if not report.get("realizable", True):
        lines.append(f"realizable: no ({report['witness']['text']})")
        return "\n".join(lines)
    for key in ("tight", "unique"):
        if key in report:
            lines.append(f"{key}: {'yes' if report[key] else 'no'}")
    if "tight_witness" in report:
        w = report["tight_witness"]
        if w["index"] is not None:
            lines.append(f"tight witness: |d_{w['index']}| = n-1")
        else:
            lines.append(f"tight witness: S={w['S']} T={w['T']}")
    lines.append(f"classes: {', '.join(report['classes']) or 'none'}")
    for key in ("certificate", "partition", "rank_partition", "incomparable_pairs", "forbidden"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    if args.file:
        g = loads(_read(args.file))
        kind = kind_of(g)
        report = _classify_sequence(kind, net_degree(g).d, g)
    else:
        if not args.seq or not args.kind:
            raise UsageError("classify needs --kind with --seq, or a graph file")
        kind = FILE_KIND[args.kind]
        report = _classify_sequence(kind, parse_sequence(args.seq))
    _emit(args, report, _classify_text(report))
    return 0 if report["realizable"] else 1


_COUNTS = {
    ("graph", "all"): counting.count_undirected,
    ("graph", "tight"): counting.count_tight_undirected,
    ("digraph", "all"): counting.count_directed,
    ("digraph", "tight"): counting.count_tight_directed,
    ("digraph", "unique"): counting.count_unique_digraph,
    ("bigraph", "all"): counting.count_bidirected,
    ("bigraph", "tight"): counting.count_tight_bidirected,
    ("bigraph", "unique"): counting.count_unique_bigraph,
}


def cmd_count(args) -> int:
    fn = _COUNTS.get((args.kind, args.what))
    if fn is None:
        raise UsageError(f"no formula for --kind {args.kind} --what {args.what}; try the oracle subcommand")
    value = fn(args.n)
    _emit(args, {"kind": args.kind, "n": args.n, "what": args.what, "count": str(value)}, str(value))
    return 0


def cmd_oracle(args) -> int:
    kind = FILE_KIND[args.kind]
    if args.report == "sequences":
        report = oracle.sequences_report(args.n, kind)
    elif args.report == "fibers":
        report = oracle.fibers_report(args.n, kind)
    elif args.report == "tight":
        seqs = sorted(oracle.tight_sequences(args.n, kind))
        report = {"kind": kind, "n": args.n, "count": len(seqs), "sequences": [list(d) for d in seqs]}
    else:
        report = oracle.connectivity_report(args.n, kind)
    if args.json:
        print(oracle.report_to_json(report))
    else:
        sys.stdout.write(oracle.report_to_text(report))
    if args.report == "connectivity" and not report["all_connected"]:
        return 1
    return 0


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="netdeg", description="Net-degree sequences of graphs, digraphs and bigraphs.")
    p.add_argument("--json", action="store_true", help="machine-readable output; errors as JSON on stderr")
    p.add_argument("--threads", type=int, default=1, help="worker cap (computations currently run single-threaded)")
    sub = p.add_subparsers(dest="command", required=True)
    kinds = sorted(FILE_KIND)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    sp = add("check", cmd_check, "test realizability, printing a violated inequality if any")
    sp.add_argument("--kind", choices=kinds, required=True)
    sp.add_argument("--seq", required=True, help="comma-separated, e.g. 2,-2,3,1")

    sp = add("realize", cmd_realize, "construct a realization")
    sp.add_argument("--kind", choices=kinds, required=True)
    sp.add_argument("--seq", required=True)
    sp.add_argument("--out", help="write the graph here instead of stdout")

    sp = add("transform", cmd_transform, "script of operations turning graph A into graph B")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--out", help="write the script here instead of stdout")
    sp.add_argument("--replay", metavar="SCRIPT", help="check SCRIPT carries A to B instead of computing one")

    sp = add("classify", cmd_classify, "tightness, uniqueness and structural classes")
    sp.add_argument("file", nargs="?", help="graph file (kind read from its header)")
    sp.add_argument("--kind", choices=kinds)
    sp.add_argument("--seq")

    sp = add("count", cmd_count, "exact counts from formulas")
    sp.add_argument("--kind", choices=kinds, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--what", choices=("all", "tight", "unique"), default="all")

    sp = add("oracle", cmd_oracle, "brute-force ground truth")
    sp.add_argument("--kind", choices=kinds, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--report", choices=("sequences", "fibers", "tight", "connectivity"), default="sequences")
    return p


def _fail(args, exc, code) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    else:
        print(f"netdeg: {exc}", file=sys.stderr)
    return code


def _glue_negative_values(argv):
    """Let ``--seq -2,1,1`` through; argparse would read ``-2,1,1`` as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--seq":
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"--seq={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except NotRealizable as exc:
        return _fail(args, exc, 1)
    except (UsageError, BoundExceeded, DomainRestricted, OSError) as exc:
        return _fail(args, exc, 2)
    except (NetdegError, ValueError) as exc:
        return _fail(args, exc, 2)


if __name__ == "__main__":
    sys.exit(main())
