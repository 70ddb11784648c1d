"""Operation scripts: replay, inversion and the line-oriented text format.

A script file starts with ``script <graph|digraph|bigraph>`` and lists one
operation per line::

    script bigraph
    GAMMA v=3 e1=3-5 e2=3-7
    TWOSWITCH 1 2 3 4
    LAMBDA+ u=1 v=2 w=3
    DELTA- 1 2 3 dir=123
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from ..errors import PreconditionFailed
from ..graphs import BIDIRECTED, DIRECTED, UNDIRECTED, kind_of, net_degree
from .records import (
    BidirTwoSwitch,
    DeltaBigraph,
    DeltaDigraph,
    Gamma,
    LambdaBigraph,
    LambdaDigraph,
    OpRecord,
    Sigma,
    TwoSwitch,
    _dir_to_cycle,
)

OpScript = list  # ordered list of OpRecord

FILE_KIND = {"graph": UNDIRECTED, "digraph": DIRECTED, "bigraph": BIDIRECTED}
KIND_FILE = {v: k for k, v in FILE_KIND.items()}
_SIGN = {"+": 1, "-": -1}


def invert(script: Sequence[OpRecord]) -> list:
    """Script undoing ``script``: inverses in reverse order."""
    return [op.inverse() for op in reversed(script)]


def replay(g, script: Iterable[OpRecord], check_degrees: bool = True):
    """Apply every record in turn and return the final graph.

    With ``check_degrees`` the degree sequence is compared after every step;
    bare Sigma moves are exempt since they are not degree preserving.
    """
    ds = net_degree(g) if check_degrees else None
    for step, op in enumerate(script):
        if op.kind != kind_of(g):
            raise PreconditionFailed(f"step {step}: {op.tag} does not apply to a {kind_of(g)} graph")
        try:
            g = op.apply(g)
        except PreconditionFailed as exc:
            raise PreconditionFailed(f"step {step} ({op.to_text()}): {exc}") from None
        if check_degrees and not isinstance(op, Sigma) and net_degree(g) != ds:
            raise AssertionError(f"step {step} ({op.to_text()}) changed the degree sequence")
    return g


def replay_states(g, script: Iterable[OpRecord]) -> list:
    """All intermediate graphs, starting with ``g`` itself."""
    states = [g]
    for op in script:
        states.append(op.apply(states[-1]))
    return states


def dumps_script(script: Sequence[OpRecord], kind: str) -> str:
    lines = [f"script {KIND_FILE[kind]}"]
    for op in script:
        if op.kind != kind:
            raise ValueError(f"{op.tag} record in a {kind} script")
        lines.append(op.to_text())
    return "\n".join(lines) + "\n"


def _kv(tokens):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ValueError(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _edge_token(tok):
    a, b = tok.split("-")
    return int(a), int(b)


def parse_op(line: str, kind: str) -> OpRecord:
    toks = line.split()
    head, rest = toks[0], toks[1:]
    if head == "TWOSWITCH":
        nodes = [int(t) for t in rest]
        if len(nodes) != 4:
            raise ValueError(f"TWOSWITCH needs four nodes: {line!r}")
        if kind == UNDIRECTED:
            return TwoSwitch(*nodes)
        if kind == BIDIRECTED:
            return BidirTwoSwitch(*nodes)
    elif head in ("DELTA+", "DELTA-"):
        nodes = [int(t) for t in rest[:3]]
        direction = _kv(rest[3:]).get("dir", "123")
        cycle = _dir_to_cycle(nodes, direction)
        add = head == "DELTA+"
        if kind == DIRECTED:
            return DeltaDigraph(add, cycle)
        if kind == BIDIRECTED:
            return DeltaBigraph(add, cycle)
    elif head in ("LAMBDA+", "LAMBDA-"):
        kv = _kv(rest)
        u, v, w = int(kv["u"]), int(kv["v"]), int(kv["w"])
        expand = head == "LAMBDA+"
        if kind == DIRECTED:
            return LambdaDigraph(expand, u, v, w)
        if kind == BIDIRECTED:
            return LambdaBigraph(expand, u, v, w, _SIGN[kv.get("sign", "+")])
    elif head == "GAMMA" and kind == BIDIRECTED:
        kv = _kv(rest)
        return Gamma(int(kv["v"]), _edge_token(kv["e1"]), _edge_token(kv["e2"]))
    elif head == "SIGMA" and kind == BIDIRECTED:
        kv = _kv(rest)
        was = _SIGN[kv["was"]] if "was" in kv else None
        return Sigma(int(kv["v"]), int(kv["old"]), int(kv["new"]), _SIGN[kv["sign"]], was)
    raise ValueError(f"unknown {kind} operation {line!r}")


def loads_script(text: str) -> tuple[str, list]:
    """Parse a script file into ``(kind, records)``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty script")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "script" or header[1] not in FILE_KIND:
        raise ValueError(f"bad script header {lines[0]!r}")
    kind = FILE_KIND[header[1]]
    return kind, [parse_op(ln, kind) for ln in lines[1:]]


def script_to_json(script: Sequence[OpRecord], kind: str) -> str:
    return json.dumps({"kind": KIND_FILE[kind], "ops": [op.to_json() for op in script]})


def _op_from_json(obj: dict, kind: str) -> OpRecord:
    op = obj["op"]
    if op == "TWOSWITCH":
        return (TwoSwitch if kind == UNDIRECTED else BidirTwoSwitch)(*obj["nodes"])
    if op == "DELTA":
        cls = DeltaDigraph if kind == DIRECTED else DeltaBigraph
        return cls(obj["add"], tuple(obj["cycle"]))
    if op == "LAMBDA":
        if kind == DIRECTED:
            return LambdaDigraph(obj["expand"], obj["u"], obj["v"], obj["w"])
        return LambdaBigraph(obj["expand"], obj["u"], obj["v"], obj["w"], obj.get("sign", 1))
    if op == "GAMMA":
        return Gamma(obj["v"], tuple(obj["e1"]), tuple(obj["e2"]))
    if op == "SIGMA":
        return Sigma(obj["v"], obj["old"], obj["new"], obj["sign"], obj.get("was"))
    raise ValueError(f"unknown operation {op!r}")


def script_from_json(text: str) -> tuple[str, list]:
    obj = json.loads(text)
    kind = FILE_KIND[obj["kind"]]
    return kind, [_op_from_json(o, kind) for o in obj["ops"]]
