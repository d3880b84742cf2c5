"""Line-oriented instance files.

::

    c comment lines are ignored
    p ffactor <n> <m> <weighted:0|1>
    f <f(0)> <f(1)> ... <f(n-1)>
    e <u> <v> [<w>]        (m lines; integer weight iff weighted)
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

from cfactor.graph import DegreeSpec, Graph, ValidationError

log = logging.getLogger(__name__)


class ParseError(ValidationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _tokens(raw: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((raw[i:j], i + 1))
        i = j
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} {text!r} is not an integer", lineno, col) from None


def parse_instance(text: str) -> tuple[Graph, DegreeSpec]:
    """Parse and validate an instance.

    Raises:
        ParseError: with line and column of the first problem found.
    """
    header = None
    fvals: list[int] | None = None
    edges: list[tuple[int, int]] = []
    weights: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        toks = _tokens(raw)
        if not toks or toks[0][0] == "c":
            continue
        kind = toks[0][0]
        if kind == "p":
            if header is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(toks) != 5 or toks[1][0] != "ffactor":
                raise ParseError("expected 'p ffactor <n> <m> <weighted>'", lineno)
            n = _int(toks[2], lineno, "vertex count")
            m = _int(toks[3], lineno, "edge count")
            flag = _int(toks[4], lineno, "weighted flag")
            if n < 0 or m < 0:
                raise ParseError("counts must be non-negative", lineno, toks[2][1])
            if flag not in (0, 1):
                raise ParseError("weighted flag must be 0 or 1", lineno, toks[4][1])
            header = (n, m, bool(flag))
            continue
        if header is None:
            raise ParseError("problem line must come first", lineno)
        n, m, weighted = header
        if kind == "f":
            if fvals is not None:
                raise ParseError("duplicate f line", lineno)
            if len(toks) - 1 != n:
                raise ParseError(f"f line needs {n} values, found {len(toks) - 1}", lineno)
            fvals = []
            for tok in toks[1:]:
                x = _int(tok, lineno, "degree target")
                if x < 0:
                    raise ParseError(f"negative degree target {x}", lineno, tok[1])
                fvals.append(x)
        elif kind == "e":
            want = 4 if weighted else 3
            if len(toks) < want:
                if weighted and len(toks) == 3:
                    raise ParseError("missing weight", lineno, len(raw.rstrip()) + 1)
                raise ParseError("edge line needs two endpoints", lineno)
            if len(toks) > want:
                raise ParseError("unexpected extra field on edge line", lineno, toks[want][1])
            u = _int(toks[1], lineno, "endpoint")
            v = _int(toks[2], lineno, "endpoint")
            if u == v:
                raise ParseError("self-loop", lineno, toks[2][1])
            for tok, x in ((toks[1], u), (toks[2], v)):
                if not 0 <= x < n:
                    raise ParseError(f"vertex {x} out of range [0, {n})", lineno, tok[1])
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ParseError(f"duplicate edge (first on line {seen[key]})", lineno)
            seen[key] = lineno
            edges.append(key)
            if weighted:
                w = _int(toks[3], lineno, "weight")
                if w < 0:
                    raise ParseError("negative weight", lineno, toks[3][1])
                weights.append(w)
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise ParseError("missing problem line", last_line or 1)
    n, m, weighted = header
    if fvals is None:
        raise ParseError("missing f line", last_line or 1)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", last_line or 1)
    G = Graph.from_edges(n, edges, weights if weighted else None)
    f = DegreeSpec(tuple(fvals))
    if not f.parity_ok():
        log.warning("sum of degree targets is odd; no f-factor can exist")
    return G, f


def serialize_instance(G: Graph, f: DegreeSpec, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p ffactor {G.n} {G.m} {int(G.weighted)}")
    lines.append(" ".join(["f", *map(str, f.values)]))
    for i, (u, v) in enumerate(G.edges):
        if G.weighted:
            w = G.weights[i]
            if not isinstance(w, int):
                raise ValidationError("only integer weights can be written")
            lines.append(f"e {u} {v} {w}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def read_instance(path) -> tuple[Graph, DegreeSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(path, G: Graph, f: DegreeSpec, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(G, f, comments))
