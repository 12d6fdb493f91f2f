"""Line-based ASCII file formats.

Graph::

    p graph <n> <m>
    e <u> <v>            (m lines, u < v, ascending)

Certificate::

    c <cover|partition> <k>
    B <u1>,<u2>,... : <v1>,<v2>,...

Subcube family::

    s <n> <d>
    <word over 0/1/*>    (n lines, each of length d)
"""

from __future__ import annotations

from pathlib import Path

from .graph import MODES, Biclique, BicliqueCertificate, Graph
from .subcube import Subcube, SubcubeFamily


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [ln.rstrip("\r") for ln in lines]


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def format_graph(g: Graph) -> str:
    out = [f"p graph {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in g.sorted_edges]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty graph file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["p", "graph"]:
        raise ParseError(1, "expected 'p graph <n> <m>'")
    n, m = _int(head[2], 1), _int(head[3], 1)
    if n < 0 or m < 0:
        raise ParseError(1, "negative size")
    if len(lines) - 1 != m:
        raise ParseError(len(lines) + 1, f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    prev = None
    for lineno, ln in enumerate(lines[1:], 2):
        tok = ln.split()
        if len(tok) != 3 or tok[0] != "e":
            raise ParseError(lineno, "expected 'e <u> <v>'")
        u, v = _int(tok[1], lineno), _int(tok[2], lineno)
        if not 1 <= u < v <= n:
            raise ParseError(lineno, f"need 1 <= u < v <= {n}, got {u} {v}")
        if prev is not None and (u, v) <= prev:
            raise ParseError(lineno, "edges not in strictly ascending order")
        prev = (u, v)
        edges.append((u, v))
    return Graph(n, frozenset(edges))


def format_certificate(cert: BicliqueCertificate) -> str:
    out = [f"c {cert.mode} {len(cert)}"]
    for b in cert:
        a = ",".join(map(str, sorted(b.class0)))
        c = ",".join(map(str, sorted(b.class1)))
        out.append(f"B {a} : {c}")
    return "\n".join(out) + "\n"


def _side(tok: str, lineno: int) -> frozenset[int]:
    tok = tok.strip()
    if not tok:
        return frozenset()
    vals = [_int(t.strip(), lineno) for t in tok.split(",")]
    if vals != sorted(set(vals)):
        raise ParseError(lineno, "biclique side not strictly ascending")
    return frozenset(vals)


def parse_certificate(text: str) -> BicliqueCertificate:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty certificate file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "c" or head[1] not in MODES:
        raise ParseError(1, "expected 'c <cover|partition> <k>'")
    k = _int(head[2], 1)
    if len(lines) - 1 != k:
        raise ParseError(len(lines) + 1, f"expected {k} biclique lines, found {len(lines) - 1}")
    bicliques = []
    for lineno, ln in enumerate(lines[1:], 2):
        if not ln.startswith("B ") or ln.count(":") != 1:
            raise ParseError(lineno, "expected 'B <side> : <side>'")
        left, right = ln[2:].split(":")
        bicliques.append(Biclique(_side(left, lineno), _side(right, lineno)))
    return BicliqueCertificate(tuple(bicliques), head[1])


def format_family(f: SubcubeFamily) -> str:
    out = [f"s {len(f)} {f.d}"] + [s.word for s in f]
    return "\n".join(out) + "\n"


def parse_family(text: str) -> SubcubeFamily:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, "empty subcube file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "s":
        raise ParseError(1, "expected 's <n> <d>'")
    n, d = _int(head[1], 1), _int(head[2], 1)
    if n < 0 or d < 0:
        raise ParseError(1, "negative size")
    body = lines[1:]
    # d = 0 words are empty lines, which a trailing-newline strip may have eaten
    if d == 0 and len(body) < n and all(not w for w in body):
        body = [""] * n
    if len(body) != n:
        raise ParseError(len(lines) + 1, f"expected {n} subcube lines, found {len(body)}")
    members = []
    for lineno, w in enumerate(body, 2):
        if len(w) != d or set(w) - set("01*"):
            raise ParseError(lineno, f"expected a word of length {d} over 0, 1, *")
        members.append(Subcube(w))
    return SubcubeFamily(tuple(members), d)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def read_certificate(path: str | Path) -> BicliqueCertificate:
    return parse_certificate(Path(path).read_text())


def read_family(path: str | Path) -> SubcubeFamily:
    return parse_family(Path(path).read_text())


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, newline="\n")
