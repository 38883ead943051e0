"""Text formats for structures and graphs.

``.2s`` files: header line ``2s v1``, then ``n <N>`` and ``k <K>``, then N
rows of N whitespace-separated tokens; token j of row i is the label of the
ordered pair (i, j), with ``-`` on the diagonal.

``.g`` files: header ``g v1``, then ``n <N>``, then one ``u v`` edge per
line. ``.t`` files are the tournament analogue with one arc per line.

Serialization is canonical (edges sorted, single spaces), so parsing and
re-serializing a file produced here is byte-exact.
"""

from __future__ import annotations

from .core import TwoStructure, from_graph, from_matrix
from .errors import FormatError
from .graphs import Graph


def serialize_two_structure(sigma: TwoStructure) -> str:
    lines = ["2s v1", f"n {sigma.n}", f"k {sigma.k}"]
    for v in range(sigma.n):
        row = []
        for w in range(sigma.n):
            row.append("-" if v == w else str(sigma.label(v, w)))
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def _split_header(text: str, magic: str) -> list[str]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != f"{magic} v1":
        raise FormatError(f"expected header '{magic} v1'")
    return lines


def _read_count(line: str, name: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != name or not parts[1].lstrip("-").isdigit():
        raise FormatError(f"expected '{name} <count>', got {line!r}")
    return int(parts[1])


def parse_two_structure(text: str) -> TwoStructure:
    lines = _split_header(text, "2s")
    if len(lines) < 3:
        raise FormatError("missing n/k lines")
    n = _read_count(lines[1], "n")
    k = _read_count(lines[2], "k")
    rows = lines[3:]
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, got {len(rows)}")
    table: list[list[object]] = []
    for i, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != n:
            raise FormatError(f"row {i} has {len(tokens)} tokens, expected {n}")
        parsed: list[object] = []
        for tok in tokens:
            if tok == "-":
                parsed.append(None)
            elif tok.isdigit():
                parsed.append(int(tok))
            else:
                raise FormatError(f"bad token {tok!r} in row {i}")
        table.append(parsed)
    return from_matrix(n, k, table)


def serialize_graph(g: Graph, as_tournament: bool = False) -> str:
    magic = "t" if as_tournament else "g"
    n = (max(g.vertices) + 1) if g.vertices else 0
    lines = [f"{magic} v1", f"n {n}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def _parse_pairs(lines: list[str]) -> tuple[int, list[tuple[int, int]]]:
    n = _read_count(lines[1], "n")
    pairs = []
    for ln in lines[2:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"expected 'u v', got {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return n, pairs


def parse_graph(text: str) -> Graph:
    lines = _split_header(text, "g")
    n, pairs = _parse_pairs(lines)
    return Graph.build(range(n), pairs)


def parse_graph_structure(text: str) -> TwoStructure:
    lines = _split_header(text, "g")
    n, pairs = _parse_pairs(lines)
    return from_graph(n, pairs)


def parse_tournament_structure(text: str) -> TwoStructure:
    lines = _split_header(text, "t")
    n, pairs = _parse_pairs(lines)
    return from_graph(n, pairs, as_tournament=True)


def parse_structure_auto(text: str) -> TwoStructure:
    """Dispatch on the header: .2s tables, .g graphs, .t tournaments."""
    head = text.lstrip().split("\n", 1)[0].strip()
    if head == "2s v1":
        return parse_two_structure(text)
    if head == "g v1":
        return parse_graph_structure(text)
    if head == "t v1":
        return parse_tournament_structure(text)
    raise FormatError(f"unrecognized header {head!r}")
