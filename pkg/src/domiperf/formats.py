"""graph6 parsing/emission plus an edge-list format and DOT export.

Only the short-form graph6 header is handled (n <= 62); the enumeration
universes never exceed it.  The edge-list format is 1-based: first line "n",
then one "u v" pair per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from domiperf.graph import Graph, GraphError, build_graph

_OFFSET = 63
_MAX_GRAPH6_ORDER = 62


class FormatError(ValueError):
    """Malformed interchange text; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class GraphRecord:
    """One parsed input graph together with its provenance."""

    line_number: int
    graph: Graph
    token: str


def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-by-column upper triangle: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 token into a graph with the encoded labeling."""
    if not text:
        raise FormatError("empty graph6 token", 0)
    for off, ch in enumerate(text):
        code = ord(ch)
        if not _OFFSET <= code <= 126:
            raise FormatError(f"byte {code!r} outside printable graph6 range 63..126", off)
    n = ord(text[0]) - _OFFSET
    if n > _MAX_GRAPH6_ORDER:
        raise FormatError(f"length byte encodes n={n} > {_MAX_GRAPH6_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise FormatError(f"truncated body: need {nbytes} bytes, got {len(body)}", len(text))
    if len(body) > nbytes:
        raise FormatError("trailing bytes after adjacency body", 1 + nbytes)
    bitstream = 0
    for ch in body:
        bitstream = (bitstream << 6) | (ord(ch) - _OFFSET)
    pad = nbytes * 6 - nbits
    if bitstream & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits", len(text) - 1)
    bitstream >>= pad
    edges = []
    for k, (i, j) in enumerate(_triangle_pairs(n)):
        if bitstream >> (nbits - 1 - k) & 1:
            edges.append((i, j))
    return build_graph(n, edges)


def emit_graph6(G: Graph) -> str:
    """Encode a graph as a graph6 token preserving its labeling exactly."""
    if G.n > _MAX_GRAPH6_ORDER:
        raise GraphError(f"graph6 short form supports n <= {_MAX_GRAPH6_ORDER}")
    n = G.n
    nbits = n * (n - 1) // 2
    bitstream = 0
    for i, j in _triangle_pairs(n):
        bitstream = (bitstream << 1) | (G.adj[i] >> j & 1)
    pad = (6 - nbits % 6) % 6
    bitstream <<= pad
    nbytes = (nbits + 5) // 6
    out = [chr(_OFFSET + n)]
    for k in range(nbytes - 1, -1, -1):
        out.append(chr(_OFFSET + (bitstream >> (6 * k) & 0x3F)))
    return "".join(out)


def iter_graph6(lines: Iterable[str]) -> Iterator[GraphRecord]:
    """Parse a stream of graph6 tokens, one per line; blank lines are skipped."""
    for lineno, raw in enumerate(lines, start=1):
        token = raw.strip()
        if not token:
            continue
        try:
            yield GraphRecord(lineno, parse_graph6(token), token)
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc


def parse_edge_list(text: str) -> Graph:
    """Parse "n" followed by 1-based "u v" lines into a graph."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"order line is not a number: {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-numeric endpoint in {ln!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"endpoint outside 1..{n} in {ln!r}")
        edges.append((u - 1, v - 1))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def emit_edge_list(G: Graph) -> str:
    lines = [str(G.n)]
    lines.extend(f"{u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def emit_dot(G: Graph, labels: Sequence[str] | None = None) -> str:
    """Render an undirected DOT graph for visual inspection of witnesses."""
    if labels is not None and len(labels) != G.n:
        raise GraphError("label count differs from order")
    name = lambda v: labels[v] if labels is not None else str(v + 1)
    lines = ["graph G {"]
    for v in range(G.n):
        lines.append(f'  "{name(v)}";')
    for u, v in G.edges():
        lines.append(f'  "{name(u)}" -- "{name(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
