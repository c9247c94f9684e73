"""Graph file formats: graph6, whitespace edge lists, and DIMACS.

graph6 is the primary interchange format: one graph per line, ASCII bytes
with offset 63, upper adjacency triangle packed column by column.  Edge-list
files carry one ``u v`` pair per line plus an optional ``n=<int>`` header for
isolated vertices; arbitrary labels are relabeled to 0..n-1 in first-seen
order, so edge-list round trips preserve the graph only up to isomorphism.
DIMACS files (``p edge n m`` / ``e u v``) are 1-indexed on disk and converted
to 0-indexed in memory.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .errors import FormatError
from .graph import Graph

GRAPH6 = "graph6"
EDGES = "edges"
DIMACS = "dimacs"

_G6_MAX_SHORT = 62
_G6_MAX_LONG = 258047  # 2^18 - 1, three 6-bit groups


def encode_graph6(g: Graph) -> str:
    """One-line graph6 encoding (no trailing newline, no ``>>graph6<<`` header)."""
    n = g.n
    if n <= _G6_MAX_SHORT:
        head = [n + 63]
    elif n <= _G6_MAX_LONG:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise FormatError(f"graph6 writer supports at most {_G6_MAX_LONG} vertices")
    masks = g.adjacency_masks()
    out = bytearray(head)
    acc = 0
    nbits = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            acc = (acc << 1) | ((mj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(line: str) -> Graph:
    """Parse one graph6 line (an optional ``>>graph6<<`` prefix is ignored)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 line")
    data = s.encode("ascii", errors="strict")
    if any(b < 63 or b > 126 for b in data):
        raise FormatError(f"invalid graph6 byte in {line!r}")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise FormatError("graph6 inputs beyond 258047 vertices are unsupported")
        if len(data) < 4:
            raise FormatError("truncated graph6 vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    need = n * (n - 1) // 2
    nbytes = (need + 5) // 6
    if len(data) - pos != nbytes:
        raise FormatError(
            f"graph6 body length {len(data) - pos} != expected {nbytes} for n={n}"
        )
    bits = 0
    for b in data[pos:]:
        bits = (bits << 6) | (b - 63)
    bits >>= (6 * nbytes - need) if need else 0
    edges = []
    k = need
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if (bits >> k) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_edge_list(text: str) -> Graph:
    header_n: int | None = None
    labels: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("n="):
            try:
                header_n = int(line[2:])
            except ValueError as exc:
                raise FormatError(f"bad vertex-count header: {raw!r}") from exc
            if header_n < 0:
                raise FormatError("vertex count must be non-negative")
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"expected 'u v' pair, got {raw!r}")
        pair = []
        for tok in tokens:
            if tok not in labels:
                labels[tok] = len(labels)
            pair.append(labels[tok])
        if pair[0] == pair[1]:
            raise FormatError(f"loop {raw!r} not allowed")
        edges.append((pair[0], pair[1]))
    n = len(labels)
    if header_n is not None:
        if n > header_n:
            raise FormatError(
                f"header says n={header_n} but {n} distinct labels appear"
            )
        n = header_n
    return Graph(n, edges)


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def decode_dimacs(text: str) -> Graph:
    n: int | None = None
    declared_m: int | None = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            tokens = line.split()
            if len(tokens) != 4 or tokens[1].lower() != "edge":
                raise FormatError(f"bad problem line: {raw!r}")
            n, declared_m = int(tokens[2]), int(tokens[3])
            continue
        if line.startswith("e"):
            if n is None:
                raise FormatError("edge line before problem line")
            tokens = line.split()
            if len(tokens) != 3:
                raise FormatError(f"bad edge line: {raw!r}")
            u, v = int(tokens[1]) - 1, int(tokens[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge {raw!r} out of range for n={n}")
            edges.append((u, v))
            continue
        raise FormatError(f"unrecognized DIMACS line: {raw!r}")
    if n is None:
        raise FormatError("missing DIMACS problem line")
    g = Graph(n, edges)
    if declared_m is not None and g.m != declared_m:
        raise FormatError(f"problem line declares {declared_m} edges, file has {g.m}")
    return g


def infer_format(path: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return GRAPH6
    if suffix in (".col", ".dimacs", ".clq"):
        return DIMACS
    if suffix in (".edges", ".edgelist", ".txt"):
        return EDGES
    return GRAPH6


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def load_graphs(path: str, fmt: str | None = None) -> list[Graph]:
    """Read every graph in a file (graph6 holds one per line; the other
    formats hold exactly one)."""
    fmt = fmt or infer_format(path)
    text = _read_text(path)
    if fmt == GRAPH6:
        return [decode_graph6(line) for line in text.splitlines() if line.strip()]
    if fmt == EDGES:
        return [decode_edge_list(text)]
    if fmt == DIMACS:
        return [decode_dimacs(text)]
    raise FormatError(f"unknown format {fmt!r}")


def load_graph(path: str, fmt: str | None = None) -> Graph:
    graphs = load_graphs(path, fmt)
    if len(graphs) != 1:
        raise FormatError(f"expected exactly one graph in {path}, found {len(graphs)}")
    return graphs[0]


def save_graph(g: Graph, path: str, fmt: str | None = None) -> None:
    fmt = fmt or infer_format(path)
    if fmt == GRAPH6:
        text = encode_graph6(g) + "\n"
    elif fmt == EDGES:
        text = encode_edge_list(g)
    elif fmt == DIMACS:
        text = encode_dimacs(g)
    else:
        raise FormatError(f"unknown format {fmt!r}")
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def save_graphs(graphs: list[Graph], path: str) -> None:
    """Write graphs as one graph6 line each."""
    text = "".join(encode_graph6(g) + "\n" for g in graphs)
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
