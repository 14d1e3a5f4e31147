"""Simple undirected graphs on vertices 0..n-1 with bitset adjacency.

Vertex sets are plain ``int`` bitmasks internally; the public API takes any
iterable of vertices and hands back ``frozenset`` objects so results read
naturally.  Python ints are arbitrary precision, so the same code path
serves n > 64.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidEdge, ParseError

INF = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InvalidEdge(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label array must have length n")
        for u, row in enumerate(self.adj):
            if row >> self.n:
                raise InvalidEdge(f"vertex {u} has a neighbour >= n")
            if row >> u & 1:
                raise InvalidEdge(f"self-loop at {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidEdge(f"asymmetric adjacency between {u} and {v}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, label: str) -> int:
        if not self.labels:
            return int(label)
        return self.labels.index(label)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def dist(self) -> "DistanceMatrix":
        return distances(self)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self)


@dataclass(frozen=True)
class DistanceMatrix:
    rows: tuple[tuple[float, ...], ...]

    def __getitem__(self, uv):
        u, v = uv
        return self.rows[u][v]

    def __len__(self):
        return len(self.rows)


def build_graph(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise InvalidEdge("negative vertex count")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)), g.labels)


def corona_k1(g: Graph) -> Graph:
    """Attach one pendant to every vertex; pendant ``i + n`` hangs off ``i``."""
    n = g.n
    adj = [row | 1 << (i + n) for i, row in enumerate(g.adj)] + [1 << i for i in range(n)]
    base = list(g.labels) if g.labels else [str(i) for i in range(n)]
    return Graph(2 * n, tuple(adj), tuple(base + [f"v{i}" for i in range(n)]))


def add_pendants(g: Graph, anchors: Sequence[int], labels: Sequence[str] | None = None) -> Graph:
    n = g.n
    adj = list(g.adj) + [0] * len(anchors)
    for k, a in enumerate(anchors):
        adj[a] |= 1 << (n + k)
        adj[n + k] = 1 << a
    new_labels = None
    if g.labels is not None or labels is not None:
        base = list(g.labels) if g.labels else [str(i) for i in range(n)]
        extra = list(labels) if labels is not None else [str(n + k) for k in range(len(anchors))]
        new_labels = tuple(base + extra)
    return Graph(n + len(anchors), tuple(adj), new_labels)


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that vertex ``v`` becomes ``perm[v]``."""
    adj = [0] * g.n
    for u in range(g.n):
        adj[perm[u]] = to_mask(perm[v] for v in bits(g.adj[u]))
    return Graph(g.n, tuple(adj))


def induced(g: Graph, vertices: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(vertices)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return build_graph(len(vertices), edges)


def bfs_layers(g: Graph, source: int) -> list[float]:
    d = [INF] * g.n
    d[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            d[v] = level
        seen |= nxt
        frontier = nxt
    return d


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_layers(g, s)) for s in range(g.n)))


def component_of(g: Graph, v: int) -> int:
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_of(g, 0) == g.full


def common_neighbor_excess(g: Graph, k: int) -> tuple[int, int] | None:
    """A vertex pair with at least ``k`` common neighbours, if any.

    ``None`` means ``g`` has no K_{2,k} subgraph; with k=2, no 4-cycle.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.adj[u] & g.adj[v]).bit_count() >= k:
                return (u, v)
    return None


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.connected


# graph6 ----------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside 63..126", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
        if n <= 62:
            raise ParseError("non-canonical long-form header", base)
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
        if n <= 258047:
            raise ParseError("non-canonical long-form header", base)
    else:
        raise ParseError("truncated size header", base)
    need_bits = n * (n - 1) // 2
    need = (need_bits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", base + pos + min(len(body), need))
    pad = need * 6 - need_bits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", base + pos + need - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6]
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# edge-list text --------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise ParseError(f"non-integer token in {body!r}", offset) from None
            if n is None:
                if len(nums) != 1:
                    raise ParseError("first line must hold the vertex count", offset)
                n = nums[0]
            else:
                if len(nums) != 2:
                    raise ParseError(f"expected 'u v', got {body!r}", offset)
                edges.append((nums[0], nums[1]))
        offset += len(line.encode())
    if n is None:
        raise ParseError("missing vertex count", 0)
    return build_graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> list[Graph]:
    """Parse either one edge-list graph or a stream of graph6 lines."""
    stripped = [ln.strip() for ln in text.splitlines()]
    content = [ln for ln in stripped if ln and not ln.startswith("#")]
    if not content:
        raise ParseError("no graph in input", 0)
    # graph6 bytes start at "?", so a leading digit can only be an edge list
    if content[0][0].isdigit():
        return [parse_edgelist(text)]
    return [parse_graph6(ln) for ln in content]
