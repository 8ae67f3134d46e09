"""Simple undirected graphs: construction, graph6/edge-list I/O, standard
families, structural predicates and exhaustive enumeration of small
connected graphs.

Vertices are the integers ``0..n-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "Graph", "GraphFamily", "StructureSummary", "GraphInputError",
    "Graph6Error", "EnumerationCapError", "from_edge_list", "parse_graph6",
    "write_graph6", "generate", "disjoint_union", "petersen",
    "rook_graph", "analyze_structure", "pair_order", "connected_masks",
    "graph_from_mask", "enumerate_connected", "parse_edge_list",
    "format_edge_list", "components",
]

DEFAULT_ENUM_CAP = 6
HARD_ENUM_CAP = 7


class GraphInputError(ValueError):
    """Invalid vertex, self-loop or bad family parameters."""


class Graph6Error(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` holds pairs ``(u, v)`` with u < v."""

    n: int
    edges: frozenset
    degrees: tuple = field(init=False, compare=False)
    neighbors: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphInputError(f"vertex count must be positive, got {self.n}")
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "degrees", tuple(len(s) for s in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse to one edge."""
    if n < 1:
        raise GraphInputError(f"vertex count must be positive, got {n}")
    edges = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


# ---------------------------------------------------------------- graph6

def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable range 63..126", i)
    n = ord(data[0]) - 63
    if n == 63:
        raise Graph6Error("graphs with more than 62 vertices are not supported", 0)
    if n == 0:
        raise Graph6Error("graph6 header encodes zero vertices", 0)
    pairs = pair_order(n)
    nbytes = (len(pairs) + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"edge field truncated: expected {nbytes} bytes, got {len(body)}",
                          1 + len(body))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after edge field", 1 + nbytes)
    edges = []
    for k, pair in enumerate(pairs):
        byte = ord(body[k // 6]) - 63
        if byte >> (5 - k % 6) & 1:
            edges.append(pair)
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphInputError(f"graph6 writer supports n <= 62, got {g.n}")
    pairs = pair_order(g.n)
    out = [chr(g.n + 63)]
    for start in range(0, len(pairs), 6):
        byte = 0
        for k, (i, j) in enumerate(pairs[start:start + 6]):
            if (i, j) in g.edges:
                byte |= 1 << (5 - k)
        out.append(chr(byte + 63))
    return "".join(out)


# ------------------------------------------------------------- edge list

def parse_edge_list(text: str) -> Graph:
    """Read the ``n m`` header followed by ``m`` lines of ``u v``."""
    tokens = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append((lineno, line.split()))
    if not tokens:
        raise GraphInputError("edge list is empty")
    lineno, header = tokens[0]
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise GraphInputError(f"line {lineno}: expected header 'n m'") from None
    if len(tokens) - 1 != m:
        raise GraphInputError(f"header declares {m} edges but {len(tokens) - 1} follow")
    pairs = []
    for lineno, parts in tokens[1:]:
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected 'u v'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: non-integer vertex") from None
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- families

@dataclass(frozen=True)
class GraphFamily:
    kind: str
    params: tuple[int, ...]

    KINDS = {"complete": 1, "path": 1, "cycle": 1, "complete_bipartite": 2,
             "star": 1, "empty": 1}

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise GraphInputError(f"unknown graph family {self.kind!r}")
        if len(self.params) != self.KINDS[self.kind]:
            raise GraphInputError(
                f"{self.kind} takes {self.KINDS[self.kind]} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise GraphInputError(f"family parameters must be positive: {self.params}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise GraphInputError("a cycle needs at least 3 vertices")


def generate(family: GraphFamily) -> Graph:
    kind, p = family.kind, family.params
    if kind == "complete":
        return from_edge_list(p[0], combinations(range(p[0]), 2))
    if kind == "path":
        return from_edge_list(p[0], ((i, i + 1) for i in range(p[0] - 1)))
    if kind == "cycle":
        n = p[0]
        return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "complete_bipartite":
        a, b = p
        return from_edge_list(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if kind == "star":
        return from_edge_list(p[0] + 1, ((0, i) for i in range(1, p[0] + 1)))
    return Graph(p[0], frozenset())


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def rook_graph(k: int) -> Graph:
    """The k x k rook's graph (line graph of K_{k,k})."""
    cells = [(r, c) for r in range(k) for c in range(k)]
    pairs = [(a, b) for a, b in combinations(range(k * k), 2)
             if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]]
    return from_edge_list(k * k, pairs)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise GraphInputError("disjoint_union needs at least one graph")
    offset = 0
    pairs = []
    for g in gs:
        pairs += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return from_edge_list(offset, pairs)


# ------------------------------------------------------------- structure

@dataclass(frozen=True)
class StructureSummary:
    connected: bool
    bipartition: tuple[frozenset, frozenset] | None
    girth: int | None
    regular_degree: int | None
    semiregular_pair: tuple[int, int] | None
    unicyclic: bool


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _two_coloring(g: Graph) -> list[int] | None:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def _girth(g: Graph) -> int | None:
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def analyze_structure(g: Graph) -> StructureSummary:
    connected = len(components(g)) == 1
    color = _two_coloring(g)
    bipartition = None
    if color is not None:
        bipartition = (frozenset(v for v in range(g.n) if color[v] == 0),
                       frozenset(v for v in range(g.n) if color[v] == 1))
    lo, hi = g.min_degree, g.max_degree
    regular = lo if lo == hi else None
    if regular is not None:
        semi = (regular, regular)
    elif lo >= 1 and all({g.degrees[u], g.degrees[v]} == {lo, hi} for u, v in g.edges):
        semi = (lo, hi)
    else:
        semi = None
    return StructureSummary(
        connected=connected,
        bipartition=bipartition,
        girth=_girth(g),
        regular_degree=regular,
        semiregular_pair=semi,
        unicyclic=connected and g.m == g.n,
    )


# ------------------------------------------------------------ enumeration

def _check_cap(n: int, allow_seven: bool) -> None:
    cap = HARD_ENUM_CAP if allow_seven else DEFAULT_ENUM_CAP
    if not 1 <= n <= cap:
        hint = "" if allow_seven or n != HARD_ENUM_CAP else " (pass allow_seven=True for n=7)"
        raise EnumerationCapError(f"enumeration supports 1 <= n <= {cap}, got {n}{hint}")


def graph_from_mask(n: int, mask: int) -> Graph:
    """Bit k of ``mask`` selects the k-th pair of :func:`pair_order`."""
    pairs = pair_order(n)
    return Graph(n, frozenset(pairs[k] for k in range(len(pairs)) if mask >> k & 1))


def connected_masks(n: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Edge masks in ``[start, stop)`` whose graph on ``n`` vertices is connected."""
    pairs = pair_order(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    full = (1 << n) - 1
    pair_bits = [(1 << i, 1 << j) for i, j in pairs]
    for mask in range(start, stop):
        adj = [0] * n
        k = 0
        mm = mask
        while mm:
            if mm & 1:
                bi, bj = pair_bits[k]
                i = bi.bit_length() - 1
                j = bj.bit_length() - 1
                adj[i] |= bj
                adj[j] |= bi
            mm >>= 1
            k += 1
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reach
            reach |= nxt
        if reach == full:
            yield mask


def enumerate_connected(n: int, emit: Callable[[Graph], object], *,
                        allow_seven: bool = False) -> int:
    """Emit every labeled connected graph on ``n`` vertices in ascending
    edge-mask order; return how many were emitted."""
    _check_cap(n, allow_seven)
    count = 0
    for mask in connected_masks(n):
        emit(graph_from_mask(n, mask))
        count += 1
    return count
