"""Simple graphs on [n], walks, and the path classes the bases are built from.

Three families of walks matter downstream:

* weakly admissible paths: simple paths with no shortcut through a proper
  subset of their vertices (equivalently, induced paths);
* sigma-admissible paths: weakly admissible paths whose interior vertices
  all sit outside the sigma-interval spanned by the endpoints;
* minimal walks: walks with no same-parity shortcut after deleting an
  interior vertex and no shorter same-parity walk on the same interior.

Vertex sets inside the search routines are bitmasks (bit ``v`` for vertex
``v``), which keeps the state spaces hashable and cheap.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput


class Walk(tuple):
    """A vertex sequence ``(i_0, ..., i_r)``.

    Adjacency is a property of the host graph, so it is checked by
    :meth:`Graph.is_walk` rather than here.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]):
        w = super().__new__(cls, vertices)
        if not w:
            raise InvalidInput("a walk needs at least one vertex")
        return w

    @property
    def start(self) -> int:
        return self[0]

    @property
    def end(self) -> int:
        return self[-1]

    @property
    def length(self) -> int:
        return len(self) - 1

    @property
    def parity(self) -> int:
        return (len(self) - 1) % 2

    @property
    def interior(self) -> frozenset[int]:
        # set semantics: an endpoint revisited mid-walk is still not interior
        return frozenset(self) - {self[0], self[-1]}

    @property
    def inverse(self) -> "Walk":
        return Walk(reversed(self))

    def __repr__(self) -> str:
        return "Walk(" + ",".join(map(str, self)) + ")"


def _bit(v: int) -> int:
    return 1 << v


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``n`` is the size of the ambient vertex range [n] (it fixes the number of
    variables of the polynomial ring); ``vertices`` defaults to all of [n] and
    is smaller only for induced subgraphs.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    vertices: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput(f"vertex count must be nonnegative, got {self.n}")
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        for v in verts:
            if not 1 <= v <= self.n:
                raise InvalidInput(f"vertex {v} outside [1, {self.n}]")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise InvalidInput(f"loop at vertex {i}")
            if i not in verts or j not in verts:
                raise InvalidInput(f"edge {{{i},{j}}} has an endpoint outside the vertex set")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset((int(i), int(j)) for i, j in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise InvalidInput("a cycle needs at least 3 vertices")
        return cls(n, frozenset((i, i + 1) for i in range(1, n)) | {(1, n)})

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {v: tuple(sorted(nb)) for v, nb in adj.items()}

    @cached_property
    def _adj_mask(self) -> dict[int, int]:
        return {v: _mask(nb) for v, nb in self.adjacency.items()}

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def is_walk(self, walk: Sequence[int]) -> bool:
        if not walk or any(v not in self.vertices for v in walk):
            return False
        return all(self.has_edge(a, b) for a, b in zip(walk, walk[1:]))

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __str__(self) -> str:
        es = " ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"Graph(n={self.n}; {es})"


def _require_walk(G: Graph, walk: Sequence[int]) -> Walk:
    w = walk if isinstance(walk, Walk) else Walk(walk)
    if not G.is_walk(w):
        raise InvalidInput(f"{w!r} is not a walk in {G}")
    return w


def induced_subgraph(G: Graph, W: Iterable[int]) -> Graph:
    W = frozenset(W)
    bad = [v for v in W if not 1 <= v <= G.n]
    if bad:
        raise InvalidInput(f"vertices {sorted(bad)} outside [1, {G.n}]")
    W = W & G.vertices
    return Graph(G.n, frozenset(e for e in G.edges if e[0] in W and e[1] in W), W)


def connected_components(G: Graph) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(G.vertices):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def shortest_path_length(G: Graph, v: int, w: int) -> int | None:
    """BFS distance from ``v`` to ``w``; ``None`` when unreachable."""
    if v not in G.vertices or w not in G.vertices:
        raise InvalidInput(f"vertices {v}, {w} must belong to {G}")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        a = queue.popleft()
        if a == w:
            return dist[a]
        for b in G.adjacency[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return None


def _reachable(adj: dict[int, int], allowed: int, src: int, dst: int) -> bool:
    if not (allowed >> src) & 1 or not (allowed >> dst) & 1:
        return False
    seen = _bit(src)
    frontier = [src]
    while frontier:
        nxt = []
        for a in frontier:
            if a == dst:
                return True
            new = adj[a] & allowed & ~seen
            seen |= new
            nxt.extend(_members(new))
        frontier = nxt
    return False


def _parity_reachable(adj: dict[int, int], allowed: int, src: int, dst: int, parity: int) -> bool:
    """Is there a ``src``-``dst`` walk of the given parity inside ``allowed``?

    Runs BFS on the bipartite double cover, so walks are never enumerated.
    """
    if not (allowed >> src) & 1 or not (allowed >> dst) & 1:
        return False
    seen = [_bit(src), 0]  # per parity, the vertices reached
    frontier = [(src, 0)]
    while frontier:
        nxt = []
        for a, p in frontier:
            if a == dst and p == parity:
                return True
            q = p ^ 1
            new = adj[a] & allowed & ~seen[q]
            seen[q] |= new
            nxt.extend((b, q) for b in _members(new))
        frontier = nxt
    return False


def is_weakly_admissible(G: Graph, walk: Sequence[int]) -> bool:
    """Distinct vertices and no path between the endpoints on a proper vertex subset."""
    w = _require_walk(G, walk)
    if len(set(w)) != len(w):
        return False
    full = _mask(w)
    adj = G._adj_mask
    # any shortcut avoids at least one interior vertex
    return not any(_reachable(adj, full & ~_bit(k), w.start, w.end) for k in w[1:-1])


def _positions(sigma: Sequence[int]) -> dict[int, int]:
    pos = {v: p for p, v in enumerate(sigma, start=1)}
    if sorted(pos) != list(range(1, len(sigma) + 1)):
        raise InvalidInput(f"{tuple(sigma)} is not a permutation of [1, {len(sigma)}]")
    return pos


def is_sigma_admissible(G: Graph, sigma: Sequence[int], walk: Sequence[int]) -> bool:
    w = _require_walk(G, walk)
    pos = _positions(sigma)
    if len(pos) != G.n:
        raise InvalidInput(f"permutation has length {len(pos)}, graph has n={G.n}")
    lo, hi = pos[w.start], pos[w.end]
    if not lo < hi:
        raise InvalidInput(f"endpoints of {w!r} must satisfy pos({w.start}) < pos({w.end}) under sigma")
    if not all(pos[k] < lo or pos[k] > hi for k in w[1:-1]):
        return False
    return is_weakly_admissible(G, w)


def enumerate_weakly_admissible_paths(G: Graph) -> list[Walk]:
    """All weakly admissible paths, both orientations and length 0 included.

    A simple path is weakly admissible exactly when it is an induced path, so
    the search only ever extends by vertices adjacent to the current end and
    to no other vertex already on the path.
    """
    adj = G._adj_mask
    out: list[Walk] = []

    def extend(path: list[int], used: int, blocked: int):
        out.append(Walk(path))
        last = path[-1]
        for nb in _members(adj[last] & ~used & ~blocked):
            # vertices adjacent to any non-final path vertex would create a chord
            extend(path + [nb], used | _bit(nb), blocked | adj[last])

    for s in sorted(G.vertices):
        extend([s], _bit(s), 0)
    return sorted(out, key=lambda p: (len(p), p))


def is_minimal_path(G: Graph, walk: Sequence[int]) -> bool:
    w = _require_walk(G, walk)
    i, j, parity = w.start, w.end, w.parity
    interior = sorted(w.interior)
    adj = G._adj_mask
    vmask = _mask(w)

    # (i) deleting an interior vertex must destroy every same-parity (i,j)-walk
    for k in interior:
        if _parity_reachable(adj, vmask & ~_bit(k), i, j, parity):
            return False

    # (ii) BFS over (vertex, visited-interior, parity) inside G[interior + endpoints]
    index = {v: b for b, v in enumerate(interior)}
    full = (1 << len(interior)) - 1
    start = (i, 0, 0)
    target = (j, full, parity)
    seen = {start}
    frontier = [start]
    for _ in range(w.length):
        if target in frontier:
            return False
        nxt = []
        for v, vis, p in frontier:
            for b in _members(adj[v] & vmask):
                s = (b, vis | (1 << index[b]) if b in index else vis, p ^ 1)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    # frontier now holds states first reached at exactly length(w)
    return True


def _covering_distances(G: Graph, start: int, limit: int) -> dict[tuple[int, int, int], int]:
    """BFS distances on states (vertex, visited-vertex mask, parity) from ``start``."""
    adj = G._adj_mask
    s0 = (start, _bit(start), 0)
    dist = {s0: 0}
    frontier = [s0]
    for d in range(1, limit + 1):
        nxt = []
        for v, vis, p in frontier:
            for b in _members(adj[v]):
                s = (b, vis | _bit(b), p ^ 1)
                if s not in dist:
                    dist[s] = d
                    nxt.append(s)
        if not nxt:
            break
        frontier = nxt
    return dist


def enumerate_minimal_paths(G: Graph, length_bound: int | None = None) -> list[Walk]:
    """All minimal walks of length at most ``length_bound`` (default ``2n``).

    Condition (ii) of minimality says a walk is a shortest walk among those
    with the same endpoints, vertex set and parity. Every prefix of such a
    walk must itself be shortest for its (end vertex, visited set, parity)
    state, or swapping in a shorter prefix would give a shorter rival. So the
    search only follows edges that are geodesic in that state graph and then
    checks condition (i), which depends only on the final state.
    """
    if length_bound is None:
        length_bound = 2 * G.n
    if length_bound < 0:
        raise InvalidInput("length_bound must be nonnegative")
    adj = G._adj_mask
    cond_i: dict[tuple[int, int, int, int], bool] = {}

    def no_shortcut(i: int, j: int, vis: int, parity: int) -> bool:
        key = (i, j, vis, parity)
        if key not in cond_i:
            inner = vis & ~_bit(i) & ~_bit(j)
            cond_i[key] = not any(
                _parity_reachable(adj, vis & ~_bit(k), i, j, parity) for k in _members(inner)
            )
        return cond_i[key]

    out: list[Walk] = []
    for i in sorted(G.vertices):
        dist = _covering_distances(G, i, length_bound)
        stack = [((i,), (i, _bit(i), 0))]
        while stack:
            path, (v, vis, p) = stack.pop()
            if no_shortcut(i, v, vis, p):
                out.append(Walk(path))
            if len(path) > length_bound:
                continue
            for b in _members(adj[v]):
                s = (b, vis | _bit(b), p ^ 1)
                if dist.get(s) == len(path):
                    stack.append((path + (b,), s))
    return sorted(out, key=lambda p: (len(p), p))


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected simple graph on the labeled vertex set [n]."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for r in range(max(n - 1, 0), len(pairs) + 1):
        for edges in itertools.combinations(pairs, r):
            g = Graph(n, frozenset(edges))
            if g.is_connected():
                yield g


# -- text / JSON formats ---------------------------------------------------


def parse_graph_text(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise InvalidInput("empty graph description")
    lineno, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise InvalidInput(f"line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
    if len(rows) - 1 != m:
        raise InvalidInput(f"header announces {m} edges, found {len(rows) - 1}")
    edges = set()
    for lineno, toks in rows[1:]:
        try:
            i, j = (int(t) for t in toks)
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected 'i j', got {' '.join(toks)!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise InvalidInput(f"line {lineno}: vertex outside [1, {n}]")
        if i == j:
            raise InvalidInput(f"line {lineno}: loops are not allowed")
        e = (min(i, j), max(i, j))
        if e in edges:
            raise InvalidInput(f"line {lineno}: duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def parse_graph_json(text: str | dict) -> Graph:
    data = json.loads(text) if isinstance(text, str) else text
    try:
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed graph JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise InvalidInput("every edge must be a pair")
    if len({(min(e), max(e)) for e in edges}) != len(edges):
        raise InvalidInput("duplicate edge in graph JSON")
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either the plain text format or the JSON object format."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def format_graph_text(G: Graph) -> str:
    lines = [f"{G.n} {len(G.edges)}"]
    lines += [f"{i} {j}" for i, j in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_to_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}
