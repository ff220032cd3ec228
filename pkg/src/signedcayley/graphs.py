"""Immutable simple graphs on vertices ``0..n-1`` and the structural tools
the Cayley-graph lemmas need: distances, induced subgraphs, isomorphism for
small graphs, triple classification and complete-multipartite detection.

Text format: first line ``"n m"``, then one ``"u v"`` line per edge (0-based,
``u < v``, sorted).  DOT output is an undirected ``graph`` block; both formats
are read back by :func:`from_text` / :func:`from_dot`.
"""

from __future__ import annotations

import enum
import math
import random
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        adj = tuple(frozenset(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency sets, got {len(adj)}")
        for v, nb in enumerate(adj):
            if v in nb:
                raise GraphError(f"loop at vertex {v}")
            for u in nb:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise GraphError("need one label per vertex")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(adj), None if labels is None else tuple(labels))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def complement(self) -> "Graph":
        full = set(range(self.n))
        return Graph(self.n, tuple(full - a - {v} for v, a in enumerate(self.adj)), self.labels)

    def components(self) -> list[list[int]]:
        seen, comps = set(), []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


class SmallGraphClass(enum.Enum):
    K3 = "K3"
    P3 = "P3"
    EMPTY3 = "Empty3"
    OTHER = "Other"


def regular_degree(g: Graph) -> Optional[int]:
    degs = set(g.degrees)
    if len(degs) == 1:
        return degs.pop()
    return 0 if g.n == 0 else None


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_matrix(g: Graph) -> list[list[float]]:
    """All-pairs hop counts; ``math.inf`` marks unreachable pairs."""
    return [bfs_distances(g, v) for v in range(g.n)]


def diameter(g: Graph) -> float:
    if g.n == 0:
        return 0
    if not g.is_connected():
        return math.inf
    return max(max(row) for row in distance_matrix(g))


def induced_subgraph(g: Graph, W: Iterable[int]) -> Graph:
    verts = sorted(set(W))
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u in verts for v in g.adj[u] if v in pos and u < v]
    labels = None if g.labels is None else [g.labels[v] for v in verts]
    return Graph.from_edges(len(verts), edges, labels)


def classify_triple(g: Graph) -> SmallGraphClass:
    if g.n != 3:
        raise GraphError(f"classify_triple needs exactly 3 vertices, got {g.n}")
    return {3: SmallGraphClass.K3, 2: SmallGraphClass.P3,
            0: SmallGraphClass.EMPTY3}.get(g.num_edges, SmallGraphClass.OTHER)


def complete_multipartite_partition(g: Graph) -> Optional[list[list[int]]]:
    """Parts of g if g is complete multipartite (complement is a union of cliques)."""
    comp = g.complement()
    parts = comp.components()
    for part in parts:
        for v in part:
            if len(comp.adj[v]) != len(part) - 1:
                return None
    return parts


def complete_multipartite_parts(g: Graph) -> Optional[list[int]]:
    parts = complete_multipartite_partition(g)
    if parts is None:
        return None
    return sorted(len(p) for p in parts)


# Isomorphism -------------------------------------------------------------------

ISOMORPHISM_CAP = 16


def _refine(graphs: Sequence[Graph]) -> list[list]:
    """Joint colour refinement seeded by degree and distance profile.

    Colours are canonical across all graphs passed in, so classes can be
    compared between them.
    """
    colours = []
    for g in graphs:
        dm = distance_matrix(g)
        colours.append([(g.degree(v), tuple(sorted(dm[v], key=lambda d: (d == math.inf, d))))
                        for v in range(g.n)])
    while True:
        sigs = [[(c[v], tuple(sorted(c[u] for u in g.adj[v]))) for v in range(g.n)]
                for g, c in zip(graphs, colours)]
        palette = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig}, key=repr))}
        new = [[palette[s] for s in sig] for sig in sigs]
        old_classes = len({x for c in colours for x in map(repr, c)})
        if len(palette) == old_classes:
            return new
        colours = new


def are_isomorphic(g1: Graph, g2: Graph, cap: int = ISOMORPHISM_CAP) -> Optional[list[int]]:
    """Return a bijection ``phi`` (as a list) with ``uv in E1 <=> phi[u]phi[v] in E2``, or None.

    Colour refinement prunes candidates; a deterministic backtracking search
    then extends a partial map vertex by vertex, smallest candidate class first.
    """
    if max(g1.n, g2.n) > cap:
        raise GraphError(f"isomorphism test limited to {cap} vertices")
    if g1.n != g2.n or g1.num_edges != g2.num_edges or sorted(g1.degrees) != sorted(g2.degrees):
        return None
    n = g1.n
    if n == 0:
        return []
    c1, c2 = _refine([g1, g2])
    if sorted(c1) != sorted(c2):
        return None
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(c2[v], []).append(v)

    # order g1's vertices: rarest colour first, then stay connected to mapped ones
    order, placed = [], set()
    while len(order) < n:
        frontier = [v for v in range(n) if v not in placed and any(u in placed for u in g1.adj[v])]
        pool = frontier or [v for v in range(n) if v not in placed]
        v = min(pool, key=lambda x: (len(by_colour[c1[x]]), x))
        order.append(v)
        placed.add(v)

    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_colour[c1[v]]:
            if used[w]:
                continue
            ok = True
            for u in order[:i]:
                if (u in g1.adj[v]) != (phi[u] in g2.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            phi[v], used[w] = w, True
            if extend(i + 1):
                return True
            phi[v], used[w] = -1, False
        return False

    return list(phi) if extend(0) else None


def is_isomorphism(g1: Graph, g2: Graph, phi: Sequence[int]) -> bool:
    if g1.n != g2.n or sorted(phi) != list(range(g1.n)):
        return False
    mapped = {tuple(sorted((phi[u], phi[v]))) for u, v in g1.edges()}
    return mapped == set(g2.edges())


# Standard graphs ----------------------------------------------------------------

def standard_graph(kind: str, n: int) -> Graph:
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "path":
        if n < 1:
            raise GraphError("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "empty":
        if n < 0:
            raise GraphError("empty graph needs n >= 0")
        return Graph.from_edges(n, [])
    raise GraphError(f"unknown graph kind {kind!r}")


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def mobius_ladder(n: int) -> Graph:
    """Cycle C_n plus its n/2 long diagonals (n even)."""
    if n < 4 or n % 2:
        raise GraphError("Möbius ladder needs even n >= 4")
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges |= {(i, i + n // 2) for i in range(n // 2)}
    return Graph.from_edges(n, sorted(edges))


def prism(m: int) -> Graph:
    """C_m x K2: two m-cycles joined by a perfect matching."""
    if m < 3:
        raise GraphError("prism needs m >= 3")
    edges = [(i, (i + 1) % m) for i in range(m)] + [(m + i, m + (i + 1) % m) for i in range(m)]
    return Graph.from_edges(2 * m, edges + [(i, m + i) for i in range(m)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    owner = [k for k, s in enumerate(sizes) for _ in range(s)]
    n = len(owner)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])


def random_graph(n: int, p: float, rng: Union[random.Random, int, None] = None) -> Graph:
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def parse_graph_spec(spec: str) -> Graph:
    """``"cycle:7"``, ``"complete:5"``, ``"path:3"``, ``"empty:4"``, ``"cube:3"``, ``"mobius:8"``, ``"prism:5"``."""
    m = re.fullmatch(r"\s*([a-z]+)\s*:\s*(\d+)\s*", spec)
    if not m:
        raise GraphError(f"malformed graph spec {spec!r} (expected kind:n)")
    kind, n = m.group(1), int(m.group(2))
    if kind == "cube":
        return hypercube(n)
    if kind == "mobius":
        return mobius_ladder(n)
    if kind == "prism":
        return prism(n)
    return standard_graph(kind, n)


# Text / DOT --------------------------------------------------------------------

def to_text(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def from_text(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphError("graph text must start with 'n m'")
    try:
        n, m = map(int, lines[0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed graph text: {exc}") from exc
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        label = f" [label={_dot_quote(g.labels[v])}]" if g.labels else ""
        out.append(f"  {v}{label};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


_DOT_NODE = re.compile(r'^\s*(\d+)\s*(?:\[label="((?:[^"\\]|\\.)*)"\])?\s*;\s*$')
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;\s*$")


def from_dot(text: str) -> Graph:
    """Read back the DOT subset written by :func:`to_dot`."""
    nodes, labels, edges = [], {}, []
    for line in text.splitlines()[1:]:
        if line.strip() in ("}", ""):
            continue
        if m := _DOT_EDGE.match(line):
            edges.append((int(m.group(1)), int(m.group(2))))
        elif m := _DOT_NODE.match(line):
            v = int(m.group(1))
            nodes.append(v)
            if m.group(2) is not None:
                labels[v] = re.sub(r"\\(.)", r"\1", m.group(2))
        else:
            raise GraphError(f"unsupported DOT line: {line!r}")
    n = max(nodes + [x for e in edges for x in e], default=-1) + 1
    lab = [labels[v] for v in range(n)] if labels and len(labels) == n else None
    return Graph.from_edges(n, edges, lab)


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(to_dot(g) if path.suffix == ".dot" else to_text(g))


def read_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    text = path.read_text()
    return from_dot(text) if path.suffix == ".dot" else from_text(text)
