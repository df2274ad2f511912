"""Forests, partial colorings and the structural views the strategies need.

Vertices are dense integer ids ``0..n-1`` and every iteration runs in
ascending id order, so all derived objects are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class ForestError(ValueError):
    """Base class for malformed forest input."""


class CycleError(ForestError):
    pass


class DuplicateEdgeError(ForestError):
    pass


class VertexRangeError(ForestError):
    pass


class DisconnectedError(ValueError):
    """Raised when a path is requested between different components."""


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Forest:
    n: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))

    @cached_property
    def adj(self) -> tuple:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(a) for a in self.adj)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    @cached_property
    def components(self) -> tuple:
        """Vertex lists of the connected components, ordered by smallest id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    def is_tree(self) -> bool:
        return self.n > 0 and len(self.components) == 1

    def subforest(self, keep: Iterable[int]) -> tuple["Forest", list]:
        """Induced subforest on ``keep``, relabelled densely.

        Returns the new forest and the list mapping new id -> old id.
        """
        old = sorted(set(keep))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_forest(len(old), edges), old

    def __repr__(self):
        return f"Forest(n={self.n}, edges={self.sorted_edges()})"


def build_forest(n: int, edge_list: Iterable[Sequence[int]]) -> Forest:
    """Validate ``edge_list`` and return the forest on ``n`` vertices."""
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = set()
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
        if u == v:
            raise CycleError(f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CycleError(f"edge {e} closes a cycle")
        parent[ru] = rv
        edges.add(e)
    return Forest(n, frozenset(edges))


def disjoint_union(*forests: Forest) -> Forest:
    edges, off = [], 0
    for f in forests:
        edges.extend((u + off, v + off) for u, v in f.edges)
        off += f.n
    return build_forest(off, edges)


def _bfs(f: Forest, src: int):
    dist = {src: 0}
    parent = {src: None}
    q = deque([src])
    while q:
        u = q.popleft()
        for w in f.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
    return dist, parent


def distance(f: Forest, x: int, y: int) -> int:
    dist, _ = _bfs(f, x)
    if y not in dist:
        raise DisconnectedError(f"vertices {x} and {y} lie in different components")
    return dist[y]


def path_between(f: Forest, x: int, y: int) -> list:
    """The unique x,y-path as a vertex list starting at ``x``."""
    _, parent = _bfs(f, x)
    if y not in parent:
        raise DisconnectedError(f"vertices {x} and {y} lie in different components")
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def longest_path_length(f: Forest) -> int:
    """Number of edges on a longest path; ``-1`` for the empty forest."""
    if f.n == 0:
        return -1
    best = 0
    for comp in f.components:
        dist, _ = _bfs(f, comp[0])
        far = max(dist, key=lambda v: (dist[v], -v))
        dist2, _ = _bfs(f, far)
        best = max(best, max(dist2.values()))
    return best


def component_diameter(f: Forest, comp: Sequence[int]) -> int:
    dist, _ = _bfs(f, comp[0])
    far = max(dist, key=lambda v: (dist[v], -v))
    dist2, _ = _bfs(f, far)
    return max(dist2.values())


@dataclass(frozen=True)
class Position:
    """A forest with a partial coloring and per-vertex external colors.

    ``external[v]`` holds the colors of the pendant leaves that an expanded
    game has hung on ``v``; they forbid colors exactly like colored neighbors.
    """

    forest: Forest
    coloring: tuple = None
    external: tuple = None

    def __post_init__(self):
        n = self.forest.n
        coloring = tuple(self.coloring) if self.coloring is not None else (None,) * n
        external = (
            tuple(frozenset(e) for e in self.external)
            if self.external is not None
            else (frozenset(),) * n
        )
        if len(coloring) != n or len(external) != n:
            raise ColoringError("coloring/external length does not match vertex count")
        object.__setattr__(self, "coloring", coloring)
        object.__setattr__(self, "external", external)
        for v, c in enumerate(coloring):
            if c is None:
                continue
            if c < 0:
                raise ColoringError(f"negative color at vertex {v}")
            if c in external[v]:
                raise ColoringError(f"vertex {v} colored {c} beside an external leaf of color {c}")
            for w in self.forest.adj[v]:
                if coloring[w] == c:
                    raise ColoringError(f"adjacent vertices {v} and {w} share color {c}")

    @classmethod
    def uncolored(cls, forest: Forest) -> "Position":
        return cls(forest)

    def is_colored(self, v: int) -> bool:
        return self.coloring[v] is not None

    @property
    def colored_vertices(self) -> list:
        return [v for v, c in enumerate(self.coloring) if c is not None]

    @property
    def uncolored_vertices(self) -> list:
        return [v for v, c in enumerate(self.coloring) if c is None]

    def forbidden(self, v: int) -> frozenset:
        """Colors unavailable at ``v`` (colored neighbors plus external leaves)."""
        cols = {self.coloring[w] for w in self.forest.adj[v]}
        cols.discard(None)
        return frozenset(cols) | self.external[v]

    def legal_colors(self, v: int, t: int) -> list:
        bad = self.forbidden(v)
        return [c for c in range(t) if c not in bad]

    def max_color(self) -> int:
        used = [c for c in self.coloring if c is not None]
        for e in self.external:
            used.extend(e)
        return max(used, default=-1)

    def with_color(self, v: int, c: Optional[int]) -> "Position":
        coloring = list(self.coloring)
        coloring[v] = c
        return Position(self.forest, tuple(coloring), self.external)

    def with_external(self, v: int, c: int) -> "Position":
        external = list(self.external)
        external[v] = external[v] | {c}
        return Position(self.forest, self.coloring, tuple(external))


@dataclass(frozen=True)
class Trunk:
    """A maximal connected piece whose colored vertices are all leaves of it."""

    vertices: frozenset
    edges: frozenset
    colored: frozenset = field(default=frozenset())

    @cached_property
    def adj(self) -> dict:
        nbrs = {v: [] for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {v: sorted(a) for v, a in nbrs.items()}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def uncolored(self) -> list:
        return sorted(self.vertices - self.colored)

    def e_gt2(self) -> list:
        return sorted(e for e in self.edges if self.degree(e[0]) > 2 or self.degree(e[1]) > 2)

    def e_ggt2(self) -> list:
        return sorted(e for e in self.edges if self.degree(e[0]) > 2 and self.degree(e[1]) > 2)

    def path(self, x: int, y: int) -> list:
        prev = {x: None}
        q = deque([x])
        while q:
            u = q.popleft()
            for w in self.adj[u]:
                if w not in prev:
                    prev[w] = u
                    q.append(w)
        if y not in prev:
            raise DisconnectedError(f"{x} and {y} are not in this trunk")
        out = [y]
        while out[-1] != x:
            out.append(prev[out[-1]])
        return out[::-1]

    def __repr__(self):
        return f"Trunk(vertices={sorted(self.vertices)}, colored={sorted(self.colored)})"


def _trunks_of(forest: Forest, coloring: Sequence) -> list:
    n = forest.n
    adj = forest.adj
    seen = [False] * n
    out = []
    for s in range(n):
        if coloring[s] is not None or seen[s]:
            continue
        seen[s] = True
        verts, edges, colored = {s}, set(), set()
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                edges.add((min(u, w), max(u, w)))
                if coloring[w] is not None:
                    verts.add(w)
                    colored.add(w)
                elif not seen[w]:
                    seen[w] = True
                    verts.add(w)
                    stack.append(w)
        out.append(Trunk(frozenset(verts), frozenset(edges), frozenset(colored)))
    for u, v in sorted(forest.edges):
        if coloring[u] is not None and coloring[v] is not None:
            out.append(Trunk(frozenset((u, v)), frozenset({(u, v)}), frozenset((u, v))))
    out.sort(key=lambda r: sorted(r.vertices))
    return out


def trunks(p: Position) -> list:
    return _trunks_of(p.forest, p.coloring)


@dataclass(frozen=True)
class ReducedGraph:
    """Trunk graph with every edge dropped whose endpoints both have trunk degree <= 2.

    ``forest`` keeps the original vertex ids. Colored vertices are shared
    between the trunks they bound, so trunk-local degrees are what count.
    """

    forest: Forest
    coloring: tuple

    @cached_property
    def position(self) -> Position:
        return Position(self.forest, self.coloring)

    def trunks(self) -> list:
        return _trunks_of(self.forest, self.coloring)

    def e_ggt2(self) -> list:
        return sorted(e for r in self.trunks() for e in r.e_ggt2())


def reduced_graph(p: Position) -> ReducedGraph:
    f = p.forest
    col = p.coloring
    # degree inside the trunk graph: colored vertices are leaves of every trunk
    def tdeg(v):
        return 1 if col[v] is not None else f.degrees[v]

    kept = [(u, v) for u, v in f.edges if tdeg(u) > 2 or tdeg(v) > 2]
    return ReducedGraph(build_forest(f.n, kept), col)


TRIVIALLY_COVERED = "trivially-covered"


def covering_vertex(r: Trunk):
    """A vertex incident to every edge of ``r.e_ggt2()``.

    Returns ``TRIVIALLY_COVERED`` when that edge set is empty and ``None``
    when no single vertex covers it.
    """
    edges = r.e_ggt2()
    if not edges:
        return TRIVIALLY_COVERED
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    return min(common) if common else None


def largest_component_without(f: Forest, v: int, vertices: Optional[Iterable[int]] = None) -> int:
    allowed = set(f.vertices if vertices is None else vertices)
    allowed.discard(v)
    seen = set()
    best = 0
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        size, stack = 0, [s]
        while stack:
            u = stack.pop()
            size += 1
            for w in f.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        best = max(best, size)
    return best


def find_splitter(f: Forest, component: Optional[Sequence[int]] = None) -> int:
    """Vertex whose removal minimises the largest remaining component.

    For trees with at most 13 vertices the result leaves components of at
    most 6 vertices. Ties go to the lowest id.
    """
    verts = sorted(component) if component is not None else list(f.vertices)
    if not verts:
        raise ValueError("empty component")
    return min(verts, key=lambda v: (largest_component_without(f, v, verts), v))


def dangerous_vertices(p: Position, t: int) -> list:
    """Uncolored vertices with at least as many uncolored neighbors as legal colors."""
    out = []
    for v in p.uncolored_vertices:
        unc = sum(1 for w in p.forest.adj[v] if p.coloring[w] is None)
        legal = t - len([c for c in p.forbidden(v) if c < t])
        if unc >= legal:
            out.append(v)
    return out
