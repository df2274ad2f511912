"""Non-isomorphic trees and forests of a given order.

Rooted trees come from the Beyer-Hedetniemi successor rule on canonical
level sequences. A rooted tree survives only when its root is a centroid
(and, for two centroids, the one with the smaller rooted code), which leaves
exactly one rooting per free tree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator

from .forest import Forest, build_forest, disjoint_union


def _rooted_code(adj, root, parent=-1) -> str:
    kids = sorted(_rooted_code(adj, w, root) for w in adj[root] if w != parent)
    return "(" + "".join(kids) + ")"


def _subtree_sizes(adj, verts, root):
    size = {}
    order, parent = [], {root: -1}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if w != parent[u]:
                parent[w] = u
                stack.append(w)
    for u in reversed(order):
        size[u] = 1 + sum(size[w] for w in adj[u] if w != parent[u])
    return size, parent


def centroids(f: Forest, comp) -> list:
    comp = list(comp)
    total = len(comp)
    size, parent = _subtree_sizes(f.adj, comp, comp[0])
    out = []
    for v in comp:
        parts = [size[w] for w in f.adj[v] if w != parent[v]]
        parts.append(total - size[v])
        if max(parts) <= total // 2:
            out.append(v)
    return sorted(out)


def tree_code(f: Forest, comp) -> str:
    return min(_rooted_code(f.adj, c) for c in centroids(f, comp))


def canonical_form(f: Forest) -> tuple:
    """Isomorphism-invariant key with a total order: ``(n, sorted component codes)``."""
    codes = sorted((len(c), tree_code(f, c)) for c in f.components)
    return (f.n, tuple(codes))


def _level_sequences(n: int) -> Iterator[list]:
    """Canonical level sequences of rooted trees on n vertices (root at level 1)."""
    if n == 1:
        yield [1]
        return
    seq = list(range(1, n + 1))
    while True:
        yield list(seq)
        p = max((i for i in range(n) if seq[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _tree_from_levels(seq) -> Forest:
    edges = []
    last_at = {}
    for i, lvl in enumerate(seq):
        if lvl > 1:
            edges.append((last_at[lvl - 1], i))
        last_at[lvl] = i
    return build_forest(len(seq), edges)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple:
    keep = []
    for seq in _level_sequences(n):
        t = _tree_from_levels(seq)
        cents = centroids(t, range(n))
        if 0 not in cents:
            continue
        if len(cents) == 2:
            other = cents[1]
            if _rooted_code(t.adj, other) < _rooted_code(t.adj, 0):
                continue
        keep.append((canonical_form(t), t))
    keep.sort(key=lambda x: x[0])
    return tuple(t for _, t in keep)


def trees_of_order(n: int) -> Iterator[Forest]:
    """One tree per isomorphism class, in canonical-form order."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    yield from _trees(n)


def _partitions(n: int, largest: int | None = None) -> Iterator[list]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple:
    out = []
    for parts in _partitions(n):
        mult = {}
        for k in parts:
            mult[k] = mult.get(k, 0) + 1
        choices = [list(combinations_with_replacement(_trees(k), m)) for k, m in sorted(mult.items())]
        for pick in product(*choices):
            comps = [t for group in pick for t in group]
            f = disjoint_union(*comps) if comps else build_forest(0, [])
            out.append((canonical_form(f), f))
    out.sort(key=lambda x: x[0])
    return tuple(f for _, f in out)


def forests_of_order(n: int) -> Iterator[Forest]:
    if n < 0:
        raise ValueError("negative order")
    yield from _forests(n)


def is_isomorphic(f: Forest, g: Forest) -> bool:
    return canonical_form(f) == canonical_form(g)
