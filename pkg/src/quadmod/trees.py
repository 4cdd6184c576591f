"""Stable marked trees: the dual graphs of stable marked genus-0 curves.

A `MarkedTree` is a tree on named vertices (the irreducible components),
edges (the nodes), an injective-per-vertex assignment of marking labels to
vertices, and, optionally, exact rational coordinates for the special points
of individual vertices.  A vertex is *stable* when it carries at least three
special points (incident edges plus markings).

Coordinates are Fractions, with the string "inf" for the point at infinity;
cross-ratios are evaluated projectively, so infinity needs no special casing
at call sites.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import NotSeparable, Unstabilizable

INF = "inf"


def _as_proj(x):
    """Coordinate -> (numerator, denominator) on the projective line."""
    if x == INF:
        return (1, 0)
    f = Fraction(x)
    return (f.numerator, f.denominator)


def cross_ratio(w, x, y, z) -> Fraction:
    """Cross-ratio (w, x; y, z) = ((w-y)(x-z)) / ((w-z)(x-y)).

    Projective convention: the configuration (1, -1; inf, 0) evaluates to -1.
    Raises ZeroDivisionError if the four points are not pairwise distinct
    enough for the ratio to be defined."""
    pw, px, py, pz = (_as_proj(v) for v in (w, x, y, z))

    def det(a, b):
        return a[0] * b[1] - a[1] * b[0]

    num = det(pw, py) * det(px, pz)
    den = det(pw, pz) * det(px, py)
    return Fraction(num, den)


class MarkedTree:
    """Immutable marked tree; construction validates treeness."""

    __slots__ = ("vertices", "edges", "markings", "coords", "_adj")

    def __init__(self, vertices, edges, markings, coords=None):
        vs = tuple(sorted(vertices))
        es = tuple(sorted(tuple(sorted(e)) for e in edges))
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex ids")
        vset = set(vs)
        for u, v in es:
            if u == v or u not in vset or v not in vset:
                raise ValueError(f"bad edge ({u}, {v})")
        if len(set(es)) != len(es):
            raise ValueError("duplicate edges")
        marks = dict(markings)
        for lab, v in marks.items():
            if v not in vset:
                raise ValueError(f"marking {lab} on unknown vertex {v}")
        adj = {v: [] for v in vs}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        # connectivity + |E| = |V| - 1  <=>  tree
        if vs:
            seen = {vs[0]}
            stack = [vs[0]]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(vs) or len(es) != len(vs) - 1:
                raise ValueError("graph is not a tree")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "markings", marks)
        object.__setattr__(self, "coords", {v: dict(c) for v, c in (coords or {}).items()})
        object.__setattr__(self, "_adj", {v: tuple(ws) for v, ws in adj.items()})

    def __setattr__(self, *a):
        raise AttributeError("MarkedTree is immutable")

    def neighbors(self, v):
        return self._adj[v]

    def edges_at(self, v):
        return tuple(tuple(sorted((v, w))) for w in self._adj[v])

    def markings_at(self, v):
        return tuple(sorted(lab for lab, w in self.markings.items() if w == v))

    def special_points(self, v):
        """Incident edges plus markings carried by v."""
        return self.edges_at(v) + self.markings_at(v)

    def special_count(self, v) -> int:
        return len(self._adj[v]) + len(self.markings_at(v))

    def is_stable(self) -> bool:
        return all(self.special_count(v) >= 3 for v in self.vertices)

    def with_markings(self, keep) -> "MarkedTree":
        """Forget every marking outside `keep` (no contraction)."""
        keep = set(keep)
        return MarkedTree(self.vertices, self.edges,
                          {lab: v for lab, v in self.markings.items() if lab in keep},
                          self.coords)

    def relabel_markings(self, mapping: dict) -> "MarkedTree":
        return MarkedTree(self.vertices, self.edges,
                          {mapping.get(lab, lab): v for lab, v in self.markings.items()})

    def split_by_edge(self, edge):
        """(side_of_u, side_of_v): vertex sets of the two components of t - edge."""
        u, v = edge
        side = {u}
        stack = [u]
        while stack:
            w = stack.pop()
            for x in self._adj[w]:
                if {w, x} == {u, v}:
                    continue
                if x not in side:
                    side.add(x)
                    stack.append(x)
        return side, set(self.vertices) - side

    def __repr__(self):
        return (f"MarkedTree({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.markings)} markings)")


def separating_edge(tree: MarkedTree, part) -> tuple:
    """The unique edge splitting the markings into exactly `part` vs the rest.

    Linear-time: root the tree, count part/other markings per subtree, and
    pick the edge whose subtree captures all of one side and none of the
    other.  Raises NotSeparable when no edge does."""
    part = set(part)
    labels = set(tree.markings)
    if not part or not labels - part:
        raise NotSeparable("part and complement must both be nonempty")
    if not part <= labels:
        raise NotSeparable("part contains labels missing from the tree")
    other = labels - part
    npart, nother = len(part), len(other)
    part_at = {v: 0 for v in tree.vertices}
    other_at = {v: 0 for v in tree.vertices}
    for lab, v in tree.markings.items():
        (part_at if lab in part else other_at)[v] += 1
    root = tree.vertices[0]
    order = [root]
    parent = {root: None}
    for v in order:
        for w in tree.neighbors(v):
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    sub_part = dict(part_at)
    sub_other = dict(other_at)
    for v in reversed(order):
        if parent[v] is not None:
            sub_part[parent[v]] += sub_part[v]
            sub_other[parent[v]] += sub_other[v]
    for v in order[1:]:
        below = (sub_part[v], sub_other[v])
        if below == (npart, 0) or below == (0, nother):
            return tuple(sorted((v, parent[v])))
    raise NotSeparable(f"no single edge separates {sorted(part)}")


def stabilize(tree: MarkedTree, keep, _order_rng: random.Random | None = None):
    """Forget markings outside `keep` and contract unstable components.

    Returns (stable tree, landing map old vertex -> surviving vertex).  The
    result is independent of the contraction order; `_order_rng` randomizes
    the processing order and exists for the confluence tests."""
    keep = set(keep)
    if len(keep & set(tree.markings)) < 3:
        raise Unstabilizable("need at least three kept markings")
    adj = {v: set(tree.neighbors(v)) for v in tree.vertices}
    marks = {}
    for lab, v in tree.markings.items():
        if lab in keep:
            marks.setdefault(v, set()).add(lab)
    landing = {v: v for v in tree.vertices}

    def resolve(v):
        while landing[v] != v:
            v = landing[v]
        return v

    live = set(tree.vertices)
    while True:
        unstable = [v for v in live
                    if len(adj[v]) + len(marks.get(v, ())) < 3 and len(live) > 1]
        if not unstable:
            break
        if _order_rng is not None:
            _order_rng.shuffle(unstable)
        v = unstable[0]
        deg = len(adj[v])
        if deg == 1:
            (u,) = adj[v]
            marks.setdefault(u, set()).update(marks.pop(v, set()))
            adj[u].discard(v)
        elif deg == 2:
            # an unstable degree-2 vertex carries no markings: splice it out
            u, w = sorted(adj[v])
            adj[u].discard(v)
            adj[w].discard(v)
            adj[u].add(w)
            adj[w].add(u)
        else:  # deg == 0: isolated unstable vertex cannot appear mid-run
            raise Unstabilizable("tree collapsed below stability")
        landing[v] = u
        live.discard(v)
        del adj[v]

    vertices = sorted(live)
    edges = set()
    for v in live:
        for w in adj[v]:
            edges.add(tuple(sorted((v, w))))
    markings = {}
    for v, labs in marks.items():
        for lab in labs:
            markings[lab] = v
    out = MarkedTree(vertices, edges, markings)
    return out, {v: resolve(v) for v in tree.vertices}


def canonical_form(tree: MarkedTree):
    """Hashable canonical form: AHU-style rooted hashing at the tree center,
    with each vertex contributing its sorted marking labels."""

    def rooted(v, parent):
        children = sorted(rooted(w, v) for w in tree.neighbors(v) if w != parent)
        return (tree.markings_at(v), tuple(children))

    centers = _centers(tree)
    if len(centers) == 1:
        return ("c1", rooted(centers[0], None))
    a, b = centers
    fa = (tree.markings_at(a),
          tuple(sorted(rooted(w, a) for w in tree.neighbors(a) if w != b)))
    fb = (tree.markings_at(b),
          tuple(sorted(rooted(w, b) for w in tree.neighbors(b) if w != a)))
    return ("c2", min((fa, fb), (fb, fa)))


def _centers(tree: MarkedTree):
    if len(tree.vertices) <= 2:
        return list(tree.vertices)
    deg = {v: len(tree.neighbors(v)) for v in tree.vertices}
    layer = [v for v in tree.vertices if deg[v] <= 1]
    removed = set(layer)
    remaining = len(tree.vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in tree.neighbors(v):
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
                        removed.add(w)
        layer = nxt
    return sorted(layer)


def isomorphic(t1: MarkedTree, t2: MarkedTree, label_map: dict | None = None) -> bool:
    """Marked-tree isomorphism; `label_map` renames t1's markings first."""
    if label_map:
        t1 = t1.relabel_markings(label_map)
    if sorted(t1.markings) != sorted(t2.markings):
        return False
    return canonical_form(t1) == canonical_form(t2)
