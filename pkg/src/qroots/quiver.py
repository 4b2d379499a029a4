"""Finite acyclic quivers: validation, relabeling, subquivers, JSON I/O.

Vertices are labeled 1..n.  Arrows are (tail, head) pairs; parallel arrows
are repeated entries.  Loops and oriented cycles are rejected at build
time, so every quiver here has a well-defined Euler form with unimodular
matrix.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field

from .errors import (
    BadLabelError,
    CyclicQuiverError,
    EmptySubsetError,
    LoopError,
    NotSinkOrSourceError,
)


@dataclass(frozen=True)
class Quiver:
    """An acyclic quiver on vertices 1..n.

    Attributes:
        n: number of vertices.
        arrows: (tail, head) pairs in the order given; multiplicity by
            repetition.
    """

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple((int(t), int(h)) for t, h in self.arrows))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for t, h in self.arrows:
            if t == v:
                out.add(h)
            elif h == v:
                out.add(t)
        return out

    def arrow_multiplicity(self, i: int, j: int) -> int:
        """Number of arrows between i and j, either direction."""
        return sum(1 for t, h in self.arrows if {t, h} == {i, j})

    def is_sink(self, v: int) -> bool:
        return all(t != v for t, _ in self.arrows)

    def is_source(self, v: int) -> bool:
        return all(h != v for _, h in self.arrows)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1


def build_quiver(n: int, arrows) -> Quiver:
    """Validate and construct a quiver.

    Raises BadLabelError for labels outside 1..n, LoopError for an arrow
    with equal endpoints, CyclicQuiverError if the arrows admit an
    oriented cycle.
    """
    if n < 1:
        raise BadLabelError(f"need at least one vertex, got n={n}")
    arr = []
    for a in arrows:
        t, h = int(a[0]), int(a[1])
        if not (1 <= t <= n) or not (1 <= h <= n):
            raise BadLabelError(f"arrow ({t},{h}) outside 1..{n}")
        if t == h:
            raise LoopError(f"loop at vertex {t}")
        arr.append((t, h))
    q = Quiver(n, tuple(arr))
    if _topological_order(q) is None:
        raise CyclicQuiverError("arrows admit an oriented cycle")
    return q


def _topological_order(q: Quiver) -> list[int] | None:
    """Kahn's algorithm, largest available label first (deterministic).

    Returns vertex labels in an order where every arrow points from an
    earlier to a later position, or None if a cycle exists.
    """
    indeg = {v: 0 for v in range(1, q.n + 1)}
    outs: dict[int, list[int]] = {v: [] for v in indeg}
    for t, h in q.arrows:
        indeg[h] += 1
        outs[t].append(h)
    heap = [-v for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = -heapq.heappop(heap)
        order.append(v)
        for h in outs[v]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, -h)
    if len(order) != q.n:
        return None
    return order


def is_admissible(q: Quiver) -> bool:
    """True when every arrow satisfies tail > head."""
    return all(t > h for t, h in q.arrows)


def admissible_relabel(q: Quiver) -> tuple[Quiver, tuple[int, ...]]:
    """Relabel so that every arrow has tail > head.

    Returns (relabeled quiver, perm) with perm[old-1] = new.  An already
    admissible quiver gets the identity permutation.
    """
    order = _topological_order(q)
    assert order is not None
    new_label = {}
    for pos, v in enumerate(order):
        new_label[v] = q.n - pos
    perm = tuple(new_label[v] for v in range(1, q.n + 1))
    arrows = tuple((new_label[t], new_label[h]) for t, h in q.arrows)
    return Quiver(q.n, arrows), perm


def sink_first_order(q: Quiver) -> list[int]:
    """Vertex labels ordered so that no arrow points from an earlier to a
    later vertex (sinks first).  Matches the admissible relabeling: the
    vertex given new label k comes k-th."""
    order = _topological_order(q)
    assert order is not None
    return list(reversed(order))


def connected_components(q: Quiver) -> list[tuple[int, ...]]:
    """Vertex sets of the underlying graph's components, sorted."""
    parent = list(range(q.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in q.arrows:
        rt, rh = find(t), find(h)
        if rt != rh:
            parent[rt] = rh
    groups: dict[int, list[int]] = {}
    for v in range(1, q.n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def full_subquiver(q: Quiver, subset) -> tuple[Quiver, dict[int, int]]:
    """Full subquiver on a vertex subset, relabeled 1..k preserving order.

    Returns (subquiver, old_to_new map).  Raises EmptySubsetError on an
    empty subset, BadLabelError on labels outside 1..n.
    """
    verts = sorted(set(int(v) for v in subset))
    if not verts:
        raise EmptySubsetError("empty vertex subset")
    for v in verts:
        if not (1 <= v <= q.n):
            raise BadLabelError(f"vertex {v} outside 1..{q.n}")
    old_to_new = {v: i + 1 for i, v in enumerate(verts)}
    arrows = tuple(
        (old_to_new[t], old_to_new[h]) for t, h in q.arrows if t in old_to_new and h in old_to_new
    )
    return Quiver(len(verts), arrows), old_to_new


def sink_source_reflection(q: Quiver, v: int) -> Quiver:
    """Reverse all arrows at a sink or source vertex.

    Raises NotSinkOrSourceError when v has both incoming and outgoing
    arrows.
    """
    if not (1 <= v <= q.n):
        raise BadLabelError(f"vertex {v} outside 1..{q.n}")
    if not (q.is_sink(v) or q.is_source(v)):
        raise NotSinkOrSourceError(f"vertex {v} is neither a sink nor a source")
    arrows = tuple((h, t) if v in (t, h) else (t, h) for t, h in q.arrows)
    return Quiver(q.n, arrows)


def restrict_support(q: Quiver, d) -> tuple[Quiver, tuple[int, ...]]:
    """Full subquiver on the support of d together with the restricted
    vector (entries in subquiver order)."""
    verts = [i + 1 for i, x in enumerate(d) if x != 0]
    sub, old_to_new = full_subquiver(q, verts)
    vec = tuple(d[v - 1] for v in verts)
    return sub, vec


def support_is_connected(q: Quiver, d) -> bool:
    verts = {i + 1 for i, x in enumerate(d) if x != 0}
    if not verts:
        return False
    seen = {min(verts)}
    stack = [min(verts)]
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for t, h in q.arrows:
        if t in verts and h in verts:
            adj[t].add(h)
            adj[h].add(t)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == verts


# JSON format: {"vertices": n, "arrows": [[t, h], ...]}  (1-based labels)

def quiver_to_json(q: Quiver) -> str:
    arrows = ", ".join(f"[{t}, {h}]" for t, h in q.arrows)
    return f'{{"vertices": {q.n}, "arrows": [{arrows}]}}'


def quiver_from_json(text: str) -> Quiver:
    try:
        obj = json.loads(text)
        n = obj["vertices"]
        arrows = obj["arrows"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise BadLabelError(f"malformed quiver JSON: {exc}")
    return build_quiver(n, arrows)
