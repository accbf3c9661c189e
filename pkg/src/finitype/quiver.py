"""Oriented graph of a skew form and its chordless-cycle inventory.

The graph G has an arc i -> j with weight b_ij for every positive entry.
Deciding whether G is cyclically oriented reduces, component by
two-connected component, to repeatedly peeling off an "ear": a maximal
path of degree-2 vertices whose endpoints are joined by an edge.  The ear
plus that edge is a chordless cycle; its interior is deleted and the
component shrinks until a single cycle remains.  Any graph where this
reduction gets stuck, or where some peeled cycle is not cyclically
oriented, is rejected with a concrete witness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .exactmat import SkewForm


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Unordered vertex pair in canonical (min, max) order."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Quiver:
    """Simple oriented graph with positive integer arc weights.

    Skew-symmetry by signs rules out 2-cycles and loops, so there is at
    most one arc per unordered vertex pair.
    """

    n: int
    arcs: dict[tuple[int, int], int]
    neighbors: tuple[tuple[int, ...], ...]

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def weight(self, i: int, j: int) -> int:
        return self.arcs[(i, j)]

    def edges(self) -> list[tuple[int, int]]:
        """Underlying undirected edges, sorted (min, max) pairs."""
        return sorted(edge_key(i, j) for i, j in self.arcs)

    @property
    def edge_count(self) -> int:
        return len(self.arcs)


def build_quiver(form: SkewForm) -> Quiver:
    """Graph with an arc i -> j of weight b_ij for every b_ij > 0."""
    n, b = form.n, form.B.entries
    arcs: dict[tuple[int, int], int] = {}
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if b[i][j] > 0:
                arcs[(i, j)] = b[i][j]
            elif b[i][j] < 0:
                arcs[(j, i)] = b[j][i]
            else:
                continue
            adjacency[i].append(j)
            adjacency[j].append(i)
    return Quiver(n, arcs, tuple(tuple(sorted(adj)) for adj in adjacency))


class ComponentKind(Enum):
    SINGLE_EDGE = "single_edge"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class TwoConnectedComponent:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    kind: ComponentKind


def two_connected_components(g: Quiver) -> list[TwoConnectedComponent]:
    """Partition the edges into maximal two-connected subgraphs.

    Iterative depth-first search with lowpoints (Hopcroft-Tarjan); roots
    and neighbor lists are scanned in ascending order and the result is
    sorted by smallest contained vertex, so the output is deterministic.
    """
    visited: set[int] = set()
    raw: list[list[tuple[int, int]]] = []
    for root in range(g.n):
        if root in visited or not g.neighbors[root]:
            continue
        discovery = {root: 0}
        low = {root: 0}
        visited.add(root)
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, root, iter(g.neighbors[root]))]
        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if child in visited:
                    if discovery[child] <= discovery[parent]:  # back edge
                        low[parent] = min(low[parent], discovery[child])
                        edge_stack.append((parent, child))
                else:
                    low[child] = discovery[child] = len(discovery)
                    visited.add(child)
                    edge_stack.append((parent, child))
                    stack.append((parent, child, iter(g.neighbors[child])))
                continue
            stack.pop()
            if len(stack) > 1:
                if low[parent] >= discovery[grandparent]:
                    cut = edge_stack.index((grandparent, parent))
                    raw.append(edge_stack[cut:])
                    del edge_stack[cut:]
                low[grandparent] = min(low[grandparent], low[parent])
            elif stack:
                cut = edge_stack.index((grandparent, parent))
                raw.append(edge_stack[cut:])
                del edge_stack[cut:]
    components = []
    for group in raw:
        edges = sorted({edge_key(u, v) for u, v in group})
        vertices = sorted({v for e in edges for v in e})
        kind = ComponentKind.SINGLE_EDGE if len(edges) == 1 else ComponentKind.CYCLIC
        components.append(TwoConnectedComponent(tuple(vertices), tuple(edges), kind))
    components.sort(key=lambda c: c.vertices[0])
    return components


class Orientation(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class ChordlessCycle:
    """Cyclically oriented chordless cycle in canonical form.

    The vertex list is rotated so the smallest vertex comes first and
    directed so every arc points from each vertex to its successor
    (wrapping around); ``orientation`` reports which way the arcs run
    along the stored order, hence FORWARD for canonical cycles.
    """

    vertices: tuple[int, ...]
    orientation: Orientation = Orientation.FORWARD

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        t = len(self.vertices)
        return [edge_key(self.vertices[i], self.vertices[(i + 1) % t]) for i in range(t)]


@dataclass(frozen=True)
class EdgeBoundExceeded:
    """A (sub)graph with more than 2n - 3 edges cannot be cyclically orientable."""

    vertices: tuple[int, ...]
    edge_count: int
    bound: int
    kind: str = field(default="edge_bound_exceeded", init=False)


@dataclass(frozen=True)
class NonCyclicCycle:
    """A chordless cycle whose arcs do not all point one way around."""

    vertices: tuple[int, ...]
    kind: str = field(default="non_cyclic_cycle", init=False)


@dataclass(frozen=True)
class StructuralFailure:
    """Ear reduction got stuck: the component is not built from cycles glued along single edges."""

    vertices: tuple[int, ...]
    detail: str
    kind: str = field(default="structural_failure", init=False)


CycleWitness = Union[EdgeBoundExceeded, NonCyclicCycle, StructuralFailure]


class NotCyclicallyOrientedError(Exception):
    """Raised with a machine-readable witness when G is not cyclically oriented."""

    def __init__(self, witness: CycleWitness):
        self.witness = witness
        super().__init__(f"{witness.kind}: {witness}")


@dataclass(frozen=True)
class CycleInventory:
    """All chordless cycles (a stack, discovery order) plus single-edge components."""

    cycles: tuple[ChordlessCycle, ...]
    single_edges: frozenset[tuple[int, int]]

    def popped(self) -> Iterable[ChordlessCycle]:
        """Cycles in LIFO order, the order sign assignment consumes them."""
        return reversed(self.cycles)


def _canonical_undirected(walk: list[int]) -> tuple[int, ...]:
    """Rotate min-first, then head toward the smaller neighbor."""
    t = len(walk)
    start = walk.index(min(walk))
    rotated = walk[start:] + walk[:start]
    if rotated[1] > rotated[-1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def _emit_cycle(g: Quiver, walk: list[int]) -> ChordlessCycle:
    """Canonicalize a closed walk, verifying it is cyclically oriented."""
    t = len(walk)
    forward = sum(1 for i in range(t) if g.has_arc(walk[i], walk[(i + 1) % t]))
    if forward != t and forward != 0:
        raise NotCyclicallyOrientedError(NonCyclicCycle(_canonical_undirected(walk)))
    ordered = walk if forward == t else walk[::-1]
    start = ordered.index(min(ordered))
    return ChordlessCycle(tuple(ordered[start:] + ordered[:start]), Orientation.FORWARD)


def _reduce_component(g: Quiver, comp: TwoConnectedComponent) -> list[ChordlessCycle]:
    adj: dict[int, set[int]] = {v: set() for v in comp.vertices}
    for u, v in comp.edges:
        adj[u].add(v)
        adj[v].add(u)
    alive = set(comp.vertices)
    heap = [v for v in comp.vertices if len(adj[v]) == 2]
    heapq.heapify(heap)
    # chains whose endpoints are not (yet) adjacent; they can only become
    # peelable after some other ear is removed, so retry them on progress
    blocked: list[int] = []
    found: list[ChordlessCycle] = []
    while alive:
        v = None
        while heap:
            cand = heapq.heappop(heap)
            if cand in alive and len(adj[cand]) == 2:
                v = cand
                break
        if v is None:
            raise NotCyclicallyOrientedError(
                StructuralFailure(tuple(sorted(alive)), "no peelable ear left")
            )
        a, b = sorted(adj[v])
        # maximal chain of degree-2 vertices through v, direction of a first
        left: list[int] = []
        prev, cur = v, a
        while cur != v and len(adj[cur]) == 2:
            left.append(cur)
            nxt = next(iter(adj[cur] - {prev}))
            prev, cur = cur, nxt
        if cur == v:
            # the whole component collapsed to one cycle
            walk = [v] + left
            assert alive == set(walk), "closed ear inside a larger two-connected component"
            found.append(_emit_cycle(g, walk))
            alive.clear()
            continue
        u = cur
        right: list[int] = []
        prev, cur = v, b
        while len(adj[cur]) == 2:
            right.append(cur)
            nxt = next(iter(adj[cur] - {prev}))
            prev, cur = cur, nxt
        w = cur
        assert u != w, "ear closes on a cut vertex inside a two-connected component"
        if w not in adj[u]:
            blocked.append(v)
            continue
        interior = left[::-1] + [v] + right
        found.append(_emit_cycle(g, [u] + interior + [w]))
        for p in interior:
            for nb in adj[p]:
                adj[nb].discard(p)
            del adj[p]
            alive.discard(p)
        for endpoint in (u, w):
            if len(adj[endpoint]) == 2:
                heapq.heappush(heap, endpoint)
        for stale in blocked:
            if stale in alive:
                heapq.heappush(heap, stale)
        blocked.clear()
    return found


def chordless_cycles_cod(g: Quiver) -> CycleInventory:
    """Decide cyclically-oriented status; on success return every chordless cycle.

    Rejects early when the edge count exceeds 2n - 3 (globally or in any
    two-connected component), then peels ears per component.  Single-edge
    components are collected separately; they carry no cycles.  Raises
    NotCyclicallyOrientedError with a witness on any failure.
    """
    m = g.edge_count
    if m > 0 and m > 2 * g.n - 3:
        all_vertices = tuple(v for v in range(g.n) if g.neighbors[v])
        raise NotCyclicallyOrientedError(EdgeBoundExceeded(all_vertices, m, 2 * g.n - 3))
    cycles: list[ChordlessCycle] = []
    single_edges: set[tuple[int, int]] = set()
    for comp in two_connected_components(g):
        if comp.kind is ComponentKind.SINGLE_EDGE:
            single_edges.add(comp.edges[0])
            continue
        nc, mc = len(comp.vertices), len(comp.edges)
        if mc > 2 * nc - 3:
            raise NotCyclicallyOrientedError(EdgeBoundExceeded(comp.vertices, mc, 2 * nc - 3))
        cycles.extend(_reduce_component(g, comp))
    assert len(cycles) <= g.n, "more chordless cycles than vertices"
    return CycleInventory(tuple(cycles), frozenset(single_edges))
