"""Directed communication graphs with self-loops.

Agents are numbered 1..n. An edge (i, j) means information flows from
agent i to agent j. Every constructor adds missing self-loops, since the
method's consensus weights require them.
"""

from __future__ import annotations

from dataclasses import dataclass

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph construction or out-of-range query."""


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable digraph on nodes 1..n; safe to share across threads.

    Attributes
    ----------
    n : int
        Number of agents.
    edges : frozenset of (int, int)
        Ordered pairs (i, j), information flowing i -> j. Contains (i, i)
        for every node.
    """

    n: int
    edges: frozenset[Edge]

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise GraphError(f"node {i} out of range 1..{self.n}")

    def in_neighbors(self, i: int) -> set[int]:
        """Nodes j with an edge (j, i), including i itself."""
        self._check_node(i)
        return {j for (j, t) in self.edges if t == i}

    def out_neighbors(self, i: int) -> set[int]:
        """Nodes j with an edge (i, j), including i itself."""
        self._check_node(i)
        return {t for (j, t) in self.edges if j == i}

    def edge_list(self) -> list[list[int]]:
        """Sorted [i, j] pairs, the serialized form used in run configs."""
        return [list(e) for e in sorted(self.edges)]


def build_from_edges(n: int, edges) -> DirectedGraph:
    """Build a digraph from ordered pairs, adding self-loops.

    Parameters
    ----------
    n : int
        Agent count, >= 1.
    edges : iterable of (int, int)
        Ordered pairs with endpoints in 1..n. Duplicates collapse; missing
        self-loops are added silently.

    Raises
    ------
    GraphError
        If n < 1 or any endpoint is out of range (the offending pair is
        named in the message).
    """
    if n < 1:
        raise GraphError(f"agent count must be >= 1, got {n}")
    es: set[Edge] = set()
    for pair in edges:
        i, j = pair
        i, j = int(i), int(j)
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        es.add((i, j))
    es.update((i, i) for i in range(1, n + 1))
    return DirectedGraph(n=n, edges=frozenset(es))


def build_ring(n: int) -> DirectedGraph:
    """Directed cycle 1 -> 2 -> ... -> n -> 1 plus self-loops (n >= 2)."""
    if n < 2:
        raise GraphError(f"ring needs n >= 2, got {n}")
    cycle = [(i, i % n + 1) for i in range(1, n + 1)]
    return build_from_edges(n, cycle)


def four_agent_graph() -> DirectedGraph:
    """The bundled 4-agent topology used by the polynomial experiment configs.

    A directed cycle 1->2->3->4->1 with chords 2->4 and 3->1. Strongly
    connected, and its equal-neighbor row weights are not doubly stochastic,
    so the surplus correction is actually exercised.
    """
    return build_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (3, 1)])


def is_strongly_connected(g: DirectedGraph) -> bool:
    """True iff every node reaches every other along directed edges.

    Decided by exhaustive search: forward reachability from node 1 and
    reachability on the transposed graph.
    """
    fwd: dict[int, list[int]] = {i: [] for i in range(1, g.n + 1)}
    rev: dict[int, list[int]] = {i: [] for i in range(1, g.n + 1)}
    for i, j in g.edges:
        fwd[i].append(j)
        rev[j].append(i)

    def reaches_all(adj) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == g.n

    return reaches_all(fwd) and reaches_all(rev)
