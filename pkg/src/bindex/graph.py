"""Bitmask graph core.

Vertices are dense integers 0..n-1. A vertex set is a plain int used as a
bitmask over those labels, so set algebra is int arithmetic throughout.
Adjacency is a tuple of per-vertex neighbor masks. Graphs are immutable
and safe to share across threads. Hard size cap n <= 4096.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 4096


class DomainError(ValueError):
    """Parameter outside an operation's stated domain."""


class LimitError(ValueError):
    """Input exceeds a hard size limit of the chosen algorithm."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class Graph:
    """Immutable simple graph with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]) -> None:
        if not 1 <= n <= MAX_VERTICES:
            raise DomainError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise DomainError("adjacency length does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise DomainError(f"adjacency of {v} has bits >= n")
            if (row >> v) & 1:
                raise DomainError(f"self-loop at {v}")
        for v, row in enumerate(adj):
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise DomainError(f"asymmetric edge {v}-{u}")
                rest ^= low
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def mask_all(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            while rest:
                low = rest & -rest
                yield (v, v + 1 + low.bit_length() - 1)
                rest ^= low

    def neighborhood(self, s: int) -> int:
        """N(S): union of open neighborhoods over the vertices of s."""
        out = 0
        rest = s
        while rest:
            low = rest & -rest
            out |= self.adj[low.bit_length() - 1]
            rest ^= low
        return out

    def is_independent(self, s: int) -> bool:
        rest = s
        while rest:
            low = rest & -rest
            if self.adj[low.bit_length() - 1] & s:
                return False
            rest ^= low
        return True

    def components(self) -> list[int]:
        """Connected components as masks, ordered by least vertex."""
        out = []
        seen = 0
        full = self.mask_all
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            while True:
                grown = comp | self.neighborhood(comp)
                if grown == comp:
                    break
                comp = grown
            out.append(comp)
            seen |= comp
        return out

    def is_connected(self) -> bool:
        comp = 1
        while True:
            grown = comp | self.neighborhood(comp)
            if grown == comp:
                break
            comp = grown
        return comp == self.mask_all

    def bipartition(self) -> Optional[tuple[int, int]]:
        """A 2-coloring (X, Y) as masks, or None if an odd cycle exists.

        The least vertex of every component lands in X.
        """
        side = [-1] * self.n
        x = y = 0
        for comp in self.components():
            root = (comp & -comp).bit_length() - 1
            side[root] = 0
            frontier = [root]
            while frontier:
                nxt = []
                for v in frontier:
                    rest = self.adj[v]
                    while rest:
                        low = rest & -rest
                        u = low.bit_length() - 1
                        rest ^= low
                        if side[u] == -1:
                            side[u] = 1 - side[v]
                            nxt.append(u)
                        elif side[u] == side[v]:
                            return None
                frontier = nxt
        for v, s in enumerate(side):
            if s == 0:
                x |= 1 << v
            else:
                y |= 1 << v
        return x, y

    def isolated_vertices(self) -> int:
        m = 0
        for v, row in enumerate(self.adj):
            if row == 0:
                m |= 1 << v
        return m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def neighborhood_of_set(g: Graph, s: int) -> int:
    return g.neighborhood(s)


def is_independent(g: Graph, s: int) -> bool:
    return g.is_independent(s)


def components(g: Graph) -> list[int]:
    return g.components()


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise DomainError("complete bipartite graph needs p, q >= 1")
    xmask = (1 << p) - 1
    ymask = ((1 << (p + q)) - 1) ^ xmask
    adj = [ymask] * p + [xmask] * q
    return Graph(p + q, adj)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise DomainError(f"union size {n} exceeds cap {MAX_VERTICES}")
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 + g2 with all cross edges; g2 vertices shifted by g1.n."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise DomainError(f"join size {n} exceeds cap {MAX_VERTICES}")
    m1 = (1 << g1.n) - 1
    m2 = ((1 << n) - 1) ^ m1
    adj = [row | m2 for row in g1.adj] + [(row << g1.n) | m1 for row in g2.adj]
    return Graph(n, adj)


@dataclass(frozen=True)
class BipartitionSpec:
    """Block sizes of a double nested bipartite graph.

    X side blocks p_parts[0..h-1] are laid out first, then Y side blocks
    q_parts[0..h-1], all in declaration order.
    """

    p_parts: tuple[int, ...]
    q_parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.p_parts) != len(self.q_parts) or not self.p_parts:
            raise DomainError("need equally many X and Y blocks, at least one each")
        if any(p < 1 for p in self.p_parts) or any(q < 1 for q in self.q_parts):
            raise DomainError("all block sizes must be positive")

    @property
    def h(self) -> int:
        return len(self.p_parts)

    @property
    def p(self) -> int:
        return sum(self.p_parts)

    @property
    def q(self) -> int:
        return sum(self.q_parts)

    @property
    def n(self) -> int:
        return self.p + self.q

    def blocks(self) -> tuple[int, ...]:
        """Vertex masks of the natural partition, X blocks then Y blocks."""
        out = []
        start = 0
        for size in self.p_parts + self.q_parts:
            out.append(((1 << size) - 1) << start)
            start += size
        return tuple(out)


def double_nested(spec: BipartitionSpec) -> Graph:
    """D(p_1..p_h; q_1..q_h): X block i joined to Y blocks 1..h+1-i."""
    if spec.n > MAX_VERTICES:
        raise DomainError(f"graph size {spec.n} exceeds cap {MAX_VERTICES}")
    h = spec.h
    blocks = spec.blocks()
    adj = [0] * spec.n
    for i in range(h):
        ymask = 0
        for j in range(h - i):
            ymask |= blocks[h + j]
        rest = blocks[i]
        while rest:
            low = rest & -rest
            adj[low.bit_length() - 1] = ymask
            rest ^= low
        yrest = ymask
        xmask = blocks[i]
        while yrest:
            low = yrest & -yrest
            adj[low.bit_length() - 1] |= xmask
            yrest ^= low
    return Graph(spec.n, adj)
