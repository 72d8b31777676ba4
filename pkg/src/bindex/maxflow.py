"""Dinic max-flow on small dense networks.

Flat parallel arrays (to, cap, next) with head pointers; iterative BFS
and blocking-flow DFS. Capacities are python ints, so products like
a*n never overflow.
"""

from __future__ import annotations


class Dinic:
    __slots__ = ("n", "head", "to", "cap", "nxt", "level", "it")

    def __init__(self, n: int) -> None:
        self.n = n
        self.head = [-1] * n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.nxt: list[int] = []
        self.level = [0] * n
        self.it = [0] * n

    def add_edge(self, u: int, v: int, c: int) -> None:
        self.to.append(v)
        self.cap.append(c)
        self.nxt.append(self.head[u])
        self.head[u] = len(self.to) - 1
        self.to.append(u)
        self.cap.append(0)
        self.nxt.append(self.head[v])
        self.head[v] = len(self.to) - 1

    def _bfs(self, s: int, t: int) -> bool:
        level = self.level
        for i in range(self.n):
            level[i] = -1
        level[s] = 0
        queue = [s]
        head, to, cap, nxt = self.head, self.to, self.cap, self.nxt
        for u in queue:
            e = head[u]
            while e != -1:
                if cap[e] > 0 and level[to[e]] == -1:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
                e = nxt[e]
        return level[t] != -1

    def _dfs(self, s: int, t: int) -> int:
        # iterative blocking flow over the level graph
        total = 0
        level, it, to, cap, nxt = self.level, self.it, self.to, self.cap, self.nxt
        path: list[int] = []
        v = s
        while True:
            if v == t:
                bottleneck = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= bottleneck
                    cap[e ^ 1] += bottleneck
                total += bottleneck
                # retreat to the tail of the first saturated arc
                cut = 0
                for i, e in enumerate(path):
                    if cap[e] == 0:
                        cut = i
                        break
                del path[cut:]
                v = s if not path else to[path[-1]]
                continue
            e = it[v]
            while e != -1 and not (cap[e] > 0 and level[to[e]] == level[v] + 1):
                e = nxt[e]
            it[v] = e
            if e != -1:
                path.append(e)
                v = to[e]
                continue
            # dead end: drop v from the level graph and step back
            level[v] = -1
            if not path:
                break
            back = path.pop()
            v = s if not path else to[path[-1]]
            it[v] = nxt[back]
        return total

    def maxflow(self, s: int, t: int) -> int:
        flow = 0
        while self._bfs(s, t):
            for i in range(self.n):
                self.it[i] = self.head[i]
            flow += self._dfs(s, t)
        return flow

    def source_side(self, s: int) -> list[int]:
        """Residual-reachable vertices from s after maxflow: the min cut side."""
        seen = [False] * self.n
        seen[s] = True
        queue = [s]
        head, to, cap, nxt = self.head, self.to, self.cap, self.nxt
        for u in queue:
            e = head[u]
            while e != -1:
                if cap[e] > 0 and not seen[to[e]]:
                    seen[to[e]] = True
                    queue.append(to[e])
                e = nxt[e]
        return [v for v in range(self.n) if seen[v]]
