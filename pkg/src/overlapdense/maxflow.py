"""Dinic max-flow on integer capacities with residual min-cut extraction."""

from __future__ import annotations

from collections import deque
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator


@dataclass
class FlowStats:
    calls: int = 0


_stats: ContextVar[FlowStats | None] = ContextVar("flow_stats", default=None)


@contextmanager
def count_flows() -> Iterator[FlowStats]:
    """Count max-flow invocations made inside the ``with`` block.

    Nested blocks also contribute to every enclosing counter.
    """
    parent = _stats.get()
    stats = FlowStats()
    token = _stats.set(stats)
    try:
        yield stats
    finally:
        _stats.reset(token)
        if parent is not None:
            parent.calls += stats.calls


class ResidualGraph:
    """Arc-pair residual graph; arc ``e`` and ``e ^ 1`` are mutual reverses."""

    __slots__ = ("n", "adj", "to", "cap")

    def __init__(self, n: int) -> None:
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int, reverse_cap: int = 0) -> int:
        e = len(self.to)
        self.to += (v, u)
        self.cap += (cap, reverse_cap)
        self.adj[u].append(e)
        self.adj[v].append(e + 1)
        return e

    def max_flow(self, s: int, t: int) -> int:
        stats = _stats.get()
        if stats is not None:
            stats.calls += 1
        adj, to, cap = self.adj, self.to, self.cap
        n = self.n
        flow = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for e in adj[u]:
                    v = to[e]
                    if cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * n
            path: list[int] = []
            u = s
            while True:
                if u == t:
                    pushed = min(cap[e] for e in path)
                    for e in path:
                        cap[e] -= pushed
                        cap[e ^ 1] += pushed
                    flow += pushed
                    path.clear()
                    u = s
                    continue
                arcs = adj[u]
                i = it[u]
                next_level = level[u] + 1
                while i < len(arcs):
                    e = arcs[i]
                    if cap[e] > 0 and level[to[e]] == next_level:
                        break
                    i += 1
                it[u] = i
                if i < len(arcs):
                    e = arcs[i]
                    path.append(e)
                    u = to[e]
                    continue
                if u == s:
                    break
                # dead end: prune u from the level graph and retreat
                level[u] = -1
                e = path.pop()
                u = to[e ^ 1]
                it[u] += 1

    def source_side(self, s: int) -> list[bool]:
        """Nodes reachable from ``s`` in the residual graph (the minimal min cut)."""
        seen = [False] * self.n
        seen[s] = True
        stack = [s]
        adj, to, cap = self.adj, self.to, self.cap
        while stack:
            u = stack.pop()
            for e in adj[u]:
                v = to[e]
                if cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return seen

    def sink_side(self, t: int) -> list[bool]:
        """Nodes that can still reach ``t`` in the residual graph."""
        seen = [False] * self.n
        seen[t] = True
        stack = [t]
        adj, to, cap = self.adj, self.to, self.cap
        while stack:
            y = stack.pop()
            for e in adj[y]:
                x = to[e]
                if cap[e ^ 1] > 0 and not seen[x]:
                    seen[x] = True
                    stack.append(x)
        return seen
