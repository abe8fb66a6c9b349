"""Exhaustive hamiltonian-cycle search on small circulant digraphs.

This module is the ground truth the constructions are checked against, so
it deliberately knows nothing about them: plain depth-first search from a
fixed start vertex, with degree-feasibility pruning and forced moves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import CycleCert, Instance, check_tour

DEFAULT_BUDGET = 10**8


class Status(enum.Enum):
    FOUND = "found"
    NONE_EXHAUSTIVE = "none"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    status: Status
    n: int
    nodes: int
    start: int = 0
    steps: tuple[int, ...] | None = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def tour(self) -> list[int]:
        out, v = [], self.start
        for s in self.steps or ():
            out.append(v)
            v = (v + s) % self.n
        return out

    def cert(self, instance: Instance) -> CycleCert:
        if self.steps is None:
            raise ValueError(f"no cycle to certify ({self.status.value})")
        return CycleCert(instance, self.start, self.steps)


def solve(n: int, steps, budget: int = DEFAULT_BUDGET, start: int = 0) -> OracleResult:
    """Search Circ(n; steps) for a hamiltonian cycle through ``start``.

    Steps are tried in ascending residue order, so results are reproducible.
    ``budget`` caps the number of search nodes (arc extensions); hitting it
    yields BUDGET_EXCEEDED rather than a verdict.
    """
    steps = list(steps)
    S = sorted({s % n for s in steps})
    if len(S) != len(steps) or 0 in S:
        raise ValueError(f"steps must be distinct nonzero residues mod {n}, got {steps}")
    start %= n
    if n == 1:
        return OracleResult(Status.NONE_EXHAUSTIVE, n, 0, start)

    visited = bytearray(n)
    visited[start] = 1
    # out_avail[v]: arcs out of unvisited v into unvisited vertices or start.
    # in_avail[v]: arcs into v (unvisited, or start) from unvisited vertices or the head.
    out_avail = [len(S)] * n
    in_avail = [len(S)] * n
    path_steps: list[int] = []
    nodes = 0

    def advance(h: int, x: int) -> bool:
        """Move the head from h to x; return False if some vertex became stranded."""
        visited[x] = 1
        ok = True
        for s in S:
            p = (x - s) % n
            if not visited[p]:
                out_avail[p] -= 1
                if out_avail[p] == 0:
                    ok = False
            y = (h + s) % n
            if y != x and (not visited[y] or y == start):
                in_avail[y] -= 1
                if in_avail[y] == 0:
                    ok = False
        return ok

    def retreat(h: int, x: int) -> None:
        for s in S:
            p = (x - s) % n
            if not visited[p]:
                out_avail[p] += 1
            y = (h + s) % n
            if y != x and (not visited[y] or y == start):
                in_avail[y] += 1
        visited[x] = 0

    def options(h: int) -> list[int]:
        # an unvisited successor that only the head can still enter must come next
        forced = None
        choices = []
        for s in S:
            y = (h + s) % n
            if visited[y]:
                continue
            if in_avail[y] == 1:
                if forced is not None:
                    return []
                forced = s
            choices.append(s)
        return [forced] if forced is not None else choices

    closing = set(S)
    # frame = [head, choices, next index]; len(path_steps) == len(frames) means
    # the top frame's last choice is still applied and must be undone
    frames = [[start, options(start), 0]]
    found = False
    while frames:
        frame = frames[-1]
        h, choices, i = frame
        if len(path_steps) == len(frames):
            s = path_steps.pop()
            retreat(h, (h + s) % n)
        if i == len(choices):
            frames.pop()
            continue
        frame[2] += 1
        s = choices[i]
        nodes += 1
        if nodes > budget:
            return OracleResult(Status.BUDGET_EXCEEDED, n, nodes, start)
        x = (h + s) % n
        if not advance(h, x):
            retreat(h, x)
            continue
        path_steps.append(s)
        if len(path_steps) == n - 1:
            if (start - x) % n in closing:
                path_steps.append((start - x) % n)
                found = True
                break
        else:
            frames.append([x, options(x), 0])

    if not found:
        return OracleResult(Status.NONE_EXHAUSTIVE, n, nodes, start)
    steps_out = tuple(path_steps)
    assert check_tour(n, S, start, steps_out) is None
    return OracleResult(Status.FOUND, n, nodes, start, steps_out)


def solve_instance(inst: Instance, budget: int = DEFAULT_BUDGET) -> OracleResult:
    return solve(inst.n, inst.steps, budget)
