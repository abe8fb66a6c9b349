"""Four-path gadgets for c ≡ 3 (mod 6) and their concatenation into a cycle.

Each gadget Q_i (i = 1..4) occupies I(0, l_i + 2) ∪ {l_i + 5} and consists
of four disjoint paths leaving the anchors {0, 1, 2, 5} and arriving at the
translated anchors {l_i, l_i+1, l_i+2, l_i+5}.  Every vertex in I(0, l_i - 1)
has exactly one out-arc, so a gadget is stored as that list of steps.
Concatenating translates whose endpoint permutations multiply to a 4-cycle
closes up into a single hamiltonian cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CycleCert, Instance, verify_cycle

ANCHORS = (0, 1, 2, 5)

Perm = tuple[int, int, int, int]
"""A permutation of {1,2,3,4}, stored as (p(1), p(2), p(3), p(4))."""


def perm_from_cycle(*cycle: int) -> Perm:
    p = [1, 2, 3, 4]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        p[a - 1] = b
    return tuple(p)


IDENTITY: Perm = (1, 2, 3, 4)
SIGMA = {
    1: perm_from_cycle(1, 4, 2, 3),
    2: perm_from_cycle(2, 3, 4),
    3: perm_from_cycle(1, 3, 2, 4),
    4: IDENTITY,
}


def compose(perms) -> Perm:
    """Product of ``perms`` with the first one applied first."""
    out = IDENTITY
    for p in perms:
        out = tuple(p[out[k] - 1] for k in range(4))
    return out


def is_4_cycle(p: Perm) -> bool:
    k, size = 1, 0
    while True:
        k = p[k - 1]
        size += 1
        if k == 1:
            return size == 4


def cycle_notation(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of length > 1, each starting at its smallest element."""
    seen = set()
    cycles = []
    for start in range(1, 5):
        if start in seen or p[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        k = p[start - 1]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = p[k - 1]
        cycles.append(tuple(cyc))
    return tuple(cycles)


class GadgetError(ValueError):
    pass


class PlanError(ValueError):
    pass


class AssemblyError(RuntimeError):
    pass


@dataclass(frozen=True)
class Gadget:
    id: int
    c: int
    t: int = 0

    def __post_init__(self):
        if self.id not in (1, 2, 3, 4):
            raise GadgetError(f"gadget id must be 1..4, got {self.id}")
        if self.c < 9 or self.c % 6 != 3:
            raise GadgetError(f"gadgets need c ≡ 3 (mod 6) and c >= 9, got c={self.c}")
        if self.t < 0 or 6 * self.t > self.c - 9:
            raise GadgetError(f"t={self.t} violates 0 <= 6t <= c-9 for c={self.c}")
        if self.id != 2 and self.t != 0:
            raise GadgetError(f"t is only meaningful for Q2, got Q{self.id} with t={self.t}")

    @property
    def length(self) -> int:
        c, t = self.c, self.t
        return {1: c - 5, 2: c - 1 + 6 * t, 3: c - 2, 4: c + 3}[self.id]

    @property
    def sigma(self) -> Perm:
        return SIGMA[self.id]

    def vertex_set(self) -> set[int]:
        ell = self.length
        return set(range(ell + 3)) | {ell + 5}

    def travel(self) -> list[int]:
        """Step taken by each vertex 0..length-1."""
        c, t, ell = self.c, self.t, self.length
        steps = [0] * ell
        if self.id == 1:
            steps[0] = c
            steps[1] = steps[2] = 2
            for v in range(3, c - 5):
                steps[v] = 3
        elif self.id == 2:
            steps[0] = 3
            steps[1] = c
            steps[2] = 2
            for v in range(3, 6 * t + 4):
                steps[v] = 3
            steps[6 * t + 4] = c
            for v in range(6 * t + 5, c - 1):
                steps[v] = 2
            for v in range(c - 1, c - 1 + 6 * t):
                steps[v] = 3
        elif self.id == 3:
            steps[0] = steps[3] = c
            steps[1] = steps[2] = 2
            for v in range(4, c - 2):
                steps[v] = 2
        else:
            steps[0] = steps[1] = 3
            steps[2] = steps[8] = c
            for v in range(3, 8):
                steps[v] = 3
            for v in range(9, c):
                steps[v] = 2
            for v in range(c, c + 3):
                steps[v] = 3
        assert all(steps), f"Q{self.id} travel table has gaps"
        return steps

    def paths(self) -> list[list[int]]:
        """The four anchor paths, path k starting at ANCHORS[k]."""
        steps = self.travel()
        ell = self.length
        out = []
        for a in ANCHORS:
            path = [a]
            v = a
            while v < ell:
                v += steps[v]
                path.append(v)
            out.append(path)
        return out

    def expected_endpoints(self) -> list[tuple[int, int]]:
        ell = self.length
        return [(ANCHORS[k], ell + ANCHORS[self.sigma[k] - 1]) for k in range(4)]


def build_gadget(gadget_id: int, c: int, t: int = 0) -> list[list[int]]:
    return Gadget(gadget_id, c, t).paths()


@dataclass(frozen=True)
class GadgetPlan:
    gadgets: tuple[Gadget, ...]

    @property
    def lengths(self) -> list[int]:
        return [g.length for g in self.gadgets]

    @property
    def offsets(self) -> list[int]:
        out, total = [], 0
        for g in self.gadgets:
            out.append(total)
            total += g.length
        return out

    @property
    def total_length(self) -> int:
        return sum(self.lengths)

    @property
    def product(self) -> Perm:
        return compose(g.sigma for g in self.gadgets)


def plan_c3mod6(inst: Instance) -> GadgetPlan:
    """Choose gadgets whose lengths sum to n and whose permutations multiply to a 4-cycle.

    Copies of Q4 (length c+3, identity permutation) are stripped until the
    remainder R lies in [2c-6, 3c-9].  Then R = l1 + l2(t) when R <= 3c-15,
    and R = l1 + 2*l3 when R = 3c-9.
    """
    n, c = inst.n, inst.c
    if n % 6 or c % 6 != 3 or c < 9:
        raise PlanError(f"{inst} needs 6 | n and c ≡ 3 (mod 6) with c >= 9")
    if n < 2 * c - 6:
        raise PlanError(f"{inst} needs n >= 2c - 6 = {2 * c - 6}")
    q = (n - (2 * c - 6)) // (c + 3)
    r = n - q * (c + 3)
    assert 2 * c - 6 <= r <= 3 * c - 9, (n, c, r)
    if r <= 3 * c - 15:
        head = (Gadget(1, c), Gadget(2, c, (r - (2 * c - 6)) // 6))
    else:
        head = (Gadget(1, c), Gadget(3, c), Gadget(3, c))
    plan = GadgetPlan(head + (Gadget(4, c),) * q)
    assert plan.total_length == n and is_4_cycle(plan.product), plan
    return plan


def assemble_gadget_cycle(plan: GadgetPlan, inst: Instance) -> CycleCert:
    """Lay translated gadgets end to end around Z_n and read off the cycle through 0."""
    n = inst.n
    if plan.total_length != n:
        raise AssemblyError(f"gadget lengths sum to {plan.total_length}, not n={n}")
    succ_step = [0] * n
    for off, g in zip(plan.offsets, plan.gadgets):
        if g.c != inst.c:
            raise AssemblyError(f"gadget built for c={g.c}, instance has c={inst.c}")
        succ_step[off:off + g.length] = g.travel()
    steps = []
    v = 0
    for _ in range(n):
        s = succ_step[v]
        steps.append(s)
        v = (v + s) % n
        if v == 0:
            break
    cert = CycleCert(inst, 0, tuple(steps))
    violation = verify_cycle(cert)
    if violation is not None:
        raise AssemblyError(f"gadget plan for {inst} does not close into a hamiltonian cycle: {violation}")
    return cert
