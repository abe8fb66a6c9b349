"""Build a verified hamiltonian cycle of Circ(n; 2, 3, c), or explain why not.

Routes, tried in order:

* AllC / All2 / All3 -- a single step generates Z_n.
* CMinus2 / CMinus3 -- explicit periodic tours for c = n-2 and c = n-3.
* Gadget -- c ≡ 3 (mod 6): concatenated four-path gadgets.
* SmallC -- c <= n/2: one interval path over all of Z_n.
* BigC -- c > n/2: interval paths over consecutive blocks, joined by 2- and 3-arcs.
* OracleFallback -- c = 3m+2 with m odd, which is hamiltonian but has no
  construction here; exhaustive search within a node budget.

Every returned certificate has passed verify_cycle.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from math import gcd

from . import oracle
from .classify import NonHamWitness, classify
from .core import CycleCert, Instance, InvalidInstanceError, normalize, verify_cycle
from .gadgets import AssemblyError, assemble_gadget_cycle, plan_c3mod6
from .intervals import decompose_sum, interval_ham_path

log = logging.getLogger(__name__)

DEFAULT_ORACLE_BUDGET = 200_000


class Method(enum.Enum):
    ALL_C = "AllC"
    ALL_2 = "All2"
    ALL_3 = "All3"
    C_MINUS_2 = "CMinus2"
    C_MINUS_3 = "CMinus3"
    SMALL_C = "SmallC"
    BIG_C = "BigC"
    GADGET = "Gadget"
    ORACLE_FALLBACK = "OracleFallback"


class ConstructionError(RuntimeError):
    """A constructive route produced something the verifier rejects."""


def _verified(cert: CycleCert) -> CycleCert:
    violation = verify_cycle(cert)
    if violation is not None:
        raise ConstructionError(f"{cert.instance}: {violation}")
    return cert


def _cert_from_path(inst: Instance, tour: list[int]) -> CycleCert:
    n = inst.n
    steps = tuple((tour[(i + 1) % n] - tour[i]) % n for i in range(n))
    return CycleCert(inst, tour[0] % n, steps)


def trivial_cycle(inst: Instance) -> tuple[CycleCert, Method] | None:
    n, c = inst.n, inst.c
    if c == 1 or c == n - 1:
        return CycleCert(inst, 0, (c,) * n), Method.ALL_C
    if gcd(n, 2) == 1:
        return CycleCert(inst, 0, (2,) * n), Method.ALL_2
    if gcd(n, 3) == 1:
        return CycleCert(inst, 0, (3,) * n), Method.ALL_3
    return None


def cycle_c_minus_2(m: int) -> CycleCert:
    """Hamiltonian cycle of Circ(6m; 2, 3, 6m-2): m blocks 2,2,3,-2,-2,3."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    inst = normalize(6 * m, 6 * m - 2)
    c = inst.c
    return _verified(CycleCert(inst, 0, (2, 2, 3, c, c, 3) * m))


def cycle_c_minus_3(m: int) -> CycleCert:
    """Hamiltonian cycle of Circ(6m; 2, 3, 6m-3).

    0 -3-> 6m-6 -2-> 6m-4 -(-3)-> 2 -2-> 4 -3-> 6m-5 -2-> 1 -(-3)-> 6m-2 -2-> 0
    """
    if m < 2:
        # c = 3 collides with the 3-step; Circ(6; 2, 3) has no hamiltonian cycle
        raise ValueError(f"c = 6m-3 needs m >= 2, got m={m}")
    inst = normalize(6 * m, 6 * m - 3)
    c = inst.c
    steps = (
        (3,) * (2 * m - 2)
        + (2,)
        + (c,) * (2 * m - 2)
        + (2,)
        + (3,) * (2 * m - 3)
        + (2,) * 3
        + (c, 2)
    )
    return _verified(CycleCert(inst, 0, steps))


def assemble_small_c(inst: Instance) -> CycleCert:
    """One interval path over I(0, n-1), closed back to vertex 1."""
    n, c, m = inst.n, inst.c, inst.m
    if m is None or not (3 < c <= 3 * m) or c % 6 == 3:
        raise ValueError(f"{inst}: small-c route needs 6 | n, 3 < c <= n/2, c ≢ 3 (mod 6)")
    path = interval_ham_path(0, n - 1, n - c, n)
    return _verified(_cert_from_path(inst, path))


def assemble_big_c(inst: Instance) -> CycleCert:
    """Cover Z_n by consecutive blocks with interval paths and chain them."""
    n, c, m = inst.n, inst.c, inst.m
    if m is None or c <= 3 * m or c in (3 * m + 2, 3 * m + 3) or n - c < 4:
        raise ValueError(f"{inst}: big-c route needs 6 | n, c > n/2, c ∉ {{3m+2, 3m+3}}, n - c >= 4")
    c_prime = n - c
    if n < 2 * (c_prime + 4):
        assert n == 2 * c_prime + 2, inst
        parts = [n]
    else:
        parts = decompose_sum(n, c_prime, n)
    tour: list[int] = []
    u = 0
    for k in parts:
        tour.extend(interval_ham_path(u, u + k - 1, c_prime, n))
        u += k
    return _verified(_cert_from_path(inst, tour))


@dataclass(frozen=True)
class ConstructionResult:
    kind: str  # "cycle" | "non-hamiltonian" | "invalid" | "unknown"
    instance: Instance | None = None
    cert: CycleCert | None = None
    method: Method | None = None
    witness: NonHamWitness | None = None
    reason: str = ""

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"


def _constructive(inst: Instance) -> tuple[CycleCert, Method] | None:
    hit = trivial_cycle(inst)
    if hit is not None:
        return hit
    n, c, m = inst.n, inst.c, inst.m
    assert m is not None
    c_prime = n - c
    if c_prime == 2:
        return cycle_c_minus_2(m), Method.C_MINUS_2
    if c_prime == 3:
        return cycle_c_minus_3(m), Method.C_MINUS_3
    if c % 6 == 3 and n >= 2 * c - 6:
        return assemble_gadget_cycle(plan_c3mod6(inst), inst), Method.GADGET
    if c <= 3 * m:
        return assemble_small_c(inst), Method.SMALL_C
    if c not in (3 * m + 2, 3 * m + 3):
        return assemble_big_c(inst), Method.BIG_C
    return None


def build(n: int, c: int, oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> ConstructionResult:
    try:
        inst = normalize(n, c)
    except InvalidInstanceError as e:
        return ConstructionResult("invalid", reason=f"invalid: {e.describe()}")
    cls = classify(inst)
    if not cls.hamiltonian:
        return ConstructionResult("non-hamiltonian", inst, witness=cls.witness, reason=f"non-hamiltonian: {cls.witness}")

    try:
        hit = _constructive(inst)
    except (ConstructionError, AssemblyError) as e:
        log.error("constructive route rejected by verifier, falling back to search: %s", e)
        hit = None
    if hit is not None:
        cert, method = hit
        return ConstructionResult("cycle", inst, cert, method)

    if inst.m is not None and inst.c == 3 * inst.m + 2:
        why = "hamiltonian by Locke-Witte (c = 3m+2, m odd) but has no explicit construction here"
    else:
        why = "a constructive route failed verification"
    reason = f"unknown: {inst} is {why}; search budget of {oracle_budget} nodes exhausted"
    if oracle_budget <= 0:
        return ConstructionResult("unknown", inst, reason=reason)
    res = oracle.solve_instance(inst, oracle_budget)
    if res.found:
        return ConstructionResult("cycle", inst, _verified(res.cert(inst)), Method.ORACLE_FALLBACK)
    if res.status is oracle.Status.NONE_EXHAUSTIVE:
        # would contradict the classifier; never expected
        raise ConstructionError(f"search found no hamiltonian cycle in {inst}, classifier says hamiltonian")
    return ConstructionResult("unknown", inst, reason=reason)
