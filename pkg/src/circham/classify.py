"""Hamiltonicity decision rules for outdegree-3 {2,3,c} and outdegree-2 circulants."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .core import Instance


class Verdict(enum.Enum):
    HAMILTONIAN = "hamiltonian"
    NON_HAMILTONIAN = "non-hamiltonian"


@dataclass(frozen=True)
class NonHamWitness:
    m: int
    offset: int  # c = 3m + offset, offset in {2, 3}
    c_even: bool

    def __str__(self) -> str:
        return f"n=6m, c=3m+{self.offset}, c {'even' if self.c_even else 'odd'}"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    witness: NonHamWitness | None = None

    @property
    def hamiltonian(self) -> bool:
        return self.verdict is Verdict.HAMILTONIAN


def classify(inst: Instance) -> Classification:
    """Decide whether Circ(n; 2, 3, c) has a hamiltonian cycle.

    The only non-hamiltonian instances are n = 6m with c in {3m+2, 3m+3}
    and c even.  Parity is read off the reduced c in (0, n); n is even in
    every such case, so the representative does not matter.
    """
    m = inst.m
    if m is not None:
        offset = inst.c - 3 * m
        if offset in (2, 3) and inst.c % 2 == 0:
            return Classification(Verdict.NON_HAMILTONIAN, NonHamWitness(m, offset, True))
    return Classification(Verdict.HAMILTONIAN)


@dataclass(frozen=True)
class RankinWitness:
    s: int
    t: int


def rankin_hamiltonian(n: int, a: int, b: int) -> tuple[bool, RankinWitness | None]:
    """Decide hamiltonicity of the outdegree-2 circulant Circ(n; a, b).

    In a hamiltonian cycle the vertices travelling by a form a union of
    cosets of H = <a - b>, which has index d = gcd(n, a - b).  The cycle
    walks through the d cosets in turn, s of them by a and t = d - s by b,
    and returns to H displaced by s*a + t*b.  So the digraph is hamiltonian
    iff a and b generate Z_n and, for some s in [0, d], s*a + t*b generates
    H, i.e. gcd(n, s*a + t*b) = d.  When d = 1 this reduces to
    gcd(n, s*a + t*b) = 1.

    Returns the witness with the smallest s.
    """
    a %= n
    b %= n
    if a == b or a == 0 or b == 0:
        raise ValueError(f"need distinct nonzero residues mod {n}, got {a}, {b}")
    if gcd(gcd(n, a), b) != 1:
        return False, None
    d = gcd(n, a - b)
    for s in range(d + 1):
        t = d - s
        if gcd(n, s * a + t * b) == d:
            return True, RankinWitness(s, t)
    return False, None
