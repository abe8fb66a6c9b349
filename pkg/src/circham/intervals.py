"""Interval paths for the large-c and small-c constructions.

Everything here lives on plain integers.  A c-arc is written as a backward
step of ``-c_prime``; the caller reduces mod n.
"""

from __future__ import annotations

from .core import Interval


class RangeError(ValueError):
    pass


class HypothesisError(ValueError):
    pass


class NoDecomposition(ValueError):
    pass


def build_P(u: int, w: int, c_prime: int) -> dict[int, int]:
    """Travel table of the pseudopath from u+1 to w-1 on I(u, w).

    Maps each vertex to its step in {2, 3, -c_prime}; w-1 has no out-arc and
    is absent from the table.
    """
    if c_prime <= 3:
        raise RangeError(f"c' must exceed 3, got {c_prime}")
    if not u + c_prime + 2 <= w <= u + 2 * c_prime:
        raise RangeError(f"need {u + c_prime + 2} <= w <= {u + 2 * c_prime}, got w={w}")
    travel = {}
    for v in range(u, w - c_prime - 2):
        travel[v] = 2
    for v in range(w - c_prime - 2, u + c_prime):
        travel[v] = 3
    travel[u + c_prime] = -c_prime
    for v in range(u + c_prime + 1, w - 1):
        travel[v] = 2
    travel[w] = -c_prime
    return travel


def follow(travel: dict[int, int], start: int) -> list[int]:
    """Walk the functional digraph ``travel`` from ``start`` until a vertex without an out-arc."""
    path = [start]
    seen = {start}
    v = start
    while v in travel:
        v += travel[v]
        if v in seen:
            raise ValueError(f"walk from {start} closes a cycle at {v}")
        seen.add(v)
        path.append(v)
    return path


def p_is_path_condition(delta: int, c_prime: int) -> bool:
    """Sufficient congruence test for build_P(u, u + delta, c_prime) to be a single path."""
    r = (delta - 2 * c_prime) % 3
    same_parity = (delta - c_prime) % 2 == 0
    return r == 0 or (r == 1 and same_parity) or (r == 2 and not same_parity)


def k_membership(k: int, c_prime: int, n: int) -> bool:
    """Block sizes k for which an interval of k vertices has a suitable hamiltonian path."""
    return k <= n and c_prime + 3 <= k <= 2 * c_prime + 2 and (k + c_prime) % 6 != 3


def k_set(c_prime: int, n: int) -> list[int]:
    return [k for k in range(c_prime + 3, 2 * c_prime + 3) if k_membership(k, c_prime, n)]


def _check_block(u: int, w: int, c_prime: int, n: int | None) -> int:
    k = w - u + 1
    if n is not None and k > n:
        raise HypothesisError(f"block size {k} exceeds n={n}")
    if not c_prime + 3 <= k <= 2 * c_prime + 2:
        raise HypothesisError(f"block size {k} outside [{c_prime + 3}, {2 * c_prime + 2}]")
    if (k + c_prime) % 6 == 3:
        raise HypothesisError(f"block size {k} has k + c' ≡ 3 (mod 6)")
    return k


def interval_ham_path(u: int, w: int, c_prime: int, n: int | None = None) -> list[int]:
    """Hamiltonian path of I(u, w) from u+1, ending at w-1 or w.

    Uses steps 2, 3 and -c_prime only.  Raises HypothesisError if the block
    size is not admissible (see k_membership).
    """
    k = _check_block(u, w, c_prime, n)
    r = (k - 2 * c_prime) % 3
    if r == 2 and k != c_prime + 3:
        travel = build_P(u, w - 1, c_prime)
        travel[w - 2] = 2
    else:
        travel = build_P(u, w, c_prime)
    path = follow(travel, u + 1)
    if len(path) != k:
        raise AssertionError(f"path on I({u},{w}) covers {len(path)} of {k} vertices")
    return path


def decompose_sum(n0: int, c_prime: int, n: int) -> list[int]:
    """Write n0 as a sum of admissible block sizes; parts returned in ascending order.

    Strips copies of c'+4 down to the window [2(c'+4), 3(c'+4)), tries one
    and two parts there, and otherwise falls back to a subset-sum table.
    Raises NoDecomposition when no representation exists (for n0 >= 2(c'+4)
    this only happens at c' = 6, n0 = 29).
    """
    ks = k_set(c_prime, n)
    if not ks:
        raise NoDecomposition(f"no admissible block sizes for c'={c_prime}, n={n}")
    kset = set(ks)
    base = c_prime + 4
    copies = 0
    r = n0
    if base in kset:
        while r >= 3 * base:
            r -= base
            copies += 1
    if r in kset:
        return sorted([r] + [base] * copies)
    for k1 in ks:
        if r - k1 in kset and k1 <= r - k1:
            return sorted([k1, r - k1] + [base] * copies)

    # subset-sum over a bounded window, then pad with copies of the largest part
    top = ks[-1]
    limit = min(n0, 6 * top)
    reach: list[int | None] = [None] * (limit + 1)
    reach[0] = 0
    for total in range(1, limit + 1):
        for k in ks:
            if k <= total and reach[total - k] is not None:
                reach[total] = k
                break
    pad = 0
    r = n0
    while r > limit:
        r -= top
        pad += 1
    while r >= 0:
        if reach[r] is not None:
            parts = [top] * pad
            while r:
                parts.append(reach[r])
                r -= reach[r]
            return sorted(parts)
        r -= top
        pad += 1
    raise NoDecomposition(f"{n0} is not a sum of elements of {ks}")
