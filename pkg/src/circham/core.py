"""Domain types for Circ(n; 2, 3, c), the cycle verifier, and text/DOT output.

Vertices are residues in ``range(n)``.  Path-level helpers work on plain
integers (before reduction mod n) and only reduce when checked.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MIN_N = 5

VertexPath = Sequence[int]


class InvalidReason(enum.Enum):
    TOO_SMALL_N = "TooSmallN"
    LOOP_ARC = "LoopArc"
    DUPLICATE_STEP = "DuplicateStep"


class InvalidInstanceError(ValueError):
    def __init__(self, reason: InvalidReason, n: int, c: int):
        self.reason = reason
        self.n = n
        self.c = c
        super().__init__(f"invalid instance (n={n}, c={c}): {reason.value}")

    def describe(self) -> str:
        if self.reason is InvalidReason.TOO_SMALL_N:
            return f"n < {MIN_N}"
        return f"c ≡ {self.c % self.n} (mod n)"


@dataclass(frozen=True)
class Instance:
    n: int
    c: int

    @property
    def m(self) -> int | None:
        return self.n // 6 if self.n % 6 == 0 else None

    @property
    def c_prime(self) -> int | None:
        return self.n - self.c if self.n % 6 == 0 else None

    @property
    def steps(self) -> tuple[int, int, int]:
        return (2, 3, self.c)

    def __str__(self) -> str:
        return f"Circ({self.n};2,3,{self.c})"


def normalize(n: int, c: int) -> Instance:
    """Reduce ``c`` into ``(0, n)`` and validate.

    Raises InvalidInstanceError when the connection set {2, 3, c} does not
    consist of three distinct nonzero residues.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n < MIN_N:
        raise InvalidInstanceError(InvalidReason.TOO_SMALL_N, n, c)
    r = c % n
    if r == 0:
        raise InvalidInstanceError(InvalidReason.LOOP_ARC, n, c)
    if r in (2, 3):
        raise InvalidInstanceError(InvalidReason.DUPLICATE_STEP, n, c)
    return Instance(n, r)


@dataclass(frozen=True)
class Interval:
    """The block of consecutive integers ``u, u+1, ..., w``."""

    u: int
    w: int

    def __post_init__(self):
        if self.w < self.u - 1:
            raise ValueError(f"I({self.u},{self.w}) needs w >= u - 1")

    def __len__(self) -> int:
        return self.w - self.u + 1

    def __iter__(self):
        return iter(range(self.u, self.w + 1))

    def __contains__(self, v: int) -> bool:
        return self.u <= v <= self.w


@dataclass(frozen=True)
class CycleCert:
    instance: Instance
    start: int
    steps: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_tour(cls, instance: Instance, tour: Sequence[int]) -> CycleCert:
        """Build a certificate from a closed vertex tour (first vertex not repeated)."""
        n = instance.n
        steps = tuple((tour[(i + 1) % len(tour)] - tour[i]) % n for i in range(len(tour)))
        return cls(instance, tour[0] % n, steps)

    def vertices(self) -> list[int]:
        n = self.instance.n
        out = []
        v = self.start
        for s in self.steps:
            out.append(v)
            v = (v + s) % n
        return out

    def rotated(self, k: int) -> CycleCert:
        k %= max(len(self.steps), 1)
        start = (self.start + sum(self.steps[:k])) % self.instance.n
        return CycleCert(self.instance, start, self.steps[k:] + self.steps[:k])


class ViolationKind(enum.Enum):
    BAD_STEP = "BadStep"
    WRONG_LENGTH = "WrongLength"
    NOT_CLOSED = "NotClosed"
    REPEATED_VERTEX = "RepeatedVertex"
    OVERLAP = "Overlap"
    MISSING_VERTEX = "MissingVertex"
    EXTRA_VERTEX = "ExtraVertex"
    WRONG_ENDPOINT = "WrongEndpoint"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" at index {self.index}" if self.index is not None else ""
        return f"{self.kind.value}{where}: {self.detail}" if self.detail else f"{self.kind.value}{where}"


def check_tour(n: int, allowed: Iterable[int], start: int, steps: Sequence[int]) -> Violation | None:
    """Check that ``steps`` from ``start`` trace a hamiltonian cycle of Circ(n; allowed).

    Returns None on success, otherwise the first violation found.  Works for
    any connection set, which lets the oracle share it.
    """
    allowed = {a % n for a in allowed}
    if len(steps) != n:
        return Violation(ViolationKind.WRONG_LENGTH, None, f"{len(steps)} steps for n={n}")
    seen = bytearray(n)
    v = start % n
    for i, s in enumerate(steps):
        if s % n not in allowed:
            return Violation(ViolationKind.BAD_STEP, i, f"step {s} not in {sorted(allowed)}")
        if seen[v]:
            return Violation(ViolationKind.REPEATED_VERTEX, i, f"vertex {v} revisited")
        seen[v] = 1
        v = (v + s) % n
    if v != start % n:
        return Violation(ViolationKind.NOT_CLOSED, n, f"tour ends at {v}, not {start % n}")
    return None


def verify_cycle(cert: CycleCert) -> Violation | None:
    """Return None iff ``cert`` is a hamiltonian cycle of its instance."""
    inst = cert.instance
    return check_tour(inst.n, inst.steps, cert.start, cert.steps)


def verify_disjoint_paths(
    paths: Sequence[VertexPath],
    required: Iterable[int],
    endpoints: Sequence[tuple[int, int]],
    steps: Iterable[int] | None = None,
) -> Violation | None:
    """Check that ``paths`` are vertex-disjoint, cover ``required`` exactly,
    and that path k runs from ``endpoints[k][0]`` to ``endpoints[k][1]``.

    If ``steps`` is given, consecutive differences must also lie in it.
    """
    required = set(required)
    allowed = set(steps) if steps is not None else None
    seen: set[int] = set()
    for k, path in enumerate(paths):
        for j, v in enumerate(path):
            if v in seen:
                return Violation(ViolationKind.OVERLAP, k, f"vertex {v} on more than one path")
            seen.add(v)
            if v not in required:
                return Violation(ViolationKind.EXTRA_VERTEX, k, f"vertex {v} not required")
            if allowed is not None and j and v - path[j - 1] not in allowed:
                return Violation(ViolationKind.BAD_STEP, k, f"arc {path[j - 1]}->{v}")
    missing = required - seen
    if missing:
        return Violation(ViolationKind.MISSING_VERTEX, None, f"{len(missing)} uncovered, e.g. {min(missing)}")
    if len(paths) != len(endpoints):
        return Violation(ViolationKind.WRONG_ENDPOINT, None, f"{len(paths)} paths for {len(endpoints)} endpoint pairs")
    for k, (path, (a, b)) in enumerate(zip(paths, endpoints)):
        if not path or path[0] != a or path[-1] != b:
            ends = (path[0], path[-1]) if path else None
            return Violation(ViolationKind.WRONG_ENDPOINT, k, f"expected {a}->{b}, got {ends}")
    return None


# -- certificate text format --------------------------------------------------

MAGIC = "circham v1"


class CertParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def encode_cert(cert: CycleCert) -> str:
    inst = cert.instance
    return "\n".join(
        [
            MAGIC,
            f"n={inst.n} c={inst.c}",
            f"start={cert.start}",
            "steps=" + ",".join(map(str, cert.steps)),
        ]
    ) + "\n"


_HEADER_RE = re.compile(r"n=(-?\d+) c=(-?\d+)")
_START_RE = re.compile(r"start=(-?\d+)")


def decode_cert(text: str) -> CycleCert:
    """Parse the four-line certificate format.

    Only syntax and instance validity are checked here; run verify_cycle on
    the result to check the cycle itself.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 4:
        raise CertParseError(f"expected 4 lines, found {len(lines)}", min(len(lines) + 1, 5))
    if lines[0] != MAGIC:
        raise CertParseError(f"expected {MAGIC!r}", 1)
    hm = _HEADER_RE.fullmatch(lines[1])
    if not hm:
        raise CertParseError("expected 'n=<int> c=<int>'", 2)
    n, c = int(hm[1]), int(hm[2])
    try:
        inst = normalize(n, c)
    except (InvalidInstanceError, ValueError) as e:
        raise CertParseError(str(e), 2) from None
    if inst.c != c:
        raise CertParseError(f"c must be reduced into (0, n), got {c}", 2, lines[1].index("c=") + 3)
    sm = _START_RE.fullmatch(lines[2])
    if not sm:
        raise CertParseError("expected 'start=<int>'", 3)
    if not lines[3].startswith("steps="):
        raise CertParseError("expected 'steps=<ints>'", 4)
    steps = []
    col = len("steps=") + 1
    for tok in lines[3][len("steps="):].split(","):
        if not re.fullmatch(r"-?\d+", tok):
            raise CertParseError(f"bad step token {tok!r}", 4, col)
        steps.append(int(tok))
        col += len(tok) + 1
    return CycleCert(inst, int(sm[1]), tuple(steps))


# -- DOT export ---------------------------------------------------------------

def to_dot(instance: Instance, cert: CycleCert | None = None) -> str:
    """Render all 3n arcs as a DOT digraph; arcs on ``cert`` are highlighted."""
    n = instance.n
    on_cycle: set[tuple[int, int]] = set()
    if cert is not None:
        for v, s in zip(cert.vertices(), cert.steps):
            on_cycle.add((v, s % n))
    lines = [f'digraph "Circ({n};2,3,{instance.c})" {{', "  node [shape=circle];"]
    for v in range(n):
        for s in instance.steps:
            attrs = f"label={s}"
            if (v, s) in on_cycle:
                attrs += ", color=red, penwidth=2"
            lines.append(f"  {v} -> {(v + s) % n} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
