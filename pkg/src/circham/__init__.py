"""Hamiltonian cycles in the circulant digraphs Circ(n; 2, 3, c)."""

from .classify import Classification, RankinWitness, Verdict, classify, rankin_hamiltonian
from .construct import ConstructionResult, Method, build
from .core import (
    CycleCert,
    Instance,
    InvalidInstanceError,
    InvalidReason,
    Violation,
    ViolationKind,
    decode_cert,
    encode_cert,
    normalize,
    to_dot,
    verify_cycle,
    verify_disjoint_paths,
)
from .oracle import OracleResult, solve

__all__ = [
    "Classification",
    "ConstructionResult",
    "CycleCert",
    "Instance",
    "InvalidInstanceError",
    "InvalidReason",
    "Method",
    "OracleResult",
    "RankinWitness",
    "Verdict",
    "Violation",
    "ViolationKind",
    "build",
    "classify",
    "decode_cert",
    "encode_cert",
    "normalize",
    "rankin_hamiltonian",
    "solve",
    "to_dot",
    "verify_cycle",
    "verify_disjoint_paths",
]
