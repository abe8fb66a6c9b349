from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circham.core import (
    CertParseError,
    CycleCert,
    Instance,
    Interval,
    InvalidInstanceError,
    InvalidReason,
    ViolationKind,
    decode_cert,
    encode_cert,
    normalize,
    to_dot,
    verify_cycle,
    verify_disjoint_paths,
)


def test_normalize_reduces_c():
    inst = normalize(12, 20)
    assert inst == Instance(12, 8)
    assert inst.m == 2 and inst.c_prime == 4


def test_normalize_without_six_divisibility():
    inst = normalize(10, 9)
    assert inst.c == 9
    assert inst.m is None and inst.c_prime is None


@pytest.mark.parametrize(
    "n, c, reason",
    [
        (12, 14, InvalidReason.DUPLICATE_STEP),
        (12, 3, InvalidReason.DUPLICATE_STEP),
        (12, 24, InvalidReason.LOOP_ARC),
        (4, 1, InvalidReason.TOO_SMALL_N),
    ],
)
def test_normalize_rejects(n, c, reason):
    with pytest.raises(InvalidInstanceError) as exc:
        normalize(n, c)
    assert exc.value.reason is reason


def test_normalize_negative_c():
    assert normalize(12, -4).c == 8


def test_interval():
    assert list(Interval(3, 6)) == [3, 4, 5, 6]
    assert len(Interval(3, 2)) == 0
    assert 4 in Interval(3, 6) and 7 not in Interval(3, 6)
    with pytest.raises(ValueError):
        Interval(3, 1)


def test_verify_all_c_cycle():
    assert verify_cycle(CycleCert(Instance(6, 5), 0, (5,) * 6)) is None


def test_verify_all_2_cycle():
    cert = CycleCert(Instance(9, 4), 0, (2,) * 9)
    assert verify_cycle(cert) is None
    assert cert.vertices() == [0, 2, 4, 6, 8, 1, 3, 5, 7]


def test_verify_repeated_vertex():
    v = verify_cycle(CycleCert(Instance(12, 8), 0, (2,) * 12))
    assert v.kind is ViolationKind.REPEATED_VERTEX and v.index == 6


def test_verify_bad_step_and_length():
    assert verify_cycle(CycleCert(Instance(6, 5), 0, (5, 5, 1, 5, 5, 5))).kind is ViolationKind.BAD_STEP
    assert verify_cycle(CycleCert(Instance(6, 5), 0, (5,) * 5)).kind is ViolationKind.WRONG_LENGTH


def test_verify_not_closed():
    # visits 0,2,4,6,1,3,5 once each, then lands on 2
    cert = CycleCert(Instance(7, 4), 0, (2, 2, 2, 2, 2, 2, 4))
    v = verify_cycle(cert)
    assert v.kind is ViolationKind.NOT_CLOSED


@st.composite
def hamiltonian_certs(draw):
    """Certificates from the all-2/all-3/all-c routes on random small instances."""
    n = draw(st.integers(5, 60))
    c = draw(st.integers(1, n - 1).filter(lambda c: c not in (2, 3)))
    options = [s for s in (2, 3, c) if gcd(n, s) == 1]
    if not options:
        c = n - 1
        options = [c]
    step = draw(st.sampled_from(options))
    start = draw(st.integers(0, n - 1))
    return CycleCert(Instance(n, c), start, (step,) * n)


@given(hamiltonian_certs(), st.integers(0, 200))
def test_verify_invariant_under_rotation(cert, k):
    assert verify_cycle(cert) is None
    assert verify_cycle(cert.rotated(k)) is None


@given(hamiltonian_certs())
def test_accepted_cycle_visits_each_vertex_once(cert):
    assert sorted(cert.vertices()) == list(range(cert.instance.n))


@given(st.integers(6, 40), st.data())
def test_rotation_preserves_rejection(n, data):
    c = data.draw(st.integers(4, n - 1))
    steps = tuple(data.draw(st.lists(st.sampled_from([2, 3, c]), min_size=n, max_size=n)))
    cert = CycleCert(Instance(n, c), 0, steps)
    k = data.draw(st.integers(0, n - 1))
    assert (verify_cycle(cert) is None) == (verify_cycle(cert.rotated(k)) is None)


# -- disjoint paths -------------------------------------------------------------

def test_disjoint_paths_q3_c9():
    paths = [[0, 9], [1, 3, 12], [2, 4, 6, 8], [5, 7]]
    required = set(range(10)) | {12}
    assert verify_disjoint_paths(paths, required, [(0, 9), (1, 12), (2, 8), (5, 7)]) is None


def test_disjoint_paths_overlap():
    v = verify_disjoint_paths([[0, 2, 4], [1, 4]], {0, 1, 2, 4}, [(0, 4), (1, 4)])
    assert v.kind is ViolationKind.OVERLAP


def test_disjoint_paths_missing():
    assert verify_disjoint_paths([], {0, 1}, []).kind is ViolationKind.MISSING_VERTEX


def test_disjoint_paths_extra_and_endpoint():
    assert verify_disjoint_paths([[0, 2]], {0}, [(0, 2)]).kind is ViolationKind.EXTRA_VERTEX
    assert verify_disjoint_paths([[0, 2]], {0, 2}, [(0, 3)]).kind is ViolationKind.WRONG_ENDPOINT


def test_disjoint_paths_step_check():
    assert verify_disjoint_paths([[0, 5]], {0, 5}, [(0, 5)], steps={2, 3}).kind is ViolationKind.BAD_STEP


# -- text format ------------------------------------------------------------------

def test_encode_all_c():
    text = encode_cert(CycleCert(Instance(6, 5), 0, (5,) * 6))
    assert text == "circham v1\nn=6 c=5\nstart=0\nsteps=5,5,5,5,5,5\n"


def test_decode_bad_token():
    with pytest.raises(CertParseError) as exc:
        decode_cert("circham v1\nn=6 c=5\nstart=0\nsteps=5,x,5,5,5,5\n")
    assert exc.value.line == 4 and exc.value.column == 9


@pytest.mark.parametrize(
    "text",
    [
        "",
        "circham v2\nn=6 c=5\nstart=0\nsteps=5\n",
        "circham v1\nn=6\nstart=0\nsteps=5\n",
        "circham v1\nn=6 c=8\nstart=0\nsteps=5\n",
        "circham v1\nn=6 c=2\nstart=0\nsteps=5\n",
        "circham v1\nn=6 c=5\nbegin=0\nsteps=5\n",
        "circham v1\nn=6 c=5\nstart=0\nstep=5\n",
    ],
)
def test_decode_malformed(text):
    with pytest.raises(CertParseError):
        decode_cert(text)


def test_round_trip_12():
    # all-5 cycle of Circ(12; 2, 3, 5)
    cert = CycleCert(Instance(12, 5), 3, (5,) * 12)
    assert decode_cert(encode_cert(cert)) == cert


@settings(max_examples=50)
@given(hamiltonian_certs())
def test_round_trip_property(cert):
    assert decode_cert(encode_cert(cert)) == cert


# -- DOT ------------------------------------------------------------------------------

def _arc_lines(text):
    return [line for line in text.splitlines() if "->" in line]


def test_dot_arc_count():
    assert len(_arc_lines(to_dot(Instance(6, 5)))) == 18


def test_dot_highlight():
    cert = CycleCert(Instance(6, 5), 0, (5,) * 6)
    lines = _arc_lines(to_dot(Instance(6, 5), cert))
    assert sum("color=red" in line for line in lines) == 6
    assert all("label=5" in line for line in lines if "color=red" in line)


def test_dot_deterministic():
    cert = CycleCert(Instance(9, 4), 0, (2,) * 9)
    assert to_dot(cert.instance, cert) == to_dot(cert.instance, cert)
    first = _arc_lines(to_dot(cert.instance))[:3]
    assert first == ["  0 -> 2 [label=2];", "  0 -> 3 [label=3];", "  0 -> 4 [label=4];"]
