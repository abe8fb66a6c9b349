import pytest

from circham.core import Instance, verify_cycle, verify_disjoint_paths
from circham.gadgets import (
    IDENTITY,
    SIGMA,
    AssemblyError,
    Gadget,
    GadgetError,
    GadgetPlan,
    PlanError,
    assemble_gadget_cycle,
    build_gadget,
    compose,
    cycle_notation,
    is_4_cycle,
    perm_from_cycle,
    plan_c3mod6,
)


def runs(start, legs):
    out, v = [start], start
    for step, end in legs:
        assert (end - v) % step == 0 and (end - v) // step >= 0
        while v != end:
            v += step
            out.append(v)
    return out


def listed_paths(i, c, t=0):
    """The four paths of Q_i as written out run by run, independent of the travel tables."""
    if i == 1:
        return [runs(0, [(c, c)]), runs(1, [(2, 3), (3, c - 3)]), runs(2, [(2, 4), (3, c - 5)]), runs(5, [(3, c - 4)])]
    if i == 2:
        return [
            runs(0, [(3, 6 * t + 6), (2, c - 1), (3, c - 1 + 6 * t)]),
            runs(1, [(c, c + 1), (3, c + 1 + 6 * t)]),
            runs(2, [(2, 4), (3, 6 * t + 4), (c, c + 4 + 6 * t)]),
            runs(5, [(3, 6 * t + 5), (2, c), (3, c + 6 * t)]),
        ]
    if i == 3:
        return [runs(0, [(c, c)]), runs(1, [(2, 3), (c, c + 3)]), runs(2, [(2, c - 1)]), runs(5, [(2, c - 2)])]
    return [
        runs(0, [(3, 9), (2, c), (3, c + 3)]),
        runs(1, [(3, 10), (2, c + 1), (3, c + 4)]),
        runs(2, [(c, c + 2), (3, c + 5)]),
        runs(5, [(3, 8), (c, c + 8)]),
    ]


def all_gadgets(c):
    for i in (1, 3, 4):
        yield Gadget(i, c)
    for t in range(0, (c - 9) // 6 + 1):
        yield Gadget(2, c, t)


def test_q3_c9():
    assert build_gadget(3, 9) == [[0, 9], [1, 3, 12], [2, 4, 6, 8], [5, 7]]


def test_q1_c9():
    g = Gadget(1, 9)
    assert g.length == 4
    assert g.paths() == [[0, 9], [1, 3, 6], [2, 4], [5]]
    assert [end for _, end in g.expected_endpoints()] == [9, 6, 4, 5]


def test_q2_c9_t0():
    g = Gadget(2, 9, 0)
    assert g.vertex_set() == set(range(11)) | {13}
    assert verify_disjoint_paths(g.paths(), g.vertex_set(), g.expected_endpoints()) is None


@pytest.mark.parametrize("c", [9, 15, 21, 27, 33])
def test_travel_tables_match_listed_paths(c):
    for g in all_gadgets(c):
        assert g.paths() == listed_paths(g.id, c, g.t), g


@pytest.mark.parametrize("c", [9, 15, 21, 27])
def test_gadgets_are_four_disjoint_paths(c):
    for g in all_gadgets(c):
        v = verify_disjoint_paths(g.paths(), g.vertex_set(), g.expected_endpoints(), steps={2, 3, c})
        assert v is None, (g, v)


def test_gadget_parameter_checks():
    with pytest.raises(GadgetError):
        Gadget(1, 11)
    with pytest.raises(GadgetError):
        Gadget(1, 3)
    with pytest.raises(GadgetError):
        Gadget(2, 9, 1)
    with pytest.raises(GadgetError):
        Gadget(3, 15, 1)
    with pytest.raises(GadgetError):
        Gadget(5, 9)


def test_lengths():
    c = 21
    assert [Gadget(1, c).length, Gadget(2, c, 2).length, Gadget(3, c).length, Gadget(4, c).length] == [16, 32, 19, 24]


def test_compose_examples():
    assert compose([SIGMA[1], SIGMA[2]]) == perm_from_cycle(1, 2, 4, 3)
    assert cycle_notation(compose([SIGMA[1], SIGMA[2]])) == ((1, 2, 4, 3),)
    assert compose([SIGMA[1], SIGMA[3], SIGMA[3]]) == perm_from_cycle(1, 3, 2, 4)
    assert compose([SIGMA[4]]) == IDENTITY
    assert not is_4_cycle(IDENTITY)


def test_compose_applies_first_argument_first():
    # sigma_1 sends 1 to 4, then sigma_2 sends 4 to 2
    assert compose([SIGMA[1], SIGMA[2]])[0] == 2
    assert compose([SIGMA[2], SIGMA[1]])[0] == 4


def test_is_4_cycle():
    assert is_4_cycle(SIGMA[1]) and is_4_cycle(SIGMA[3])
    assert not is_4_cycle(SIGMA[2])
    assert not is_4_cycle(perm_from_cycle(1, 2))


@pytest.mark.parametrize(
    "n, c, ids, ts",
    [
        (12, 9, [1, 2], [0, 0]),
        (18, 9, [1, 3, 3], [0, 0, 0]),
        (36, 15, [1, 3, 3], [0, 0, 0]),
        (30, 9, [1, 3, 3, 4], [0, 0, 0, 0]),
        (60, 21, [1, 2, 4], [0, 0, 0]),
        (48, 21, [1, 2], [0, 2]),
    ],
)
def test_plan_examples(n, c, ids, ts):
    plan = plan_c3mod6(Instance(n, c))
    assert [g.id for g in plan.gadgets] == ids
    assert [g.t for g in plan.gadgets] == ts
    assert plan.total_length == n


def test_plan_rejects():
    with pytest.raises(PlanError):
        plan_c3mod6(Instance(24, 19))
    with pytest.raises(PlanError):
        plan_c3mod6(Instance(12, 11))
    with pytest.raises(PlanError):
        plan_c3mod6(Instance(18, 15))


def test_plans_and_assembly_over_range():
    for n in range(12, 601, 6):
        for c in range(9, n, 6):
            if n < 2 * c - 6:
                continue
            inst = Instance(n, c)
            plan = plan_c3mod6(inst)
            assert plan.total_length == n and is_4_cycle(plan.product)
            assert verify_cycle(assemble_gadget_cycle(plan, inst)) is None


@pytest.mark.parametrize("n, c", [(12, 9), (18, 9)])
def test_assembly_examples(n, c):
    inst = Instance(n, c)
    cert = assemble_gadget_cycle(plan_c3mod6(inst), inst)
    assert verify_cycle(cert) is None and cert.start == 0


def test_corrupted_plan_rejected():
    plan = GadgetPlan((Gadget(2, 9), Gadget(4, 9)))
    assert cycle_notation(plan.product) == ((2, 3, 4),)
    with pytest.raises(AssemblyError):
        assemble_gadget_cycle(plan, Instance(20, 9))


def test_wrong_total_length_rejected():
    with pytest.raises(AssemblyError):
        assemble_gadget_cycle(GadgetPlan((Gadget(1, 9),)), Instance(12, 9))


def test_q4_anywhere_keeps_product():
    base = [Gadget(1, 15), Gadget(2, 15, 1)]
    for pos in range(3):
        gadgets = base[:pos] + [Gadget(4, 15)] + base[pos:]
        assert GadgetPlan(tuple(gadgets)).product == GadgetPlan(tuple(base)).product
        n = sum(g.length for g in gadgets)
        assert verify_cycle(assemble_gadget_cycle(GadgetPlan(tuple(gadgets)), Instance(n, 15))) is None
