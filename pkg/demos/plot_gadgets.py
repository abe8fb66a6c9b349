"""
Gluing gadgets when c ≡ 3 (mod 6)
=================================

For these c the interval method has no block sizes to work with, so the
cycle is stitched together from four kinds of small pieces. Each piece is
four disjoint paths, and the order in which the paths come out is a
permutation of four labels. A chain of pieces closes into one cycle exactly
when the product of those permutations is a 4-cycle.
"""
from circham import Instance, verify_cycle, verify_disjoint_paths
from circham.gadgets import SIGMA, Gadget, assemble_gadget_cycle, compose, cycle_notation, plan_c3mod6

###############################################################################
# The four pieces at c = 9

c = 9
for g in [Gadget(1, c), Gadget(2, c, 0), Gadget(3, c), Gadget(4, c)]:
    print(f"Q{g.id} length {g.length:2}  sigma={cycle_notation(g.sigma) or '()'}")
    for path in g.paths():
        print("   ", path)
    assert verify_disjoint_paths(g.paths(), g.vertex_set(), g.expected_endpoints(), steps={2, 3, c}) is None

###############################################################################
# Permutation products
# --------------------
# Q4 contributes the identity, so copies of it can pad a chain to any length
# that is a multiple of c + 3 without changing whether it closes.

print(cycle_notation(compose([SIGMA[1], SIGMA[2]])))
print(cycle_notation(compose([SIGMA[1], SIGMA[3], SIGMA[3]])))
print(cycle_notation(compose([SIGMA[2], SIGMA[4]])), "(not a 4-cycle)")

###############################################################################
# Plans for a few instances

for n, c in [(12, 9), (30, 9), (48, 21), (60, 21), (96, 27)]:
    inst = Instance(n, c)
    plan = plan_c3mod6(inst)
    names = " ".join(f"Q{g.id}" + (f"(t={g.t})" if g.id == 2 else "") for g in plan.gadgets)
    cert = assemble_gadget_cycle(plan, inst)
    print(f"{str(inst):16} {names:32} verified={verify_cycle(cert) is None}")
