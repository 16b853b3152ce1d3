"""
VSG_3 / <<sigma>> is not Z x S_3: an explicit homomorphism to S_3 in which the
image of tau_1 fails to commute with the image of v_1.
"""

from vsgroups.homs import GeneratorMap, verify_homomorphism
from vsgroups.perm import from_cycles, transposition
from vsgroups.presentations import add_generator_relators, build_presentation
from vsgroups.targets import SymmetricGroup
from vsgroups.words import Family

P = build_presentation("VSG", 3)
Q = add_generator_relators(P, [g for g in P.generators if g.family == Family.CLASSICAL], "VSG/<B>")
c = from_cycles([(1, 2, 3)], 3)
images = {}
for g in Q.generators:
    if g.family == Family.CLASSICAL:
        images[g] = from_cycles([], 3)
    elif g.family == Family.SINGULAR:
        images[g] = c
    else:
        images[g] = transposition(g.index, g.index + 1, 3)
m = GeneratorMap(Q, SymmetricGroup(3), images, "witness")
rep = verify_homomorphism(m)
v1 = transposition(1, 2, 3)
print("homomorphism:", rep.is_homomorphism)
print("tau_1 v_1 =", (c * v1).cycle_str(), " v_1 tau_1 =", (v1 * c).cycle_str())
