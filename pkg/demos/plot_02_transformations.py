"""
Generating all self-maps
========================

Three maps are enough to produce every transformation of n points: a swap,
a full rotation and one map that merges two points.
"""

from semicomp import GenSet, closure, make_Tn_generators
from semicomp.transformations import compose, constant, cycle

for n in range(1, 5):
    c = closure(make_Tn_generators(n))
    print(n, c.order, n ** n)

# composition reads left to right, so the later write wins
print(compose(constant(2, 0), constant(2, 1)))

# %%
# A rotation alone only gives a cyclic group

rot = closure(GenSet(5, [cycle(5)]))
print(rot.order, [str(e) for e in rot.elements])
