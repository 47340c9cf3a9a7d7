"""
Hierarchies of simple parts
===========================

In a wreath product the top part runs on its own while the bottom part
reacts to it. Two coin flips arranged this way can count to four.
"""

from semicomp import Verdict, full_transformation_monoid, make_cyclic, make_flip_flop
from semicomp.hierarchy import cascade_emulates, influence_relation, wreath_product
from semicomp.table import right_regular_representation
from semicomp.transformations import closure


def rep(table):
    return closure(right_regular_representation(table)[0])


z2 = make_cyclic(2)
w = wreath_product(rep(z2), rep(z2))
print(w.order)
print(cascade_emulates(make_cyclic(4), w).verdict)

# a group cascade cannot forget, so it never yields T_2
print(cascade_emulates(full_transformation_monoid(2).table, w).verdict is Verdict.NO)

print(wreath_product(rep(make_flip_flop()), rep(z2)).order)

# %%
# Who changes whom: the reset letters move r, but r moves nothing

rel = influence_relation(make_flip_flop())
print(rel.influences.astype(int))
print(rel.one_way)
