"""
Does a model contain T_n?
=========================

A model is universal at degree n when the full transformation monoid on n
points sits inside it, either as a copy or as a divisor.
"""

from semicomp import (find_interpretation, full_transformation_monoid, is_computer,
                      is_universal, make_cyclic, make_flip_flop)
from semicomp.hierarchy import direct_product

t3 = full_transformation_monoid(3).table
v = is_universal(t3, 2)
print(v.verdict, v.witness.describe())
print(is_universal(make_flip_flop(), 2).verdict)
print(is_computer(direct_product(make_flip_flop(), make_cyclic(2)), 2).verdict)

# %%
# A group can still compute AND once the outputs are decoded

AND = [[0, 0], [0, 1]]
res = find_interpretation(AND, make_cyclic(3))
print(res.verdict, "encode", res.encode, "decode", res.decode)
print(find_interpretation(AND, make_cyclic(2)).verdict)
