"""
Searching for embeddings
========================

An embedding is an injective map that respects the tables. The search
assigns images to generators and propagates products, so most of the
candidate maps are never looked at.
"""

from semicomp import (SearchBudget, divides, find_embeddings, full_transformation_monoid,
                      make_cyclic, make_flip_flop)

t2 = full_transformation_monoid(2)
z2 = make_cyclic(2)

for m in find_embeddings(z2, t2.table):
    print(m.describe())

print(len(find_embeddings(make_flip_flop(), t2.table)), "copies of the flip-flop in T_2")
print(find_embeddings(make_cyclic(3), t2.table))

# %%
# Budgets turn a long search into an honest "unknown"

t3 = full_transformation_monoid(3)
budget = SearchBudget(50)
print(find_embeddings(t2.table, t3.table, budget=budget))
budget = SearchBudget()
print(len(find_embeddings(t2.table, t3.table, budget=budget)), "embeddings,", budget.used, "nodes")

# %%
# Division accepts a quotient of a subsemigroup. Here the copy {+0, +2} is enough

res = divides(z2, make_cyclic(4))
print(res.verdict, res.subsemigroup, res.morphism.describe() if res.morphism else None)
