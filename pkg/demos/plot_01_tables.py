"""
Composition tables
==================

A finite semigroup is just a square table whose entries compose
associatively. Here we build the flip-flop and a cyclic group, then break
one entry and watch the checker point at the offending triple.
"""

import numpy as np

from semicomp import (AssocError, check_associativity, element_info, make_cyclic,
                      make_flip_flop, validate_table)

ff = make_flip_flop()
print(ff.pretty())

# r leaves everything alone; s0 and s1 overwrite whatever was stored
for info in element_info(ff):
    print(ff.labels[info.index], "idempotent" if info.is_idempotent else "")

z3 = make_cyclic(3)
print(z3.pretty())

# %%
# Changing one entry usually destroys associativity

rows = np.array(ff.rows)
rows[0, 1] = 0
try:
    validate_table(3, rows.ravel(), labels=ff.labels)
except AssocError as exc:
    print("rejected:", exc.triple)

# Light's test needs only the generators; it agrees with the full scan
print(check_associativity(z3.table, method="light"))
