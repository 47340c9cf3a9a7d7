"""
Automata and their semigroups
=============================

Each input letter moves the states around. Closing the letters under
composition gives the semigroup that the automaton really computes with.
"""

from semicomp import Automaton, find_embeddings, make_flip_flop, run, transition_semigroup

memory = Automaton(2, [(0, 1), (0, 0), (1, 1)], ("read", "set0", "set1"))
sg, letters = transition_semigroup(memory)
print(sg.order, letters)
print(bool(find_embeddings(sg.table, make_flip_flop())))

print(run(memory, 0, ["set1", "read", "read"]))
print(run(memory, 1, ["set0"]))

# a counter with one tick letter
counter = Automaton(5, [(1, 2, 3, 4, 0)], ("tick",))
print(transition_semigroup(counter)[0].order, run(counter, 0, ["tick"] * 7))
