"""Deterministic automata as generators of transformation semigroups.

Each input letter acts on the state set as a transformation; words act by
applying their letters left to right.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ArgError
from .transformations import ClosureResult, GenSet, Transformation, closure

__all__ = ["Automaton", "transition_semigroup", "run"]


@dataclass(frozen=True)
class Automaton:
    state_count: int
    delta: tuple
    letter_labels: Optional[tuple] = None

    def __post_init__(self):
        delta = tuple(t if isinstance(t, Transformation) else Transformation(t)
                      for t in self.delta)
        object.__setattr__(self, "delta", delta)
        if self.state_count < 1 or not delta:
            raise ArgError("an automaton needs at least one state and one letter")
        for k, t in enumerate(delta):
            if t.degree != self.state_count:
                raise ArgError(f"letter {k} acts on {t.degree} states, expected {self.state_count}")
        if self.letter_labels is not None:
            labels = tuple(str(s) for s in self.letter_labels)
            if len(labels) != len(delta) or len(set(labels)) != len(labels):
                raise ArgError("letter labels must be distinct, one per letter")
            object.__setattr__(self, "letter_labels", labels)

    @property
    def letter_count(self) -> int:
        return len(self.delta)

    def letter(self, name) -> int:
        """Index of a letter given by index or label."""
        if isinstance(name, int):
            return name
        if self.letter_labels is None or name not in self.letter_labels:
            raise IndexError(f"unknown letter {name!r}")
        return self.letter_labels.index(name)


def transition_semigroup(a: Automaton, max_size=None) -> tuple:
    """``(closure, letter_map)``; ``letter_map[k]`` is letter k's element index."""
    res: ClosureResult = closure(GenSet(a.state_count, a.delta), max_size=max_size)
    return res, res.gen_indices


def run(a: Automaton, start: int, word: Sequence) -> int:
    if not 0 <= start < a.state_count:
        raise IndexError(f"state {start} out of range")
    state = start
    for w in word:
        k = a.letter(w)
        if not 0 <= k < a.letter_count:
            raise IndexError(f"letter {k} out of range")
        state = a.delta[k].image[state]
    return state
