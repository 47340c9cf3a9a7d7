"""Does a model semigroup contain the full transformation monoid T_n?

Two readings of "contains" are offered: ``"embed"`` asks for an injective
morphism ``T_n -> model``; ``"divide"`` asks for ``T_n`` to be a
homomorphic image of a subsemigroup of the model.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import ArgError
from .morphisms import (UNKNOWN, DivisionResult, Morphism, Verdict, _budget, divides,
                        find_embeddings)
from .table import CayleyTable
from .transformations import full_transformation_monoid

__all__ = ["UniversalityVerdict", "is_universal", "is_computer", "MAX_DEFAULT_N", "MODES"]

MAX_DEFAULT_N = 4
MODES = ("embed", "divide")


@dataclass(frozen=True)
class UniversalityVerdict:
    n: int
    mode: str
    verdict: Verdict
    witness: Optional[Union[Morphism, DivisionResult]] = None

    def __bool__(self):
        return self.verdict is Verdict.YES


def is_universal(model: CayleyTable, n: int, mode: str = "embed", budget=None,
                 allow_large: bool = False, workers: int = 1) -> UniversalityVerdict:
    """Test whether ``model`` implements ``T_n`` (``n**n`` self-maps of ``n`` points).

    ``n`` above 4 needs ``allow_large``. A model with fewer than ``n**n``
    elements is rejected without search in either mode.
    """
    if n < 1:
        raise ArgError("n must be positive")
    if n > MAX_DEFAULT_N and not allow_large:
        raise ArgError(f"n > {MAX_DEFAULT_N} needs allow_large=True")
    if mode not in MODES:
        raise ArgError(f"mode must be one of {MODES}")
    budget = _budget(budget)
    if model.order < n ** n:
        return UniversalityVerdict(n, mode, Verdict.NO)

    tn = full_transformation_monoid(n, allow_large=allow_large)
    if mode == "embed":
        found = find_embeddings(tn.table, model, limit=1, budget=budget, workers=workers,
                                generators=sorted(set(tn.gen_indices)))
        if found is UNKNOWN:
            return UniversalityVerdict(n, mode, UNKNOWN)
        if not found:
            return UniversalityVerdict(n, mode, Verdict.NO)
        return UniversalityVerdict(n, mode, Verdict.YES, found[0])
    res = divides(tn.table, model, budget=budget)
    return UniversalityVerdict(n, mode, res.verdict, res if res.verdict is Verdict.YES else None)


def is_computer(model: CayleyTable, n: int, budget=None, allow_large: bool = False):
    """:func:`is_universal` in ``"divide"`` mode."""
    return is_universal(model, n, mode="divide", budget=budget, allow_large=allow_large)
