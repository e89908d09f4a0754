"""Commutators, Engel words, and the fifth-Engel target word."""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, conjugate, cyclic_reduce, free_reduce, invert

_A: Word = (1,)
_B: Word = (2,)


def commutator(x: Word, y: Word) -> Word:
    """Freely reduced [x, y] = x^-1 y^-1 x y."""
    return free_reduce(invert(x) + invert(y) + x + y)


def engel_word_expansion(n: int) -> Word:
    """The n-th Engel word on (a, b) as written, without free reduction.

    E_1 = [a, b] and E_n = [E_{n-1}, b]; the raw expansion has length
    2 * len(E_{n-1}) + 2.
    """
    if n < 1:
        raise ValueError(f"Engel words are defined for n >= 1, got {n}")
    e: Word = invert(_A) + invert(_B) + _A + _B
    for _ in range(n - 1):
        e = invert(e) + invert(_B) + e + _B
    return e


def engel_word(n: int) -> Word:
    """The freely reduced n-th Engel word on (a, b)."""
    return free_reduce(engel_word_expansion(n))


@dataclass(frozen=True)
class EngelTarget:
    """Cyclically reduced search target plus the conjugator that restores
    the full Engel word.  The conjugator is not treated as a relator."""

    core: Word
    outer_conjugator: Word

    def full_word(self) -> Word:
        return conjugate(self.core, self.outer_conjugator)


def engel_target(n: int = 5) -> EngelTarget:
    """Cyclic reduction of E_n packaged for the proof search.

    For n = 5 the core has length 64 and the conjugator is bbbb.
    """
    core, conj = cyclic_reduce(engel_word(n))
    return EngelTarget(core, conj)
