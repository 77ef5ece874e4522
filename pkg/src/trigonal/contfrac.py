"""Exact continued-fraction arithmetic on integer words.

A word ``[m_1, ..., m_k]`` is evaluated through the continuant product
``M(m_1) ... M(m_k)`` with ``M(m) = [[m, 1], [1, 0]]``; the first column of
the product is the pair ``(alpha, beta)``.  Unlike nested division this is
total, so words with transient zeros still have a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class InvalidFraction(ValueError):
    """Raised when a fraction violates the preconditions of an expansion."""


@dataclass(frozen=True, order=True)
class SchubertPair:
    """A reduced fraction ``alpha / beta`` with ``alpha >= 0``.

    ``alpha == 0`` is stored as ``(0, 1)``.  ``beta`` is kept exactly as
    computed, i.e. it is not reduced modulo ``alpha``.
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0:
            raise InvalidFraction(f"alpha must be non-negative, got {self.alpha}")
        if self.alpha == 0 and self.beta != 1:
            raise InvalidFraction("alpha == 0 must be stored as (0, 1)")
        if self.alpha > 0 and gcd(self.alpha, self.beta) != 1:
            raise InvalidFraction(f"({self.alpha}, {self.beta}) is not reduced")


def continuant(word: Iterable[int]) -> tuple[int, int, int, int]:
    """Return the entries ``(a, b, c, d)`` of ``M(m_1) ... M(m_k)``."""
    a, b, c, d = 1, 0, 0, 1
    for m in word:
        # right-multiply by [[m, 1], [1, 0]]
        a, b = a * m + b, a
        c, d = c * m + d, c
    return a, b, c, d


def eval_word(word: Iterable[int]) -> SchubertPair:
    """Evaluate ``[m_1, ..., m_k]`` to a sign-normalized Schubert pair.

    >>> eval_word([3, 1, 2])
    SchubertPair(alpha=11, beta=3)
    >>> eval_word([2, 0, 3])
    SchubertPair(alpha=5, beta=1)
    """
    alpha, _, beta, _ = continuant(word)
    if alpha < 0:
        alpha, beta = -alpha, -beta
    if alpha == 0:
        return SchubertPair(0, 1)
    return SchubertPair(alpha, beta)


def positive_expansion(alpha: int, beta: int) -> tuple[int, ...]:
    """Euclidean expansion of ``alpha / beta`` with every entry positive.

    The last entry is at least 2 whenever ``alpha >= 2``; ``alpha == 1``
    gives the empty word.
    """
    if alpha < 1 or not 1 <= beta <= alpha or gcd(alpha, beta) != 1:
        raise InvalidFraction(f"no positive expansion for {alpha}/{beta}")
    if alpha == 1:
        return ()
    out = []
    p, q = alpha, beta
    while q:
        out.append(p // q)
        p, q = q, p % q
    return tuple(out)


def mod_inverse(b: int, a: int) -> int:
    """The inverse of ``b`` modulo ``a`` as a representative in ``[1, a - 1]``."""
    if a < 2:
        raise ArithmeticError(f"modulus must be at least 2, got {a}")
    try:
        return pow(b % a, -1, a)
    except ValueError:
        raise ArithmeticError(f"{b} is not invertible modulo {a}") from None


def staircase(a: int, z: int) -> tuple[int, ...]:
    """Word ``[2, -2, 2, ..., (-1)^(a-1) (z+1)]`` of value ``(az+1)/((a-1)z+1)``."""
    if a < 1 or z < 1:
        raise ValueError(f"staircase needs a >= 1 and z >= 1, got a={a}, z={z}")
    steps = tuple(2 if i % 2 == 0 else -2 for i in range(a - 1))
    last = z + 1 if (a - 1) % 2 == 0 else -(z + 1)
    return steps + (last,)

