"""Diagram words, their measures, and link-class canonicalization.

A word ``(m_1, ..., m_k)`` stands for the trigonal diagram
``D(m_1, ..., m_k)``.  Two words are diagrams of the same two-bridge link
exactly when their Schubert fractions ``alpha/beta`` and ``alpha'/beta'``
satisfy ``alpha == alpha'`` and ``beta' = beta^(+-1) mod alpha``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from trigonal.contfrac import eval_word, mod_inverse, positive_expansion

Word = tuple[int, ...]


class ParseError(ValueError):
    pass


class TrivialClassError(ValueError):
    pass


@dataclass(frozen=True)
class LinkClass:
    """Isotopy class ``(alpha, {beta mod alpha, beta^-1 mod alpha})``.

    ``alpha`` in ``{0, 1}`` are the trivial classes and carry no residues.
    """

    alpha: int
    residues: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", frozenset(self.residues))
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")
        if self.alpha <= 1 and self.residues:
            raise ValueError("trivial classes carry no residues")

    @classmethod
    def from_fraction(cls, alpha: int, beta: int) -> LinkClass:
        if alpha <= 1:
            return cls(alpha, frozenset())
        if gcd(alpha, beta) != 1:
            raise ValueError(f"{alpha}/{beta} is not reduced")
        r = beta % alpha
        return cls(alpha, frozenset({r, mod_inverse(r, alpha)}))

    @classmethod
    def parse(cls, text: str) -> LinkClass:
        """Parse ``"A/B"`` into the class of the fraction ``A/B``."""
        m = re.fullmatch(r"\s*(\d+)\s*/\s*(-?\d+)\s*", text)
        if not m:
            raise ParseError(f"expected A/B, got {text!r}")
        try:
            return cls.from_fraction(int(m.group(1)), int(m.group(2)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "residues": sorted(self.residues)}

    def __str__(self) -> str:
        return f"({self.alpha}, {{{', '.join(map(str, sorted(self.residues)))}}})"


def complexity(word: Sequence[int]) -> int:
    return len(word) + sum(abs(m) for m in word)


def crossing_count(word: Sequence[int]) -> int:
    return sum(abs(m) for m in word)


def is_alternating(word: Sequence[int]) -> bool:
    """All entries nonzero and of one sign; the empty word counts as alternating."""
    return all(m > 0 for m in word) or all(m < 0 for m in word)


def link_class(word: Sequence[int]) -> LinkClass:
    pair = eval_word(word)
    return LinkClass.from_fraction(pair.alpha, pair.beta)


def same_link(w1: Sequence[int], w2: Sequence[int]) -> bool:
    return link_class(w1) == link_class(w2)


def mirror_class(c: LinkClass) -> LinkClass:
    if c.alpha <= 1:
        return c
    return LinkClass(c.alpha, frozenset((c.alpha - r) % c.alpha for r in c.residues))


def normal_form(c: LinkClass) -> Word:
    """Conway normal form of ``c``, built from its smallest residue."""
    if c.alpha == 0:
        raise TrivialClassError("the class alpha = 0 has no normal form here")
    if c.alpha == 1:
        return ()
    return positive_expansion(c.alpha, min(c.residues))


def is_hard(word: Sequence[int]) -> bool:
    """Mixed signs, every ``|m_i| >= 2``, and both end conditions."""
    k = len(word)
    if k < 2 or is_alternating(word):
        return False
    if any(abs(m) < 2 for m in word):
        return False
    left = abs(word[0]) >= 3 or word[0] * word[1] > 0
    right = abs(word[-1]) >= 3 or word[-2] * word[-1] > 0
    return left and right


def theorem1_applicable(c: LinkClass) -> bool:
    """Whether ``c`` or its mirror has normal form ``C(m)`` or ``C(m, n)``."""
    if c.alpha <= 1:
        return True
    return any(len(normal_form(x)) <= 2 for x in (c, mirror_class(c)))


_WORD_RE = re.compile(r"\s*(?:([DC])\s*\(([^()]*)\)|([^()]*))\s*")


def parse_word(text: str) -> Word:
    """Parse ``D(...)``, ``C(...)`` or a bare comma list into a word.

    ``C(...)`` is only accepted when all entries share a sign.
    """
    m = _WORD_RE.fullmatch(text)
    if not m:
        raise ParseError(f"cannot parse word {text!r}")
    style, body = m.group(1), m.group(2) if m.group(1) else m.group(3)
    body = body.strip()
    if not body:
        word: Word = ()
    else:
        try:
            word = tuple(int(part) for part in body.split(","))
        except ValueError:
            raise ParseError(f"cannot parse word {text!r}") from None
    if style == "C" and not (all(x > 0 for x in word) or all(x < 0 for x in word)):
        raise ParseError(f"C-notation needs same-sign entries: {text!r}")
    return word


def format_word(word: Sequence[int], style: str = "D") -> str:
    if style not in ("D", "C", "bare"):
        raise ValueError(f"unknown style {style!r}")
    if style == "C" and not (all(x > 0 for x in word) or all(x < 0 for x in word)):
        raise ValueError("C-notation needs same-sign entries")
    body = ",".join(str(m) for m in word)
    return body if style == "bare" else f"{style}({body})"
