"""Slide-isotopy rewrite rules on diagram words, plus the Lagrange transform.

Every slide rule is written once, in its right-end/interior orientation with
the pattern signs as drawn.  Two variant flags derive the rest:

``negated``
    conjugate by negating every entry (the mirror picture);
``reversed``
    conjugate by turning the word end-for-end, which moves right-end rules
    to the left end.  Reading ``D(m_1, ..., m_k)`` backwards swaps the
    parity of every position when ``k`` is even, so the reversal of an
    even-length word is also negated; with that convention
    ``[m_1, ..., m_k]`` and its reversal always have the same link class.

An instance is emitted only if the pattern matches, the rule's own sign
guard holds, the crossing count does not increase, and the link class of
the result equals that of the input.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from trigonal.diagram import Word, complexity, crossing_count, format_word, link_class


class InvalidMove(ValueError):
    pass


class Rule(enum.IntEnum):
    Z_DROP = 0
    Z_MERGE = 1
    ONE_ABSORB = 2
    TWO_FLIP = 3
    TRIPLE_END = 4
    FIVE_SLIDE = 5
    PLATEAU = 6
    LAGRANGE = 7

    @property
    def is_slide(self) -> bool:
        return self is not Rule.LAGRANGE


SLIDE_RULES = tuple(r for r in Rule if r.is_slide)
# Rules whose pattern is anchored at the right end of the word.
END_RULES = frozenset({Rule.Z_DROP, Rule.ONE_ABSORB, Rule.TWO_FLIP, Rule.TRIPLE_END, Rule.FIVE_SLIDE})
# Rules closed under negation (ONE_ABSORB through the sign of eps); their
# negated variants would only duplicate instances.
SIGN_SYMMETRIC = frozenset({Rule.Z_DROP, Rule.Z_MERGE, Rule.ONE_ABSORB})


@dataclass(frozen=True, order=True)
class MoveInstance:
    """One rule applied at one site.

    ``start`` indexes the original word at the entry that plays the role of
    the rule's first pattern variable ``m``; for reversed instances the
    pattern is read leftwards from there.  ``param`` is the sign ``eps`` of
    ONE_ABSORB and LAGRANGE, and 0 otherwise.
    """

    start: int
    rule: Rule
    negated: bool = False
    reversed: bool = False
    param: int = 0

    @property
    def label(self) -> str:
        flags = ("~neg" if self.negated else "") + ("~rev" if self.reversed else "")
        return f"{self.rule.name}{flags}@{self.start}"

    def to_json(self) -> dict:
        return {
            "rule": self.rule.name,
            "at": self.start,
            "neg": self.negated,
            "rev": self.reversed,
        }


def trace_line(before: Sequence[int], inst: MoveInstance, after: Sequence[int]) -> str:
    """``D(2,1,-1,-2) --TRIPLE_END@1--> D(2,0,3)``"""
    return f"{format_word(before)} --{inst.label}--> {format_word(after)}"


# Each rewriter sees the word in the rule's canonical orientation and the
# index ``s`` of ``m``.  It returns the rewritten word, or None when the
# pattern or its sign guard does not hold.  Crossing and class checks are
# applied uniformly afterwards.

def _z_drop(w: Word, s: int) -> Optional[Word]:
    if s == len(w) - 2 and w[s + 1] == 0:
        return w[:s]
    return None


def _z_merge(w: Word, s: int) -> Optional[Word]:
    if s + 2 < len(w) and w[s + 1] == 0:
        return w[:s] + (w[s] + w[s + 2],) + w[s + 3:]
    return None


def _one_absorb(w: Word, s: int) -> Optional[Word]:
    if s == len(w) - 2 and abs(w[s + 1]) == 1:
        return w[:s] + (w[s] + w[s + 1],)
    return None


def _two_flip(w: Word, s: int) -> Optional[Word]:
    m = w[s]
    if s == len(w) - 2 and w[s + 1] == -2 and m > 0:
        return w[:s] + (m - 1, 2)
    return None


def _triple_end(w: Word, s: int) -> Optional[Word]:
    m = w[s]
    if s == len(w) - 3 and w[s + 1] == -1 and m > 0:
        n = w[s + 2]
        return w[:s] + (m - 1, 1 - n)
    return None


def _five_slide(w: Word, s: int) -> Optional[Word]:
    k = len(w)
    if s + 3 >= k or w[s + 1] != -1 or w[s + 2] != 1:
        return None
    m, n = w[s], w[s + 3]
    if s + 3 == k - 1:
        return w[:s] + (m - n - 1,)
    p = w[s + 4]
    return w[:s] + (m - n, -1, 1 + p) + w[s + 5:]


def _plateau(w: Word, s: int) -> Optional[Word]:
    if s + 3 >= len(w) or w[s + 1] != -1:
        return None
    m, n, p = w[s], w[s + 2], w[s + 3]
    if m <= 0:
        return None
    return w[:s] + (m - 1, -n, 1, p - 1) + w[s + 4:]


_REWRITERS: dict[Rule, Callable[[Word, int], Optional[Word]]] = {
    Rule.Z_DROP: _z_drop,
    Rule.Z_MERGE: _z_merge,
    Rule.ONE_ABSORB: _one_absorb,
    Rule.TWO_FLIP: _two_flip,
    Rule.TRIPLE_END: _triple_end,
    Rule.FIVE_SLIDE: _five_slide,
    Rule.PLATEAU: _plateau,
}


def _neg(w: Sequence[int]) -> Word:
    return tuple(-m for m in w)


def flip(word: Sequence[int]) -> Word:
    """End-for-end reversal, negated for even length; class-preserving."""
    w = tuple(word)[::-1]
    return _neg(w) if len(w) % 2 == 0 else w


def _orient(word: Word, inst: MoveInstance) -> tuple[Word, int]:
    w, s = word, inst.start
    if inst.reversed:
        w, s = flip(w), len(w) - 1 - s
    if inst.negated:
        w = _neg(w)
    return w, s


def _rewrite(word: Word, inst: MoveInstance) -> Optional[Word]:
    """Apply ``inst`` structurally, ignoring crossing and class checks."""
    if not inst.rule.is_slide or not 0 <= inst.start < len(word):
        return None
    w, s = _orient(word, inst)
    out = _REWRITERS[inst.rule](w, s)
    if out is None:
        return None
    expected_param = w[s + 1] if inst.rule is Rule.ONE_ABSORB else 0
    if inst.param != expected_param:
        return None
    if inst.negated:
        out = _neg(out)
    if inst.reversed:
        out = flip(out)
    return out


def _candidates(word: Word):
    for s in range(len(word)):
        for rule in SLIDE_RULES:
            for negated in (False, True):
                for rev in (False, True):
                    if rev and rule not in END_RULES:
                        continue
                    if negated and rule in SIGN_SYMMETRIC:
                        continue
                    inst = MoveInstance(s, rule, negated, rev)
                    if rule is Rule.ONE_ABSORB:
                        # eps is read off the word; recorded in the instance
                        w, t = _orient(word, inst)
                        if t + 1 >= len(w) or abs(w[t + 1]) != 1:
                            continue
                        inst = MoveInstance(s, rule, negated, rev, w[t + 1])
                    yield inst


def _checked(word: Word, inst: MoveInstance) -> Optional[Word]:
    out = _rewrite(word, inst)
    if out is None:
        return None
    if crossing_count(out) > crossing_count(word) or len(out) > len(word):
        return None
    if link_class(out) != link_class(word):
        return None
    return out


def enumerate_moves(word: Sequence[int]) -> list[MoveInstance]:
    """All applicable slide-rule instances, ordered by (start, rule, flags)."""
    w = tuple(word)
    return [inst for inst in _candidates(w) if _checked(w, inst) is not None]


def successors(word: Sequence[int]) -> list[tuple[MoveInstance, Word]]:
    """Pairs ``(instance, result)`` in :func:`enumerate_moves` order."""
    w = tuple(word)
    out = []
    for inst in _candidates(w):
        res = _checked(w, inst)
        if res is not None:
            out.append((inst, res))
    return out


def apply_move(word: Sequence[int], inst: MoveInstance) -> Word:
    w = tuple(word)
    out = _checked(w, inst)
    if out is None:
        raise InvalidMove(f"{inst.label} does not apply to {format_word(w)}")
    return out


def move_deltas(word: Sequence[int], inst: MoveInstance) -> tuple[int, int]:
    """``(crossing delta, complexity delta)`` of applying ``inst``."""
    out = apply_move(word, inst)
    return crossing_count(out) - crossing_count(word), complexity(out) - complexity(word)


def lagrange_apply(word: Sequence[int], position: int, epsilon: int) -> Word:
    """``D(x, m, -n, -y) -> D(x, m - eps, eps, n - eps, y)`` with ``m`` at ``position``.

    Class-preserving but not a slide move: crossings may go up.
    """
    w = tuple(word)
    if epsilon not in (-1, 1):
        raise InvalidMove(f"epsilon must be +-1, got {epsilon}")
    if not 0 <= position <= len(w) - 2:
        raise InvalidMove(f"no Lagrange pattern at {position} in {format_word(w)}")
    m, n = w[position], -w[position + 1]
    y = _neg(w[position + 2:])
    return w[:position] + (m - epsilon, epsilon, n - epsilon) + y

