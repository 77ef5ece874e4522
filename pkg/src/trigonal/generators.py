"""Awkward and hard diagrams for two-bridge links outside the twist family.

Both constructions rewrite the last three entries ``[m, a, n]`` of a positive
normal form ``C(x, m, a, n)``:

* awkward: ``[m, a, n] = [m+1, -1, 1-a, -n]`` (and ``[m+1, -n-1]`` when
  ``a == 1``);
* hard: ``[m, a, n] = [m+1, -2, 2, ..., (-1)^(a-1) 2, (-1)^a (n+1)]``, the
  staircase expansion of ``(an+1)/((a-1)n+1)`` negated.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from trigonal.contfrac import staircase
from trigonal.diagram import Word, format_word, link_class
from trigonal.moves import InvalidMove, MoveInstance, Rule, apply_move, lagrange_apply


class NotApplicable(ValueError):
    pass


def _check_normal(normal: Sequence[int]) -> Word:
    w = tuple(normal)
    if len(w) < 3 or any(m < 1 for m in w) or w[0] < 2 or w[-1] < 2:
        raise NotApplicable(
            f"need a positive normal form with k >= 3 and both ends >= 2, got {format_word(w)}"
        )
    return w


def _verified(normal: Word, out: Word) -> Word:
    if link_class(out) != link_class(normal):
        raise AssertionError(f"construction left the class of {format_word(normal)}")
    return out


def awkward_diagram(normal: Sequence[int]) -> Word:
    w = _check_normal(normal)
    x, (m, a, n) = w[:-3], w[-3:]
    if a > 1:
        tail = (m + 1, -1, 1 - a, -n)
    else:
        tail = (m + 1, -n - 1)
    return _verified(w, x + tail)


def _stairs(word: Word, i: int) -> Word:
    """Rewrite the positive run ``[m, a, n, y]`` centred at ``i`` (``a = word[i]``).

    ``[m, a, z] = [m+1, -(staircase(a, z))]`` holds for any tail value ``z``,
    so the tail ``y`` after ``n`` is carried along with the sign of the last
    staircase entry.
    """
    m, a, n, y = word[i - 1], word[i], word[i + 1], word[i + 2:]
    stairs = staircase(a, n)
    sign = -1 if (a - 1) % 2 == 0 else 1  # sign of the negated last entry
    return word[: i - 1] + (m + 1,) + tuple(-e for e in stairs) + tuple(sign * e for e in y)


def hard_diagram(normal: Sequence[int]) -> Word:
    """A diagram of the same link satisfying :func:`trigonal.diagram.is_hard`.

    For ``C(x, m, a, n)`` this is ``D(x, m+1, -2, 2, ..., (-1)^a (n+1))``.
    Entries equal to 1 inside ``x`` would break hardness, so each of them,
    right to left, is removed with the same identity (``a = 1`` case).
    """
    w = _check_normal(normal)
    k = len(w)
    out = _stairs(w, k - 2)
    for i in range(k - 4, 0, -1):
        if out[i] == 1:
            out = _stairs(out, i)
    return _verified(w, out)


# -- scrambling ---------------------------------------------------------------

def _neg(w: Sequence[int]) -> Word:
    return tuple(-m for m in w)


def _unapply(w: Word, rule: Rule, s: int, r: int) -> Optional[Word]:
    """A word ``u`` that ``rule`` rewrites to ``w`` with ``m`` at index ``s``.

    ``r`` is a free small nonzero integer used where the preimage is not
    unique.  Returns None if ``w`` has no preimage of this shape at ``s``.
    """
    k = len(w)
    if not 0 <= s < k:
        return None
    if rule is Rule.Z_DROP and s == k - 1:
        return w + (r, 0)
    if rule is Rule.Z_MERGE:
        return w[:s] + (r, 0, w[s] - r) + w[s + 1:]
    if rule is Rule.ONE_ABSORB and s == k - 1:
        eps = 1 if r > 0 else -1
        return w[:s] + (w[s] - eps, eps)
    if rule is Rule.TWO_FLIP and s == k - 2 and w[s + 1] == 2:
        return w[:s] + (w[s] + 1, -2)
    if rule is Rule.TRIPLE_END and s == k - 2:
        return w[:s] + (w[s] + 1, -1, 1 - w[s + 1])
    if rule is Rule.FIVE_SLIDE:
        if s == k - 1:
            return w[:s] + (w[s] + r + 1, -1, 1, r)
        if s + 2 < k and w[s + 1] == -1:
            return w[:s] + (w[s] + r, -1, 1, r, w[s + 2] - 1) + w[s + 3:]
    if rule is Rule.PLATEAU and s + 3 < k and w[s + 2] == 1:
        return w[:s] + (w[s] + 1, -1, -w[s + 1], w[s + 3] + 1) + w[s + 4:]
    return None


def _inverse_moves(w: Word, rng: random.Random) -> list[Word]:
    out = []
    for s in range(len(w)):
        for rule in Rule:
            if not rule.is_slide:
                continue
            for negated in (False, True):
                r = rng.choice((-2, -1, 1, 2))
                base = _neg(w) if negated else w
                u = _unapply(base, rule, s, r)
                if u is None:
                    continue
                if negated:
                    u = _neg(u)
                inst = MoveInstance(s, rule, negated, False, 0)
                if rule is Rule.ONE_ABSORB:
                    eps = -u[s + 1] if negated else u[s + 1]
                    inst = MoveInstance(s, rule, negated, False, eps)
                try:
                    if apply_move(u, inst) == w:
                        out.append(u)
                except InvalidMove:
                    pass
    return out


def scramble(word: Sequence[int], steps: int, seed: int) -> Word:
    """Apply ``steps`` random class-preserving transforms, reproducibly.

    Each step picks uniformly among Lagrange rewrites and inverse slide moves
    (a left-hand side whose forward move yields the current word).  Every
    transform needs an existing entry at its site, so the empty word is fixed.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    w = tuple(word)
    for _ in range(steps):
        options = _inverse_moves(w, rng)
        options += [lagrange_apply(w, pos, eps) for pos in range(len(w) - 1) for eps in (-1, 1)]
        if not options:
            break
        w = rng.choice(options)
    return w
