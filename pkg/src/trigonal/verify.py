"""Exhaustive desk-scale harnesses over enumerated diagram words.

Every harness returns a :class:`VerifyReport`; an empty ``failures`` list
means the checked statement held on every tested instance.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator, Optional

from trigonal.diagram import (
    LinkClass,
    Word,
    complexity,
    crossing_count,
    format_word,
    is_alternating,
    is_hard,
    link_class,
    normal_form,
    theorem1_applicable,
)
from trigonal.contfrac import eval_word
from trigonal.generators import NotApplicable, awkward_diagram, hard_diagram
from trigonal.moves import apply_move, enumerate_moves
from trigonal.search import (
    DEFAULT_LIMITS,
    NotReached,
    SearchBudgetExceeded,
    SearchLimits,
    check_path,
    closure,
    simplify_to_alternating,
)


@dataclass(frozen=True)
class EnumBounds:
    max_crossings: int
    max_length: int
    entry_bound: int

    def __post_init__(self) -> None:
        if min(self.max_crossings, self.max_length, self.entry_bound) < 1:
            raise ValueError(f"bounds must be positive: {self}")

    def to_json(self) -> dict:
        return {
            "max_crossings": self.max_crossings,
            "max_length": self.max_length,
            "entry_bound": self.entry_bound,
        }


@dataclass
class VerifyReport:
    harness: str
    bounds: dict
    seed: Optional[int] = None
    tested: int = 0
    failures: list[tuple[Word, str]] = field(default_factory=list)
    diagnostics: list[tuple[Word, str]] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def budget_only(self) -> bool:
        return bool(self.failures) and all(d.startswith("budget") for _, d in self.failures)

    def fail(self, word: Word, detail: str) -> None:
        self.failures.append((tuple(word), detail))

    def to_json(self, timing: bool = True) -> dict:
        def rows(items):
            return [{"word": format_word(w), "detail": d} for w, d in sorted(items)]

        out = {
            "harness": self.harness,
            "bounds": self.bounds,
            "seed": self.seed,
            "tested": self.tested,
            "failures": rows(self.failures),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
        }
        if self.diagnostics:
            out["diagnostics"] = rows(self.diagnostics)
        if self.stats:
            out["stats"] = dict(sorted(self.stats.items()))
        return out


class _timed:
    def __init__(self, report: VerifyReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter() - self.t0) * 1000.0
        return False


# -- enumeration ----------------------------------------------------------------

def enumerate_words(bounds: EnumBounds) -> Iterator[Word]:
    """Zero-free words within ``bounds``: by length, then lexicographically.

    Entries are ordered ``-b < ... < -1 < 1 < ... < b``.
    """
    b = bounds.entry_bound
    for k in range(1, bounds.max_length + 1):
        yield from _words_of_length(k, bounds.max_crossings, b)


def _words_of_length(k: int, budget: int, b: int, prefix: Word = ()) -> Iterator[Word]:
    if k == 0:
        yield prefix
        return
    # each remaining entry needs at least one crossing
    top = min(b, budget - (k - 1))
    values = [-v for v in range(top, 0, -1)] + list(range(1, top + 1))
    for v in values:
        yield from _words_of_length(k - 1, budget - abs(v), b, prefix + (v,))


def word_count(bounds: EnumBounds) -> int:
    """Closed-form count of :func:`enumerate_words` (signed bounded compositions)."""
    b = bounds.entry_bound
    total = 0
    for k in range(1, bounds.max_length + 1):
        for s in range(k, bounds.max_crossings + 1):
            parts = sum(
                (-1) ** j * comb(k, j) * comb(s - j * b - 1, k - 1)
                for j in range(k + 1)
                if s - j * b - 1 >= k - 1
            )
            total += 2**k * parts
    return total


def words_in_class(c: LinkClass, bounds: EnumBounds) -> list[Word]:
    return [w for w in enumerate_words(bounds) if link_class(w) == c]


def positive_normals(min_length: int, max_length: int, entry_bound: int) -> Iterator[Word]:
    """All-positive words with both ends at least 2, by length then lexicographically."""
    for k in range(min_length, max_length + 1):
        for w in itertools.product(range(1, entry_bound + 1), repeat=k):
            if w[0] >= 2 and w[-1] >= 2:
                yield w


# -- harnesses --------------------------------------------------------------------

def theorem1_bounds(c: LinkClass, max_length: int = 7, slack: int = 2) -> EnumBounds:
    nf = normal_form(c) if c.alpha >= 1 else (0,)
    cross = max(crossing_count(nf) + slack, 1)
    return EnumBounds(cross, max_length, cross)


def check_theorem1(
    c: LinkClass, bounds: Optional[EnumBounds] = None, limits: SearchLimits = DEFAULT_LIMITS
) -> VerifyReport:
    """Every diagram of ``c`` within ``bounds`` reaches an alternating word."""
    if not theorem1_applicable(c):
        raise NotApplicable(f"class {c} is not a torus or twist class")
    bounds = bounds or theorem1_bounds(c)
    report = VerifyReport("thm1", dict(bounds.to_json(), **{"class": c.to_json()}))
    with _timed(report):
        for w in words_in_class(c, bounds):
            report.tested += 1
            try:
                result = simplify_to_alternating(w, limits)
            except SearchBudgetExceeded as exc:
                report.fail(w, f"budget: {len(exc.partial)} states")
                continue
            if isinstance(result, NotReached):
                best = ", ".join(format_word(m) for m in result.minimal)
                report.fail(w, f"not reached; minimal {best}")
                continue
            for problem in check_path(result):
                report.fail(w, f"bad path: {problem}")
    return report


def prop_violations(w: Word) -> tuple[list[str], list[str]]:
    """Clauses (i)-(iv) violated by ``w`` as (right/interior, left-end) lists."""
    k = len(w)
    inner: list[str] = []
    left: list[str] = []
    if abs(w[0]) < 2:
        left.append("(i) |m_1| >= 2")
    if abs(w[-1]) < 2:
        inner.append("(i) |m_k| >= 2")
    if any(m == 0 for m in w[1:-1]):
        inner.append("(i) m_i != 0")
    if not (w[0] * w[1] > 0 or abs(w[0]) >= 3):
        left.append("(ii) m_1 m_2 > 0 or |m_1| >= 3")
    if not (w[-2] * w[-1] > 0 or abs(w[-1]) >= 3):
        inner.append("(ii) m_(k-1) m_k > 0 or |m_k| >= 3")
    for i in range(1, k):
        if w[i - 1] * w[i] == -1:
            inner.append(f"(iii) m_{i} m_{i + 1} != -1")
    # 0-based i; ends with |m_i| = 1 are already (i) violations
    for i in range(1, k - 1):
        if abs(w[i]) != 1:
            continue
        pos = i + 1
        if w[i - 1] * w[i] < 0:
            if i > k - 3:
                inner.append(f"(iv-a) i <= k-2 at i={pos}")
            else:
                if w[i] * w[i + 1] <= 0:
                    inner.append(f"(iv-a) m_i m_(i+1) > 0 at i={pos}")
                if w[i] * w[i + 2] <= 0:
                    inner.append(f"(iv-a) m_i m_(i+2) > 0 at i={pos}")
        if w[i] * w[i + 1] < 0:
            if i < 2:
                left.append(f"(iv-b) i >= 3 at i={pos}")
            else:
                if w[i - 2] * w[i] <= 0:
                    inner.append(f"(iv-b) m_(i-2) m_i > 0 at i={pos}")
                if w[i - 1] * w[i] <= 0:
                    inner.append(f"(iv-b) m_(i-1) m_i > 0 at i={pos}")
    return inner, left


def check_prop_simple(bounds: EnumBounds, limits: SearchLimits = DEFAULT_LIMITS) -> VerifyReport:
    """Necessary conditions for simplicity, on every catalog-simple word with k > 1.

    Right-end and interior violations are failures; left-end-only violations
    are reported as diagnostics.
    """
    report = VerifyReport("prop", bounds.to_json())
    simple = 0
    with _timed(report):
        for w in enumerate_words(bounds):
            if len(w) < 2:
                continue
            report.tested += 1
            try:
                reach = closure(w, limits)
            except SearchBudgetExceeded as exc:
                report.fail(w, f"budget: {len(exc.partial)} states")
                continue
            c = complexity(w)
            if any(complexity(u) < c for u in reach):
                continue
            simple += 1
            inner, left = prop_violations(w)
            for detail in inner:
                report.fail(w, detail)
            for detail in left:
                report.diagnostics.append((w, detail))
    report.stats["catalog_simple"] = simple
    return report


def lemma_hypotheses(w: Word) -> bool:
    return (
        w[0] > 0
        and abs(w[-1]) >= 2
        and all(abs(w[i]) != 1 or w[i - 1] * w[i] > 0 for i in range(1, len(w)))
    )


def lemma_violations(w: Word) -> tuple[list[str], list[str]]:
    """(applicable clauses, violated clauses) for a word meeting the hypotheses.

    (b) is gated on its side condition; (c) on its own; (d) on its own plus
    the side condition of (b), which its argument relies on.
    """
    k = len(w)
    pair = eval_word(w)
    alpha, beta = pair.alpha, pair.beta
    applicable = ["a"]
    bad = []
    if not (alpha > 0 and beta > 0 and Fraction(alpha, beta) > w[0] - 1):
        bad.append("a")
        return applicable, bad
    x = Fraction(alpha, beta)
    side_b = k >= 2 and (w[-2] * w[-1] > 0 or abs(w[-1]) >= 3)
    if side_b:
        applicable.append("b")
        if not (alpha >= 2 and beta >= 2):
            bad.append("b")
    if w[0] >= 2 and ((k >= 2 and w[0] * w[1] > 0) or w[0] >= 3):
        applicable.append("c")
        if not x > 2:
            bad.append("c")
    if side_b and k >= 3 and (abs(w[1]) != 1 or w[1] * w[2] > 0):
        applicable.append("d")
        if alpha % beta == 1 % beta:
            bad.append("d")
    return applicable, bad


def check_lemma_arith(bounds: EnumBounds) -> VerifyReport:
    report = VerifyReport("lemma", bounds.to_json())
    counts = {c: 0 for c in "abcd"}
    with _timed(report):
        for w in enumerate_words(bounds):
            if not lemma_hypotheses(w):
                continue
            report.tested += 1
            applicable, bad = lemma_violations(w)
            for clause in applicable:
                counts[clause] += 1
            for clause in bad:
                report.fail(w, f"clause ({clause})")
    report.stats.update({f"applicable_{c}": n for c, n in counts.items()})
    return report


def random_word(rng: random.Random, max_length: int = 7, entry_bound: int = 5) -> Word:
    k = rng.randint(1, max_length)
    return tuple(rng.randint(-entry_bound, entry_bound) for _ in range(k))


def check_move_soundness(
    trials: int, seed: int, max_length: int = 7, entry_bound: int = 5
) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be positive")
    report = VerifyReport(
        "moves", {"trials": trials, "max_length": max_length, "entry_bound": entry_bound}, seed=seed
    )
    rng = random.Random(seed)
    instances = 0
    with _timed(report):
        for _ in range(trials):
            w = random_word(rng, max_length, entry_bound)
            report.tested += 1
            cls = link_class(w)
            for inst in enumerate_moves(w):
                instances += 1
                out = apply_move(w, inst)
                if link_class(out) != cls:
                    report.fail(w, f"{inst.label}: class changed")
                if crossing_count(out) > crossing_count(w):
                    report.fail(w, f"{inst.label}: crossings increase")
                if complexity(out) > complexity(w):
                    report.fail(w, f"{inst.label}: complexity increases")
                if len(out) > len(w):
                    report.fail(w, f"{inst.label}: length increases")
    report.stats["instances"] = instances
    return report


def check_generators(
    bounds: EnumBounds, min_length: int = 3, limits: SearchLimits = DEFAULT_LIMITS
) -> VerifyReport:
    """Awkward outputs: same class, non-alternating, catalog-simple.

    Hard outputs: same class, hard.
    """
    report = VerifyReport("gen", dict(bounds.to_json(), min_length=min_length))
    with _timed(report):
        for nf in positive_normals(min_length, bounds.max_length, bounds.entry_bound):
            if crossing_count(nf) > bounds.max_crossings:
                continue
            report.tested += 1
            cls = link_class(nf)
            awk = awkward_diagram(nf)
            if link_class(awk) != cls:
                report.fail(nf, f"awkward {format_word(awk)}: class differs")
            if is_alternating(awk):
                report.fail(nf, f"awkward {format_word(awk)}: alternating")
            try:
                c = complexity(awk)
                if any(complexity(u) < c for u in closure(awk, limits)):
                    report.fail(nf, f"awkward {format_word(awk)}: not catalog-simple")
            except SearchBudgetExceeded as exc:
                report.fail(nf, f"budget: {len(exc.partial)} states")
            hard = hard_diagram(nf)
            if link_class(hard) != cls:
                report.fail(nf, f"hard {format_word(hard)}: class differs")
            if not is_hard(hard):
                report.fail(nf, f"hard {format_word(hard)}: not hard")
    return report
