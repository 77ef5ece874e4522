"""Breadth-first exploration of the slide-move graph.

Slide moves never lengthen a word or add crossings, so the set of words
reachable from a start word is finite; it is explored completely, in the
fixed order given by :func:`trigonal.moves.successors`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from trigonal.diagram import Word, complexity, crossing_count, format_word, is_alternating, link_class
from trigonal.moves import MoveInstance, successors, trace_line


class SearchBudgetExceeded(RuntimeError):
    """The state budget ran out; ``partial`` holds the words seen so far."""

    def __init__(self, start: Word, partial: frozenset[Word]):
        super().__init__(f"state budget exhausted from {format_word(start)} after {len(partial)} states")
        self.start = start
        self.partial = partial


@dataclass(frozen=True)
class SearchLimits:
    max_states: int = 200_000
    # None means "length of the start word"
    max_length: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_states < 1:
            raise ValueError("max_states must be positive")
        if self.max_length is not None and self.max_length < 1:
            raise ValueError("max_length must be positive")


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class SimplifyPath:
    start: Word
    steps: tuple[tuple[MoveInstance, Word], ...] = ()

    @property
    def final(self) -> Word:
        return self.steps[-1][1] if self.steps else self.start

    def words(self) -> list[Word]:
        return [self.start] + [w for _, w in self.steps]

    def trace(self) -> str:
        lines = []
        prev = self.start
        for inst, word in self.steps:
            lines.append(trace_line(prev, inst, word))
            prev = word
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "start": format_word(self.start),
            "steps": [dict(inst.to_json(), to=format_word(w)) for inst, w in self.steps],
        }


@dataclass(frozen=True)
class NotReached:
    """No alternating word is reachable; ``minimal`` are the closure's best words."""

    start: Word
    minimal: tuple[Word, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {"start": format_word(self.start), "reached": False,
                "minimal": [format_word(w) for w in self.minimal]}


def _order_key(word: Word) -> tuple:
    return complexity(word), len(word), word


def _explore(word: Sequence[int], limits: SearchLimits) -> dict[Word, Optional[tuple[Word, MoveInstance]]]:
    """BFS parent map ``word -> (predecessor, instance)``; the start maps to None."""
    start = tuple(word)
    cap = limits.max_length if limits.max_length is not None else len(start)
    parents: dict[Word, Optional[tuple[Word, MoveInstance]]] = {start: None}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for inst, nxt in successors(current):
            if nxt in parents or len(nxt) > cap:
                continue
            if len(parents) >= limits.max_states:
                raise SearchBudgetExceeded(start, frozenset(parents))
            parents[nxt] = (current, inst)
            queue.append(nxt)
    return parents


def _path_to(parents, start: Word, target: Word) -> SimplifyPath:
    steps = []
    node = target
    while node != start:
        prev, inst = parents[node]
        steps.append((inst, node))
        node = prev
    return SimplifyPath(start, tuple(reversed(steps)))


def closure(word: Sequence[int], limits: SearchLimits = DEFAULT_LIMITS) -> frozenset[Word]:
    return frozenset(_explore(word, limits))


def minimize(word: Sequence[int], limits: SearchLimits = DEFAULT_LIMITS) -> tuple[Word, SimplifyPath]:
    """Least reachable word under (complexity, length, entries), with a path to it."""
    start = tuple(word)
    parents = _explore(start, limits)
    best = min(parents, key=_order_key)
    return best, _path_to(parents, start, best)


def is_catalog_simple(word: Sequence[int], limits: SearchLimits = DEFAULT_LIMITS) -> bool:
    """No reachable word has lower complexity.

    Weaker than true simplicity: the catalog is a subset of all slide isotopies.
    """
    c = complexity(word)
    return all(complexity(w) >= c for w in closure(word, limits))


def simplify_to_alternating(
    word: Sequence[int], limits: SearchLimits = DEFAULT_LIMITS
) -> SimplifyPath | NotReached:
    """Path to the least alternating word in the closure, if there is one."""
    start = tuple(word)
    if is_alternating(start):
        return SimplifyPath(start)
    parents = _explore(start, limits)
    targets = [w for w in parents if is_alternating(w)]
    if not targets:
        lowest = min(complexity(w) for w in parents)
        minimal = sorted((w for w in parents if complexity(w) == lowest), key=_order_key)
        return NotReached(start, tuple(minimal))
    return _path_to(parents, start, min(targets, key=_order_key))


def check_path(path: SimplifyPath) -> list[str]:
    """Problems along ``path``: increases in crossings or complexity, class changes."""
    problems = []
    words = path.words()
    cls = link_class(path.start)
    for i, (a, b) in enumerate(zip(words, words[1:])):
        if link_class(b) != cls:
            problems.append(f"step {i}: link class changes")
        if crossing_count(b) > crossing_count(a):
            problems.append(f"step {i}: crossings increase")
        if complexity(b) > complexity(a):
            problems.append(f"step {i}: complexity increases")
    return problems
