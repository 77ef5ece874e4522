import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import nested
from trigonal.diagram import complexity, crossing_count, link_class
from trigonal.moves import (
    SIGN_SYMMETRIC,
    InvalidMove,
    MoveInstance,
    Rule,
    apply_move,
    enumerate_moves,
    flip,
    lagrange_apply,
    move_deltas,
    successors,
    trace_line,
)

words = st.lists(st.integers(-5, 5), min_size=1, max_size=7).map(tuple)


def rules_of(word):
    return {(i.rule, i.start, i.negated, i.reversed, i.param) for i in enumerate_moves(word)}


# -- catalog examples ---------------------------------------------------------------

def test_awkward_example_admits_no_moves():
    assert enumerate_moves((4, -3)) == []


def test_triple_end_matches_5_1_diagram():
    assert (Rule.TRIPLE_END, 1, False, False, 0) in rules_of((2, 1, -1, -2))


def test_one_absorb_at_tail():
    assert (Rule.ONE_ABSORB, 1, False, False, 1) in rules_of((2, 2, 1))


@pytest.mark.parametrize(
    "word, inst, result",
    [
        ((3, -2), MoveInstance(0, Rule.TWO_FLIP), (2, 2)),
        ((2, 1, -1, -2), MoveInstance(1, Rule.TRIPLE_END), (2, 0, 3)),
        ((2, 0, 3), MoveInstance(0, Rule.Z_MERGE), (5,)),
        ((2, -1, 1, 3), MoveInstance(0, Rule.FIVE_SLIDE), (-2,)),
        ((2, 3, 0), MoveInstance(1, Rule.Z_DROP), (2,)),
        ((2, 2, 1), MoveInstance(1, Rule.ONE_ABSORB, param=1), (2, 3)),
        ((3, -1, -1, -2), MoveInstance(0, Rule.PLATEAU), (2, 1, 1, -3)),
        ((1, 2), MoveInstance(1, Rule.ONE_ABSORB, reversed=True, param=-1), (-3,)),
        ((-2, 2, -2, 2), MoveInstance(1, Rule.TWO_FLIP, negated=True, reversed=True), (2, 1, -2, 2)),
    ],
)
def test_apply_move_examples(word, inst, result):
    assert inst in enumerate_moves(word)
    assert apply_move(word, inst) == result
    assert link_class(result) == link_class(word)


def test_z_merge_then_path_for_5_1():
    w = apply_move((2, 1, -1, -2), MoveInstance(1, Rule.TRIPLE_END))
    assert apply_move(w, MoveInstance(0, Rule.Z_MERGE)) == (5,)


@pytest.mark.parametrize(
    "word, inst, deltas",
    [
        ((3, -2), MoveInstance(0, Rule.TWO_FLIP), (-1, -1)),
        ((3, -1, -1, -2), MoveInstance(0, Rule.PLATEAU), (0, 0)),
        ((2, 3, 0), MoveInstance(1, Rule.Z_DROP), (-3, -5)),
    ],
)
def test_move_deltas(word, inst, deltas):
    assert move_deltas(word, inst) == deltas


def test_stale_instance_is_rejected():
    with pytest.raises(InvalidMove):
        apply_move((4, -3), MoveInstance(0, Rule.TWO_FLIP))
    with pytest.raises(InvalidMove):
        apply_move((2, 2, 1), MoveInstance(1, Rule.ONE_ABSORB, param=-1))
    with pytest.raises(InvalidMove):
        apply_move((2, 2), MoveInstance(5, Rule.Z_DROP))


def test_sign_guards_are_enforced():
    # crossings would drop here, but the rule requires m > 0
    assert not any(
        i.rule is Rule.TRIPLE_END and not i.negated and not i.reversed
        for i in enumerate_moves((-2, -1, 3))
    )
    assert not any(i.rule is Rule.TWO_FLIP and not i.reversed for i in enumerate_moves((-1, -2)))
    assert not any(i.rule is Rule.PLATEAU for i in enumerate_moves((0, -1, 2, -3)))


def test_plateau_applies_with_positive_p():
    # the (iv) argument uses the move with p > 0
    inst = MoveInstance(0, Rule.PLATEAU)
    assert apply_move((2, -1, 2, 2), inst) == (1, -2, 1, 1)
    assert move_deltas((2, -1, 2, 2), inst) == (-2, -2)


# -- trace format --------------------------------------------------------------------

def test_trace_line_golden():
    assert (
        trace_line((2, 1, -1, -2), MoveInstance(1, Rule.TRIPLE_END), (2, 0, 3))
        == "D(2,1,-1,-2) --TRIPLE_END@1--> D(2,0,3)"
    )
    assert (
        trace_line((-2, 2, -2, 2), MoveInstance(1, Rule.TWO_FLIP, True, True), (2, 1, -2, 2))
        == "D(-2,2,-2,2) --TWO_FLIP~neg~rev@1--> D(2,1,-2,2)"
    )


def test_instance_json():
    inst = MoveInstance(3, Rule.FIVE_SLIDE, negated=True, reversed=True)
    assert inst.to_json() == {"rule": "FIVE_SLIDE", "at": 3, "neg": True, "rev": True}


# -- rule identities, checked against nested fractions -----------------------------

# right-hand sides transcribed independently of the implementation
IDENTITIES = {
    "Z_DROP": lambda m, n, p: ((m, 0), ()),
    "Z_MERGE": lambda m, n, p: ((m, 0, n), (m + n,)),
    "ONE_ABSORB+": lambda m, n, p: ((m, 1), (m + 1,)),
    "ONE_ABSORB-": lambda m, n, p: ((m, -1), (m - 1,)),
    "TWO_FLIP": lambda m, n, p: ((m, -2), (m - 1, 2)),
    "TRIPLE_END": lambda m, n, p: ((m, -1, n), (m - 1, -n + 1)),
    "FIVE_SLIDE": lambda m, n, p: ((m, -1, 1, n, p), (m - n, -1, 1 + p)),
    "FIVE_SLIDE_END": lambda m, n, p: ((m, -1, 1, n), (m - n - 1,)),
    "PLATEAU": lambda m, n, p: ((m, -1, n, p), (m - 1, -n, 1, p - 1)),
}
RULE_OF = {"ONE_ABSORB+": Rule.ONE_ABSORB, "ONE_ABSORB-": Rule.ONE_ABSORB, "FIVE_SLIDE_END": Rule.FIVE_SLIDE}
CONTEXTS = [((), ()), ((2,), ()), ((-3, 1), ()), ((2,), (3,)), ((1,), (-2, 2))]


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_rule_identities(name):
    is_end = name in ("Z_DROP", "ONE_ABSORB+", "ONE_ABSORB-", "TWO_FLIP", "TRIPLE_END", "FIVE_SLIDE_END")
    checked = 0
    for m, n, p in itertools.product(range(-6, 7), repeat=3):
        lhs, rhs = IDENTITIES[name](m, n, p)
        for x, y in CONTEXTS:
            if is_end and y:
                continue
            left, right = x + lhs + y, x + rhs + y
            assert link_class(left) == link_class(right), (left, right)
            a, b = nested(left), nested(right)
            if a is not None and b is not None:
                assert a == b
                checked += 1
    # a trailing 0 has no nested value, so Z_DROP is covered by the class check only
    assert checked > 100 or name == "Z_DROP"


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_emitted_instances_match_identities(name):
    rule = RULE_OF.get(name) or Rule[name]
    hits = 0
    for m, n, p in itertools.product(range(-4, 5), repeat=3):
        lhs, rhs = IDENTITIES[name](m, n, p)
        x = (3,)
        word = x + lhs
        forward = [i for i in enumerate_moves(word) if i.rule is rule and i.start == 1
                   and not i.negated and not i.reversed]
        if forward:
            hits += 1
            assert apply_move(word, forward[0]) == x + rhs
    assert hits > 0


# -- properties ----------------------------------------------------------------------

@settings(max_examples=500)
@given(words)
def test_soundness(word):
    cls = link_class(word)
    for inst, out in successors(word):
        assert link_class(out) == cls
        dc, dx = crossing_count(out) - crossing_count(word), complexity(out) - complexity(word)
        assert dc <= 0 and dx <= 0
        assert len(out) <= len(word)
        if inst.rule is not Rule.PLATEAU:
            assert dx < 0
        assert (dc, dx) == move_deltas(word, inst)


def _twin(inst: MoveInstance) -> MoveInstance:
    if inst.rule in SIGN_SYMMETRIC:
        return MoveInstance(inst.start, inst.rule, False, inst.reversed, -inst.param)
    return MoveInstance(inst.start, inst.rule, not inst.negated, inst.reversed, inst.param)


@settings(max_examples=300)
@given(words)
def test_negation_symmetry(word):
    negated = tuple(-m for m in word)
    mine = set(enumerate_moves(word))
    theirs = set(enumerate_moves(negated))
    assert {_twin(i) for i in mine} == theirs
    for inst in mine:
        assert apply_move(negated, _twin(inst)) == tuple(-m for m in apply_move(word, inst))


@given(words)
def test_flip_preserves_class_and_is_involutive(word):
    assert link_class(flip(word)) == link_class(word)
    assert flip(flip(word)) == word


@settings(max_examples=300)
@given(words)
def test_reversed_instances_are_conjugates(word):
    for inst in enumerate_moves(word):
        if not inst.reversed:
            continue
        mirror = MoveInstance(len(word) - 1 - inst.start, inst.rule, inst.negated, False, inst.param)
        assert flip(apply_move(flip(word), mirror)) == apply_move(word, inst)


@given(words)
def test_enumeration_order_is_sorted(word):
    found = enumerate_moves(word)
    assert found == sorted(found)
    assert found == [i for i, _ in successors(word)]


# -- Lagrange -------------------------------------------------------------------------

@pytest.mark.parametrize(
    "word, pos, eps, result",
    [
        ((2, -3), 0, 1, (1, 1, 2)),
        ((2, -3), 0, -1, (3, -1, 4)),
        ((3, 1, 2), 0, -1, (4, -1, 0, -2)),
    ],
)
def test_lagrange_examples(word, pos, eps, result):
    out = lagrange_apply(word, pos, eps)
    assert out == result
    assert nested(out) == nested(word)


def test_lagrange_then_merge_gives_awkward_6_2():
    w = lagrange_apply((3, 1, 2), 0, -1)
    assert apply_move(w, MoveInstance(1, Rule.Z_MERGE)) == (4, -3)


def test_lagrange_preserves_class_exhaustively():
    values = [v for v in range(-3, 4) if v]
    for k in range(2, 7):
        for word in itertools.product(values, repeat=k):
            cls = link_class(word)
            for pos in range(k - 1):
                for eps in (-1, 1):
                    assert link_class(lagrange_apply(word, pos, eps)) == cls


def test_lagrange_can_increase_crossings():
    assert crossing_count(lagrange_apply((2, -3), 0, -1)) > crossing_count((2, -3))


@pytest.mark.parametrize("pos, eps", [(1, 1), (-1, 1), (0, 2)])
def test_lagrange_rejects_bad_sites(pos, eps):
    with pytest.raises(InvalidMove):
        lagrange_apply((2, -3), pos, eps)
