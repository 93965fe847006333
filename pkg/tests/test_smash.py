import random

from hypothesis import given, settings, strategies as st

from critdaha.rational import CoeffRing
from critdaha.smash import SmashElt, embed_fn, embed_group
from critdaha.weyl import enumerate_ball
from conftest import rs_of

RS = rs_of(("A", 2, "untwisted"))
RING = CoeffRing(RS)
BALL = [w for w, _ in enumerate_ball(RING.W, 2)]
ROOTS = list(range(len(RS.roots)))


@st.composite
def smash(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 3))):
        w = draw(st.sampled_from(BALL))
        lam = draw(st.tuples(st.integers(-1, 1), st.integers(-1, 1)))
        c = draw(st.integers(-2, 2).filter(bool))
        f = RING.fn(RING.x(lam, c))
        if draw(st.booleans()):
            f = f * RING.inv_one_minus_x(draw(st.sampled_from(ROOTS)))
        terms[w] = terms[w] + f if w in terms else f
    return SmashElt(RING, terms)


@settings(max_examples=40, deadline=None)
@given(smash(), smash(), smash())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=30, deadline=None)
@given(smash())
def test_unit(a):
    one = SmashElt.one(RING)
    assert one * a == a == a * one


def test_cross_relation_uses_gradient_only():
    rng = random.Random(3)
    for w in BALL:
        lam = (rng.randint(-2, 2), rng.randint(-2, 2))
        moved = RING.W.act_weight(w.v, lam)
        lhs = embed_group(RING, w) * embed_fn(RING, RING.x(lam))
        rhs = embed_fn(RING, RING.x(moved)) * embed_group(RING, w)
        assert lhs == rhs


def test_translations_are_central_on_coefficients():
    t = RING.W.translation((1, 1))
    f = embed_fn(RING, RING.x((2, -1)))
    assert embed_group(RING, t) * f == f * embed_group(RING, t)


def test_group_multiplication_embeds():
    for x in BALL:
        for y in BALL:
            assert embed_group(RING, x) * embed_group(RING, y) == embed_group(RING, x * y)
