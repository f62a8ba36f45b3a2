import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qtoda.torus import (
    MonomialMap,
    TorusContext,
    classical_context,
    classical_monomial,
    commutes,
    identity_map,
    poisson_bracket,
    specialize_classical,
)


def ctx2(omega=Fraction(1)):
    return TorusContext(
        ("X_1", "X_2"),
        ((Fraction(0), omega), (-omega, Fraction(0))),
    )


def lax1():
    # w, D with D w = q w D
    return TorusContext(
        ("w", "D"),
        ((Fraction(0), Fraction(-1, 2)), (Fraction(1, 2), Fraction(0))),
    )


def test_generator_commutation():
    ctx = ctx2(Fraction(3, 2))
    x, y = ctx.generator(0), ctx.generator(1)
    assert x * y == (y * x).q_shift(2 * Fraction(3, 2))


def test_unit_and_zero():
    ctx = ctx2()
    a = ctx.weyl([(0, 2), (1, -1)])
    assert a * ctx.one() == a
    assert (a + ctx.zero()) == a
    assert (a - a).is_zero()


def test_weyl_order_independent():
    ctx = ctx2(Fraction(2))
    letters = [(0, 1), (1, 1), (0, -2)]
    assert ctx.weyl(letters) == ctx.weyl(list(reversed(letters)))


def test_plain_product_balancing():
    ctx = lax1()
    dw = ctx.plain_product([(1, 1), (0, 1)])  # D then w
    wd = ctx.plain_product([(0, 1), (1, 1)])  # w then D
    assert dw == ctx.weyl([(0, 1), (1, 1)]).q_shift(Fraction(1, 2))
    assert wd == ctx.weyl([(0, 1), (1, 1)]).q_shift(Fraction(-1, 2))
    # D w = q w D
    assert ctx.generator(1) * ctx.generator(0) == (
        ctx.generator(0) * ctx.generator(1)
    ).q_shift(1)


def test_context_mismatch_raises():
    a = ctx2().one()
    b = ctx2(Fraction(2)).one()
    with pytest.raises(ValueError):
        a * b


def test_commutes_predicate():
    ctx = ctx2(Fraction(1))
    x, y = ctx.generator(0), ctx.generator(1)
    assert commutes(x, x)
    assert not commutes(x, y)


def test_monomial_inverse():
    ctx = ctx2(Fraction(1))
    m = ctx.monomial((2, -1), qpow=Fraction(1, 2))
    assert m * m.inverse_monomial() == ctx.one()


small_exp = st.integers(min_value=-2, max_value=2)


def element_strategy(ctx):
    term = st.tuples(
        st.tuples(small_exp, small_exp),
        st.integers(min_value=-3, max_value=3),
    )
    return st.lists(term, min_size=0, max_size=4).map(
        lambda items: sum(
            (ctx.monomial(vec, coeff=c) for vec, c in items if c),
            ctx.zero(),
        )
    )


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_associativity(data):
    ctx = ctx2(Fraction(1, 2))
    a = data.draw(element_strategy(ctx))
    b = data.draw(element_strategy(ctx))
    c = data.draw(element_strategy(ctx))
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_specialization_is_ring_hom(data):
    ctx = ctx2(Fraction(1))
    a = data.draw(element_strategy(ctx))
    b = data.draw(element_strategy(ctx))
    lhs = specialize_classical(a * b)
    rhs = specialize_classical(a) * specialize_classical(b)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(va=st.tuples(small_exp, small_exp), vb=st.tuples(small_exp, small_exp))
def test_weyl_commutation_identity(va, vb):
    ctx = ctx2(Fraction(1, 2))
    a, b = ctx.monomial(va), ctx.monomial(vb)
    shift = 2 * ctx.pairing(va, vb)
    assert a * b == (b * a).q_shift(shift)


def test_monomial_commutator_specializes_to_zero():
    ctx = ctx2(Fraction(1))
    a = ctx.monomial((1, 2))
    b = ctx.monomial((-1, 1))
    assert specialize_classical(a * b - b * a).is_zero()


# -- poisson bracket ---------------------------------------------------------


def _bracket_matrix(entries):
    return tuple(tuple(Fraction(x) for x in row) for row in entries)


def test_poisson_stated_weight_brackets():
    # variables (c_1, t_1): {c, t} = 2 c t and {t, t} = 0
    ctx = classical_context(("c_1", "t_1"))
    c = classical_monomial(ctx, (1, 0))
    t = classical_monomial(ctx, (0, 1))
    b = _bracket_matrix([[0, 2], [-2, 0]])
    assert poisson_bracket(c, t, b) == classical_monomial(ctx, (1, 1), 2)
    assert poisson_bracket(t, t, b).is_zero()


def test_poisson_skew_and_errors():
    ctx = classical_context(("x", "y"))
    f = classical_monomial(ctx, (1, 2)) + classical_monomial(ctx, (0, -1), 3)
    b = _bracket_matrix([[0, 1], [-1, 0]])
    assert poisson_bracket(f, f, b).is_zero()
    with pytest.raises(ValueError):
        poisson_bracket(f, f, _bracket_matrix([[0, 1], [1, 0]]))


@settings(max_examples=30, deadline=None)
@given(
    va=st.tuples(small_exp, small_exp),
    vb=st.tuples(small_exp, small_exp),
    vc=st.tuples(small_exp, small_exp),
)
def test_poisson_jacobi(va, vb, vc):
    ctx = classical_context(("x", "y"))
    b = _bracket_matrix([[0, Fraction(3, 2)], [Fraction(-3, 2), 0]])
    f, g, h = (classical_monomial(ctx, v) for v in (va, vb, vc))
    total = (
        poisson_bracket(f, poisson_bracket(g, h, b), b)
        + poisson_bracket(g, poisson_bracket(h, f, b), b)
        + poisson_bracket(h, poisson_bracket(f, g, b), b)
    )
    assert total.is_zero()


# -- monomial maps -----------------------------------------------------------


def test_identity_map():
    ctx = ctx2(Fraction(1))
    m = identity_map(ctx)
    el = ctx.monomial((2, -1), qpow=Fraction(1, 2), coeff=-3)
    assert m.apply(el) == el
    assert m.is_homomorphism()


def test_map_flags_broken_commutation():
    src = ctx2(Fraction(1))
    tgt = ctx2(Fraction(2))
    m = MonomialMap(
        src, tgt, ((Fraction(0), (1, 0)), (Fraction(0), (0, 1)))
    )
    assert not m.is_homomorphism()
    ((i, j, s, t),) = m.failing_pairs()
    assert (s, t) == (Fraction(1), Fraction(2))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_homomorphic_map_respects_products(data):
    src = ctx2(Fraction(1))
    tgt = TorusContext(
        ("a", "b", "c"),
        (
            (Fraction(0), Fraction(1), Fraction(0)),
            (Fraction(-1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(0)),
        ),
    )
    m = MonomialMap(
        src, tgt, ((Fraction(1, 2), (1, 0, 2)), (Fraction(0), (0, 1, -1)))
    )
    assert m.is_homomorphism()
    a = data.draw(element_strategy(src))
    b = data.draw(element_strategy(src))
    assert m.apply(a * b) == m.apply(a) * m.apply(b)
    assert m.apply(a + b) == m.apply(a) + m.apply(b)
