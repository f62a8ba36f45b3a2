from fractions import Fraction
from itertools import combinations

import pytest

from qtoda import lax as laxmod
from qtoda.correspondence import (
    build_weight_map,
    label_algebra,
    label_hamiltonian,
    label_image,
    network_hamiltonian_in_lax,
    verify_equivalence_A,
    verify_equivalence_C,
    verify_weight_map,
)
from qtoda.network import build_network, network_hamiltonian
from qtoda.torus import MonomialMap, commutes
from qtoda.words import enumerate_double_coxeter, standard_word, word_of_quiver_vector


def lax_ctx(kind, n):
    return laxmod.lax_context(n + 1 if kind == "A" else n)


def test_type_a_diagonal_images():
    ctx = lax_ctx("A", 1)
    for i in (1, 2):
        qp, vec = label_image("A", 1, (), ctx, (i, i))
        assert qp == 0
        assert vec == ctx.basis_vec(laxmod.w_index(ctx, i), -2)


def test_type_a_dip_image_shift_convention():
    # the w-exponent of the l-th factor is -Q_(l-1)-1; frozen against
    # the rank-2 golden lists
    ctx = lax_ctx("A", 2)
    qp, vec = label_image("A", 2, (1,), ctx, (1, 2))
    expect = ctx.plain_product(
        [
            (laxmod.w_index(ctx, 1), -1),
            (laxmod.w_index(ctx, 2), -2),
            (laxmod.d_index(ctx, 1), 1),
            (laxmod.d_index(ctx, 2), -1),
        ]
    )
    assert expect == ctx.monomial(vec, qp)


def test_type_c_stated_images():
    n = 2
    ctx = lax_ctx("C", n)
    # middle label: v^(-Q_1) w_n^(-2 Q_1) D_n^2
    for q1 in (-1, 0, 1):
        qp, vec = label_image("C", n, (q1,), ctx, (2, 3))
        expect = ctx.plain_product(
            [(laxmod.w_index(ctx, 2), -2 * q1), (laxmod.d_index(ctx, 2), 2)],
            qpow=Fraction(-q1),
        )
        assert expect == ctx.monomial(vec, qp)
    # upper diagonal: i = j >= n+1 maps to w_(2n+1-i)^2
    qp, vec = label_image("C", n, (0,), ctx, (4, 4))
    assert (qp, vec) == (0, ctx.basis_vec(laxmod.w_index(ctx, 1), 2))


def test_uncovered_label_rejected():
    ctx = lax_ctx("C", 3)
    with pytest.raises(ValueError):
        label_image("C", 3, (0, 0), ctx, (1, 6))


def test_label_algebra_pair_rows():
    # the (i=l, j<m) pairs carry factor q^2 on realized label pairs
    net = build_network("A", word_of_quiver_vector(2, (1,)))
    alg = label_algebra(net)
    a = alg.labels.index((1, 2))
    b = alg.labels.index((1, 3))
    assert 2 * alg.ctx.skew[a][b] == 2
    # disjoint label intervals commute
    c = alg.labels.index((1, 1))
    d = alg.labels.index((3, 3))
    assert alg.ctx.skew[c][d] == 0


def test_weight_map_homomorphism_reports():
    for kind, n in [("A", 2), ("A", 3), ("C", 2)]:
        for w in enumerate_double_coxeter(n):
            rep = verify_weight_map(build_network(kind, w))
            assert rep["ok"], rep["failures"][:2]


def test_corrupted_map_reports_failures():
    net = build_network("A", standard_word(2))
    alg = label_algebra(net)
    wmap = build_weight_map(net, alg)
    # corrupt one exponent of one image
    images = list(wmap.images)
    qp, vec = images[0]
    bad_vec = list(vec)
    bad_vec[0] += 1
    images[0] = (qp, tuple(bad_vec))
    bad = MonomialMap(wmap.source, wmap.target, tuple(images))
    assert bad.failing_pairs()


def test_label_hamiltonians_match_weight_route():
    # pushing labels through their weight vectors reproduces the torus
    # Hamiltonian computed directly on the t/c generators
    for kind, n in [("A", 2), ("C", 2)]:
        for w in enumerate_double_coxeter(n):
            net = build_network(kind, w)
            alg = label_algebra(net)
            to_tc = MonomialMap(
                alg.ctx,
                net.ctx,
                tuple((Fraction(0), alg.weights[lab]) for lab in alg.labels),
            )
            for i in range(1, n + 1):
                assert to_tc.apply(label_hamiltonian(alg, i)) == network_hamiltonian(net, i)


def test_equivalence_A_small():
    for n in (1, 2):
        for w in enumerate_double_coxeter(n):
            rep = verify_equivalence_A(w)
            assert rep["ok"], rep


def test_equivalence_A_has_negative_control():
    rep = verify_equivalence_A(word_of_quiver_vector(2, (1,)))
    assert all(c["first_diff"] is None for c in rep["checks"])


def test_equivalence_C_small():
    for n in (1, 2):
        for w in enumerate_double_coxeter(n):
            rep = verify_equivalence_C(w)
            assert rep["ok"], rep


def test_network_hamiltonian_in_lax_rank1():
    net = build_network("A", standard_word(1))
    ctx = lax_ctx("A", 1)
    got = network_hamiltonian_in_lax(net, 1)
    expect = (
        ctx.monomial(ctx.basis_vec(laxmod.w_index(ctx, 1), -2))
        + ctx.monomial(ctx.basis_vec(laxmod.w_index(ctx, 2), -2))
        + ctx.plain_product(
            [
                (laxmod.w_index(ctx, 1), -1),
                (laxmod.w_index(ctx, 2), -1),
                (laxmod.d_index(ctx, 1), 1),
                (laxmod.d_index(ctx, 2), -1),
            ]
        )
    )
    assert got == expect


def test_mapped_hamiltonians_commute_independently_of_lax_route():
    for kind, n in [("A", 3), ("C", 2)]:
        for w in enumerate_double_coxeter(n):
            net = build_network(kind, w)
            alg = label_algebra(net)
            wmap = build_weight_map(net, alg)
            hs = [wmap.apply(label_hamiltonian(alg, i)) for i in range(1, n + 1)]
            for a, b in combinations(hs, 2):
                assert commutes(a, b)


def test_equivalence_beyond_desk_ranks():
    # spot checks past the stated ranks; cheap and catches convention
    # drift that small ranks might mask
    for q in [(1, -1, 1, -1), (1, 1, 1, 1)]:
        assert verify_equivalence_A(word_of_quiver_vector(5, q))["ok"]
    for q in [(1, -1, 1,), (-1, -1, -1)]:
        assert verify_equivalence_C(word_of_quiver_vector(4, q))["ok"]
