"""Substitution of path labels into the Lax algebra and the mechanical
verification of the network/Lax equivalences.

Path weights of a word's network are relabeled X_(low, source) and form
their own quantum torus whose skew pairings are induced by the weight
torus.  The substitution map sends each label to an explicit monomial
in the w's and D's; pushing the network Hamiltonians through it must
reproduce the Lax Hamiltonians up to the stated prefactor and index
shift.  Exponent conventions: the w_l factor of a lower-half dip weight
is w_l^(-Q_(l-1)-1) (mirrored dips use -Q_(l-1)+1), with out-of-range
quiver entries read as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import lax as laxmod
from .network import Network, build_network, enumerate_labeled_paths, path_families, subnetwork
from .torus import MonomialMap, TorusContext, TorusElement
from .words import DoubleWord, QuiverVector, index_vector_of, quiver_vector_of


@dataclass(frozen=True)
class LabelAlgebra:
    """Quantum torus on the realized path labels of one network."""

    net: Network
    labels: tuple[tuple[int, int], ...]
    ctx: TorusContext
    weights: dict  # label -> weight exponent vector over the t/c torus

    def index(self, label) -> int:
        return self.labels.index(label)

    def generator(self, label) -> TorusElement:
        return self.ctx.generator(self.index(label))


def label_algebra(net: Network) -> LabelAlgebra:
    paths = enumerate_labeled_paths(net)
    labels = tuple(p.label for p in paths)
    weights = {}
    for p in paths:
        vec = [0] * net.ctx.rank
        for g, e in p.letters:
            vec[g] += e
        weights[p.label] = tuple(vec)
    names = tuple(f"X[{a},{b}]" for a, b in labels)
    skew = tuple(
        tuple(net.ctx.pairing(weights[r], weights[c]) for c in labels)
        for r in labels
    )
    return LabelAlgebra(net, labels, TorusContext(names, skew), weights)


def label_hamiltonian(alg: LabelAlgebra, i: int) -> TorusElement:
    """Network Hamiltonian written over the label torus: sum over
    vertex-disjoint families of the label product, top row first."""
    acc = alg.ctx.zero()
    for fam in path_families(alg.net, i):
        term = alg.ctx.one()
        for p in sorted(fam, key=lambda p: -p.source):
            term = term * alg.generator(p.label)
        acc = acc + term
    return acc


# ---------------------------------------------------------------------------
# label substitution into the Lax algebra


def _term_of(el: TorusElement):
    (vec, coeffs), = el.terms.items()
    (qp, c), = coeffs.items()
    if c != 1:
        raise ValueError("expected a unit monomial")
    return qp, vec


def _q_entry(qvec_desc: QuiverVector, n: int, l: int) -> int:
    """Q_l with Q_l = 0 outside 1..n-1; qvec is stored descending."""
    if 1 <= l <= n - 1:
        return qvec_desc[n - 1 - l]
    return 0


def label_image(kind: str, n: int, qvec: QuiverVector, lax_ctx: TorusContext, label):
    """(q-power, exponent vector) of a path label in the Lax torus."""
    i, j = label
    w = lambda l: laxmod.w_index(lax_ctx, l)
    d = lambda l: laxmod.d_index(lax_ctx, l)
    Q = lambda l: _q_entry(qvec, n, l)

    def term(letters, extra_q=0):
        return _term_of(lax_ctx.plain_product(letters, qpow=Fraction(extra_q)))

    if kind == "A":
        if i == j:
            return term([(w(i), -2)])
        letters = [(w(l), -Q(l - 1) - 1) for l in range(i, j + 1)]
        letters += [(d(i), 1), (d(j), -1)]
        return term(letters)

    if i == j:
        if i <= n:
            return term([(w(i), -2)])
        return term([(w(2 * n + 1 - i), 2)])
    if j <= n:
        letters = [(w(l), -Q(l - 1) - 1) for l in range(i, j + 1)]
        letters += [(d(i), 1), (d(j), -1)]
        return term(letters)
    if j == n + 1 and i < n:
        letters = [(w(l), -Q(l - 1) - 1) for l in range(i, n + 1)]
        letters += [(d(i), 1), (d(n), 1)]
        return term(letters, extra_q=-1)
    if i == n and j == n + 1:
        qq = Q(n - 1)
        return term([(w(n), -2 * qq), (d(n), 2)], extra_q=-qq)
    if i == n:
        a = 2 * n + 1 - j
        letters = [(w(l), -Q(l - 1) + 1) for l in range(a, n + 1)]
        letters += [(d(a), 1), (d(n), 1)]
        return term(letters, extra_q=1)
    if i >= n + 1:
        a, b = 2 * n + 1 - j, 2 * n + 1 - i
        letters = [(w(l), -Q(l - 1) + 1) for l in range(a, b + 1)]
        letters += [(d(a), 1), (d(b), -1)]
        return term(letters)
    raise ValueError(f"label {label} is not covered by the weight table")


def build_weight_map(net: Network, alg: LabelAlgebra | None = None) -> MonomialMap:
    """Monomial map from the label torus into the Lax torus."""
    alg = alg or label_algebra(net)
    qvec = quiver_vector_of(net.word)
    rank = net.n + 1 if net.kind == "A" else net.n
    lax_ctx = laxmod.lax_context(rank)
    images = tuple(
        label_image(net.kind, net.n, qvec, lax_ctx, lab) for lab in alg.labels
    )
    return MonomialMap(alg.ctx, lax_ctx, images)


def verify_weight_map(net: Network) -> dict:
    """Pairwise commutation check: the q-factor between the images of
    any two labels must equal the factor on the label torus."""
    alg = label_algebra(net)
    wmap = build_weight_map(net, alg)
    failures = []
    m = len(alg.labels)
    for a in range(m):
        for b in range(a + 1, m):
            src = alg.ctx.skew[a][b]
            tgt = wmap.target.pairing(wmap.images[a][1], wmap.images[b][1])
            if src != tgt:
                failures.append(
                    {
                        "labels": [alg.labels[a], alg.labels[b]],
                        "source_factor": str(2 * src),
                        "image_factor": str(2 * tgt),
                    }
                )
    return {
        "kind": net.kind,
        "rank": net.n,
        "word": list(net.word.letters),
        "pairs_checked": m * (m - 1) // 2,
        "ok": not failures,
        "failures": failures,
    }


def network_hamiltonian_in_lax(net: Network, i: int) -> TorusElement:
    """Network Hamiltonian pushed through the label substitution."""
    alg = label_algebra(net)
    wmap = build_weight_map(net, alg)
    return wmap.apply(label_hamiltonian(alg, i))


# ---------------------------------------------------------------------------
# the equivalence checks


def _first_diff(a: TorusElement, b: TorusElement):
    diff = a - b
    if diff.is_zero():
        return None
    vec = sorted(diff.terms)[0]
    return {
        "exponents": list(vec),
        "lhs_coeff": [[str(q), c] for q, c in sorted(a.coefficient(vec).items())],
        "rhs_coeff": [[str(q), c] for q, c in sorted(b.coefficient(vec).items())],
    }


def _w_prefactor(ctx: TorusContext, upto: int, sign: int) -> TorusElement:
    return ctx.plain_product([(laxmod.w_index(ctx, l), sign) for l in range(1, upto + 1)])


def verify_equivalence_A(word: DoubleWord) -> dict:
    """H_i(network) = (w_1 ... w_{n+1})^-1 H_{i+1}(Lax, (0, Q, 0)),
    exactly, for i = 1..n."""
    n = word.n
    net = build_network("A", word)
    alg = label_algebra(net)
    wmap = build_weight_map(net, alg)
    qvec = quiver_vector_of(word)
    kvec = index_vector_of(qvec)
    ctx = wmap.target
    hams = laxmod.lax_hamiltonians(ctx, kvec, "A")
    pref = _w_prefactor(ctx, n + 1, -1)
    checks = []
    for i in range(1, n + 1):
        lhs = wmap.apply(label_hamiltonian(alg, i))
        rhs = pref * hams[i]  # hams[i] is H_{i+1}
        checks.append(
            {"index": i, "ok": lhs == rhs, "first_diff": _first_diff(lhs, rhs)}
        )
    return {
        "kind": "A",
        "rank": n,
        "word": list(word.letters),
        "quiver_vector": list(qvec),
        "ok": all(c["ok"] for c in checks),
        "checks": checks,
    }


def _c_index_vector(qvec: QuiverVector) -> tuple[int, ...]:
    """(Q_{n-1}, ..., Q_1, 0) for the type C identification."""
    return tuple(qvec) + (0,)


def verify_equivalence_C(word: DoubleWord, subnetworks: bool = True) -> dict:
    """H_i(network) = H_{i+1}(double Lax, (Q, 0)) for i = 1..n, plus the
    subnetwork identities on the bottom and top row bands."""
    n = word.n
    net = build_network("C", word)
    alg = label_algebra(net)
    wmap = build_weight_map(net, alg)
    qvec = quiver_vector_of(word)
    ctx = wmap.target
    hams = laxmod.lax_hamiltonians(ctx, _c_index_vector(qvec), "C")
    checks = []
    for i in range(1, n + 1):
        lhs = wmap.apply(label_hamiltonian(alg, i))
        rhs = hams[i]  # index i+1
        checks.append(
            {"index": i, "ok": lhs == rhs, "first_diff": _first_diff(lhs, rhs)}
        )
    sub_checks = []
    if subnetworks:
        for m in range(2, n + 1):
            sub = subnetwork(net, 1, m)
            salg = label_algebra(sub)
            smap = build_weight_map(sub, salg)
            kv = tuple(qvec[n - m:]) + (0,)  # (Q_{m-1}, ..., Q_1, 0)
            sub_ctx = laxmod.lax_context(m)
            shams = laxmod.lax_hamiltonians(sub_ctx, kv, "A")
            pref = _w_prefactor(sub_ctx, m, -1)
            embed = _embed_map(sub_ctx, ctx)
            for i in range(1, m + 1):
                lhs = smap.apply(label_hamiltonian(salg, i))
                rhs = embed.apply(pref * shams[i])
                sub_checks.append(
                    {
                        "rows": [1, m],
                        "index": i,
                        "ok": lhs == rhs,
                        "first_diff": _first_diff(lhs, rhs),
                    }
                )
        for m2 in range(n + 1, 2 * n):
            r = 2 * n + 1 - m2
            sub = subnetwork(net, m2, 2 * n)
            salg = label_algebra(sub)
            smap = build_weight_map(sub, salg)
            kv = tuple(qvec[n - r:]) + (0,)  # (Q_{r-1}, ..., Q_1, 0)
            sub_ctx = laxmod.lax_context(r)
            shams = laxmod.lax_hamiltonians(sub_ctx, kv, "A")
            pref = _w_prefactor(sub_ctx, r, 1)
            embed = _embed_map(sub_ctx, ctx)
            for i in range(1, r + 1):
                lhs = smap.apply(label_hamiltonian(salg, i))
                rhs = embed.apply(pref * shams[r - i])  # H_{r+1-i}
                sub_checks.append(
                    {
                        "rows": [m2, 2 * n],
                        "index": i,
                        "ok": lhs == rhs,
                        "first_diff": _first_diff(lhs, rhs),
                    }
                )
    return {
        "kind": "C",
        "rank": n,
        "word": list(word.letters),
        "quiver_vector": list(qvec),
        "ok": all(c["ok"] for c in checks) and all(c["ok"] for c in sub_checks),
        "checks": checks,
        "subnetwork_checks": sub_checks,
    }


def _embed_map(small: TorusContext, big: TorusContext) -> MonomialMap:
    """Inclusion of a lower-rank Lax torus into a bigger one, matching
    generators by name."""
    images = []
    for name in small.names:
        images.append((Fraction(0), big.basis_vec(big.index(name))))
    return MonomialMap(small, big, tuple(images))
