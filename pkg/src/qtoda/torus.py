"""Exact arithmetic for quantum torus algebras.

A quantum torus on generators X_1, ..., X_m is presented by relations

    X_i X_j = q^(2 s_ij) X_j X_i

with ``s`` a skew-symmetric matrix of exact rationals.  Every element is
stored on the Weyl-ordered basis E(a), a in Z^m, characterised by

    E(a) E(b) = q^<a,b> E(a+b),        <a,b> = sum_ij s_ij a_i b_j,

so E(e_i) = X_i, E(0) = 1, and E(a) equals the q-balanced average of any
product presentation of the same monomial.  Coefficients are integers
times rational powers of q; zero is the empty term map.  All values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Vec = tuple[int, ...]
QPow = Fraction
Coeff = dict[QPow, int]


def _vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(a: Vec, k: int) -> Vec:
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class TorusContext:
    """Presentation data: generator names and the skew matrix s."""

    names: tuple[str, ...]
    skew: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = len(self.names)
        if len(self.skew) != m or any(len(row) != m for row in self.skew):
            raise ValueError("skew matrix shape does not match generator count")
        for i in range(m):
            if self.skew[i][i] != 0:
                raise ValueError("skew matrix has nonzero diagonal")
            for j in range(i + 1, m):
                if self.skew[i][j] != -self.skew[j][i]:
                    raise ValueError("skew matrix is not skew-symmetric")

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def pairing(self, a: Vec, b: Vec) -> Fraction:
        """<a,b> = sum s_ij a_i b_j over the nonzero entries."""
        total = Fraction(0)
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.skew[i]
            for j, bj in enumerate(b):
                if bj and row[j]:
                    total += row[j] * ai * bj
        return total

    # -- element constructors -------------------------------------------

    def zero(self) -> "TorusElement":
        return TorusElement(self, {})

    def one(self) -> "TorusElement":
        return self.monomial(self.unit_vec())

    def unit_vec(self) -> Vec:
        return (0,) * self.rank

    def basis_vec(self, i: int, power: int = 1) -> Vec:
        v = [0] * self.rank
        v[i] = power
        return tuple(v)

    def generator(self, i: int, power: int = 1) -> "TorusElement":
        return self.monomial(self.basis_vec(i, power))

    def monomial(self, vec: Sequence[int], qpow: QPow | int = 0, coeff: int = 1) -> "TorusElement":
        if coeff == 0:
            return self.zero()
        return TorusElement(self, {tuple(vec): {Fraction(qpow): coeff}})

    def weyl(self, letters: Iterable[tuple[int, int]]) -> "TorusElement":
        """Weyl-ordered monomial E(sum power*e_index); order independent."""
        v = [0] * self.rank
        for i, power in letters:
            v[i] += power
        return self.monomial(tuple(v))

    def plain_product(self, letters: Iterable[tuple[int, int]], qpow: QPow | int = 0) -> "TorusElement":
        """Left-to-right product of generator powers, as one Weyl term.

        X_{i1}^{m1} ... X_{ir}^{mr} = q^C E(sum m e_i) with the balancing
        constant C = sum_{s<t} s(i_s, i_t) m_s m_t.
        """
        letters = list(letters)
        c = Fraction(qpow)
        for s in range(len(letters)):
            i, mi = letters[s]
            for t in range(s + 1, len(letters)):
                j, mj = letters[t]
                c += self.skew[i][j] * mi * mj
        v = [0] * self.rank
        for i, power in letters:
            v[i] += power
        return self.monomial(tuple(v), qpow=c)


class TorusElement:
    """Noncommutative Laurent polynomial on the Weyl basis of a context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: TorusContext, terms: Mapping[Vec, Mapping[QPow, int]]):
        clean: dict[Vec, Coeff] = {}
        for vec, coeffs in terms.items():
            kept = {qp: c for qp, c in coeffs.items() if c != 0}
            if kept:
                clean[tuple(vec)] = kept
        self.ctx = ctx
        self.terms = clean

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and all(len(c) == 1 for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusElement)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("TorusElement is not hashable")

    # -- ring operations --------------------------------------------------

    def _check(self, other: "TorusElement"):
        if self.ctx != other.ctx:
            raise ValueError("context mismatch")

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        out: dict[Vec, Coeff] = {v: dict(c) for v, c in self.terms.items()}
        for vec, coeffs in other.terms.items():
            acc = out.setdefault(vec, {})
            for qp, c in coeffs.items():
                acc[qp] = acc.get(qp, 0) + c
        return TorusElement(self.ctx, out)

    def __neg__(self) -> "TorusElement":
        return TorusElement(
            self.ctx,
            {v: {qp: -c for qp, c in coeffs.items()} for v, coeffs in self.terms.items()},
        )

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        pairing = self.ctx.pairing
        out: dict[Vec, Coeff] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                shift = pairing(a, b)
                vec = _vec_add(a, b)
                acc = out.setdefault(vec, {})
                for qa, xa in ca.items():
                    for qb, xb in cb.items():
                        qp = qa + qb + shift
                        acc[qp] = acc.get(qp, 0) + xa * xb
        return TorusElement(self.ctx, out)

    def q_shift(self, qpow: QPow | int, scale: int = 1) -> "TorusElement":
        """Multiply by the central scalar ``scale * q^qpow``."""
        qpow = Fraction(qpow)
        return TorusElement(
            self.ctx,
            {v: {qp + qpow: c * scale for qp, c in coeffs.items()} for v, coeffs in self.terms.items()},
        )

    def inverse_monomial(self) -> "TorusElement":
        """Inverse of a single Weyl term q^r E(a), which is q^-r E(-a)."""
        if not self.is_monomial():
            raise ValueError("only monomials are invertible here")
        (vec, coeffs), = self.terms.items()
        (qp, c), = coeffs.items()
        if c not in (1, -1):
            raise ValueError("monomial coefficient is not a unit")
        return self.ctx.monomial(_vec_scale(vec, -1), qpow=-qp, coeff=c)

    def flipped(self, indices: Iterable[int], negate_q: bool = True) -> "TorusElement":
        """Basis map E(a) -> E(a') negating the listed exponents (and q)."""
        idx = set(indices)
        out: dict[Vec, Coeff] = {}
        for vec, coeffs in self.terms.items():
            nv = tuple(-x if i in idx else x for i, x in enumerate(vec))
            acc = out.setdefault(nv, {})
            for qp, c in coeffs.items():
                nq = -qp if negate_q else qp
                acc[nq] = acc.get(nq, 0) + c
        return TorusElement(self.ctx, out)

    # -- views -------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Vec, list[tuple[QPow, int]]]]:
        return [
            (vec, sorted(self.terms[vec].items()))
            for vec in sorted(self.terms)
        ]

    def coefficient(self, vec: Sequence[int]) -> Coeff:
        return dict(self.terms.get(tuple(vec), {}))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for vec, coeffs in self.sorted_terms():
            mono = " ".join(
                f"{self.ctx.names[i]}^{e}" if e != 1 else self.ctx.names[i]
                for i, e in enumerate(vec)
                if e
            ) or "1"
            for qp, c in coeffs:
                qs = "" if qp == 0 else f" q^{qp}"
                bits.append(f"{c}{qs} {mono}")
        return " + ".join(bits)


def commutes(a: TorusElement, b: TorusElement) -> bool:
    """True iff ab - ba = 0 exactly."""
    return (a * b - b * a).is_zero()


def commutation_exponent(ctx: TorusContext, a: Vec, b: Vec) -> Fraction:
    """c with E(a)E(b) = q^c E(b)E(a); equals 2<a,b>."""
    return 2 * ctx.pairing(a, b)


# ---------------------------------------------------------------------------
# commutative (q -> 1) layer


class CommutativeLaurent:
    """Laurent polynomial with exact rational coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: TorusContext, terms: Mapping[Vec, Fraction]):
        self.ctx = ctx
        self.terms = {tuple(v): Fraction(c) for v, c in terms.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CommutativeLaurent)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("CommutativeLaurent is not hashable")

    def __add__(self, other: "CommutativeLaurent") -> "CommutativeLaurent":
        out = dict(self.terms)
        for v, c in other.terms.items():
            out[v] = out.get(v, Fraction(0)) + c
        return CommutativeLaurent(self.ctx, out)

    def __neg__(self) -> "CommutativeLaurent":
        return CommutativeLaurent(self.ctx, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "CommutativeLaurent") -> "CommutativeLaurent":
        return self + (-other)

    def __mul__(self, other: "CommutativeLaurent") -> "CommutativeLaurent":
        out: dict[Vec, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                v = _vec_add(a, b)
                out[v] = out.get(v, Fraction(0)) + ca * cb
        return CommutativeLaurent(self.ctx, out)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for vec in sorted(self.terms):
            mono = " ".join(
                f"{self.ctx.names[i]}^{e}" if e != 1 else self.ctx.names[i]
                for i, e in enumerate(vec)
                if e
            ) or "1"
            bits.append(f"{self.terms[vec]} {mono}")
        return " + ".join(bits)


def classical_context(names: Sequence[str]) -> TorusContext:
    """Context carrier for commutative Laurent polynomials."""
    m = len(names)
    zero = tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(m))
    return TorusContext(tuple(names), zero)


def classical_monomial(ctx: TorusContext, vec: Sequence[int], coeff=1) -> CommutativeLaurent:
    return CommutativeLaurent(ctx, {tuple(vec): Fraction(coeff)})


def specialize_classical(a: TorusElement) -> CommutativeLaurent:
    """Set q = 1.  A ring homomorphism onto the commutative Laurent ring."""
    out: dict[Vec, Fraction] = {}
    for vec, coeffs in a.terms.items():
        out[vec] = Fraction(sum(coeffs.values()))
    return CommutativeLaurent(a.ctx, out)


def poisson_bracket(
    f: CommutativeLaurent,
    g: CommutativeLaurent,
    bracket: Sequence[Sequence[Fraction]],
) -> CommutativeLaurent:
    """Log-canonical bracket {x^a, x^b} = (sum B_ij a_i b_j) x^(a+b)."""
    if f.ctx != g.ctx:
        raise ValueError("context mismatch")
    m = f.ctx.rank
    for i in range(m):
        for j in range(m):
            if bracket[i][j] != -bracket[j][i]:
                raise ValueError("bracket matrix is not skew-symmetric")
    out: dict[Vec, Fraction] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            w = Fraction(0)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    if bj and bracket[i][j]:
                        w += Fraction(bracket[i][j]) * ai * bj
            if w:
                v = _vec_add(a, b)
                out[v] = out.get(v, Fraction(0)) + w * ca * cb
    return CommutativeLaurent(f.ctx, out)


# ---------------------------------------------------------------------------
# monomial maps between tori


@dataclass(frozen=True)
class MonomialMap:
    """Generator-wise substitution X_i -> q^(p_i) E(v_i) into a target torus.

    Extends linearly on the Weyl basis: E(a) maps to q^(sum a_i p_i)
    E(sum a_i v_i).  This sends balanced monomials to balanced monomials;
    it is an algebra homomorphism exactly when every commutation pairing
    is preserved (see ``failing_pairs``).
    """

    source: TorusContext
    target: TorusContext
    images: tuple[tuple[QPow, Vec], ...]

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise ValueError("one image per source generator required")
        for _, v in self.images:
            if len(v) != self.target.rank:
                raise ValueError("image vector has wrong length")

    def apply(self, a: TorusElement) -> TorusElement:
        if a.ctx != self.source:
            raise ValueError("element not over the source context")
        out: dict[Vec, Coeff] = {}
        for vec, coeffs in a.terms.items():
            qshift = Fraction(0)
            tv = [0] * self.target.rank
            for i, e in enumerate(vec):
                if not e:
                    continue
                p, v = self.images[i]
                qshift += e * p
                for j, x in enumerate(v):
                    tv[j] += e * x
            key = tuple(tv)
            acc = out.setdefault(key, {})
            for qp, c in coeffs.items():
                nq = qp + qshift
                acc[nq] = acc.get(nq, 0) + c
        return TorusElement(self.target, out)

    def failing_pairs(self) -> list[tuple[int, int, Fraction, Fraction]]:
        """Generator pairs whose commutation q-factor is not preserved."""
        bad = []
        m = self.source.rank
        for i in range(m):
            for j in range(i + 1, m):
                src = self.source.skew[i][j]
                tgt = self.target.pairing(self.images[i][1], self.images[j][1])
                if src != tgt:
                    bad.append((i, j, src, tgt))
        return bad

    def is_homomorphism(self) -> bool:
        return not self.failing_pairs()


def identity_map(ctx: TorusContext) -> MonomialMap:
    return MonomialMap(
        ctx, ctx, tuple((Fraction(0), ctx.basis_vec(i)) for i in range(ctx.rank))
    )


# ---------------------------------------------------------------------------
# Laurent polynomials in a central variable z (half-integer exponents)


class ZLaurent:
    """Finite map from doubled z-exponents to torus elements.

    The exponent key ``2k`` stands for z^k with k in (1/2)Z; z is central,
    so coefficients commute past powers of z.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: TorusContext, terms: Mapping[int, TorusElement]):
        self.ctx = ctx
        self.terms = {int(d): el for d, el in terms.items() if not el.is_zero()}

    @classmethod
    def zero(cls, ctx: TorusContext) -> "ZLaurent":
        return cls(ctx, {})

    @classmethod
    def term(cls, el: TorusElement, doubled_exp: int) -> "ZLaurent":
        return cls(el.ctx, {doubled_exp: el})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZLaurent)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("ZLaurent is not hashable")

    def __add__(self, other: "ZLaurent") -> "ZLaurent":
        out = dict(self.terms)
        for d, el in other.terms.items():
            out[d] = out[d] + el if d in out else el
        return ZLaurent(self.ctx, out)

    def __neg__(self) -> "ZLaurent":
        return ZLaurent(self.ctx, {d: -el for d, el in self.terms.items()})

    def __sub__(self, other: "ZLaurent") -> "ZLaurent":
        return self + (-other)

    def __mul__(self, other: "ZLaurent") -> "ZLaurent":
        out: dict[int, TorusElement] = {}
        for d1, e1 in self.terms.items():
            for d2, e2 in other.terms.items():
                d = d1 + d2
                p = e1 * e2
                out[d] = out[d] + p if d in out else p
        return ZLaurent(self.ctx, out)

    def coeff(self, doubled_exp: int) -> TorusElement:
        return self.terms.get(doubled_exp, self.ctx.zero())

    def support(self) -> list[int]:
        return sorted(self.terms)

    def z_inverted(self) -> "ZLaurent":
        """Substitute z -> 1/z."""
        return ZLaurent(self.ctx, {-d: el for d, el in self.terms.items()})

    def scaled(self, factor: int) -> "ZLaurent":
        return ZLaurent(self.ctx, {d: el.q_shift(0, factor) for d, el in self.terms.items()})

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for d in self.support():
            exp = Fraction(d, 2)
            bits.append(f"({self.terms[d]!r}) z^{exp}")
        return " + ".join(bits)
