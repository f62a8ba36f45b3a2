"""Cluster seeds, quiver extraction from networks, mutation machinery.

A seed stores the exchange matrix over an arbitrary hashable index set
together with symmetrizers and a frozen subset.  Entries may be exact
rationals before amalgamation (the half-weight boundary arrows of the
face rules); cylinder seeds are integral.  Edge weights in the drawn
quiver are w_ij = eps_ij d_j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import sympy

from .network import Network, cartan_matrix, face_weights, symmetrizers
from .torus import MonomialMap, TorusContext, classical_context
from .words import DoubleWord


@dataclass(frozen=True)
class Seed:
    labels: tuple
    eps: dict
    d: dict
    frozen: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for i in self.labels:
            for j in self.labels:
                a = self.eps.get((i, j), Fraction(0))
                b = self.eps.get((j, i), Fraction(0))
                if a * self.d[j] != -b * self.d[i]:
                    raise ValueError(f"eps not skew-symmetrizable at {(i, j)}")

    def entry(self, i, j) -> Fraction:
        return self.eps.get((i, j), Fraction(0))

    def weight(self, i, j) -> Fraction:
        """Drawn edge weight w_ij = eps_ij d_j."""
        return self.entry(i, j) * self.d[j]

    def matrix(self, order=None):
        order = list(order or self.labels)
        return [[self.entry(i, j) for j in order] for i in order]

    def is_integral(self) -> bool:
        return all(
            v.denominator == 1
            for (i, j), v in self.eps.items()
            if not (i in self.frozen and j in self.frozen)
        )

    def relabeled(self, mapping: dict) -> "Seed":
        return Seed(
            tuple(mapping.get(l, l) for l in self.labels),
            {(mapping.get(i, i), mapping.get(j, j)): v for (i, j), v in self.eps.items()},
            {mapping.get(l, l): v for l, v in self.d.items()},
            frozenset(mapping.get(l, l) for l in self.frozen),
        )

    def canonical_key(self):
        """Lexicographically minimal encoding over d-preserving bijections.

        Vertices are first partitioned by (d, sorted row multiset) to cut
        the permutation search down; quivers are compared only up to
        relabeling.
        """
        labs = list(self.labels)
        sig = {}
        for i in labs:
            row = sorted(
                (self.entry(i, j), self.d[j]) for j in labs if j != i
            )
            sig[i] = (self.d[i], i in self.frozen, tuple(row))
        groups: dict = {}
        for i in labs:
            groups.setdefault(sig[i], []).append(i)
        blocks = [groups[k] for k in sorted(groups, key=repr)]

        best = None
        def assignments(bs):
            if not bs:
                yield []
                return
            head, *rest = bs
            for perm in permutations(head):
                for tail in assignments(rest):
                    yield list(perm) + tail

        for picked in assignments(blocks):
            key = tuple(
                tuple(self.entry(picked[i], picked[j]) for j in range(len(picked)))
                for i in range(len(picked))
            )
            dkey = tuple(self.d[v] for v in picked)
            fkey = tuple(v in self.frozen for v in picked)
            cand = (dkey, fkey, key)
            if best is None or cand < best:
                best = cand
        return best

    def is_isomorphic(self, other: "Seed") -> bool:
        return self.canonical_key() == other.canonical_key()


def seed_from_word(kind: str, word: DoubleWord) -> Seed:
    """Cylinder cluster seed of a word: faces of the bottom rows with
    the arrow rules applied and the cut faces amalgamated."""
    n = word.n
    d_roots = symmetrizers(kind, n)
    omega = face_weights(kind, word)
    labels = tuple(range(-n, 0)) + tuple(range(1, n + 1))
    d = {l: d_roots[abs(l) - 1] for l in labels}
    eps = {}
    for (i, j), w in omega.items():
        val = Fraction(w, d[j])
        if val.denominator != 1:
            raise ValueError(f"non-integer exchange entry at {(i, j)}")
        eps[(i, j)] = val
    return Seed(labels, eps, d, frozenset())


def disk_seed_from_word(kind: str, word: DoubleWord) -> Seed:
    """Open-network seed: the outer face of each strip is split at the
    cut into frozen faces (\"L\", k), (\"R\", k); entries may be halves."""
    n = word.n
    d_roots = symmetrizers(kind, n)
    omega = face_weights(kind, word, disk=True)
    labels = tuple(range(-n, 0)) + tuple(
        lab for k in range(1, n + 1) for lab in (("L", k), ("R", k))
    )
    d = {}
    for l in labels:
        d[l] = d_roots[abs(l) - 1] if isinstance(l, int) else d_roots[l[1] - 1]
    eps = {}
    for (i, j), w in omega.items():
        eps[(i, j)] = Fraction(w, d[j])
    return Seed(labels, eps, d, frozenset(l for l in labels if not isinstance(l, int)))


def quiver_from_network(net: Network, disk: bool = False) -> Seed:
    if disk:
        return disk_seed_from_word(net.kind, net.word)
    return seed_from_word(net.kind, net.word)


def standard_exchange_matrix(kind: str, n: int):
    """The block matrix [[0, C], [-C, 0]] on labels -1..-n, 1..n."""
    c = cartan_matrix(kind, n)
    labels = [-(j + 1) for j in range(n)] + [j + 1 for j in range(n)]
    eps = {}
    for a in range(n):
        for b in range(n):
            if c[a][b]:
                eps[(-(a + 1), b + 1)] = Fraction(c[a][b])
                eps[(a + 1, -(b + 1))] = Fraction(-c[a][b])
    return labels, eps


def amalgamate(q1: Seed, q2: Seed, glue: list[tuple]) -> Seed:
    """Glue two seeds along pairs (i in q1, j in q2) of frozen indices.

    The glued vertex keeps the q1 label, its entries add, and it is
    unfrozen; all other entries carry over unchanged.
    """
    for i, j in glue:
        if i not in q1.frozen or j not in q2.frozen:
            raise ValueError("amalgamation indices must be frozen on both sides")
        if q1.d[i] != q2.d[j]:
            raise ValueError("amalgamation requires matching symmetrizers")
    rename = {j: i for i, j in glue}
    glued = {i for i, _ in glue}
    labels = tuple(q1.labels) + tuple(l for l in q2.labels if l not in rename)
    d = dict(q1.d)
    for l in q2.labels:
        if l not in rename:
            d[l] = q2.d[l]
    eps: dict = dict(q1.eps)
    for (i, j), v in q2.eps.items():
        key = (rename.get(i, i), rename.get(j, j))
        eps[key] = eps.get(key, Fraction(0)) + v
    frozen = (q1.frozen - glued) | frozenset(
        l for l in q2.frozen if l not in rename
    )
    return Seed(labels, {k: v for k, v in eps.items() if v != 0}, d, frozen)


def amalgamate_pairs(seed: Seed, pairs: list[tuple], new_labels: list) -> Seed:
    """Self-amalgamation: merge frozen vertex pairs inside one seed."""
    rename = {}
    for (a, b), lab in zip(pairs, new_labels):
        if a not in seed.frozen or b not in seed.frozen:
            raise ValueError("can only merge frozen vertices")
        rename[a] = lab
        rename[b] = lab
    labels = []
    for l in seed.labels:
        t = rename.get(l, l)
        if t not in labels:
            labels.append(t)
    d = {}
    for l in seed.labels:
        t = rename.get(l, l)
        if t in d and d[t] != seed.d[l]:
            raise ValueError("merged vertices have mismatched symmetrizers")
        d[t] = seed.d[l]
    eps: dict = {}
    for (i, j), v in seed.eps.items():
        a, b = rename.get(i, i), rename.get(j, j)
        if a == b:
            continue
        eps[(a, b)] = eps.get((a, b), Fraction(0)) + v
    frozen = frozenset(rename.get(l, l) for l in seed.frozen) - set(rename.values())
    return Seed(tuple(labels), {k: v for k, v in eps.items() if v != 0}, d, frozen)


# ---------------------------------------------------------------------------
# mutation


def mutate_seed(seed: Seed, k) -> Seed:
    """Matrix mutation at a mutable index; symmetrizers unchanged."""
    if k in seed.frozen:
        raise ValueError(f"cannot mutate at frozen index {k!r}")
    eps = {}
    for i in seed.labels:
        for j in seed.labels:
            if i == j:
                continue
            v = seed.entry(i, j)
            if i == k or j == k:
                nv = -v
            else:
                a, b = seed.entry(i, k), seed.entry(k, j)
                nv = v + (a * abs(b) + abs(a) * b) / 2
            if nv:
                eps[(i, j)] = nv
    return Seed(seed.labels, eps, seed.d, seed.frozen)


def swap_signs(seed: Seed, k: int) -> Seed:
    """Relabel k <-> -k, all other indices fixed."""
    return seed.relabeled({k: -k, -k: k})


def mutate_swap(seed: Seed, k: int) -> tuple[Seed, dict]:
    """Mutation at vertex -k followed by the k <-> -k relabeling.

    Returns the new seed and the relabeling applied, so callers can
    track index bookkeeping across sequences of moves.
    """
    out = swap_signs(mutate_seed(seed, -k), k)
    return out, {k: -k, -k: k}


def mutation_equivalent(s1: Seed, s2: Seed, max_depth: int, moves: str = "tau"):
    """Breadth-first search for a move sequence carrying s1 to s2 up to
    relabeling.  Returns the witness sequence or None.

    moves = "tau" explores the signed moves only; "tau,mu" adds plain
    mutations at every mutable vertex.
    """
    if len(s1.labels) != len(s2.labels):
        return None
    target = s2.canonical_key()
    start_key = s1.canonical_key()
    if start_key == target:
        return []
    ranks = sorted({abs(l) for l in s1.labels if isinstance(l, int)})
    seen = {start_key}
    frontier = [(s1, [])]
    for _ in range(max_depth):
        nxt = []
        for seed, hist in frontier:
            options: list[tuple[str, object, Seed]] = []
            if "tau" in moves:
                for k in ranks:
                    options.append(("tau", k, mutate_swap(seed, k)[0]))
            if "mu" in moves:
                for v in seed.labels:
                    if v not in seed.frozen:
                        options.append(("mu", v, mutate_seed(seed, v)))
            for tag, v, cand in options:
                key = cand.canonical_key()
                path = hist + [(tag, v)]
                if key == target:
                    return path
                if key not in seen:
                    seen.add(key)
                    nxt.append((cand, path))
        frontier = nxt
        if not frontier:
            break
    return None


# ---------------------------------------------------------------------------
# ensemble map and classical mutations (exact rational functions)


def seed_x_context(seed: Seed) -> TorusContext:
    return classical_context(tuple(f"X[{l}]" for l in seed.labels))


def seed_a_context(seed: Seed) -> TorusContext:
    return classical_context(tuple(f"A[{l}]" for l in seed.labels))


def ensemble_map(seed: Seed) -> MonomialMap:
    """X_i -> prod_j A_j^(eps_ji), exponents read down the columns."""
    xs = seed_x_context(seed)
    As = seed_a_context(seed)
    images = []
    for i in seed.labels:
        vec = [0] * len(seed.labels)
        for jj, j in enumerate(seed.labels):
            e = seed.entry(j, i)
            if e:
                if e.denominator != 1:
                    raise ValueError("ensemble map needs integral exchange entries")
                vec[jj] = int(e)
        images.append((Fraction(0), tuple(vec)))
    return MonomialMap(xs, As, tuple(images))


def _sym_vars(prefix: str, seed: Seed):
    return {l: sympy.Symbol(f"{prefix}_{l}", positive=True) for l in seed.labels}


def x_assignment(seed: Seed):
    return _sym_vars("x", seed)


def a_assignment(seed: Seed):
    return _sym_vars("a", seed)


def mutate_X_classical(assignment: dict, seed: Seed, k) -> dict:
    """Pullback of the new X-coordinates through the mutation at k:
    X_k -> X_k^-1 and X_i -> X_i X_k^[eps_ki]+ (1 + X_k)^(-eps_ki)."""
    out = {}
    xk = assignment[k]
    for i in seed.labels:
        if i == k:
            out[i] = 1 / xk
            continue
        e = seed.entry(k, i)
        if e.denominator != 1:
            raise ValueError("classical mutation needs integral entries")
        e = int(e)
        out[i] = sympy.cancel(
            assignment[i] * xk ** max(e, 0) * (1 + xk) ** (-e)
        )
    return out


def mutate_A_classical(assignment: dict, seed: Seed, k) -> dict:
    """A_k -> A_k^-1 (prod A_j^[eps_jk]+ + prod A_j^[-eps_jk]+)."""
    out = dict(assignment)
    plus = sympy.Integer(1)
    minus = sympy.Integer(1)
    for j in seed.labels:
        e = seed.entry(j, k)
        if e.denominator != 1:
            raise ValueError("classical mutation needs integral entries")
        e = int(e)
        if e > 0:
            plus *= assignment[j] ** e
        elif e < 0:
            minus *= assignment[j] ** (-e)
    out[k] = sympy.cancel((plus + minus) / assignment[k])
    return out


def ensemble_substitution(seed: Seed, a_vals: dict) -> dict:
    """Evaluate the ensemble map on an A-assignment."""
    out = {}
    for i in seed.labels:
        expr = sympy.Integer(1)
        for j in seed.labels:
            e = seed.entry(j, i)
            if e:
                expr *= a_vals[j] ** int(e)
        out[i] = expr
    return out


def check_ensemble_naturality(seed: Seed, k) -> bool:
    """mu_k^X after the ensemble map equals the ensemble map of the
    mutated seed after mu_k^A, as exact rational functions."""
    a_vals = a_assignment(seed)
    lhs = mutate_X_classical(ensemble_substitution(seed, a_vals), seed, k)
    mutated = mutate_seed(seed, k)
    rhs = ensemble_substitution(mutated, mutate_A_classical(a_vals, seed, k))
    return all(
        sympy.simplify(lhs[i] - rhs[i]) == 0 for i in seed.labels
    )


# ---------------------------------------------------------------------------
# quantum mutation, kept factored


@dataclass(frozen=True)
class BinomialFactor:
    """(1 + q^r X)^(exponent) with X a torus monomial."""

    qpow: Fraction
    vec: tuple[int, ...]
    exponent: int


@dataclass(frozen=True)
class FactoredExpression:
    ctx: TorusContext
    monomial_vec: tuple[int, ...]
    factors: tuple[BinomialFactor, ...]

    def specialize_classical(self, assignment: dict):
        """q -> 1 as a sympy rational function; assignment maps each
        generator name to a sympy symbol."""
        expr = sympy.Integer(1)
        for name, e in zip(self.ctx.names, self.monomial_vec):
            if e:
                expr *= assignment[name] ** e
        for f in self.factors:
            base = sympy.Integer(1)
            for name, e in zip(self.ctx.names, f.vec):
                if e:
                    base *= assignment[name] ** e
            expr *= (1 + base) ** f.exponent
        return sympy.cancel(expr)


def quantum_mutate(seed: Seed, k, i) -> FactoredExpression:
    """Image of X_i under the quantum mutation at k, as a factored
    expression: X_k^-1 at i = k, otherwise X_i times binomial factors
    (1 + q_i^(2r-1) X_k^(+-1))^(+-1) with q_i = q^(d_i)."""
    if k in seed.frozen:
        raise ValueError("cannot mutate at a frozen index")
    ctx = seed_x_context(seed)
    pos = {l: idx for idx, l in enumerate(seed.labels)}

    def basis(l, power=1):
        v = [0] * len(seed.labels)
        v[pos[l]] = power
        return tuple(v)

    if i == k:
        return FactoredExpression(ctx, basis(k, -1), ())
    e = seed.entry(k, i)
    if e.denominator != 1:
        raise ValueError("quantum mutation needs integral entries")
    e = int(e)
    d_i = seed.d[i]
    factors = []
    if e <= 0:
        for r in range(1, -e + 1):
            factors.append(BinomialFactor(Fraction(d_i * (2 * r - 1)), basis(k), 1))
    else:
        for r in range(1, e + 1):
            factors.append(BinomialFactor(Fraction(d_i * (2 * r - 1)), basis(k, -1), -1))
    return FactoredExpression(ctx, basis(i), tuple(factors))
