"""Directed chip networks for types A_n and C_n on a cylinder.

A word's chips are glued left to right: one chip per negative letter
(slanted edge of weight 1), the diagonal chip, then one chip per
positive letter (slanted edge of weight c_k).  Type C chips carry a
mirrored copy of each short-letter slant in the upper half.  The left
and right boundaries are identified, so sources and sinks pair by row
and closed strands are enumerated as source-to-same-row paths that
cross the cut once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

from .torus import (
    CommutativeLaurent,
    TorusContext,
    TorusElement,
    classical_context,
    classical_monomial,
)
from .words import DoubleWord

Letters = tuple[tuple[int, int], ...]

FAMILY_CAP_ENV = "QTODA_MAX_FAMILIES"


def symmetrizers(kind: str, n: int) -> tuple[int, ...]:
    """d_1..d_n: all 1 for type A; the type C long root n carries 2."""
    if kind == "A":
        return (1,) * n
    if kind == "C":
        return (1,) * (n - 1) + (2,)
    raise ValueError(f"unknown type {kind!r}")


def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    """Cartan matrix with d_i C_ij = d_j C_ji for the d's above."""
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = -1
            c[i + 1][i] = -1
    if kind == "C" and n >= 2:
        c[n - 2][n - 1] = -1
        c[n - 1][n - 2] = -2
    return c


@dataclass(frozen=True)
class Network:
    kind: str
    n: int
    word: DoubleWord
    ctx: TorusContext
    row_lo: int
    row_hi: int

    @property
    def rows(self) -> range:
        return range(self.row_lo, self.row_hi + 1)

    @property
    def num_rows(self) -> int:
        return self.row_hi - self.row_lo + 1

    @property
    def num_chips(self) -> int:
        return 2 * self.n + 1

    def t_index(self, j: int) -> int:
        return j - 1

    def c_index(self, j: int) -> int:
        return self.n + j - 1

    # -- chip combinatorics ------------------------------------------------

    def chip_letter(self, pos: int) -> int:
        """Word letter at a chip position; 0 marks the diagonal chip."""
        if pos == self.n:
            return 0
        return self.word.letters[pos if pos < self.n else pos - 1]

    def diagonal_letters(self, row: int) -> Letters:
        n, kind = self.n, self.kind
        if kind == "A" or row <= n:
            out = []
            if row >= 2:
                out.append((self.t_index(row - 1), -1))
            if row <= n:
                out.append((self.t_index(row), 1))
            return tuple(out)
        out = []
        if 2 * n - row >= 1:
            out.append((self.t_index(2 * n - row), 1))
        out.append((self.t_index(2 * n + 1 - row), -1))
        return tuple(out)

    def slants(self, pos: int) -> list[tuple[int, int, Letters]]:
        """Slant transitions (row_from, row_to, letters) of a chip."""
        letter = self.chip_letter(pos)
        if letter == 0:
            return []
        k, n = abs(letter), self.n
        out: list[tuple[int, int, Letters]] = []
        if letter < 0:
            out.append((k + 1, k, ()))
            if self.kind == "C" and k < n:
                out.append((2 * n + 1 - k, 2 * n - k, ()))
        else:
            c = ((self.c_index(k), 1),)
            out.append((k, k + 1, c))
            if self.kind == "C" and k < n:
                out.append((2 * n - k, 2 * n + 1 - k, c))
        return out

    def transitions(self, pos: int) -> dict[int, list[tuple[int, Letters]]]:
        """Allowed row moves through one chip, restricted to the row range."""
        out: dict[int, list[tuple[int, Letters]]] = {}
        for r in self.rows:
            if self.chip_letter(pos) == 0:
                out[r] = [(r, self.diagonal_letters(r))]
            else:
                out[r] = [(r, ())]
        for r_from, r_to, letters in self.slants(pos):
            if r_from in out and self.row_lo <= r_to <= self.row_hi:
                out[r_from] = out[r_from] + [(r_to, letters)]
        return out

    def transition_table(self) -> list[dict[int, list[tuple[int, Letters]]]]:
        return [self.transitions(pos) for pos in range(self.num_chips)]


@dataclass(frozen=True)
class LabeledPath:
    """Closed strand through the cylinder cut at a fixed row.

    ``rows[i]`` is the row at chip boundary i; the strand starts and
    ends at the cut, so rows[0] == rows[-1] == source.  The label is
    (lowest row, source row).
    """

    source: int
    low: int
    rows: tuple[int, ...]
    letters: Letters

    @property
    def label(self) -> tuple[int, int]:
        return (self.low, self.source)

    def vertices(self) -> frozenset[tuple[int, int]]:
        m = len(self.rows) - 1
        return frozenset((i % m, r) for i, r in enumerate(self.rows))


def build_network(kind: str, word: DoubleWord) -> Network:
    """Assemble the cylinder network and its weight quantum torus."""
    if kind not in ("A", "C"):
        raise ValueError(f"unknown type {kind!r}")
    n = word.n
    rows = n + 1 if kind == "A" else 2 * n
    ctx = weight_context(kind, word)
    return Network(kind, n, word, ctx, 1, rows)


def weight_context(kind: str, word: DoubleWord) -> TorusContext:
    """Quantum torus on t_1..t_n, c_1..c_n.

    The t's are central among themselves, s(c_j, t_j) = -d_j, and
    s(c_j, c_k) is minus the quiver weight between the positive face
    vertices j and k of the word's cluster quiver.
    """
    n = word.n
    d = symmetrizers(kind, n)
    omega = face_weights(kind, word)
    names = tuple(f"t_{j}" for j in range(1, n + 1)) + tuple(
        f"c_{j}" for j in range(1, n + 1)
    )
    m = 2 * n
    skew = [[Fraction(0)] * m for _ in range(m)]
    for j in range(1, n + 1):
        skew[n + j - 1][j - 1] = Fraction(-d[j - 1])
        skew[j - 1][n + j - 1] = Fraction(d[j - 1])
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if j != k:
                skew[n + j - 1][n + k - 1] = -omega.get((j, k), Fraction(0))
    return TorusContext(names, tuple(tuple(row) for row in skew))


# ---------------------------------------------------------------------------
# cluster quiver weights read off the network faces


def _colored_row(word: DoubleWord, kind: str, n: int, r: int) -> list[tuple[int, str]]:
    """Slant endpoints on row r of the bottom n+1 rows, as (column, color).

    Orange marks a slant tail, black a slant head.  For type C the top
    boundary row n+1 also carries the mirror slants of letter n-1.
    """
    out = []
    if 1 <= r - 1 <= n:
        out.append((word.position(-(r - 1)), "or"))
        out.append((word.position(r - 1), "bk"))
    if r <= n:
        out.append((word.position(-r), "bk"))
        out.append((word.position(r), "or"))
    if kind == "C" and r == n + 1 and n >= 2:
        out.append((word.position(-(n - 1)), "bk"))
        out.append((word.position(n - 1), "or"))
    return sorted(out)


_ROW_RULES = {
    # (tail color, head color) -> (source side, weight); sides are "above"/"below"
    ("or", "bk"): ("above", Fraction(1)),
    ("bk", "or"): ("below", Fraction(1)),
    ("bl", "bk"): ("above", Fraction(1, 2)),
    ("bl", "or"): ("below", Fraction(1, 2)),
    ("bk", "rd"): ("below", Fraction(1, 2)),
    ("or", "rd"): ("above", Fraction(1, 2)),
}


def face_weights(kind: str, word: DoubleWord, disk: bool = False):
    """Antisymmetric quiver edge weights from the face-arrow rules.

    Cylinder mode returns weights on the labels -n..-1, 1..n.  Disk mode
    keeps the outer face of each strip split at the cut into frozen
    faces ("L", k) and ("R", k); amalgamating those pairs reproduces the
    cylinder weights.
    """
    n = word.n
    d = symmetrizers(kind, n)
    cols = {k: (word.position(-k), word.position(k)) for k in range(1, n + 1)}

    def face(k: int, col: Fraction):
        a, b = cols[k]
        if a < col < b:
            return -k
        if disk:
            return ("L", k) if col < a else ("R", k)
        return k

    weights: dict[tuple, Fraction] = {}

    def add(src, dst, w: Fraction):
        if src == dst:
            return
        weights[(src, dst)] = weights.get((src, dst), Fraction(0)) + w
        weights[(dst, src)] = weights.get((dst, src), Fraction(0)) - w

    # arrows across slanted edges: mid face to outer face, weight d_k each.
    # The down slant borders the outer face on its west, the up slant on
    # its east; on the cylinder both outer pieces are the face +k.
    for k in range(1, n + 1):
        west = ("L", k) if disk else k
        east = ("R", k) if disk else k
        add(-k, west, Fraction(d[k - 1]))
        add(-k, east, Fraction(d[k - 1]))

    # arrows across horizontal edges between adjacent strips
    top_row = n if kind == "A" else n + 1
    for r in range(2, top_row + 1):
        below_k = r - 1
        above_k = r if r <= n else n - 1
        if above_k < 1:
            continue
        verts = _colored_row(word, kind, n, r)
        chain = [(-Fraction(1), "bl")] + [(Fraction(c), col) for c, col in verts]
        chain.append((Fraction(2 * n + 1), "rd"))
        for (c1, col1), (c2, col2) in zip(chain, chain[1:]):
            rule = _ROW_RULES.get((col1, col2))
            if rule is None:
                continue
            side, w = rule
            mid = (c1 + c2) / 2
            f_below = face(below_k, mid)
            f_above = face(above_k, mid)
            if side == "above":
                add(f_above, f_below, w)
            else:
                add(f_below, f_above, w)

    return {k: v for k, v in weights.items() if v != 0}


# ---------------------------------------------------------------------------
# paths, families, Hamiltonians


def enumerate_labeled_paths(net: Network) -> list[LabeledPath]:
    """All closed strands, one cut crossing, grouped by (low, source) label.

    Raises if two distinct strands share a label; the correspondence
    machinery relies on labels determining strands uniquely.
    """
    paths: list[LabeledPath] = []
    table = net.transition_table()
    for source in net.rows:
        stack = [(0, source, (source,), ())]
        while stack:
            pos, row, rows, letters = stack.pop()
            if pos == net.num_chips:
                if row == source:
                    paths.append(
                        LabeledPath(source, min(rows), rows, letters)
                    )
                continue
            for row2, extra in table[pos][row]:
                stack.append((pos + 1, row2, rows + (row2,), letters + extra))
    seen: dict[tuple[int, int], LabeledPath] = {}
    for p in paths:
        if p.label in seen:
            raise RuntimeError(f"two distinct paths share label {p.label}")
        seen[p.label] = p
    return sorted(paths, key=lambda p: p.label)


def quantized_path_weight(net: Network, path: LabeledPath) -> TorusElement:
    """Weyl-ordered monomial on the letters collected along the strand."""
    return net.ctx.weyl(path.letters)


def path_families(net: Network, size: int):
    """Vertex-disjoint families with sources = sinks = I, |I| = size."""
    cap = int(os.environ.get(FAMILY_CAP_ENV, "1000000"))
    by_row: dict[int, list[LabeledPath]] = {}
    for p in enumerate_labeled_paths(net):
        by_row.setdefault(p.source, []).append(p)
    count = 0
    rows = [r for r in net.rows if r in by_row]
    for subset in combinations(rows, size):
        partial: list[list[LabeledPath]] = [[]]
        for r in subset:
            nxt = []
            for fam in partial:
                for p in by_row[r]:
                    pv = p.vertices()
                    if all(pv.isdisjoint(q.vertices()) for q in fam):
                        nxt.append(fam + [p])
            partial = nxt
        for fam in partial:
            count += 1
            if count > cap:
                raise RuntimeError(
                    f"family enumeration exceeded {FAMILY_CAP_ENV}={cap}"
                )
            yield tuple(fam)


def family_weight(net: Network, family) -> TorusElement:
    """Product of member weights, top row first."""
    acc = net.ctx.one()
    for p in sorted(family, key=lambda p: -p.source):
        acc = acc * quantized_path_weight(net, p)
    return acc


def network_hamiltonian(net: Network, i: int) -> TorusElement:
    """Sum over size-i vertex-disjoint families of their weights."""
    if not 1 <= i <= net.num_rows:
        raise ValueError(f"hamiltonian index {i} out of range")
    acc = net.ctx.zero()
    for fam in path_families(net, i):
        acc = acc + family_weight(net, fam)
    return acc


def subnetwork(net: Network, lo: int, hi: int) -> Network:
    """Induced network on rows lo..hi; edges leaving the range removed."""
    if not (net.row_lo <= lo <= hi <= net.row_hi):
        raise ValueError("row range out of bounds")
    return replace(net, row_lo=lo, row_hi=hi)


# ---------------------------------------------------------------------------
# classical transfer matrices (q -> 1 oracle)


def _classical_ctx(net: Network) -> TorusContext:
    return classical_context(net.ctx.names)


def classical_matrix(net: Network) -> list[list[CommutativeLaurent]]:
    """Path-sum matrix on the open (disk) network: entry (i,j) sums the
    commutative weights of all chip paths from source row i to sink j."""
    ctx = _classical_ctx(net)
    rows = list(net.rows)
    zero = CommutativeLaurent(ctx, {})
    # state: row -> accumulated Laurent, evolved chip by chip
    mat = []
    for src in rows:
        state = {src: classical_monomial(ctx, (0,) * ctx.rank)}
        for pos in range(net.num_chips):
            nxt: dict[int, CommutativeLaurent] = {}
            trans = net.transitions(pos)
            for row, val in state.items():
                for row2, letters in trans[row]:
                    vec = [0] * ctx.rank
                    for g, e in letters:
                        vec[g] += e
                    term = val * classical_monomial(ctx, vec)
                    nxt[row2] = nxt.get(row2, zero) + term
            state = nxt
        mat.append([state.get(r, zero) for r in rows])
    return mat


def reference_chip_matrices(net: Network) -> list[list[list[CommutativeLaurent]]]:
    """Transfer matrices of the displayed group elements, per chip."""
    ctx = _classical_ctx(net)
    rows = list(net.rows)
    size = len(rows)
    n = net.n

    def unit(vec=None):
        return classical_monomial(ctx, vec or (0,) * ctx.rank)

    def zero():
        return CommutativeLaurent(ctx, {})

    def gen(g, e=1):
        vec = [0] * ctx.rank
        vec[g] = e
        return classical_monomial(ctx, vec)

    mats = []
    for pos in range(net.num_chips):
        letter = net.chip_letter(pos)
        m = [[unit() if i == j else zero() for j in range(size)] for i in range(size)]
        if letter == 0:
            for i, r in enumerate(rows):
                vec = [0] * ctx.rank
                for g, e in net.diagonal_letters(r):
                    vec[g] += e
                m[i][i] = classical_monomial(ctx, vec)
        else:
            k = abs(letter)
            pairs = [(k + 1, k)] if letter < 0 else [(k, k + 1)]
            if net.kind == "C" and k < n:
                pairs.append(
                    (2 * n + 1 - k, 2 * n - k) if letter < 0 else (2 * n - k, 2 * n + 1 - k)
                )
            w = unit() if letter < 0 else gen(net.c_index(k))
            for a, b in pairs:
                if a in rows and b in rows:
                    m[rows.index(a)][rows.index(b)] = w
        mats.append(m)
    return mats


def matrix_product(mats):
    acc = mats[0]
    for m in mats[1:]:
        size = len(acc)
        nxt = []
        for i in range(size):
            row = []
            for j in range(size):
                cell = None
                for k in range(size):
                    term = acc[i][k] * m[k][j]
                    cell = term if cell is None else cell + term
                row.append(cell)
            nxt.append(row)
        acc = nxt
    return acc
