"""Exact Hecke-algebra arithmetic and the Kazhdan-Lusztig oracle.

Everything here works over Z[q, q^-1] with the quadratic relation
H_s^2 = 1 + (q - q^-1) H_s.  The canonical basis elements C_w are computed
by the usual recursion C_{sw} = C_s C_w - sum mu(y, w) C_y, which yields the
coefficient polynomials h_{y,w} in q^-1 Z[q^-1], the mu values as their
q^-1 coefficients, and the classical polynomials P_{y,w} after a change of
variable.  None of this is consulted by the cell builder; it exists to
validate builder output on small ranks.

Graphs produced here store only weights that define arcs (the weight is
dropped when tau(u) is contained in tau(v)), since other entries do not
affect the module structure; this makes exact graph comparison against the
builder meaningful.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import rsk
from . import tableaux as tb
from . import wgraph as wg
from .laurent import LaurentPolynomial, ONE, Q, QINV
from .permutations import (
    Permutation,
    all_permutations,
    apply_s,
    left_descents,
    length,
)

DEFAULT_ORACLE_MAX = 6


def oracle_bound() -> int:
    return int(os.environ.get("WCELL_ORACLE_MAX", DEFAULT_ORACLE_MAX))


class OracleBoundError(ValueError):
    pass


# ---------------------------------------------------------------------------
# W-graph module matrices and relation checking


def module_matrices(g: wg.SColoredGraph):
    """One sparse matrix per generator, columns over LaurentPolynomial.

    The column of v holds -q^-1 v when s colours v, and otherwise
    q v plus mu(u, v) u for every u coloured by s.
    """
    mats = []
    minus_qinv = -QINV
    for s in range(1, g.n):
        cols = []
        for v in g.vertices():
            if s in g.tau[v]:
                col = {v: minus_qinv}
            else:
                col = {v: Q}
                for u, w in g.column(v).items():
                    if s in g.tau[u]:
                        col[u] = col.get(u, LaurentPolynomial(0)) + w
            cols.append(col)
        mats.append(cols)
    return mats


def _apply(mat, col):
    """Matrix times a sparse column vector."""
    out: dict[int, LaurentPolynomial] = {}
    for u, coeff in col.items():
        for x, entry in mat[u].items():
            acc = out.get(x)
            acc = entry * coeff if acc is None else acc + entry * coeff
            if acc.is_zero():
                out.pop(x, None)
            else:
                out[x] = acc
    return out


def _compose(mat_a, mat_b):
    """Columns of A applied to each column of B."""
    return [_apply(mat_a, col) for col in mat_b]


def _mats_equal(mat_a, mat_b):
    for v, (ca, cb) in enumerate(zip(mat_a, mat_b)):
        keys = set(ca) | set(cb)
        for u in keys:
            pa = ca.get(u, LaurentPolynomial(0))
            pb = cb.get(u, LaurentPolynomial(0))
            if pa != pb:
                return (u, v, pa, pb)
    return None


def verify_hecke_relations(g: wg.SColoredGraph) -> wg.CheckReport:
    """Quadratic, commuting and braid identities for the generator matrices."""
    mats = module_matrices(g)
    bad = []
    gap = Q - QINV
    for s, mat in enumerate(mats, start=1):
        square = _compose(mat, mat)
        expect = []
        for v in g.vertices():
            col = {u: p * gap for u, p in mat[v].items()}
            col[v] = col.get(v, LaurentPolynomial(0)) + ONE
            expect.append({u: p for u, p in col.items() if not p.is_zero()})
        witness = _mats_equal(square, expect)
        if witness:
            bad.append(("quadratic", s, *witness))
    for s in range(1, g.n - 1):
        for t in range(s + 1, g.n):
            a, b = mats[s - 1], mats[t - 1]
            if t - s >= 2:
                witness = _mats_equal(_compose(a, b), _compose(b, a))
                if witness:
                    bad.append(("commuting", s, t, *witness))
            else:
                aba = _compose(a, _compose(b, a))
                bab = _compose(b, _compose(a, b))
                witness = _mats_equal(aba, bab)
                if witness:
                    bad.append(("braid", s, t, *witness))
    return wg.CheckReport("hecke-relations", not bad, tuple(bad[:10]))


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig table


@dataclass(frozen=True)
class KLTable:
    """Canonical-basis coefficients for S_n.

    ``h[w][y]`` is the coefficient of the standard basis element indexed by
    y in the canonical basis element of w, stored as a raw exponent ->
    coefficient dict.  ``mu_pairs[(y, w)]`` holds the nonzero mu values for
    y < w.
    """

    n: int
    h: dict
    mu_pairs: dict
    lengths: dict

    def mu(self, y: Permutation, w: Permutation) -> int:
        if y == w:
            return 0
        if self.lengths[y] > self.lengths[w]:
            y, w = w, y
        return self.mu_pairs.get((y, w), 0)

    def kl_polynomial(self, y: Permutation, w: Permutation) -> LaurentPolynomial:
        """Classical P_{y,w}, in the classical variable (nonnegative powers).

        Zero when y is not below w in the Bruhat order; P_{w,w} = 1.
        """
        if y == w:
            return ONE
        hy = self.h.get(w, {}).get(y)
        if hy is None:
            return LaurentPolynomial(0)
        delta = self.lengths[w] - self.lengths[y]
        coeffs = {}
        for e, c in hy.items():
            k2 = e + delta
            if k2 < 0 or k2 % 2:
                raise AssertionError("canonical coefficient fails the parity bound")
            coeffs[k2 // 2] = c
        return LaurentPolynomial(coeffs)

    def bruhat_below(self, w: Permutation):
        return self.h[w].keys()


def _shift_add(acc: dict, h: dict, k: int, scale: int = 1) -> None:
    for e, c in h.items():
        e2 = e + k
        s = acc.get(e2, 0) + scale * c
        if s:
            acc[e2] = s
        else:
            del acc[e2]


@lru_cache(maxsize=None)
def kl_table(n: int, max_n: int | None = None) -> KLTable:
    """Full canonical-basis table for S_n via the C_s C_w recursion."""
    bound = oracle_bound() if max_n is None else max_n
    if n > bound:
        raise OracleBoundError(
            f"n={n} exceeds the oracle bound {bound}; raise WCELL_ORACLE_MAX to override"
        )
    elements = sorted(all_permutations(n), key=length)
    lengths = {w: length(w) for w in elements}
    h: dict[Permutation, dict[Permutation, dict[int, int]]] = {}
    mu_pairs: dict[tuple[Permutation, Permutation], int] = {}
    for w in elements:
        lw = lengths[w]
        if lw == 0:
            h[w] = {w: {0: 1}}
            continue
        s = min(left_descents(w))
        v = apply_s(s, w)
        cv = h[v]
        acc: dict[Permutation, dict[int, int]] = {}
        for y, hy in cv.items():
            sy = apply_s(s, y)
            up = lengths[sy] > lengths[y]
            dst = acc.setdefault(sy, {})
            _shift_add(dst, hy, 0)
            if not dst:
                del acc[sy]
            dst = acc.setdefault(y, {})
            _shift_add(dst, hy, -1 if up else 1)
            if not dst:
                del acc[y]
        for y, hy in cv.items():
            m = hy.get(-1, 0)
            if m and lengths[apply_s(s, y)] < lengths[y]:
                for z, hz in h[y].items():
                    dst = acc.setdefault(z, {})
                    _shift_add(dst, hz, 0, -m)
                    if not dst:
                        del acc[z]
        if acc.get(w) != {0: 1}:
            raise AssertionError("canonical recursion lost unitriangularity")
        h[w] = acc
        for y, hy in acc.items():
            m = hy.get(-1, 0)
            if m and y != w:
                mu_pairs[(y, w)] = m
    return KLTable(n, h, mu_pairs, lengths)


def kl_table_slow(n: int) -> KLTable:
    """Independent construction by inverting the bar involution directly.

    Expands bar(H_w) over the standard basis, then solves the triangular
    bar-invariance equations for coefficients in q^-1 Z[q^-1].  Exponential
    and meant only to cross-check kl_table at very small n.
    """
    elements = sorted(all_permutations(n), key=length)
    lengths = {w: length(w) for w in elements}
    # r[w][y]: expansion of bar(H_w)
    r: dict[Permutation, dict[Permutation, dict[int, int]]] = {}
    for w in elements:
        if lengths[w] == 0:
            r[w] = {w: {0: 1}}
            continue
        s = min(left_descents(w))
        v = apply_s(s, w)
        acc: dict[Permutation, dict[int, int]] = {}
        # bar(H_w) = (H_s - (q - q^-1)) bar(H_v); the H_y terms cancel when sy < y
        for y, ry in r[v].items():
            sy = apply_s(s, y)
            dst = acc.setdefault(sy, {})
            _shift_add(dst, ry, 0)
            if not dst:
                del acc[sy]
            if lengths[sy] > lengths[y]:
                dst = acc.setdefault(y, {})
                _shift_add(dst, ry, 1, -1)
                _shift_add(dst, ry, -1, 1)
                if not dst:
                    del acc[y]
        r[w] = acc
    bruhat_lists = {w: sorted(r[w], key=lengths.get, reverse=True) for w in elements}
    h: dict[Permutation, dict[Permutation, dict[int, int]]] = {}
    mu_pairs: dict[tuple[Permutation, Permutation], int] = {}
    for w in elements:
        hw: dict[Permutation, dict[int, int]] = {w: {0: 1}}
        for y in bruhat_lists[w]:
            if y == w:
                continue
            # f = sum over y < z <= w of r[z][y] * bar(h[z][w])
            f: dict[int, int] = {}
            for z, hz in hw.items():
                rz = r[z].get(y)
                if rz is None:
                    continue
                for e1, c1 in rz.items():
                    for e2, c2 in hz.items():
                        e = e1 - e2
                        s2 = f.get(e, 0) + c1 * c2
                        if s2:
                            f[e] = s2
                        else:
                            del f[e]
            # h - bar(h) = f with h supported in negative exponents
            hy = {e: c for e, c in f.items() if e < 0}
            if any(f.get(-e, 0) != -c for e, c in hy.items()) or f.get(0, 0):
                raise AssertionError("bar-invariance system is inconsistent")
            if hy:
                hw[y] = hy
        h[w] = hw
        for y, hy in hw.items():
            m = hy.get(-1, 0)
            if m and y != w:
                mu_pairs[(y, w)] = m
    return KLTable(n, h, mu_pairs, lengths)


# ---------------------------------------------------------------------------
# oracle graphs


def _live_mu(tau, mu):
    return {
        (u, v): w for (u, v), w in mu.items() if w and not tau[u] <= tau[v]
    }


def kl_left_cell_graph(lam, max_n: int | None = None) -> wg.SColoredGraph:
    """The left-cell graph on the reading words of STD(lam), labelled by tableaux.

    Vertices follow the lexicographic order of the tableaux, colours are
    left descent sets, and weights come from the mu table, symmetrised and
    then restricted to pairs that actually define arcs.
    """
    lam = tb.check_partition(lam)
    n = sum(lam)
    table = kl_table(n, max_n)
    tabs = tb.enumerate_std(lam)
    words = [tb.word(t) for t in tabs]
    tau = [left_descents(w) for w in words]
    mu: dict[tuple[int, int], int] = {}
    for a in range(len(tabs)):
        for b in range(len(tabs)):
            if a == b:
                continue
            m = table.mu(words[a], words[b])
            if m:
                mu[(a, b)] = m
    labels = tuple((0, t) for t in tabs)
    return wg.SColoredGraph(n, tau, _live_mu(tau, mu), labels)


def kl_regular_graph(n: int, max_n: int | None = None) -> wg.SColoredGraph:
    """The full left W-graph of S_n, labelled by Robinson-Schensted pairs.

    Vertex labels are (recording-class index, insertion tableau); weights
    are symmetrised mu values restricted to arcs.
    """
    table = kl_table(n, max_n)
    elements = sorted(all_permutations(n), key=lambda w: w.images)
    tau = [left_descents(w) for w in elements]
    pairs = [rsk.rs(w) for w in elements]
    q_index: dict = {}
    for _p, qtab in pairs:
        q_index.setdefault(qtab, len(q_index))
    labels = tuple((q_index[qtab], p) for p, qtab in pairs)
    mu: dict[tuple[int, int], int] = {}
    for a, wa in enumerate(elements):
        for b, wb in enumerate(elements):
            if a == b:
                continue
            m = table.mu(wa, wb)
            if m:
                mu[(a, b)] = m
    return wg.SColoredGraph(n, tau, _live_mu(tau, mu), labels)


def graphs_equal_under(g1: wg.SColoredGraph, g2: wg.SColoredGraph, bijection) -> bool:
    """Exact equality of colours and weights under a vertex bijection g1 -> g2."""
    if g1.num_vertices != g2.num_vertices:
        return False
    image = [bijection[v] for v in g1.vertices()]
    if sorted(image) != list(g2.vertices()):
        raise ValueError("not a bijection onto the second vertex set")
    if g1.n != g2.n:
        return False
    for v in g1.vertices():
        if g1.tau[v] != g2.tau[image[v]]:
            return False
    mapped = {(image[u], image[v]): w for (u, v), w in g1.mu.items()}
    return mapped == g2.mu
