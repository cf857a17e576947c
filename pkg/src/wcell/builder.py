"""Construction of the left-cell graph on STD(lam) without KL polynomials.

The graph has one vertex per standard tableau of shape lam, coloured by its
descent set.  Three classes of weights are populated:

  (a) mu(u, t) = mu(t, u) = 1 for every dual Knuth move between u and t
      (the simple edges);
  (b) mu(u, t) = 1, mu(t, u) = 0 whenever u = s_i t > t with D(t) strictly
      contained in D(u) (the covers that are not dual Knuth moves);
  (c) for every probable pair -- u < t in dominance with D(t) strictly
      contained in D(u) -- the weight is forced by the polygon rule, and
      mu_probable evaluates the forcing identity.

Every other weight is zero.  The probable-pair identity refers only to
weights whose target tableau is lexicographically smaller than t, provided
the pair is first replaced by its canonical favourable representative, so
the table is filled one lex-column at a time.  Within a column the pairs
are independent: nothing reads the column being written.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import knuth
from . import tableaux as tb
from . import wgraph as wg
from .tableaux import StandardTableau


@dataclass
class MuTable:
    """Sparse weight table over lex-indexed standard tableaux of one shape.

    ``cols[t][u]`` holds mu(u, t) for tableau indices u, t; absent entries
    are zero.  Lookups made on behalf of a probable-pair evaluation assert
    that the referenced column lies strictly below the pair's own column in
    the lexicographic order, which is the well-foundedness of the schedule.
    """

    tabs: tuple[StandardTableau, ...]
    index: dict[StandardTableau, int] = field(init=False)
    cols: dict[int, dict[int, int]] = field(init=False)

    def __post_init__(self):
        self.index = {t: i for i, t in enumerate(self.tabs)}
        self.cols = {}

    def get(self, u: int, t: int) -> int:
        return self.cols.get(t, {}).get(u, 0)

    def set(self, u: int, t: int, w: int) -> None:
        if u == t:
            raise ValueError("no self-weights")
        if w:
            self.cols.setdefault(t, {})[u] = w
        else:
            self.cols.get(t, {}).pop(u, None)

    def column(self, t: int) -> dict[int, int]:
        return self.cols.get(t, {})


def _checked_get(table: MuTable, u: int, t: int, limit: int) -> int:
    if t >= limit:
        raise AssertionError(
            f"schedule violation: lookup of column {t} while building column {limit}"
        )
    return table.get(u, t)


def mu_probable(u: StandardTableau, t: StandardTableau, table: MuTable, rep=None) -> int:
    """Weight mu(u, t) of a probable pair, via the polygon-rule identity.

    The pair is replaced by a favourable representative (u0, t0); with i the
    restriction number and j the largest strong descent of t0, the identity
    eliminates the unknown from the equality of alternating path sums of
    length two (when the generators i and j commute, and in the commuting
    j - i = 1 subcase) or of length three (otherwise).  Every weight it
    consults has target lexicographically below t, so it is already final.

    A representative from the favourable set may be passed explicitly; the
    result does not depend on the choice.
    """
    limit = table.index[t]
    u0, t0 = rep if rep is not None else knuth.favourable_rep(u, t)
    i = knuth.restriction_number(u0, t0)
    sd = sorted(t0.descent_data().sd)
    if not sd:
        raise AssertionError("probable pair with strong-descent-free target")
    j = sd[-1]
    if i >= j:
        raise AssertionError("restriction number must precede max strong descent")
    iu0 = table.index[u0]
    tabs = table.tabs
    if j - i >= 2 or t0.col_of(j - 1) < t0.col_of(j + 1):
        h = i
        v = tb.swap_adjacent(t0, j)
        iv = table.index[v]
        it0 = table.index[t0]
        if iv >= limit:
            raise AssertionError("schedule violation: column of s_j t0 not final")
        total = 0
        for ix, w_xv in table.column(iv).items():
            pattern = tabs[ix].descents & {h, j}
            if pattern == {h}:
                total += w_xv * _checked_get(table, iu0, ix, limit)
            elif pattern == {j} and ix != it0:
                total -= w_xv * _checked_get(table, iu0, ix, limit)
        return total
    if t0.col_of(j - 1) == t0.col_of(j + 1):
        raise AssertionError("entries j-1 and j+1 cannot share a column here")
    v = tb.swap_adjacent(t0, j)
    w = tb.swap_adjacent(v, j - 1)
    iv = table.index[v]
    iw = table.index[w]
    if iw >= limit:
        raise AssertionError("schedule violation: column of s_{j-1} s_j t0 not final")
    total = 0
    for iy, w_yw in table.column(iw).items():
        pattern = tabs[iy].descents & {j - 1, j}
        if pattern == {j}:
            nb = table.index[knuth.k_neighbour(tabs[iy], j - 1)]
            total += w_yw * _checked_get(table, iu0, nb, limit)
        elif pattern == {j - 1} and iy != iv:
            nb = table.index[knuth.k_neighbour(tabs[iy], j - 1)]
            total -= w_yw * _checked_get(table, iu0, nb, limit)
    return total


def probable_pairs(tabs) -> list[tuple[int, int]]:
    """Index pairs (u, t) with u < t in dominance and D(t) strictly inside D(u).

    Grouped by target, targets in increasing lexicographic order.
    """
    by_mask: dict[int, list[int]] = {}
    masks = []
    for idx, t in enumerate(tabs):
        mask = 0
        for d in t.descents:
            mask |= 1 << d
        masks.append(mask)
        by_mask.setdefault(mask, []).append(idx)
    n = tabs[0].size if tabs else 0
    universe = ((1 << n) - 1) & ~1  # bits 1..n-1
    out = []
    for it, t in enumerate(tabs):
        mask = masks[it]
        free = universe & ~mask
        sub = free
        while sub:
            for iu in by_mask.get(mask | sub, ()):
                if tb.extended_dominance_leq(tabs[iu], t) and iu != it:
                    out.append((iu, it))
            sub = (sub - 1) & free
    return out


def build_cell_graph(lam) -> wg.SColoredGraph:
    """The W-graph of the left cell attached to the partition lam.

    Vertices are STD(lam) in increasing lexicographic order, labelled
    (0, tableau); the output is strongly connected, satisfies all four
    combinatorial rules, and is ordered.
    """
    lam = tb.check_partition(lam) if lam else ()
    tabs = tuple(tb.enumerate_std(lam))
    table = MuTable(tabs)
    # (a) simple edges from dual Knuth moves
    for it, t in enumerate(tabs):
        for mv in knuth.dk_moves_from(t):
            other = mv.target if mv.source == t else mv.source
            io = table.index[other]
            table.set(io, it, 1)
            table.set(it, io, 1)
    # (b) covers u = s_i t > t with descents strictly growing
    for it, t in enumerate(tabs):
        dt = t.descents
        for i in t.descent_data().sa:
            u = tb.swap_adjacent(t, i)
            if dt < u.descents:
                table.set(table.index[u], it, 1)
    # (c) probable pairs, one lex-column at a time
    for iu, it in probable_pairs(tabs):
        w = mu_probable(tabs[iu], tabs[it], table)
        if w:
            table.set(iu, it, w)
    tau = [t.descents for t in tabs]
    mu = {
        (u, t): w
        for t, col in table.cols.items()
        for u, w in col.items()
    }
    labels = tuple((0, t) for t in tabs)
    return wg.SColoredGraph(sum(lam) if lam else 1, tau, mu, labels)
