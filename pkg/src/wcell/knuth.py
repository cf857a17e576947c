"""Dual Knuth moves and the pair machinery built on them.

A dual Knuth move exchanges two consecutive entries of a standard tableau
subject to a descent-pattern constraint; these moves are exactly the simple
edges of the cell graphs built elsewhere in this package.  On top of the
moves this module provides k-neighbours, restriction numbers of tableau
pairs, favourable pairs with the witness set F(u, t), approximates A(u, t),
and paired dual Knuth equivalence classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tableaux as tb
from .tableaux import StandardTableau, SkewShape


@dataclass(frozen=True)
class DKMove:
    """A directed dual Knuth move source -> target, target = s_index * source."""

    source: StandardTableau
    target: StandardTableau
    kind: int  # 1 or 2
    index: int


def _move_kinds(a: StandardTableau, b: StandardTableau, k: int):
    """Kinds i such that a ->*i b via the exchange of k and k+1."""
    da, db = a.descents, b.descents
    kinds = []
    # first kind: pattern at {k-1, k} flips from {k-1} to {k}
    if k - 1 >= a.min_entry:
        if da & {k - 1, k} == {k - 1} and db & {k - 1, k} == {k}:
            kinds.append(1)
    # second kind: pattern at {k, k+1} flips from {k+1} to {k}
    if k + 1 <= a.max_entry - 1:
        if da & {k, k + 1} == {k + 1} and db & {k, k + 1} == {k}:
            kinds.append(2)
    return kinds


def dk_moves_from(t: StandardTableau) -> list[DKMove]:
    """All dual Knuth moves with t as source or target."""
    moves = []
    dd = t.descent_data()
    for k in sorted(dd.sa | dd.sd):
        other = tb.swap_adjacent(t, k)
        for kind in _move_kinds(t, other, k):
            moves.append(DKMove(t, other, kind, k))
        for kind in _move_kinds(other, t, k):
            moves.append(DKMove(other, t, kind, k))
    return moves


def dk_neighbours(t: StandardTableau) -> list[StandardTableau]:
    """Tableaux joined to t by a dual Knuth move in either direction."""
    seen = []
    for mv in dk_moves_from(t):
        other = mv.target if mv.source == t else mv.source
        if other not in seen:
            seen.append(other)
    return seen


def is_dk_edge(u: StandardTableau, t: StandardTableau) -> bool:
    """Whether u and t are related by a single dual Knuth move."""
    if u.shape != t.shape or u.offset != t.offset:
        return False
    diff = [e for e in u.entries() if u.box_of(e) != t.box_of(e)]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return False
    k = diff[0]
    return bool(_move_kinds(u, t, k) or _move_kinds(t, u, k))


def k_neighbour(t: StandardTableau, k: int) -> StandardTableau:
    """The unique adjacent tableau with the opposite descent pattern at {k, k+1}.

    Requires exactly one of k, k+1 to be a descent of t, and k+2 to lie in
    the target of t.
    """
    d = t.descents
    if len(d & {k, k + 1}) != 1:
        raise ValueError(f"need exactly one of {k},{k+1} in the descent set")
    if not (t.min_entry <= k and k + 2 <= t.max_entry):
        raise ValueError(f"entries {k},{k+1},{k+2} must all lie in the target")
    ck, ck1, ck2 = t.col_of(k), t.col_of(k + 1), t.col_of(k + 2)
    if (ck < ck2 <= ck1) or (ck1 < ck2 <= ck):
        return tb.swap_adjacent(t, k)
    if (ck1 <= ck < ck2) or (ck2 <= ck < ck1):
        return tb.swap_adjacent(t, k + 1)
    raise ValueError(f"no neighbour at index {k}")  # unreachable for valid input


# ---------------------------------------------------------------------------
# pairs


def restriction_number(u: StandardTableau, t: StandardTableau) -> int:
    """Largest k such that the entries up to k occupy the same boxes in u and t."""
    if u.size != t.size or u.offset != t.offset:
        raise ValueError("pair must share the same target")
    for e in u.entries():
        if u.box_of(e) != t.box_of(e):
            return e - 1 - u.offset
    return u.size


def is_favourable(u: StandardTableau, t: StandardTableau) -> bool:
    """Whether the restriction number lies in the descent-set symmetric difference."""
    k = restriction_number(u, t)
    if k == u.size:
        return False
    return (k + u.offset) in (u.descents ^ t.descents)


def _between_boxes(xi, bu, bt):
    """xi-removable boxes lying between the addable boxes bu and bt."""
    g, p = bu
    h, q = bt
    out = []
    for d, m in tb.removable_boxes(xi):
        if (g > d >= h and p <= m < q) or (h > d >= g and q <= m < p):
            out.append((d, m))
    return out


def _graft(prefix: StandardTableau, t: StandardTableau, k: int) -> StandardTableau:
    """Replace the first k boxes of t by those of prefix (same shape below k)."""
    return StandardTableau(
        t.shape, prefix.boxes + t.boxes[k:], t.offset, _checked=True
    )


def _prefix_with_top(xi, box, fill) -> StandardTableau:
    """Fill [xi] minus {box} by `fill`, then put the top entry at box."""
    rest = list(xi)
    rest[box[1] - 1] -= 1
    base = fill(tb._trim(rest))
    return StandardTableau(SkewShape(xi), base.boxes + (box,), 0, _checked=True)


def favourable_set(u: StandardTableau, t: StandardTableau):
    """All favourable pairs obtained from (u, t) by rearranging the common prefix.

    Each member (v, x) keeps the parts of u and t above the restriction
    number k, agrees with them on a common prefix that places k on a
    removable box between the boxes of k+1, and is favourable.  The pair
    (u, t) itself is a member exactly when it is favourable.
    """
    if u == t:
        raise ValueError("favourable_set needs a pair of distinct tableaux")
    k = restriction_number(u, t)
    w = tb.restrict_leq(u, u.offset + k)
    xi = w.shape.outer
    bu = u.box_of(u.offset + k + 1)
    bt = t.box_of(t.offset + k + 1)
    out = []
    for box in sorted(_between_boxes(xi, bu, bt), key=lambda b: b[1]):
        for wp in tb.enumerate_std(xi):
            if wp.box_of(k) != box:
                continue
            out.append((_graft(wp, u, k), _graft(wp, t, k)))
    return out


def favourable_rep(u: StandardTableau, t: StandardTableau):
    """The canonical member of favourable_set(u, t).

    Deterministic choice: take the between-box of smallest column, fill the
    rest of the prefix shape minimally, and place k on the chosen box.
    """
    if u == t:
        raise ValueError("favourable_rep needs a pair of distinct tableaux")
    k = restriction_number(u, t)
    w = tb.restrict_leq(u, u.offset + k)
    xi = w.shape.outer
    bu = u.box_of(u.offset + k + 1)
    bt = t.box_of(t.offset + k + 1)
    boxes = _between_boxes(xi, bu, bt)
    if not boxes:
        raise ValueError("no removable box between the two addable boxes")
    box = min(boxes, key=lambda b: b[1])
    wp = _prefix_with_top(xi, box, tb.tau_min)
    return _graft(wp, u, k), _graft(wp, t, k)


def approximates(u: StandardTableau, t: StandardTableau):
    """Members of favourable_set placing k in column col_t(k+1) - 1.

    Nonempty exactly when col_u(k+1) < col_t(k+1), where k is the
    restriction number of the pair.
    """
    if u == t:
        raise ValueError("approximates needs a pair of distinct tableaux")
    k = restriction_number(u, t)
    e = u.offset + k
    if u.col_of(e + 1) >= t.col_of(e + 1):
        return []
    target_col = t.col_of(e + 1) - 1
    return [
        (v, x) for v, x in favourable_set(u, t) if x.col_of(e) == target_col
    ]


def _approximate_by_fill(u, t, fill):
    k = restriction_number(u, t)
    e = u.offset + k
    if u.col_of(e + 1) >= t.col_of(e + 1):
        raise ValueError("pair has no approximates")
    xi = tb.restrict_leq(u, e).shape.outer
    m = t.col_of(e + 1) - 1
    box = (xi[m - 1], m)
    wp = _prefix_with_top(xi, box, fill)
    return _graft(wp, u, k), _graft(wp, t, k)


def minimal_approximate(u: StandardTableau, t: StandardTableau):
    """The approximate whose prefix below k is the minimal filling."""
    return _approximate_by_fill(u, t, tb.tau_min)


def maximal_approximate(u: StandardTableau, t: StandardTableau):
    """The approximate whose prefix below k is the row-by-row filling."""
    return _approximate_by_fill(u, t, tb.tau_max)


# ---------------------------------------------------------------------------
# paired classes


def _moves_by_signature(t: StandardTableau):
    """(kind, index, direction) -> other endpoint, for all moves at t."""
    out = {}
    for mv in dk_moves_from(t):
        if mv.source == t:
            out[(mv.kind, mv.index, "out")] = mv.target
        else:
            out[(mv.kind, mv.index, "in")] = mv.source
    return out


def paired_classes(mu, lam):
    """Partition of STD(mu) x STD(lam) under simultaneous dual Knuth moves.

    Two pairs are equivalent when one maps to the other by dual Knuth moves
    of equal kind and index applied to both components at once.  Intended
    for small-n use; the class graph is explored by breadth-first search.
    """
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError("shapes must have equal size")
    left = tb.enumerate_std(mu)
    right = tb.enumerate_std(lam)
    pending = {(u, t) for u in left for t in right}
    classes = []
    while pending:
        seed = next(iter(pending))
        block = set()
        frontier = [seed]
        while frontier:
            pair = frontier.pop()
            if pair in block:
                continue
            block.add(pair)
            u, t = pair
            sig_u = _moves_by_signature(u)
            sig_t = _moves_by_signature(t)
            for sig, v in sig_u.items():
                x = sig_t.get(sig)
                if x is not None and (v, x) not in block:
                    frontier.append((v, x))
        pending -= block
        classes.append(frozenset(block))
    return classes
