"""Brute-force reference implementations used only as test oracles.

Everything here is deliberately naive and independent of the library code
paths it checks: orders come from transitive closures, path sums from
explicit path enumeration, tableau counts from enumeration of fillings.
"""

from itertools import permutations as itperm

from wcell import tableaux as tb
from wcell.permutations import Permutation, all_permutations, apply_s, length


def brute_partitions(n):
    """Weakly decreasing positive tuples summing to n, by filtering."""
    if n == 0:
        return [()]
    out = set()

    def rec(rest, prefix):
        if rest == 0:
            out.add(prefix)
            return
        for p in range(1, rest + 1):
            if not prefix or p <= prefix[-1]:
                rec(rest - p, prefix + (p,))

    rec(n, ())
    return sorted(out, reverse=True)


def compositions(n, max_parts):
    """Positive-part compositions of n with at most max_parts parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        if max_parts >= 1:
            for rest in compositions(n - first, max_parts - 1):
                yield (first,) + rest


def lex_geq_composition(lam, mu):
    """lam leads mu: equal, or the first differing part of lam is smaller."""
    if lam == mu:
        return True
    k = 0
    while k < max(len(lam), len(mu)):
        a = lam[k] if k < len(lam) else 0
        b = mu[k] if k < len(mu) else 0
        if a != b:
            return a < b
        k += 1
    return True


def bruhat_closure(n):
    """All Bruhat relations of S_n from the transposition generation.

    Returns a set of image-tuples pairs (x, y) with x <= y.
    """
    elems = list(all_permutations(n))
    lengths = {w: length(w) for w in elems}
    edges = {w: [] for w in elems}
    for w in elems:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                img = list(w.images)
                # y = t_{ij} w : swap the values i and j
                for k, v in enumerate(img):
                    if v == i:
                        img[k] = j
                    elif v == j:
                        img[k] = i
                y = Permutation(img)
                if lengths[y] > lengths[w]:
                    edges[w].append(y)
    relation = set()
    for w in elems:
        seen = {w}
        frontier = [w]
        while frontier:
            x = frontier.pop()
            for y in edges[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        for y in seen:
            relation.add((w.images, y.images))
    return relation


def dual_knuth_classes_on_group(n):
    """Equivalence classes of the two descent-pattern relations on S_n."""
    from wcell.permutations import left_descents

    elems = list(all_permutations(n))
    adj = {w: set() for w in elems}
    for x in elems:
        lx = left_descents(x)
        for k in range(1, n - 1):
            # first kind: x ~ s_{k+1} x
            y = apply_s(k + 1, x)
            if lx & {k, k + 1} == {k} and left_descents(y) & {k, k + 1} == {k + 1}:
                adj[x].add(y)
                adj[y].add(x)
            # second kind: x ~ s_k x
            z = apply_s(k, x)
            if lx & {k, k + 1} == {k + 1} and left_descents(z) & {k, k + 1} == {k}:
                adj[x].add(z)
                adj[z].add(x)
    classes = []
    seen = set()
    for w in elems:
        if w in seen:
            continue
        block = set()
        frontier = [w]
        while frontier:
            x = frontier.pop()
            if x in block:
                continue
            block.add(x)
            frontier.extend(adj[x] - block)
        seen |= block
        classes.append(frozenset(block))
    return classes


def alternating_sum_slow(g, r, i, j, u, v):
    """N^r by dumb enumeration of interior vertex tuples, checking arcs."""

    def arc(a, b):
        # arc from a to b
        return g.weight(b, a) != 0 and not g.tau[b] <= g.tau[a]

    def pat_i(z):
        return i in g.tau[z] and j not in g.tau[z]

    def pat_j(z):
        return j in g.tau[z] and i not in g.tau[z]

    total = 0
    verts = list(g.vertices())
    if r == 2:
        for z in verts:
            if pat_i(z) and arc(u, z) and arc(z, v):
                total += g.weight(z, u) * g.weight(v, z)
    elif r == 3:
        for z1 in verts:
            if not (pat_i(z1) and arc(u, z1)):
                continue
            for z2 in verts:
                if pat_j(z2) and arc(z1, z2) and arc(z2, v):
                    total += g.weight(z1, u) * g.weight(z2, z1) * g.weight(v, z2)
    else:
        raise ValueError(r)
    return total


def skew_reading_word(t):
    """Reading word of a skew tableau shifted to target [1, n]."""
    cols = {}
    for e in t.entries():
        cols.setdefault(t.col_of(e), []).append(e)
    images = []
    for j in sorted(cols):
        images.extend(sorted(cols[j], reverse=True))
    return Permutation(v - t.offset for v in images)


def act(w, t):
    """Apply the permutation w to the entries of a normal tableau."""
    boxes = [None] * t.size
    for e in t.entries():
        boxes[w(e) - 1] = t.box_of(e)
    return tb.StandardTableau(t.shape, boxes, 0)


def all_skew_shapes(max_outer):
    """All skew shapes with outer size at most max_outer, inner included."""
    shapes = []
    for n in range(0, max_outer + 1):
        for outer in tb.partitions_of(n):
            inners = {()}
            for m in range(1, n):
                for inner in tb.partitions_of(m):
                    if len(inner) <= len(outer) and all(
                        inner[k] <= outer[k] for k in range(len(inner))
                    ):
                        inners.add(inner)
            for inner in inners:
                if sum(outer) - sum(inner) >= 1:
                    shapes.append(tb.SkewShape(outer, inner))
    return shapes
