"""Partitions, skew shapes and standard tableaux in the column convention.

Shape parts count *columns*: the diagram of ``(3, 2)`` has three boxes in
column 1 and two boxes in column 2, and ``(i, j)`` is the i-th box of the
j-th column.  A standard tableau has entries increasing down each column and
along each row, and its reading word concatenates the columns from left to
right, each column read from bottom to top.

Because parts index columns, the dominance order used throughout is the
*reverse* of the row-convention textbook order: ``mu <= lam`` (lam dominates
mu) holds when every prefix sum of lam is at most the corresponding prefix
sum of mu.  The single-column shape ``(n,)`` is the unique minimum and the
single-row shape ``(1,) * n`` is the unique maximum.  Display helpers print
internal rows, so the familiar row picture of a tableau corresponds directly
to ``text()`` output: the minimal tableau of shape ``(2, 1)`` prints as
``"1 3/2"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import factorial
from operator import mul

from .permutations import Permutation, inverse, multiply

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


def partitions_of(n: int):
    """All partitions of n, in decreasing lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return out


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    lam = check_partition(lam) if lam else ()
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def hook_count(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    lam = check_partition(lam) if lam else ()
    n = sum(lam)
    if n == 0:
        return 1
    hooks = []
    for j, height in enumerate(lam, start=1):
        for i in range(1, height + 1):
            below = height - i
            right = sum(1 for h in lam[j:] if h >= i)
            hooks.append(below + right + 1)
    return factorial(n) // reduce(mul, hooks, 1)


def dominance_leq(mu, lam) -> bool:
    """mu <= lam in the column-convention dominance order.

    lam dominates mu exactly when every prefix sum of lam is at most the
    corresponding prefix sum of mu.  (Reversed relative to the textbook
    row-convention order; see the module docstring.)
    """
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"sizes differ: |{mu}| != |{lam}|")
    psum_mu = psum_lam = 0
    for k in range(max(len(mu), len(lam))):
        psum_mu += mu[k] if k < len(mu) else 0
        psum_lam += lam[k] if k < len(lam) else 0
        if psum_lam > psum_mu:
            return False
    return True


def _trim(parts) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def removable_boxes(lam: Partition):
    """Boxes (i, j) whose removal leaves a partition diagram."""
    out = []
    for j in range(1, len(lam) + 1):
        nxt = lam[j] if j < len(lam) else 0
        if lam[j - 1] > nxt:
            out.append((lam[j - 1], j))
    return out


def addable_boxes(lam: Partition):
    """Boxes (i, j) whose addition gives a partition diagram."""
    out = []
    for j in range(1, len(lam) + 2):
        cur = lam[j - 1] if j <= len(lam) else 0
        prev = lam[j - 2] if j >= 2 else None
        if prev is None or cur < prev:
            out.append((cur + 1, j))
    return out


# ---------------------------------------------------------------------------
# shapes and tableaux


@dataclass(frozen=True)
class SkewShape:
    """Outer/inner partition pair; the boxes are [outer] minus [inner]."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = _trim(self.outer)
        inner = _trim(self.inner)
        if not is_partition(outer) and outer != ():
            raise ValueError(f"bad outer shape {self.outer}")
        if not is_partition(inner) and inner != ():
            raise ValueError(f"bad inner shape {self.inner}")
        for j, p in enumerate(inner):
            if j >= len(outer) or p > outer[j]:
                raise ValueError(f"inner {inner} not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_normal(self) -> bool:
        return self.inner == ()

    def inner_height(self, j: int) -> int:
        return self.inner[j - 1] if j <= len(self.inner) else 0

    def outer_height(self, j: int) -> int:
        return self.outer[j - 1] if j <= len(self.outer) else 0

    def boxes(self):
        for j in range(1, len(self.outer) + 1):
            for i in range(self.inner_height(j) + 1, self.outer[j - 1] + 1):
                yield (i, j)

    def __contains__(self, box) -> bool:
        i, j = box
        return 1 <= j <= len(self.outer) and self.inner_height(j) < i <= self.outer[j - 1]


class StandardTableau:
    """Bijection from the boxes of a (skew) diagram onto [m+1, m+n].

    ``boxes[k]`` is the (row, column) position of the entry ``offset+1+k``.
    Instances are immutable and hashable; equality is structural.
    """

    __slots__ = ("shape", "offset", "boxes", "_cols", "_rows", "_dset", "_prefix")

    def __init__(self, shape: SkewShape, boxes, offset: int = 0, _checked: bool = False):
        boxes = tuple(boxes)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "boxes", boxes)
        object.__setattr__(self, "_cols", tuple(b[1] for b in boxes))
        object.__setattr__(self, "_rows", tuple(b[0] for b in boxes))
        object.__setattr__(self, "_dset", None)
        object.__setattr__(self, "_prefix", None)
        if not _checked:
            self._validate()

    def _validate(self):
        if len(self.boxes) != self.shape.size:
            raise ValueError("entry count does not match shape size")
        seen = set(self.boxes)
        if len(seen) != len(self.boxes):
            raise ValueError("repeated box")
        for b in self.boxes:
            if b not in self.shape:
                raise ValueError(f"box {b} outside shape")
        pos = {b: e for e, b in zip(self.entries(), self.boxes)}
        for (i, j), e in pos.items():
            if (i + 1, j) in pos and pos[(i + 1, j)] < e:
                raise ValueError("entries must increase down columns")
            if (i, j + 1) in pos and pos[(i, j + 1)] < e:
                raise ValueError("entries must increase along rows")

    def __setattr__(self, *a):
        raise AttributeError("StandardTableau is immutable")

    # -- basic views

    @property
    def size(self) -> int:
        return len(self.boxes)

    def entries(self):
        return range(self.offset + 1, self.offset + self.size + 1)

    @property
    def min_entry(self) -> int:
        return self.offset + 1

    @property
    def max_entry(self) -> int:
        return self.offset + self.size

    def box_of(self, e: int):
        return self.boxes[e - self.offset - 1]

    def row_of(self, e: int) -> int:
        return self._rows[e - self.offset - 1]

    def col_of(self, e: int) -> int:
        return self._cols[e - self.offset - 1]

    def entry_at(self, box):
        try:
            return self.entries()[self.boxes.index(tuple(box))]
        except ValueError:
            raise KeyError(f"box {box} not filled") from None

    def __eq__(self, other):
        return (
            isinstance(other, StandardTableau)
            and self.shape == other.shape
            and self.offset == other.offset
            and self.boxes == other.boxes
        )

    def __hash__(self):
        return hash((self.shape, self.offset, self.boxes))

    def to_rows(self):
        """Entries of each internal row, leftmost column first.

        For skew shapes the leading inner boxes of a row are omitted.
        """
        nrows = max(self._rows, default=0)
        rows: list[list[int]] = [[] for _ in range(nrows)]
        for e in sorted(self.entries(), key=lambda e: (self.row_of(e), self.col_of(e))):
            rows[self.row_of(e) - 1].append(e)
        return rows

    def text(self) -> str:
        return "/".join(" ".join(map(str, row)) for row in self.to_rows())

    def __repr__(self):
        return f"StandardTableau({self.text()!r})"

    # -- cached structure

    def descent_data(self) -> "DescentData":
        if self._dset is None:
            sa, sd, wa, wd = set(), set(), set(), set()
            for i in range(self.min_entry, self.max_entry):
                ri, ci = self.row_of(i), self.col_of(i)
                rn, cn = self.row_of(i + 1), self.col_of(i + 1)
                if ci > cn:
                    sd.add(i)
                elif ci == cn:
                    wd.add(i)
                elif ri > rn:
                    sa.add(i)
                else:
                    wa.add(i)
            data = DescentData(frozenset(sa), frozenset(sd), frozenset(wa), frozenset(wd))
            object.__setattr__(self, "_dset", data)
        return self._dset

    @property
    def descents(self) -> frozenset[int]:
        return self.descent_data().d

    def dominance_prefix(self):
        """Row m, column k holds #{first m entries in columns <= k}."""
        if self._prefix is None:
            width = len(self.shape.outer)
            rows = []
            acc = [0] * (width + 1)
            for c in self._cols:
                for k in range(c, width + 1):
                    acc[k] += 1
                rows.append(tuple(acc[1:]))
            object.__setattr__(self, "_prefix", tuple(rows))
        return self._prefix


@dataclass(frozen=True)
class DescentData:
    """The four descent/ascent classes of consecutive-entry pairs."""

    sa: frozenset[int]
    sd: frozenset[int]
    wa: frozenset[int]
    wd: frozenset[int]

    @property
    def d(self) -> frozenset[int]:
        return self.sd | self.wd


def descent_data(t: StandardTableau) -> DescentData:
    return t.descent_data()


def descents(t: StandardTableau) -> frozenset[int]:
    return t.descent_data().d


# ---------------------------------------------------------------------------
# distinguished fillings


def tau_min(shape, offset: int = 0) -> StandardTableau:
    """The column-by-column filling: the minimal standard tableau."""
    shape = shape if isinstance(shape, SkewShape) else SkewShape(tuple(shape))
    boxes = sorted(shape.boxes(), key=lambda b: (b[1], b[0]))
    return StandardTableau(shape, boxes, offset, _checked=True)


def tau_max(shape, offset: int = 0) -> StandardTableau:
    """The row-by-row filling: transpose of the minimal filling of the transpose."""
    shape = shape if isinstance(shape, SkewShape) else SkewShape(tuple(shape))
    boxes = sorted(shape.boxes(), key=lambda b: (b[0], b[1]))
    return StandardTableau(shape, boxes, offset, _checked=True)


def swap_adjacent(t: StandardTableau, i: int) -> StandardTableau:
    """The tableau s_i t, with the entries i and i+1 exchanged.

    Valid only when i and i+1 lie in different rows and different columns.
    """
    dd = t.descent_data()
    if i not in dd.sa and i not in dd.sd:
        raise ValueError(f"swapping {i},{i+1} does not give a standard tableau")
    k = i - t.offset - 1
    boxes = list(t.boxes)
    boxes[k], boxes[k + 1] = boxes[k + 1], boxes[k]
    return StandardTableau(t.shape, boxes, t.offset, _checked=True)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_std(shape, offset: int = 0) -> list[StandardTableau]:
    """All standard tableaux of the given shape, in increasing lex order."""
    shape = shape if isinstance(shape, SkewShape) else SkewShape(tuple(shape))
    outer = shape.outer
    width = len(outer)
    start = [shape.inner_height(j) for j in range(1, width + 1)]
    results: list[StandardTableau] = []
    boxes: list[tuple[int, int]] = []

    def grow(heights: list[int], remaining: int):
        if remaining == 0:
            results.append(StandardTableau(shape, tuple(boxes), offset, _checked=True))
            return
        for j in range(width):
            h = heights[j]
            if h < outer[j] and (j == 0 or h + 1 <= heights[j - 1]):
                heights[j] += 1
                boxes.append((h + 1, j + 1))
                grow(heights, remaining - 1)
                boxes.pop()
                heights[j] -= 1

    grow(start, shape.size)
    results.sort(key=lex_key)
    return results


# ---------------------------------------------------------------------------
# restriction


def restrict_leq(t: StandardTableau, m: int) -> StandardTableau:
    """Remove all boxes with entries greater than m."""
    if m < t.offset:
        raise ValueError(f"cannot restrict below the target start {t.offset + 1}")
    keep = min(m, t.max_entry) - t.offset
    width = len(t.shape.outer)
    heights = [t.shape.inner_height(j) for j in range(1, width + 1)]
    for b in t.boxes[:keep]:
        heights[b[1] - 1] += 1
    new_shape = SkewShape(_trim(heights), t.shape.inner)
    return StandardTableau(new_shape, t.boxes[:keep], t.offset, _checked=True)


def restrict_gt(t: StandardTableau, m: int) -> StandardTableau:
    """Remove all boxes with entries at most m; the result is skew with target [m+1, ...]."""
    if not t.shape.is_normal:
        raise ValueError("restrict_gt expects a normal-shape tableau")
    if m < t.offset:
        raise ValueError(f"cannot restrict below the target start {t.offset + 1}")
    drop = min(m, t.max_entry) - t.offset
    width = len(t.shape.outer)
    heights = [0] * width
    for b in t.boxes[:drop]:
        heights[b[1] - 1] += 1
    new_shape = SkewShape(t.shape.outer, _trim(heights))
    return StandardTableau(new_shape, t.boxes[drop:], m, _checked=True)


# ---------------------------------------------------------------------------
# words and permutations


def word(t: StandardTableau) -> Permutation:
    """Reading word: columns left to right, each read bottom to top."""
    if not (t.shape.is_normal and t.offset == 0):
        raise ValueError("word is defined for normal tableaux with target [1, n]")
    images = []
    cols: list[list[int]] = [[] for _ in t.shape.outer]
    for e in t.entries():
        cols[t.col_of(e) - 1].append(e)
    for col in cols:
        images.extend(reversed(col))
    return Permutation(images)


def perm(t: StandardTableau) -> Permutation:
    """The permutation carrying the minimal tableau of the shape onto t."""
    return multiply(word(t), inverse(word(tau_min(t.shape))))


# ---------------------------------------------------------------------------
# orders on tableaux


def lex_key(t: StandardTableau):
    """Sort key realising the lexicographic order: bigger key = lex-bigger tableau."""
    return tuple(-c for c in reversed(t._cols))


def lex_compare(u: StandardTableau, t: StandardTableau) -> int:
    """-1, 0 or 1 as u is lex-below, equal to, or lex-above t.

    t is lex-bigger than u exactly when, at the largest entry where their
    column indices differ, t's column is smaller.
    """
    if u.size != t.size or u.offset != t.offset:
        raise ValueError("tableaux must share the same target")
    ku, kt = lex_key(u), lex_key(t)
    return -1 if ku < kt else (0 if ku == kt else 1)


def _prefix_leq(pu, pt, width_u: int, width_t: int) -> bool:
    # u <= t  iff  t's prefix counts never exceed u's (column convention).
    width = max(width_u, width_t)
    for m in range(len(pu)):
        row_u, row_t = pu[m], pt[m]
        for k in range(width):
            cu = row_u[k] if k < width_u else m + 1
            ct = row_t[k] if k < width_t else m + 1
            if ct > cu:
                return False
    return True


def tableau_dominance_leq(u: StandardTableau, t: StandardTableau) -> bool:
    """u <= t for same-shape tableaux; equals the Bruhat order on perm."""
    if u.shape != t.shape or u.offset != t.offset:
        raise ValueError("tableau dominance requires equal shapes and targets")
    return extended_dominance_leq(u, t)


def extended_dominance_leq(u: StandardTableau, t: StandardTableau) -> bool:
    """u <= t in the extended dominance order (shapes may differ)."""
    if u.size != t.size or u.offset != t.offset:
        raise ValueError("extended dominance requires the same target")
    return _prefix_leq(
        u.dominance_prefix(),
        t.dominance_prefix(),
        len(u.shape.outer),
        len(t.shape.outer),
    )


# ---------------------------------------------------------------------------
# critical tableaux


def is_m_critical(t: StandardTableau, m: int) -> bool:
    """Whether the skew tableau t, with target starting at m, is m-critical.

    Requires the first nonempty column i to receive m, column i+1 to receive
    m+1, and the entries above m+1 to form the minimal filling of their shape.
    """
    if t.size < 2:
        raise ValueError("m-critical tableaux need at least two boxes")
    if t.offset != m - 1:
        raise ValueError(f"target must start at {m}")
    shape = t.shape
    i = None
    for j in range(1, len(shape.outer) + 1):
        if shape.outer_height(j) > shape.inner_height(j):
            i = j
            break
    if t.col_of(m) != i or t.col_of(m + 1) != i + 1:
        return False
    return all(t.col_of(e) <= t.col_of(e + 1) for e in range(m + 2, t.max_entry))


def m_critical_tableau(shape: SkewShape, m: int) -> StandardTableau:
    """The m-critical tableau of the given skew shape, when it exists."""
    i = None
    for j in range(1, len(shape.outer) + 1):
        if shape.outer_height(j) > shape.inner_height(j):
            i = j
            break
    if i is None or shape.outer_height(i + 1) <= shape.inner_height(i + 1):
        raise ValueError("no m-critical tableau of this shape")
    first = (shape.inner_height(i) + 1, i)
    second = (shape.inner_height(i + 1) + 1, i + 1)
    rest_inner = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    rest_inner[i - 1] += 1
    rest_inner[i] += 1
    rest = sorted(
        SkewShape(shape.outer, _trim(rest_inner)).boxes(), key=lambda b: (b[1], b[0])
    )
    return StandardTableau(shape, [first, second] + rest, m - 1)


# ---------------------------------------------------------------------------
# text round-trip


def from_rows(rows, offset=None) -> StandardTableau:
    """Build a normal-shape tableau from its internal rows."""
    rows = [list(r) for r in rows]
    lengths = [len(r) for r in rows]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise ValueError("row lengths must weakly decrease")
    entries = sorted(e for row in rows for e in row)
    if offset is None:
        offset = entries[0] - 1 if entries else 0
    if entries != list(range(offset + 1, offset + len(entries) + 1)):
        raise ValueError("entries must form a contiguous interval")
    width = lengths[0] if lengths else 0
    shape = SkewShape(tuple(sum(1 for L in lengths if L >= j) for j in range(1, width + 1)))
    pos = {}
    for i, row in enumerate(rows, start=1):
        for j, e in enumerate(row, start=1):
            pos[e] = (i, j)
    return StandardTableau(shape, [pos[e] for e in sorted(pos)], offset)


def from_text(s: str) -> StandardTableau:
    """Parse the '/'-separated row form, e.g. ``"1 3/2"``."""
    rows = [[int(x) for x in part.split()] for part in s.split("/")]
    return from_rows(rows)
