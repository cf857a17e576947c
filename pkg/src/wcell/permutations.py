"""Elements of the symmetric group S_n in the left-operator convention.

A permutation is stored by its one-line images (w1, ..., wn), all values in
[1, n].  Composition acts on the left: (x * y)(i) = x(y(i)), and the simple
generator s_i is the transposition of the values i and i+1, so s_i * w swaps
those two values wherever they occur in the image sequence.
"""

from __future__ import annotations

from itertools import combinations, permutations as _itperm


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [1,{n}]: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % (",".join(map(str, self.images)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return multiply(self, other)

    def text(self) -> str:
        return ",".join(map(str, self.images))

    @staticmethod
    def from_text(s: str) -> "Permutation":
        return Permutation(int(part) for part in s.split(","))


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    return Permutation(range(n, 0, -1))


def all_permutations(n: int):
    """All of S_n, in one-line lexicographic order."""
    for images in _itperm(range(1, n + 1)):
        yield Permutation(images)


def multiply(x: Permutation, y: Permutation) -> Permutation:
    """The composite x∘y, acting on the left: i -> x(y(i))."""
    if x.n != y.n:
        raise ValueError("size mismatch")
    xi = x.images
    return Permutation(xi[v - 1] for v in y.images)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.images, start=1):
        inv[v - 1] = i
    return Permutation(inv)


def apply_s(i: int, w: Permutation) -> Permutation:
    """The product s_i * w: swap the values i and i+1 in the image sequence."""
    if not 1 <= i <= w.n - 1:
        raise IndexError(f"generator index {i} out of range for n={w.n}")
    out = list(w.images)
    for pos, v in enumerate(out):
        if v == i:
            out[pos] = i + 1
        elif v == i + 1:
            out[pos] = i
    return Permutation(out)


def length(w: Permutation) -> int:
    """Coxeter length = number of inversions."""
    img = w.images
    return sum(1 for a, b in combinations(img, 2) if a > b)


def left_descents(w: Permutation) -> frozenset[int]:
    """Indices i with l(s_i w) < l(w): the value i appears after i+1."""
    pos = [0] * (w.n + 1)
    for p, v in enumerate(w.images):
        pos[v] = p
    return frozenset(i for i in range(1, w.n) if pos[i] > pos[i + 1])


def right_descents(w: Permutation) -> frozenset[int]:
    """Indices i with l(w s_i) < l(w): a one-line descent w(i) > w(i+1)."""
    img = w.images
    return frozenset(i for i in range(1, w.n) if img[i - 1] > img[i])


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Bruhat order via the sorted-prefix (Ehresmann) criterion.

    x <= y iff for every k, the sorted initial segments satisfy
    sorted(x1..xk)[i] <= sorted(y1..yk)[i] componentwise.
    """
    if x.n != y.n:
        raise ValueError("size mismatch")
    if x == y:
        return True
    xi, yi = x.images, y.images
    xs: list[int] = []
    ys: list[int] = []
    for k in range(x.n - 1):
        _insort(xs, xi[k])
        _insort(ys, yi[k])
        for a, b in zip(xs, ys):
            if a > b:
                return False
    return True


def _insort(acc: list[int], v: int) -> None:
    lo, hi = 0, len(acc)
    while lo < hi:
        mid = (lo + hi) // 2
        if acc[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    acc.insert(lo, v)
