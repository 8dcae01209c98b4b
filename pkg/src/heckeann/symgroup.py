"""
The symmetric group as a Coxeter group.

Permutations act on the right: `p[i-1]` is the image of i, and products
read left to right, i (ab) = (i a) b. So `a * b` first applies a, then b.

>>> s1, s2 = simple(1, 3), simple(2, 3)
>>> s1 * s2 * s1 == s2 * s1 * s2
True
>>> reduced_word(Permutation((3, 2, 1)))
[1, 2, 1]
>>> to_cycles(parse_cycles("(1342)", 4))
'(1342)'
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from .combinat import Composition, Tableau, special_tableaux

__all__ = [
    "Permutation", "SymmetricGroup", "identity", "simple", "compose", "length",
    "reduced_word", "from_word", "young_subgroup", "d_of", "w_lambda",
    "parse_cycles", "to_cycles",
]


class Permutation(tuple):
    """One-line notation (1 sigma, 2 sigma, ..., n sigma) of a bijection of 1..n."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images) -> "Permutation":
        return super().__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return compose(self, other)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x - 1] = i + 1
        return Permutation._trusted(inv)

    def length(self) -> int:
        return length(self)

    def __repr__(self):
        return f"Permutation({tuple(self)})"

    def __str__(self):
        return to_cycles(self)


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def simple(i: int, n: int) -> Permutation:
    """The transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    img = list(range(1, n + 1))
    img[i - 1], img[i] = i + 1, i
    return Permutation._trusted(img)


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    if len(a) != len(b):
        raise ValueError(f"cannot compose permutations of {len(a)} and {len(b)} points")
    return Permutation._trusted(b[x - 1] for x in a)


def length(w: Sequence[int]) -> int:
    """Number of inversions of the one-line word."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def _right_descents(w: Sequence[int]) -> list[int]:
    # l(w s_i) < l(w) iff value i+1 appears before value i in the one-line word
    pos = {x: k for k, x in enumerate(w)}
    return [i for i in range(1, len(w)) if pos[i] > pos[i + 1]]


def reduced_word(w: Sequence[int]) -> list[int]:
    """A reduced word, peeling off the smallest right descent each time."""
    w = list(w)
    word = []
    while True:
        desc = _right_descents(w)
        if not desc:
            break
        i = desc[0]
        # w <- w s_i swaps the values i and i+1
        w = [i + 1 if x == i else i if x == i + 1 else x for x in w]
        word.append(i)
    word.reverse()
    return word


def from_word(word: Iterable[int], n: int) -> Permutation:
    w = identity(n)
    for i in word:
        w = compose(w, simple(i, n))
    return w


def young_subgroup(shape: Sequence[int]) -> list[Permutation]:
    """The row stabilizer of the row-filled tableau of the given shape."""
    shape = Composition(shape)
    n = shape.n
    blocks = []
    start = 1
    for part in shape:
        blocks.append(list(range(start, start + part)))
        start += part
    out = []
    for images in product(*(permutations(b) for b in blocks)):
        img = [0] * n
        for block, perm in zip(blocks, images):
            for src, dst in zip(block, perm):
                img[src - 1] = dst
        out.append(Permutation._trusted(img))
    return sorted(out)


def d_of(t: Tableau) -> Permutation:
    """The permutation d(t) with t = t^lambda d(t)."""
    t_row, _ = special_tableaux(t.shape)
    img = [0] * t.n
    for row_src, row_dst in zip(t_row.rows, t.rows):
        for a, b in zip(row_src, row_dst):
            img[a - 1] = b
    return Permutation._trusted(img)


def w_lambda(shape: Sequence[int]) -> Permutation:
    """The permutation taking the row-filled tableau to the column-filled one."""
    _, t_col = special_tableaux(shape)
    if t_col is None:
        raise ValueError("w_lambda needs a partition")
    return d_of(t_col)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """
    Parse cycle notation such as "(13)(24)" or "(1 3)(2 4)".

    Cycles are composed left to right like everything else. Single digits
    may be run together when n < 10.
    """
    text = text.strip()
    if not text or _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    w = identity(n)
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if "," in body or " " in body:
            pts = [int(x) for x in re.split(r"[,\s]+", body) if x]
        else:
            if n >= 10 and len(body) > 1:
                raise ValueError(f"ambiguous cycle {body!r} for n >= 10; use separators")
            pts = [int(x) for x in body]
        if any(not 1 <= x <= n for x in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({body}) for n = {n}")
        img = list(range(1, n + 1))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b
        w = compose(w, Permutation._trusted(img))
    return w


def to_cycles(w: Sequence[int]) -> str:
    """Disjoint cycles, each starting at its least point; the identity is "(1)"."""
    n = len(w)
    seen = set()
    parts = []
    sep = "" if n < 10 else " "
    for start in range(1, n + 1):
        if start in seen or w[start - 1] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = w[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = w[x - 1]
        parts.append("(" + sep.join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "(1)"


class SymmetricGroup:
    """
    Lookup tables for S_n, with elements indexed in lexicographic one-line order.

    `right[k][i]` is the index of w_k s_i, `left[k][i]` the index of s_i w_k,
    `pred[k]` is (index of w s_i, i) for i the last letter of the reduced
    word of w_k, so walking `pred` spells the reduced word backwards.
    """

    def __init__(self, n: int):
        self.n = n
        self.elements = [Permutation._trusted(p) for p in permutations(range(1, n + 1))]
        self.index = {p: k for k, p in enumerate(self.elements)}
        self.lengths = [length(p) for p in self.elements]
        self.inverse = [self.index[p.inverse()] for p in self.elements]
        self.identity = self.index[identity(n)]
        gens = [simple(i, n) for i in range(1, n)]
        self.right = [[None] + [self.index[compose(p, s)] for s in gens] for p in self.elements]
        self.left = [[None] + [self.index[compose(s, p)] for s in gens] for p in self.elements]
        self.words = [reduced_word(p) for p in self.elements]
        self.pred = [None if not w else (self.right[k][w[-1]], w[-1])
                     for k, w in enumerate(self.words)]
        self.by_length = sorted(range(len(self.elements)), key=lambda k: (self.lengths[k], k))

    def __len__(self):
        return len(self.elements)

    def ascends_right(self, k: int, i: int) -> bool:
        """True when l(w s_i) > l(w) for w the k-th element."""
        return self.lengths[self.right[k][i]] > self.lengths[k]

    def ascends_left(self, k: int, i: int) -> bool:
        return self.lengths[self.left[k][i]] > self.lengths[k]


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)
