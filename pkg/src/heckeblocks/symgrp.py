"""Symmetric groups, Coxeter length and parabolic coset representatives.

Permutations act on the right: ``i·(v w) = (i·v)·w``, so in a product the
left factor is applied first.  A permutation is stored in one-line notation,
the tuple ``(1·w, 2·w, ..., n·w)``.  ``s_i`` swaps i and i+1.

With these conventions ``ℓ(w s_i) > ℓ(w)`` exactly when the value i occurs
before the value i+1 in the one-line notation of w, and the minimal right coset
representatives of S_λ (the elements d of minimal length in S_λ d) are the
permutations whose one-line notation increases along each block of positions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

__all__ = [
    "Permutation",
    "simple_reflection",
    "length",
    "reduced_word",
    "from_word",
    "transposition",
    "all_permutations",
    "block_ranges",
    "in_parabolic",
    "parabolic_elements",
    "parabolic_generators",
    "refines",
    "min_coset_reps",
    "min_double_coset_reps",
    "two_row_double_cosets",
    "parabolic_conj_contained",
    "is_fixed_point_free",
]


class Permutation(tuple):
    """A permutation of {1..n} in one-line notation."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(1, n + 1))

    @classmethod
    def _raw(cls, images) -> "Permutation":
        return tuple.__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def images(self):
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self`` first, then ``other``."""
        return Permutation._raw(other[x - 1] for x in self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation._raw(inv)

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def cycles(self):
        seen, out = set(), []
        for i in range(1, len(self) + 1):
            if i in seen or self[i - 1] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def oneline_str(self) -> str:
        return "[" + " ".join(map(str, self)) + "]"

    def __str__(self):
        return self.cycle_str()

    def __repr__(self):
        return f"Permutation({list(self)})"

    def extend(self, n: int) -> "Permutation":
        return Permutation._raw(tuple(self) + tuple(range(len(self) + 1, n + 1)))

    def shift(self, offset: int, n: int) -> "Permutation":
        """Embed into S_n acting on {offset+1, ..., offset+len(self)}."""
        imgs = list(range(1, n + 1))
        for i, x in enumerate(self, 1):
            imgs[offset + i - 1] = offset + x
        return Permutation._raw(imgs)


@lru_cache(maxsize=None)
def simple_reflection(i: int, n: int) -> Permutation:
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    imgs = list(range(1, n + 1))
    imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return Permutation._raw(imgs)


def transposition(a: int, b: int, n: int) -> Permutation:
    imgs = list(range(1, n + 1))
    imgs[a - 1], imgs[b - 1] = imgs[b - 1], imgs[a - 1]
    return Permutation(imgs)


def length(w) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w) -> list:
    """Reduced word [i1, ..., il] with w = s_{i1} ... s_{il}.

    Built by bubble sort: repeatedly strip a right descent, i.e. a value i
    sitting after the value i+1, smallest i first.
    """
    w = list(w)
    pos = {x: k for k, x in enumerate(w)}
    word = []
    while True:
        for i in range(1, len(w)):
            if pos[i] > pos[i + 1]:
                break
        else:
            break
        # w = (w s_i) s_i with w s_i shorter: swap the values i, i+1
        a, b = pos[i], pos[i + 1]
        w[a], w[b] = i + 1, i
        pos[i], pos[i + 1] = b, a
        word.append(i)
    return word[::-1]


def from_word(word, n: int) -> Permutation:
    w = Permutation.identity(n)
    for i in word:
        w = w * simple_reflection(i, n)
    return w


def all_permutations(n: int):
    return [Permutation._raw(p) for p in itertools.permutations(range(1, n + 1))]


def block_ranges(lam):
    """0-based half-open position ranges of the blocks of a composition."""
    out, start = [], 0
    for part in lam:
        out.append((start, start + part))
        start += part
    return out


def in_parabolic(w, lam) -> bool:
    """Whether w lies in S_λ, i.e. preserves every block of positions."""
    for a, b in block_ranges(lam):
        if any(not (a < w[i] <= b) for i in range(a, b)):
            return False
    return True


def parabolic_generators(lam):
    """Indices i with s_i in S_λ."""
    out = []
    for a, b in block_ranges(lam):
        out.extend(range(a + 1, b))
    return out


def parabolic_elements(lam):
    """All elements of S_λ."""
    n = sum(lam)
    blocks = [itertools.permutations(range(a + 1, b + 1)) for a, b in block_ranges(lam)]
    return [Permutation._raw(tuple(itertools.chain(*choice))) for choice in itertools.product(*blocks)] if n else [Permutation.identity(0)]


def refines(lam, sigma) -> bool:
    """Whether every block of λ lies inside a block of σ (so S_λ ⊆ S_σ)."""
    if sum(lam) != sum(sigma):
        return False
    cuts = set(itertools.accumulate(sigma))
    return cuts <= set(itertools.accumulate(lam)) | {0}


def _check_refines(lam, sigma):
    if not refines(lam, sigma):
        raise ValueError(f"{tuple(lam)} is not a refinement of {tuple(sigma)}")


@lru_cache(maxsize=None)
def _right_reps(lam: tuple, sigma: tuple):
    n = sum(sigma)
    per_block = []
    start = 0
    lam_iter = iter(lam)
    for part in sigma:
        # the λ-blocks filling this σ-block
        sub, tot = [], 0
        while tot < part:
            x = next(lam_iter)
            sub.append(x)
            tot += x
        values = range(start + 1, start + part + 1)
        choices = []

        def split(vals, sizes):
            if not sizes:
                yield ()
                return
            for first in itertools.combinations(vals, sizes[0]):
                rest = [v for v in vals if v not in first]
                for tail in split(rest, sizes[1:]):
                    yield first + tail

        for oneline in split(list(values), sub):
            choices.append(oneline)
        per_block.append(choices)
        start += part
    reps = [Permutation._raw(tuple(itertools.chain(*c))) for c in itertools.product(*per_block)]
    if n == 0:
        reps = [Permutation.identity(0)]
    reps.sort(key=lambda w: (length(w), tuple(w)))
    return tuple(reps)


def min_coset_reps(lam, sigma=None, side: str = "right"):
    """Minimal-length coset representatives of S_λ in S_σ.

    ``side="right"`` gives representatives d of the cosets S_λ d, ``"left"``
    of the cosets d S_λ.  Output is sorted by length, then one-line notation.
    """
    lam = tuple(lam)
    sigma = (sum(lam),) if sigma is None else tuple(sigma)
    _check_refines(lam, sigma)
    reps = _right_reps(lam, sigma)
    if side == "right":
        return list(reps)
    if side == "left":
        out = [d.inverse() for d in reps]
        out.sort(key=lambda w: (length(w), tuple(w)))
        return out
    raise ValueError("side must be 'left' or 'right'")


def min_double_coset_reps(lam, nu, sigma=None):
    """Minimal representatives of the double cosets S_λ d S_ν inside S_σ."""
    lam, nu = tuple(lam), tuple(nu)
    sigma = (sum(lam),) if sigma is None else tuple(sigma)
    _check_refines(lam, sigma)
    _check_refines(nu, sigma)
    right = set(_right_reps(lam, sigma))
    return [d.inverse() for d in _right_reps(nu, sigma) if d.inverse() in right]


def two_row_double_cosets(a: int, b: int):
    """d_k = (a-k+1, a+1)(a-k+2, a+2)...(a, a+k) for k = 0..min(a, b)."""
    n = a + b
    out = []
    for k in range(min(a, b) + 1):
        w = Permutation.identity(n)
        for i in range(1, k + 1):
            w = w * transposition(a - k + i, a + i, n)
        out.append(w)
    return out


def parabolic_conj_contained(lam, mu) -> bool:
    """Whether some conjugate of S_λ lies in S_μ.

    Equivalent to packing the parts of λ into the parts of μ, each part of λ
    going wholly into one part of μ, with every part of μ receiving exactly
    its own size (parts equal to 1 are free filler).  A shorter λ is padded
    with fixed points, so S_3 = S_(3) counts as a subgroup of S_4.
    """
    if sum(lam) > sum(mu):
        raise ValueError("λ is larger than μ")
    items = sorted((x for x in lam if x > 1), reverse=True)
    bins = sorted(mu, reverse=True)
    return _pack(tuple(items), tuple(bins))


@lru_cache(maxsize=None)
def _pack(items, bins) -> bool:
    if not items:
        return True
    x, rest = items[0], items[1:]
    tried = set()
    for idx, cap in enumerate(bins):
        if cap >= x and cap not in tried:
            tried.add(cap)
            new = tuple(sorted(bins[:idx] + (cap - x,) + bins[idx + 1 :], reverse=True))
            if _pack(rest, new):
                return True
    return False


def is_fixed_point_free(lam, a: int) -> bool:
    """For λ = (1^a, λ_1, ..., λ_s): whether every λ_i exceeds 1."""
    lam = tuple(lam)
    if a < 0 or len(lam) < a or any(x != 1 for x in lam[:a]):
        raise ValueError(f"{lam} does not start with {a} parts equal to 1")
    return all(x > 1 for x in lam[a:])
