"""Partitions, compositions, tableaux and the abacus.

Partitions and compositions are tuples of positive integers.  Tableaux are
stored row by row.  The e-core of a partition is computed on an abacus with
``e`` runners; :func:`remove_rim_hook` gives the diagram-level operation and is
what the tests use as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, factorial, floor, prod

__all__ = [
    "Partition",
    "Composition",
    "Tableau",
    "BlockDescriptor",
    "parse_partition",
    "parse_composition",
    "partitions",
    "compositions",
    "dominates",
    "hook_length",
    "hook_lengths",
    "count_standard_tableaux",
    "removable_e_hook",
    "remove_rim_hook",
    "is_e_core",
    "e_core",
    "e_weight",
    "is_e_restricted",
    "standard_tableaux",
    "lr_coefficient",
    "extend_partition",
    "m_tail_tableaux",
    "extend_tableau",
    "truncate_tableau",
    "e_cores",
    "blocks_of",
    "EnumerationBoundError",
    "DEFAULT_BOUND",
]

DEFAULT_BOUND = 10


class EnumerationBoundError(ValueError):
    """Raised when an exhaustive enumeration is asked for beyond its size bound."""


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self):
        return tuple(self)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"{type(self).__name__}({tuple(self)})"


class Partition(Composition):
    """A weakly decreasing composition; the empty partition is the partition of 0."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        parts = tuple(x for x in parts if x != 0) if all(x >= 0 for x in parts) else parts
        self = super().__new__(cls, parts)
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return self

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def __str__(self):
        return ",".join(map(str, self)) if self else "∅"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "∅", "0"):
        return Partition()
    return Partition(int(x) for x in text.split(","))


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        return Composition()
    return Composition(int(x) for x in text.split(","))


def partitions(n: int, max_part: int | None = None):
    """Partitions of n in reverse lexicographic order, starting from (n)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def compositions(n: int):
    """All compositions of n (2^(n-1) of them for n >= 1)."""
    if n == 0:
        yield Composition()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield Composition((first,) + tuple(rest))


def dominates(lam, mu) -> bool:
    """Dominance order lam ⊵ mu on compositions of the same size."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_length(lam, i: int, j: int) -> int:
    conj = Partition(lam).conjugate()
    return lam[i] - j + conj[j] - i - 1


def hook_lengths(lam):
    conj = Partition(lam).conjugate()
    return {(i, j): lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])}


def count_standard_tableaux(lam) -> int:
    """Number of standard tableaux of shape lam by the hook length formula."""
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam).values(), start=1)


# ---------------------------------------------------------------------------
# cores and weights
# ---------------------------------------------------------------------------


def removable_e_hook(lam, e: int):
    """A cell (row, column), 0-based, whose hook length is e; ``None`` for an e-core."""
    for cell, h in sorted(hook_lengths(lam).items()):
        if h == e:
            return cell
    return None


def is_e_core(lam, e: int) -> bool:
    return removable_e_hook(lam, e) is None


def remove_rim_hook(lam, i: int, j: int) -> Partition:
    """Remove the rim hook associated with cell (i, j), working on the diagram."""
    lam = list(lam)
    last = Partition(lam).conjugate()[j] - 1  # lowest row meeting column j
    new = lam[:]
    for r in range(i, last):
        new[r] = lam[r + 1] - 1
    new[last] = j
    return Partition(new)


def _beta_set(lam, e: int):
    length = len(lam)
    beads = length + (-length) % e
    parts = list(lam) + [0] * (beads - length)
    return [parts[i] + beads - 1 - i for i in range(beads)], beads


def e_core(lam, e: int) -> Partition:
    """The e-core, by sliding beads up the runners of an e-abacus."""
    if e < 2:
        raise ValueError("e must be at least 2")
    beta, beads = _beta_set(lam, e)
    counts = [0] * e
    for b in beta:
        counts[b % e] += 1
    new = sorted((r + e * j for r in range(e) for j in range(counts[r])), reverse=True)
    return Partition(new[i] - (beads - 1 - i) for i in range(beads))


def e_weight(lam, e: int) -> int:
    return (sum(lam) - sum(e_core(lam, e))) // e


def is_e_restricted(lam, e: int) -> bool:
    lam = list(lam) + [0]
    return all(lam[i] - lam[i + 1] < e for i in range(len(lam) - 1))


@dataclass(frozen=True)
class BlockDescriptor:
    """The block of H_n with the given e-core and e-weight, n = |core| + weight·e."""

    core: Partition
    weight: int
    e: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        if self.weight < 0:
            raise ValueError("weight must be non-negative")
        cell = removable_e_hook(self.core, self.e)
        if cell is not None:
            raise ValueError(
                f"{self.core} is not a {self.e}-core: cell {cell[0] + 1},{cell[1] + 1} has hook length {self.e}"
            )

    @property
    def n(self) -> int:
        return sum(self.core) + self.weight * self.e


def _core_from_charges(c, e: int) -> Partition:
    """The e-core whose abacus has B + c_r beads on runner r, all slid up."""
    B = max(0, -min(c))
    beads = e * B
    beta = sorted((r + e * j for r in range(e) for j in range(B + c[r])), reverse=True)
    return Partition(beta[i] - (beads - 1 - i) for i in range(beads))


@lru_cache(maxsize=None)
def _cores_up_to(n: int, e: int):
    """All e-cores of size ≤ n, from charge vectors c (Σc = 0) on the abacus.

    The size is Σ_r (e·c_r²/2 + r·c_r); with a_r = r - (e-1)/2 each term is at
    least -a_r²/(2e), which bounds the search.
    """
    a = [r - (e - 1) / 2 for r in range(e)]
    least = [-x * x / (2 * e) for x in a]
    slack = [sum(least[r:]) for r in range(e + 1)]
    out = []

    def term(r, x):
        return e * x * x / 2 + a[r] * x

    def grow(c, total):
        r = len(c)
        if r == e - 1:
            last = -sum(c)
            size = total + term(r, last)
            if size <= n + 1e-9:
                out.append(_core_from_charges(c + [last], e))
            return
        room = n - total - slack[r + 1]
        disc = a[r] * a[r] + 2 * e * room
        if disc < 0:
            return
        lo, hi = (-a[r] - disc ** 0.5) / e, (-a[r] + disc ** 0.5) / e
        for x in range(floor(lo) - 1, ceil(hi) + 2):
            if term(r, x) <= room + 1e-9:
                grow(c + [x], total + term(r, x))

    grow([], 0.0)
    return tuple(sorted(set(out), key=lambda lam: (sum(lam), tuple(-x for x in lam))))


def e_cores(n: int, e: int):
    """Distinct e-cores of the partitions of n, ordered by size then reverse lex."""
    if e < 2:
        raise ValueError("e must be at least 2")
    return [rho for rho in _cores_up_to(n, e) if (n - sum(rho)) % e == 0]


def blocks_of(n: int, e: int):
    """Block labels of H_n: one per e-core of size n - d·e, d ≥ 0."""
    return [BlockDescriptor(rho, (n - sum(rho)) // e, e) for rho in e_cores(n, e)]


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """A filling of a Young diagram by 1..n, stored as a tuple of rows."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)  # shape check
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be 1..n each exactly once")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        rows = self.rows
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def reading_word(self):
        """Entries read along the rows, top to bottom."""
        return tuple(x for r in self.rows for x in r)

    def shape_below(self, k: int) -> Partition:
        """Shape of the subtableau of entries ≤ k."""
        return Partition(sum(1 for x in r if x <= k) for r in self.rows)

    def dominates(self, other: "Tableau") -> bool:
        """Tableau dominance: every initial segment dominates."""
        return all(
            dominates(self.shape_below(k), other.shape_below(k)) for k in range(1, self.n + 1)
        )

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def _check_bound(n, bound):
    if n > bound:
        raise EnumerationBoundError(f"size {n} exceeds enumeration bound {bound}")


def standard_tableaux(lam, bound: int = DEFAULT_BOUND):
    """Standard tableaux of shape lam ordered by reading word; the first is the row-filled one."""
    lam = Partition(lam)
    _check_bound(lam.n, bound)
    return [Tableau(rows) for rows in _std_rows(lam)]


@lru_cache(maxsize=None)
def _std_rows(lam):
    n = sum(lam)
    found = []

    def place(k, rows):
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            j = len(rows[i])
            if j < lam[i] and (i == 0 or len(rows[i - 1]) > j):
                rows[i].append(k)
                place(k + 1, rows)
                rows[i].pop()

    place(1, [[] for _ in lam])
    found.sort(key=lambda rows: tuple(x for r in rows for x in r))
    return tuple(found)


def lr_coefficient(pi, lam, nu) -> int:
    """Littlewood–Richardson coefficient c^pi_{lam,nu}.

    Counts semistandard fillings of pi/lam with content nu whose reverse
    reading word (rows top to bottom, each row right to left) is a lattice word.
    """
    pi, lam, nu = Partition(pi), Partition(lam), Partition(nu)
    if pi.n != lam.n + nu.n:
        return 0
    if len(lam) > len(pi) or any(lam[i] > pi[i] for i in range(len(lam))):
        return 0
    inner = list(lam) + [0] * (len(pi) - len(lam))
    cells = [(i, j) for i in range(len(pi)) for j in range(pi[i] - 1, inner[i] - 1, -1)]
    filling = {}
    counts = [0] * (len(nu) + 1)

    def search(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for v in range(1, len(nu) + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice condition
            right = filling.get((i, j + 1))
            if right is not None and right < v:
                continue  # rows weakly increase
            above = filling.get((i - 1, j))
            if above is not None and above >= v:
                continue  # columns strictly increase
            filling[(i, j)] = v
            counts[v] += 1
            total += search(idx + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return search(0)


def extend_partition(tau, m: int) -> Partition:
    return Partition(tuple(tau) + (1,) * m)


def extend_tableau(t: Tableau, m: int) -> Tableau:
    """Append the entries a+1..a+m as m new one-box rows."""
    a = t.n
    return Tableau(t.rows + tuple((a + i,) for i in range(1, m + 1)))


def truncate_tableau(t: Tableau, m: int) -> Tableau:
    """Inverse of :func:`extend_tableau`."""
    return Tableau(t.rows[: len(t.rows) - m] if m else t.rows)


def m_tail_tableaux(tau, m: int, bound: int = DEFAULT_BOUND):
    """Standard tableaux of the extended shape with a+1..a+m in the last m rows."""
    tau = Partition(tau)
    _check_bound(tau.n + m, bound)
    a = tau.n
    tail = set(range(a + 1, a + m + 1))
    out = []
    for t in standard_tableaux(extend_partition(tau, m), bound):
        last = t.rows[len(t.rows) - m :] if m else ()
        if m == 0 or {x for r in last for x in r} == tail:
            out.append(t)
    return out
