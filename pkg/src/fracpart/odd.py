"""Partitions of k into distinct fractions (2n-1)/j, 1 <= n <= j.

Counting reduces to subsets of the first j odd numbers summing to k*j.
Counts are exact Python ints.  Dense DP arrays are int64 while every
coefficient provably fits (the grand total is 2**j), object dtype beyond.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import groupby
from typing import Sequence

import numpy as np

from fracpart.errors import (
    CapExceeded,
    EmptySequence,
    EnumerationTooLarge,
    IntegralityViolation,
    NoWitness,
)
from fracpart.polyarith import (
    UniPoly,
    expand_consecutive_product,
    expand_odd_product,
    slice_y,
)

ENUMERATION_LIMIT = 24
DEFAULT_CAP = 10**6
_INT64_MAX_J = 62


@dataclass(frozen=True)
class PartitionWitness:
    """A set of distinct odd numerators whose fractions over ``j`` sum to an integer."""

    numerators: tuple[int, ...]
    j: int

    def __post_init__(self):
        nums = tuple(sorted(self.numerators))
        object.__setattr__(self, "numerators", nums)
        if len(set(nums)) != len(nums):
            raise ValueError(f"repeated numerator in {nums}")
        for a in nums:
            if a < 1 or a % 2 == 0 or a > 2 * self.j - 1:
                raise ValueError(f"numerator {a} is not an odd integer in 1..{2 * self.j - 1}")
        if sum(nums) % self.j:
            raise ValueError(f"numerators {nums} do not sum to a multiple of {self.j}")

    @property
    def k(self) -> int:
        return sum(self.numerators) // self.j

    @property
    def h(self) -> int:
        return len(self.numerators)

    def __str__(self) -> str:
        return f"{self.k}=" + "+".join(f"{a}/{self.j}" for a in self.numerators)

    def to_dict(self) -> dict:
        return {"k": self.k, "denominator": self.j, "numerators": list(self.numerators)}


def _dtype(j: int):
    return np.int64 if j <= _INT64_MAX_J else object


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=256)
def subset_sum_counts(j: int) -> np.ndarray:
    """Dense coefficients of prod_{n=1..j}(1 + x^(2n-1)), index = exponent."""
    c = np.zeros(j * j + 1, dtype=_dtype(j))
    c[0] = 1
    for n in range(1, j + 1):
        a = 2 * n - 1
        c[a:] += c[:-a].copy()
    return _frozen(c)


@lru_cache(maxsize=256)
def parts_sum_counts(j: int) -> np.ndarray:
    """Array ``T[h, m]``: number of h-element subsets of {1, 3, ..., 2j-1} with sum m."""
    t = np.zeros((j + 1, j * j + 1), dtype=_dtype(j))
    t[0, 0] = 1
    for n in range(1, j + 1):
        a = 2 * n - 1
        t[1:, a:] += t[:-1, :-a].copy()
    return _frozen(t)


def count_all(j: int, k: int) -> int:
    """Number of ways to write k as a sum of distinct fractions (2n-1)/j, n <= j.

    Returns 0 for k outside 1..j-1.
    """
    if j < 1:
        raise ValueError("j must be positive")
    if not 1 <= k <= j - 1:
        return 0
    return int(subset_sum_counts(j)[k * j])


def count_h(j: int, h: int, k: int) -> int:
    """As :func:`count_all` but with exactly ``h`` fractions."""
    if j < 1:
        raise ValueError("j must be positive")
    if h < 0 or h > j or not 1 <= k <= j - 1:
        return 0
    if j <= _INT64_MAX_J:
        return int(parts_sum_counts(j)[h, k * j])
    return int(_parts_prefix(j, h, k * j)[h, k * j])


@lru_cache(maxsize=1024)
def _parts_prefix(j: int, h: int, m_max: int) -> np.ndarray:
    """Rows 0..h and sums 0..m_max of the ``parts_sum_counts`` table; entries
    are bounded by C(j, h), which decides the dtype."""
    dtype = np.int64 if math.comb(j, h) < 2**63 else object
    t = np.zeros((h + 1, m_max + 1), dtype=dtype)
    t[0, 0] = 1
    for n in range(1, j + 1):
        a = 2 * n - 1
        if a > m_max:
            break
        t[1:, a:] += t[:-1, :-a].copy()
    return _frozen(t)


def enumerate_partitions(
    j: int, k: int, h: int | None = None, cap: int = DEFAULT_CAP
) -> list[PartitionWitness]:
    """All witnesses for (j, k[, h]) in lexicographic order of numerator lists."""
    if j > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(f"j={j} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    expected = count_all(j, k) if h is None else count_h(j, h, k)
    if expected > cap:
        raise CapExceeded(f"{expected} witnesses exceed cap {cap}")
    if expected == 0:
        return []
    odds = [2 * n - 1 for n in range(1, j + 1)]
    # suffix[i] = sum of odds[i:], bounds what the remaining terms can add
    suffix = [0] * (j + 1)
    for i in range(j - 1, -1, -1):
        suffix[i] = suffix[i + 1] + odds[i]

    out: list[PartitionWitness] = []
    chosen: list[int] = []

    def walk(start: int, remaining: int):
        if remaining == 0 and (h is None or len(chosen) == h):
            out.append(PartitionWitness(tuple(chosen), j))
            return
        if h is not None and len(chosen) >= h:
            return
        for i in range(start, j):
            a = odds[i]
            if a > remaining or suffix[i] < remaining:
                break
            chosen.append(a)
            walk(i + 1, remaining - a)
            chosen.pop()

    walk(0, k * j)
    return out


def closed_form_h2(j: int, k: int) -> int:
    """Two-part counts from the closed forms, exact via j mod 4.

    The term i**j + (-i)**j equals 2, 0, -2, 0 for j = 0, 1, 2, 3 (mod 4).
    """
    if j < 3:
        raise ValueError("closed forms hold for j >= 3")
    sign = 1 if j % 2 == 0 else -1
    if k in (1, 3):
        unit = (2, 0, -2, 0)[j % 4]
        num = -sign - 1 + unit + sign * j + j
        assert num % 8 == 0
        return num // 8
    if k == 2:
        num = sign + 2 * j - 1
        assert num % 4 == 0
        return num // 4
    return 0


def construct_witness(j: int, k: int) -> PartitionWitness:
    """Build one witness using pairs that sum to 2 and, for odd k, a part worth 1."""
    if j <= 2 or not 1 <= k <= j - 1:
        raise NoWitness(f"no partition of k={k} over denominator j={j}")
    # pairs (m, 2j - m), outermost first; each contributes 2
    pairs = [(2 * n - 1, 2 * j - (2 * n - 1)) for n in range(1, j // 2 + 1)]
    if k % 2 == 0:
        nums = [a for pair in pairs[: k // 2] for a in pair]
    elif j % 2 == 1:
        nums = [j] + [a for pair in pairs[: (k - 1) // 2] for a in pair]
    elif k == 1:
        nums = [1, j - 1]
    else:
        # drop {1, j-1} (worth 1) from the full series, then intact pairs worth 2
        full = set(range(1, 2 * j, 2)) - {1, j - 1}
        intact = [p for p in pairs if p[0] not in (1, j - 1)]
        for p in intact[: (j - 1 - k) // 2]:
            full -= set(p)
        nums = sorted(full)
    return PartitionWitness(tuple(nums), j)


def exists_partition(j: int, k: int) -> bool:
    return j > 2 and 1 <= k <= j - 1


def center_witness(j: int, h: int) -> PartitionWitness:
    """The ``h`` consecutive central numerators; requires j, h of equal parity."""
    if (j - h) % 2 or not 1 <= h <= j:
        raise ValueError("need 1 <= h <= j with h and j of equal parity")
    start = (j - h) // 2 + 1
    return PartitionWitness(tuple(2 * n - 1 for n in range(start, start + h)), j)


def ends_witness(j: int, h: int) -> PartitionWitness:
    """The first h/2 and last h/2 numerators; requires even h."""
    if h % 2 or not 2 <= h <= j:
        raise ValueError("need even h with 2 <= h <= j")
    half = h // 2
    ns = list(range(1, half + 1)) + list(range(j - half + 1, j + 1))
    return PartitionWitness(tuple(2 * n - 1 for n in ns), j)


def r_polynomial(j: int) -> UniPoly:
    """Polynomial whose x^k coefficient is :func:`count_all` (j, k)."""
    if j < 3:
        raise ValueError("j must be at least 3")
    return UniPoly({k: count_all(j, k) for k in range(1, j)})


def r_h_polynomial(j: int, h: int) -> UniPoly:
    if j < 3:
        raise ValueError("j must be at least 3")
    return UniPoly({k: count_h(j, h, k) for k in range(1, j)})


@dataclass(frozen=True)
class Modality:
    peaks: int
    plateau_widths: tuple[int, ...]
    peak_starts: tuple[int, ...]
    label: str


def classify_modality(seq: Sequence[int]) -> Modality:
    """Count peaks, where a peak is a maximal constant run above its neighbours.

    Runs at either end are compared against their single neighbour; a run
    covering the whole sequence is a peak.
    """
    if len(seq) == 0:
        raise EmptySequence("cannot classify an empty sequence")
    runs = []  # (value, start, width)
    pos = 0
    for value, grp in groupby(seq):
        width = len(list(grp))
        runs.append((value, pos, width))
        pos += width
    widths, starts = [], []
    for i, (value, start, width) in enumerate(runs):
        left_ok = i == 0 or value > runs[i - 1][0]
        right_ok = i == len(runs) - 1 or value > runs[i + 1][0]
        if left_ok and right_ok:
            widths.append(width)
            starts.append(start)
    n = len(widths)
    label = {1: "unimodal", 2: "bimodal"}.get(n, "other")
    return Modality(n, tuple(widths), tuple(starts), label)


@lru_cache(maxsize=4096)
def gaussian_binomial(j: int, h: int) -> UniPoly:
    """q-binomial coefficient [j choose h]_q by the q-Pascal recurrence."""
    if h < 0 or j < 0:
        raise ValueError("j and h must be nonnegative")
    if h > j:
        return UniPoly()
    if h == 0 or h == j:
        return UniPoly({0: 1})
    return gaussian_binomial(j - 1, h - 1) + gaussian_binomial(j - 1, h).shift(h)


def shifted_gaussian(j: int, h: int) -> UniPoly:
    """q^(h(h+1)/2) [j choose h]_q: h distinct parts drawn from 1..j, by sum."""
    return gaussian_binomial(j, h).shift(h * (h + 1) // 2)


def odd_image(parts: Sequence[int]) -> tuple[int, ...]:
    """Map parts from {1..j} to the corresponding odd numbers, n -> 2n - 1."""
    return tuple(2 * n - 1 for n in parts)


def bijection_check(j: int, h: int) -> bool:
    """Coefficient lists of the y^h slices of both products and of the shifted
    q-binomial coincide, and exponents correspond through m -> 2m - h."""
    if j > 30:
        raise ValueError("bijection_check is limited to j <= 30")
    cons = slice_y(expand_consecutive_product(j), h)
    odd = slice_y(expand_odd_product(j), h)
    gauss = shifted_gaussian(j, h)
    if not (cons.coefficient_list() == odd.coefficient_list() == gauss.coefficient_list()):
        return False
    if cons.exponents() != gauss.exponents():
        return False
    return [2 * m - h for m in cons.exponents()] == odd.exponents()


@lru_cache(maxsize=None)
def _rascal_rows(r: int) -> tuple[tuple[int, ...], ...]:
    rows: list[tuple[int, ...]] = [(1,)]
    for i in range(1, r + 1):
        row = [1] * (i + 1)
        for n in range(1, i):
            num = rows[i - 1][n - 1] * rows[i - 1][n] + 1
            den = rows[i - 2][n - 1]
            q, rem = divmod(num, den)
            if rem:
                raise IntegralityViolation(f"T({i},{n}): {num} not divisible by {den}")
            row[n] = q
        rows.append(tuple(row))
    return tuple(rows)


def rascal_row(r: int) -> list[int]:
    """Row ``r`` (0-based) of the Rascal triangle; row r has r + 1 entries."""
    if r < 0:
        raise ValueError("row index must be nonnegative")
    return list(_rascal_rows(r)[r])


def rascal_relation_check(j: int) -> bool:
    """For each h, the number of distinct x-exponents among y^h terms of the odd
    product equals entry h of Rascal row j."""
    if j > 25:
        raise ValueError("rascal_relation_check is limited to j <= 25")
    p = expand_odd_product(j)
    distinct = [len(slice_y(p, h)) for h in range(j + 1)]
    return distinct == rascal_row(j)


def feasibility(j: int, h: int, k: int) -> bool:
    """False when the (j, h, k) problem provably has no solution; True means
    not excluded, not that a solution exists."""
    if j < 3 or k <= 0 or k >= j or k >= 2 * h:
        return False
    return (k * j - h) % 2 == 0


@dataclass(frozen=True)
class CountTable:
    j_range: tuple[int, int]
    k_range: tuple[int, int]
    h: int | None
    counts: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def js(self) -> range:
        return range(self.j_range[0], self.j_range[1] + 1)

    @property
    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)

    def row(self, j: int) -> tuple[int, ...]:
        return self.counts[j - self.j_range[0]]

    def __getitem__(self, jk: tuple[int, int]) -> int:
        j, k = jk
        return self.counts[j - self.j_range[0]][k - self.k_range[0]]


def _table_row(args: tuple[int, range, int | None]) -> tuple[int, ...]:
    j, ks, h = args
    if h is None:
        return tuple(count_all(j, k) for k in ks)
    return tuple(count_h(j, h, k) for k in ks)


def count_table(
    j_range: tuple[int, int], k_range: tuple[int, int], h: int | None = None, workers: int = 1
) -> CountTable:
    """Counts for every (j, k) in the inclusive ranges; rows are independent."""
    (j0, j1), (k0, k1) = j_range, k_range
    if j0 > j1 or k0 > k1 or j0 < 1:
        raise ValueError("ranges must be nonempty with j >= 1")
    ks = range(k0, k1 + 1)
    jobs = [(j, ks, h) for j in range(j0, j1 + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_table_row, jobs))
    else:
        rows = [_table_row(job) for job in jobs]
    return CountTable((j0, j1), (k0, k1), h, tuple(rows))
