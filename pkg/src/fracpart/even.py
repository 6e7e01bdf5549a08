"""Series of consecutive even numerators over a common denominator.

The sum 2/y + 4/y + ... + 2x/y equals (x^2 + x)/y, so a series summing to
``t`` is a positive solution of x^2 + x = y*t.  Under 0 < y < x < t there are
2**omega(t) - 2 of them; relaxing to 0 < x <= t, 0 < y <= t + 1 adds the two
solutions x = t - 1 and x = t that exist for every t.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Iterable

import numpy as np

from fracpart.errors import DomainError, EnumerationTooLarge, NotCoprime

TRIAL_DIVISION_LIMIT = 10**6
PSI_DIRECT_LIMIT = 200
SERIES_LENGTH_LIMIT = 24

# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin over fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_probable_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n, rng)
    _split(d, out, rng)
    _split(n // d, out, rng)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""

    primes: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.primes)

    @property
    def omega(self) -> int:
        return len(self.primes)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.primes]

    def to_line(self) -> str:
        """Cache-file line ``t: p1^e1 p2^e2 ...``."""
        return f"{self.value}: " + " ".join(f"{p}^{e}" for p, e in self.primes)

    @classmethod
    def from_line(cls, line: str) -> Factorization:
        head, _, body = line.partition(":")
        pairs = []
        for tok in body.split():
            p, _, e = tok.partition("^")
            pairs.append((int(p), int(e or 1)))
        f = cls(tuple(sorted(pairs)))
        if f.value != int(head):
            raise ValueError(f"cache line does not reconstruct {head}: {line!r}")
        return f


@lru_cache(maxsize=65536)
def factorize(t: int) -> Factorization:
    """Trial division to 10**6, then Miller-Rabin and Pollard-Brent rho."""
    if t < 1:
        raise DomainError("t must be positive")
    out: dict[int, int] = {}
    n = t
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    i = 5
    while i * i <= n and i <= TRIAL_DIVISION_LIMIT:
        for p in (i, i + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        i += 6
    if n > 1:
        if i * i > n:
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out, random.Random(n))
    return Factorization(tuple(sorted(out.items())))


def write_factor_cache(path: str | Path, ts: Iterable[int]) -> None:
    Path(path).write_text("".join(factorize(t).to_line() + "\n" for t in ts))


def read_factor_cache(path: str | Path) -> dict[int, Factorization]:
    out = {}
    for line in Path(path).read_text().splitlines():
        if line.strip():
            f = Factorization.from_line(line)
            out[f.value] = f
    return out


def omega_int(t: int) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    return factorize(t).omega


def omega_sieve(n: int) -> np.ndarray:
    """omega(t) for every 0 <= t <= n (entry 0 is meaningless and set to 0)."""
    w = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, n + 1):
        if w[p] == 0:
            w[p::p] += 1
    return w


@dataclass(frozen=True)
class EvenSolution:
    t: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x + self.x != self.y * self.t:
            raise ValueError(f"x^2 + x != y*t for {self}")

    @property
    def strict(self) -> bool:
        return 0 < self.y < self.x < self.t

    def to_dict(self) -> dict:
        return {"t": self.t, "x": self.x, "y": self.y}


def _roots_mod_t(t: int) -> list[int]:
    """x in 1..t with t | x^2 + x, by direct scan."""
    if t < 2**31:
        x = np.arange(1, t + 1, dtype=np.int64)
        return [int(v) for v in x[(x * (x + 1)) % t == 0]]
    return [x for x in range(1, t + 1) if (x * x + x) % t == 0]


def solve_relaxed(t: int) -> list[EvenSolution]:
    """All (x, y) with x^2 + x = y*t, 0 < x <= t and 0 < y <= t + 1, ascending in x."""
    if t < 1:
        raise DomainError("t must be positive")
    return [EvenSolution(t, x, (x * x + x) // t) for x in _roots_mod_t(t)]


def solve_strict(t: int) -> list[EvenSolution]:
    """All (x, y) with x^2 + x = y*t and 0 < y < x < t, ascending in x."""
    return [s for s in solve_relaxed(t) if s.strict]


def crt_roots(t: int) -> list[int]:
    """Roots of x^2 + x = 0 mod t in 1..t, lifted from x = 0 or -1 mod each p^e."""
    if t < 1:
        raise DomainError("t must be positive")
    moduli = factorize(t).prime_powers()
    roots = []
    for choice in product((0, 1), repeat=len(moduli)):
        x = 0
        for q, c in zip(moduli, choice):
            r = (q - 1) if c else 0
            m = t // q
            x += r * m * pow(m, -1, q)
        x %= t
        roots.append(x or t)
    return sorted(set(roots))


def solve_strict_crt(t: int) -> list[EvenSolution]:
    """Same result as :func:`solve_strict`, built from prime-power residues."""
    return [
        s for s in (EvenSolution(t, x, (x * x + x) // t) for x in crt_roots(t)) if s.strict
    ]


def F_E(t: int) -> int:
    """Number of even-numerator series for t with 0 < y < x < t: 2**omega(t) - 2."""
    if t <= 1:
        raise DomainError("F_E is defined for t >= 2")
    return 2 ** omega_int(t) - 2


def psi_vanishes(t: int, x: int) -> bool:
    """Whether some factor x^2 + x - y*t, 1 <= y <= t + 1, is zero."""
    y, r = divmod(x * x + x, t)
    return r == 0 and 1 <= y <= t + 1


def psi_eval(t: int, x: int) -> int:
    """Exact value of prod_{y=1..t+1} (x^2 + x - y*t)."""
    if t < 1 or x < 1:
        raise DomainError("t and x must be positive")
    if psi_vanishes(t, x):
        return 0
    if t > PSI_DIRECT_LIMIT:
        raise DomainError(f"direct evaluation of a nonzero Psi_t is limited to t <= {PSI_DIRECT_LIMIT}")
    f = x * x + x
    return math.prod(f - y * t for y in range(1, t + 2))


def psi_root_count(t: int) -> int:
    """Number of x in 1..t at which Psi_t vanishes."""
    if t < 2:
        raise DomainError("t must be at least 2")
    return sum(psi_vanishes(t, x) for x in range(1, t + 1))


def pochhammer_identity_check(t: int, x: int) -> bool:
    """Compare Psi_t(x) with (-t)^(t+1) * (1 - (x^2 + x)/t)_(t+1) in exact rationals."""
    if t < 1 or x < 1:
        raise DomainError("t and x must be positive")
    a = 1 - Fraction(x * x + x, t)
    rising = math.prod((a + m for m in range(t + 1)), start=Fraction(1))
    return psi_eval(t, x) == (-t) ** (t + 1) * rising


def crt_structure_check(m: int, n: int) -> bool:
    """Root counts are multiplicative over coprime factors."""
    if m < 2 or n < 2:
        raise DomainError("m and n must be at least 2")
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) = {math.gcd(m, n)}")
    return psi_root_count(m * n) == psi_root_count(m) * psi_root_count(n)


@dataclass(frozen=True)
class SeriesWitness:
    numerators: tuple[int, ...]
    denominator: int

    @property
    def k(self) -> int:
        return sum(self.numerators) // self.denominator

    def __str__(self) -> str:
        return f"{self.k}=" + "+".join(f"{a}/{self.denominator}" for a in self.numerators)

    def to_dict(self) -> dict:
        return {"k": self.k, "denominator": self.denominator, "numerators": list(self.numerators)}


def even_series_partitions(t: int, x: int, y: int, target: int | None = None) -> list[SeriesWitness]:
    """Subsets of {2/y, 4/y, ..., 2x/y} with integer sum.

    Without ``target`` every sum k with 0 < k < t is listed; with ``target``
    only subsets summing to it.  Distinct subsets with equal sums are separate
    witnesses.  Ordered by k, then subset size, then lexicographically.
    """
    if x * x + x != y * t or not (0 < x <= t and 0 < y <= t + 1):
        raise DomainError(f"(x={x}, y={y}) is not a series for t={t}")
    if x > SERIES_LENGTH_LIMIT:
        raise EnumerationTooLarge(f"series length {x} exceeds {SERIES_LENGTH_LIMIT}")
    nums = [2 * n for n in range(1, x + 1)]
    out = []
    for size in range(1, x + 1):
        for combo in combinations(nums, size):
            s = sum(combo)
            if s % y:
                continue
            k = s // y
            if (k == target) if target is not None else (0 < k < t):
                out.append(SeriesWitness(combo, y))
    out.sort(key=lambda w: (w.k, len(w.numerators), w.numerators))
    return out


def series_coverage(t: int, x: int, y: int) -> list[int]:
    """The k in 1..t-1 that the series can be partitioned into."""
    return sorted({w.k for w in even_series_partitions(t, x, y)})
