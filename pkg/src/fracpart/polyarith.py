"""Exact sparse polynomials in x (``UniPoly``) and in x, y (``BiPoly``).

Coefficients are Python ints, so arithmetic never overflows.  Zero
coefficients are never stored; the zero polynomial is the empty map.

Text rendering follows the printed style of the source tables: terms in
descending x-exponent (then descending y-exponent), unit coefficients
elided, braces around exponents with more than one digit::

    >>> str(expand_odd_product(2))
    'x^4y^2+x^3y+xy+1'
"""

from __future__ import annotations

import json
from functools import reduce
from typing import Iterable, Iterator, Mapping

__all__ = [
    "UniPoly",
    "BiPoly",
    "poly_mul",
    "expand_odd_product",
    "expand_consecutive_product",
    "expand_qs",
    "slice_y",
    "restrict_multiples",
]


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    if e < 10:
        return f"{var}^{e}"
    return f"{var}^{{{e}}}"


def _join_terms(terms: Iterable[tuple[int, str]]) -> str:
    out = []
    for c, mono in terms:
        if mono == "":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out) if out else "0"


class UniPoly:
    """Sparse univariate polynomial with exact integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if v:
                c[int(e)] = int(v)
        self._c = c

    @classmethod
    def from_list(cls, values: Iterable[int], offset: int = 0) -> UniPoly:
        """Build from a dense ascending coefficient list starting at ``x**offset``."""
        return cls({offset + i: v for i, v in enumerate(values)})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> UniPoly:
        return cls({e: c})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int | None:
        """Largest stored exponent, or None for the zero polynomial."""
        return max(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __len__(self) -> int:
        return len(self._c)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def coefficient_list(self) -> list[int]:
        """Nonzero coefficients in ascending exponent order."""
        return [c for _, c in self.items()]

    def dense(self) -> list[int]:
        """Coefficients of x**0 .. x**degree, zeros included."""
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(self.degree + 1)]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: UniPoly) -> UniPoly:
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return UniPoly(c)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return UniPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for ea, va in self._c.items():
            for eb, vb in other._c.items():
                out[ea + eb] = out.get(ea + eb, 0) + va * vb
        return UniPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        """Multiply by ``x**k``."""
        return UniPoly({e + k: v for e, v in self._c.items()})

    def __call__(self, x):
        return sum(v * x**e for e, v in self._c.items())

    def __repr__(self) -> str:
        return f"UniPoly({self.items()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        return _join_terms((v, _power(var, e)) for e, v in sorted(self._c.items(), reverse=True))

    def to_records(self) -> list[dict]:
        return [{"x": e, "y": 0, "c": str(v)} for e, v in sorted(self._c.items(), reverse=True)]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> UniPoly:
        out: dict[int, int] = {}
        for r in records:
            if int(r.get("y", 0)) != 0:
                raise ValueError("univariate record carries a y exponent")
            out[int(r["x"])] = out.get(int(r["x"]), 0) + int(r["c"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> UniPoly:
        return cls.from_records(json.loads(text))


class BiPoly:
    """Sparse polynomial in x and y keyed by ``(x_exponent, y_exponent)``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        for (ex, ey), v in (coeffs or {}).items():
            if ex < 0 or ey < 0:
                raise ValueError(f"negative exponent {(ex, ey)}")
            if v:
                c[(int(ex), int(ey))] = int(v)
        self._c = c

    @classmethod
    def one(cls) -> BiPoly:
        return cls({(0, 0): 1})

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return dict(self._c)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._c.get(key, 0)

    def __len__(self) -> int:
        return len(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_x(self) -> int | None:
        return max(ex for ex, _ in self._c) if self._c else None

    @property
    def max_y(self) -> int | None:
        return max(ey for _, ey in self._c) if self._c else None

    def canonical_items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in descending x-exponent, then descending y-exponent."""
        return sorted(self._c.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self.canonical_items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: BiPoly) -> BiPoly:
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    def __mul__(self, other: BiPoly) -> BiPoly:
        return poly_mul(self, other)

    def __call__(self, x, y):
        return sum(v * x**ex * y**ey for (ex, ey), v in self._c.items())

    def __repr__(self) -> str:
        return f"BiPoly({len(self._c)} terms)"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        return _join_terms(
            (v, _power("x", ex) + _power("y", ey)) for (ex, ey), v in self.canonical_items()
        )

    def to_records(self) -> list[dict]:
        return [{"x": ex, "y": ey, "c": str(v)} for (ex, ey), v in self.canonical_items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> BiPoly:
        out: dict[tuple[int, int], int] = {}
        for r in records:
            key = (int(r["x"]), int(r["y"]))
            out[key] = out.get(key, 0) + int(r["c"])
        return cls(out)

    @classmethod
    def from_json(cls, text: str) -> BiPoly:
        return cls.from_records(json.loads(text))


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    out: dict[tuple[int, int], int] = {}
    for (ax, ay), va in a._c.items():
        for (bx, by), vb in b._c.items():
            key = (ax + bx, ay + by)
            out[key] = out.get(key, 0) + va * vb
    return BiPoly(out)


def _binomial_factor(x_exp: int) -> BiPoly:
    return BiPoly({(0, 0): 1, (x_exp, 1): 1})


def expand_odd_product(j: int) -> BiPoly:
    """Return prod_{n=1..j} (1 + y x^(2n-1)); the empty product (j=0) is 1."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return reduce(poly_mul, (_binomial_factor(2 * n - 1) for n in range(1, j + 1)), BiPoly.one())


def expand_consecutive_product(j: int) -> BiPoly:
    """Return prod_{n=1..j} (1 + y x^n)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    return reduce(poly_mul, (_binomial_factor(n) for n in range(1, j + 1)), BiPoly.one())


def expand_qs(s: int) -> UniPoly:
    """Return prod_{n=1..s} (1 + x^n); coefficient of x^m counts distinct partitions
    of m with parts at most s."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    dense = [1] + [0] * (s * (s + 1) // 2)
    top = 0
    for n in range(1, s + 1):
        top += n
        for m in range(top, n - 1, -1):
            dense[m] += dense[m - n]
    return UniPoly.from_list(dense)


def slice_y(p: BiPoly, h: int) -> UniPoly:
    """Univariate polynomial in x formed by the coefficients of y^h."""
    return UniPoly({ex: v for (ex, ey), v in p._c.items() if ey == h})


def restrict_multiples(p: UniPoly, j: int) -> UniPoly:
    """Keep only terms whose exponent is a positive multiple of j."""
    if j < 1:
        raise ValueError("j must be positive")
    return UniPoly({e: v for e, v in p._c.items() if e > 0 and e % j == 0})
