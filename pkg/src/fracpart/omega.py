"""Complex continuation of the prime omega function and the 2^omega Dirichlet series.

    omega(z) = log2( sum_{x=1..ceil(Re z)} sinc( prod_{y=1..ceil(Re z)+1} (x^2 + x - y z) ) )

with the normalized sinc.  For non-real z the sinc arguments have large
imaginary parts and |sinc| grows like exp(pi |Im w|), so every term is
carried as a complex logarithm and the sum is taken by log-sum-exp.

mpmath supplies the binary floats; precision is explicit everywhere.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mpc, mpf

from fracpart.errors import DomainError, PrecisionExhausted
from fracpart.even import omega_sieve, psi_vanishes

DEFAULT_PRECISION = 256
MAX_PRECISION = 16384
PRECISION_ENV = "FRACPART_PRECISION_BITS"
_GUARD_BITS = 32
# beyond this |Im(pi w)| sin() is evaluated through its dominant exponential
_LOG_BRANCH_THRESHOLD = 20
# Euler-Maclaurin is applied from this n on
_EM_START = 40

_mp = mpmath.mp


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    return int(raw) if raw else DEFAULT_PRECISION


def _to_mpf(value, prec: int) -> mpf:
    with mpmath.workprec(prec):
        if isinstance(value, Fraction):
            return mpf(value.numerator) / value.denominator
        return mpf(value)


@dataclass(frozen=True)
class HPComplex:
    """Complex number with an explicit binary precision (bits)."""

    re: mpf
    im: mpf
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.precision < 53:
            raise ValueError("precision must be at least 53 bits")

    @classmethod
    def of(cls, value, precision: int = DEFAULT_PRECISION) -> HPComplex:
        """Build from an int, Fraction, float, complex, mpf/mpc or decimal string."""
        if isinstance(value, HPComplex):
            return cls(value.re, value.im, max(precision, value.precision))
        if isinstance(value, str):
            return parse_complex(value, precision)
        if isinstance(value, (complex, mpc)):
            return cls(_to_mpf(value.real, precision), _to_mpf(value.imag, precision), precision)
        return cls(_to_mpf(value, precision), _to_mpf(0, precision), precision)

    @property
    def value(self) -> mpc:
        with mpmath.workprec(self.precision):
            return mpc(self.re, self.im)

    def _lift(self, other) -> tuple[HPComplex, int]:
        if not isinstance(other, HPComplex):
            other = HPComplex.of(other, self.precision)
        return other, max(self.precision, other.precision)

    def _wrap(self, v: mpc, prec: int) -> HPComplex:
        return HPComplex(v.real, v.imag, prec)

    def __add__(self, other) -> HPComplex:
        other, prec = self._lift(other)
        with mpmath.workprec(prec):
            return self._wrap(mpc(self.re, self.im) + mpc(other.re, other.im), prec)

    __radd__ = __add__

    def __sub__(self, other) -> HPComplex:
        other, prec = self._lift(other)
        with mpmath.workprec(prec):
            return self._wrap(mpc(self.re, self.im) - mpc(other.re, other.im), prec)

    def __rsub__(self, other) -> HPComplex:
        other, prec = self._lift(other)
        return other - self

    def __mul__(self, other) -> HPComplex:
        other, prec = self._lift(other)
        with mpmath.workprec(prec):
            return self._wrap(mpc(self.re, self.im) * mpc(other.re, other.im), prec)

    __rmul__ = __mul__

    def __neg__(self) -> HPComplex:
        return HPComplex(-self.re, -self.im, self.precision)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real_integer(self) -> bool:
        return self.im == 0 and mpmath.isint(self.re)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return format_complex(self, 20)


def format_complex(z: HPComplex, digits: int = 15) -> str:
    with mpmath.workprec(z.precision):
        re_s = mpmath.nstr(z.re, digits)
        if z.im == 0:
            return re_s
        sign = "-" if z.im < 0 else "+"
        return f"{re_s}{sign}{mpmath.nstr(abs(z.im), digits)}i"


_CONSTANTS = {"pi": lambda: +_mp.pi, "e": lambda: +_mp.e}


def _parse_real(token: str, prec: int) -> mpf:
    token = token.strip()
    sign = 1
    if token[:1] in "+-":
        sign = -1 if token[0] == "-" else 1
        token = token[1:]
    if token == "":
        return _to_mpf(sign, prec)
    if token in _CONSTANTS:
        with mpmath.workprec(prec):
            return sign * _CONSTANTS[token]()
    return _to_mpf(sign * Fraction(token), prec)


_SPLIT = re.compile(r"(?<=[0-9a-z.])(?<![eE])([+-])")


def parse_complex(text: str, precision: int = DEFAULT_PRECISION) -> HPComplex:
    """Parse ``"4+i"``, ``"-6.0963+4.5323i"``, ``"pi"``, ``"2.5"``, ``"3e-2-1j"``.

    Decimal components are read exactly and rounded once to ``precision``.
    """
    s = text.strip().replace(" ", "").lower()
    if not s:
        raise ValueError("empty complex literal")
    if s[-1] in "ij" and s not in _CONSTANTS:
        body = s[:-1]
        m = None
        for m in _SPLIT.finditer(body):
            pass
        if m is None:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[: m.start()], body[m.start():]
        if im_part in ("", "+", "-"):
            im_part += "1"
        try:
            return HPComplex(_parse_real(re_part, precision), _parse_real(im_part, precision), precision)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse complex literal {text!r}") from exc
    try:
        return HPComplex(_parse_real(s, precision), _to_mpf(0, precision), precision)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse complex literal {text!r}") from exc


def _normalize_phase(phase: mpf) -> mpf:
    two_pi = 2 * _mp.pi
    p = phase - two_pi * mpmath.floor(phase / two_pi)
    if p > _mp.pi:
        p -= two_pi
    return p


@dataclass(frozen=True)
class LogComplex:
    """log of a nonzero complex value: log_magnitude + i*phase, phase in (-pi, pi]."""

    log_magnitude: mpf
    phase: mpf

    @classmethod
    def from_log(cls, v: mpc) -> LogComplex:
        return cls(mpf(v.real), _normalize_phase(mpf(v.imag)))

    def to_mpc(self) -> mpc:
        return mpc(self.log_magnitude, self.phase)

    def exp(self) -> mpc:
        return mpmath.exp(self.to_mpc())


def sinc_c(w: HPComplex) -> HPComplex:
    """Normalized sinc, sin(pi w)/(pi w); exactly 1 at 0 and 0 at nonzero real integers."""
    if w.is_zero():
        return HPComplex.of(1, w.precision)
    if w.is_real_integer():
        return HPComplex.of(0, w.precision)
    with mpmath.workprec(w.precision + _GUARD_BITS):
        u = _mp.pi * w.value
        if abs(u.imag) <= _LOG_BRANCH_THRESHOLD:
            v = mpmath.sin(u) / u
        else:
            v = log_sinc_c(w).exp()
    return HPComplex(v.real, v.imag, w.precision)


def log_sinc_c(w: HPComplex) -> LogComplex:
    """log(sin(pi w)) - log(pi w) without forming sin(pi w) when it would be huge."""
    if w.is_zero():
        raise DomainError("log sinc is undefined at 0")
    if w.is_real_integer():
        raise DomainError("sinc vanishes at nonzero integers")
    with mpmath.workprec(w.precision + _GUARD_BITS):
        u = _mp.pi * w.value
        if u.imag > _LOG_BRANCH_THRESHOLD:
            # sin u = (1 - e^{2iu}) e^{-iu} / (-2i)
            log_sin = -1j * u + mpmath.log((1 - mpmath.exp(2j * u)) / mpc(0, -2))
        elif u.imag < -_LOG_BRANCH_THRESHOLD:
            # sin u = (1 - e^{-2iu}) e^{iu} / (2i)
            log_sin = 1j * u + mpmath.log((1 - mpmath.exp(-2j * u)) / mpc(0, 2))
        else:
            log_sin = mpmath.log(mpmath.sin(u))
        return LogComplex.from_log(log_sin - mpmath.log(u))


def _tree_sum(values: list):
    """Pairwise reduction in a fixed order, so results do not depend on scheduling."""
    while len(values) > 1:
        nxt = [values[i] + values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def log_sum_exp(terms: list[LogComplex], real: bool = False) -> tuple[mpc, int]:
    """log of sum(exp(t)) and the number of bits lost to cancellation.

    With ``real`` the sum is known to be real and its imaginary roundoff is
    dropped, so a negative sum lands on the principal branch (phase +pi).
    """
    top = max(t.log_magnitude for t in terms)
    scaled = [mpmath.exp(mpc(t.log_magnitude - top, t.phase)) for t in terms]
    s = _tree_sum(scaled)
    if real:
        s = mpc(s.real, 0)
    if s == 0:
        return mpc(0), _mp.prec
    lost = max(0, int(mpmath.ceil(-mpmath.log(abs(s), 2))))
    return mpmath.log(s) + top, lost


@dataclass(frozen=True)
class OmegaResult:
    value: HPComplex
    err_bound: mpf
    precision_bits: int

    def to_dict(self) -> dict:
        """JSON form; enough digits that parsing at ``precisionBits`` restores every bit."""
        digits = int(self.precision_bits * math.log10(2)) + 3
        return {
            "re": mpmath.nstr(self.value.re, digits),
            "im": mpmath.nstr(self.value.im, digits),
            "errBound": mpmath.nstr(self.err_bound, digits),
            "precisionBits": self.precision_bits,
        }


def omega_integer_sum(t: int) -> int:
    """Inner sum at a positive integer: the number of x in 1..t where Psi_t vanishes."""
    return sum(psi_vanishes(t, x) for x in range(1, t + 1))


def _omega_terms(z: HPComplex, prec: int) -> tuple[list[LogComplex], int]:
    """Log-domain sinc terms at working precision ``prec`` plus the count of exact 1s."""
    n = int(mpmath.ceil(z.re))
    ones = 0
    logs = []
    with mpmath.workprec(prec):
        zc = mpc(z.re, z.im)
        for x in range(1, n + 1):
            f = x * x + x
            w = mpc(1)
            for y in range(1, n + 2):
                w *= f - y * zc
            hw = HPComplex(w.real, w.imag, prec)
            if hw.is_zero():
                ones += 1
            elif not hw.is_real_integer():
                logs.append(log_sinc_c(hw))
    if ones:
        logs.append(LogComplex(mpf(math.log(ones)), mpf(0)))
    return logs, n


def _omega_at(z: HPComplex, prec: int) -> tuple[mpc, int]:
    logs, _ = _omega_terms(z, prec)
    if not logs:
        raise DomainError(f"the inner sum vanishes exactly at z={z}")
    with mpmath.workprec(prec):
        log_s, lost = log_sum_exp(logs, real=z.im == 0)
        return log_s / mpmath.log(2), lost


def omega_cont(z, precision_bits: int | None = None) -> OmegaResult:
    """Continuation of omega to complex z with Re z > 0 (principal log branch).

    Precision doubles automatically while cancellation in the inner sum eats
    into the requested bits; ``err_bound`` is the change against a run at
    twice the final precision, floored at the precision actually achieved.
    """
    prec = precision_bits or default_precision()
    z = HPComplex.of(z, prec)
    if z.re <= 0:
        raise DomainError("omega_cont requires Re(z) > 0")
    if z.is_real_integer():
        count = omega_integer_sum(int(z.re))
        with mpmath.workprec(prec):
            v = mpmath.log(count, 2)
        return OmegaResult(HPComplex(v, mpf(0), prec), mpf(0), prec)

    while True:
        if prec > MAX_PRECISION:
            raise PrecisionExhausted(f"cancellation persists beyond {MAX_PRECISION} bits")
        v, lost = _omega_at(z, prec)
        if lost < prec - _GUARD_BITS:
            break
        prec *= 2
    v_ref, _ = _omega_at(z, 2 * prec)
    with mpmath.workprec(2 * prec):
        achieved = prec - lost
        floor = mpmath.ldexp(max(abs(v_ref), 1), -achieved)
        err = max(abs(v_ref - v), floor)
    with mpmath.workprec(prec):
        # report at the achieved precision; rounding costs at most one ulp
        re, im = +v_ref.real, +v_ref.imag
        err = err + mpmath.ldexp(max(abs(v_ref), 1), -prec)
        return OmegaResult(HPComplex(re, im, prec), err, prec)


def dirichlet_partial(s, T: int, precision: int = 128) -> mpf:
    """sum_{t=1..T} 2^omega(t) / t^s with omega exact."""
    with mpmath.workprec(precision):
        s = _to_mpf(Fraction(s) if isinstance(s, str) else s, precision)
        if s <= 2:
            raise DomainError("the series is only considered for s > 2")
        if T < 1:
            raise DomainError("T must be positive")
        w = omega_sieve(T)
        return mpmath.fsum(mpf(2 ** int(w[t])) * mpf(t) ** (-s) for t in range(1, T + 1))


@lru_cache(maxsize=None)
def _bernoulli_even(count: int) -> tuple[Fraction, ...]:
    """B_2, B_4, ..., B_{2*count} from the standard recurrence."""
    b = [Fraction(1)]
    for m in range(1, 2 * count + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(b[2 * k] for k in range(1, count + 1))


def power_tail(sigma, N: int, terms: int = 20) -> mpf:
    """sum_{n>=N} n^(-sigma) by Euler-Maclaurin, for sigma > 1.

    The expansion is only asymptotic, so terms below n = 40 are summed directly.
    """
    sigma = mpf(sigma)
    start = max(N, _EM_START)
    head = mpmath.fsum(mpf(m) ** (-sigma) for m in range(N, start))
    n = mpf(start)
    total = head + n ** (1 - sigma) / (sigma - 1) + n ** (-sigma) / 2
    rising = sigma  # sigma (sigma+1) ... (sigma+2k-2)
    for k, b in enumerate(_bernoulli_even(terms), start=1):
        total += mpf(b.numerator) / b.denominator / math.factorial(2 * k) * rising * n ** (-sigma - 2 * k + 1)
        rising *= (sigma + 2 * k - 1) * (sigma + 2 * k)
    return total


def zeta_real(sigma) -> mpf:
    """Riemann zeta at real sigma > 1."""
    sigma = mpf(sigma)
    if sigma <= 1:
        raise DomainError("zeta_real needs sigma > 1")
    return power_tail(sigma, 1)


def zeta_ratio(s, precision: int = 128) -> mpf:
    """zeta(s)^2 / zeta(2s), the sum of 2^omega(n)/n^s, for real s > 2."""
    with mpmath.workprec(precision):
        s = _to_mpf(Fraction(s) if isinstance(s, str) else s, precision)
        if s <= 2:
            raise DomainError("zeta_ratio is only considered for s > 2")
        return zeta_real(s) ** 2 / zeta_real(2 * s)


def dirichlet_tail_bound(s, T: int, precision: int = 128) -> mpf:
    """sum_{t>T} t^(1-s), which dominates the omitted terms since 2^omega(t) <= t."""
    with mpmath.workprec(precision):
        s = _to_mpf(Fraction(s) if isinstance(s, str) else s, precision)
        return power_tail(s - 1, T + 1)
