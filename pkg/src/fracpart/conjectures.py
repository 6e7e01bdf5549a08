"""Falsification scans for the open questions about numerator sequences and modality.

Every scan is deterministic and reports its first failures in ascending order.
A ``counterexample`` verdict is a finding to record, not a crash.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from fracpart.errors import DomainError, PrefixSumTooLarge
from fracpart.odd import classify_modality, r_polynomial, subset_sum_counts

DEFAULT_PREFIX_SUM_BOUND = 10**7


@dataclass(frozen=True)
class NumeratorSequence:
    name: str
    term: Callable[[int], int] = field(repr=False)
    note: str = ""

    def prefix(self, j: int) -> list[int]:
        return sequence_prefix(self, j)


def _fibonacci(n: int) -> int:
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


SEQUENCES: dict[str, NumeratorSequence] = {
    "odd": NumeratorSequence("odd", lambda n: 2 * n - 1),
    "lazy-caterer": NumeratorSequence("lazy-caterer", lambda n: n * (n - 1) // 2 + 1),
    "cake": NumeratorSequence("cake", lambda n: (n**3 - 3 * n**2 + 8 * n) // 6),
    "fibonacci": NumeratorSequence(
        "fibonacci",
        _fibonacci,
        note="starts 1, 1; subsets are over term positions, so both leading 1s may be used",
    ),
}


def custom_sequence(terms: Sequence[int], name: str = "custom") -> NumeratorSequence:
    """A finite user-supplied prefix; asking for more terms than given is an error."""
    terms = tuple(int(a) for a in terms)
    if any(a <= 0 for a in terms):
        raise ValueError("sequence terms must be positive")

    def term(n: int) -> int:
        if n > len(terms):
            raise DomainError(f"custom sequence has only {len(terms)} terms")
        return terms[n - 1]

    return NumeratorSequence(name, term)


def get_sequence(name: str) -> NumeratorSequence:
    try:
        return SEQUENCES[name]
    except KeyError:
        raise KeyError(f"unknown sequence {name!r}; choose from {sorted(SEQUENCES)}") from None


def sequence_prefix(seq: NumeratorSequence | str, j: int) -> list[int]:
    if isinstance(seq, str):
        seq = get_sequence(seq)
    if j < 1:
        raise ValueError("j must be positive")
    out = [seq.term(n) for n in range(1, j + 1)]
    if any(a <= 0 for a in out):
        raise ValueError(f"sequence {seq.name} produced a nonpositive term")
    return out


@dataclass
class ConjectureReport:
    name: str
    j_range: tuple[int, int]
    failures: list[tuple[int, int]] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "counterexample" if self.failures else "consistent"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "jRange": list(self.j_range),
            "verdict": self.verdict,
            "failures": [list(f) for f in self.failures],
            "details": {str(k): v for k, v in self.details.items()},
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"{self.name}: j={self.j_range[0]}..{self.j_range[1]} -> {self.verdict}"]
        for f in self.failures:
            lines.append(f"  failure at j={f[0]}: {f[1]}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def _subset_sums(terms: Sequence[int]) -> int:
    """Bitset whose bit s is set iff some subset of term positions sums to s."""
    reach = 1
    for a in terms:
        reach |= reach << a
    return reach


def missing_k(terms: Sequence[int], j: int) -> list[int]:
    """The k with 1 <= k < floor(G) that are not sums of distinct terms over j,
    where G = sum(terms)/j."""
    g_floor = sum(terms) // j
    bits = bin(_subset_sums(terms))[:1:-1]  # bits[s] == "1" iff s is reachable
    return [k for k in range(1, g_floor) if bits[k * j] != "1"]


def enables_all_k(
    seq: NumeratorSequence | str, j: int, bound: int = DEFAULT_PREFIX_SUM_BOUND
) -> ConjectureReport:
    """Check that every k < floor(G) is a sum of distinct fractions n_i / j."""
    if isinstance(seq, str):
        seq = get_sequence(seq)
    if j < 3:
        raise DomainError("the question is posed for j > 2 only")
    terms = sequence_prefix(seq, j)
    if sum(terms) > bound:
        raise PrefixSumTooLarge(f"prefix sum {sum(terms)} exceeds bound {bound}")
    report = ConjectureReport(seq.name, (j, j))
    report.failures = [(j, k) for k in missing_k(terms, j)]
    report.details[j] = {"G_floor": sum(terms) // j}
    if seq.note:
        report.notes.append(seq.note)
    return report


def scan_sequence(
    seq: NumeratorSequence | str, j_max: int, j_min: int = 3, bound: int = DEFAULT_PREFIX_SUM_BOUND
) -> ConjectureReport:
    """:func:`enables_all_k` for every j in j_min..j_max, merged into one report."""
    if isinstance(seq, str):
        seq = get_sequence(seq)
    if j_max < j_min:
        raise ValueError("empty j range")
    report = ConjectureReport(seq.name, (j_min, j_max))
    for j in range(j_min, j_max + 1):
        single = enables_all_k(seq, j, bound)
        report.failures.extend(single.failures)
        report.details.update(single.details)
    if seq.note:
        report.notes.append(seq.note)
    return report


def scan_modality(j_max: int, j_min: int = 3) -> ConjectureReport:
    """Classify the count sequence k = 1..j-1 for each j; 3+ peaks is a counterexample."""
    if j_max < 3:
        raise ValueError("j_max must be at least 3")
    report = ConjectureReport("modality", (j_min, j_max))
    for j in range(j_min, j_max + 1):
        coeffs = [r_polynomial(j)[k] for k in range(1, j)]
        m = classify_modality(coeffs)
        report.details[j] = m.label
        if m.peaks >= 3:
            report.failures.append((j, m.peaks))
    return report


def scan_full_poly_modality(j: int) -> int:
    """Peak count of every coefficient of prod_{n=1..j}(1 + x^(2n-1)), zeros included."""
    if j > 30:
        raise ValueError("j must be at most 30")
    if j < 1:
        raise ValueError("j must be positive")
    return classify_modality([int(v) for v in subset_sum_counts(j)]).peaks
