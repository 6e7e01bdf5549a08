"""Counting and constructing partitions of integers into fractions with a common denominator."""

from fracpart.errors import (
    CapExceeded,
    DomainError,
    EnumerationTooLarge,
    FracPartError,
    NoWitness,
    NotCoprime,
    PrecisionExhausted,
    PrefixSumTooLarge,
)
from fracpart.even import F_E, EvenSolution, factorize, omega_int, solve_relaxed, solve_strict
from fracpart.odd import (
    PartitionWitness,
    closed_form_h2,
    construct_witness,
    count_all,
    count_h,
    count_table,
    enumerate_partitions,
    gaussian_binomial,
)
from fracpart.omega import HPComplex, OmegaResult, omega_cont
from fracpart.polyarith import BiPoly, UniPoly

__version__ = "0.1.0"

__all__ = [
    "BiPoly", "CapExceeded", "DomainError", "EnumerationTooLarge", "EvenSolution",
    "F_E", "FracPartError", "HPComplex", "NoWitness", "NotCoprime", "OmegaResult",
    "PartitionWitness", "PrecisionExhausted", "PrefixSumTooLarge", "UniPoly",
    "closed_form_h2", "construct_witness", "count_all", "count_h", "count_table",
    "enumerate_partitions", "factorize", "gaussian_binomial", "omega_cont",
    "omega_int", "solve_relaxed", "solve_strict",
]
