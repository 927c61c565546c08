"""Verification of the Lucas harmonic congruences.

The central statement checked here: for n >= 5,

    sum_{j=1}^{n-1} v_j/u_j  ==  (n^2 - 1) * delta / 6 * u_n / v_n   (mod w_n^2)

where w_n is the primitive part of u_n. Specializing to Fibonacci numbers
and a prime p with rank of apparition n gives the mod p^2 corollary; the
Kimball-Webb congruence (sum vanishes mod p^2 when delta = 0 or the rank is
p +- 1) and the classical Wolstenholme congruence for harmonic numbers are
verified by the same machinery.

Both sides are evaluated twice: by pure modular arithmetic (one inverse per
term, scales to large n) and, in tests, by exact rational arithmetic via
``exact_sides``. Verification uses modulus w_n^2 directly rather than
per-prime-power moduli: by the Chinese remainder theorem the two forms are
equivalent, and this avoids factoring w_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, mod_inverse
from .errors import DegenerateSequence, InvalidArgument, NotInvertible
from .lucas import LucasParams, LucasTable, lucas_table, rank_of_apparition
from .primitive import primitive_part

__all__ = ["CongruenceReport", "lucas_harmonic_sum_mod", "wolstenholme_rhs_mod",
           "exact_sides", "verify_theorem", "verify_corollary_fib",
           "verify_kimball_webb", "verify_wolstenholme"]

FIBONACCI = LucasParams(1, -1)


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of one congruence verification.

    Residues are canonical (in [0, modulus)); ``holds`` is residue equality.
    A trivial modulus (w_n = 1) holds vacuously. ``degenerate`` marks a zero
    sequence term that makes the statement undefined; ``applicable`` is False
    when a premise (e.g. the Kimball-Webb rank condition) fails; ``error``
    carries a NotInvertible marker for out-of-hypothesis inputs where a
    residue pair cannot be formed.
    """

    a: int | None
    b: int | None
    n: int
    w: int
    modulus: int
    lhs_residue: int | None
    rhs_residue: int | None
    holds: bool
    trivial: bool
    degenerate: bool
    rank_used: int | None = None
    in_hypothesis: bool = True
    applicable: bool = True
    error: str | None = None


def _table_for(params: LucasParams, n: int, table: LucasTable | None) -> LucasTable:
    if table is not None and table.params == params and table.n >= n:
        return table
    return lucas_table(params, n)


def lucas_harmonic_sum_mod(params: LucasParams, n: int, m: int,
                           table: LucasTable | None = None) -> int:
    """sum_{j=1}^{n-1} v_j * u_j^{-1} reduced mod m.

    Every u_j (1 <= j < n) must be a unit mod m; this is guaranteed when m
    is a power of w_n.
    """
    if m < 1:
        raise InvalidArgument(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    table = _table_for(params, n, table)
    acc = 0
    for j in range(1, n):
        uj = table.u[j]
        if uj == 0:
            raise DegenerateSequence(f"u_{j} = 0: the harmonic sum is undefined")
        try:
            inv = mod_inverse(uj % m, m)
        except NotInvertible:
            raise NotInvertible(f"u_{j} = {uj} shares a factor with modulus {m}") from None
        acc = (acc + table.v[j] * inv) % m
    return acc


def wolstenholme_rhs_mod(params: LucasParams, n: int, m: int,
                         table: LucasTable | None = None) -> int:
    """(n^2 - 1) * delta * u_n * (6 * v_n)^{-1} reduced mod m."""
    if m < 1:
        raise InvalidArgument(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    table = _table_for(params, n, table)
    vn = table.v[n]
    inv = mod_inverse(6 * vn % m, m)
    return (n * n - 1) * params.delta * table.u[n] * inv % m


def exact_sides(params: LucasParams, n: int,
                table: LucasTable | None = None) -> tuple[Fraction, Fraction]:
    """Both sides as exact reduced rationals; the oracle for the modular path."""
    table = _table_for(params, n, table)
    if any(table.u[j] == 0 for j in range(1, n)) or table.v[n] == 0:
        raise DegenerateSequence("zero denominator in the exact sides")
    lhs = sum((Fraction(table.v[j], table.u[j]) for j in range(1, n)), Fraction(0))
    rhs = Fraction((n * n - 1) * params.delta, 6) * Fraction(table.u[n], table.v[n])
    return lhs, rhs


def verify_theorem(params: LucasParams, n: int,
                   table: LucasTable | None = None) -> CongruenceReport:
    """Verify the harmonic congruence mod w_n^2 for one parameter triple.

    n < 5 is permitted for exploration; the report flags it as outside the
    n >= 5 hypothesis rather than erroring. All failure modes are encoded
    in the report.
    """
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    table = _table_for(params, n, table)
    common = dict(a=params.a, b=params.b, n=n, in_hypothesis=n >= 5)
    if table.u[n] == 0:
        return CongruenceReport(w=0, modulus=0, lhs_residue=None, rhs_residue=None,
                                holds=False, trivial=False, degenerate=True, **common)
    w = primitive_part(params, n, table).w
    if w == 1:
        return CongruenceReport(w=1, modulus=1, lhs_residue=0, rhs_residue=0,
                                holds=True, trivial=True, degenerate=False, **common)
    modulus = w * w
    try:
        lhs = lucas_harmonic_sum_mod(params, n, modulus, table)
        rhs = wolstenholme_rhs_mod(params, n, modulus, table)
    except NotInvertible as exc:
        return CongruenceReport(w=w, modulus=modulus, lhs_residue=None,
                                rhs_residue=None, holds=False, trivial=False,
                                degenerate=False, error=f"NotInvertible: {exc}",
                                **common)
    return CongruenceReport(w=w, modulus=modulus, lhs_residue=lhs, rhs_residue=rhs,
                            holds=lhs == rhs, trivial=False, degenerate=False,
                            **common)


def verify_corollary_fib(p: int) -> CongruenceReport:
    """Fibonacci specialization: with n the rank of apparition of a prime
    p >= 5, check sum L_j/F_j == 5(n^2-1)/6 * F_n/L_n mod p^2."""
    if p < 5 or not is_prime(p):
        raise InvalidArgument(f"p must be a prime >= 5, got {p}")
    n = rank_of_apparition(FIBONACCI, p)
    assert n is not None  # p never divides B = -1
    table = lucas_table(FIBONACCI, n)
    modulus = p * p
    lhs = lucas_harmonic_sum_mod(FIBONACCI, n, modulus, table)
    rhs = wolstenholme_rhs_mod(FIBONACCI, n, modulus, table)
    w = primitive_part(FIBONACCI, n, table).w
    return CongruenceReport(a=1, b=-1, n=n, w=w, modulus=modulus,
                            lhs_residue=lhs, rhs_residue=rhs, holds=lhs == rhs,
                            trivial=False, degenerate=False, rank_used=n)


def verify_kimball_webb(params: LucasParams, p: int) -> CongruenceReport:
    """Check sum_{j=1}^{r-1} v_j/u_j == 0 mod p^2, with r the rank of
    apparition, under the premise delta = 0 or r = p +- 1.

    When the premise fails (or no rank exists) the report is marked
    not-applicable instead of asserting anything.
    """
    if p < 5 or not is_prime(p):
        raise InvalidArgument(f"p must be a prime >= 5, got {p}")
    r = rank_of_apparition(params, p)
    modulus = p * p
    common = dict(a=params.a, b=params.b, w=p, modulus=modulus, trivial=False,
                  degenerate=False, rank_used=r)
    if r is None or not (params.delta == 0 or r == p - 1 or r == p + 1):
        return CongruenceReport(n=r if r is not None else 0, lhs_residue=None,
                                rhs_residue=None, holds=False, applicable=False,
                                **common)
    table = lucas_table(params, r)
    lhs = lucas_harmonic_sum_mod(params, r, modulus, table)
    return CongruenceReport(n=r, lhs_residue=lhs, rhs_residue=0,
                            holds=lhs == 0, **common)


def verify_wolstenholme(p: int) -> CongruenceReport:
    """Classical harmonic-number check: p^2 divides the reduced numerator
    of H_{p-1} = sum_{j<p} 1/j.

    Primes below 5 are outside the hypothesis; they produce honest
    non-holding reports (H_2 = 3/2 is not divisible by 9).
    """
    if p < 2 or not is_prime(p):
        raise InvalidArgument(f"p must be prime, got {p}")
    h = sum((Fraction(1, j) for j in range(1, p)), Fraction(0))
    modulus = p * p
    lhs = h.numerator % modulus
    return CongruenceReport(a=None, b=None, n=p, w=p, modulus=modulus,
                            lhs_residue=lhs, rhs_residue=0, holds=lhs == 0,
                            trivial=False, degenerate=False,
                            in_hypothesis=p >= 5)
