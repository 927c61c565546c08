"""Integer polynomials in q: q-integers, cyclotomic polynomials, and the
divisibility certificates behind the q-analogue congruences.

The q-integer [n]_q = 1 + q + ... + q^{n-1}. Cyclotomic polynomials are
built by exact division of q^n - 1 by the lower-order factors. The cleared
congruence polynomial

    (12 * sum_j (1 + q^j)/[j]_q - (n^2-1)(1-q)(1-q^n)) * prod_j [j]_q

is an integer polynomial divisible by Phi_n(q)^2; ``q_certificate`` performs
that division and returns the integer quotient G(q), which constructively
witnesses the congruence. All divisors here are monic (up to the unit in
Phi_1), so the arithmetic never leaves the integers.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import divisors, euler_phi, is_prime
from .errors import (CongruenceFails, DivisionByZeroPoly, InexactDivision,
                     InvalidArgument)

__all__ = ["IntPoly", "q_integer_poly", "cyclotomic_poly", "poly_divmod",
           "cleared_congruence_poly", "q_certificate", "verify_q_prime"]


class IntPoly:
    """Dense integer-coefficient polynomial, ascending degree order.

    Canonical form: trailing zeros stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1 (the "minus infinity" marker).
    Immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if exp < 0:
            raise InvalidArgument("negative polynomial power")
        result = IntPoly([1])
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(var)
            elif c == -1:
                terms.append(f"-{var}")
            else:
                terms.append(f"{c}*{var}")
        return " + ".join(terms).replace("+ -", "- ")


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")


_Q = IntPoly([0, 1])
_ONE = IntPoly([1])


def monomial(k: int, c: int = 1) -> IntPoly:
    """c * q^k."""
    if k < 0:
        raise InvalidArgument("negative exponent")
    return IntPoly([0] * k + [c])


def q_integer_poly(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^{n-1}; n = 0 is the empty sum."""
    if n < 0:
        raise InvalidArgument(f"q-integer needs n >= 0, got {n}")
    return IntPoly([1] * n)


def poly_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division: a = q*b + r with deg r < deg b.

    Stays in integer arithmetic; every divisor used in this module is monic,
    for which the division is always exact coefficient-wise. A non-monic
    divisor whose leading coefficient fails to divide some intermediate
    leading term raises InexactDivision.
    """
    if b.is_zero():
        raise DivisionByZeroPoly("polynomial division by zero")
    if a.degree < b.degree:
        return IntPoly(), a
    rem = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        if rem[k] == 0:
            continue
        c, leftover = divmod(rem[k], lead)
        if leftover:
            raise InexactDivision(
                f"leading coefficient {lead} does not divide {rem[k]}")
        quot[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] -= c * b.coeffs[j]
    return IntPoly(quot), IntPoly(rem[:db])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial Phi_n(q), via exact division of
    q^n - 1 by the Phi_d for proper divisors d. Degree phi(n); monic for
    n >= 2 (Phi_1 = q - 1)."""
    if n < 1:
        raise InvalidArgument(f"cyclotomic index must be >= 1, got {n}")
    num = monomial(n) - _ONE
    for d in divisors(n):
        if d < n:
            num, rem = poly_divmod(num, cyclotomic_poly(d))
            assert rem.is_zero(), f"inexact cyclotomic division at n={n}, d={d}"
    assert num.degree == euler_phi(n)
    return num


def cleared_congruence_poly(n: int) -> IntPoly:
    """The denominator-cleared congruence polynomial

        12 * sum_j (1 + q^j) * prod_{k != j} [k]_q
          - (n^2 - 1) * (1 - q) * (1 - q^n) * prod_j [j]_q

    (j, k over 1 .. n-1). n = 1 gives 0 by the empty-sum and empty-product
    conventions.
    """
    if n < 1:
        raise InvalidArgument(f"needs n >= 1, got {n}")
    qints = [q_integer_poly(j) for j in range(1, n)]
    # prefix[i] = product of the first i q-integers; suffix likewise from the right
    prefix = [_ONE]
    for p in qints:
        prefix.append(prefix[-1] * p)
    suffix = [_ONE]
    for p in reversed(qints):
        suffix.append(suffix[-1] * p)
    suffix.reverse()
    total = prefix[-1]
    s = IntPoly()
    for i, j in enumerate(range(1, n)):
        s = s + (_ONE + monomial(j)) * (prefix[i] * suffix[i + 1])
    one_minus_q = _ONE - _Q
    one_minus_qn = _ONE - monomial(n)
    return 12 * s - (n * n - 1) * one_minus_q * one_minus_qn * total


def q_certificate(n: int) -> IntPoly:
    """Divide the cleared congruence polynomial exactly by Phi_n(q)^2 and
    return the integer quotient G(q).

    A nonzero remainder means the congruence fails (or the implementation
    is wrong); it is raised as CongruenceFails carrying the remainder, never
    swallowed.
    """
    if n < 1:
        raise InvalidArgument(f"needs n >= 1, got {n}")
    lhs = cleared_congruence_poly(n)
    if lhs.is_zero():
        return IntPoly()
    g, rem = poly_divmod(lhs, cyclotomic_poly(n) ** 2)
    if not rem.is_zero():
        raise CongruenceFails(
            f"cleared congruence polynomial for n={n} is not divisible by "
            f"Phi_{n}(q)^2; remainder {rem!r}", remainder=rem)
    return g


def verify_q_prime(p: int) -> bool:
    """Check the prime q-analogue in its stated form, modulo [p]_q^2:
    clear denominators of

        24 * sum_{j<p} 1/[j]_q - 12(p-1)(1-q) - (p^2-1)(1-q)^2 [p]_q

    by prod_{j<p} [j]_q and test exact divisibility by [p]_q^2. For prime p
    this matches ``q_certificate`` since [p]_q = Phi_p(q)."""
    if p < 5 or not is_prime(p):
        raise InvalidArgument(f"p must be a prime >= 5, got {p}")
    qints = [q_integer_poly(j) for j in range(1, p)]
    prefix = [_ONE]
    for poly in qints:
        prefix.append(prefix[-1] * poly)
    suffix = [_ONE]
    for poly in reversed(qints):
        suffix.append(suffix[-1] * poly)
    suffix.reverse()
    total = prefix[-1]
    s = IntPoly()
    for i in range(p - 1):
        s = s + prefix[i] * suffix[i + 1]
    one_minus_q = _ONE - _Q
    rhs = (12 * (p - 1) * one_minus_q
           + (p * p - 1) * one_minus_q * one_minus_q * q_integer_poly(p))
    cleared = 24 * s - rhs * total
    _, rem = poly_divmod(cleared, q_integer_poly(p) ** 2)
    return rem.is_zero()
