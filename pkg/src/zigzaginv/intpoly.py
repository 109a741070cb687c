"""Exact integer polynomial arithmetic.

Polynomials are dense lists of arbitrary-precision integers in ascending
degree order with no trailing zeros; the zero polynomial is the empty
tuple.  Everything here is exact: no floating point enters any routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np


def _strip(coeffs):
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


class IntPolynomial:
    """Integer polynomial, coefficients ascending, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([int(c) for c in coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_up(self, k):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_neg(self):
        """p(-t)."""
        return IntPolynomial([c if i % 2 == 0 else -c
                              for i, c in enumerate(self.coeffs)])

    def monic_normalized(self):
        """Scale by -1 if the leading coefficient is negative.

        Raises ValueError when |leading| != 1 (no rational scaling here).
        """
        if not self.coeffs:
            raise ValueError("zero polynomial has no monic normalization")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        if lead == -1:
            return -self
        raise ValueError(f"leading coefficient {lead} is not a unit")

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def primitive(self):
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([c // g for c in self.coeffs])

    def to_strings(self):
        """JSON-safe coefficient list (ascending), arbitrary precision."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items):
        return cls([int(s) for s in items])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{k}" if mag == 1 else f"{mag}*t^{k}"
            parts.append((sign, body))
        sign0, body0 = parts[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"


ONE = IntPolynomial([1])


def monomial(k, c=1):
    return IntPolynomial([0] * k + [c])


def reverse(p: IntPolynomial) -> IntPolynomial:
    """The reverse t**deg(p) * p(1/t); requires p nonzero."""
    if p.is_zero():
        raise ValueError("reverse of the zero polynomial is undefined")
    return IntPolynomial(list(reversed(p.coeffs)))


def divmod_exact(p: IntPolynomial, d: IntPolynomial):
    """Quotient and remainder of p by monic-or-unit-leading d, over the integers.

    Requires the leading coefficient of d to be +-1 so the division stays
    integral.
    """
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lead = d.coeffs[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must have unit leading coefficient")
    rem = list(p.coeffs)
    dd = d.degree
    q = [0] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c * lead  # lead is +-1
        q[k - dd] = f
        for j, dc in enumerate(d.coeffs):
            rem[k - dd + j] -= f * dc
    return IntPolynomial(q), IntPolynomial(rem)


def exact_div(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """Exact division; raises ValueError when the remainder is nonzero."""
    q, r = divmod_exact(p, d)
    if not r.is_zero():
        raise ValueError(f"{p} is not divisible by {d}")
    return q


def taylor_shift(p: IntPolynomial, a: int) -> IntPolynomial:
    """p(t + a), exact."""
    c = list(p.coeffs)
    n = len(c)
    for i in range(1, n):
        for j in range(n - 1 - i, n - 1):
            c[j] += a * c[j + 1]
    return IntPolynomial(c)


def sign_variations(coeffs) -> int:
    vs = [c for c in coeffs if c != 0]
    return sum(1 for x, y in zip(vs, vs[1:]) if (x > 0) != (y > 0))


def descartes_count_unit_interval(p: IntPolynomial) -> int:
    """Descartes bound for the number of roots of p in the open interval (0, 1).

    Returns the sign-variation count of (1+s)^d p(s/(1+s)); the true root
    count is <= this and has the same parity.
    """
    d = p.degree
    w = IntPolynomial([c if i % 2 == 0 else -c
                       for i, c in enumerate(taylor_shift(p, 1).coeffs)])
    # w(t) = p(1 - t); pad to full degree before reversing so the
    # homogenization (1+s)^d w(1/(1+s)) comes out right
    padded = list(w.coeffs) + [0] * (d - w.degree)
    rev = list(reversed(padded))
    return sign_variations(taylor_shift(IntPolynomial(rev), 1).coeffs)


# -- exact characteristic polynomials ---------------------------------------

_INT64_SAFE = 1 << 62


def _max_abs(mat):
    return max((abs(x) for row in mat for x in row), default=0)


def _matmul_exact(a, b, amax, bmax):
    """Integer matrix product with a certified int64 fast path."""
    n, m, k = len(a), len(b[0]), len(b)
    if k and amax and bmax and k * amax * bmax < _INT64_SAFE:
        c = (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)).tolist()
        return c, k * amax * bmax
    bt = list(zip(*b))
    c = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
    return c, _max_abs(c)


def char_poly(matrix) -> IntPolynomial:
    """Exact monic characteristic polynomial det(tI - M) of an integer matrix.

    Faddeev-LeVerrier over the integers: every division by k below is exact.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    m = [[int(x) for x in row] for row in matrix]
    mmax = _max_abs(m)
    coeffs = [0] * (n + 1)  # ascending
    coeffs[n] = 1
    b = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    bmax = 1
    for k in range(1, n + 1):
        mk, mkmax = _matmul_exact(m, b, mmax, bmax)
        tr = sum(mk[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace division failed")
        a_k = -(tr // k)
        coeffs[n - k] = a_k
        if k < n:
            b = [row[:] for row in mk]
            for i in range(n):
                b[i][i] += a_k
            bmax = max(mkmax, _max_abs([[b[i][i]] for i in range(n)]))
    return IntPolynomial(coeffs)


def mat_mul(a, b):
    c, _ = _matmul_exact(a, b, _max_abs(a), _max_abs(b))
    return c


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def trace_powers(matrix, order: int):
    """[trace(M^i) for i = 1..order], exact."""
    out = []
    power = matrix
    for _ in range(order):
        out.append(mat_trace(power))
        power = mat_mul(power, matrix)
    return out


# -- truncated power series --------------------------------------------------

@dataclass(frozen=True)
class PowerSeriesPrefix:
    """Rational power series known through t**order inclusive."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    def __eq__(self, other):
        return (self.order == other.order
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def as_integers(self):
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer series coefficient {c}")
            out.append(c.numerator)
        return out


def series_reciprocal(p: IntPolynomial, order: int) -> PowerSeriesPrefix:
    """Multiplicative inverse of p as a power series, truncated at `order`.

    Requires p(0) = +-1 so the inverse has integer coefficients.
    """
    c0 = p.constant_term()
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit")
    pc = [p.coeffs[i] if i < len(p.coeffs) else 0 for i in range(order + 1)]
    inv = [Fraction(c0)]
    for n in range(1, order + 1):
        s = sum(pc[k] * inv[n - k] for k in range(1, n + 1))
        inv.append(Fraction(-s, c0))
    return PowerSeriesPrefix(tuple(inv), order)


def exp_from_counts(counts, order: int) -> PowerSeriesPrefix:
    """exp(sum_i counts[i-1] * t**i / i) truncated at `order`.

    Uses the derivative recurrence n*e_n = sum_k counts[k-1] * e_{n-k}.
    """
    if len(counts) < order:
        raise ValueError("need a count for every order up to the truncation")
    e = [Fraction(1)]
    for n in range(1, order + 1):
        s = sum(Fraction(counts[k - 1]) * e[n - k] for k in range(1, n + 1))
        e.append(s / n)
    return PowerSeriesPrefix(tuple(e), order)


# -- digit polynomials -------------------------------------------------------

def crossing_coefficients(m: int, q) -> list:
    """The b digits c_1..c_b of the slope-q crossing rule.

    c_i = m exactly when the segment y = q*t meets an integer height for
    some t in [i-1, i], endpoints inclusive and height 0 allowed; otherwise
    c_i = m - 2.
    """
    a, b = q.numerator, q.denominator
    if m < 2:
        raise ValueError("modality must be at least 2")
    if not (0 < a < b):
        raise ValueError(f"{a}/{b} is not interior to (0, 1)")
    out = []
    for i in range(1, b + 1):
        lo, hi = a * (i - 1), a * i
        # some multiple of b lies in [lo, hi] iff floor(hi/b)*b >= lo
        out.append(m if (hi // b) * b >= lo else m - 2)
    return out


def digit_polynomial(m: int, q) -> IntPolynomial:
    """Monic reciprocal polynomial t^(b+1) + 1 - sum c_i t^(b+1-i) for q = a/b."""
    c = crossing_coefficients(m, q)
    b = len(c)
    coeffs = [0] * (b + 2)
    coeffs[0] = 1
    coeffs[b + 1] = 1
    for i, ci in enumerate(c, start=1):
        coeffs[b + 1 - i] = -ci
    return IntPolynomial(coeffs)


def simple_zeta_poly(m: int, q) -> IntPolynomial:
    """1 - t*rho(t) built from itinerary digits and cumulative signs.

    rho(t) = s_N t^N + sum_{i<N} s_i c_i(f) t^i with N = den(q), turning
    digit c_{N-1}(f) = m, and all earlier cumulative signs +1.  Must equal
    reverse(digit_polynomial(m, q)).
    """
    c = crossing_coefficients(m, q)
    b = len(c)
    rho = [0] * (b + 1)
    for i in range(b - 1):
        rho[i] = c[i]
    rho[b - 1] = m          # address m-1 on a decreasing branch
    rho[b] = -1             # k = 1 and s_N = -1
    out = (ONE - IntPolynomial(rho).shift_up(1))
    expected = reverse(digit_polynomial(m, q))
    if out != expected:
        raise ArithmeticError("zeta-route polynomial disagrees with digit route")
    return out
