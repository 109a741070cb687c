"""Certified real algebraic numbers.

An AlgebraicReal is a defining integer polynomial together with a rational
isolating interval that provably contains exactly one of its real roots.
Signs of integer polynomials at such a number are decided exactly: interval
arithmetic resolves the generic case, and a gcd with the defining polynomial
certifies genuine zeros, so no comparison is ever guessed from rounding.

Arithmetic with polynomial expressions in a fixed root works in the quotient
ring Z[t]/(defining polynomial); division by the root itself is available
whenever the defining polynomial has unit constant term.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .intpoly import IntPolynomial, ONE, divmod_exact, taylor_shift


class CertificationError(ArithmeticError):
    """Root counting did not certify the expected configuration."""


def eval_sign_at_fraction(p: IntPolynomial, x: Fraction) -> int:
    """Sign of p(x) for rational x, by integer Horner on the cleared form."""
    num, den = x.numerator, x.denominator
    acc = 0
    power = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * power
        power *= den
    return (acc > 0) - (acc < 0)


def eval_interval(p: IntPolynomial, lo: Fraction, hi: Fraction):
    """Enclosure of p([lo, hi]) by interval Horner."""
    alo = ahi = Fraction(0)
    for c in reversed(p.coeffs):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi


# -- Sturm chains ------------------------------------------------------------

def _pseudo_rem_neg(f, g):
    """-rem(|lc(g)|**(deg f - deg g + 1) * f, g) over the integers.

    The multiplier is positive, so the result differs from the true negated
    remainder by a positive factor and Sturm sign counting is preserved.
    """
    rem = list(f)
    dg = len(g) - 1
    lc = g[-1]
    mult = abs(lc)
    while len(rem) - 1 >= dg and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        k = len(rem) - 1
        rem = [c * mult for c in rem]
        q = rem[-1] // lc
        for j in range(dg + 1):
            rem[k - dg + j] -= q * g[j]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return [-c for c in rem]


def sturm_chain(p: IntPolynomial):
    """Sturm-like chain of integer polynomials for root counting."""
    chain = [list(p.coeffs), list(p.derivative().coeffs)]
    if not chain[1]:
        chain.pop()
        return chain
    while True:
        r = _pseudo_rem_neg(chain[-2], chain[-1])
        if not r:
            break
        g = 0
        for c in r:
            g = _gcd(g, abs(c))
        if g > 1:
            r = [c // g for c in r]
        chain.append(r)
    return chain


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _variations_at(chain, x: Fraction) -> int:
    signs = []
    num, den = x.numerator, x.denominator
    for coeffs in chain:
        acc = 0
        power = 1
        for c in reversed(coeffs):
            acc = acc * num + c * power
            power *= den
        if acc:
            signs.append(acc > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]; endpoints must not
    be roots of p (lo in particular)."""
    chain = sturm_chain(p)
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def count_roots_unit_shifted(p: IntPolynomial, a: int) -> int:
    """Exact count of roots in the open interval (a, a+1) when the Descartes
    bound there is 0 or 1; falls back to a Sturm count otherwise."""
    from .intpoly import descartes_count_unit_interval
    shifted = taylor_shift(p, a)
    var = descartes_count_unit_interval(shifted)
    if var <= 1:
        return var
    return sturm_count(p, Fraction(a), Fraction(a + 1))


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q, computed by a primitive pseudo-remainder chain."""
    a = list(p.primitive().coeffs)
    b = list(q.primitive().coeffs)
    while b:
        r = _pseudo_rem_neg(a, b)
        g = 0
        for c in r:
            g = _gcd(g, abs(c))
        if g > 1:
            r = [c // g for c in r]
        a, b = b, r
    out = IntPolynomial(a).primitive()
    if out.coeffs and out.coeffs[-1] < 0:
        out = -out
    return out


# -- the number type ---------------------------------------------------------

class AlgebraicReal:
    """A real algebraic number: defining polynomial plus isolating interval.

    Invariant: the closed interval [lo, hi] contains exactly one real root
    of the defining polynomial, witnessed either by lo == hi being an exact
    rational root or by a sign change across the endpoints.  Refinement
    replaces the interval atomically, so concurrent readers always observe
    a valid enclosure.
    """

    def __init__(self, poly: IntPolynomial, lo: Fraction, hi: Fraction):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        if lo == hi:
            if eval_sign_at_fraction(poly, lo) != 0:
                raise CertificationError("claimed exact root is not a root")
        else:
            slo = eval_sign_at_fraction(poly, lo)
            shi = eval_sign_at_fraction(poly, hi)
            if slo == 0 or shi == 0 or slo == shi:
                raise CertificationError(
                    "endpoints must straddle the root with a strict sign change")
        self.poly = poly
        self._state = (lo, hi, None)  # (lo, hi, cached sign at lo)
        self.generation = 0

    @property
    def interval(self):
        lo, hi, _ = self._state
        return lo, hi

    @property
    def width(self) -> Fraction:
        lo, hi, _ = self._state
        return hi - lo

    def refine(self, width: Fraction) -> None:
        """Shrink the isolating interval to at most `width` by bisection."""
        lo, hi, slo = self._state
        if lo == hi:
            return
        if slo is None:
            slo = eval_sign_at_fraction(self.poly, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            smid = eval_sign_at_fraction(self.poly, mid)
            if smid == 0:
                lo = hi = mid
                break
            if smid == slo:
                lo = mid
            else:
                hi = mid
        self._state = (lo, hi, slo)
        self.generation += 1

    def refine_steps(self, steps: int) -> None:
        lo, hi, _ = self._state
        if lo != hi:
            self.refine((hi - lo) / (1 << steps))

    def __float__(self):
        lo, hi, _ = self._state
        return float((lo + hi) / 2)

    def sign_of(self, p: IntPolynomial) -> int:
        """Exact sign of p at this number; 0 is certified via a gcd."""
        if p.is_zero():
            return 0
        lo, hi, _ = self._state
        if lo == hi:
            return eval_sign_at_fraction(p, lo)
        vlo, vhi = eval_interval(p, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        g = poly_gcd(p, self.poly)
        if g.degree >= 1 and self._gcd_vanishes_here(g):
            return 0
        for _ in range(100000):
            self.refine(self.width / 2)
            lo, hi, _ = self._state
            vlo, vhi = eval_interval(p, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
        raise CertificationError("sign refinement failed to converge")

    def _gcd_vanishes_here(self, g: IntPolynomial) -> bool:
        lo, hi, _ = self._state
        # endpoints of the isolating interval are never roots of the
        # defining polynomial, hence not of g either
        if eval_sign_at_fraction(g, lo) == 0 or eval_sign_at_fraction(g, hi) == 0:
            return True
        return sturm_count(g, lo, hi) >= 1

    def decimal(self, digits: int = 15) -> str:
        """Deterministic decimal rendering of the interval midpoint."""
        lo, hi, _ = self._state
        mid = (lo + hi) / 2
        scaled = mid * 10 ** digits
        n = scaled.numerator // scaled.denominator
        if 2 * (scaled.numerator % scaled.denominator) >= scaled.denominator:
            n += 1
        sign = "-" if n < 0 else ""
        n = abs(n)
        whole, frac = divmod(n, 10 ** digits)
        return f"{sign}{whole}.{str(frac).zfill(digits)}"

    def width_exponent(self) -> int:
        """Smallest k with width <= 10**-k (k = 0 when the width exceeds 1)."""
        w = self.width
        if w == 0:
            return 10 ** 9  # exact; effectively infinite precision
        k = 0
        while w <= Fraction(1, 10 ** (k + 1)) and k < 10 ** 6:
            k += 1
        return k

    def __str__(self):
        if self.width == 0:
            lo, _, _ = self._state
            return f"{self.decimal()} (exact {lo})"
        return f"{self.decimal()} +- 1e-{self.width_exponent()}"

    def __repr__(self):
        lo, hi, _ = self._state
        return f"AlgebraicReal({self.poly!r}, {lo}, {hi})"


DEFAULT_WIDTH = Fraction(1, 1 << 64)


def perron_root(m: int, d: IntPolynomial,
                width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """The unique root of a digit polynomial in the open interval (m, m+1).

    Certifies uniqueness by an exact root count on (m, m+1) before
    isolating by bisection; raises CertificationError when the count
    differs from one, which signals an upstream bug rather than user error.
    """
    count = count_roots_unit_shifted(d, m)
    if count != 1:
        raise CertificationError(
            f"expected exactly one root in ({m}, {m + 1}), counted {count}")
    root = AlgebraicReal(d, Fraction(m), Fraction(m + 1))
    root.refine(width)
    return root


def largest_root_in(poly: IntPolynomial, lo: int, hi: int,
                    width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """Largest real root of poly in (lo, hi]; used for closed-form bounds."""
    for a in range(hi - 1, lo - 1, -1):
        upper = Fraction(a + 1)
        if eval_sign_at_fraction(poly, upper) == 0:
            return AlgebraicReal(poly, upper, upper)
        n = count_roots_unit_shifted(poly, a)
        if n == 0:
            continue
        if n > 1 or eval_sign_at_fraction(poly, Fraction(a)) == 0:
            raise CertificationError(
                f"cannot isolate a single root in ({a}, {a + 1})")
        root = AlgebraicReal(poly, Fraction(a), upper)
        root.refine(width)
        return root
    raise CertificationError("no root found in the requested range")


def sign_at(p: IntPolynomial, x: AlgebraicReal) -> int:
    return x.sign_of(p)


# -- expressions in a fixed root ---------------------------------------------

class LambdaExpression:
    """An element p(root) of Z[t]/(defining polynomial), evaluated at a root.

    Coefficients are kept reduced modulo the defining polynomial (which is
    monic), so ring equality of reduced representatives is a fast exact
    test; equality of the underlying reals falls back to a certified sign.
    Each expression caches enclosures tied to the base interval's
    generation counter: a cheap outward-rounded float shadow for the common
    case, and the exact rational enclosure on demand.
    """

    __slots__ = ("base", "poly", "_fenc", "_renc", "_gen")

    def __init__(self, base: AlgebraicReal, poly: IntPolynomial):
        self.base = base
        if poly.degree >= base.poly.degree:
            _, poly = divmod_exact(poly, base.poly)
        self.poly = poly
        self._fenc = False   # False = not computed; None = unsound for floats
        self._renc = None
        self._gen = -1

    @classmethod
    def constant(cls, base: AlgebraicReal, c: int):
        return cls(base, IntPolynomial([c]))

    @classmethod
    def root(cls, base: AlgebraicReal):
        return cls(base, IntPolynomial([0, 1]))

    @classmethod
    def root_inverse(cls, base: AlgebraicReal):
        """1/root, available because the defining polynomial has unit
        constant term: t * (-(D - D(0))/t) = D(0) - D = D(0) mod D."""
        d = base.poly
        c0 = d.constant_term()
        if c0 not in (1, -1):
            raise ValueError("root inverse needs unit constant term")
        h = IntPolynomial([c0 * c for c in d.coeffs[1:]])
        return cls(base, -h)

    def _check(self, other):
        if self.base is not other.base:
            raise ValueError("expressions built over different roots")

    def __add__(self, other):
        if isinstance(other, int):
            return LambdaExpression(self.base, self.poly + other)
        self._check(other)
        return LambdaExpression(self.base, self.poly + other.poly)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return LambdaExpression(self.base, self.poly - other)
        self._check(other)
        return LambdaExpression(self.base, self.poly - other.poly)

    def __rsub__(self, other):
        return LambdaExpression(self.base, other - self.poly)

    def __neg__(self):
        return LambdaExpression(self.base, -self.poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return LambdaExpression(self.base, self.poly * other)
        self._check(other)
        return LambdaExpression(self.base, self.poly * other.poly)

    __rmul__ = __mul__

    def times_root(self):
        return LambdaExpression(self.base, self.poly.shift_up(1))

    def sign(self) -> int:
        return self.base.sign_of(self.poly)

    def is_ring_zero(self) -> bool:
        return self.poly.is_zero()

    def is_ring_one(self) -> bool:
        return self.poly == ONE

    def _refresh(self):
        if self._gen != self.base.generation:
            self._gen = self.base.generation
            self._fenc = False
            self._renc = None

    def float_enclosure(self):
        """Outward-rounded float enclosure, or None when floats cannot
        soundly represent the coefficients."""
        self._refresh()
        if self._fenc is False:
            self._fenc = _float_interval_eval(self.poly.coeffs,
                                              self.base.interval)
        return self._fenc

    def enclosure(self):
        """Exact rational enclosure from interval Horner over the base."""
        self._refresh()
        if self._renc is None:
            lo, hi = self.base.interval
            self._renc = eval_interval(self.poly, lo, hi)
        return self._renc

    def __float__(self):
        rlo, rhi = self.enclosure()
        return float((rlo + rhi) / 2)

    def __repr__(self):
        return f"LambdaExpression({self.poly!r})"


_FLOAT_COEFF_BOUND = 1 << 50
_INF = math.inf
_ERR_UNIT = 2.0 ** -50   # >= 8x the relevant rounding unit per operation


def _float_interval_eval(coeffs, interval):
    """Sound float enclosure of the polynomial over the interval.

    Runs interval Horner in floats while accumulating a running absolute
    error bound: each step's bound is magnified by |x| and widened by a
    generous multiple of the largest intermediate magnitude, which
    dominates every rounding error including catastrophic cancellation.
    Returns None when coefficients are too large for exact float
    conversion.
    """
    if any(abs(c) > _FLOAT_COEFF_BOUND for c in coeffs):
        return None
    xlo = math.nextafter(float(interval[0]), -_INF)
    xhi = math.nextafter(float(interval[1]), _INF)
    ax = max(abs(xlo), abs(xhi))
    lo = hi = 0.0
    err = 0.0
    for c in reversed(coeffs):
        p1, p2, p3, p4 = lo * xlo, lo * xhi, hi * xlo, hi * xhi
        lo = min(p1, p2, p3, p4) + c
        hi = max(p1, p2, p3, p4) + c
        mag = max(abs(p1), abs(p2), abs(p3), abs(p4), abs(lo), abs(hi), 1.0)
        err = err * ax + mag * _ERR_UNIT
    if not math.isfinite(err) or not math.isfinite(lo) or not math.isfinite(hi):
        return None
    return (math.nextafter(lo - err, -_INF), math.nextafter(hi + err, _INF))


def compare(xs: LambdaExpression, ys: LambdaExpression) -> int:
    """-1, 0, +1 when xs < ys, xs = ys, xs > ys as real numbers."""
    xs._check(ys)
    if xs.poly == ys.poly:
        return 0
    fx = xs.float_enclosure()
    fy = ys.float_enclosure()
    if fx is not None and fy is not None:
        if fx[1] < fy[0]:
            return -1
        if fy[1] < fx[0]:
            return 1
    xlo, xhi = xs.enclosure()
    ylo, yhi = ys.enclosure()
    if xhi < ylo:
        return -1
    if yhi < xlo:
        return 1
    diff = xs.poly - ys.poly
    if diff.is_zero():
        return 0
    return xs.base.sign_of(diff)
