"""The zig-zag map model, built exactly from combinatorial data.

A map with modality m and rotation parameter q = a/b has slope +-lambda,
critical points at l/lambda, and sends 0 to 0 (m even) or 1 (m odd).  The
orbit of x = 1 is generated by the digit recurrence

    x_i = lambda*x_{i-1} - c_i          (1 <= i <= b-1, c_i in {m-2, m})
    x_b = m - lambda*x_{b-1}

after which the orbit closes up through the critical point 1/lambda.  All
orbit points are handled as integer polynomials in lambda reduced modulo
the digit polynomial, so the closure identities and every comparison of
partition data are exact.

Markov matrices use the column convention: entry (i, j) counts traversals
of the i-th partition interval by the image of the j-th.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import farey
from .algebraic import LambdaExpression, compare, perron_root
from .intpoly import IntPolynomial, char_poly, crossing_coefficients, \
    digit_polynomial


class AdmissibilityError(ValueError):
    """The (n, k) pair does not define a transitive permutation."""


class ClosureError(ArithmeticError):
    """The generated orbit failed an exact structural identity (a bug)."""


class ResourceGuardError(RuntimeError):
    """A symbolic enumeration would exceed its configured guard."""


# -- permutation types -------------------------------------------------------

@dataclass(frozen=True)
class PermutationType:
    """Explicit permutation model of the action on the orbit of x = 1."""

    n: int
    k: int
    flavor: str            # "even" | "odd" | "two"
    mapping: dict

    def __call__(self, i):
        return self.mapping[i]

    @property
    def symbols(self):
        return tuple(sorted(self.mapping))

    def is_transitive(self) -> bool:
        start = self.symbols[0]
        seen = {start}
        i = self.mapping[start]
        while i not in seen:
            seen.add(i)
            i = self.mapping[i]
        return len(seen) == len(self.mapping)

    def prong_rotation(self) -> dict:
        """Delete the symbol 1 from the even model and relabel down: the
        induced map on n-1 symbols, a rotation by n - k modulo n-1."""
        rho = _rho_even(self.n, self.k)
        out = {}
        for i in range(2, self.n + 1):
            img = rho[i]
            if img == 1:
                img = rho[1]
            out[i - 1] = img - 1
        return out

    def matches_rotation(self) -> bool:
        rot = self.prong_rotation()
        n1 = self.n - 1
        shift = self.n - self.k
        return all(rot[i] == (i - 1 + shift) % n1 + 1 for i in rot)


def _rho_even(n, k):
    out = {}
    for i in range(1, n + 1):
        if i == 1:
            out[i] = n
        elif i <= k - 1:
            out[i] = i + (n - k)
        else:
            out[i] = i - (k - 1)
    return out


def _rho_odd(n, k):
    out = {0: n, 1: 0}
    for i in range(2, n + 1):
        if i <= k - 1:
            out[i] = i + (n - k)
        else:
            out[i] = i - (k - 1)
    return out


def _kappa(n, k):
    out = {i: i for i in range(1, n + 1)}
    for i in range(1, k - 1):
        out[i] = i + 1
    if k >= 3:
        out[k - 1] = 1
    return out


def permutation(m: int, n: int, k: int) -> PermutationType:
    """The permutation type rho_m(n, k); raises when gcd(n-k, n-1) != 1."""
    if n < 3 or not (2 <= k <= n - 1):
        raise ValueError(f"need n >= 3 and 2 <= k <= n-1, got ({n}, {k})")
    if gcd(n - k, n - 1) != 1:
        raise AdmissibilityError(f"gcd(n-k, n-1) != 1 for ({n}, {k})")
    if m == 2:
        kappa = _kappa(n, k)
        kappa_inv = {v: key for key, v in kappa.items()}
        rho = _rho_even(n, k)
        mapping = {i: kappa_inv[rho[kappa[i]]] for i in range(1, n + 1)}
        flavor = "two"
    elif m % 2 == 0:
        mapping = _rho_even(n, k)
        flavor = "even"
    else:
        mapping = _rho_odd(n, k)
        flavor = "odd"
    return PermutationType(n, k, flavor, mapping)


def phi_of(n: int, k: int) -> Fraction:
    """Rotation parameter (n-k)/(n-1) attached to rho_m(n, k)."""
    return Fraction(n - k, n - 1)


def nk_of(q: Fraction) -> tuple[int, int]:
    a, b = q.numerator, q.denominator
    return b + 1, b + 1 - a


# -- the map itself ----------------------------------------------------------

def branch_is_increasing(m: int, address: int) -> bool:
    return address % 2 == (0 if m % 2 == 0 else 1)


def apply_branch(m: int, address: int, x: LambdaExpression) -> LambdaExpression:
    if branch_is_increasing(m, address):
        return x.times_root() - address
    return (address + 1) - x.times_root()


def invert_branch(m: int, address: int, inv_root: LambdaExpression,
                  y: LambdaExpression) -> LambdaExpression:
    if branch_is_increasing(m, address):
        return (y + address) * inv_root
    return (address + 1 - y) * inv_root


class ZigZagMap:
    """Exact model of one map: orbit, critical points, sorted postcritical set."""

    def __init__(self, m, q, lam, digit_poly, digits, orbit, crit):
        self.m = m
        self.q = q
        self.lam = lam
        self.digit_poly = digit_poly
        self.digits = digits              # c_1 .. c_b
        self.orbit = orbit                # x_0 = 1, ..., x_b (time order)
        self.crit = crit                  # k_1 .. k_m
        self.f0 = 0 if m % 2 == 0 else 1  # image of the endpoint 0
        self.zero = LambdaExpression.constant(lam, 0)
        self.one = orbit[0]
        self._sorted = None

    @property
    def sign_at_zero(self):
        return self.f0

    @property
    def b(self):
        return self.q.denominator

    def postcritical_count(self):
        return self.b + 2

    def sorted_postcritical(self):
        """Sorted PC points as (expression, tag) with tag ('zero'|time index)."""
        if self._sorted is None:
            pts = [(self.zero, "zero")] + \
                [(x, i) for i, x in enumerate(self.orbit)]
            pts.sort(key=_CmpKey)
            for (a, _), (b_, _) in zip(pts, pts[1:]):
                if compare(a, b_) == 0:
                    raise ClosureError("postcritical points are not distinct")
            self._sorted = pts
        return self._sorted

    def sorted_orbit_positions(self):
        """Map from orbit time index to position in the sorted PC list."""
        return {tag: pos for pos, (_, tag) in enumerate(self.sorted_postcritical())
                if tag != "zero"}

    def permutation_type(self) -> PermutationType:
        """Spatial action of the map on its sorted orbit (with 0 for m odd)."""
        n, k = nk_of(self.q)
        pts = self.sorted_postcritical()
        pos = {tag: i for i, (_, tag) in enumerate(pts)}
        b = self.b

        def image_tag(tag):
            if tag == "zero":
                return "zero" if self.m % 2 == 0 else 0
            if tag < b:
                return tag + 1
            return 0 if self.m % 2 == 0 else "zero"  # f(k1) = 1 resp. 0

        if self.m % 2 == 0:
            # symbols 1..n over the positive orbit; 0 sits below at position 0
            tags = list(range(b + 1))
        else:
            tags = ["zero"] + list(range(b + 1))
        mapping = {pos[t]: pos[image_tag(t)] for t in tags}
        flavor = "two" if self.m == 2 else ("even" if self.m % 2 == 0 else "odd")
        return PermutationType(n, k, flavor, mapping)


class _CmpKey:
    """functools.cmp_to_key without the import, over (expression, tag)."""

    __slots__ = ("value",)

    def __init__(self, item):
        self.value = item[0]

    def __lt__(self, other):
        return compare(self.value, other.value) < 0


def build(m: int, q: Fraction, lam_width: Fraction = Fraction(1, 1 << 96)) -> ZigZagMap:
    """Construct the map for (m, q) and verify its exact closure identities."""
    farey.require_interior(q)
    if m < 2:
        raise ValueError("modality must be at least 2")
    b = q.denominator
    if b + 2 < 4:
        raise ValueError("postcritical set would be too small")
    d = digit_polynomial(m, q)
    lam = perron_root(m, d)
    lam.refine(lam_width)
    digits = crossing_coefficients(m, q)
    inv = LambdaExpression.root_inverse(lam)
    one = LambdaExpression.constant(lam, 1)

    orbit = [one]
    for i in range(1, b):
        orbit.append(orbit[-1].times_root() - digits[i - 1])
    orbit.append(m - orbit[-1].times_root())  # x_b, the fold onto k1

    # exact ring identities: x_b = 1/lambda and the orbit closes to 1
    if not (orbit[b] - inv).is_ring_zero():
        raise ClosureError(f"x_b != 1/lambda for (m={m}, q={q})")
    if m % 2 == 0:
        nxt = 2 - orbit[b].times_root()
        if not (nxt - 1).is_ring_zero():
            raise ClosureError(f"orbit of 1 fails to close for (m={m}, q={q})")
    else:
        nxt = orbit[b].times_root() - 1
        if not nxt.is_ring_zero():
            raise ClosureError(f"orbit fails to reach 0 for (m={m}, q={q})")

    crit = [inv * l for l in range(1, m + 1)]
    return ZigZagMap(m, q, lam, d, digits, tuple(orbit), tuple(crit))


# -- Markov structures -------------------------------------------------------

@dataclass(frozen=True)
class MarkovStructure:
    """Square integer matrix over a labeled interval partition.

    Rows and columns are indexed by the partition intervals; column j
    describes the image of interval j (columns are the source).
    """

    kind: str
    partition: tuple          # endpoint expressions, ascending
    matrix: tuple             # tuple of row tuples

    @property
    def dim(self):
        return len(self.matrix)

    def columns(self):
        return [list(col) for col in zip(*self.matrix)]

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "dim": self.dim,
            "columns": self.columns(),
            "convention": "columns-are-source",
        }

    def char_poly(self) -> IntPolynomial:
        return char_poly([list(r) for r in self.matrix])

    def trace(self):
        return sum(self.matrix[i][i] for i in range(self.dim))


def _critical_value_index(m, l, last):
    """Sorted index of f(k_l): 0 for the endpoint 0, `last` for 1."""
    if m % 2 == 0:
        return last if l % 2 == 1 else 0
    return 0 if l % 2 == 1 else last


def _locate_strictly_inside(pts, x):
    """Index j with pts[j-1] < x < pts[j], by exact bisection."""
    lo, hi = 0, len(pts) - 1
    if compare(x, pts[0]) <= 0 or compare(x, pts[-1]) >= 0:
        raise ClosureError("point is not interior to the partition")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = compare(x, pts[mid])
        if c == 0:
            raise ClosureError("critical point collides with a cut point")
        if c < 0:
            hi = mid
        else:
            lo = mid
    return hi


def _pc_image_indices(zz: ZigZagMap, pos_of_tag, last):
    """Sorted index of the f-image of every postcritical point, by tag."""
    b = zz.b
    img = {}
    img["zero"] = (pos_of_tag["zero"] if zz.m % 2 == 0 else last)
    for t in range(b + 1):
        if t < b:
            img[t] = pos_of_tag[t + 1]
        else:
            img[t] = last if zz.m % 2 == 0 else pos_of_tag["zero"]
    return img


def strong_markov(zz: ZigZagMap) -> MarkovStructure:
    return _strong_or_signed(zz, signed=False)


def signed_markov(zz: ZigZagMap) -> MarkovStructure:
    return _strong_or_signed(zz, signed=True)


def _strong_or_signed(zz: ZigZagMap, signed: bool) -> MarkovStructure:
    """Shared walk for the traversal-count and orientation-signed matrices.

    The signed entries realize the induced action on the anti-invariant
    homology of the double cover branched at the partition points: the
    running sign flips whenever the image path crosses an interior cut
    point, and when the source walk passes the critical cut point 1/lambda;
    folds at 0 and 1 flip both the direction and the covering sheet, so
    they preserve it.
    """
    sorted_pc = zz.sorted_postcritical()
    pts = [e for e, _ in sorted_pc]
    pos = {tag: i for i, (_, tag) in enumerate(sorted_pc)}
    last = len(pts) - 1
    ncols = last
    img = _pc_image_indices(zz, pos, last)
    point_img = [img[tag] for _, tag in sorted_pc]
    k1_index = pos[zz.b]

    # interior critical points k_2..k_m and their host columns
    crits_in_col = {}
    for l in range(2, zz.m + 1):
        j = _locate_strictly_inside(pts, zz.crit[l - 1])
        crits_in_col.setdefault(j, []).append(l)

    counts = [[0] * ncols for _ in range(ncols)]
    signs = [[0] * ncols for _ in range(ncols)]
    p = 1
    for j in range(1, ncols + 1):
        bounds = [point_img[j - 1]]
        for l in crits_in_col.get(j, ()):
            bounds.append(_critical_value_index(zz.m, l, last))
        bounds.append(point_img[j])
        for u, v in zip(bounds, bounds[1:]):
            if u == v:
                raise ClosureError("degenerate monotone piece")
            rows = range(u + 1, v + 1) if v > u else range(u, v, -1)
            rows = list(rows)
            for t, r in enumerate(rows):
                counts[r - 1][j - 1] += 1
                signs[r - 1][j - 1] += p
                if t < len(rows) - 1:
                    p = -p
        if j <= ncols - 1 and j == k1_index:
            p = -p
    matrix = signs if signed else counts
    return MarkovStructure("signed" if signed else "strong",
                           tuple(pts), tuple(tuple(r) for r in matrix))


def weak_markov(zz: ZigZagMap) -> MarkovStructure:
    """0/1 covering matrix over the partition cut at PC and all criticals."""
    sorted_pc = zz.sorted_postcritical()
    merged = list(sorted_pc)
    for l in range(2, zz.m + 1):
        merged.append((zz.crit[l - 1], ("crit", l)))
    merged.sort(key=_CmpKey)
    pts = [e for e, _ in merged]
    pos = {tag: i for i, (_, tag) in enumerate(merged)}
    last = len(pts) - 1
    img_pc = _pc_image_indices(zz, pos, last)

    def image_index(tag):
        if isinstance(tag, tuple):
            return _critical_value_index(zz.m, tag[1], last)
        return img_pc[tag]

    ncols = last
    matrix = [[0] * ncols for _ in range(ncols)]
    for j in range(1, ncols + 1):
        u = image_index(merged[j - 1][1])
        v = image_index(merged[j][1])
        lo, hi = min(u, v), max(u, v)
        for r in range(lo + 1, hi + 1):
            matrix[r - 1][j - 1] = 1
    return MarkovStructure("weak", tuple(pts), tuple(tuple(r) for r in matrix))


# -- independent fixed point oracle ------------------------------------------

def count_fixed_numeric(zz: ZigZagMap, iterate: int, guard: int = 10 ** 6) -> int:
    """Count fixed points of the `iterate`-th power by branch enumeration.

    Branches of f^i are tracked symbolically with exact endpoints; a branch
    contributes a fixed point when its displacement changes sign strictly
    inside, and shared endpoints are tested once.  Completely independent
    of the Markov matrices.
    """
    if iterate < 1:
        raise ValueError("iterate must be at least 1")
    return fixed_point_counts(zz, iterate, guard)[-1]


def fixed_point_counts(zz: ZigZagMap, upto: int, guard: int = 10 ** 6) -> list:
    """[|Fix(f^i)| for i = 1..upto], sharing the branch tree across levels."""
    if upto < 1:
        raise ValueError("need at least one iterate")
    cells = [(zz.zero, zz.one, zz.zero, zz.one, ())]
    counts = []
    for _ in range(upto):
        cells = _subdivide_once(zz, cells, guard)
        counts.append(_count_crossings(cells))
    return counts


def _count_crossings(cells) -> int:
    count = 0
    endpoint_pairs = [(cells[0][0], cells[0][2])] + \
        [(r, fr) for (_, r, _, fr, _) in cells]
    for e, v in endpoint_pairs:
        if compare(v, e) == 0:
            count += 1
    for (l, r, fl, fr, _) in cells:
        if compare(fl, l) * compare(fr, r) < 0:
            count += 1
    return count


def _subdivide_once(zz: ZigZagMap, cells, guard: int):
    """Advance monotone cells (l, r, f^j(l), f^j(r), word) one level."""
    m = zz.m
    inv = LambdaExpression.root_inverse(zz.lam)
    nxt = []
    for (l, r, fl, fr, word) in cells:
        increasing = compare(fl, fr) < 0
        lo_val = fl if increasing else fr
        cuts = []
        for c, kc in enumerate(zz.crit, start=1):
            lo_cmp = compare(kc, fl if increasing else fr)
            hi_cmp = compare(kc, fr if increasing else fl)
            if lo_cmp > 0 and hi_cmp < 0:
                cuts.append(c)
        if not cuts:
            address = 0
            for c, kc in enumerate(zz.crit, start=1):
                if compare(kc, lo_val) <= 0:
                    address = c
            pieces = [(l, r, fl, fr, address)]
        else:
            if not increasing:
                cuts = list(reversed(cuts))
            src = [l]
            for c in cuts:
                src.append(_pullback(zz, word, inv, zz.crit[c - 1]))
            src.append(r)
            img = [fl] + [zz.crit[c - 1] for c in cuts] + [fr]
            addrs = _piece_addresses(cuts, increasing)
            pieces = [(src[t], src[t + 1], img[t], img[t + 1], addrs[t])
                      for t in range(len(cuts) + 1)]
        for (pl, pr, il, ir, a) in pieces:
            nxt.append((pl, pr,
                        apply_branch(m, a, il), apply_branch(m, a, ir),
                        word + (a,)))
    if len(nxt) > guard:
        raise ResourceGuardError(
            f"{len(nxt)} branches exceeds the guard {guard}")
    return nxt


def _piece_addresses(cuts, increasing):
    if increasing:
        return [cuts[0] - 1] + list(cuts)
    return [cuts[0]] + [c - 1 for c in cuts]


def _pullback(zz, word, inv, value):
    for a in reversed(word):
        value = invert_branch(zz.m, a, inv, value)
    return value
