"""Reduced Burau matrices over the Laurent ring Z[z, z^-1].

Generator convention (fixed once, documented here and in the JSON output):
for the braid group on n strands the i-th generator acts on the standard
basis e_1..e_{n-1} by the block

    sigma_1       -> [[-z, 0], [1, 1]]            on (e_1, e_2)
    sigma_i       -> [[1, z, 0], [0, -z, 0], [0, 1, 1]]   on (e_{i-1}, e_i, e_{i+1})
    sigma_{n-1}   -> [[1, z], [0, -z]]            on (e_{n-2}, e_{n-1})

with identity elsewhere.  Under this convention the full twist specializes
to minus the identity at z = -1 for three or more strands, which is the
normalization all sign conventions here rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intpoly import IntPolynomial, char_poly, digit_polynomial


class Laurent:
    """Sparse Laurent polynomial in z with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[int(e)] = int(c)
        self.terms = t

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def z(cls, power=1, coeff=1):
        return cls({power: coeff})

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    def __call__(self, value: int) -> int:
        """Specialize z to a nonzero integer; exponents may be negative."""
        if value in (1, -1):
            return sum(c * value ** (e % 2) for e, c in self.terms.items())
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * Fraction(value) ** e
        if total.denominator != 1:
            raise ValueError("specialization is not an integer")
        return total.numerator

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*z")
            else:
                bits.append(f"{c}*z^{e}")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def _lzero():
    return Laurent()


def _lone():
    return Laurent.constant(1)


@dataclass(frozen=True)
class LaurentMatrix:
    """Square matrix of Laurent polynomials."""

    entries: tuple  # tuple of row tuples

    @property
    def dim(self):
        return len(self.entries)

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(_lone() if i == j else _lzero()
                               for j in range(n)) for i in range(n)))

    def __matmul__(self, other):
        n = self.dim
        cols = list(zip(*other.entries))
        rows = []
        for r in self.entries:
            rows.append(tuple(_dot(r, c) for c in cols))
        return LaurentMatrix(tuple(rows))

    def __eq__(self, other):
        return self.entries == other.entries

    def specialize(self, value: int):
        return [[e(value) for e in row] for row in self.entries]

    def det(self) -> Laurent:
        """Cofactor-expansion determinant; fine at the sizes used here."""
        n = self.dim
        if n == 1:
            return self.entries[0][0]
        total = Laurent()
        for j in range(n):
            minor = LaurentMatrix(tuple(
                tuple(row[:j] + row[j + 1:]) for row in self.entries[1:]))
            term = self.entries[0][j] * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total


def _dot(row, col):
    total = Laurent()
    for a, b in zip(row, col):
        if a.terms and b.terms:
            total = total + a * b
    return total


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators: signed indices, |index| < strands."""

    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least two strands")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"letter {g} out of range for B_{self.strands}")

    def __mul__(self, other):
        if self.strands != other.strands:
            raise ValueError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    @classmethod
    def parse(cls, strands: int, text: str):
        """Comma-separated signed generator indices, e.g. '1,2,-1,3'."""
        letters = tuple(int(tok) for tok in text.split(",") if tok.strip())
        return cls(strands, letters)

    def __str__(self):
        return ",".join(str(g) for g in self.letters)


def generator_matrix(n: int, index: int) -> LaurentMatrix:
    """Image of sigma_index (or its inverse for negative index) in B_n."""
    i = abs(index)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator {index} out of range for B_{n}")
    dim = n - 1
    rows = [[_lone() if r == c else _lzero() for c in range(dim)]
            for r in range(dim)]
    z = Laurent.z(1)
    zinv = Laurent.z(-1)
    if index > 0:
        if i == 1:
            rows[0][0] = -z
            if dim > 1:
                rows[1][0] = _lone()
        elif i == dim:
            rows[dim - 1][dim - 1] = -z
            rows[dim - 2][dim - 1] = z
        else:
            rows[i - 2][i - 1] = z
            rows[i - 1][i - 1] = -z
            rows[i][i - 1] = _lone()
    else:
        if i == 1:
            rows[0][0] = -zinv
            if dim > 1:
                rows[1][0] = zinv
        elif i == dim:
            rows[dim - 1][dim - 1] = -zinv
            rows[dim - 2][dim - 1] = _lone()
        else:
            rows[i - 2][i - 1] = _lone()
            rows[i - 1][i - 1] = -zinv
            rows[i][i - 1] = zinv
    return LaurentMatrix(tuple(tuple(r) for r in rows))


def reduced_burau(word: BraidWord) -> LaurentMatrix:
    out = LaurentMatrix.identity(word.strands - 1)
    for g in word.letters:
        out = out @ generator_matrix(word.strands, g)
    return out


def full_twist(n: int) -> BraidWord:
    """(sigma_1 ... sigma_{n-1})^n, the generator of the center."""
    return BraidWord(n, tuple(range(1, n)) * n)


def symplectic_poly(word: BraidWord) -> IntPolynomial:
    """Characteristic polynomial of the z = -1 specialization, exact."""
    return char_poly(reduced_burau(word).specialize(-1))


def match_digit(word: BraidWord, m: int, q: Fraction) -> str:
    """'plus', 'minus', or 'none': does the word's symplectic polynomial
    equal the digit polynomial, its t -> -t image, or neither."""
    d = digit_polynomial(m, q)
    if word.strands - 1 != d.degree:
        raise ValueError(
            f"dimension mismatch: {word.strands} strands vs degree {d.degree}")
    chi = symplectic_poly(word)
    if chi == d:
        return "plus"
    if chi == d.compose_neg().monic_normalized():
        return "minus"
    return "none"


def search_braid(m: int, q: Fraction, max_len: int,
                 guard_len: int = 12) -> BraidWord | None:
    """Breadth-first search for a word matching the digit polynomial.

    States are deduplicated by their z = -1 matrices, so the search runs
    over the symplectic image rather than over raw words; the first hit in
    shortlex order is returned.  Absence within the bound proves nothing.
    """
    if max_len > guard_len:
        raise ValueError(f"max_len {max_len} exceeds the guard {guard_len}")
    d = digit_polynomial(m, q)
    n = q.denominator + 2  # strands = postcritical count
    dim = n - 1
    if dim != d.degree:
        raise AssertionError("strand bookkeeping is off")
    targets = (d, d.compose_neg().monic_normalized())
    gens = []
    for idx in [g for i in range(1, n) for g in (i, -i)]:
        gens.append((idx, _int_matrix(generator_matrix(n, idx).specialize(-1))))
    identity = tuple(tuple(1 if i == j else 0 for j in range(dim))
                     for i in range(dim))
    frontier = [(identity, ())]
    seen = {identity}
    for _ in range(max_len):
        nxt = []
        for mat, word in frontier:
            for idx, g in gens:
                prod = _mul_int(mat, g)
                if prod in seen:
                    continue
                seen.add(prod)
                candidate = word + (idx,)
                if char_poly([list(r) for r in prod]) in targets:
                    return BraidWord(n, candidate)
                nxt.append((prod, candidate))
        frontier = nxt
    return None


def _int_matrix(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def _mul_int(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                 for row in a)
