"""Exact rational arithmetic on the Stern-Brocot (Farey) tree.

Fractions are stdlib ``fractions.Fraction`` values, which are always kept
in lowest terms.  The tree lives on the interior rationals of (0, 1); the
endpoints 0/1 and 1/1 are representable and appear as virtual parents, but
operations that need an interior point reject them.

Two reduced fractions a/b and c/d are *compatible* when |ad - bc| = 1; the
mediant of a compatible pair is automatically reduced and the tree is
exactly the closure of {0/1, 1/1} under mediants of compatible neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
ROOT = Fraction(1, 2)


class IncompatibleFractionsError(ValueError):
    """The two operands do not satisfy |ad - bc| = 1."""


class NotInteriorError(ValueError):
    """An endpoint 0/1 or 1/1 was passed where an interior point is required."""


class DepthCapError(ValueError):
    """A tree enumeration exceeded the configured depth cap."""


def is_interior(q: Fraction) -> bool:
    return ZERO < q < ONE


def require_interior(q: Fraction) -> Fraction:
    if not is_interior(q):
        raise NotInteriorError(f"{q} is not interior to (0, 1)")
    return q


def determinant(p: Fraction, q: Fraction) -> int:
    return p.numerator * q.denominator - q.numerator * p.denominator


def compatible(p: Fraction, q: Fraction) -> bool:
    return abs(determinant(p, q)) == 1


def mediant(p: Fraction, q: Fraction) -> Fraction:
    """Farey sum of a compatible pair p < q; the result is already reduced."""
    if p >= q:
        raise ValueError(f"operands must satisfy p < q, got {p} >= {q}")
    if not compatible(p, q):
        raise IncompatibleFractionsError(f"|det| != 1 for {p}, {q}")
    return Fraction(p.numerator + q.numerator, p.denominator + q.denominator)


def parents(q: Fraction) -> tuple[Fraction, Fraction]:
    """The unique compatible pair (left, right) whose mediant is q.

    Computed from the modular inverse of the numerator (equivalently, by
    folding the continued fraction), not by tree search.  The left parent of
    1/n is 0/1 and the right parent of (n-1)/n is 1/1.
    """
    require_interior(q)
    a, b = q.numerator, q.denominator
    bl = pow(a, -1, b)
    al = (a * bl - 1) // b
    left = Fraction(al, bl)
    right = Fraction(a - al, b - bl)
    return left, right


@dataclass(frozen=True)
class FareyRelatives:
    """A node's neighborhood: both parents, both children, and its level."""

    left_parent: Fraction
    right_parent: Fraction
    left_child: Fraction
    right_child: Fraction
    level: int


def tree_parent(q: Fraction) -> tuple[Fraction, str]:
    """The parent joined to q by a tree edge, plus the edge label.

    Exactly one of the two mediant parents lies one level up: the one with
    the larger denominator (the other is a more distant ancestor).
    """
    if q == ROOT:
        raise NotInteriorError("the root 1/2 has no tree parent")
    left, right = parents(q)
    if left.denominator > right.denominator:
        return left, "R"
    return right, "L"


def level_of(q: Fraction) -> int:
    require_interior(q)
    level = 1
    while q != ROOT:
        q, _ = tree_parent(q)
        level += 1
    return level


def relatives(q: Fraction) -> FareyRelatives:
    left, right = parents(q)
    return FareyRelatives(
        left_parent=left,
        right_parent=right,
        left_child=mediant(left, q),
        right_child=mediant(q, right),
        level=level_of(q),
    )


def path_to_root(q: Fraction) -> list[tuple[Fraction, str | None]]:
    """The directed path from 1/2 down to q.

    Each entry is (node, turn) where turn is the direction taken from that
    node ("L" or "R"); the final entry is (q, None).
    """
    require_interior(q)
    rev = [(q, None)]
    while q != ROOT:
        parent, turn = tree_parent(q)
        rev.append((parent, turn))
        q = parent
    return list(reversed(rev))


DEFAULT_DEPTH_CAP = 20


def enumerate_level(n: int, cap: int = DEFAULT_DEPTH_CAP) -> list[Fraction]:
    """Level F_n of the tree in increasing order; |F_n| = 2**(n-1)."""
    if n < 1:
        raise ValueError("levels are numbered from 1")
    if n > cap:
        raise DepthCapError(f"level {n} exceeds the depth cap {cap}")
    fence = [ZERO, ONE]
    level = []
    for _ in range(n):
        level = [mediant(p, r) for p, r in zip(fence, fence[1:])]
        merged = []
        for old, new in zip(fence, level):
            merged.append(old)
            merged.append(new)
        merged.append(fence[-1])
        fence = merged
    return level


def levels_up_to(n: int, cap: int = DEFAULT_DEPTH_CAP) -> list[list[Fraction]]:
    return [enumerate_level(k, cap) for k in range(1, n + 1)]


def iter_reduced(max_den: int):
    """All interior reduced fractions with denominator <= max_den, ascending."""
    from math import gcd
    out = []
    for b in range(2, max_den + 1):
        for a in range(1, b):
            if gcd(a, b) == 1:
                out.append(Fraction(a, b))
    out.sort()
    return out


def parse_fraction(text: str) -> Fraction:
    """Parse 'a/b'; decimals are rejected to preserve exactness."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"expected 'a/b', got {text!r}")
    try:
        num, den = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integer numerator/denominator in {text!r}")
    if den <= 0 or num < 0:
        raise ValueError(f"expected a non-negative fraction, got {text!r}")
    return Fraction(num, den)
