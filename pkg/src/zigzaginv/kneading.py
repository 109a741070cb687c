"""Kneading sequences of zig-zag interval maps.

The address alphabet for modality m interleaves interval addresses with
critical addresses,

    0 < k1 < 1 < k2 < 2 < ... < km < m,

and the principal kneading sequence of the map with rotation parameter
q = a/b is read off a line of slope q crossing integer heights: entry i is
m when the segment meets an integer height somewhere in [i, i+1] (endpoints
inclusive, height 0 counts) and m-2 otherwise, for i <= b-2; the tail is
always (m-1, k1), with a trailing 0 when m is odd.  Every principal
sequence therefore decomposes as (m) . w . k with w a palindrome over
{m-2, m}.

Sequences of neighboring tree nodes are related by concatenation after
swapping a one-symbol prefix or suffix; those decorated variants and the
twisted lexicographic order used to compare itineraries live here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import farey
from .intpoly import crossing_coefficients


class ShapeError(ValueError):
    """A sequence does not have the principal (m) . w . k shape."""


class UndecidableComparisonError(ValueError):
    """The twisted order cannot be decided from the symbols supplied."""


@dataclass(frozen=True, order=False)
class AddressSymbol:
    """One letter of the alphabet: an interval address j or a critical kj."""

    kind: str   # "interval" | "critical"
    index: int

    def __post_init__(self):
        if self.kind not in ("interval", "critical"):
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.kind == "critical" and self.index < 1:
            raise ValueError("critical addresses are numbered from 1")
        if self.kind == "interval" and self.index < 0:
            raise ValueError("interval addresses are non-negative")

    @property
    def order_key(self) -> int:
        # interval j sits at 2j, critical kj just below j at 2j - 1
        if self.kind == "interval":
            return 2 * self.index
        return 2 * self.index - 1

    def __str__(self):
        if self.kind == "interval":
            return str(self.index)
        return f"k{self.index}"


def interval(j: int) -> AddressSymbol:
    return AddressSymbol("interval", j)


def critical(j: int) -> AddressSymbol:
    return AddressSymbol("critical", j)


def render(entries) -> str:
    return " ".join(str(s) for s in entries)


@dataclass(frozen=True)
class KneadingSequence:
    """A finite word over the alphabet, tagged with how it arose."""

    m: int
    entries: tuple
    role: str = "principal"
    q: Fraction | None = None

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("modality must be at least 2")
        for s in self.entries:
            if s.kind == "interval" and s.index > self.m:
                raise ValueError(f"address {s} exceeds modality {self.m}")
            if s.kind == "critical" and s.index > self.m:
                raise ValueError(f"address {s} exceeds modality {self.m}")

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return render(self.entries)

    def suffix_length(self) -> int:
        return 2 if self.m % 2 == 0 else 3

    def decompose(self):
        """Split a principal sequence into ((m), w, k); raises ShapeError."""
        m, e = self.m, self.entries
        kl = self.suffix_length()
        if len(e) < 1 + kl:
            raise ShapeError("sequence too short to be principal")
        if e[0] != interval(m):
            raise ShapeError(f"principal sequences start with {m}")
        tail = e[-kl:]
        expected = (interval(m - 1), critical(1))
        if m % 2 == 1:
            expected = expected + (interval(0),)
        if tail != expected:
            raise ShapeError(f"bad suffix {render(tail)}")
        w = e[1:-kl]
        for s in w:
            if s.kind != "interval" or s.index not in (m - 2, m):
                raise ShapeError(f"body entry {s} outside {{m-2, m}}")
        return e[0], w, tail


def principal_kneading(m: int, q: Fraction) -> KneadingSequence:
    """Principal kneading sequence of the map with rotation parameter q."""
    farey.require_interior(q)
    digits = crossing_coefficients(m, q)  # c_1 .. c_b
    b = q.denominator
    # entry i equals digit c_{i+1} for i <= b-2; the last two digits are
    # replaced by the fixed tail (m-1, k1) since the orbit lands on the
    # first critical point at time b
    seq = [interval(m)] + [interval(digits[i + 1]) for i in range(b - 2)]
    seq += [interval(m - 1), critical(1)]
    if m % 2 == 1:
        seq.append(interval(0))
    return KneadingSequence(m, tuple(seq), "principal", q)


def decorate(nu: KneadingSequence, variant: str) -> KneadingSequence:
    """The overline / hat / underline variants of a principal sequence.

    overline swaps the suffix k for the single symbol (m), hat for (m-2),
    and underline swaps the leading (m) for (m-2).
    """
    head, w, _ = nu.decompose()
    m = nu.m
    if variant == "overline":
        entries = (head,) + w + (interval(m),)
    elif variant == "hat":
        entries = (head,) + w + (interval(m - 2),)
    elif variant == "underline":
        entries = (interval(m - 2),) + w + nu.entries[-nu.suffix_length():]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return KneadingSequence(m, entries, variant, nu.q)


def farey_concat(f_seq: KneadingSequence, g_seq: KneadingSequence,
                 law: str) -> KneadingSequence:
    """Kneading sequence of the mediant via either concatenation law.

    first:  overline(f) . underline(g)
    second: hat(g) . f

    Both are checked against the directly computed sequence and must agree
    entry for entry.
    """
    if f_seq.m != g_seq.m:
        raise ValueError("modality mismatch")
    if f_seq.q is None or g_seq.q is None:
        raise ValueError("both inputs must be principal sequences with q set")
    q = farey.mediant(f_seq.q, g_seq.q)  # validates compatibility and order
    if law == "first":
        entries = decorate(f_seq, "overline").entries \
            + decorate(g_seq, "underline").entries
    elif law == "second":
        entries = decorate(g_seq, "hat").entries + f_seq.entries
    else:
        raise ValueError(f"unknown law {law!r}")
    out = KneadingSequence(f_seq.m, entries, "principal", q)
    direct = principal_kneading(f_seq.m, q)
    if out.entries != direct.entries:
        raise ArithmeticError(
            f"concatenation law {law} disagrees with the crossing rule at {q}")
    return out


def edge_body(m: int, q: Fraction) -> KneadingSequence:
    """Principal sequence for the edge families 1/n and (n-1)/n.

    The body is (m-2)^(n-2) for 1/n and (m)^(n-2) for (n-1)/n; the result
    is cross-checked against the crossing rule.
    """
    farey.require_interior(q)
    n = q.denominator
    if q.numerator == 1:
        w = (interval(m - 2),) * (n - 2)
    elif q.numerator == n - 1:
        w = (interval(m),) * (n - 2)
    else:
        raise ValueError(f"{q} is not of the form 1/n or (n-1)/n")
    seq = (interval(m),) + w + (interval(m - 1), critical(1))
    if m % 2 == 1:
        seq = seq + (interval(0),)
    out = KneadingSequence(m, seq, "principal", q)
    direct = principal_kneading(m, q)
    if out.entries != direct.entries:
        raise ArithmeticError(f"edge formula disagrees with crossing rule at {q}")
    return out


@dataclass(frozen=True)
class SignData:
    """Branch orientation signs for modality m.

    Interval address j carries (-1)^j for m even and (-1)^(j+1) for m odd;
    critical addresses carry 0.  Cumulative signs start at +1 and multiply
    along a word.
    """

    m: int

    def sign(self, symbol: AddressSymbol) -> int:
        if symbol.kind == "critical":
            return 0
        j = symbol.index
        return (-1) ** j if self.m % 2 == 0 else (-1) ** (j + 1)

    def cumulative(self, word) -> list:
        out = [1]
        for s in word:
            out.append(self.sign(s) * out[-1])
        return out


def twisted_compare(a, b, signs: SignData) -> int:
    """Twisted lexicographic comparison of two words; -1, 0, or +1.

    At the first disagreement the alphabet order is used when the
    cumulative sign of the common prefix is +1 and reversed when it is -1.
    A zero cumulative sign (a critical symbol inside the common prefix) or
    a strict-prefix relation is undecidable and raises.
    """
    a, b = tuple(a), tuple(b)
    n = min(len(a), len(b))
    s = 1
    for i in range(n):
        if a[i] != b[i]:
            if s == 0:
                raise UndecidableComparisonError(
                    "disagreement lies beyond a critical symbol")
            base = (a[i].order_key > b[i].order_key) - \
                   (a[i].order_key < b[i].order_key)
            return base * s
        s *= signs.sign(a[i])
    if len(a) == len(b):
        return 0
    raise UndecidableComparisonError(
        "one word is a strict prefix of the other; supply more symbols")


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    """pre . per^infinity, the finite presentation of a critical itinerary."""

    preperiod: tuple
    period: tuple = field(default=())

    def prefix(self, length: int):
        out = list(self.preperiod[:length])
        i = 0
        while len(out) < length:
            out.append(self.period[i % len(self.period)])
            i += 1
        return tuple(out)

    def __str__(self):
        head = render(self.preperiod)
        tail = f"({render(self.period)})^inf" if self.period else ""
        return f"{head} {tail}".strip()


def kneading_data(m: int, nu: KneadingSequence) -> list:
    """The m critical itineraries, determined by the itinerary of x = 1.

    For m even the odd-numbered critical points map to 1 and the even ones
    to the fixed point 0; for m odd the images are 0 and 1 respectively,
    and 0 itself maps back to 1.
    """
    nu.decompose()
    it = EventuallyPeriodicWord((), nu.entries)
    zero_forever = EventuallyPeriodicWord((), (interval(0),))
    zero_then_it = EventuallyPeriodicWord((interval(0),), nu.entries)
    out = []
    for j in range(1, m + 1):
        if m % 2 == 0:
            out.append(it if j % 2 == 1 else zero_forever)
        else:
            out.append(zero_then_it if j % 2 == 1 else it)
    return out


def it_prefix(m: int, q: Fraction, length: int):
    """Prefix of the (periodic) itinerary of x = 1 under the q-map."""
    nu = principal_kneading(m, q)
    return EventuallyPeriodicWord((), nu.entries).prefix(length)
