"""Exact arithmetic in Q(sqrt(d)).

Every endpoint, length, and translation in this library is a
:class:`QuadNum`, the value ``(p + q*sqrt(d)) / r`` with arbitrary-precision
integers.  The representation is canonical (``r > 0``, ``gcd(p, q, r) == 1``,
and ``q == 0`` whenever ``d <= 1``), so equality of values is equality of
representations and comparisons reduce to integer sign tests.  Floating point
is never consulted except by :meth:`QuadNum.__float__`, which exists for
display and sanity checks only.

A single radicand ``d`` is shared by all numbers of one instance.  Purely
rational values are normalized to ``d == 0`` and mix freely with any
radicand; combining two genuinely irrational numbers with different
radicands is an error.

Division between two QuadNums is deliberately absent: the interval
algorithms only add, subtract, multiply, and compare.  Dividing by an
integer is multiplication by ``QuadNum(1, 0, n)``.
"""

from __future__ import annotations

from math import gcd, isqrt


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


class QuadNum:
    """(p + q*sqrt(d)) / r, canonicalized on construction."""

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int = 0, r: int = 1, d: int = 0):
        if r == 0:
            raise ValueError("zero denominator")
        if d < 0:
            raise ValueError(f"negative radicand {d}")
        if d <= 1:
            # sqrt(0) = 0 and sqrt(1) = 1 fold into the rational part.
            p, q = p + q * d, 0
        if q == 0:
            d = 0
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    # -- radicand handling ------------------------------------------------

    def _match(self, other) -> "QuadNum":
        if isinstance(other, int):
            other = QuadNum(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        if self.d != other.d and self.q != 0 and other.q != 0:
            raise ValueError(f"mismatched radicands: sqrt({self.d}) vs sqrt({other.d})")
        return other

    def _dd(self, other: "QuadNum") -> int:
        return self.d if self.q != 0 else other.d

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "QuadNum":
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadNum(
            self.p * other.r + other.p * self.r,
            self.q * other.r + other.q * self.r,
            self.r * other.r,
            self._dd(other),
        )

    __radd__ = __add__

    def __sub__(self, other) -> "QuadNum":
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QuadNum":
        return (-self) + other

    def __mul__(self, other) -> "QuadNum":
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._dd(other)
        return QuadNum(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            self.r * other.r,
            d,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "QuadNum":
        return QuadNum(-self.p, -self.q, self.r, self.d)

    # -- comparison --------------------------------------------------------

    def sign(self) -> int:
        """Exact sign, by integer arithmetic only."""
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return _sign(p)
        if p == 0:
            return _sign(q)
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # Opposite signs: compare p^2 against q^2 d.
        if p > 0:
            return _sign(p * p - q * q * d)
        return _sign(q * q * d - p * p)

    def _cmp(self, other) -> int:
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QuadNum(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        return (self.p, self.q, self.r, self.d) == (other.p, other.q, other.r, other.d)

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.d))

    # -- views ---------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __float__(self) -> float:
        return (self.p + self.q * self.d ** 0.5) / self.r

    def literal(self) -> str:
        """Canonical text form: ``(p)`` when rational with r == 1, else ``(p, q, r)``."""
        if self.q == 0 and self.r == 1:
            return f"({self.p})"
        return f"({self.p}, {self.q}, {self.r})"

    @classmethod
    def parse(cls, text: str, d: int = 0) -> "QuadNum":
        """Parse ``(p)`` or ``(p, q, r)``; ``d`` supplies the radicand."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad number literal {text!r}, expected (p) or (p, q, r)")
        parts = [s.strip() for s in body[1:-1].split(",")]
        try:
            ints = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"bad number literal {text!r}: non-integer component") from None
        if len(ints) == 1:
            return cls(ints[0])
        if len(ints) == 3:
            return cls(ints[0], ints[1], ints[2], d)
        raise ValueError(f"bad number literal {text!r}, expected 1 or 3 components")

    def __str__(self) -> str:
        return self.literal()

    def __repr__(self) -> str:
        return f"QuadNum({self.p}, {self.q}, {self.r}, {self.d})"


def is_square_free(n: int) -> bool:
    """True when no square > 1 divides n (0 and 1 count as square-free here)."""
    if n < 0:
        return False
    if n <= 3:
        return True
    if n % 4 == 0:
        return False
    k = 3
    while k <= isqrt(n):
        if n % (k * k) == 0:
            return False
        k += 2
    return True
