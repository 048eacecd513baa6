"""Exact interval exchange transformations.

An :class:`Iet` is determined by an ordered alphabet, a permutation, one
positive exact length per letter, and the left end of its domain.  The
domain partitions into left-closed right-open pieces in alphabet order; the
image pieces tile the same domain left to right in the order
``a_{pi(1)}, ..., a_{pi(d)}``.  The translation of the piece of ``a`` is
the difference between its image offset and its domain offset.

All points are :class:`~ietkit.arith.QuadNum`, so membership tests, orbit
hits and cylinder intersections are exact.  The Keane (no-connection)
condition is only ever certified to a finite depth; nothing in this module
claims full regularity.

Languages are enumerated by cylinder refinement, never by sampling
trajectories: on a cylinder of the words of length k the k-th iterate is a
single translation, so the children of a cylinder are exact interval
intersections and no factor can be missed.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Mapping

from .arith import QuadNum
from .words import OrderedAlphabet, Permutation


class CapExceededError(RuntimeError):
    """An orbit-following loop ran out of its iteration budget."""


class IncompleteScanError(RuntimeError):
    """A trajectory scan ended before the expected number of return words.

    Carries the incomplete set in ``words``.
    """

    def __init__(self, message: str, words: frozenset[str]):
        super().__init__(message)
        self.words = words


@dataclass(frozen=True)
class Interval:
    """Left-closed right-open interval; ``EMPTY`` is the distinguished empty value."""

    left: QuadNum | None
    right: QuadNum | None

    @staticmethod
    def of(left: QuadNum, right: QuadNum) -> "Interval":
        """Interval [left, right), collapsing to EMPTY when left >= right."""
        if left < right:
            return Interval(left, right)
        return EMPTY

    @property
    def is_empty(self) -> bool:
        return self.left is None

    def length(self) -> QuadNum:
        if self.is_empty:
            return QuadNum(0)
        return self.right - self.left

    def contains(self, x: QuadNum) -> bool:
        return not self.is_empty and self.left <= x < self.right

    def contains_interval(self, other: "Interval") -> bool:
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return self.left <= other.left and other.right <= self.right

    def intersect(self, other: "Interval") -> "Interval":
        if self.is_empty or other.is_empty:
            return EMPTY
        lo = self.left if self.left >= other.left else other.left
        hi = self.right if self.right <= other.right else other.right
        return Interval.of(lo, hi)

    def translate(self, t: QuadNum) -> "Interval":
        if self.is_empty:
            return EMPTY
        return Interval(self.left + t, self.right + t)

    def midpoint(self) -> QuadNum:
        if self.is_empty:
            raise ValueError("the empty interval has no midpoint")
        return (self.left + self.right) * QuadNum(1, 0, 2)

    def __repr__(self) -> str:
        if self.is_empty:
            return "Interval.EMPTY"
        return f"[{self.left}, {self.right})"


EMPTY = Interval(None, None)


@dataclass(frozen=True)
class Connection:
    """An orbit segment from a discontinuity of the inverse to one of the map."""

    x: QuadNum
    y: QuadNum
    n: int

    @property
    def is_zero_connection(self) -> bool:
        return self.n == 0


@dataclass(frozen=True)
class KeaneVerdict:
    """Outcome of a finite-depth connection search.

    ``regular_to_depth`` is the checked depth when no connection was found,
    and ``failure.n - 1`` otherwise.
    """

    regular_to_depth: int
    failure: Connection | None = None

    @property
    def is_regular(self) -> bool:
        return self.failure is None


class Iet:
    """An interval exchange transformation with exact arithmetic."""

    def __init__(
        self,
        alphabet: OrderedAlphabet,
        permutation: Permutation,
        lengths: Mapping[str, QuadNum | int],
        origin: QuadNum | int = 0,
    ):
        if len(permutation) != len(alphabet):
            raise ValueError("permutation size does not match alphabet size")
        self._alphabet = alphabet
        self._perm = permutation
        lens: dict[str, QuadNum] = {}
        for c in alphabet:
            if c not in lengths:
                raise ValueError(f"no length given for letter {c!r}")
            v = lengths[c]
            if isinstance(v, int):
                v = QuadNum(v)
            if v.sign() <= 0:
                raise ValueError(f"length of {c!r} must be positive, got {v}")
            lens[c] = v
        extra = set(lengths) - set(alphabet.letters)
        if extra:
            raise ValueError(f"lengths given for letters outside the alphabet: {sorted(extra)}")
        self._lengths = lens
        self._origin = QuadNum(origin) if isinstance(origin, int) else origin

        dom_left: dict[str, QuadNum] = {}
        x = self._origin
        for c in alphabet:
            dom_left[c] = x
            x = x + lens[c]
        self._end = x
        img_left: dict[str, QuadNum] = {}
        y = self._origin
        for c in self.image_order_letters():
            img_left[c] = y
            y = y + lens[c]
        self._dom_left = dom_left
        self._img_left = img_left
        self._tau = {c: img_left[c] - dom_left[c] for c in alphabet}

    # -- structure ----------------------------------------------------------

    @property
    def alphabet(self) -> OrderedAlphabet:
        return self._alphabet

    @property
    def permutation(self) -> Permutation:
        return self._perm

    @property
    def origin(self) -> QuadNum:
        return self._origin

    @property
    def d(self) -> int:
        return len(self._alphabet)

    def length(self, letter: str) -> QuadNum:
        self._alphabet.rank(letter)
        return self._lengths[letter]

    @property
    def lengths(self) -> dict[str, QuadNum]:
        return dict(self._lengths)

    @property
    def domain(self) -> Interval:
        return Interval(self._origin, self._end)

    def image_order_letters(self) -> tuple[str, ...]:
        letters = self._alphabet.letters
        return tuple(letters[self._perm(i)] for i in range(len(letters)))

    def interval(self, letter: str) -> Interval:
        """The domain piece of ``letter``."""
        left = self._dom_left[letter]
        return Interval(left, left + self._lengths[letter])

    def image_interval(self, letter: str) -> Interval:
        left = self._img_left[letter]
        return Interval(left, left + self._lengths[letter])

    def translation(self, letter: str) -> QuadNum:
        self._alphabet.rank(letter)
        return self._tau[letter]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Iet):
            return NotImplemented
        return (
            self._alphabet == other._alphabet
            and self._perm == other._perm
            and self._lengths == other._lengths
            and self._origin == other._origin
        )

    def __repr__(self) -> str:
        lens = ", ".join(f"{c}={self._lengths[c]}" for c in self._alphabet)
        return (
            f"Iet({self._alphabet}, pi={self._perm.one_line_letters(self._alphabet)}, "
            f"{lens}, origin={self._origin})"
        )

    # -- dynamics -------------------------------------------------------------

    def letter_at(self, x: QuadNum) -> str:
        """The letter of the domain piece containing ``x``."""
        if self.domain.contains(x):
            for c in self._alphabet:
                left = self._dom_left[c]
                if left <= x < left + self._lengths[c]:
                    return c
        raise ValueError(f"point {x} is outside the domain {self.domain}")

    def apply(self, x: QuadNum) -> QuadNum:
        return x + self._tau[self.letter_at(x)]

    def apply_inverse(self, y: QuadNum) -> QuadNum:
        if self.domain.contains(y):
            for c in self._alphabet:
                left = self._img_left[c]
                if left <= y < left + self._lengths[c]:
                    return y - self._tau[c]
        raise ValueError(f"point {y} is outside the domain {self.domain}")

    def discontinuities(self) -> tuple[tuple[QuadNum, ...], tuple[QuadNum, ...]]:
        """(D(T), D(T^-1)): interior division points of the domain and image partitions."""
        letters = self._alphabet.letters
        d_map = tuple(self._dom_left[c] for c in letters[1:])
        image_letters = self.image_order_letters()
        d_inv = tuple(self._img_left[c] for c in image_letters[1:])
        return d_map, d_inv

    def check_keane(self, depth: int = 1000) -> KeaneVerdict:
        """Search for a connection by iterating each inverse-discontinuity forward.

        Exact equality tests only; finding nothing up to ``depth`` certifies
        regularity to that depth and no further.
        """
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        d_map, d_inv = self.discontinuities()
        targets = set(d_map)
        for x in d_inv:
            y = x
            for n in range(depth + 1):
                if y in targets:
                    return KeaneVerdict(regular_to_depth=n - 1, failure=Connection(x, y, n))
                if n < depth:
                    y = self.apply(y)
        return KeaneVerdict(regular_to_depth=depth)

    def trajectory(self, x: QuadNum, n: int) -> str:
        """The first ``n`` letters of the orbit coding of ``x``."""
        if n < 0:
            raise ValueError("trajectory length must be nonnegative")
        out = []
        for _ in range(n):
            c = self.letter_at(x)
            out.append(c)
            x = x + self._tau[c]
        return "".join(out)

    def cylinder(self, w: str) -> Interval:
        """Largest interval whose points have trajectories starting with ``w``.

        The empty word gives the whole domain; an empty result means the word
        is not in the language.
        """
        self._alphabet.require(w)
        current = self.domain
        shift = QuadNum(0)
        for c in w:
            current = current.intersect(self.interval(c).translate(-shift))
            if current.is_empty:
                return EMPTY
            shift = shift + self._tau[c]
        return current

    def language(self, n: int) -> set[str]:
        """All factors of length <= n, by exact cylinder refinement."""
        if n < 0:
            raise ValueError("maximal length must be nonnegative")
        words: set[str] = {""}
        level: list[tuple[str, Interval, QuadNum]] = [("", self.domain, QuadNum(0))]
        for _ in range(n):
            next_level = []
            for w, block, shift in level:
                for c in self._alphabet:
                    child = block.intersect(self.interval(c).translate(-shift))
                    if not child.is_empty:
                        next_level.append((w + c, child, shift + self._tau[c]))
            for w, _, _ in next_level:
                words.add(w)
            level = next_level
        return words

    def first_return(self, sub: Interval, z: QuadNum, cap: int = 10_000) -> tuple[QuadNum, int]:
        """First re-entry of the orbit of ``z`` into ``sub``: (landing point, steps)."""
        if cap <= 0:
            raise ValueError("cap must be positive")
        if not self.domain.contains_interval(sub) or sub.is_empty:
            raise ValueError("the return interval must be a nonempty part of the domain")
        if not sub.contains(z):
            raise ValueError(f"point {z} is not in the return interval {sub}")
        y = self.apply(z)
        steps = 1
        while not sub.contains(y):
            if steps >= cap:
                raise CapExceededError(
                    f"no return to {sub} within {cap} steps from {z}"
                )
            y = self.apply(y)
            steps += 1
        return y, steps

    def return_words_scan(
        self, w: str, horizon: int | None = None, expected: int | None = None
    ) -> frozenset[str]:
        """Return words to ``w`` read off one trajectory.

        Starting from the midpoint of the cylinder of ``w``, the trajectory is
        cut at successive occurrences of ``w`` (overlaps included); the pieces
        between consecutive occurrence starts are the return words.  The scan
        stops once ``expected`` distinct words are found and raises
        :class:`IncompleteScanError` if the horizon runs out first.
        """
        if not w:
            raise ValueError("return words need a nonempty word")
        block = self.cylinder(w)
        if block.is_empty:
            raise ValueError(f"{w!r} is not in the language of this transformation")
        if expected is None:
            expected = self.d
        if horizon is None:
            horizon = 200 * len(w) * self.d
        x = block.midpoint()
        k = len(w)
        found: set[str] = set()
        trail: list[str] = []
        prev_start: int | None = None
        for step in range(horizon):
            c = self.letter_at(x)
            x = x + self._tau[c]
            trail.append(c)
            if len(trail) >= k and "".join(trail[-k:]) == w:
                start = step - k + 1
                if prev_start is not None:
                    found.add("".join(trail[prev_start:start]))
                    if len(found) >= expected:
                        return frozenset(found)
                prev_start = start
        raise IncompleteScanError(
            f"horizon {horizon} exhausted with {len(found)} of {expected} return words for {w!r}",
            frozenset(found),
        )
