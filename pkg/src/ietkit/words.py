"""Ordered alphabets, finite words, and permutations.

Words are plain Python strings.  An :class:`OrderedAlphabet` fixes which
symbols are legal and, crucially, how they compare: the order is positional
in the alphabet declaration, not the characters' natural order, so
``OrderedAlphabet("nab")`` makes ``n`` the smallest letter.  Every
order-sensitive computation downstream (transforms, interval layouts,
extension graphs) takes the alphabet as an explicit argument because
induction steps reorder alphabets as they go.

A :class:`Permutation` is stored in one-line notation with 0-based images.
For an interval exchange with alphabet ``a_1 < ... < a_d`` the image
intervals appear left to right in the order ``a_{pi(1)}, ..., a_{pi(d)}``;
that convention is fixed here once and used everywhere.
"""

from __future__ import annotations

from collections.abc import Iterable


class OrderedAlphabet:
    """A finite sequence of distinct single-character symbols with its order."""

    __slots__ = ("_letters", "_rank")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must contain at least one letter")
        for x in letters:
            if not isinstance(x, str) or len(x) != 1:
                raise ValueError(f"letters must be single characters, got {x!r}")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letter in alphabet {''.join(letters)!r}")
        self._letters = letters
        self._rank = {c: i for i, c in enumerate(letters)}

    @property
    def letters(self) -> tuple[str, ...]:
        return self._letters

    def rank(self, letter: str) -> int:
        """0-based position of ``letter`` in the alphabet order."""
        try:
            return self._rank[letter]
        except KeyError:
            raise ValueError(f"symbol {letter!r} is not in alphabet {self}") from None

    def key(self, word: str) -> tuple[int, ...]:
        """Sort key realizing the lexicographic order of this alphabet."""
        try:
            return tuple(self._rank[c] for c in word)
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} is not in alphabet {self}") from None

    def require(self, word: str) -> str:
        """Validate that every symbol of ``word`` belongs to the alphabet."""
        for c in word:
            if c not in self._rank:
                raise ValueError(f"symbol {c!r} is not in alphabet {self}")
        return word

    def restrict(self, word_or_letters: str) -> "OrderedAlphabet":
        """Sub-alphabet of the letters occurring in the argument, order kept."""
        present = set(word_or_letters)
        kept = tuple(c for c in self._letters if c in present)
        if not kept:
            raise ValueError("restriction to an empty support")
        return OrderedAlphabet(kept)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self._rank

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrderedAlphabet):
            return NotImplemented
        return self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __str__(self) -> str:
        return "".join(self._letters)

    def __repr__(self) -> str:
        return f"OrderedAlphabet({''.join(self._letters)!r})"


class Permutation:
    """A bijection of {0, ..., d-1} in one-line notation (0-based images).

    ``images[i]`` is the image of position ``i``.  Input and display helpers
    translate between indices and letters of a given alphabet, accepting both
    one-line letter strings (``"bca"``) and cycle notation (``"(a c)(b)"``).
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        d = len(images)
        if sorted(images) != list(range(d)):
            raise ValueError(f"not a bijection on 0..{d - 1}: {images}")
        self._images = images

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def symmetric(cls, d: int) -> "Permutation":
        """The order-reversing permutation i -> d - 1 - i."""
        return cls(range(d - 1, -1, -1))

    @classmethod
    def from_one_line_letters(cls, text: str, alphabet: OrderedAlphabet) -> "Permutation":
        if len(text) != len(alphabet):
            raise ValueError(f"one-line permutation {text!r} does not cover {alphabet}")
        return cls(alphabet.rank(c) for c in text)

    @classmethod
    def from_cycles(cls, text: str, alphabet: OrderedAlphabet) -> "Permutation":
        """Parse cycle notation over letters, e.g. ``"(a c)(b)"``.

        Letters may be separated by spaces or commas; omitted letters are
        fixed points.
        """
        images = list(range(len(alphabet)))
        body = text.strip()
        if body.count("(") != body.count(")"):
            raise ValueError(f"unbalanced parentheses in cycles {text!r}")
        seen: set[str] = set()
        while body:
            if not body.startswith("("):
                raise ValueError(f"expected '(' in cycles {text!r}")
            end = body.index(")")
            inner = body[1:end]
            body = body[end + 1 :].strip()
            cycle = [c for c in inner.replace(",", " ").split() if c]
            cycle = [c for chunk in cycle for c in chunk]  # tolerate "ac" style too
            if not cycle:
                raise ValueError(f"empty cycle in {text!r}")
            for c in cycle:
                if c in seen:
                    raise ValueError(f"letter {c!r} repeated in cycles {text!r}")
                seen.add(c)
            ranks = [alphabet.rank(c) for c in cycle]
            for i, r in enumerate(ranks):
                images[r] = ranks[(i + 1) % len(ranks)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, alphabet: OrderedAlphabet) -> "Permutation":
        text = text.strip()
        if text.startswith("("):
            return cls.from_cycles(text, alphabet)
        return cls.from_one_line_letters(text, alphabet)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __len__(self) -> int:
        return len(self._images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``self`` after ``other``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self._images[j] for j in other._images)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    @property
    def is_symmetric(self) -> bool:
        d = len(self._images)
        return all(self._images[i] == d - 1 - i for i in range(d))

    @property
    def is_irreducible(self) -> bool:
        """No proper prefix {0..k-1} is invariant."""
        top = -1
        for k in range(len(self._images) - 1):
            top = max(top, self._images[k])
            if top == k:
                return False
        return True

    @property
    def is_circular(self) -> bool:
        return len(self.cycles()) == 1

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycle decomposition; each cycle starts at its smallest element."""
        seen = [False] * len(self._images)
        out = []
        for start in range(len(self._images)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self._images[i]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self, alphabet: OrderedAlphabet | None = None) -> str:
        """Cycles as text: 1-based integers, or letters when given an alphabet."""
        parts = []
        for cyc in self.cycles():
            if alphabet is None:
                parts.append("(" + ",".join(str(i + 1) for i in cyc) + ")")
            else:
                parts.append("(" + " ".join(alphabet.letters[i] for i in cyc) + ")")
        return "".join(parts)

    def one_line_letters(self, alphabet: OrderedAlphabet) -> str:
        if len(alphabet) != len(self):
            raise ValueError("alphabet size does not match permutation size")
        return "".join(alphabet.letters[i] for i in self._images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"


def compare_lex(u: str, v: str, alphabet: OrderedAlphabet) -> int:
    """Lexicographic comparison: -1, 0, or 1.  A proper prefix is smaller."""
    ku, kv = alphabet.key(u), alphabet.key(v)
    return (ku > kv) - (ku < kv)


def compare_omega(u: str, v: str, alphabet: OrderedAlphabet) -> int:
    """Compare the infinite powers u^w and v^w; equal iff uv == vu.

    Comparing prefixes of length |u| + |v| decides the order exactly, so no
    unbounded expansion is ever needed.
    """
    if not u or not v:
        raise ValueError("omega-order comparison needs nonempty words")
    alphabet.require(u)
    alphabet.require(v)
    n = len(u) + len(v)
    uu = (u * (n // len(u) + 1))[:n]
    vv = (v * (n // len(v) + 1))[:n]
    return compare_lex(uu, vv, alphabet)


def conjugates(w: str) -> list[str]:
    """All |w| rotations in rotation-index order, repeats included."""
    if not w:
        raise ValueError("the empty word has no conjugates")
    return [w[i:] + w[:i] for i in range(len(w))]


def primitive_root(w: str) -> tuple[str, int]:
    """Shortest u and maximal p with w == u ** p."""
    if not w:
        raise ValueError("the empty word has no primitive root")
    n = len(w)
    for k in range(1, n + 1):
        if n % k == 0 and w[:k] * (n // k) == w:
            return w[:k], n // k
    raise AssertionError("unreachable: every word is a power of itself")


def is_primitive(w: str) -> bool:
    return primitive_root(w)[1] == 1


def lyndon_representative(w: str, alphabet: OrderedAlphabet) -> str:
    """The unique Lyndon conjugate of a primitive word w."""
    alphabet.require(w)
    if not is_primitive(w):
        raise ValueError(f"{w!r} is not primitive, so it has no Lyndon conjugate")
    return min(conjugates(w), key=alphabet.key)


def is_lyndon(w: str, alphabet: OrderedAlphabet) -> bool:
    return bool(w) and is_primitive(w) and w == min(conjugates(w), key=alphabet.key)


def parikh(w: str, alphabet: OrderedAlphabet) -> dict[str, int]:
    """Letter-count vector of w as a dict over the whole alphabet."""
    alphabet.require(w)
    counts = dict.fromkeys(alphabet.letters, 0)
    for c in w:
        counts[c] += 1
    return counts
