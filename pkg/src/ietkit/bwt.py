"""Burrows-Wheeler transform, its multiset extension, and clustering analysis.

The plain transform sorts all rotations of a word lexicographically and reads
their last letters.  The multiset extension takes a multiset of Lyndon words,
sorts the rotations of all entries by the omega-order (u before v when the
infinite power u^w is lexicographically smaller), and is a bijection onto
arbitrary strings; :func:`inverse_ebwt` inverts it through the standard
permutation.  A word is clustering when its transform consists of one
contiguous block per letter; the block order then defines a permutation of
the support alphabet, and the word is perfectly clustering when that
permutation is order-reversing.

Everything here is small-scale by design: rotation sort is quadratic and
that is plenty for words of desk size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from collections.abc import Iterable

from .words import OrderedAlphabet, Permutation, is_lyndon, lyndon_representative, parikh


@dataclass(frozen=True)
class ClusteringReport:
    """Block analysis of a transform.

    ``block_order`` is the sequence of run letters of the transform (one per
    support letter exactly when ``is_clustering``).  ``permutation`` sends
    position i to the i-th block letter on the support alphabet; it is None
    for non-clustering input.  ``is_perfect`` means clustering with the
    order-reversing permutation.
    """

    transform: str
    is_clustering: bool
    block_order: tuple[str, ...]
    support: OrderedAlphabet
    permutation: Permutation | None
    is_perfect: bool


def bwt(w: str, alphabet: OrderedAlphabet) -> str:
    """Last letters of the lexicographically sorted rotations of ``w``."""
    if not w:
        raise ValueError("cannot transform the empty word")
    alphabet.require(w)
    doubled = w + w
    n = len(w)
    rotations = sorted((doubled[i : i + n] for i in range(n)), key=alphabet.key)
    return "".join(rot[-1] for rot in rotations)


def _require_lyndon_entries(entries: tuple[str, ...], alphabet: OrderedAlphabet) -> None:
    if not entries:
        raise ValueError("empty multiset")
    for w in entries:
        alphabet.require(w)
        if not is_lyndon(w, alphabet):
            raise ValueError(f"multiset entry {w!r} is not a Lyndon word over {alphabet}")


def ebwt(entries: Iterable[str], alphabet: OrderedAlphabet) -> str:
    """Extended transform of a multiset of Lyndon words.

    Rotations of all entries are sorted by omega-order; rotations with equal
    infinite powers are identical strings, so ties cannot change the output.
    """
    entries = tuple(entries)
    _require_lyndon_entries(entries, alphabet)
    span = 2 * max(len(w) for w in entries)
    rotations: list[str] = []
    for w in entries:
        doubled = w + w
        rotations.extend(doubled[i : i + len(w)] for i in range(len(w)))
    # Expanding every rotation to twice the maximal length decides the
    # omega-order exactly (two distinct powers differ within |u| + |v|).
    rotations.sort(key=lambda u: alphabet.key((u * (span // len(u) + 1))[:span]))
    return "".join(u[-1] for u in rotations)


def inverse_ebwt(s: str, alphabet: OrderedAlphabet) -> tuple[str, ...]:
    """The unique Lyndon multiset whose extended transform is ``s``.

    Computed through the standard permutation: positions of ``s`` are stably
    sorted by letter, the i-th position of the sorted column is matched with
    the i-th occurrence of the same letter in ``s``, and each cycle of that
    matching spells one word, normalized to its Lyndon representative.
    """
    if not s:
        raise ValueError("cannot invert the empty string")
    alphabet.require(s)
    n = len(s)
    order = sorted(range(n), key=lambda i: (alphabet.rank(s[i]), i))
    first_column = [s[i] for i in order]
    occurrences: dict[str, list[int]] = {}
    for i, c in enumerate(s):
        occurrences.setdefault(c, []).append(i)
    counters: Counter[str] = Counter()
    sigma = [0] * n
    for pos in range(n):
        c = first_column[pos]
        sigma[pos] = occurrences[c][counters[c]]
        counters[c] += 1
    seen = [False] * n
    words = []
    for start in range(n):
        if seen[start]:
            continue
        letters = []
        i = start
        while not seen[i]:
            seen[i] = True
            letters.append(first_column[i])
            i = sigma[i]
        words.append(lyndon_representative("".join(letters), alphabet))
    return tuple(sorted(words, key=alphabet.key))


def _block_report(transform: str, alphabet: OrderedAlphabet) -> ClusteringReport:
    runs: list[str] = []
    for c in transform:
        if not runs or runs[-1] != c:
            runs.append(c)
    support = alphabet.restrict(transform)
    clustering = len(runs) == len(support)
    perm = None
    if clustering:
        perm = Permutation(support.rank(c) for c in runs)
    return ClusteringReport(
        transform=transform,
        is_clustering=clustering,
        block_order=tuple(runs),
        support=support,
        permutation=perm,
        is_perfect=clustering and perm.is_symmetric,
    )


def clustering_report(w: str, alphabet: OrderedAlphabet) -> ClusteringReport:
    """Block analysis of bwt(w), evaluated on the support alphabet."""
    return _block_report(bwt(w, alphabet), alphabet)


def multiset_clustering_report(entries: Iterable[str], alphabet: OrderedAlphabet) -> ClusteringReport:
    """Block analysis of the extended transform of a Lyndon multiset."""
    return _block_report(ebwt(entries, alphabet), alphabet)


def multiset_parikh(entries: Iterable[str], alphabet: OrderedAlphabet) -> dict[str, int]:
    """Summed letter counts of a multiset."""
    counts = dict.fromkeys(alphabet.letters, 0)
    for w in entries:
        for c, k in parikh(w, alphabet).items():
            counts[c] += k
    return counts
