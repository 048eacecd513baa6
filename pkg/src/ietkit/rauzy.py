"""Two-sided Rauzy induction and return words through its morphism calculus.

A right step induces the transformation on the domain cut at the rightmost
interior division point of either partition; a left step mirrors this at the
left end.  Each step involves two letters of the transformation it acts on:

* the *pivot*: the last alphabet letter (right step) or the first (left step);
* the *partner*: the last letter in image order (right) or the first (left).

Two cases arise, decided by comparing the pivot and partner lengths.  When
the pivot piece is longer ("top_longer") the alphabet is unchanged, the
pivot's length shrinks by the partner's, and in image order the partner
letter moves next to the pivot.  When it is shorter ("top_shorter") the
pivot letter is relocated in the alphabet next to the partner (after it for
a right step, before it for a left step), the partner's length shrinks by
the pivot's, and the image order is unchanged as a letter sequence.  Equal
lengths mean a zero-connection and the step refuses.

The updated transformation is re-derived from first principles after every
step: the first-return time and landing point of each new piece are checked
exactly against the original dynamics, so a wrong update cannot survive.

Each step contributes a two-letter substitution (pivot and partner), and the
composition over a step sequence that shrinks the domain onto the cylinder
of a word w maps letters to the return words of w.  The composition order
puts the earliest step outermost; the morphism of a step is read off the
transformation the step acts on (not the one it produces).
"""

from __future__ import annotations

from dataclasses import dataclass

from .iet import Iet, Interval
from .morphisms import Morphism, compose, identity
from .words import OrderedAlphabet, Permutation

RIGHT = "right"
LEFT = "left"
TOP_LONGER = "top_longer"
TOP_SHORTER = "top_shorter"


class ZeroConnectionError(ValueError):
    """The pivot and partner pieces have equal length; the step is undefined."""


class InductionCapError(RuntimeError):
    """The step-sequence search exhausted its budget without a certificate."""


@dataclass(frozen=True)
class StepRecord:
    kind: str  # RIGHT or LEFT
    case: str  # TOP_LONGER or TOP_SHORTER
    pivot_letter: str
    partner_letter: str
    pre_alphabet: OrderedAlphabet
    post_alphabet: OrderedAlphabet


@dataclass(frozen=True)
class InductionTrace:
    """A certified step sequence: states[0] is the input, states[-1] == final."""

    steps: tuple[StepRecord, ...]
    states: tuple[Iet, ...]
    final: Iet
    theta: Morphism


def _permutation_from_image_letters(seq: tuple[str, ...], alphabet: OrderedAlphabet) -> Permutation:
    return Permutation(alphabet.rank(c) for c in seq)


def _verify_induced(base: Iet, induced: Iet) -> None:
    """Check the induced map against exact first returns of the base map.

    Every piece of the induced transformation must come back to the induced
    domain in one or two steps of the base map, landing exactly where the
    induced translation says.
    """
    sub = induced.domain
    if not base.domain.contains_interval(sub):
        raise AssertionError("induced domain escapes the base domain")
    for c in induced.alphabet:
        z = induced.interval(c).midpoint()
        landing, steps = base.first_return(sub, z, cap=4)
        if steps > 2 or landing != induced.apply(z):
            raise AssertionError(
                f"induced map disagrees with first return on piece {c!r}"
            )


def _step(iet: Iet, kind: str) -> tuple[Iet, StepRecord]:
    alphabet = iet.alphabet
    letters = alphabet.letters
    if len(letters) < 2:
        raise ValueError("induction needs at least two intervals")
    if not iet.permutation.is_irreducible:
        raise ValueError("induction needs an irreducible permutation")
    image = iet.image_order_letters()
    if kind == RIGHT:
        pivot, partner = letters[-1], image[-1]
    else:
        pivot, partner = letters[0], image[0]
    # Irreducibility already rules out pivot == partner.
    lp = iet.length(pivot)
    lq = iet.length(partner)
    if lp == lq:
        raise ZeroConnectionError(
            f"{kind} step undefined: pieces {pivot!r} and {partner!r} have equal length {lp}"
        )

    lengths = iet.lengths
    origin = iet.origin
    if lp > lq:
        case = TOP_LONGER
        lengths[pivot] = lp - lq
        new_letters = letters
        seq = list(image[:-1]) if kind == RIGHT else list(image[1:])
        if kind == RIGHT:
            seq.insert(seq.index(pivot) + 1, partner)
        else:
            seq.insert(seq.index(pivot), partner)
            origin = origin + lq
    else:
        case = TOP_SHORTER
        lengths[partner] = lq - lp
        base = [c for c in letters if c != pivot]
        if kind == RIGHT:
            base.insert(base.index(partner) + 1, pivot)
        else:
            base.insert(base.index(partner), pivot)
            origin = origin + lp
        new_letters = tuple(base)
        seq = list(image)

    post_alphabet = OrderedAlphabet(new_letters)
    permutation = _permutation_from_image_letters(tuple(seq), post_alphabet)
    induced = Iet(post_alphabet, permutation, lengths, origin)
    _verify_induced(iet, induced)
    record = StepRecord(
        kind=kind,
        case=case,
        pivot_letter=pivot,
        partner_letter=partner,
        pre_alphabet=alphabet,
        post_alphabet=post_alphabet,
    )
    return induced, record


def rauzy_right(iet: Iet) -> tuple[Iet, StepRecord]:
    """Induce on the domain cut at the rightmost interior division point."""
    return _step(iet, RIGHT)


def rauzy_left(iet: Iet) -> tuple[Iet, StepRecord]:
    """Induce on the domain cut at the leftmost interior division point."""
    return _step(iet, LEFT)


def step_morphism(record: StepRecord) -> Morphism:
    """The substitution contributed by one step.

    top_longer sends partner -> partner pivot, top_shorter sends
    pivot -> partner pivot; all other letters are fixed.  The source is the
    post-step alphabet and the target the pre-step alphabet, so the morphisms
    of consecutive steps compose.
    """
    images = {c: c for c in record.pre_alphabet}
    if record.case == TOP_LONGER:
        images[record.partner_letter] = record.partner_letter + record.pivot_letter
    else:
        images[record.pivot_letter] = record.partner_letter + record.pivot_letter
    return Morphism(record.post_alphabet, record.pre_alphabet, images)


def _search(
    start: Iet, target: Interval, cap: int, prefer_left: bool
) -> list[tuple[StepRecord, Iet]] | None:
    """Depth-first search for a step sequence whose final domain is ``target``.

    Returns the (record, state) path, or None when the budget ran out.  Steps
    whose domain no longer contains the target are pruned; zero-connection
    steps are treated as dead branches.
    """
    budget = cap
    order = (LEFT, RIGHT) if prefer_left else (RIGHT, LEFT)

    def walk(iet: Iet, path: list[tuple[StepRecord, Iet]]):
        nonlocal budget
        if iet.domain == target:
            return path
        for kind in order:
            if budget <= 0:
                return None
            budget -= 1
            try:
                nxt, record = _step(iet, kind)
            except ValueError:
                # Zero-connection or degenerate state: a dead branch, not a crash.
                continue
            if not nxt.domain.contains_interval(target):
                continue
            result = walk(nxt, path + [(record, nxt)])
            if result is not None:
                return result
        return None

    return walk(start, [])


def induce_to_cylinder(
    iet: Iet, w: str, cap: int | None = None, prefer_left: bool = False
) -> InductionTrace:
    """Certified induction of ``iet`` onto the cylinder of ``w``.

    The caller is responsible for regularity (see ``Iet.check_keane``); on a
    transformation with connections the search fails honestly with
    :class:`InductionCapError` instead of producing a wrong answer.
    """
    target = iet.cylinder(w)
    if target.is_empty:
        raise ValueError(f"{w!r} is not in the language of this transformation")
    if cap is None:
        cap = 64 * (len(w) + 1)
    path = _search(iet, target, cap, prefer_left)
    if path is None:
        raise InductionCapError(
            f"no step sequence onto the cylinder of {w!r} within {cap} steps"
        )
    steps = tuple(record for record, _ in path)
    states = (iet,) + tuple(state for _, state in path)
    theta = identity(states[-1].alphabet)
    for record in reversed(steps):
        theta = compose(step_morphism(record), theta)
    return InductionTrace(steps=steps, states=states, final=states[-1], theta=theta)


def return_words_induction(iet: Iet, w: str, cap: int | None = None) -> frozenset[str]:
    """Return words of ``w`` as the letter images of the induction morphism."""
    trace = induce_to_cylinder(iet, w, cap=cap)
    return frozenset(trace.theta(c) for c in trace.theta.source)
