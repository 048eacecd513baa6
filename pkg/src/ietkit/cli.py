"""Command-line interface and verification harness.

One executable, ``ietkit``, with subcommands ``bwt``, ``ebwt``,
``ebwt-inverse``, ``cluster``, ``morphism apply``, ``diet``,
``iet check|traj|language|rauzy|returns``, ``extgraph``, ``classify`` and
``verify``.  Interval exchanges are read from small key = value instance files::

    d = 5
    alphabet = abc
    pi = bca
    len.a = (-2, 1, 1)
    len.b = (3, -1, 2)
    len.c = (3, -1, 2)
    origin = (0)

Number literals are ``(p)`` or ``(p, q, r)`` meaning (p + q*sqrt(d)) / r with
the file-level radicand d.  ``verify`` checks, for every factor of the
language up to a length bound, that the scan and induction constructions of
return words agree and that every return word is clustering; it exits 0
exactly when no failure was recorded.  Structured reports are JSON with
sorted keys, so identical inputs produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .arith import QuadNum, is_square_free
from .bwt import ClusteringReport, bwt, clustering_report, ebwt, inverse_ebwt, multiset_clustering_report
from .diet import Diet, diet_action, diet_cylinder, orbit_words
from .extgraph import (
    LanguageSample,
    classify,
    extension_graph,
    is_compatible,
    is_forest,
    is_tree,
    order_from_permutation,
    sample_from_iet,
    sample_from_multiset,
    sample_from_periodic,
)
from .iet import Iet, IncompleteScanError
from .morphisms import Morphism
from .rauzy import (
    InductionCapError,
    induce_to_cylinder,
    rauzy_left,
    rauzy_right,
    step_morphism,
)
from .words import OrderedAlphabet, Permutation

DEFAULT_KEANE_DEPTH = int(os.environ.get("IETKIT_KEANE_DEPTH", "1000"))
_CAP_ENV = os.environ.get("IETKIT_INDUCTION_CAP")
DEFAULT_INDUCTION_CAP = int(_CAP_ENV) if _CAP_ENV else None


class IetFileError(ValueError):
    """A syntax or consistency error in an interval exchange instance file."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class KeaneCheckFailed(RuntimeError):
    """The instance has a connection, so verification is refused."""


def parse_iet_file(path: str) -> Iet:
    """Read and validate an interval exchange instance file."""
    with open(path, encoding="utf-8") as handle:
        lines = handle.readlines()

    entries: list[tuple[int, str, str]] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise IetFileError(line_no, f"expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise IetFileError(line_no, f"expected 'key = value', got {line!r}")
        entries.append((line_no, key, value))

    d = 0
    d_line: int | None = None
    alphabet: OrderedAlphabet | None = None
    pi_text: tuple[int, str] | None = None
    origin_text: tuple[int, str] | None = None
    length_texts: dict[str, tuple[int, str]] = {}

    for line_no, key, value in entries:
        if key == "d":
            try:
                new_d = int(value)
            except ValueError:
                raise IetFileError(line_no, f"radicand must be an integer, got {value!r}") from None
            if d_line is not None and new_d != d:
                raise IetFileError(line_no, f"mixed radicands: d = {d} then d = {new_d}")
            if not is_square_free(new_d):
                raise IetFileError(line_no, f"radicand {new_d} is not square-free")
            d, d_line = new_d, line_no
        elif key == "alphabet":
            if alphabet is not None:
                raise IetFileError(line_no, "alphabet given twice")
            try:
                alphabet = OrderedAlphabet(value)
            except ValueError as exc:
                raise IetFileError(line_no, str(exc)) from None
        elif key == "pi":
            if pi_text is not None:
                raise IetFileError(line_no, "pi given twice")
            pi_text = (line_no, value)
        elif key == "origin":
            if origin_text is not None:
                raise IetFileError(line_no, "origin given twice")
            origin_text = (line_no, value)
        elif key.startswith("len."):
            letter = key[4:]
            if letter in length_texts:
                raise IetFileError(line_no, f"length of {letter!r} given twice")
            length_texts[letter] = (line_no, value)
        else:
            raise IetFileError(line_no, f"unknown key {key!r}")

    if alphabet is None:
        raise IetFileError(len(lines) + 1, "missing alphabet")
    if pi_text is None:
        raise IetFileError(len(lines) + 1, "missing pi")

    line_no, value = pi_text
    try:
        pi = Permutation.parse(value, alphabet)
    except ValueError as exc:
        raise IetFileError(line_no, str(exc)) from None

    lengths: dict[str, QuadNum] = {}
    for letter, (line_no, value) in length_texts.items():
        if letter not in alphabet:
            raise IetFileError(line_no, f"length for unknown letter {letter!r}")
        try:
            lengths[letter] = QuadNum.parse(value, d)
        except ValueError as exc:
            raise IetFileError(line_no, str(exc)) from None

    origin: QuadNum | int = 0
    if origin_text is not None:
        line_no, value = origin_text
        try:
            origin = QuadNum.parse(value, d)
        except ValueError as exc:
            raise IetFileError(line_no, str(exc)) from None

    missing = [c for c in alphabet if c not in lengths]
    if missing:
        raise IetFileError(len(lines) + 1, f"missing lengths for letters {missing}")
    try:
        return Iet(alphabet, pi, lengths, origin)
    except ValueError as exc:
        raise IetFileError(len(lines) + 1, str(exc)) from None


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class ReturnWordCheck:
    word: str
    transform: str
    is_clustering: bool
    blocks: str
    matches_instance_permutation: bool


@dataclass(frozen=True)
class WordRecord:
    word: str
    method_agreement: bool
    return_words: tuple[str, ...]
    checks: tuple[ReturnWordCheck, ...]
    theta: tuple[tuple[str, str], ...] | None = None


@dataclass(frozen=True)
class Failure:
    word: str
    return_word: str | None
    transform: str | None
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    instance: str
    max_len: int
    keane_depth: int
    words_checked: int
    failures: tuple[Failure, ...]
    records: tuple[WordRecord, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def restricted_permutation(
    pi: Permutation, alphabet: OrderedAlphabet, support: OrderedAlphabet
) -> Permutation:
    """The pattern of ``pi`` on a sub-alphabet: its image order restricted
    to the support letters, read as a permutation of the support."""
    image_letters = [alphabet.letters[pi(i)] for i in range(len(pi))]
    kept = [c for c in image_letters if c in support]
    return Permutation(support.rank(c) for c in kept)


def _instance_description(iet: Iet) -> str:
    lens = " ".join(f"{c}={iet.length(c).literal()}" for c in iet.alphabet)
    return (
        f"alphabet={iet.alphabet} pi={iet.permutation.one_line_letters(iet.alphabet)} "
        f"{lens} origin={iet.origin.literal()}"
    )


def verify_return_words(
    iet: Iet,
    max_len: int,
    keane_depth: int = DEFAULT_KEANE_DEPTH,
    cap: int | None = DEFAULT_INDUCTION_CAP,
    trace: bool = False,
) -> VerificationReport:
    """Check the clustering property of all return words up to ``max_len``.

    For every nonempty factor w of the language: compute the return words by
    trajectory scan and by induction, require the two sets to be equal, and
    require every return word to be clustering.  The clustering permutation
    of each return word is also compared against the instance permutation
    restricted to its support; that comparison is recorded, never judged.

    Refuses instances whose finite-depth connection check fails.
    """
    verdict = iet.check_keane(keane_depth)
    if not verdict.is_regular:
        c = verdict.failure
        raise KeaneCheckFailed(
            f"connection found: T^{c.n}({c.x}) = {c.y}; "
            f"the return-word analysis needs a connection-free instance"
        )
    alphabet = iet.alphabet
    words = sorted(
        (w for w in iet.language(max_len) if w),
        key=lambda w: (len(w), alphabet.key(w)),
    )
    failures: list[Failure] = []
    records: list[WordRecord] = []
    for w in words:
        theta_images: tuple[tuple[str, str], ...] | None = None
        try:
            trace_result = induce_to_cylinder(iet, w, cap=cap)
            induced = frozenset(trace_result.theta(c) for c in trace_result.theta.source)
            if trace:
                theta_images = tuple(
                    (c, trace_result.theta(c)) for c in trace_result.theta.source
                )
        except InductionCapError as exc:
            failures.append(Failure(w, None, None, f"induction failed: {exc}"))
            records.append(WordRecord(w, False, (), ()))
            continue
        try:
            scanned = iet.return_words_scan(w)
        except IncompleteScanError as exc:
            failures.append(Failure(w, None, None, f"scan incomplete: {exc}"))
            scanned = exc.words
        agreement = scanned == induced
        if not agreement:
            failures.append(
                Failure(
                    w,
                    None,
                    None,
                    f"methods disagree: scan {sorted(scanned)} vs induction {sorted(induced)}",
                )
            )
        checks = []
        for u in sorted(induced, key=lambda u: (len(u), alphabet.key(u))):
            report = clustering_report(u, alphabet)
            if not report.is_clustering:
                failures.append(Failure(w, u, report.transform, "return word not clustering"))
            matches = report.is_clustering and report.permutation == restricted_permutation(
                iet.permutation, alphabet, report.support
            )
            checks.append(
                ReturnWordCheck(
                    word=u,
                    transform=report.transform,
                    is_clustering=report.is_clustering,
                    blocks="".join(report.block_order),
                    matches_instance_permutation=matches,
                )
            )
        records.append(
            WordRecord(
                word=w,
                method_agreement=agreement,
                return_words=tuple(sorted(induced, key=lambda u: (len(u), alphabet.key(u)))),
                checks=tuple(checks),
                theta=theta_images,
            )
        )
    return VerificationReport(
        instance=_instance_description(iet),
        max_len=max_len,
        keane_depth=keane_depth,
        words_checked=len(words),
        failures=tuple(failures),
        records=tuple(records),
    )


def emit_report(report: VerificationReport, fmt: str = "text") -> bytes:
    """Deterministic serialization; ``structured`` is JSON with sorted keys."""
    if fmt == "structured":
        payload = {
            "instance": report.instance,
            "max_len": report.max_len,
            "keane_depth": report.keane_depth,
            "words_checked": report.words_checked,
            "failures": [
                {
                    "word": f.word,
                    "return_word": f.return_word,
                    "transform": f.transform,
                    "reason": f.reason,
                }
                for f in report.failures
            ],
            "records": [
                {
                    "word": r.word,
                    "method_agreement": r.method_agreement,
                    "return_words": list(r.return_words),
                    "checks": [
                        {
                            "word": c.word,
                            "transform": c.transform,
                            "clustering": c.is_clustering,
                            "blocks": c.blocks,
                            "matches_instance_permutation": c.matches_instance_permutation,
                        }
                        for c in r.checks
                    ],
                    **({"theta": dict(r.theta)} if r.theta is not None else {}),
                }
                for r in report.records
            ],
        }
        return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [
        f"instance: {report.instance}",
        f"max word length: {report.max_len}",
        f"connection check depth: {report.keane_depth}",
        f"words checked: {report.words_checked}",
        f"failures: {len(report.failures)}",
    ]
    for f in report.failures:
        where = f" return_word={f.return_word}" if f.return_word else ""
        lines.append(f"FAIL {f.word}:{where} {f.reason}")
    for r in report.records:
        agree = "yes" if r.method_agreement else "NO"
        ok = "yes" if all(c.is_clustering for c in r.checks) and r.checks else "NO"
        pi_match = "yes" if r.checks and all(c.matches_instance_permutation for c in r.checks) else "no"
        lines.append(
            f"word {r.word}: returns={{{', '.join(r.return_words)}}} "
            f"agree={agree} clustering={ok} matches_pi={pi_match}"
        )
        if r.theta is not None:
            body = ", ".join(f"{a}:{img}" for a, img in r.theta)
            lines.append(f"  theta: {body}")
    return ("\n".join(lines) + "\n").encode()


# -- small shared helpers -----------------------------------------------------


def _alphabet_arg(text: str) -> OrderedAlphabet:
    return OrderedAlphabet(text)


def _word_arg(text: str) -> str:
    """Accept the visible epsilon for the empty word."""
    return "" if text in ("ε", "eps") else text


def _cluster_payload(word_display: str, report: ClusteringReport) -> dict:
    return {
        "input": word_display,
        "transform": report.transform,
        "blocks": list(report.block_order),
        "permutation": report.permutation.one_line_letters(report.support)
        if report.permutation is not None
        else None,
        "perfect": report.is_perfect,
    }


def _write_json(path: str | None, payload: dict) -> None:
    if path is None:
        return
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _print_cluster_report(report: ClusteringReport, out) -> None:
    out.write(f"transform: {report.transform}\n")
    out.write(f"blocks: {' '.join(report.block_order)}\n")
    if report.is_clustering:
        perm = report.permutation.one_line_letters(report.support)
        out.write(f"clustering: yes (permutation {perm} on support {report.support})\n")
        out.write(f"perfect: {'yes' if report.is_perfect else 'no'}\n")
    else:
        out.write("clustering: no\n")
        out.write("perfect: no\n")


def _parse_source(text: str, alphabet_text: str | None, max_len: int):
    """Build a LanguageSample from 'periodic:w', 'multiset:w1,w2' or 'iet:file'.

    Returns (sample, entries, source_permutation): the word list for word
    sources, and the instance permutation for interval exchange sources.
    """
    if ":" not in text:
        raise ValueError(f"bad source {text!r}, expected periodic:..., multiset:... or iet:...")
    kind, _, body = text.partition(":")
    if kind == "periodic":
        alphabet = OrderedAlphabet(alphabet_text) if alphabet_text else OrderedAlphabet(sorted(set(body)))
        return sample_from_periodic(body, alphabet, max_len), [body], None
    if kind == "multiset":
        entries = [w for w in body.split(",") if w]
        if not entries:
            raise ValueError("empty multiset source")
        letters = sorted(set("".join(entries)))
        alphabet = OrderedAlphabet(alphabet_text) if alphabet_text else OrderedAlphabet(letters)
        return sample_from_multiset(entries, alphabet, max_len), entries, None
    if kind == "iet":
        iet = parse_iet_file(body)
        return sample_from_iet(iet, max_len, label=text), None, iet.permutation
    raise ValueError(f"unknown source kind {kind!r}")


def _orders_for(sample: LanguageSample, entries, source_pi, spec: str):
    """Resolve an order pair 'left:right'; each side is A, pi, or explicit letters."""
    left_text, _, right_text = spec.partition(":")
    if not right_text:
        raise ValueError(f"bad orders {spec!r}, expected e.g. pi:A")

    def resolve(token: str):
        if token == "A":
            return sample.alphabet.letters
        if token == "pi":
            if source_pi is not None:
                return order_from_permutation(source_pi, sample.alphabet)
            if entries is None:
                raise ValueError("the pi order needs a word source or an instance permutation")
            if len(entries) > 1:
                report = multiset_clustering_report(entries, sample.alphabet)
            else:
                report = clustering_report(entries[0], sample.alphabet)
            if not report.is_clustering or report.support != sample.alphabet:
                raise ValueError(
                    f"source is not clustering over {sample.alphabet}, cannot derive the pi order"
                )
            return order_from_permutation(report.permutation, sample.alphabet)
        return OrderedAlphabet(token).letters

    return resolve(left_text), resolve(right_text)


# -- subcommand handlers --------------------------------------------------------


def _cmd_bwt(args) -> int:
    alphabet = args.alphabet
    word = alphabet.require(args.word)
    transform = bwt(word, alphabet)
    print(f"transform: {transform}")
    report = clustering_report(word, alphabet)
    _write_json(args.json, _cluster_payload(word, report))
    return 0


def _cmd_ebwt(args) -> int:
    alphabet = args.alphabet
    transform = ebwt(args.words, alphabet)
    print(f"transform: {transform}")
    report = multiset_clustering_report(args.words, alphabet)
    _write_json(args.json, _cluster_payload(" ".join(args.words), report))
    return 0


def _cmd_ebwt_inverse(args) -> int:
    alphabet = args.alphabet
    words = inverse_ebwt(args.string, alphabet)
    print(f"words: {' '.join(words)}")
    _write_json(args.json, {"input": args.string, "words": list(words)})
    return 0


def _cmd_cluster(args) -> int:
    alphabet = args.alphabet
    word = alphabet.require(args.word)
    report = clustering_report(word, alphabet)
    print(f"input: {word}")
    _print_cluster_report(report, sys.stdout)
    _write_json(args.json, _cluster_payload(word, report))
    return 0


def _cmd_morphism_apply(args) -> int:
    images = {}
    for piece in args.spec.split(","):
        if ":" not in piece:
            raise ValueError(f"bad image {piece!r}, expected letter:word")
        letter, _, image = piece.partition(":")
        images[letter.strip()] = image.strip()
    source = OrderedAlphabet(args.alphabet) if args.alphabet else OrderedAlphabet(images.keys())
    target_letters = sorted(set("".join(images.values())) | set(source.letters))
    target = source if set(target_letters) == set(source.letters) else OrderedAlphabet(target_letters)
    morphism = Morphism(source, target, images)
    print(morphism(_word_arg(args.word)))
    return 0


def _cmd_diet(args) -> int:
    parts = [int(s) for s in args.composition.split(",") if s]
    letters = args.alphabet or "abcdefghijklmnopqrstuvwxyz"[: len(parts)]
    alphabet = OrderedAlphabet(letters)
    pi = Permutation.parse(args.pi, alphabet)
    diet = Diet(parts, pi)
    mu = diet_action(diet)
    print(f"composition: {','.join(map(str, parts))}")
    print(f"pi: {pi.one_line_letters(alphabet)}")
    print(f"shifts: {','.join(map(str, diet.shifts))}")
    print(f"action: {mu.cycle_string()}")
    if args.orbits:
        cycles = " ".join("(" + ",".join(str(i + 1) for i in cyc) + ")" for cyc in mu.cycles())
        print(f"orbits: {cycles}")
    if args.words:
        print(f"orbit words: {' '.join(orbit_words(diet, alphabet))}")
    if args.cylinder is not None:
        cells = diet_cylinder(diet, _word_arg(args.cylinder), alphabet)
        shown = "{" + ",".join(map(str, sorted(cells))) + "}"
        print(f"cylinder {args.cylinder or 'ε'}: {shown}")
    return 0


def _print_iet(iet: Iet, indent: str = "") -> None:
    lens = " ".join(f"{c}={iet.length(c).literal()}" for c in iet.alphabet)
    print(f"{indent}alphabet: {iet.alphabet}  pi: {iet.permutation.one_line_letters(iet.alphabet)}")
    print(f"{indent}lengths: {lens}")
    print(f"{indent}domain: [{iet.domain.left.literal()}, {iet.domain.right.literal()})")


def _cmd_iet_check(args) -> int:
    iet = parse_iet_file(args.file)
    _print_iet(iet)
    verdict = iet.check_keane(args.depth)
    if verdict.is_regular:
        print(f"keane: no connection up to depth {verdict.regular_to_depth}")
    else:
        c = verdict.failure
        kind = "0-connection" if c.is_zero_connection else "connection"
        print(f"keane: {kind} T^{c.n}({c.x.literal()}) = {c.y.literal()}")
    return 0


def _radicand_of(iet: Iet) -> int:
    for c in iet.alphabet:
        if iet.length(c).d:
            return iet.length(c).d
    return 0


def _cmd_iet_traj(args) -> int:
    iet = parse_iet_file(args.file)
    point = QuadNum.parse(args.point, _radicand_of(iet))
    print(iet.trajectory(point, args.steps))
    return 0


def _cmd_iet_language(args) -> int:
    iet = parse_iet_file(args.file)
    words = iet.language(args.max_len)
    by_len: dict[int, list[str]] = {}
    for w in words:
        by_len.setdefault(len(w), []).append(w)
    for k in sorted(by_len):
        row = sorted(by_len[k], key=iet.alphabet.key)
        label = " ".join(row) if k else "ε"
        print(f"length {k} ({len(row)}): {label}")
    return 0


def _describe_step(i: int, record, morphism) -> str:
    images = ", ".join(f"{c}:{morphism.images[c]}" for c in morphism.source if morphism.images[c] != c)
    return (
        f"step {i}: {record.kind} {record.case} pivot={record.pivot_letter} "
        f"partner={record.partner_letter} morphism {images or 'identity'}"
    )


def _cmd_iet_rauzy(args) -> int:
    iet = parse_iet_file(args.file)
    print("start:")
    _print_iet(iet, indent="  ")
    if args.steps == "auto":
        if args.word is None:
            raise ValueError("--steps auto needs --word")
        trace = induce_to_cylinder(iet, _word_arg(args.word), cap=DEFAULT_INDUCTION_CAP)
        for i, record in enumerate(trace.steps, start=1):
            print(_describe_step(i, record, step_morphism(record)))
            _print_iet(trace.states[i], indent="  ")
        return 0
    for i, letter in enumerate(args.steps, start=1):
        if letter == "r":
            iet, record = rauzy_right(iet)
        elif letter == "l":
            iet, record = rauzy_left(iet)
        else:
            raise ValueError(f"steps must be a word over 'r'/'l' or 'auto', got {args.steps!r}")
        print(_describe_step(i, record, step_morphism(record)))
        _print_iet(iet, indent="  ")
    return 0


def _cmd_iet_returns(args) -> int:
    iet = parse_iet_file(args.file)
    word = _word_arg(args.word)
    alphabet = iet.alphabet
    key = lambda u: (len(u), alphabet.key(u))
    induced = scanned = None
    if args.method in ("induction", "both"):
        trace = induce_to_cylinder(iet, word, cap=DEFAULT_INDUCTION_CAP)
        induced = frozenset(trace.theta(c) for c in trace.theta.source)
        if args.trace:
            steps = " ".join(r.kind for r in trace.steps)
            print(f"steps: {steps or '(none)'}")
            body = ", ".join(f"{c}:{trace.theta(c)}" for c in trace.theta.source)
            print(f"theta: {body}")
        print(f"induction returns: {' '.join(sorted(induced, key=key))}")
    if args.method in ("scan", "both"):
        scanned = iet.return_words_scan(word)
        print(f"scan returns: {' '.join(sorted(scanned, key=key))}")
    if args.method == "both":
        print(f"agreement: {'yes' if scanned == induced else 'NO'}")
        return 0 if scanned == induced else 1
    return 0


def _cmd_extgraph(args) -> int:
    sample, entries, source_pi = _parse_source(args.source, args.alphabet, args.depth)
    word = _word_arg(args.word)
    graph = extension_graph(sample, word)
    order1, order2 = _orders_for(sample, entries, source_pi, args.orders)
    print(f"source: {sample.source}")
    print(f"word: {word or 'ε'}")
    print(f"left ({' < '.join(order1)}): {' '.join(c for c in order1 if c in graph.left)}")
    print(f"right ({' < '.join(order2)}): {' '.join(c for c in order2 if c in graph.right)}")
    shown = sorted(graph.edges, key=lambda e: (order1.index(e[0]), order2.index(e[1])))
    print("edges: " + " ".join(f"({a},{b})" for a, b in shown))
    print(f"tree: {'yes' if is_tree(graph) else 'no'}")
    print(f"forest: {'yes' if is_forest(graph) else 'no'}")
    print(f"compatible: {'yes' if is_compatible(graph, order1, order2) else 'no'}")
    if args.layout:
        by_left: dict[str, list[str]] = {}
        for a, b in graph.edges:
            by_left.setdefault(a, []).append(b)
        print("layout:")
        for a in order1:
            if a not in graph.left:
                continue
            targets = " ".join(sorted(by_left.get(a, []), key=order2.index))
            print(f"  {a} | {targets}")
    return 0


def _cmd_classify(args) -> int:
    sample, entries, source_pi = _parse_source(args.source, args.alphabet, args.depth + 2)
    order1, order2 = _orders_for(sample, entries, source_pi, args.orders)
    report = classify(sample, order1, order2, args.depth)
    print(f"source: {sample.source}")
    print(f"checked words up to length {report.checked_up_to} (bounded-depth verdicts)")
    if entries is not None and len(entries) > 1:
        print("note: multiset classification is checked empirically at this depth only")
    for flag in ("dendric", "alsinic", "ordered_dendric", "ordered_alsinic"):
        value = getattr(report, flag)
        witness = report.witnesses.get(flag)
        extra = "" if value else f" (witness: {witness or 'ε'})"
        print(f"{flag}: {'yes' if value else 'no'}{extra}")
    return 0


def _cmd_verify(args) -> int:
    iet = parse_iet_file(args.file)
    try:
        report = verify_return_words(
            iet,
            args.max_len,
            keane_depth=args.keane_depth,
            cap=DEFAULT_INDUCTION_CAP,
            trace=args.trace,
        )
    except KeaneCheckFailed as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    fmt = "structured" if args.format == "json" else "text"
    payload = emit_report(report, fmt)
    if args.output and args.output != "-":
        with open(args.output, "wb") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ietkit",
        description="Exact interval exchanges, Rauzy induction, and clustering analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bwt", help="Burrows-Wheeler transform of a word")
    p.add_argument("--alphabet", required=True, type=_alphabet_arg)
    p.add_argument("--json", default=None, help="write a JSON record to this path ('-' for stdout)")
    p.add_argument("word")
    p.set_defaults(func=_cmd_bwt)

    p = sub.add_parser("ebwt", help="extended transform of a Lyndon multiset")
    p.add_argument("--alphabet", required=True, type=_alphabet_arg)
    p.add_argument("--json", default=None)
    p.add_argument("words", nargs="+")
    p.set_defaults(func=_cmd_ebwt)

    p = sub.add_parser("ebwt-inverse", help="invert the extended transform")
    p.add_argument("--alphabet", required=True, type=_alphabet_arg)
    p.add_argument("--json", default=None)
    p.add_argument("string")
    p.set_defaults(func=_cmd_ebwt_inverse)

    p = sub.add_parser("cluster", help="clustering analysis of a word")
    p.add_argument("--alphabet", required=True, type=_alphabet_arg)
    p.add_argument("--json", default=None)
    p.add_argument("word")
    p.set_defaults(func=_cmd_cluster)

    p = sub.add_parser("morphism", help="substitution morphisms")
    msub = p.add_subparsers(dest="subcommand", required=True)
    m = msub.add_parser("apply", help="apply a letter-to-word substitution")
    m.add_argument("--spec", required=True, help='images, e.g. "a:ab,b:b,c:c"')
    m.add_argument("--alphabet", default=None, help="source alphabet order (defaults to spec order)")
    m.add_argument("word")
    m.set_defaults(func=_cmd_morphism_apply)

    p = sub.add_parser("diet", help="discrete interval exchange")
    p.add_argument("--composition", required=True, help="comma-separated parts, e.g. 4,2,1")
    p.add_argument("--pi", required=True, help="one-line letters or cycles")
    p.add_argument("--alphabet", default=None)
    p.add_argument("--orbits", action="store_true")
    p.add_argument("--words", action="store_true")
    p.add_argument("--cylinder", default=None, metavar="WORD")
    p.set_defaults(func=_cmd_diet)

    p = sub.add_parser("iet", help="interval exchange from an instance file")
    isub = p.add_subparsers(dest="subcommand", required=True)

    c = isub.add_parser("check", help="validate and run the connection check")
    c.add_argument("file")
    c.add_argument("--depth", type=int, default=DEFAULT_KEANE_DEPTH)
    c.set_defaults(func=_cmd_iet_check)

    c = isub.add_parser("traj", help="orbit coding of a point")
    c.add_argument("file")
    c.add_argument("--point", required=True, help="number literal, e.g. (0) or (3, -1, 2)")
    c.add_argument("--steps", type=int, required=True)
    c.set_defaults(func=_cmd_iet_traj)

    c = isub.add_parser("language", help="factors up to a length bound")
    c.add_argument("file")
    c.add_argument("--max-len", type=int, required=True)
    c.set_defaults(func=_cmd_iet_language)

    c = isub.add_parser("rauzy", help="run induction steps")
    c.add_argument("file")
    c.add_argument("--steps", required=True, help="word over r/l, or 'auto' with --word")
    c.add_argument("--word", default=None)
    c.set_defaults(func=_cmd_iet_rauzy)

    c = isub.add_parser("returns", help="return words of a factor")
    c.add_argument("file")
    c.add_argument("--word", required=True)
    c.add_argument("--method", choices=("scan", "induction", "both"), default="both")
    c.add_argument("--trace", action="store_true")
    c.set_defaults(func=_cmd_iet_returns)

    p = sub.add_parser("extgraph", help="extension graph of a word in a sampled language")
    p.add_argument("--source", required=True, help="periodic:w, multiset:w1,w2 or iet:file")
    p.add_argument("--word", required=True)
    p.add_argument("--orders", default="A:A", help="left:right, each A, pi, or explicit letters")
    p.add_argument("--alphabet", default=None)
    p.add_argument("--depth", type=int, default=None, help="sample depth (default |word| + 2)")
    p.add_argument("--layout", action="store_true", help="print a two-column text layout")
    p.set_defaults(func=_cmd_extgraph)

    p = sub.add_parser("classify", help="dendric/alsinic classification of a sampled language")
    p.add_argument("--source", required=True)
    p.add_argument("--depth", type=int, required=True, help="check words up to this length")
    p.add_argument("--orders", default="A:A")
    p.add_argument("--alphabet", default=None)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="return-word clustering verification of an instance")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--keane-depth", type=int, default=DEFAULT_KEANE_DEPTH)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None, help="write the report to this path")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "extgraph" and args.depth is None:
        args.depth = len(_word_arg(args.word)) + 2
    try:
        return args.func(args)
    except (ValueError, InductionCapError, IncompleteScanError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
