import itertools

import pytest

from ietkit import (
    OrderedAlphabet,
    Permutation,
    bwt,
    clustering_report,
    conjugates,
    ebwt,
    inverse_ebwt,
    is_lyndon,
    is_primitive,
    multiset_clustering_report,
    parikh,
)

AB = OrderedAlphabet("ab")
ABC = OrderedAlphabet("abc")
ENGLISH = OrderedAlphabet("abcdefghijklmnopqrstuvwxyz")


def all_words(alphabet, max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet.letters, repeat=n):
            yield "".join(tup)


def lyndon_words(alphabet, max_len):
    return [w for w in all_words(alphabet, max_len) if is_lyndon(w, alphabet)]


class TestBwt:
    def test_sphynx(self):
        assert bwt("sphynx", ENGLISH) == "pysxnh"

    @pytest.mark.parametrize(
        "letters, expected",
        [("abn", "nnbaaa"), ("anb", "bnnaaa"), ("nab", "aabnna")],
    )
    def test_banana_three_orders(self, letters, expected):
        assert bwt("banana", OrderedAlphabet(letters)) == expected

    def test_single_letter_power(self):
        assert bwt("aaa", ABC) == "aaa"

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            bwt("", AB)

    def test_parikh_preserved(self):
        for w in all_words(AB, 6):
            assert parikh(bwt(w, AB), AB) == parikh(w, AB)

    def test_conjugacy_invariance_and_converse(self):
        # Same transform exactly for conjugates, different transform otherwise.
        for alphabet in (AB, ABC):
            for n in range(1, 7):
                by_bwt = {}
                by_class = {}
                for tup in itertools.product(alphabet.letters, repeat=n):
                    w = "".join(tup)
                    canon = min(conjugates(w), key=alphabet.key)
                    by_bwt.setdefault(bwt(w, alphabet), set()).add(canon)
                    by_class.setdefault(canon, set()).add(bwt(w, alphabet))
                assert all(len(v) == 1 for v in by_bwt.values())
                assert all(len(v) == 1 for v in by_class.values())

    def test_power_structure(self):
        # bwt(u^p) interleaves each transform letter p times.
        for u in all_words(AB, 4):
            if not is_primitive(u):
                continue
            base = bwt(u, AB)
            for p in (2, 3):
                assert bwt(u * p, AB) == "".join(c * p for c in base)


class TestEbwt:
    def test_three_word_multiset(self):
        assert ebwt(["aac", "ab", "ab"], ABC) == "cbbaaaa"

    def test_pair_multiset(self):
        assert ebwt(["ab", "aab"], AB) == "babaa"

    def test_singleton(self):
        assert ebwt(["a"], AB) == "a"

    def test_rejects_non_lyndon(self):
        with pytest.raises(ValueError):
            ebwt(["ba"], AB)
        with pytest.raises(ValueError):
            ebwt(["abab"], AB)

    def test_single_word_matches_bwt(self):
        for w in lyndon_words(AB, 6):
            assert ebwt([w], AB) == bwt(w, AB)


class TestInverseEbwt:
    def test_known_multisets(self):
        assert inverse_ebwt("cbbaaaa", ABC) == ("aac", "ab", "ab")
        assert inverse_ebwt("babaa", AB) == ("aab", "ab")
        assert inverse_ebwt("a", AB) == ("a",)

    def test_total_on_all_strings(self):
        # Round trip ebwt(inverse(s)) == s for every string of length <= 7.
        for s in all_words(AB, 7):
            entries = inverse_ebwt(s, AB)
            assert all(is_lyndon(w, AB) for w in entries)
            assert ebwt(entries, AB) == s

    def test_round_trip_from_multisets(self):
        # inverse(ebwt(W)) == W for every Lyndon multiset of total length <= 8.
        pool = lyndon_words(AB, 8)

        def multisets(start, budget):
            yield ()
            for i in range(start, len(pool)):
                w = pool[i]
                if len(w) <= budget:
                    for rest in multisets(i, budget - len(w)):
                        yield (w,) + rest

        count = 0
        for entries in multisets(0, 8):
            if not entries:
                continue
            ordered = tuple(sorted(entries, key=AB.key))
            assert inverse_ebwt(ebwt(ordered, AB), AB) == ordered
            count += 1
        assert count > 100


class TestClusteringReport:
    def test_banana_perfect(self):
        report = clustering_report("banana", OrderedAlphabet("abn"))
        assert report.is_clustering
        assert report.block_order == ("n", "b", "a")
        assert report.is_perfect

    def test_banana_not_clustering(self):
        report = clustering_report("banana", OrderedAlphabet("nab"))
        assert not report.is_clustering
        assert report.permutation is None
        assert not report.is_perfect

    def test_bac(self):
        report = clustering_report("bac", ABC)
        assert report.is_clustering
        assert report.block_order == ("b", "c", "a")
        assert not report.is_perfect

    def test_support_only(self):
        # Letters absent from the word get no block and no permutation image.
        report = clustering_report("aba", ABC)
        assert report.support.letters == ("a", "b")
        assert report.is_clustering

    def test_block_lengths_match_counts(self):
        for w in all_words(ABC, 5):
            report = clustering_report(w, ABC)
            if report.is_clustering:
                counts = parikh(w, ABC)
                sizes = {c: report.transform.count(c) for c in report.support}
                assert all(sizes[c] == counts[c] for c in report.support)

    def test_clustering_primitivity(self):
        # A power clusters exactly like its primitive root.
        for u in all_words(AB, 4):
            if not is_primitive(u):
                continue
            base = clustering_report(u, AB)
            for p in (2, 3):
                rep = clustering_report(u * p, AB)
                assert rep.is_clustering == base.is_clustering
                assert rep.permutation == base.permutation


class TestMultisetClustering:
    def test_clustering_multiset(self):
        report = multiset_clustering_report(["aac", "ab", "ab"], ABC)
        assert report.is_clustering
        assert report.block_order == ("c", "b", "a")
        assert report.is_perfect

    def test_non_clustering_multiset(self):
        report = multiset_clustering_report(["ab", "aab"], AB)
        assert not report.is_clustering
        assert report.transform == "babaa"

    def test_trivial(self):
        assert multiset_clustering_report(["a"], AB).is_clustering

    def test_members_cluster_but_multiset_does_not(self):
        # Regression witness: both members cluster with the swap, the pair does not.
        swap = Permutation.symmetric(2)
        for w in ("ab", "aab"):
            rep = clustering_report(w, AB)
            assert rep.is_clustering and rep.permutation == swap
        assert not multiset_clustering_report(["ab", "aab"], AB).is_clustering
