"""A tour of the Burrows-Wheeler transform and clustering words.

Run from the repository root after `pip install -e .`:

    python demos/clustering_transforms.py
"""

from ietkit import (
    OrderedAlphabet,
    bwt,
    clustering_report,
    ebwt,
    inverse_ebwt,
    multiset_clustering_report,
)

# The transform sorts all rotations of a word and reads their last letters.
english = OrderedAlphabet("abcdefghijklmnopqrstuvwxyz")
print("bwt(sphynx) =", bwt("sphynx", english))

# Whether identical letters end up adjacent depends on the alphabet ORDER,
# which is data here, not a convention baked into the characters.
print()
for letters in ("abn", "anb", "nab"):
    alphabet = OrderedAlphabet(letters)
    report = clustering_report("banana", alphabet)
    verdict = "perfectly clustering" if report.is_perfect else (
        "clustering" if report.is_clustering else "NOT clustering"
    )
    print(f"banana over {letters}: bwt = {report.transform:10s} {verdict}")

# The extended transform works on multisets of Lyndon words, sorting all
# rotations by the order of their infinite powers.  It is a bijection, so
# every string over the alphabet decodes to a unique Lyndon multiset.
print()
abc = OrderedAlphabet("abc")
multiset = ("aac", "ab", "ab")
transform = ebwt(multiset, abc)
print(f"ebwt{multiset} = {transform}")
print(f"inverse_ebwt({transform!r}) = {inverse_ebwt(transform, abc)}")

# Clustering does not lift from members to multisets: both of these words
# cluster on their own, their union does not.
print()
ab = OrderedAlphabet("ab")
pair = ("ab", "aab")
report = multiset_clustering_report(pair, ab)
print(f"ebwt{pair} = {report.transform}  clustering: {report.is_clustering}")
for w in pair:
    member = clustering_report(w, ab)
    print(f"  member {w}: bwt = {member.transform}  clustering: {member.is_clustering}")
