"""
Classifying ternary necklaces
=============================

Sorts every ternary necklace of one length into the constructive families
and checks the labels against a direct computation.
"""

from collections import Counter

from circwords.abelian import is_balanced, max_complexity
from circwords.oracle import enumerate_necklaces
from circwords.ternary import classify

LENGTH = 9

necklaces = sorted(enumerate_necklaces(3, LENGTH))
print(f"{len(necklaces)} ternary necklaces of length {LENGTH} use all three letters")

labels = Counter()
for cw in necklaces:
    result = classify(cw)
    labels[result.label.value] += 1
    # every label is constructive, so the word can be rebuilt from its witness
    if result.label.in_m3:
        assert result.regenerate() == cw
    assert result.label.balanced == is_balanced(cw)

for label, count in sorted(labels.items()):
    print(f"  {label:<18} {count}")

# A word outside the 3-bounded family, with its diagnostics.
worst = max(necklaces, key=max_complexity)
print("\nlargest complexity:", classify(worst).to_json())
