"""
Christoffel words and their ternary images
==========================================

Builds a few binary Christoffel words, lifts them to three letters and looks
at how the abelian complexity behaves.
"""

from circwords import CircularWord
from circwords.abelian import complexity_profile, is_balanced
from circwords.christoffel import Slope, christoffel, palindrome_factor
from circwords.ternary import phi

# The lower Christoffel word of a slope has the form 0Q1 with Q a palindrome.
for zeros, ones in [(2, 3), (4, 3), (5, 2)]:
    w = christoffel(Slope(zeros, ones))
    print(f"C({zeros},{ones}) = {w}   Q = {palindrome_factor(w)}")

# An even number of zeros lets phi turn every second 0 into a 1 and each 1 into a 2.
w = phi(christoffel(Slope(4, 3)))
cw = CircularWord.of(w)
print("\nphi(C(4,3)) =", w)
print("balanced:", is_balanced(cw))
print("complexity by window length:", complexity_profile(cw))

# With an odd number of zeros the square is needed first.
w = phi(christoffel(Slope(3, 2), power=2))
print("\nphi(C(3,2)^2) =", w)
print("complexity by window length:", complexity_profile(CircularWord.of(w)))
