"""
Aperiodic words with abelian complexity three
=============================================

Feeds a Fibonacci bit stream through a two-block substitution and measures
the number of distinct Parikh vectors per window length.
"""

import numpy as np

from circwords.infinite import BitSource, expand, morphism_images, window_profile

for m, n in [(2, 1), (4, 3)]:
    spec = morphism_images(m, n)
    print(f"m={m} n={n}: 0 -> {spec.image0}, 1 -> {spec.image1}")
    segment = expand(BitSource("fibonacci"), spec, -2000, 3000)
    profile = np.array(window_profile(segment, 100))
    print("  windows 1..100, distinct Parikh vectors:", np.unique(profile))

# a periodic driver gives the same bound, but it is not aperiodic
seg = expand(BitSource.parse("bits:01"), morphism_images(2, 1), 0, 1000)
print("periodic driver:", np.unique(window_profile(seg, 50)))
