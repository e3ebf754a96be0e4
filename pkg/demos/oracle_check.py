"""
Brute force against construction
================================

Runs the exhaustive oracle up to a moderate length and compares it with the
constructive enumerations, one line per length.
"""

import sys

from circwords.oracle import verify_theorems

max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 12

report = verify_theorems(max_len)
for row in report.to_json()["perLength"]:
    print("L={length:>2}  necklaces={necklaces:>6}  balanced={balanced:>3}  "
          "3-bounded={bounded3:>4}  {seconds:.2f}s".format(**row))
print("agreement" if report.ok else f"{len(report.mismatches)} mismatches")

binary = verify_theorems(max_len, alphabet=2)
print("binary: balanced == Christoffel powers" if binary.ok else binary.mismatches)
