"""Classification invariants at desk scale.

Two computable invariants separate every toric reflection group in the
small-parameter grid: the number of conjugacy classes of reflections
(always k-1) and the multiset of maximal finite cyclic subgroup orders of
the center quotient ({k, n, m} when the triangle group is infinite).
"""

import math

from toricgroups.cli import main

print("single reports (same engine as the `toricgroups classify` command):\n")
for argv in (["classify", "3", "2", "3"], ["classify", "6", "2", "3"]):
    main(argv)
    print()

print("sweep over k <= 4, m <= 5 in JSON (machine-readable):")
main(["--format", "json", "sweep", "--max-k", "4", "--max-m", "5"])

print("\npairwise separation over the grid k <= 6, n < m <= 7:")
grid = [(k, n, m) for k in range(2, 7) for n in range(2, 7) for m in range(n + 1, 8)
        if math.gcd(n, m) == 1]
print(f"  {len(grid)} parameter triples; the acceptance suite checks the "
      "invariant tuples are pairwise distinct (see tests/test_acceptance.py).")
