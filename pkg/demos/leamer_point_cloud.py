"""Point cloud of the Leamer monoid with step 4 over <13, 17, 22, 40>.

Writes (n, k, irreducible) for the box n <= 100, k <= 12 and prints a text
picture (# irreducible, . reducible member). Run: python demos/leamer_point_cloud.py [out.csv]
"""

import sys

from omegaprimality import NumericalMonoid, leamer_irreducibles, leamer_new, leamer_omega, points_csv

L = leamer_new(NumericalMonoid([13, 17, 22, 40]), 4, (100, 12))
# the box does not reach past twice the Frobenius number, so skip that guard
atoms = set(leamer_irreducibles(L, require_dense=False))
grid = L.grid()

for k in range(L.box[1], 0, -1):
    row = "".join("#" if (n, k) in atoms else "." if grid[n, k] else " " for n in range(L.box[0] + 1))
    print(f"{k:2d} {row}")
print(f"{len(atoms)} irreducibles; tallest columns stop at n = {max(n for n, k in atoms if k > 1)}")

for x in [(13, 1), (26, 2)]:
    r = leamer_omega(L, x, require_dense=False)
    print(f"omega{x} >= {r.omega} using in-box irreducibles")

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(points_csv(L, require_dense=False))
