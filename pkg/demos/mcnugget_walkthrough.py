"""Walk through omega(35) in the McNugget monoid <6, 9, 20>.

Run: python demos/mcnugget_walkthrough.py
"""

from omegaprimality import NumericalMonoid, bullet_bounds, omega, omega_oracle

M = NumericalMonoid([6, 9, 20])
print(f"{M!r}: Frobenius number {M.frobenius}")
print("members below 30:", M.members(0, 29))

n = 35
bounds = bullet_bounds(M, n)
print(f"\nA bullet for {n} never uses generator g_i more than b_i times, b = {bounds}:")
for g, b in zip(M.generators, bounds):
    print(f"  {b:2d} x {g:2d} - {n} = {b * g - n:3d} is a member; {b - 1} copies are not enough")

r = omega(M, n)
print(f"\n{len(r.bullets)} bullets (coefficients on 6, 9, 20):")
for a in sorted(r.bullets, key=sum, reverse=True):
    flag = "  <- maximal" if a in r.maximal_bullets else ""
    print(f"  {a}  length {sum(a):2d}  value {M.value(a)}{flag}")
print(f"\nomega({n}) = {r.omega}; the independent length-ordered scan gives {omega_oracle(M, n)}")

print("\nomega on the first few members:")
for m in M.members(1, 60):
    print(f"  omega({m}) = {omega(M, m).omega}")
