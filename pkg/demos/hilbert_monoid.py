"""Factorizations and omega in the Hilbert monoid 1 + 4N.

Run: python demos/hilbert_monoid.py
"""

from omegaprimality import acm_factorizations, acm_is_irreducible, acm_omega, hilbert_monoid

H = hilbert_monoid()
print("irreducibles below 100:", [n for n in range(5, 100, 4) if acm_is_irreducible(H, n)])
print("441 =", " = ".join(" * ".join(map(str, f)) for f in acm_factorizations(H, 441)))

x = 1225
r = acm_omega(H, x)
print(f"\nomega({x}) = {r.omega}; all {len(r.bullets)} bullets:")
for b in r.bullets:
    print("  " + " * ".join(map(str, b)) + ("  <- maximal" if b in r.maximal_bullets else ""))
