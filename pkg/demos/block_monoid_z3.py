"""omega in the block monoid over Z/3.

Run: python demos/block_monoid_z3.py
"""

from omegaprimality import FiniteAbelianGroup, block_omega, minimal_zero_sum_sequences

G = FiniteAbelianGroup([3])
g, ng, zero = (1,), (2,), (0,)
print("irreducible blocks:", ", ".join(str(u) for u in minimal_zero_sum_sequences(G)))

for name, ms in [("0", {zero: 1}), ("g^3", {g: 3}), ("g(-g)", {g: 1, ng: 1}),
                 ("g^3(-g)^3", {g: 3, ng: 3}), ("0 g(-g)", {zero: 1, g: 1, ng: 1})]:
    r = block_omega(G, G.block(ms))
    best = " * ".join(f"[{u}]" for u in r.maximal_bullets[0])
    print(f"omega({name}) = {r.omega}  via {best}")

print("\nlonger atoms over other groups have omega equal to their length:")
for inv in ([4], [2, 2], [5]):
    H = FiniteAbelianGroup(inv)
    u = max(minimal_zero_sum_sequences(H))
    print(f"  Z{'xZ'.join(map(str, inv))}: [{u}] length {u.length}, omega {block_omega(H, u).omega}")
