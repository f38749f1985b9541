"""
Walking the mutation graph with a stacked [B; C] matrix
=======================================================

Seeds carry three square integer matrices: the exchange matrix B, the
c-vector matrix C, and the dual g-vector matrix G.  Mutating at a vertex
rewrites B and C in place by the sign-split rule and recomputes G as the
inverse transpose of C, exactly, over the integers.
"""

from cluster_roots.presets import preset
from cluster_roots.quiver import from_arrows, initial_seed

b = from_arrows(preset("a2"))
seed = initial_seed(b)

print("initial seed (two vertices, one arrow 1 -> 2)")
print("  B =", seed.b.b)
print("  C =", seed.c)
print("  G =", seed.g)

# mutate at vertex 1: the arrow flips and the first c-column turns negative
seed = seed.mutate(1)
print("\nafter mutation at 1")
print("  B =", seed.b.b)
print("  C =", seed.c, " columns:", *seed.c_columns())
print("  G =", seed.g)

# every column keeps one sign throughout; check() also verifies that
# det(C) = +-1 and that transpose(G) C is the identity
seed.check()
print("  invariants hold: det(C) = +-1, duality, sign-coherence")

# mutation is an involution: repeating the vertex restores the seed
back = seed.mutate(1)
print("\nmutating at 1 again restores the initial matrices:",
      (back.b.b, back.c, back.g) == (b.b, initial_seed(b).c, initial_seed(b).g))

# the pentagon: for a single arrow the alternating word 1,2,1,2,1 returns
# to the starting seed up to swapping the two labels
print()
s = initial_seed(b)
for k in (1, 2, 1, 2, 1):
    s = s.mutate(k)
    cols = s.c_columns()
    print(f"after {list(s.word)}: C columns {cols[0]} {cols[1]}")
print("length-5 word lands on the label swap: columns are e2, e1:",
      s.c_columns() == ((0, 1), (1, 0)))

# the middle of the pentagon is the seed the worked examples use
s = initial_seed(b).mutate(1).mutate(2).mutate(1)
print("\nword [1, 2, 1]:")
print("  B =", s.b.b)
print("  C =", s.c, "(both columns negative: the all-minus chamber)")
