"""
Euler forms, reflections, and positive real roots
=================================================

An acyclic quiver gives the integer lattice Z^n two bilinear forms: the
(non-symmetric) Euler form and its symmetrization.  The Tits form q is
the associated quadratic form; real roots are the vectors with q = 1.
The simple reflections act on the lattice, and positive real roots are
exactly the orbit of the unit vectors that stays nonnegative.
"""

from cluster_roots.presets import preset
from cluster_roots.quiver import from_arrows
from cluster_roots.roots import forms_of

# ---------------------------------------------------------------------
# the Kronecker quiver: two arrows from vertex 1 to vertex 2

kron = forms_of(from_arrows(preset("kronecker")))
print("Kronecker quiver, two arrows 1 -> 2")
print("  euler((1,0),(0,1)) =", kron.euler((1, 0), (0, 1)))
print("  euler((0,1),(1,0)) =", kron.euler((0, 1), (1, 0)), "(not symmetric)")
print("  q(1,0) =", kron.q((1, 0)))
print("  q(1,1) =", kron.q((1, 1)), " <- isotropic, so (1,1) is not a real root")
print("  q(2,1) =", kron.q((2, 1)))

# reflecting at a vertex is an involution
v = (3, 2)
r = kron.reflect(v, 1)
print(f"  reflect {v} at vertex 1 -> {r}, and back -> {kron.reflect(r, 1)}")

# positive real roots by height: the (m+1, m) and (m, m+1) ladder
roots = sorted(kron.enumerate_positive_real_roots(5))
print("  positive real roots with coordinate sum <= 5:", roots)

# membership is decided without enumeration by reflecting downhill:
for d in ((3, 2), (1, 1), (3, 1)):
    print(f"  is_positive_real_root{d} =", kron.is_positive_real_root(d))

# ---------------------------------------------------------------------
# Dynkin quivers have finitely many positive roots: n(n+1)/2 in type A

for name, expected in (("a2", 3), ("a3", 6), ("a4", 10), ("d4", 12)):
    forms = forms_of(from_arrows(preset(name)))
    found = forms.enumerate_positive_real_roots(10)
    print(f"{name}: {len(found)} positive roots (expected {expected})")

# in type A the roots are the interval vectors: consecutive runs of ones
a3 = forms_of(from_arrows(preset("a3")))
print("a3 roots:", sorted(a3.enumerate_positive_real_roots(10)))

# ---------------------------------------------------------------------
# the two membership tests agree on every small vector

import itertools

quiver = from_arrows(preset("a3"))
forms = forms_of(quiver)
enumerated = forms.enumerate_positive_real_roots(6)
agree = all(
    forms.is_positive_real_root(d) == (d in enumerated)
    for d in itertools.product(range(7), repeat=3)
    if 0 < sum(d) <= 6
)
print("descent test matches orbit enumeration on all vectors with sum <= 6:",
      agree)
