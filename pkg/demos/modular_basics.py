"""Arithmetic in Z_n: rings, units, automorphisms, affine maps."""

from cayleytones import (
    AffineMap,
    Automorphism,
    ModRing,
    compose,
    fixed_points,
    is_involution,
    units,
)

ring = ModRing(12)
print("ring:", ring)
print("9 + 8 =", ring.element(9) + 8)
print("-3 =", -ring.element(3))
print("units of Z_12:", units(ring))

# every unit h gives the automorphism x -> h*x
for h in units(ring):
    f = Automorphism(ring, h)
    print(f"{f}: 0..11 ->", [f(x) for x in range(12)])

T = AffineMap(ring, 5, 2)
print("T =", T)
print("T is an involution:", is_involution(T))
print("T fixes:", sorted(fixed_points(T)))

# composing T with itself lands on the identity
print("T o T =", compose(T, T))

# mod 15 the negation-like map 14x+1 keeps one note in place
ring15 = ModRing(15)
S = AffineMap(ring15, 14, 1)
print("S =", S, "fixes", sorted(fixed_points(S)))
