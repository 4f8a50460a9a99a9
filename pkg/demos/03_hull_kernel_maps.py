"""Hull and kernel maps, and where the hull-kernel closure breaks.

h(a) collects the spectrum points containing a; k(S) intersects a set of
points.  The composite hk is a Kuratowski closure operation exactly when the
meet-inclusion property holds: a ∩ b ⊆ s forces a ⊆ s or b ⊆ s for kernels
a, b and points s.  Two classic failures are reproduced below.
"""

from idealspaces import (
    PointSet,
    check_mip,
    generate_ideal,
    hull,
    image_of_kernel,
    kernel,
    make_spectrum,
    parse_ring_expression,
    x_radical,
)

Z12 = parse_ring_expression("Z12")
spc = make_spectrum(Z12, "spc")
four = generate_ideal(Z12, [4])
print(f"Spc(Z12) points: {[p.name for p in spc.points]}")
print(f"h({four.name}) = {hull(spc, four)}")
print(f"k(all points) = {kernel(PointSet(spc, spc.full_mask)).name}")
print(f"k(∅) = {kernel(PointSet(spc, 0)).name}   (the improper ideal)")
print(f"kernel image: {[a.name for a in image_of_kernel(spc)]}")

# The generalized radical kh(a) depends on the spectrum: against the primes
# it collapses <4> to <2>; against all proper ideals <4> is already fixed.
prp = make_spectrum(Z12, "prp")
print(f"\n√[Spc]{four.name} = {x_radical(spc, four).name}, "
      f"√[Prp]{four.name} = {x_radical(prp, four).name}")

# Failure 1: the three minimal ideals of Z2 x Z2 x Z2.  The meet of two
# atoms is o, which sits inside the third atom that contains neither.
mins = make_spectrum(parse_ring_expression("Z2xZ2xZ2"), "min")
rep = check_mip(mins)
w = rep.witness
print(f"\nMin(Z2xZ2xZ2): meet inclusion {rep.status} with "
      f"a={w['a']['ideal']}, b={w['b']['ideal']}, s={w['s']['ideal']}")

# Failure 2: proper ideals of Z36 (finite stand-in for the integers, where
# 2Z ∩ 3Z = 6Z ⊆ 6Z but neither factor lands inside).
prp36 = make_spectrum(parse_ring_expression("Z36"), "prp")
rep = check_mip(prp36)
w = rep.witness
print(f"Prp(Z36):      meet inclusion {rep.status} with "
      f"a={w['a']['ideal']}, b={w['b']['ideal']}, s={w['s']['ideal']}")

# The strongly irreducible spectrum satisfies the property by definition.
for expr in ("Z12", "Z36", "Z2xZ2xZ2"):
    R = parse_ring_expression(expr)
    print(f"Irs({R.label}): meet inclusion "
          f"{check_mip(make_spectrum(R, 'irs')).status}")
