"""Strong disconnection and idempotent extraction.

If two nonempty disjoint subbasic closed sets cover a spectrum that contains
all maximal ideals of a ring with zero Jacobson radical, the ring must have a
nontrivial idempotent; the construction below finds it as the component of 1
in the disconnecting ideal pair.  The product ring shows the converse fails.
"""

from idealspaces import (
    extract_idempotent,
    generate_ideal,
    generate_topology,
    hull,
    make_spectrum,
    parse_ring_expression,
    strongly_disconnects,
)
from idealspaces.spectra import PointSet

# Max(Z6) splits into h(<2>) and h(<3>).
Z6 = parse_ring_expression("Z6")
T = generate_topology(make_spectrum(Z6, "max"))
sd = strongly_disconnects(T, "subbase")
print(f"Max(Z6) strongly disconnected: {sd.status}")
print(f"  pair h({sd.witness['a']['ideal']}), h({sd.witness['b']['ideal']})")

a = generate_ideal(Z6, [2])
b = generate_ideal(Z6, [3])
e = extract_idempotent(T, (a, b))
print(f"  idempotent e = {Z6.name(e)}:  e*e = {Z6.name(Z6.mul[e, e])}, "
      f"e + (1-e) = {Z6.name(Z6.add[e, Z6.sub(Z6.one, e)])}")

# Z6 x Z6 has fourteen nontrivial idempotents, yet its proper spectrum is
# connected (it contains the zero ideal), so nothing strongly disconnects it.
# The canonical coordinate pair misses e.g. the ideal generated by (2,2).
P = parse_ring_expression("Z6xZ6")
spec = make_spectrum(P, "prp")
Tp = generate_topology(spec)
ca = generate_ideal(P, [1])   # (1,0)
cb = generate_ideal(P, [6])   # (0,1)
ha, hb = hull(spec, ca), hull(spec, cb)
uncovered = PointSet(spec, spec.full_mask & ~(ha.mask | hb.mask))
print(f"\nPrp(Z6xZ6): h({ca.name}) and h({cb.name}) are disjoint "
      f"({(ha.mask & hb.mask) == 0}) but miss {len(uncovered)} points,")
print(f"  for instance {uncovered.ideals[-1].name}")
print(f"  strongly disconnected by the subbase: "
      f"{strongly_disconnects(Tp, 'subbase').status}")
