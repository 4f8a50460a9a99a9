"""The closed-subbase topology on a spectrum and its point-set properties.

The hulls {h(a)} always form a closed subbase; finite unions give the base
and intersections give every closed set.  On a finite spectrum the closed
sets turn out to be exactly the up-closed subsets of the point poset, which
makes the separation properties easy to see by hand.
"""

from idealspaces import (
    closure_of,
    generate_topology,
    irreducible_closed_sets,
    is_connected,
    is_quasi_compact,
    is_sober,
    is_t0,
    is_t1,
    make_spectrum,
    parse_ring_expression,
)
from idealspaces.spectra import PointSet


def describe(expr, kind):
    R = parse_ring_expression(expr)
    spec = make_spectrum(R, kind)
    T = generate_topology(spec)
    print(f"\n{spec.label}: points {[p.name for p in spec.points]}")
    print(f"  |subbase|={len(T.subbase_masks)} |base|={len(T.base_masks)} "
          f"|closed|={len(T.closed_masks)} discrete={T.is_discrete}")
    for name, prop in (("t0", is_t0), ("t1", is_t1), ("sober", is_sober),
                       ("connected", is_connected), ("quasi-compact", is_quasi_compact)):
        print(f"  {name:<14}{prop(T).status}")
    irr = irreducible_closed_sets(T)
    pretty = [f"{ps} generic {[spec.points[i].name for i in gens]}"
              for ps, gens in irr]
    print(f"  irreducible closed sets: {pretty}")
    return T


# A two-point non-T1 space: the zero ideal's closure is everything.
T = describe("Z4", "prp")
spec = T.spectrum
o = spec.points[0]
print(f"  closure of {{{o.name}}} = {closure_of(T, PointSet(spec, 1 << spec.index[o]))}")

# A discrete two-point space.
describe("Z6", "max")

# An antichain of minimal ideals: discrete, so T1 holds even though no point
# is a maximal ideal -- the T1-iff-maximal statement needs the spectrum to
# contain the maximal ideals (see the findings section of the README).
describe("Z12", "min")

# A connected space carrying the zero ideal.
describe("Z12", "prp")
