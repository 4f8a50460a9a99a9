"""The closed-subbase topology on a spectrum and its point-set properties.

The distinct hulls {h(a) : a in Idl(R)} form a closed subbase; finite unions
give the closed base, and intersections of base sets give the full closed
family.  Closed sets are bitmasks over spectrum points.  Family generation is
a two-stage fixpoint (union closure, then intersection closure) with hard
caps; exceeding a cap raises instead of approximating.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

from .caps import DEFAULT_CAPS
from .errors import CapExceeded, HypothesisViolated, MixedRings, NoPartitionFound
from .ideals import enumerate_ideals, jacobson_radical, witness_order
from .reports import FAILS, HOLDS, VerdictReport, w_ideal, w_point_set
from .spectra import PointSet, hull_mask


@dataclass
class _Family:
    """Shared closed-set data for one point set (masks only)."""

    full: int
    subbase: tuple            # sorted distinct hull masks
    kernel_ideal: dict        # subbase mask -> canonical (largest) ideal with that hull
    base: tuple               # union closure of the subbase
    base_decomp: dict         # base mask -> tuple of subbase masks whose union it is
    closed: tuple             # intersection closure of the base
    closed_set: frozenset
    _irreducibles: list | None = field(default=None, repr=False)
    _singleton_closures: dict | None = field(default=None, repr=False)


def _union_closure(seeds, cap):
    out = set(seeds)
    decomp = {m: (m,) for m in out}
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            u = x | y
            if u not in out:
                if len(out) >= cap:
                    raise CapExceeded(f"closed base exceeds cap {cap}")
                out.add(u)
                decomp[u] = tuple(sorted(set(decomp[x]) | set(decomp[y])))
                frontier.append(u)
    return out, decomp


def _intersection_closure(seeds, cap):
    out = set(seeds)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            u = x & y
            if u not in out:
                if len(out) >= cap:
                    raise CapExceeded(f"closed family exceeds cap {cap}")
                out.add(u)
                frontier.append(u)
    return out


class TopologySpace:
    """A spectrum with its subbase, base, and full closed family."""

    def __init__(self, spectrum, family, caps):
        self.spectrum = spectrum
        self._family = family
        self.caps = caps

    @property
    def ring(self):
        return self.spectrum.ring

    @property
    def full_mask(self):
        return self._family.full

    @property
    def subbase(self):
        return tuple(PointSet(self.spectrum, m) for m in self._family.subbase)

    @property
    def base(self):
        return tuple(PointSet(self.spectrum, m) for m in self._family.base)

    @property
    def closed_family(self):
        return tuple(PointSet(self.spectrum, m) for m in self._family.closed)

    @property
    def subbase_masks(self):
        return self._family.subbase

    @property
    def base_masks(self):
        return self._family.base

    @property
    def closed_masks(self):
        return self._family.closed

    def is_closed(self, mask):
        return mask in self._family.closed_set

    def kernel_ideal_of(self, mask):
        """Canonical ideal whose hull is the given subbase mask."""
        return self._family.kernel_ideal[mask]

    @property
    def is_discrete(self):
        return len(self._family.closed) == 1 << len(self.spectrum)

    def __repr__(self):
        f = self._family
        return (f"TopologySpace({self.spectrum.label}: |subbase|={len(f.subbase)}, "
                f"|base|={len(f.base)}, |closed|={len(f.closed)})")


_family_cache = weakref.WeakKeyDictionary()


def generate_topology(spec, caps=DEFAULT_CAPS):
    if len(spec) > caps.max_points:
        raise CapExceeded(f"{len(spec)} points exceed cap {caps.max_points}")
    per_ring = _family_cache.setdefault(spec.ring, {})
    key = tuple(p.members for p in spec.points)
    fam = per_ring.get(key)
    if fam is not None and len(fam.closed) > caps.max_closed_sets:
        raise CapExceeded(
            f"closed family of {len(fam.closed)} sets exceeds cap {caps.max_closed_sets}")
    if fam is None:
        lat = enumerate_ideals(spec.ring, caps)
        kernel_ideal = {}
        for a in lat.ideals:  # ascending, so the largest ideal per hull wins
            kernel_ideal[hull_mask(spec, a)] = a
        subbase = tuple(sorted(kernel_ideal))
        base_set, decomp = _union_closure(subbase, caps.max_closed_sets)
        closed_set = _intersection_closure(base_set | {spec.full_mask},
                                           caps.max_closed_sets)
        fam = _Family(
            full=spec.full_mask,
            subbase=subbase,
            kernel_ideal=kernel_ideal,
            base=tuple(sorted(base_set)),
            base_decomp=decomp,
            closed=tuple(sorted(closed_set)),
            closed_set=frozenset(closed_set),
        )
        per_ring[key] = fam
    return TopologySpace(spec, fam, caps)


def closure_of(T, S):
    """Smallest closed set containing S (the family is intersection-closed)."""
    mask = S.mask if isinstance(S, PointSet) else int(S)
    acc = T.full_mask
    for c in T.closed_masks:
        if mask & ~c == 0:
            acc &= c
    return PointSet(T.spectrum, acc)


def _singleton_closures(T):
    fam = T._family
    if fam._singleton_closures is None:
        fam._singleton_closures = {
            i: closure_of(T, 1 << i).mask for i in range(len(T.spectrum))}
    return fam._singleton_closures


# ---------------------------------------------------------------------------
# separation and connectedness verdicts


def is_t0(T):
    """Distinct points must have distinct closures."""
    cls = _singleton_closures(T)
    n = len(T.spectrum)
    for i in range(n):
        for j in range(i + 1, n):
            if cls[i] == cls[j]:
                pi, pj = T.spectrum.points[i], T.spectrum.points[j]
                return VerdictReport("t0", FAILS, witness={
                    "p": w_ideal(pi), "q": w_ideal(pj),
                    "closure": w_point_set(PointSet(T.spectrum, cls[i]))})
    return VerdictReport("t0", HOLDS, notes=f"{n} point closures pairwise distinct")


def is_t1(T):
    """Every singleton must be closed."""
    cls = _singleton_closures(T)
    for i in witness_point_indices(T):
        if cls[i] != 1 << i:
            p = T.spectrum.points[i]
            return VerdictReport("t1", FAILS, witness={
                "point": w_ideal(p),
                "closure": w_point_set(PointSet(T.spectrum, cls[i]))},
                notes=f"{{{p.name}}} is not closed")
    return VerdictReport("t1", HOLDS)


def witness_point_indices(T):
    """Point indices in canonical witness order (largest ideals first)."""
    pts = T.spectrum.points
    return sorted(range(len(pts)),
                  key=lambda i: (-len(pts[i].members), tuple(sorted(pts[i].members))))


def irreducible_closed_sets(T):
    """All nonempty irreducible closed sets with their generic points.

    A closed set is irreducible when it is not the union of two strictly
    smaller closed sets; the generic-point shortcut (closure of a point is
    always irreducible) is tried before the pairwise test.
    """
    fam = T._family
    if fam._irreducibles is not None:
        return [(PointSet(T.spectrum, m), gens) for m, gens in fam._irreducibles]
    cls = _singleton_closures(T)
    point_closures = set(cls.values())
    out = []
    for c in T.closed_masks:
        if c == 0:
            continue
        if c in point_closures:
            irreducible = True
        else:
            # c = a u b with closed a, b both strictly smaller iff some proper
            # closed subset a leaves a remainder whose closure is still proper
            irreducible = True
            for a in T.closed_masks:
                if a & ~c == 0 and a != c and a != 0:
                    if closure_of(T, c & ~a).mask != c:
                        irreducible = False
                        break
        if irreducible:
            gens = tuple(i for i in range(len(T.spectrum))
                         if c >> i & 1 and cls[i] == c)
            out.append((c, gens))
    out.sort(key=lambda t: (bin(t[0]).count("1"), t[0]))
    fam._irreducibles = out
    return [(PointSet(T.spectrum, m), gens) for m, gens in out]


def is_sober(T):
    """Every nonempty irreducible closed set has exactly one generic point."""
    for ps, gens in irreducible_closed_sets(T):
        if len(gens) != 1:
            return VerdictReport("sober", FAILS, witness={
                "set": w_point_set(ps),
                "generic_points": [T.spectrum.points[i].name for i in gens]},
                notes=f"irreducible closed set with {len(gens)} generic points")
    return VerdictReport("sober", HOLDS,
                         notes=f"{len(irreducible_closed_sets(T))} irreducible closed sets")


def is_connected(T):
    """No partition of the space into two nonempty closed sets."""
    full = T.full_mask
    for a in T.closed_masks:
        comp = full & ~a
        if a and comp and T.is_closed(comp):
            return VerdictReport("connected", FAILS, witness={
                "A": w_point_set(PointSet(T.spectrum, a)),
                "B": w_point_set(PointSet(T.spectrum, comp))},
                notes="clopen partition found")
    return VerdictReport("connected", HOLDS)


def is_quasi_compact(T):
    """Trivially holds on finite spaces; the note records the subbase pathway."""
    pou = _has_pou(T)
    note = "finite space, so quasi-compact outright; "
    note += ("partition-of-unity holds, so the Alexander-subbase argument applies"
             if pou else "partition-of-unity fails here, so only finiteness applies")
    return VerdictReport("quasi_compact", HOLDS, notes=note)


def _has_pou(T):
    from .spectra import has_partition_of_unity
    return has_partition_of_unity(T.spectrum)


def strongly_disconnects(T, family="subbase"):
    """Two nonempty disjoint members of the chosen family covering the space.

    Witness pairs are reported with the canonical kernel ideals behind the
    sets; the pair is ordered by the canonical witness order on those ideals.
    """
    if family not in ("subbase", "base"):
        raise ValueError("family must be 'subbase' or 'base'")
    masks = T.subbase_masks if family == "subbase" else T.base_masks
    full = T.full_mask
    if family == "subbase":
        order = witness_order([T.kernel_ideal_of(m) for m in masks if m])
        ordered = [(hull_mask(T.spectrum, a), a) for a in order]
    else:
        ordered = [(m, None) for m in sorted(masks, key=lambda m: (-bin(m).count("1"), m))
                   if m]
    for i, (a_mask, a_ideal) in enumerate(ordered):
        for b_mask, b_ideal in ordered[i:]:
            if a_mask and b_mask and a_mask & b_mask == 0 and a_mask | b_mask == full:
                witness = {"A": w_point_set(PointSet(T.spectrum, a_mask)),
                           "B": w_point_set(PointSet(T.spectrum, b_mask))}
                if a_ideal is not None:
                    witness["a"] = w_ideal(a_ideal)
                    witness["b"] = w_ideal(b_ideal)
                return VerdictReport("strongly_disconnects", HOLDS, witness=witness,
                                     notes=f"{family} pair covers the space disjointly")
    return VerdictReport(
        "strongly_disconnects", FAILS,
        witness={"family": family, "members": len(masks)},
        notes=f"no disjoint covering pair in the {family}")


def extract_idempotent(T, pair):
    """Nontrivial idempotent from a disjoint covering hull pair (a, b).

    Requires zero Jacobson radical, a spectrum containing all maximal ideals,
    and hulls of a and b that are nonempty, disjoint, and covering; then the
    unique decomposition 1 = e + f with e in a, f in b yields the idempotent.
    """
    a, b = pair
    R = T.ring
    spec = T.spectrum
    if a.ring is not R or b.ring is not R:
        raise MixedRings("pair must be ideals of the space's ring")
    if len(jacobson_radical(R).members) != 1:
        raise HypothesisViolated("ring does not have zero Jacobson radical")
    lat = enumerate_ideals(R)
    for m in lat.maximal_ideals():
        if not spec.contains_ideal(m):
            raise HypothesisViolated(
                f"spectrum {spec.label} misses the maximal ideal {m.name}")
    ha, hb = hull_mask(spec, a), hull_mask(spec, b)
    if not ha or not hb:
        raise HypothesisViolated("both hulls must be nonempty")
    if ha & hb:
        raise HypothesisViolated("hulls are not disjoint")
    if ha | hb != spec.full_mask:
        raise HypothesisViolated("hulls do not cover the spectrum")
    for x in sorted(a.members):
        for y in sorted(b.members):
            if R.add[x, y] == R.one:
                if R.mul[x, y] != R.zero or R.mul[x, x] != x:
                    raise HypothesisViolated(
                        "decomposition of 1 is not orthogonal idempotent")
                if x in (R.zero, R.one):
                    raise HypothesisViolated("extracted idempotent is trivial")
                return x
    raise NoPartitionFound(f"{a.name} + {b.name} != R")
