"""Spectra of ideals and the hull / kernel machinery.

A spectrum is the set of ideals of one classification kind, never including
the whole ring.  Point sets are bitmasks over the canonical point order, so
hulls, kernels, and the closure fixpoints downstream are cheap integer work.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import cached_property, reduce

from .caps import DEFAULT_CAPS
from .errors import MixedRings
from .ideals import (
    SpectrumKind,
    classify,
    contraction,
    enumerate_ideals,
    witness_order,
)
from .reports import FAILS, HOLDS, VACUOUS, VerdictReport, w_ideal
from .rings import Ideal, RingHom, unit_ideal


class Spectrum:
    """Ideals of one kind, in canonical order, with R excluded."""

    def __init__(self, ring, kind, points):
        self.ring = ring
        self.kind = SpectrumKind(kind)
        self.points = tuple(points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.label = f"{self.kind.title}({ring.label})"

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Spectrum({self.label}, {len(self)} points)"

    @cached_property
    def full_mask(self):
        return (1 << len(self.points)) - 1

    def contains_ideal(self, a):
        return a in self.index


_spectrum_cache = weakref.WeakKeyDictionary()


def make_spectrum(R, kind, caps=DEFAULT_CAPS):
    kind = SpectrumKind(kind)
    per_ring = _spectrum_cache.setdefault(R, {})
    if kind in per_ring:
        return per_ring[kind]
    lat = enumerate_ideals(R, caps)
    points = [a for a in lat.ideals if a.proper and classify(a, kind, caps)]
    spec = Spectrum(R, kind, points)
    per_ring[kind] = spec
    return spec


@dataclass(frozen=True)
class PointSet:
    """A subset of a spectrum's points, stored as a bitmask."""

    spectrum: Spectrum
    mask: int

    @cached_property
    def indices(self):
        return tuple(i for i in range(len(self.spectrum)) if self.mask >> i & 1)

    @property
    def ideals(self):
        return tuple(self.spectrum.points[i] for i in self.indices)

    @property
    def is_empty(self):
        return self.mask == 0

    def __len__(self):
        return len(self.indices)

    def __contains__(self, a):
        i = self.spectrum.index.get(a)
        return i is not None and self.mask >> i & 1

    def union(self, other):
        return PointSet(self.spectrum, self.mask | other.mask)

    def intersect(self, other):
        return PointSet(self.spectrum, self.mask & other.mask)

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __repr__(self):
        return "{" + ", ".join(p.name for p in self.ideals) + "}"


def full_point_set(spec):
    return PointSet(spec, spec.full_mask)


def empty_point_set(spec):
    return PointSet(spec, 0)


def hull(spec, a):
    """Points of the spectrum containing the ideal a (R itself allowed)."""
    if a.ring is not spec.ring:
        raise MixedRings("ideal belongs to a different ring")
    mask = 0
    for i, p in enumerate(spec.points):
        if a <= p:
            mask |= 1 << i
    return PointSet(spec, mask)


def hull_mask(spec, a):
    return hull(spec, a).mask


def kernel(S):
    """Intersection of the member ideals; the empty set yields R (improper)."""
    spec = S.spectrum
    if S.is_empty:
        return unit_ideal(spec.ring)
    members = reduce(lambda m, p: m & p.members, S.ideals,
                     frozenset(spec.ring.elements))
    return Ideal(spec.ring, members)


def image_of_kernel(spec):
    """{k(S) : S subseteq X}: the points closed under pairwise intersection,
    plus R from the empty subset.  Canonically ordered, smallest first."""
    seen = {p.members for p in spec.points}
    frontier = list(seen)
    while frontier:
        m = frontier.pop()
        for other in list(seen):
            c = m & other
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    out = [Ideal(spec.ring, m) for m in seen]
    out.append(unit_ideal(spec.ring))
    return sorted(out, key=lambda a: a.sort_key)


def x_radical(spec, a):
    """kernel(hull(a)): the intersection of all points containing a."""
    return kernel(hull(spec, a))


def check_mip(spec):
    """Meet-inclusion property over the kernel image.

    Quantifies a, b over image_of_kernel (R included, vacuously harmless) and
    s over spectrum points: a cap b subseteq s must force a subseteq s or
    b subseteq s.  Fails with the canonical witness triple (a, b, s).
    """
    imk = witness_order(image_of_kernel(spec))
    points = witness_order(spec.points)
    for a in imk:
        for b in imk:
            meet = a.members & b.members
            for s in points:
                if meet <= s.members and not a <= s and not b <= s:
                    return VerdictReport(
                        "mip", FAILS,
                        witness={"a": w_ideal(a), "b": w_ideal(b), "s": w_ideal(s)},
                        notes=f"{a.name} ∩ {b.name} ⊆ {s.name} but neither factor is contained")
    return VerdictReport("mip", HOLDS, notes=f"{len(imk)} kernel-image ideals checked")


def kuratowski_union_axiom(spec):
    """Whether S -> hull(kernel(S)) satisfies cl(A u B) = cl(A) u cl(B).

    Reduced to pairs over the kernel image: the axiom over all subset pairs
    is equivalent to hull(a cap b) = hull(a) u hull(b) for a, b in im(k).
    Returns (bool, witness_pair_or_None).
    """
    imk = witness_order(image_of_kernel(spec))
    masks = {a: hull_mask(spec, a) for a in imk}
    for a in imk:
        for b in imk:
            both = hull_mask(spec, ideal_intersect_members(spec.ring, a, b))
            if both != masks[a] | masks[b]:
                return False, (a, b)
    return True, None


def ideal_intersect_members(R, a, b):
    return Ideal(R, a.members & b.members)


def has_partition_of_unity(spec):
    """True iff no proper ideal has an empty hull."""
    lat = enumerate_ideals(spec.ring)
    return all(hull_mask(spec, a) != 0 for a in lat.proper)


def check_contraction_property(kind, f: RingHom, caps=DEFAULT_CAPS):
    """Whether preimages under f of target-spectrum points are source points."""
    kind = SpectrumKind(kind)
    src_spec = make_spectrum(f.source, kind, caps)
    tgt_spec = make_spectrum(f.target, kind, caps)
    if not tgt_spec.points:
        return VerdictReport("contraction-property", VACUOUS,
                             notes=f"{tgt_spec.label} is empty")
    for b in witness_order(tgt_spec.points):
        pre = contraction(f, b)
        if not src_spec.contains_ideal(pre):
            return VerdictReport(
                "contraction-property", FAILS,
                witness={"b": w_ideal(b), "preimage": w_ideal(pre), "hom": f.label},
                notes=f"f⁻¹({b.name}) = {pre.name} is not a {kind.title} point of {f.source.label}")
    return VerdictReport("contraction-property", HOLDS,
                         notes=f"{len(tgt_spec)} points contract into {src_spec.label}")
