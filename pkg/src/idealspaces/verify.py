"""Named checks T01..T24, one per verified statement, plus the suite runner.

Each check evaluates one statement about hull/kernel maps, spectra, or ideal
spaces on a concrete (ring, kind) instance and returns a VerdictReport.
Equivalence-form statements compute both sides independently; implication
forms track vacuity.  Instances whose spectrum is empty report ``vacuous``.

Witness selection is deterministic: ideals are searched largest-first (see
``witness_order``), so identical configurations produce identical reports.
"""

from __future__ import annotations

import json
import random
import weakref
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from time import perf_counter

import numpy as np

from .caps import DEFAULT_CAPS
from .errors import IdealSpacesError
from .ideals import (
    ALL_KINDS,
    SpectrumKind,
    classify,
    contraction,
    enumerate_ideals,
    generate_ideal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    jacobson_radical,
    radical,
    witness_order,
)
from .reports import (
    FAILS,
    HOLDS,
    VACUOUS,
    VerdictReport,
    w_ideal,
    w_ideals,
    w_point_set,
)
from .rings import (
    is_von_neumann_regular,
    localize,
    make_quotient,
    multiplicative_closure,
    product_encode,
    unit_ideal,
    zero_ideal,
)
from .spectra import (
    PointSet,
    check_contraction_property,
    check_mip,
    has_partition_of_unity,
    hull,
    hull_mask,
    image_of_kernel,
    kernel,
    kuratowski_union_axiom,
    make_spectrum,
    x_radical,
)
from .topology import (
    closure_of,
    extract_idempotent,
    generate_topology,
    irreducible_closed_sets,
    is_connected,
    is_quasi_compact,
    is_sober,
    is_t0,
    is_t1,
    strongly_disconnects,
)

DEFAULT_SUITE_EXPRS = ("Z2", "Z4", "Z6", "Z8", "Z12", "Z36",
                       "Z2xZ2xZ2", "Z2xZ4", "Z6xZ6")

_SAMPLE_SEED = 0x1DEA15


# ---------------------------------------------------------------------------
# shared helpers


def _ctx(ring, kind, caps):
    spec = make_spectrum(ring, kind, caps)
    T = generate_topology(spec, caps)
    return enumerate_ideals(ring, caps), spec, T


_sum_table_cache = weakref.WeakKeyDictionary()


def _sum_table(R, caps):
    tab = _sum_table_cache.get(R)
    if tab is None:
        lat = enumerate_ideals(R, caps)
        n = len(lat)
        tab = [[0] * n for _ in range(n)]
        for i, a in enumerate(lat.ideals):
            for j, b in enumerate(lat.ideals):
                tab[i][j] = lat.index(ideal_sum(a, b))
        _sum_table_cache[R] = tab
    return tab


_quotient_cache = weakref.WeakKeyDictionary()


def _quotient_homs(R, caps):
    out = _quotient_cache.get(R)
    if out is None:
        lat = enumerate_ideals(R, caps)
        out = []
        for a in lat.proper:
            Q, f = make_quotient(R, a, caps=caps)
            out.append((a, Q, f))
        _quotient_cache[R] = out
    return out


_localization_cache = weakref.WeakKeyDictionary()


def _localization_homs(R, caps):
    out = _localization_cache.get(R)
    if out is None:
        out = []
        seen = set()
        for x in R.elements:
            if x == R.zero:
                continue
            S = multiplicative_closure(R, (x,))
            if R.zero in S.members or S.members in seen:
                continue
            seen.add(S.members)
            L, f = localize(R, S, caps=caps)
            out.append((S, L, f))
        _localization_cache[R] = out
    return out


def _point_elem_masks(spec):
    return [p.mask for p in spec.points]


def _hull_of_elem_mask(spec, emask):
    m = 0
    for i, p in enumerate(spec.points):
        if emask & ~p.mask == 0:
            m |= 1 << i
    return m


def _kernel_elem_mask(spec, smask, pmasks, allmask):
    k = allmask
    i = 0
    while smask:
        if smask & 1:
            k &= pmasks[i]
        smask >>= 1
        i += 1
    return k


def _subset_samples(n_points, count):
    rng = random.Random(_SAMPLE_SEED)
    total = 1 << n_points
    if total <= count:
        return list(range(total))
    return sorted({rng.randrange(total) for _ in range(count)})


def _fail(check, witness, notes=""):
    return VerdictReport(check, FAILS, witness=witness, notes=notes)


def _hold(check, notes=""):
    return VerdictReport(check, HOLDS, notes=notes)


def _vac(check, notes=""):
    return VerdictReport(check, VACUOUS, notes=notes)


# ---------------------------------------------------------------------------
# T01  hull/kernel identities


def _run_t01(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    L = lat.ideals
    hm = {a: hull_mask(spec, a) for a in L}
    full = spec.full_mask
    notes = []

    if hm[unit_ideal(R)] != 0:
        return _fail("T01", {"part": "h(R)=∅"})
    if hm[zero_ideal(R)] != full:
        return _fail("T01", {"part": "h(o)=X"})
    if kernel(PointSet(spec, 0)).proper:
        return _fail("T01", {"part": "k(∅)=R"})

    for a in L:
        for b in L:
            if a <= b and hm[b] & ~hm[a]:
                return _fail("T01", {"part": "h order-reversing",
                                     "a": w_ideal(a), "b": w_ideal(b)})
            union = hm[a] | hm[b]
            meet = hm[ideal_intersect(a, b)]
            prod = hull_mask(spec, ideal_product(a, b))
            if union & ~meet or meet & ~prod:
                return _fail("T01", {"part": "h(a)∪h(b) ⊆ h(a∩b) ⊆ h(ab)",
                                     "a": w_ideal(a), "b": w_ideal(b)})
        if hm[radical(a)] & ~hm[a]:
            return _fail("T01", {"part": "h(a) ⊇ h(√a)", "a": w_ideal(a)})

    # family identity over sublists of the lattice
    sumidx = _sum_table(R, caps)
    hulls = [hm[a] for a in L]
    nL = len(L)
    if nL <= 16:
        inter = [0] * (1 << nL)
        sm = [0] * (1 << nL)
        inter[0] = full
        sm[0] = 0  # o is first in the canonical lattice order
        for m in range(1, 1 << nL):
            lb = m & -m
            i = lb.bit_length() - 1
            prev = m ^ lb
            inter[m] = inter[prev] & hulls[i]
            sm[m] = sumidx[sm[prev]][i]
            if inter[m] != hulls[sm[m]]:
                fam = [w_ideal(L[j]) for j in range(nL) if m >> j & 1]
                return _fail("T01", {"part": "∩h(aᵢ)=h(Σaᵢ)", "family": fam})
        notes.append(f"sum identity exhaustive over 2^{nL} sublists")
    else:
        rng = random.Random(_SAMPLE_SEED)
        for _ in range(512):
            m = rng.randrange(1 << nL)
            acc, s = full, 0
            for j in range(nL):
                if m >> j & 1:
                    acc &= hulls[j]
                    s = sumidx[s][j]
            if acc != hulls[s]:
                fam = [w_ideal(L[j]) for j in range(nL) if m >> j & 1]
                return _fail("T01", {"part": "∩h(aᵢ)=h(Σaᵢ)", "family": fam})
        notes.append("sum identity on 512 sampled sublists")

    # Galois connection and the hk closure-operation laws
    nX = len(spec)
    pmasks = _point_elem_masks(spec)
    allm = (1 << R.size) - 1
    exhaustive = nX <= 12
    subsets = list(range(1 << nX)) if exhaustive else _subset_samples(nX, 2048)
    kmask = {}
    for S in subsets:
        kmask[S] = _kernel_elem_mask(spec, S, pmasks, allm)
        for a in L:
            if (S & ~hm[a] == 0) != (a.mask & ~kmask[S] == 0):
                return _fail("T01", {"part": "Galois connection",
                                     "S": [spec.points[i].name for i in range(nX) if S >> i & 1],
                                     "a": w_ideal(a)})
        hk = _hull_of_elem_mask(spec, kmask[S])
        if S & ~hk:
            return _fail("T01", {"part": "hk extensive", "S": S})
        hk2 = _hull_of_elem_mask(spec, _kernel_elem_mask(spec, hk, pmasks, allm))
        if hk2 != hk:
            return _fail("T01", {"part": "hk idempotent", "S": S})
    notes.append(("Galois exhaustive over all subsets" if exhaustive
                  else "Galois on 2048 sampled subsets"))

    # k(∪ S) = ∩ k(S) and k order-reversing, over subset pairs
    pair_subsets = subsets if nX <= 6 else _subset_samples(nX, 64)
    for S in pair_subsets:
        kS = kmask.get(S)
        if kS is None:
            kS = _kernel_elem_mask(spec, S, pmasks, allm)
        for T2 in pair_subsets:
            kT = kmask.get(T2)
            if kT is None:
                kT = _kernel_elem_mask(spec, T2, pmasks, allm)
            if _kernel_elem_mask(spec, S | T2, pmasks, allm) != kS & kT:
                return _fail("T01", {"part": "k(∪)=∩k", "S": S, "T": T2})
            if S & ~T2 == 0 and kT & ~kS:
                return _fail("T01", {"part": "k order-reversing", "S": S, "T": T2})
    return _hold("T01", notes="; ".join(notes))


# ---------------------------------------------------------------------------
# T02  radical-hull equivalence


def _run_t02(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    side_all = all(hull_mask(spec, a) == hull_mask(spec, radical(a)) for a in lat.ideals)
    side_pts = all(hull_mask(spec, p) == hull_mask(spec, radical(p)) for p in spec.points)
    side_rad = all(radical(p).members == p.members for p in spec.points)
    if side_all == side_pts == side_rad:
        return _hold("T02", notes=f"all three sides {'true' if side_all else 'false'}")
    return _fail("T02", {"h(a)=h(√a) on Idl": side_all,
                         "h(a)=h(√a) on X": side_pts,
                         "points radical": side_rad})


# ---------------------------------------------------------------------------
# T03  meet-inclusion property iff hk is a Kuratowski closure


def _run_t03(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    mip = check_mip(spec)
    kur_ok, kur_wit = kuratowski_union_axiom(spec)
    notes = [f"mip {'holds' if mip.holds else 'fails'}",
             f"union axiom {'holds' if kur_ok else 'fails'}"]
    if mip.holds != kur_ok:
        return _fail("T03", {"mip": mip.status,
                             "union_axiom": kur_ok,
                             "mip_witness": mip.witness,
                             "axiom_witness": None if kur_wit is None else w_ideals(kur_wit)},
                     notes="equivalence broken")
    nX = len(spec)
    if nX <= 10:
        pmasks = _point_elem_masks(spec)
        allm = (1 << R.size) - 1
        hk = np.empty(1 << nX, dtype=np.int64)
        for S in range(1 << nX):
            hk[S] = _hull_of_elem_mask(
                spec, _kernel_elem_mask(spec, S, pmasks, allm))
        idx = np.arange(1 << nX, dtype=np.int64)
        ors = idx[:, None] | idx[None, :]
        exhaustive_ok = bool((hk[ors] == (hk[idx][:, None] | hk[idx][None, :])).all())
        notes.append(f"exhaustive subset-pair check over 2^{nX} sets "
                     f"{'agrees' if exhaustive_ok == kur_ok else 'DISAGREES'}")
        if exhaustive_ok != kur_ok:
            return _fail("T03", {"reduced": kur_ok, "exhaustive": exhaustive_ok},
                         notes="; ".join(notes))
    if not mip.holds:
        return _hold("T03", notes="; ".join(notes) + f"; witness {mip.witness}")
    return _hold("T03", notes="; ".join(notes))


# ---------------------------------------------------------------------------
# T04  X = im(k) iff X is intersection-closed


def _run_t04(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    imk = image_of_kernel(spec)
    imk_nonempty = {a.members for a in imk} - {frozenset(R.elements)}
    pts = {p.members for p in spec.points}
    side_eq = imk_nonempty == pts
    side_closed = all(
        (p.members & q.members) in pts for p in spec.points for q in spec.points)
    note = ("nonempty-subset reading: k(∅)=R is excluded from the comparison "
            "since R is never a spectrum point")
    if side_eq == side_closed:
        return _hold("T04", notes=f"both sides {'true' if side_eq else 'false'}; {note}")
    return _fail("T04", {"im(k)=X": side_eq, "intersection-closed": side_closed},
                 notes=note)


# ---------------------------------------------------------------------------
# T05  closed-base characterization


def _run_t05(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    kur_ok, _ = kuratowski_union_axiom(spec)
    hk_family = {hull_mask(spec, c) for c in image_of_kernel(spec)}
    base_ok = True
    witness = None
    for c in T.closed_masks:
        acc = T.full_mask
        for d in hk_family:
            if c & ~d == 0:
                acc &= d
        if acc != c:
            base_ok = False
            witness = {"closed_set": w_point_set(PointSet(spec, c))}
            break
    if base_ok == kur_ok:
        return _hold("T05", notes=f"both sides {'true' if kur_ok else 'false'}")
    return _fail("T05", witness or {"closed_base": base_ok, "union_axiom": kur_ok},
                 notes=f"closed base {base_ok} vs union axiom {kur_ok}")


# ---------------------------------------------------------------------------
# T06  generalized-radical properties


def _run_t06(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    L = lat.ideals
    xr = {a: x_radical(spec, a) for a in L}
    hm = {a: hull_mask(spec, a) for a in L}
    notes = []

    for a in witness_order(L):
        if a.mask & ~xr[a].mask:
            return _fail("T06", {"part": "a ⊆ √[X]a", "a": w_ideal(a)})
        if xr[a].mask & ~radical(a).mask:
            return _fail(
                "T06",
                {"part": "√[X]a ⊆ √a", "a": w_ideal(a),
                 "x_radical": w_ideal(xr[a]), "radical": w_ideal(radical(a))},
                notes="h(a) is empty for a proper ideal, so √[X]a = R overshoots √a; "
                      "holds exactly when the spectrum has the partition-of-unity property")
    for p in spec.points:
        if xr[p].members != p.members:
            return _fail("T06", {"part": "a ∈ X ⟹ √[X]a = a", "a": w_ideal(p)})
    for a in L:
        if hull_mask(spec, xr[a]) != hm[a]:
            return _fail("T06", {"part": "h(√[X]a) = h(a)", "a": w_ideal(a)})
    for a in L:
        for b in L:
            if (hm[a] & ~hm[b] == 0) != (xr[b].mask & ~xr[a].mask == 0):
                return _fail("T06", {"part": "h(a)⊆h(b) ⟺ √[X]b⊆√[X]a",
                                     "a": w_ideal(a), "b": w_ideal(b)})
    if is_von_neumann_regular(R):
        for a in witness_order(L):
            for b in witness_order(L):
                if (hm[a] & ~hm[b] == 0) != (b <= a):
                    return _fail(
                        "T06",
                        {"part": "regular ring: h(a)⊆h(b) ⟺ b⊆a",
                         "a": w_ideal(a), "b": w_ideal(b)},
                        notes="fails when some proper ideal has an empty hull")
        notes.append("regular-ring criterion checked")
    else:
        notes.append("ring not von Neumann regular; regular-ring part skipped")
    if {hm[a] for a in L} != {hull_mask(spec, c) for c in image_of_kernel(spec)}:
        return _fail("T06", {"part": "C_h = C_hk"})
    return _hold("T06", notes="; ".join(notes))


# ---------------------------------------------------------------------------
# T07  the strongly irreducible spectrum


def _run_t07(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    pts = witness_order(spec.points)
    for a in witness_order(lat.ideals):
        for b in witness_order(lat.ideals):
            meet = a.members & b.members
            for s in pts:
                if meet <= s.members and not a <= s and not b <= s:
                    return _fail("T07", {"part": "mip over all ideal pairs",
                                         "a": w_ideal(a), "b": w_ideal(b), "s": w_ideal(s)})
    for a in lat.proper:
        spc = classify(a, SpectrumKind.SPC, caps)
        irs_rad = classify(a, SpectrumKind.IRS, caps) and classify(a, SpectrumKind.RAD, caps)
        if spc != irs_rad:
            return _fail("T07", {"part": "prime ⟺ strongly irreducible ∧ radical",
                                 "a": w_ideal(a)})
    for sub in (SpectrumKind.SPC, SpectrumKind.SPN, SpectrumKind.MAX):
        for p in make_spectrum(R, sub, caps).points:
            if not spec.contains_ideal(p):
                return _fail("T07", {"part": f"{sub.title} ⊆ Irs", "p": w_ideal(p)})
    return _hold("T07", notes="mip holds over all ideal pairs; sub-spectra contained")


# ---------------------------------------------------------------------------
# T08  T1 iff every point is maximal


def _run_t08(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    t1 = is_t1(T)
    non_max = [p for p in witness_order(spec.points)
               if not classify(p, SpectrumKind.MAX, caps)]
    side_max = not non_max
    if t1.holds == side_max:
        return _hold("T08", notes=f"T1 {t1.status}; X ⊆ Max {side_max}")
    return _fail(
        "T08",
        {"t1": t1.status, "X ⊆ Max": side_max,
         "non_maximal_point": w_ideal(non_max[0]) if non_max else None,
         "t1_witness": t1.witness},
        notes="the necessity direction presumes maximal ideals are spectrum "
              "points; antichain spectra (e.g. minimal ideals) are T1 without that")


# ---------------------------------------------------------------------------
# T09  every ideal space is T0


def _run_t09(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    t0 = is_t0(T)
    # independent route: some closed set separates each pair
    n = len(spec)
    for i in range(n):
        for j in range(i + 1, n):
            if not any(bool(c >> i & 1) != bool(c >> j & 1) for c in T.closed_masks):
                return _fail("T09", {"p": w_ideal(spec.points[i]),
                                     "q": w_ideal(spec.points[j])},
                             notes="no closed set separates the pair")
    if not t0.holds:
        return _fail("T09", t0.witness, notes="closure route disagrees")
    return _hold("T09")


# ---------------------------------------------------------------------------
# T10  sobriety criterion


def _run_t10(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    sober = is_sober(T)
    irr = irreducible_closed_sets(T)
    irr_masks = {ps.mask for ps, _g in irr}
    hm = {a: hull_mask(spec, a) for a in lat.ideals}

    weak = True
    weak_witness = None
    for ps, _g in irr:
        if not any(hm[a] == ps.mask and spec.contains_ideal(a) and
                   (ps.mask >> spec.index[a] & 1) for a in lat.ideals
                   if spec.contains_ideal(a)):
            weak = False
            weak_witness = {"set": w_point_set(ps)}
            break

    strong = True
    xor_pairs = []
    for a in witness_order(lat.ideals):
        if hm[a] and hm[a] in irr_masks:
            a_in = spec.contains_ideal(a) and bool(hm[a] >> spec.index[a] & 1)
            if not a_in:
                strong = False
                for b in lat.ideals:
                    if hm[b] == hm[a] and spec.contains_ideal(b) and \
                            bool(hm[b] >> spec.index[b] & 1):
                        xor_pairs.append((a, b))
                        break
    notes = [f"sober {sober.status}; criterion (per closed set) {weak}; "
             f"criterion (all ideals) {strong}"]
    if xor_pairs:
        frag = ", ".join(f"h({a.name})=h({b.name}) but only {b.name} lies inside"
                         for a, b in xor_pairs[:3])
        notes.append(f"non-injective hulls: {frag}")
    if sober.holds != weak:
        return _fail("T10", weak_witness or {"sober": sober.status, "criterion": weak},
                     notes="; ".join(notes))
    return _hold("T10", notes="; ".join(notes))


# ---------------------------------------------------------------------------
# T11  hulls of points are their closures and are irreducible


def _run_t11(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    irr_masks = {ps.mask for ps, _g in irreducible_closed_sets(T)}
    for p in witness_order(spec.points):
        hma = hull_mask(spec, p)
        cl = closure_of(T, 1 << spec.index[p]).mask
        if cl != hma:
            return _fail("T11", {"point": w_ideal(p),
                                 "closure": w_point_set(PointSet(spec, cl)),
                                 "hull": w_point_set(PointSet(spec, hma))})
        if hma not in irr_masks:
            return _fail("T11", {"point": w_ideal(p), "part": "hull not irreducible"})
    return _hold("T11", notes=f"{len(spec)} point hulls checked")


# ---------------------------------------------------------------------------
# T12  nonempty subbasic closed sets of the proper spectrum are irreducible


def _run_t12(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    irr_masks = {ps.mask for ps, _g in irreducible_closed_sets(T)}
    for a in witness_order(lat.ideals):
        m = hull_mask(spec, a)
        if m and m not in irr_masks:
            return _fail("T12", {"a": w_ideal(a),
                                 "hull": w_point_set(PointSet(spec, m))})
    return _hold("T12")


# ---------------------------------------------------------------------------
# T13  base intersections and strong disconnection vs disconnectedness


def _run_t13(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    base_set = set(T.base_masks)
    sumidx = _sum_table(R, caps)
    ker_idx = {m: lat.index(T.kernel_ideal_of(m)) for m in T.subbase_masks}
    hulls = {i: hull_mask(spec, lat.ideals[i]) for i in range(len(lat))}
    decomp = T._family.base_decomp
    for A in T.base_masks:
        for B in T.base_masks:
            if (A & B) not in base_set:
                return _fail("T13", {"part": "base closed under ∩", "A": A, "B": B})
            rebuilt = 0
            for sa in decomp[A]:
                ia = ker_idx[sa]
                for sb in decomp[B]:
                    rebuilt |= hulls[sumidx[ia][ker_idx[sb]]]
            if rebuilt != A & B:
                return _fail("T13", {"part": "∪h(aᵢ) ∩ ∪h(bⱼ) = ∪h(aᵢ+bⱼ)",
                                     "A": A, "B": B})
    disconnected = not is_connected(T).holds
    sd = strongly_disconnects(T, "base")
    if disconnected != sd.holds:
        return _fail("T13", {"disconnected": disconnected, "base strongly disconnects":
                             sd.holds, "sd": sd.witness})
    return _hold("T13", notes=f"disconnected={disconnected}; space quasi-compact (finite)")


# ---------------------------------------------------------------------------
# T14  strong disconnection yields a nontrivial idempotent


def _hypotheses_pr1(R, spec, T, caps):
    if len(jacobson_radical(R, caps).members) != 1:
        return None, "Jacobson radical is nonzero"
    lat = enumerate_ideals(R, caps)
    for m in lat.maximal_ideals():
        if not spec.contains_ideal(m):
            return None, f"maximal ideal {m.name} not a spectrum point"
    sd = strongly_disconnects(T, "subbase")
    if not sd.holds:
        return None, "subbase does not strongly disconnect the space"
    a = next(p for p in lat.ideals if w_ideal(p) == sd.witness["a"])
    b = next(p for p in lat.ideals if w_ideal(p) == sd.witness["b"])
    return (a, b), ""


def _run_t14(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    pair, why = _hypotheses_pr1(R, spec, T, caps)
    if pair is None:
        return _vac("T14", notes=why)
    a, b = pair
    try:
        e = extract_idempotent(T, (a, b))
    except IdealSpacesError as exc:
        return _fail("T14", {"a": w_ideal(a), "b": w_ideal(b), "error": str(exc)})
    return _hold("T14", notes=f"idempotent {R.name(e)} from pair ({a.name}, {b.name})")


# ---------------------------------------------------------------------------
# T15  the disconnecting pair is the idempotent pair (e), (1-e)


def _run_t15(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    pair, why = _hypotheses_pr1(R, spec, T, caps)
    if pair is None:
        return _vac("T15", notes=why)
    a, b = pair
    try:
        e = extract_idempotent(T, (a, b))
    except IdealSpacesError as exc:
        return _fail("T15", {"error": str(exc)})
    f = R.sub(R.one, e)
    gen_e = generate_ideal(R, (e,))
    gen_f = generate_ideal(R, (f,))
    if gen_e.members != a.members or gen_f.members != b.members:
        return _fail("T15", {"a": w_ideal(a), "b": w_ideal(b),
                             "⟨e⟩": w_ideal(gen_e), "⟨1-e⟩": w_ideal(gen_f)})
    if hull_mask(spec, gen_e) != hull_mask(spec, a) or \
            hull_mask(spec, gen_f) != hull_mask(spec, b):
        return _fail("T15", {"part": "hulls of ⟨e⟩, ⟨1-e⟩ differ from the pair"})
    return _hold("T15", notes=f"a=⟨{R.name(e)}⟩ and b=⟨{R.name(f)}⟩ as required")


# ---------------------------------------------------------------------------
# T16  a spectrum containing the zero ideal is connected


def _run_t16(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    conn = is_connected(T)
    if not spec.contains_ideal(zero_ideal(R)):
        note = "o not a point; hypothesis unsatisfied"
        if conn.holds:
            note += " (converse fails here: connected without containing o)"
        return _vac("T16", notes=note)
    if conn.holds:
        return _hold("T16", notes="o ∈ X and the space is connected")
    return _fail("T16", conn.witness, notes="o ∈ X yet the space is disconnected")


# ---------------------------------------------------------------------------
# T17  idempotents without strong disconnection (product-ring example)


def _run_t17(R, kind, caps):
    if R.components is None or len(R.components) < 2:
        return _vac("T17", notes="not a product ring; example does not instantiate")
    lat, spec, T = _ctx(R, kind, caps)
    if len(jacobson_radical(R, caps).members) != 1:
        return _vac("T17", notes="Jacobson radical nonzero")
    nontrivial = [x for x in R.idempotents if x not in (R.zero, R.one)]
    if not nontrivial:
        return _vac("T17", notes="no nontrivial idempotents")
    e = product_encode(R, tuple([R.components[0].one] +
                                [c.zero for c in R.components[1:]]))
    f = R.sub(R.one, e)
    a, b = generate_ideal(R, (e,)), generate_ideal(R, (f,))
    ha, hb = hull_mask(spec, a), hull_mask(spec, b)
    if not ha or not hb or ha & hb:
        return _fail("T17", {"a": w_ideal(a), "b": w_ideal(b)},
                     notes="coordinate pair is not a disjoint nonempty pair")
    uncovered = [p for p in witness_order(spec.points)
                 if not (ha | hb) >> spec.index[p] & 1]
    if not uncovered:
        return _fail("T17", {"a": w_ideal(a), "b": w_ideal(b)},
                     notes="coordinate pair unexpectedly covers the space")
    sd = strongly_disconnects(T, "subbase")
    if sd.holds:
        return _fail("T17", sd.witness, notes="subbase strongly disconnects after all")
    return _hold("T17", notes=f"idempotents exist but h({a.name}) ∪ h({b.name}) misses "
                              f"{uncovered[0].name}; no strong disconnection")


# ---------------------------------------------------------------------------
# contraction-map checks (T18-T22)


def _all_canonical_homs(R, caps):
    homs = [f for _a, _Q, f in _quotient_homs(R, caps)]
    homs += [f for _S, _L, f in _localization_homs(R, caps)]
    return homs


def _gated(kind, f, caps):
    """Contraction-property gate; returns (applicable, note)."""
    rep = check_contraction_property(kind, f, caps)
    if rep.fails:
        return False, f"{f.label}: contraction property fails"
    return True, ""


def _transport_is_homeo(T_big, big_bits, T_small):
    """Is point i of T_small -> big_bits[i] a homeomorphism onto its image
    with the subspace topology from T_big?"""
    M = 0
    for b in big_bits:
        M |= 1 << b
    if len(set(big_bits)) != len(big_bits):
        return False, "map not injective"
    rel_family = {c & M for c in T_big.closed_masks}
    for D in T_small.closed_masks:
        t = 0
        for i in range(len(T_small.spectrum)):
            if D >> i & 1:
                t |= 1 << big_bits[i]
        if t not in rel_family:
            return False, "image of a closed set is not closed in the subspace"
    small_bit_of = {b: i for i, b in enumerate(big_bits)}
    for c in T_big.closed_masks:
        rel = c & M
        back = 0
        for b in small_bit_of:
            if rel >> b & 1:
                back |= 1 << small_bit_of[b]
        if back not in set(T_small.closed_masks):
            return False, "preimage of a closed set is not closed"
    return True, ""


def _run_t18(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    checked = 0
    for f in _all_canonical_homs(R, caps):
        ok, note = _gated(kind, f, caps)
        if not ok:
            continue
        other = make_spectrum(f.target, kind, caps)
        T_other = generate_topology(other, caps)
        bits = {}
        for b in other.points:
            pre = contraction(f, b)
            bits[b] = spec.index[pre]
        for C in T.closed_masks:
            pre_mask = 0
            for j, b in enumerate(other.points):
                if C >> bits[b] & 1:
                    pre_mask |= 1 << j
            if not T_other.is_closed(pre_mask):
                return _fail("T18", {"hom": f.label,
                                     "closed_set": w_point_set(PointSet(spec, C))},
                             notes="preimage under the contraction map is not closed")
        for a in lat.ideals:
            pushed = generate_ideal(f.target, tuple({f(x) for x in a.members}))
            expect = hull_mask(other, pushed)
            got = 0
            for j, b in enumerate(other.points):
                if hull_mask(spec, a) >> bits[b] & 1:
                    got |= 1 << j
            if got != expect:
                return _fail("T18", {"hom": f.label, "a": w_ideal(a),
                                     "part": "(f*)⁻¹(h(a)) = h(⟨f(a)⟩)"})
        checked += 1
    if checked == 0:
        return _vac("T18", notes="no hom with the contraction property")
    return _hold("T18", notes=f"{checked} canonical homs checked")


def _run_t19(R, kind, caps, quotients_only=False, check_id="T19"):
    lat, spec, T = _ctx(R, kind, caps)
    homs = [f for _a, _Q, f in _quotient_homs(R, caps)]
    if not quotients_only:
        homs += [f for _S, _L, f in _localization_homs(R, caps)]
    checked = 0
    for f in homs:
        if not f.is_surjective():
            continue
        ok, _ = _gated(kind, f, caps)
        if not ok:
            continue
        other = make_spectrum(f.target, kind, caps)
        T_other = generate_topology(other, caps)
        ker = f.kernel()
        M_bits = [i for i, p in enumerate(spec.points) if ker <= p]
        big_bits = []
        onto = set()
        bad = None
        for b in other.points:
            pre = contraction(f, b)
            i = spec.index.get(pre)
            if i is None or not (ker <= pre):
                bad = {"hom": f.label, "b": w_ideal(b), "preimage": w_ideal(pre)}
                break
            big_bits.append(i)
            onto.add(i)
        if bad:
            return _fail(check_id, bad, notes="contraction leaves h(ker f)")
        if onto != set(M_bits):
            missing = [spec.points[i] for i in sorted(set(M_bits) - onto)]
            return _fail(
                check_id,
                {"hom": f.label, "kernel": w_ideal(ker),
                 "h(ker)": w_point_set(PointSet(spec, sum(1 << i for i in M_bits))),
                 "uncovered": w_ideals(missing)},
                notes="the contraction map is not onto h(ker f); the spectrum of "
                      "the quotient does not reflect these points")
        homeo, why = _transport_is_homeo(T, big_bits, T_other)
        if not homeo:
            return _fail(check_id, {"hom": f.label, "why": why})
        checked += 1
    if checked == 0:
        return _vac(check_id, notes="no surjective hom with the contraction property")
    return _hold(check_id, notes=f"{checked} surjections checked")


def _run_t20(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    k_full = kernel(PointSet(spec, spec.full_mask))
    checked = 0
    for f in _all_canonical_homs(R, caps):
        ok, _ = _gated(kind, f, caps)
        if not ok:
            continue
        other = make_spectrum(f.target, kind, caps)
        image = 0
        for b in other.points:
            image |= 1 << spec.index[contraction(f, b)]
        dense = closure_of(T, image).mask == spec.full_mask
        ker_contained = f.kernel() <= k_full
        if dense != ker_contained:
            return _fail("T20", {"hom": f.label, "dense": dense,
                                 "ker ⊆ ∩X": ker_contained,
                                 "kernel": w_ideal(f.kernel())})
        checked += 1
    if checked == 0:
        return _vac("T20", notes="no hom with the contraction property")
    return _hold("T20", notes=f"{checked} homs checked")


def _run_t21(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    checked = 0
    for S, L, f in _localization_homs(R, caps):
        ok, _ = _gated(kind, f, caps)
        if not ok:
            continue
        other = make_spectrum(L, kind, caps)
        T_other = generate_topology(other, caps)
        M_bits = [i for i, p in enumerate(spec.points) if not (p.members & S.members)]
        big_bits = []
        bad = None
        for b in other.points:
            pre = contraction(f, b)
            i = spec.index.get(pre)
            if i is None or (pre.members & S.members):
                bad = {"hom": f.label, "b": w_ideal(b),
                       "preimage": w_ideal(pre)}
                break
            big_bits.append(i)
        if bad:
            return _fail("T21", bad, notes="contraction meets S or leaves the spectrum")
        if set(big_bits) != set(M_bits):
            missing = [spec.points[i] for i in sorted(set(M_bits) - set(big_bits))]
            return _fail(
                "T21",
                {"hom": f.label, "S": sorted(R.name(x) for x in S.members),
                 "uncovered": w_ideals(missing)},
                notes="X(R_S) does not reflect every point of X(R) avoiding S "
                      "(only saturated ideals contract back)")
        homeo, why = _transport_is_homeo(T, big_bits, T_other)
        if not homeo:
            return _fail("T21", {"hom": f.label, "why": why})
        checked += 1
    if checked == 0:
        return _vac("T21", notes="no localization with the contraction property")
    return _hold("T21", notes=f"{checked} localizations checked")


def _run_t22(R, kind, caps):
    return _run_t19(R, kind, caps, quotients_only=True, check_id="T22")


# ---------------------------------------------------------------------------
# T23  partition of unity iff all maximal ideals; then quasi-compact


def _run_t23(R, kind, caps):
    lat, spec, T = _ctx(R, kind, caps)
    pou = has_partition_of_unity(spec)
    maxs = lat.maximal_ideals()
    contains_max = all(spec.contains_ideal(m) for m in maxs)
    if pou != contains_max:
        missing = [m for m in maxs if not spec.contains_ideal(m)]
        return _fail("T23", {"partition_of_unity": pou,
                             "contains_all_maximal": contains_max,
                             "missing": w_ideals(missing)})
    qc = is_quasi_compact(T)
    note = f"pou={pou}; {qc.notes}"
    if pou and not qc.holds:  # pragma: no cover - finite spaces are compact
        return _fail("T23", {"part": "pou ⟹ quasi-compact"})
    return _hold("T23", notes=note)


# ---------------------------------------------------------------------------
# T24  designed meet-inclusion failure reproductions


_T24_KINDS = frozenset({SpectrumKind.MIN, SpectrumKind.PRP, SpectrumKind.PRN,
                        SpectrumKind.FGN, SpectrumKind.RAD, SpectrumKind.IRR,
                        SpectrumKind.PRM})


def _run_t24(R, kind, caps):
    lat, spec, _T = _ctx(R, kind, caps)
    mip = check_mip(spec)
    notes = []
    if R.label == "Z2xZ2xZ2" and kind is SpectrumKind.MIN:
        notes.append("exact reproduction on the three minimal ideals of the "
                     "triple product of the two-element field")
    if R.label == "Z36" and kind in (SpectrumKind.PRP, SpectrumKind.PRN,
                                     SpectrumKind.FGN, SpectrumKind.RAD):
        notes.append("finite analog: Z36 stands in for the integers "
                     "(2Z, 3Z, 6Z become ⟨2⟩, ⟨3⟩, ⟨6⟩)")
    if kind in (SpectrumKind.IRR, SpectrumKind.PRM) and mip.holds:
        notes.append("irreducible/primary coincide with strongly irreducible "
                     "on this ring family, so no failure witness exists here")
    if mip.fails:
        return VerdictReport("T24", FAILS, witness=mip.witness,
                             notes="; ".join(notes) or mip.notes)
    return _hold("T24", notes="; ".join(notes) or "meet-inclusion holds here")


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class CheckSpec:
    id: str
    title: str
    statement: str
    form: str                      # "theorem" or "example"
    kinds: frozenset | None = None  # None = every kind
    runner: object = None

    def applicable(self, kind):
        return self.kinds is None or SpectrumKind(kind) in self.kinds


_CHECKS = [
    CheckSpec("T01", "hull/kernel identities",
              "h and k form an antitone Galois connection with hk an algebraic "
              "closure operation; both maps reverse order; h(R)=∅, h(o)=X, k(∅)=R; "
              "h(a)∪h(b) ⊆ h(a∩b) ⊆ h(ab); ∩h(aᵢ)=h(Σaᵢ); k(∪Sλ)=∩k(Sλ); h(a)⊇h(√a)",
              "theorem", None, _run_t01),
    CheckSpec("T02", "radical-hull equivalence",
              "h(a)=h(√a) for all ideals ⟺ h(a)=h(√a) for all points ⟺ every "
              "point is a radical ideal",
              "theorem", None, _run_t02),
    CheckSpec("T03", "closure criterion (meet inclusion)",
              "hk is a Kuratowski closure operation on X(R) iff a∩b ⊆ s forces "
              "a ⊆ s or b ⊆ s for all a, b in im(k) and points s",
              "theorem", None, _run_t03),
    CheckSpec("T04", "kernel image equals the spectrum",
              "X(R) = im(k) iff X(R) is closed under intersections (nonempty "
              "subsets; k(∅)=R is never a point)",
              "theorem", None, _run_t04),
    CheckSpec("T05", "closed-base characterization",
              "hk is a Kuratowski closure operation iff {hk(S)} is a closed base "
              "of the generated topology",
              "theorem", None, _run_t05),
    CheckSpec("T06", "generalized-radical properties",
              "a ⊆ √[X]a ⊆ √a; √[X]a=a on points; h(√[X]a)=h(a); h(a)⊆h(b) ⟺ "
              "√[X]b⊆√[X]a; on regular rings h(a)⊆h(b) ⟺ b⊆a; the hull family "
              "equals the hk family",
              "theorem", None, _run_t06),
    CheckSpec("T07", "strongly irreducible spectrum",
              "the strongly irreducible spectrum satisfies meet inclusion over "
              "all ideal pairs; prime = strongly irreducible + radical; the "
              "prime, minimal-prime, and maximal spectra are sub-spectra",
              "theorem", frozenset({SpectrumKind.IRS}), _run_t07),
    CheckSpec("T08", "T1 iff maximal points",
              "an ideal space is T1 iff every point is a maximal ideal",
              "theorem", None, _run_t08),
    CheckSpec("T09", "T0 separation",
              "ideal spaces always satisfy the T0 axiom (specialization by "
              "inclusion is antisymmetric)",
              "theorem", None, _run_t09),
    CheckSpec("T10", "sobriety criterion",
              "an ideal space is sober iff every nonempty irreducible closed set "
              "is a hull containing a generating point (recording hull-collision "
              "ideals where the all-ideals reading diverges)",
              "theorem", None, _run_t10),
    CheckSpec("T11", "point hulls are irreducible",
              "for every point a, h(a) is the closure of {a} and is irreducible",
              "theorem", None, _run_t11),
    CheckSpec("T12", "subbasic sets of the proper spectrum",
              "nonempty subbasic closed sets of the proper-ideal spectrum are "
              "irreducible (their defining ideal is itself a point)",
              "theorem", frozenset({SpectrumKind.PRP}), _run_t12),
    CheckSpec("T13", "disconnection via the closed base",
              "the closed base is closed under binary intersections (via "
              "∪h(aᵢ) ∩ ∪h(bⱼ) = ∪h(aᵢ+bⱼ)); a quasi-compact ideal space is "
              "disconnected iff the base strongly disconnects it",
              "theorem", None, _run_t13),
    CheckSpec("T14", "idempotents from strong disconnection",
              "zero Jacobson radical + all maximal ideals present + subbase "
              "strongly disconnects ⟹ the ring has a nontrivial idempotent",
              "theorem", None, _run_t14),
    CheckSpec("T15", "the disconnecting pair is an idempotent pair",
              "under the same hypotheses the disconnecting ideals are ⟨e⟩ and "
              "⟨1-e⟩ for the extracted idempotent e",
              "theorem", None, _run_t15),
    CheckSpec("T16", "zero ideal forces connectedness",
              "if the zero ideal is a point then the ideal space is connected "
              "(converse noted where it fails)",
              "theorem", None, _run_t16),
    CheckSpec("T17", "idempotents without strong disconnection",
              "on a product ring the proper spectrum has nontrivial idempotents "
              "yet the coordinate hull pair fails to cover, so the subbase does "
              "not strongly disconnect",
              "example", frozenset({SpectrumKind.PRP}), _run_t17),
    CheckSpec("T18", "contraction map continuity",
              "when preimages of points are points, b ↦ f⁻¹(b) is continuous and "
              "(f*)⁻¹(h(a)) = h(⟨f(a)⟩)",
              "theorem", None, _run_t18),
    CheckSpec("T19", "surjections give closed subspaces",
              "for surjective f, the target ideal space is homeomorphic to the "
              "closed subset h(ker f) of the source space",
              "theorem", None, _run_t19),
    CheckSpec("T20", "density criterion",
              "the image of the contraction map is dense iff ker f is contained "
              "in the intersection of all points",
              "theorem", None, _run_t20),
    CheckSpec("T21", "localization homeomorphism",
              "the ideal space of the localization at S is homeomorphic to the "
              "points of X(R) disjoint from S",
              "theorem", None, _run_t21),
    CheckSpec("T22", "quotient spectra are hulls",
              "X(R/a) is homeomorphic to the closed subspace h(a) of X(R)",
              "theorem", None, _run_t22),
    CheckSpec("T23", "partition of unity and quasi-compactness",
              "a spectrum has the partition-of-unity property iff it contains "
              "every maximal ideal; with it, the space is quasi-compact",
              "theorem", None, _run_t23),
    CheckSpec("T24", "meet-inclusion failure reproductions",
              "designed counterexamples: minimal ideals of the triple product of "
              "the two-element field, and ⟨2⟩, ⟨3⟩, ⟨6⟩ for the proper, "
              "principal, finitely generated, and radical spectra",
              "example", _T24_KINDS, _run_t24),
]

REGISTRY = {c.id: c for c in _CHECKS}
ALL_CHECK_IDS = tuple(c.id for c in _CHECKS)


def run_check(check_id, ring, kind, caps=DEFAULT_CAPS):
    """Run one registry check on a (ring, kind) instance."""
    if check_id not in REGISTRY:
        raise IdealSpacesError(f"unknown check {check_id!r}")
    spec = REGISTRY[check_id]
    kind = SpectrumKind(kind)
    if not spec.applicable(kind):
        return _vac(check_id, notes=f"not applicable to kind {kind.value}")
    points = make_spectrum(ring, kind, caps).points
    if not points:
        return _vac(check_id, notes="empty spectrum")
    return spec.runner(ring, kind, caps)


# ---------------------------------------------------------------------------
# suite runner


@dataclass(frozen=True)
class SuiteConfig:
    ring_exprs: tuple = DEFAULT_SUITE_EXPRS
    kinds: tuple = tuple(k.value for k in ALL_KINDS)
    checks: tuple = ALL_CHECK_IDS
    caps: object = DEFAULT_CAPS
    jobs: int = 1
    timings: bool = False


@dataclass(frozen=True)
class SuiteRecord:
    id: str
    anchor: str
    ring: str
    kind: str
    status: str
    witness: dict | None
    notes: str
    runtime_ms: float | None = None

    def to_json(self):
        return json.dumps(
            {"id": self.id, "anchor": self.anchor, "ring": self.ring,
             "kind": self.kind, "status": self.status, "witness": self.witness,
             "notes": self.notes, "runtime_ms": self.runtime_ms},
            sort_keys=True, ensure_ascii=True)

    @classmethod
    def from_json(cls, line):
        d = json.loads(line)
        return cls(id=d["id"], anchor=d["anchor"], ring=d["ring"], kind=d["kind"],
                   status=d["status"], witness=d["witness"], notes=d["notes"],
                   runtime_ms=d["runtime_ms"])


def run_suite(cfg=SuiteConfig()):
    """Checks x rings x kinds with applicability filtering, in stable order."""
    from .exprs import parse_ring_expression

    rings = []
    errors = []
    for expr in cfg.ring_exprs:
        try:
            rings.append((expr, parse_ring_expression(expr, cfg.caps)))
        except IdealSpacesError as exc:
            errors.append(SuiteRecord(id="ring", anchor="ring construction",
                                      ring=expr, kind="", status="error",
                                      witness=None, notes=str(exc)))

    items = []
    for cid in cfg.checks:
        for expr, R in rings:
            for kv in cfg.kinds:
                if REGISTRY[cid].applicable(kv):
                    items.append((cid, expr, R, kv))

    def run_item(item):
        cid, expr, R, kv = item
        t0 = perf_counter()
        try:
            rep = run_check(cid, R, kv, cfg.caps)
            status, witness, notes = rep.status, rep.witness, rep.notes
        except IdealSpacesError as exc:
            status, witness, notes = "error", None, str(exc)
        ms = round((perf_counter() - t0) * 1000.0, 3) if cfg.timings else None
        return SuiteRecord(id=cid, anchor=REGISTRY[cid].statement, ring=expr,
                           kind=kv, status=status, witness=witness, notes=notes,
                           runtime_ms=ms)

    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(run_item, items))
    else:
        records = [run_item(it) for it in items]
    return errors + records


# ---------------------------------------------------------------------------
# homeomorphism utility


def verify_homeomorphism(f, T1, T2):
    """True iff the point bijection f (index map T1 -> T2) transports closed
    sets both ways."""
    n1, n2 = len(T1.spectrum), len(T2.spectrum)
    f = tuple(f)
    if len(f) != n1 or n1 != n2 or len(set(f)) != n1:
        return False
    closed2 = set(T2.closed_masks)
    for c in T1.closed_masks:
        img = 0
        for i in range(n1):
            if c >> i & 1:
                img |= 1 << f[i]
        if img not in closed2:
            return False
    inv = {v: i for i, v in enumerate(f)}
    closed1 = set(T1.closed_masks)
    for c in T2.closed_masks:
        pre = 0
        for j in range(n2):
            if c >> j & 1:
                pre |= 1 << inv[j]
        if pre not in closed1:
            return False
    return True


# ---------------------------------------------------------------------------
# counterexample search


def _family_rings(family, caps):
    from .exprs import parse_ring_expression

    if family.startswith("zmod:"):
        lo, _, hi = family[5:].partition("..")
        return [parse_ring_expression(f"Z{n}", caps) for n in range(int(lo), int(hi) + 1)]
    if family.startswith("exprs:"):
        return [parse_ring_expression(e, caps) for e in family[6:].split(",") if e]
    raise IdealSpacesError(f"unknown family spec {family!r}; "
                           "use zmod:LO..HI or exprs:A,B,...")


def search_counterexamples(check_id, family, kinds=None, caps=DEFAULT_CAPS):
    """All (ring, kind) pairs in the family where the check's target property
    fails, ordered by fewest spectrum points, then ring label, then kind."""
    if check_id not in REGISTRY:
        raise IdealSpacesError(f"unknown check {check_id}")
    kinds = tuple(kinds) if kinds else tuple(k.value for k in ALL_KINDS)
    rings = _family_rings(family, caps)
    results = []
    for R in rings:
        for kv in kinds:
            if not REGISTRY[check_id].applicable(kv):
                continue
            spec = make_spectrum(R, kv, caps)
            if not spec.points:
                continue
            if check_id in ("T03", "T24"):
                rep = check_mip(spec)
                bad = rep.fails
                witness, notes = rep.witness, rep.notes
            else:
                rep = run_check(check_id, R, kv, caps)
                bad = rep.fails
                witness, notes = rep.witness, rep.notes
            if bad:
                results.append({"ring": R.label, "kind": kv,
                                "points": len(spec), "witness": witness,
                                "notes": notes})
    results.sort(key=lambda r: (r["points"], r["ring"], r["kind"]))
    return results


def registry_markdown():
    """Traceability table generated from the registry (never hand-edited)."""
    lines = ["| id | form | kinds | title | statement |",
             "|----|------|-------|-------|-----------|"]
    for c in _CHECKS:
        kinds = "all" if c.kinds is None else ",".join(
            sorted(k.value for k in c.kinds))
        lines.append(f"| {c.id} | {c.form} | {kinds} | {c.title} | {c.statement} |")
    return "\n".join(lines) + "\n"
