"""Independent brute-force oracles.

These deliberately take the dumbest correct route (filter all subsets, joint
fixpoints, quotient-table scans) so they share no code path with the library
functions they certify.
"""

def brute_force_ideal_sets(R):
    """Every subset of R's elements satisfying the ideal axioms."""
    n = R.size
    assert n <= 16, "oracle is exponential; keep rings tiny"
    out = []
    elems = list(range(n))
    for mask in range(1 << n):
        if not mask >> R.zero & 1:
            continue
        members = [x for x in elems if mask >> x & 1]
        mset = set(members)
        if any(int(R.add[a, b]) not in mset for a in members for b in members):
            continue
        if any(int(R.mul[r, a]) not in mset for a in members for r in elems):
            continue
        out.append(frozenset(members))
    return set(out)


def brute_force_is_prime(R, members):
    """Primality via the coset multiplication table: no zero divisors mod a."""
    if len(members) == R.size:
        return False
    reps = {}
    for r in range(R.size):
        coset = frozenset(int(R.add[r, m]) for m in members)
        reps.setdefault(coset, r)
    classes = list(reps.values())
    zero_class = frozenset(members)
    for x in classes:
        for y in classes:
            cx = frozenset(int(R.add[x, m]) for m in members)
            cy = frozenset(int(R.add[y, m]) for m in members)
            if cx != zero_class and cy != zero_class:
                prod = int(R.mul[x, y])
                if prod in members:
                    return False
    return True


def joint_closure_family(subbase_masks, full_mask):
    """Closed family by a single fixpoint under pairwise union and intersection."""
    fam = set(subbase_masks) | {full_mask}
    changed = True
    while changed:
        changed = False
        items = list(fam)
        for i, a in enumerate(items):
            for b in items[i:]:
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return fam


def up_set_family(spec):
    """All up-closed subsets of the point poset (inclusion order).

    For any spectrum the closed-subbase topology's closed sets are exactly
    these, because every principal up-set is a hull.
    """
    pts = spec.points
    n = len(pts)
    above = [[j for j in range(n) if pts[i] <= pts[j]] for i in range(n)]
    fam = set()
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1:
                if any(not mask >> j & 1 for j in above[i]):
                    ok = False
                    break
        if ok:
            fam.add(mask)
    return fam


def brute_force_radical_members(R, members):
    out = set()
    for x in range(R.size):
        p = R.one
        for _ in range(R.size):
            p = int(R.mul[p, x])
            if p in members:
                out.add(x)
                break
    return frozenset(out)
