"""Finite commutative rings with identity, stored as dense operation tables.

A ring is a pair of ``size x size`` numpy tables over element indices
``0..size-1`` together with distinguished ``zero`` and ``one`` indices.  All
constructors validate the axioms exhaustively; the tables are small by design
(capped at 64 elements by default), so the vectorised triple loops are cheap.

Rings compare by identity and are immutable after construction, so they are
safe to share and to use as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from .caps import DEFAULT_CAPS
from .errors import (
    CapExceeded,
    ImproperIdeal,
    InvalidArity,
    InvalidSize,
    RingAxiomError,
    ZeroInMultiplicativeSet,
)


class FiniteRing:
    """A finite commutative ring with identity over element indices."""

    def __init__(self, add, mul, zero, one, label, names=None, components=None,
                 caps=DEFAULT_CAPS):
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
        size = add.shape[0]
        if size < 2:
            raise InvalidSize("rings must have at least 2 elements (0 != 1)")
        if size > caps.max_ring_size:
            raise CapExceeded(f"ring size {size} exceeds cap {caps.max_ring_size}")
        if add.shape != (size, size) or mul.shape != (size, size):
            raise RingAxiomError("operation tables must be square and equally sized")
        self.size = size
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(size))
        self.components = tuple(components) if components is not None else None
        self._validate()
        # additive inverse table, derived after validation
        self.neg = np.array([int(np.where(add[a] == self.zero)[0][0]) for a in range(size)],
                            dtype=np.int64)
        add.flags.writeable = False
        mul.flags.writeable = False
        self.neg.flags.writeable = False

    def _validate(self):
        n, add, mul, zero, one = self.size, self.add, self.mul, self.zero, self.one
        if not (0 <= zero < n and 0 <= one < n):
            raise RingAxiomError("zero/one indices out of range")
        if zero == one:
            raise RingAxiomError("zero and one must differ")
        for table, op in ((add, "+"), (mul, "*")):
            if table.min() < 0 or table.max() >= n:
                raise RingAxiomError(f"table for {op} contains out-of-range entries")
            if not np.array_equal(table, table.T):
                raise RingAxiomError(f"{op} is not commutative")
            # associativity: op(op(a,b),c) == op(a,op(b,c)) for all triples
            if not np.array_equal(table[table, :], table[:, table]):
                raise RingAxiomError(f"{op} is not associative")
        if not np.array_equal(add[zero], np.arange(n)):
            raise RingAxiomError("zero is not an additive identity")
        if not np.array_equal(mul[one], np.arange(n)):
            raise RingAxiomError("one is not a multiplicative identity")
        # additive inverses: every row of add must contain zero
        if not np.all((add == zero).any(axis=1)):
            raise RingAxiomError("some element has no additive inverse")
        # distributivity: a*(b+c) == a*b + a*c
        lhs = mul[:, add]
        rhs = add[mul[:, :, None], mul[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise RingAxiomError("multiplication does not distribute over addition")

    # identity semantics: no __eq__/__hash__ overrides on purpose

    def __repr__(self):
        return f"FiniteRing({self.label}, size={self.size})"

    @property
    def elements(self):
        return range(self.size)

    def name(self, x):
        return self.names[x]

    def pow(self, x, k):
        """x**k with x**0 = 1."""
        acc = self.one
        for _ in range(k):
            acc = int(self.mul[acc, x])
        return acc

    def sub(self, a, b):
        return int(self.add[a, self.neg[b]])

    def is_unit(self, x):
        return self.one in self.mul[x]

    @cached_property
    def units(self):
        return tuple(x for x in self.elements if self.is_unit(x))

    @cached_property
    def idempotents(self):
        return tuple(x for x in self.elements if self.mul[x, x] == x)

    def is_nilpotent(self, x):
        seen = set()
        while x not in seen:
            if x == self.zero:
                return True
            seen.add(x)
            x = int(self.mul[x, x])
        return x == self.zero

    def is_zero_divisor(self, x):
        """True when x*y = 0 for some nonzero y (zero itself counts)."""
        row = self.mul[x]
        return any(row[y] == self.zero for y in self.elements if y != self.zero)


@dataclass(frozen=True)
class Ideal:
    """An ideal given by its member set; ``proper`` is False exactly for R."""

    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        R = self.ring
        m = self.members
        if R.zero not in m:
            raise RingAxiomError("ideal must contain zero")
        for a in m:
            if any(R.add[a, b] not in m for b in m):
                raise RingAxiomError("ideal not closed under addition")
            if any(R.mul[r, a] not in m for r in R.elements):
                raise RingAxiomError("ideal does not absorb ring multiplication")

    @property
    def proper(self):
        return len(self.members) < self.ring.size

    @cached_property
    def mask(self):
        """Element-membership bitmask; bit i set iff element i belongs."""
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    @cached_property
    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def __contains__(self, x):
        return x in self.members

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def __lt__(self, other):
        return self.members < other.members

    def __len__(self):
        return len(self.members)

    @cached_property
    def name(self):
        R = self.ring
        if not self.proper:
            return "R"
        if len(self.members) == 1:
            return "o"
        gens = _minimal_generators(self)
        return "⟨" + ",".join(R.name(g) for g in gens) + "⟩"

    def __repr__(self):
        return f"Ideal({self.name} of {self.ring.label})"


def _span(R, seed):
    """Smallest ideal member-set containing ``seed``: multiples, then sums."""
    acc = {R.zero}
    mults = set()
    for g in seed:
        mults.update(int(R.mul[r, g]) for r in R.elements)
    acc |= mults
    frontier = list(acc)
    while frontier:
        x = frontier.pop()
        for y in list(acc):
            s = int(R.add[x, y])
            if s not in acc:
                acc.add(s)
                frontier.append(s)
    return frozenset(acc)


def _minimal_generators(a):
    """Canonical small generating set, singletons first, then greedy."""
    R = a.ring
    for x in sorted(a.members):
        if _span(R, (x,)) == a.members:
            return (x,)
    gens = []
    have = frozenset({R.zero})
    while have != a.members:
        x = min(a.members - have)
        gens.append(x)
        have = _span(R, gens)
    return tuple(gens)


def zero_ideal(R):
    return Ideal(R, frozenset({R.zero}))


def unit_ideal(R):
    """The improper ideal R itself (proper flag False)."""
    return Ideal(R, frozenset(R.elements))


@dataclass(frozen=True)
class RingHom:
    """A unity-preserving ring homomorphism given by an index map."""

    source: FiniteRing
    target: FiniteRing
    map: tuple
    label: str = ""

    def __post_init__(self):
        src, tgt = self.source, self.target
        m = np.array(self.map, dtype=np.int64)
        if m.shape != (src.size,) or m.min() < 0 or m.max() >= tgt.size:
            raise RingAxiomError("hom map must send every source index to a target index")
        if m[src.one] != tgt.one:
            raise RingAxiomError("hom must map identity to identity")
        if not np.array_equal(m[src.add], tgt.add[m[:, None], m[None, :]]):
            raise RingAxiomError("map does not respect addition")
        if not np.array_equal(m[src.mul], tgt.mul[m[:, None], m[None, :]]):
            raise RingAxiomError("map does not respect multiplication")
        if not self.label:
            object.__setattr__(self, "label", f"{src.label} -> {tgt.label}")

    def __call__(self, x):
        return self.map[x]

    def kernel(self):
        return Ideal(self.source, frozenset(x for x in self.source.elements
                                            if self.map[x] == self.target.zero))

    def is_surjective(self):
        return len(set(self.map)) == self.target.size

    def __repr__(self):
        return f"RingHom({self.label})"


@dataclass(frozen=True)
class MultiplicativeSet:
    """A multiplicatively closed subset containing 1, built from generators."""

    ring: FiniteRing
    members: frozenset
    gens: tuple = ()

    def __contains__(self, x):
        return x in self.members


def multiplicative_closure(R, gens):
    """Close ``gens`` under multiplication and adjoin 1."""
    members = {R.one}
    frontier = [R.one]
    for g in gens:
        if g not in members:
            members.add(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            p = int(R.mul[x, y])
            if p not in members:
                members.add(p)
                frontier.append(p)
    return MultiplicativeSet(R, frozenset(members), tuple(gens))


# ---------------------------------------------------------------------------
# constructors


def make_zmod(n, caps=DEFAULT_CAPS, label=None):
    """The ring of integers modulo n."""
    if n < 2:
        raise InvalidSize(f"Z{n} is not a ring with 0 != 1")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 0, 1, label or f"Z{n}", caps=caps)


def make_product(rings, caps=DEFAULT_CAPS, label=None):
    """Componentwise product; element index is little-endian mixed radix.

    The first factor is the least significant digit, so ``(1,0,0)`` in
    ``Z2 x Z2 x Z2`` has index 1.
    """
    rings = tuple(rings)
    if not rings:
        raise InvalidArity("product of an empty list of rings")
    sizes = [R.size for R in rings]
    total = 1
    for s in sizes:
        total *= s
    if total > caps.max_ring_size:
        raise CapExceeded(f"product size {total} exceeds cap {caps.max_ring_size}")

    def decode(i):
        out = []
        for s in sizes:
            out.append(i % s)
            i //= s
        return tuple(out)

    def encode(tup):
        i = 0
        for x, s in zip(reversed(tup), reversed(sizes)):
            i = i * s + x
        return i

    add = [[0] * total for _ in range(total)]
    mul = [[0] * total for _ in range(total)]
    for i in range(total):
        ti = decode(i)
        for j in range(total):
            tj = decode(j)
            add[i][j] = encode(tuple(int(R.add[a, b]) for R, a, b in zip(rings, ti, tj)))
            mul[i][j] = encode(tuple(int(R.mul[a, b]) for R, a, b in zip(rings, ti, tj)))
    names = ["(" + ",".join(R.name(x) for R, x in zip(rings, decode(i))) + ")"
             for i in range(total)]
    zero = encode(tuple(R.zero for R in rings))
    one = encode(tuple(R.one for R in rings))
    return FiniteRing(add, mul, zero, one,
                      label or "x".join(R.label for R in rings),
                      names=names, components=rings, caps=caps)


def product_encode(R, tup):
    """Index of a component tuple in a ring built by make_product."""
    if R.components is None:
        raise InvalidArity(f"{R.label} is not a product ring")
    sizes = [c.size for c in R.components]
    i = 0
    for x, s in zip(reversed(tup), reversed(sizes)):
        i = i * s + x
    return i


def make_quotient(R, a, caps=DEFAULT_CAPS, label=None):
    """Quotient R/a with minimal coset representatives, plus the surjection."""
    if not a.proper:
        raise ImproperIdeal("cannot form the quotient by the whole ring")
    coset_of = {}
    reps = []
    for r in R.elements:
        if r in coset_of:
            continue
        coset = sorted(int(R.add[r, m]) for m in a.members)
        rep = coset[0]
        reps.append(rep)
        for x in coset:
            coset_of[x] = rep
    reps.sort()
    index_of = {rep: i for i, rep in enumerate(reps)}
    k = len(reps)
    add = [[index_of[coset_of[int(R.add[reps[i], reps[j]])]] for j in range(k)]
           for i in range(k)]
    mul = [[index_of[coset_of[int(R.mul[reps[i], reps[j]])]] for j in range(k)]
           for i in range(k)]
    names = [R.name(rep) for rep in reps]
    Q = FiniteRing(add, mul, index_of[coset_of[R.zero]], index_of[coset_of[R.one]],
                   label or f"{R.label}/{a.name}", names=names, caps=caps)
    hom = RingHom(R, Q, tuple(index_of[coset_of[r]] for r in R.elements))
    return Q, hom


def localize(R, S, caps=DEFAULT_CAPS, label=None):
    """Localization of R at the multiplicative set S.

    In a finite commutative ring the total product p of S has an idempotent
    power e, and the localization is the ring eR with identity e; the
    canonical map is r -> e*r.  Every member of S becomes a unit there.
    """
    if R.zero in S.members:
        raise ZeroInMultiplicativeSet("0 in S would collapse the ring")
    p = reduce(lambda x, y: int(R.mul[x, y]), sorted(S.members), R.one)
    e = p
    for _ in range(2 * R.size):
        if R.mul[e, e] == e:
            break
        e = int(R.mul[e, p])
    else:  # pragma: no cover - impossible: powers of p must hit an idempotent
        raise RingAxiomError("no idempotent power found")
    members = sorted({int(R.mul[e, r]) for r in R.elements})
    index_of = {x: i for i, x in enumerate(members)}
    k = len(members)
    add = [[index_of[int(R.add[members[i], members[j]])] for j in range(k)] for i in range(k)]
    mul = [[index_of[int(R.mul[members[i], members[j]])] for j in range(k)] for i in range(k)]
    names = [R.name(x) for x in members]
    gens_label = ",".join(R.name(g) for g in S.gens) if S.gens else ",".join(
        R.name(x) for x in sorted(S.members))
    L = FiniteRing(add, mul, index_of[R.zero], index_of[e],
                   label or f"{R.label}@({gens_label})", names=names, caps=caps)
    hom = RingHom(R, L, tuple(index_of[int(R.mul[e, r])] for r in R.elements))
    for s in S.members:
        if not L.is_unit(hom(s)):  # pragma: no cover - guaranteed by construction
            raise RingAxiomError("localized image of S member is not a unit")
    return L, hom


# ---------------------------------------------------------------------------
# homomorphism search


def _hom_search(src, tgt, injective, find_all, cap):
    """Backtracking search for unity-preserving homs with forced propagation.

    Assigning the image of one element forces images of sums and products of
    already-assigned elements; contradictions prune the branch early.
    Deterministic: unknowns are filled smallest-first, images tried ascending.
    """
    if src.size * tgt.size > cap:
        raise CapExceeded(
            f"hom search space {src.size}x{tgt.size} exceeds cap {cap}")
    results = []

    def propagate(f):
        # returns closed map or None on contradiction
        changed = True
        while changed:
            changed = False
            known = [x for x in src.elements if f[x] >= 0]
            for a in known:
                for b in known:
                    for table, ttable in ((src.add, tgt.add), (src.mul, tgt.mul)):
                        c = int(table[a, b])
                        v = int(ttable[f[a], f[b]])
                        if f[c] < 0:
                            f[c] = v
                            changed = True
                        elif f[c] != v:
                            return None
        return f

    def ok_injective(f):
        assigned = [v for v in f if v >= 0]
        return len(assigned) == len(set(assigned))

    def dfs(f):
        f = propagate(list(f))
        if f is None or (injective and not ok_injective(f)):
            return False
        try:
            x = f.index(-1)
        except ValueError:
            results.append(tuple(f))
            return not find_all
        for img in range(tgt.size):
            if dfs(f[:x] + [img] + f[x + 1:]):
                return True
        return False

    start = [-1] * src.size
    start[src.zero] = tgt.zero
    start[src.one] = tgt.one
    dfs(start)
    return results


def enumerate_homs(R, S, caps=DEFAULT_CAPS):
    """All unity-preserving ring homomorphisms R -> S, in canonical order."""
    maps = _hom_search(R, S, injective=False, find_all=True, cap=caps.max_hom_product)
    return [RingHom(R, S, m) for m in sorted(maps)]


def is_isomorphic(R, S, caps=DEFAULT_CAPS):
    """Brute-force ring isomorphism test (intended for tests and demos)."""
    if R.size != S.size:
        return False
    found = _hom_search(R, S, injective=True, find_all=False, cap=caps.max_hom_product)
    return bool(found)


def is_von_neumann_regular(R):
    """Every a admits x with a = a*x*a; finite cases are products of fields."""
    return all(any(R.mul[int(R.mul[a, x]), a] == a for x in R.elements)
               for a in R.elements)
