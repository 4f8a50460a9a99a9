"""Ring-expression grammar shared by the CLI and test fixtures.

    ring := "Z" int | ring "x" ring | ring "/(" gens ")" | ring "@(" gens ")"

``/(...)`` quotients by the ideal generated by the listed elements and
``@(...)`` localizes at the multiplicative closure of the listed elements.
``x`` groups first, so ``Z6xZ6/((2,2))`` quotients the product; elements of
products are written as comma tuples such as ``(2,2)``.
"""

from __future__ import annotations

from .caps import DEFAULT_CAPS
from .errors import ParseError
from .ideals import generate_ideal
from .rings import localize, make_product, make_quotient, make_zmod, multiplicative_closure


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s):
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def expect(self, s):
        if not self.take(s):
            raise ParseError(f"expected {s!r}", self.pos)

    def int_(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def done(self):
        return self.pos >= len(self.text)


def _parse_element(sc, ring):
    """An element index: a plain integer, or a tuple for product rings."""
    if sc.take("("):
        comps = [sc.int_()]
        while sc.take(","):
            comps.append(sc.int_())
        sc.expect(")")
        if ring.components is None:
            raise ParseError(f"{ring.label} is not a product; tuple element invalid", sc.pos)
        if len(comps) != len(ring.components):
            raise ParseError(
                f"tuple arity {len(comps)} != {len(ring.components)} factors", sc.pos)
        idx = 0
        for x, c in zip(reversed(comps), reversed(ring.components)):
            if not 0 <= x < c.size:
                raise ParseError(f"component {x} out of range for {c.label}", sc.pos)
            idx = idx * c.size + x
        return idx
    v = sc.int_()
    return v % ring.size


def _parse_gens(sc, ring):
    gens = [_parse_element(sc, ring)]
    while sc.take(","):
        gens.append(_parse_element(sc, ring))
    return gens


def parse_ring_expression(text, caps=DEFAULT_CAPS):
    """Build the ring denoted by ``text``; its label is the normalized text."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty ring expression", 0)
    sc = _Scanner(s)

    def atom():
        sc.expect("Z")
        n = sc.int_()
        return make_zmod(n, caps=caps)

    factors = [atom()]
    while sc.take("x"):
        factors.append(atom())
    ring = factors[0] if len(factors) == 1 else make_product(factors, caps=caps)

    while not sc.done():
        if sc.take("/("):
            gens = _parse_gens(sc, ring)
            sc.expect(")")
            ring, _ = make_quotient(ring, generate_ideal(ring, gens), caps=caps)
        elif sc.take("@("):
            gens = _parse_gens(sc, ring)
            sc.expect(")")
            ring, _ = localize(ring, multiplicative_closure(ring, gens), caps=caps)
        else:
            raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)

    # relabel with the normalized source expression
    ring.label = s
    return ring
