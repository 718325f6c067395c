"""Text grammar for rings, module descriptors, monoids, and matrices.

Ring literals:
    Z | Zi | Fp[t] p=<prime> | F q=<cardinal> | local residue=<cardinal>
    | dedekind {m1:r1, m2:r2, ...} min=<cardinal> [spectrum=finite|infinite]

Descriptors:  "<ring>: <summand> (+ <summand>)*" with summands
    R/(lit)  R  Q  Pruefer(lit)  primes(N[, infinite])  0
optionally suffixed ^k for k a positive integer or aleph0.  Element
literals are integers over Z, a+bi forms over Zi, polynomials in t over
Fp[t], and label products like m1^2*m2 over the abstract kinds.

Monoid lists: "N + C(2,3) + C(0,4)".

Rendering a parsed descriptor produces a string that parses back to an
equal value (the text may normalize, e.g. primes(4) expands).
"""

from __future__ import annotations

import re
from . import fppoly, monoids, rings
from .cardinal import Cardinal, ZERO, finite, parse_cardinal
from .errors import SpecSemanticError, SpecSyntaxError
from .modules import ModuleDescriptor, make_descriptor
from .monoids import MonoidDescriptor
from .rings import FactoredIdeal, RingHandle

_INT = re.compile(r"-?\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_CARD = re.compile(r"aleph0|uncountable|\d+")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> SpecSyntaxError:
        return SpecSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def try_lit(self, lit: str) -> bool:
        self.skip_ws()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit: str):
        if not self.try_lit(lit):
            raise self.error(f"expected {lit!r}")

    def regex(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group(0)

    def int_(self) -> int:
        return int(self.regex(_INT, "an integer"))

    def cardinal(self) -> Cardinal:
        return parse_cardinal(self.regex(_CARD, "a cardinal"))


def parse_ring(text: str) -> RingHandle:
    cur = _Cursor(text)
    ring = _ring(cur)
    if not cur.done():
        raise cur.error("trailing input after ring")
    return ring


def _ring(cur: _Cursor) -> RingHandle:
    if cur.try_lit("Zi"):
        return rings.gaussian_integers()
    if cur.try_lit("Z"):
        return rings.integers()
    if cur.try_lit("Fp[t]"):
        cur.expect("p=")
        return rings.poly_over_prime_field(cur.int_())
    if cur.try_lit("F"):
        cur.expect("q=")
        return rings.field_ring(cur.cardinal())
    if cur.try_lit("local"):
        cur.expect("residue=")
        residue = cur.cardinal()
        label = "m"
        if cur.try_lit("label="):
            label = cur.regex(_NAME, "a label")
        return rings.abstract_local(residue, label)
    if cur.try_lit("dedekind"):
        cur.expect("{")
        primes = []
        while True:
            label = cur.regex(_NAME, "a prime label")
            cur.expect(":")
            primes.append((label, cur.cardinal()))
            if not cur.try_lit(","):
                break
        cur.expect("}")
        cur.expect("min=")
        min_residue = cur.cardinal()
        infinite = True
        if cur.try_lit("spectrum="):
            word = cur.regex(_NAME, "finite or infinite")
            if word not in ("finite", "infinite"):
                raise cur.error("spectrum must be finite or infinite")
            infinite = word == "infinite"
        try:
            return rings.abstract_dedekind(primes, min_residue, infinite)
        except ValueError as exc:
            raise SpecSemanticError(str(exc)) from exc
    raise cur.error("expected a ring literal")


def parse_spec(text: str) -> tuple[RingHandle, ModuleDescriptor]:
    """Parse '<ring>: <summands>' into a validated descriptor."""
    cur = _Cursor(text)
    ring = _ring(cur)
    cur.expect(":")
    free = ZERO
    field = ZERO
    torsion = []
    pruefer = []
    tail = 0
    if cur.try_lit("0"):
        if not cur.done():
            raise cur.error("trailing input after zero module")
        return ring, make_descriptor(ring)
    while True:
        cur.skip_ws()
        if cur.try_lit("R/("):
            lit = _element_literal(cur, ring)
            cur.expect(")")
            mult = _multiplicity(cur)
            try:
                ideal = lit if isinstance(lit, FactoredIdeal) else \
                    rings.factor_ideal(ring, lit)
            except Exception as exc:
                raise SpecSemanticError(str(exc)) from exc
            torsion.append((ideal, mult))
        elif cur.try_lit("Pruefer("):
            lit = _element_literal(cur, ring)
            cur.expect(")")
            mult = _multiplicity(cur)
            pruefer.append((_single_prime(ring, lit), mult))
        elif cur.try_lit("R"):
            free = _card_sum(free, _multiplicity(cur))
        elif cur.try_lit("Q"):
            field = _card_sum(field, _multiplicity(cur))
        elif cur.try_lit("primes("):
            bound = cur.int_()
            infinite = False
            if cur.try_lit(","):
                cur.expect("infinite")
                infinite = True
            cur.expect(")")
            try:
                ids = rings.maximal_ideals_with_residue_at_most(ring, bound)
            except Exception as exc:
                raise SpecSemanticError(str(exc)) from exc
            for m in ids:
                torsion.append((FactoredIdeal.from_factors({m: 1}), finite(1)))
            if infinite:
                tail = max(tail, bound) if tail else bound
        else:
            raise cur.error("expected a summand")
        if cur.done():
            break
        cur.expect("+")
    try:
        return ring, make_descriptor(ring, free_rank=free, torsion=torsion,
                                     field_copies=field, pruefer=pruefer,
                                     tail_above=tail)
    except SpecSemanticError:
        raise
    except Exception as exc:
        raise SpecSemanticError(str(exc)) from exc


def _card_sum(a: Cardinal, b: Cardinal) -> Cardinal:
    from .cardinal import cardinal_sum
    return cardinal_sum([a, b])


def _multiplicity(cur: _Cursor) -> Cardinal:
    if cur.try_lit("^"):
        return cur.cardinal()
    return finite(1)


def _single_prime(ring: RingHandle, lit) -> rings.MaximalIdealId:
    try:
        ideal = lit if isinstance(lit, FactoredIdeal) else \
            rings.factor_ideal(ring, lit)
    except Exception as exc:
        raise SpecSemanticError(str(exc)) from exc
    if len(ideal.factors) != 1 or ideal.factors[0][1] != 1:
        raise SpecSemanticError("Pruefer summands need a maximal ideal")
    return ideal.factors[0][0]


def _element_literal(cur: _Cursor, ring: RingHandle):
    if ring.kind == rings.INTEGERS:
        return cur.int_()
    if ring.kind == rings.GAUSSIAN:
        return _gauss_literal(cur)
    if ring.kind == rings.POLY:
        return _poly_literal(cur, ring.p)
    return _abstract_literal(cur, ring)


def _gauss_literal(cur: _Cursor) -> tuple[int, int]:
    a, b = 0, 0
    first = True
    while True:
        cur.skip_ws()
        sign = 1
        if cur.try_lit("+"):
            sign = 1
        elif cur.try_lit("-"):
            sign = -1
        elif not first:
            break
        cur.skip_ws()
        m = _INT.match(cur.text, cur.pos)
        if m:
            cur.pos = m.end()
            coeff = sign * int(m.group(0))
            if cur.try_lit("i"):
                b += coeff
            else:
                a += coeff
        elif cur.try_lit("i"):
            b += sign
        elif first:
            raise cur.error("expected a Gaussian integer")
        else:
            raise cur.error("expected a term after sign")
        first = False
    return (a, b)


def _poly_literal(cur: _Cursor, p: int) -> tuple:
    coeffs: dict[int, int] = {}
    first = True
    while True:
        cur.skip_ws()
        sign = 1
        if cur.try_lit("+"):
            sign = 1
        elif cur.try_lit("-"):
            sign = -1
        elif not first:
            break
        cur.skip_ws()
        coeff = 1
        m = _INT.match(cur.text, cur.pos)
        if m:
            cur.pos = m.end()
            coeff = int(m.group(0))
            if not cur.try_lit("t"):
                coeffs[0] = coeffs.get(0, 0) + sign * coeff
                first = False
                continue
        elif cur.try_lit("t"):
            pass
        elif first:
            raise cur.error("expected a polynomial in t")
        else:
            raise cur.error("expected a term after sign")
        e = 1
        if cur.try_lit("^"):
            e = cur.int_()
        coeffs[e] = coeffs.get(e, 0) + sign * coeff
        first = False
    out = [0] * (max(coeffs) + 1 if coeffs else 0)
    for e, c in coeffs.items():
        out[e] = c
    return fppoly.trim(out, p)


def _abstract_literal(cur: _Cursor, ring: RingHandle) -> FactoredIdeal:
    factors: dict[rings.MaximalIdealId, int] = {}
    while True:
        label = cur.regex(_NAME, "a prime label")
        e = 1
        if cur.try_lit("^"):
            e = cur.int_()
        m = rings.maximal_ideal_abstract(label, _declared_residue(ring, label))
        factors[m] = factors.get(m, 0) + e
        if not cur.try_lit("*"):
            break
    return FactoredIdeal.from_factors(factors)


def _declared_residue(ring: RingHandle, label: str) -> Cardinal:
    if ring.kind == rings.LOCAL and label == ring.label:
        return ring.residue
    if ring.kind == rings.DEDEKIND:
        for lab, res in ring.primes:
            if lab == label:
                return res
    raise SpecSemanticError(f"{label} is not a declared prime of {ring}")


def parse_element(text: str, ring: RingHandle):
    """Parse a standalone element literal for the given ring."""
    cur = _Cursor(text)
    v = _element_literal(cur, ring)
    if not cur.done():
        raise cur.error("trailing input after element")
    return v


def parse_monoid(text: str) -> MonoidDescriptor:
    cur = _Cursor(text)
    summands = []
    while True:
        cur.skip_ws()
        if cur.try_lit("N"):
            summands.append(monoids.FREE_N)
        elif cur.try_lit("C("):
            r = cur.int_()
            cur.expect(",")
            n = cur.int_()
            cur.expect(")")
            try:
                summands.append(monoids.finite_cyclic(r, n))
            except ValueError as exc:
                raise SpecSemanticError(str(exc)) from exc
        else:
            raise cur.error("expected N or C(r,n)")
        if cur.done():
            break
        cur.expect("+")
    return MonoidDescriptor(tuple(summands))


def parse_matrix(text: str, ring: RingHandle) -> list[list]:
    """Parse [[...],[...]] with integer or polynomial entries."""
    cur = _Cursor(text)
    cur.expect("[")
    out = []
    while True:
        cur.expect("[")
        row = []
        while True:
            if ring.kind == rings.POLY:
                row.append(_poly_literal(cur, ring.p))
            else:
                row.append(cur.int_())
            if not cur.try_lit(","):
                break
        cur.expect("]")
        out.append(row)
        if not cur.try_lit(","):
            break
    cur.expect("]")
    if not cur.done():
        raise cur.error("trailing input after matrix")
    if any(len(r) != len(out[0]) for r in out):
        raise SpecSemanticError("matrix rows have unequal lengths")
    return out


def render_ring(ring: RingHandle) -> str:
    return str(ring)


def render_descriptor(d: ModuleDescriptor) -> str:
    if d.is_zero:
        return f"{render_ring(d.ring)}: 0"
    # the primes(N, infinite) token re-adds one copy of R/m for each m with
    # residue <= N on reparse, so those copies are not rendered explicitly
    tail_ids = set()
    if d.tail_above:
        tail_ids = {FactoredIdeal.from_factors({m: 1}) for m in
                    rings.maximal_ideals_with_residue_at_most(d.ring, d.tail_above)}
    parts = []
    for ideal, mult in d.torsion:
        if ideal in tail_ids:
            mult = _card_minus_one(mult)
            if mult == ZERO:
                continue
        if d.ring.kind in (rings.INTEGERS, rings.GAUSSIAN, rings.POLY):
            gen = rings.element_str(
                d.ring, rings.ideal_generator_element(d.ring, ideal))
        else:
            gen = str(ideal)
        parts.append(_suffix(f"R/({gen})", mult))
    if d.free_rank > ZERO:
        parts.append(_suffix("R", d.free_rank))
    if d.field_copies > ZERO:
        parts.append(_suffix("Q", d.field_copies))
    for m, mult in d.pruefer:
        parts.append(_suffix(f"Pruefer({m.generator_str()})", mult))
    if d.tail_above:
        parts.append(f"primes({d.tail_above}, infinite)")
    return f"{render_ring(d.ring)}: " + " + ".join(parts)


def _suffix(base: str, mult: Cardinal) -> str:
    if mult == finite(1):
        return base
    return f"{base}^{mult}"


def _card_minus_one(mult: Cardinal) -> Cardinal:
    return finite(mult.finite_value - 1) if mult.is_finite else mult
