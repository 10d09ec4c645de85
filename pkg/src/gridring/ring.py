"""Exact arithmetic in the two built-in grid rings.

A grid ring is glued from two halves, a "U side" and a "V side", whose
maximal ideals multiply to zero.  Ring ``R`` is F2[U,V]/(UV): the U side is
F2[U] and the V side is F2[V].  Ring ``X`` has larger halves: the U side is
spanned over F2 by monomials U_B^i W_B^j, the V side by V_T^i W_T^j, with
exponent pairs (i, j) drawn from the lattice region

    (Z x Z>=0) - (Z<0 x {0}),

i.e. j >= 0, and i >= 0 when j = 0.  Negative powers of the first variable
are allowed as soon as j >= 1.  Every element is an F2 combination of a
scalar, U-side monomials and V-side monomials; cross-side products vanish.

Homogeneous elements of one side, and their formal inverses, carry the total
order ``<!`` used everywhere downstream: positives are ordered by reverse
divisibility (the generator U_B, encoded (1, 0), is the greatest element),
negatives sit below the positives and mirror them (the inverse of U_B,
encoded (-1, 0), is the least element).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

LESS, EQUAL, GREATER = -1, 0, 1


class RingId(Enum):
    R = "R"
    X = "X"


class Side(Enum):
    ONE = "1"
    U = "U"
    V = "V"


def in_region(exp):
    """True if exp lies in the valid exponent region, origin included."""
    i, j = exp
    return j > 0 or (j == 0 and i >= 0)


@dataclass(frozen=True)
class Monomial:
    """A homogeneous monomial of one side of a grid ring, or the scalar 1."""

    side: Side
    exp: tuple = (0, 0)

    def __repr__(self):
        return mono_text(self)


MONO_ONE = Monomial(Side.ONE, (0, 0))


def u_mono(i, j=0):
    return Monomial(Side.U, (i, j))


def v_mono(i, j=0):
    return Monomial(Side.V, (i, j))


def monomial_ok(ring, m):
    """Validity of a monomial in the given ring."""
    if m.side is Side.ONE:
        return m.exp == (0, 0)
    if m.exp == (0, 0) or not in_region(m.exp):
        return False
    if ring is RingId.R and m.exp[1] != 0:
        return False
    return True


def mono_grading(m):
    if m.side is Side.ONE:
        return (0, 0)
    i, j = m.exp
    if m.side is Side.U:
        return (-2 * i, -2 * j)
    return (-2 * j, -2 * i)


def mono_text(m):
    if m.side is Side.ONE:
        return "1"
    return "%s[%d,%d]" % (m.side.value, m.exp[0], m.exp[1])


@dataclass(frozen=True)
class SignedParam:
    """A nontrivial homogeneous monomial of one side, or its inverse.

    ``sign=+1`` denotes the monomial itself, ``sign=-1`` its formal inverse.
    The neutral value 1 is not a SignedParam; operations that need it accept
    ``None`` as a sentinel.
    """

    side: Side
    sign: int
    exp: tuple

    def __repr__(self):
        return param_text(self)


def param_ok(ring, p):
    return (
        p.side in (Side.U, Side.V)
        and p.sign in (1, -1)
        and monomial_ok(ring, Monomial(p.side, p.exp))
    )


def param_text(p):
    return "%s%s[%d,%d]" % ("+" if p.sign > 0 else "-", p.side.value, p.exp[0], p.exp[1])


def param_mono(p):
    """|p| as a Monomial."""
    return Monomial(p.side, p.exp)


def param_flip(p):
    return SignedParam(p.side, -p.sign, p.exp)


def param_grading(p):
    """Bigrading of a SignedParam: the monomial grading, negated for inverses."""
    g1, g2 = mono_grading(param_mono(p))
    return (p.sign * g1, p.sign * g2)


def _axis_key(i):
    # 1/i as an exact rational; i != 0 here.
    return Fraction(1, i)


def _row_key(point):
    # Comparison key for the "which row" stage: 1/j, with the x-axis split
    # into +infinity (positive half) and -infinity (negative half).
    i, j = point
    if j == 0:
        return (2, Fraction(0)) if i > 0 else (0, Fraction(0))
    return (1, _axis_key(j))


def lattice_compare(a, b):
    """The total order <! on Z x Z - {(0,0)}.

    Distinct rows compare by 1/j (x-axis counting as +/- infinity according
    to the sign of i); within a row j != 0 the order descends as i grows;
    on the x-axis points compare by 1/i.  (1, 0) is the greatest element and
    (-1, 0) the least.  Agrees with reverse divisibility on the region and
    with its mirror image on the complement.
    """
    a = tuple(a)
    b = tuple(b)
    if a == (0, 0) or b == (0, 0):
        raise ValueError("lattice_compare is undefined at the origin")
    if a == b:
        return EQUAL
    (i, j), (k, l) = a, b
    if j != l:
        return LESS if _row_key(a) < _row_key(b) else GREATER
    if j != 0:
        return LESS if i > k else GREATER
    return LESS if _axis_key(i) < _axis_key(k) else GREATER


def param_compare(a, b):
    """Extend <! to signed parameters and the neutral sentinel None (= 1).

    Negatives <! 1 <! positives; same-signed parameters reduce to
    lattice_compare on the signed exponent pairs.
    """
    if a is None and b is None:
        return EQUAL
    if a is None:
        return LESS if b.sign > 0 else GREATER
    if b is None:
        return GREATER if a.sign > 0 else LESS
    if a.side is not b.side:
        raise ValueError("cannot compare parameters from different sides")
    pa = (a.sign * a.exp[0], a.sign * a.exp[1])
    pb = (b.sign * b.exp[0], b.sign * b.exp[1])
    return lattice_compare(pa, pb)


def mono_divides(a, b):
    """True if a divides b.  Both must be nontrivial monomials of one side."""
    if a.side is not b.side or a.side is Side.ONE:
        raise ValueError("divisibility needs two monomials of the same side")
    return in_region((b.exp[0] - a.exp[0], b.exp[1] - a.exp[1]))


def mono_gcd(monos):
    """Greatest common divisor of a nonempty same-side family.

    Same-side monomials form a divisibility chain, so the gcd is just the
    <!-greatest member.
    """
    monos = list(monos)
    if not monos:
        raise ValueError("gcd of an empty set")
    side = monos[0].side
    if side is Side.ONE or any(m.side is not side for m in monos):
        raise ValueError("gcd needs nontrivial monomials of one side")
    best = monos[0]
    for m in monos[1:]:
        if lattice_compare(m.exp, best.exp) == GREATER:
            best = m
    return best


@dataclass(frozen=True)
class RingElem:
    """An F2 combination: scalar part plus sets of U- and V-side exponents."""

    scalar: int = 0
    u: frozenset = frozenset()
    v: frozenset = frozenset()

    def __bool__(self):
        return bool(self.scalar or self.u or self.v)

    def __add__(self, other):
        return RingElem(self.scalar ^ other.scalar, self.u ^ other.u, self.v ^ other.v)

    def __mul__(self, other):
        return elem_mul(self, other)

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        if self.scalar:
            parts.append("1")
        parts += ["U[%d,%d]" % e for e in sorted(self.u)]
        parts += ["V[%d,%d]" % e for e in sorted(self.v)]
        return "+".join(parts)


ZERO = RingElem()
ONE_ELEM = RingElem(scalar=1)


def elem_from_mono(m):
    if m.side is Side.ONE:
        return ONE_ELEM
    if m.side is Side.U:
        return RingElem(u=frozenset([m.exp]))
    return RingElem(v=frozenset([m.exp]))


def elem_from_side_exp(side, exp):
    """Ring element for a side exponent, with (0, 0) meaning the scalar 1."""
    if exp == (0, 0):
        return ONE_ELEM
    return elem_from_mono(Monomial(side, exp))


def _shift_all(exps, exp):
    out = set()
    for e in exps:
        t = (e[0] + exp[0], e[1] + exp[1])
        out.symmetric_difference_update([t])
    return frozenset(out)


def elem_mul(a, b):
    """Product of two ring elements; opposite-side products vanish."""
    u = set()
    v = set()
    if a.scalar:
        u ^= b.u
        v ^= b.v
    if b.scalar:
        u ^= a.u
        v ^= a.v
    for ea in a.u:
        u ^= _shift_all(b.u, ea)
    for ea in a.v:
        v ^= _shift_all(b.v, ea)
    return RingElem(a.scalar & b.scalar, frozenset(u), frozenset(v))


def mono_mul(a, b):
    """Product of two monomials, as a RingElem (zero for cross-side products)."""
    return elem_mul(elem_from_mono(a), elem_from_mono(b))


def elem_monomials(e):
    mons = []
    if e.scalar:
        mons.append(MONO_ONE)
    mons += [Monomial(Side.U, exp) for exp in sorted(e.u)]
    mons += [Monomial(Side.V, exp) for exp in sorted(e.v)]
    return mons


def elem_side_part(e, side):
    """The U-part or V-part of an element, as a RingElem."""
    if side is Side.U:
        return RingElem(u=e.u)
    if side is Side.V:
        return RingElem(v=e.v)
    raise ValueError("side must be U or V")


def elem_ok(ring, e):
    return all(monomial_ok(ring, m) for m in elem_monomials(e) if m.side is not Side.ONE)


def elem_grading(e):
    """Common bigrading of a homogeneous element; None for zero.

    Raises ValueError when the constituents live in different bigradings.
    """
    grs = {mono_grading(m) for m in elem_monomials(e)}
    if not grs:
        return None
    if len(grs) > 1:
        raise ValueError("element is not homogeneous: %r" % (e,))
    return grs.pop()


def grading_basis(ring, gr):
    """The F2 basis of the ring in one bigrading (zero, one or two monomials)."""
    g1, g2 = gr
    if (g1, g2) == (0, 0):
        return [MONO_ONE]
    if g1 % 2 or g2 % 2:
        return []
    out = []
    ue = (-g1 // 2, -g2 // 2)
    if monomial_ok(ring, Monomial(Side.U, ue)):
        out.append(Monomial(Side.U, ue))
    ve = (-g2 // 2, -g1 // 2)
    if monomial_ok(ring, Monomial(Side.V, ve)):
        out.append(Monomial(Side.V, ve))
    return out
