"""Standard and semistandard complexes.

A standard complex is the zig-zag complex on generators x_0, ..., x_n built
from an even-length sequence of signed parameters, U-side at odd positions
and V-side at even positions (1-based).  A negative parameter decorates an
arrow from x_{k-1} to x_k, a positive one the reverse arrow.  Standard
complexes are the canonical representatives of local equivalence classes;
the odd-length variant (semistandard) is used as a search prefix and is not
knotlike.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .complexes import FreeComplex
from .ring import (
    EQUAL,
    LESS,
    Monomial,
    RingId,
    Side,
    SignedParam,
    elem_from_mono,
    mono_grading,
    param_compare,
    param_flip,
    param_ok,
    param_text,
)


@dataclass(frozen=True)
class StandardSpec:
    ring: RingId
    params: tuple  # of SignedParam, even length

    def __repr__(self):
        return format_spec(self)


@dataclass(frozen=True)
class SemistandardSpec:
    ring: RingId
    params: tuple  # of SignedParam, odd length

    def __repr__(self):
        return format_spec(self)


def _expected_side(k):
    """Side of the parameter at 1-based position k."""
    return Side.U if k % 2 else Side.V


def validate_spec(spec):
    params = spec.params
    if isinstance(spec, StandardSpec):
        if len(params) % 2:
            raise ValueError("standard complex needs an even parameter sequence")
    elif isinstance(spec, SemistandardSpec):
        if len(params) % 2 == 0:
            raise ValueError("semistandard complex needs an odd parameter sequence")
    else:
        raise TypeError("spec must be StandardSpec or SemistandardSpec")
    for k, p in enumerate(params, start=1):
        if p.side is not _expected_side(k):
            raise ValueError(
                "parameter %d must lie on side %s" % (k, _expected_side(k).value)
            )
        if not param_ok(spec.ring, p):
            raise ValueError("parameter %d is invalid in ring %s: %r" % (k, spec.ring.value, p))


def make_spec(ring, params):
    """Build the standard or semistandard spec fitting the sequence length."""
    params = tuple(params)
    spec = StandardSpec(ring, params) if len(params) % 2 == 0 else SemistandardSpec(ring, params)
    validate_spec(spec)
    return spec


def realize(spec):
    """The free complex of a parameter sequence, with normalized gradings.

    Standard: gr1(x_0) = 0 and gr2(x_n) = 0.  Semistandard: gr(x_0) = (0, 0).
    """
    validate_spec(spec)
    params = spec.params
    n = len(params)
    diff = {}
    grades = [(0, 0)]
    for k, p in enumerate(params, start=1):
        mono = Monomial(p.side, p.exp)
        g1, g2 = mono_grading(mono)
        prev = grades[k - 1]
        if p.sign < 0:
            diff[(k - 1, k)] = elem_from_mono(mono)
            grades.append((prev[0] - 1 - g1, prev[1] - 1 - g2))
        else:
            diff[(k, k - 1)] = elem_from_mono(mono)
            grades.append((prev[0] + 1 + g1, prev[1] + 1 + g2))
    if isinstance(spec, StandardSpec):
        drop = grades[n][1]
        grades = [(g1, g2 - drop) for (g1, g2) in grades]
    gens = tuple(("x%d" % i, grades[i]) for i in range(n + 1))
    return FreeComplex(spec.ring, gens, diff)


def read_params(C):
    """Recover the parameter sequence from a realized zig-zag complex."""
    n = C.n_gens() - 1
    params = []
    for k in range(1, n + 1):
        fwd = C.diff.get((k - 1, k))
        bwd = C.diff.get((k, k - 1))
        if (fwd is None) == (bwd is None):
            raise ValueError("complex is not a zig-zag between x%d and x%d" % (k - 1, k))
        e = fwd if fwd is not None else bwd
        side = _expected_side(k)
        part = e.u if side is Side.U else e.v
        if len(part) != 1 or e.scalar or (e.u if side is Side.V else e.v):
            raise ValueError("arrow %d is not a single %s-side monomial" % (k, side.value))
        exp = next(iter(part))
        params.append(SignedParam(side, -1 if fwd is not None else 1, exp))
    return make_spec(C.ring, params)


def lex_compare(a, b):
    """Lexicographic order on standard specs; short sequences pad with 1s."""
    if a.ring is not b.ring:
        raise ValueError("cannot compare specs over different rings")
    n = max(len(a.params), len(b.params))
    for k in range(n):
        pa = a.params[k] if k < len(a.params) else None
        pb = b.params[k] if k < len(b.params) else None
        c = param_compare(pa, pb)
        if c != EQUAL:
            return c
    return EQUAL


def dual_spec(spec):
    """Parameters of the dual complex: every sign flips."""
    return make_spec(spec.ring, [param_flip(p) for p in spec.params])


def reverse_spec(spec):
    """Traverse the zig-zag backwards: reversed, inverted parameters.

    Side tags are re-derived from the new positions (the two halves trade
    places when the length is even).
    """
    rev = list(reversed(spec.params))
    out = [
        SignedParam(_expected_side(k), -p.sign, p.exp)
        for k, p in enumerate(rev, start=1)
    ]
    return make_spec(spec.ring, out)


def is_symmetric(spec):
    """Whether the sequence equals its side-swapped, sign-flipped reversal."""
    params = spec.params
    n = len(params)
    for k in range(n):
        p, q = params[k], params[n - 1 - k]
        if p.exp != q.exp or p.sign != -q.sign:
            return False
    return True


@dataclass(frozen=True)
class ShiftMap:
    """Threshold-multiplier shift on one side's parameters.

    Positive parameters <=! the threshold are multiplied by ``mult``; the
    rest are fixed.  Inverses shift so that the map commutes with inversion.
    The threshold may be a positive or negative SignedParam or None (= 1).
    """

    side: Side
    threshold: object  # SignedParam | None
    mult: Monomial

    def apply(self, p):
        if p.side is not self.side:
            raise ValueError("shift map applied to the wrong side")
        if self.mult.side is not self.side:
            raise ValueError("shift multiplier lies on the wrong side")
        abs_p = SignedParam(p.side, 1, p.exp)
        if param_compare(abs_p, self.threshold) in (LESS, EQUAL):
            exp = (p.exp[0] + self.mult.exp[0], p.exp[1] + self.mult.exp[1])
            return SignedParam(p.side, p.sign, exp)
        return p


def shift_spec(spec, m_u=None, m_v=None):
    """Apply shift maps to the U-side and/or V-side parameters."""
    out = []
    for k, p in enumerate(spec.params, start=1):
        m = m_u if k % 2 else m_v
        out.append(m.apply(p) if m is not None else p)
    return make_spec(spec.ring, out)


def promote_spec(spec):
    """Reinterpret a spec over R as a spec over X (all exponents have j = 0)."""
    if spec.ring is not RingId.R:
        raise ValueError("promote_spec expects a spec over ring R")
    return make_spec(RingId.X, spec.params)


def format_spec(spec):
    if not spec.params:
        return "C(0)"
    return "C(%s)" % ", ".join(param_text(p) for p in spec.params)


_PARAM_RE = re.compile(r"^\s*([+-])([UV])\[(-?\d+),(-?\d+)\]\s*$")


def parse_spec(text, ring=RingId.X):
    """Parse the C(...) text form, e.g. ``C(-U[2,1], +V[2,1])``."""
    text = text.strip()
    if not (text.startswith("C(") and text.endswith(")")):
        raise ValueError("spec must look like C(...): %r" % text)
    inner = text[2:-1].strip()
    if inner in ("", "0"):
        return StandardSpec(ring, ())
    # exponents contain commas: re-join split pieces until brackets balance
    joined = []
    buf = ""
    for piece in inner.split(","):
        buf = piece if not buf else buf + "," + piece
        if buf.count("[") == buf.count("]") and buf.strip():
            joined.append(buf)
            buf = ""
    if buf:
        raise ValueError("unbalanced brackets in spec: %r" % text)
    out = []
    for tok in joined:
        m = _PARAM_RE.match(tok)
        if not m:
            raise ValueError("bad parameter %r in spec" % tok)
        sign = 1 if m.group(1) == "+" else -1
        side = Side.U if m.group(2) == "U" else Side.V
        out.append(SignedParam(side, sign, (int(m.group(3)), int(m.group(4)))))
    return make_spec(ring, out)
