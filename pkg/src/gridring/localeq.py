"""Local maps and the canonical standard representative.

Existence of a (short) local map between two complexes is decided by exact
F2 linear algebra: the unknowns are the monomial coordinates of each matrix
entry in its forced bigrading, the equations match the chain-map identities
coefficient by coefficient, and locality contributes one inhomogeneous
equation (the image of the distinguished generator must hit the target's
tower generator with coefficient 1).  The canonical representative of a
knotlike complex is then extracted greedily, one parameter at a time, trying
candidates drawn from the extant coefficients in descending order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import _gf2
from .complexes import (
    NotKnotlikeError,
    _compose,
    is_knotlike,
    paired_basis,
    reduce,
    shift_gradings,
    tower_functional,
    validate,
)
from .ring import (
    MONO_ONE,
    Monomial,
    Side,
    SignedParam,
    ZERO,
    elem_from_mono,
    elem_grading,
    elem_ok,
    elem_side_part,
    grading_basis,
    monomial_ok,
    mono_text,
    param_compare,
)
from .standard import (
    StandardSpec,
    format_spec,
    lex_compare,
    make_spec,
    realize,
)


class VerificationError(RuntimeError):
    """An internally computed certificate failed its independent check."""


@dataclass(frozen=True, eq=False)
class LocalMapCert:
    """A grading-shifted module map witnessing one local-order inequality."""

    source: str
    target: str
    gr2shift: int
    matrix: dict  # (source index, target index) -> RingElem
    kind: str  # "full" | "short"

    def to_json(self):
        entries = []
        for (i, j), e in sorted(self.matrix.items()):
            coeff = []
            if e.scalar:
                coeff.append("1")
            coeff += [mono_text(Monomial(Side.U, exp)) for exp in sorted(e.u)]
            coeff += [mono_text(Monomial(Side.V, exp)) for exp in sorted(e.v)]
            entries.append({"from": i, "to": j, "coeff": coeff})
        return {
            "source": self.source,
            "target": self.target,
            "gr2shift": self.gr2shift,
            "kind": self.kind,
            "entries": entries,
        }


@dataclass(frozen=True)
class ExtantSet:
    u_coeffs: frozenset  # of exponent pairs
    v_coeffs: frozenset

    def for_side(self, side):
        return self.u_coeffs if side is Side.U else self.v_coeffs


def _side_exp(e, side):
    part = e.u if side is Side.U else e.v
    if not part:
        return None
    if len(part) != 1:
        raise ValueError("side part of a homogeneous entry must be a single monomial")
    return next(iter(part))


def _ring_exp_for_grading(ring, side, gr):
    """Exponent of the side element in one bigrading; (0,0) = scalar; None if empty."""
    g1, g2 = gr
    if g1 % 2 or g2 % 2:
        return None
    exp = (-g1 // 2, -g2 // 2) if side is Side.U else (-g2 // 2, -g1 // 2)
    if exp == (0, 0):
        return exp
    return exp if monomial_ok(ring, Monomial(side, exp)) else None


def _require_normalized(C, what):
    ok, shift = is_knotlike(C)
    if not ok:
        raise NotKnotlikeError("%s must be knotlike" % what)
    if shift != (0, 0):
        raise ValueError("%s must be normalized; apply the knotlike shift %s first" % (what, shift))


def _tower_data(C, side=Side.V):
    """(functional mask, element mask, tower grading) of one side's tower."""
    pb = paired_basis(C, side)
    w, t = tower_functional(C, pb)
    elem_mask = 0
    for j, e in enumerate(pb.basis[t]):
        if e.scalar:
            elem_mask |= 1 << j
    return w, elem_mask, pb.gradings[t]


def extant_coefficients(C):
    """Finite candidate pool of side coefficients for the greedy search.

    For each side and each generator bigrading, the pairing orders are
    rescaled by the unique side element moving the paired y-generator into
    that bigrading; the union over bigradings contains every coefficient a
    (short) local map can use.
    """
    _require_normalized(C, "complex")
    gen_grades = [C.gr(i) for i in range(C.n_gens())]
    sides = {}
    for side in (Side.U, Side.V):
        pb = paired_basis(C, side)
        coeffs = set()
        for (y, _z, order) in pb.pairs:
            gy = pb.gradings[y]
            for g0 in gen_grades:
                cm = _ring_exp_for_grading(C.ring, side, (g0[0] - gy[0], g0[1] - gy[1]))
                if cm is None:
                    continue
                coeffs.add((order.exp[0] + cm[0], order.exp[1] + cm[1]))
        sides[side] = frozenset(coeffs)
    return ExtantSet(sides[Side.U], sides[Side.V])


def _solve_map(src, tgt, gr2shift, src_mask, tgt_w, skip=None):
    """Solve for a gr1-preserving chain map; returns a matrix dict or None.

    ``skip`` omits one (generator, side) chain condition (short maps).
    ``src_mask``/``tgt_w`` encode the locality constraint: the image of the
    source tower element must carry the target tower with coefficient 1.
    """
    ring = src.ring
    ns, nt = src.n_gens(), tgt.n_gens()
    slots = {}
    index = {}
    nbits = 0
    for i in range(ns):
        gi = src.gr(i)
        for j in range(nt):
            gj = tgt.gr(j)
            basis = grading_basis(ring, (gi[0] - gj[0], gi[1] + gr2shift - gj[1]))
            if basis:
                slots[(i, j)] = basis
                for m in basis:
                    index[(i, j, m)] = nbits
                    nbits += 1
    tgt_from = {}
    for (j, k), e in tgt.diff.items():
        tgt_from.setdefault(j, []).append((k, e))
    src_from = {}
    for (i, i2), e in src.diff.items():
        src_from.setdefault(i, []).append((i2, e))
    rows = {}

    def touch(key, bit):
        rows[key] = rows.get(key, 0) ^ (1 << bit)

    for i in range(ns):
        for side in (Side.U, Side.V):
            if skip == (i, side):
                continue
            for j in range(nt):
                for m in slots.get((i, j), ()):
                    if m.side is not Side.ONE and m.side is not side:
                        continue
                    bit = index[(i, j, m)]
                    for (k, e) in tgt_from.get(j, ()):
                        dm = _side_exp(e, side)
                        if dm is None:
                            continue
                        pexp = dm if m.side is Side.ONE else (m.exp[0] + dm[0], m.exp[1] + dm[1])
                        touch((i, side.value, k, pexp), bit)
            for (i2, e) in src_from.get(i, ()):
                mu = _side_exp(e, side)
                if mu is None:
                    continue
                for j in range(nt):
                    for m in slots.get((i2, j), ()):
                        if m.side is not Side.ONE and m.side is not side:
                            continue
                        pexp = mu if m.side is Side.ONE else (mu[0] + m.exp[0], mu[1] + m.exp[1])
                        touch((i, side.value, j, pexp), index[(i2, j, m)])
    eqs = [mask for _key, mask in sorted(rows.items())]
    rhs = [0] * len(eqs)
    loc = 0
    for g in range(ns):
        if not (src_mask >> g) & 1:
            continue
        for h in range(nt):
            if not (tgt_w >> h) & 1:
                continue
            key = (g, h, MONO_ONE)
            if key in index:
                loc ^= 1 << index[key]
    eqs.append(loc)
    rhs.append(1)
    sol = _gf2.solve(eqs, rhs)
    if sol is None:
        return None
    matrix = {}
    for (i, j), basis in slots.items():
        e = ZERO
        for m in basis:
            if (sol >> index[(i, j, m)]) & 1:
                e = e + elem_from_mono(m)
        if e:
            matrix[(i, j)] = e
    return matrix


def _short_skip(spec):
    """The dropped chain condition of a short map out of this spec."""
    n = len(spec.params)
    off = Side.U if isinstance(spec, StandardSpec) else Side.V
    return (n, off)


def find_local_map(spec, target, kind="full"):
    """A local (or short local) map from a realized spec into a complex.

    Returns a certificate or None.  The target must be reduced, knotlike and
    normalized.
    """
    if kind not in ("full", "short"):
        raise ValueError("kind must be 'full' or 'short'")
    _require_normalized(target, "target")
    if spec.ring is not target.ring:
        raise ValueError("spec and target live over different rings")
    src = realize(spec)
    w, _elem_mask, tgr = _tower_data(target)
    skip = _short_skip(spec) if kind == "short" else None
    matrix = _solve_map(src, target, tgr[1] - src.gr(0)[1], 1, w, skip=skip)
    if matrix is None:
        return None
    return LocalMapCert(format_spec(spec), "target", tgr[1] - src.gr(0)[1], matrix, kind)


def _solve_between(src, tgt, src_label, tgt_label):
    """A full local map between two normalized knotlike complexes, or None."""
    w_t, _em, tgr = _tower_data(tgt)
    _w_s, elem_mask, sgr = _tower_data(src)
    matrix = _solve_map(src, tgt, tgr[1] - sgr[1], elem_mask, w_t, skip=None)
    if matrix is None:
        return None
    return LocalMapCert(src_label, tgt_label, tgr[1] - sgr[1], matrix, "full")


def check_certificate(src, tgt, cert, src_mask=None, check_left=False):
    """Independent verification of a certificate; returns violation strings.

    Checks gradings, the chain-map identities (minus the dropped condition
    for short certificates) by direct matrix algebra, and locality against a
    freshly computed paired basis of the target.  ``check_left`` additionally
    re-checks the U-side tower image of a full certificate (guaranteed by
    the theory, so off by default).
    """
    out = []
    s = cert.gr2shift
    for (i, j), e in cert.matrix.items():
        if not e:
            out.append("stored zero entry at (%d, %d)" % (i, j))
            continue
        if not elem_ok(tgt.ring, e):
            out.append("entry (%d, %d) not in the ring" % (i, j))
            continue
        gr = elem_grading(e)
        want = (src.gr(i)[0] - tgt.gr(j)[0], src.gr(i)[1] + s - tgt.gr(j)[1])
        if gr != want:
            out.append("entry (%d, %d) has grading %s, expected %s" % (i, j, gr, want))
    lhs = _compose(cert.matrix, tgt.diff)
    rhs = _compose(src.diff, cert.matrix)
    delta = dict(lhs)
    for key, e in rhs.items():
        acc = delta.get(key, ZERO) + e
        if acc:
            delta[key] = acc
        else:
            delta.pop(key, None)
    skip = None
    if cert.kind == "short":
        n = src.n_gens() - 1
        skip = (n, Side.U) if len(src.generators) % 2 else (n, Side.V)
    for (i, k), e in sorted(delta.items()):
        if e.scalar:
            out.append("chain defect has a unit part at (%d, %d)" % (i, k))
        for side in (Side.U, Side.V):
            part = elem_side_part(e, side)
            if part and skip != (i, side):
                out.append(
                    "chain condition fails at generator %d on side %s" % (i, side.value)
                )
    if src_mask is None:
        src_mask = 1
    try:
        w, _em, _gr = _tower_data(tgt)
    except (NotKnotlikeError, ValueError) as exc:
        out.append("target tower not available: %s" % exc)
        return out
    if _tower_coefficient(cert.matrix, src, tgt, src_mask, w) != 1:
        out.append("image of the source tower misses the target tower")
    if check_left and cert.kind == "full":
        try:
            w_u, _em, _g = _tower_data(tgt, Side.U)
            _wu_src, src_u_mask, _gs = _tower_data(src, Side.U)
        except (NotKnotlikeError, ValueError) as exc:
            out.append("U-side tower not available: %s" % exc)
            return out
        if _tower_coefficient(cert.matrix, src, tgt, src_u_mask, w_u) != 1:
            out.append("image of the source U-tower misses the target U-tower")
    return out


def _tower_coefficient(matrix, src, tgt, src_mask, w):
    img = 0
    for h in range(tgt.n_gens()):
        bit = 0
        for g in range(src.n_gens()):
            if (src_mask >> g) & 1:
                e = matrix.get((g, h))
                if e is not None and e.scalar:
                    bit ^= 1
        if bit:
            img |= 1 << h
    return bin(img & w).count("1") & 1


def _descending(side, exps):
    cands = [SignedParam(side, sgn, exp) for exp in sorted(exps) for sgn in (1, -1)]
    cands.sort(key=functools.cmp_to_key(param_compare), reverse=True)
    return cands


def standardize(C, trace=None):
    """The unique standard-complex representative, with certificates both ways.

    The input must be reduced, knotlike and normalized.  At odd steps the
    positive candidates are tried in descending order, then the option of
    stopping (a full local map from the current even prefix), then the
    negative candidates; at even steps all candidates.  Each accepted
    parameter is witnessed by a short local map from the extended prefix.
    """
    bad = validate(C)
    if bad:
        raise ValueError("invalid complex: " + "; ".join(bad))
    _require_normalized(C, "complex")
    ext = extant_coefficients(C)
    w_tgt, _em, tgr = _tower_data(C)
    guard = 2 * C.n_gens()

    def short_ok(prefix):
        spec = make_spec(C.ring, prefix)
        src = realize(spec)
        matrix = _solve_map(
            src, C, tgr[1] - src.gr(0)[1], 1, w_tgt, skip=_short_skip(spec)
        )
        return matrix is not None

    def full_matrix(spec):
        src = realize(spec)
        shift = tgr[1] - src.gr(0)[1]
        return _solve_map(src, C, shift, 1, w_tgt, skip=None), shift

    def try_candidates(k, cands):
        for p in cands:
            ok = short_ok(params + [p])
            if trace is not None:
                trace.append((k, p, ok))
            if ok:
                return p
        return None

    params = []
    while True:
        k = len(params) + 1
        if k > guard + 1:
            raise VerificationError("standardization exceeded the splitting bound")
        side = Side.U if k % 2 else Side.V
        cands = _descending(side, ext.for_side(side))
        if k % 2:
            # candidate order at odd steps: positives, then 1 (stop), then negatives
            chosen = try_candidates(k, [p for p in cands if p.sign > 0])
            if chosen is None:
                matrix, _shift = full_matrix(make_spec(C.ring, params))
                if trace is not None:
                    trace.append((k, None, matrix is not None))
                if matrix is not None:
                    break
                chosen = try_candidates(k, [p for p in cands if p.sign < 0])
        else:
            chosen = try_candidates(k, cands)
        if chosen is None:
            raise VerificationError("no feasible parameter at step %d" % k)
        params.append(chosen)
    spec = make_spec(C.ring, params)
    matrix, shift = full_matrix(spec)
    if matrix is None:
        raise VerificationError("final prefix admits no full local map")
    fwd = LocalMapCert(format_spec(spec), "complex", shift, matrix, "full")
    back = _solve_between(C, realize(spec), "complex", format_spec(spec))
    if back is None:
        raise VerificationError("no local map back to the standard representative")
    bad = check_certificate(realize(spec), C, fwd)
    if bad:
        raise VerificationError("forward certificate failed: " + "; ".join(bad))
    _w, elem_mask, _g = _tower_data(C)
    bad = check_certificate(C, realize(spec), back, src_mask=elem_mask)
    if bad:
        raise VerificationError("backward certificate failed: " + "; ".join(bad))
    return spec, fwd, back


def standard_representative(C, dy=0):
    """Reduce, shift, normalize and standardize an arbitrary valid complex.

    Returns (spec, forward cert, backward cert, total applied shift).  ``dy``
    is subtracted as the external correction-term shift (dy, dy) before the
    residual knotlike normalization is applied.
    """
    bad = validate(C)
    if bad:
        raise ValueError("invalid complex: " + "; ".join(bad))
    C = reduce(C)
    applied = (dy, dy)
    if dy:
        C = shift_gradings(C, applied)
    ok, shift = is_knotlike(C)
    if not ok:
        raise NotKnotlikeError("complex is not knotlike")
    if shift != (0, 0):
        C = shift_gradings(C, shift)
        applied = (applied[0] + shift[0], applied[1] + shift[1])
    spec, fwd, back = standardize(C)
    return spec, fwd, back, applied


def is_locally_equivalent(C1, C2, dy1=0, dy2=0):
    s1 = standard_representative(C1, dy1)[0]
    s2 = standard_representative(C2, dy2)[0]
    return s1.params == s2.params and s1.ring is s2.ring


def order_compare_complexes(C1, C2, dy1=0, dy2=0):
    """Total-order comparison via the standard representatives."""
    s1 = standard_representative(C1, dy1)[0]
    s2 = standard_representative(C2, dy2)[0]
    return lex_compare(s1, s2)
