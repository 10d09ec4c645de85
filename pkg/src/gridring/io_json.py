"""JSON document schema for complexes and parameter sequences.

A complex document carries a schema version, the coefficient ring, the base
("S" for a grid-ring complex, "FUV" for a complex over F2[U,V] awaiting base
change), an optional correction-term shift dY, named graded generators, and
the sparse differential with explicit monomial records.
"""

from __future__ import annotations

import json

from .complexes import FreeComplex, FUVComplex
from .ring import RingElem, RingId, Side, SignedParam
from .standard import make_spec

SCHEMA_VERSION = 1


class DocumentError(ValueError):
    pass


def complex_to_document(C, dy=0):
    if isinstance(C, FUVComplex):
        ring, base = RingId.X, "FUV"
    elif isinstance(C, FreeComplex):
        ring, base = C.ring, "S"
    else:
        raise TypeError("expected a complex")
    gens = [{"name": nm, "gr": list(gr)} for nm, gr in C.generators]
    differential = []
    for (i, j), e in sorted(C.diff.items()):
        if base == "FUV":
            coeff = [{"U": a, "V": b} for (a, b) in sorted(e)]
        else:
            coeff = []
            if e.scalar:
                coeff.append({"part": "K"})
            coeff += [{"part": "U", "e": list(exp)} for exp in sorted(e.u)]
            coeff += [{"part": "V", "e": list(exp)} for exp in sorted(e.v)]
        differential.append({"from": C.name(i), "to": C.name(j), "coeff": coeff})
    return {
        "schemaVersion": SCHEMA_VERSION,
        "ring": ring.value,
        "base": base,
        "dY": dy,
        "generators": gens,
        "differential": differential,
    }


def _grading(rec, name):
    gr = rec.get("gr")
    if (
        not isinstance(gr, list)
        or len(gr) != 2
        or not all(isinstance(g, int) for g in gr)
    ):
        raise DocumentError("generator %r needs an integer grading pair" % name)
    return tuple(gr)


def document_to_complex(doc):
    """Parse a document; returns (complex, dY)."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schemaVersion") != SCHEMA_VERSION:
        raise DocumentError(
            "unsupported schemaVersion %r (expected %d)"
            % (doc.get("schemaVersion"), SCHEMA_VERSION)
        )
    ring = doc.get("ring")
    if ring not in ("R", "X"):
        raise DocumentError("ring must be 'R' or 'X'")
    base = doc.get("base", "S")
    if base not in ("S", "FUV"):
        raise DocumentError("base must be 'S' or 'FUV'")
    if base == "FUV" and ring != "X":
        raise DocumentError("FUV documents are base-changed into ring X")
    dy = doc.get("dY", 0)
    if not isinstance(dy, int):
        raise DocumentError("dY must be an integer")
    gens = []
    index = {}
    for rec in doc.get("generators", []):
        name = rec.get("name")
        if not isinstance(name, str) or not name:
            raise DocumentError("every generator needs a name")
        if name in index:
            raise DocumentError("duplicate generator name %r" % name)
        index[name] = len(gens)
        gens.append((name, _grading(rec, name)))
    diff = {}
    for rec in doc.get("differential", []):
        try:
            i = index[rec["from"]]
            j = index[rec["to"]]
        except KeyError as exc:
            raise DocumentError("differential references unknown generator %s" % exc)
        if base == "FUV":
            exps = set()
            for m in rec.get("coeff", []):
                a, b = m.get("U"), m.get("V")
                if not isinstance(a, int) or not isinstance(b, int) or a < 0 or b < 0:
                    raise DocumentError("bad FUV monomial record %r" % m)
                exps.symmetric_difference_update([(a, b)])
            if exps:
                diff[(i, j)] = frozenset(exps)
        else:
            scalar = 0
            u = set()
            v = set()
            for m in rec.get("coeff", []):
                part = m.get("part")
                if part == "K":
                    scalar ^= 1
                elif part in ("U", "V"):
                    e = m.get("e")
                    if not isinstance(e, list) or len(e) != 2:
                        raise DocumentError("bad monomial record %r" % m)
                    (u if part == "U" else v).symmetric_difference_update([tuple(e)])
                else:
                    raise DocumentError("bad monomial record %r" % m)
            e = RingElem(scalar, frozenset(u), frozenset(v))
            if e:
                diff[(i, j)] = e
    if base == "FUV":
        return FUVComplex(tuple(gens), diff), dy
    return FreeComplex(RingId(ring), tuple(gens), diff), dy


def spec_to_document(spec):
    return {
        "ring": spec.ring.value,
        "params": [{"sign": p.sign, "e": list(p.exp)} for p in spec.params],
    }


def document_to_spec(doc):
    if not isinstance(doc, dict) or "params" not in doc:
        raise DocumentError("spec document needs a params list")
    ring = doc.get("ring", "X")
    if ring not in ("R", "X"):
        raise DocumentError("ring must be 'R' or 'X'")
    params = []
    for k, rec in enumerate(doc["params"], start=1):
        sign = rec.get("sign")
        e = rec.get("e")
        if sign not in (1, -1) or not isinstance(e, list) or len(e) != 2:
            raise DocumentError("bad parameter record %r" % rec)
        side = Side.U if k % 2 else Side.V
        params.append(SignedParam(side, sign, tuple(e)))
    try:
        return make_spec(RingId(ring), params)
    except ValueError as exc:
        raise DocumentError(str(exc))


def load_document(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON in %s: %s" % (path, exc))


def dump_json(obj):
    return json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n"
