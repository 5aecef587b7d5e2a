"""JSON interchange for every entity the toolkit builds or consumes.

One self-describing document per file: {"format": "tw2cat/1", "kind": ...,
...payload}.  Composition tables are explicit; nothing is closed up from
generators at load time.  Identifiers may be strings, integers, or nested
tuples; tuples are stored as JSON arrays and turned back into tuples on
load, so constructed entities round-trip to structurally equal values.

Payload schemas by kind:

- category: objects (list of ids), morphisms (list of {id, src, dst}),
  identities (list of [object, morphism] pairs), compose (list of
  [g, f, g_after_f] triples).
- two-category: objects, hom (list of {src, dst, category}), id1 (list of
  [object, one-cell] pairs), hcomp (list of {triple: [x, y, z], objects:
  [[f, g, fg]...], morphisms: [[m, n, mn]...]}).
- monoid: elements, op (square table of result elements, row i column j
  holding elements[i] * elements[j]), unit.
- ordmap: x, y, n, m, values (flavoured monotone map of ordinals).
- functor: dom (category payload), cod (category payload), on_objects
  (pair list), on_morphisms (pair list).
- cat-valued-two-functor: base (two-category payload), values (list of
  {at, category}), on_one (list of {src, dst, table: [[one-cell,
  {on_objects, on_morphisms}]...]}), on_two (list of {src, dst, table:
  [[two-cell, [[object, morphism]...]]...]}).
- ab-diagram: category payload plus groups (list of {at, gens, rels})
  and maps (list of {on, matrix}); matrices are row lists of integers,
  rels columns are relations among the gens generators.
"""

from __future__ import annotations

import json

from .errors import MalformedInput
from .fincat import FinCategory, FinFunctor, verify_category, verify_functor
from .groth import CatValuedTwoFunctor, verify_cat_valued
from .homology import Presentation
from .intlinalg import Mat
from .adj import OrdMap, verify_ord_map
from .tw2 import Monoid, verify_monoid
from .twocat import FinTwoCategory, verify_two_category

FORMAT = "tw2cat/1"
KINDS = ("category", "two-category", "monoid", "ordmap",
         "functor", "cat-valued-two-functor", "ab-diagram")


def encode_id(x):
    if isinstance(x, tuple):
        return [encode_id(v) for v in x]
    if isinstance(x, (str, int)) or x is None:
        return x
    raise MalformedInput(f"identifier {x!r} is not serializable")


def decode_id(x):
    if isinstance(x, list):
        return tuple(decode_id(v) for v in x)
    return x


def _pairs(mapping):
    return [[encode_id(k), encode_id(v)] for k, v in mapping.items()]


def _unpairs(entries):
    return {decode_id(k): decode_id(v) for k, v in entries}


def category_payload(cat):
    return {
        "objects": [encode_id(o) for o in cat.objects],
        "morphisms": [{"id": encode_id(m),
                       "src": encode_id(cat.src[m]),
                       "dst": encode_id(cat.dst[m])}
                      for m in cat.morphisms],
        "identities": _pairs(cat.identity),
        "compose": [[encode_id(g), encode_id(f), encode_id(gf)]
                    for (g, f), gf in cat.comp.items()],
    }


def category_from_payload(raw):
    if not isinstance(raw, dict):
        raise MalformedInput("category payload must be a mapping")
    objects = [decode_id(o) for o in raw.get("objects", [])]
    morphisms, src, dst = [], {}, {}
    for entry in raw.get("morphisms", []):
        try:
            m = decode_id(entry["id"])
            src[m] = decode_id(entry["src"])
            dst[m] = decode_id(entry["dst"])
        except (TypeError, KeyError):
            raise MalformedInput(f"bad morphism entry {entry!r}") from None
        morphisms.append(m)
    identity = _unpairs(raw.get("identities", []))
    comp = {}
    for g, f, gf in raw.get("compose", []):
        comp[(decode_id(g), decode_id(f))] = decode_id(gf)
    return verify_category(
        FinCategory(objects, morphisms, src, dst, identity, comp))


def two_category_payload(tc):
    hom = [{"src": encode_id(x), "dst": encode_id(y),
            "category": category_payload(c)}
           for (x, y), c in tc.hom.items()]
    hcomp = []
    for triple in tc.hcomp_obj:
        hcomp.append({
            "triple": [encode_id(v) for v in triple],
            "objects": [[encode_id(f), encode_id(g), encode_id(h)]
                        for (f, g), h in tc.hcomp_obj[triple].items()],
            "morphisms": [[encode_id(m), encode_id(n), encode_id(p)]
                          for (m, n), p in tc.hcomp_mor[triple].items()],
        })
    return {
        "objects": [encode_id(o) for o in tc.objects],
        "hom": hom,
        "id1": _pairs(tc.id1),
        "hcomp": hcomp,
    }


def two_category_from_payload(raw):
    if not isinstance(raw, dict):
        raise MalformedInput("two-category payload must be a mapping")
    objects = [decode_id(o) for o in raw.get("objects", [])]
    hom = {}
    for entry in raw.get("hom", []):
        key = (decode_id(entry["src"]), decode_id(entry["dst"]))
        hom[key] = category_from_payload(entry["category"])
    id1 = _unpairs(raw.get("id1", []))
    hcomp_obj, hcomp_mor = {}, {}
    for entry in raw.get("hcomp", []):
        triple = tuple(decode_id(v) for v in entry["triple"])
        hcomp_obj[triple] = {(decode_id(f), decode_id(g)): decode_id(h)
                             for f, g, h in entry.get("objects", [])}
        hcomp_mor[triple] = {(decode_id(m), decode_id(n)): decode_id(p)
                             for m, n, p in entry.get("morphisms", [])}
    return verify_two_category(
        FinTwoCategory(objects, hom, id1, hcomp_obj, hcomp_mor))


def monoid_payload(a):
    return {
        "elements": [encode_id(e) for e in a.elements],
        "op": [[encode_id(a.op[(p, q)]) for q in a.elements]
               for p in a.elements],
        "unit": encode_id(a.unit),
    }


def monoid_from_payload(raw):
    if not isinstance(raw, dict) or "elements" not in raw or "op" not in raw:
        raise MalformedInput("monoid payload needs elements, op, unit")
    elems = tuple(decode_id(e) for e in raw["elements"])
    table = raw["op"]
    if len(table) != len(elems) or any(len(r) != len(elems) for r in table):
        raise MalformedInput("monoid op table must be square over elements")
    op = {(elems[i], elems[j]): decode_id(table[i][j])
          for i in range(len(elems)) for j in range(len(elems))}
    unit = decode_id(raw.get("unit", elems[0] if elems else None))
    return verify_monoid(Monoid(elems, op, unit))


def ordmap_payload(f):
    return {"x": f.x, "y": f.y, "n": f.n, "m": f.m, "values": list(f.values)}


def ordmap_from_payload(raw):
    try:
        return verify_ord_map(OrdMap(raw["x"], raw["y"], raw["n"], raw["m"],
                                     tuple(raw["values"])))
    except (TypeError, KeyError):
        raise MalformedInput("ordmap payload needs x, y, n, m, values") from None


def functor_payload(fun):
    return {
        "dom": category_payload(fun.dom),
        "cod": category_payload(fun.cod),
        "on_objects": _pairs(fun.on_objects),
        "on_morphisms": _pairs(fun.on_morphisms),
    }


def functor_from_payload(raw):
    if not isinstance(raw, dict):
        raise MalformedInput("functor payload must be a mapping")
    dom = category_from_payload(raw["dom"])
    cod = category_from_payload(raw["cod"])
    return verify_functor(FinFunctor(
        dom, cod,
        _unpairs(raw.get("on_objects", [])),
        _unpairs(raw.get("on_morphisms", []))))


def _functor_tables_payload(fun):
    return {"on_objects": _pairs(fun.on_objects),
            "on_morphisms": _pairs(fun.on_morphisms)}


def cat_valued_payload(fv):
    on_one = []
    for (x, y), table in fv.on_one.items():
        on_one.append({
            "src": encode_id(x), "dst": encode_id(y),
            "table": [[encode_id(f), _functor_tables_payload(fun)]
                      for f, fun in table.items()],
        })
    on_two = []
    for (x, y), table in fv.on_two.items():
        on_two.append({
            "src": encode_id(x), "dst": encode_id(y),
            "table": [[encode_id(m), _pairs(components)]
                      for m, components in table.items()],
        })
    return {
        "base": two_category_payload(fv.base),
        "values": [{"at": encode_id(o), "category": category_payload(c)}
                   for o, c in fv.value.items()],
        "on_one": on_one,
        "on_two": on_two,
    }


def cat_valued_from_payload(raw):
    if not isinstance(raw, dict):
        raise MalformedInput("cat-valued-two-functor payload must be a mapping")
    base = two_category_from_payload(raw["base"])
    value = {}
    for entry in raw.get("values", []):
        value[decode_id(entry["at"])] = category_from_payload(entry["category"])
    on_one = {}
    for entry in raw.get("on_one", []):
        x, y = decode_id(entry["src"]), decode_id(entry["dst"])
        table = {}
        for f, tabs in entry.get("table", []):
            table[decode_id(f)] = FinFunctor(
                value[x], value[y],
                _unpairs(tabs.get("on_objects", [])),
                _unpairs(tabs.get("on_morphisms", [])))
        on_one[(x, y)] = table
    on_two = {}
    for entry in raw.get("on_two", []):
        x, y = decode_id(entry["src"]), decode_id(entry["dst"])
        on_two[(x, y)] = {decode_id(m): _unpairs(components)
                          for m, components in entry.get("table", [])}
    return verify_cat_valued(CatValuedTwoFunctor(base, value, on_one, on_two))


def _matrix_rows(m):
    return [list(row) for row in m.rows]


def diagram_payload(cat, groups, maps):
    return {
        "category": category_payload(cat),
        "groups": [{"at": encode_id(o), "gens": p.gens,
                    "rels": _matrix_rows(p.rels)}
                   for o, p in groups.items()],
        "maps": [{"on": encode_id(m), "matrix": _matrix_rows(mat)}
                 for m, mat in maps.items()],
    }


def diagram_from_payload(raw):
    """Returns (category, per-object Presentation, per-morphism Mat); the
    diagram itself is assembled over a nerve at a chosen dimension by the
    caller."""
    if not isinstance(raw, dict):
        raise MalformedInput("ab-diagram payload must be a mapping")
    cat = category_from_payload(raw["category"])
    groups = {}
    for entry in raw.get("groups", []):
        gens = entry["gens"]
        if not isinstance(gens, int) or gens < 0:
            raise MalformedInput("gens must be a nonnegative integer")
        rels = entry.get("rels", [])
        if not rels:
            mat = Mat.zeros(gens, 0)
        else:
            if any(len(r) != len(rels[0]) for r in rels):
                raise MalformedInput("ragged relation matrix")
            if len(rels) != gens:
                raise MalformedInput("relation matrix must have one row per generator")
            mat = Mat(gens, len(rels[0]), [list(r) for r in rels])
        groups[decode_id(entry["at"])] = Presentation(gens, mat)
    maps = {}
    for entry in raw.get("maps", []):
        rows = entry["matrix"]
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise MalformedInput("ragged edge matrix")
        maps[decode_id(entry["on"])] = Mat(len(rows), nc, [list(r) for r in rows])
    for o in cat.objects:
        if o not in groups:
            raise MalformedInput(f"no group attached to object {o!r}")
    for m in cat.morphisms:
        if m not in maps and not cat.is_identity(m):
            raise MalformedInput(f"no matrix attached to morphism {m!r}")
    return cat, groups, maps


_TO = {
    "category": category_payload,
    "two-category": two_category_payload,
    "monoid": monoid_payload,
    "ordmap": ordmap_payload,
    "functor": functor_payload,
    "cat-valued-two-functor": cat_valued_payload,
}

_FROM = {
    "category": category_from_payload,
    "two-category": two_category_from_payload,
    "monoid": monoid_from_payload,
    "ordmap": ordmap_from_payload,
    "functor": functor_from_payload,
    "cat-valued-two-functor": cat_valued_from_payload,
    "ab-diagram": diagram_from_payload,
}


def to_document(kind, entity, *rest):
    if kind == "ab-diagram":
        payload = diagram_payload(entity, *rest)
    else:
        if kind not in _TO:
            raise MalformedInput(f"unknown manifest kind {kind!r}")
        payload = _TO[kind](entity)
    return {"format": FORMAT, "kind": kind, **payload}


def from_document(doc):
    """Validate the envelope and hand back (kind, entity)."""
    if not isinstance(doc, dict):
        raise MalformedInput("manifest must be a JSON object")
    if doc.get("format") != FORMAT:
        raise MalformedInput(
            f"unrecognized format {doc.get('format')!r}, expected {FORMAT!r}")
    kind = doc.get("kind")
    if kind not in _FROM:
        raise MalformedInput(f"unknown manifest kind {kind!r}")
    return kind, _FROM[kind](doc)


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"not valid JSON: {e}") from None
    return from_document(doc)


def dump_path(path, doc):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def load_path(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
