"""JSON serialization with schema validation and canonical emission.

Formats:
  DerivedSum:    {"n": 7, "orientation": "RRRRRR",
                  "summands": [{"degree": 0, "interval": [1, 3]}, ...]}
                 with summands sorted by (degree, a, b);
  Presentation:  {"vertices": [...], "arrows": [{"id", "from", "to"}, ...],
                  "relations": [{"terms": [{"coef": "p/q", "path": [...]}]}]}.

Schema violations raise SchemaError carrying a JSON-path location.  Parsing
a structurally valid but non-canonical file succeeds and reports warnings;
emission is canonical and byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .derived import DerivedObject, DerivedSum
from .presentations import Presentation, Quiver, Relation
from .reps import Interval, Orientation


class SchemaError(Exception):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _expect(cond, path, message):
    if not cond:
        raise SchemaError(path, message)


def parse_derived_sum(data) -> tuple:
    """(DerivedSum, warnings) from a decoded JSON object."""
    _expect(isinstance(data, dict), "$", "expected an object")
    for key in ("n", "orientation", "summands"):
        _expect(key in data, "$", f"missing key {key!r}")
    n = data["n"]
    _expect(isinstance(n, int) and n >= 1, "n", "must be a positive integer")
    word = data["orientation"]
    _expect(isinstance(word, str), "orientation", "must be a string")
    _expect(len(word) == n - 1 and all(c in "RL" for c in word),
            "orientation", f"must be a word of length {n - 1} over R/L")
    orient = Orientation(n, word)
    raw = data["summands"]
    _expect(isinstance(raw, list), "summands", "must be a list")
    summands = []
    for k, item in enumerate(raw):
        path = f"summands[{k}]"
        _expect(isinstance(item, dict), path, "expected an object")
        _expect("degree" in item, path, "missing key 'degree'")
        _expect("interval" in item, path, "missing key 'interval'")
        deg = item["degree"]
        _expect(isinstance(deg, int), f"{path}.degree", "must be an integer")
        itv = item["interval"]
        _expect(isinstance(itv, list) and len(itv) == 2 and all(isinstance(x, int) for x in itv),
                f"{path}.interval", "must be a pair of integers")
        a, b = itv
        _expect(1 <= a <= b <= n, f"{path}.interval", f"must satisfy 1 <= a <= b <= {n}")
        summands.append(DerivedObject(deg, Interval(a, b)))
    dsum = DerivedSum(orient, summands)
    warnings = []
    canonical = [{"degree": s.degree, "interval": [s.interval.a, s.interval.b]} for s in dsum.summands]
    if canonical != raw:
        warnings.append("summands were not in canonical (degree, a, b) order; normalized")
    return dsum, warnings


def emit_derived_sum(dsum: DerivedSum) -> str:
    doc = {
        "n": dsum.n,
        "orientation": dsum.orient.word,
        "summands": [{"degree": s.degree, "interval": [s.interval.a, s.interval.b]} for s in dsum.summands],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_presentation(data) -> tuple:
    """(Presentation, warnings) from a decoded JSON object."""
    _expect(isinstance(data, dict), "$", "expected an object")
    for key in ("vertices", "arrows", "relations"):
        _expect(key in data, "$", f"missing key {key!r}")
    vertices = data["vertices"]
    _expect(isinstance(vertices, list) and all(isinstance(v, int) for v in vertices),
            "vertices", "must be a list of integers")
    arrows = []
    grades = {}
    has_grades = False
    for k, item in enumerate(data["arrows"]):
        path = f"arrows[{k}]"
        _expect(isinstance(item, dict), path, "expected an object")
        for key in ("id", "from", "to"):
            _expect(key in item, path, f"missing key {key!r}")
        _expect(isinstance(item["id"], str), f"{path}.id", "must be a string")
        _expect(isinstance(item["from"], int) and isinstance(item["to"], int), path, "endpoints must be integers")
        _expect(item["from"] in vertices, f"{path}.from", "unknown vertex")
        _expect(item["to"] in vertices, f"{path}.to", "unknown vertex")
        arrows.append((item["id"], item["from"], item["to"]))
        if "grade" in item:
            has_grades = True
            _expect(isinstance(item["grade"], int) and item["grade"] >= 0, f"{path}.grade", "must be a non-negative integer")
            grades[item["id"]] = item["grade"]
    try:
        quiver = Quiver(vertices, arrows)
    except ValueError as exc:
        raise SchemaError("arrows", str(exc))
    if has_grades:
        for a, _, _ in arrows:
            _expect(a in grades, "arrows", f"arrow {a} is missing its grade")
    relations = []
    for k, item in enumerate(data["relations"]):
        path = f"relations[{k}]"
        _expect(isinstance(item, dict) and "terms" in item, path, "expected an object with 'terms'")
        terms = []
        for j, term in enumerate(item["terms"]):
            tpath = f"{path}.terms[{j}]"
            _expect(isinstance(term, dict), tpath, "expected an object")
            _expect("coef" in term and "path" in term, tpath, "missing 'coef' or 'path'")
            try:
                coef = Fraction(term["coef"])
            except (ValueError, ZeroDivisionError):
                raise SchemaError(f"{tpath}.coef", "must be a rational string 'p/q'")
            word = term["path"]
            _expect(isinstance(word, list) and all(isinstance(a, str) for a in word),
                    f"{tpath}.path", "must be a list of arrow ids")
            for a in word:
                _expect(a in quiver.source, f"{tpath}.path", f"unknown arrow {a!r}")
            terms.append((coef, tuple(word)))
        try:
            rel = Relation(terms)
            rel.endpoints(quiver)
        except ValueError as exc:
            raise SchemaError(path, str(exc))
        relations.append(rel)
    pres = Presentation(quiver, relations, grades=grades if has_grades else None)
    warnings = []
    if pres.to_json_dict() != data:
        warnings.append("presentation was not in canonical form; normalized")
    return pres, warnings


def emit_presentation(pres: Presentation, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(pres.to_json_dict(), indent=2) + "\n"
    if fmt == "dot":
        return pres.to_dot()
    raise ValueError(f"unknown format {fmt!r}")


def io_roundtrip(text: str) -> tuple:
    """(kind, value, canonical_text, warnings) for a DerivedSum or
    Presentation JSON document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}")
    if isinstance(data, dict) and "summands" in data:
        dsum, warnings = parse_derived_sum(data)
        return "derived-sum", dsum, emit_derived_sum(dsum), warnings
    pres, warnings = parse_presentation(data)
    return "presentation", pres, emit_presentation(pres), warnings
