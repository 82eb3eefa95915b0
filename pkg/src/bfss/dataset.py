"""JSON dataset documents holding one bipolar fuzzy soft set.

Layout::

    {
      "universe": ["c1", "c2"],
      "parameters": ["e1"],
      "values": {"e1": {"c1": {"pos": "0.4", "neg": "-0.5"},
                        "c2": {"pos": "0.6", "neg": "-0.3"}}}
    }

Degrees may be written as JSON strings or number literals; numbers are
read from their source text, never through a float.  Serialization always
writes minimal decimal strings, so ``serialize(parse(serialize(s)))`` is a
fixed point.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import BipolarFuzzySoftSet
from .core import BipolarFuzzySet, BipolarGrade, Degree, Universe
from .errors import GradeRangeError, ParseError, ValidationError

TOP_LEVEL_KEYS = ("universe", "parameters", "values")


class _Number(str):
    """Source text of a JSON number literal."""


class _Pairs(list):
    """Key/value pairs of a JSON object, kept raw so duplicates can be reported with a path."""


def _loads(text: str):
    try:
        return json.loads(text, object_pairs_hook=_Pairs, parse_float=_Number, parse_int=_Number)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _object(node, path: str) -> dict:
    if not isinstance(node, _Pairs):
        raise ValidationError("expected an object", path)
    out = {}
    for key, value in node:
        if key in out:
            raise ValidationError(f"duplicate key {key!r}", path)
        out[key] = value
    return out


def _id_list(node, path: str, *, allow_empty: bool) -> list[str]:
    if not isinstance(node, list) or isinstance(node, _Pairs):
        raise ValidationError("expected an array of identifiers", path)
    if not node and not allow_empty:
        raise ValidationError("must not be empty", path)
    seen = set()
    for i, item in enumerate(node):
        if type(item) is not str or not item:
            raise ValidationError("identifier must be a non-empty string", f"{path}[{i}]")
        if item in seen:
            raise ValidationError(f"duplicate identifier {item!r}", f"{path}[{i}]")
        seen.add(item)
    return list(node)


def _degree(node, path: str) -> Degree:
    if not isinstance(node, str):
        raise ValidationError("expected a decimal string or number", path)
    try:
        return Degree.parse(node)
    except GradeRangeError as exc:
        raise ValidationError(str(exc), path) from None


def _grade(node, path: str) -> BipolarGrade:
    cell = _object(node, path)
    for key in cell:
        if key not in ("pos", "neg"):
            raise ValidationError(f"unknown key {key!r}", path)
    for key in ("pos", "neg"):
        if key not in cell:
            raise ValidationError(f"missing {key!r}", path)
    pos = _degree(cell["pos"], f"{path}.pos")
    neg = _degree(cell["neg"], f"{path}.neg")
    if not 0 <= pos.units:
        raise ValidationError(f"positive degree {pos} outside [0, 1]", f"{path}.pos")
    if not neg.units <= 0:
        raise ValidationError(f"negative degree {neg} outside [-1, 0]", f"{path}.neg")
    return BipolarGrade(pos, neg)


def from_document(doc) -> BipolarFuzzySoftSet:
    top = _object(doc, "$")
    for key in top:
        if key not in TOP_LEVEL_KEYS:
            raise ValidationError(f"unknown key {key!r}", "$")
    for key in TOP_LEVEL_KEYS:
        if key not in top:
            raise ValidationError(f"missing {key!r}", "$")
    objects = _id_list(top["universe"], "universe", allow_empty=False)
    params = _id_list(top["parameters"], "parameters", allow_empty=True)
    values = _object(top["values"], "values")
    for p in values:
        if p not in params:
            raise ValidationError(f"unknown parameter {p!r}", "values")
    universe = Universe(tuple(objects))
    assignments = []
    for p in params:
        if p not in values:
            raise ValidationError(f"missing value row for parameter {p!r}", "values")
        row_path = f"values.{p}"
        row = _object(values[p], row_path)
        for o in row:
            if o not in universe:
                raise ValidationError(f"unknown object {o!r}", row_path)
        grades = []
        for o in objects:
            if o not in row:
                raise ValidationError(f"missing grade for object {o!r}", row_path)
            grades.append(_grade(row[o], f"{row_path}.{o}"))
        assignments.append((p, BipolarFuzzySet(universe, tuple(grades))))
    return BipolarFuzzySoftSet(universe, assignments)


def parse_dataset(text: str) -> BipolarFuzzySoftSet:
    return from_document(_loads(text))


def load_dataset(path) -> BipolarFuzzySoftSet:
    return parse_dataset(Path(path).read_text(encoding="utf-8"))


def to_document(s: BipolarFuzzySoftSet) -> dict:
    return {
        "universe": list(s.universe.objects),
        "parameters": [str(p) for p in s.params],
        "values": {
            str(p): {o: {"pos": str(g.pos), "neg": str(g.neg)} for o, g in fs.items()}
            for p, fs in s.items()
        },
    }


def serialize(s: BipolarFuzzySoftSet) -> str:
    """Canonical text: one grade cell per line, identifier lists inline."""
    def q(x):
        return json.dumps(x, ensure_ascii=False)

    doc = to_document(s)
    lines = [
        "{",
        f'  "universe": [{", ".join(map(q, doc["universe"]))}],',
        f'  "parameters": [{", ".join(map(q, doc["parameters"]))}],',
    ]
    if not doc["values"]:
        lines.append('  "values": {}')
    else:
        lines.append('  "values": {')
        rows = list(doc["values"].items())
        for i, (p, row) in enumerate(rows):
            lines.append(f"    {q(p)}: {{")
            cells = list(row.items())
            for j, (o, cell) in enumerate(cells):
                sep = "," if j < len(cells) - 1 else ""
                lines.append(f'      {q(o)}: {{"pos": {q(cell["pos"])}, "neg": {q(cell["neg"])}}}{sep}')
            lines.append("    }" + ("," if i < len(rows) - 1 else ""))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_dataset(s: BipolarFuzzySoftSet, path) -> None:
    Path(path).write_text(serialize(s), encoding="utf-8")
