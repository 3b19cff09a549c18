"""JSON documents for algebras and morphisms.

An algebra document is a flat object::

    {"name": "H3", "variety": "hil", "size": 3, "one": 0,
     "arrow": [[0, 1, 2], [0, 0, 2], [0, 1, 0]]}

with optional ``join``, ``meet``, ``zero`` and ``labels``.  A morphism
document holds ``dom`` and ``cod`` (embedded algebra documents or paths
relative to the morphism file), ``map`` and ``tag``.  Keys are written in
sorted order so that emitting is canonical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

from .algebra import FiniteAlgebra, StructureError, Variety, validate
from .morphisms import Morphism, validate_morphism

PathLike = Union[str, Path]


class DocumentError(ValueError):
    """A document could not be read; ``location`` says where."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: FiniteAlgebra
    variety: Variety = Variety.HIL

    def __post_init__(self) -> None:
        object.__setattr__(self, "variety", Variety.parse(self.variety))

    def to_dict(self) -> dict[str, Any]:
        alg = self.algebra
        out: dict[str, Any] = {
            "variety": self.variety.value,
            "size": alg.size,
            "one": alg.one,
            "arrow": [list(r) for r in alg.arrow],
        }
        for key in ("join", "meet"):
            table = getattr(alg, key)
            if table is not None:
                out[key] = [list(r) for r in table]
        if alg.zero is not None:
            out["zero"] = alg.zero
        if alg.labels is not None:
            out["labels"] = list(alg.labels)
        if alg.name:
            out["name"] = alg.name
        return out


@dataclass(frozen=True)
class MorphismDocument:
    morphism: Morphism
    dom_ref: Optional[str] = None
    cod_ref: Optional[str] = None
    dom_variety: Optional[Variety] = None
    cod_variety: Optional[Variety] = None

    def to_dict(self) -> dict[str, Any]:
        f = self.morphism

        def side(alg, ref, variety):
            if ref is not None:
                return ref
            return AlgebraDocument(alg, variety or f.variety).to_dict()

        return {
            "dom": side(f.dom, self.dom_ref, self.dom_variety),
            "cod": side(f.cod, self.cod_ref, self.cod_variety),
            "map": list(f.map),
            "tag": f.variety.value,
        }


# ---------------------------------------------------------------- reading


def _loads(text: str, where: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{where}:{exc.lineno}:{exc.colno}", f"malformed JSON ({exc.msg})") from None


def _index(value: Any, size: int, at: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(at, f"expected an integer, got {value!r}")
    if not 0 <= value < size:
        raise DocumentError(at, f"index {value} out of range for size {size}")
    return value


def _table(value: Any, size: int, at: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or len(value) != size:
        raise DocumentError(at, f"expected {size} rows")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != size:
            raise DocumentError(f"{at}[{i}]", f"expected {size} entries")
        rows.append(tuple(_index(v, size, f"{at}[{i}][{j}]") for j, v in enumerate(row)))
    return tuple(rows)


def algebra_from_dict(doc: Any, where: str = "$", check: bool = True) -> AlgebraDocument:
    """Build the algebra; with ``check`` it must also validate under its declared variety."""
    if not isinstance(doc, dict):
        raise DocumentError(where, "expected an object")
    unknown = set(doc) - {"name", "variety", "size", "one", "arrow", "join", "meet", "zero", "labels"}
    if unknown:
        raise DocumentError(where, f"unknown keys {sorted(unknown)}")
    for key in ("variety", "size", "one", "arrow"):
        if key not in doc:
            raise DocumentError(where, f"missing key {key!r}")
    try:
        variety = Variety.parse(doc["variety"])
    except ValueError:
        raise DocumentError(f"{where}.variety", f"unknown variety {doc['variety']!r}") from None
    size = doc["size"]
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise DocumentError(f"{where}.size", "expected a positive integer")
    one = _index(doc["one"], size, f"{where}.one")
    tables = {k: _table(doc[k], size, f"{where}.{k}") for k in ("arrow", "join", "meet") if k in doc}
    zero = _index(doc["zero"], size, f"{where}.zero") if "zero" in doc else None
    labels = doc.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != size or not all(isinstance(s, str) for s in labels)
    ):
        raise DocumentError(f"{where}.labels", f"expected {size} strings")
    try:
        alg = FiniteAlgebra(
            size=size,
            one=one,
            zero=zero,
            name=doc.get("name") or None,
            labels=tuple(labels) if labels is not None else None,
            **tables,
        )
        if not check:
            return AlgebraDocument(alg, variety)
        report = validate(alg, variety)
    except StructureError as exc:
        raise DocumentError(f"{where}.variety", f"variety mismatch: {exc}") from None
    if not report.ok:
        raise DocumentError(f"{where}.variety", f"variety mismatch: {report.failures[0].describe(alg)}")
    return AlgebraDocument(alg, variety)


def parse_algebra(text: str, where: str = "<string>", check: bool = True) -> AlgebraDocument:
    return algebra_from_dict(_loads(text, where), where, check)


def load_algebra(path: PathLike, check: bool = True) -> AlgebraDocument:
    path = Path(path)
    return parse_algebra(_read(path), str(path), check)


def morphism_from_dict(doc: Any, where: str = "$", base: Optional[Path] = None) -> MorphismDocument:
    if not isinstance(doc, dict):
        raise DocumentError(where, "expected an object")
    for key in ("dom", "cod", "map", "tag"):
        if key not in doc:
            raise DocumentError(where, f"missing key {key!r}")
    try:
        tag = Variety.parse(doc["tag"])
    except ValueError:
        raise DocumentError(f"{where}.tag", f"unknown variety {doc['tag']!r}") from None
    sides = {}
    for key in ("dom", "cod"):
        value = doc[key]
        if isinstance(value, str):
            target = (base or Path.cwd()) / value
            sides[key] = (load_algebra(target), value)
        else:
            sides[key] = (algebra_from_dict(value, f"{where}.{key}"), None)
    (dom_doc, dom_ref), (cod_doc, cod_ref) = sides["dom"], sides["cod"]
    dom, cod = dom_doc.algebra, cod_doc.algebra
    for key, alg in (("dom", dom), ("cod", cod)):
        if not alg.has(tag):
            raise DocumentError(f"{where}.{key}", f"variety mismatch: lacks the operations of {tag.value}")
    mapping = doc["map"]
    if not isinstance(mapping, list) or len(mapping) != dom.size:
        raise DocumentError(f"{where}.map", f"expected {dom.size} entries")
    values = [_index(v, cod.size, f"{where}.map[{i}]") for i, v in enumerate(mapping)]
    f = Morphism(dom, cod, tuple(values), tag)
    if not validate_morphism(f):
        raise DocumentError(f"{where}.map", f"not a {tag.value} morphism")
    return MorphismDocument(f, dom_ref, cod_ref, dom_doc.variety, cod_doc.variety)


def parse_morphism(text: str, where: str = "<string>", base: Optional[Path] = None) -> MorphismDocument:
    return morphism_from_dict(_loads(text, where), where, base)


def load_morphism(path: PathLike) -> MorphismDocument:
    path = Path(path)
    return parse_morphism(_read(path), str(path), path.parent)


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise DocumentError(str(path), f"cannot read file ({exc.strerror})") from None


# ---------------------------------------------------------------- writing


def emit(document: Union[AlgebraDocument, MorphismDocument, dict]) -> str:
    data = document if isinstance(document, dict) else document.to_dict()
    text = json.dumps(data, sort_keys=True, indent=2)
    # keep integer rows and string lists on one line
    flat = re.sub(r"\[\s+((?:-?\d+|\"[^\"\n]*\")(?:,\s+(?:-?\d+|\"[^\"\n]*\"))*)\s+\]",
                  lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return flat + "\n"


def emit_algebra(alg: FiniteAlgebra, variety: "Variety | str" = Variety.HIL) -> str:
    return emit(AlgebraDocument(alg, Variety.parse(variety)))


def emit_morphism(f: Morphism) -> str:
    return emit(MorphismDocument(f))


def canonical_text(text: str) -> str:
    """Re-serialise JSON text with sorted keys, for structural comparison."""
    return emit(json.loads(text))


def write(path: PathLike, document: Union[AlgebraDocument, MorphismDocument]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit(document))
    return path
