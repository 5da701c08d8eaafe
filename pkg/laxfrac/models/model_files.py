"""
Model files.

A model file is a JSON document with a ``kind`` discriminator:

    {"kind": "pos", "name": ..., "universe_size": 2,
     "posets": {"P": {"elements": ["a", "b"], "leq": [["a", "b"]]}},
     "maps": {"m": {"dom": "P", "cod": "Q", "assignment": {"a": "x", "b": "y"}}}}

    {"kind": "category", "name": ..., "objects": [...], "morphisms": {...},
     "compose": [[g, f, gf], ...], "sigma": [...], "cells": 1, "weights": {}}

In a poset, ``leq`` lists every strict pair a < b; reflexive pairs may be
omitted, transitivity is not completed. Category files follow
FiniteCategorySpec; ``cells`` above 1 gives every 1-cell the 2-cells Z/cells.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from laxfrac.errors import ModelFileError, SpecError
from laxfrac.models.category_model import FiniteCategorySpec, load_category_model
from laxfrac.models.pos_model import PosModel
from laxfrac.models.posets import FinitePoset, MonotoneMap
from laxfrac.two_cat_core import Obj, OneCell, TwoCatModel

logger = logging.getLogger(__name__)


class PosetEntry(BaseModel):
    elements: List[str] = Field(..., description="Element names")
    leq: List[Tuple[str, str]] = Field(default_factory=list, description="Pairs (a, b) with a ≤ b")


class MapEntry(BaseModel):
    dom: str = Field(..., description="Name of the domain poset")
    cod: str = Field(..., description="Name of the codomain poset")
    assignment: Dict[str, str] = Field(..., description="Element of dom -> element of cod")


class PosFile(BaseModel):
    kind: Literal["pos"]
    name: str = Field("pos", description="Name used in reports")
    universe_size: Optional[int] = Field(None, ge=0, description="Size of the enumerated poset universe")
    max_search_size: Optional[int] = Field(None, gt=0, description="Cap on searched poset sizes")
    posets: Dict[str, PosetEntry] = Field(default_factory=dict, description="Named posets")
    maps: Dict[str, MapEntry] = Field(default_factory=dict, description="Named monotone maps")


class CategoryFile(FiniteCategorySpec):
    kind: Literal["category"]


ModelFile = Annotated[Union[PosFile, CategoryFile], Field(discriminator="kind")]

_ADAPTER = TypeAdapter(ModelFile)


@dataclass
class LoadedModel:
    """A model together with the objects and 1-cells its file names."""
    model: TwoCatModel
    kind: str
    objects: Dict[str, Obj] = field(default_factory=dict)
    cells: Dict[str, OneCell] = field(default_factory=dict)
    settings: Dict[str, int] = field(default_factory=dict)

    def obj(self, name: str) -> Obj:
        if name not in self.objects:
            raise SpecError(f"unknown object {name!r}")
        return self.objects[name]

    def cell(self, name: str) -> OneCell:
        if name not in self.cells:
            raise SpecError(f"unknown 1-cell {name!r}")
        return self.cells[name]


def _position(text: str, key: Optional[str]) -> Tuple[Optional[int], Optional[int]]:
    """Line and column of the first occurrence of ``"key"`` in the text."""
    if key is None:
        return None, None
    match = re.search(re.escape(json.dumps(key)), text)
    if match is None:
        return None, None
    line = text.count("\n", 0, match.start()) + 1
    column = match.start() - (text.rfind("\n", 0, match.start()) + 1) + 1
    return line, column


def _poset(name: str, entry: PosetEntry) -> FinitePoset:
    index = {e: i for i, e in enumerate(entry.elements)}
    rel = np.eye(len(index), dtype=bool)
    for a, b in entry.leq:
        if a not in index or b not in index:
            raise SpecError(f"poset {name}: unknown element in pair ({a}, {b})")
        rel[index[a], index[b]] = True
    return FinitePoset(entry.elements, rel)


def _load_pos(data: PosFile, locate) -> LoadedModel:
    settings = {key: value for key, value in (("universe_size", data.universe_size),
                                              ("max_search_size", data.max_search_size)) if value is not None}
    model = PosModel(name=data.name, **settings)
    loaded = LoadedModel(model, "pos", settings=settings)
    for name, entry in data.posets.items():
        try:
            loaded.objects[name] = _poset(name, entry)
        except SpecError as exc:
            raise locate(str(exc), name) from None
    for name, entry in data.maps.items():
        try:
            loaded.cells[name] = MonotoneMap.from_names(loaded.obj(entry.dom), loaded.obj(entry.cod),
                                                        entry.assignment)
        except SpecError as exc:
            raise locate(f"map {name}: {exc}", name) from None
    return loaded


def _load_category(data: CategoryFile, locate) -> LoadedModel:
    spec = FiniteCategorySpec(**data.model_dump(exclude={"kind"}))
    try:
        model = load_category_model(spec)
    except SpecError as exc:
        raise locate(str(exc), None) from None
    objects = {obj: obj for obj in model.objects()}
    cells = {name: name for name in model.morphisms()}
    return LoadedModel(model, "category", objects, cells)


def parse_model(text: str, path: Optional[str] = None) -> LoadedModel:
    """Parse and validate a model file's text.

    Raises ModelFileError positioned at the offending line and column when
    the position can be recovered.
    """
    def locate(message: str, key: Optional[str]) -> ModelFileError:
        line, column = _position(text, key)
        return ModelFileError(message, path, line, column)

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFileError(exc.msg, path, exc.lineno, exc.colno) from None
    try:
        data = _ADAPTER.validate_python(raw)
    except ValidationError as exc:
        error = exc.errors()[0]
        keys = [part for part in error["loc"] if isinstance(part, str) and json.dumps(part) in text]
        raise locate(f"{'.'.join(str(p) for p in error['loc'])}: {error['msg']}",
                     keys[-1] if keys else None) from None
    if isinstance(data, PosFile):
        loaded = _load_pos(data, locate)
    else:
        loaded = _load_category(data, locate)
    logger.info(f"loaded {loaded.kind} model {loaded.model.name} from {path or '<text>'}")
    return loaded


def load_model_file(path: Union[str, Path]) -> LoadedModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelFileError(f"cannot read model file: {exc.strerror}", str(path)) from None
    return parse_model(text, str(path))
