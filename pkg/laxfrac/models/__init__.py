# concrete 2-categories and model files
from laxfrac.models.category_model import (CyclicCellModel, FiniteCategoryModel, FiniteCategorySpec, TrivialModel,
                                           load_category_model, load_cyclic_model, load_trivial_model)
from laxfrac.models.model_files import LoadedModel, load_model_file, parse_model
from laxfrac.models.pos_model import PosModel
from laxfrac.models.posets import FinitePoset, LowerSetLattice, MonotoneMap

__all__ = [
    "CyclicCellModel",
    "FiniteCategoryModel",
    "FiniteCategorySpec",
    "FinitePoset",
    "LoadedModel",
    "LowerSetLattice",
    "MonotoneMap",
    "PosModel",
    "TrivialModel",
    "load_category_model",
    "load_cyclic_model",
    "load_model_file",
    "load_trivial_model",
    "parse_model",
]
