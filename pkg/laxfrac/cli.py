"""
Command-line surface: load a model file, run one command, write a report.

Exit status: 0 when every record passed, 1 when a check failed or stayed
undetermined, 2 for usage errors and misused bounds, 3 for model-file errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from laxfrac.coherence import (CoherenceChecker, axiom_records, bc_image_record, compose_record, gz_records,
                               hom_record, lari_record, model_bc_record, two_cell_record)
from laxfrac.config import COMMANDS, RunConfig, build_run_config
from laxfrac.errors import LaxFractionsError, ModelFileError
from laxfrac.lax_fractions import LaxFractions, SigmaCospan, TwoMorphism
from laxfrac.models.model_files import LoadedModel, load_model_file
from laxfrac.models.pos_model import PosModel
from laxfrac.reports import CheckRecord, RunReport, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MODEL_ERROR = 3

Handler = Callable[[RunConfig, LoadedModel, LaxFractions], List[CheckRecord]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laxfrac",
                                     description="Verify and query the bicategory of lax fractions of a finite model")
    parser.add_argument("--model", required=True, help="Path to a JSON model file")
    parser.add_argument("--command", required=True, choices=COMMANDS, help="Command to run")
    parser.add_argument("--apex-bound", type=int, help="Largest apex size when enumerating cospans")
    parser.add_argument("--ext-bound", type=int, help="Largest extension codomain for ≈ searches")
    parser.add_argument("--witness-bound", type=int, help="Largest codomain for axiom witness searches")
    parser.add_argument("--max-search-size", type=int, help="Hard cap on searched poset sizes")
    parser.add_argument("--universe-size", type=int, help="Size of the enumerated poset universe")
    parser.add_argument("--seed", type=int, help="Seed for sampled checks")
    parser.add_argument("--sample-size", type=int, help="Instances drawn per sampled check")
    parser.add_argument("--out", help="Report path; standard output when omitted")
    parser.add_argument("--format", choices=("json", "markdown"), help="Report format")
    parser.add_argument("--args", help="Command arguments as a JSON object")
    parser.add_argument("--force", action="store_true", default=None,
                        help="Allow a witness bound above the search cap")
    return parser


def _enumeration_bound(config: RunConfig, model) -> int:
    return config.universe_size if isinstance(model, PosModel) else 1


def _cospan(loaded: LoadedModel, engine: LaxFractions, legs: Sequence[str]) -> SigmaCospan:
    if len(legs) != 2:
        raise ValueError(f"a cospan is given by two 1-cell names, got {list(legs)}")
    try:
        return engine.cospan(loaded.cell(legs[0]), loaded.cell(legs[1]))
    except LaxFractionsError as exc:
        raise ValueError(f"invalid cospan {list(legs)}: {exc}") from None


def _two_morphism(loaded: LoadedModel, engine: LaxFractions, src: SigmaCospan, tgt: SigmaCospan,
                  spec: Dict[str, str]) -> TwoMorphism:
    try:
        return engine.two_morphism(src, tgt, loaded.cell(spec["x1"]), loaded.cell(spec["x2"]),
                                   loaded.cell(spec["x3"]))
    except KeyError as exc:
        raise ValueError(f"2-morphism needs x1, x2 and x3, missing {exc}") from None
    except LaxFractionsError as exc:
        raise ValueError(f"invalid 2-morphism {spec}: {exc}") from None


# command handlers


def _check_axioms(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    return axiom_records(loaded.model, _enumeration_bound(config, loaded.model), config.witness_bound)


def _hom(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    objects = list(loaded.objects)
    if not objects and "source" not in config.args:
        raise ValueError("hom needs --args '{\"source\": ..., \"target\": ...}'")
    try:
        source = loaded.obj(config.args.get("source", objects[0] if objects else ""))
        target = loaded.obj(config.args.get("target", objects[-1] if objects else ""))
    except LaxFractionsError as exc:
        raise ValueError(str(exc)) from None
    return [hom_record(engine, source, target)]


def _compose(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    legs = config.args.get("cospans")
    if not legs:
        raise ValueError("compose needs --args '{\"cospans\": [[f, r], [g, s], ...]}'")
    return [compose_record(engine, [_cospan(loaded, engine, pair) for pair in legs])]


def _two_cell_equal(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    try:
        src = _cospan(loaded, engine, config.args["source"])
        tgt = _cospan(loaded, engine, config.args["target"])
        first, second = config.args["first"], config.args["second"]
    except KeyError as exc:
        raise ValueError(f"two-cell-equal needs source, target, first and second, missing {exc}") from None
    return [two_cell_record(engine, _two_morphism(loaded, engine, src, tgt, first),
                            _two_morphism(loaded, engine, src, tgt, second))]


def _verify_coherence(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    return CoherenceChecker(engine, config.seed, config.sample_size, config.samples).run_all()


def _check_lari(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    bound = _enumeration_bound(config, loaded.model)
    return [lari_record(engine, bound), model_bc_record(loaded.model, bound)]


def _check_bc(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    sample = config.samples.get("bc_image", config.sample_size) if config.args.get("sample") else None
    return [bc_image_record(engine, _enumeration_bound(config, loaded.model), config.seed, sample)]


def _compare_gz(config: RunConfig, loaded: LoadedModel, engine: LaxFractions) -> List[CheckRecord]:
    return gz_records(engine)


COMMAND_HANDLERS: Dict[str, Handler] = {
    "check-axioms": _check_axioms,
    "hom": _hom,
    "compose": _compose,
    "two-cell-equal": _two_cell_equal,
    "verify-coherence": _verify_coherence,
    "check-lari": _check_lari,
    "check-bc": _check_bc,
    "compare-gz": _compare_gz,
}


def execute(config: RunConfig, loaded: LoadedModel) -> RunReport:
    """Run the configured command against a loaded model.

    Raises ValueError when the command arguments do not fit the model.
    """
    model = loaded.model
    if isinstance(model, PosModel):
        model.universe_size = config.universe_size
        model.max_search_size = config.max_search_size
    engine = LaxFractions(model, witness_bound=config.witness_bound, ext_bound=config.ext_bound,
                          apex_bound=config.apex_bound)
    logger.info(f"running {config.command} on {model.name}")
    records = COMMAND_HANDLERS[config.command](config, loaded, engine)
    report = RunReport(command=config.command, model=model.name, config=config.report_config(),
                       records=records).finalize()
    logger.info(f"{config.command} on {model.name}: {report.status}")
    return report


def write_report(report: RunReport, config: RunConfig) -> None:
    text = render(report, config.format)
    if config.out:
        Path(config.out).write_text(text, encoding="utf-8")
        logger.info(f"report written to {config.out}")
    else:
        sys.stdout.write(text + "\n")


def run(config: RunConfig, loaded: Optional[LoadedModel] = None) -> int:
    """Execute the command, write its report and return the exit status."""
    loaded = loaded or load_model_file(config.model)
    report = execute(config, loaded)
    write_report(report, config)
    return EXIT_OK if report.status == "pass" else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    namespace = parser.parse_args(argv)
    overrides: Dict[str, Any] = {key: value for key, value in vars(namespace).items() if key != "args"}
    try:
        overrides["args"] = json.loads(namespace.args) if namespace.args else {}
    except json.JSONDecodeError as exc:
        logger.error(f"--args is not valid JSON: {exc}")
        return EXIT_USAGE
    if not isinstance(overrides["args"], dict):
        logger.error("--args must be a JSON object")
        return EXIT_USAGE

    try:
        loaded = load_model_file(namespace.model)
    except ModelFileError as exc:
        logger.error(f"model file error: {exc}")
        return EXIT_MODEL_ERROR

    try:
        config = build_run_config({**loaded.settings, **{k: v for k, v in overrides.items() if v is not None}})
    except ValueError as exc:
        logger.error(f"invalid bounds: {exc}")
        return EXIT_USAGE

    try:
        return run(config, loaded)
    except ValueError as exc:
        logger.error(f"invalid command arguments: {exc}")
        return EXIT_USAGE
