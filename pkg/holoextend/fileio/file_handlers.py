"""Reading and writing problem, measure and result files.

JSON output is canonical: keys sorted, two-space indentation, absent optional
fields omitted, floats in their shortest round-trip form. Re-running a
deterministic pipeline therefore reproduces files byte for byte.
"""

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence, Type, TypeVar, Union

from pydantic import BaseModel

from ..logging_config import get_logger

logger = get_logger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)
PathLike = Union[str, Path]

BOUNDARY_CSV_HEADER = ("component", "angle", "re", "im", "abs", "bound")
CORRESPONDENCE_CSV_HEADER = ("hole", "circle", "source_re", "source_im", "image_re", "image_im", "image_abs")
COEFFICIENT_CSV_PIECES = ("inner", "outer", "lambda0", "eta0", "eta1", "lambda1")


def read_model(path: PathLike, model: Type[ModelT]) -> ModelT:
    """Parse a UTF-8 JSON file into ``model``.

    Raises:
        FileNotFoundError: if the file does not exist
        pydantic.ValidationError: on malformed JSON or a failing field
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    logger.debug(f"Read {len(text)} bytes from {path}")
    return model.model_validate_json(text)


def canonical_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True) + "\n"


def write_model(path: PathLike, model: BaseModel) -> Path:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(canonical_json(model), encoding="utf-8")
    logger.info(f"📄 Wrote {path}")
    return path


def format_number(value) -> str:
    """17 significant digits, enough to round-trip any binary64 value."""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return format(float(value), ".17g")


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([format_number(value) for value in row])
            count += 1
    logger.info(f"📄 Wrote {count} rows to {path}")
    return path


def default_report_path(out_path: PathLike) -> Path:
    """``result.json`` -> ``result.report.json``."""
    out_path = Path(out_path)
    return out_path.with_name(f"{out_path.stem}.report.json")
