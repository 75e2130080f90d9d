"""JSON schemas, codecs and file helpers for the command-line front end."""

from .file_handlers import canonical_json, default_report_path, read_model, write_csv, write_model
from .schemas import SCHEMA_VERSION, DecompositionFile, DomainFile, MeasureFile, ProblemFile, ResultFile
from .serialization import (
    boundary_rows,
    decomposition_to_file,
    domain_from_spec,
    function_from_node,
    function_to_node,
    measure_from_file,
    problem_from_file,
    problem_to_file,
    result_from_file,
    result_to_file,
)

__all__ = [
    "SCHEMA_VERSION",
    "DecompositionFile",
    "DomainFile",
    "MeasureFile",
    "ProblemFile",
    "ResultFile",
    "boundary_rows",
    "canonical_json",
    "decomposition_to_file",
    "default_report_path",
    "domain_from_spec",
    "function_from_node",
    "function_to_node",
    "measure_from_file",
    "problem_from_file",
    "problem_to_file",
    "read_model",
    "result_from_file",
    "result_to_file",
    "write_csv",
    "write_model",
]
