import json

import numpy as np
import pytest
from pydantic import TypeAdapter, ValidationError

from holoextend.errors import NestedHoleViolation, ProblemError
from holoextend.fileio import (
    DecompositionFile,
    ProblemFile,
    canonical_json,
    decomposition_to_file,
    default_report_path,
    domain_from_spec,
    function_from_node,
    function_to_node,
    measure_from_file,
    problem_from_file,
    problem_to_file,
    read_model,
    write_csv,
    write_model,
)
from holoextend.fileio.file_handlers import format_number
from holoextend.fileio.schemas import ComplexSpec, DomainSpec, FunctionNode, MeasureFile
from holoextend.geometry import Circle, sample_boundary
from holoextend.holomorphic import evaluate
from holoextend.measures import decompose
from holoextend.solvers import glue

TWO_CIRCLE_PROBLEM = {
    "schema_version": 1,
    "domain": {
        "outer": {"center": {"re": 0, "im": 0}, "radius": 1},
        "holes": [{"center": {"re": 0, "im": 0}, "radius": 0.5}],
    },
    "constraints": [
        [{"angle": 0, "value": {"re": 0.3}}],
        [{"point": {"re": 0.5}, "value": {"re": -0.2}}],
    ],
    "bounds": [{"constant": 1}, {"constant": 1, "cos": [0.1]}],
}


def test_problem_from_file():
    problem, options = problem_from_file(ProblemFile.model_validate(TWO_CIRCLE_PROBLEM))
    assert problem.k == 2
    np.testing.assert_allclose(problem.targets(0)[0], [1])
    np.testing.assert_allclose(problem.targets(1)[1], [-0.2])
    assert problem.bound(1).cos == (0.1,)
    assert options.safety == 0.95


def test_problem_file_validation():
    with pytest.raises(ValidationError):
        ProblemFile.model_validate({**TWO_CIRCLE_PROBLEM, "constraints": [[{"angle": 0, "point": {"re": 1}, "value": {"re": 0}}], []]})
    with pytest.raises(ValidationError):
        ProblemFile.model_validate({**TWO_CIRCLE_PROBLEM, "schema_version": 2})
    with pytest.raises(ValidationError):
        ProblemFile.model_validate({**TWO_CIRCLE_PROBLEM, "unknown": 1})

    short = ProblemFile.model_validate({**TWO_CIRCLE_PROBLEM, "bounds": [{"constant": 1}]})
    with pytest.raises(ProblemError):
        problem_from_file(short)

    off_circle = ProblemFile.model_validate({**TWO_CIRCLE_PROBLEM, "constraints": [[{"point": {"re": 0.9}, "value": {"re": 0}}], []]})
    with pytest.raises(ProblemError):
        problem_from_file(off_circle)

    with pytest.raises(NestedHoleViolation):
        domain_from_spec(DomainSpec.model_validate({"outer": {"center": {"re": 0}, "radius": 1}, "holes": [{"center": {"re": 0}, "radius": 1.5}]}))


def test_problem_to_file_reads_back():
    problem, _ = problem_from_file(ProblemFile.model_validate(TWO_CIRCLE_PROBLEM))
    again, _ = problem_from_file(problem_to_file(problem))
    assert again.domain == problem.domain
    assert again.constraints == problem.constraints


def test_stored_function_evaluates_identically(two_circle_problem):
    F = glue(two_circle_problem).F
    node = function_to_node(F)
    restored = function_from_node(TypeAdapter(FunctionNode).validate_json(json.dumps(node.model_dump(mode="json"))))
    samples = sample_boundary(Circle(0, 0.75), 64)
    np.testing.assert_array_equal(evaluate(restored, samples), evaluate(F, samples))


def test_canonical_json_is_stable(tmp_path):
    model = ProblemFile.model_validate(TWO_CIRCLE_PROBLEM)
    text = canonical_json(model)
    assert text == canonical_json(ProblemFile.model_validate_json(text))
    assert list(json.loads(text)) == sorted(json.loads(text))
    assert "options" not in json.loads(text)

    path = write_model(tmp_path / "nested" / "problem.json", model)
    assert read_model(path, ProblemFile) == model


def test_format_number_and_csv(tmp_path):
    assert format_number(3) == "3"
    assert float(format_number(1 / 3)) == 1 / 3
    assert format_number(0.1) == "0.10000000000000001"

    path = write_csv(tmp_path / "rows.csv", ("a", "b"), [[1, 0.5], [2, -0.25]])
    assert path.read_text(encoding="utf-8").splitlines() == ["a,b", "1,0.5", "2,-0.25"]
    assert default_report_path(tmp_path / "result.json") == tmp_path / "result.report.json"


def test_measure_and_decomposition_files():
    measure_file = MeasureFile.model_validate(
        {
            "r0": 0.5,
            "inner": {"density": [{"index": 1, "value": {"re": -0.5}}]},
            "outer": {"density": [{"index": 1, "value": {"re": 1}}], "atoms": []},
        }
    )
    measure = measure_from_file(measure_file)
    decomposition = decompose(measure, 4)
    table = decomposition_to_file(measure, decomposition, 1e-9)

    assert isinstance(table, DecompositionFile)
    assert table.passed
    assert [row.index for row in table.coefficients] == list(range(-4, 5))
    row = table.coefficients[5]
    assert (row.index, row.lambda1.re, row.eta0.re) == (1, 1.0, 0.0)
    assert table.eta0.density == []


def test_complex_parts_default_to_zero():
    assert ComplexSpec.model_validate({"im": 0.25}).value == 0.25j
    assert ComplexSpec.model_validate({"re": -1}).value == -1
    assert ComplexSpec.model_validate({}).value == 0
    with pytest.raises(ValidationError):
        ComplexSpec.model_validate({"re": 1, "imag": 2})
