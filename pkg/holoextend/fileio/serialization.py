"""Conversion between library objects and the file schemas."""

from typing import List, Optional, Tuple

import numpy as np

from ..config import SolverOptions, get_solver_options
from ..errors import EvaluationError, ProblemError
from ..geometry.domain import Circle, Domain, RegionDescriptor, build_domain, sample_angles
from ..holomorphic.expressions import (
    Compose,
    Const,
    DiscPeak,
    HoloFunction,
    LaurentPoly,
    Moebius,
    OnRegion,
    Product,
    Scale,
    Sum,
    evaluate,
)
from ..measures.circle_measure import AnnulusMeasure, CircleMeasure, fourier_coefficient
from ..measures.decomposition import RieszDecomposition
from ..results import ExtensionResult, GlueMargins
from ..solvers.bounds import BoundFunction
from ..solvers.disc_solver import BoundaryConstraint
from ..solvers.problem import ExtensionProblem
from .schemas import (
    AtomSpec,
    BoundSpec,
    CircleMeasureSpec,
    CircleSpec,
    CoefficientRow,
    ComplexSpec,
    ComposeNode,
    ConstNode,
    DecompositionFile,
    DensitySpec,
    DiscPeakNode,
    DomainSpec,
    LaurentNode,
    LaurentTermSpec,
    MarginsSpec,
    MeasureFile,
    MoebiusNode,
    OnRegionNode,
    ProblemFile,
    ProductNode,
    RegionBoundarySpec,
    RegionSpec,
    ResultFile,
    ScaleNode,
    SumNode,
)

# =============================================================================
# Geometry
# =============================================================================


def circle_to_spec(circle: Circle) -> CircleSpec:
    return CircleSpec(center=ComplexSpec.of(circle.center), radius=circle.radius)


def circle_from_spec(spec: CircleSpec) -> Circle:
    return Circle(spec.center.value, spec.radius)


def domain_from_spec(spec: DomainSpec) -> Domain:
    return build_domain(
        circle_from_spec(spec.outer),
        [circle_from_spec(hole) for hole in spec.holes],
        [z.value for z in spec.punctures],
    )


def domain_to_spec(domain: Domain) -> DomainSpec:
    return DomainSpec(
        outer=circle_to_spec(domain.outer),
        holes=[circle_to_spec(hole) for hole in domain.holes],
        punctures=[ComplexSpec.of(z) for z in domain.punctures],
    )


# =============================================================================
# Problems
# =============================================================================


def problem_from_file(problem_file: ProblemFile) -> Tuple[ExtensionProblem, SolverOptions]:
    """ExtensionProblem and solver options described by a problem file."""
    domain = domain_from_spec(problem_file.domain)
    if len(problem_file.constraints) != domain.k:
        raise ProblemError(f"constraints: expected {domain.k} component lists, got {len(problem_file.constraints)}")
    if len(problem_file.bounds) != domain.k:
        raise ProblemError(f"bounds: expected {domain.k} entries, got {len(problem_file.bounds)}")

    constraints = []
    for j, (entries, bound_spec) in enumerate(zip(problem_file.constraints, problem_file.bounds)):
        circle = domain.component(j)
        points = [circle.point(entry.angle) if entry.angle is not None else entry.point.value for entry in entries]
        values = [entry.value.value for entry in entries]
        try:
            bound = BoundFunction(bound_spec.constant, tuple(bound_spec.cos), tuple(bound_spec.sin))
        except ProblemError as e:
            raise ProblemError(f"bounds[{j}]: {e}") from e
        constraints.append(BoundaryConstraint(tuple(points), tuple(values), bound))

    problem = ExtensionProblem(domain, tuple(constraints), tuple(w.value for w in problem_file.puncture_values))
    options = problem_file.options or get_solver_options()
    return problem, options


def problem_to_file(problem: ExtensionProblem, options: Optional[SolverOptions] = None) -> ProblemFile:
    constraints = []
    bounds = []
    for constraint in problem.constraints:
        constraints.append([{"point": ComplexSpec.of(z), "value": ComplexSpec.of(v)} for z, v in zip(constraint.points, constraint.values)])
        bound = constraint.bound
        bounds.append(BoundSpec(constant=bound.constant, cos=list(bound.cos), sin=list(bound.sin)))
    return ProblemFile(
        domain=domain_to_spec(problem.domain),
        constraints=constraints,
        bounds=bounds,
        puncture_values=[ComplexSpec.of(w) for w in problem.puncture_values],
        options=options,
    )


# =============================================================================
# Expression trees
# =============================================================================


def region_to_spec(region: RegionDescriptor) -> RegionSpec:
    return RegionSpec(
        boundaries=[RegionBoundarySpec(circle=circle_to_spec(circle), inside=inside) for circle, inside in region.boundaries],
        tolerance=region.tolerance,
    )


def region_from_spec(spec: RegionSpec) -> RegionDescriptor:
    return RegionDescriptor(tuple((circle_from_spec(b.circle), b.inside) for b in spec.boundaries), spec.tolerance)


def function_to_node(f: HoloFunction):
    """Schema node of an expression tree."""
    match f:
        case Const():
            return ConstNode(value=ComplexSpec.of(f.value))
        case LaurentPoly():
            return LaurentNode(
                center=ComplexSpec.of(f.center),
                coefficients=[LaurentTermSpec(index=j, value=ComplexSpec.of(a)) for j, a in f.coefficients],
            )
        case DiscPeak():
            return DiscPeakNode(anchor=ComplexSpec.of(f.anchor), circle=circle_to_spec(f.circle), exponent=f.exponent)
        case Moebius():
            return MoebiusNode(a=ComplexSpec.of(f.a), b=ComplexSpec.of(f.b), c=ComplexSpec.of(f.c), d=ComplexSpec.of(f.d))
        case Sum():
            return SumNode(terms=[function_to_node(term) for term in f.terms])
        case Product():
            return ProductNode(factors=[function_to_node(factor) for factor in f.factors])
        case Scale():
            return ScaleNode(factor=ComplexSpec.of(f.factor), child=function_to_node(f.child))
        case Compose():
            return ComposeNode(outer=function_to_node(f.outer), inner=function_to_node(f.inner))
        case OnRegion():
            return OnRegionNode(child=function_to_node(f.child), region=region_to_spec(f.descriptor))
    raise TypeError(f"Cannot serialize {type(f).__name__}")


def function_from_node(node) -> HoloFunction:
    match node:
        case ConstNode():
            return Const(node.value.value)
        case LaurentNode():
            return LaurentPoly(node.center.value, tuple((term.index, term.value.value) for term in node.coefficients))
        case DiscPeakNode():
            return DiscPeak(node.anchor.value, circle_from_spec(node.circle), node.exponent)
        case MoebiusNode():
            return Moebius(node.a.value, node.b.value, node.c.value, node.d.value)
        case SumNode():
            return Sum(tuple(function_from_node(term) for term in node.terms))
        case ProductNode():
            return Product(tuple(function_from_node(factor) for factor in node.factors))
        case ScaleNode():
            return Scale(node.factor.value, function_from_node(node.child))
        case ComposeNode():
            return Compose(function_from_node(node.outer), function_from_node(node.inner))
        case OnRegionNode():
            return OnRegion(function_from_node(node.child), region_from_spec(node.region))
    raise TypeError(f"Unknown function node {type(node).__name__}")


# =============================================================================
# Measures
# =============================================================================


def circle_measure_from_spec(spec: CircleMeasureSpec, radius: float) -> CircleMeasure:
    return CircleMeasure.on_radius(
        radius,
        [(atom.angle, atom.weight.value) for atom in spec.atoms],
        {entry.index: entry.value.value for entry in spec.density},
    )


def circle_measure_to_spec(m: CircleMeasure) -> CircleMeasureSpec:
    return CircleMeasureSpec(
        atoms=[AtomSpec(angle=angle, weight=ComplexSpec.of(w)) for angle, w in m.atoms],
        density=[DensitySpec(index=k, value=ComplexSpec.of(v)) for k, v in m.density],
    )


def measure_from_file(measure_file: MeasureFile) -> AnnulusMeasure:
    r0 = measure_file.r0
    return AnnulusMeasure(
        circle_measure_from_spec(measure_file.inner, r0),
        circle_measure_from_spec(measure_file.outer, 1.0),
        r0,
    )


def decomposition_to_file(m: AnnulusMeasure, decomposition: RieszDecomposition, tolerance: float) -> DecompositionFile:
    J = decomposition.truncation
    pieces = (m.inner, m.outer, decomposition.lambda0, decomposition.eta0, decomposition.eta1, decomposition.lambda1)
    rows: List[CoefficientRow] = []
    for j in range(-J, J + 1):
        inner, outer, lambda0, eta0, eta1, lambda1 = (ComplexSpec.of(fourier_coefficient(piece, j)) for piece in pieces)
        rows.append(CoefficientRow(index=j, inner=inner, outer=outer, lambda0=lambda0, eta0=eta0, eta1=eta1, lambda1=lambda1))
    return DecompositionFile(
        r0=m.r0,
        truncation=J,
        defect=decomposition.defect,
        tolerance=tolerance,
        passed=decomposition.defect <= tolerance,
        inner_tail_bound=decomposition.inner_tail_bound,
        outer_tail_bound=decomposition.outer_tail_bound,
        lambda0=circle_measure_to_spec(decomposition.lambda0),
        eta0=circle_measure_to_spec(decomposition.eta0),
        eta1=circle_measure_to_spec(decomposition.eta1),
        lambda1=circle_measure_to_spec(decomposition.lambda1),
        coefficients=rows,
    )


# =============================================================================
# Results
# =============================================================================


def result_to_file(problem_file: ProblemFile, options: SolverOptions, result: ExtensionResult) -> ResultFile:
    margins = result.margins
    return ResultFile(
        kind=result.kind,
        problem=problem_file,
        options=options,
        function=function_to_node(result.F),
        terms=list(result.terms),
        margins=MarginsSpec(gamma=margins.gamma, eps=margins.eps, delta=margins.delta) if margins is not None else None,
        report=result.report,
    )


def result_from_file(result_file: ResultFile) -> Tuple[ExtensionProblem, ExtensionResult, SolverOptions]:
    problem, _ = problem_from_file(result_file.problem)
    try:
        F = function_from_node(result_file.function)
    except EvaluationError as e:
        raise ProblemError(f"function: {e}") from e
    margins = result_file.margins
    result = ExtensionResult(
        F=F,
        kind=result_file.kind,
        margins=GlueMargins(margins.gamma, margins.eps, margins.delta) if margins is not None else None,
        report=result_file.report,
        terms=list(result_file.terms),
    )
    return problem, result, result_file.options


def boundary_rows(problem: ExtensionProblem, F: HoloFunction, n_samples: int) -> List[List[float]]:
    """Per component and sample angle: re F, im F, |F| and M."""
    angles = sample_angles(n_samples)
    rows = []
    for j, circle in enumerate(problem.domain.components):
        values = evaluate(F, circle.center + circle.radius * np.exp(1j * angles))
        bounds = problem.bound(j).at_angle(angles)
        for angle, value, bound in zip(angles, values, bounds):
            rows.append([j, float(angle), value.real, value.imag, abs(value), float(bound)])
    return rows
