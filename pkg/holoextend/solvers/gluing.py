"""Bounded extensions on k-connected circle domains.

Each component j gets an extension F_j on the one-circle region D_j, each
ordered pair (j, l) a separating function h_{j,l} on the two-circle region
D_{j,l}, and the result is F = sum_j F_j h_j with h_j = prod_{l != j} h_{j,l}.
The margins gamma, eps and delta tie the pieces together:

    (1 + eps)^(k-1) |F_j| < |F_j| + gamma < M - gamma            on component j
    delta (1 + eps)^(k-2) sum_{l != j} |F_l| < gamma             on component j

Interior points (punctures) are interpolated afterwards with Lagrange-weighted
functions that vanish on the boundary constraints.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..config import SolverOptions, get_solver_options
from ..conformal.moebius import chart_region, pair_chart
from ..errors import (
    DeltaMarginViolated,
    EpsMarginViolated,
    GlueBoundViolated,
    InfeasibleBound,
    ProblemError,
    PunctureDegenerate,
)
from ..geometry.domain import RegionRef, derived_region
from ..holomorphic.expressions import (
    Compose,
    Const,
    HoloFunction,
    LaurentPoly,
    OnRegion,
    Product,
    Scale,
    Sum,
    evaluate,
    is_zero_constant,
)
from ..logging_config import get_logger
from ..results import ExtensionResult, GlueMargins
from .annulus_solver import separating_function
from .bounds import BoundFunction
from .checks import verify_extension
from .disc_solver import BoundaryConstraint, augmentation_angle, extend_region
from .problem import ComponentSampling, ExtensionProblem, extension_moduli, sample_components

logger = get_logger(__name__)

# |H(p)| below this counts as a root of the vanishing helper at the puncture
PUNCTURE_FLOOR = 1e-8


# =============================================================================
# Margins
# =============================================================================


def choose_gamma(p: ExtensionProblem, sampling: Optional[ComponentSampling] = None) -> float:
    """One third of the smallest slack M - |f| on E, and of the smallest sampled M."""
    sampling = sampling or sample_components(p)
    candidates = [float(np.min(bounds)) for bounds in sampling.bounds]
    for j in range(p.k):
        points, values = p.targets(j)
        if points.size == 0:
            continue
        slack = p.bound_at(j, points) - np.abs(values)
        if np.any(slack <= 0):
            index = int(np.argmin(slack))
            raise InfeasibleBound(f"Target |f| = {abs(values[index])} is not below M at {points[index]} on component {j}")
        candidates.append(float(np.min(slack)))
    gamma = min(candidates) / 3
    logger.info(f"Chose gamma = {gamma:.6g}")
    return gamma


def eps_from_sup(S: float, gamma: float, k: int) -> float:
    """(1 + gamma / (2 S))^(1 / (k - 1)) - 1, with S = 0 read as 1."""
    if k < 2:
        raise ValueError(f"eps needs at least two boundary components, got k = {k}")
    S = S if S > 0 else 1.0
    return float(np.expm1(np.log1p(gamma / (2 * S)) / (k - 1)))


def delta_from_sup(T: float, eps: float, gamma: float, k: int) -> float:
    """gamma / (2 (1 + eps)^(k-2) T), with T = 0 read as 1."""
    T = T if T > 0 else 1.0
    return 0.5 * gamma / ((1 + eps) ** (k - 2) * T)


def choose_eps(extensions: Sequence[HoloFunction], gamma: float, k: int, sampling: ComponentSampling, moduli: Optional[np.ndarray] = None) -> float:
    moduli = extension_moduli(extensions, sampling) if moduli is None else moduli
    S = max(float(np.max(moduli[j, j])) for j in range(k))
    eps = eps_from_sup(S, gamma, k)

    for j in range(k):
        own = moduli[j, j]
        grown = (1 + eps) ** (k - 1) * own
        if np.any(grown >= own + gamma) or np.any(own + gamma >= sampling.bounds[j] - gamma):
            raise EpsMarginViolated(f"eps = {eps:.6g} violates the growth margin on component {j} (sup |F_j| = {np.max(own):.6g}, gamma = {gamma:.6g})")
    logger.info(f"Chose eps = {eps:.6g} from S = {S:.6g}")
    return eps


def choose_delta(extensions: Sequence[HoloFunction], eps: float, gamma: float, k: int, sampling: ComponentSampling, moduli: Optional[np.ndarray] = None) -> float:
    moduli = extension_moduli(extensions, sampling) if moduli is None else moduli
    others = [moduli[:, j].sum(axis=0) - moduli[j, j] for j in range(k)]
    T = max(float(np.max(other)) for other in others)
    delta = delta_from_sup(T, eps, gamma, k)

    for j, other in enumerate(others):
        if np.any(delta * (1 + eps) ** (k - 2) * other >= gamma):
            raise DeltaMarginViolated(f"delta = {delta:.6g} violates the cross-component margin on component {j}")
    logger.info(f"Chose delta = {delta:.6g} from T = {T:.6g}")
    return delta


# =============================================================================
# Component and pair solves
# =============================================================================


def _run_parallel(fn: Callable, items: Sequence, workers: int) -> List:
    """Map fn over items; results keep the order of items."""
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def component_extension(p: ExtensionProblem, j: int, gamma: float, opts: SolverOptions) -> HoloFunction:
    """F_j on D_j with F_j = f on E and sampled |F_j| < M - 2 gamma on component j.

    The sampled safety factor is relaxed to (1 + max |f| / (M - 2 gamma)) / 2
    when the targets sit closer to M - 2 gamma than the global safety allows.
    """
    points, values = p.targets(j)
    bound = p.bound(j).shifted(-2 * gamma)
    ratio = float(np.max(np.abs(values) / bound.at_angle(p.domain.component(j).angles_of(points)))) if points.size else 0.0
    local = opts.model_copy(update={"safety": max(opts.safety, (1 + ratio) / 2)})
    region = derived_region(p.domain, RegionRef.simply(j))
    F = extend_region(region, BoundaryConstraint(points, values, bound), local)
    logger.debug(f"Component {j}: {points.size} constraints, safety {local.safety:.4f}")
    return F


def pair_separator(p: ExtensionProblem, j: int, l: int, eps: float, delta: float, opts: SolverOptions) -> HoloFunction:
    """h_{j,l} on D_{j,l}: 1 on E of component j, 0 on E of component l."""
    chart = pair_chart(p.domain, j, l)
    keep = np.atleast_1d(chart.forward(p.targets(j)[0]))
    kill = np.atleast_1d(chart.forward(p.targets(l)[0]))
    h = separating_function(chart.r0, keep, kill, eps, delta, opts, keep_on_outer=chart.source_outer == j)
    if isinstance(h, Const):
        return h
    return OnRegion(Compose(h, chart.map.as_holo()), chart_region(p.domain, chart))


# =============================================================================
# Gluing
# =============================================================================


def glue(p: ExtensionProblem, opts: Optional[SolverOptions] = None) -> ExtensionResult:
    """F holomorphic on the domain with F = f on E and sampled |F| <= M on the boundary."""
    opts = opts or get_solver_options()
    k = p.k
    if k < 2:
        raise ProblemError(f"Gluing needs at least two boundary components, got k = {k}")
    if p.domain.n_punctures:
        raise ProblemError("Gluing ignores punctures; use interpolate_with_punctures")

    sampling = sample_components(p, opts.boundary_samples)
    gamma = choose_gamma(p, sampling)
    extensions = _run_parallel(lambda j: component_extension(p, j, gamma, opts), range(k), opts.workers)
    moduli = extension_moduli(extensions, sampling)
    eps = choose_eps(extensions, gamma, k, sampling, moduli)
    delta = choose_delta(extensions, eps, gamma, k, sampling, moduli)
    margins = GlueMargins(gamma, eps, delta)

    active = [j for j in range(k) if not is_zero_constant(extensions[j])]
    if not active:
        F: HoloFunction = Const(0)
    else:
        pairs = [(j, l) for j in active for l in range(k) if l != j]
        separators = _run_parallel(lambda pair: pair_separator(p, pair[0], pair[1], eps, delta, opts), pairs, opts.workers)
        products: Dict[int, List[HoloFunction]] = {j: [] for j in active}
        for (j, _), h in zip(pairs, separators):
            products[j].append(h)
        summands = tuple(Product((extensions[j], Product(tuple(products[j])))) for j in active)
        F = OnRegion(Sum(summands), derived_region(p.domain, RegionRef.full()))

    report = verify_extension(p, F, "glue", margins, active, opts)
    if report.bound_margins is not None and min(report.bound_margins) < 0:
        raise GlueBoundViolated(f"Sampled |F| exceeds M by {-min(report.bound_margins):.3e}")
    logger.info(f"Glued {len(active)} component extensions on a {k}-connected domain")
    return ExtensionResult(F, "glue", margins, report, active)


# =============================================================================
# Punctures
# =============================================================================


def _vanishing_problem(p: ExtensionProblem, attempt: int) -> ExtensionProblem:
    """Zero targets on E' plus one augmentation point with target 0.5, M = 1.

    Attempt t augments component t mod k, moving along its widest gap with t // k.
    """
    component = attempt % p.k
    constraints = []
    for j in range(p.k):
        points = list(p.targets(j)[0])
        values = [0j] * len(points)
        if j == component:
            circle = p.domain.component(j)
            angle = augmentation_angle(circle.angles_of(points), attempt // p.k)
            points.append(circle.point(angle))
            values.append(0.5 + 0j)
        constraints.append(BoundaryConstraint(tuple(points), tuple(values), BoundFunction.const(1.0)))
    return ExtensionProblem(p.domain.without_punctures(), tuple(constraints))


def interpolate_with_punctures(p: ExtensionProblem, opts: Optional[SolverOptions] = None) -> ExtensionResult:
    """F = f on E' and F(p_j) = w_j; no bound is enforced."""
    opts = opts or get_solver_options()
    if not p.domain.punctures:
        return glue(p, opts)
    if p.k < 2:
        raise ProblemError(f"Puncture interpolation needs at least two boundary components, got k = {p.k}")

    F_hat = glue(p.without_punctures(), opts).F
    punctures = np.asarray(p.domain.punctures, dtype=complex)
    F_hat_at = np.atleast_1d(evaluate(F_hat, punctures))

    helpers: Dict[int, HoloFunction] = {}

    def helper(attempt: int) -> HoloFunction:
        if attempt not in helpers:
            helpers[attempt] = glue(_vanishing_problem(p, attempt), opts).F
        return helpers[attempt]

    corrections = []
    for j, pj in enumerate(punctures):
        for attempt in range(opts.max_retries):
            H_hat = helper(attempt)
            value = evaluate(H_hat, pj)
            if abs(value) >= PUNCTURE_FLOOR:
                break
            logger.debug(f"Vanishing helper {attempt} has |H(p_{j})| = {abs(value):.3e}; retrying")
        else:
            raise PunctureDegenerate(f"Vanishing helper stays below {PUNCTURE_FLOOR} at puncture {pj} after {opts.max_retries} augmentations")

        lagrange = tuple(LaurentPoly(pi, ((1, 1 / (pj - pi)),)) for i, pi in enumerate(punctures) if i != j)
        H_j = Scale(1 / value, Product((H_hat,) + lagrange))
        corrections.append(Scale(p.puncture_values[j] - F_hat_at[j], H_j))

    F = OnRegion(Sum((F_hat,) + tuple(corrections)), derived_region(p.domain, RegionRef.full()))
    report = verify_extension(p, F, "punctures", None, [], opts)
    logger.info(f"Interpolated {len(punctures)} punctures with {len(helpers)} vanishing helpers")
    return ExtensionResult(F, "punctures", None, report, [])


def solve_problem(p: ExtensionProblem, opts: Optional[SolverOptions] = None) -> ExtensionResult:
    """Dispatch by shape: one circle, punctures, or a plain k-connected domain."""
    opts = opts or get_solver_options()
    if p.k == 1:
        if p.domain.n_punctures:
            raise ProblemError("Punctures need at least two boundary components")
        F = extend_region(derived_region(p.domain, RegionRef.simply(0)), p.constraints[0], opts)
        return ExtensionResult(F, "disc", None, verify_extension(p, F, "disc", None, [], opts), [])
    if p.domain.n_punctures:
        return interpolate_with_punctures(p, opts)
    return glue(p, opts)
