"""Sampled verification of constructed extensions.

Every check works from the problem, the expression tree and the stored margins
alone, so a result read back from disk is verified exactly like a fresh one.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config import SolverOptions, get_solver_options, get_verification_config
from ..geometry.domain import Circle, Domain
from ..holomorphic.expressions import HoloFunction, OnRegion, Product, Sum, evaluate
from ..holomorphic.verification import holomorphy_residual, sup_on_circle
from ..logging_config import get_logger
from ..results import GlueMargins, ProductCheck, VerificationReport
from .problem import ComponentSampling, ExtensionProblem, sample_components

logger = get_logger(__name__)


def holomorphy_annuli(domain: Domain) -> List[Tuple[complex, float, float]]:
    """Concentric annuli inside the domain: one around each hole, or one in the disc.

    Around hole j the radii sit at a quarter and three quarters of the gap to the
    nearest other boundary circle.
    """
    if domain.k == 1:
        outer = domain.outer
        return [(outer.center, 0.5 * outer.radius, 0.9 * outer.radius)]

    annuli = []
    for j, hole in enumerate(domain.holes, start=1):
        gaps = [domain.outer.radius - abs(hole.center - domain.outer.center) - hole.radius]
        gaps += [abs(hole.center - other.center) - hole.radius - other.radius for i, other in enumerate(domain.holes, start=1) if i != j]
        gap = min(gaps)
        annuli.append((hole.center, hole.radius + 0.25 * gap, hole.radius + 0.75 * gap))
    return annuli


def constraint_discs(p: ExtensionProblem) -> List[Tuple[complex, float, float]]:
    """Concentric circles inside the domain that pass close to each constraint point.

    For a point with clearance c to every other boundary circle, d = min(c, r_j) / 4
    and the circles have radii d / 2 and 3 d / 2 around the point moved 2 d into the
    domain, so the larger circle comes within d / 2 of the point.
    """
    circles = p.domain.components
    discs = []
    for j, circle in enumerate(circles):
        points, _ = p.targets(j)
        for point in points:
            direction = (point - circle.center) / abs(point - circle.center)
            inward = -direction if j == 0 else direction
            clearances = [circle.radius]
            for i, other in enumerate(circles):
                if i == j:
                    continue
                distance = abs(point - other.center)
                clearances.append(other.radius - distance if i == 0 else distance - other.radius)
            d = 0.25 * min(clearances)
            discs.append((complex(point + 2 * d * inward), 0.5 * d, 1.5 * d))
    return discs


def split_glued(F: HoloFunction, terms: Sequence[int]) -> Optional[List[Tuple[int, HoloFunction, HoloFunction]]]:
    """(l, F_l, h_l) for each summand of a glued F, or None if F has another shape."""
    body = F.child if isinstance(F, OnRegion) else F
    if not isinstance(body, Sum) or len(body.terms) != len(terms):
        return None
    pieces = []
    for l, term in zip(terms, body.terms):
        if not isinstance(term, Product) or len(term.factors) != 2:
            return None
        pieces.append((l, term.factors[0], term.factors[1]))
    return pieces


def _interpolation_residual(p: ExtensionProblem, F: HoloFunction) -> float:
    residual = 0.0
    for j in range(p.k):
        points, values = p.targets(j)
        if points.size:
            residual = max(residual, float(np.max(np.abs(evaluate(F, points) - values))))
    return residual


def _product_checks(p: ExtensionProblem, pieces, margins: GlueMargins, sampling: ComponentSampling, tolerance: float) -> List[ProductCheck]:
    k = p.k
    own_limit = (1 + margins.eps) ** (k - 1)
    other_limit = margins.delta * (1 + margins.eps) ** (k - 2)
    checks = []
    for l, _, h in pieces:
        points, _ = p.targets(l)
        one = float(np.max(np.abs(evaluate(h, points) - 1))) if points.size else 0.0
        zero = 0.0
        other_sup = 0.0
        for m in range(k):
            if m == l:
                continue
            others, _ = p.targets(m)
            if others.size:
                zero = max(zero, float(np.max(np.abs(evaluate(h, others)))))
            other_sup = max(other_sup, float(np.max(np.abs(evaluate(h, sampling.points[m])))))
        own_sup = float(np.max(np.abs(evaluate(h, sampling.points[l]))))
        check = ProductCheck(
            component=l,
            one_on_own=one,
            zero_elsewhere=zero,
            bound_own_ratio=own_sup / own_limit,
            bound_other_ratio=other_sup / other_limit,
            passed=one <= tolerance and zero <= tolerance and own_sup < own_limit and other_sup < other_limit,
        )
        checks.append(check)
    return checks


def _bound_chain_excess(p: ExtensionProblem, F_values: List[np.ndarray], pieces, margins: GlueMargins, sampling: ComponentSampling) -> float:
    """max over samples of |F| - chain and chain - M, where chain is the glued estimate."""
    k = p.k
    moduli = np.zeros((k, k, sampling.points[0].size))
    for l, F_l, _ in pieces:
        for j in range(k):
            moduli[l, j] = np.abs(evaluate(F_l, sampling.points[j]))

    excess = -np.inf
    for j in range(k):
        others = moduli[:, j].sum(axis=0) - moduli[j, j]
        chain = (1 + margins.eps) ** (k - 1) * moduli[j, j] + margins.delta * (1 + margins.eps) ** (k - 2) * others
        excess = max(excess, float(np.max(np.abs(F_values[j]) - chain)), float(np.max(chain - sampling.bounds[j])))
    return excess


def verify_extension(
    p: ExtensionProblem,
    F: HoloFunction,
    kind: str,
    margins: Optional[GlueMargins] = None,
    terms: Sequence[int] = (),
    options: Optional[SolverOptions] = None,
) -> VerificationReport:
    """Re-run every sampled check of an extension and collect the numbers.

    ``kind`` is ``"disc"`` for one-circle problems, ``"glue"`` for glued
    extensions and ``"punctures"`` for puncture interpolation; the last carries
    no bound margins because no bound is enforced there.
    """
    options = options or get_solver_options()
    config = get_verification_config()
    sampling = sample_components(p, options.boundary_samples)
    failures: List[str] = []

    interpolation = _interpolation_residual(p, F)
    tolerance = config.disc_interpolation_tol if kind == "disc" else config.interpolation_tol
    if interpolation > tolerance:
        failures.append(f"interpolation residual {interpolation:.3e} > {tolerance:.1e}")

    puncture_residual = None
    if p.domain.n_punctures:
        punctures = np.asarray(p.domain.punctures, dtype=complex)
        puncture_residual = float(np.max(np.abs(evaluate(F, punctures) - np.asarray(p.puncture_values))))
        if puncture_residual > config.interpolation_tol:
            failures.append(f"puncture residual {puncture_residual:.3e} > {config.interpolation_tol:.1e}")

    F_values = [evaluate(F, points) for points in sampling.points]
    bound_margins = None
    if kind != "punctures":
        bound_margins = [float(np.min(bounds - np.abs(values))) for values, bounds in zip(F_values, sampling.bounds)]
        for j, margin in enumerate(bound_margins):
            if margin < 0:
                failures.append(f"sampled |F| exceeds M on component {j} by {-margin:.3e}")

    holomorphy = []
    interior_sup = 0.0
    for center, rho1, rho2 in holomorphy_annuli(p.domain):
        residual = holomorphy_residual(F, center, rho1, rho2, config.holomorphy_order)
        holomorphy.append(residual)
        if residual > config.holomorphy_tol:
            failures.append(f"holomorphy residual {residual:.3e} around {center} > {config.holomorphy_tol:.1e}")
        for radius in (rho1, rho2):
            interior_sup = max(interior_sup, sup_on_circle(F, Circle(center, radius), options.boundary_samples))
    for center, rho1, rho2 in constraint_discs(p):
        residual = holomorphy_residual(F, center, rho1, rho2, config.holomorphy_order)
        holomorphy.append(residual)
        if residual > config.holomorphy_tol:
            failures.append(f"holomorphy residual {residual:.3e} near constraint point {center} > {config.holomorphy_tol:.1e}")
    boundary_sup = max(float(np.max(np.abs(values))) for values in F_values)
    max_modulus_excess = max(0.0, interior_sup - boundary_sup)
    if max_modulus_excess > config.max_modulus_slack:
        failures.append(f"interior sup exceeds boundary sup by {max_modulus_excess:.3e}")

    product_checks = None
    chain_excess = None
    if kind == "glue" and margins is not None and terms:
        pieces = split_glued(F, terms)
        if pieces is None:
            failures.append("glued function does not have the sum-of-products shape")
        else:
            product_checks = _product_checks(p, pieces, margins, sampling, config.product_tol)
            for check in product_checks:
                if not check.passed:
                    failures.append(f"separating product of component {check.component} failed")
            chain_excess = _bound_chain_excess(p, F_values, pieces, margins, sampling)
            if chain_excess > config.chain_slack:
                failures.append(f"bound chain exceeded by {chain_excess:.3e}")

    for failure in failures:
        logger.warning(f"Verification ({kind}): {failure}")

    return VerificationReport(
        kind=kind,
        passed=not failures,
        failures=failures,
        interpolation_residual=interpolation,
        puncture_residual=puncture_residual,
        holomorphy_residuals=holomorphy,
        bound_margins=bound_margins,
        max_modulus_excess=max_modulus_excess,
        margins=margins.as_dict() if margins is not None else None,
        product_checks=product_checks,
        bound_chain_excess=chain_excess,
        sample_count=sampling.count,
    )
