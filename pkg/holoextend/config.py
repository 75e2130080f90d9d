from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

# =============================================================================
# Core Configuration Classes
# =============================================================================


class SolverOptions(BaseModel):
    """Options shared by the disc, annulus and gluing solvers."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_rounds: int = Field(default=40, ge=1, description="Exponent doublings before giving up")
    safety: float = Field(default=0.95, gt=0, lt=1, description="Sampled |F| must stay below safety * M")
    boundary_samples: int = Field(default=4096, ge=8, description="Equally spaced samples per boundary circle")
    cross_peak_budget: float = Field(default=0.1, gt=0, lt=1, description="Total off-diagonal mass allowed per row of the peak system")
    max_retries: int = Field(default=8, ge=1, description="Augmentation retries for puncture interpolation")
    workers: int = Field(default=1, ge=1, description="Threads used for independent component and pair solves")
    min_separation: float = Field(default=1e-9, gt=0, description="Minimum distance between constraint points")
    max_exponent: int = Field(default=2**40, ge=1, description="Largest peak exponent before a solve is abandoned")


class VerificationConfig(BaseModel):
    """Thresholds used when verifying constructed functions."""

    interpolation_tol: float = Field(default=1e-9, gt=0, description="Glue and puncture interpolation tolerance")
    disc_interpolation_tol: float = Field(default=1e-10, gt=0, description="Single-chart interpolation tolerance")
    holomorphy_tol: float = Field(default=1e-8, gt=0, description="Two-radius Laurent residual tolerance")
    holomorphy_order: int = Field(default=32, ge=1, description="Laurent truncation order for holomorphy checks")
    holomorphy_samples: int = Field(default=2048, ge=8, description="FFT length for holomorphy checks (power of two)")
    max_modulus_slack: float = Field(default=1e-9, ge=0, description="Slack for interior versus boundary suprema")
    chain_slack: float = Field(default=1e-9, ge=0, description="Slack for the glued bound chain")
    product_tol: float = Field(default=1e-9, gt=0, description="Tolerance for separating products at constraint points")


class MeasureConfig(BaseModel):
    """Defaults for measure decomposition."""

    truncation: int = Field(default=64, ge=1, description="Truncation order J of Fourier tables")
    hypothesis_tolerance: float = Field(default=1e-9, gt=0, description="Allowed coefficient defect for the annular hypothesis")


class GeometryConfig(BaseModel):
    """Tolerances for circle geometry."""

    gap_tolerance: float = Field(default=1e-9, gt=0, description="Required gap between nested or disjoint circles")
    on_circle_tolerance: float = Field(default=1e-10, gt=0, description="Distance from a circle still counted as on it")
    chart_tolerance: float = Field(default=1e-10, gt=0, description="Boundary correspondence tolerance of charts")
    chart_check_samples: int = Field(default=512, ge=8, description="Samples used by the chart post-check")


class LoggingConfig(BaseModel):
    """Logging configuration."""

    level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Optional log file")


# =============================================================================
# Unified Configuration Class
# =============================================================================


class UnifiedConfig(BaseModel):
    """Unified configuration for holoextend."""

    solver: SolverOptions = Field(default_factory=SolverOptions)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    measure: MeasureConfig = Field(default_factory=MeasureConfig)
    geometry: GeometryConfig = Field(default_factory=GeometryConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


# =============================================================================
# Configuration Constants and Defaults
# =============================================================================


DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "solver": {
        "max_rounds": 40,
        "safety": 0.95,
        "boundary_samples": 4096,
        "workers": 1,
    },
    "measure": {
        "truncation": 64,
        "hypothesis_tolerance": 1e-9,
    },
    "logging": {
        "level": "WARNING",
    },
}


# =============================================================================
# Global Configuration Instance
# =============================================================================


_config: Optional[UnifiedConfig] = None


def get_config() -> UnifiedConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = UnifiedConfig()
    return _config


def reset_config() -> None:
    """Reset the global configuration instance."""
    global _config
    _config = None


def update_config(**kwargs) -> UnifiedConfig:
    """Replace configuration sections, e.g. ``update_config(solver=SolverOptions(safety=0.9))``."""
    global _config
    if _config is None:
        _config = UnifiedConfig(**kwargs)
    else:
        _config = _config.model_copy(update=kwargs)
    return _config


# =============================================================================
# Section accessors
# =============================================================================


def get_solver_options(**overrides) -> SolverOptions:
    """Solver options from the global configuration with per-call overrides."""
    options = get_config().solver
    if overrides:
        options = SolverOptions(**{**options.model_dump(), **overrides})
    return options


def get_verification_config() -> VerificationConfig:
    return get_config().verification


def get_measure_config() -> MeasureConfig:
    return get_config().measure


def get_geometry_config() -> GeometryConfig:
    return get_config().geometry
