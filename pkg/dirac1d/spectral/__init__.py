from .spectral import (
    DiracPropagator,
    EnergySign,
    ModeSystem,
    Propagator,
    SchrodingerPropagator,
    create_propagator,
    dispersion,
    eigensystem,
    evolve,
    evolve_position,
    evolve_quadrature_oracle,
    h0_matrix,
    project,
)

__all__ = [
    "DiracPropagator",
    "EnergySign",
    "ModeSystem",
    "Propagator",
    "SchrodingerPropagator",
    "create_propagator",
    "dispersion",
    "eigensystem",
    "evolve",
    "evolve_position",
    "evolve_quadrature_oracle",
    "h0_matrix",
    "project",
]
