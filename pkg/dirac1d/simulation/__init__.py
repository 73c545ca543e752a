from .simulator import (
    RunManifest,
    SimulationResult,
    Simulator,
    default_run_name,
    run_simulation,
)

__all__ = [
    "RunManifest",
    "SimulationResult",
    "Simulator",
    "default_run_name",
    "run_simulation",
]
