from .observables import (
    ContrastProfile,
    DensityProfile,
    MomentumDensityPair,
    ObservableSeries,
    Profile,
    classical_velocity_mean,
    density,
    energy_weights,
    group_velocity,
    instantaneous_velocity_mean,
    interference_contrast,
    mean_momentum,
    mean_position,
    momentum_decomposition,
    phase_velocity,
    split_energy,
    variance_position,
    worldline,
    zbw_matrices,
    zbw_mean,
)
from .peaks import (
    PeakTrack,
    PeakTrackingResult,
    centroid_speed,
    find_maxima,
    track_peaks,
)

__all__ = [
    "ContrastProfile",
    "DensityProfile",
    "MomentumDensityPair",
    "ObservableSeries",
    "Profile",
    "classical_velocity_mean",
    "density",
    "energy_weights",
    "group_velocity",
    "instantaneous_velocity_mean",
    "interference_contrast",
    "mean_momentum",
    "mean_position",
    "momentum_decomposition",
    "phase_velocity",
    "split_energy",
    "variance_position",
    "worldline",
    "zbw_matrices",
    "zbw_mean",
    "PeakTrack",
    "PeakTrackingResult",
    "centroid_speed",
    "find_maxima",
    "track_peaks",
]
