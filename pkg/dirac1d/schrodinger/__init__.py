from .schrodinger import (
    NonrelGaussian,
    ScalarField,
    evolve_schrodinger,
    make_nonrel_packet,
    nonrel_density,
    nonrel_width,
)

__all__ = [
    "NonrelGaussian",
    "ScalarField",
    "evolve_schrodinger",
    "make_nonrel_packet",
    "nonrel_density",
    "nonrel_width",
]
