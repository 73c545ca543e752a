from .models import (
    Grid,
    Spinor2,
    Mat2,
    SpinorField,
    MomentumSpinorField,
    check_same_grid,
)
from .fourier import (
    inner_product,
    inverse_transform_array,
    to_momentum,
    to_position,
    transform_array,
)

__all__ = [
    "Grid",
    "Spinor2",
    "Mat2",
    "SpinorField",
    "MomentumSpinorField",
    "check_same_grid",
    "inner_product",
    "inverse_transform_array",
    "to_momentum",
    "to_position",
    "transform_array",
]
