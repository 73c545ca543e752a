import numpy as np

# (1,1)-profiled Gaussian: (1/(32 pi))^(1/4) exp(-x^2/16) (1, 1)
GAUSS11_NORM = (1.0 / (32.0 * np.pi)) ** 0.25
GAUSS11_EXPONENT = 1.0 / 16.0
GAUSS11_WIDTH = 2.0

# The boost sign is chosen so that the mean momentum is +3/4 under the
# exp(-i p x) analysis convention (main packet moves right).
BOOST_MOMENTUM = 0.75

# upper-component Gaussian: (1/(4 pi))^(1/4) exp(-x^2/8) (1, 0)
GAUSS10_NORM = (1.0 / (4.0 * np.pi)) ** 0.25
GAUSS10_EXPONENT = 1.0 / 8.0
GAUSS10_WIDTH = np.sqrt(2.0)

# positive/negative energy pair, momentum space exp(-b (p -/+ p0)^2)
POSNEG_MOMENTUM = 0.8
POSNEG_EXPONENT = 4.0

# extent of a packet in density standard deviations
EXTENT_WIDTHS = 8.0

RESOLUTION_TOLERANCE = 1e-10

PACKET_KINDS = (
    "gauss11",
    "gauss11_boosted",
    "gauss10",
    "posneg_pair",
    "custom",
    "schrodinger",
)

UNRESOLVED_POSITION_MESSAGE = (
    "The packet is not resolved: its amplitude at the domain edge is {ratio:.2e} "
    "of its maximum. Increase grid.l."
)
UNRESOLVED_MOMENTUM_MESSAGE = (
    "The packet is not resolved: its momentum amplitude at p_max = {p_max:.3g} is "
    "{ratio:.2e} of its maximum. Increase grid.n or decrease grid.l."
)
