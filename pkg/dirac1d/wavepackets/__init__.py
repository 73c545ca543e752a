from .packets import (
    PacketSpec,
    check_resolution,
    gaussian_profile,
    make_custom,
    make_gauss10,
    make_gauss11,
    make_gauss11_boosted,
    make_packet,
    make_posneg_pair,
    parity,
    posneg_parts,
    translate,
)
from .constants import BOOST_MOMENTUM, PACKET_KINDS, POSNEG_MOMENTUM

__all__ = [
    "PacketSpec",
    "check_resolution",
    "gaussian_profile",
    "make_custom",
    "make_gauss10",
    "make_gauss11",
    "make_gauss11_boosted",
    "make_packet",
    "make_posneg_pair",
    "parity",
    "posneg_parts",
    "translate",
    "BOOST_MOMENTUM",
    "PACKET_KINDS",
    "POSNEG_MOMENTUM",
]
