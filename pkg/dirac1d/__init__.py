"""Free Dirac equation in one space dimension: spectral evolution, energy
projections and the observables behind Zitterbewegung."""

__version__ = "0.1.0"
