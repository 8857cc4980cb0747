"""Matrix-free numerics for the 16-component two-particle Dirac-Coulomb
operator: exact matrix identities, pseudospectral operator application on
a periodic 6D grid, a Lanczos eigensolver, and spectral probes.
"""

__version__ = "0.1.0"
