"""susyscatter - scattering off a complex SUSY partner of a singular radial potential.

Closed-form S-matrices and cross sections for the non-Hermitian partner H and its
Hermitian counterpart h, an ODE oracle that checks them, and resonance tools that
show how proximity to a spectral singularity turns into a resonance.
"""

__version__ = "0.1.0"
