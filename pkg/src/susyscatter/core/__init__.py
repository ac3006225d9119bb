"""Domain types and closed-form x-space objects of the toy model."""

from susyscatter.core.darboux import darboux_map, equation_residual
from susyscatter.core.params import (
    ComplexCurve,
    KGrid,
    ModelParams,
    PotentialTag,
    RealCurve,
    WaveSolution,
    XGrid,
)
from susyscatter.core.potentials import (
    RadialPotential,
    background_potential,
    free_potential,
    jost_u,
    partner_potential,
    phi_at_alpha,
    potential_V,
    psi0,
    psi0_derivative,
    scattering_state,
    soliton_form,
    superpotential_w,
    v0,
)

__all__ = [
    "ComplexCurve",
    "KGrid",
    "ModelParams",
    "PotentialTag",
    "RadialPotential",
    "RealCurve",
    "WaveSolution",
    "XGrid",
    "background_potential",
    "darboux_map",
    "equation_residual",
    "free_potential",
    "jost_u",
    "partner_potential",
    "phi_at_alpha",
    "potential_V",
    "psi0",
    "psi0_derivative",
    "scattering_state",
    "soliton_form",
    "superpotential_w",
    "v0",
]
