"""Exact workbench for convolution equations on integer lattices."""

from .scalars import GaussianRational, gaussian
from .measures import (
    Exponential,
    Measure,
    convolve,
    delta,
    difference_measure,
    difference_product,
    trivial_exponential,
)
from .polynomials import Polynomial
from .exppoly import (
    ExpPolynomial,
    act,
    evaluate,
    frechet_order,
    translate_closure,
    translate_span_dim,
)
from .fourier import LaurentPoly, inverse_transform, transform
from .derivations import Derivation, compose, identity_derivation, moment
from .ideals import (
    DualSpaceBasis,
    IdealHandle,
    derivation_ideal_member,
    difference_closure,
    max_ideal_power_member,
    member,
    vanishing_order,
)
from .synthesis import (
    LocalizabilityReport,
    SolutionBasis,
    SystemSolution,
    WindowSolution,
    biadditive_demo,
    default_window,
    localizability_witness,
    solve_at_root,
    solve_system,
    window_oracle,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "gaussian",
    "Exponential",
    "Measure",
    "convolve",
    "delta",
    "difference_measure",
    "difference_product",
    "trivial_exponential",
    "Polynomial",
    "ExpPolynomial",
    "act",
    "evaluate",
    "frechet_order",
    "translate_closure",
    "translate_span_dim",
    "LaurentPoly",
    "inverse_transform",
    "transform",
    "Derivation",
    "compose",
    "identity_derivation",
    "moment",
    "DualSpaceBasis",
    "IdealHandle",
    "derivation_ideal_member",
    "difference_closure",
    "max_ideal_power_member",
    "member",
    "vanishing_order",
    "LocalizabilityReport",
    "SolutionBasis",
    "SystemSolution",
    "WindowSolution",
    "biadditive_demo",
    "default_window",
    "localizability_witness",
    "solve_at_root",
    "solve_system",
    "window_oracle",
    "errors",
]
