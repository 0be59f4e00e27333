"""Exact Prym and Prym-Tyurin lattice computations for branched covers of
the line built from signed-permutation monodromy."""

from . import corr, cover, lattice, prym, surface, weyl
from .cover import MonodromyDatum, induce, predict, random_simple
from .lattice import PolarizedLattice, dual_type, ptype, snf
from .prym import conjecture_probe, mu_check, prym_lattice, prym_tyurin_lattice, verify_scenario
from .weyl import OrbitKind, SignedPerm, classify_subgroup, reflection

__version__ = "0.1.0"

__all__ = [
    "MonodromyDatum",
    "OrbitKind",
    "PolarizedLattice",
    "SignedPerm",
    "classify_subgroup",
    "conjecture_probe",
    "corr",
    "cover",
    "dual_type",
    "induce",
    "lattice",
    "mu_check",
    "predict",
    "prym",
    "prym_lattice",
    "prym_tyurin_lattice",
    "ptype",
    "random_simple",
    "reflection",
    "snf",
    "surface",
    "verify_scenario",
    "weyl",
]
