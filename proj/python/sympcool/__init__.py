"""Sympathetic cooling of trapped molecular ions.

Analytic collision kinematics, cooling cascades and accumulated rotational
excitation, with a Monte Carlo cross-check. Thin wrapper over the C++ core;
every quantity is in Hartree atomic units and the CM frame unless a name
says otherwise. See sympcool.units for the conversions.
"""

from ._core import (
    BracketError,
    ParseError,
    cascade,
    ensemble,
    kinematics,
    montecarlo,
    rotation,
    species,
    units,
    validation,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "ParseError",
    "cascade",
    "ensemble",
    "kinematics",
    "montecarlo",
    "rotation",
    "species",
    "units",
    "validation",
]
