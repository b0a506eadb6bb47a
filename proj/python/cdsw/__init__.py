"""Python bindings for the cdsw verification engine."""

import json

from ._core import (
    ComponentTooLarge,
    ConfigError,
    ModularDisagreement,
    UnsupportedType,
    abelian_ideals,
    cartan_matrix,
    check_names,
    dual_coxeter_number,
    invariant_degrees,
    invariant_dims,
    positive_roots,
    s_power_in_ideal,
)
from . import _core

__all__ = [
    "ComponentTooLarge",
    "ConfigError",
    "ModularDisagreement",
    "UnsupportedType",
    "abelian_ideals",
    "abelian_ideals_report",
    "cartan_matrix",
    "check_names",
    "dual_coxeter_number",
    "export",
    "invariant_degrees",
    "invariant_dims",
    "newton_f",
    "positive_roots",
    "run",
    "s_power_in_ideal",
]


def run(algebra, rank, checks="all", mode="exact", seed=1, max_monomials=2_000_000, heavy=False):
    """Run checks on one algebra; returns the JSON report as a dict (plus "exit_code")."""
    if isinstance(checks, (list, tuple)):
        checks = ",".join(checks)
    return json.loads(_core._run(algebra, rank, checks, mode, seed, max_monomials, heavy))


def abelian_ideals_report(algebra, rank):
    """Ideal list, dimension histogram and both Poincare series."""
    return json.loads(_core._abelian_ideals_json(algebra, rank))


def export(algebra, rank):
    """Structure constants, invariant form and representation matrices."""
    return json.loads(_core._export_json(algebra, rank))


def newton_f(n):
    """Coefficients of f_n (p_{n+1} in terms of p_1..p_n) as {exponent tuple: "p/q"}."""
    return {tuple(e): c for e, c in _core._newton_f(n)}
