"""Theorem classes and lookup function."""

import argparse

from .. import util
from .base import BaseTheorem, Error
from .bounds import BridgelessTheorem, BridgeTheorem
from .clawfree import ClawfreeTheorem
from .decomposability import CubicTheorem, MultigraphTheorem, SubcubicTheorem
from .families import FamilyTheorem, FunkConjecture
from .oracle import OracleEquivalence

_THEOREMS = [
    SubcubicTheorem,
    CubicTheorem,
    BridgeTheorem,
    BridgelessTheorem,
    FamilyTheorem,
    ClawfreeTheorem,
    FunkConjecture,
    OracleEquivalence,
    MultigraphTheorem,
]
THEOREM_IDS = [theorem_cls.theorem_id for theorem_cls in _THEOREMS]


def get_theorem_cls(theorem_id: str) -> type:
    """Theorem factory.

    Args:
        theorem_id (str).

    Raises:
        NotImplementedError.

    Returns:
        type: a BaseTheorem subclass.
    """
    theorem_fac = {
        theorem_cls.theorem_id: theorem_cls for theorem_cls in _THEOREMS
    }
    try:
        theorem_cls = theorem_fac[theorem_id]
        util.log_info(f"Theorem: {theorem_cls.__name__}")
        return theorem_cls
    except KeyError:
        raise NotImplementedError(f"Theorem {theorem_id} not found")


def add_argparse_args(parser: argparse.ArgumentParser) -> None:
    """Adds theorem options to an argument parser.

    Args:
        parser (argparse.ArgumentParser).
    """
    parser.add_argument(
        "--theorem",
        required=True,
        help=f"Theorem to verify: one of {', '.join(THEOREM_IDS)}.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="Seed for sampled corpora. Default: %(default)s.",
    )


__all__ = [
    "BaseTheorem",
    "Error",
    "THEOREM_IDS",
    "add_argparse_args",
    "get_theorem_cls",
]
