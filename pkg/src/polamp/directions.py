"""Measurement directions and outcome labels for photon polarization.

A measurement context is a plane angle ``theta`` (measured from the x axis,
radians) plus a relative phase ``alpha`` between the x and y field
components. Each context has exactly two outcomes: polarization parallel
(``Branch.PLUS``) or perpendicular (``Branch.MINUS``) to the direction.

Angles are used exactly as given; all formulas downstream are 2*pi-periodic
in both angles, so no normalization is applied automatically. Use
:func:`canonicalize` when a canonical representative is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

#: Default absolute tolerance for every numeric invariant check in the package.
DEFAULT_TOLERANCE = 1e-12


class Branch(Enum):
    """One of the two orthogonal outcomes of a polarization measurement."""

    PLUS = "+"
    MINUS = "-"

    @classmethod
    def from_token(cls, token: str) -> "Branch":
        """Parse ``+``/``-`` (also accepts ``plus``/``minus``, any case)."""
        t = token.strip().lower()
        if t in ("+", "plus"):
            return cls.PLUS
        if t in ("-", "minus"):
            return cls.MINUS
        raise ValueError(f"invalid branch {token!r}: expected '+' or '-'")

    def __str__(self) -> str:
        return self.value


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Direction:
    """A polarization measurement context: plane angle and relative phase.

    Both angles are in radians and may take any finite value.
    """

    theta: float
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_finite("theta", self.theta))
        object.__setattr__(self, "alpha", _check_finite("alpha", self.alpha))


@dataclass(frozen=True)
class BranchLabel:
    """A single measurement outcome: a direction plus one of its branches."""

    direction: Direction
    branch: Branch

    @property
    def theta(self) -> float:
        return self.direction.theta

    @property
    def alpha(self) -> float:
        return self.direction.alpha


def canonicalize(direction: Direction) -> Direction:
    """Map ``theta`` into [0, pi) and ``alpha`` into [0, 2*pi).

    Probabilities are unchanged under this mapping; amplitudes may flip
    sign when ``theta`` is reduced by an odd multiple of pi (the two
    representatives describe the same physical direction).
    """
    theta = math.fmod(direction.theta, math.pi)
    if theta < 0.0:
        theta += math.pi
    alpha = math.fmod(direction.alpha, 2.0 * math.pi)
    if alpha < 0.0:
        alpha += 2.0 * math.pi
    return Direction(theta, alpha)


def plus(theta: float, alpha: float = 0.0) -> BranchLabel:
    """Label for the parallel outcome at ``Direction(theta, alpha)``."""
    return BranchLabel(Direction(theta, alpha), Branch.PLUS)


def minus(theta: float, alpha: float = 0.0) -> BranchLabel:
    """Label for the perpendicular outcome at ``Direction(theta, alpha)``."""
    return BranchLabel(Direction(theta, alpha), Branch.MINUS)
