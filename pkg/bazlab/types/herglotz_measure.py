from __future__ import annotations

import math
from typing import List

import numpy as np
from pydantic import field_validator

from .._models import BaseModel
from .._constants import TWO_PI, MEASURE_TOL
from .._exceptions import InvalidMeasure

__all__ = ["HerglotzMeasure", "Atom"]


class Atom(BaseModel):
    t: float
    """Angle of the point mass on the unit circle, reduced to [0, 2 pi)."""

    lam: float
    """Positive weight of the point mass."""


class HerglotzMeasure(BaseModel):
    """Finite atomic probability measure on the circle.

    Generates the Caratheodory function
    ``p(z) = sum_k lam_k (1 + z e^{-i t_k}) / (1 - z e^{-i t_k})``.
    """

    atoms: List[Atom]

    @field_validator("atoms")
    @classmethod
    def _check_atoms(cls, atoms: List[Atom]) -> List[Atom]:
        if not atoms:
            raise InvalidMeasure("A Herglotz measure needs at least one atom")
        for atom in atoms:
            if not (atom.lam > 0) or not math.isfinite(atom.lam):
                raise InvalidMeasure(f"Atom weights must be positive, got lam={atom.lam!r}")
            if not math.isfinite(atom.t):
                raise InvalidMeasure(f"Atom angles must be finite, got t={atom.t!r}")
        total = math.fsum(atom.lam for atom in atoms)
        if abs(total - 1.0) > MEASURE_TOL:
            raise InvalidMeasure(f"Atom weights must sum to 1, got {total!r}")
        return [Atom(t=atom.t % TWO_PI, lam=atom.lam) for atom in atoms]

    @classmethod
    def point_mass(cls, t: float = 0.0) -> HerglotzMeasure:
        return cls(atoms=[Atom(t=t, lam=1.0)])

    def _arrays(self) -> tuple[np.ndarray, np.ndarray]:
        lam = np.array([atom.lam for atom in self.atoms])
        rot = np.exp(-1j * np.array([atom.t for atom in self.atoms]))
        return lam, rot

    def values(self, z: np.ndarray) -> np.ndarray:
        """Closed-form ``p(z)`` at points of the open disk."""
        lam, rot = self._arrays()
        w = np.multiply.outer(np.asarray(z, dtype=np.complex128), rot)
        return np.sum(lam * (1.0 + w) / (1.0 - w), axis=-1)

    def derivative_values(self, z: np.ndarray) -> np.ndarray:
        """Closed-form ``p'(z)``."""
        lam, rot = self._arrays()
        w = np.multiply.outer(np.asarray(z, dtype=np.complex128), rot)
        return np.sum(lam * 2.0 * rot / (1.0 - w) ** 2, axis=-1)
