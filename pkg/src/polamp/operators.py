"""Direction-dependent 2x2 Hermitian observables and expectation values.

An observable measured together with the polarization along direction ``b``
takes the value ``r_plus`` on the parallel branch and ``r_minus`` on the
perpendicular one. Expressed over the outcomes of an arbitrary basis
direction ``c``, its matrix element (i, j) is the amplitude product

    M_ij = sum_s conj(chi(c^i, b^s)) chi(c^j, b^s) R_s

which is exactly the spectral form R+ v+ v+^dag + R- v- v-^dag with
eigenvectors v_s given componentwise by chi(b^s, c^i). This amplitude
product construction is the normative one; :func:`observable_matrix_closed`
transcribes the equivalent closed trig expressions and exists to be checked
against it (see :mod:`polamp.verify`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .amplitudes import (
    StateVector2,
    amp_mm,
    amp_mp,
    amp_pm,
    amp_pp,
    probability,
    state_vector,
)
from .directions import DEFAULT_TOLERANCE, Branch, BranchLabel, Direction
from . import closedforms


@dataclass(frozen=True)
class Observable2:
    """A 2x2 Hermitian observable with its defining eigenvalues and directions.

    ``measure_dir`` is the direction whose branches carry the eigenvalues
    (r_plus, r_minus); ``basis_dir`` is the direction whose outcomes index
    the matrix elements.
    """

    m11: complex
    m12: complex
    m21: complex
    m22: complex
    r_plus: float
    r_minus: float
    measure_dir: Direction
    basis_dir: Direction

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    @property
    def trace(self) -> complex:
        return self.m11 + self.m22

    @property
    def determinant(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def hermiticity_residual(self) -> float:
        """Max deviation from M = M^dag (0 for matrices built here)."""
        return max(
            abs(self.m21 - np.conj(self.m12)),
            abs(self.m11.imag),
            abs(self.m22.imag),
        )


def observable_elements_product(theta_c, alpha_c, theta_b, alpha_b, r_plus, r_minus):
    """Amplitude-product matrix elements, vectorized over the angle arrays.

    Element (i, j) is sum_s conj(chi(c^i, b^s)) chi(c^j, b^s) R_s with c the
    basis direction and b the measured one. Returns ((m11, m12), (m21, m22)).
    """
    k_pp = amp_pp(theta_c, alpha_c, theta_b, alpha_b)
    k_pm = amp_pm(theta_c, alpha_c, theta_b, alpha_b)
    k_mp = amp_mp(theta_c, alpha_c, theta_b, alpha_b)
    k_mm = amp_mm(theta_c, alpha_c, theta_b, alpha_b)
    m11 = np.abs(k_pp) ** 2 * r_plus + np.abs(k_pm) ** 2 * r_minus
    m12 = np.conj(k_pp) * k_mp * r_plus + np.conj(k_pm) * k_mm * r_minus
    m21 = np.conj(k_mp) * k_pp * r_plus + np.conj(k_mm) * k_pm * r_minus
    m22 = np.abs(k_mp) ** 2 * r_plus + np.abs(k_mm) ** 2 * r_minus
    return ((m11 + 0j, m12), (m21, m22 + 0j))


def observable_matrix(
    measure: Direction, basis: Direction, r_plus: float, r_minus: float
) -> Observable2:
    """Observable with values (r_plus, r_minus) on the branches of ``measure``,
    as a matrix over the outcomes of ``basis``.

    Built from amplitude products; the result is Hermitian with
    trace r_plus + r_minus and determinant r_plus * r_minus.
    """
    m = observable_elements_product(
        basis.theta, basis.alpha, measure.theta, measure.alpha, float(r_plus), float(r_minus)
    )
    return Observable2(
        m11=complex(m[0][0]),
        m12=complex(m[0][1]),
        m21=complex(m[1][0]),
        m22=complex(m[1][1]),
        r_plus=float(r_plus),
        r_minus=float(r_minus),
        measure_dir=measure,
        basis_dir=basis,
    )


def observable_matrix_closed(
    measure: Direction, basis: Direction, r_plus: float, r_minus: float
) -> Observable2:
    """Same observable via the closed trig expressions (cross-check route)."""
    m = closedforms.observable_elements(
        basis.theta, basis.alpha, measure.theta, measure.alpha, r_plus, r_minus
    )
    return Observable2(
        m11=complex(m[0][0]),
        m12=complex(m[0][1]),
        m21=complex(m[1][0]),
        m22=complex(m[1][1]),
        r_plus=float(r_plus),
        r_minus=float(r_minus),
        measure_dir=measure,
        basis_dir=basis,
    )


def polarization_operator(measure: Direction, basis: Direction) -> Observable2:
    """The polarization observable itself: +1 parallel, -1 perpendicular.

    Traceless, determinant -1, and involutory (its square is the identity).
    """
    return observable_matrix(measure, basis, +1.0, -1.0)


def eigenvector_states(
    measure: Direction, basis: Direction
) -> tuple[StateVector2, StateVector2]:
    """Eigenvectors of any observable defined on ``measure``, over ``basis``.

    Returns (xi_plus, xi_minus) for the r_plus and r_minus branches; the
    components of xi_s are the amplitudes chi(measure^s, basis^i), so the
    pair is orthonormal by construction. The global phase follows the
    component formulas exactly (no re-phasing).
    """
    return (
        state_vector(BranchLabel(measure, Branch.PLUS), basis),
        state_vector(BranchLabel(measure, Branch.MINUS), basis),
    )


def expectation(
    state: StateVector2, obs: Observable2, tol: float = DEFAULT_TOLERANCE
) -> float:
    """Expectation value <state| obs |state>.

    ``state`` must be normalized within ``tol``; the imaginary residue of
    the quadratic form (zero up to rounding for Hermitian matrices) is
    checked against ``tol`` and discarded.
    """
    norm_dev = abs(state.norm - 1.0)
    if norm_dev > tol:
        raise ValueError(f"state is not normalized: |norm - 1| = {norm_dev:.3e} > {tol:.3e}")
    v = state.as_array()
    z = np.vdot(v, obs.as_array() @ v)
    if abs(z.imag) > tol:
        raise ValueError(f"non-real expectation (residue {z.imag:.3e}); matrix not Hermitian?")
    return float(z.real)


def expectation_closed(initial: BranchLabel, measure: Direction) -> float:
    """Polarization expectation as the probability-weighted sum of +/-1.

    Agrees with the matrix route
    ``expectation(state_vector(initial, basis), polarization_operator(measure, basis))``
    for every basis direction.
    """
    p_plus = probability(initial, BranchLabel(measure, Branch.PLUS))
    p_minus = probability(initial, BranchLabel(measure, Branch.MINUS))
    return p_plus - p_minus
