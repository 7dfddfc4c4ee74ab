"""Transition amplitudes between arbitrary polarization branches.

The amplitude for a photon prepared in branch ``s`` of direction ``a``
(angle ``theta_a``, phase ``alpha_a``) to be found in branch ``t`` of
direction ``b`` is a complex number chi(a^s, b^t). With
``d = alpha_a - alpha_b`` the four closed forms are

    chi(a+, b+) =  cos(theta_a) cos(theta_b) + sin(theta_a) sin(theta_b) e^{i d}
    chi(a+, b-) = -cos(theta_a) sin(theta_b) + sin(theta_a) cos(theta_b) e^{i d}
    chi(a-, b+) = -sin(theta_a) cos(theta_b) + cos(theta_a) sin(theta_b) e^{i d}
    chi(a-, b-) =  sin(theta_a) sin(theta_b) + cos(theta_a) cos(theta_b) e^{i d}

The first label always names the initial (prepared) state, the second the
measured one. These forms satisfy, and the verification suite checks:

* reversal symmetry      chi(x, y) = conj(chi(y, x))
* orthonormality         sum_t chi(a^s, b^t) conj(chi(a^r, b^t)) = delta_sr
* chaining               chi(x, y) = sum_s chi(x, c^s) chi(c^s, y) for any c

The ``amp_*`` kernels accept scalars or numpy arrays (broadcasting); the
label-based wrappers below them are the scalar convenience API.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .directions import Branch, BranchLabel, Direction


# ---------------------------------------------------------------------------
# vectorized closed-form kernels, keyed by (initial branch, final branch)
# ---------------------------------------------------------------------------

def amp_pp(theta_a, alpha_a, theta_b, alpha_b):
    """chi(a+, b+) for scalar or array angles."""
    phase = np.exp(1j * (np.asarray(alpha_a) - np.asarray(alpha_b)))
    return np.cos(theta_a) * np.cos(theta_b) + np.sin(theta_a) * np.sin(theta_b) * phase


def amp_pm(theta_a, alpha_a, theta_b, alpha_b):
    """chi(a+, b-) for scalar or array angles."""
    phase = np.exp(1j * (np.asarray(alpha_a) - np.asarray(alpha_b)))
    return -np.cos(theta_a) * np.sin(theta_b) + np.sin(theta_a) * np.cos(theta_b) * phase


def amp_mp(theta_a, alpha_a, theta_b, alpha_b):
    """chi(a-, b+) for scalar or array angles."""
    phase = np.exp(1j * (np.asarray(alpha_a) - np.asarray(alpha_b)))
    return -np.sin(theta_a) * np.cos(theta_b) + np.cos(theta_a) * np.sin(theta_b) * phase


def amp_mm(theta_a, alpha_a, theta_b, alpha_b):
    """chi(a-, b-) for scalar or array angles."""
    phase = np.exp(1j * (np.asarray(alpha_a) - np.asarray(alpha_b)))
    return np.sin(theta_a) * np.sin(theta_b) + np.cos(theta_a) * np.cos(theta_b) * phase


AMP_KERNELS = {
    (Branch.PLUS, Branch.PLUS): amp_pp,
    (Branch.PLUS, Branch.MINUS): amp_pm,
    (Branch.MINUS, Branch.PLUS): amp_mp,
    (Branch.MINUS, Branch.MINUS): amp_mm,
}


def prob_equal_closed(theta_a, alpha_a, theta_b, alpha_b):
    """Closed trig form of P(a+, b+), which also equals P(a-, b-)."""
    d = np.asarray(alpha_a) - np.asarray(alpha_b)
    return (
        np.cos(theta_a) ** 2 * np.cos(theta_b) ** 2
        + np.sin(theta_a) ** 2 * np.sin(theta_b) ** 2
        + 0.5 * np.sin(2 * np.asarray(theta_a)) * np.sin(2 * np.asarray(theta_b)) * np.cos(d)
    )


def prob_mixed_closed(theta_a, alpha_a, theta_b, alpha_b):
    """Closed trig form of P(a+, b-), which also equals P(a-, b+)."""
    d = np.asarray(alpha_a) - np.asarray(alpha_b)
    return (
        np.cos(theta_a) ** 2 * np.sin(theta_b) ** 2
        + np.sin(theta_a) ** 2 * np.cos(theta_b) ** 2
        - 0.5 * np.sin(2 * np.asarray(theta_a)) * np.sin(2 * np.asarray(theta_b)) * np.cos(d)
    )


# ---------------------------------------------------------------------------
# label-based API
# ---------------------------------------------------------------------------

def amplitude(initial: BranchLabel, final: BranchLabel) -> complex:
    """Transition amplitude from ``initial`` to ``final``."""
    kernel = AMP_KERNELS[(initial.branch, final.branch)]
    return complex(kernel(initial.theta, initial.alpha, final.theta, final.alpha))


def probability(initial: BranchLabel, final: BranchLabel) -> float:
    """Transition probability |amplitude|^2, clamped into [0, 1]."""
    p = abs(amplitude(initial, final)) ** 2
    return min(max(p, 0.0), 1.0)


def probability_closed(initial: BranchLabel, final: BranchLabel) -> float:
    """Transition probability via the closed trig forms.

    Cross-check route only; :func:`probability` (squared modulus) is the
    normative one. The equal-branch and mixed-branch expressions are shared,
    so P(a+,b+) == P(a-,b-) and P(a+,b-) == P(a-,b+) hold exactly here.
    """
    if initial.branch is final.branch:
        form = prob_equal_closed
    else:
        form = prob_mixed_closed
    return float(form(initial.theta, initial.alpha, final.theta, final.alpha))


def chain(initial: BranchLabel, final: BranchLabel, via: Direction) -> complex:
    """Amplitude decomposed through a complete set of outcomes at ``via``.

    Returns sum_s amplitude(initial, via^s) * amplitude(via^s, final);
    equals amplitude(initial, final) for every intermediate direction.
    """
    total = 0.0 + 0.0j
    for s in Branch:
        mid = BranchLabel(via, s)
        total += amplitude(initial, mid) * amplitude(mid, final)
    return total


def hermitian_partner(initial: BranchLabel, final: BranchLabel) -> complex:
    """The reversed amplitude; equals conj(amplitude(initial, final))."""
    return amplitude(final, initial)


@dataclass(frozen=True)
class StateVector2:
    """A polarization state over the two outcomes of a reference direction.

    ``c_plus``/``c_minus`` are the amplitudes for the parallel and
    perpendicular branches of the reference; |c_plus|^2 + |c_minus|^2 = 1
    for every state produced by this package.
    """

    c_plus: complex
    c_minus: complex

    def as_array(self) -> np.ndarray:
        return np.array([self.c_plus, self.c_minus], dtype=complex)

    @property
    def norm(self) -> float:
        return float(np.sqrt(abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2))

    def inner(self, other: "StateVector2") -> complex:
        """Hermitian inner product <self|other>."""
        return complex(
            np.conj(self.c_plus) * other.c_plus + np.conj(self.c_minus) * other.c_minus
        )


def state_vector(label: BranchLabel, reference: Direction) -> StateVector2:
    """State of ``label`` expressed over the outcomes of ``reference``.

    Component ``s`` is amplitude(label, reference^s); the result has unit
    norm for every reference direction.
    """
    return StateVector2(
        amplitude(label, BranchLabel(reference, Branch.PLUS)),
        amplitude(label, BranchLabel(reference, Branch.MINUS)),
    )
