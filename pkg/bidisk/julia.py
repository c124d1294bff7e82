"""Sampled checks of the weighted Julia inequality and of horosphere
invariance, and the scan that works out the shape of a self-map's set of
generalised Denjoy-Wolff points."""

import logging
import numpy as np
from .base import DEFAULT_SEED, NoLimit, Ambiguous, Unclassifiable
from .base import check_side, sample_bidisk, chunks
from .core import BidiskPoint, horocycle_quotient
from .core import one_minus_abs2, complex_scalar
from .boundary import boundary_value, classify_dw, T_FLOOR
from .maps import swap_args

logger = logging.getLogger(__name__)

JULIA_NOISE = 1e-9
JULIA_SAMPLES = 10 ** 5
INVARIANCE_SAMPLES = 10 ** 4
TIGHTNESS_TOLERANCE = 1e-4
CASES = {
 (2, 2): "II_II_point", (1, 2): "I_II_face",
 (2, 1): "II_I_face", (1, 1): "I_I_cross"
}

class JuliaReport:
    """The outcome of checking the weighted Julia inequality on a sample.

    :param int n_samples: the number of points checked.
    :param float max_violation: the largest excess of the left-hand side over
        the right - negative means the inequality held everywhere.
    :param float tightness: the largest ratio of the two sides.
    :param BidiskPoint worst_point: where the largest excess occurred."""

    def __init__(self, n_samples, max_violation, tightness, worst_point):
        self._n_samples = n_samples
        self._max_violation = float(max_violation)
        self._tightness = float(tightness)
        self._worst_point = worst_point


    def __repr__(self):
        return "<JuliaReport ({} samples, max violation {:.3g})>".format(
         self._n_samples, self._max_violation
        )


    @property
    def n_samples(self):
        return self._n_samples


    @property
    def max_violation(self):
        return self._max_violation


    @property
    def tightness(self):
        return self._tightness


    @property
    def worst_point(self):
        return self._worst_point


    @property
    def satisfied(self):
        """Whether every violation was within floating-point noise.

        :rtype: ``bool``"""

        return self._max_violation <= JULIA_NOISE



class WolffSetReport:
    """The shape of the set of generalised Denjoy-Wolff points of a self-map,
    worked out from the types of its two components.

    :param str case: ``II_II_point``, ``I_II_face``, ``II_I_face`` or
        ``I_I_cross``.
    :param DWClass phi_class: the left classification of the first
        component.
    :param DWClass psi_class: the right classification of the second
        component.
    :param BoundaryPoint witness_tau: the point the classifications were made
        at.
    :param dict facial_violations: the facial invariance checks made, keyed by
        side.
    :param float corner_K: the weight used for the corner check, if one was
        made.
    :param float corner_violation: the result of the corner check.
    :param bool corner_in_wolff_set: whether the corner passed."""

    def __init__(self, case, phi_class, psi_class, witness_tau,
                 facial_violations=None, corner_K=None, corner_violation=None,
                 corner_in_wolff_set=None):
        self._case = case
        self._phi_class, self._psi_class = phi_class, psi_class
        self._witness_tau = witness_tau
        self._facial_violations = facial_violations or {}
        self._corner_K = corner_K
        self._corner_violation = corner_violation
        self._corner_in_wolff_set = corner_in_wolff_set


    def __repr__(self):
        return "<WolffSetReport {} at {}>".format(self._case, self._witness_tau)


    @property
    def case(self):
        return self._case


    @property
    def phi_class(self):
        return self._phi_class


    @property
    def psi_class(self):
        return self._psi_class


    @property
    def witness_tau(self):
        return self._witness_tau


    @property
    def facial_violations(self):
        return self._facial_violations


    @property
    def corner_K(self):
        return self._corner_K


    @property
    def corner_violation(self):
        return self._corner_violation


    @property
    def corner_in_wolff_set(self):
        return self._corner_in_wolff_set



def _fixed_omega(m, tau):
    tau.require_torus()
    value, fixed = boundary_value(m, tau)
    if not fixed:
        raise ValueError("{} is not a fixed point of {}".format(tau, m))
    return tau.t1


def _julia_sides(m, tau, omega, M, z1, z2):
    w = m(z1, z2)
    lhs = np.abs(omega - w) ** 2 / one_minus_abs2(w)
    scale = np.maximum(
     horocycle_quotient(tau.t1, z1), horocycle_quotient(tau.t2, z2) / M
    )
    return lhs, scale


def julia_max_violation(m, tau, M, alpha, n=JULIA_SAMPLES, seed=DEFAULT_SEED):
    """Checks the weighted Julia inequality

        ``|w - m(z)|^2 / (1 - |m(z)|^2) <= alpha max(R1(z), R2(z) / M)``

    on ``n`` low-discrepancy points of the bidisk, where ``w`` is the boundary
    value of the map at ``tau`` and ``R1``, ``R2`` are the horocycle
    functionals of the coordinates. The points are processed in chunks, and
    the result does not depend on the chunk size.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a fixed point of the map on the torus.
    :param float M: the (positive) weight.
    :param float alpha: the constant being tested.
    :param int n: the number of sample points.
    :param int seed: the sampling seed.
    :raises ValueError: if ``tau`` is not a fixed point on the torus.
    :rtype: ``JuliaReport``"""

    omega = _fixed_omega(m, tau)
    z1, z2 = sample_bidisk(n, seed)
    worst, worst_index, tightness = -np.inf, 0, 0.0
    for piece in chunks(n):
        lhs, scale = _julia_sides(m, tau, omega, M, z1[piece], z2[piece])
        excess = lhs - alpha * scale
        index = int(np.argmax(excess))
        if excess[index] > worst:
            worst, worst_index = excess[index], piece.start + index
        tightness = max(tightness, float(np.max(lhs / scale)))
    logger.debug("Julia check of %r at %s: worst %.3g", m, tau, worst)
    return JuliaReport(
     n, worst, tightness, BidiskPoint(z1[worst_index], z2[worst_index])
    )


def julia_tightness(m, tau, M, t0=0.25, floor=T_FLOOR):
    """Measures how tight the weighted Julia inequality is along the ray
    ``tau - t(tau1, M tau2)``, as the supremum over ``t = t0 2^-k`` of the
    ratio of its two sides. This recovers ``K(M)``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a fixed point of the map on the torus.
    :param float M: the (positive) weight.
    :param float t0: the first step, before scaling by ``max(1, M)``.
    :param float floor: the smallest step.
    :raises NoLimit: if the ratio is still moving at the smallest step.
    :rtype: ``float``"""

    omega = _fixed_omega(m, tau)
    t = t0 / max(1, M) * 2.0 ** -np.arange(64)
    t = t[t >= floor]
    z1, z2 = tau.t1 * (1 - t), tau.t2 * (1 - M * t)
    lhs, scale = _julia_sides(m, tau, omega, M, z1, z2)
    ratios = lhs / scale
    if abs(ratios[-1] - ratios[-2]) > TIGHTNESS_TOLERANCE:
        raise NoLimit("Julia ratio along the ray did not settle")
    return float(np.max(ratios))


def horosphere_invariance_violation(F, tau, K, n=INVARIANCE_SAMPLES,
                                    seed=DEFAULT_SEED):
    """Checks whether a self-map sends each weighted horosphere
    ``E(tau, R, KR)`` into itself. For every sample point ``z``, ``R`` is the
    radius of the smallest member of the family containing it, and the
    result is the largest of ``A(F(z)) - R`` and ``B(F(z)) - KR`` - so a value
    at or below zero means invariance held on every sample.

    :param SelfMap2 F: the self-map.
    :param BoundaryPoint tau: a point of the torus.
    :param float K: the (positive) weight of the family.
    :param int n: the number of sample points.
    :param int seed: the sampling seed.
    :raises ValueError: if ``tau`` is not on the torus.
    :rtype: ``float``"""

    tau.require_torus()
    z1, z2 = sample_bidisk(n, seed)
    worst = -np.inf
    for piece in chunks(n):
        a, b = z1[piece], z2[piece]
        R = np.maximum(
         horocycle_quotient(tau.t1, a), horocycle_quotient(tau.t2, b) / K
        )
        w1, w2 = F(a, b)
        excess = np.maximum(
         horocycle_quotient(tau.t1, w1) - R,
         horocycle_quotient(tau.t2, w2) - K * R
        )
        worst = max(worst, float(np.max(excess)))
    return worst


def facial_invariance_violation(m, sigma, side="left", n=INVARIANCE_SAMPLES,
                                seed=DEFAULT_SEED):
    """Checks whether a map sends each facial horocycle set
    ``E(sigma, R) x D`` (left) or ``D x E(sigma, R)`` (right) into
    ``E(sigma, R)``, by sampling the largest of ``A(m(z)) - A(z1)`` (or
    ``A(m(z)) - A(z2)``), with ``A`` the horocycle functional at ``sigma``.
    Type I components pass this check at their Denjoy-Wolff point.

    :param ScalarMap m: the map.
    :param complex sigma: the unimodular centre.
    :param str side: ``"left"`` or ``"right"``.
    :param int n: the number of sample points.
    :param int seed: the sampling seed.
    :raises ValueError: if ``sigma`` is not unimodular.
    :rtype: ``float``"""

    sigma = complex_scalar(sigma)
    if abs(abs(sigma) - 1) > 1e-12:
        raise ValueError("{} is not unimodular".format(sigma))
    if check_side(side) == "right": m = swap_args(m)
    z1, z2 = sample_bidisk(n, seed)
    worst = -np.inf
    for piece in chunks(n):
        a, b = z1[piece], z2[piece]
        excess = horocycle_quotient(sigma, m(a, b)) - horocycle_quotient(
         sigma, a
        )
        worst = max(worst, float(np.max(excess)))
    return worst


def wolff_set_structure(F, tau_hint, samples=INVARIANCE_SAMPLES,
                        seed=DEFAULT_SEED):
    """Works out the shape of the set of generalised Denjoy-Wolff points of a
    self-map with no interior fixed point, from the left type of its first
    component and the right type of its second at a point of the torus.

    Two Type II components make that point the only one; a Type I component
    contributes the whole face through its coordinate, so one Type I
    component gives a face and two give the union of both faces. Every Type I
    side gets a sampled facial invariance check. In the mixed cases the
    corner is tested against the weighted horosphere family given by the
    Type II component's constant; when both are Type II, the weight is the
    geometric mean of the admissible range ``[1/A_psi, A_phi]``.

    :param SelfMap2 F: the self-map.
    :param BoundaryPoint tau_hint: the point of the torus to classify at.
    :param int samples: the number of points for each sampled check.
    :param int seed: the sampling seed.
    :raises Unclassifiable: if either component is neither Type I nor
        Type II.
    :rtype: ``WolffSetReport``"""

    tau_hint.require_torus()
    try:
        phi_class = classify_dw(F.phi, tau_hint, "left")
        psi_class = classify_dw(F.psi, tau_hint, "right")
    except Ambiguous as e:
        raise Unclassifiable("A component is ambiguous: {}".format(e))
    types = (phi_class.type_number, psi_class.type_number)
    if None in types:
        raise Unclassifiable("Components classify as {} and {}".format(
         phi_class.kind, psi_class.kind
        ))
    case = CASES[types]
    logger.debug("Wolff set of %r at %s is %s", F, tau_hint, case)
    facial = {}
    if types[0] == 1:
        facial["left"] = facial_invariance_violation(
         F.phi, tau_hint.t1, "left", samples, seed
        )
    if types[1] == 1:
        facial["right"] = facial_invariance_violation(
         F.psi, tau_hint.t2, "right", samples, seed
        )
    corner_K = {
     "II_II_point": lambda: np.sqrt(phi_class.A / psi_class.A),
     "I_II_face": lambda: 1 / psi_class.A,
     "II_I_face": lambda: phi_class.A
    }.get(case, lambda: None)()
    violation, passed = None, None
    if corner_K is not None:
        corner_K = float(corner_K)
        violation = horosphere_invariance_violation(
         F, tau_hint, corner_K, samples, seed
        )
        passed = violation <= JULIA_NOISE
    return WolffSetReport(
     case, phi_class, psi_class, tau_hint, facial, corner_K, violation, passed
    )
