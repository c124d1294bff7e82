"""Iteration of self-maps of the bidisk - orbits with horosphere telemetry,
fixed points of scaled maps, locating the Denjoy-Wolff point by
continuation, and predicting the behaviour of the iterates."""

import logging
import warnings
import numpy as np
from .base import MaxIterations, Ambiguous, Unclassifiable
from .core import BidiskPoint, BoundaryPoint, horosphere_radii, format_complex
from .boundary import classify_dw
from .maps import projection_index

logger = logging.getLogger(__name__)

HALT_MODULUS = 1 - 1e-14
PICARD_STEP = 1e-13
PICARD_RESIDUAL = 1e-12
PICARD_ITERATIONS = 10 ** 5
MONOTONE_SLACK = 1e-12
NEAR_BOUNDARY = 1e-3
SETTLED = 1e-4
FIT_STAGES = 5
DEGENERATE_SLOPE = 0.05

class Orbit:
    """An orbit ``z0, F(z0), F(F(z0))...`` of a self-map, together with the
    horosphere functionals of each point at a point of the torus.

    :param list points: the points of the orbit.
    :param BoundaryPoint tau: the point the functionals are taken at.
    :param float K: the weight used for the family radii.
    :param bool halted: whether iteration stopped early near the boundary."""

    def __init__(self, points, tau, K, halted=False):
        self._points, self._tau, self._K = list(points), tau, float(K)
        self._halted = halted
        radii = np.array([horosphere_radii(tau, point) for point in points])
        self._a_seq, self._b_seq = radii[:, 0], radii[:, 1]
        self._r_seq = np.maximum(self._a_seq, self._b_seq / self._K)


    def __repr__(self):
        return "<Orbit of {} points{}>".format(
         len(self), " (halted)" if self._halted else ""
        )


    def __len__(self):
        return len(self._points)


    def __getitem__(self, index):
        return self._points[index]


    @property
    def points(self):
        """The points of the orbit.

        :rtype: ``list``"""

        return self._points


    @property
    def tau(self):
        return self._tau


    @property
    def K(self):
        return self._K


    @property
    def halted(self):
        """Whether iteration stopped because a coordinate got too close to the
        unit circle for the functionals to be computed.

        :rtype: ``bool``"""

        return self._halted


    @property
    def a_seq(self):
        """The first horocycle functional along the orbit.

        :rtype: ``numpy.ndarray``"""

        return self._a_seq


    @property
    def b_seq(self):
        """The second horocycle functional along the orbit.

        :rtype: ``numpy.ndarray``"""

        return self._b_seq


    @property
    def r_seq(self):
        """The radius of the smallest weighted horosphere ``E(tau, R, KR)``
        containing each point of the orbit.

        :rtype: ``numpy.ndarray``"""

        return self._r_seq


    def save(self, path):
        """Saves the orbit as CSV.

        :param str path: the place to save it."""

        from .records import orbit_to_csv
        from .utilities import save
        save(orbit_to_csv(self), path)



class ContinuationResult:
    """The fixed points of the scaled maps ``rF`` along ``r = 1 - 2^-k``, and
    what can be read off them.

    :param list stages: ``(r, fixed_point, residual)`` for each stage.
    :param BoundaryPoint tau_estimate: where the fixed points are heading.
    :param float K_estimate: the estimated horosphere weight.
    :param bool degenerate: whether the ratio of the coordinate gaps runs off
        to 0 or infinity.
    :param bool interior: whether the fixed points settle inside the bidisk.
    :param bool truncated: whether some stage failed to converge."""

    def __init__(self, stages, tau_estimate=None, K_estimate=None,
                 degenerate=False, interior=False, truncated=False):
        self._stages = stages
        self._tau_estimate, self._K_estimate = tau_estimate, K_estimate
        self._degenerate, self._interior = degenerate, interior
        self._truncated = truncated


    def __repr__(self):
        return "<ContinuationResult ({} stages)>".format(len(self._stages))


    @property
    def stages(self):
        return self._stages


    @property
    def tau_estimate(self):
        return self._tau_estimate


    @property
    def K_estimate(self):
        return self._K_estimate


    @property
    def degenerate(self):
        return self._degenerate


    @property
    def interior(self):
        return self._interior


    @property
    def truncated(self):
        return self._truncated


    @property
    def ratios(self):
        """The ratio ``(1 - |z1|^2) / (1 - |z2|^2)`` at each stage.

        :rtype: ``numpy.ndarray``"""

        return np.array([_gap_ratio(point) for r, point, res in self._stages])


    def save(self, path):
        """Saves the stages as CSV.

        :param str path: the place to save it."""

        from .records import continuation_to_csv
        from .utilities import save
        save(continuation_to_csv(self), path)



class HerveCase:
    """The predicted behaviour of the iterates of a self-map, from the
    types of its components.

    :param str case: ``coord_projection``, ``I_I``, ``I_II``, ``II_I`` or
        ``II_II``.
    :param str expected: what the iterates are predicted to do.
    :param bool refined: whether a non-C-point refinement applies."""

    def __init__(self, case, expected, refined=False):
        self._case, self._expected, self._refined = case, expected, refined


    def __repr__(self):
        return "<HerveCase {}{}>".format(
         self._case, " (refined)" if self._refined else ""
        )


    @property
    def case(self):
        return self._case


    @property
    def expected(self):
        return self._expected


    @property
    def refined(self):
        return self._refined



class ConvergenceReport:
    """Whether an orbit reached its target point, and whether its
    horosphere functionals shrank monotonically on the way.

    :param bool converged: whether the orbit came within tolerance.
    :param BoundaryPoint limit: the target, if it was reached.
    :param int n_at_tol: the first index within tolerance.
    :param bool monotone_A: whether ``A_n`` never increased.
    :param bool monotone_R: whether ``R_n`` never increased."""

    def __init__(self, converged, limit, n_at_tol, monotone_A, monotone_R):
        self._converged, self._limit = converged, limit
        self._n_at_tol = n_at_tol
        self._monotone_A, self._monotone_R = monotone_A, monotone_R


    def __repr__(self):
        return "<ConvergenceReport ({})>".format(
         "converged at n={}".format(self._n_at_tol) if self._converged
         else "not converged"
        )


    @property
    def converged(self):
        return self._converged


    @property
    def limit(self):
        return self._limit


    @property
    def n_at_tol(self):
        return self._n_at_tol


    @property
    def monotone_A(self):
        return self._monotone_A


    @property
    def monotone_R(self):
        return self._monotone_R



def iterate_orbit(F, z0, n, tau, K=1.0):
    """Iterates a self-map ``n`` times from a starting point. If a coordinate
    of the orbit gets within ``1e-14`` of the unit circle, iteration stops
    there with a warning and the orbit is marked as halted.

    :param SelfMap2 F: the self-map.
    :param BidiskPoint z0: the starting point.
    :param int n: the number of iterations.
    :param BoundaryPoint tau: the point of the torus to measure from.
    :param float K: the weight of the horosphere family.
    :raises ValueError: if ``n`` is less than 1 or ``tau`` is not on the
        torus.
    :rtype: ``Orbit``"""

    if n < 1: raise ValueError("Need at least one iteration, not {}".format(n))
    tau.require_torus()
    points, halted = [z0], False
    for step in range(n):
        w1, w2 = F(*points[-1])
        if max(abs(w1), abs(w2)) > HALT_MODULUS:
            warnings.warn("Orbit halted at n={} - too close to {}".format(
             step + 1, tau
            ))
            halted = True
            break
        points.append(BidiskPoint(w1, w2))
    return Orbit(points, tau, K, halted)


def _picard(F, r, start, max_iter=PICARD_ITERATIONS):
    z1, z2 = start
    for n in range(max_iter):
        w1, w2 = F(z1, z2)
        w1, w2 = r * w1, r * w2
        step = max(abs(w1 - z1), abs(w2 - z2))
        z1, z2 = w1, w2
        if step <= PICARD_STEP: break
    else:
        raise MaxIterations("rF did not settle in {} steps at r={}".format(
         max_iter, r
        ))
    w1, w2 = F(z1, z2)
    residual = max(abs(r * w1 - z1), abs(r * w2 - z2))
    if residual > PICARD_RESIDUAL:
        raise MaxIterations("Residual {:.3g} at r={}".format(residual, r))
    return z1, z2, residual


def picard_fixed_point(F, r, start=(0j, 0j)):
    """Finds the fixed point of the scaled map ``rF``, which exists and is
    attracting because ``rF`` maps the bidisk strictly inside itself. The
    iteration runs until a step is no bigger than ``1e-13``.

    :param SelfMap2 F: the self-map.
    :param float r: the scale, in (0, 1).
    :param tuple start: where to start iterating.
    :raises ValueError: if ``r`` is not in (0, 1).
    :raises MaxIterations: if the iteration stagnates.
    :rtype: ``BidiskPoint``"""

    if not 0 < r < 1: raise ValueError("r must be in (0, 1), not {}".format(r))
    z1, z2, residual = _picard(F, r, start)
    return BidiskPoint(z1, z2)


def _gap_ratio(point):
    return (1 - abs(point.z1) ** 2) / (1 - abs(point.z2) ** 2)


def continuation_dw(F, k_max=20):
    """Locates the Denjoy-Wolff point of a self-map by following the fixed
    points of ``rF`` as ``r = 1 - 2^-k`` increases to 1, each stage starting
    from the previous fixed point.

    Coordinates that end up within ``1e-3`` of the circle are normalised to
    give the estimated point. The weight is the reciprocal of the ratio
    ``(1 - |z1|^2) / (1 - |z2|^2)``, extrapolated by a straight-line fit of
    its logarithm over the last five stages; a slope steeper than 0.05 per
    stage means the ratio is heading to 0 or infinity, and the result is
    flagged degenerate. Fixed points that stop moving inside the bidisk are
    flagged as an interior fixed point instead.

    :param SelfMap2 F: the self-map.
    :param int k_max: the number of stages.
    :rtype: ``ContinuationResult``"""

    stages, start, truncated = [], (0j, 0j), False
    for k in range(1, k_max + 1):
        r = 1 - 2.0 ** -k
        try:
            z1, z2, residual = _picard(F, r, start)
        except MaxIterations as e:
            warnings.warn("Continuation stopped at k={}: {}".format(k, e))
            truncated = True
            break
        logger.debug("Stage k=%d: (%r, %r), residual %.3g", k, z1, z2, residual)
        stages.append((r, BidiskPoint(z1, z2), residual))
        start = (z1, z2)
    if not stages: return ContinuationResult(stages, truncated=True)
    last = stages[-1][1]
    moved = np.inf if len(stages) == 1 else max(
     abs(last.z1 - stages[-2][1].z1), abs(last.z2 - stages[-2][1].z2)
    )
    if last.norm < 1 - NEAR_BOUNDARY and moved < SETTLED:
        return ContinuationResult(stages, interior=True, truncated=truncated)
    tau = _tau_estimate(last)
    K, degenerate = _weight_estimate(stages)
    return ContinuationResult(stages, tau, K, degenerate, False, truncated)


def _tau_estimate(point):
    coordinates = [
     z / abs(z) if 1 - abs(z) < NEAR_BOUNDARY else z for z in point
    ]
    try:
        return BoundaryPoint(*coordinates)
    except ValueError:
        return None


def _weight_estimate(stages):
    tail = stages[-FIT_STAGES:]
    ratios = np.array([_gap_ratio(point) for r, point, res in tail])
    if len(tail) < 2: return 1 / ratios[-1], False
    k = np.arange(len(stages) - len(tail) + 1, len(stages) + 1)
    slope, intercept = np.polyfit(k, np.log(ratios), 1)
    if abs(slope) > DEGENERATE_SLOPE: return None, True
    return float(1 / np.exp(slope * k[-1] + intercept)), False


def self_map_case(F):
    """Checks, structurally, whether either component of a self-map is the
    matching coordinate projection - ``phi = z1`` or ``psi = z2``.

    :param SelfMap2 F: the self-map.
    :returns: ``"phi"`` or ``"psi"`` for the projected component, otherwise
        ``None``.
    :rtype: ``str``"""

    if projection_index(F.psi) == 2: return "psi"
    if projection_index(F.phi) == 1: return "phi"
    return None


def herve_case(F, tau_hint):
    """Predicts the behaviour of the iterates of a self-map without interior
    fixed points, from the left type of its first component and the right
    type of its second at a point of the torus. When a Type I component's
    point is not a C-point, the sharper prediction is used and the case is
    marked as refined.

    :param SelfMap2 F: the self-map.
    :param BoundaryPoint tau_hint: the point of the torus to classify at.
    :raises Unclassifiable: if a component is neither Type I nor Type II.
    :rtype: ``HerveCase``"""

    projected = self_map_case(F)
    if projected == "psi":
        return HerveCase(
         "coord_projection", "F^n -> (tau1, z2) uniformly on compact subsets"
        )
    if projected == "phi":
        return HerveCase(
         "coord_projection", "F^n -> (z1, tau2) uniformly on compact subsets"
        )
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
    t1, t2 = format_complex(tau_hint.t1), format_complex(tau_hint.t2)
    phi_nonc = phi_class.kind == "TypeI_NonC"
    psi_nonc = psi_class.kind == "TypeI_NonC"
    if types == (2, 2):
        return HerveCase(
         "II_II", "F^n -> {} uniformly on compact subsets".format(tau_hint)
        )
    if types == (1, 2):
        if phi_nonc:
            return HerveCase("I_II", "F^n -> {} uniformly on compact "
             "subsets".format(tau_hint), True)
        return HerveCase("I_II", "every cluster point of F^n has the form "
         "({}, h)".format(t1))
    if types == (2, 1):
        if psi_nonc:
            return HerveCase("II_I", "F^n -> {} uniformly on compact "
             "subsets".format(tau_hint), True)
        return HerveCase("II_I", "every cluster point of F^n has the form "
         "(g, {})".format(t2))
    if phi_nonc:
        return HerveCase("I_I", "every cluster point of F^n has the form "
         "({}, h), h holomorphic or the constant {}".format(t1, t2), True)
    if psi_nonc:
        return HerveCase("I_I", "every cluster point of F^n has the form "
         "(g, {}), g holomorphic or the constant {}".format(t2, t1), True)
    return HerveCase("I_I", "every cluster point of F^n has the form "
     "({}, h) or every one has the form (g, {})".format(t1, t2))


def convergence_report(orbit, tol):
    """Reports whether an orbit came within a sup-norm distance of its target
    point, and whether its functionals ``A_n`` and ``R_n`` were non-increasing
    (allowing ``1e-12`` of slack).

    :param Orbit orbit: the orbit.
    :param float tol: the distance that counts as arrival.
    :rtype: ``ConvergenceReport``"""

    n_at_tol = None
    for n, point in enumerate(orbit.points):
        if point.distance_to(orbit.tau) <= tol:
            n_at_tol = n
            break
    converged = n_at_tol is not None
    return ConvergenceReport(
     converged, orbit.tau if converged else None, n_at_tol,
     bool(np.all(np.diff(orbit.a_seq) <= MONOTONE_SLACK)),
     bool(np.all(np.diff(orbit.r_seq) <= MONOTONE_SLACK))
    )


def parity_limits(orbit, tail=10):
    """Averages the last ``tail`` even-indexed and odd-indexed values of each
    horocycle functional along an orbit. The even and odd subsequences always
    converge; a positive spread between the four limits is the signature of
    an orbit that alternates between two horospheres.

    :param Orbit orbit: the orbit.
    :param int tail: how many of each parity to average.
    :raises ValueError: if the orbit has fewer than two points.
    :rtype: ``dict``"""

    if len(orbit) < 2:
        raise ValueError("Need at least two points for parity limits")
    limits = {
     "a_even": float(np.mean(orbit.a_seq[0::2][-tail:])),
     "a_odd": float(np.mean(orbit.a_seq[1::2][-tail:])),
     "b_even": float(np.mean(orbit.b_seq[0::2][-tail:])),
     "b_odd": float(np.mean(orbit.b_seq[1::2][-tail:]))
    }
    limits["spread"] = max(limits.values()) - min(limits.values())
    return limits
