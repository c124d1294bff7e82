"""Boundary behaviour of maps into the disk - radial limits, normalised
directional derivatives (the K-curve), Denjoy-Wolff classification and the
analysis of slice functions."""

import logging
import warnings
import numpy as np
from .base import NoLimit, NonRealDerivative, NoRoot, NoInteriorFixedPoint
from .base import Undecided, IdentitySlice, Ambiguous, check_side
from .base import extrapolate, monotone_root
from .core import disk_point, format_complex
from .maps import swap_args, slice_function

logger = logging.getLogger(__name__)

T0 = 1e-2
K_STEPS = 18
T_FLOOR = 1e-8
LIMIT_TOLERANCE = 1e-5
FIXED_TOLERANCE = 1e-6
IMAG_TOLERANCE = 1e-6
MONOTONE_SLACK = 1e-7
DEFAULT_GRID = (2.0 ** -12, 2.0 ** 12, 49)
ETA = 1e-4
WIDENING = 4
ROOT_TOLERANCE = 1e-8
SLICE_ITERATIONS = 20000
ESCAPE = 1e-6
STALL_RATIO = 0.999
PICARD_ITERATIONS = 5000
NEWTON_ITERATIONS = 100
FIXED_POINT_RESIDUAL = 1e-10
RADIAL_LEVELS = (3, 16)

class KCurve:
    """Sampled values of the normalised directional derivative ``K(M)`` of a
    map at a fixed point of the torus, over a grid of directions ``M``.

    :param ScalarMap scalar_map: the map the curve belongs to.
    :param BoundaryPoint tau: the boundary point.
    :param complex omega: the boundary value used as ``phi(tau)``.
    :param m_grid: the increasing grid of ``M`` values.
    :param k_values: the extrapolated ``K`` values.
    :param imag_residuals: the imaginary parts discarded from each value.
    :param error_estimates: the extrapolation error of each value."""

    def __init__(self, scalar_map, tau, omega, m_grid, k_values,
                 imag_residuals, error_estimates):
        self._map, self._tau, self._omega = scalar_map, tau, omega
        self._m_grid = np.array(m_grid, dtype=float)
        self._k_values = np.array(k_values, dtype=float)
        self._imag_residuals = np.array(imag_residuals, dtype=float)
        self._error_estimates = np.array(error_estimates, dtype=float)


    def __repr__(self):
        return "<KCurve at {} ({} points, K {:.6g} to {:.6g})>".format(
         self._tau, len(self), self._k_values[0], self._k_values[-1]
        )


    def __len__(self):
        return len(self._m_grid)


    @property
    def scalar_map(self):
        """The map the curve belongs to.

        :rtype: ``ScalarMap``"""

        return self._map


    @property
    def tau(self):
        """The boundary point.

        :rtype: ``BoundaryPoint``"""

        return self._tau


    @property
    def omega(self):
        """The boundary value of the map at the point.

        :rtype: ``complex``"""

        return self._omega


    @property
    def m_grid(self):
        """The grid of directions.

        :rtype: ``numpy.ndarray``"""

        return self._m_grid


    @property
    def k_values(self):
        """The value of ``K`` at each direction.

        :rtype: ``numpy.ndarray``"""

        return self._k_values


    @property
    def imag_residuals(self):
        """The imaginary residual of each normalised derivative.

        :rtype: ``numpy.ndarray``"""

        return self._imag_residuals


    @property
    def error_estimates(self):
        """The extrapolation error of each value.

        :rtype: ``numpy.ndarray``"""

        return self._error_estimates


    @property
    def valid(self):
        """Whether every normalised derivative was real to within ``1e-6``.

        :rtype: ``bool``"""

        return bool(np.all(np.abs(self._imag_residuals) <= IMAG_TOLERANCE))


    @property
    def monotone(self):
        """Whether the curve is non-decreasing to within ``1e-7``. A curve that
        is not signals numerical breakdown, since ``K`` is increasing in
        ``M``.

        :rtype: ``bool``"""

        return bool(np.all(np.diff(self._k_values) >= -MONOTONE_SLACK))


    def k_at(self, M):
        """Computes ``K`` afresh at a direction that need not be on the grid.

        :param float M: the direction.
        :rtype: ``float``"""

        return _normalised_derivative(self._map, self._tau, M, self._omega)[0]


    def save(self, path):
        """Saves the curve as CSV with columns M, K, imag_residual and
        error_estimate.

        :param str path: the place to save it."""

        from .records import kcurve_to_csv
        from .utilities import save
        save(kcurve_to_csv(self), path)



class DWClass:
    """The outcome of classifying a boundary fixed point of a map.

    ``kind`` is one of ``NotFixed``, ``NotBPoint``, ``TypeI_CPoint`` (with an
    ``alpha``), ``TypeI_NonC`` (with a ``k_limit``), ``TypeII`` (with the
    constant ``A``) or ``Neither`` (with ``k_min``).

    :param str kind: the kind of point.
    :param float value: the number that goes with the kind, if any.
    :param KCurve curve: the curve the decision was based on, if any.
    :param dict diagnostics: anything else worth reporting."""

    KINDS = ("NotFixed", "NotBPoint", "TypeI_CPoint", "TypeI_NonC", "TypeII",
     "Neither")
    VALUE_NAMES = {
     "TypeI_CPoint": "alpha", "TypeI_NonC": "k_limit", "TypeII": "A",
     "Neither": "k_min"
    }

    def __init__(self, kind, value=None, curve=None, diagnostics=None):
        if kind not in self.KINDS:
            raise ValueError("{} is not a kind of point".format(kind))
        self._kind, self._value, self._curve = kind, value, curve
        self._diagnostics = diagnostics or {}


    def __repr__(self):
        name = self.value_name
        if name is None or self._value is None:
            return "<DWClass {}>".format(self._kind)
        return "<DWClass {} ({}={:.6g})>".format(self._kind, name, self._value)


    @property
    def kind(self):
        """The kind of point.

        :rtype: ``str``"""

        return self._kind


    @property
    def value(self):
        """The number that goes with the kind - alpha, k_limit, A or k_min.

        :rtype: ``float``"""

        return self._value


    @property
    def value_name(self):
        """The name of the number that goes with the kind.

        :rtype: ``str``"""

        return self.VALUE_NAMES.get(self._kind)


    @property
    def alpha(self):
        return self._value if self._kind == "TypeI_CPoint" else None


    @property
    def k_limit(self):
        return self._value if self._kind == "TypeI_NonC" else None


    @property
    def A(self):
        return self._value if self._kind == "TypeII" else None


    @property
    def k_min(self):
        return self._value if self._kind == "Neither" else None


    @property
    def type_number(self):
        """1 for Type I Denjoy-Wolff points, 2 for Type II, otherwise
        ``None``.

        :rtype: ``int``"""

        if self._kind.startswith("TypeI_"): return 1
        return 2 if self._kind == "TypeII" else None


    @property
    def curve(self):
        """The K-curve the decision was based on, if there was one.

        :rtype: ``KCurve``"""

        return self._curve


    @property
    def diagnostics(self):
        """Supporting numbers for the decision.

        :rtype: ``dict``"""

        return self._diagnostics



class SliceDW:
    """The Denjoy-Wolff point of a slice function - either an attracting
    interior fixed point with its multiplier, or a boundary point with the
    angular derivative there.

    :param str kind: ``InteriorFixed`` or ``BoundaryDW``.
    :param complex point: the fixed point or the boundary point.
    :param number: the multiplier (interior) or angular derivative
        (boundary)."""

    def __init__(self, kind, point, number):
        if kind not in ("InteriorFixed", "BoundaryDW"):
            raise ValueError("{} is not a kind of slice point".format(kind))
        self._kind, self._point, self._number = kind, complex(point), number


    def __repr__(self):
        label = "multiplier" if self.interior else "alpha"
        return "<SliceDW {} at {} ({}={})>".format(
         self._kind, format_complex(self._point), label,
         format_complex(self._number)
        )


    @property
    def kind(self):
        """``InteriorFixed`` or ``BoundaryDW``.

        :rtype: ``str``"""

        return self._kind


    @property
    def interior(self):
        """Whether the point is inside the disk.

        :rtype: ``bool``"""

        return self._kind == "InteriorFixed"


    @property
    def p(self):
        """The interior fixed point, if there is one.

        :rtype: ``complex``"""

        return self._point if self.interior else None


    @property
    def multiplier(self):
        """The derivative of the slice at its interior fixed point.

        :rtype: ``complex``"""

        return self._number if self.interior else None


    @property
    def tau(self):
        """The boundary Denjoy-Wolff point, if that is what was found.

        :rtype: ``complex``"""

        return None if self.interior else self._point


    @property
    def alpha(self):
        """The angular derivative at the boundary Denjoy-Wolff point.

        :rtype: ``float``"""

        return None if self.interior else self._number



def _ray(tau, M, t):
    return tau.t1 * (1 - t), tau.t2 * (1 - M * t)


def radial_quotient(m, tau, M, t):
    """Evaluates the Caratheodory quotient ``(1 - |m(z)|) / (1 - ||z||)`` at
    the point ``z = tau - t(tau1, M tau2)`` of the ray towards ``tau`` in
    direction ``M``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a point of the torus.
    :param float M: the (positive) direction.
    :param float t: the distance along the ray, with ``t max(1, M) < 1``.
    :raises ValueError: if the point is not on the torus or ``t`` is out of
        range.
    :rtype: ``float``"""

    tau.require_torus()
    if not (t > 0 and t * max(1, M) < 1):
        raise ValueError("t={} is out of range for M={}".format(t, M))
    z1, z2 = _ray(tau, M, t)
    gap = min(1 - abs(z1), 1 - abs(z2))
    return (1 - abs(m(z1, z2))) / gap


def boundary_value(m, tau, t0=T0):
    """Computes the radial limit of a map at a boundary point, by Richardson
    extrapolation of its values at ``tau(1 - t)`` - or, when one coordinate
    of ``tau`` is inside the disk, with that coordinate held fixed.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: the boundary point.
    :param float t0: the first step.
    :raises NoLimit: if the extrapolants disagree by more than ``1e-5``.
    :returns: the value, and whether it equals ``tau1`` to within ``1e-6``.
    :rtype: ``tuple``"""

    s1 = 1 if tau.on_circle1 else 0
    s2 = 1 if tau.on_circle2 else 0
    value, error = extrapolate(
     lambda t: m(tau.t1 * (1 - s1 * t), tau.t2 * (1 - s2 * t)),
     t0, levels=K_STEPS, floor=T_FLOOR
    )
    if not np.isfinite(value) or error > LIMIT_TOLERANCE:
        raise NoLimit("No radial limit at {} (error {:.3g})".format(tau, error))
    value = complex(value)
    return value, abs(value - tau.t1) <= FIXED_TOLERANCE


def _fixed_value(m, tau):
    value, fixed = boundary_value(m, tau)
    if not fixed:
        raise ValueError("{} is not a fixed boundary point (value {})".format(
         tau, format_complex(value)
        ))
    return tau.t1


def _normalised_derivative(m, tau, M, omega):
    # Returns (K, imaginary residual, error estimate).
    derivative, error = extrapolate(
     lambda t: (m(*_ray(tau, M, t)) - omega) / t,
     T0 / max(1, M), levels=K_STEPS, floor=T_FLOOR
    )
    quotient = complex(derivative) / -omega
    error /= abs(omega)
    if not np.isfinite(quotient) or error > LIMIT_TOLERANCE * max(
     1, abs(quotient)
    ):
        raise NoLimit("No directional derivative at {} for M={:g}".format(
         tau, M
        ))
    return quotient.real, quotient.imag, error


def k_value(m, tau, M):
    """Computes ``K(M)``, the derivative of a map at a fixed point of the torus
    in the direction ``-(tau1, M tau2)``, divided by ``-m(tau)``. The
    one-sided difference quotients at ``t = t0 2^-k`` are extrapolated to
    ``t = 0``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a point of the torus with ``m(tau) = tau1``.
    :param float M: the (positive) direction.
    :raises ValueError: if ``tau`` is not a fixed point on the torus.
    :raises NonRealDerivative: if the normalised derivative has an imaginary
        part above ``1e-6``.
    :raises NoLimit: if the extrapolation does not settle.
    :rtype: ``float``"""

    tau.require_torus()
    K, imag, error = _normalised_derivative(m, tau, M, _fixed_value(m, tau))
    if abs(imag) > IMAG_TOLERANCE:
        raise NonRealDerivative("K({:g}) has imaginary part {:.3g}".format(
         M, imag
        ))
    return K


def k_curve(m, tau, m_min=DEFAULT_GRID[0], m_max=DEFAULT_GRID[1],
            n=DEFAULT_GRID[2]):
    """Computes ``K`` over a logarithmically spaced grid of directions.

    The curve should be non-decreasing; if it is not, a warning is issued and
    the curve's ``monotone`` flag is ``False``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a point of the torus with ``m(tau) = tau1``.
    :param float m_min: the smallest direction.
    :param float m_max: the largest direction.
    :param int n: the number of directions.
    :raises ValueError: if the grid is malformed or ``tau`` is not a fixed
        point on the torus.
    :raises NoLimit: if ``K`` cannot be computed somewhere on the grid.
    :rtype: ``KCurve``"""

    if not (0 < m_min < m_max) or n < 2:
        raise ValueError("Bad grid: [{}, {}] x {}".format(m_min, m_max, n))
    tau.require_torus()
    omega = _fixed_value(m, tau)
    grid = np.geomspace(m_min, m_max, n)
    rows = [_normalised_derivative(m, tau, M, omega) for M in grid]
    curve = KCurve(m, tau, omega, grid, *zip(*rows))
    if not curve.monotone:
        warnings.warn("{} is not monotone - numerical breakdown".format(curve))
    return curve


def find_constant_A(curve, tolerance=ROOT_TOLERANCE):
    """Finds the unique direction ``A`` where a K-curve crosses 1, by
    bisection between the grid points that bracket the crossing, computing
    ``K`` afresh at every midpoint.

    :param KCurve curve: the curve.
    :param float tolerance: how close to 1 ``K(A)`` should be.
    :raises NoRoot: if the curve lies entirely below or above 1.
    :rtype: ``float``"""

    grid, k = curve.m_grid, curve.k_values
    if k[-1] < 1 or k[0] > 1:
        raise NoRoot("K runs from {:.6g} to {:.6g} without crossing 1".format(
         k[0], k[-1]
        ))
    for M, K in zip(grid, k):
        if abs(K - 1) <= tolerance: return float(M)
    index = int(np.argmax(k >= 1))
    A = monotone_root(
     lambda M: curve.k_at(M) - 1, grid[index - 1], grid[index]
    )
    miss = abs(curve.k_at(A) - 1)
    if miss > tolerance:
        warnings.warn("K(A) is {:.3g} away from 1".format(miss))
    return float(A)


def classify_dw(m, tau, side="left", m_min=DEFAULT_GRID[0],
                m_max=DEFAULT_GRID[1], n=DEFAULT_GRID[2], eta=ETA):
    """Classifies a boundary point as a Denjoy-Wolff point of a map.

    On the torus, the pipeline is: the point must be fixed (else
    ``NotFixed``); ``K`` must exist at the largest direction (else
    ``NotBPoint``); a constant K-curve means a C-point, which is Type I when
    its value is at most 1 (else ``Neither``); a curve that stays below 1 is a
    Type I point that is not a C-point, and its limit at infinity is reported;
    a curve that crosses 1 is Type II, with the crossing ``A``; a curve above
    1 is ``Neither``. If ``K`` ends within ``eta`` of 1 without a bracketed
    crossing, the grid is widened once by a factor of 4 at both ends.

    Points with a coordinate inside the disk are classified through the
    slice Denjoy-Wolff point instead.

    The right-hand classification of ``m`` at ``(tau1, tau2)`` is the
    left-hand classification of the swapped map at ``(tau2, tau1)``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: the boundary point.
    :param str side: ``"left"`` or ``"right"``.
    :param float m_min: the smallest direction of the grid.
    :param float m_max: the largest direction of the grid.
    :param int n: the number of grid points.
    :param float eta: the margin around 1 inside which no decision is made.
    :raises Ambiguous: if no decision can be made after widening.
    :rtype: ``DWClass``"""

    if check_side(side) == "right":
        m, tau = swap_args(m), tau.swapped()
    if not tau.on_torus: return _classify_facial(m, tau)
    try:
        value, fixed = boundary_value(m, tau)
    except NoLimit:
        return DWClass("NotBPoint", diagnostics={"reason": "no radial limit"})
    if not fixed:
        return DWClass("NotFixed", diagnostics={"value": value})
    try:
        _normalised_derivative(m, tau, m_max, tau.t1)
    except NoLimit:
        return DWClass("NotBPoint", diagnostics={"reason": "no derivative"})
    for attempt in range(2):
        try:
            curve = k_curve(m, tau, m_min, m_max, n)
        except NoLimit as e:
            return DWClass("NotBPoint", diagnostics={"reason": str(e)})
        result = _decide(curve, eta)
        if result is not None: return result
        m_min, m_max = m_min / WIDENING, m_max * WIDENING
        logger.debug("Widening grid to [%g, %g]", m_min, m_max)
    raise Ambiguous("K runs from {:.9g} to {:.9g} at {}".format(
     curve.k_values[0], curve.k_values[-1], tau
    ), curve)


def _decide(curve, eta):
    k, diagnostics = curve.k_values, {
     "m_min": curve.m_grid[0], "m_max": curve.m_grid[-1],
     "k_first": curve.k_values[0], "k_last": curve.k_values[-1],
     "monotone": curve.monotone
    }
    if not curve.valid:
        diagnostics["imag_residual"] = float(np.max(np.abs(
         curve.imag_residuals
        )))
        return DWClass("NotBPoint", curve=curve, diagnostics=diagnostics)
    mean = float(np.mean(k))
    if np.ptp(k) < 1e-6 * (1 + mean):
        if mean <= 1 + eta:
            return DWClass("TypeI_CPoint", mean, curve, diagnostics)
        return DWClass("Neither", float(k[0]), curve, diagnostics)
    if k[-1] < 1 - eta:
        return DWClass(
         "TypeI_NonC", _limit_at_infinity(curve), curve, diagnostics
        )
    if k[0] < 1 <= k[-1]:
        return DWClass("TypeII", find_constant_A(curve), curve, diagnostics)
    if k[0] > 1 + eta:
        return DWClass("Neither", float(k[0]), curve, diagnostics)
    return None


def _limit_at_infinity(curve):
    # Linear fit of K against 1/M over the top decade of the grid.
    top = curve.m_grid >= curve.m_grid[-1] / 10
    if np.count_nonzero(top) < 2: top[-2:] = True
    slope, intercept = np.polyfit(
     1 / curve.m_grid[top], curve.k_values[top], 1
    )
    if intercept > 1 + ETA:
        warnings.warn("Extrapolated K limit {:.6g} clipped to 1".format(
         intercept
        ))
        return 1.0
    return float(intercept)


def _classify_facial(m, tau):
    value, fixed = boundary_value(m, tau)
    if not fixed:
        return DWClass("NotFixed", diagnostics={"value": value})
    if not tau.on_circle1:
        return DWClass("Neither", diagnostics={"reason": "tau1 is interior"})
    found = slice_denjoy_wolff(m, "left", tau.t2)
    diagnostics = {
     "slice": found.kind, "slice_point": found.p if found.interior else found.tau
    }
    if not found.interior and abs(found.tau - tau.t1) <= FIXED_TOLERANCE:
        if found.alpha <= 1 + ETA:
            return DWClass("TypeI_CPoint", found.alpha, diagnostics=diagnostics)
    return DWClass("Neither", diagnostics=diagnostics)


def slice_denjoy_wolff(m, side, fixed, iterations=SLICE_ITERATIONS):
    """Finds the Denjoy-Wolff point of a slice of a map by iterating the slice
    from 0.

    An orbit that converges while staying at least ``1e-6`` inside the disk
    gives an interior fixed point, whose multiplier is found by a central
    difference. When the iterations run out, damped Newton steps from the
    last iterate look for an interior fixed point first. An orbit that
    reaches the ``1e-6`` band, or that is still creeping outwards with a step
    ratio above 0.999 and has no interior fixed point to find (the parabolic
    case), gives a boundary point: the direction of the
    orbit extrapolated to the circle, with the angular derivative there
    computed as the limit of the radial quotient.

    :param ScalarMap m: the map.
    :param str side: ``"left"`` or ``"right"``.
    :param fixed: the frozen coordinate, inside the disk.
    :param int iterations: the most slice evaluations.
    :raises IdentitySlice: if the slice is the identity.
    :raises Undecided: if the orbit neither converges nor escapes.
    :rtype: ``SliceDW``"""

    slice_ = slice_function(m, side, disk_point(fixed))
    if abs(slice_(0j)) <= 1e-14 and abs(slice_(0.3 + 0j) - 0.3) <= 1e-14:
        raise IdentitySlice("The {} slice at {} is the identity".format(
         side, format_complex(fixed)
        ))
    z, step, ratio, trail = 0j, None, 0.0, []
    for n in range(iterations):
        new = slice_(z)
        new_step = abs(new - z)
        if step: ratio = new_step / step
        z, step = new, new_step
        if n & (n + 1) == 0 or 1 - abs(z) <= ESCAPE: trail.append(z)
        if 1 - abs(z) <= ESCAPE: return _boundary_dw(slice_, trail)
        if step <= 1e-14: return _interior_dw(slice_, z)
    trail.append(z)
    try:
        p = _check_fixed_point(slice_, _newton(slice_, z))
    except NoInteriorFixedPoint:
        # Only an orbit still creeping outwards is parabolic.
        if ratio > STALL_RATIO and abs(z) > abs(trail[-2]):
            return _boundary_dw(slice_, trail)
        raise Undecided("Slice orbit at {} did not settle".format(
         format_complex(fixed)
        ))
    return _interior_dw(slice_, p)


def _interior_dw(slice_, p):
    h = 1e-6 * (1 - abs(p))
    multiplier = (slice_(p + h) - slice_(p - h)) / (2 * h)
    return SliceDW("InteriorFixed", p, complex(multiplier))


def _boundary_dw(slice_, trail):
    trail = trail[-5:]
    gaps = np.array([1 - abs(z) for z in trail])
    directions = np.array([z / abs(z) for z in trail])
    if len(trail) > 1 and np.ptp(gaps) > 0:
        real = np.polyfit(gaps, directions.real, 1)[1]
        imag = np.polyfit(gaps, directions.imag, 1)[1]
        tau = complex(real, imag)
    else:
        tau = directions[-1]
    tau /= abs(tau)
    alpha, error = extrapolate(
     lambda h: (1 - abs(slice_((1 - h) * tau))) / h,
     T0, levels=K_STEPS, floor=T_FLOOR
    )
    if error > LIMIT_TOLERANCE * max(1, abs(alpha)):
        raise NoLimit("No angular derivative at {}".format(format_complex(tau)))
    return SliceDW("BoundaryDW", tau, float(np.real(alpha)))


def slice_fixed_point(m, side, fixed, start=0j):
    """Finds the interior fixed point of a slice - the value ``xi(mu)`` (or
    ``eta(lambda)`` for right slices) of a Type II map.

    Picard iteration is used until it converges or until its contraction
    ratio exceeds 0.999, after which damped Newton steps take over.

    :param ScalarMap m: the map.
    :param str side: ``"left"`` or ``"right"``.
    :param fixed: the frozen coordinate, inside the disk.
    :param complex start: where to start iterating.
    :raises NoInteriorFixedPoint: if the iteration is driven to the boundary.
    :rtype: ``complex``"""

    slice_ = slice_function(m, side, disk_point(fixed))
    z, step = complex(start), None
    for n in range(PICARD_ITERATIONS):
        new = slice_(z)
        if abs(new) >= 1 - 1e-12:
            raise NoInteriorFixedPoint("Slice orbit reached the boundary")
        new_step = abs(new - z)
        z = new
        if new_step <= 1e-15 or (step is not None and new_step >= step
         and new_step <= 1e-13):
            return _check_fixed_point(slice_, z)
        if step and n > 10 and new_step / step > STALL_RATIO: break
        step = new_step
    return _check_fixed_point(slice_, _newton(slice_, z))


def _check_fixed_point(slice_, z):
    residual = abs(slice_(z) - z)
    if residual > FIXED_POINT_RESIDUAL:
        raise NoInteriorFixedPoint("Residual {:.3g} at {}".format(
         residual, format_complex(z)
        ))
    return z


def _newton(slice_, z):
    # Damped Newton on slice(z) - z; a root must separate from the boundary.
    for n in range(NEWTON_ITERATIONS):
        gap = 1 - abs(z)
        h = 1e-4 * gap
        g = slice_(z) - z
        dg = (slice_(z + h) - slice_(z - h)) / (2 * h) - 1
        if dg == 0: break
        delta = -g / dg
        while abs(z + delta) >= 1 - 1e-12: delta /= 2
        z += delta
        if 1 - abs(z) < 1e-10: break
        if abs(slice_(z) - z) <= 1e-14 and abs(delta) <= 1e-3 * (1 - abs(z)):
            return z
    raise NoInteriorFixedPoint("Newton iteration was driven to the boundary")


def a_from_xi(m, tau, side="left", levels=RADIAL_LEVELS):
    """Computes the Type II constant ``A`` from the interior fixed points of
    the slices, as the reciprocal of the limit of
    ``(1 - |xi(mu)|) / (1 - |mu|)`` as ``mu`` runs radially to ``tau2``.

    :param ScalarMap m: the map.
    :param BoundaryPoint tau: a point of the torus.
    :param str side: ``"left"`` or ``"right"``.
    :param tuple levels: the first and last ``k`` in ``mu = tau2(1 - 2^-k)``.
    :raises NoInteriorFixedPoint: if some slice has no interior fixed point.
    :raises NoLimit: if the quotients do not settle.
    :rtype: ``float``"""

    if check_side(side) == "right":
        m, tau = swap_args(m), tau.swapped()
    if not tau.on_circle2:
        raise ValueError("{} needs a unimodular second coordinate".format(tau))
    starts = [0j]

    def quotient(h):
        xi = slice_fixed_point(m, "left", tau.t2 * (1 - h), start=starts[-1])
        starts.append(xi)
        return (1 - abs(xi)) / h

    first, last = levels
    q, error = extrapolate(
     quotient, 2.0 ** -first, levels=last - first + 1, floor=2.0 ** -last
    )
    if not q > 0 or error > LIMIT_TOLERANCE * q:
        raise NoLimit("Fixed-point quotients did not settle")
    return 1 / float(q)
