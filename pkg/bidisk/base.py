"""Exceptions and the numerical kernels shared by the other modules - the
low-discrepancy sampler, the Richardson tableau and the monotone root
finder."""

import logging
import numpy as np
from scipy.optimize import bisect
from scipy.stats import qmc

logger = logging.getLogger(__name__)

DEFAULT_SEED = 0xD2
RADIUS_CAP = 1 - 1e-6
CHUNK_SIZE = 2 ** 14
SIDES = ("left", "right")

class BidiskError(Exception):
    """Base class for every error raised by bidisk."""



class MapError(BidiskError, ValueError):
    """A map could not be read, validated or evaluated."""



class ParseError(MapError):
    """A map-spec document or a point literal could not be parsed."""



class NotASelfMap(MapError):
    """A map takes values outside the closed unit disk on its validation
    sample."""



class DenominatorVanishes(MapError):
    """A rational map's denominator is (nearly) zero on its validation
    sample."""



class DenominatorNearZero(MapError):
    """A denominator was too small to divide by at an evaluation point."""



class LimitError(BidiskError, ArithmeticError):
    """A limit could not be computed reliably."""



class NoLimit(LimitError):
    """Successive extrapolants disagree, so no limit is reported."""



class NonRealDerivative(LimitError):
    """A normalised directional derivative has a non-negligible imaginary
    part."""



class NoRoot(LimitError):
    """A K-curve never crosses 1."""



class IterationError(BidiskError, RuntimeError):
    """An iteration did not settle."""



class MaxIterations(IterationError):
    """An iteration ran out of steps before reaching its tolerance."""



class NoInteriorFixedPoint(IterationError):
    """A slice orbit escapes to the boundary instead of converging inside."""



class Undecided(IterationError):
    """A slice orbit neither converged nor clearly escaped."""



class IdentitySlice(IterationError):
    """A slice function is the identity, so it has no Denjoy-Wolff point."""



class ClassificationError(BidiskError):
    """A boundary point could not be classified."""



class Ambiguous(ClassificationError):
    """K sits within the classification margin of 1 and no crossing was
    bracketed, even after widening the grid.

    :param str message: the explanation.
    :param KCurve curve: the last curve computed."""

    def __init__(self, message, curve=None):
        ClassificationError.__init__(self, message)
        self.curve = curve



class Unclassifiable(ClassificationError):
    """A component of a self-map is neither Type I nor Type II at the point
    given."""



def check_side(side):
    """Makes sure a side is either ``"left"`` or ``"right"``.

    :param str side: the side to check.
    :raises ValueError: if the side is anything else.
    :rtype: ``str``"""

    if side not in SIDES:
        raise ValueError("Side must be 'left' or 'right', not {}".format(side))
    return side


def sample_bidisk(n, seed=DEFAULT_SEED):
    """Produces ``n`` low-discrepancy points of the bidisk. A scrambled Halton
    sequence in four dimensions is mapped to each coordinate disk by a polar
    transform, with the radius being the square root of the uniform variable
    (so points are spread evenly by area) capped just below 1.

    :param int n: the number of points.
    :param int seed: the scrambling seed.
    :raises ValueError: if ``n`` is not positive.
    :returns: two complex ``numpy`` arrays, one per coordinate.
    :rtype: ``tuple``"""

    if n < 1: raise ValueError("Need at least one sample, not {}".format(n))
    sampler = qmc.Halton(d=4, scramble=True, seed=seed)
    uniform = sampler.random(n)
    radius = np.minimum(np.sqrt(uniform[:, 0::2]), RADIUS_CAP)
    points = radius * np.exp(2j * np.pi * uniform[:, 1::2])
    return points[:, 0], points[:, 1]


def chunks(n, size=CHUNK_SIZE):
    """Yields ``slice`` objects that split ``range(n)`` into consecutive
    pieces of at most ``size`` elements.

    :param int n: the total length.
    :param int size: the largest piece."""

    for start in range(0, n, size):
        yield slice(start, min(start + size, n))


def extrapolate(func, h, levels=18, ratio=2.0, floor=1e-8, safe=2.0):
    """Estimates ``lim func(h)`` as ``h`` goes to zero from above, assuming
    ``func(h)`` has an expansion in integer powers of ``h``.

    ``func`` is evaluated at ``h, h/ratio, h/ratio^2...`` and the values are
    arranged in a Neville tableau, each column removing one more power of
    ``h``. The best estimate is the entry whose distance to its lower-order
    neighbours is smallest, and that distance is returned as the error
    estimate. The tableau stops growing when a new diagonal entry is worse than
    the best estimate by a factor of ``safe``, or when the step would fall
    below ``floor``.

    :param func: a function of one positive real (real or complex valued).
    :param float h: the first, largest step.
    :param int levels: the most steps to take.
    :param float ratio: the factor the step shrinks by each level.
    :param float floor: the smallest step allowed.
    :param float safe: the early-exit factor.
    :returns: the estimate and its error.
    :rtype: ``tuple``"""

    table = {(0, 0): func(h)}
    result, error = table[0, 0], np.inf
    for i in range(1, levels):
        h /= ratio
        if h < floor: break
        table[0, i] = func(h)
        factor = ratio
        for j in range(1, i + 1):
            table[j, i] = (
             table[j - 1, i] * factor - table[j - 1, i - 1]
            ) / (factor - 1)
            factor *= ratio
            trial = max(
             abs(table[j, i] - table[j - 1, i]),
             abs(table[j, i] - table[j - 1, i - 1])
            )
            if trial <= error:
                result, error = table[j, i], trial
        if abs(table[i, i] - table[i - 1, i - 1]) >= safe * error: break
    return result, error


def monotone_root(func, low, high, xtol=1e-14, max_iter=200):
    """Finds where an increasing function crosses zero between two bracketing
    points by bisection, re-evaluating the function at every midpoint.

    :param func: the function, with ``func(low) <= 0 <= func(high)``.
    :param float low: the lower bracket.
    :param float high: the upper bracket.
    :param float xtol: the absolute tolerance on the root.
    :param int max_iter: the most bisection steps.
    :raises NoRoot: if the bracket does not contain a sign change.
    :rtype: ``float``"""

    f_low, f_high = func(low), func(high)
    if f_low == 0: return low
    if f_high == 0: return high
    if f_low > 0 or f_high < 0:
        raise NoRoot("No sign change between {} and {}".format(low, high))
    root = bisect(func, low, high, xtol=xtol, maxiter=max_iter)
    logger.debug("Root bracketed in [%r, %r] found at %r", low, high, root)
    return root
