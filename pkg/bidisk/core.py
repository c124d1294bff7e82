"""Horocycle and horosphere geometry of the disk and the bidisk."""

import math
import numpy as np
from .base import ParseError

BOUNDARY_TOLERANCE = 1e-12

def complex_scalar(value):
    """Turns a number, a ``[re, im]`` pair or a ``"re,im"`` string into a
    finite Python ``complex``.

    :param value: the thing to convert.
    :raises ParseError: if the value cannot be read as a complex number.
    :raises ValueError: if either component is NaN or infinite.
    :rtype: ``complex``"""

    if isinstance(value, str):
        return parse_complex(value)
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ParseError("Complex pairs need two entries: {}".format(value))
        value = complex(float(value[0]), float(value[1]))
    try:
        z = complex(value)
    except TypeError:
        raise ParseError("{} is not a complex number".format(value))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("{} is not finite".format(z))
    return z


def parse_complex(text):
    """Parses a ``"re,im"`` literal. A lone real is also accepted.

    :param str text: the literal.
    :raises ParseError: if the text is not of that form.
    :rtype: ``complex``"""

    parts = text.strip().split(",")
    try:
        if len(parts) == 1: return complex_scalar(float(parts[0]))
        if len(parts) == 2:
            return complex_scalar([float(parts[0]), float(parts[1])])
    except ValueError:
        pass
    raise ParseError("Could not read '{}' as re,im".format(text))


def format_complex(z):
    """Writes a complex number compactly - as a real when it is one.

    :param complex z: the number to write.
    :rtype: ``str``"""

    z = complex(z)
    if z.imag == 0: return "{:g}".format(z.real)
    return "{:g}{:+g}i".format(z.real, z.imag)


def disk_point(z):
    """Checks that a number lies in the open unit disk and returns it as a
    ``complex``.

    :param z: the number.
    :raises ValueError: if ``|z| >= 1``.
    :rtype: ``complex``"""

    z = complex_scalar(z)
    if abs(z) >= 1:
        raise ValueError("{} is not inside the unit disk".format(z))
    return z


def one_minus_abs2(z):
    """Computes ``1 - |z|^2`` without the cancellation of the naive formula
    near the unit circle. Works elementwise on ``numpy`` arrays.

    :param z: a complex number or array.
    :rtype: ``float`` or ``numpy.ndarray``"""

    x, y = np.abs(np.real(z)), np.abs(np.imag(z))
    big, small = np.maximum(x, y), np.minimum(x, y)
    return (1 - big) * (1 + big) - small * small


def horocycle_quotient(tau, z):
    """The horocycle functional ``|z - tau|^2 / (1 - |z|^2)``, whose sublevel
    sets are the horocycles at ``tau``. Works elementwise on arrays.

    :param complex tau: the point of tangency.
    :param z: a point or array of points of the disk.
    :rtype: ``float`` or ``numpy.ndarray``"""

    return np.abs(z - tau) ** 2 / one_minus_abs2(z)



class BidiskPoint:
    """A point of the open bidisk.

    :param z1: the first coordinate.
    :param z2: the second coordinate.
    :raises ValueError: if either coordinate is not inside the unit disk."""

    def __init__(self, z1, z2):
        self._z1, self._z2 = disk_point(z1), disk_point(z2)


    def __repr__(self):
        return "<BidiskPoint ({}, {})>".format(
         format_complex(self._z1), format_complex(self._z2)
        )


    def __iter__(self):
        return iter((self._z1, self._z2))


    def __eq__(self, other):
        return isinstance(other, BidiskPoint) and tuple(self) == tuple(other)


    def __hash__(self):
        return hash((self._z1, self._z2))


    @property
    def z1(self):
        """The first coordinate.

        :rtype: ``complex``"""

        return self._z1


    @property
    def z2(self):
        """The second coordinate.

        :rtype: ``complex``"""

        return self._z2


    @property
    def norm(self):
        """The larger of the two coordinate moduli.

        :rtype: ``float``"""

        return max(abs(self._z1), abs(self._z2))


    def distance_to(self, tau):
        """The sup-norm distance to a boundary point.

        :param BoundaryPoint tau: the other point.
        :rtype: ``float``"""

        return max(abs(self._z1 - tau.t1), abs(self._z2 - tau.t2))



class BoundaryPoint:
    """A point of the topological boundary of the bidisk. At least one
    coordinate is unimodular; when both are, the point lies on the
    distinguished boundary (the torus).

    :param t1: the first coordinate.
    :param t2: the second coordinate.
    :raises ValueError: if neither coordinate is unimodular, or if either lies
        outside the closed disk."""

    def __init__(self, t1, t2):
        self._t1, self._t2 = complex_scalar(t1), complex_scalar(t2)
        flags = []
        for t in (self._t1, self._t2):
            on_circle = abs(abs(t) - 1) <= BOUNDARY_TOLERANCE
            if not on_circle and abs(t) >= 1:
                raise ValueError("{} is outside the closed disk".format(t))
            flags.append(on_circle)
        if not any(flags):
            raise ValueError("({}, {}) is inside the bidisk".format(
             self._t1, self._t2
            ))
        self._on_circle1, self._on_circle2 = flags


    def __repr__(self):
        return "<BoundaryPoint {}>".format(self)


    def __str__(self):
        return "({}, {})".format(
         format_complex(self._t1), format_complex(self._t2)
        )


    def __iter__(self):
        return iter((self._t1, self._t2))


    def __eq__(self, other):
        return isinstance(other, BoundaryPoint) and tuple(self) == tuple(other)


    def __hash__(self):
        return hash((self._t1, self._t2))


    @property
    def t1(self):
        """The first coordinate.

        :rtype: ``complex``"""

        return self._t1


    @property
    def t2(self):
        """The second coordinate.

        :rtype: ``complex``"""

        return self._t2


    @property
    def on_circle1(self):
        """Whether the first coordinate is unimodular.

        :rtype: ``bool``"""

        return self._on_circle1


    @property
    def on_circle2(self):
        """Whether the second coordinate is unimodular.

        :rtype: ``bool``"""

        return self._on_circle2


    @property
    def on_torus(self):
        """Whether the point is on the distinguished boundary.

        :rtype: ``bool``"""

        return self._on_circle1 and self._on_circle2


    def swapped(self):
        """Returns the point with its coordinates interchanged.

        :rtype: ``BoundaryPoint``"""

        return BoundaryPoint(self._t2, self._t1)


    def require_torus(self):
        """Raises an error unless the point is on the distinguished boundary.

        :raises ValueError: if a coordinate is inside the disk."""

        if not self.on_torus:
            raise ValueError("{} is not on the torus".format(self))



class Horocycle:
    """The horocycle ``E(tau, R)`` - the open disk internally tangent to the
    unit circle at ``tau`` on which the horocycle functional is below ``R``.

    :param tau: the unimodular point of tangency.
    :param float R: the (positive) radius parameter.
    :raises ValueError: if ``tau`` is not unimodular or ``R`` is not
        positive."""

    def __init__(self, tau, R):
        self._tau = complex_scalar(tau)
        if abs(abs(self._tau) - 1) > BOUNDARY_TOLERANCE:
            raise ValueError("{} is not unimodular".format(self._tau))
        if not R > 0: raise ValueError("R must be positive, not {}".format(R))
        self._R = float(R)


    def __repr__(self):
        return "<Horocycle at {} (R={:g})>".format(
         format_complex(self._tau), self._R
        )


    def __contains__(self, z):
        return horocycle_contains(self, z)


    @property
    def tau(self):
        """The point of tangency.

        :rtype: ``complex``"""

        return self._tau


    @property
    def R(self):
        """The radius parameter.

        :rtype: ``float``"""

        return self._R



class Horosphere:
    """The product ``E(tau1, R1) x E(tau2, R2)`` of two horocycles.

    :param BoundaryPoint tau: a point of the torus.
    :param float R1: the first radius parameter.
    :param float R2: the second radius parameter.
    :raises ValueError: if ``tau`` is not on the torus or a radius is not
        positive."""

    def __init__(self, tau, R1, R2):
        tau.require_torus()
        if not (R1 > 0 and R2 > 0):
            raise ValueError("Radii must be positive, not {}, {}".format(R1, R2))
        self._tau, self._R1, self._R2 = tau, float(R1), float(R2)


    def __repr__(self):
        return "<Horosphere at {} (R1={:g}, R2={:g})>".format(
         self._tau, self._R1, self._R2
        )


    def __contains__(self, z):
        return horosphere_contains(self, z)


    @property
    def tau(self):
        """The centre of the horosphere on the torus.

        :rtype: ``BoundaryPoint``"""

        return self._tau


    @property
    def R1(self):
        """The first radius parameter.

        :rtype: ``float``"""

        return self._R1


    @property
    def R2(self):
        """The second radius parameter.

        :rtype: ``float``"""

        return self._R2



def horocycle_contains(h, z):
    """Checks whether a point of the disk lies in a horocycle. The horocycle
    is open, so points on its edge are not contained.

    :param Horocycle h: the horocycle.
    :param z: a point of the disk.
    :rtype: ``bool``"""

    return bool(horocycle_quotient(h.tau, disk_point(z)) < h.R)


def horocycle_disk_form(h):
    """Returns the Euclidean centre and radius of a horocycle, which is the
    disk centred at ``tau / (R + 1)`` of radius ``R / (R + 1)``.

    :param Horocycle h: the horocycle.
    :rtype: ``tuple``"""

    return h.tau / (h.R + 1), h.R / (h.R + 1)


def horosphere_radii(tau, z):
    """Returns the two horocycle functionals of a point of the bidisk, taken
    at the two coordinates of a point of the torus.

    :param BoundaryPoint tau: a point of the torus.
    :param BidiskPoint z: a point of the bidisk.
    :raises ValueError: if ``tau`` is not on the torus.
    :rtype: ``tuple``"""

    tau.require_torus()
    return (
     float(horocycle_quotient(tau.t1, z.z1)),
     float(horocycle_quotient(tau.t2, z.z2))
    )


def horosphere_contains(s, z):
    """Checks whether a point of the bidisk lies in a horosphere.

    :param Horosphere s: the horosphere.
    :param BidiskPoint z: the point.
    :rtype: ``bool``"""

    A, B = horosphere_radii(s.tau, z)
    return A < s.R1 and B < s.R2


def parse_bidisk_point(text):
    """Parses a ``"re,im;re,im"`` literal into a point of the bidisk.

    :param str text: the literal.
    :raises ParseError: if the text is not of that form.
    :rtype: ``BidiskPoint``"""

    return BidiskPoint(*_parse_pair(text))


def parse_boundary_point(text):
    """Parses a ``"re,im;re,im"`` literal into a boundary point, inferring the
    unimodularity flags from the moduli.

    :param str text: the literal.
    :raises ParseError: if the text is not of that form.
    :rtype: ``BoundaryPoint``"""

    return BoundaryPoint(*_parse_pair(text))


def _parse_pair(text):
    parts = text.split(";")
    if len(parts) != 2:
        raise ParseError("Could not read '{}' as re,im;re,im".format(text))
    return [parse_complex(part) for part in parts]
