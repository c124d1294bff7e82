"""Holomorphic maps of the bidisk into the disk, and pairs of them."""

import numbers
import numpy as np
from numpy.polynomial.polynomial import polyval2d
from .base import DEFAULT_SEED, ParseError, NotASelfMap, DenominatorVanishes
from .base import DenominatorNearZero, check_side, sample_bidisk
from .core import complex_scalar, disk_point, format_complex

NEAR_ZERO = 1e-14
VANISHING = 1e-9
SCHUR_SLACK = 1e-9
DIAGONAL_GAP = 1e-9
VALIDATION_SAMPLES = 4096

def _herve_ex1_phi(z1, z2):
    return 1 - z1 * z2, 2 - z1 - z2


def _mcp_ex1_psi(z1, z2):
    """The logarithmic formula off the diagonal, and its limit
    ``(5z - 3) / (5 - 3z)`` on it. A point counts as diagonal when
    ``|z2 - z1|`` is below ``DIAGONAL_GAP`` times its distance from the
    nearest of ``1`` and ``-1``, not below a fixed ``DIAGONAL_GAP``."""

    z1, z2 = np.broadcast_arrays(
     np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex)
    )
    gap = z2 - z1
    # Relative to the distance from the branch points at 1 and -1.
    scale = np.minimum(
     np.minimum(np.abs(1 - z1), np.abs(1 - z2)),
     np.minimum(np.abs(1 + z1), np.abs(1 + z2))
    )
    diagonal = np.abs(gap) < DIAGONAL_GAP * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        log_gap = np.log((1 + z2) / (1 - z2)) - np.log((1 + z1) / (1 - z1))
        weight = 2 * (1 - z1) * (1 - z2) * log_gap
    numerator = np.where(diagonal, 5 * z1 - 3, gap - weight)
    denominator = np.where(diagonal, 5 - 3 * z1, gap + weight)
    return numerator, denominator


def _sola_ex2_phi(z1, z2):
    return 1 + z1 + z2 - 3 * z1 * z2, 3 - z1 - z2 - z1 * z2


def _avg_shift_phi(z1, z2):
    return (z1 + (1 + z2) / 2) / 2, np.ones_like(z1 + z2)


def _avg_shift_psi(z1, z2):
    return (z2 + (1 + z1) / 2) / 2, np.ones_like(z1 + z2)


def _proj1(z1, z2):
    return z1 + 0 * z2, np.ones_like(z1 + z2)


def _proj2(z1, z2):
    return z2 + 0 * z1, np.ones_like(z1 + z2)


BUILTINS = {
 "herve_ex1_phi": _herve_ex1_phi,
 "mcp_ex1_psi": _mcp_ex1_psi,
 "sola_ex2_phi": _sola_ex2_phi,
 "avg_shift_phi": _avg_shift_phi,
 "avg_shift_psi": _avg_shift_psi,
 "proj1": _proj1,
 "proj2": _proj2
}

class ScalarMap:
    """A holomorphic map from the bidisk to the disk. Every map is evaluated
    as a quotient of a numerator and a denominator so that small denominators
    can be caught, and works elementwise on ``numpy`` arrays.

    Maps are called with two coordinates, which may be numbers or arrays of
    the same shape:

        >>> bidisk.Builtin("herve_ex1_phi")(0, 0)
        (0.5+0j)

    The class would never be instantiated directly."""

    def __call__(self, z1, z2):
        numerator, denominator = self.parts(z1, z2)
        if np.any(np.abs(denominator) < NEAR_ZERO):
            raise DenominatorNearZero(
             "{} has a vanishing denominator here".format(self)
            )
        value = numerator / denominator
        return complex(value) if np.ndim(value) == 0 else value


    def evaluate(self, z1, z2):
        """Evaluates the map elementwise, always returning an array.

        :param z1: the first coordinates.
        :param z2: the second coordinates.
        :rtype: ``numpy.ndarray``"""

        return np.asarray(self(z1, z2), dtype=complex)


    def parts(self, z1, z2):
        """Returns the numerator and denominator at a point (or arrays of
        points).

        :rtype: ``tuple``"""

        raise NotImplementedError



class Rational(ScalarMap):
    """A rational map given by two coefficient matrices. Entry ``[i][j]`` of
    each matrix multiplies ``z1^i z2^j``.

    :param num: the numerator coefficients.
    :param den: the denominator coefficients.
    :raises ValueError: if either matrix is empty or not two-dimensional."""

    def __init__(self, num, den):
        self._num = np.atleast_2d(np.array(num, dtype=complex))
        self._den = np.atleast_2d(np.array(den, dtype=complex))
        for matrix in (self._num, self._den):
            if matrix.ndim != 2 or matrix.size == 0:
                raise ValueError("Coefficients must be a non-empty matrix")


    def __repr__(self):
        return "<Rational map ({}x{} over {}x{})>".format(
         *self._num.shape, *self._den.shape
        )


    @property
    def num(self):
        """The numerator coefficient matrix.

        :rtype: ``numpy.ndarray``"""

        return self._num


    @property
    def den(self):
        """The denominator coefficient matrix.

        :rtype: ``numpy.ndarray``"""

        return self._den


    def parts(self, z1, z2):
        z1, z2 = np.broadcast_arrays(
         np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex)
        )
        return polyval2d(z1, z2, self._num), polyval2d(z1, z2, self._den)



class Builtin(ScalarMap):
    """One of the named maps in the ``BUILTINS`` registry.

    :param str name: the registry name.
    :raises ParseError: if there is no such builtin."""

    def __init__(self, name):
        if name not in BUILTINS:
            raise ParseError("There is no builtin map called {}".format(name))
        self._name = name


    def __repr__(self):
        return "<Builtin map {}>".format(self._name)


    @property
    def name(self):
        """The registry name.

        :rtype: ``str``"""

        return self._name


    def parts(self, z1, z2):
        return BUILTINS[self._name](
         np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex)
        )



class Blend(ScalarMap):
    """The affine self-map ``s(w1 z1 + w2 z2) + (1 - s)c``. Its modulus is at
    most ``s + (1 - s)|c| <= 1`` everywhere.

    :param float s: the contraction factor in (0, 1].
    :param float w1: the first (non-negative) weight.
    :param float w2: the second weight, with ``w1 + w2 = 1``.
    :param c: the centre, inside the unit disk.
    :raises ValueError: if any parameter is out of range."""

    def __init__(self, s, w1, w2, c=0):
        if not 0 < s <= 1:
            raise ValueError("s must be in (0, 1], not {}".format(s))
        if w1 < 0 or w2 < 0 or abs(w1 + w2 - 1) > 1e-12:
            raise ValueError("Weights must be non-negative and sum to 1")
        self._s, self._w1, self._w2 = float(s), float(w1), float(w2)
        self._c = disk_point(c)


    def __repr__(self):
        return "<Blend map (s={:g}, w1={:g}, w2={:g}, c={})>".format(
         self._s, self._w1, self._w2, format_complex(self._c)
        )


    @property
    def s(self):
        """The contraction factor.

        :rtype: ``float``"""

        return self._s


    @property
    def w1(self):
        """The weight of the first coordinate.

        :rtype: ``float``"""

        return self._w1


    @property
    def w2(self):
        """The weight of the second coordinate.

        :rtype: ``float``"""

        return self._w2


    @property
    def c(self):
        """The centre the map is pulled towards.

        :rtype: ``complex``"""

        return self._c


    def parts(self, z1, z2):
        z1, z2 = np.asarray(z1, dtype=complex), np.asarray(z2, dtype=complex)
        value = self._s * (self._w1 * z1 + self._w2 * z2) + (
         1 - self._s
        ) * self._c
        return value, np.ones_like(value)



class Swapped(ScalarMap):
    """Another map with its two arguments interchanged.

    :param ScalarMap inner: the map being swapped."""

    def __init__(self, inner):
        self._inner = inner


    def __repr__(self):
        return "<Swapped {}>".format(repr(self._inner)[1:-1])


    @property
    def inner(self):
        """The map whose arguments are swapped.

        :rtype: ``ScalarMap``"""

        return self._inner


    def parts(self, z1, z2):
        return self._inner.parts(z2, z1)



class SelfMap2:
    """A holomorphic self-map ``F = (phi, psi)`` of the bidisk.

    :param ScalarMap phi: the first component.
    :param ScalarMap psi: the second component."""

    def __init__(self, phi, psi):
        self._phi, self._psi = phi, psi


    def __repr__(self):
        return "<SelfMap2 ({}, {})>".format(
         repr(self._phi)[1:-1], repr(self._psi)[1:-1]
        )


    def __call__(self, z1, z2=None):
        if z2 is None: z1, z2 = z1
        return self._phi(z1, z2), self._psi(z1, z2)


    @property
    def phi(self):
        """The first component.

        :rtype: ``ScalarMap``"""

        return self._phi


    @property
    def psi(self):
        """The second component.

        :rtype: ``ScalarMap``"""

        return self._psi



def eval_scalar(m, z):
    """Evaluates a map at a point of the bidisk.

    :param ScalarMap m: the map.
    :param BidiskPoint z: the point.
    :raises DenominatorNearZero: if the denominator is below ``1e-14``.
    :rtype: ``complex``"""

    return m(z.z1, z.z2)


def swap_args(m):
    """Returns the map obtained by interchanging the two arguments of another.
    Rational maps have their coefficient matrices transposed, blends have
    their weights exchanged, and swapping twice gives back the original map.

    :param ScalarMap m: the map to swap.
    :rtype: ``ScalarMap``"""

    if isinstance(m, Swapped): return m.inner
    if isinstance(m, Rational): return Rational(m.num.T, m.den.T)
    if isinstance(m, Blend): return Blend(m.s, m.w2, m.w1, m.c)
    return Swapped(m)


def eval_slice(m, side, fixed, z):
    """Evaluates a slice of a map - a function of one variable obtained by
    freezing the other. The left slice at ``fixed`` is ``m(z, fixed)``; the
    right slice is ``m(fixed, z)``.

    :param ScalarMap m: the map.
    :param str side: ``"left"`` or ``"right"``.
    :param fixed: the frozen coordinate, inside the disk.
    :param z: the free coordinate, inside the disk.
    :raises ValueError: if either coordinate is outside the disk.
    :rtype: ``complex``"""

    return slice_function(m, side, disk_point(fixed))(disk_point(z))


def slice_function(m, side, fixed):
    """Returns a slice of a map as a function of one variable, without
    validating its arguments.

    :param ScalarMap m: the map.
    :param str side: ``"left"`` or ``"right"``.
    :param complex fixed: the frozen coordinate.
    :rtype: ``function``"""

    if check_side(side) == "left": return lambda z: m(z, fixed)
    return lambda z: m(fixed, z)


def load_map(spec, samples=VALIDATION_SAMPLES, seed=DEFAULT_SEED):
    """Builds a map from a map-spec document and checks that it really is a
    self-map of the disk on a low-discrepancy sample of the bidisk.

    The document is a ``dict`` with one of the keys ``builtin`` (a registry
    name), ``num`` and ``den`` (coefficient matrices whose entries are reals
    or ``[re, im]`` pairs), ``blend`` (the ``s``, ``w1``, ``w2`` and ``c``
    parameters) or ``swap`` (another map-spec document).

    :param dict spec: the map-spec document.
    :param int samples: the size of the validation sample.
    :param int seed: the sampling seed.
    :raises ParseError: if the document cannot be understood.
    :raises DenominatorVanishes: if a denominator is below ``1e-9`` somewhere
        on the sample.
    :raises NotASelfMap: if the map's modulus exceeds ``1 + 1e-9`` somewhere
        on the sample.
    :rtype: ``ScalarMap``"""

    m = spec_to_map(spec)
    validate_map(m, samples=samples, seed=seed)
    return m


def spec_to_map(spec):
    """Builds a map from a map-spec document without validating it.

    :param dict spec: the map-spec document.
    :raises ParseError: if the document cannot be understood.
    :rtype: ``ScalarMap``"""

    if not isinstance(spec, dict):
        raise ParseError("A map spec must be a mapping, not {}".format(spec))
    keys = set(spec)
    if keys == {"builtin"}:
        return Builtin(spec["builtin"])
    if keys == {"num", "den"}:
        return Rational(
         parse_coefficients(spec["num"]), parse_coefficients(spec["den"])
        )
    if keys == {"blend"}:
        try:
            params = dict(spec["blend"])
            params["c"] = complex_scalar(params.get("c", 0))
            return Blend(**params)
        except (TypeError, ValueError) as e:
            raise ParseError("Bad blend parameters: {}".format(e))
    if keys == {"swap"}:
        return swap_args(spec_to_map(spec["swap"]))
    raise ParseError("Unrecognised map spec keys: {}".format(sorted(keys)))


def parse_coefficients(rows):
    """Reads a coefficient matrix whose entries are reals or ``[re, im]``
    pairs.

    :param list rows: the matrix as nested lists.
    :raises ParseError: if the matrix is ragged, empty or non-numeric.
    :rtype: ``numpy.ndarray``"""

    if not isinstance(rows, list) or not rows:
        raise ParseError("Coefficients must be a non-empty list of rows")
    matrix = []
    for row in rows:
        if not isinstance(row, list) or len(row) != len(rows[0]) or not row:
            raise ParseError("Coefficient rows must be equal-length lists")
        matrix.append([_parse_entry(entry) for entry in row])
    return np.array(matrix, dtype=complex)


def _parse_entry(entry):
    if isinstance(entry, bool):
        raise ParseError("{} is not a coefficient".format(entry))
    if isinstance(entry, numbers.Real): return complex(entry)
    if isinstance(entry, list) and len(entry) == 2 and all(
     isinstance(part, numbers.Real) and not isinstance(part, bool)
     for part in entry
    ):
        return complex(entry[0], entry[1])
    raise ParseError("{} is not a coefficient".format(entry))


def validate_map(m, samples=VALIDATION_SAMPLES, seed=DEFAULT_SEED):
    """Checks a map's denominator and modulus on a low-discrepancy sample of
    the bidisk.

    :param ScalarMap m: the map to check.
    :param int samples: the size of the sample.
    :param int seed: the sampling seed.
    :raises DenominatorVanishes: if a denominator is below ``1e-9``.
    :raises NotASelfMap: if the modulus exceeds ``1 + 1e-9``."""

    z1, z2 = sample_bidisk(samples, seed)
    numerator, denominator = m.parts(z1, z2)
    if np.min(np.abs(denominator)) < VANISHING:
        raise DenominatorVanishes("{} has a vanishing denominator".format(m))
    values = np.abs(numerator / denominator)
    if not np.all(np.isfinite(values)) or np.max(values) > 1 + SCHUR_SLACK:
        raise NotASelfMap("{} reaches modulus {:.6g}".format(
         m, np.nanmax(values)
        ))


def map_to_spec(m):
    """Writes a map out as a map-spec document - the inverse of
    :py:func:`.load_map`.

    :param ScalarMap m: the map.
    :raises ValueError: if the map is of an unknown kind.
    :rtype: ``dict``"""

    if isinstance(m, Builtin): return {"builtin": m.name}
    if isinstance(m, Rational):
        return {"num": _write_matrix(m.num), "den": _write_matrix(m.den)}
    if isinstance(m, Blend):
        return {"blend": {
         "s": m.s, "w1": m.w1, "w2": m.w2, "c": [m.c.real, m.c.imag]
        }}
    if isinstance(m, Swapped): return {"swap": map_to_spec(m.inner)}
    raise ValueError("Cannot write {} as a map spec".format(m))


def _write_matrix(matrix):
    return [[
     entry.real if entry.imag == 0 else [entry.real, entry.imag]
     for entry in map(complex, row)
    ] for row in matrix]


def projection_index(m):
    """Works out whether a map is structurally one of the coordinate
    projections. Only the form of the map is inspected - no evaluation
    happens.

    :param ScalarMap m: the map.
    :returns: 1 or 2 for the projections, otherwise ``None``."""

    if isinstance(m, Swapped):
        index = projection_index(m.inner)
        return None if index is None else 3 - index
    if isinstance(m, Builtin):
        return {"proj1": 1, "proj2": 2}.get(m.name)
    if isinstance(m, Blend) and m.s == 1:
        return 1 if m.w1 == 1 else 2 if m.w2 == 1 else None
    if isinstance(m, Rational) and np.count_nonzero(m.den) == 1:
        if m.den[0, 0] == 0: return None
        num = m.num / m.den[0, 0]
        if np.count_nonzero(num) != 1: return None
        for index, (i, j) in ((1, (1, 0)), (2, (0, 1))):
            if num.shape[0] > i and num.shape[1] > j and num[i, j] == 1:
                return index
    return None
