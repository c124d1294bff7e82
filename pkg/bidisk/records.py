"""Contains logic for turning results into CSV tables and structured
records, and structured records back into dictionaries."""

import csv
import io
import re
import numbers
import numpy as np
from .core import format_complex

INDENT = "  "
NUMBER = "{:.17g}"

def kcurve_to_csv(curve):
    """Converts a :py:class:`.KCurve` to CSV text with the columns M, K,
    imag_residual and error_estimate.

    :param KCurve curve: the curve to convert.
    :rtype: ``str``"""

    rows = zip(
     curve.m_grid, curve.k_values, curve.imag_residuals, curve.error_estimates
    )
    return write_csv(("M", "K", "imag_residual", "error_estimate"), rows)


def orbit_to_csv(orbit):
    """Converts an :py:class:`.Orbit` to CSV text, one row per point, with the
    point's coordinates and its horosphere functionals.

    :param Orbit orbit: the orbit to convert.
    :rtype: ``str``"""

    rows = []
    for n, point in enumerate(orbit.points):
        rows.append([
         n, point.z1.real, point.z1.imag, point.z2.real, point.z2.imag,
         orbit.a_seq[n], orbit.b_seq[n], orbit.r_seq[n]
        ])
    return write_csv(("n", "re1", "im1", "re2", "im2", "A", "B", "R"), rows)


def continuation_to_csv(result):
    """Converts a :py:class:`.ContinuationResult` to CSV text, one row per
    stage.

    :param ContinuationResult result: the result to convert.
    :rtype: ``str``"""

    rows = []
    for k, ((r, point, residual), ratio) in enumerate(
     zip(result.stages, result.ratios), start=1
    ):
        rows.append([
         k, r, point.z1.real, point.z1.imag, point.z2.real, point.z2.imag,
         residual, ratio
        ])
    return write_csv(
     ("k", "r", "re1", "im1", "re2", "im2", "residual", "ratio"), rows
    )


def write_csv(header, rows):
    """Writes a header and rows as CSV text. Floats are written with 17
    significant digits and a '.' decimal point whatever the locale.

    :param tuple header: the column names.
    :param rows: the rows, each an iterable of numbers.
    :rtype: ``str``"""

    f = io.StringIO()
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([
         value if isinstance(value, numbers.Integral) else
         NUMBER.format(float(value)) for value in row
        ])
    return f.getvalue()


def to_record(obj):
    """Turns a result object into a nested ``dict`` of plain values, ready to
    be written as a structured record. Dictionaries are passed through.

    :param obj: a ``DWClass``, ``SliceDW``, ``JuliaReport``,
        ``WolffSetReport``, ``HerveCase``, ``ConvergenceReport``,
        ``ContinuationResult`` or ``dict``.
    :raises TypeError: if the object is not one of those.
    :rtype: ``dict``"""

    name = type(obj).__name__
    if isinstance(obj, dict):
        return {key: _plain(value) for key, value in obj.items()}
    if name == "DWClass":
        record = {"kind": obj.kind}
        if obj.value_name and obj.value is not None:
            record[obj.value_name] = obj.value
        if obj.type_number: record["type"] = obj.type_number
        if obj.diagnostics: record["diagnostics"] = to_record(obj.diagnostics)
        return record
    if name == "SliceDW":
        if obj.interior:
            return {"kind": obj.kind, "p": obj.p, "multiplier": obj.multiplier}
        return {"kind": obj.kind, "tau": obj.tau, "alpha": obj.alpha}
    if name == "JuliaReport":
        return {
         "n_samples": obj.n_samples, "max_violation": obj.max_violation,
         "tightness": obj.tightness, "satisfied": obj.satisfied,
         "worst_point": _point(obj.worst_point)
        }
    if name == "WolffSetReport":
        return to_record({
         "case": obj.case, "phi_class": to_record(obj.phi_class),
         "psi_class": to_record(obj.psi_class),
         "witness_tau": _point(obj.witness_tau),
         "facial_violations": obj.facial_violations,
         "corner_K": obj.corner_K, "corner_violation": obj.corner_violation,
         "corner_in_wolff_set": obj.corner_in_wolff_set
        })
    if name == "HerveCase":
        return {"case": obj.case, "expected": obj.expected,
         "refined": obj.refined}
    if name == "ConvergenceReport":
        return to_record({
         "converged": obj.converged, "limit": _point(obj.limit),
         "n_at_tol": obj.n_at_tol, "monotone_A": obj.monotone_A,
         "monotone_R": obj.monotone_R
        })
    if name == "ContinuationResult":
        return to_record({
         "stages": len(obj.stages), "tau_estimate": _point(obj.tau_estimate),
         "K_estimate": obj.K_estimate, "degenerate": obj.degenerate,
         "interior": obj.interior, "truncated": obj.truncated
        })
    raise TypeError("Cannot make a record from {}".format(obj))


def _point(point):
    if point is None: return None
    return ";".join(format_complex(z) for z in point)


def _plain(value):
    if isinstance(value, dict): return to_record(value)
    if isinstance(value, (bool, np.bool_)): return bool(value)
    if isinstance(value, numbers.Integral): return int(value)
    if isinstance(value, numbers.Real): return float(value)
    if isinstance(value, numbers.Complex): return complex(value)
    return value


def record_to_string(record, indent=0):
    """Writes a nested ``dict`` as ``key: value`` lines, with nested
    dictionaries as blocks indented by two spaces under a ``key:`` line.

    :param dict record: the record to write.
    :param int indent: the starting depth.
    :rtype: ``str``"""

    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append("{}{}:".format(INDENT * indent, key))
            if value: lines.append(record_to_string(value, indent + 1))
        else:
            lines.append("{}{}: {}".format(
             INDENT * indent, key, write_value(value)
            ))
    return "\n".join(lines)


def write_value(value):
    """Writes a single record value - booleans as ``true``/``false``,
    ``None`` as ``none``, floats with 17 significant digits and complex
    numbers as ``re,im``.

    :param value: the value to write.
    :rtype: ``str``"""

    if value is None: return "none"
    if isinstance(value, (bool, np.bool_)): return "true" if value else "false"
    if isinstance(value, numbers.Integral): return str(int(value))
    if isinstance(value, numbers.Real): return NUMBER.format(value)
    if isinstance(value, numbers.Complex):
        return (NUMBER + "," + NUMBER).format(value.real, value.imag)
    return str(value)


def record_string_to_dict(filestring):
    """Takes the text of a structured record and turns it back into a nested
    ``dict``. Values are read back as the types they were written from.

    :param str filestring: the record text.
    :raises ValueError: if the indentation is inconsistent.
    :rtype: ``dict``"""

    record = {}
    stack = [(-1, record)]
    for line in filter(lambda l: bool(l.strip()), filestring.split("\n")):
        depth = (len(line) - len(line.lstrip(" "))) // len(INDENT)
        while stack[-1][0] >= depth: stack.pop()
        if stack[-1][0] != depth - 1:
            raise ValueError("Bad indentation: '{}'".format(line))
        key, _, value = line.strip().partition(":")
        if value.strip():
            stack[-1][1][key] = read_value(value.strip())
        else:
            stack[-1][1][key] = {}
            stack.append((depth, stack[-1][1][key]))
    return record


def read_value(text):
    """Reads a single record value written by :py:func:`.write_value`.

    :param str text: the value text.
    :rtype: ``str``, ``int``, ``float``, ``complex``, ``bool`` or ``None``"""

    if text in ("true", "false"): return text == "true"
    if text == "none": return None
    if re.fullmatch(r"-?\d+", text): return int(text)
    try:
        return float(text)
    except ValueError: pass
    parts = text.split(",")
    if len(parts) == 2:
        try:
            return complex(float(parts[0]), float(parts[1]))
        except ValueError: pass
    return text
