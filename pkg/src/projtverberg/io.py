"""
JSON documents for inputs and reports. Exact rationals travel as strings
("3", "-2/7"); integers are accepted on input as well.
"""

import hashlib
import json
import os
import tempfile
from fractions import Fraction

from .geometry import LinSubspace, PointConfig, ProjPoint, canonicalize, hyperplane_at_infinity
from .linalg import rank
from .pieces import PartitionWitness


class ConfigError(ValueError):
    """Malformed input; the message names the offending field."""


def q(x):
    return str(Fraction(x))


def qvec(v):
    return [q(x) for x in v]


def parse_scalar(x, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ConfigError("%s: %r is not an exact number (use an integer or \"p/q\")" % (where, x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError("%s: malformed number %r" % (where, x)) from None
    raise ConfigError("%s: malformed number %r" % (where, x))


def parse_vector(v, where, length=None):
    if not isinstance(v, list):
        raise ConfigError("%s: expected a list of numbers" % where)
    out = tuple(parse_scalar(x, "%s[%d]" % (where, i)) for i, x in enumerate(v))
    if length is not None and len(out) != length:
        raise ConfigError("%s: wrong arity %d, expected %d" % (where, len(out), length))
    return out


def parse_point(v, d, where):
    """Homogeneous (length d+1) or affine (length d, last coordinate 1)."""
    vv = parse_vector(v, where)
    if len(vv) == d:
        vv = vv + (Fraction(1),)
    elif len(vv) != d + 1:
        raise ConfigError("%s: wrong arity %d for d = %d (want %d or %d)"
                          % (where, len(vv), d, d, d + 1))
    if not any(vv):
        raise ConfigError("%s: the zero vector is not a point" % where)
    return ProjPoint(vv)


def parse_points(doc, d, where="points"):
    pts = doc.get("points")
    if not isinstance(pts, list) or not pts:
        raise ConfigError("%s: expected a nonempty list of points" % where)
    points = [parse_point(p, d, "%s[%d]" % (where, i)) for i, p in enumerate(pts)]
    colors = doc.get("colors")
    if colors is not None and (not isinstance(colors, list) or len(colors) != len(points)):
        raise ConfigError("%s: colors must list one label per point" % where.replace("points", "colors"))
    return PointConfig(d, points, colors)


def parse_subspace(v, d, where, warnings=None):
    if v == "infinity":
        return hyperplane_at_infinity(d)
    if not isinstance(v, list) or not v:
        raise ConfigError("%s: expected a list of spanning vectors or \"infinity\"" % where)
    rows = [parse_vector(r, "%s[%d]" % (where, i), d + 1) for i, r in enumerate(v)]
    S = canonicalize(rows, d + 1)
    if S.rank == 0:
        raise ConfigError("%s: spanning vectors are all zero (rank-0 subspace)" % where)
    if S.rank < len(rows) and warnings is not None:
        warnings.append("%s: %d generators are dependent, rank is %d" % (where, len(rows), S.rank))
    return S


def parse_partition(v, n, where):
    if not isinstance(v, list) or not all(isinstance(p, list) for p in v):
        raise ConfigError("%s: expected a list of index lists" % where)
    try:
        return PartitionWitness(v, n)
    except (TypeError, ValueError) as e:
        raise ConfigError("%s: %s" % (where, e)) from None


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError("line %d column %d: %s" % (e.lineno, e.colno, e.msg)) from None


def parse_config(doc):
    """Parse an input document into exact objects.

    Returns a dict with keys d, configs (list of dicts with X, r,
    partition), V, W, warnings and the raw document.
    """
    if isinstance(doc, str):
        doc = loads(doc)
    if not isinstance(doc, dict):
        raise ConfigError("top level: expected an object")
    warnings = []
    d = doc.get("d")
    if not isinstance(d, int) or d < 1:
        raise ConfigError("d: expected a positive integer")
    configs = []
    if "configs" in doc:
        if not isinstance(doc["configs"], list) or not doc["configs"]:
            raise ConfigError("configs: expected a nonempty list")
        for j, c in enumerate(doc["configs"]):
            X = parse_points(c, d, "configs[%d].points" % j)
            configs.append(_config_entry(c, X, "configs[%d]" % j))
    elif "points" in doc:
        X = parse_points(doc, d)
        configs.append(_config_entry(doc, X, ""))
    out = {"d": d, "configs": configs, "warnings": warnings, "doc": doc}
    for key in ("V", "W"):
        if key in doc:
            out[key] = parse_subspace(doc[key], d, key, warnings)
    if "hyperplanes" in doc:
        hs = []
        for i, h in enumerate(doc["hyperplanes"]):
            vv = parse_vector(h, "hyperplanes[%d]" % i, d + 1)
            if not any(vv[:-1]):
                raise ConfigError("hyperplanes[%d]: zero normal" % i)
            hs.append((vv[:-1], vv[-1]))
        out["hyperplanes"] = hs
    return out


def _config_entry(doc, X, prefix):
    entry = {"X": X, "r": doc.get("r"), "partition": None}
    if entry["r"] is not None and (not isinstance(entry["r"], int) or entry["r"] < 0):
        raise ConfigError("%sr: expected a nonnegative integer" % (prefix + "." if prefix else ""))
    if "partition" in doc:
        where = (prefix + "." if prefix else "") + "partition"
        entry["partition"] = parse_partition(doc["partition"], len(X), where)
    return entry


def serialize_points(X):
    out = {"points": [[str(c) for c in p.coords] for p in X.points]}
    if X.colors is not None:
        out["colors"] = list(X.colors)
    return out


def serialize_subspace(S):
    return [qvec(row) for row in S.basis]


def serialize_config(d, X, V=None, W=None, r=None, partition=None):
    doc = {"d": d}
    doc.update(serialize_points(X))
    if V is not None:
        doc["V"] = serialize_subspace(V)
    if W is not None:
        doc["W"] = serialize_subspace(W)
    if r is not None:
        doc["r"] = r
    if partition is not None:
        doc["partition"] = [list(p) for p in partition.parts]
    return doc


def serialize_cell_certificate(c):
    return {
        "sigma": list(c.sigma.signs), "tau": list(c.tau.signs),
        "u": qvec(c.witness_u), "s": qvec(c.witness_s),
        "f": qvec(c.f), "g": qvec(c.g),
        "count_plus": c.count_plus, "count_minus": c.count_minus,
    }


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def digest(doc):
    return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()


def write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
