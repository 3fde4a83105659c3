"""
Reports and their independent recheck.

A report is a JSON object. Whatever a search did internally, a "pass"
verdict stands only if `recheck` can re-derive it from the stored
instance and witness alone, with exact arithmetic.
"""

import time
from fractions import Fraction

from . import __version__
from .centerpoint import min_ray_crossings, tukey_depth
from .f2poly import F2Poly
from .io import (ConfigError, parse_config, parse_partition, parse_scalar,
                 parse_subspace, parse_vector, q, qvec, serialize_cell_certificate,
                 serialize_points, serialize_subspace)
from .linalg import dot
from .lp import in_convex_hull
from .pieces import (piece_sign, verify_center_subspace,
                     verify_transversal_witness)
from .topology import (flag_condition, prime_power, thm4_condition,
                       thm6_condition)

TOOL = "projtverberg"


def jsonable(x):
    """Gate data and notes contain Fractions, polynomials and tuples."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return q(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, F2Poly):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    return str(x)


def gate_entry(name, gate, params):
    return {"name": name, "params": dict(params), "verdict": bool(gate.verdict),
            "method": gate.method, "explanation": gate.explanation,
            "data": jsonable(gate.data)}


def compute_gate(name, params):
    """Re-evaluate a named hypothesis gate from its integer parameters."""
    P = params
    if name == "transversal":
        return thm4_condition(P["d"], P["v"], P["w"], P["m"], P.get("p", 2))
    if name == "both-free":
        return thm6_condition(P["d"], P["v"], P.get("p", 2))
    if name == "flag":
        return flag_condition(P["d"], P["v"], P["w"], P["m"])
    if name == "prime-power":
        from .topology import Gate
        pp = prime_power(P["r"])
        ok = P["r"] == 1 or pp is not None
        why = ("r = 1" if P["r"] == 1 else
               "r = %d = %d^%d" % (P["r"], pp[0], pp[1]) if pp else
               "r = %d is not a prime power" % P["r"])
        return Gate(ok, "closed-form gate", why, {"prime_power": pp})
    if name == "none":
        from .topology import Gate
        return Gate(True, "closed-form gate", "no topological hypothesis", {})
    raise ValueError("unknown gate %r" % name)


class Report:
    """Accumulates the fields of one job; `finish` returns the JSON object."""

    def __init__(self, command, theorem, seed, params, digest):
        self.doc = {
            "tool": TOOL, "version": __version__, "command": command,
            "theorem": theorem, "seed": seed, "params": jsonable(params),
            "input_digest": digest, "verdict": "fail", "gates": [],
            "warnings": [], "notes": [], "certificate": None,
            "timing": {},
        }
        self._t0 = time.perf_counter()

    def gate(self, name, gate, params):
        self.doc["gates"].append(gate_entry(name, gate, params))

    def warn(self, msg):
        if msg not in self.doc["warnings"]:
            self.doc["warnings"].append(msg)

    def note(self, msg):
        self.doc["notes"].append(msg)

    def finish(self, verdict, certificate=None):
        self.doc["verdict"] = "pass" if verdict else "fail"
        self.doc["certificate"] = certificate
        self.doc["timing"] = {"seconds": round(time.perf_counter() - self._t0, 6)}
        return self.doc


def make_report(command, theorem, verdict, certificate, seed=0, params=None, input_doc=None):
    """A finished report for results computed through the library API."""
    from .io import digest
    params = params or {}
    rep = Report(command, theorem, seed, params,
                 digest({"input": input_doc or {}, "params": jsonable(params),
                         "command": command, "theorem": theorem}))
    return rep.finish(verdict, certificate)


# -- certificate builders ----------------------------------------------------

def center_certificate(cert, X):
    return {
        "kind": "center", "d": X.d, "r": cert.r,
        "strict": "disjoint" in cert.details,
        "V": serialize_subspace(cert.V), "W": serialize_subspace(cert.W),
        "configs": [serialize_points(X)],
        "min_count": cert.min_count,
        "witness": serialize_cell_certificate(cert.witness),
    }


def tverberg_certificate(cert, configs, rainbow=False, strict=False):
    """configs: list of (PointConfig, PartitionWitness)."""
    out = []
    for X, part in configs:
        entry = serialize_points(X)
        entry["partition"] = [list(p) for p in part.parts]
        entry["r"] = part.r
        out.append(entry)
    return {
        "kind": "tverberg", "d": configs[0][0].d, "rainbow": rainbow, "strict": strict,
        "V": serialize_subspace(cert.V), "W": serialize_subspace(cert.W),
        "configs": out, "min_count": cert.min_count,
        "witness": serialize_cell_certificate(cert.witness),
    }


def gate_certificate(name, params):
    return {"kind": "gate", "gate": name, "params": dict(params)}


def tukey_certificate(c, depth, X):
    return {"kind": "tukey", "d": X.d, "point": qvec(c), "depth": depth,
            "configs": [serialize_points(X)]}


def radon_certificate(part, point, X):
    return {"kind": "radon", "d": X.d, "point": qvec(point),
            "configs": [dict(serialize_points(X), partition=[list(p) for p in part.parts])]}


def dual_certificate(c, value, H):
    return {"kind": "rays", "d": len(c), "point": qvec(c), "value": value,
            "hyperplanes": [qvec(tuple(a) + (b,)) for a, b in H]}


# -- recheck -----------------------------------------------------------------

def _configs(cert):
    d = cert["d"]
    out = []
    for j, c in enumerate(cert["configs"]):
        doc = parse_config(dict(c, d=d))
        X = doc["configs"][0]["X"]
        part = None
        if "partition" in c:
            part = parse_partition(c["partition"], len(X), "configs[%d].partition" % j)
        out.append((X, part))
    return out


def _check_witness(cert, V, W, X_list, problems):
    """The stored hyperplane pair must contain V and W and reproduce its counts."""
    wit = cert["witness"]
    f = parse_vector(wit["f"], "witness.f")
    g = parse_vector(wit["g"], "witness.g")
    if not any(f) or not any(g):
        problems.append("witness forms must be nonzero")
        return
    if any(dot(f, b) for b in V.basis):
        problems.append("witness form f does not vanish on V")
    if any(dot(g, b) for b in W.basis):
        problems.append("witness form g does not vanish on W")
    X = X_list[0]
    s = [piece_sign((f, g), p) for p in X.points]
    plus = sum(1 for t in s if t >= 0)
    minus = sum(1 for t in s if t <= 0)
    if (plus, minus) != (wit["count_plus"], wit["count_minus"]):
        problems.append("witness counts (%d, %d) do not match recomputed (%d, %d)"
                        % (wit["count_plus"], wit["count_minus"], plus, minus))


def recheck(report):
    """Re-derive the verdict of a report. Returns (ok, list of problems).

    ok is True exactly when the report claims "pass" and the embedded
    certificate re-verifies. A "fail" report rechecks as not ok.
    """
    problems = []
    if not isinstance(report, dict) or report.get("tool") != TOOL:
        return False, ["not a %s report" % TOOL]
    if report.get("verdict") != "pass":
        return False, ["report verdict is %r" % report.get("verdict")]
    cert = report.get("certificate")
    if not cert:
        return False, ["pass verdict without a certificate"]
    try:
        kind = cert["kind"]
        if kind == "center":
            d = cert["d"]
            V = parse_subspace(cert["V"], d, "V")
            W = parse_subspace(cert["W"], d, "W")
            (X, _), = _configs(cert)
            c = verify_center_subspace(V, W, X, cert["r"], strict=cert.get("strict", False))
            if not c.verdict:
                problems.append("min count %d below r = %d" % (c.min_count, cert["r"]))
            if c.min_count != cert["min_count"]:
                problems.append("stored min count %d, recomputed %d"
                                % (cert["min_count"], c.min_count))
            _check_witness(cert, V, W, [X], problems)
            if cert["witness"]["count_plus"] != c.min_count and \
                    cert["witness"]["count_minus"] != c.min_count:
                problems.append("witness does not attain the minimum")
        elif kind == "tverberg":
            d = cert["d"]
            V = parse_subspace(cert["V"], d, "V")
            W = parse_subspace(cert["W"], d, "W")
            configs = _configs(cert)
            if any(p is None for _, p in configs):
                return False, ["a configuration lacks its partition"]
            c = verify_transversal_witness(V, W, configs, rainbow=cert.get("rainbow", False),
                                           strict=cert.get("strict", False))
            if not c.verdict:
                problems.append("partition check fails for configuration %s"
                                % c.details.get("failing_config"))
            for (X, p), e in zip(configs, cert["configs"]):
                if p.r != e.get("r", p.r):
                    problems.append("stored r differs from the partition size")
        elif kind == "gate":
            gate = compute_gate(cert["gate"], cert["params"])
            if not gate.verdict:
                problems.append("gate %s fails: %s" % (cert["gate"], gate.explanation))
        elif kind == "tukey":
            (X, _), = _configs(cert)
            c = tuple(parse_scalar(x, "point") for x in cert["point"])
            depth = tukey_depth(c, X)
            if depth != cert["depth"]:
                problems.append("stored depth %d, recomputed %d" % (cert["depth"], depth))
            if depth < -(-len(X) // (X.d + 1)):
                problems.append("depth below ceil(n/(d+1))")
        elif kind == "radon":
            (X, part), = _configs(cert)
            c = tuple(parse_scalar(x, "point") for x in cert["point"])
            if part is None or part.r != 2:
                problems.append("a Radon certificate needs two parts")
            else:
                pts = [p.to_affine() for p in X.points]
                for j, P in enumerate(part.parts):
                    if not in_convex_hull(c, [pts[i] for i in P]):
                        problems.append("point not in the hull of part %d" % j)
        elif kind == "rays":
            H = []
            for i, h in enumerate(cert["hyperplanes"]):
                vv = parse_vector(h, "hyperplanes[%d]" % i)
                H.append((vv[:-1], vv[-1]))
            c = tuple(parse_scalar(x, "point") for x in cert["point"])
            val = min_ray_crossings(c, H)
            if val != cert["value"]:
                problems.append("stored value %d, recomputed %d" % (cert["value"], val))
            if val < -(-len(H) // (cert["d"] + 1)):
                problems.append("ray crossing value below ceil(n/(d+1))")
        elif kind == "measure":
            for j, sc in enumerate(cert["sample_certificates"]):
                ok, sub = recheck(dict(report, certificate=sc))
                problems.extend("sample %d: %s" % (j, msg) for msg in sub)
        else:
            problems.append("unknown certificate kind %r" % kind)
    except (KeyError, TypeError, ValueError, ConfigError) as e:
        problems.append("malformed certificate: %s" % (e,))
    return not problems, problems
