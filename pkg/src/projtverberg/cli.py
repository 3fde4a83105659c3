"""
Batch front-end. One job per invocation:

    projtverberg COMMAND --theorem TAG [parameters] [--input FILE] [--output FILE]

Commands: certify, verify, search, oracle, demo-measure, plot, recheck.
Exit status 0 means pass (and the report rechecked), 1 fail or not
found, 2 a usage or input error.
"""

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .centerpoint import (SearchConfig, classical_center_point,
                          dual_center_point_search, search_center_subspace)
from .geometry import hyperplane_at_infinity
from .io import (ConfigError, digest, dumps, loads, parse_config, parse_subspace,
                 write_atomic)
from .measure import DEFAULT_CAP, demo_measure
from .pieces import verify_center_subspace, verify_transversal_witness
from .plot import render_svg
from .report import (Report, center_certificate, compute_gate, dual_certificate,
                     gate_certificate, jsonable, radon_certificate, recheck,
                     tukey_certificate, tverberg_certificate)
from .topology import (cell_dimension, partition_count_lower_bound, prime_power,
                       required_points, tverberg_r)
from .tverberg import (TransversalInstance, radon_partition, search_both_subspaces,
                       search_projective_tverberg, search_transversal)

COMMANDS = ("certify", "verify", "search", "oracle", "demo-measure", "plot", "recheck")
THEOREMS = ("cpt", "tver", "transversal", "both-free", "flag")
EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    theorem: str = None
    d: int = None
    v: int = None
    w: int = None
    m: int = None
    r: list = None
    p: int = 2
    samples: int = None
    input: str = None
    output: str = None
    plot: str = None
    rainbow: bool = False
    strict: bool = False
    search: SearchConfig = field(default_factory=SearchConfig)
    doc: dict = None

    def params(self):
        return {k: getattr(self, k) for k in ("d", "v", "w", "m", "r", "p", "samples")
                if getattr(self, k) is not None}

    def need(self, *names):
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise UsageError("%s --theorem %s needs %s"
                             % (self.command, self.theorem, ", ".join("--" + n for n in missing)))


# -- argument parsing --------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="projtverberg", description=__doc__.strip().splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--theorem", choices=THEOREMS)
    for name in ("d", "v", "w", "m", "p"):
        ap.add_argument("--" + name, type=int)
    ap.add_argument("--r", help="r, or comma separated r_j for several configurations")
    ap.add_argument("--samples", type=int, help="sample count for demo-measure")
    ap.add_argument("--input", metavar="FILE")
    ap.add_argument("--output", metavar="FILE")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--eps-schedule", metavar="CSV")
    ap.add_argument("--max-starts", type=int)
    ap.add_argument("--rainbow", action="store_true")
    ap.add_argument("--strict-disjoint", action="store_true")
    ap.add_argument("--plot", metavar="FILE.svg")
    return ap


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError("--r expects integers, got %r" % text) from None


def job_from_args(ns):
    doc = None
    if ns.input:
        try:
            with open(ns.input) as fh:
                doc = loads(fh.read())
        except OSError as e:
            raise UsageError("cannot read %s: %s" % (ns.input, e.strerror)) from None
    src = doc if isinstance(doc, dict) and ns.command != "recheck" else {}
    search = dict(src.get("search", {})) if isinstance(src.get("search", {}), dict) else {}
    search["seed"] = ns.seed
    if ns.eps_schedule:
        try:
            search["eps_schedule"] = tuple(float(x) for x in ns.eps_schedule.split(","))
        except ValueError:
            raise UsageError("--eps-schedule expects comma separated numbers") from None
    elif "eps_schedule" in search:
        search["eps_schedule"] = tuple(search["eps_schedule"])
    if ns.max_starts is not None:
        search["multistart"] = ns.max_starts
    if "strategies" in search:
        search["strategies"] = tuple(search["strategies"])
    try:
        cfg = SearchConfig(**search)
    except TypeError as e:
        raise UsageError("search: %s" % e) from None

    def pick(name):
        val = getattr(ns, name)
        return val if val is not None else src.get(name)

    r = ns.r if ns.r is not None else src.get("r")
    if isinstance(r, str):
        r = _int_list(r)
    elif isinstance(r, int):
        r = [r]
    job = JobSpec(command=ns.command, theorem=ns.theorem, d=pick("d"), v=pick("v"),
                  w=pick("w"), m=pick("m"), r=r, p=pick("p") or 2,
                  samples=pick("samples") or src.get("n"), input=ns.input,
                  output=ns.output, plot=ns.plot, rainbow=ns.rainbow,
                  strict=ns.strict_disjoint, search=cfg, doc=doc)
    if job.command not in ("plot", "recheck") and job.theorem is None:
        raise UsageError("%s needs --theorem" % job.command)
    return job


# -- job dispatch --------------------------------------------------------------

def _instance(job):
    """Parsed input: configurations, V (default: hyperplane at infinity), W."""
    if job.doc is None:
        raise UsageError("%s --theorem %s needs --input" % (job.command, job.theorem))
    doc = dict(job.doc)
    if job.d is not None:
        doc["d"] = job.d
    parsed = parse_config(doc)
    job.d = parsed["d"]
    if "V" not in parsed:
        parsed["V"] = hyperplane_at_infinity(job.d)
    if job.v is None:
        job.v = parsed["V"].proj_dim
    elif job.v != parsed["V"].proj_dim:
        raise ConfigError("V: dimension %d differs from --v %d" % (parsed["V"].proj_dim, job.v))
    return parsed


def _r_for(job, j, X):
    if job.r:
        if len(job.r) == 1:
            return job.r[0]
        if j < len(job.r):
            return job.r[j]
        raise UsageError("--r lists %d values for more configurations" % len(job.r))
    return None


def _size_warnings(rep, configs, D):
    for j, (X, r) in enumerate(configs):
        if r and r >= 1 and D >= 1 and len(X) != required_points(D, r):
            rep.warn("|X^%d| = %d differs from (D+1)(r-1)+1 = %d; proceeding"
                     % (j + 1, len(X), required_points(D, r)))


def _gate_for(job, rep, v, w, m, r=None):
    name, params = None, None
    if job.theorem == "transversal":
        name, params = "transversal", {"d": job.d, "v": v, "w": w, "m": m, "p": job.p}
    elif job.theorem == "both-free":
        name, params = "both-free", {"d": job.d, "v": v, "p": job.p}
    elif job.theorem == "flag":
        name, params = "flag", {"d": job.d, "v": v, "w": w, "m": m}
    elif job.theorem == "tver" and r:
        name, params = "prime-power", {"r": r}
    if name:
        gate = compute_gate(name, params)
        rep.gate(name, gate, params)
        return gate
    return None


def do_certify(job, rep):
    t = job.theorem
    if t == "cpt":
        job.need("d", "v")
        D = cell_dimension(job.d, job.v)
        name, params = "none", {}
        rep.note("D = %d; pieces hold at least ceil(n/%d) points, measures at least 1/%d"
                 % (D, D + 1, D + 1))
    elif t == "tver":
        job.need("d", "v", "r")
        r = job.r[0]
        D = cell_dimension(job.d, job.v)
        name, params = "prime-power", {"r": r}
        rep.note("tight size |X| = (D+1)(r-1)+1 = %d with D = %d" % (required_points(D, r), D))
        pp = prime_power(r)
        if pp:
            bound = partition_count_lower_bound(pp[0], pp[1], D)
            rep.note("partition count lower bound (over all admissible W): %s" % bound)
    elif t == "transversal":
        job.need("d", "v", "m")
        w = job.w if job.w is not None else job.m * (job.d - job.v) - 1
        name, params = "transversal", {"d": job.d, "v": job.v, "w": w, "m": job.m, "p": job.p}
    elif t == "both-free":
        job.need("d", "v")
        name, params = "both-free", {"d": job.d, "v": job.v, "p": job.p}
    else:
        job.need("d", "v", "w", "m")
        name, params = "flag", {"d": job.d, "v": job.v, "w": job.w, "m": job.m}
    gate = compute_gate(name, params)
    rep.gate(name, gate, params)
    return gate.verdict, gate_certificate(name, params), None


def _tverberg_configs(job, parsed):
    out = []
    for j, c in enumerate(parsed["configs"]):
        r = _r_for(job, j, c["X"]) or c["r"]
        out.append((c["X"], r, c["partition"]))
    if not out:
        raise ConfigError("points: no configuration given")
    return out


def do_verify(job, rep):
    parsed = _instance(job)
    if "W" not in parsed:
        raise ConfigError("W: verify needs a candidate W")
    V, W = parsed["V"], parsed["W"]
    for msg in parsed["warnings"]:
        rep.warn(msg)
    if job.theorem == "cpt":
        X = parsed["configs"][0]["X"]
        r = _r_for(job, 0, X) or parsed["configs"][0]["r"] or tverberg_r(len(X), job.d, job.v)
        cert = verify_center_subspace(V, W, X, r, strict=job.strict)
        rep.note("min count %d, r = %d" % (cert.min_count, r))
        return cert.verdict, center_certificate(cert, X), (X, V, W, cert)
    configs = _tverberg_configs(job, parsed)
    if any(p is None for _, _, p in configs):
        raise ConfigError("partition: verify --theorem %s needs a partition per configuration"
                          % job.theorem)
    _gate_for(job, rep, V.proj_dim, W.proj_dim, len(configs), configs[0][2].r)
    pairs = [(X, p) for X, _, p in configs]
    cert = verify_transversal_witness(V, W, pairs, rainbow=job.rainbow, strict=job.strict)
    return cert.verdict, tverberg_certificate(cert, pairs, job.rainbow, job.strict), \
        (pairs[0][0], V, W, cert)


def do_search(job, rep):
    parsed = _instance(job)
    for msg in parsed["warnings"]:
        rep.warn(msg)
    V, d, v = parsed["V"], job.d, job.v
    cfg = job.search
    t = job.theorem
    if t == "cpt":
        X = parsed["configs"][0]["X"]
        r = _r_for(job, 0, X) or parsed["configs"][0]["r"] or tverberg_r(len(X), d, v)
        W, cert = search_center_subspace(V, X, r, cfg, strict=job.strict)
        rep.note("min count %d, r = %d" % (cert.min_count, r))
        return cert.verdict, center_certificate(cert, X), (X, V, W, cert)

    configs = _tverberg_configs(job, parsed)
    D_free = cell_dimension(d, v)
    if t == "tver":
        X, r, _ = configs[0]
        r = r or tverberg_r(len(X), d, v)
        _size_warnings(rep, [(X, r)], D_free)
        _gate_for(job, rep, v, d - v - 1, 1, r)
        W, part, cert = search_projective_tverberg(V, X, r, cfg, rainbow=job.rainbow,
                                                   strict=job.strict)
        if cert is None:
            rep.note("no partition found")
            return False, None, None
        pairs = [(X, part)]
    elif t == "transversal":
        m = len(configs)
        w = job.w if job.w is not None else m * (d - v) - 1
        D = (d - v) * (d - w)
        rs = [r or tverberg_r(len(X), d, v) for X, r, _ in configs]
        _size_warnings(rep, [(X, r) for (X, _, _), r in zip(configs, rs)], D)
        _gate_for(job, rep, v, w, m)
        inst = TransversalInstance([(X, r) for (X, _, _), r in zip(configs, rs)], d, v, w, job.p)
        W, parts, cert = search_transversal(inst, cfg, V=V, rainbow=job.rainbow,
                                            strict=job.strict)
        if cert is None:
            rep.note("no common W found")
            return False, None, None
        pairs = [(X, p) for (X, _, _), p in zip(configs, parts)]
    else:
        m = len(configs)
        w = None if t == "both-free" else job.w
        if t == "flag" and w is None:
            raise UsageError("search --theorem flag needs --w")
        ww = d - v - 1 if w is None else w
        D = (d - v) * (d - ww)
        rs = [r or -(-len(X) // (D + 1)) for X, r, _ in configs]
        _size_warnings(rep, [(X, r) for (X, _, _), r in zip(configs, rs)], D)
        _gate_for(job, rep, v, ww, m)
        V, W, parts, cert = search_both_subspaces([X for X, _, _ in configs], d, v, rs,
                                                  p=job.p, cfg=cfg, w=w, rainbow=job.rainbow)
        if cert is None:
            rep.note("no pair (V, W) found")
            return False, None, None
        pairs = [(X, p) for (X, _, _), p in zip(configs, parts)]
    for msg in cert.details.get("notes", []):
        # size mismatches were already reported above
        if "(D+1)(r-1)+1" not in msg:
            rep.warn(msg)
    return cert.verdict, tverberg_certificate(cert, pairs, job.rainbow, job.strict), \
        (pairs[0][0], V, W, cert)


def do_oracle(job, rep):
    if job.doc is None:
        raise UsageError("oracle needs --input")
    parsed = parse_config(dict(job.doc, d=job.d or job.doc.get("d")))
    if job.theorem == "cpt":
        if "hyperplanes" in parsed:
            H = parsed["hyperplanes"]
            c, val = dual_center_point_search(H, parsed["d"])
            rep.note("every ray from the point meets at least %d hyperplanes" % val)
            ok = val >= -(-len(H) // (parsed["d"] + 1))
            return ok, dual_certificate(c, val, H), None
        X = parsed["configs"][0]["X"]
        c, depth = classical_center_point(X)
        rep.note("Tukey depth %d" % depth)
        return True, tukey_certificate(c, depth, X), None
    if job.theorem == "tver":
        X = parsed["configs"][0]["X"]
        part, point = radon_partition(X)
        return True, radon_certificate(part, point, X), None
    raise UsageError("oracle is defined for --theorem cpt and tver")


def do_measure(job, rep):
    doc = job.doc or {}
    dens = doc.get("densities") or doc.get("density")
    if dens is None:
        job.need("d")
        dens = {"kind": "uniform", "low": [0] * job.d, "high": [1] * job.d}
    job.need("d", "v")
    n = job.samples or 60
    cap = int(doc.get("cap", DEFAULT_CAP))
    try:
        res = demo_measure(dens, job.d, job.v, n, seed=job.search.seed, cfg=job.search, cap=cap)
    except ValueError as e:
        raise ConfigError("density: %s" % e) from None
    rep.note("demonstration on a finite sample, not a certificate about the density")
    rep.doc["measure"] = jsonable({
        "fractions": res["fractions"], "bound": res["bound"], "gaps": res["gaps"],
        "fractions_float": [round(float(f), 6) for f in res["fractions"]],
        "D": res["D"], "r": res["r"], "n": n, "m": res["m"], "w": res["w"]})
    certs = [center_certificate(c, X) for c, X in zip(res["certificates"], res["samples"])]
    ok = all(c.verdict for c in res["certificates"])
    c0 = res["certificates"][0]
    return ok, {"kind": "measure", "sample_certificates": certs}, \
        (res["samples"][0], res["V"], res["W"], c0)


def do_plot(job):
    if job.doc is None:
        raise UsageError("plot needs --input (a configuration or a report)")
    target = job.plot or job.output
    if not target:
        raise UsageError("plot needs --plot FILE.svg or --output FILE.svg")
    doc = job.doc
    pairs = []
    if doc.get("tool"):
        cert = doc.get("certificate") or {}
        if cert.get("kind") == "measure":
            cert = cert["sample_certificates"][0]
        if "configs" not in cert:
            raise ConfigError("certificate: nothing to plot")
        d = cert["d"]
        parsed = parse_config(dict(cert["configs"][0], d=d))
        V = parse_subspace(cert["V"], d, "V") if "V" in cert else None
        W = parse_subspace(cert["W"], d, "W") if "W" in cert else None
        if "witness" in cert:
            wit = cert["witness"]
            pairs.append(([Fraction(x) for x in wit["f"]], [Fraction(x) for x in wit["g"]]))
        title = "%s %s: %s" % (doc.get("command"), doc.get("theorem"), doc.get("verdict"))
    else:
        parsed = parse_config(doc)
        V, W = parsed.get("V"), parsed.get("W")
        title = None
    X = parsed["configs"][0]["X"]
    write_atomic(target, render_svg(X, V, W, pairs, title))
    return EXIT_PASS


def run_job(job):
    """Run one job. Returns (report dict or None, exit code)."""
    if job.command == "plot":
        return None, do_plot(job)
    if job.command == "recheck":
        if job.doc is None:
            raise UsageError("recheck needs --input REPORT")
        ok, problems = recheck(job.doc)
        return {"recheck": "pass" if ok else "fail", "problems": problems}, \
            EXIT_PASS if ok else EXIT_FAIL
    base = job.doc if job.doc is not None else {}
    rep = Report(job.command, job.theorem, job.search.seed, job.params(),
                 digest({"input": base, "params": jsonable(job.params()),
                         "command": job.command, "theorem": job.theorem}))
    handler = {"certify": do_certify, "verify": do_verify, "search": do_search,
               "oracle": do_oracle, "demo-measure": do_measure}[job.command]
    verdict, certificate, shown = handler(job, rep)
    rep.doc["params"] = jsonable(job.params())
    doc = rep.finish(verdict, certificate)
    if doc["verdict"] == "pass":
        ok, problems = recheck(json.loads(dumps(doc)))
        if not ok:
            doc["verdict"] = "fail"
            for msg in problems:
                rep.warn("recheck: " + msg)
    if job.plot and shown is not None and shown[0].d == 2:
        X, V, W, cert = shown
        pairs = [(cert.witness.f, cert.witness.g)] if cert is not None else []
        write_atomic(job.plot, render_svg(X, V, W, pairs, "%s %s" % (job.command, job.theorem)))
    return doc, EXIT_PASS if doc["verdict"] == "pass" else EXIT_FAIL


def main(argv=None):
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        job = job_from_args(ns)
        with warnings.catch_warnings():
            # anything worth saying ends up in the report
            warnings.simplefilter("ignore")
            doc, code = run_job(job)
    except (UsageError, ConfigError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    if doc is not None:
        text = dumps(doc)
        if job.output and job.command != "plot":
            write_atomic(job.output, text)
        else:
            sys.stdout.write(text)
    for msg in (doc or {}).get("warnings", []):
        print("warning: %s" % msg, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
