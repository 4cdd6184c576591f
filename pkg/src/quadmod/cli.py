"""Command-line surface: reproducible runs, JSON reports, on-disk cache.

Every invocation prints a single JSON document to stdout:

    {"command": ..., "inputs": ..., "outputs": ..., "timings": ...,
     "seed": ..., "version": ...}

Human-readable progress goes to stderr.  Outputs are reproducible bit for
bit for identical inputs and seed (timings live outside the outputs field).
Exit codes: 0 success, 1 a mathematical verification returned false, 2 usage
error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, covers, gleason as gl, irred, pern, suite
from .cache import DiskCache
from .errors import QuadmodError, ResourceLimit
from .serialize import coeff_strings, frac_str, poly_terms, terms_to_intpoly, terms_to_mpoly


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadmod",
        description="exact computations for quadratic maps with a periodic critical point")
    ap.add_argument("--cache-dir", default=None,
                    help="cache directory (default: $QUADMOD_CACHE_DIR or .quadmod-cache)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gleason", help="Gleason polynomial coefficients")
    p.add_argument("n", type=int)
    p = sub.add_parser("orbit", help="critical-orbit polynomial coefficients")
    p.add_argument("n", type=int)
    p = sub.add_parser("irred", help="irreducibility certificate for G_n")
    p.add_argument("n", type=int)
    p.add_argument("--max-primes", type=int, default=irred.DEFAULT_MAX_PRIMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime-bits", type=int, default=irred.DEFAULT_PRIME_BITS)
    p = sub.add_parser("pern", help="period-n curve model (family locus + plane model)")
    p.add_argument("n", type=int)
    p = sub.add_parser("restrict", help="restriction of the plane model to the polynomial line")
    p.add_argument("n", type=int)
    p = sub.add_parser("rpoints", help="rational points of bounded height")
    p.add_argument("n", type=int)
    p.add_argument("--height", type=int, required=True)
    p = sub.add_parser("fstar", help="boundary cover verification report")
    p.add_argument("n", type=int)
    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true",
                   help="scale down the randomized property trials")
    return ap


def _cached_payload(cache: DiskCache, key: str, phases: dict, compute):
    doc = cache.get(key)
    phases["cache"] = cache.last_outcome
    if doc is not None:
        return doc
    t0 = time.time()
    doc = compute()
    phases["compute"] = f"{time.time() - t0:.3f}"
    cache.put(key, doc)
    return doc


def _gleason_payload(n: int, cache: DiskCache, phases: dict) -> dict:
    def compute():
        return {"n": n, "coefficients": coeff_strings(gl.gleason(n).poly)}

    doc = _cached_payload(cache, cache.key("gleason", n=n), phases, compute)
    # warm the in-memory memo so downstream commands skip recomputation
    gl.preload_gleason(n, terms_to_intpoly(
        {"vars": ["c"], "terms": [[i, c] for i, c in enumerate(doc["coefficients"]) if c != "0"]}))
    return doc


def _pern_payload(n: int, cache: DiskCache, phases: dict) -> dict:
    def compute():
        model = pern.plane_model(n)
        v = model.verification
        return {
            "n": n,
            "gamma": poly_terms(model.gamma),
            "pmodel": poly_terms(model.pmodel),
            "verification": {
                "gamma_divides_orbit": v.gamma_divides_orbit,
                "membership_certified": v.membership_certified,
                "fallback_used": v.fallback_used,
                "sample_points": v.sample_points,
                "sample_hits": v.sample_hits,
                "eliminant_degree": list(v.eliminant_degree),
                "stripped_multiplicity": v.stripped_multiplicity,
            },
        }

    doc = _cached_payload(cache, cache.key("pern", n=n), phases, compute)
    if n not in pern._model_cache:
        ver = pern.CurveVerification(**{
            k: (tuple(v) if k == "eliminant_degree" else v)
            for k, v in doc["verification"].items()})
        pern._model_cache[n] = pern.CurveModel(
            n, terms_to_mpoly(doc["gamma"]), terms_to_mpoly(doc["pmodel"]), ver)
    return doc


def _cmd_gleason(args, cache, phases):
    return _gleason_payload(args.n, cache, phases), 0


def _cmd_orbit(args, cache, phases):
    def compute():
        return {"n": args.n, "coefficients": coeff_strings(gl.crit_orbit(args.n).poly)}

    return _cached_payload(cache, cache.key("orbit", n=args.n), phases, compute), 0


def _cmd_irred(args, cache, phases):
    _gleason_payload(args.n, cache, phases)
    t0 = time.time()
    cert = irred.sieve(gl.gleason(args.n).poly, max_primes=args.max_primes,
                       seed=args.seed, prime_bits=args.prime_bits,
                       progress=lambda line: print(line, file=sys.stderr))
    phases["sieve"] = f"{time.time() - t0:.3f}"
    payload = {
        "n": args.n,
        "degree": cert.degree,
        "verdict": cert.verdict,
        "patterns": [{"p": str(pat.p), "degrees": list(pat.degrees)}
                     for pat in cert.patterns],
        "possible_sums": list(cert.possible_sums),
        "seed": cert.seed,
        "primes_tried": cert.primes_tried,
        "bad_primes": cert.bad_primes,
    }
    if cert.witness is not None:
        payload["witness"] = {"factor": poly_terms(cert.witness.factor),
                              "cofactor": poly_terms(cert.witness.cofactor)}
    return payload, (1 if cert.verdict == "ReducibleWitness" else 0)


def _cmd_pern(args, cache, phases):
    return _pern_payload(args.n, cache, phases), 0


def _cmd_restrict(args, cache, phases):
    _pern_payload(args.n, cache, phases)
    rep = pern.restriction_check(args.n)
    payload = {
        "n": args.n,
        "match": rep.match,
        "multiplicity": rep.multiplicity,
        "restriction": poly_terms(rep.restriction),
        "gleason": poly_terms(rep.expected),
    }
    return payload, (0 if rep.match else 1)


def _cmd_rpoints(args, cache, phases):
    _pern_payload(args.n, cache, phases)
    t0 = time.time()
    pts = pern.rational_point_search(pern.plane_model(args.n), args.height)
    phases["search"] = f"{time.time() - t0:.3f}"
    payload = {"n": args.n, "height": args.height,
               "points": [[frac_str(a), frac_str(b)] for a, b in pts]}
    return payload, 0


def _cmd_fstar(args, cache, phases):
    rep = covers.verify_cover(args.n)
    payload = {
        "n": args.n,
        "admissible": rep.admissible.ok,
        "violations": rep.admissible.violations,
        "source_stabilizes_to_xstar": rep.source_stabilizes_to_xstar,
        "target_stabilizes_to_xstar": rep.target_stabilizes_to_xstar,
        "cross_ratio": frac_str(rep.cross_ratio.value) if rep.cross_ratio.value is not None else None,
        "cross_ratio_convention": rep.cross_ratio.convention,
        "pullback_a_indices": rep.a_pattern,
        "pullback_b_indices": rep.b_pattern,
        "smoothness": {
            "verdict": rep.smoothness.verdict,
            "rank_certified": rep.smoothness.rank_certified,
            "interior_certified": rep.smoothness.interior_certified,
            "coordinates": rep.smoothness.num_coords,
            "equations": rep.smoothness.num_equations,
        },
        "counts": rep.counts,
    }
    return payload, (0 if rep.ok else 1)


def _cmd_suite(args, cache, phases):
    results = suite.run_all(max_n=args.max_n, seed=args.seed,
                            full_properties=not args.quick,
                            emit=lambda line: print(line, file=sys.stderr))
    payload = {
        "criteria": [{"name": r.name, "status": r.status,
                      "details": _jsonable(r.details)} for r in results],
        "passed": all(results),
    }
    return payload, (0 if payload["passed"] else 1)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (str, int, bool)) or obj is None:
        return obj
    return str(obj)


_HANDLERS = {
    "gleason": _cmd_gleason,
    "orbit": _cmd_orbit,
    "irred": _cmd_irred,
    "pern": _cmd_pern,
    "restrict": _cmd_restrict,
    "rpoints": _cmd_rpoints,
    "fstar": _cmd_fstar,
    "suite": _cmd_suite,
}


def dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    cache = DiskCache(args.cache_dir)
    phases: dict = {}
    t_start = time.time()
    seed = getattr(args, "seed", None)
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "cache_dir")}
    try:
        payload, code = _HANDLERS[args.command](args, cache, phases)
        error = None
    except ResourceLimit as exc:
        payload, code, error = None, 3, str(exc)
    except QuadmodError as exc:
        payload, code, error = None, 1, str(exc)
    phases["total"] = f"{time.time() - t_start:.3f}"
    report = {
        "command": args.command,
        "inputs": _jsonable(inputs),
        "outputs": payload,
        "timings": phases,
        "seed": seed,
        "version": __version__,
    }
    if error is not None:
        report["error"] = error
    print(json.dumps(report, indent=2, sort_keys=True))
    return code


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
