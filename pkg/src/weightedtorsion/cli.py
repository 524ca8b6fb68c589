"""Command line interface.

Exit codes: 0 success, 1 input error, 2 numerical failure, 3 failed certificate.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .certificate import format_fraction, jsonable
from .chains import boundary_matrix, null_basis, null_basis_from_stars
from .complex import euler_characteristic, restrict_nonvanishing
from .errors import InputError, NumericalError
from .homology import weighted_homology
from .rtorsion import torsion_equivalence_check
from .sampling import random_nonzero, random_supported_pair, random_weights
from .spectral import (DEFAULT_TOL, analytic_torsion, check_f_scaling, check_g_scaling,
                       check_main_theorem, check_scale_invariance, spectral_bundle)
from .wsc import parse_wsc

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_CERT = 0, 1, 2, 3

LAWS = ("scale", "gscale", "fscale", "main", "rtorsion")
SCALARS = (Fraction(2), Fraction(-3), Fraction(1, 5))


def _global_options(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit a JSON report on stdout")
    parser.add_argument("--tol", type=float, default=default(DEFAULT_TOL),
                        help="relative float tolerance for zero eigenvalues (diagnostic only)")
    parser.add_argument("--input", default=default(None),
                        help="path of a .wsc file (default: stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wsc-torsion",
        description="Weighted homology, Hodge spectra and torsion of weighted simplicial complexes.")
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        _global_options(p, suppress=True)
        return p

    add("validate", "parse, close and audit the complex")
    p = add("homology", "weighted homology with induced forms")
    p.add_argument("--max-dim", type=int, default=None)
    p = add("spectrum", "Hodge-Laplace spectra on the g-nonvanishing restriction")
    p.add_argument("--degree", type=int, default=None)
    p = add("torsion", "analytic torsion")
    p.add_argument("--mode", choices=("exact", "float", "both"), default="both")
    p = add("check", "randomized exact certificates on the input complex")
    p.add_argument("--law", choices=LAWS + ("all",), default="all")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_input(path):
    if path is None:
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _complex_summary(K):
    return {"vertices": list(K.vertices),
            "f_vector": [len(level) for level in K.simplices],
            "dimension": K.dimension}


def cmd_validate(K, w, args):
    Kx = restrict_nonvanishing(K, w.g)
    audit = {
        "face_closed": all(s[:i] + s[i + 1:] in K for s in K.all_simplices()
                           if len(s) > 1 for i in range(len(s))),
        "boundary_squared_zero": all(
            (boundary_matrix(K, w.f, n) @ boundary_matrix(K, w.f, n + 1)).is_zero()
            for n in range(1, K.dimension + 1)),
        "null_basis_matches_stars": all(
            null_basis(K, w.g, n) == null_basis_from_stars(K, w.g, n)
            for n in range(K.dimension + 1)),
        "restriction_face_closed": all(s[:i] + s[i + 1:] in Kx for s in Kx.all_simplices()
                                       if len(s) > 1 for i in range(len(s))),
    }
    report = {"command": "validate", "complex": _complex_summary(K),
              "restriction": _complex_summary(Kx),
              "euler_characteristic": euler_characteristic(K), "audit": audit}
    text = [f"vertices: {len(K.vertices)}  f-vector: {report['complex']['f_vector']}  "
            f"euler: {report['euler_characteristic']}"]
    text += [f"{k}: {'ok' if v else 'FAILED'}" for k, v in audit.items()]
    return report, text, all(audit.values())


def cmd_homology(K, w, args):
    top = K.dimension if args.max_dim is None else min(args.max_dim, K.dimension)
    degrees = []
    text = []
    for n in range(top + 1):
        h = weighted_homology(K, w.f, w.g, n)
        degrees.append({"degree": n, "betti": h.betti, "inner_product": h.inner_product,
                        "gram": h.gram.to_json()})
        text.append(f"H_{n}: betti {h.betti}"
                    + ("" if h.inner_product else "  (form is degenerate)"))
    report = {"command": "homology", "complex": _complex_summary(K), "degrees": degrees,
              "betti": [d["betti"] for d in degrees]}
    return report, text, True


def cmd_spectrum(K, w, args):
    Kx = restrict_nonvanishing(K, w.g)
    if args.degree is not None:
        degrees = [args.degree]
    else:
        degrees = list(range(Kx.dimension + 1))
    out = []
    text = []
    for n in degrees:
        b = spectral_bundle(Kx, w.f, w.g, n, tol=args.tol)
        out.append({"degree": n, "dimension": b.symmetrized.nrows, "exact_rank": b.exact_rank,
                    "eigenvalues": list(b.eigenvalues),
                    "pseudo_det": format_fraction(b.pseudo_det)})
        vals = ", ".join(f"{x:.12g}" for x in b.eigenvalues)
        text.append(f"degree {n}: [{vals}]  rank {b.exact_rank}  pdet {b.pseudo_det}")
    report = {"command": "spectrum", "restriction": _complex_summary(Kx), "degrees": out}
    return report, text, True


def cmd_torsion(K, w, args):
    r = analytic_torsion(K, w.f, w.g, mode=args.mode, tol=args.tol)
    text = []
    if r.torsion is not None:
        text.append(f"T = {r.torsion:.12g}")
        text.append(f"log T = {r.log_torsion:.12g}")
    if r.torsion_squared_exact is not None:
        text.append(f"T^2 = {r.torsion_squared_exact}")
    text.append(f"s = {r.s_exponent}")
    report = {"command": "torsion", "mode": args.mode, "torsion": r.to_json()}
    return report, text, True


def _trial(K, law, rng, trial):
    n = len(K.vertices)
    c = SCALARS[trial % len(SCALARS)]
    if law == "rtorsion":
        return torsion_equivalence_check(K, random_weights(rng, n), random_weights(rng, n))
    if law == "scale":
        h = [random_nonzero(rng) for _ in range(n)]
        return check_scale_invariance(K, random_weights(rng, n), random_weights(rng, n), h)
    if law in ("gscale", "fscale"):
        f, g = random_supported_pair(rng, n)
        check = check_g_scaling if law == "gscale" else check_f_scaling
        return check(K, f, g, c)
    h = [random_nonzero(rng) for _ in range(n)]
    return check_main_theorem(K, random_weights(rng, n), random_weights(rng, n), h, c)


def cmd_check(K, w, args):
    laws = LAWS if args.law == "all" else (args.law,)
    results = []
    text = []
    for law in laws:
        failures = []
        for t in range(args.trials):
            rng = random.Random(args.seed * 1_000_003 + t)
            cert = _trial(K, law, rng, t)
            if not cert.ok:
                failures.append({"trial": t, "certificate": cert.to_json()})
        passed = args.trials - len(failures)
        results.append({"law": law, "trials": args.trials, "passed": passed,
                        "failures": failures})
        text.append(f"{law}: {passed}/{args.trials} certificates")
    ok = all(not r["failures"] for r in results)
    report = {"command": "check", "seed": args.seed, "results": results, "ok": ok}
    return report, text, ok


COMMANDS = {"validate": cmd_validate, "homology": cmd_homology, "spectrum": cmd_spectrum,
            "torsion": cmd_torsion, "check": cmd_check}


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        K, w = parse_wsc(_read_input(args.input))
        report, text, ok = COMMANDS[args.command](K, w, args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    if args.json:
        stdout.write(json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n")
    else:
        stdout.write("\n".join(text) + "\n")
    return EXIT_OK if ok else EXIT_CERT


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
