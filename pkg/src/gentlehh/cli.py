"""Command-line front end.

Exit codes: 0 success, 1 validation failure or mathematical mismatch,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from sympy import isprime

from .ag import PairingError, euler_from_phi, phi
from .formula import (
    SurfaceParams,
    TildeAParams,
    h_surface,
    h_tilde_a,
    hh_dims_closed,
    infer_phi_partial,
)
from .generators import GenerationError, random_gentle
from .oracle import DEFAULT_MAX_DEGREE, DimSeries, hh_dims_oracle
from .quiver import (
    NoSignAssignment,
    PresentationError,
    euler_characteristic,
    parse_presentation,
    serialize,
    validate_gentle,
)

OK, MISMATCH, USAGE = 0, 1, 2


class _Exit(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Exit(USAGE, f"cannot read {path}: {exc}")
    try:
        return parse_presentation(text)
    except PresentationError as exc:
        raise _Exit(USAGE, f"parse error: {exc}")


def _load_gentle(path):
    pres = _load(path)
    report = validate_gentle(pres)
    if not report.ok:
        raise _Exit(MISMATCH, "not gentle:\n" + str(report))
    return pres


def _characteristics(spec):
    if spec == "both":
        return [0, 2]
    try:
        c = int(spec)
    except ValueError:
        raise _Exit(USAGE, f"bad characteristic {spec!r}")
    if c != 0 and not isprime(c):
        raise _Exit(USAGE, f"characteristic must be 0 or a prime, got {c}")
    return [c]


def cmd_validate(args):
    pres = _load(args.file)
    report = validate_gentle(pres)
    payload = {
        "gentle": report.ok,
        "axioms": {ax: ("fail" if ax in report.failures else "pass") for ax in report.AXIOMS},
        "witnesses": report.failures,
    }
    _emit(args, payload, ("gentle\n" if report.ok else "NOT gentle\n") + str(report))
    return OK if report.ok else MISMATCH


def cmd_phi(args):
    pres = _load_gentle(args.file)
    ph = phi(pres)
    chi = euler_characteristic(pres)
    from_phi = euler_from_phi(ph)
    ok = from_phi == chi
    payload = {
        "phi": ph.to_list(),
        "euler_characteristic": chi,
        "euler_from_phi": str(from_phi),
        "checksum": "pass" if ok else "fail",
    }
    text = "phi: " + json.dumps(ph.to_list()) + f"\nchi = {chi}, from phi = {from_phi}: " + (
        "checksum pass" if ok else "checksum FAIL")
    _emit(args, payload, text)
    return OK if ok else MISMATCH


def _first_mismatch(a, b):
    return next((i for i, (x, y) in enumerate(zip(a, b)) if x != y), None)


def cmd_hh(args):
    pres = _load_gentle(args.file)
    chars = _characteristics(args.char)
    N = args.max_degree
    chi = euler_characteristic(pres)
    ph = phi(pres) if args.method in ("formula", "both") else None
    rows, status = [], OK
    for c in chars:
        row = {"characteristic": c}
        if ph is not None:
            closed = hh_dims_closed(ph, chi, c == 2, N)
            row["formula"] = DimSeries(c, closed.dims).to_dict()
        if args.method in ("oracle", "both"):
            row["oracle"] = hh_dims_oracle(pres, c, N).to_dict()
        if args.method == "both":
            bad = _first_mismatch(row["formula"]["dims"], row["oracle"]["dims"])
            row["match"] = bad is None
            if bad is not None:
                row["first_mismatch"] = bad
                status = MISMATCH
        rows.append(row)

    lines = []
    for row in rows:
        lines.append(f"characteristic {row['characteristic']}:")
        for key in ("formula", "oracle"):
            if key in row:
                lines.append(f"  {key:8s}" + " ".join(str(d) for d in row[key]["dims"]))
        if "match" in row:
            lines.append("  match" if row["match"] else f"  MISMATCH at degree {row['first_mismatch']}")
    _emit(args, {"max_degree": N, "results": rows}, "\n".join(lines))
    return status


def _series_report(args, h_of):
    N = args.max_degree
    rows = []
    for c in _characteristics(args.char):
        h = h_of(c == 2, N)
        rows.append({"characteristic": c, "series": h, **DimSeries.from_h(c, h).to_dict()})
    lines = []
    for r in rows:
        lines.append(f"characteristic {r['characteristic']}:")
        lines.append("  h     " + " ".join(map(str, r["series"])))
        lines.append("  dims  " + " ".join(map(str, r["dims"])))
    _emit(args, {"max_degree": N, "results": rows}, "\n".join(lines))
    return OK


def cmd_surface(args):
    try:
        p = SurfaceParams(args.genus, args.boundaries, args.c0, args.c1, args.d)
    except ValueError as exc:
        raise _Exit(USAGE, f"invalid surface parameters: {exc}")
    return _series_report(args, lambda char2, N: h_surface(p, char2, N))


def cmd_tilde_a(args):
    try:
        p = TildeAParams(args.s1, args.t1, args.s2, args.t2)
    except ValueError as exc:
        raise _Exit(USAGE, f"invalid parameters: {exc}")
    return _series_report(args, lambda char2, N: h_tilde_a(p, char2, N))


def cmd_gen(args):
    try:
        pres = random_gentle(args.vertices, args.arrows, args.seed)
    except (ValueError, GenerationError) as exc:
        raise _Exit(USAGE, str(exc))
    text = serialize(pres)
    _emit(args, {"presentation": text}, text.rstrip("\n"))
    return OK


def cmd_infer_phi(args):
    pres = _load_gentle(args.file)
    N = args.max_degree
    chi = euler_characteristic(pres)
    d0 = hh_dims_oracle(pres, 0, N)
    d2 = hh_dims_oracle(pres, 2, N)
    partial = infer_phi_partial(d0, d2, chi)
    ph = phi(pres)
    consistent = partial.phi_1_0 == ph(1, 0) and partial.phi_1_1 == ph(1, 1) and all(
        partial.phi_0_odd[k] == ph(0, k) for k in partial.phi_0_odd)
    if partial.phi_1 is not None:
        consistent = consistent and all(v == ph(1, n) for n, v in partial.phi_1.items())
    payload = {"inferred": partial.to_dict(), "phi": ph.to_list(), "consistent": consistent}
    lines = [
        f"phi(1,0) = {partial.phi_1_0}",
        f"phi(1,1) = {partial.phi_1_1}",
        "psi(odd): " + ", ".join(f"psi({k})={v}" for k, v in partial.psi_odd.items()),
        "phi(0,odd): " + ", ".join(f"phi(0,{k})={v}" for k, v in partial.phi_0_odd.items()),
    ]
    if partial.finite_gldim:
        lines.append("finite global dimension signature: "
                     + ", ".join(f"phi(1,{n})={v}" for n, v in partial.phi_1.items()))
    else:
        lines += [f"  {s}" for s in partial.combinations.values()]
    lines.append("computed phi: " + json.dumps(ph.to_list()))
    lines.append("consistent" if consistent else "INCONSISTENT")
    _emit(args, payload, "\n".join(lines))
    return OK if consistent else MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(prog="gentlehh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, degree=True, char=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if degree:
            p.add_argument("--max-degree", "-N", type=int, default=DEFAULT_MAX_DEGREE)
        if char:
            p.add_argument("--char", default="both", help="0, 2, an odd prime, or 'both' (0 and 2)")
        return p

    p = common(sub.add_parser("validate", help="check the gentle axioms"), False, False)
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = common(sub.add_parser("phi", help="Avella-Alaminos--Geiss invariant"), False, False)
    p.add_argument("file")
    p.set_defaults(func=cmd_phi)

    p = common(sub.add_parser("hh", help="Hochschild cohomology dimensions"))
    p.add_argument("file")
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="both")
    p.set_defaults(func=cmd_hh)

    p = common(sub.add_parser("surface", help="surface triangulation formula"))
    for name in ("--genus", "--boundaries"):
        p.add_argument(name, type=int, required=True)
    for name in ("--c0", "--c1", "--d"):
        p.add_argument(name, type=int, default=0)
    p.set_defaults(func=cmd_surface)

    p = common(sub.add_parser("tilde-a", help="cluster-tilted algebras of type tilde A"))
    for name in ("--s1", "--t1", "--s2", "--t2"):
        p.add_argument(name, type=int, required=True)
    p.set_defaults(func=cmd_tilde_a)

    p = common(sub.add_parser("gen", help="random gentle presentation"), False, False)
    p.add_argument("--vertices", type=int, default=4)
    p.add_argument("--arrows", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("infer-phi", help="recover phi data from dimension tables"), True, False)
    p.add_argument("file")
    p.set_defaults(func=cmd_infer_phi)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "max_degree", 0) < 0:
        print("max degree must be nonnegative", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except _Exit as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except (NoSignAssignment, PairingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MISMATCH


if __name__ == "__main__":
    sys.exit(main())
