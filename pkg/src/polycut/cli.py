"""Command-line front end.

Exit status: 0 when every check passes, 1 on a verification failure, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from polycut import catalog, meshio, verify
from polycut.errors import GeometryError
from polycut.truncation import SnubSpec, TruncationParams, derived_lengths, snub_cubic

FIGURE_SOLIDS = ("T",) + catalog.EMBEDDABLE


class UsageError(Exception):
    pass


def _solid(name: str):
    if not catalog.is_valid_name(name):
        raise UsageError(f"unknown solid {name!r}; expected one of {', '.join(catalog.FULL_NAMES)}, Pn or An (n >= 3)")
    return catalog.build(name)


def _expectation(name: str) -> tuple[str, object]:
    if name in catalog.EMBEDDABLE:
        return "embeds", catalog.build("T")
    if name in ("C", "D") or (name[0] in "PA" and name != "P4" and name != "A3"):
        return "excluded", None
    if name == "A3":
        return "quadruple", None
    return "uniform", None


def cmd_build(args) -> int:
    fmt = args.format
    if args.figure:
        if not args.out:
            raise UsageError("--figure needs --out DIR")
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name in FIGURE_SOLIDS:
            _write(catalog.build(name), out / f"{name}.{fmt}", fmt, name)
        print(f"wrote {len(FIGURE_SOLIDS)} meshes to {out}")
        return 0
    if not args.name:
        raise UsageError("build needs a solid name or --figure")
    p = _solid(args.name)
    if args.out:
        _write(p, Path(args.out), fmt, args.name)
    else:
        text = meshio.obj_text(p, args.name) if fmt == "obj" else meshio.json_text(p, args.name)
        sys.stdout.write(text)
    return 0


def _write(p, path: Path, fmt: str, name: str) -> None:
    if fmt == "obj":
        meshio.export_obj(p, path, name)
    else:
        meshio.export_json(p, path, name)


def cmd_verify(args) -> int:
    p = _solid(args.name)
    expectation, outer = _expectation(args.name)
    rep = verify.report(args.name, p, outer, expectation, census=catalog.expected_census(args.name))
    sig = catalog.signature(p)
    print(f"solid:            {args.name} ({catalog.FULL_NAMES.get(args.name, 'uniform family member')})")
    print(f"signature:        V={sig.V} E={sig.E} F={sig.F} faces={sig.census()}")
    print(f"uniform:          {'yes' if rep.is_uniform else 'no'}")
    print(f"edge spread:      {rep.max_edge_spread:.3e}")
    print(f"face irregularity: lengths {rep.max_face_edge_dev:.3e}, angles {rep.max_face_angle_dev:.3e} rad")
    if rep.embedding_k is not None:
        print(f"embedding in T:   k={rep.embedding_k}, extra contacts={rep.extra_contact}")
    if rep.has_quadruple is not None:
        print(f"tetrahedral normal quadruple: {'yes' if rep.has_quadruple else 'no'}")
    print(f"face census:      {'as expected' if rep.census_ok else rep.note}")
    print(f"expectation:      {expectation}")
    print(f"result:           {'PASS' if rep.passed else 'FAIL'}")
    return 0 if rep.passed else 1


def cmd_embed(args) -> int:
    p = _solid(args.name)
    try:
        contact = verify.embedding_contact(p, catalog.build("T"))
    except GeometryError as exc:
        print(f"{args.name}: {type(exc).__name__}: {exc}")
        return 1
    print(f"{args.name}: k={contact.k}" + (f" (extra boundary contacts: {len(contact.extra_contact)})" if contact.extra_contact else ""))
    return 0 if contact.k == 4 and not contact.extra_contact else 1


def cmd_params(args) -> int:
    if not catalog.is_valid_name(args.name):
        raise UsageError(f"unknown solid {args.name!r}")
    par = catalog.params_for(args.name)
    if par is None:
        print(f"{args.name}: seed solid, no truncation parameters")
    elif isinstance(par, float):
        print(f"{args.name}: vertex truncation depth {par:.15g}")
    elif isinstance(par, TruncationParams):
        theta = catalog.THETA_O if args.name in ("eO", "tCO") else catalog.THETA_I
        lengths = derived_lengths(par, theta)
        print(f"{args.name}: r1={par.r1:.15g} r2={par.r2:.15g} ({par.mode})")
        print(f"  l1={lengths.l1:.15g} l2={lengths.l2:.15g} l3={lengths.l3:.15g}")
        if par.mode == "expand":
            res = (abs(lengths.l1), abs(lengths.l2 - lengths.l3))
        else:
            res = (abs(lengths.l1 - lengths.l2), abs(lengths.l1 - lengths.l3))
        print(f"  residuals {res[0]:.2e} {res[1]:.2e}")
    elif isinstance(par, SnubSpec):
        label = "tribonacci constant" if args.name == "sC" else "snub-dodecahedral ratio"
        print(f"{args.name}: alpha={par.alpha_deg:g} deg, ratio={par.ratio:.15g} ({label})")
        print(f"  cubic residual {abs(snub_cubic(par.ratio, par.alpha_deg)):.2e}")
    return 0


def cmd_angles(args) -> int:
    p = _solid(args.name)
    for a in verify.face_pair_angles(p):
        print(f"{a:.12f} rad  {math.degrees(a):.8f} deg")
    return 0


def cmd_theorem(args) -> int:
    if args.nmax < 5:
        raise UsageError("--nmax must be at least 5")
    reports = verify.main_theorem_check(args.nmax, progress=lambda r: print(r.row()))
    failed = [r.solid_name for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} rows pass")
    if failed:
        print("failed: " + ", ".join(failed))
    return 1 if failed else 0


def cmd_remark(args) -> int:
    t, ti, tco = catalog.build("T"), catalog.build("tI"), catalog.build("tCO")
    tol = 1e-9
    shared = verify.shared_face_normals(ti, tco, tol)
    via_t = sum(
        1 for n in t.normals
        if min(abs(n - m).max() for m in ti.normals) <= tol and min(abs(n - m).max() for m in tco.normals) <= tol
    )
    in_ab = verify.contains(tco, ti)
    in_ba = verify.contains(ti, tco)
    print(f"shared normals: {shared} (of which on T's faces: {via_t})")
    print(f"tI ⊆ tCO: {'yes' if in_ab else 'no'}; tCO ⊆ tI: {'yes' if in_ba else 'no'}")
    return 0 if via_t == 4 and not in_ab and not in_ba else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polycut", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("build", help="construct a solid and write its mesh")
    b.add_argument("name", nargs="?")
    b.add_argument("--out")
    b.add_argument("--format", choices=("obj", "json"), default=None)
    b.add_argument("--figure", action="store_true", help="export T and all 15 embedded solids into --out DIR")
    b.set_defaults(func=cmd_build)

    for verb, func, text in (
        ("verify", cmd_verify, "print a verification report"),
        ("embed", cmd_embed, "print k for the embedding in T"),
        ("params", cmd_params, "print construction parameters"),
        ("angles", cmd_angles, "print the face-pair angle set"),
    ):
        sp = sub.add_parser(verb, help=text)
        sp.add_argument("name")
        sp.set_defaults(func=func)

    t = sub.add_parser("theorem", help="run both directions of the characterisation")
    t.add_argument("--nmax", type=int, default=50)
    t.set_defaults(func=cmd_theorem)

    r = sub.add_parser("remark", help="tI / tCO shared-normal counterexample")
    r.set_defaults(func=cmd_remark)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verb == "build" and args.format is None:
        args.format = "json" if args.out and str(args.out).endswith(".json") else "obj"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polycut: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
