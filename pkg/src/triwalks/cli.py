"""Command line front end.

Every invocation prints a short human-readable summary followed by one JSON
document (the machine interface) on the last line. Randomized subcommands
require an explicit seed so that reruns are bit for bit reproducible; the
JSON is deterministic apart from the "timing" key.

Subcommands: count, enumerate, map, scaffolding, sample, profile, gf,
pyramid, verify.
"""

from __future__ import annotations

import argparse
import json
import os
import pathlib
import sys
import time

from . import __version__, lattice, motzkin, omega, profiles, pyramid3d, scaffold2d, verify
from .errors import TriwalksError, UsageError
from .motzkin import MotzkinWord

# default directory for files written by the cli (scaffoldings, reports)
OUTPUT_DIR_ENV = "TRIWALKS_OUTDIR"


def _outpath(name):
    base = pathlib.Path(os.environ.get(OUTPUT_DIR_ENV, "."))
    base.mkdir(parents=True, exist_ok=True)
    return base / name


def _report(command, inputs, outputs, checks=None, seconds=None, ok=True):
    doc = {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "outputs": outputs,
        "ok": bool(ok),
    }
    if checks is not None:
        doc["checks"] = checks
    doc["timing"] = {"seconds": seconds}
    return doc


def _emit(doc, human_lines):
    for line in human_lines:
        print(line)
    print(json.dumps(doc, sort_keys=True))
    return 0 if doc["ok"] else 1


def _scaffolding_from_flag(flag, L):
    if flag == "trapezium":
        return scaffold2d.TrapeziumScaffolding(L)
    if flag.startswith("random:"):
        return scaffold2d.RandomScaffolding(L, int(flag.split(":", 1)[1]))
    raise UsageError(f"--scaffolding wants 'trapezium' or 'random:<seed>', got {flag!r}")


# -- subcommand handlers -------------------------------------------------------

def cmd_count(args):
    t0 = time.perf_counter()
    if args.family == "motzkin":
        value = motzkin.count_paths_by_amplitude(args.n, args.amplitude)
        inputs = {"family": "motzkin", "n": args.n, "amplitude": args.amplitude}
        if args.start_height:
            value = motzkin.count_meanders(args.amplitude, args.n, args.start_height)
            inputs["start_height"] = args.start_height
    elif args.family == "triangular":
        start = lattice.parse_point(args.start) if args.start else lattice.origin(args.L, args.d)
        dv = args.dv if args.dv else "F" * args.n
        value = lattice.count_paths(args.L, args.d, start, dv)
        inputs = {"family": "triangular", "L": args.L, "d": args.d,
                  "start": lattice.format_point(start), "dv": dv}
    elif args.family == "generic":
        start = lattice.parse_point(args.start) if args.start else lattice.origin(args.L, args.d)
        value = lattice.count_generic(args.L, args.d, start, args.n)
        inputs = {"family": "generic", "L": args.L, "d": args.d,
                  "start": lattice.format_point(start), "n": args.n}
    elif args.family == "bicolored":
        value = lattice.count_bicolored_pairs(args.L, args.p, args.q)
        inputs = {"family": "bicolored", "L": args.L, "p": args.p, "q": args.q}
    elif args.family == "pyramid":
        start = lattice.parse_point(args.start) if args.start else lattice.origin(args.L, 3)
        value = pyramid3d.count_pyramid_paths(args.L, args.n, start, args.orientation)
        inputs = {"family": "pyramid", "L": args.L, "n": args.n,
                  "start": lattice.format_point(start), "orientation": args.orientation}
    else:  # waffle
        start = tuple(int(t) for t in args.start.split(",")) if args.start else (0, 0)
        value = pyramid3d.count_waffle_walks(args.L, args.n, start)
        inputs = {"family": "waffle", "L": args.L, "n": args.n,
                  "start": ",".join(map(str, start))}
    doc = _report("count", inputs, {"count": str(value)},
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"count = {value}"])


def cmd_enumerate(args):
    t0 = time.perf_counter()
    if args.family == "motzkin":
        words = motzkin.enumerate_meanders(args.n, args.amplitude, args.start_height,
                                           cap=args.cap)
        out = [w.steps for w in words]
        inputs = {"family": "motzkin", "n": args.n, "amplitude": args.amplitude,
                  "start_height": args.start_height}
    else:
        start = lattice.parse_point(args.start) if args.start else lattice.origin(args.L, args.d)
        paths = lattice.enumerate_paths(args.L, args.d, start, args.dv, cap=args.cap)
        out = [lattice.format_steps(p) for p in paths]
        inputs = {"family": "triangular", "L": args.L, "d": args.d,
                  "start": lattice.format_point(start), "dv": args.dv}
    doc = _report("enumerate", inputs, {"count": len(out), "items": out},
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"{len(out)} objects"] + out[:20])


def cmd_map(args):
    t0 = time.perf_counter()
    method = args.method or args.scaffolding or "trapezium"
    if args.scaffolding_file:
        method = f"file:{args.scaffolding_file}"
    inputs = {"method": method, "direction": args.direction, "L": args.L,
              "input": args.input, "bicolored": args.bicolored}
    if method == "omega":
        if args.direction == "t2m":
            steps = lattice.parse_steps(args.input)
            word = omega.forward_to_motzkin_exp(args.L, steps)
            outputs = {"motzkin": word.steps, "start_height": 0}
            human = f"motzkin word: {word.steps}"
        else:
            path = omega.motzkin_to_forward_exp(args.L, args.input)
            outputs = {"path": lattice.format_steps(path)}
            human = f"path: {lattice.format_steps(path)}"
    else:
        if args.scaffolding_file:
            scaf = scaffold2d.RandomScaffolding.loads(
                pathlib.Path(args.scaffolding_file).read_text()
            )
            if scaf.L != args.L:
                raise UsageError(f"scaffolding file is for L={scaf.L}, not {args.L}")
        else:
            scaf = _scaffolding_from_flag(method, args.L)
        if args.bicolored:
            word = MotzkinWord.from_word(args.input)
            path = scaf.bicolored_to_generic(word, method=args.bicolored)
            outputs = {"path": lattice.format_steps(path),
                       "direction_vector": word.direction_vector()}
            human = f"path: {lattice.format_steps(path)}"
        elif args.direction == "m2t":
            path = scaf.motzkin_to_triangular(args.input)
            outputs = {"path": lattice.format_steps(path)}
            human = f"path: {lattice.format_steps(path)}"
        else:
            word = scaf.triangular_to_motzkin(lattice.parse_steps(args.input))
            outputs = {"motzkin": word.steps, "start_height": 0,
                       "amplitude": motzkin.amplitude(word)}
            human = f"motzkin word: {word.steps}"
    doc = _report("map", inputs, outputs, seconds=time.perf_counter() - t0)
    return _emit(doc, [human])


def cmd_sample(args):
    t0 = time.perf_counter()
    if args.family == "motzkin":
        word = motzkin.uniform_sample(args.n, args.amplitude, seed=args.seed)
        outputs = {"motzkin": word.steps}
        human = f"sampled word: {word.steps or '(empty)'}"
        inputs = {"family": "motzkin", "n": args.n, "amplitude": args.amplitude,
                  "seed": args.seed}
    else:
        path = scaffold2d.sample_forward_path(args.L, args.n, seed=args.seed)
        outputs = {"path": lattice.format_steps(path)}
        human = f"sampled path: {lattice.format_steps(path) or '(empty)'}"
        inputs = {"family": "forward", "L": args.L, "n": args.n, "seed": args.seed}
    doc = _report("sample", inputs, outputs, seconds=time.perf_counter() - t0)
    return _emit(doc, [human])


def cmd_profile(args):
    t0 = time.perf_counter()
    z = lattice.parse_point(args.point)
    L = sum(z)
    prof = profiles.profile(z)
    cells = profiles.cell_representation(z)
    outputs = {"profile": list(prof), "cells": [list(c) for c in cells]}
    doc = _report("profile", {"point": args.point, "L": L}, outputs,
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"profile {list(prof)}", f"cells {cells}"])


def cmd_gf(args):
    t0 = time.perf_counter()
    coeffs = pyramid3d.pyramid_gf_coefficients(args.L, args.terms)
    doc = _report("gf", {"L": args.L, "terms": args.terms},
                  {"coefficients": [str(c) for c in coeffs]},
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"coefficients: {coeffs}"])


def cmd_pyramid(args):
    t0 = time.perf_counter()
    if args.action == "count":
        value = pyramid3d.count_pyramid_paths(args.L, args.n, lattice.origin(args.L, 3))
        doc = _report("pyramid count", {"L": args.L, "n": args.n},
                      {"count": str(value)}, seconds=time.perf_counter() - t0)
        return _emit(doc, [f"count = {value}"])
    if args.action == "gf":
        coeffs = pyramid3d.pyramid_gf_coefficients(args.L, args.terms)
        doc = _report("pyramid gf", {"L": args.L, "terms": args.terms},
                      {"coefficients": [str(c) for c in coeffs]},
                      seconds=time.perf_counter() - t0)
        return _emit(doc, [f"coefficients: {coeffs}"])
    # map: waffle walk to pyramid walk
    start = tuple(int(t) for t in args.cell.split(","))
    path = pyramid3d.waffle_to_pyramid(lattice.origin(args.L, 3), start, args.walk)
    doc = _report("pyramid map",
                  {"L": args.L, "cell": args.cell, "walk": args.walk},
                  {"path": lattice.format_steps(path)},
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"path: {lattice.format_steps(path)}"])


def cmd_scaffolding(args):
    t0 = time.perf_counter()
    scaf = scaffold2d.RandomScaffolding(args.L, args.seed)
    out = pathlib.Path(args.out) if args.out else _outpath(
        f"scaffolding_L{args.L}_seed{args.seed}.json"
    )
    out.write_text(scaf.dumps())
    doc = _report("scaffolding", {"L": args.L, "seed": args.seed},
                  {"file": str(out), "points": len(scaf.tables)},
                  seconds=time.perf_counter() - t0)
    return _emit(doc, [f"wrote {out}"])


def cmd_verify(args):
    t0 = time.perf_counter()
    if args.scaffolding_file:
        scaf = scaffold2d.RandomScaffolding.loads(
            pathlib.Path(args.scaffolding_file).read_text()
        )
        rep = scaffold2d.validate_scaffolding(scaf)
        doc = _report("verify", {"scaffolding_file": args.scaffolding_file},
                      {"checked": rep.checked,
                       "violations": [repr(v) for v in rep.violations[:10]]},
                      seconds=time.perf_counter() - t0, ok=rep.ok)
        state = "valid" if rep.ok else f"INVALID ({len(rep.violations)} violations)"
        return _emit(doc, [f"scaffolding {state}"])
    results = verify.run_suite(args.suite, max_L=args.max_L, max_n=args.max_n)
    human = []
    for r in results:
        state = "PASS" if r.ok else "FAIL"
        human.append(f"{state} {r.name} ({r.checked} checks, {r.seconds:.2f}s)")
        if not r.ok:
            human.append(f"     counterexample: {r.counterexample!r}")
    ok = all(r.ok for r in results)
    doc = _report("verify", {"suite": args.suite, "max_L": args.max_L,
                             "max_n": args.max_n},
                  {"passed": sum(r.ok for r in results), "total": len(results)},
                  checks=[r.to_json() for r in results],
                  seconds=time.perf_counter() - t0, ok=ok)
    return _emit(doc, human + [("all checks passed" if ok else "CHECKS FAILED")])


# which subcommand reaches each library operation; the test suite asserts
# this table stays total over the public API
OPERATION_COVERAGE = {
    "lattice.origin": "count triangular",
    "lattice.apply_step": "enumerate triangular",
    "lattice.validate_path": "map",
    "lattice.count_paths": "count triangular",
    "lattice.count_generic": "count generic",
    "lattice.enumerate_paths": "enumerate triangular",
    "lattice.count_bicolored_pairs": "count bicolored",
    "motzkin.amplitude": "map",
    "motzkin.count_meanders": "count motzkin",
    "motzkin.count_paths_by_amplitude": "count motzkin",
    "motzkin.enumerate_meanders": "enumerate motzkin",
    "motzkin.uniform_sample": "sample motzkin",
    "flips.swap_flip": "verify --suite flips",
    "flips.last_step_flip": "verify --suite flips",
    "flips.transform": "map --bicolored one",
    "flips.algorithm1": "verify --suite flips",
    "flips.tile": "verify --suite flips",
    "flips.read_path": "verify --suite flips",
    "profiles.profile": "profile",
    "profiles.cell_representation": "profile",
    "profiles.check_profile_identities": "verify --suite profiles",
    "profiles.check_forward_counts_via_profiles": "verify --suite profiles",
    "scaffold2d.build_random_scaffolding": "map --scaffolding random:<seed>",
    "scaffold2d.trapezium_delta": "map --scaffolding trapezium",
    "scaffold2d.Scaffolding.motzkin_to_triangular": "map --direction m2t",
    "scaffold2d.Scaffolding.triangular_to_motzkin": "map --direction t2m",
    "scaffold2d.Scaffolding.bicolored_to_generic": "map --bicolored one|two",
    "scaffold2d.validate_scaffolding": "verify --suite scaffold",
    "scaffold2d.sample_forward_path": "sample forward",
    "omega.omega": "map --method omega --direction t2m",
    "omega.omega_inverse": "map --method omega --direction m2t",
    "omega.forward_to_motzkin_exp": "map --method omega",
    "pyramid3d.count_pyramid_paths": "pyramid count",
    "pyramid3d.count_waffle_walks": "count waffle",
    "pyramid3d.profile3d": "pyramid map",
    "pyramid3d.anchor": "pyramid map",
    "pyramid3d.diamond_delta": "pyramid map",
    "pyramid3d.waffle_to_pyramid": "pyramid map",
    "pyramid3d.pyramid_gf_coefficients": "gf",
    "pyramid3d.reflection_count": "verify --suite pyramid",
    "verify.run_suite": "verify",
}


def build_parser():
    ap = argparse.ArgumentParser(prog="triwalks", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count", help="exact counts of walks and words")
    c.add_argument("family", choices=["motzkin", "triangular", "generic",
                                      "bicolored", "pyramid", "waffle"])
    c.add_argument("--n", type=int, default=0)
    c.add_argument("--amplitude", type=int, default=0)
    c.add_argument("--start-height", type=int, default=0, dest="start_height")
    c.add_argument("--L", type=int, default=0)
    c.add_argument("--d", type=int, default=2)
    c.add_argument("--dv", default=None)
    c.add_argument("--start", default=None)
    c.add_argument("--p", type=int, default=0)
    c.add_argument("--q", type=int, default=0)
    c.add_argument("--orientation", choices=["F", "B"], default="F")
    c.set_defaults(fn=cmd_count)

    e = sub.add_parser("enumerate", help="list walks or words (capped)")
    e.add_argument("family", choices=["motzkin", "triangular"])
    e.add_argument("--n", type=int, default=0)
    e.add_argument("--amplitude", type=int, default=0)
    e.add_argument("--start-height", type=int, default=0, dest="start_height")
    e.add_argument("--L", type=int, default=0)
    e.add_argument("--d", type=int, default=2)
    e.add_argument("--dv", default="")
    e.add_argument("--start", default=None)
    e.add_argument("--cap", type=int, default=100000)
    e.set_defaults(fn=cmd_enumerate)

    m = sub.add_parser("map", help="apply one of the bijections")
    m.add_argument("input", help="a walk 's1 s2 ...' or a Motzkin word 'UFD...'")
    m.add_argument("--L", type=int, required=True)
    m.add_argument("--method", default=None,
                   help="omega | trapezium | random:<seed>")
    m.add_argument("--scaffolding", default=None,
                   help="trapezium | random:<seed> (alias of --method)")
    m.add_argument("--direction", choices=["m2t", "t2m"], default="m2t")
    m.add_argument("--bicolored", choices=["one", "two"], default=None)
    m.add_argument("--scaffolding-file", default=None, dest="scaffolding_file",
                   help="replay a saved scaffolding bit for bit")
    m.set_defaults(fn=cmd_map)

    sc = sub.add_parser("scaffolding", help="build and save a random scaffolding")
    sc.add_argument("--L", type=int, required=True)
    sc.add_argument("--seed", type=int, required=True)
    sc.add_argument("--out", default=None,
                    help=f"output file (default under ${OUTPUT_DIR_ENV} or .)")
    sc.set_defaults(fn=cmd_scaffolding)

    s = sub.add_parser("sample", help="uniform random walk or word")
    s.add_argument("family", choices=["motzkin", "forward"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--amplitude", type=int, default=0)
    s.add_argument("--L", type=int, default=0)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(fn=cmd_sample)

    p = sub.add_parser("profile", help="profile and cells of a triangle point")
    p.add_argument("--point", required=True)
    p.set_defaults(fn=cmd_profile)

    g = sub.add_parser("gf", help="pyramid generating function coefficients")
    g.add_argument("--L", type=int, required=True)
    g.add_argument("--terms", type=int, default=10)
    g.set_defaults(fn=cmd_gf)

    y = sub.add_parser("pyramid", help="three-dimensional walks")
    y.add_argument("action", choices=["count", "map", "gf"])
    y.add_argument("--L", type=int, required=True)
    y.add_argument("--n", type=int, default=0)
    y.add_argument("--terms", type=int, default=10)
    y.add_argument("--cell", default="0,0")
    y.add_argument("--walk", default="")
    y.set_defaults(fn=cmd_pyramid)

    v = sub.add_parser("verify", help="run the exhaustive check suites")
    v.add_argument("--suite", default="all",
                   choices=["all"] + sorted(verify.SUITES))
    v.add_argument("--max-L", type=int, default=None, dest="max_L")
    v.add_argument("--max-n", type=int, default=None, dest="max_n")
    v.add_argument("--scaffolding-file", default=None, dest="scaffolding_file",
                   help="validate a saved scaffolding instead")
    v.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (TriwalksError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"command": args.cmd, "ok": False, "error": str(exc)}))
        return 2 if isinstance(exc, UsageError) else 1


if __name__ == "__main__":
    sys.exit(main())
