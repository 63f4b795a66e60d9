"""Command-line surface: verification suites, representation builds,
classification, transports, and parameter sweeps with JSON reports.

Every subcommand writes a report with the stable schema

    {tool_version, q0, inputs, findings[], max_residual, pass}

to stdout or --out; the exit code is 0 exactly when the report passes,
1 on a failed check, and 2 on usage errors.  Randomized sweeps take
--seed and record it, so identical invocations produce byte-identical
reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from . import __version__
from .braid import QMat, build_rhat, exterior_power, minor_braiding
from .classify import (
    CharacterParams,
    admissible_roots,
    canonical_weight,
    ext_signature,
    reflection_defect_exact,
    rmod1_equal,
    star_character_exact,
)
from .errors import QreaError
from .gtrep import (
    HWModuleSpec,
    build_hw_module,
    eps_adapted,
    gt_norm_sign,
    hw_module_to_json,
    patterns,
    scaling_trep,
    vector_trep,
)
from .hrep import (
    adjoint_transport_T,
    adjoint_transport_U,
    build_bigcell_rep,
    spectral_components,
    spectral_data,
    suq2_corep_blocks,
    uchar_blocks,
    verify_rep,
)
from .ncalg import identity_suite
from .scalars import unimodular_point


def _parse_q(text):
    if "/" in text:
        return Fraction(text)
    return float(text)


def _parse_eps(text):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        elif tok == "0":
            out.append(0)
        else:
            raise argparse.ArgumentTypeError(f"bad sign {tok!r}")
    return tuple(out)


def _parse_reals(text):
    return tuple(Fraction(tok) if "/" in tok else Fraction(tok).limit_denominator(10 ** 9)
                 for tok in text.split(","))


def emit_report(inputs: dict, findings: list, q0, out_path=None) -> dict:
    """Assemble the stable report schema; findings are sorted by name."""
    findings = sorted(findings, key=lambda f: f["name"])
    residuals = [f.get("residual") for f in findings if f.get("residual") is not None]
    doc = {
        "tool_version": __version__,
        "q0": float(q0) if q0 is not None else None,
        "inputs": inputs,
        "findings": findings,
        "max_residual": max(residuals) if residuals else 0.0,
        "pass": all(f["ok"] for f in findings),
    }
    text = json.dumps(doc, indent=2, sort_keys=True, default=float)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return doc


def parse_report(text: str) -> dict:
    doc = json.loads(text)
    for key in ("tool_version", "q0", "inputs", "findings", "max_residual", "pass"):
        if key not in doc:
            raise ValueError(f"missing report field {key}")
    return doc


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify_algebra(args):
    findings = []
    n = args.n
    rep = identity_suite(n, bound=max(3, n))
    for f in rep["findings"]:
        findings.append({"name": f"ncalg.{f['name']}", "ok": f["ok"],
                         "residual": None, "detail": f.get("detail", "")})
    R, Rinv = build_rhat(n)
    I2 = QMat.eye(n * n)
    braid_ok = (R.kron(QMat.eye(n)) @ QMat.eye(n).kron(R) @ R.kron(QMat.eye(n))
                == QMat.eye(n).kron(R) @ R.kron(QMat.eye(n)) @ QMat.eye(n).kron(R))
    findings.append({"name": "braid.braid_relation", "ok": braid_ok, "residual": None})
    from .scalars import qpow
    hecke_ok = ((R - I2.scale(qpow(-1))) @ (R + I2.scale(qpow(1)))).is_zero()
    findings.append({"name": "braid.hecke_relation", "ok": hecke_ok, "residual": None})
    findings.append({"name": "braid.inverse", "ok": R @ Rinv == I2, "residual": None})
    if n >= 2:
        B, Binv = minor_braiding(n, 1, min(2, n))
        dim = exterior_power(n, 1).dim * exterior_power(n, min(2, n)).dim
        findings.append({"name": "braid.minor_braiding_inverse",
                         "ok": Binv @ B == QMat.eye(dim), "residual": None})
    return emit_report({"command": "verify-algebra", "n": n}, findings, args.q, args.out)


def _spec_from_args(args):
    return HWModuleSpec(N=args.n, eps=args.eps, r=args.r, D=args.depth, q0=float(args.q))


def cmd_rep_build(args):
    spec = _spec_from_args(args)
    mod = build_hw_module(spec, margin=args.margin)
    doc = hw_module_to_json(mod)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return {"pass": True}


def _rep_findings(rep, tol):
    rpt = verify_rep(rep, tol)
    findings = [
        {"name": f["name"], "ok": f["ok"],
         "residual": float(f["residual"]) if f.get("residual") is not None else None}
        for f in rpt["findings"]
    ]
    extra = {}
    try:
        roots, sig, ext, rank = spectral_data(rep)
        extra = {
            "roots": [float(x) for x in roots],
            "signature": list(sig),
            "rank": rank,
            "extsig": {"rmod1": float(ext.rmod1), "nplus": ext.nplus,
                       "nminus": ext.nminus, "nzero": ext.nzero},
        }
        findings.append({"name": "spectral_admissible", "ok": True, "residual": None})
    except QreaError as exc:
        findings.append({"name": "spectral_admissible", "ok": False,
                         "residual": None, "detail": str(exc)})
    return findings, extra


def cmd_rep_verify(args):
    spec = _spec_from_args(args)
    rep = build_bigcell_rep(spec, margin=args.margin)
    findings, extra = _rep_findings(rep, args.tol)
    inputs = {"command": "rep-verify", "n": args.n, "eps": list(args.eps),
              "r": [str(x) for x in args.r], "depth": args.depth,
              "margin": args.margin, **extra}
    return emit_report(inputs, findings, args.q, args.out)


def cmd_classify_roots(args):
    roots = [float(Fraction(t)) if "/" in t else float(t) for t in args.roots.split(",")]
    q0 = float(args.q)
    dec = admissible_roots(roots, q0)
    findings = [{"name": "admissible", "ok": dec is not None, "residual": None}]
    inputs = {"command": "classify-roots", "roots": roots}
    if dec is not None:
        ext = ext_signature(roots, q0)
        inputs["extsig"] = {"rmod1": float(ext.rmod1), "nplus": ext.nplus,
                            "nminus": ext.nminus, "nzero": ext.nzero}
        inputs["decomposition"] = {
            "alpha": dec.alpha, "beta": dec.beta,
            "ms": list(dec.ms), "ns": list(dec.ns), "nzero": dec.nzero,
        }
        if args.eps:
            inputs["canonical_weight"] = canonical_weight(roots, args.eps, q0)
    return emit_report(inputs, findings, args.q, args.out)


def cmd_characters(args):
    rng = np.random.default_rng(args.seed)
    findings = []
    count = 0
    for N in range(2, args.n + 1):
        for k in range(N + 1):
            for l in range((N - k) // 2 + 1):
                if k + 2 * l > N:
                    continue
                for _ in range(args.samples):
                    a = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
                    c = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
                    if rng.integers(0, 2):
                        c = -c
                    y = tuple(unimodular_point(Fraction(int(rng.integers(-9, 9)),
                                                        int(rng.integers(1, 9))))
                              for _ in range(l))
                    p = CharacterParams(k=k, l=l, a=a, c=c, y=y)
                    Z = star_character_exact(p, N)
                    ok = reflection_defect_exact(Z, N).is_zero()
                    count += 1
                    findings.append({
                        "name": f"char[N={N},k={k},l={l}]#{count}",
                        "ok": ok, "residual": None,
                    })
    return emit_report({"command": "characters", "n": args.n, "seed": args.seed,
                        "samples": args.samples, "checked": count},
                       findings, args.q, args.out)


def cmd_transport(args):
    spec = _spec_from_args(args)
    rep = build_bigcell_rep(spec, margin=args.margin)
    roots0, sig0, ext0, rank0 = spectral_data(rep)
    findings = []
    q0 = float(args.q)
    mode = args.by
    if mode.startswith("scale:"):
        out = adjoint_transport_T(rep, scaling_trep(args.n, float(mode[6:])))
    elif mode == "vector":
        out = adjoint_transport_T(rep, vector_trep(args.n, q0))
    elif mode.startswith("uchar:"):
        thetas = tuple(float(t) for t in mode[6:].split(","))
        out = adjoint_transport_U(rep, uchar_blocks(thetas))
    elif mode == "s":
        U, u_int = suq2_corep_blocks(args.depth, 0.0, q0)
        out = adjoint_transport_U(rep, U, u_int)
    else:
        raise argparse.ArgumentTypeError(f"unknown transport {mode!r}")
    comps = spectral_components(out)
    ok_counts = all(ext.counts() == ext0.counts() for _, _, ext, _ in comps)
    ok_rmod = all(rmod1_equal(ext.rmod1, ext0.rmod1, 1e-8) for _, _, ext, _ in comps)
    findings.append({"name": "components_found", "ok": bool(comps), "residual": None,
                     "detail": f"{len(comps)} components"})
    findings.append({"name": "extsig_counts_invariant", "ok": ok_counts, "residual": None})
    findings.append({"name": "extsig_class_invariant", "ok": ok_rmod, "residual": None})
    inputs = {"command": "transport", "by": mode, "n": args.n,
              "eps": list(args.eps), "r": [str(x) for x in args.r],
              "extsig_before": {"rmod1": float(ext0.rmod1), "nplus": ext0.nplus,
                                "nminus": ext0.nminus, "nzero": ext0.nzero},
              "components": len(comps)}
    return emit_report(inputs, findings, args.q, args.out)


def _sweep_cell(cell):
    n, eps, r, deg, q0 = cell
    spec = HWModuleSpec(N=n, eps=eps, r=r, D=deg, q0=q0)
    adapted = eps_adapted(r, eps)
    signs = [gt_norm_sign(P, spec) for P in patterns(n, deg)]
    nonneg = all(s >= 0 for s in signs)
    return {
        "name": f"cell[eps={','.join(map(str, eps))};r={','.join(map(str, r))}]",
        "ok": nonneg == adapted,
        "residual": None,
        "detail": f"adapted={adapted} all_nonneg={nonneg}",
    }


def cmd_sweep(args):
    rng = np.random.default_rng(args.seed)
    q0 = float(args.q)
    # weights are sampled within [-L, L] with L tied to the depth, so that
    # a non-adapted cell always shows a negative norm inside the window
    L = max(1, (args.depth - args.n) // 2)
    cells = []
    for _ in range(args.cells):
        eps = tuple(int(rng.choice([-1, 1])) for _ in range(args.n))
        dens = [int(rng.integers(1, 5)) for _ in range(args.n)]
        r = tuple(Fraction(int(rng.integers(-L * d, L * d + 1)), d) for d in dens)
        cells.append((args.n, eps, r, args.depth, q0))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            findings = list(pool.map(_sweep_cell, cells))
    else:
        findings = [_sweep_cell(c) for c in cells]
    n_adapted = sum(1 for f in findings if "adapted=True" in f["detail"])
    return emit_report({"command": "sweep", "n": args.n, "cells": args.cells,
                        "seed": args.seed, "depth": args.depth,
                        "adapted_cells": n_adapted},
                       findings, args.q, args.out)


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="qrea", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, rep_args=False):
        sp.add_argument("--q", type=str, default="0.5",
                        help="deformation parameter, decimal or rational")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", type=str, default=None)
        if rep_args:
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--eps", type=_parse_eps, required=True,
                            help="comma signs, e.g. +,-")
            sp.add_argument("--r", type=_parse_reals, required=True,
                            help="comma reals, e.g. 0.3,0.8")
            sp.add_argument("--depth", type=int, default=12)
            sp.add_argument("--margin", type=int, default=None)

    sp = sub.add_parser("verify-algebra", help="exact identity suites")
    sp.add_argument("--n", type=int, default=2)
    common(sp)
    sp.set_defaults(fn=cmd_verify_algebra)

    sp = sub.add_parser("rep-build", help="build a module and dump it as JSON")
    common(sp, rep_args=True)
    sp.set_defaults(fn=cmd_rep_build)

    sp = sub.add_parser("rep-verify", help="residuals and spectral data of a build")
    common(sp, rep_args=True)
    sp.set_defaults(fn=cmd_rep_verify)

    sp = sub.add_parser("classify-roots", help="admissibility and extended signature")
    sp.add_argument("--roots", type=str, required=True, help="comma reals")
    sp.add_argument("--eps", type=_parse_eps, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_classify_roots)

    sp = sub.add_parser("characters", help="exact reflection-equation check of the "
                                           "scalar character family")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--samples", type=int, default=2)
    common(sp)
    sp.set_defaults(fn=cmd_characters)

    sp = sub.add_parser("transport", help="adjoint transport and invariance of the "
                                          "extended signature")
    sp.add_argument("--by", type=str, required=True,
                    help="scale:<c> | vector | uchar:<t1,t2,...> | s")
    common(sp, rep_args=True)
    sp.set_defaults(fn=cmd_transport)

    sp = sub.add_parser("sweep", help="norm-positivity vs adaptedness sweep")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--cells", type=int, default=100)
    sp.add_argument("--depth", type=int, default=8)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_sweep)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        doc = args.fn(args)
    except (QreaError, argparse.ArgumentTypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if doc.get("pass", False) else 1


if __name__ == "__main__":
    sys.exit(main())
