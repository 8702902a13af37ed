"""Command-line front end.

Subcommands: ``spectrum``, ``count``, ``riesz``, ``constants``, ``verify``,
``reproduce``.  Spectrum compositions are given as JSON, e.g.

    '{"product": [{"interval": {"a": "pi/24", "bc": "dirichlet"}}, {"sphere2": {}}]}'

Lengths accept symbolic tokens ("pi", "pi/24", "1/4pi") so exact-mode
verification can recognize integer spectra.  Outputs are deterministic:
identical configurations produce byte-identical CSV/JSON, except for the
timestamp field, which --no-timestamp removes.  Exit status is 0 iff all
requested verifications hold, 1 on a failed verification, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from datetime import datetime, timezone
from typing import Optional

import numpy as np

from . import counting as ct
from . import polya as pv
from . import riesz as rz
from . import spectra as sp
from .constants import c_d, h1, h2, l_gamma_d, omega_d
from .errors import ConfigError, ModeError, PolyaspecError
from .reproduce import (
    rationalized_polya_constant,
    sphere_thin_bundle,
    square_triangle_bundle,
)

DEFAULT_SEED = 20240601

__all__ = ["main", "build_spec", "SpectrumSpec"]


# ---------------------------------------------------------------------------
# spectrum specifications


class SpectrumSpec:
    """A recursive spectrum description: model generator or product of two."""

    def __init__(self, kind: str, params: dict, children: Optional[list] = None):
        self.kind = kind
        self.params = params
        self.children = children or []

    def meta(self) -> sp.DomainMeta:
        if self.kind == "interval":
            return sp.interval_meta(self.params["a"], self.params["bc"])
        if self.kind == "box":
            return sp.box_meta(self.params["sides"], self.params["bc"])
        if self.kind == "sphere2":
            return sp.sphere2_meta()
        if self.kind == "triangle":
            return sp.triangle_meta()
        if self.kind == "tabulated":
            if "dimension" not in self.params or "volume" not in self.params:
                raise ConfigError("tabulated specs need 'dimension' and 'volume' for metadata")
            return sp.DomainMeta(
                int(self.params["dimension"]), float(self.params["volume"]),
                sp.BoundaryCondition(self.params.get("bc", "dirichlet")),
                surface_area=self.params.get("surface_area"),
            )
        if self.kind == "product":
            return sp.product_meta(self.children[0].meta(), self.children[1].meta())
        raise ConfigError(f"unknown spectrum kind {self.kind!r}")

    def stream(self, cutoff: float) -> sp.EigenvalueStream:
        if self.kind == "interval":
            return sp.interval_spectrum(self.params["a"], self.params["bc"], cutoff)
        if self.kind == "box":
            return sp.box_spectrum(self.params["sides"], self.params["bc"], cutoff)
        if self.kind == "sphere2":
            return sp.sphere2_spectrum(cutoff)
        if self.kind == "triangle":
            return sp.triangle_neumann_spectrum(cutoff)
        if self.kind == "tabulated":
            return sp.tabulated_spectrum(self.params["entries"], cutoff)
        if self.kind == "product":
            s1 = self.children[0].stream(cutoff)
            s2 = self.children[1].stream(cutoff)
            return sp.product_spectrum(s1, s2, cutoff)
        raise ConfigError(f"unknown spectrum kind {self.kind!r}")

    def counting(self, cutoff: float) -> ct.CountingFunction:
        return ct.CountingFunction.from_stream(self.stream(cutoff), self.meta())


def build_spec(node) -> SpectrumSpec:
    """Parse the recursive JSON spectrum description."""
    if isinstance(node, str):
        node = json.loads(node)
    if not isinstance(node, dict) or len(node) != 1:
        raise ConfigError("spectrum spec must be an object with exactly one key")
    kind, params = next(iter(node.items()))
    if kind == "product":
        if not isinstance(params, list) or len(params) != 2:
            raise ConfigError("'product' takes a list of exactly two specs")
        return SpectrumSpec("product", {}, [build_spec(p) for p in params])
    if kind in ("interval", "box", "sphere2", "triangle", "tabulated"):
        if params is None:
            params = {}
        if not isinstance(params, dict):
            raise ConfigError(f"{kind!r} parameters must be an object")
        if kind == "interval" and "a" not in params:
            raise ConfigError("'interval' needs a length 'a'")
        if kind == "box" and not params.get("sides"):
            raise ConfigError("'box' needs a nonempty 'sides' list")
        if kind == "tabulated" and "entries" not in params:
            raise ConfigError("'tabulated' needs an 'entries' list")
        if kind in ("interval", "box") and "bc" not in params:
            raise ConfigError(f"{kind!r} needs a boundary condition 'bc'")
        return SpectrumSpec(kind, params)
    raise ConfigError(f"unknown spectrum kind {kind!r}")


def stream_covering_k(spec: SpectrumSpec, k_max: int):
    """Build a stream holding at least k_max eigenvalues (beyond the zero mode)."""
    meta = spec.meta()
    d = meta.dimension
    cutoff = (1.3 * (k_max + 50) / (c_d(d) * meta.volume)) ** (2.0 / d)
    for _ in range(10):
        stream = spec.stream(cutoff)
        have = stream.total_count - (1 if stream.index_origin == 0 else 0)
        if have >= k_max:
            return stream, meta
        cutoff *= 1.5
    raise ConfigError(f"could not cover k_max={k_max}; last cutoff {cutoff}")


# ---------------------------------------------------------------------------
# output plumbing


def _timestamp_field(args) -> dict:
    if args.no_timestamp:
        return {}
    return {"generated_at": datetime.now(timezone.utc).isoformat()}


def _emit_json(obj: dict, args) -> None:
    obj = {**obj, **_timestamp_field(args)}
    text = json.dumps(obj, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fp:
            fp.write(text + "\n")
    else:
        print(text)


def _emit_csv(header: list[str], rows, args) -> None:
    def write(fp):
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(x) if isinstance(x, float) else x for x in row])

    if args.out:
        with open(args.out, "w", newline="") as fp:
            write(fp)
    else:
        write(sys.stdout)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_spectrum(args) -> int:
    spec = build_spec(args.spec)
    stream = spec.stream(args.cutoff)
    if args.output == "csv":
        _emit_csv(["value", "multiplicity"], stream.entries(), args)
    else:
        _emit_json(sp.stream_to_json_dict(stream), args)
    return 0


def _cmd_count(args) -> int:
    spec = build_spec(args.spec)
    lams = [float(x) for x in args.lam]
    cutoff = args.cutoff if args.cutoff else max(lams)
    cf = spec.counting(cutoff)
    rows = []
    for lam in lams:
        row = {"lambda": lam, "count": cf.count(lam)}
        if args.weyl:
            bound = ct.weyl_leading(cf.meta, lam)
            sign = 1.0 if cf.meta.bc is sp.BoundaryCondition.DIRICHLET else -1.0
            row["bound"] = bound
            row["margin"] = sign * (bound - row["count"])
        rows.append(row)
    if args.output == "csv":
        header = ["lambda", "count"] + (["bound", "margin"] if args.weyl else [])
        _emit_csv(header, ([r[h] for h in header] for r in rows), args)
    else:
        _emit_json({"results": rows}, args)
    return 0


def _cmd_riesz(args) -> int:
    spec = build_spec(args.spec)
    if args.two_term:
        if not args.cutoff:
            raise ConfigError("--two-term needs --cutoff")
        stream = spec.stream(args.cutoff * 1.0001)
        meta = spec.meta()
        side = args.side or meta.bc.value
        scan = rz.two_term_riesz_scan(stream, meta, args.gamma, args.cutoff, side)
        if args.output == "csv":
            _emit_csv(["lambda", "riesz", "bound", "margin"], scan.rows(), args)
        else:
            _emit_json({
                "gamma": scan.gamma, "side": scan.side,
                "lambda_star": scan.lambda_star,
                "worst_margin": scan.worst_margin, "worst_lambda": scan.worst_lambda,
                "points_scanned": len(scan.points),
            }, args)
        return 0
    lams = [float(x) for x in args.lam]
    if not lams:
        raise ConfigError("give at least one --lambda or use --two-term")
    stream = spec.stream(max(lams))
    rows = [(lam, rz.riesz_mean(stream, args.gamma, lam)) for lam in lams]
    if args.output == "csv":
        _emit_csv(["lambda", "riesz"], rows, args)
    else:
        _emit_json({"gamma": args.gamma,
                    "results": [{"lambda": l, "riesz": r} for l, r in rows]}, args)
    return 0


def _cmd_constants(args) -> int:
    d = args.d
    out = {
        "dimension": d,
        "gamma": args.gamma,
        "omega_d": omega_d(d),
        "c_d": c_d(d),
        "l_gamma_d": l_gamma_d(args.gamma, d),
    }
    if d >= 2:
        out["c_d_minus_1"] = c_d(d - 1)
        out["l_gamma_d_minus_1"] = l_gamma_d(args.gamma, d - 1)
    if d >= 3:
        for name, fn in (("h1", h1), ("h2", h2)):
            res = fn(d)
            out[name] = {"value": res.value, "mu": res.mu,
                         "error_estimate": res.error_estimate}
        from .constants import a_d_const, b_d_const
        out["a_d_unit_volume"] = a_d_const(d, 1.0)
        out["b_d_unit_volume"] = b_d_const(d, 1.0)
    _emit_json(out, args)
    return 0


def _cmd_verify(args) -> int:
    spec = build_spec(args.spec)
    stream, meta = stream_covering_k(spec, args.k_max)
    if meta.bc is sp.BoundaryCondition.CLOSED:
        raise ConfigError("verification needs a Dirichlet or Neumann composition")
    side = meta.bc.value
    if args.exact:
        if meta.exact_volume is None:
            raise ModeError("--exact needs symbolic lengths so the volume stays exact")
        constant = rationalized_polya_constant(meta.dimension, meta.exact_volume)
        report = pv.verify_exact_power(stream, constant.numerator, constant.denominator,
                                       meta.dimension, args.k_max, side)
    elif side == "dirichlet":
        report = pv.verify_dirichlet(stream, meta, args.k_max)
    else:
        report = pv.verify_neumann(stream, meta, args.k_max)
    if args.dump:
        ks = np.arange(1, report.checked + 1)
        margins = report.margins if report.margins is not None else np.full(ks.size, math.nan)
        with open(args.dump, "w", newline="") as fp:
            writer = csv.writer(fp, lineterminator="\n")
            writer.writerow(["k", "margin"])
            for k, m in zip(ks, margins):
                writer.writerow([int(k), repr(float(m))])
    _emit_json({"bc": side, "exact": bool(args.exact), **report.to_dict()}, args)
    return 0 if report.holds else 1


def _cmd_reproduce(args) -> int:
    if args.example == "sphere-thin":
        bundle = sphere_thin_bundle()
    else:
        bundle = square_triangle_bundle(threads=args.threads)
    _emit_json(bundle, args)
    return 0 if bundle["ok"] else 1


# ---------------------------------------------------------------------------
# argument parsing


def _make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["csv", "json"], default="json",
                        help="output format (default json)")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--threads", type=int, default=os.cpu_count(),
                        help="worker threads for scan partitioning")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized scans (reserved; default fixed)")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp field for byte-identical reruns")
    common.add_argument("--exact", action="store_true",
                        help="use exact integer arithmetic where the spectrum allows it")

    parser = argparse.ArgumentParser(
        prog="polyaspec",
        description="model Laplace spectra, eigenvalue counting, and Polya-type verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="generate a spectrum")
    p.add_argument("--spec", required=True, help="JSON spectrum description")
    p.add_argument("--cutoff", type=float, required=True)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("count", parents=[common], help="counting function values")
    p.add_argument("--spec", required=True)
    p.add_argument("--lambda", dest="lam", action="append", required=True,
                   metavar="LAMBDA", help="evaluation point (repeatable)")
    p.add_argument("--cutoff", type=float, help="generation cutoff (default: max lambda)")
    p.add_argument("--weyl", action="store_true", help="add Weyl bound and margin columns")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("riesz", parents=[common], help="Riesz means and two-term scans")
    p.add_argument("--spec", required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--lambda", dest="lam", action="append", default=[], metavar="LAMBDA")
    p.add_argument("--two-term", action="store_true",
                   help="scan the two-term bound at all jump points up to --cutoff")
    p.add_argument("--cutoff", type=float)
    p.add_argument("--side", choices=["dirichlet", "neumann"],
                   help="two-term side (default: from the composition)")
    p.set_defaults(fn=_cmd_riesz)

    p = sub.add_parser("constants", parents=[common], help="constant tables")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gamma", type=float, default=1.0)
    p.set_defaults(fn=_cmd_constants)

    p = sub.add_parser("verify", parents=[common], help="per-eigenvalue Polya verification")
    p.add_argument("--spec", required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--dump", metavar="PATH", help="write per-k margins as CSV")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="run a packaged example")
    p.add_argument("example", choices=["square-triangle", "sphere-thin"])
    p.set_defaults(fn=_cmd_reproduce)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PolyaspecError as exc:
        code = type(exc).__name__
        print(json.dumps({"error": code, "message": str(exc)}), file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
