"""Command-line driver.

    formal-modules logs        --p 3 --n 2 --convention araki
    formal-modules right-unit  --p 3 --k 1
    formal-modules coproduct   --p 3 --k 2
    formal-modules witt        --p 3 --n 2 --m 2
    formal-modules invariance  --p 3 --h 2
    formal-modules stabilizer  --p 3 --h 1 --k 2
    formal-modules verify-all  --p 3 --e 2 --D 52

Exit status: 0 when every check passes, 1 when a verification fails, 2 on
usage errors (unknown flags, invalid ring parameters).  Results of the
computing subcommands can be cached as JSON in ``--cache-dir`` (or the
directory named by $FORMAL_MODULES_CACHE); cache entries are keyed by the
subcommand, the full configuration and the package version, and their
gradings are re-checked when read back.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .coeff import make_ring
from .gpoly import GradedPoly
from .report import Report

CACHE_ENV = "FORMAL_MODULES_CACHE"
SUBCOMMANDS = ("logs", "right-unit", "coproduct", "witt", "invariance", "stabilizer", "verify-all")


class UsageError(Exception):
    pass


@dataclass
class Config:
    p: int = 3
    e: int = 1
    f: int = 1
    u: int = 1
    convention: str = "araki"
    D: Optional[int] = None
    n: Optional[int] = None
    k: Optional[int] = None
    h: Optional[int] = None
    m: Optional[int] = None
    output: str = "text"
    cache_dir: Optional[str] = None

    def ring(self):
        try:
            return make_ring(self.p, self.e, self.f, self.u)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"invalid ring parameters: {exc}") from exc

    def validate(self):
        for name in ("D", "n", "k", "h", "m"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise UsageError(f"--{name} must be positive")
        if self.convention not in ("araki", "hazewinkel"):
            raise UsageError(f"unknown convention {self.convention!r}")
        if self.output not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output!r}")
        self.ring()
        return self

    def key(self, subcommand: str) -> str:
        data = {k: v for k, v in asdict(self).items() if k not in ("output", "cache_dir")}
        blob = json.dumps({"cmd": subcommand, "config": data, "version": __version__}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:24]


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="residue characteristic")
    common.add_argument("--e", type=int, help="ramification degree")
    common.add_argument("--f", type=int, help="residue degree")
    common.add_argument("--u", type=int, help="unit in pi^e = u*p")
    common.add_argument("--convention", choices=("araki", "hazewinkel"))
    common.add_argument("--D", type=int, help="internal degree bound")
    common.add_argument("--n", type=int, help="log index / sequence norm limit")
    common.add_argument("--k", type=int, help="right-unit / coproduct index limit")
    common.add_argument("--h", type=int, help="height")
    common.add_argument("--m", type=int, help="number of Witt variables")
    common.add_argument("--output", choices=("text", "json"))
    common.add_argument("--cache-dir", dest="cache_dir", help=f"cache directory (default ${CACHE_ENV})")
    common.add_argument("--config", help="JSON file whose keys mirror the flags")

    parser = argparse.ArgumentParser(
        prog="formal-modules",
        description="Structure maps of the Hopf algebroid of A-typical formal A-module laws.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "logs": "print log coefficients",
        "right-unit": "print eta_R of the generators",
        "coproduct": "print Delta(t_k)",
        "witt": "verify Witt polynomial identities",
        "invariance": "verify invariance of I_h",
        "stabilizer": "stabilizer algebra presentation and checks",
        "verify-all": "run every verification suite",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def load_config(args: argparse.Namespace) -> Config:
    values: dict = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        known = set(Config.__dataclass_fields__)
        for key, value in data.items():
            key = key.replace("-", "_")
            if key not in known:
                raise UsageError(f"unknown config key {key!r}")
            values[key] = value
    for key in Config.__dataclass_fields__:
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    cfg = Config(**values)
    if cfg.cache_dir is None:
        cfg.cache_dir = os.environ.get(CACHE_ENV) or None
    return cfg.validate()


# -- cache --------------------------------------------------------------------


def _cache_path(cfg: Config, subcommand: str) -> Optional[Path]:
    if not cfg.cache_dir:
        return None
    return Path(cfg.cache_dir) / f"{subcommand}-{cfg.key(subcommand)}.json"


def cache_read(cfg: Config, subcommand: str, degrees: dict) -> Optional[dict]:
    """Cached {name: GradedPoly}; rejected unless every entry is homogeneous of its expected degree."""
    path = _cache_path(cfg, subcommand)
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
        if data.get("version") != __version__ or set(data["values"]) != set(degrees):
            return None
        ring = cfg.ring()
        out = {}
        for name, blob in data["values"].items():
            poly = GradedPoly.from_json(ring, blob)
            if not poly.is_homogeneous(degrees[name]):
                return None
            out[name] = poly
        return out
    except (OSError, ValueError, KeyError, TypeError):
        return None


def cache_write(cfg: Config, subcommand: str, values: dict):
    path = _cache_path(cfg, subcommand)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = {"version": __version__, "values": {name: poly.to_json() for name, poly in values.items()}}
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(blob, sort_keys=True))
    tmp.replace(path)


def _cached(cfg, subcommand, degrees, compute):
    values = cache_read(cfg, subcommand, degrees)
    if values is None:
        values = compute()
        cache_write(cfg, subcommand, values)
    return values


# -- subcommands -------------------------------------------------------------------


def _params(ring, **extra):
    return dict({"p": ring.p, "e": ring.e, "f": ring.f}, **extra)


def _emit_values(cfg, values: dict, report: Report, out):
    if cfg.output == "json":
        payload = {"values": {name: poly.to_json() for name, poly in values.items()}, "report": report.to_json()}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for name, poly in values.items():
            out.write(f"{name} = {poly}\n")
        if len(report):
            out.write(report.render() + "\n")
    return 0 if report.passed else 1


def cmd_logs(cfg: Config, out) -> int:
    from .universal import closed_form_logs, generator_family, logs_for

    ring = cfg.ring()
    n = cfg.n or 2
    q = ring.q
    degrees = {f"l{i}": 2 * (q**i - 1) for i in range(1, n + 1)}
    values = _cached(cfg, "logs", degrees,
                     lambda: {f"l{i}": c for i, c in enumerate(logs_for(ring, cfg.convention, n).coeffs) if i})
    report = Report()
    if cfg.convention == "araki":
        closed = closed_form_logs(ring, n).coeffs
        ok = all(values[f"l{i}"] == closed[i] for i in range(1, n + 1))
        report.add("recursive logs = closed-form logs", _params(ring, n=n), ok)
    report.add("logs homogeneous", _params(ring, n=n, family=generator_family(cfg.convention)),
               all(values[name].is_homogeneous(d) for name, d in degrees.items()))
    return _emit_values(cfg, values, report, out)


def cmd_right_unit(cfg: Config, out) -> int:
    from .hopf import eta_R_closed, eta_R_v
    from .universal import generator_family

    ring = cfg.ring()
    k = cfg.k or 1
    q = ring.q
    fam = generator_family(cfg.convention)
    degrees = {f"eta_R({fam}{i})": 2 * (q**i - 1) for i in range(1, k + 1)}
    values = _cached(cfg, "right-unit", degrees,
                     lambda: {f"eta_R({fam}{i})": eta_R_v(ring, i, cfg.convention) for i in range(1, k + 1)})
    report = Report()
    for i in range(1, k + 1):
        val = values[f"eta_R({fam}{i})"]
        report.add("right unit integral", _params(ring, k=i), val.is_integral())
        if cfg.convention == "araki" and ring.p > 2:
            report.add("recursive = closed-form right unit", _params(ring, k=i), val == eta_R_closed(ring, i))
    return _emit_values(cfg, values, report, out)


def cmd_coproduct(cfg: Config, out) -> int:
    from .hopf import coproduct_t

    ring = cfg.ring()
    k = cfg.k or 1
    degrees = {f"Delta(t{k})": 2 * (ring.q**k - 1)}
    values = _cached(cfg, "coproduct", degrees,
                     lambda: {f"Delta(t{k})": coproduct_t(ring, k, convention=cfg.convention)})
    report = Report()
    from .hopf import _coproduct_logmatch

    val = values[f"Delta(t{k})"]
    report.add("coproduct routes agree", _params(ring, k=k), val == _coproduct_logmatch(ring, k, cfg.convention))
    report.add("coproduct integral", _params(ring, k=k), val.is_integral())
    if cfg.D is not None:
        values = {name: v.truncate(cfg.D) for name, v in values.items()}
    return _emit_values(cfg, values, report, out)


def witt_report(ring, nmax: int, m: int) -> Report:
    from .fpoly import FpPoly
    from .sequences import compositions
    from .witt import WittEvaluator, variables, witt_identity_sides

    report = Report()
    q = ring.q
    ev = WittEvaluator(ring, variables(ring, m))
    for norm in range(nmax + 1):
        for seq in compositions(norm):
            params = _params(ring, I=str(seq), m=m)
            lhs, rhs = witt_identity_sides(ring, seq, m)
            report.add("Witt defining identity", params, lhs == rhs)
            w = ev.generalized(seq)
            report.add("Witt polynomial integral", params, w.is_integral())
            if w.is_integral():
                base = ev.classical(len(seq))
                lhs_fp = FpPoly.from_graded(w)
                rhs_fp = FpPoly.from_graded(base).pow(q ** (norm - len(seq)))
                report.add("Witt congruence w_I = w_|I|^(q^(|I|-len)) mod pi", params, lhs_fp == rhs_fp)
    return report


def cmd_witt(cfg: Config, out) -> int:
    ring = cfg.ring()
    report = witt_report(ring, cfg.n or 2, cfg.m or 2)
    return _emit_report(cfg, report, out)


def cmd_invariance(cfg: Config, out) -> int:
    from .hopf import verify_invariance

    ring = cfg.ring()
    heights = [cfg.h] if cfg.h else [1, 2, 3]
    report = Report()
    for h in heights:
        report.extend(verify_invariance(ring, h, max(h, cfg.k or h), cfg.D, cfg.convention))
    return _emit_report(cfg, report, out)


def cmd_stabilizer(cfg: Config, out) -> int:
    from .stabilizer import frobenius_check, stab_coassoc_check, stab_presentation

    ring = cfg.ring()
    h = cfg.h or 1
    kmax = cfg.k or 2
    presentation, report = stab_presentation(ring, h, kmax)
    report.extend(stab_coassoc_check(ring, h, kmax))
    report.extend(frobenius_check(ring, h, imax=1, jmax=1))
    if cfg.output == "json":
        payload = {"presentation": presentation, "report": report.to_json()}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        from .stabilizer import stab_coproduct

        out.write(f"generators: {', '.join(presentation['generators'])}\n")
        Q = ring.q**h
        out.write("relations: " + ", ".join(f"{g}^{Q} = {g}" for g in presentation["generators"]) + "\n")
        for k in range(1, kmax + 1):
            out.write(f"Delta(t{k}) = {stab_coproduct(ring, h, k)}\n")
        out.write(report.render() + "\n")
    return 0 if report.passed else 1


def verify_all_report(ring, D: int, convention: str = "araki") -> Report:
    from .hopf import (
        conjugation_identity,
        coproduct_t,
        eta_R_closed,
        eta_R_v,
        hopf_axiom_suite,
        top_degree,
        verify_invariance,
    )
    from .stabilizer import frobenius_check, stab_coassoc_check, stab_presentation, thickening_check
    from .universal import araki_logs, closed_form_logs

    report = Report()
    levels = 0
    while top_degree(ring, levels + 1) <= D:
        levels += 1
    logs, closed = araki_logs(ring, max(levels, 1)), closed_form_logs(ring, max(levels, 1))
    report.add("recursive logs = closed-form logs", _params(ring, n=max(levels, 1)), logs == closed)
    for k in range(1, levels + 1):
        er = eta_R_v(ring, k, convention)
        report.add("right unit integral", _params(ring, k=k), er.is_integral())
        if ring.p > 2:
            report.add("recursive = closed-form right unit", _params(ring, k=k),
                       eta_R_v(ring, k) == eta_R_closed(ring, k))
        try:
            coproduct_t(ring, k, route="both", convention=convention)
            report.add("coproduct routes agree and integral", _params(ring, k=k), True)
        except ArithmeticError as exc:
            report.add("coproduct routes agree and integral", _params(ring, k=k), False, exc)
    report.extend(hopf_axiom_suite(ring, D, convention))
    for h in (1, 2, 3):
        report.extend(verify_invariance(ring, h, D=D, convention=convention))
    if ring.p > 2:
        report.extend(conjugation_identity(ring, D, convention))
    report.extend(witt_report(ring, 2, 2))
    _, pres = stab_presentation(ring, 1, 2, with_coproducts=False)
    report.extend(pres)
    report.extend(stab_coassoc_check(ring, 1, 2))
    report.extend(frobenius_check(ring, 1, imax=1, jmax=1))
    for h in (1, 2):
        report.extend(thickening_check(ring, h, 3))
    return report


def cmd_verify_all(cfg: Config, out) -> int:
    ring = cfg.ring()
    D = cfg.D or 2 * (ring.q**2 - 1)
    report = verify_all_report(ring, D, cfg.convention)
    return _emit_report(cfg, report, out)


def _emit_report(cfg, report: Report, out) -> int:
    if cfg.output == "json":
        out.write(report.dumps() + "\n")
    else:
        out.write(report.render() + "\n")
        out.write(f"{len(report) - len(report.failures())}/{len(report)} checks passed\n")
    return 0 if report.passed else 1


COMMANDS = {
    "logs": cmd_logs,
    "right-unit": cmd_right_unit,
    "coproduct": cmd_coproduct,
    "witt": cmd_witt,
    "invariance": cmd_invariance,
    "stabilizer": cmd_stabilizer,
    "verify-all": cmd_verify_all,
}


def dispatch(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args)
    except UsageError as exc:
        sys.stderr.write(f"formal-modules: error: {exc}\n")
        return 2
    try:
        return COMMANDS[args.command](cfg, out)
    except UsageError as exc:
        sys.stderr.write(f"formal-modules: error: {exc}\n")
        return 2
    except ArithmeticError as exc:
        sys.stderr.write(f"formal-modules: verification failed: {exc}\n")
        return 1


def main(argv=None):
    sys.exit(dispatch(argv))


if __name__ == "__main__":
    main()
