"""Corpus campaigns: generate ring expressions, cross-validate each, emit JSON reports."""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

from . import __version__, polys
from ._config import size_cap
from .dsl import evaluate
from .errors import EnumerationOverflow, SizeCapExceeded
from .flatness import PairCertificate
from .ideals import all_ideals, maximal_ideals
from .theorems import cross_validate

FAMILIES = ("zmod", "polyquot", "trunc", "products", "duplications", "quotients", "localizations")

PRODUCT_BASIS = (
    "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9",
    "GF(2)[X]/(X^2)", "GF(2)[X]/(X^2+X+1)", "trunc(2,2,2)",
)


@dataclass
class CorpusConfig:
    families: list = field(default_factory=lambda: list(FAMILIES))
    zmod_min: int = 2
    zmod_max: int = 60
    poly_primes: list = field(default_factory=lambda: [2, 3])
    poly_max_degree: int = 3
    trunc_primes: list = field(default_factory=lambda: [2, 3])
    trunc_max_vars: int = 2
    trunc_max_degree: int = 3
    product_basis: list = field(default_factory=lambda: list(PRODUCT_BASIS))
    duplication_base_max: int = 12
    quotient_base_max: int = 16
    localization_base_max: int = 36
    size_cap: int | None = None
    ideal_cap: int | None = None
    extra: list = field(default_factory=list)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown corpus config keys: {sorted(unknown)}")
        return cls(**data)


def _within_cap(expr, cfg):
    try:
        return evaluate(expr, cfg.size_cap)
    except Exception as exc:  # noqa: BLE001 - any failure just means "not a base ring"
        if isinstance(getattr(exc, "cause", exc), SizeCapExceeded):
            return None
        raise


def generate(cfg: CorpusConfig):
    """``(expressions, skips)``; expressions are deduplicated, in generation order."""
    exprs, skips = [], []
    fam = set(cfg.families)

    def add(e):
        if e not in seen:
            seen.add(e)
            exprs.append(e)

    seen = set()
    base = []
    if "zmod" in fam:
        base += [f"Z/{n}" for n in range(cfg.zmod_min, cfg.zmod_max + 1)]
    if "polyquot" in fam:
        for p in cfg.poly_primes:
            for d in range(1, cfg.poly_max_degree + 1):
                for f in polys.monic_polys(p, d):
                    base.append(f"GF({p})[X]/({polys.format_poly(f)})")
    if "trunc" in fam:
        for p in cfg.trunc_primes:
            for k in range(1, cfg.trunc_max_vars + 1):
                for d in range(1, cfg.trunc_max_degree + 1):
                    base.append(f"trunc({p},{k},{d})")
    if "products" in fam:
        basis = cfg.product_basis
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                base.append(f"prod({basis[i]},{basis[j]})")
    base += list(cfg.extra)

    rings_ = []
    for e in base:
        R = _within_cap(e, cfg)
        if R is None:
            skips.append(f"{e}: size cap")
            continue
        add(R.label)
        rings_.append(R)

    for R in rings_:
        need_lattice = (("duplications" in fam and R.size <= cfg.duplication_base_max)
                        or ("quotients" in fam and R.size <= cfg.quotient_base_max)
                        or ("localizations" in fam and R.size <= cfg.localization_base_max))
        if not need_lattice:
            continue
        try:
            ideals = all_ideals(R, cfg.ideal_cap)
        except EnumerationOverflow as exc:
            skips.append(f"{R.label}: {exc}")
            continue
        if "duplications" in fam and R.size <= cfg.duplication_base_max:
            for I in ideals:
                if R.size * len(I) <= _cap(cfg):
                    add(f"dup({R.label}, {I.expr()})")
                else:
                    skips.append(f"dup({R.label}, {I.expr()}): size cap")
        if "quotients" in fam and R.size <= cfg.quotient_base_max:
            for I in ideals:
                if not I.is_whole:
                    add(f"quot({R.label}, {I.expr()})")
        if "localizations" in fam and R.size <= cfg.localization_base_max:
            for m in maximal_ideals(R, cfg.ideal_cap):
                add(f"loc({R.label}, {m.expr()})")
    return exprs, skips


def _cap(cfg):
    return size_cap(cfg.size_cap)


def ring_report(expr, cap=None, ideal_limit=None) -> dict:
    """One JSON-ready report; everything except ``durations_ms`` is deterministic."""
    R = evaluate(expr, cap)
    rep = cross_validate(R, ideal_limit)
    cert = rep.certificate.as_json() if isinstance(rep.certificate, PairCertificate) else None
    return {
        "version": __version__,
        "expr": expr,
        "size": R.size,
        "kind": R.kind,
        "verdicts": dict(sorted(rep.verdicts.items())),
        "certificate": cert,
        "cross": {
            "agreement": rep.agreement,
            "discrepancies": rep.discrepancies,
            "checks": [{"name": c.name, "holds": c.holds, "lhs": c.lhs, "rhs": c.rhs} for c in rep.checks],
        },
        "skips": rep.skips,
        "durations_ms": {k: round(v * 1000, 3) for k, v in sorted(rep.durations.items())},
    }


def _worker(args):
    return ring_report(*args)


def comparison_payload(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "durations_ms"}


@dataclass
class CorpusResult:
    reports: list
    skips: list

    @property
    def discrepancies(self):
        return [(r["expr"], d) for r in self.reports for d in r["cross"]["discrepancies"]]

    @property
    def exit_status(self):
        return 4 if self.discrepancies else 0

    def summary(self):
        check_counts = {}
        for r in self.reports:
            for c in r["cross"]["checks"]:
                ok, total = check_counts.get(c["name"], (0, 0))
                check_counts[c["name"]] = (ok + c["holds"], total + 1)
        return {
            "version": __version__,
            "rings": len(self.reports),
            "pf_rings": sum(bool(r["verdicts"].get("condition4")) for r in self.reports),
            "discrepancies": [list(d) for d in self.discrepancies],
            "skips": len(self.skips) + sum(len(r["skips"]) for r in self.reports),
            "checks": {k: {"holds": ok, "total": t} for k, (ok, t) in sorted(check_counts.items())},
        }


def run_corpus(cfg: CorpusConfig | None = None, jobs=1, on_report=None) -> CorpusResult:
    cfg = cfg or CorpusConfig()
    exprs, skips = generate(cfg)
    tasks = [(e, cfg.size_cap, cfg.ideal_cap) for e in exprs]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_worker, tasks, chunksize=4))
    else:
        reports = [_worker(t) for t in tasks]
    reports.sort(key=lambda r: r["expr"])
    if on_report:
        for r in reports:
            on_report(r)
    return CorpusResult(reports, skips)


def write_reports(result: CorpusResult, directory):
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "reports.jsonl"), "w") as fh:
        for r in result.reports:
            fh.write(json.dumps(r, sort_keys=True) + "\n")
    with open(os.path.join(directory, "summary.json"), "w") as fh:
        json.dump(result.summary(), fh, indent=2, sort_keys=True)
        fh.write("\n")
