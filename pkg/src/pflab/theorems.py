"""Executable PF criteria and the per-ring cross-validation report.

Biconditional criteria return ``(lhs, rhs)`` pairs that must coincide;
one-directional checks return a single boolean that must be true.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import polys
from .errors import EnumerationOverflow, PflabError, SizeCapExceeded
from .flatness import METHODS, is_pf, verify_witness_map, wgldim_le_1
from .ideals import all_ideals, classify_ideal, is_arithmetical, is_local, is_pure, maximal_ideals
from .rings import duplication, dup_retract, localize_at_maximal, product, quotient

WGLDIM_LATTICE_LIMIT = 200


def _pf(R, cap=None) -> bool:
    return R.memo(("pf",), lambda: is_pf(R, "condition4").verdict)


def criterion_zmod(n: int) -> bool:
    """Z/n is PF iff n is squarefree."""
    if n < 2:
        raise PflabError("the squarefree criterion needs n >= 2")
    return all(e == 1 for e in polys.factorize(n).values())


def criterion_polyquot(p: int, f) -> bool:
    """F_p[X]/(f) is PF iff f is squarefree, i.e. gcd(f, f') = 1."""
    if not polys.is_prime(p):
        raise PflabError(f"{p} is not prime")
    f = polys.trim(list(f), p)
    if polys.degree(f) < 1 or f[-1] != 1:
        raise PflabError("f must be monic of degree >= 1")
    return polys.is_squarefree(f, p)


def criterion_primary_quotient(R, I, cap=None):
    """lhs = (I primary and R/I PF), rhs = (I prime)."""
    if I.is_whole:
        raise PflabError("the primary-quotient criterion needs a proper ideal")
    cls = classify_ideal(R, I)
    lhs = cls.is_primary and _pf(quotient(R, I), cap)
    return lhs, cls.is_prime


def criterion_duplication(R, I, cap=None):
    """lhs = PF(R ⋈ I), rhs = PF(R) and I pure."""
    D = duplication(R, I, cap=None)
    return _pf(D, cap), _pf(R, cap) and is_pure(R, I, cap)


def criterion_product(factors, cap=None):
    """lhs = PF(∏ R_i), rhs = every R_i is PF."""
    return _pf(product(factors), cap), all(_pf(F, cap) for F in factors)


def criterion_localizations(R, cap=None):
    """lhs = PF(R), rhs = every R_m is a domain (no nonzero zero divisors)."""
    rhs = True
    for m in maximal_ideals(R, cap):
        L, _ = localize_at_maximal(R, m)
        if any(z != L.zero for z in L.census.zero_divisors):
            rhs = False
            break
    return _pf(R, cap), rhs


def check_localization_closure(R, cap=None) -> bool:
    """PF(R) implies PF(R_m) for every maximal m."""
    if not _pf(R, cap):
        return True
    return all(_pf(localize_at_maximal(R, m)[0], cap) for m in maximal_ideals(R, cap))


def check_wgldim_criterion(R, cap=None):
    """lhs = every ideal flat, rhs = arithmetical and PF."""
    return wgldim_le_1(R, cap), is_arithmetical(R, cap) and _pf(R, cap)


def check_retract(D, cap=None) -> bool:
    """PF(R ⋈ I) implies PF(R), through the retraction onto the base."""
    return not _pf(D, cap) or _pf(D.origin["base"], cap)


def check_retract_identity(D) -> bool:
    phi, psi = dup_retract(D)
    base = D.origin["base"]
    return (bool(np.array_equal(psi.table[phi.table], base.indices))
            and phi.is_unital_homomorphism() and psi.is_unital_homomorphism())


def check_local_duplication(D, cap=None) -> bool:
    """A local base with a nonzero proper ideal never gives a PF duplication."""
    R, I = D.origin["base"], D.origin["ideal"]
    if I.is_zero or I.is_whole or not is_local(R, cap):
        return True
    return not _pf(D, cap)


# -- cross validation -------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    holds: bool
    lhs: bool | None = None
    rhs: bool | None = None
    duration: float = 0.0


@dataclass
class CrossReport:
    label: str
    size: int
    kind: str
    verdicts: dict = field(default_factory=dict)
    certificate: object = None
    checks: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    skips: list = field(default_factory=list)
    durations: dict = field(default_factory=dict)

    @property
    def agreement(self) -> bool:
        return not self.discrepancies

    @property
    def pf(self):
        return self.verdicts.get("condition4")


def _run(report, name, fn):
    t0 = time.perf_counter()
    try:
        out = fn()
    except (EnumerationOverflow, SizeCapExceeded) as exc:
        report.skips.append(f"{name}: {exc}")
        return None
    finally:
        report.durations[name] = time.perf_counter() - t0
    if isinstance(out, tuple):
        lhs, rhs = out
        res = CheckResult(name, lhs == rhs, lhs, rhs, report.durations[name])
    else:
        res = CheckResult(name, bool(out), duration=report.durations[name])
    report.checks.append(res)
    if not res.holds:
        detail = f" (lhs={res.lhs}, rhs={res.rhs})" if res.lhs is not None else ""
        report.discrepancies.append(f"{name}{detail}")
    return res


def cross_validate(R, cap=None) -> CrossReport:
    """Run every applicable criterion on R and record any disagreement."""
    report = CrossReport(R.label, R.size, R.kind)

    for method in METHODS:
        t0 = time.perf_counter()
        try:
            v = is_pf(R, method, cap)
        except (EnumerationOverflow, SizeCapExceeded) as exc:
            report.skips.append(f"{method}: {exc}")
            continue
        finally:
            report.durations[method] = time.perf_counter() - t0
        report.verdicts[method] = v.verdict
        if method == "condition4":
            report.certificate = v.certificate
            R.memo(("pf",), lambda: v.verdict)
            if v.certificate is not None and not v.certificate.verify(R):
                report.discrepancies.append("certificate re-verification failed")
            if v.witnesses is not None and not verify_witness_map(R, v.witnesses):
                report.discrepancies.append("witness map re-verification failed")
    if len(set(report.verdicts.values())) > 1:
        report.discrepancies.append(f"PF routes disagree: {report.verdicts}")

    pf = report.verdicts.get("condition4")
    if pf:
        _run(report, "pf-implies-reduced", lambda: R.census.is_reduced)
    _run(report, "localization-domains", lambda: criterion_localizations(R, cap))
    _run(report, "localization-closure", lambda: check_localization_closure(R, cap))

    if R.kind == "modular" and R.size >= 2:
        _run(report, "squarefree", lambda: (pf, criterion_zmod(R.size)))
    if R.kind == "poly-quotient":
        _run(report, "squarefree", lambda: (pf, criterion_polyquot(R.origin["p"], R.origin["f"])))

    def wgldim():
        if len(all_ideals(R, cap)) > WGLDIM_LATTICE_LIMIT:
            raise EnumerationOverflow(R.label, WGLDIM_LATTICE_LIMIT)
        return check_wgldim_criterion(R, cap)
    _run(report, "wgldim-arithmetical", wgldim)

    if R.kind == "product":
        _run(report, "product", lambda: (pf, all(_pf(F, cap) for F in R.origin["factors"])))
    if R.kind == "quotient" and not R.origin["ideal"].is_whole:
        base, I = R.origin["base"], R.origin["ideal"]
        _run(report, "primary-quotient", lambda: criterion_primary_quotient(base, I, cap))
    if R.kind == "duplication":
        base, I = R.origin["base"], R.origin["ideal"]
        _run(report, "duplication", lambda: (pf, _pf(base, cap) and is_pure(base, I, cap)))
        _run(report, "retract", lambda: check_retract(R, cap))
        _run(report, "retract-identity", lambda: check_retract_identity(R))
        _run(report, "local-duplication", lambda: check_local_duplication(R, cap))
    return report
