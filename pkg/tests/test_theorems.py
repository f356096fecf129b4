import pytest

from oracles import brute_pf
from pflab import PflabError, all_ideals, cross_validate, ideal_generate, is_pf, product, zmod
from pflab.dsl import evaluate
from pflab.ideals import is_local
from pflab.rings import dup_pair, duplication
from pflab.theorems import (
    check_local_duplication, check_localization_closure, check_retract, check_retract_identity,
    check_wgldim_criterion, criterion_duplication, criterion_localizations, criterion_polyquot,
    criterion_primary_quotient, criterion_product, criterion_zmod,
)


def test_squarefree_criteria():
    assert not criterion_zmod(4)
    assert criterion_zmod(30)
    assert criterion_zmod(2)
    with pytest.raises(PflabError):
        criterion_zmod(1)
    assert not criterion_polyquot(2, [0, 0, 1])
    assert criterion_polyquot(2, [0, 1, 1])
    assert criterion_polyquot(3, [0, 1])
    # X^2 + 1 over F_2 is (X + 1)^2 although its derivative is 0
    assert not criterion_polyquot(2, [1, 0, 1])
    with pytest.raises(PflabError):
        criterion_polyquot(4, [0, 1])
    with pytest.raises(PflabError):
        criterion_polyquot(3, [0, 2])


def test_primary_quotient_examples():
    Z12 = zmod(12)
    assert criterion_primary_quotient(Z12, ideal_generate(Z12, [4])) == (False, False)
    assert criterion_primary_quotient(Z12, ideal_generate(Z12, [3])) == (True, True)
    assert criterion_primary_quotient(Z12, ideal_generate(Z12, [6])) == (False, False)
    with pytest.raises(PflabError):
        criterion_primary_quotient(Z12, ideal_generate(Z12, [1]))


def test_duplication_examples():
    Z6, Z4 = zmod(6), zmod(4)
    assert criterion_duplication(Z6, ideal_generate(Z6, [3])) == (True, True)
    assert criterion_duplication(Z4, ideal_generate(Z4, [2])) == (False, False)
    for R in (Z6, Z4, zmod(12)):
        lhs, rhs = criterion_duplication(R, ideal_generate(R, []))
        assert lhs == rhs == is_pf(R).verdict


def test_product_examples():
    assert criterion_product([zmod(4), zmod(3)]) == (False, False)
    assert criterion_product([zmod(2), zmod(3)]) == (True, True)
    lhs, rhs = criterion_product([zmod(9)])
    assert lhs == rhs


def test_localization_examples():
    assert criterion_localizations(zmod(12)) == (False, False)
    assert criterion_localizations(zmod(30)) == (True, True)
    assert criterion_localizations(zmod(7)) == (True, True)
    assert check_localization_closure(zmod(30))
    assert check_localization_closure(zmod(12))
    assert check_localization_closure(product([zmod(2), zmod(2)]))


def test_wgldim_criterion_examples():
    assert check_wgldim_criterion(zmod(30)) == (True, True)
    assert check_wgldim_criterion(zmod(12)) == (False, False)
    assert check_wgldim_criterion(evaluate("trunc(2,2,2)")) == (False, False)


def test_retract_checks():
    D = evaluate("dup(Z/6, ideal(3))")
    assert check_retract(D) and check_retract_identity(D)
    assert check_local_duplication(D)
    D = evaluate("dup(Z/4, ideal(2))")
    assert check_local_duplication(D) and not is_pf(D).verdict
    with pytest.raises(PflabError):
        check_retract_identity(zmod(4))


@pytest.mark.parametrize("expr", ["Z/4", "Z/8", "Z/9", "GF(2)[X]/(X^3)", "trunc(2,2,2)", "trunc(3,1,3)"])
def test_local_bases_never_give_pf_duplications(expr):
    R = evaluate(expr)
    assert is_local(R)
    for I in all_ideals(R):
        if not (I.is_zero or I.is_whole):
            assert not brute_pf(duplication(R, I))


def test_cross_validate_examples():
    rep = cross_validate(zmod(30))
    assert rep.agreement and rep.pf and len(rep.checks) >= 5
    rep = cross_validate(zmod(4))
    assert rep.agreement and set(rep.verdicts.values()) == {False}
    rep = cross_validate(evaluate("dup(Z/6, ideal(3))"))
    assert rep.agreement and "retract" in {c.name for c in rep.checks}


def test_cross_validate_records_disagreement(monkeypatch):
    import pflab.theorems as th

    monkeypatch.setattr(th, "criterion_localizations", lambda R, cap=None: (True, False))
    rep = th.cross_validate(zmod(6))
    assert not rep.agreement
    assert any("localization-domains" in d for d in rep.discrepancies)


def test_cross_validate_records_overflow_as_skip():
    rep = cross_validate(product([zmod(2)] * 6), cap=16)
    assert rep.skips and rep.agreement
    assert "condition4" in rep.verdicts


def _subring_pairs(bases):
    """Explicit subring inclusions: R ≅ diagonal ⊆ R⋈I ⊆ R×R."""
    for R in bases:
        RR = product([R, R])
        for I in all_ideals(R):
            D = duplication(R, I)
            yield f"diag({R.label}) ⊆ {D.label}", R, D
            yield f"{D.label} ⊆ {RR.label}", D, RR


def test_subring_inclusions_are_genuine():
    R = zmod(6)
    RR = product([R, R])
    D = duplication(R, ideal_generate(R, [3]))
    embed = {dup_pair(D, a): a for a in range(D.size)}
    for a in range(D.size):
        for b in range(D.size):
            pa, pb = dup_pair(D, a), dup_pair(D, b)
            s = tuple((x + y) % 6 for x, y in zip(pa, pb))
            p = tuple((x * y) % 6 for x, y in zip(pa, pb))
            assert embed[s] == D.add(a, b) and embed[p] == D.mul(a, b)
    assert RR.size == 36


def test_subring_of_pf_ring_need_not_be_pf():
    bases = [evaluate(e) for e in ("Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "Z/9", "Z/10", "Z/12",
                                   "GF(2)[X]/(X^2)", "GF(2)[X]/(X^2+X)", "trunc(2,2,2)", "prod(Z/2,Z/3)")]
    for name, S, T in _subring_pairs(bases):
        if is_pf(T).verdict and not is_pf(S).verdict:
            return
    pytest.skip("no finite witness: a finite PF ring is a product of fields, and so is each of its subrings")
