import json
import threading

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import is_isomorphic, tables
from pflab import (
    AxiomViolation, RingConstructionError, SizeCapExceeded, dup_retract, duplication, element_census,
    ideal_generate, load_table_ring, localize_at_maximal, poly_quot, product, quotient, table_ring,
    truncated_poly, zmod,
)
from pflab.ideals import maximal_ideals
from pflab.rings import component, dup_pair, projection, ring_axiom_violation

SMALL_RINGS = [
    lambda: zmod(1), lambda: zmod(4), lambda: zmod(12), lambda: zmod(30),
    lambda: poly_quot(2, [0, 1, 1]), lambda: poly_quot(3, [1, 0, 1]), lambda: truncated_poly(2, 2, 2),
    lambda: truncated_poly(3, 1, 3), lambda: product([zmod(2), zmod(4)]),
    lambda: _dup_z6(),
]


def _dup_z6():
    Z6 = zmod(6)
    return duplication(Z6, ideal_generate(Z6, [3]))


@pytest.mark.parametrize("build", SMALL_RINGS)
def test_axioms_hold_exhaustively(build):
    assert ring_axiom_violation(build(), exhaustive=True) is None


def test_sampled_axioms_on_a_large_ring():
    assert ring_axiom_violation(truncated_poly(3, 2, 3), exhaustive=False, samples=100_000) is None


def test_zmod_examples():
    R = zmod(1)
    assert R.size == 1 and R.zero == R.one
    R = zmod(4)
    assert R.mul(2, 2) == 0
    assert R.census.nilpotents == {0, 2}
    R = zmod(30)
    assert R.census.is_reduced and len(R.census.units) == 8
    with pytest.raises(RingConstructionError):
        zmod(0)


def test_poly_quot_examples():
    split = poly_quot(2, [0, 1, 1])
    assert split.size == 4 and len(split.census.idempotents) == 4
    dual = poly_quot(2, [0, 0, 1])
    assert dual.census.nilpotents == {0, dual_x(dual)} and not dual.census.is_reduced
    F3 = poly_quot(3, [0, 1])
    assert F3.size == 3 and F3.census.is_domain
    with pytest.raises(RingConstructionError):
        poly_quot(4, [0, 1])
    with pytest.raises(RingConstructionError):
        poly_quot(3, [0, 2])


def dual_x(R):
    return next(a for a in range(R.size) if R.format(a) == "X")


def test_truncated_poly_examples():
    R = truncated_poly(2, 2, 2)
    assert R.size == 8
    x = next(a for a in range(8) if R.format(a) == "X")
    y = next(a for a in range(8) if R.format(a) == "Y")
    assert R.mul(x, y) == R.zero
    assert len(maximal_ideals(R)) == 1
    assert is_isomorphic(truncated_poly(2, 1, 2), poly_quot(2, [0, 0, 1]))
    assert is_isomorphic(truncated_poly(3, 1, 1), zmod(3))
    with pytest.raises(SizeCapExceeded):
        truncated_poly(3, 3, 3)


def test_product_examples():
    assert is_isomorphic(product([zmod(2), zmod(3)]), zmod(6))
    Z4 = zmod(4)
    assert product([Z4]) is Z4
    V = product([zmod(2), zmod(2)])
    assert V.size == 4 and V.census.idempotents == set(range(4))
    P = product([zmod(3), zmod(5)])
    for a in range(P.size):
        for b in range(P.size):
            ca, cb = component(P, a), component(P, b)
            assert component(P, P.mul(a, b)) == ((ca[0] * cb[0]) % 3, (ca[1] * cb[1]) % 5)
    with pytest.raises(SizeCapExceeded):
        product([zmod(64), zmod(64), zmod(2)])


def test_quotient_examples():
    Z12 = zmod(12)
    Q = quotient(Z12, ideal_generate(Z12, [3]))
    assert Q.size == 3 and is_isomorphic(Q, zmod(3))
    Q = quotient(Z12, ideal_generate(Z12, [4]))
    assert Q.size == 4 and is_isomorphic(Q, zmod(4))
    assert is_isomorphic(quotient(Z12, ideal_generate(Z12, [])), Z12)
    # representatives are the smallest index in each coset
    Q = quotient(Z12, ideal_generate(Z12, [4]))
    assert list(Q.origin["representatives"]) == [0, 1, 2, 3]
    assert projection(Q).is_unital_homomorphism()


def test_duplication_examples():
    Z6 = zmod(6)
    D = duplication(Z6, ideal_generate(Z6, [3]))
    assert D.size == 12
    assert dup_pair(D, D.one) == (1, 1)
    phi, psi = dup_retract(D)
    assert psi(phi(5)) == 5
    assert D.mul(phi(2), phi(3)) == phi(0)
    two_five = next(a for a in range(D.size) if dup_pair(D, a) == (2, 5))
    assert psi(two_five) == 2
    assert phi.is_unital_homomorphism() and psi.is_unital_homomorphism()
    assert is_isomorphic(duplication(Z6, ideal_generate(Z6, [])), Z6)


def test_duplication_carrier_is_the_set_of_pairs():
    Z4 = zmod(4)
    I = ideal_generate(Z4, [2])
    D = duplication(Z4, I)
    pairs = {dup_pair(D, a) for a in range(D.size)}
    assert pairs == {(r, (r + i) % 4) for r in range(4) for i in (0, 2)}
    for a in range(D.size):
        for b in range(D.size):
            (r, s), (t, u) = dup_pair(D, a), dup_pair(D, b)
            assert dup_pair(D, D.add(a, b)) == ((r + t) % 4, (s + u) % 4)
            assert dup_pair(D, D.mul(a, b)) == ((r * t) % 4, (s * u) % 4)
    nil = {dup_pair(D, a) for a in D.census.nilpotents}
    assert (0, 2) in nil and not D.census.is_reduced
    # nilpotents map into nilpotents of R×R componentwise
    assert all(r in Z4.census.nilpotents and s in Z4.census.nilpotents for r, s in nil)


def test_localization_examples():
    Z12 = zmod(12)
    L, kernel = localize_at_maximal(Z12, ideal_generate(Z12, [2]))
    assert kernel.elements == (0, 4, 8)
    assert is_isomorphic(L, zmod(4))
    Z30 = zmod(30)
    L, _ = localize_at_maximal(Z30, ideal_generate(Z30, [5]))
    assert is_isomorphic(L, zmod(5))
    F = zmod(7)
    L, kernel = localize_at_maximal(F, ideal_generate(F, []))
    assert kernel.is_zero and L.size == 7
    with pytest.raises(Exception):
        localize_at_maximal(Z12, ideal_generate(Z12, [4]))


@pytest.mark.parametrize("build", SMALL_RINGS[1:])
def test_localizations_are_local_and_invert_the_complement(build):
    R = build()
    for m in maximal_ideals(R):
        L, _ = localize_at_maximal(R, m)
        assert len(maximal_ideals(L)) == 1
        image = L.origin["projection"]
        units = L.census.units
        assert all(int(image[s]) in units for s in range(R.size) if s not in m)


def test_census_matches_definitions():
    R = zmod(6)
    assert R.census.idempotents == {0, 1, 3, 4}
    for build in SMALL_RINGS:
        R = build()
        add, mul = tables(R)
        n = R.size
        c = element_census(R)
        units = {a for a in range(n) if R.one in mul[a]}
        assert c.units == units
        assert not (c.units & c.zero_divisors)
        if n > 1:
            assert c.units | c.zero_divisors == set(range(n))
        assert c.idempotents == {a for a in range(n) if mul[a][a] == a}
        nil = set()
        for a in range(n):
            x = a
            for _ in range(n):
                if x == R.zero:
                    nil.add(a)
                    break
                x = mul[x][a]
        assert c.nilpotents == nil
        assert c.is_reduced == (nil == {R.zero})


def _write(tmp_path, data):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(data))
    return path


def test_table_ring_round_trip_with_nonstandard_zero(tmp_path):
    # Z/3 relabelled: index k stands for (k + 1) mod 3
    n, val = 3, lambda k: (k + 1) % 3
    idx = {val(k): k for k in range(n)}
    add = [[idx[(val(a) + val(b)) % 3] for b in range(n)] for a in range(n)]
    mul = [[idx[(val(a) * val(b)) % 3] for b in range(n)] for a in range(n)]
    R = load_table_ring(_write(tmp_path, {"size": 3, "zero": idx[0], "one": idx[1], "add": add, "mul": mul}))
    assert R.zero == 2 and R.one == 0 and R.kind == "table"
    assert is_isomorphic(R, zmod(3))


def test_table_ring_reports_first_violation(tmp_path):
    Z4 = zmod(4)
    add, mul = map(lambda t: [list(r) for r in t], tables(Z4))
    mul[2][3] = 1  # breaks commutativity
    with pytest.raises(AxiomViolation) as err:
        load_table_ring(_write(tmp_path, {"size": 4, "zero": 0, "one": 1, "add": add, "mul": mul}))
    assert err.value.axiom == "multiplicative commutativity"
    add, mul = map(lambda t: [list(r) for r in t], tables(Z4))
    mul[2][2] = 2
    with pytest.raises(AxiomViolation) as err:
        table_ring(add, mul, 0, 1)
    assert err.value.axiom in {"multiplicative associativity", "distributivity"}
    with pytest.raises(AxiomViolation):
        load_table_ring(_write(tmp_path, {"size": 4, "zero": 0, "add": add, "mul": mul}))


def test_lazy_tables_are_built_once_under_contention():
    R = zmod(1000)
    seen, barrier = [], threading.Barrier(8)

    def grab():
        barrier.wait()
        seen.append(R.mul_table)

    threads = [threading.Thread(target=grab) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(t is seen[0] for t in seen)
    assert not seen[0].flags.writeable


@given(st.integers(2, 40), st.integers(0, 39), st.integers(0, 39), st.integers(0, 39))
def test_zmod_arithmetic_matches_integers(n, a, b, c):
    R = zmod(n)
    a, b, c = a % n, b % n, c % n
    assert R.add(a, b) == (a + b) % n and R.mul(a, b) == (a * b) % n
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    x = R(a) * R(b) - R(c)
    assert x.index == (a * b - c) % n


@given(st.sampled_from([2, 3]), st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_poly_quot_axioms(p, low):
    f = [c % p for c in low] + [1]
    R = poly_quot(p, f)
    assert R.size == p ** (len(f) - 1)
    assert ring_axiom_violation(R) is None


def test_vectorized_ops_agree_with_scalar_ops():
    R = truncated_poly(3, 2, 2)
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, R.size, size=(2, 200))
    assert list(R.add_v(a, b)) == [R.add(int(x), int(y)) for x, y in zip(a, b)]
    assert list(R.mul_v(a, b)) == [R.mul(int(x), int(y)) for x, y in zip(a, b)]
