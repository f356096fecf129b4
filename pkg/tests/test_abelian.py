import random
from math import prod

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import invariant_factors as sympy_invariants
from sympy.polys.domains import ZZ

from oracles import cokernel_order, tensor_order
from pflab import IntMatrix, all_ideals, ideal_generate, module_presentation, product, smith_normal_form, zmod
from pflab.abelian import (
    FiniteModule, RelationLattice, cyclic_module, ideal_module, invariant_factors, is_flat_module,
    module_axiom_violation, quotient_module, ring_module, tensor_over_ring,
)
from pflab.dsl import evaluate

matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m)))


def _check_snf(rows):
    A = IntMatrix(rows)
    U, D, V = smith_normal_form(A)
    assert U @ A @ V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert D.is_diagonal()
    diag = D.diagonal()
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)
    return diag


@given(matrices)
def test_snf_properties(rows):
    _check_snf(rows)


@given(matrices)
def test_snf_matches_sympy(rows):
    diag = _check_snf(rows)
    expected = [abs(int(d)) for d in sympy_invariants(sympy.Matrix(rows), domain=ZZ)]
    expected += [0] * (min(len(rows), len(rows[0])) - len(expected))
    assert diag == expected


def test_snf_examples():
    _, D, _ = smith_normal_form([[2, 4], [6, 8]])
    assert D.diagonal() == [2, 4]
    U, D, V = smith_normal_form(IntMatrix.identity(3))
    assert D == IntMatrix.identity(3)
    _, D, _ = smith_normal_form([[0]])
    assert D.tolist() == [[0]]
    U, D, V = smith_normal_form(IntMatrix([], cols=3))
    assert D.shape == (0, 3) and V == IntMatrix.identity(3)


def test_snf_handles_growth_exactly():
    rows = [[10 ** 30 + k * j for k in range(4)] for j in range(1, 5)]
    rows[0][0] += 7
    _check_snf(rows)


def test_bareiss_determinant_matches_sympy():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        assert IntMatrix(rows).det() == sympy.Matrix(rows).det()


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=6))
def test_relation_lattice_order_matches_cokernel(rows):
    e = 12
    lattice = RelationLattice(3, e)
    for r in rows:
        lattice.add(r)
    full = rows + [[e if k == j else 0 for k in range(3)] for j in range(3)]
    assert lattice.order == cokernel_order(full, 3)


def test_invariant_factor_examples():
    Z12 = zmod(12)
    assert module_presentation(ring_module(Z12)).invariant_factors == [12]
    P = product([zmod(2), zmod(4)])
    assert module_presentation(ring_module(P)).invariant_factors == [2, 4]
    Z4 = zmod(4)
    assert module_presentation(ideal_module(ideal_generate(Z4, [2]))).invariant_factors == [2]
    assert invariant_factors([[2, 0], [0, 3]]) == [6]
    assert invariant_factors([[2, 0]]) == [2, 0]


@given(st.lists(st.integers(2, 12), min_size=1, max_size=3))
def test_presentation_round_trip(orders):
    P = product([zmod(n) for n in orders])
    pres = module_presentation(ring_module(P))
    expected = [int(d) for d in sympy_invariants(sympy.diag(*orders), domain=ZZ) if d != 1]
    assert pres.invariant_factors == expected
    assert pres.order == prod(orders) == P.size


@pytest.mark.parametrize("expr", ["Z/12", "prod(Z/2,Z/4)", "trunc(2,2,2)", "dup(Z/4, ideal(2))", "GF(3)[X]/(X^2)"])
def test_coordinates_are_consistent(expr):
    R = evaluate(expr)
    for I in all_ideals(R):
        for M in (ideal_module(I), quotient_module(R, I)):
            pres = module_presentation(M)
            coords = pres.coordinate_map
            # distinct elements have distinct coordinates modulo the relations
            assert len({tuple(c) for c in coords}) == M.size
            assert pres.order == M.size
            # coordinates are additive modulo the relation lattice
            lattice_order = cokernel_order(pres.relations.tolist(), pres.generator_count) if pres.generator_count else 1
            assert lattice_order == M.size
            gens = np.asarray(pres.generators, dtype=np.int64)
            for x in range(M.size):
                total = M.zero
                for g, c in zip(gens, coords[x]):
                    for _ in range(int(c)):
                        total = int(M.add_v(total, g))
                assert total == x


@pytest.mark.parametrize("expr", ["Z/4", "Z/6", "trunc(2,2,2)", "dup(Z/4, ideal(2))"])
def test_module_axioms(expr):
    R = evaluate(expr)
    for I in all_ideals(R):
        for M in (ideal_module(I), quotient_module(R, I)):
            assert module_axiom_violation(M) is None


def _brute_tensor(M, N):
    R = M.ring
    return tensor_order(
        R, range(M.size), range(N.size),
        lambda r, m: int(M.act_v(r, m)), lambda r, n: int(N.act_v(r, n)),
        lambda a, b: int(M.add_v(a, b)), lambda a, b: int(N.add_v(a, b)), M.zero, N.zero)


@pytest.mark.parametrize("expr", ["Z/4", "Z/6", "Z/8", "Z/9", "GF(2)[X]/(X^2)", "prod(Z/2,Z/2)"])
def test_tensor_order_matches_free_group_oracle(expr):
    R = evaluate(expr)
    modules = []
    for I in all_ideals(R):
        modules += [ideal_module(I), quotient_module(R, I)]
    for M in modules:
        for N in modules:
            if M.size * N.size > 36:
                continue
            T, _ = tensor_over_ring(M, N)
            assert T.order == _brute_tensor(M, N)


def test_tensor_over_trunc_matches_oracle():
    R = evaluate("trunc(2,2,2)")
    ideals = [I for I in all_ideals(R) if len(I) <= 4]
    for I in ideals:
        for J in ideals:
            T, _ = tensor_over_ring(ideal_module(I), ideal_module(J))
            assert T.order == _brute_tensor(ideal_module(I), ideal_module(J))


@pytest.mark.parametrize("expr", ["Z/12", "trunc(2,2,2)", "dup(Z/6, ideal(3))", "GF(3)[X]/(X^2+1)", "prod(Z/4,Z/3)"])
def test_tensor_symmetry_and_relation_sets(expr):
    R = evaluate(expr)
    ideals = all_ideals(R)
    modules = [ideal_module(I) for I in ideals] + [quotient_module(R, I) for I in ideals]
    for M in modules:
        for N in modules:
            T, k = tensor_over_ring(M, N)
            T2, k2 = tensor_over_ring(N, M)
            assert T.order == T2.order
            if M.is_submodule_of_ring and N.is_submodule_of_ring:
                assert k == k2 or k is None
            T_all, k_all = tensor_over_ring(M, N, relations="all")
            assert (T_all.order, k_all) == (T.order, k)


def test_tensor_examples():
    Z4 = zmod(4)
    two = ideal_module(ideal_generate(Z4, [2]))
    T, kernel = tensor_over_ring(two, two)
    assert (T.order, kernel) == (2, 2)
    for expr in ("Z/12", "trunc(2,2,2)", "dup(Z/6, ideal(3))"):
        R = evaluate(expr)
        for J in all_ideals(R):
            T, kernel = tensor_over_ring(ring_module(R), ideal_module(J))
            assert kernel == 1 and T.order == len(J)
    T, _ = tensor_over_ring(ring_module(Z4), ideal_module(ideal_generate(Z4, [])))
    assert T.order == 1


def test_flatness_examples():
    Z4 = zmod(4)
    assert not is_flat_module(Z4, ideal_module(ideal_generate(Z4, [2])))
    for expr in ("Z/4", "Z/12", "trunc(2,2,2)"):
        R = evaluate(expr)
        assert is_flat_module(R, ring_module(R))
    Z6 = zmod(6)
    assert is_flat_module(Z6, ideal_module(ideal_generate(Z6, [3])))


def test_cyclic_module_is_the_principal_ideal():
    Z12 = zmod(12)
    M = cyclic_module(Z12, 8)
    assert M.size == 3 and M.origin == "cyclic-Ra"


def test_modules_need_nested_ideals():
    Z12 = zmod(12)
    with pytest.raises(Exception):
        FiniteModule(Z12, ideal_generate(Z12, [4]), ideal_generate(Z12, [6]), "bad")


def test_tensor_rejects_mixed_rings():
    with pytest.raises(Exception):
        tensor_over_ring(ring_module(zmod(4)), ring_module(zmod(4)))
