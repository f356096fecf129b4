"""Exact integer linear algebra and finite modules over finite rings.

The flatness oracle lives here: ``J ⊗_R M -> M`` is injective exactly when
``|J ⊗_R M|`` equals the order of its image ``J·M``.  Tensor products are
computed from presentations of the additive groups, so every step is
integer arithmetic with Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod

import numpy as np

from ._config import size_cap
from .errors import InvariantBreach, PflabError, SizeCapExceeded
from .ideals import Ideal, additive_generators, all_ideals, principal, span, unit_ideal, zero_ideal


class IntMatrix:
    """A dense integer matrix with arbitrary-precision entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        self.entries = [[int(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else (cols or 0)
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols_t = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols_t] for row in self.entries],
                         cols=other.cols)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.entries == other.entries

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self):
        return self.rows, self.cols

    def tolist(self):
        return [list(row) for row in self.entries]

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self):
        return all(x == 0 for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j)

    def det(self):
        """Fraction-free Bareiss elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self):
        return f"IntMatrix({self.entries})"


def smith_normal_form(A):
    """Return ``(U, D, V)`` with ``D = U·A·V``, U and V unimodular, D in Smith form.

    Pivoting takes the smallest nonzero absolute value in the remaining
    block, clears its row and column by division with remainder, and folds
    any row that breaks the divisibility chain back into the pivot row.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        D[dst] = [x - q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, D[i][t] // D[t][t])
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, D[t][j] // D[t][t])
            leftover = [(i, t) for i in range(t + 1, m) if D[i][t]] + [(t, j) for j in range(t + 1, n) if D[t][j]]
            if leftover:
                i, j = min(leftover, key=lambda ij: abs(D[ij[0]][ij[1]]))
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return IntMatrix(U, cols=m), IntMatrix(D, cols=n), IntMatrix(V, cols=n)


def invariant_factors(relations):
    """Nontrivial invariant factors of Z^n / rowspace(relations).

    A zero diagonal entry (infinite cyclic summand) is reported as 0.
    """
    if not isinstance(relations, IntMatrix):
        relations = IntMatrix(relations)
    _, D, _ = smith_normal_form(relations)
    diag = D.diagonal() + [0] * (relations.cols - min(relations.rows, relations.cols))
    return [d for d in diag if d != 1]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class RelationLattice:
    """Triangular basis of a relation lattice that contains ``exponent·Z^n``.

    Because every ``exponent·e_k`` lies in the lattice, rows may be reduced
    modulo the exponent, which keeps entries small while relations stream in.
    The quotient order is the product of the pivots.
    """

    def __init__(self, ngens, exponent):
        self.n = ngens
        self.e = exponent
        self.rows = [[exponent if k == j else 0 for k in range(ngens)] for j in range(ngens)]

    def add(self, vec):
        e = self.e
        v = [int(x) % e for x in vec]
        for j in range(self.n):
            if not v[j]:
                continue
            b = self.rows[j]
            if v[j] % b[j] == 0:
                q = v[j] // b[j]
                v = [(x - q * y) % e for x, y in zip(v, b)]
                continue
            g, x, y = _xgcd(b[j], v[j])
            p, q = v[j] // g, b[j] // g
            self.rows[j] = [(x * s + y * t) % e for s, t in zip(b, v)]
            v = [(p * s - q * t) % e for s, t in zip(b, v)]

    @property
    def order(self):
        return prod(self.rows[j][j] for j in range(self.n))

    def matrix(self):
        return IntMatrix(self.rows, cols=self.n)


@dataclass
class AbelianPresentation:
    """A finite abelian group Z^n / rowspace(relations)."""

    generator_count: int
    relations: IntMatrix
    coordinate_map: np.ndarray | None = None
    generators: tuple = ()
    _order: int | None = field(default=None, repr=False)

    @cached_property
    def invariant_factors(self):
        return invariant_factors(self.relations) if self.generator_count else []

    @property
    def order(self):
        if self._order is None:
            self._order = prod(self.invariant_factors)
        return self._order

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1


# -- finite modules ------------------------------------------------------------------


class FiniteModule:
    """The subquotient ``top / bottom`` of R for ideals ``bottom ⊆ top``.

    This one shape covers every module the library needs: an ideal
    (bottom = 0), a cyclic quotient R/I (top = R), R·a, and R itself.
    Element k is the coset whose smallest ring index is ``reps[k]``.
    """

    def __init__(self, ring, top: Ideal, bottom: Ideal, origin):
        if not bottom <= top:
            raise PflabError("bottom ideal must lie inside top ideal")
        self.ring = ring
        self.top = top
        self.bottom = bottom
        self.origin = origin
        members = np.asarray(top.elements, dtype=np.int64)
        low = np.asarray(bottom.elements, dtype=np.int64)
        reps_of = ring.add_block(members, low).min(axis=1)
        reps = np.unique(reps_of)
        cls = np.full(ring.size, -1, dtype=np.int64)
        cls[members] = np.searchsorted(reps, reps_of)
        self.reps = reps
        self.cls = cls
        self.size = len(reps)
        self.zero = int(cls[ring.zero])
        self.key = (top.key(), bottom.key())

    def __repr__(self):
        return f"<FiniteModule {self.origin} {self.top.expr()}/{self.bottom.expr()} of {self.ring.label}>"

    def add_v(self, a, b):
        return self.cls[self.ring.add_v(self.reps[a], self.reps[b])]

    def act_v(self, r, m):
        return self.cls[self.ring.mul_v(r, self.reps[m])]

    @property
    def is_submodule_of_ring(self):
        return self.bottom.is_zero


def ideal_module(I, origin="ideal-submodule") -> FiniteModule:
    R = I.ring
    return R.memo(("module", origin, I.key()), lambda: FiniteModule(R, I, zero_ideal(R), origin))


def quotient_module(R, I) -> FiniteModule:
    return R.memo(("module", "quotient", I.key()), lambda: FiniteModule(R, unit_ideal(R), I, "quotient-R/I"))


def cyclic_module(R, a) -> FiniteModule:
    return ideal_module(principal(R, a), origin="cyclic-Ra")


def ring_module(R) -> FiniteModule:
    return ideal_module(unit_ideal(R), origin="ring-as-module")


def module_axiom_violation(M):
    """First failing module axiom as ``(name, witness)``, or None (exhaustive)."""
    R = M.ring
    ar = np.arange(M.size)
    for x in range(M.size):
        for y in range(M.size):
            s = M.add_v(x, y)
            if s != M.add_v(y, x):
                return "additive commutativity", (x, y)
            if not np.array_equal(M.act_v(R.indices, s), M.add_v(M.act_v(R.indices, x), M.act_v(R.indices, y))):
                return "r(x+y) = rx + ry", (x, y)
    for r in range(R.size):
        for t in range(R.size):
            lhs = M.act_v(R.add(r, t), ar)
            if not np.array_equal(lhs, M.add_v(M.act_v(r, ar), M.act_v(t, ar))):
                return "(r+t)x = rx + tx", (r, t)
            if not np.array_equal(M.act_v(R.mul(r, t), ar), M.act_v(r, M.act_v(t, ar))):
                return "(rt)x = r(tx)", (r, t)
    if not np.array_equal(M.act_v(R.one, ar), ar):
        return "1x = x", ()
    return None


def _element_orders(M):
    ar = np.arange(M.size)
    orders = np.zeros(M.size, dtype=np.int64)
    cur = ar.copy()
    k = 1
    pending = ar
    while len(pending):
        hit = cur[pending] == M.zero
        orders[pending[hit]] = k
        pending = pending[~hit]
        if not len(pending):
            break
        cur[pending] = M.add_v(cur[pending], pending)
        k += 1
    return orders


def module_presentation(M: FiniteModule, cap=None) -> AbelianPresentation:
    """Generators, triangular relations and coordinates of the additive group of M.

    Generators are adjoined greedily, highest additive order first.  When
    generator j is adjoined with relative order t (the least t > 0 with
    t·g_j inside the current span), the relation ``t·e_j - coords(t·g_j)``
    is recorded; these rows generate the whole relation lattice.
    """
    limit = size_cap(cap)
    if M.size > limit:
        raise SizeCapExceeded("module", M.size, limit)

    def build():
        orders = _element_orders(M)
        candidates = sorted(range(M.size), key=lambda x: (-orders[x], x))
        inside = np.zeros(M.size, dtype=bool)
        inside[M.zero] = True
        coord = np.zeros((M.size, 0), dtype=np.int64)
        members = np.array([M.zero])
        gens, rels = [], []
        for x in candidates:
            if inside[x]:
                continue
            j = len(gens)
            coord = np.hstack([coord, np.zeros((M.size, 1), dtype=np.int64)])
            t, mult = 1, x
            while not inside[mult]:
                mult = int(M.add_v(mult, x))
                t += 1
            rels.append((j, t, coord[mult].copy()))
            shift = x
            new_members = [members]
            for c in range(1, t):
                coset = M.add_v(shift, members)
                coord[coset] = coord[members]
                coord[coset, j] = c
                inside[coset] = True
                new_members.append(coset)
                shift = int(M.add_v(shift, x))
            members = np.concatenate(new_members)
            gens.append(x)
            if len(members) == M.size:
                break
        k = len(gens)
        matrix = []
        for j, t, back in rels:
            row = [-int(c) for c in back[:k]] + [0] * (k - len(back[:k]))
            row[j] = t
            matrix.append(row)
        coord.flags.writeable = False
        pres = AbelianPresentation(k, IntMatrix(matrix, cols=k), coordinate_map=coord,
                                   generators=tuple(gens), _order=prod(t for _, t, _ in rels))
        if pres.order != M.size:
            raise InvariantBreach(f"presentation order {pres.order} != module size {M.size}")
        return pres

    return M.ring.memo(("presentation",) + M.key, build)


def module_exponent(M: FiniteModule) -> int:
    return M.ring.memo(("exponent",) + M.key, lambda: int(np.lcm.reduce(_element_orders(M))))


def _ring_scalars(R, relations):
    if relations == "all":
        return list(range(R.size))
    return R.memo("additive_basis", lambda: additive_generators(R, np.ones(R.size, dtype=bool)))


def tensor_over_ring(M: FiniteModule, N: FiniteModule, relations="basis"):
    """Present ``M ⊗_R N`` and measure the kernel of the multiplication map.

    Returns ``(T, mu_kernel_order)``.  The Z-tensor of the two presentations
    is cut down by ``(r·u_i)⊗v_k - u_i⊗(r·v_k)``.  With ``relations="basis"``
    r runs over additive generators of R, which spans the same relations as
    every r because each relation is additive in r; ``"all"`` uses every
    element.  ``mu_kernel_order`` is ``|T| / |image|`` for the map onto the
    product inside the module that is not a submodule of R (None if neither is).
    """
    if M.ring is not N.ring:
        raise PflabError("modules over different rings")
    R = M.ring

    def build():
        PM, PN = module_presentation(M), module_presentation(N)
        a, b = PM.generator_count, PN.generator_count
        e = gcd(module_exponent(M), module_exponent(N))
        if a == 0 or b == 0 or e == 1:
            T = AbelianPresentation(0, IntMatrix.zeros(0, 0), _order=1)
        else:
            eye_a, eye_b = np.eye(a, dtype=np.int64), np.eye(b, dtype=np.int64)
            blocks = [np.kron(np.array(PM.relations.entries, dtype=object), eye_b),
                      np.kron(eye_a, np.array(PN.relations.entries, dtype=object))]
            gens_m = np.asarray(PM.generators, dtype=np.int64)
            gens_n = np.asarray(PN.generators, dtype=np.int64)
            for r in _ring_scalars(R, relations):
                ru = PM.coordinate_map[M.act_v(r, gens_m)]
                rv = PN.coordinate_map[N.act_v(r, gens_n)]
                # row (i, k): (r·u_i) ⊗ v_k - u_i ⊗ (r·v_k)
                rel = np.einsum("ij,kl->ikjl", ru, eye_b) - np.einsum("ij,kl->ikjl", eye_a, rv)
                blocks.append(rel.reshape(a * b, a * b))
            rows = np.vstack([np.asarray(blk, dtype=object) % e for blk in blocks]).astype(np.int64)
            rows = np.unique(rows[rows.any(axis=1)], axis=0)
            lattice = RelationLattice(a * b, e)
            for row in rows.tolist():
                lattice.add(row)
            T = AbelianPresentation(a * b, lattice.matrix(), _order=lattice.order)
        image = _product_image_order(M, N)
        if image is None:
            return T, None
        if T.order % image:
            raise InvariantBreach(f"|M⊗N| = {T.order} not divisible by image order {image}")
        return T, T.order // image

    return R.memo(("tensor", relations) + M.key + N.key, build)


def _product_image_order(M, N):
    """Order of J·N (J = M's ideal) inside N, or of the mirror product."""
    R = M.ring
    if M.is_submodule_of_ring:
        J, other = M.top, N
    elif N.is_submodule_of_ring:
        J, other = N.top, M
    else:
        return None
    a = np.asarray(additive_generators(R, J.mask), dtype=np.int64)
    b = np.asarray(additive_generators(R, other.top.mask), dtype=np.int64)
    prods = R.mul_block(a, b).ravel() if len(a) and len(b) else []
    mask = span(R, list(prods) + list(_bottom_generators(other)))
    return int(mask.sum()) // len(other.bottom)


def _bottom_generators(M):
    return additive_generators(M.ring, M.bottom.mask)


def flatness_witness(R, M: FiniteModule, cap=None):
    """An ideal J with ``J ⊗ M -> M`` not injective, or None when M is flat."""
    for J in all_ideals(R, cap):
        if J.is_zero:
            continue
        _, kernel = tensor_over_ring(ideal_module(J), M)
        if kernel != 1:
            return J
    return None


def is_flat_module(R, M: FiniteModule, cap=None) -> bool:
    """Ideal criterion: flat iff ``J ⊗_R M -> M`` is injective for every ideal J."""
    if M.ring is not R:
        raise PflabError(f"module is over {M.ring.label}, not this {R.label} instance")
    return R.memo(("flat",) + M.key, lambda: flatness_witness(R, M, cap) is None)
