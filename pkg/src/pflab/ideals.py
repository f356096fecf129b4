"""Ideals of finite rings: generation, annihilators, the full lattice, classification."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._config import ideal_cap
from .errors import EnumerationOverflow, InvariantBreach, NotAnIdeal, PflabError


class Ideal:
    """An ideal, canonicalized by its element set.

    ``generators`` are advisory: two ideals with the same elements compare
    equal whatever generators they were built from.
    """

    __slots__ = ("ring", "mask", "elements", "_generators", "_key")

    def __init__(self, ring, mask, generators=None):
        mask = np.asarray(mask, dtype=bool).copy()
        mask.flags.writeable = False
        self.ring = ring
        self.mask = mask
        self.elements = tuple(np.flatnonzero(mask).tolist())
        self._generators = None if generators is None else tuple(int(g) for g in generators)
        self._key = np.packbits(mask).tobytes()

    @classmethod
    def from_mask(cls, ring, mask, generators=None):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.size,):
            raise NotAnIdeal("wrong carrier", (mask.shape,))
        check_ideal(ring, mask)
        return cls(ring, mask, generators)

    @classmethod
    def from_elements(cls, ring, elements, generators=None):
        mask = np.zeros(ring.size, dtype=bool)
        elements = [int(e) for e in elements]
        bad = [e for e in elements if not 0 <= e < ring.size]
        if bad:
            raise NotAnIdeal("element outside ring", bad[:1])
        mask[elements] = True
        return cls.from_mask(ring, mask, generators)

    @property
    def generators(self):
        if self._generators is None:
            self._generators = tuple(_greedy_generators(self))
        return self._generators

    def expr(self):
        gens = self.generators or (self.ring.zero,)
        return "ideal(" + ",".join(str(g) for g in gens) + ")"

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return bool(self.mask[a])

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __le__(self, other):
        return bool((~self.mask | other.mask).all())

    def __lt__(self, other):
        return self <= other and self != other

    def __repr__(self):
        return f"<Ideal {self.expr()} of {self.ring.label}, {len(self)} elements>"

    @property
    def is_zero(self):
        return len(self.elements) == 1

    @property
    def is_whole(self):
        return len(self.elements) == self.ring.size

    def key(self):
        return self._key


def check_ideal(R, mask):
    """Raise NotAnIdeal with a witness unless ``mask`` is an ideal of R."""
    if not mask[R.zero]:
        raise NotAnIdeal("missing zero", (R.zero,))
    members = np.flatnonzero(mask)
    for a in members:
        sums = R.add_row(a)[members]
        if not mask[sums].all():
            b = members[int(np.argmin(mask[sums]))]
            raise NotAnIdeal("not closed under addition", (int(a), int(b)))
        prods = R.mul_row(a)
        if not mask[prods].all():
            r = int(np.argmin(mask[prods]))
            raise NotAnIdeal("not closed under multiplication", (r, int(a)))


# -- additive spans ------------------------------------------------------------


def adjoin(R, mask, g):
    """Additive subgroup generated by the subgroup ``mask`` and element g."""
    if mask[g]:
        return mask
    out = mask.copy()
    coset = np.flatnonzero(mask)
    row = R.add_row(g)
    while True:
        coset = row[coset]
        if mask[coset[0]]:
            return out
        out[coset] = True


def span(R, gens, start=None):
    mask = np.zeros(R.size, dtype=bool) if start is None else start.copy()
    mask[R.zero] = True
    for g in gens:
        mask = adjoin(R, mask, int(g))
    return mask


def additive_generators(R, mask):
    """A generating set of the additive subgroup ``mask``, greedy in index order."""
    gens = []
    cur = np.zeros(R.size, dtype=bool)
    cur[R.zero] = True
    for a in np.flatnonzero(mask):
        if not cur[a]:
            gens.append(int(a))
            cur = adjoin(R, cur, int(a))
            if cur.sum() == mask.sum():
                break
    return gens


def _ideal_additive_generators(I):
    return I.ring.memo(("addgens", I.key()), lambda: additive_generators(I.ring, I.mask))


def _greedy_generators(I):
    R = I.ring
    gens = []
    cur = np.zeros(R.size, dtype=bool)
    cur[R.zero] = True
    total = len(I)
    for a in I.elements:
        if not cur[a]:
            gens.append(a)
            cur = span(R, _ideal_additive_generators(principal(R, a)), start=cur)
            if cur.sum() == total:
                break
    return gens


# -- construction --------------------------------------------------------------


def principal(R, a) -> Ideal:
    """The principal ideal R·a."""
    a = int(a)

    def build():
        mask = np.zeros(R.size, dtype=bool)
        mask[R.mul_row(a)] = True
        return Ideal(R, mask, (a,) if a != R.zero else ())
    return R.memo(("principal", a), build)


def zero_ideal(R) -> Ideal:
    return principal(R, R.zero)


def unit_ideal(R) -> Ideal:
    return principal(R, R.one)


def ideal_generate(R, gens) -> Ideal:
    """Smallest ideal containing ``gens``: the sum of the principal ideals R·g."""
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < R.size:
            raise PflabError(f"generator {g} outside {R.label}")
    mask = np.zeros(R.size, dtype=bool)
    mask[R.zero] = True
    for g in gens:
        if not mask[g]:
            mask = span(R, _ideal_additive_generators(principal(R, g)), start=mask)
    return Ideal(R, mask, [g for g in gens if g != R.zero])


def annihilator(R, s) -> Ideal:
    """(0:s) = {x : s·x = 0}."""
    s = int(s)
    return R.memo(("ann", s), lambda: Ideal(R, R.mul_row(s) == R.zero))


def ideal_sum(I, J) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, span(I.ring, _ideal_additive_generators(J), start=I.mask))


def ideal_product(I, J) -> Ideal:
    _same_ring(I, J)
    R = I.ring
    a = np.asarray(_ideal_additive_generators(I), dtype=np.int64)
    b = np.asarray(_ideal_additive_generators(J), dtype=np.int64)
    prods = R.mul_block(a, b).ravel() if len(a) and len(b) else []
    return Ideal(R, span(R, prods))


def ideal_intersection(I, J) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.mask & J.mask)


def ideal_arith(I, J):
    """``(I + J, I·J, I ∩ J)``."""
    return ideal_sum(I, J), ideal_product(I, J), ideal_intersection(I, J)


def _same_ring(I, J):
    if I.ring is not J.ring:
        raise PflabError("ideals of different rings")


def module_product(R, I, mask):
    """Additive closure of {i·m} for an ideal I and an additive subgroup ``mask``."""
    a = np.asarray(_ideal_additive_generators(I), dtype=np.int64)
    b = np.asarray(additive_generators(R, mask), dtype=np.int64)
    prods = R.mul_block(a, b).ravel() if len(a) and len(b) else []
    return span(R, prods)


# -- the lattice ---------------------------------------------------------------


def all_ideals(R, cap=None) -> list:
    """Every ideal exactly once, ordered by (size, elements).

    Every ideal is a sum of principal ideals, so a breadth-first closure
    of the zero ideal under "add one principal ideal" reaches all of them.
    """
    limit = ideal_cap(cap)
    cached = R.memo("lattice", lambda: _LatticeBox())
    if cached.ideals is not None:
        if len(cached.ideals) > limit:
            raise EnumerationOverflow(R.label, limit)
        return cached.ideals
    if cached.overflow_at is not None and cached.overflow_at >= limit:
        raise EnumerationOverflow(R.label, limit)

    principals = {}
    for a in range(R.size):
        P = principal(R, a)
        principals.setdefault(P.key(), (a, P))
    prin = sorted(principals.values(), key=lambda t: t[0])
    start = zero_ideal(R)
    seen = {start.key(): start}
    queue = [start]
    while queue:
        I = queue.pop()
        for a, P in prin:
            if I.mask[a]:
                continue
            J = Ideal(R, span(R, _ideal_additive_generators(P), start=I.mask))
            if J.key() not in seen:
                seen[J.key()] = J
                if len(seen) > limit:
                    cached.overflow_at = max(cached.overflow_at or 0, limit)
                    raise EnumerationOverflow(R.label, limit)
                queue.append(J)
    ideals = sorted(seen.values(), key=lambda I: (len(I), I.elements))
    cached.ideals = ideals
    return ideals


class _LatticeBox:
    # holder so a failed enumeration under a small cap does not poison a later larger cap
    def __init__(self):
        self.ideals = None
        self.overflow_at = None


def lattice_tables(R, cap=None):
    """``(ideals, sum_table, meet_table)`` with tables indexing into ``ideals``."""
    def build():
        ideals = all_ideals(R, cap)
        where = {I.key(): k for k, I in enumerate(ideals)}
        L = len(ideals)
        sums = np.zeros((L, L), dtype=np.int64)
        meets = np.zeros((L, L), dtype=np.int64)
        for i, I in enumerate(ideals):
            for j in range(i, L):
                J = ideals[j]
                meets[i, j] = meets[j, i] = where[np.packbits(I.mask & J.mask).tobytes()]
                sums[i, j] = sums[j, i] = where[ideal_sum(I, J).key()]
        return ideals, sums, meets
    all_ideals(R, cap)
    return R.memo("lattice_tables", build)


@dataclass(frozen=True)
class IdealClassification:
    is_proper: bool
    is_prime: bool
    is_primary: bool
    is_maximal: bool
    radical: Ideal


def radical(R, I) -> Ideal:
    """{x : x^n ∈ I for some n}; n = |R| always suffices."""
    return Ideal(R, I.mask[R.pow_v(R.indices, R.size)])


def classify_ideal(R, I) -> IdealClassification:
    rad = radical(R, I)
    if I.is_whole:
        return IdealClassification(False, False, False, False, rad)
    outside = np.flatnonzero(~I.mask)
    prime = not I.mask[R.mul_block(outside, outside)].any()
    primary = not I.mask[R.mul_block(outside, np.flatnonzero(~rad.mask))].any()
    # maximal iff R/I is a field: every a outside I has some b with ab - 1 in I
    near_one = I.mask[R.sub_v(R.indices, R.one)]
    maximal = all(near_one[R.mul_row(a)].any() for a in outside)
    return IdealClassification(True, prime, primary, maximal, rad)


def maximal_ideals(R, cap=None) -> list:
    """Maximal members of the proper part of the ideal lattice."""
    proper = [I for I in all_ideals(R, cap) if not I.is_whole]
    return [I for I in proper if not any(I < J for J in proper)]


def prime_ideals(R, cap=None) -> list:
    return [I for I in all_ideals(R, cap) if classify_ideal(R, I).is_prime]


def is_local(R, cap=None) -> bool:
    return len(maximal_ideals(R, cap)) == 1


# -- purity ----------------------------------------------------------------------


def is_pure_elementwise(R, I) -> bool:
    """Every a ∈ I satisfies a = a·b for some b ∈ I."""
    members = np.asarray(I.elements, dtype=np.int64)
    return bool((R.mul_block(members, members) == members[:, None]).any(axis=1).all())


def is_pure_local(R, I, cap=None) -> bool:
    """I_m is 0 or R_m at every maximal ideal m."""
    from .rings import localize_at_maximal

    for m in maximal_ideals(R, cap):
        L, _ = localize_at_maximal(R, m)
        image = np.unique(L.origin["projection"][np.asarray(I.elements)])
        if len(image) not in (1, L.size):
            return False
    return True


def is_pure_by_idempotent(R, I) -> bool:
    """I = R·e for some idempotent e ∈ I."""
    return any(principal(R, e) == I for e in R.census.idempotents if I.mask[e])


def is_pure(R, I, cap=None) -> bool:
    """Elementwise purity, cross-checked against the localization form."""
    elementwise = is_pure_elementwise(R, I)
    local = is_pure_local(R, I, cap)
    if elementwise != local:
        raise InvariantBreach(
            f"purity of {I.expr()} in {R.label}: elementwise={elementwise} local={local}")
    return elementwise


# -- arithmeticality -----------------------------------------------------------------


def arithmetical_witness(R, cap=None):
    """A triple (A, B, C) with A∩(B+C) != (A∩B)+(A∩C), or None.

    A runs from the top of the lattice downwards, B < C upwards.
    """
    ideals, sums, meets = lattice_tables(R, cap)
    L = len(ideals)
    upper = np.triu(np.ones((L, L), dtype=bool), k=1)
    for a in range(L - 1, -1, -1):
        lhs = meets[a][sums]
        rhs = sums[meets[a][:, None], meets[a][None, :]]
        bad = (lhs != rhs) & upper
        if bad.any():
            b, c = np.argwhere(bad)[0]
            return ideals[a], ideals[int(b)], ideals[int(c)]
    return None


def is_arithmetical(R, cap=None) -> bool:
    """The ideal lattice is distributive."""
    return arithmetical_witness(R, cap) is None
