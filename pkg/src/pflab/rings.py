"""Finite commutative rings with identity.

Elements are the integers ``0 .. size-1``.  Every construction supplies
vectorized numpy kernels for addition, multiplication and negation, so
arithmetic works directly on index arrays.  Full ``size x size`` tables are
materialized lazily, and only for rings up to ``TABULATE_LIMIT`` elements;
larger rings compute rows on demand.

Constructors:

    zmod(n)                 Z/n
    poly_quot(p, f)         F_p[X]/(f), f monic, coefficients low degree first
    truncated_poly(p, k, d) F_p[X_1..X_k] / (monomials of total degree >= d)
    product(factors)        componentwise ring, mixed-radix encoding
    quotient(R, I)          R/I, cosets labelled by their smallest member
    duplication(R, I)       {(r, r+i)} inside R x R
    localize_at_maximal(R, m)
    table_ring(add, mul, zero, one)
"""
from __future__ import annotations

import itertools
import json
import threading
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from . import polys
from ._config import TABULATE_LIMIT, size_cap
from .errors import AxiomViolation, PflabError, RingConstructionError, SizeCapExceeded

_CHUNK = 1 << 15


def _frozen(arr):
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


class FiniteRing:
    def __init__(self, size, *, zero, one, add_v, mul_v, neg_v, label, kind,
                 fmt=None, origin=None):
        if size < 1:
            raise RingConstructionError("a ring needs at least one element")
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.kind = kind
        self._add_v = add_v
        self._mul_v = mul_v
        self._neg_v = neg_v
        self._fmt = fmt or str
        self.origin = MappingProxyType(dict(origin or {}))
        self._lock = threading.Lock()
        self._cache = {}

    def __repr__(self):
        return f"<FiniteRing {self.label} size={self.size}>"

    def __call__(self, index):
        return RingElement(self, int(index))

    def __len__(self):
        return self.size

    # -- caching -----------------------------------------------------------

    def memo(self, key, factory):
        """Write-once cache: concurrent callers all observe the first stored value."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            return self._cache.setdefault(key, value)

    # -- vectorized arithmetic ---------------------------------------------

    def add_v(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.tabulated:
            return self.add_table[a, b]
        return self._add_v(a, b)

    def mul_v(self, a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.tabulated:
            return self.mul_table[a, b]
        return self._mul_v(a, b)

    def neg_v(self, a):
        return self.negatives[np.asarray(a, dtype=np.int64)]

    def sub_v(self, a, b):
        return self.add_v(a, self.neg_v(b))

    def pow_v(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        result = np.full(a.shape, self.one, dtype=np.int64)
        base = a
        while e:
            if e & 1:
                result = self.mul_v(result, base)
            e >>= 1
            if e:
                base = self.mul_v(base, base)
        return result

    @property
    def tabulated(self):
        return self.size <= TABULATE_LIMIT

    @property
    def indices(self):
        return self.memo("indices", lambda: _frozen(np.arange(self.size)))

    @property
    def add_table(self):
        def build():
            ar = np.arange(self.size, dtype=np.int64)
            return _frozen(self._add_v(*np.broadcast_arrays(ar[:, None], ar[None, :])))
        return self.memo("add_table", build)

    @property
    def mul_table(self):
        def build():
            ar = np.arange(self.size, dtype=np.int64)
            return _frozen(self._mul_v(*np.broadcast_arrays(ar[:, None], ar[None, :])))
        return self.memo("mul_table", build)

    @property
    def negatives(self):
        return self.memo("negatives", lambda: _frozen(self._neg_v(np.arange(self.size, dtype=np.int64))))

    def add_row(self, a):
        if self.tabulated:
            return self.add_table[a]
        return self._add_v(np.full(self.size, a, dtype=np.int64), np.arange(self.size, dtype=np.int64))

    def mul_row(self, a):
        if self.tabulated:
            return self.mul_table[a]
        return self._mul_v(np.full(self.size, a, dtype=np.int64), np.arange(self.size, dtype=np.int64))

    def mul_block(self, rows, cols):
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if self.tabulated:
            return self.mul_table[np.ix_(rows, cols)]
        return self._mul_v(*np.broadcast_arrays(rows[:, None], cols[None, :]))

    def add_block(self, rows, cols):
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if self.tabulated:
            return self.add_table[np.ix_(rows, cols)]
        return self._add_v(*np.broadcast_arrays(rows[:, None], cols[None, :]))

    # -- scalar conveniences -------------------------------------------------

    def add(self, a, b):
        return int(self.add_v(a, b))

    def mul(self, a, b):
        return int(self.mul_v(a, b))

    def neg(self, a):
        return int(self.negatives[a])

    def format(self, a):
        return self._fmt(int(a))

    @property
    def census(self):
        return self.memo("census", lambda: element_census(self))


@dataclass(frozen=True)
class RingElement:
    """Index wrapper with operator overloading, for interactive use."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.size:
            raise IndexError(f"element {self.index} outside {self.ring.label}")

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise PflabError("elements of different rings")
            return other.index
        return int(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring.add(self.index, self._other(other)))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.mul(self.index, self._other(other)))

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.index))

    def __sub__(self, other):
        return self + (-RingElement(self.ring, self._other(other)))

    def __pow__(self, e):
        return RingElement(self.ring, int(self.ring.pow_v(self.index, int(e))))

    __radd__ = __add__
    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring is other.ring and self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __repr__(self):
        return self.ring.format(self.index)


@dataclass(frozen=True)
class RingHom:
    """A map between rings given by an index table."""

    source: FiniteRing
    target: FiniteRing
    table: np.ndarray

    def __call__(self, a):
        return int(self.table[a])

    def is_unital_homomorphism(self):
        s, t, f = self.source, self.target, self.table
        if f[s.one] != t.one or f[s.zero] != t.zero:
            return False
        for a in range(s.size):
            if not np.array_equal(f[s.add_row(a)], t.add_v(f[a], f)):
                return False
            if not np.array_equal(f[s.mul_row(a)], t.mul_v(f[a], f)):
                return False
        return True


@dataclass(frozen=True)
class ElementCensus:
    units: frozenset
    zero_divisors: frozenset
    idempotents: frozenset
    nilpotents: frozenset
    is_reduced: bool

    @property
    def is_domain(self):
        # zero divisors are exactly {0} only in a nonzero domain
        return len(self.zero_divisors) == 1


def element_census(R: FiniteRing) -> ElementCensus:
    """Classify every element of R by exhaustive scan."""
    n = R.size
    unit = np.zeros(n, dtype=bool)
    zdiv = np.zeros(n, dtype=bool)
    nonzero = R.indices != R.zero
    for a in range(n):
        row = R.mul_row(a)
        unit[a] = bool((row == R.one).any())
        zdiv[a] = bool(((row == R.zero) & nonzero).any())
    ar = R.indices
    idem = R.mul_v(ar, ar) == ar
    nil = R.pow_v(ar, n) == R.zero
    as_set = lambda mask: frozenset(np.flatnonzero(mask).tolist())
    return ElementCensus(
        units=as_set(unit),
        zero_divisors=as_set(zdiv),
        idempotents=as_set(idem),
        nilpotents=as_set(nil),
        is_reduced=int(nil.sum()) == 1,
    )


# -- constructors --------------------------------------------------------------


def _check_cap(what, size, cap):
    limit = size_cap(cap)
    if size > limit:
        raise SizeCapExceeded(what, size, limit)


def zmod(n: int, cap=None) -> FiniteRing:
    """The ring Z/n."""
    n = int(n)
    if n < 1:
        raise RingConstructionError(f"Z/{n} is not a finite ring")
    _check_cap(f"Z/{n}", n, cap)
    return FiniteRing(
        n, zero=0, one=1 % n,
        add_v=lambda a, b: (a + b) % n,
        mul_v=lambda a, b: (a * b) % n,
        neg_v=lambda a: (-a) % n,
        label=f"Z/{n}", kind="modular", origin={"n": n},
    )


def _algebra_ring(p, structure, *, label, kind, fmt_digits, origin, cap):
    """F_p-algebra with basis e_0 = 1, e_1, ... and structure constants C[i, j, k]."""
    d = structure.shape[0]
    size = p**d
    _check_cap(label, size, cap)
    powers = p ** np.arange(d, dtype=np.int64)
    digits = _frozen((np.arange(size, dtype=np.int64)[:, None] // powers) % p) if d else np.zeros((1, 0), dtype=np.int64)
    flat = structure.reshape(d * d, d).astype(np.int64)

    def add_v(a, b):
        return ((digits[a] + digits[b]) % p) @ powers

    def neg_v(a):
        return ((-digits[a]) % p) @ powers

    def mul_v(a, b):
        shape = a.shape
        a, b = a.ravel(), b.ravel()
        out = np.empty(a.size, dtype=np.int64)
        for lo in range(0, a.size, _CHUNK):
            A = digits[a[lo:lo + _CHUNK]]
            B = digits[b[lo:lo + _CHUNK]]
            outer = (A[:, :, None] * B[:, None, :]).reshape(-1, d * d)
            out[lo:lo + _CHUNK] = ((outer @ flat) % p) @ powers
        return out.reshape(shape)

    def fmt(a):
        return fmt_digits([int(c) for c in digits[a]])

    return FiniteRing(size, zero=0, one=1 if d else 0, add_v=add_v, mul_v=mul_v, neg_v=neg_v,
                      label=label, kind=kind, fmt=fmt, origin=origin)


def poly_quot(p: int, f, cap=None) -> FiniteRing:
    """F_p[X]/(f) for a monic f given as coefficients, lowest degree first."""
    if not polys.is_prime(p):
        raise RingConstructionError(f"{p} is not prime")
    f = polys.trim(list(f), p)
    d = polys.degree(f)
    if d < 1:
        raise RingConstructionError("modulus must have degree >= 1")
    if f[-1] != 1:
        raise RingConstructionError(f"modulus {polys.format_poly(f)} is not monic")
    reductions = []
    for k in range(2 * d - 1):
        mono = [0] * k + [1]
        r = polys.polydivmod(mono, f, p)[1]
        reductions.append(r + [0] * (d - len(r)))
    C = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            C[i, j] = reductions[i + j]
    label = f"GF({p})[X]/({polys.format_poly(f)})"
    return _algebra_ring(p, C, label=label, kind="poly-quotient",
                         fmt_digits=polys.format_poly, origin={"p": p, "f": tuple(f)}, cap=cap)


def _monomials(k, d):
    monos = [e for e in itertools.product(range(d), repeat=k) if sum(e) < d]
    monos.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return monos


def _var_names(k):
    return ["X", "Y", "Z"][:k] if k <= 3 else [f"X{i + 1}" for i in range(k)]


def truncated_poly(p: int, k: int, d: int, cap=None) -> FiniteRing:
    """F_p[X_1..X_k] modulo every monomial of total degree >= d."""
    if not polys.is_prime(p):
        raise RingConstructionError(f"{p} is not prime")
    if k < 1 or d < 1:
        raise RingConstructionError("need k >= 1 variables and truncation degree d >= 1")
    monos = _monomials(k, d)
    label = f"trunc({p},{k},{d})"
    _check_cap(label, p ** len(monos), cap)
    where = {m: i for i, m in enumerate(monos)}
    C = np.zeros((len(monos),) * 3, dtype=np.int64)
    for i, mi in enumerate(monos):
        for j, mj in enumerate(monos):
            prod = tuple(x + y for x, y in zip(mi, mj))
            if prod in where:
                C[i, j, where[prod]] = 1
    names = _var_names(k)

    def mono_str(e):
        parts = [v if x == 1 else f"{v}^{x}" for v, x in zip(names, e) if x]
        return "*".join(parts)

    def fmt_digits(coeffs):
        terms = []
        for c, e in zip(coeffs, monos):
            if not c:
                continue
            m = mono_str(e)
            if not m:
                terms.append(str(c))
            else:
                terms.append(m if c == 1 else f"{c}*{m}")
        return "+".join(terms) if terms else "0"

    return _algebra_ring(p, C, label=label, kind="truncated-poly", fmt_digits=fmt_digits,
                         origin={"p": p, "k": k, "d": d, "monomials": tuple(monos)}, cap=cap)


def product(factors, cap=None) -> FiniteRing:
    """Componentwise product; index = mixed radix with the first factor most significant."""
    factors = list(factors)
    if not factors:
        raise RingConstructionError("product of an empty family")
    label = "prod(" + ",".join(f.label for f in factors) + ")"
    if len(factors) == 1:
        return factors[0]
    sizes = [f.size for f in factors]
    size = int(np.prod(sizes, dtype=object))
    _check_cap(label, size, cap)
    strides = [int(np.prod(sizes[i + 1:], dtype=object)) for i in range(len(sizes))]

    def split(a):
        return [(a // s) % n for s, n in zip(strides, sizes)]

    def join(parts):
        out = 0
        for part, s in zip(parts, strides):
            out = out + part * s
        return out

    def add_v(a, b):
        return join([f._add_v(x, y) for f, x, y in zip(factors, split(a), split(b))])

    def mul_v(a, b):
        return join([f._mul_v(x, y) for f, x, y in zip(factors, split(a), split(b))])

    def neg_v(a):
        return join([f._neg_v(x) for f, x in zip(factors, split(a))])

    def fmt(a):
        return "(" + ",".join(f.format(int(x)) for f, x in zip(factors, split(a))) + ")"

    return FiniteRing(
        size, zero=join([f.zero for f in factors]), one=join([f.one for f in factors]),
        add_v=add_v, mul_v=mul_v, neg_v=neg_v, label=label, kind="product", fmt=fmt,
        origin={"factors": tuple(factors), "strides": tuple(strides)},
    )


def component(R: FiniteRing, a: int) -> tuple:
    """Coordinates of a product-ring element, one index per factor."""
    return tuple(int((a // s) % f.size) for f, s in zip(R.origin["factors"], R.origin["strides"]))


def _as_ideal(R, I):
    from .ideals import Ideal

    if isinstance(I, Ideal):
        if I.ring is not R:
            raise PflabError("ideal belongs to a different ring")
        return I
    return Ideal.from_elements(R, I)


def _coset_ring(R, I, *, label, kind, origin):
    members = np.asarray(I.elements, dtype=np.int64)
    reps_of = R.add_block(R.indices, members).min(axis=1)
    reps = np.unique(reps_of)
    cls = _frozen(np.searchsorted(reps, reps_of))
    reps = _frozen(reps)

    def add_v(a, b):
        return cls[R.add_v(reps[a], reps[b])]

    def mul_v(a, b):
        return cls[R.mul_v(reps[a], reps[b])]

    def neg_v(a):
        return cls[R.neg_v(reps[a])]

    origin = dict(origin, base=R, representatives=reps, projection=cls)
    return FiniteRing(len(reps), zero=cls[R.zero], one=cls[R.one], add_v=add_v, mul_v=mul_v,
                      neg_v=neg_v, label=label, kind=kind,
                      fmt=lambda a: f"[{R.format(reps[a])}]", origin=origin)


def quotient(R: FiniteRing, I) -> FiniteRing:
    """R/I; coset k is represented by its smallest ring index."""
    I = _as_ideal(R, I)
    return _coset_ring(R, I, label=f"quot({R.label}, {I.expr()})", kind="quotient",
                       origin={"ideal": I})


def projection(Q: FiniteRing) -> RingHom:
    """The canonical surjection onto a quotient or localization."""
    return RingHom(Q.origin["base"], Q, Q.origin["projection"])


def duplication(R: FiniteRing, I, cap=None) -> FiniteRing:
    """Amalgamated duplication R ⋈ I = {(r, r+i)} with unity (1, 1).

    Element r*|I| + k encodes the pair (r, r + I[k]) where I[k] is the k-th
    smallest member of the ideal.
    """
    I = _as_ideal(R, I)
    label = f"dup({R.label}, {I.expr()})"
    members = np.asarray(I.elements, dtype=np.int64)
    m = len(members)
    _check_cap(label, R.size * m, cap)
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[members] = np.arange(m)
    pos = _frozen(pos)

    def split(a):
        r = a // m
        return r, R.add_v(r, members[a % m])

    def join(r, s):
        return r * m + pos[R.sub_v(s, r)]

    def add_v(a, b):
        (ra, sa), (rb, sb) = split(a), split(b)
        return join(R.add_v(ra, rb), R.add_v(sa, sb))

    def mul_v(a, b):
        (ra, sa), (rb, sb) = split(a), split(b)
        return join(R.mul_v(ra, rb), R.mul_v(sa, sb))

    def neg_v(a):
        r, s = split(a)
        return join(R.neg_v(r), R.neg_v(s))

    def fmt(a):
        r, s = split(np.int64(a))
        return f"({R.format(r)},{R.format(s)})"

    zero_pos = int(pos[R.zero])
    return FiniteRing(
        R.size * m, zero=R.zero * m + zero_pos, one=R.one * m + zero_pos,
        add_v=add_v, mul_v=mul_v, neg_v=neg_v, label=label, kind="duplication", fmt=fmt,
        origin={"base": R, "ideal": I, "ideal_position": pos},
    )


def dup_pair(D: FiniteRing, a: int) -> tuple:
    """The pair (r, r+i) of base-ring indices behind a duplication element."""
    R, I = D.origin["base"], D.origin["ideal"]
    m = len(I.elements)
    r = a // m
    return r, R.add(r, I.elements[a % m])


def dup_retract(D: FiniteRing):
    """Diagonal embedding phi(r) = (r, r) and retraction psi(r, r+i) = r."""
    if D.kind != "duplication":
        raise PflabError(f"{D.label} is not an amalgamated duplication")
    R = D.origin["base"]
    m = len(D.origin["ideal"].elements)
    zero_pos = int(D.origin["ideal_position"][R.zero])
    phi = RingHom(R, D, _frozen(R.indices * m + zero_pos))
    psi = RingHom(D, R, _frozen(D.indices // m))
    return phi, psi


def localize_at_maximal(R: FiniteRing, m):
    """R_m realized as R/I_S with S = R \\ m.

    I_S collects the elements killed by something outside m.  In a finite
    ring the images of S are non-zero-divisors, hence units, so the quotient
    is exactly the localization.  Returns ``(ring, I_S)``.
    """
    from .ideals import Ideal, classify_ideal

    m = _as_ideal(R, m)
    if not classify_ideal(R, m).is_maximal:
        raise PflabError(f"{m.expr()} is not a maximal ideal of {R.label}")
    outside = np.flatnonzero(~m.mask)
    killed = np.zeros(R.size, dtype=bool)
    for s in outside:
        killed |= R.mul_row(s) == R.zero
    kernel = Ideal.from_mask(R, killed)
    L = _coset_ring(R, kernel, label=f"loc({R.label}, {m.expr()})", kind="localization",
                    origin={"maximal": m, "kernel": kernel})
    return L, kernel


# -- table rings ----------------------------------------------------------------


def table_ring(add, mul, zero, one, label="table", validate=True) -> FiniteRing:
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    n = add.shape[0] if add.ndim == 2 else 0
    if add.shape != (n, n) or mul.shape != (n, n) or n < 1:
        raise AxiomViolation("shape", (add.shape, mul.shape))
    if not (0 <= zero < n and 0 <= one < n):
        raise AxiomViolation("closure", (zero, one))
    if ((add < 0) | (add >= n)).any() or ((mul < 0) | (mul >= n)).any():
        table = add if ((add < 0) | (add >= n)).any() else mul
        a, b = np.argwhere((table < 0) | (table >= n))[0]
        raise AxiomViolation("closure", (int(a), int(b)))
    add, mul = _frozen(add), _frozen(mul)
    hits = add == zero
    neg = np.where(hits.any(axis=1), hits.argmax(axis=1), -1)
    if (neg < 0).any():
        raise AxiomViolation("additive inverse", (int(np.argmax(neg < 0)),))
    neg = _frozen(neg)
    R = FiniteRing(n, zero=zero, one=one,
                   add_v=lambda a, b: add[a, b], mul_v=lambda a, b: mul[a, b],
                   neg_v=lambda a: neg[a], label=label, kind="table")
    if validate:
        violation = ring_axiom_violation(R, exhaustive=True)
        if violation:
            raise AxiomViolation(*violation)
    return R


def load_table_ring(path, cap=None) -> FiniteRing:
    """Read ``{"size", "zero", "one", "add", "mul"}`` JSON and validate every axiom."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        n = int(data["size"])
        _check_cap(f"table({path})", n, cap)
        R = table_ring(data["add"], data["mul"], int(data["zero"]), int(data["one"]),
                       label=f"table({path})")
    except KeyError as exc:
        raise AxiomViolation("schema", (f"missing key {exc.args[0]}",)) from None
    if R.size != n:
        raise AxiomViolation("shape", (n, R.size))
    return R


def ring_axiom_violation(R: FiniteRing, exhaustive=None, samples=100_000, seed=0):
    """First violated axiom as ``(name, witness)``, or None.

    Pairwise axioms are always checked on all pairs.  Triple axioms run on
    all triples when ``exhaustive`` (default: size <= 64), else on
    ``samples`` random triples.
    """
    n = R.size
    ar = R.indices
    z, o = R.zero, R.one
    if n > 1 and z == o:
        return "zero != one", (z, o)
    if not (R.add_v(ar, z) == ar).all():
        return "additive identity", (int(np.argmax(R.add_v(ar, z) != ar)),)
    if not (R.mul_v(ar, o) == ar).all():
        return "multiplicative identity", (int(np.argmax(R.mul_v(ar, o) != ar)),)
    if not (R.add_v(ar, R.negatives) == z).all():
        return "additive inverse", (int(np.argmax(R.add_v(ar, R.negatives) != z)),)
    for a in range(n):
        add_row, mul_row = R.add_row(a), R.mul_row(a)
        if not np.array_equal(add_row, R.add_v(ar, a)):
            return "additive commutativity", (a, int(np.argmax(add_row != R.add_v(ar, a))))
        if not np.array_equal(mul_row, R.mul_v(ar, a)):
            return "multiplicative commutativity", (a, int(np.argmax(mul_row != R.mul_v(ar, a))))
    if exhaustive is None:
        exhaustive = n <= 64
    if exhaustive:
        for a in range(n):
            b, c = np.meshgrid(ar, ar, indexing="ij")
            violation = _triple_violation(R, np.full(b.shape, a), b, c)
            if violation:
                return violation
        return None
    rng = np.random.default_rng(seed)
    a, b, c = rng.integers(0, n, size=(3, samples))
    return _triple_violation(R, a, b, c)


def _triple_violation(R, a, b, c):
    checks = (
        ("additive associativity", R.add_v(R.add_v(a, b), c), R.add_v(a, R.add_v(b, c))),
        ("multiplicative associativity", R.mul_v(R.mul_v(a, b), c), R.mul_v(a, R.mul_v(b, c))),
        ("distributivity", R.mul_v(a, R.add_v(b, c)), R.add_v(R.mul_v(a, b), R.mul_v(a, c))),
    )
    for name, lhs, rhs in checks:
        bad = lhs != rhs
        if bad.any():
            k = np.unravel_index(int(np.argmax(bad)), bad.shape)
            return name, (int(a[k]), int(b[k]), int(c[k]))
    return None
