"""Dense polynomials over F_p as coefficient lists, lowest degree first."""
from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of n >= 1 into {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def derivative(f, p):
    return trim([i * c for i, c in enumerate(f)][1:], p)


def polymul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def polydivmod(f, g, p):
    f, g = trim(f, p), trim(g, p)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g):
        c = (r[-1] * inv) % p
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        r = trim(r, p)
    return trim(q, p), r


def polygcd(f, g, p):
    """Monic gcd over F_p (the zero polynomial if both inputs vanish)."""
    f, g = trim(f, p), trim(g, p)
    while g:
        f, g = g, polydivmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [(c * inv) % p for c in f]
    return f


def is_squarefree(f, p) -> bool:
    """gcd(f, f') == 1 over F_p.

    When f' vanishes identically (f is a p-th power) the gcd is f itself,
    which is nonconstant, so such f is correctly reported as not squarefree.
    """
    return degree(polygcd(f, derivative(f, p), p)) == 0


def monic_polys(p, degree_):
    """All monic polynomials of exactly the given degree, in index order."""
    for idx in range(p**degree_):
        coeffs = []
        for _ in range(degree_):
            coeffs.append(idx % p)
            idx //= p
        yield coeffs + [1]


def format_poly(f, var="X") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"
