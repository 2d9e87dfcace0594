"""Truncated one-dimensional formal group laws over the rationals.

F(X, Y) = X + Y + sum c_{i,j} X^i Y^j with i, j >= 1 and i + j <= cap.
Polynomial arithmetic is exact (fractions.Fraction) and truncated by
total degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kronecker import inner_coproduct_basis
from .schur import (
    SymFunc,
    TensorSymFunc,
    coproduct,
    iterated_coproduct_basis,
    outer_mul,
)

# Sparse polynomial in `nvars` variables: exponent tuple -> Fraction.
Poly = dict[tuple[int, ...], Fraction]


def var(nvars: int, i: int) -> Poly:
    expo = [0] * nvars
    expo[i] = 1
    return {tuple(expo): Fraction(1)}


def padd(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, Fraction(0)) + c
    return {e: c for e, c in out.items() if c}


def pscale(p: Poly, c) -> Poly:
    c = Fraction(c)
    return {e: v * c for e, v in p.items() if v * c}


def pmul(p: Poly, q: Poly, cap: int) -> Poly:
    out: Poly = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            if sum(e) > cap:
                continue
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def ppow(p: Poly, n: int, cap: int) -> Poly:
    out = {(0,) * _nvars(p): Fraction(1)} if n == 0 else dict(p)
    for _ in range(n - 1):
        out = pmul(out, p, cap)
    return out


def _nvars(p: Poly) -> int:
    return len(next(iter(p))) if p else 0


@dataclass(frozen=True)
class FGL1:
    """One-dimensional formal group law given by its mixed coefficients."""

    coeffs: tuple[tuple[int, int, Fraction], ...]  # (i, j, c_{i,j}), i, j >= 1
    cap: int

    @staticmethod
    def make(coeffs: dict[tuple[int, int], object], cap: int) -> "FGL1":
        items = tuple(
            sorted((i, j, Fraction(c)) for (i, j), c in coeffs.items() if Fraction(c))
        )
        for i, j, _ in items:
            if i < 1 or j < 1:
                raise ValueError("mixed coefficients require i, j >= 1")
        return FGL1(items, cap)

    def apply(self, p: Poly, q: Poly, cap: int | None = None) -> Poly:
        """F(P, Q) truncated by total degree."""
        cap = self.cap if cap is None else cap
        out = padd(p, q)
        for i, j, c in self.coeffs:
            if i + j > cap:
                continue
            out = padd(out, pscale(pmul(ppow(p, i, cap), ppow(q, j, cap), cap), c))
        return out


def additive(cap: int = 8) -> FGL1:
    """G_a: F(X,Y) = X + Y."""
    return FGL1.make({}, cap)


def multiplicative(b=1, cap: int = 8) -> FGL1:
    """G_m^b: F(X,Y) = X + Y + b X Y."""
    return FGL1.make({(1, 1): b}, cap)


def check_axioms(F: FGL1) -> bool:
    """Associativity, two-sided identity, commutativity, inverse existence,
    all as identities truncated at F.cap."""
    cap = F.cap
    x3, y3, z3 = var(3, 0), var(3, 1), var(3, 2)
    if F.apply(F.apply(x3, y3, cap), z3, cap) != F.apply(x3, F.apply(y3, z3, cap), cap):
        return False
    x1 = var(1, 0)
    zero = {}
    if F.apply(x1, zero, cap) != x1 or F.apply(zero, x1, cap) != x1:
        return False
    table = {(i, j): c for i, j, c in F.coeffs}
    if any(table.get((i, j)) != table.get((j, i)) for i, j, _ in F.coeffs):
        return False
    lam = antipode_series(F)
    return F.apply(x1, lam, cap) == {}


def antipode_series(F: FGL1) -> Poly:
    """The unique lambda(X) = -X + ... with F(X, lambda(X)) = 0, by fixed-point
    iteration lambda <- -X - sum c_{i,j} X^i lambda^j (gains a degree per pass)."""
    cap = F.cap
    x = var(1, 0)
    lam = pscale(x, -1)
    for _ in range(cap):
        acc = pscale(x, -1)
        for i, j, c in F.coeffs:
            acc = padd(acc, pscale(pmul(ppow(x, i, cap), ppow(lam, j, cap), cap), -c))
        if acc == lam:
            break
        lam = acc
    return lam


def compose(p: Poly, q: Poly, cap: int) -> Poly:
    """p(q(X..)) for univariate p; q may be multivariate."""
    nv = _nvars(q) or 1
    out: Poly = {}
    for e, c in p.items():
        deg = e[0]
        out = padd(out, pscale(ppow(q, deg, cap) if deg else {(0,) * nv: Fraction(1)}, c))
    return out


def loop_n(F: FGL1, n: int) -> Poly:
    """[n](X): [0] = 0, [m] = F([m-1], X), [-m] = [m](lambda(X))."""
    cap = F.cap
    x = var(1, 0)
    if n == 0:
        return {}
    if n < 0:
        return compose(loop_n(F, -n), antipode_series(F), cap)
    out = dict(x)
    for _ in range(n - 1):
        out = F.apply(out, x, cap)
    return out


def fgl_log(F: FGL1) -> Poly:
    """The logarithm: ell(X) = X + ..., ell(F(X,Y)) = ell(X) + ell(Y).

    In characteristic 0, ell'(X) = 1 / (dF/dY)(X, 0); integrate formally.
    """
    cap = F.cap
    # dF/dY(X,0) = 1 + sum_i c_{i,1} X^i.
    denom: dict[int, Fraction] = {0: Fraction(1)}
    for i, j, c in F.coeffs:
        if j == 1:
            denom[i] = denom.get(i, Fraction(0)) + c
    # Invert the power series denom to degree cap-1.
    inv: dict[int, Fraction] = {0: Fraction(1)}
    for d in range(1, cap):
        inv[d] = -sum(denom.get(k, Fraction(0)) * inv[d - k] for k in range(1, d + 1))
    out: Poly = {}
    for d, c in inv.items():
        if c and d + 1 <= cap:
            out[(d + 1,)] = c / (d + 1)
    return out


def compositional_inverse(p: Poly, cap: int) -> Poly:
    """Inverse under composition of a univariate series X + O(X^2)."""
    x = var(1, 0)
    inv = dict(x)
    for _ in range(cap):
        # Newton-style fixed point: inv <- inv - (p(inv) - X).
        err = padd(compose(p, inv, cap), pscale(x, -1))
        correction = {e: c for e, c in err.items() if e[0] >= 2}
        if not correction:
            break
        inv = padd(inv, pscale(correction, -1))
    return inv


def coproduct_from_fgl(which: str, f: SymFunc) -> TensorSymFunc:
    """additive -> the outer coproduct (alphabet X + Y); multiplicative ->
    Delta_m (alphabet X + Y + XY), built by splitting the middle leg of the
    threefold coproduct with the inner coproduct."""
    if which == "additive":
        return coproduct(f)
    if which != "multiplicative":
        raise ValueError(f"unknown formal group tag {which!r}")
    out = TensorSymFunc()
    for lam, c in f.terms.items():
        for (x1, x2, x3), cc in iterated_coproduct_basis(lam, 3).items():
            for (m1, m2), cm in inner_coproduct_basis(x2).items():
                left = outer_mul(SymFunc.basis(x1), SymFunc.basis(m1))
                right = outer_mul(SymFunc.basis(x3), SymFunc.basis(m2))
                for la, cl in left.terms.items():
                    for rb, cr in right.terms.items():
                        key = (la, rb)
                        out.terms[key] = out.terms.get(key, 0) + c * cc * cm * cl * cr
    out.terms = {k: v for k, v in out.terms.items() if v}
    return out
