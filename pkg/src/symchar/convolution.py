"""Convolution monoids of 1-cochains and pairings over symmetric functions.

Cochains map basis elements into the algebra (linear extension implied).
Checkers are bounded exhaustive searches over the Schur basis that return
a counterexample witness on failure.
"""

from __future__ import annotations

from .partitions import Partition, partitions_up_to, weight
from .schur import (
    SymFunc,
    TensorSymFunc,
    antipode,
    coproduct_basis,
    counit,
    outer_mul,
    scalar,
    tensor,
)


class Cochain1:
    """A linear map on Sym given on the Schur basis, with a memo cache."""

    def __init__(self, fn, name: str = "cochain"):
        self._fn = fn
        self.name = name
        self._memo: dict[Partition, SymFunc] = {}

    def on_basis(self, lam: Partition) -> SymFunc:
        lam = tuple(lam)
        hit = self._memo.get(lam)
        if hit is None:
            hit = self._memo[lam] = self._fn(lam)
        return hit

    def __call__(self, f: SymFunc) -> SymFunc:
        out = SymFunc.zero()
        for lam, c in f.terms.items():
            out = out + self.on_basis(lam).scale(c)
        return out

    def is_normalized(self) -> bool:
        return self.on_basis(()) == SymFunc.one()

    def __repr__(self) -> str:
        return f"Cochain1({self.name})"


class Pairing:
    """A 2-cochain: bilinear map Sym x Sym -> Sym given on basis pairs."""

    def __init__(self, fn, name: str = "pairing"):
        self._fn = fn
        self.name = name
        self._memo: dict[tuple[Partition, Partition], SymFunc] = {}

    def on_basis(self, mu: Partition, nu: Partition) -> SymFunc:
        key = (tuple(mu), tuple(nu))
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._fn(*key)
        return hit

    def __call__(self, f: SymFunc, g: SymFunc) -> SymFunc:
        out = SymFunc.zero()
        for mu, cf in f.terms.items():
            for nu, cg in g.terms.items():
                out = out + self.on_basis(mu, nu).scale(cf * cg)
        return out

    def is_unital(self) -> bool:
        return self.on_basis((), ()) == SymFunc.one()

    def is_normalized(self, max_degree: int = 4) -> bool:
        """a(x,1) = a(1,x) = eta(eps(x)) on basis elements up to the bound."""
        for lam in partitions_up_to(max_degree):
            expected = SymFunc.one() if not lam else SymFunc.zero()
            if self.on_basis(lam, ()) != expected or self.on_basis((), lam) != expected:
                return False
        return True

    def __repr__(self) -> str:
        return f"Pairing({self.name})"


# -- standard cochains and pairings -----------------------------------------

def identity_cochain() -> Cochain1:
    return Cochain1(lambda lam: SymFunc.basis(lam), "id")


def antipode_cochain() -> Cochain1:
    return Cochain1(lambda lam: antipode(SymFunc.basis(lam)), "antipode")


def unit_counit_cochain() -> Cochain1:
    """e = eta o eps, the convolution unit."""
    return Cochain1(lambda lam: SymFunc.one() if not lam else SymFunc.zero(), "e")


def eps1_cochain() -> Cochain1:
    """eta o eps^1: x -> <M(1)|x> s_(). An algebra homomorphism (evaluation at one variable = 1)."""
    return Cochain1(
        lambda lam: SymFunc.one() if len(lam) <= 1 else SymFunc.zero(), "eta.eps1"
    )


def unit_pairing() -> Pairing:
    """e2(x, y) = eps(x) eps(y) s_(), the unit of the pairing convolution monoid."""
    return Pairing(
        lambda mu, nu: SymFunc.one() if not mu and not nu else SymFunc.zero(), "e2"
    )


def outer_pairing() -> Pairing:
    return Pairing(lambda mu, nu: outer_mul(SymFunc.basis(mu), SymFunc.basis(nu)), "outer")


def inner_pairing() -> Pairing:
    from .kronecker import kronecker_basis

    return Pairing(lambda mu, nu: SymFunc(dict(kronecker_basis(mu, nu))), "inner")


def schur_hall_pairing() -> Pairing:
    """a(x, y) = <x|y> s_(): the derived pairing (eta o eps^1) o inner."""
    return Pairing(
        lambda mu, nu: SymFunc.one() if mu == nu else SymFunc.zero(), "schur-hall"
    )


# -- convolution -------------------------------------------------------------

def convolve1(f: Cochain1, g: Cochain1) -> Cochain1:
    def fn(lam: Partition) -> SymFunc:
        out = SymFunc.zero()
        for (a, b), c in coproduct_basis(lam).items():
            out = out + outer_mul(f.on_basis(a), g.on_basis(b)).scale(c)
        return out

    return Cochain1(fn, f"({f.name})*({g.name})")


def convolve2(a: Pairing, b: Pairing) -> Pairing:
    def fn(mu: Partition, nu: Partition) -> SymFunc:
        out = SymFunc.zero()
        for (x1, x2), cx in coproduct_basis(mu).items():
            for (y1, y2), cy in coproduct_basis(nu).items():
                out = out + outer_mul(a.on_basis(x1, y1), b.on_basis(x2, y2)).scale(cx * cy)
        return out

    return Pairing(fn, f"({a.name})*({b.name})")


def milnor_moore_inverse1(f: Cochain1) -> Cochain1:
    """Convolutive inverse of a normalized 1-cochain via cut-coproduct recursion."""
    if not f.is_normalized():
        raise ValueError(f"cochain {f.name!r} violates the normalized flag (f(1) != 1)")
    memo: dict[Partition, SymFunc] = {(): SymFunc.one()}

    def inv(lam: Partition) -> SymFunc:
        hit = memo.get(lam)
        if hit is not None:
            return hit
        out = -f.on_basis(lam)
        for (a, b), c in coproduct_basis(lam).items():
            if not a or not b:
                continue
            out = out - outer_mul(inv(a), f.on_basis(b)).scale(c)
        memo[lam] = out
        return out

    return Cochain1(inv, f"inv({f.name})")


def milnor_moore_inverse2(a: Pairing) -> Pairing:
    """Convolutive inverse of a unital pairing (a(1,1) = 1 suffices:
    Sym (x) Sym is connected, so invertibility only constrains degree 0).

    Works in the Hopf algebra Sym (x) Sym: the cut coproduct keeps the leg
    pairs whose total degrees are both positive, so the recursion descends
    in total degree.
    """
    if not a.is_unital():
        raise ValueError(f"pairing {a.name!r} violates the unital flag (a(1,1) != 1)")
    memo: dict[tuple[Partition, Partition], SymFunc] = {((), ()): SymFunc.one()}

    def inv(mu: Partition, nu: Partition) -> SymFunc:
        key = (mu, nu)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = -a.on_basis(mu, nu)
        for (x1, x2), cx in coproduct_basis(mu).items():
            for (y1, y2), cy in coproduct_basis(nu).items():
                if (not x1 and not y1) or (not x2 and not y2):
                    continue
                out = out - outer_mul(inv(x1, y1), a.on_basis(x2, y2)).scale(cx * cy)
        memo[key] = out
        return out

    return Pairing(inv, f"inv({a.name})")


def coboundary1(f: Cochain1) -> Pairing:
    """Sweedler coboundary of an invertible 1-cochain:
    (eps (x) f) * (fbar o m) * (f (x) eps)."""
    fbar = milnor_moore_inverse1(f)

    def fn(mu: Partition, nu: Partition) -> SymFunc:
        from .schur import iterated_coproduct_basis

        out = SymFunc.zero()
        for (x1, x2, x3), cx in iterated_coproduct_basis(mu, 3).items():
            if x1:
                continue  # eps kills the first left leg
            for (y1, y2, y3), cy in iterated_coproduct_basis(nu, 3).items():
                if y3:
                    continue  # eps kills the last right leg
                mid = fbar(outer_mul(SymFunc.basis(x2), SymFunc.basis(y2)))
                term = outer_mul(outer_mul(f.on_basis(y1), mid), f.on_basis(x3))
                out = out + term.scale(cx * cy)
        return out

    return Pairing(fn, f"d({f.name})")


# -- property checkers -------------------------------------------------------

def _basis_triples(max_degree: int):
    basis = partitions_up_to(max_degree)
    for x in basis:
        for y in basis:
            if weight(x) + weight(y) > max_degree:
                continue
            for z in basis:
                if weight(x) + weight(y) + weight(z) > max_degree:
                    continue
                yield x, y, z


def is_cocycle2(c: Pairing, max_degree: int, witness: list | None = None) -> bool:
    """Inverse-free 2-cocycle identity (c o m1) * (c (x) eps) = (eps (x) c) * (c o m2)
    on basis triples of total weight <= max_degree."""
    for x, y, z in _basis_triples(max_degree):
        sx, sy, sz = SymFunc.basis(x), SymFunc.basis(y), SymFunc.basis(z)
        lhs = SymFunc.zero()
        for (x1, x2), cx in coproduct_basis(x).items():
            for (y1, y2), cy in coproduct_basis(y).items():
                head = c(outer_mul(SymFunc.basis(x1), SymFunc.basis(y1)), sz)
                lhs = lhs + outer_mul(head, c.on_basis(x2, y2)).scale(cx * cy)
        rhs = SymFunc.zero()
        for (y1, y2), cy in coproduct_basis(y).items():
            for (z1, z2), cz in coproduct_basis(z).items():
                tail = c(sx, outer_mul(SymFunc.basis(y2), SymFunc.basis(z2)))
                rhs = rhs + outer_mul(c.on_basis(y1, z1), tail).scale(cy * cz)
        if lhs != rhs:
            if witness is not None:
                witness.append((x, y, z, lhs, rhs))
            return False
    return True


def is_algebra_hom(f: Cochain1, max_degree: int, witness: list | None = None) -> bool:
    """1-cocycle test: f(x y) = f(x) f(y) on basis pairs up to the bound."""
    basis = partitions_up_to(max_degree)
    for x in basis:
        for y in basis:
            if weight(x) + weight(y) > max_degree:
                continue
            lhs = f(outer_mul(SymFunc.basis(x), SymFunc.basis(y)))
            rhs = outer_mul(f.on_basis(x), f.on_basis(y))
            if lhs != rhs:
                if witness is not None:
                    witness.append((x, y, lhs, rhs))
                return False
    return True


def is_laplace(a: Pairing, max_degree: int, witness: list | None = None) -> bool:
    """Left/right straightening: a(x, yz) = a(x1,y) a(x2,z), a(xy, z) = a(x,z1) a(y,z2)."""
    for x, y, z in _basis_triples(max_degree):
        sy, sz = SymFunc.basis(y), SymFunc.basis(z)
        right = a(SymFunc.basis(x), outer_mul(sy, sz))
        expand = SymFunc.zero()
        for (x1, x2), cx in coproduct_basis(x).items():
            expand = expand + outer_mul(a.on_basis(x1, y), a.on_basis(x2, z)).scale(cx)
        if right != expand:
            if witness is not None:
                witness.append(("right", x, y, z, right, expand))
            return False
        left = a(outer_mul(SymFunc.basis(x), sy), sz)
        expand = SymFunc.zero()
        for (z1, z2), cz in coproduct_basis(z).items():
            expand = expand + outer_mul(a.on_basis(x, z1), a.on_basis(y, z2)).scale(cz)
        if left != expand:
            if witness is not None:
                witness.append(("left", x, y, z, left, expand))
            return False
    return True


def _is_grade_preserving(a: Pairing, max_degree: int) -> bool:
    basis = partitions_up_to(max_degree)
    for x in basis:
        for y in basis:
            if weight(x) + weight(y) > max_degree:
                continue
            val = a.on_basis(x, y)
            if weight(x) != weight(y):
                if val:
                    return False
            elif val.degrees() - {weight(x)}:
                return False
    return True


def adjoint_comultiplication(a: Pairing, lam: Partition) -> TensorSymFunc:
    """delta_a(s_lam) via <delta_a(x)|mu (x) nu> = <x|a(mu,nu)>, per degree.

    Finite only for grade-preserving pairings, where both legs live in the
    degree of lam.
    """
    from .partitions import partitions_of

    n = weight(lam)
    out: dict[tuple[Partition, Partition], int] = {}
    for mu in partitions_of(n):
        for nu in partitions_of(n):
            c = scalar(SymFunc.basis(lam), a.on_basis(mu, nu))
            if c:
                out[(mu, nu)] = c
    return TensorSymFunc(out)


def is_frobenius(
    a: Pairing,
    max_degree: int,
    delta_a=None,
    witness: list | None = None,
) -> bool:
    """Frobenius Laplace test: grade preservation, per-grade unitality with
    the canonical unit s_(n) and counit law with eps1 (checked on every grade
    where the pairing is not identically zero), the Frobenius law
    x1 (x) a(x2, y) = delta_a(a(x,y)) = a(x, y1) (x) y2 with delta_a the
    dual comultiplication, and the mixed bialgebra law
    delta_a o m = (m (x) m) o (1 (x) sw (x) 1) o (delta_a (x) delta_a)."""
    if not _is_grade_preserving(a, max_degree):
        if witness is not None:
            witness.append(("not grade-preserving",))
        return False
    if delta_a is None:
        def delta_a(lam):
            return adjoint_comultiplication(a, lam)

    def delta_lin(f: SymFunc) -> TensorSymFunc:
        out = TensorSymFunc()
        for lam, c in f.terms.items():
            out = out + delta_a(lam).scale(c)
        return out

    basis = partitions_up_to(max_degree)
    # Unit and counit per grade: on every degree n where a does not vanish
    # identically, s_(n) must be a two-sided unit and eps1 the counit of the
    # dual comultiplication.  (Grades on which a is zero carry no algebra
    # structure to test; this keeps the convolution unit e2 Frobenius.)
    by_degree: dict[int, list[Partition]] = {}
    for lam in basis:
        by_degree.setdefault(weight(lam), []).append(lam)
    for n, grade in by_degree.items():
        if n == 0:
            continue
        if all(not a.on_basis(x, y).terms for x in grade for y in grade):
            continue
        for x in grade:
            if a.on_basis((n,), x) != SymFunc.basis(x):
                if witness is not None:
                    witness.append(("unit", n, x, a.on_basis((n,), x)))
                return False
            restored = SymFunc.zero()
            for (x1, x2), c in delta_a(x).terms.items():
                if x1 == (n,):
                    restored = restored + SymFunc.basis(x2).scale(c)
            if restored != SymFunc.basis(x):
                if witness is not None:
                    witness.append(("counit", n, x, restored))
                return False
    for x in basis:
        for y in basis:
            if weight(x) + weight(y) > max_degree:
                continue
            # Frobenius law on equal degrees (a vanishes otherwise).
            if weight(x) == weight(y):
                middle = delta_lin(a.on_basis(x, y))
                lhs = TensorSymFunc()
                for (y1, y2), cy in delta_a(y).terms.items():
                    lhs = lhs + tensor(a.on_basis(x, y1), SymFunc.basis(y2)).scale(cy)
                rhs = TensorSymFunc()
                for (x1, x2), cx in delta_a(x).terms.items():
                    rhs = rhs + tensor(SymFunc.basis(x1), a.on_basis(x2, y)).scale(cx)
                if not (lhs == middle == rhs):
                    if witness is not None:
                        witness.append(("frobenius-law", x, y, lhs, middle, rhs))
                    return False
            # Mixed bialgebra law on all pairs.
            lhs = delta_lin(outer_mul(SymFunc.basis(x), SymFunc.basis(y)))
            rhs = TensorSymFunc()
            for (x1, x2), cx in delta_a(x).terms.items():
                for (y1, y2), cy in delta_a(y).terms.items():
                    rhs = rhs + tensor(
                        outer_mul(SymFunc.basis(x1), SymFunc.basis(y1)),
                        outer_mul(SymFunc.basis(x2), SymFunc.basis(y2)),
                    ).scale(cx * cy)
            if lhs != rhs:
                if witness is not None:
                    witness.append(("mixed-bialgebra", x, y, lhs, rhs))
                return False
    return True


def derived_pairing(a: Pairing, phi: Cochain1, max_degree: int = 4) -> Pairing:
    """a_phi = phi o a; phi must be an algebra homomorphism (1-cocycle)."""
    if not is_algebra_hom(phi, max_degree):
        raise ValueError(f"cochain {phi.name!r} is not an algebra homomorphism")
    return Pairing(lambda mu, nu: phi(a.on_basis(mu, nu)), f"{phi.name}.{a.name}")


def frobenius_inverse(a: Pairing, max_degree: int = 4) -> Pairing:
    """abar = S o a for a Frobenius Laplace pairing."""
    if not is_frobenius(a, max_degree):
        raise ValueError(f"pairing {a.name!r} is not Frobenius up to degree {max_degree}")
    return Pairing(lambda mu, nu: antipode(a.on_basis(mu, nu)), f"S.{a.name}")


def cochains_equal(f: Cochain1, g: Cochain1, max_degree: int) -> bool:
    return all(
        f.on_basis(lam) == g.on_basis(lam) for lam in partitions_up_to(max_degree)
    )


def pairings_equal(a: Pairing, b: Pairing, max_degree: int) -> bool:
    basis = partitions_up_to(max_degree)
    return all(
        a.on_basis(x, y) == b.on_basis(x, y)
        for x in basis
        for y in basis
        if weight(x) + weight(y) <= max_degree
    )
