"""The Hopf algebra of symmetric functions in the Schur basis.

Elements are sparse integer combinations of Schur functions indexed by
partitions.  The outer product is computed by Littlewood-Richardson
skew-tableau counting; the coproduct by skewing; the independent oracle
is semistandard-tableau monomial expansion.
"""

from __future__ import annotations

from functools import cache

from .partitions import (
    Partition,
    conjugate,
    contains,
    format_partition,
    partitions_of,
    weight,
)

Monomial = tuple[int, ...]


class SymFunc:
    """A finite integer-linear combination of Schur functions."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # -- constructors -------------------------------------------------
    @staticmethod
    def basis(lam) -> "SymFunc":
        return SymFunc({tuple(lam): 1})

    @staticmethod
    def zero() -> "SymFunc":
        return SymFunc()

    @staticmethod
    def one() -> "SymFunc":
        return SymFunc({(): 1})

    # -- ring structure ----------------------------------------------
    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SymFunc(out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return SymFunc(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc({k: -v for k, v in self.terms.items()})

    def scale(self, c: int) -> "SymFunc":
        return SymFunc({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, SymFunc):
            return outer_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure queries -------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {weight(k) for k in self.terms}

    def homogeneous(self, d: int) -> "SymFunc":
        return SymFunc({k: v for k, v in self.terms.items() if weight(k) == d})

    def max_degree(self) -> int:
        return max((weight(k) for k in self.terms), default=0)

    def truncate(self, cap: int) -> "SymFunc":
        return SymFunc({k: v for k, v in self.terms.items() if weight(k) <= cap})

    def coeff(self, lam: Partition) -> int:
        return self.terms.get(tuple(lam), 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, key=lambda p: (weight(p), tuple(-x for x in p))):
            c = self.terms[lam]
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            bits.append(f"{sign} {mag}s[{format_partition(lam)}]")
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def s(*parts) -> SymFunc:
    """Schur basis element s(2,1) etc.; s() is the unit."""
    return SymFunc.basis(parts)


def h(n: int) -> SymFunc:
    """Complete symmetric function h_n = s_(n)."""
    return SymFunc.basis((n,) if n > 0 else ())


def e(n: int) -> SymFunc:
    """Elementary symmetric function e_n = s_(1^n)."""
    return SymFunc.basis((1,) * n)


class TensorSymFunc:
    """A finite integer-linear combination of pairs s_mu (x) s_nu."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[Partition, Partition], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @staticmethod
    def basis(mu, nu) -> "TensorSymFunc":
        return TensorSymFunc({(tuple(mu), tuple(nu)): 1})

    def __add__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TensorSymFunc(out)

    def __sub__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return TensorSymFunc(out)

    def __neg__(self) -> "TensorSymFunc":
        return TensorSymFunc({k: -v for k, v in self.terms.items()})

    def scale(self, c: int) -> "TensorSymFunc":
        return TensorSymFunc({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        """Componentwise (outer) product on Sym (x) Sym."""
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, TensorSymFunc):
            out: dict[tuple[Partition, Partition], int] = {}
            for (a, b), c1 in self.terms.items():
                for (u, v), c2 in other.terms.items():
                    left = product_basis(a, u)
                    right = product_basis(b, v)
                    for la, cl in left.items():
                        for rb, cr in right.items():
                            key = (la, rb)
                            out[key] = out.get(key, 0) + c1 * c2 * cl * cr
            return TensorSymFunc(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSymFunc) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def swap(self) -> "TensorSymFunc":
        return TensorSymFunc({(b, a): v for (a, b), v in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [
            f"{'+' if c >= 0 else '-'} {'' if abs(c) == 1 else str(abs(c)) + '*'}"
            f"s[{format_partition(a)}](x)s[{format_partition(b)}]"
            for (a, b), c in sorted(self.terms.items())
        ]
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def tensor(f: SymFunc, g: SymFunc) -> TensorSymFunc:
    return TensorSymFunc(
        {(a, b): cf * cg for a, cf in f.terms.items() for b, cg in g.terms.items()}
    )


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule
# ---------------------------------------------------------------------------

@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu}: LR skew tableaux of shape lam/mu and content nu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so semistandardness and the lattice-word condition are
    both checkable incrementally.
    """
    if weight(lam) != weight(mu) + weight(nu):
        return 0
    if not contains(lam, mu):
        return 0
    if not nu:
        return 1
    cells = []
    for i in range(len(lam)):
        lo = mu[i] if i < len(mu) else 0
        for j in range(lam[i] - 1, lo - 1, -1):
            cells.append((i, j))
    k = len(nu)
    counts = [0] * (k + 1)
    grid: dict[tuple[int, int], int] = {}
    total = 0

    def fill(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        hi = k
        right = grid.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = grid.get((i - 1, j))
        lo = above + 1 if above is not None else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            grid[(i, j)] = v
            fill(pos + 1)
            del grid[(i, j)]
            counts[v] -= 1

    fill(0)
    return total


@cache
def product_basis(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of s_mu s_nu in the Schur basis."""
    if (mu, nu) > (nu, mu):
        return product_basis(nu, mu)
    n = weight(mu) + weight(nu)
    maxlen = len(mu) + len(nu)
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):
        if len(lam) > maxlen or (lam and mu and nu and lam[0] > mu[0] + nu[0]):
            continue
        if not (contains(lam, mu) and contains(lam, nu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return out


def outer_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    out: dict[Partition, int] = {}
    for mu, cf in f.terms.items():
        for nu, cg in g.terms.items():
            for lam, c in product_basis(mu, nu).items():
                out[lam] = out.get(lam, 0) + cf * cg * c
    return SymFunc(out)


@cache
def skew_basis(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Schur expansion of the skew function s_{lam/mu}."""
    if not contains(lam, mu):
        return {}
    n = weight(lam) - weight(mu)
    out: dict[Partition, int] = {}
    for nu in partitions_of(n):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def skew(f: SymFunc, g: SymFunc) -> SymFunc:
    """s_nu-perp applied to f, bilinear in both slots: adjoint of multiplication."""
    out: dict[Partition, int] = {}
    for lam, cf in f.terms.items():
        for mu, cg in g.terms.items():
            for nu, c in skew_basis(lam, mu).items():
                out[nu] = out.get(nu, 0) + cf * cg * c
    return SymFunc(out)


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

def unit() -> SymFunc:
    return SymFunc.one()


def counit(f: SymFunc) -> int:
    return f.terms.get((), 0)


@cache
def coproduct_basis(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    """Delta(s_lam) = sum_eta s_{lam/eta} (x) s_eta."""
    out: dict[tuple[Partition, Partition], int] = {}
    for d in range(weight(lam) + 1):
        for eta in partitions_of(d):
            for nu, c in skew_basis(lam, eta).items():
                out[(nu, eta)] = out.get((nu, eta), 0) + c
    return out


def coproduct(f: SymFunc) -> TensorSymFunc:
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, cf in f.terms.items():
        for key, c in coproduct_basis(lam).items():
            out[key] = out.get(key, 0) + cf * c
    return TensorSymFunc(out)


def cut_coproduct(f: SymFunc) -> TensorSymFunc:
    """Delta' : coproduct terms with both legs of positive degree; zero in degree 0."""
    full = coproduct(f)
    return TensorSymFunc({(a, b): c for (a, b), c in full.terms.items() if a and b})


def antipode(f: SymFunc) -> SymFunc:
    """S(s_lam) = (-1)^{|lam|} s_{lam'}."""
    out: dict[Partition, int] = {}
    for lam, c in f.terms.items():
        key = conjugate(lam)
        out[key] = out.get(key, 0) + c * (-1) ** weight(lam)
    return SymFunc(out)


def scalar(f: SymFunc, g: SymFunc) -> int:
    """Schur-Hall scalar product: Schur functions are orthonormal."""
    if len(f.terms) > len(g.terms):
        f, g = g, f
    return sum(c * g.terms.get(lam, 0) for lam, c in f.terms.items())


def scalar_tensor(x: TensorSymFunc, y: TensorSymFunc) -> int:
    if len(x.terms) > len(y.terms):
        x, y = y, x
    return sum(c * y.terms.get(k, 0) for k, c in x.terms.items())


@cache
def iterated_coproduct_basis(lam: Partition, k: int) -> dict[tuple[Partition, ...], int]:
    """Delta^{(k)} on a basis element: map k-tuples of partitions -> coefficient (k >= 1)."""
    if k == 1:
        return {(lam,): 1}
    out: dict[tuple[Partition, ...], int] = {}
    for legs, c in iterated_coproduct_basis(lam, k - 1).items():
        for (a, b), c2 in coproduct_basis(legs[-1]).items():
            key = legs[:-1] + (a, b)
            out[key] = out.get(key, 0) + c * c2
    return out


def loop(r: int, f: SymFunc) -> SymFunc:
    """[r] = m^{(r-1)} o Delta^{(r-1)}; [1] = Id."""
    if r < 1:
        raise ValueError("loop order must be >= 1")
    if r == 1:
        return f
    out = SymFunc.zero()
    for lam, cf in f.terms.items():
        for legs, c in iterated_coproduct_basis(lam, r).items():
            prod = SymFunc.one()
            for leg in legs:
                prod = outer_mul(prod, SymFunc.basis(leg))
            out = out + prod.scale(cf * c)
    return out


# ---------------------------------------------------------------------------
# Monomial-expansion oracle
# ---------------------------------------------------------------------------

@cache
def eval_monomials(lam: Partition, n_vars: int) -> dict[Monomial, int]:
    """s_lam(x_1..x_N) by semistandard-tableau enumeration.

    Returns a sparse polynomial: exponent tuple of length n_vars -> coefficient.
    """
    if n_vars < 0:
        raise ValueError("n_vars must be >= 0")
    if len(lam) > n_vars:
        return {}
    if not lam:
        return {(0,) * n_vars: 1}
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    grid: dict[tuple[int, int], int] = {}
    poly: dict[Monomial, int] = {}

    def fill(pos: int, expo: list[int]) -> None:
        if pos == len(cells):
            key = tuple(expo)
            poly[key] = poly.get(key, 0) + 1
            return
        i, j = cells[pos]
        left = grid.get((i, j - 1), 1)
        above = grid.get((i - 1, j))
        lo = max(left, above + 1 if above is not None else 1)
        for v in range(lo, n_vars + 1):
            grid[(i, j)] = v
            expo[v - 1] += 1
            fill(pos + 1, expo)
            expo[v - 1] -= 1
            del grid[(i, j)]

    fill(0, [0] * n_vars)
    return poly


def poly_mul(p: dict[Monomial, int], q: dict[Monomial, int]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def eval_polynomial(f: SymFunc, n_vars: int) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for lam, c in f.terms.items():
        for expo, m in eval_monomials(lam, n_vars).items():
            out[expo] = out.get(expo, 0) + c * m
    return {k: v for k, v in out.items() if v}


def dimension_gl(lam: Partition, d: int) -> int:
    """s_lam(1^d): dimension of the GL(d) irreducible with highest weight lam."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return sum(eval_monomials(lam, d).values())
