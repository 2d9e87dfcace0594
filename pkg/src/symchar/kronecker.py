"""Inner (Kronecker) product on symmetric functions.

Characters of the symmetric groups are computed with the
Murnaghan-Nakayama border-strip recursion on beta-number sets; per-degree
Kronecker coefficients come from the character-table triple sum.
"""

from __future__ import annotations

import math
from functools import cache

from .partitions import Partition, partitions_of, weight, z_and_n
from .schur import SymFunc, TensorSymFunc


@cache
def _beta_set(lam: Partition, size: int) -> tuple[int, ...]:
    """First-column hook lengths padded to `size` beta numbers."""
    padded = list(lam) + [0] * (size - len(lam))
    return tuple(sorted(padded[i] + (size - 1 - i) for i in range(size)))


def _beta_to_partition(betas: frozenset[int]) -> Partition:
    ordered = sorted(betas, reverse=True)
    size = len(ordered)
    parts = [b - (size - 1 - i) for i, b in enumerate(ordered)]
    return tuple(p for p in parts if p > 0)


@cache
def _character_beta(betas: frozenset[int], rho: Partition) -> int:
    """Murnaghan-Nakayama on a beta-number set; strips of size r move a beta
    number down by r, with sign from the number of betas jumped over."""
    if not rho:
        return 1
    r = rho[0]
    rest = rho[1:]
    total = 0
    for b in betas:
        if b - r < 0 or (b - r) in betas:
            continue
        height = sum(1 for x in betas if b - r < x < b)
        new = frozenset(x for x in betas if x != b) | {b - r}
        total += (-1) ** height * _character_beta(new, rest)
    return total


def character(lam: Partition, rho: Partition) -> int:
    """Irreducible symmetric-group character chi^lam(rho), |lam| = |rho|."""
    lam, rho = tuple(lam), tuple(rho)
    if weight(lam) != weight(rho):
        raise ValueError(
            f"weight mismatch: |{lam}| = {weight(lam)} but |{rho}| = {weight(rho)}"
        )
    size = max(len(lam), 1)
    return _character_beta(frozenset(_beta_set(lam, size)), rho)


@cache
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of the symmetric group on n letters."""
    return {
        (lam, rho): character(lam, rho)
        for lam in partitions_of(n)
        for rho in partitions_of(n)
    }


@cache
def kronecker_basis(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of s_mu * s_nu; zero unless |mu| = |nu|."""
    n = weight(mu)
    if n != weight(nu):
        return {}
    table = character_table(n)
    classes = [(rho, z_and_n(rho)[0]) for rho in partitions_of(n)]
    weights = [(rho, z, table[(mu, rho)] * table[(nu, rho)]) for rho, z in classes]
    den = math.lcm(*(z for _, z in classes)) if classes else 1
    out: dict[Partition, int] = {}
    for lam in partitions_of(n):
        acc = sum(w * table[(lam, rho)] * (den // z) for rho, z, w in weights)
        q, r = divmod(acc, den)
        if r:
            raise ArithmeticError("non-integer Kronecker coefficient")
        if q:
            out[lam] = q
    return out


def inner_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    out: dict[Partition, int] = {}
    for mu, cf in f.terms.items():
        for nu, cg in g.terms.items():
            for lam, c in kronecker_basis(mu, nu).items():
                out[lam] = out.get(lam, 0) + cf * cg * c
    return SymFunc(out)


@cache
def inner_coproduct_basis(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    """delta(s_lam) = sum g^lam_{mu,nu} s_mu (x) s_nu (adjoint of inner_mul)."""
    n = weight(lam)
    out: dict[tuple[Partition, Partition], int] = {}
    for mu in partitions_of(n):
        for nu, c in kronecker_basis(lam, mu).items():
            # g^lam_{mu,nu} is fully symmetric in its three indices.
            out[(mu, nu)] = c
    return out


def inner_coproduct(f: SymFunc) -> TensorSymFunc:
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, cf in f.terms.items():
        for key, c in inner_coproduct_basis(lam).items():
            out[key] = out.get(key, 0) + cf * c
    return TensorSymFunc(out)


def counit_eps1(f: SymFunc) -> int:
    """Coefficient sum over one-row partitions (including the empty one)."""
    return sum(c for lam, c in f.terms.items() if len(lam) <= 1)
