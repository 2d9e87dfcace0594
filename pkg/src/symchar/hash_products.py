"""Deformed (hash) products on symmetric functions.

A hash spec lists stages (pairing, algebra-hom cochain) plus a final
cochain applied to the ambient multiplication; the product is the
convolution of the derived pairings with the (derived) multiplication,
evaluated through iterated coproducts of both arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .convolution import (
    Cochain1,
    Pairing,
    convolve2,
    derived_pairing,
    eps1_cochain,
    identity_cochain,
    inner_pairing,
    is_algebra_hom,
    is_frobenius,
    is_laplace,
    unit_pairing,
)
from .partitions import Partition, partitions_up_to, weight
from .schur import (
    SymFunc,
    TensorSymFunc,
    coproduct,
    iterated_coproduct_basis,
    outer_mul,
    scalar,
    tensor,
)
from .series import INVERSE_PAIR, check_inverse_pair, series_degree_term, skew_by_series

CHECK_DEGREE = 4  # working bound for validating spec components


@dataclass(frozen=True)
class HashSpec:
    stages: tuple[tuple[Pairing, Cochain1], ...]
    final_cocycle: Cochain1 = field(default_factory=identity_cochain)
    name: str = "hash"


def named_spec(name: str) -> HashSpec:
    if name == "trivial":
        return HashSpec((), identity_cochain(), "trivial")
    if name == "thibon":
        return HashSpec(((inner_pairing(), identity_cochain()),), identity_cochain(), "thibon")
    if name == "newell-littlewood":
        return HashSpec(((inner_pairing(), eps1_cochain()),), identity_cochain(), "newell-littlewood")
    if name == "murnaghan-littlewood":
        return HashSpec(
            ((inner_pairing(), eps1_cochain()), (inner_pairing(), identity_cochain())),
            identity_cochain(),
            "murnaghan-littlewood",
        )
    raise ValueError(f"unknown hash spec {name!r}")


def validate_spec(spec: HashSpec, max_degree: int = CHECK_DEGREE) -> None:
    for i, (pairing, cocycle) in enumerate(spec.stages):
        if not is_laplace(pairing, max_degree):
            raise ValueError(
                f"stage {i} pairing {pairing.name!r} fails the Laplace check"
            )
        if not is_algebra_hom(cocycle, max_degree):
            raise ValueError(
                f"stage {i} cochain {cocycle.name!r} is not an algebra homomorphism"
            )
    if not is_algebra_hom(spec.final_cocycle, max_degree):
        raise ValueError(
            f"final cochain {spec.final_cocycle.name!r} is not an algebra homomorphism"
        )


def build_hash(spec: HashSpec, validate: bool = True):
    """Return the binary operation x # y on SymFunc for the given spec."""
    if validate:
        validate_spec(spec)
    k = len(spec.stages)

    def product(f: SymFunc, g: SymFunc) -> SymFunc:
        out = SymFunc.zero()
        for mu, cf in f.terms.items():
            xsplits = iterated_coproduct_basis(mu, k + 1)
            for nu, cg in g.terms.items():
                ysplits = iterated_coproduct_basis(nu, k + 1)
                for xlegs, cx in xsplits.items():
                    for ylegs, cy in ysplits.items():
                        term = SymFunc.one()
                        for i, (pairing, cocycle) in enumerate(spec.stages):
                            factor = cocycle(pairing.on_basis(xlegs[i], ylegs[i]))
                            if not factor:
                                term = SymFunc.zero()
                                break
                            term = outer_mul(term, factor)
                        if not term:
                            continue
                        tail = spec.final_cocycle(
                            outer_mul(SymFunc.basis(xlegs[k]), SymFunc.basis(ylegs[k]))
                        )
                        out = out + outer_mul(term, tail).scale(cf * cg * cx * cy)
        return out

    return product


def composite_pairing(spec: HashSpec) -> Pairing:
    """The convolution product of the spec's derived pairings (e2 when empty)."""
    acc = unit_pairing()
    for pairing, cocycle in spec.stages:
        acc = convolve2(acc, derived_pairing(pairing, cocycle, CHECK_DEGREE))
    return acc


def hash_is_hopf(spec: HashSpec, max_degree: int = CHECK_DEGREE) -> bool:
    """True iff the composite derived pairing is Frobenius; cross-validated
    against the bialgebra law Delta(x # y) = Delta(x) #(x)# Delta(y)."""
    frob = is_frobenius(composite_pairing(spec), max_degree)
    bialg = _bialgebra_law_holds(spec, max_degree)
    if frob != bialg:
        raise AssertionError(
            f"hash spec {spec.name!r}: Frobenius check ({frob}) disagrees with "
            f"bialgebra-law check ({bialg})"
        )
    return frob


def _bialgebra_law_holds(spec: HashSpec, max_degree: int) -> bool:
    product = build_hash(spec, validate=False)
    basis = partitions_up_to(max_degree)
    for x in basis:
        for y in basis:
            if weight(x) + weight(y) > max_degree:
                continue
            lhs = coproduct(product(SymFunc.basis(x), SymFunc.basis(y)))
            rhs = TensorSymFunc()
            for (x1, x2), cx in coproduct(SymFunc.basis(x)).terms.items():
                for (y1, y2), cy in coproduct(SymFunc.basis(y)).terms.items():
                    rhs = rhs + tensor(
                        product(SymFunc.basis(x1), SymFunc.basis(y1)),
                        product(SymFunc.basis(x2), SymFunc.basis(y2)),
                    ).scale(cx * cy)
            if lhs != rhs:
                return False
    return True


# -- series-deformed coproduct and basis change ------------------------------

def _validated_pair(pair: tuple[str, str], cap: int) -> tuple[str, str]:
    m_tag, l_tag = pair
    if INVERSE_PAIR.get(m_tag) != l_tag or not check_inverse_pair(m_tag, l_tag, cap):
        raise ValueError(f"series pair {pair!r} is not mutually inverse up to degree {cap}")
    return m_tag, l_tag


def deformed_coproduct(f: SymFunc, pair: tuple[str, str]) -> TensorSymFunc:
    """Delta_pi(x) = x1 (x) x2 <M_pi(1)|x3>, the series-twisted coproduct."""
    cap = f.max_degree()
    m_tag, _ = _validated_pair(pair, cap)
    out = TensorSymFunc()
    for lam, c in f.terms.items():
        for (x1, x2, x3), cc in iterated_coproduct_basis(lam, 3).items():
            w = scalar(series_degree_term(m_tag, weight(x3)), SymFunc.basis(x3))
            if w:
                out = out + TensorSymFunc.basis(x1, x2).scale(c * cc * w)
    return out


def basis_change(f: SymFunc, direction: str, pair: tuple[str, str]) -> SymFunc:
    """to_subgroup: f / M_pi; to_group: f / L_pi (mutually inverse skews)."""
    m_tag, l_tag = _validated_pair(pair, f.max_degree())
    if direction == "to_subgroup":
        return skew_by_series(f, m_tag)
    if direction == "to_group":
        return skew_by_series(f, l_tag)
    raise ValueError(f"unknown direction {direction!r}")
