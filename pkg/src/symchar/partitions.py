"""Integer partition arithmetic.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the zero partition.  All functions are pure.
"""

from __future__ import annotations

import math
from functools import cache

Partition = tuple[int, ...]
Composition = tuple[int, ...]

EMPTY: Partition = ()


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts) -> Partition:
    """Canonicalize a weakly decreasing sequence, stripping trailing zeros."""
    parts = tuple(int(p) for p in parts if p != 0)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def weight(lam: Partition) -> int:
    return sum(lam)


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def z_and_n(lam: Partition) -> tuple[int, int]:
    """Return (z_lambda, n(lambda)).

    z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i;
    n(lambda) = sum_i (i-1) lambda_i.
    """
    z = 1
    mult: dict[int, int] = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        z *= p**m * math.factorial(m)
    n = sum(i * p for i, p in enumerate(lam))
    return z, n


def frobenius(lam: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Frobenius form (arms, legs): a_k = lam_k - k, b_k = lam'_k - k (0-based cells on the diagonal)."""
    conj = conjugate(lam)
    r = sum(1 for k in range(len(lam)) if lam[k] >= k + 1)
    arms = tuple(lam[k] - (k + 1) for k in range(r))
    legs = tuple(conj[k] - (k + 1) for k in range(r))
    return arms, legs


def from_frobenius(arms: tuple[int, ...], legs: tuple[int, ...]) -> Partition:
    arms, legs = tuple(arms), tuple(legs)
    if len(arms) != len(legs):
        raise ValueError("arms and legs must have equal length")
    for seq in (arms, legs):
        if any(s < 0 for s in seq) or any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError("arms and legs must be strictly decreasing and non-negative")
    r = len(arms)
    rows = [arms[k] + k + 1 for k in range(r)]
    # Column lengths below the diagonal determine the remaining rows.
    col = [legs[k] + k + 1 for k in range(r)]
    extra = []
    for i in range(r, max(col, default=0)):
        row = sum(1 for c in col if c >= i + 1)
        if row == 0:
            break
        extra.append(row)
    return make_partition(rows + extra)


def rank(lam: Partition) -> int:
    return sum(1 for k in range(len(lam)) if lam[k] >= k + 1)


def in_class(lam: Partition, cls: str) -> bool:
    """Membership in the partition classes P, A, B, C, D, E.

    D: all parts even; B: conjugate in D; A/C/E: all Frobenius arm-leg
    differences equal -1 / +1 / 0 (E = self-conjugate).
    """
    if cls == "P":
        return True
    if cls == "D":
        return all(p % 2 == 0 for p in lam)
    if cls == "B":
        return in_class(conjugate(lam), "D")
    if cls in ("A", "C", "E"):
        target = {"A": -1, "C": 1, "E": 0}[cls]
        arms, legs = frobenius(lam)
        return all(a - b == target for a, b in zip(arms, legs))
    raise ValueError(f"unknown partition class {cls!r}")


def standardize(comp) -> tuple[int, Partition]:
    """Standardize a composition with raising operators.

    Applies R_{i,i+1}[..., t_i, t_{i+1}, ...] = -[..., t_{i+1}-1, t_i+1, ...]
    at descents until sorted.  Returns (sign, partition); sign 0 when a swap
    hits the fixed point t_{i+1} = t_i + 1 (so R(T) = -T) or a negative part
    survives standardization.
    """
    parts = [int(p) for p in comp]
    sign = 1
    # Bubble passes; each swap strictly decreases the number of inversions
    # of the adjusted sequence (t_i - i), so len^2 passes always suffice.
    for _ in range(len(parts) * len(parts) + 1):
        swapped = False
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                if parts[i + 1] == parts[i] + 1:
                    return 0, ()
                parts[i], parts[i + 1] = parts[i + 1] - 1, parts[i] + 1
                sign = -sign
                swapped = True
        if not swapped:
            break
    else:  # pragma: no cover - unreachable guard
        return 0, ()
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p < 0 for p in parts):
        return 0, ()
    return sign, tuple(parts)


def hooks_and_contents(lam: Partition) -> list[tuple[tuple[int, int], int, int]]:
    """Per-cell ((row, col) 1-based, content j-i, hook lam_i + lam'_j - i - j + 1)."""
    conj = conjugate(lam)
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out.append(((i, j), j - i, row + conj[j - 1] - i - j + 1))
    return out


@cache
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part, reverse-lex order."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> list[Partition]:
    out: list[Partition] = []
    for d in range(n + 1):
        out.extend(partitions_of(d))
    return out


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment mu subset-of lam."""
    if len(mu) > len(lam):
        return False
    return all(lam[i] >= mu[i] for i in range(len(mu)))


def parse_partition(text: str) -> Partition:
    """Parse "4,2,2,1", "0"/"" (empty), or exponent form "[1,2^2,4]"."""
    text = text.strip()
    if text in ("", "0", "()", "[]"):
        return ()
    if text.startswith("[") and text.endswith("]"):
        parts: list[int] = []
        for tok in text[1:-1].split(","):
            tok = tok.strip()
            if not tok:
                continue
            if "^" in tok:
                base, _, exp = tok.partition("^")
                parts.extend([int(base)] * int(exp))
            else:
                parts.append(int(tok))
        return make_partition(sorted(parts, reverse=True))
    return make_partition(int(tok) for tok in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"
