"""Text and JSON formats for symmetric functions and character labels."""

from __future__ import annotations

import re

from .partitions import Partition, format_partition, parse_partition, weight
from .schur import SymFunc, TensorSymFunc

_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?s\[([^\]]*)\]")

BRACKETS = {
    "gl": ("{", "}"),
    "o": ("[", "]"),
    "sp": ("<", ">"),
    "thibon": ("<<", ">>"),
    "reduced": ("<", ">"),
}


def parse_symfunc(text: str) -> SymFunc:
    """Parse e.g. "s[2] + s[1,1] - 3*s[3]"; a bare partition is one basis term."""
    text = text.strip()
    if not text:
        raise ValueError("empty symmetric-function expression")
    if "s[" not in text:
        return SymFunc.basis(parse_partition(text))
    out = SymFunc.zero()
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse symmetric function at: {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        lam = parse_partition(m.group(3))
        out = out + SymFunc.basis(lam).scale(sign * coeff)
        pos = m.end()
    return out


def term_order(lam: Partition):
    """Sort key: by weight, then reverse-lex within a weight."""
    return (weight(lam), tuple(-p for p in lam))


def format_symfunc(f: SymFunc, kind: str = "gl") -> str:
    if not f.terms:
        return "0"
    lo, hi = BRACKETS.get(kind, ("s[", "]"))
    bits = []
    for lam in sorted(f.terms, key=term_order):
        c = f.terms[lam]
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        bits.append(f"{sign} {mag}{lo}{format_partition(lam)}{hi}")
    text = " ".join(bits)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def symfunc_json(f: SymFunc, kind: str, cap: int | None = None) -> dict:
    terms = [
        {"label": {"kind": kind, "partition": list(lam)}, "coeff": f.terms[lam]}
        for lam in sorted(f.terms, key=term_order)
    ]
    return {"terms": terms, "meta": {"cap": cap}}


def parse_rational_label(text: str) -> tuple[Partition, Partition]:
    """Parse "kappa;lam" rational-character labels, e.g. "1;1" or "2,1;0"."""
    if ";" not in text:
        raise ValueError(f"rational label needs a ';': {text!r}")
    co, _, contra = text.partition(";")
    return parse_partition(co), parse_partition(contra)


def format_rational(x: TensorSymFunc) -> str:
    if not x.terms:
        return "0"
    bits = []
    for (lam, mu) in sorted(x.terms, key=lambda k: (term_order(k[0]), term_order(k[1]))):
        c = x.terms[(lam, mu)]
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        bits.append(f"{sign} {mag}{{{format_partition(lam)};{format_partition(mu)}~}}")
    text = " ".join(bits)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def rational_json(x: TensorSymFunc, cap: int | None = None) -> dict:
    terms = [
        {
            "label": {"kind": "rational", "partition": list(lam), "contra": list(mu)},
            "coeff": x.terms[(lam, mu)],
        }
        for (lam, mu) in sorted(
            x.terms, key=lambda k: (term_order(k[0]), term_order(k[1]))
        )
    ]
    return {"terms": terms, "meta": {"cap": cap}}
