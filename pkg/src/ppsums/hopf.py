"""Product, coproduct and the involutions psi, rho, omega on QSym.

The general product and the two-alphabet coproduct go through finite-variable
truncations; the power-sum shuffle and deconcatenation rules are the fast
paths that get checked against them.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

from .compositions import (
    Composition,
    as_composition,
    complement,
    deconcatenations,
    reverse,
    shuffles,
    transpose,
    z_value,
)
from .posets import WeightedLabelledPoset, lower_sets
from .ppartitions import TruncatedPolynomial, evaluate, qsym_from_truncation, two_alphabet_truncation
from .qsym import QSymElement, normalize_basis, poset_to_M, term_to_json

Pair = tuple[Composition, Composition]


class TensorElement:
    """Sparse element of QSym (x) QSym; both tensor factors share one basis tag."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | Iterable = ()):
        basis = normalize_basis(basis)
        acc: dict[Pair, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            key = (as_composition(a), as_composition(b))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        order = sorted(acc, key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", {k: acc[k] for k in order if acc[k]})

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    @property
    def terms(self) -> Mapping[Pair, Fraction]:
        return dict(self._terms)

    def coefficient(self, left, right) -> Fraction:
        return self._terms.get((as_composition(left), as_composition(right)), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        a, b = (self, other) if self.basis == other.basis else (self.to_M(), other.to_M())
        return TensorElement(a.basis, [*a._terms.items(), *b._terms.items()])

    def to_M(self) -> "TensorElement":
        if self.basis == "M":
            return self
        acc: dict[Pair, Fraction] = {}
        for (a, b), c in self._terms.items():
            left = QSymElement.basis_element(self.basis, a).to_M()
            right = QSymElement.basis_element(self.basis, b).to_M()
            for la, lc in left.terms.items():
                for rb, rc in right.terms.items():
                    acc[(la, rb)] = acc.get((la, rb), Fraction(0)) + c * lc * rc
        return TensorElement("M", acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.basis == other.basis:
            return self._terms == other._terms
        return self.to_M()._terms == other.to_M()._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"TensorElement({self.basis!r}, {self.to_plain()!r})"

    def __str__(self) -> str:
        return self.to_plain()

    def to_plain(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, ((a, b), c) in enumerate(self._terms.items()):
            body = f"{abs(c)}*{self.basis}[{a}] (x) {self.basis}[{b}]"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    def to_json_obj(self) -> dict:
        one = Fraction(1)
        terms = []
        for (a, b), c in self._terms.items():
            terms.append({
                "left": {"basis": self.basis, **term_to_json(a, one)},
                "right": {"basis": self.basis, **term_to_json(b, one)},
                "coeff": {"num": c.numerator, "den": c.denominator},
            })
        return {"terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "TensorElement":
        terms = []
        bases = set()
        for t in obj["terms"]:
            left, right = t["left"], t["right"]
            bases.update((left["basis"], right["basis"]))
            lc = Fraction(left["coeff"]["num"], left["coeff"]["den"])
            rc = Fraction(right["coeff"]["num"], right["coeff"]["den"])
            c = Fraction(t["coeff"]["num"], t["coeff"]["den"]) * lc * rc
            terms.append(((Composition(left["composition"]), Composition(right["composition"])), c))
        if len(bases) > 1:
            raise ValueError(f"mixed tensor bases {sorted(bases)} are not supported")
        return cls(bases.pop() if bases else "M", terms)


def tensor(f: QSymElement, g: QSymElement) -> TensorElement:
    """f (x) g, computed in the M basis unless both share a basis."""
    if f.basis != g.basis:
        f, g = f.to_M(), g.to_M()
    return TensorElement(f.basis, {(a, b): c * d for a, c in f.terms.items() for b, d in g.terms.items()})


# -- product ------------------------------------------------------------------

def multiply(f: QSymElement, g: QSymElement) -> QSymElement:
    """Product in the M basis, via truncation to |f|+|g| variables and read-back."""
    out = QSymElement.zero("M")
    for m, fm in f.to_M().homogeneous_components().items():
        for n, gn in g.to_M().homogeneous_components().items():
            N = max(m + n, 1)
            poly = evaluate(fm, N) * evaluate(gn, N)
            out = out + qsym_from_truncation(poly, m + n)
    return out


def multiply_power_sums(alpha: Iterable[int], beta: Iterable[int], reverse: bool = False) -> QSymElement:
    """Shuffle rule: (z_alpha z_beta / z_{alpha.beta}) * sum of p_gamma over shuffles."""
    alpha, beta = as_composition(alpha), as_composition(beta)
    scale = Fraction(z_value(alpha) * z_value(beta), z_value(alpha + beta))
    terms: dict[Composition, Fraction] = {}
    for gamma in shuffles(alpha, beta):
        terms[gamma] = terms.get(gamma, Fraction(0)) + scale
    return QSymElement("Pr" if reverse else "P", terms)


# -- coproduct ----------------------------------------------------------------

def coproduct_M(f: QSymElement) -> TensorElement:
    """Deconcatenation: Delta(M_alpha) = sum over alpha = beta.gamma of M_beta (x) M_gamma."""
    acc: dict[Pair, Fraction] = {}
    for alpha, c in f.to_M().terms.items():
        for pair in deconcatenations(alpha):
            acc[pair] = acc.get(pair, Fraction(0)) + c
    return TensorElement("M", acc)


def coproduct_power_sum(alpha: Iterable[int], reverse: bool = False) -> TensorElement:
    """Sum over alpha = beta.gamma of (z_alpha / (z_beta z_gamma)) p_beta (x) p_gamma."""
    alpha = as_composition(alpha)
    za = z_value(alpha)
    terms = {(b, g): Fraction(za, z_value(b) * z_value(g)) for b, g in deconcatenations(alpha)}
    return TensorElement("Pr" if reverse else "P", terms)


def coproduct_oracle(P: WeightedLabelledPoset) -> TensorElement:
    """Sum over lower sets I of K(I) (x) K(P minus I), in the M basis."""
    out = TensorElement("M")
    for ideal in lower_sets(P, None):
        rest = [e for e in P.elements if e not in ideal]
        out = out + tensor(poset_to_M(P.restrict(ideal)), poset_to_M(P.restrict(rest)))
    return out


def tensor_from_two_alphabet(poly: TruncatedPolynomial, N: int) -> TensorElement:
    """Split a polynomial in x_(0,*), x_(1,*) into M (x) M coordinates.

    The coefficient of M_beta (x) M_gamma is read at the monomial whose first
    block packs beta and second block packs gamma; every monomial must agree
    with that reading.
    """
    if poly.num_vars != 2 * N:
        raise ValueError(f"expected {2 * N} variables, got {poly.num_vars}")
    coeffs: dict[Pair, Fraction] = {}
    for exps, c in poly.terms.items():
        left = Composition(e for e in exps[:N] if e)
        right = Composition(e for e in exps[N:] if e)
        lead = tuple(left) + (0,) * (N - len(left)) + tuple(right) + (0,) * (N - len(right))
        lead_c = poly.terms.get(lead)
        if lead_c != c:
            raise ValueError(f"not in QSym (x) QSym: monomial {exps} disagrees with {lead}")
        coeffs[(left, right)] = c
    expected = sum(comb(N, len(a)) * comb(N, len(b)) for a, b in coeffs)
    if expected != len(poly.terms):
        raise ValueError("not in QSym (x) QSym: some monomials are missing")
    return TensorElement("M", coeffs)


def coproduct_via_truncation(P: WeightedLabelledPoset, N: int | None = None) -> TensorElement:
    """Delta(K_P) from the brute-force two-alphabet evaluation (N defaults to w(P))."""
    N = max(P.total_weight(), 1) if N is None else N
    return tensor_from_two_alphabet(two_alphabet_truncation(P, N), N)


# -- involutions --------------------------------------------------------------

def _on_F(relabel: Callable[[Composition], Composition]) -> Callable[[QSymElement], QSymElement]:
    def apply(f: QSymElement) -> QSymElement:
        g = f.to_F()
        return QSymElement("F", {relabel(a): c for a, c in g.terms.items()}).to_M()
    return apply


psi = _on_F(complement)
psi.__name__ = "psi"
psi.__doc__ = "psi(F_alpha) = F_{alpha^c}; result in the M basis."

rho = _on_F(reverse)
rho.__name__ = "rho"
rho.__doc__ = "rho(F_alpha) = F_{alpha^r}; result in the M basis."

omega = _on_F(transpose)
omega.__name__ = "omega"
omega.__doc__ = "omega(F_alpha) = F_{alpha^t}; result in the M basis."

INVOLUTIONS = {"psi": psi, "rho": rho, "omega": omega}
