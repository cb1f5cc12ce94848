"""Quasisymmetric functions over the rationals.

Elements carry a basis tag (``M``, ``F``, ``P`` or ``Pr``) and a sparse map
from compositions to :class:`fractions.Fraction`.  Equality is decided in
the monomial basis, which is also the normal form used for serialization of
products and involutions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .compositions import (
    Composition,
    as_composition,
    canonical_order,
    compositions_of,
    complement,
    descent_set,
    composition_from_set,
    format_composition,
    join,
    multiplicities,
    rearrangements,
    refinements,
    reverse,
    underlying_partition,
)
from .posets import (
    LabelledChain,
    LabelledInteger,
    WeightedLabelledPoset,
    alpha_of,
    delta_of,
    linear_extensions,
)

BASES = ("M", "F", "P", "Pr")
DEFAULT_MAX_DEGREE = 14

_BASIS_ALIASES = {"m": "M", "f": "F", "p": "P", "pr": "Pr"}


class DegreeCapError(ValueError):
    """A basis-wide computation was asked for a degree above the cap."""


def normalize_basis(tag: str) -> str:
    if tag in BASES:
        return tag
    try:
        return _BASIS_ALIASES[tag.lower()]
    except KeyError:
        raise ValueError(f"unknown basis {tag!r}; expected one of {BASES}") from None


def check_degree(n: int, max_degree: int | None = DEFAULT_MAX_DEGREE) -> None:
    if max_degree is not None and n > max_degree:
        raise DegreeCapError(f"degree {n} exceeds the cap {max_degree}")


def _fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use int or Fraction")
    return Fraction(c)


class QSymElement:
    """Immutable linear combination of basis elements indexed by compositions."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | Iterable = ()):
        basis = normalize_basis(basis)
        acc: dict[Composition, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, c in items:
            alpha = as_composition(alpha)
            acc[alpha] = acc.get(alpha, Fraction(0)) + _fraction(c)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", MappingProxyType(
            {a: acc[a] for a in canonical_order(acc) if acc[a] != 0}))

    def __setattr__(self, name, value):
        raise AttributeError("QSymElement is immutable")

    @classmethod
    def basis_element(cls, basis: str, alpha: Iterable[int], coeff=1) -> "QSymElement":
        return cls(basis, {as_composition(alpha): coeff})

    @classmethod
    def zero(cls, basis: str = "M") -> "QSymElement":
        return cls(basis)

    @classmethod
    def one(cls) -> "QSymElement":
        return cls("M", {Composition(): 1})

    @property
    def terms(self) -> Mapping[Composition, Fraction]:
        return self._terms

    def coefficient(self, alpha: Iterable[int]) -> Fraction:
        return self._terms.get(as_composition(alpha), Fraction(0))

    def __iter__(self) -> Iterator[tuple[Composition, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {a.size for a in self._terms}

    def homogeneous_components(self) -> dict[int, "QSymElement"]:
        out: dict[int, dict] = {}
        for a, c in self._terms.items():
            out.setdefault(a.size, {})[a] = c
        return {n: QSymElement(self.basis, t) for n, t in sorted(out.items())}

    # -- arithmetic ---------------------------------------------------------

    def _same_frame(self, other: "QSymElement") -> tuple["QSymElement", "QSymElement"]:
        if self.basis == other.basis:
            return self, other
        return self.to_M(), other.to_M()

    def __add__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        a, b = self._same_frame(other)
        return QSymElement(a.basis, [*a._terms.items(), *b._terms.items()])

    def __neg__(self):
        return QSymElement(self.basis, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QSymElement":
        c = _fraction(c)
        return QSymElement(self.basis, {a: c * v for a, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QSymElement):
            from .hopf import multiply
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymElement):
            return NotImplemented
        if self.basis == other.basis:
            return dict(self._terms) == dict(other._terms)
        return dict(self.to_M()._terms) == dict(other.to_M()._terms)

    __hash__ = None

    # -- basis changes ------------------------------------------------------

    def to_M(self) -> "QSymElement":
        if self.basis == "M":
            return self
        expand = {"F": _f_to_m_single, "P": power_sum, "Pr": reverse_power_sum}[self.basis]
        return _linear(self, expand, "M")

    def to_F(self) -> "QSymElement":
        if self.basis == "F":
            return self
        return _linear(self.to_M(), _m_to_f_single, "F")

    def to_basis(self, basis: str) -> "QSymElement":
        basis = normalize_basis(basis)
        if basis == "M":
            return self.to_M()
        if basis == "F":
            return self.to_F()
        if basis == self.basis:
            return self
        return to_power_sum_basis(self, reverse=basis == "Pr")

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSymElement({self.basis!r}, {self.to_plain()!r})"

    def __str__(self) -> str:
        return self.to_plain()

    def to_plain(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (a, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            body = f"{abs(c)}*{self.basis}[{format_composition(a)}]"
            if i == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        sym = {"M": "M", "F": "F", "P": r"\mathfrak{p}", "Pr": r"\mathfrak{p}^r"}[self.basis]
        pieces = []
        for i, (a, c) in enumerate(self._terms.items()):
            if a and max(a) < 10:
                sub = "".join(str(p) for p in a)
            else:
                sub = ",".join(str(p) for p in a) or r"\emptyset"
            mag = abs(c)
            if mag == 1:
                coeff = ""
            elif mag.denominator == 1:
                coeff = str(mag)
            else:
                coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            body = f"{coeff}{sym}_{{{sub}}}"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(pieces)

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [term_to_json(a, c) for a, c in self._terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QSymElement":
        terms = []
        for t in obj["terms"]:
            comp, coeff = term_from_json(t)
            terms.append((comp, coeff))
        return cls(obj["basis"], terms)

    @classmethod
    def from_json(cls, text: str) -> "QSymElement":
        return cls.from_json_obj(json.loads(text))


def term_to_json(alpha: Composition, c: Fraction) -> dict:
    return {"composition": list(alpha), "coeff": {"num": c.numerator, "den": c.denominator}}


def term_from_json(t: Mapping) -> tuple[Composition, Fraction]:
    coeff = t["coeff"]
    return Composition(t["composition"]), Fraction(coeff["num"], coeff["den"])


def _linear(elem: QSymElement, expand, basis: str) -> QSymElement:
    acc: dict[Composition, Fraction] = {}
    for a, c in elem.terms.items():
        for b, d in expand(a).terms.items():
            acc[b] = acc.get(b, Fraction(0)) + c * d
    return QSymElement(basis, acc)


def M(*alpha: int) -> QSymElement:
    return QSymElement.basis_element("M", alpha)


def F(*alpha: int) -> QSymElement:
    return QSymElement.basis_element("F", alpha)


# -- M <-> F ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _m_to_f_single(alpha: Composition) -> QSymElement:
    n_alpha = len(alpha)
    return QSymElement("F", {b: (-1) ** (len(b) - n_alpha) for b in refinements(alpha)})


@lru_cache(maxsize=None)
def _f_to_m_single(alpha: Composition) -> QSymElement:
    return QSymElement("M", {b: 1 for b in refinements(alpha)})


def m_to_f(elem: QSymElement) -> QSymElement:
    if elem.basis != "M":
        raise ValueError(f"m_to_f expects an M-basis element, got {elem.basis}")
    return _linear(elem, _m_to_f_single, "F")


def f_to_m(elem: QSymElement) -> QSymElement:
    if elem.basis != "F":
        raise ValueError(f"f_to_m expects an F-basis element, got {elem.basis}")
    return _linear(elem, _f_to_m_single, "M")


# -- weighted labelled chains ------------------------------------------------

def chain_to_M(chain: Iterable, dualized: bool = False,
               weights: Mapping | None = None) -> QSymElement:
    """K of a weighted labelled chain: every M_beta with set(delta) <= set(beta) <= set(alpha)."""
    chain = LabelledChain(chain)
    alpha = alpha_of(chain, weights)
    delta = delta_of(chain, dualized, weights)
    n = alpha.size
    forced = descent_set(delta)
    free = sorted(descent_set(alpha) - forced)
    terms = {}
    for mask in product((False, True), repeat=len(free)):
        cuts = forced | {s for s, keep in zip(free, mask) if keep}
        terms[composition_from_set(cuts, n)] = 1
    return QSymElement("M", terms)


def chain_to_F(chain: Iterable, dualized: bool = False,
               weights: Mapping | None = None) -> QSymElement:
    """Signed F-expansion of a chain's K, between delta(dual)^c and delta."""
    chain = LabelledChain(chain)
    delta = delta_of(chain, dualized, weights)
    delta_dual = delta_of(chain, not dualized, weights)
    n = delta.size
    forced = descent_set(delta)
    upper = descent_set(complement(delta_dual))
    free = sorted(upper - forced)
    base_len = len(delta)
    terms = {}
    for mask in product((False, True), repeat=len(free)):
        cuts = forced | {s for s, keep in zip(free, mask) if keep}
        beta = composition_from_set(cuts, n)
        terms[beta] = (-1) ** (len(beta) - base_len)
    return QSymElement("F", terms)


def poset_to_M(P: WeightedLabelledPoset, max_elements: int | None = None) -> QSymElement:
    """K of a weighted labelled poset, summed over its linear extensions."""
    acc: dict[Composition, Fraction] = {}
    for s in linear_extensions(P, max_elements):
        for b, c in chain_to_M(s, P.label_dualized, P.weights).terms.items():
            acc[b] = acc.get(b, Fraction(0)) + c
    return QSymElement("M", acc)


# -- power sums ---------------------------------------------------------------

def power_sum_chains(alpha: Iterable[int],
                     index_sets: Mapping[int, Iterable[int]] | None = None) -> list[LabelledChain]:
    """Labelled chains with weight sequence ``alpha`` and indices of each part i drawn from R_i.

    By default R_i = {1..r_i}; these are exactly the linear extensions s of the
    weight antichain with alpha(s) = alpha.
    """
    alpha = as_composition(alpha)
    mult = multiplicities(alpha)
    sets = {}
    for value, r in mult.items():
        idx = sorted(index_sets[value]) if index_sets is not None else list(range(1, r + 1))
        if len(idx) != r or len(set(idx)) != r or min(idx) < 1:
            raise ValueError(f"index set for part {value} must be {r} distinct positive integers")
        sets[value] = idx
    values = sorted(mult)
    positions = {v: [i for i, a in enumerate(alpha) if a == v] for v in values}
    out = []
    for choice in product(*(permutations(sets[v]) for v in values)):
        entries = [None] * len(alpha)
        for v, perm in zip(values, choice):
            for pos, k in zip(positions[v], perm):
                entries[pos] = LabelledInteger(v, k)
        out.append(LabelledChain(entries))
    return out


def _sum_chains(chains: Iterable[LabelledChain], dualized: bool) -> QSymElement:
    acc: dict[Composition, Fraction] = {}
    for s in chains:
        for b, c in chain_to_M(s, dualized).terms.items():
            acc[b] = acc.get(b, Fraction(0)) + c
    return QSymElement("M", acc)


@lru_cache(maxsize=None)
def _power_sum(alpha: Composition, dualized: bool) -> QSymElement:
    return _sum_chains(power_sum_chains(alpha), dualized)


def power_sum(alpha: Iterable[int], index_sets: Mapping | None = None) -> QSymElement:
    """Combinatorial power sum, expanded in the M basis."""
    alpha = as_composition(alpha)
    if index_sets is not None:
        return _sum_chains(power_sum_chains(alpha, index_sets), False)
    return _power_sum(alpha, False)


def reverse_power_sum(alpha: Iterable[int], index_sets: Mapping | None = None) -> QSymElement:
    """Reverse combinatorial power sum (dual labelling), expanded in the M basis."""
    alpha = as_composition(alpha)
    if index_sets is not None:
        return _sum_chains(power_sum_chains(alpha, index_sets), True)
    return _power_sum(alpha, True)


def P(*alpha: int) -> QSymElement:
    return QSymElement.basis_element("P", alpha)


def Pr(*alpha: int) -> QSymElement:
    return QSymElement.basis_element("Pr", alpha)


def symmetric_power_sum(lam: Iterable[int]) -> QSymElement:
    """p_lambda as the sum of the power sums over all rearrangements of lambda."""
    lam = underlying_partition(lam)
    out = QSymElement.zero("M")
    for alpha in rearrangements(lam):
        out = out + power_sum(alpha)
    return out


def monomial_symmetric(lam: Iterable[int]) -> QSymElement:
    lam = underlying_partition(lam)
    return QSymElement("M", {a: 1 for a in rearrangements(lam)})


def is_symmetric(elem: QSymElement) -> bool:
    """M-coefficients constant on rearrangement classes."""
    elem = elem.to_M()
    seen: dict = {}
    for a, c in elem.terms.items():
        lam = underlying_partition(a)
        seen.setdefault(lam, set()).add(c)
    for lam, coeffs in seen.items():
        if len(coeffs) != 1:
            return False
        if any(elem.coefficient(b) == 0 for b in rearrangements(lam)):
            return False
    return True


def to_power_sum_basis(elem: QSymElement, reverse: bool = False,
                       max_degree: int | None = DEFAULT_MAX_DEGREE) -> QSymElement:
    """Rewrite in the (reverse) power sum basis by triangular elimination.

    The leading M-term of p_alpha is M_alpha and every other M_beta in it is a
    strict coarsening of alpha, so peeling off the finest compositions first
    terminates.
    """
    tag = "Pr" if reverse else "P"
    expand = reverse_power_sum if reverse else power_sum
    rest = dict(elem.to_M().terms)
    for n in {a.size for a in rest}:
        check_degree(n, max_degree)
    out: dict[Composition, Fraction] = {}
    while rest:
        # finest first: a longer composition can never be a coarsening of a shorter one
        alpha = max(rest, key=lambda a: (len(a), a))
        lead = expand(alpha)
        c = rest[alpha] / lead.coefficient(alpha)
        out[alpha] = c
        for b, d in lead.terms.items():
            v = rest.get(b, Fraction(0)) - c * d
            if v:
                rest[b] = v
            else:
                rest.pop(b, None)
    return QSymElement(tag, out)


# -- matrix fillings ----------------------------------------------------------

@dataclass(frozen=True)
class FillingMatrix:
    """A 0/part matrix with one nonzero entry per column.

    Column j carries the part ``column_values[j]``; ``row_of[j]`` records the
    row holding it.
    """

    column_values: tuple[int, ...]
    row_of: tuple[int, ...]
    rows: int

    def __post_init__(self):
        if len(self.column_values) != len(self.row_of):
            raise ValueError("one row index per column")
        if any(not 0 <= r < self.rows for r in self.row_of):
            raise ValueError("row index out of range")

    @property
    def cols(self) -> int:
        return len(self.column_values)

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        grid = [[0] * self.cols for _ in range(self.rows)]
        for j, (v, r) in enumerate(zip(self.column_values, self.row_of)):
            grid[r][j] = v
        return tuple(tuple(row) for row in grid)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.entries for v in row if v)

    def row_columns(self, i: int) -> list[int]:
        return [j for j, r in enumerate(self.row_of) if r == i]

    def render(self, blank: str = ".") -> str:
        width = max((len(str(v)) for v in self.column_values), default=1)
        lines = []
        for row in self.entries:
            lines.append(" ".join((str(v) if v else blank).rjust(width) for v in row))
        return "\n".join(lines)

    def to_json_obj(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _check_sizes(alpha, beta) -> tuple[Composition, Composition]:
    alpha, beta = as_composition(alpha), as_composition(beta)
    if alpha.size != beta.size:
        raise ValueError(f"sizes differ: |{alpha}| = {alpha.size}, |{beta}| = {beta.size}")
    return alpha, beta


def enumerate_R(alpha: Iterable[int], beta: Iterable[int]) -> list[FillingMatrix]:
    """Fillings counted by the M-coefficient of p_alpha at M_beta.

    Parts of alpha are placed in reading order: the row of each part is forced
    by the running row sums, and inside a row the columns must increase.
    """
    alpha, beta = _check_sizes(alpha, beta)
    cols = tuple(underlying_partition(alpha))
    rows: list[int] = []
    i, run = 0, 0
    for a in alpha:
        run += a
        if run > beta[i]:
            return []
        rows.append(i)
        if run == beta[i]:
            i, run = i + 1, 0
    if i != len(beta):
        return []

    out: list[FillingMatrix] = []
    row_of = [0] * len(cols)
    used = [False] * len(cols)

    def rec(t: int, last_col: int):
        if t == len(alpha):
            out.append(FillingMatrix(cols, tuple(row_of), len(beta)))
            return
        floor = last_col if t > 0 and rows[t] == rows[t - 1] else -1
        for j in range(floor + 1, len(cols)):
            if not used[j] and cols[j] == alpha[t]:
                used[j] = True
                row_of[j] = rows[t]
                rec(t + 1, j)
                used[j] = False

    rec(0, -1)
    return out


def count_R(alpha: Iterable[int], beta: Iterable[int]) -> int:
    return len(enumerate_R(alpha, beta))


def enumerate_R_symmetric(lam: Iterable[int], mu: Iterable[int]) -> list[FillingMatrix]:
    """Fillings for the classical power-sum to monomial coefficient (no reading-word condition)."""
    lam, mu = _check_sizes(lam, mu)
    cols = tuple(lam)
    out: list[FillingMatrix] = []
    row_of = [0] * len(cols)
    room = list(mu)

    def rec(j: int):
        if j == len(cols):
            if not any(room):
                out.append(FillingMatrix(cols, tuple(row_of), len(mu)))
            return
        for i in range(len(mu)):
            if room[i] >= cols[j]:
                room[i] -= cols[j]
                row_of[j] = i
                rec(j + 1)
                room[i] += cols[j]

    rec(0)
    return out


def count_R_symmetric(lam: Iterable[int], mu: Iterable[int]) -> int:
    return len(enumerate_R_symmetric(lam, mu))


def _overlaps(m: FillingMatrix) -> bool:
    return all(max(m.row_columns(i)) > min(m.row_columns(i + 1)) for i in range(m.rows - 1))


def enumerate_Q(alpha: Iterable[int], beta: Iterable[int]) -> list[FillingMatrix]:
    """R-fillings whose consecutive rows overlap: last column of row i right of first column of row i+1."""
    return [m for m in enumerate_R(alpha, beta) if _overlaps(m)]


def count_Q(alpha: Iterable[int], beta: Iterable[int]) -> int:
    return len(enumerate_Q(alpha, beta))


def power_sum_to_M_by_matrices(alpha: Iterable[int]) -> QSymElement:
    alpha = as_composition(alpha)
    return QSymElement("M", {b: count_R(alpha, b) for b in compositions_of(alpha.size)})


def power_sum_to_F(alpha: Iterable[int], max_degree: int | None = DEFAULT_MAX_DEGREE) -> QSymElement:
    """F-expansion of p_alpha from signed Q-matrix counts."""
    alpha = as_composition(alpha)
    check_degree(alpha.size, max_degree)
    terms = {}
    for beta in compositions_of(alpha.size):
        j = join(alpha, beta)
        terms[beta] = (-1) ** (len(beta) - len(j)) * count_Q(alpha, j)
    return QSymElement("F", terms)


def reverse_power_sum_to_M_by_matrices(alpha: Iterable[int]) -> QSymElement:
    alpha = as_composition(alpha)
    ar = reverse(alpha)
    return QSymElement("M", {b: count_R(ar, reverse(b)) for b in compositions_of(alpha.size)})


def reverse_power_sum_to_F(alpha: Iterable[int],
                           max_degree: int | None = DEFAULT_MAX_DEGREE) -> QSymElement:
    alpha = as_composition(alpha)
    check_degree(alpha.size, max_degree)
    ar = reverse(alpha)
    terms = {}
    for beta in compositions_of(alpha.size):
        sign = (-1) ** (len(beta) - len(join(alpha, beta)))
        terms[beta] = sign * count_Q(ar, join(ar, reverse(beta)))
    return QSymElement("F", terms)
