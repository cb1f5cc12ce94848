"""Brute-force (P, gamma)-partitions and truncated generating functions.

Nothing here uses the chain expansions of :mod:`ppsums.qsym`; the module is
the independent ground truth those expansions are checked against.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Iterable, Mapping

from .compositions import Composition, compositions_of
from .posets import WeightedLabelledPoset, chain_poset, linear_extensions
from .qsym import QSymElement

PPartition = dict  # element -> value in [1, N]


class TruncatedPolynomial:
    """Polynomial in ``num_vars`` variables with exact rational coefficients.

    Terms map exponent tuples of length ``num_vars`` to nonzero Fractions.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping | None = None):
        if num_vars < 1:
            raise ValueError(f"need at least one variable, got {num_vars}")
        self.num_vars = num_vars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {num_vars} variables")
            c = Fraction(c)
            if c:
                self.terms[exps] = self.terms.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def constant(cls, num_vars: int, c=1) -> "TruncatedPolynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return TruncatedPolynomial(self.num_vars, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedPolynomial(self.num_vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return TruncatedPolynomial(self.num_vars, out)

    __rmul__ = __mul__

    def _check(self, other: "TruncatedPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable counts differ: {self.num_vars} vs {other.num_vars}")

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __repr__(self) -> str:
        return f"TruncatedPolynomial({self.num_vars}, {self.to_plain()!r})"

    def to_plain(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            body = f"{abs(c)}*{mono}" if mono else f"{abs(c)}"
            sign = "-" if c < 0 else "+"
            pieces.append(body if not pieces and sign == "+" else
                          f"-{body}" if not pieces else f" {sign} {body}")
        return "".join(pieces)


def is_ppartition(P: WeightedLabelledPoset, f: Mapping) -> bool:
    for p, q in P.order:
        if f[p] > f[q]:
            return False
        if f[p] == f[q] and not P.label_less(p, q):
            return False
    return True


def enumerate_ppartitions(P: WeightedLabelledPoset, N: int) -> list[PPartition]:
    """All (P, gamma)-partitions into [N], lexicographic in ascending-label element order."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    elems = P.elements
    pos = {e: i for i, e in enumerate(elems)}
    # constraints against earlier elements only, so each is checked once when both are set
    checks: list[list[tuple[int, bool, bool]]] = [[] for _ in elems]
    for p, q in P.order:
        i, j = pos[p], pos[q]
        strict = not P.label_less(p, q)
        if i < j:
            checks[j].append((i, True, strict))  # earlier p is below q
        else:
            checks[i].append((j, False, strict))  # earlier q is above p
    out: list[PPartition] = []
    vals = [0] * len(elems)

    def rec(t: int):
        if t == len(elems):
            out.append(dict(zip(elems, vals)))
            return
        for v in range(1, N + 1):
            ok = True
            for i, earlier_below, strict in checks[t]:
                lo, hi = (vals[i], v) if earlier_below else (v, vals[i])
                if lo > hi or (strict and lo == hi):
                    ok = False
                    break
            if ok:
                vals[t] = v
                rec(t + 1)

    rec(0)
    return out


def brute_force_ppartitions(P: WeightedLabelledPoset, N: int) -> list[PPartition]:
    """Filter every map P -> [N]; slow reference for :func:`enumerate_ppartitions`."""
    out = []
    for vals in product(range(1, N + 1), repeat=len(P.elements)):
        f = dict(zip(P.elements, vals))
        if is_ppartition(P, f):
            out.append(f)
    return out


def monomial_of(P: WeightedLabelledPoset, f: Mapping, N: int) -> tuple[int, ...]:
    exps = [0] * N
    for u, v in f.items():
        exps[v - 1] += P.weights[u]
    return tuple(exps)


def k_truncated(P: WeightedLabelledPoset, N: int) -> TruncatedPolynomial:
    """K of (P, gamma, w) restricted to the variables x_1..x_N."""
    counts = Counter(monomial_of(P, f, N) for f in enumerate_ppartitions(P, N))
    return TruncatedPolynomial(N, counts)


def two_alphabet_truncation(P: WeightedLabelledPoset, N: int) -> TruncatedPolynomial:
    """K in the 2N variables x_(0,1..N), x_(1,1..N), ordered lexicographically.

    Variable (b, i) is stored at position ``b*N + i - 1``; the lexicographic
    chain on {0,1} x [N] is order-isomorphic to [2N].
    """
    return k_truncated(P, 2 * N)


def chain_decomposition_multiset(P: WeightedLabelledPoset, N: int) -> Counter:
    """Union over linear extensions s of the (s, gamma)-partitions, as a multiset."""
    acc: Counter = Counter()
    for s in linear_extensions(P, None):
        sp = chain_poset(s, P.label_dualized, P.weights)
        for f in enumerate_ppartitions(sp, N):
            acc[_key(f)] += 1
    return acc


def ppartition_multiset(P: WeightedLabelledPoset, N: int) -> Counter:
    return Counter(_key(f) for f in enumerate_ppartitions(P, N))


def _key(f: Mapping) -> tuple:
    return tuple(sorted(f.items()))


# -- evaluating QSym elements in finitely many variables ----------------------

def evaluate_M(alpha: Iterable[int], N: int) -> TruncatedPolynomial:
    """M_alpha in N variables: sum over strictly increasing index tuples."""
    alpha = tuple(alpha)
    terms: dict = {}
    for idx in combinations(range(N), len(alpha)):
        exps = [0] * N
        for i, a in zip(idx, alpha):
            exps[i] = a
        terms[tuple(exps)] = 1
    return TruncatedPolynomial(N, terms)


def evaluate_F(alpha: Iterable[int], N: int) -> TruncatedPolynomial:
    """F_alpha in N variables, straight from the weakly increasing index sequences."""
    alpha = Composition(alpha)
    n = alpha.size
    cuts = set()
    total = 0
    for a in alpha[:-1]:
        total += a
        cuts.add(total)
    terms: Counter = Counter()
    for seq in combinations_with_replacement(range(N), n):
        if all(seq[j - 1] < seq[j] for j in cuts):
            exps = [0] * N
            for i in seq:
                exps[i] += 1
            terms[tuple(exps)] += 1
    return TruncatedPolynomial(N, terms)


def evaluate(elem: QSymElement, N: int) -> TruncatedPolynomial:
    """Truncate an element (any basis) to N variables via its M-expansion."""
    out = TruncatedPolynomial(N)
    for alpha, c in elem.to_M().terms.items():
        out = out + evaluate_M(alpha, N) * c
    return out


def _packed(exps: tuple[int, ...]) -> Composition:
    return Composition(e for e in exps if e)


def qsym_from_truncation(poly: TruncatedPolynomial, n: int) -> QSymElement:
    """Read a degree-n quasisymmetric function back off its N >= n variable truncation.

    The M_beta coefficient is the coefficient of x_1^beta_1 ... x_l^beta_l.  Every
    monomial is then checked against its packed composition, and the term
    count is compared with the full expansion, so a non-quasisymmetric or
    inhomogeneous input is rejected.
    """
    N = poly.num_vars
    if N < n:
        raise ValueError(f"need at least {n} variables to recover degree {n}, got {N}")
    coeffs = {}
    for beta in compositions_of(n):
        lead = tuple(beta) + (0,) * (N - len(beta))
        c = poly.terms.get(lead)
        if c:
            coeffs[beta] = c
    for exps, c in poly.terms.items():
        if sum(exps) != n:
            raise ValueError(f"monomial {exps} is not of degree {n}")
        if coeffs.get(_packed(exps)) != c:
            raise ValueError(f"not quasisymmetric: monomial {exps} has coefficient {c}")
    expected = sum(comb(N, len(beta)) for beta in coeffs)
    if expected != len(poly.terms):
        raise ValueError("not quasisymmetric: some monomials of a present composition are missing")
    return QSymElement("M", coeffs)


def k_oracle(P: WeightedLabelledPoset, num_vars: int | None = None) -> QSymElement:
    """K of a poset in the M basis via brute-force P-partitions (default w(P) variables)."""
    n = P.total_weight()
    N = max(n, 1) if num_vars is None else num_vars
    return qsym_from_truncation(k_truncated(P, N), n)
