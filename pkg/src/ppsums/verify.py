"""Exhaustive identity checks and the worked-example replay.

Each suite returns a list of :class:`Check` records comparing a fast-path
result with an independently computed one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable

from .compositions import (
    Composition,
    coarsens,
    compositions_of,
    partitions_of,
    rearrangements,
    reverse,
    underlying_partition,
)
from .hopf import (
    coproduct_M,
    coproduct_oracle,
    coproduct_power_sum,
    coproduct_via_truncation,
    multiply,
    multiply_power_sums,
    omega,
    psi,
    rho,
)
from .posets import (
    LabelledChain,
    LabelledInteger,
    WeightedLabelledPoset,
    antichain_poset,
    chain_poset,
    disjoint_union,
    dual,
    dual_labelling,
    poset_from_covers,
)
from .ppartitions import (
    chain_decomposition_multiset,
    k_oracle,
    k_truncated,
    ppartition_multiset,
    qsym_from_truncation,
)
from .qsym import (
    QSymElement,
    chain_to_M,
    count_Q,
    count_R,
    count_R_symmetric,
    enumerate_Q,
    enumerate_R,
    enumerate_R_symmetric,
    is_symmetric,
    m_to_f,
    monomial_symmetric,
    poset_to_M,
    power_sum,
    power_sum_to_F,
    reverse_power_sum,
    reverse_power_sum_to_F,
    reverse_power_sum_to_M_by_matrices,
    symmetric_power_sum,
)


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json_obj(self) -> dict:
        return {"check": self.name, "expected": _show(self.expected),
                "actual": _show(self.actual), "ok": self.ok}


def _show(x) -> str:
    if hasattr(x, "to_plain"):
        return x.to_plain()
    return str(x)


@dataclass
class RunReport:
    command: str
    details: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "ok" if all(c.ok for c in self.details) else "mismatch"

    def failures(self) -> list[Check]:
        return [c for c in self.details if not c.ok]

    def to_json_obj(self, timing: bool = False) -> dict:
        out = {"command": self.command, "status": self.status,
               "checks": len(self.details), "failures": len(self.failures()),
               "details": [c.to_json_obj() for c in self.details]}
        if self.error is not None:
            out["error"] = self.error
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def run(command: str, suite: Callable[[], list[Check]]) -> RunReport:
    start = time.perf_counter()
    details = suite()
    return RunReport(command, details, (time.perf_counter() - start) * 1000)


# -- poset families ------------------------------------------------------------

LABEL_POOL = (LabelledInteger(1, 1), LabelledInteger(2, 1), LabelledInteger(1, 2),
              LabelledInteger(2, 2), LabelledInteger(1, 3))


def all_posets(k: int, labels: Iterable[LabelledInteger] | None = None,
               label_dualized: bool = False) -> list[WeightedLabelledPoset]:
    """Every strict partial order on k labelled elements."""
    labels = list(labels if labels is not None else LABEL_POOL[:k])
    if len(labels) != k:
        raise ValueError("need exactly k labels")
    pairs = [(a, b) for a in labels for b in labels if a != b]
    out = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
            continue
        out.append(WeightedLabelledPoset(tuple(labels), frozenset(rel), {}, label_dualized))
    return out


def five_element_posets(label_dualized: bool = False) -> list[WeightedLabelledPoset]:
    """A fixed list of shapes on five elements."""
    a, b, c, d, e = LABEL_POOL
    shapes = [
        [],                                              # antichain
        [(a, b), (b, c), (c, d), (d, e)],                # chain
        [(e, d), (d, c), (c, b), (b, a)],                # chain, labels reversed
        [(a, b), (a, c), (b, d), (c, d)],                # diamond plus a point
        [(a, c), (b, c), (b, d), (e, d)],                # fence
        [(c, a), (c, b), (c, d), (c, e)],                # star from a minimum
        [(a, c), (b, c), (d, c), (e, c)],                # star into a maximum
        [(a, b), (b, c), (d, e)],                        # 3-chain plus 2-chain
        [(b, a), (d, a), (d, e), (c, e), (b, e)],        # zigzag with a cross
    ]
    return [poset_from_covers(LABEL_POOL, s, label_dualized=label_dualized) for s in shapes]


def poset_family(max_elements: int = 5, both_orientations: bool = True) -> list[WeightedLabelledPoset]:
    out = []
    flags = (False, True) if both_orientations else (False,)
    for flag in flags:
        for k in range(min(max_elements, 4) + 1):
            out.extend(all_posets(k, label_dualized=flag))
        if max_elements >= 5:
            out.extend(five_element_posets(flag))
    return out


def unit_weights(P: WeightedLabelledPoset) -> WeightedLabelledPoset:
    return WeightedLabelledPoset(P.elements, P.order, {e: 1 for e in P.elements}, P.label_dualized)


def labelled_chains(max_len: int, max_weight: int) -> list[LabelledChain]:
    out = []
    for k in range(max_len + 1):
        for labs in permutations(LABEL_POOL, k):
            if sum(x.value for x in labs) <= max_weight:
                out.append(LabelledChain(labs))
    return out


def _name(P: WeightedLabelledPoset) -> str:
    return str(P).replace("\n", " | ")


# -- suites ----------------------------------------------------------------------

def fundamental_lemma_suite(max_elements: int = 5, max_vars: int = 3) -> list[Check]:
    checks = []
    for P in poset_family(max_elements):
        for N in range(1, max_vars + 1):
            direct = ppartition_multiset(P, N)
            via_chains = chain_decomposition_multiset(P, N)
            checks.append(Check(f"O(P) = union of O(s) [N={N}] {_name(P)}",
                                sorted(direct.items()), sorted(via_chains.items())))
        if len(P) <= 4:
            checks.append(Check(f"K(P) chain expansion = brute force {_name(P)}",
                                k_oracle(P), poset_to_M(P)))
    return checks


def product_suite(max_degree: int = 6) -> list[Check]:
    checks = []
    comps = [c for n in range(max_degree + 1) for c in compositions_of(n)]
    for alpha in comps:
        for beta in comps:
            if alpha.size + beta.size > max_degree:
                continue
            truth = multiply(QSymElement.basis_element("P", alpha),
                             QSymElement.basis_element("P", beta))
            checks.append(Check(f"p_{alpha} p_{beta} shuffle rule", truth,
                                multiply_power_sums(alpha, beta).to_M()))
            truth_r = multiply(QSymElement.basis_element("Pr", alpha),
                               QSymElement.basis_element("Pr", beta))
            checks.append(Check(f"pr_{alpha} pr_{beta} shuffle rule", truth_r,
                                multiply_power_sums(alpha, beta, reverse=True).to_M()))
    for P in all_posets(2) + all_posets(3, LABEL_POOL[2:]):
        for Q in all_posets(2, LABEL_POOL[3:]) if len(P) == 2 else all_posets(2, LABEL_POOL[:2]):
            N = 3
            checks.append(Check(f"K(P+Q) = K(P)K(Q) {_name(P)} / {_name(Q)}",
                                k_truncated(P, N) * k_truncated(Q, N),
                                k_truncated(disjoint_union(P, Q), N)))
    return checks


def coproduct_suite(max_degree: int = 6, max_chain: int = 4, max_elements: int = 5) -> list[Check]:
    checks = []
    for n in range(max_degree + 1):
        for alpha in compositions_of(n):
            checks.append(Check(f"Delta p_{alpha} deconcatenation rule",
                                coproduct_M(power_sum(alpha)),
                                coproduct_power_sum(alpha).to_M()))
            checks.append(Check(f"Delta pr_{alpha} deconcatenation rule",
                                coproduct_M(reverse_power_sum(alpha)),
                                coproduct_power_sum(alpha, reverse=True).to_M()))
    for s in labelled_chains(max_chain, 6):
        for flag in (False, True):
            P = chain_poset(s, flag)
            checks.append(Check(f"Delta K chain {s or 'e'} dualized={flag}: two-alphabet",
                                coproduct_via_truncation(P), coproduct_M(chain_to_M(s, flag))))
    for P in poset_family(max_elements, both_orientations=False):
        P = unit_weights(P)
        truth = coproduct_via_truncation(P) if len(P) <= 4 else None
        lower = coproduct_oracle(P)
        checks.append(Check(f"Delta K(P) lower sets = deconcatenation {_name(P)}",
                            lower, coproduct_M(poset_to_M(P))))
        if truth is not None:
            checks.append(Check(f"Delta K(P) lower sets = two-alphabet {_name(P)}", truth, lower))
    return checks


def _sign(alpha: Composition) -> int:
    return (-1) ** (alpha.size - len(alpha))


def involution_suite(max_degree: int = 7, max_elements: int = 5) -> list[Check]:
    checks = []
    for n in range(max_degree + 1):
        for alpha in compositions_of(n):
            p, pr = power_sum(alpha), reverse_power_sum(alpha)
            ar = reverse(alpha)
            sg = _sign(alpha)
            checks += [
                Check(f"psi p_{alpha}", reverse_power_sum(alpha).scale(sg), psi(p)),
                Check(f"rho p_{alpha}", reverse_power_sum(ar), rho(p)),
                Check(f"omega p_{alpha}", power_sum(ar).scale(sg), omega(p)),
                Check(f"psi pr_{alpha}", power_sum(alpha).scale(sg), psi(pr)),
                Check(f"rho pr_{alpha}", power_sum(ar), rho(pr)),
                Check(f"omega pr_{alpha}", reverse_power_sum(ar).scale(sg), omega(pr)),
            ]
            for f, tag in ((p, "p"), (pr, "pr")):
                checks += [
                    Check(f"psi^2 {tag}_{alpha}", f, psi(psi(f))),
                    Check(f"rho^2 {tag}_{alpha}", f, rho(rho(f))),
                    Check(f"omega^2 {tag}_{alpha}", f, omega(omega(f))),
                    Check(f"omega = rho psi on {tag}_{alpha}", omega(f), rho(psi(f))),
                    Check(f"omega = psi rho on {tag}_{alpha}", omega(f), psi(rho(f))),
                ]
    for s in labelled_chains(4, 6):
        ws = sum(x.value for x in s) - len(s)
        for flag in (False, True):
            K = chain_to_M(s, flag)
            sr = s.reversed()
            checks += [
                Check(f"psi K[{s}] dualized={flag}", chain_to_M(s, not flag).scale((-1) ** ws), psi(K)),
                Check(f"rho K[{s}] dualized={flag}", chain_to_M(sr, not flag), rho(K)),
                Check(f"omega K[{s}] dualized={flag}", chain_to_M(sr, flag).scale((-1) ** ws), omega(K)),
            ]
    for P in poset_family(max_elements):
        if P.total_weight() > max_degree:
            continue
        K = poset_to_M(P)
        sg = (-1) ** (P.total_weight() - len(P))
        checks += [
            Check(f"psi K(P) {_name(P)}", poset_to_M(dual_labelling(P)).scale(sg), psi(K)),
            Check(f"rho K(P) {_name(P)}", poset_to_M(dual(dual_labelling(P))), rho(K)),
            Check(f"omega K(P) {_name(P)}", poset_to_M(dual(P)).scale(sg), omega(K)),
        ]
    for n in range(min(max_degree, 6) + 1):
        for lam in partitions_of(n):
            sym = symmetric_power_sum(lam)
            checks.append(Check(f"omega p_lambda {lam}", sym.scale(_sign(lam)), omega(sym)))
    return checks


def matrix_suite(max_degree: int = 6) -> list[Check]:
    checks = []
    for n in range(max_degree + 1):
        comps = compositions_of(n)
        for alpha in comps:
            p = power_sum(alpha)
            for beta in comps:
                checks.append(Check(f"R({alpha};{beta}) = [M_{beta}] p_{alpha}",
                                    p.coefficient(beta), Fraction(count_R(alpha, beta))))
            checks.append(Check(f"Q-formula F-expansion of p_{alpha}", m_to_f(p), power_sum_to_F(alpha)))
            pr = reverse_power_sum(alpha)
            checks.append(Check(f"R-formula M-expansion of pr_{alpha}", pr,
                                reverse_power_sum_to_M_by_matrices(alpha)))
            checks.append(Check(f"Q-formula F-expansion of pr_{alpha}", m_to_f(pr),
                                reverse_power_sum_to_F(alpha)))
        parts = partitions_of(n)
        for lam in parts:
            sym = symmetric_power_sum(lam)
            for mu in parts:
                checks.append(Check(f"Rsym({lam};{mu}) = [M_{mu}] p_{lam}",
                                    sym.coefficient(mu), Fraction(count_R_symmetric(lam, mu))))
    return checks


def refinement_suite(max_degree: int = 6) -> list[Check]:
    checks = []
    for n in range(max_degree + 1):
        for lam in partitions_of(n):
            sym = symmetric_power_sum(lam)
            truth = qsym_from_truncation(k_truncated(antichain_poset(lam), max(n, 1)), n)
            checks.append(Check(f"sum of p_alpha over rearrangements of {lam} is symmetric",
                                True, is_symmetric(sym)))
            checks.append(Check(f"sum of p_alpha over rearrangements of {lam} = K(antichain)",
                                truth, sym))
            sym_r = QSymElement.zero("M")
            for alpha in rearrangements(lam):
                sym_r = sym_r + reverse_power_sum(alpha)
            checks.append(Check(f"sum of pr_alpha over rearrangements of {lam} = K(antichain)",
                                truth, sym_r))
    return checks


def positivity_suite(max_degree: int = 7) -> list[Check]:
    checks = []
    for n in range(max_degree + 1):
        for alpha in compositions_of(n):
            p = power_sum(alpha)
            coeffs = list(p.terms.values())
            checks.append(Check(f"p_{alpha} has nonnegative integer M-coefficients", True,
                                all(c >= 0 and c.denominator == 1 for c in coeffs)))
            checks.append(Check(f"[M_{alpha}] p_{alpha} > 0", True, p.coefficient(alpha) > 0))
            checks.append(Check(f"p_{alpha} supported on coarsenings", True,
                                all(coarsens(b, alpha) for b in p.terms)))
            if n > 0:
                top = Composition((n,))
                is_part = alpha == underlying_partition(alpha)
                checks.append(Check(f"[M_{n}] p_{alpha}", Fraction(int(is_part)), p.coefficient(top)))
                rev_part = reverse(alpha) == underlying_partition(alpha)
                checks.append(Check(f"[M_{n}] pr_{alpha}", Fraction(int(rev_part)),
                                    reverse_power_sum(alpha).coefficient(top)))
    return checks


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "fundamental-lemma": lambda n: fundamental_lemma_suite(max_elements=n),
    "product": lambda n: product_suite(n),
    "coproduct": lambda n: coproduct_suite(n, max_chain=min(n, 4), max_elements=n),
    "involutions": lambda n: involution_suite(n, max_elements=min(n, 5)),
    "matrices": lambda n: matrix_suite(n),
    "refinement": lambda n: refinement_suite(n),
    "positivity": lambda n: positivity_suite(n),
}


def run_suite(name: str, max_degree: int) -> list[Check]:
    if name == "all":
        return [c for s in SUITES.values() for c in s(max_degree)]
    try:
        return SUITES[name](max_degree)
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'") from None


# -- worked examples -------------------------------------------------------------

def _rows(ms) -> list:
    return sorted(m.entries for m in ms)


def worked_example_checks() -> list[Check]:
    M = lambda *a: QSymElement.basis_element("M", a)  # noqa: E731
    F = lambda *a: QSymElement.basis_element("F", a)  # noqa: E731
    m = monomial_symmetric
    ch = LabelledChain.parse
    checks = [
        Check("p_211 = 2m_211 + 2m_31 + 2m_22 + m_4",
              m((2, 1, 1)).scale(2) + m((3, 1)).scale(2) + m((2, 2)).scale(2) + m((4,)),
              symmetric_power_sum((2, 1, 1))),
        Check("K[1_1 1_2 2_1] = M_112", M(1, 1, 2), chain_to_M(ch("1_1 1_2 2_1"))),
        Check("K[1_2 1_1 2_1] = M_112 + M_22", M(1, 1, 2) + M(2, 2), chain_to_M(ch("1_2 1_1 2_1"))),
        Check("p_112 = K[1_1 1_2 2_1] + K[1_2 1_1 2_1]",
              chain_to_M(ch("1_1 1_2 2_1")) + chain_to_M(ch("1_2 1_1 2_1")), power_sum((1, 1, 2))),
        Check("p_112 = 2M_112 + M_22", M(1, 1, 2).scale(2) + M(2, 2), power_sum((1, 1, 2))),
        Check("p_121 = 2M_121 + 2M_13", M(1, 2, 1).scale(2) + M(1, 3).scale(2), power_sum((1, 2, 1))),
        Check("p_121 = -2F_112 + 2F_13", F(1, 1, 2).scale(-2) + F(1, 3).scale(2),
              power_sum_to_F((1, 2, 1))),
        Check("p_121 F-expansion agrees with M-expansion", m_to_f(power_sum((1, 2, 1))),
              power_sum_to_F((1, 2, 1))),
        Check("K[1_2 1_1 2_1] = K[1_3 1_1 2_3]", chain_to_M(ch("1_2 1_1 2_1")),
              chain_to_M(ch("1_3 1_1 2_3"))),
    ]
    # displayed matrices for p_211 (all seven) and p_121
    sym_shown = [
        ((2, 0, 0), (0, 1, 0), (0, 0, 1)), ((2, 0, 0), (0, 0, 1), (0, 1, 0)),
        ((2, 1, 0), (0, 0, 1)), ((2, 0, 1), (0, 1, 0)), ((2, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (2, 0, 0)), ((2, 1, 1),),
    ]
    found = []
    for mu in ((2, 1, 1), (3, 1), (2, 2), (4,)):
        found += [mat.entries for mat in enumerate_R_symmetric((2, 1, 1), mu)]
    checks.append(Check("p_211 matrices", sorted(sym_shown), sorted(found)))
    checks.append(Check("Rsym(211;4) = 1", 1, count_R_symmetric((2, 1, 1), (4,))))
    checks.append(Check("Rsym(211;31) = 2", 2, count_R_symmetric((2, 1, 1), (3, 1))))
    checks.append(Check("Rsym(211;22) = 2", 2, count_R_symmetric((2, 1, 1), (2, 2))))
    checks.append(Check("Rsym(211;211) = 2", 2, count_R_symmetric((2, 1, 1), (2, 1, 1))))
    r_shown = [
        ((0, 1, 0), (2, 0, 0), (0, 0, 1)), ((0, 0, 1), (2, 0, 0), (0, 1, 0)),
        ((0, 1, 0), (2, 0, 1)), ((0, 0, 1), (2, 1, 0)),
    ]
    checks.append(Check("p_121 R-matrices", sorted(r_shown),
                        _rows(enumerate_R((1, 2, 1), (1, 2, 1)) + enumerate_R((1, 2, 1), (1, 3)))))
    checks.append(Check("R(121;13) = 2", 2, count_R((1, 2, 1), (1, 3))))
    checks.append(Check("R(121;121) = 2", 2, count_R((1, 2, 1), (1, 2, 1))))
    q_shown = [((0, 1, 0), (2, 0, 1)), ((0, 0, 1), (2, 1, 0))]
    checks.append(Check("p_121 Q-matrices", sorted(q_shown), _rows(enumerate_Q((1, 2, 1), (1, 3)))))
    checks.append(Check("Q(121;13) = 2", 2, count_Q((1, 2, 1), (1, 3))))
    # the example's two-element antichain: every map splits by comparing f(p), f(q)
    p_, q_ = LabelledInteger(1, 1), LabelledInteger(1, 2)
    anti = poset_from_covers([p_, q_], label_dualized=True)
    for N in (1, 2, 3):
        checks.append(Check(f"two-element antichain splits over its extensions, N={N}",
                            sorted(ppartition_multiset(anti, N).items()),
                            sorted(chain_decomposition_multiset(anti, N).items())))
    return checks

