"""Finite weighted labelled posets and labelled chains.

Elements are identified with their labels, which are labelled positive
integers ``a_k``.  Python tuple order on ``(value, index)`` is exactly the
chain ``1_1 < 1_2 < ... < 2_1 < 2_2 < ...``; the default labelling compares
in the dual of that chain, and a poset with ``label_dualized=True`` compares
in the chain itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from types import MappingProxyType
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple

from .compositions import Composition, composition_from_set, multiplicities

DEFAULT_MAX_ELEMENTS = 20


class PosetError(ValueError):
    """Invalid poset data (cycle, label clash, bad weight, parse failure)."""


class PosetTooLarge(PosetError):
    pass


class LabelledInteger(NamedTuple):
    value: int
    index: int

    def __str__(self) -> str:
        return f"{self.value}_{self.index}"

    @classmethod
    def parse(cls, token: str) -> "LabelledInteger":
        try:
            a, k = token.strip().split("_")
            out = cls(int(a), int(k))
        except ValueError:
            raise PosetError(f"bad labelled integer {token!r}; expected VALUE_INDEX") from None
        if out.value < 1 or out.index < 1:
            raise PosetError(f"labelled integer {token!r} must have positive parts")
        return out


def label_less(a: LabelledInteger, b: LabelledInteger, dualized: bool = False) -> bool:
    """Compare labels in the active order.

    With ``dualized=False`` the labels live in the dual chain, so ``1_1`` is
    the largest element; with ``dualized=True`` they live in the chain itself.
    """
    return a < b if dualized else a > b


class LabelledChain(tuple):
    """Distinct labelled integers, listed bottom to top."""

    __slots__ = ()

    def __new__(cls, entries: Iterable = ()):
        items = tuple(e if isinstance(e, LabelledInteger) else LabelledInteger(*e) for e in entries)
        if len(set(items)) != len(items):
            raise PosetError(f"labelled chain entries must be distinct: {items}")
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> "LabelledChain":
        return cls(LabelledInteger.parse(tok) for tok in text.split())

    def reversed(self) -> "LabelledChain":
        return LabelledChain(self[::-1])

    def __str__(self) -> str:
        return " ".join(str(e) for e in self)

    def __repr__(self) -> str:
        return f"LabelledChain({str(self)!r})"


def _as_label(x) -> LabelledInteger:
    if isinstance(x, LabelledInteger):
        return x
    if isinstance(x, str):
        return LabelledInteger.parse(x)
    return LabelledInteger(*x)


def _closure(elements: Iterable, pairs: Iterable[tuple]) -> frozenset:
    succ: dict = {e: set() for e in elements}
    for a, b in pairs:
        succ[a].add(b)
    closed = set()
    for start in succ:
        stack = list(succ[start])
        seen = set()
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(succ[x])
        closed.update((start, x) for x in seen)
    return frozenset(closed)


@dataclass(frozen=True)
class WeightedLabelledPoset:
    """A finite poset whose elements are their own (injective) labels.

    ``order`` holds every strict relation ``(lesser, greater)`` in transitively
    closed form.  ``weights`` defaults to the value part of each label.
    """

    elements: tuple[LabelledInteger, ...]
    order: frozenset = frozenset()
    weights: Mapping[LabelledInteger, int] = field(default_factory=dict)
    label_dualized: bool = False

    def __post_init__(self):
        elems = tuple(sorted(_as_label(e) for e in self.elements))
        if len(set(elems)) != len(elems):
            raise PosetError("labels must be injective")
        object.__setattr__(self, "elements", elems)
        elem_set = set(elems)
        order = frozenset((_as_label(a), _as_label(b)) for a, b in self.order)
        for a, b in order:
            if a not in elem_set or b not in elem_set:
                raise PosetError(f"relation {a}<{b} mentions an unknown element")
            if a == b:
                raise PosetError(f"relation {a}<{a} is reflexive; not a strict order")
            if (b, a) in order:
                raise PosetError(f"{a} and {b} are related both ways; not a partial order")
        if _closure(elems, order) != order:
            raise PosetError("order relation is not transitively closed")
        object.__setattr__(self, "order", order)
        weights = {e: e.value for e in elems}
        for k, v in dict(self.weights).items():
            k = _as_label(k)
            if k not in elem_set:
                raise PosetError(f"weight given for unknown element {k}")
            weights[k] = v
        for k, v in weights.items():
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise PosetError(f"weight of {k} must be a positive integer, got {v!r}")
        object.__setattr__(self, "weights", MappingProxyType(weights))

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedLabelledPoset):
            return NotImplemented
        return (self.elements == other.elements and self.order == other.order
                and self.weights == other.weights and self.label_dualized == other.label_dualized)

    def __hash__(self):
        return hash((self.elements, self.order, tuple(sorted(self.weights.items())), self.label_dualized))

    def less(self, p, q) -> bool:
        return (p, q) in self.order

    def covers(self) -> list[tuple[LabelledInteger, LabelledInteger]]:
        out = []
        for a, b in self.order:
            if not any((a, c) in self.order and (c, b) in self.order for c in self.elements):
                out.append((a, b))
        return sorted(out)

    def total_weight(self) -> int:
        return sum(self.weights.values())

    def label_less(self, p, q) -> bool:
        return label_less(p, q, self.label_dualized)

    def restrict(self, subset: Iterable) -> "WeightedLabelledPoset":
        keep = set(subset)
        return WeightedLabelledPoset(
            elements=tuple(e for e in self.elements if e in keep),
            order=frozenset((a, b) for a, b in self.order if a in keep and b in keep),
            weights={e: w for e, w in self.weights.items() if e in keep},
            label_dualized=self.label_dualized,
        )

    def __str__(self) -> str:
        covers = "; ".join(f"{a}<{b}" for a, b in self.covers())
        return (f"elements: {', '.join(str(e) for e in self.elements)}\n"
                f"covers: {covers}\n"
                f"dualized: {'true' if self.label_dualized else 'false'}")


def poset_from_covers(
    elements: Iterable[Hashable],
    covers: Iterable[tuple] = (),
    labels: Mapping | None = None,
    weights: Mapping | None = None,
    label_dualized: bool = False,
) -> WeightedLabelledPoset:
    """Build a poset from cover (or any generating) relations.

    Without ``labels`` the elements must themselves be labelled integers (or
    ``"a_k"`` strings).  Weights default to the label values.
    """
    elements = list(elements)
    if labels is None:
        lab = {e: _as_label(e) for e in elements}
    else:
        lab = {e: _as_label(labels[e]) for e in elements}
    if len(set(lab.values())) != len(lab):
        raise PosetError("labels must be injective")
    pairs = []
    for a, b in covers:
        if a not in lab or b not in lab:
            raise PosetError(f"cover {a}<{b} mentions an unknown element")
        pairs.append((lab[a], lab[b]))
    closed = _closure(lab.values(), pairs)
    for a, b in closed:
        if a == b:
            raise PosetError(f"cover relations contain a cycle through {a}")
    w = {} if weights is None else {lab[e]: v for e, v in weights.items()}
    return WeightedLabelledPoset(tuple(lab.values()), closed, w, label_dualized)


def chain_poset(chain: Iterable, label_dualized: bool = False,
                weights: Mapping | None = None) -> WeightedLabelledPoset:
    chain = LabelledChain(chain)
    covers = list(zip(chain, chain[1:]))
    return poset_from_covers(chain, covers, weights=weights, label_dualized=label_dualized)


def antichain_poset(lam: Iterable[int]) -> WeightedLabelledPoset:
    """The relation-free poset on ``a_1..a_{r_a}`` for each part a of multiplicity r_a."""
    elems = [LabelledInteger(a, k) for a, r in multiplicities(lam).items() for k in range(1, r + 1)]
    return WeightedLabelledPoset(tuple(elems))


def _check_size(P: WeightedLabelledPoset, max_elements: int | None) -> None:
    if max_elements is not None and len(P) > max_elements:
        raise PosetTooLarge(f"poset has {len(P)} elements, cap is {max_elements}")


def linear_extensions(P: WeightedLabelledPoset,
                      max_elements: int | None = DEFAULT_MAX_ELEMENTS) -> list[LabelledChain]:
    """All linear extensions, by repeatedly removing a minimal element (smallest label first)."""
    _check_size(P, max_elements)
    below = {e: {a for a, b in P.order if b == e} for e in P.elements}
    out: list[LabelledChain] = []
    prefix: list[LabelledInteger] = []
    placed: set = set()

    def rec():
        if len(prefix) == len(P.elements):
            out.append(LabelledChain(prefix))
            return
        for e in P.elements:
            if e not in placed and below[e] <= placed:
                placed.add(e)
                prefix.append(e)
                rec()
                prefix.pop()
                placed.discard(e)

    rec()
    return out


def lower_sets(P: WeightedLabelledPoset,
               max_elements: int | None = DEFAULT_MAX_ELEMENTS) -> list[frozenset]:
    """All order ideals, sorted by size and then by sorted contents."""
    _check_size(P, max_elements)
    below = {e: {a for a, b in P.order if b == e} for e in P.elements}
    topo = linear_extensions(P, None)[0] if P.elements else ()
    out = []

    def rec(i: int, chosen: frozenset):
        if i == len(topo):
            out.append(chosen)
            return
        e = topo[i]
        rec(i + 1, chosen)
        if below[e] <= chosen:
            rec(i + 1, chosen | {e})

    rec(0, frozenset())
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def dual(P: WeightedLabelledPoset) -> WeightedLabelledPoset:
    return WeightedLabelledPoset(P.elements, frozenset((b, a) for a, b in P.order),
                                 P.weights, P.label_dualized)


def dual_labelling(P: WeightedLabelledPoset) -> WeightedLabelledPoset:
    return WeightedLabelledPoset(P.elements, P.order, P.weights, not P.label_dualized)


def disjoint_union(P: WeightedLabelledPoset, Q: WeightedLabelledPoset) -> WeightedLabelledPoset:
    if set(P.elements) & set(Q.elements):
        raise PosetError("disjoint union needs disjoint label sets")
    if P.label_dualized != Q.label_dualized:
        raise PosetError("disjoint union needs matching label orders")
    return WeightedLabelledPoset(P.elements + Q.elements, P.order | Q.order,
                                 {**P.weights, **Q.weights}, P.label_dualized)


def alpha_of(chain: Iterable, weights: Mapping | None = None) -> Composition:
    """Weights read along the chain (label values unless ``weights`` is given)."""
    chain = LabelledChain(chain)
    if weights is None:
        return Composition(e.value for e in chain)
    return Composition(weights[e] for e in chain)


def delta_of(chain: Iterable, dualized: bool = False,
             weights: Mapping | None = None) -> Composition:
    """Descent composition: cut after position k when the label at k exceeds the next one."""
    chain = LabelledChain(chain)
    alpha = alpha_of(chain, weights)
    cuts = []
    total = 0
    for k in range(len(chain) - 1):
        total += alpha[k]
        if label_less(chain[k + 1], chain[k], dualized):
            cuts.append(total)
    return composition_from_set(cuts, alpha.size)


def brute_force_linear_extensions(P: WeightedLabelledPoset) -> Iterator[tuple]:
    """Every permutation of the elements that respects the order."""
    for perm in permutations(P.elements):
        pos = {e: i for i, e in enumerate(perm)}
        if all(pos[a] < pos[b] for a, b in P.order):
            yield perm


# -- text format ------------------------------------------------------------

def parse_poset(text: str) -> WeightedLabelledPoset:
    """Parse the ``elements:`` / ``covers:`` / ``dualized:`` line format."""
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep or key not in ("elements", "covers", "dualized"):
            raise PosetError(f"unrecognised line {raw!r}")
        if key in fields:
            raise PosetError(f"duplicate {key!r} line")
        fields[key] = rest.strip()
    if "elements" not in fields:
        raise PosetError("missing 'elements:' line")
    elems = [LabelledInteger.parse(t) for t in fields["elements"].split(",") if t.strip()]
    covers = []
    for item in fields.get("covers", "").split(";"):
        if not item.strip():
            continue
        parts = item.split("<")
        if len(parts) != 2:
            raise PosetError(f"bad cover {item!r}; expected a_k<b_j")
        covers.append((LabelledInteger.parse(parts[0]), LabelledInteger.parse(parts[1])))
    flag = fields.get("dualized", "false").lower()
    if flag not in ("true", "false"):
        raise PosetError(f"dualized must be true or false, got {flag!r}")
    return poset_from_covers(elems, covers, label_dualized=flag == "true")
