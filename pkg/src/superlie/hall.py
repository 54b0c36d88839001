"""Basic commutators and the super bases built from them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import Alphabet, CapacityError, DomainError, LieTerm, Parity

ORDER_VERSION = "order-v1"
MAX_WEIGHT_CAP = 16


def _check_cap(max_weight: int) -> None:
    if max_weight < 1:
        raise DomainError("max_weight must be at least 1")
    if max_weight > MAX_WEIGHT_CAP:
        raise CapacityError(f"weight {max_weight} exceeds the cap of {MAX_WEIGHT_CAP}")


@dataclass(frozen=True)
class BasicCommutator:
    term: LieTerm
    index: int
    left: Optional[int] = None
    right: Optional[int] = None

    @property
    def weight(self) -> int:
        return self.term.weight

    @property
    def parity(self) -> Parity:
        return self.term.parity


class HallSet(Sequence):
    """All basic commutators up to ``max_weight``, indexed by their ordinal.

    Within one weight, ``[c, d]`` is ordered by ``(index(c), index(d))``;
    generators keep the alphabet order.
    """

    def __init__(self, alphabet: Alphabet, max_weight: int):
        _check_cap(max_weight)
        self.alphabet = alphabet
        self.max_weight = max_weight
        elems: list[BasicCommutator] = [
            BasicCommutator(alphabet.leaf(g.index), g.index) for g in alphabet
        ]
        by_weight: dict[int, list[BasicCommutator]] = {1: list(elems)}
        for k in range(2, max_weight + 1):
            cands = []
            for m in range(k - 1, (k - 1) // 2, -1):
                for c in by_weight.get(m, ()):
                    for d in by_weight.get(k - m, ()):
                        if c.index > d.index and (c.right is None or c.right <= d.index):
                            cands.append((c.index, d.index))
            cands.sort()
            level = []
            for ci, di in cands:
                b = BasicCommutator(
                    LieTerm.node(elems[ci].term, elems[di].term), len(elems), ci, di
                )
                elems.append(b)
                level.append(b)
            by_weight[k] = level
        self._elems = tuple(elems)
        self._by_weight = by_weight
        self._by_pair = {(b.left, b.right): b.index for b in elems if b.left is not None}
        self._by_term = {b.term: b.index for b in elems}

    def __getitem__(self, i):
        return self._elems[i]

    def __len__(self):
        return len(self._elems)

    def of_weight(self, k: int) -> list[BasicCommutator]:
        if k > self.max_weight:
            raise CapacityError(f"weight {k} beyond basic commutators of weight <= {self.max_weight}")
        return list(self._by_weight.get(k, ()))

    def pair(self, left: int, right: int) -> int:
        """Ordinal of ``[left, right]``; raises if that bracket is not basic."""
        try:
            return self._by_pair[(left, right)]
        except KeyError:
            l, r = self._elems[left], self._elems[right]
            if l.weight + r.weight > self.max_weight:
                raise CapacityError(
                    f"weight {l.weight + r.weight} beyond basic commutators of weight <= {self.max_weight}"
                ) from None
            raise DomainError(f"[{left},{right}] is not a basic commutator") from None

    def index_of(self, t: LieTerm) -> Optional[int]:
        return self._by_term.get(t)


def enum_basic(alphabet: Alphabet, max_weight: int) -> HallSet:
    return HallSet(alphabet, max_weight)


def basic_index(t: LieTerm, basis: HallSet) -> Optional[int]:
    return basis.index_of(t)


def is_basic_by_definition(t: LieTerm, alphabet: Alphabet, order) -> bool:
    """Check the weight-by-weight clauses directly on a tree.

    ``order`` maps a term already known to be basic to its rank; it is only
    consulted for the ``c > d`` and ``f <= d`` comparisons.
    """
    if t.is_leaf:
        return 0 <= t.label < len(alphabet)
    c, d = t.left, t.right
    if not (is_basic_by_definition(c, alphabet, order) and is_basic_by_definition(d, alphabet, order)):
        return False
    if t.weight == 2:
        return c.label > d.label
    if t.weight == 3 and c.weight == 2:
        a, b = c.left, c.right
        return a.label > b.label and d.is_leaf and b.label <= d.label
    if order(c) <= order(d):
        return False
    if not c.is_leaf and order(c.right) > order(d):
        return False
    return True


@dataclass(frozen=True)
class SuperBasisElement:
    kind: str  # "plain" or "odd_square"
    base: LieTerm
    index: int
    basic: Optional[int] = None

    def __post_init__(self):
        if self.kind == "odd_square" and not self.base.parity:
            raise DomainError("odd squares only wrap odd elements")

    @property
    def term(self) -> LieTerm:
        if self.kind == "plain":
            return self.base
        return LieTerm.node(self.base, self.base)

    @property
    def weight(self) -> int:
        return self.base.weight * (1 if self.kind == "plain" else 2)

    @property
    def parity(self) -> Parity:
        return self.base.parity if self.kind == "plain" else Parity.EVEN


def term_to_json(t: LieTerm, alphabet: Alphabet):
    if t.is_leaf:
        return alphabet.name(t.label)
    return [term_to_json(t.left, alphabet), term_to_json(t.right, alphabet)]


def term_from_json(obj, alphabet: Alphabet) -> LieTerm:
    if isinstance(obj, str):
        return alphabet.leaf(obj)
    left, right = obj
    return LieTerm.node(term_from_json(left, alphabet), term_from_json(right, alphabet))


@dataclass
class SuperBasis(Sequence):
    """An ordered super basis up to ``max_weight`` for one scheme."""

    alphabet: Alphabet
    max_weight: int
    scheme: str
    elements: tuple[SuperBasisElement, ...]
    hall: Optional[HallSet] = None
    _by_term: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._by_term = {e.term: e.index for e in self.elements}

    def __getitem__(self, i):
        return self.elements[i]

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[SuperBasisElement]:
        return iter(self.elements)

    def of_weight(self, k: int) -> list[SuperBasisElement]:
        return [e for e in self.elements if e.weight == k]

    def dims(self) -> list[int]:
        counts = [0] * self.max_weight
        for e in self.elements:
            counts[e.weight - 1] += 1
        return counts

    def index_of(self, t: LieTerm) -> Optional[int]:
        return self._by_term.get(t)

    @property
    def fingerprint(self) -> str:
        return f"{self.alphabet.spec()}|max_weight={self.max_weight}|{self.scheme}|{ORDER_VERSION}"

    def element_json(self, e: SuperBasisElement) -> dict:
        return {
            "kind": e.kind,
            "term": term_to_json(e.term, self.alphabet),
            "weight": e.weight,
            "parity": int(e.parity),
            "index": e.index,
        }

    @classmethod
    def from_terms(cls, alphabet: Alphabet, max_weight: int, scheme: str, terms) -> "SuperBasis":
        """Build from a list of plain terms; odd squares ``[t,t]`` are recognised."""
        tagged = []
        for t in terms:
            if not t.is_leaf and t.left == t.right and t.left.parity:
                tagged.append((t.weight, 1, t.left, "odd_square"))
            else:
                tagged.append((t.weight, 0, t, "plain"))
        tagged.sort(key=lambda x: (x[0], x[1], x[2]))
        elems = tuple(SuperBasisElement(kind, base, i) for i, (_, _, base, kind) in enumerate(tagged))
        return cls(alphabet, max_weight, scheme, elems)


def super_basis(alphabet: Alphabet, max_weight: int, hall: Optional[HallSet] = None) -> SuperBasis:
    """Basic commutators plus ``[c,c]`` for every odd basic ``c``, ordered by
    (weight, plain before square, basic ordinal)."""
    _check_cap(max_weight)
    if hall is None or hall.max_weight < max_weight or hall.alphabet != alphabet:
        hall = HallSet(alphabet, max_weight)
    tagged = [(b.weight, 0, b.index) for b in hall if b.weight <= max_weight]
    tagged += [(2 * b.weight, 1, b.index) for b in hall if b.parity and 2 * b.weight <= max_weight]
    tagged.sort()
    elems = tuple(
        SuperBasisElement("plain" if sq == 0 else "odd_square", hall[bi].term, i, bi)
        for i, (_, sq, bi) in enumerate(tagged)
    )
    return SuperBasis(alphabet, max_weight, "hall", elems, hall)


def scheme_basis(alphabet: Alphabet, max_weight: int, scheme: str) -> SuperBasis:
    from . import words

    _check_cap(max_weight)
    if scheme == "hall":
        return super_basis(alphabet, max_weight)
    if scheme == "lyndon":
        return SuperBasis.from_terms(alphabet, max_weight, scheme, words.lyndon_super_basis(alphabet, max_weight))
    if scheme == "shirshov":
        return SuperBasis.from_terms(alphabet, max_weight, scheme, words.shirshov_super_basis(alphabet, max_weight))
    raise DomainError(f"unknown scheme {scheme!r}")
