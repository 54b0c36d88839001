"""Graded alphabets, bracket trees and integer linear combinations.

Everything here is immutable once built.  Generators are referred to by
their position in the alphabet, and that position is also their order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

_FORBIDDEN = set("[],+-*·: \t\n")


class LieError(Exception):
    """Base class for errors raised by this package."""


class StructuralError(LieError):
    """A term or word refers to generators that are not in the alphabet."""


class DomainError(LieError):
    """An argument lies outside the domain of an operation."""


class CapacityError(LieError):
    """A computation needs more weight than the available basis provides."""


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    @classmethod
    def coerce(cls, value) -> "Parity":
        if isinstance(value, str):
            key = value.strip().lower()
            if key in ("0", "even"):
                return cls.EVEN
            if key in ("1", "odd"):
                return cls.ODD
            raise ValueError(f"bad parity {value!r}")
        if value in (0, 1):
            return cls(int(value))
        raise ValueError(f"bad parity {value!r}")


def sign(p: int, q: int) -> int:
    """(-1)^(p*q) for parities p, q."""
    return -1 if (p & q) & 1 else 1


@dataclass(frozen=True)
class Generator:
    index: int
    name: str
    parity: Parity


class Alphabet:
    """Ordered set of graded generators; listing order is the order ``<``."""

    __slots__ = ("generators", "_by_name")

    def __init__(self, generators: Iterable[tuple[str, int | str | Parity]]):
        gens = []
        by_name = {}
        for i, (name, par) in enumerate(generators):
            if not name or any(ch in _FORBIDDEN for ch in name):
                raise ValueError(f"bad generator name {name!r}")
            if name in by_name:
                raise ValueError(f"duplicate generator name {name!r}")
            by_name[name] = i
            gens.append(Generator(i, name, Parity.coerce(par)))
        if not gens:
            raise ValueError("an alphabet needs at least one generator")
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._by_name = by_name

    def __len__(self):
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __getitem__(self, i: int) -> Generator:
        return self.generators[i]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Alphabet({self.spec()!r})"

    def key(self):
        return tuple((g.name, int(g.parity)) for g in self.generators)

    def spec(self) -> str:
        return " ".join(f"{g.name}:{'odd' if g.parity else 'even'}" for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise StructuralError(f"unknown generator {name!r}") from None

    def parity(self, i: int) -> Parity:
        self.check(i)
        return self.generators[i].parity

    def name(self, i: int) -> str:
        self.check(i)
        return self.generators[i].name

    def check(self, i: int) -> None:
        if not (isinstance(i, int) and 0 <= i < len(self.generators)):
            raise StructuralError(f"generator index {i!r} not in alphabet of size {len(self)}")

    def leaf(self, ref: int | str) -> "LieTerm":
        i = self.index(ref) if isinstance(ref, str) else ref
        return LieTerm.leaf(i, self.parity(i))

    @property
    def single_char(self) -> bool:
        return all(len(g.name) == 1 for g in self.generators)


class LieTerm:
    """A binary bracket tree.

    Leaves carry an integer label and a parity.  Weight and parity are
    computed once.  Terms are ordered by weight, then structurally (leaves by
    label, nodes lexicographically on ``(left, right)``).
    """

    __slots__ = ("label", "left", "right", "weight", "parity", "_key", "_hash")

    def __init__(self, label, left, right, weight, parity, key):
        self.label = label
        self.left = left
        self.right = right
        self.weight = weight
        self.parity = parity
        self._key = key
        self._hash = hash(key)

    @classmethod
    def leaf(cls, label: int, parity: int) -> "LieTerm":
        return cls(label, None, None, 1, Parity(parity), (1, label, int(parity)))

    @classmethod
    def node(cls, left: "LieTerm", right: "LieTerm") -> "LieTerm":
        w = left.weight + right.weight
        return cls(None, left, right, w, left.parity + right.parity, (w, left._key, right._key))

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def leaves(self) -> list["LieTerm"]:
        if self.is_leaf:
            return [self]
        return self.left.leaves() + self.right.leaves()

    def labels(self) -> tuple[int, ...]:
        return tuple(x.label for x in self.leaves())

    def __eq__(self, other):
        return isinstance(other, LieTerm) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __repr__(self):
        return f"LieTerm({render_term(self)})"


def bracket_terms(*terms: LieTerm) -> LieTerm:
    """Left-normed product ``[t1, t2, ..., tk]``."""
    out = terms[0]
    for t in terms[1:]:
        out = LieTerm.node(out, t)
    return out


def parity_of(t: LieTerm, alphabet: Alphabet) -> Parity:
    total = 0
    for leaf in t.leaves():
        total += alphabet.parity(leaf.label)
    return Parity(total % 2)


def weight_of(t: LieTerm) -> int:
    return t.weight


def multidegree(w: Iterable[int], alphabet: Alphabet) -> tuple[int, ...]:
    counts = [0] * len(alphabet)
    for i in w:
        alphabet.check(i)
        counts[i] += 1
    return tuple(counts)


def term_multidegree(t: LieTerm, alphabet: Alphabet) -> tuple[int, ...]:
    return multidegree(t.labels(), alphabet)


def word_parity(w: Iterable[int], alphabet: Alphabet) -> Parity:
    return Parity(sum(alphabet.parity(i) for i in w) % 2)


class LinComb(Mapping):
    """Finite integer combination of hashable keys.  Zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, LinComb):
            self._terms = dict(terms._terms)
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict = {}
            for k, c in items:
                acc[k] = acc.get(k, 0) + c
            self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, d: dict):
        obj = cls.__new__(cls)
        obj._terms = d
        return obj

    @classmethod
    def monomial(cls, key, coeff: int = 1):
        return cls._raw({key: coeff} if coeff else {})

    def __getitem__(self, key):
        return self._terms[key]

    def get(self, key, default=0):
        return self._terms.get(key, default)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        d = dict(self._terms)
        for k, c in other._terms.items():
            v = d.get(k, 0) + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return type(self)._raw(d)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return type(self)()
        return type(self)._raw({k: scalar * c for k, c in self._terms.items()})

    def sorted_items(self):
        return sorted(self._terms.items())

    def __repr__(self):
        return f"{type(self).__name__}({dict(self.sorted_items())!r})"


class LiePoly(LinComb):
    """Integer combination of :class:`LieTerm`."""

    @classmethod
    def of(cls, t: LieTerm, coeff: int = 1) -> "LiePoly":
        return cls.monomial(t, coeff)

    def weight(self) -> int:
        return max((t.weight for t in self), default=0)

    def parities(self) -> set[int]:
        return {int(t.parity) for t in self}


class AssocPoly(LinComb):
    """Integer combination of words (tuples of generator indices).

    ``*`` between two polys is the concatenation product.
    """

    @classmethod
    def word(cls, w, coeff: int = 1) -> "AssocPoly":
        return cls.monomial(tuple(w), coeff)

    @classmethod
    def one(cls) -> "AssocPoly":
        return cls.monomial((), 1)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if not isinstance(other, AssocPoly):
            return NotImplemented
        d: dict = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u + v
                d[w] = d.get(w, 0) + a * b
        return AssocPoly._raw({k: c for k, c in d.items() if c})

    def degrees(self) -> set[int]:
        return {len(w) for w in self}


def render_term(t: LieTerm, names=None) -> str:
    """Text form; left-normed chains use ``[a,b,c]`` sugar."""
    if t.is_leaf:
        return names(t.label) if names else str(t.label)
    spine = []
    cur = t
    while not cur.is_leaf:
        spine.append(cur.right)
        cur = cur.left
    spine.append(cur)
    spine.reverse()
    return "[" + ",".join(render_term(s, names) for s in spine) + "]"


def render_word(w, alphabet: Alphabet) -> str:
    sep = "" if alphabet.single_char else "·"
    return sep.join(alphabet.name(i) for i in w)


def render_lincomb(items, render_key) -> str:
    """``2*x - y + [x,y]`` style; unit coefficients carry no ``1*``."""
    parts = []
    for key, c in items:
        body = render_key(key)
        mag = abs(c)
        text = body if mag == 1 else f"{mag}*{body}"
        if not parts:
            parts.append(text if c > 0 else "-" + text)
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts) if parts else "0"


def render_liepoly(p: LiePoly, alphabet: Alphabet) -> str:
    return render_lincomb(p.sorted_items(), lambda t: render_term(t, alphabet.name))


def render_assocpoly(p: AssocPoly, alphabet: Alphabet) -> str:
    items = sorted(p.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return render_lincomb(items, lambda w: render_word(w, alphabet) or "1")
