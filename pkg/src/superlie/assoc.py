"""The free associative superalgebra: expansion, collection, exact rank."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from .core import (
    Alphabet,
    AssocPoly,
    CapacityError,
    DomainError,
    LieTerm,
    LinComb,
    render_lincomb,
    render_term,
    sign,
)
from .hall import HallSet, SuperBasisElement, scheme_basis


@lru_cache(maxsize=1 << 16)
def _expand_term(t: LieTerm) -> AssocPoly:
    if t.is_leaf:
        return AssocPoly.word((t.label,))
    u, v = _expand_term(t.left), _expand_term(t.right)
    return u * v - sign(t.left.parity, t.right.parity) * (v * u)


def expand(p, alphabet: Alphabet | None = None) -> AssocPoly:
    """Image of a Lie element under ``[a,b] -> ab - (-1)^{|a||b|} ba``."""
    if isinstance(p, SuperBasisElement):
        p = p.term
    if isinstance(p, LieTerm):
        if alphabet is not None:
            for i in p.labels():
                alphabet.check(i)
        return _expand_term(p)
    out = AssocPoly()
    for t, c in p.items():
        out = out + c * expand(t, alphabet)
    return out


class CollectedPoly(LinComb):
    """Integer combination of products of basic commutators.

    Keys are tuples of Hall ordinals.  After a full collection every key is
    nondecreasing, i.e. a basic product.
    """


def is_basic_product(seq: Sequence[int]) -> bool:
    return len(seq) >= 1 and all(a <= b for a, b in zip(seq, seq[1:]))


def product_weight(seq: Sequence[int], hall: HallSet) -> int:
    return sum(hall[i].weight for i in seq)


def enum_basic_products(alphabet: Alphabet, hall: HallSet, n: int) -> list[tuple[int, ...]]:
    """Nondecreasing sequences of basic commutators of total weight ``n``."""
    if n > hall.max_weight:
        raise CapacityError(f"basic commutators known only up to weight {hall.max_weight}")
    cands = [b for b in hall if b.weight <= n]
    out: list[tuple[int, ...]] = []

    def grow(start, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for pos in range(start, len(cands)):
            b = cands[pos]
            if b.weight <= left:
                acc.append(b.index)
                grow(pos, left - b.weight, acc)
                acc.pop()

    grow(0, n, [])
    return out


def expand_product(seq: Sequence[int], hall: HallSet) -> AssocPoly:
    out = AssocPoly.one()
    for i in seq:
        out = out * _expand_term(hall[i].term)
    return out


def expand_collected(p: CollectedPoly, hall: HallSet) -> AssocPoly:
    out = AssocPoly()
    for seq, c in p.items():
        out = out + c * expand_product(seq, hall)
    return out


def _collect_stage(state: dict, k: int, hall: HallSet) -> dict:
    """Move every factor ``k`` to the left of the uncollected part.

    ``x k -> [x, k] + (-1)^{|x||k|} k x`` for ``x > k``, leftmost pair first.
    """
    pk = hall[k].parity
    out: dict = {}
    work = dict(state)
    while work:
        seq, c = work.popitem()
        if not c:
            continue
        for i in range(len(seq) - 1):
            if seq[i + 1] == k and seq[i] > k:
                break
        else:
            out[seq] = out.get(seq, 0) + c
            continue
        x = seq[i]
        head, tail = seq[:i], seq[i + 2:]
        a = head + (hall.pair(x, k),) + tail
        b = head + (k, x) + tail
        work[a] = work.get(a, 0) + c
        work[b] = work.get(b, 0) + sign(hall[x].parity, pk) * c
    return {s: c for s, c in out.items() if c}


def collect(w: Sequence[int], alphabet: Alphabet, hall: HallSet, stages: Optional[int] = None) -> CollectedPoly:
    """Rewrite the word ``w`` as a combination of basic products.

    Basic commutators are collected one at a time in increasing order.  With
    ``stages=k`` only the ``k`` smallest are collected, which leaves the
    intermediate form (e.g. ``stages=1`` collects the first generator only).
    """
    w = tuple(w)
    if not w:
        raise DomainError("cannot collect the empty word")
    for i in w:
        alphabet.check(i)
    if len(w) > hall.max_weight:
        raise CapacityError(f"word of length {len(w)} exceeds basic commutators of weight <= {hall.max_weight}")
    ordinals = [b.index for b in hall if b.weight <= len(w)]
    if stages is not None:
        ordinals = ordinals[:stages]
    state = {w: 1}
    for k in ordinals:
        if any(k in seq for seq in state):
            state = _collect_stage(state, k, hall)
    return CollectedPoly(state)


def render_product(seq: Sequence[int], hall: HallSet) -> str:
    alphabet = hall.alphabet
    sep = "" if alphabet.single_char else "·"
    return sep.join(render_term(hall[i].term, alphabet.name) for i in seq)


def render_collected(p: CollectedPoly, hall: HallSet) -> str:
    return render_lincomb(p.sorted_items(), lambda s: render_product(s, hall))


@dataclass
class RankReport:
    inputs: int
    rows: int
    cols: int
    rank: int
    independent: bool
    pivots: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "inputs": self.inputs,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "independent": self.independent,
        }


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def rank_over_integers(rows: Iterable[AssocPoly]) -> RankReport:
    """Exact rank by fraction-free sparse elimination.

    Each new row is reduced against the pivot rows with ``r <- a*r - b*p``
    (integer multiples only) and divided by its content.
    """
    rows = list(rows)
    cols = set()
    pivots: dict = {}
    for poly in rows:
        cols.update(poly)
        r = _primitive(dict(poly.items()))
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            a, b = p[col], r[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                x = new.get(k, 0) - b * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    rank = len(pivots)
    return RankReport(len(rows), len(rows), len(cols), rank, rank == len(rows), sorted(pivots))


def solve_coordinates(p: AssocPoly, expanded_basis: Sequence[AssocPoly]) -> Optional[dict]:
    """Integer ``x`` with ``sum x_i B_i = p``, or ``None`` if there is none."""
    pivots: dict = {}  # column -> (row normalised to 1 at column, combination)
    for i, b in enumerate(expanded_basis):
        r = {k: Fraction(v) for k, v in b.items()}
        combo = {i: Fraction(1)}
        while r:
            col = min(r)
            if col not in pivots:
                f = r[col]
                pivots[col] = ({k: v / f for k, v in r.items()}, {j: v / f for j, v in combo.items()})
                break
            r, combo = _eliminate(r, combo, *pivots[col], col)
        else:
            raise DomainError("expanded basis is not linearly independent")
    r = {k: Fraction(v) for k, v in p.items()}
    combo: dict = {}
    while r:
        col = min(r)
        if col not in pivots:
            return None
        r, combo = _eliminate(r, combo, *pivots[col], col)
    # r = p - sum(coords_i * B_i) has been driven to 0, so coords = -combo
    coords = {}
    for j, v in combo.items():
        if v:
            if v.denominator != 1:
                return None
            coords[j] = -int(v)
    return coords


def _eliminate(r, combo, prow, pcombo, col):
    f = r[col]
    r = dict(r)
    for k, v in prow.items():
        x = r.get(k, 0) - f * v
        if x:
            r[k] = x
        else:
            r.pop(k, None)
    combo = dict(combo)
    for j, v in pcombo.items():
        combo[j] = combo.get(j, 0) - f * v
    return r, combo


@dataclass
class WeightReport:
    weight: int
    count: int
    rank: int
    independent: bool
    expected: Optional[int] = None
    products: Optional[int] = None
    products_rank: Optional[int] = None

    @property
    def ok(self) -> bool:
        if not self.independent:
            return False
        if self.expected is not None:
            return self.products == self.expected == self.products_rank
        return True

    def to_json(self) -> dict:
        d = {"weight": self.weight, "count": self.count, "rank": self.rank, "independent": self.independent}
        if self.expected is not None:
            d.update(expected=self.expected, products=self.products, products_rank=self.products_rank)
        return d


def verify_basis(alphabet: Alphabet, max_weight: int, scheme: str = "hall") -> list[WeightReport]:
    """Per-weight independence of a super basis; for ``hall`` also checks
    that the weight-n basic products number ``r**n`` and have full rank."""
    basis = scheme_basis(alphabet, max_weight, scheme)
    r = len(alphabet)
    reports = []
    for n in range(1, max_weight + 1):
        elems = basis.of_weight(n)
        rep = rank_over_integers(expand(e) for e in elems)
        wr = WeightReport(n, len(elems), rep.rank, rep.independent)
        if scheme == "hall":
            prods = enum_basic_products(alphabet, basis.hall, n)
            prank = rank_over_integers(expand_product(s, basis.hall) for s in prods).rank
            wr.expected, wr.products, wr.products_rank = r**n, len(prods), prank
        reports.append(wr)
    return reports

