"""Bracket arithmetic and reduction to coordinates in the Hall super basis.

The reducer works on trees whose leaves are basic commutators (a leaf label
is a Hall ordinal; generators are the first ordinals).  One round:

1. left-normalize around the smallest factor ``c1``;
2. for each comb ``[c1, c2, ...]``: if ``c1 < c2`` absorb into ``[c2, c1]``;
   if ``c1 == c2`` the comb vanishes (``c1`` even, or ``c3 == c1``), is the
   odd square ``[c1, c1]``, or equals ``-2 [[c3, c1, c1], c4, ...]``;
3. the comb is now shorter; repeat until one factor is left.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    Alphabet,
    CapacityError,
    DomainError,
    LiePoly,
    LieTerm,
    bracket_terms,
    render_lincomb,
    render_term,
    sign,
)
from .hall import HallSet, SuperBasis, super_basis


def bracket(p: LiePoly, q: LiePoly, alphabet: Alphabet | None = None) -> LiePoly:
    """Bilinear formal bracket; no rewriting."""
    acc: dict = {}
    for u, a in p.items():
        for v, b in q.items():
            t = LieTerm.node(u, v)
            acc[t] = acc.get(t, 0) + a * b
    return LiePoly(acc)


def _contains(t: LieTerm, label: int) -> bool:
    if t.is_leaf:
        return t.label == label
    return _contains(t.left, label) or _contains(t.right, label)


@lru_cache(maxsize=1 << 16)
def _left_combs(t: LieTerm, first: int) -> dict:
    """Left-normed expansion of ``t`` as ``{(first, ...): coeff}``.

    ``first`` must label a leaf of ``t``.  Uses
    ``[u,v] = -(-1)^{|u||v|} [v,u]`` and
    ``[u,[x,y]] = [[u,x],y] - (-1)^{|x||y|} [[u,y],x]``.
    """
    if t.is_leaf:
        return {(t.label,): 1}
    u, v = t.left, t.right
    s = 1
    if not _contains(u, first):
        u, v = v, u
        s = -sign(u.parity, v.parity)
    out: dict = {}
    if v.is_leaf:
        for comb, c in _left_combs(u, first).items():
            key = comb + (v.label,)
            out[key] = out.get(key, 0) + s * c
    else:
        x, y = v.left, v.right
        for tree, c in (
            (LieTerm.node(LieTerm.node(u, x), y), s),
            (LieTerm.node(LieTerm.node(u, y), x), -s * sign(x.parity, y.parity)),
        ):
            for comb, cc in _left_combs(tree, first).items():
                out[comb] = out.get(comb, 0) + c * cc
    return {k: c for k, c in out.items() if c}


def left_normalize(t: LieTerm, alphabet: Alphabet, first: Optional[int] = None) -> LiePoly:
    """Rewrite ``t`` as a combination of left-normed products starting with ``first``.

    ``first`` defaults to the smallest generator occurring in ``t``.
    """
    labels = t.labels()
    for i in labels:
        alphabet.check(i)
    if first is None:
        first = min(labels)
    elif first not in labels:
        raise DomainError(f"generator {first} does not occur in the term")
    return LiePoly(
        (bracket_terms(*(alphabet.leaf(i) for i in comb)), c)
        for comb, c in _left_combs(t, first).items()
    )


@dataclass(frozen=True)
class Coordinates:
    basis: SuperBasis
    coeffs: dict  # super basis ordinal -> nonzero int

    def __post_init__(self):
        n = len(self.basis)
        for i, c in self.coeffs.items():
            if not (0 <= i < n) or not c:
                raise DomainError(f"bad coordinate {i}: {c}")

    def __eq__(self, other):
        if not isinstance(other, Coordinates):
            return NotImplemented
        return self.basis.fingerprint == other.basis.fingerprint and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        return sorted(self.coeffs.items())

    def to_liepoly(self) -> LiePoly:
        return LiePoly((self.basis[i].term, c) for i, c in self.coeffs.items())

    def render(self) -> str:
        names = self.basis.alphabet.name
        return render_lincomb(self.items(), lambda i: render_term(self.basis[i].term, names))

    def to_json(self) -> dict:
        names = self.basis.alphabet.name
        return {
            "basis": self.basis.fingerprint,
            "coordinates": [
                {"index": i, "coeff": c, "term": render_term(self.basis[i].term, names)}
                for i, c in self.items()
            ],
        }


class Reducer:
    """Straightening engine bound to one Hall set.

    Results are cached per instance, keyed on the input tree.
    """

    def __init__(self, hall: HallSet):
        self.hall = hall
        self._atoms = [LieTerm.leaf(b.index, b.parity) for b in hall]
        self._odd = [bool(b.parity) for b in hall]
        self._cache: dict = {}

    def reduce_tree(self, t: LieTerm) -> dict:
        """``t`` has Hall ordinals as leaves; returns ``{(kind, ordinal): coeff}``
        with kind 0 for a basic commutator and 1 for an odd square."""
        hit = self._cache.get(t)
        if hit is not None:
            return hit
        if t.is_leaf:
            res = {(0, t.label): 1}
            self._cache[t] = res
            return res
        pair = self.hall.pair
        odd = self._odd
        out: dict = {}
        pending: dict = {}
        for comb, c in _left_combs(t, min(t.labels())).items():
            c1, c2 = comb[0], comb[1]
            if c1 < c2:
                new = (pair(c2, c1),) + comb[2:]
                if not (odd[c1] and odd[c2]):
                    c = -c
            elif not odd[c1]:
                continue
            elif len(comb) == 2:
                out[(1, c1)] = out.get((1, c1), 0) + c
                continue
            elif comb[2] == c1:
                continue
            else:
                new = (pair(pair(comb[2], c1), c1),) + comb[3:]
                c = -2 * c
            if len(new) == 1:
                out[(0, new[0])] = out.get((0, new[0]), 0) + c
            else:
                pending[new] = pending.get(new, 0) + c
        atoms = self._atoms
        for new, c in pending.items():
            if not c:
                continue
            sub = self.reduce_tree(bracket_terms(*(atoms[i] for i in new)))
            for key, cc in sub.items():
                out[key] = out.get(key, 0) + c * cc
        out = {k: v for k, v in out.items() if v}
        self._cache[t] = out
        return out


@lru_cache(maxsize=8)
def _shared_engine(alphabet: Alphabet, max_weight: int):
    basis = super_basis(alphabet, max_weight)
    return basis, Reducer(basis.hall)


def normal_form(p: LiePoly, alphabet: Alphabet, basis: SuperBasis, reducer: Reducer | None = None) -> Coordinates:
    """Coordinates of ``p`` in the Hall super basis ``basis``."""
    if basis.scheme != "hall" or basis.hall is None:
        raise DomainError("normal_form needs a Hall super basis")
    if basis.alphabet != alphabet:
        raise DomainError("basis built over a different alphabet")
    w = p.weight()
    if w > basis.max_weight:
        raise CapacityError(f"input weight {w} exceeds basis weight {basis.max_weight}")
    hall = basis.hall
    reducer = reducer or Reducer(hall)
    plain = {}
    square = {}
    for e in basis:
        (plain if e.kind == "plain" else square)[e.basic] = e.index
    acc: dict = {}
    for t, c in p.items():
        for i in t.labels():
            alphabet.check(i)
        for (kind, b), cc in reducer.reduce_tree(t).items():
            idx = (square if kind else plain)[b]
            acc[idx] = acc.get(idx, 0) + c * cc
    return Coordinates(basis, {i: c for i, c in acc.items() if c})


def is_homogeneous(p: LiePoly) -> bool:
    return len(p.parities()) <= 1


def poly_parity(p: LiePoly) -> int:
    ps = p.parities()
    if len(ps) > 1:
        raise DomainError("polynomial is not homogeneous in parity")
    return ps.pop() if ps else 0


@dataclass(frozen=True)
class AxiomCheck:
    identity: str
    args: tuple
    via_normal_form: bool
    via_expansion: bool

    @property
    def ok(self) -> bool:
        return self.via_normal_form and self.via_expansion


def axiom_instances(sample: list[LiePoly]):
    """Yield ``(name, args, combination)`` for every identity on the sample."""
    pars = [poly_parity(p) for p in sample]
    for i, (a, pa) in enumerate(zip(sample, pars)):
        if pa:
            yield "odd_cube", (i,), bracket(bracket(a, a), a)
        else:
            yield "even_square", (i,), bracket(a, a)
        for j, (b, pb) in enumerate(zip(sample, pars)):
            # [a,b] + (-1)^{|a||b|} [b,a] = 0
            yield "antisymmetry", (i, j), bracket(a, b) + sign(pa, pb) * bracket(b, a)
            for k, (c, pc) in enumerate(zip(sample, pars)):
                jac = (
                    sign(pa, pc) * bracket(a, bracket(b, c))
                    + sign(pb, pa) * bracket(b, bracket(c, a))
                    + sign(pc, pb) * bracket(c, bracket(a, b))
                )
                yield "jacobi", (i, j, k), jac


def check_axioms(sample: list[LiePoly], alphabet: Alphabet) -> list[AxiomCheck]:
    """Evaluate graded antisymmetry, graded Jacobi, even squares and odd cubes
    on ``sample`` both by reduction and by associative expansion."""
    from .assoc import expand

    for p in sample:
        poly_parity(p)
    instances = list(axiom_instances(sample))
    top = max((q.weight() for _, _, q in instances), default=1)
    basis, reducer = _shared_engine(alphabet, max(top, 1))
    report = []
    for name, args, q in instances:
        nf = normal_form(q, alphabet, basis, reducer)
        report.append(AxiomCheck(name, args, not nf, not expand(q, alphabet)))
    return report
