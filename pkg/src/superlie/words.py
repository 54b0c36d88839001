"""Lyndon and regular words, standard factorization, and their bracketings.

Words are tuples of generator indices; comparing two tuples compares the
words lexicographically in the alphabet order.
"""
from __future__ import annotations

import enum
import itertools
from typing import Sequence

from .core import Alphabet, DomainError, LieTerm


class WordKind(str, enum.Enum):
    LYNDON = "lyndon"
    REGULAR = "regular"


Word = tuple[int, ...]


def _rotations(w: Word):
    for i in range(1, len(w)):
        yield w[i:] + w[:i]


def is_lyndon(w: Sequence[int]) -> bool:
    """Strictly smaller than each proper rotation."""
    w = tuple(w)
    if not w:
        raise DomainError("empty word")
    return all(w < r for r in _rotations(w))


def is_regular(w: Sequence[int]) -> bool:
    """Strictly greater than each proper rotation."""
    w = tuple(w)
    if not w:
        raise DomainError("empty word")
    return all(w > r for r in _rotations(w))


_PREDICATE = {WordKind.LYNDON: is_lyndon, WordKind.REGULAR: is_regular}


def is_kind(w: Sequence[int], kind: WordKind | str) -> bool:
    return _PREDICATE[WordKind(kind)](w)


def enum_words(alphabet: Alphabet, kind: WordKind | str, max_len: int) -> list[Word]:
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    pred = _PREDICATE[WordKind(kind)]
    out = []
    letters = range(len(alphabet))
    for n in range(1, max_len + 1):
        # product() yields in lexicographic order already
        out.extend(w for w in itertools.product(letters, repeat=n) if pred(w))
    return out


def standard_factorization(w: Sequence[int], kind: WordKind | str) -> tuple[Word, Word]:
    """Split ``w = uv`` with ``v`` the longest proper suffix of the same kind."""
    w = tuple(w)
    pred = _PREDICATE[WordKind(kind)]
    if len(w) < 2:
        raise DomainError("standard factorization needs length >= 2")
    if not pred(w):
        raise DomainError(f"{w} is not a {WordKind(kind).value} word")
    for i in range(1, len(w)):
        if pred(w[i:]):
            u, v = w[:i], w[i:]
            assert pred(u), (w, u, v)
            return u, v
    raise AssertionError("a single letter is always of either kind")


def _bracketing(w: Word, kind: WordKind, alphabet: Alphabet) -> LieTerm:
    if len(w) == 1:
        return alphabet.leaf(w[0])
    u, v = standard_factorization(w, kind)
    return LieTerm.node(_bracketing(u, kind, alphabet), _bracketing(v, kind, alphabet))


def theta(w: Sequence[int], alphabet: Alphabet) -> LieTerm:
    """Lyndon bracketing."""
    w = tuple(w)
    if not is_lyndon(w):
        raise DomainError(f"{w} is not a Lyndon word")
    return _bracketing(w, WordKind.LYNDON, alphabet)


def pi(w: Sequence[int], alphabet: Alphabet) -> LieTerm:
    """Shirshov bracketing of a regular word."""
    w = tuple(w)
    if not is_regular(w):
        raise DomainError(f"{w} is not a regular word")
    return _bracketing(w, WordKind.REGULAR, alphabet)


def _with_odd_squares(terms: list[LieTerm], max_weight: int) -> list[LieTerm]:
    out = list(terms)
    out += [LieTerm.node(t, t) for t in terms if t.parity and 2 * t.weight <= max_weight]
    return sorted(out)


def shirshov_super_basis(alphabet: Alphabet, max_weight: int) -> list[LieTerm]:
    words = enum_words(alphabet, WordKind.REGULAR, max_weight)
    return _with_odd_squares([pi(w, alphabet) for w in words], max_weight)


def lyndon_super_basis(alphabet: Alphabet, max_weight: int) -> list[LieTerm]:
    words = enum_words(alphabet, WordKind.LYNDON, max_weight)
    return _with_odd_squares([theta(w, alphabet) for w in words], max_weight)
