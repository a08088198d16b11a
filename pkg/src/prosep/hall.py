"""Hall bases of basic commutators and Witt ranks of free Lie rings.

A basic commutator is either a generator (a leaf) or a bracket [u, v] of
basic commutators with u > v in the basis order and, when u = [x, y],
additionally v >= y.  The weight-n entries form a basis of the degree-n
layer of the free Lie ring, so their count must match the necklace count
``witt_rank(r, n)`` -- the two are computed independently and cross-checked
in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def witt_rank(r: int, n: int) -> int:
    """Rank of the degree-n layer of the free Lie ring on r generators."""
    if r < 1 or n < 1:
        raise ValueError("witt_rank needs r >= 1 and n >= 1")
    total = sum(_mobius(d) * r ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


@dataclass(frozen=True)
class Commutator:
    """A basic commutator tree.

    ``left``/``right`` are indices into the enclosing basis list (None for
    leaves); ``leaf`` is the generator number for weight-1 entries.
    """

    weight: int
    leaf: int | None = None
    left: int | None = None
    right: int | None = None

    def is_leaf(self) -> bool:
        return self.leaf is not None


class HallBasis:
    """Basic commutators of weight <= class_bound on rank generators.

    Entries are sorted by weight, ties broken by the (left, right) index
    pair; this particular order is frozen so that downstream exponent
    vectors are reproducible.
    """

    def __init__(self, rank: int, class_bound: int, generator_names=None):
        if rank < 1 or class_bound < 1:
            raise ValueError("rank and class bound must be >= 1")
        self.rank = rank
        self.class_bound = class_bound
        if generator_names is None:
            generator_names = default_generator_names(rank)
        if len(generator_names) != rank:
            raise ValueError("need one name per generator")
        self.generator_names = list(generator_names)
        self.commutators: list[Commutator] = [
            Commutator(weight=1, leaf=i) for i in range(rank)
        ]
        self._build()

    def _build(self):
        for w in range(2, self.class_bound + 1):
            fresh = []
            for u_idx, u in enumerate(self.commutators):
                for v_idx, v in enumerate(self.commutators):
                    if u.weight + v.weight != w:
                        continue
                    if u_idx <= v_idx:
                        continue
                    if u.left is not None and v_idx < u.right:
                        continue
                    fresh.append((u_idx, v_idx))
            fresh.sort()
            for u_idx, v_idx in fresh:
                self.commutators.append(
                    Commutator(weight=w, left=u_idx, right=v_idx)
                )

    def __len__(self):
        return len(self.commutators)

    def weight_counts(self):
        counts = [0] * (self.class_bound + 1)
        for c in self.commutators:
            counts[c.weight] += 1
        return counts[1:]

    def weight_of(self, index: int) -> int:
        return self.commutators[index].weight

    def indices_of_weight(self, w: int):
        return [i for i, c in enumerate(self.commutators) if c.weight == w]

    def name(self, index: int) -> str:
        c = self.commutators[index]
        if c.is_leaf():
            return self.generator_names[c.leaf]
        return "[%s,%s]" % (self.name(c.left), self.name(c.right))

    @lru_cache(maxsize=None)
    def free_word(self, index: int) -> tuple:
        """The entry as a free-group word: tuple of (generator, +-1) letters."""
        c = self.commutators[index]
        if c.is_leaf():
            return ((c.leaf, 1),)
        u = self.free_word(c.left)
        v = self.free_word(c.right)
        inv_u = tuple((g, -s) for g, s in reversed(u))
        inv_v = tuple((g, -s) for g, s in reversed(v))
        return inv_u + inv_v + u + v


def default_generator_names(rank: int):
    if rank <= 8:
        return list("abcdefgh"[:rank])
    return ["x%d" % (i + 1) for i in range(rank)]
