"""Polycyclic presentations with a collection-based normal form.

A presentation has generators g_1 < ... < g_n with relative orders o_i
(an int >= 2, or None for infinite), power relations g_i^{o_i} = word and
conjugation relations g_j^{g_i} = word for i < j.  Two structural rules are
enforced on construction:

* power words live in the tail subgroup <g_{i+1}..g_n>;
* conjugation words live in <g_j..g_n> and start with an invertible
  coefficient on g_j, so each tail <g_j..g_n> is normal in the whole group.

Elements are exponent vectors (tuples); collection works by structural
recursion on the tails, so it terminates on any input and a consistent
presentation makes the collected form the unique normal form.  Consistency
is checked by evaluating the standard overlap identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

DEFAULT_COLLECTION_CAP = 10**6


class CollectionBlowup(RuntimeError):
    """Collection exceeded its operation budget.

    Usually a symptom of an inconsistent presentation or of a computation
    far outside this library's intended scale.
    """


class InconsistentPresentation(ValueError):
    pass


class MembershipError(ValueError):
    pass


def xgcd(a: int, b: int):
    """(g, x, y) with x*a + y*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class PcPresentation:
    """A consistent-by-contract polycyclic presentation.

    ``orders[i]`` is the relative order o_i (None = infinite);
    ``powers[i]`` the vector of g_i^{o_i} for finite o_i; ``conjs[(i,j,s)]``
    the vector of g_j^{g_i^s} for i < j, s in {1,-1}.  Missing conjugation
    entries mean the generators commute.
    """

    def __init__(self, orders, powers=None, conjs=None, names=None,
                 collection_cap=DEFAULT_COLLECTION_CAP):
        self.orders = list(orders)
        self.n = len(self.orders)
        for o in self.orders:
            if o is not None and o < 2:
                raise ValueError("relative orders must be >= 2 or None")
        if names is None:
            names = ["g%d" % (i + 1) for i in range(self.n)]
        if len(names) != self.n:
            raise ValueError("need one name per generator")
        self.names = list(names)
        self.powers = {}
        self.conjs = {}
        self.collection_cap = collection_cap
        self._ops = 0
        self._depth = 0
        self._conj_cache = {}
        for i, vec in (powers or {}).items():
            self.set_power(i, vec)
        for key, vec in (conjs or {}).items():
            if len(key) == 2:
                key = (key[0], key[1], 1)
            self.set_conjugation(key[0], key[1], vec, sign=key[2])

    # -- construction -----------------------------------------------------

    def set_power(self, i, vec):
        vec = self._as_vector(vec)
        if self.orders[i] is None:
            raise ValueError("power relation on an infinite generator")
        if any(vec[k] for k in range(i + 1)):
            raise ValueError(
                "power word for %s must lie in the deeper tail" % self.names[i]
            )
        self.powers[i] = vec

    def set_conjugation(self, i, j, vec, sign=1):
        vec = self._as_vector(vec)
        if not (0 <= i < j < self.n):
            raise ValueError("conjugation relations need i < j")
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if any(vec[k] for k in range(j)):
            raise ValueError(
                "conjugate of %s must lie in <%s..>" % (self.names[j], self.names[j])
            )
        lead = vec[j]
        o = self.orders[j]
        if o is None:
            if lead not in (1, -1):
                raise ValueError("conjugation must act invertibly on an infinite layer")
        else:
            if gcd(lead, o) != 1:
                raise ValueError("conjugation must act invertibly on the layer")
        self.conjs[(i, j, sign)] = vec
        self._conj_cache.clear()

    def _as_vector(self, vec):
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        return vec

    # -- bookkeeping -------------------------------------------------------

    @property
    def identity(self):
        return (0,) * self.n

    def generator_vector(self, i, e=1):
        if self.orders[i] is not None:
            e %= self.orders[i]
        return tuple(e if k == i else 0 for k in range(self.n))

    def hirsch_length(self) -> int:
        return sum(1 for o in self.orders if o is None)

    def group_order(self):
        """The group order, or None when infinite."""
        total = 1
        for o in self.orders:
            if o is None:
                return None
            total *= o
        return total

    def is_finite(self) -> bool:
        return self.group_order() is not None

    def index_of(self, name: str) -> int:
        return self.names.index(name)

    def _tick(self):
        self._ops += 1
        if self._ops > self.collection_cap:
            raise CollectionBlowup(
                "collection exceeded %d operations" % self.collection_cap
            )

    def _enter(self):
        if self._depth == 0:
            self._ops = 0
        self._depth += 1

    def _exit(self):
        self._depth -= 1

    # -- collection --------------------------------------------------------

    def collect(self, word):
        """Normal form of a word given as (generator index, exponent) pairs."""
        self._enter()
        try:
            out = self.identity
            for i, e in word:
                out = self._mult_syl(out, i, e)
            return out
        finally:
            self._exit()

    def mul(self, u, v):
        self._enter()
        try:
            return self._mul(u, v)
        finally:
            self._exit()

    def _mul(self, u, v):
        out = u
        for j in range(self.n):
            if v[j]:
                out = self._mult_syl(out, j, v[j])
        return out

    def inv(self, u):
        self._enter()
        try:
            return self._inv(u)
        finally:
            self._exit()

    def _inv(self, u):
        out = self.identity
        for j in range(self.n - 1, -1, -1):
            if u[j]:
                out = self._mult_syl(out, j, -u[j])
        return out

    def pow(self, u, e: int):
        self._enter()
        try:
            return self._pow(u, e)
        finally:
            self._exit()

    def _pow(self, u, e):
        if e < 0:
            return self._pow(self._inv(u), -e)
        result = self.identity
        base = u
        while e:
            if e & 1:
                result = self._mul(result, base)
            e >>= 1
            if e:
                base = self._mul(base, base)
        return result

    def conjugate(self, x, g):
        """x^g = g^-1 x g."""
        self._enter()
        try:
            gi = self._inv(g)
            return self._mul(self._mul(gi, x), g)
        finally:
            self._exit()

    def commutator(self, x, y):
        """[x, y] = x^-1 y^-1 x y."""
        self._enter()
        try:
            out = self._mul(self._inv(x), self._inv(y))
            return self._mul(self._mul(out, x), y)
        finally:
            self._exit()

    def _mult_syl(self, u, i, e):
        """Normal form of u * g_i^e."""
        self._tick()
        if e == 0:
            return u
        o = self.orders[i]
        tail = self._tail_of(u, i)
        if tail is not None:
            tail = self._conj_vec(tail, i, e)
        enew = u[i] + e
        extra = None
        if o is not None:
            q, enew = divmod(enew, o)
            if q:
                w = self.powers.get(i)
                if w is None:
                    extra = None  # g_i^{o_i} = 1
                else:
                    extra = self._pow(w, q)
        out = list(u[: i + 1])
        out[i] = enew
        out.extend([0] * (self.n - i - 1))
        rest = None
        if extra is not None and tail is not None:
            rest = self._mul(extra, tail)
        elif extra is not None:
            rest = extra
        elif tail is not None:
            rest = tail
        if rest is not None:
            for k in range(i + 1, self.n):
                out[k] = rest[k]
        return tuple(out)

    def _tail_of(self, u, i):
        """The part of u on generators past i, or None if trivial."""
        if all(u[k] == 0 for k in range(i + 1, self.n)):
            return None
        return (0,) * (i + 1) + u[i + 1:]

    def _conj_vec(self, v, i, e):
        """v^{g_i^e} for v supported past i."""
        out = self.identity
        for j in range(i + 1, self.n):
            if v[j]:
                img = self._conj_gen(i, j, e)
                out = self._mul(out, self._pow(img, v[j]))
        return out

    def _conj_gen(self, i, j, e):
        """g_j^{g_i^e}, memoized."""
        key = (i, j, e)
        cached = self._conj_cache.get(key)
        if cached is not None:
            return cached
        self._tick()
        if e == 0:
            out = self.generator_vector(j)
        elif e == 1 or e == -1:
            rel = self.conjs.get((i, j, e))
            if rel is not None:
                out = rel
            elif e == 1:
                out = self.generator_vector(j)
            else:
                out = self._conj_gen_inverse(i, j)
        else:
            half = e // 2 if e > 0 else -((-e) // 2)
            rest = e - half
            v = self._conj_gen(i, j, half)
            out = self._conj_vec(v, i, rest)
        self._conj_cache[key] = out
        return out

    def _conj_gen_inverse(self, i, j):
        """g_j^{g_i^{-1}} when no explicit relation is stored.

        Only derivable for finite o_i: g_i^{-1} = g_i^{o_i-1} w_i^{-1} with
        w_i = g_i^{o_i}, so conjugate by g_i^{o_i-1} and then by w_i^{-1}.
        """
        o = self.orders[i]
        if o is None:
            # no stored inverse relation: the action is trivial by default
            if (i, j, 1) in self.conjs:
                raise InconsistentPresentation(
                    "missing inverse conjugation relation for %s^%s"
                    % (self.names[j], self.names[i])
                )
            return self.generator_vector(j)
        v = self._conj_gen(i, j, o - 1)
        w = self.powers.get(i)
        if w is None:
            return v
        wi = self._inv(w)
        return self._mul(self._mul(w, v), wi)


def word_from_vector(p: PcPresentation, vec):
    return [(i, e) for i, e in enumerate(vec) if e]


# -- consistency ------------------------------------------------------------


@dataclass
class OverlapFailure:
    description: str
    left: tuple
    right: tuple

    def __str__(self):
        return "%s: %r != %r" % (self.description, self.left, self.right)


def consistency_check(p: PcPresentation, report_all=False):
    """Evaluate the standard overlap identities by collection.

    Returns (True, []) or (False, [failures...]); with report_all=False the
    search stops at the first failure.
    """
    failures = []

    def check(desc, left, right):
        if left != right:
            failures.append(OverlapFailure(desc, left, right))
        return bool(failures) and not report_all

    g = p.generator_vector
    for k in range(p.n):
        gk = g(k)
        for j in range(k):
            gj = g(j)
            for i in range(j):
                gi = g(i)
                left = p.mul(p.mul(gk, gj), gi)
                right = p.mul(gk, p.mul(gj, gi))
                if check("(%s %s) %s overlap" % (p.names[k], p.names[j], p.names[i]),
                         left, right):
                    return False, failures
    for j in range(p.n):
        oj = p.orders[j]
        gj = g(j)
        if oj is not None:
            for i in range(j):
                gi = g(i)
                left = p.mul(p.pow(gj, oj), gi)
                right = p.mul(p.pow(gj, oj - 1), p.mul(gj, gi))
                if check("power overlap %s^%d %s" % (p.names[j], oj, p.names[i]),
                         left, right):
                    return False, failures
            for i in range(j):
                gi = g(i)
                oi = p.orders[i]
                if oi is None:
                    continue
                left = p.mul(gj, p.pow(gi, oi))
                right = p.mul(p.mul(gj, gi), p.pow(gi, oi - 1))
                if check("power overlap %s %s^%d" % (p.names[j], p.names[i], oi),
                         left, right):
                    return False, failures
            left = p.mul(gj, p.pow(gj, oj))
            right = p.mul(p.pow(gj, oj), gj)
            if check("power overlap %s %s^%d" % (p.names[j], p.names[j], oj),
                     left, right):
                return False, failures
        for i in range(j):
            if p.orders[i] is None:
                gi = g(i)
                gi_inv = p.inv(gi)
                left = p.mul(p.mul(gj, gi_inv), gi)
                if check("inverse overlap %s %s^-1 %s" % (p.names[j], p.names[i], p.names[i]),
                         left, gj):
                    return False, failures
                left = p.mul(p.mul(gj, gi), gi_inv)
                if check("inverse overlap %s %s %s^-1" % (p.names[j], p.names[i], p.names[i]),
                         left, gj):
                    return False, failures
    return not failures, failures


# -- elements ----------------------------------------------------------------


class PcElement:
    """A group element in normal form: an exponent vector over a presentation."""

    __slots__ = ("presentation", "vector")

    def __init__(self, presentation: PcPresentation, vector):
        self.presentation = presentation
        self.vector = presentation._as_vector(vector)
        for i, e in enumerate(self.vector):
            o = presentation.orders[i]
            if o is not None and not (0 <= e < o):
                raise ValueError("exponent %d out of range at position %d" % (e, i))

    def __mul__(self, other: "PcElement") -> "PcElement":
        self._same(other)
        return PcElement(self.presentation, self.presentation.mul(self.vector, other.vector))

    def inverse(self) -> "PcElement":
        return PcElement(self.presentation, self.presentation.inv(self.vector))

    def __pow__(self, e: int) -> "PcElement":
        return PcElement(self.presentation, self.presentation.pow(self.vector, e))

    def conjugate(self, g: "PcElement") -> "PcElement":
        self._same(g)
        return PcElement(self.presentation, self.presentation.conjugate(self.vector, g.vector))

    def commutator(self, other: "PcElement") -> "PcElement":
        self._same(other)
        return PcElement(self.presentation, self.presentation.commutator(self.vector, other.vector))

    def is_identity(self) -> bool:
        return all(e == 0 for e in self.vector)

    def _same(self, other):
        if self.presentation is not other.presentation:
            raise ValueError("elements live over different presentations")

    def __eq__(self, other):
        return (
            isinstance(other, PcElement)
            and self.presentation is other.presentation
            and self.vector == other.vector
        )

    def __hash__(self):
        return hash((id(self.presentation), self.vector))

    def __repr__(self):
        p = self.presentation
        parts = []
        for i, e in enumerate(self.vector):
            if e == 1:
                parts.append(p.names[i])
            elif e:
                parts.append("%s^%d" % (p.names[i], e))
        return "*".join(parts) if parts else "1"
