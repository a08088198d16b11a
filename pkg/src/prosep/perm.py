"""Finite groups as permutation groups: brute-force but exact machinery.

Conventions frozen here and shared by every other module:

* points are 0-based integers, permutations act on the left, and
  ``(p * q)(x) = p(q(x))``;
* the commutator is ``[x, y] = x^-1 y^-1 x y``;
* conjugation is ``x^g = g^-1 x g``.

Everything is immutable after construction; element sets are computed once
under a write-once contract, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import lcm

DEFAULT_ORDER_CAP = 10**6
DEFAULT_LATTICE_CAP = 200


class OrderCapExceeded(RuntimeError):
    """Element enumeration outgrew the configured cap."""


class LatticeCapExceeded(RuntimeError):
    """Subgroup lattice requested for a group above the configured cap."""


class DegreeMismatch(ValueError):
    pass


class NotASubgroupError(ValueError):
    pass


class NotNormalError(ValueError):
    pass


class Permutation:
    """A bijection of {0..degree-1}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not describe a permutation")
        self.images = images

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        """Skip validation; for products of already-valid permutations."""
        out = object.__new__(cls)
        out.images = images
        return out

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        touched = set()
        images = list(range(degree))
        for cycle in cycles:
            for point in cycle:
                if point in touched:
                    raise ValueError("cycles must be disjoint")
                touched.add(point)
            n = len(cycle)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % n]
        return cls(images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch("cannot compose permutations of different degree")
        oi = other.images
        si = self.images
        return Permutation._trusted(tuple(si[x] for x in oi))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.images)
        for x, y in enumerate(self.images):
            out[y] = x
        return Permutation._trusted(tuple(out))

    def __pow__(self, e: int) -> "Permutation":
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def order(self) -> int:
        n = 1
        p = self
        ident = Permutation.identity(self.degree)
        while p != ident:
            p = p * self
            n += 1
        return n

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def cycles(self):
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(%s)" % " ".join(map(str, c)) for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def mulclose(generators, cap=DEFAULT_ORDER_CAP, degree=None):
    """Deterministic BFS closure of a generator list under products."""
    if degree is None:
        if not generators:
            raise ValueError("need a degree for the empty generating set")
        degree = generators[0].degree
    ident = Permutation.identity(degree)
    seen = {ident}
    ordered = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    ordered.append(y)
                    new.append(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(
                            "group has more than %d elements" % cap
                        )
        frontier = new
    return ordered


class FiniteGroup:
    """A finite group generated by permutations of fixed degree.

    The trivial group is the degree-1 group with no generators.  The
    element list is ordered deterministically (BFS from the identity) so
    that every downstream enumeration is reproducible.
    """

    def __init__(self, generators, degree=None, name=None, order_cap=DEFAULT_ORDER_CAP):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                degree = 1
            else:
                degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise DegreeMismatch("generators must share one degree")
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_identity())
        self.name = name
        self.order_cap = order_cap
        self._elements = None
        self._element_set = None

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def elements(self):
        if self._elements is None:
            self._elements = tuple(mulclose(list(self.generators), self.order_cap, self.degree))
            self._element_set = frozenset(self._elements)
        return self._elements

    def element_set(self) -> frozenset:
        self.elements()
        return self._element_set

    @property
    def order(self) -> int:
        return len(self.elements())

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set()

    def __iter__(self):
        return iter(self.elements())

    def __repr__(self):
        label = self.name or "FiniteGroup"
        return "<%s deg=%d order=%d>" % (label, self.degree, self.order)

    def whole(self) -> "SubgroupHandle":
        return SubgroupHandle(self, self.generators)

    def trivial_subgroup(self) -> "SubgroupHandle":
        return SubgroupHandle(self, ())


def elements(group: FiniteGroup):
    return group.elements()


def order(group: FiniteGroup) -> int:
    return group.order


class SubgroupHandle:
    """A subgroup of a fixed parent group, with its full element set."""

    def __init__(self, parent: FiniteGroup, generators):
        self.parent = parent
        gens = tuple(g for g in generators if not g.is_identity())
        for g in gens:
            if g not in parent:
                raise NotASubgroupError("generator %r lies outside the parent" % (g,))
        self.generators = gens
        self.elements = frozenset(mulclose(list(gens), parent.order_cap, parent.degree))
        if parent.order % len(self.elements) != 0:
            raise AssertionError("Lagrange violation: impossible subgroup")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def sorted_elements(self):
        return sorted(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupHandle)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __le__(self, other: "SubgroupHandle") -> bool:
        return self.elements <= other.elements

    def __repr__(self):
        return "<Subgroup order=%d of %r>" % (self.order, self.parent)

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group on the same points."""
        g = FiniteGroup(self.generators, degree=self.parent.degree,
                        order_cap=self.parent.order_cap)
        g._elements = tuple(sorted(self.elements))
        g._element_set = self.elements
        return g

    def is_trivial(self) -> bool:
        return self.order == 1

    def conjugate(self, g: Permutation) -> "SubgroupHandle":
        return SubgroupHandle(self.parent, tuple(x.conjugate(g) for x in self.generators))


def subgroup(group: FiniteGroup, gens) -> SubgroupHandle:
    return SubgroupHandle(group, tuple(gens))


def normal_closure(group: FiniteGroup, seed) -> SubgroupHandle:
    """Smallest normal subgroup of ``group`` containing ``seed``."""
    gens = [g for g in seed if not g.is_identity()]
    current = SubgroupHandle(group, tuple(gens))
    while True:
        extra = []
        for x in sorted(current.elements):
            for g in group.generators:
                y = x.conjugate(g)
                if y not in current.elements:
                    extra.append(y)
        if not extra:
            return current
        current = SubgroupHandle(group, current.generators + tuple(extra))


def is_normal(group: FiniteGroup, handle: SubgroupHandle) -> bool:
    for g in group.generators:
        for x in handle.generators:
            if x.conjugate(g) not in handle.elements:
                return False
    return True


def commutator_subgroup(a: SubgroupHandle, b: SubgroupHandle) -> SubgroupHandle:
    """Subgroup generated by all commutators [x, y], x in A, y in B."""
    if a.parent is not b.parent:
        raise ValueError("subgroups must share a parent")
    comms = []
    for x in sorted(a.elements):
        for y in sorted(b.elements):
            c = x.commutator(y)
            if not c.is_identity():
                comms.append(c)
    return SubgroupHandle(a.parent, tuple(comms))


def commutator_closure(group: FiniteGroup, a: SubgroupHandle) -> SubgroupHandle:
    """[A, G] as the normal closure of generator commutators.

    Equals the elementwise ``commutator_subgroup(A, G.whole())`` (the test
    suite cross-checks this) but runs on generating sets only.
    """
    a_gens = minimal_generating_sequence(a.as_group())
    seeds = []
    for x in a_gens:
        for g in group.generators:
            c = x.commutator(g)
            if not c.is_identity():
                seeds.append(c)
    return normal_closure(group, seeds)


def lower_central_series(group: FiniteGroup):
    """gamma_1 = G, gamma_{n+1} = [gamma_n, G]; ends at the stable term.

    The stable term is witnessed: if it is non-trivial the list ends with a
    repeated entry, otherwise with the trivial subgroup.
    """
    series = [group.whole()]
    while True:
        nxt = commutator_closure(group, series[-1])
        series.append(nxt)
        if nxt.is_trivial() or nxt.elements == series[-2].elements:
            return series


def is_nilpotent(group: FiniteGroup) -> bool:
    return lower_central_series(group)[-1].is_trivial()


def nilpotency_class(group: FiniteGroup):
    series = lower_central_series(group)
    if not series[-1].is_trivial():
        return None
    return len(series) - 1


def center(group: FiniteGroup) -> SubgroupHandle:
    els = group.elements()
    central = [
        x for x in els
        if all((x * g) == (g * x) for g in group.generators)
    ]
    return SubgroupHandle(group, tuple(c for c in central if not c.is_identity()))


def prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def sylow(group: FiniteGroup, p: int) -> SubgroupHandle:
    """One Sylow p-subgroup, grown greedily from p-elements.

    When p does not divide the order this is the trivial subgroup (that is
    documented behaviour, not an error).
    """
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    n = group.order
    target = 1
    while n % p == 0:
        target *= p
        n //= p
    current = group.trivial_subgroup()
    if target == 1:
        return current
    els = sorted(group.elements())
    while current.order < target:
        for x in els:
            if x in current.elements:
                continue
            o = x.order()
            while o % p == 0:
                o //= p
            y = x ** o  # the p-part of x
            if y.is_identity() or y in current.elements:
                continue
            candidate_gens = current.generators + (y,)
            candidate = frozenset(mulclose(list(candidate_gens), group.order_cap, group.degree))
            if len(candidate) % p == 0 and target % len(candidate) == 0:
                current = SubgroupHandle(group, candidate_gens)
                break
        else:
            raise AssertionError("failed to grow a Sylow %d-subgroup" % p)
    return current


@dataclass
class Quotient:
    """G/N realized on the left cosets of N, with its projection map."""

    group: FiniteGroup
    kernel: SubgroupHandle
    _coset_index: dict
    _reps: list

    def project(self, g: Permutation) -> Permutation:
        reps = self._reps
        idx = self._coset_index
        return Permutation(idx[(g * r)] for r in reps)

    def project_subgroup(self, handle: SubgroupHandle) -> SubgroupHandle:
        return SubgroupHandle(self.group, tuple(self.project(g) for g in handle.generators))


def quotient(group: FiniteGroup, n: SubgroupHandle) -> Quotient:
    if n.parent is not group:
        raise NotASubgroupError("kernel must be a subgroup handle of the same group")
    if not is_normal(group, n):
        raise NotNormalError("quotient needs a normal subgroup")
    reps = []
    coset_index = {}
    for x in group.elements():
        if x in coset_index:
            continue
        r = x
        k = len(reps)
        reps.append(r)
        for h in n.elements:
            coset_index[x * h] = k
    proj_gens = []
    quot = Quotient(None, n, coset_index, reps)
    for g in group.generators:
        proj_gens.append(quot.project(g))
    quot.group = FiniteGroup(proj_gens, degree=len(reps),
                             name=None, order_cap=group.order_cap)
    return quot


def all_subgroups(group: FiniteGroup, cap=DEFAULT_LATTICE_CAP):
    """The full subgroup lattice, as join-closure of the cyclic subgroups.

    Returned sorted by (order, element list) so enumeration order is a
    deterministic function of the group.  Memoized on the group object.
    """
    if group.order > cap:
        raise LatticeCapExceeded(
            "subgroup lattice capped at order %d (group has order %d)"
            % (cap, group.order)
        )
    cached = getattr(group, "_lattice_cache", None)
    if cached is not None:
        return list(cached)
    seen = {frozenset([group.identity])}
    for x in group.elements():
        cyc = frozenset(mulclose([x], group.order_cap, group.degree))
        seen.add(cyc)
    stable = False
    while not stable:
        stable = True
        pairs = list(combinations(sorted(seen, key=_subgroup_sort_key), 2))
        for a, b in pairs:
            if a <= b or b <= a:
                continue
            join = frozenset(mulclose(sorted(a | b), group.order_cap, group.degree))
            if join not in seen:
                seen.add(join)
                stable = False
    out = []
    for els in sorted(seen, key=_subgroup_sort_key):
        handle = SubgroupHandle(group, tuple(sorted(els)))
        out.append(handle)
    group._lattice_cache = tuple(out)
    return out


def _subgroup_sort_key(els):
    return (len(els), sorted(p.images for p in els))


def minimal_generating_sequence(group: FiniteGroup):
    """A short generating sequence, greedy by descending element order."""
    target = group.element_set()
    if len(target) == 1:
        return []
    gens = []
    closure = {group.identity}
    for x in sorted(target, key=lambda p: (-p.order(), p.images)):
        if x in closure:
            continue
        gens.append(x)
        closure = set(mulclose(gens, group.order_cap, group.degree))
        if len(closure) == len(target):
            break
    return gens


def conjugacy_classes_of_subgroups(group: FiniteGroup, cap=DEFAULT_LATTICE_CAP):
    """Representatives of the subgroup lattice up to conjugacy."""
    lattice = all_subgroups(group, cap)
    seen = set()
    reps = []
    for handle in lattice:
        if handle.elements in seen:
            continue
        reps.append(handle)
        for g in group.elements():
            seen.add(frozenset(x.conjugate(g) for x in handle.elements))
    return reps


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """A x B acting on the disjoint union of the two domains."""
    da, db = a.degree, b.degree
    gens = []
    for g in a.generators:
        gens.append(Permutation(tuple(g.images) + tuple(range(da, da + db))))
    for g in b.generators:
        gens.append(Permutation(tuple(range(da)) + tuple(x + da for x in g.images)))
    return FiniteGroup(gens, degree=da + db)


class AutomorphismError(ValueError):
    pass


def _word_chains(group: FiniteGroup):
    """For each element, a factorization chain back to the identity."""
    parent = {group.identity: None}
    frontier = [group.identity]
    while frontier:
        new = []
        for x in frontier:
            for i, g in enumerate(group.generators):
                y = x * g
                if y not in parent:
                    parent[y] = (x, i)
                    new.append(y)
        frontier = new
    return parent


def extend_generator_map(group: FiniteGroup, images) -> dict:
    """Extend generator images to the whole group, verifying it is a hom.

    ``images`` maps each generator of ``group`` to a permutation.  Raises
    AutomorphismError if the extension is inconsistent.
    """
    chains = _word_chains(group)
    if images:
        target_identity = Permutation.identity(next(iter(images.values())).degree)
    else:
        target_identity = group.identity
    full = {}

    def image_of(x):
        if x in full:
            return full[x]
        link = chains[x]
        if link is None:
            val = target_identity
        else:
            prev, i = link
            val = image_of(prev) * images[group.generators[i]]
        full[x] = val
        return val

    for x in group.elements():
        image_of(x)
    # checking products with the generators on the left suffices: the
    # chain construction already satisfies full(x * g) = full(x) * full(g),
    # and multiplicativity propagates along factorization chains
    for g in group.generators:
        fg = full[g]
        for x in group.elements():
            if full[g * x] != fg * full[x]:
                raise AutomorphismError("generator images do not define a homomorphism")
    return full


def automorphism_from_images(group: FiniteGroup, images) -> dict:
    """A verified automorphism of ``group`` from generator images."""
    for g in images.values():
        if g not in group:
            raise AutomorphismError("image lies outside the group")
    full = extend_generator_map(group, images)
    if len(set(full.values())) != group.order:
        raise AutomorphismError("generator images do not define a bijection")
    return full


def semidirect_product(p_group: FiniteGroup, q_group: FiniteGroup, theta):
    """P x| Q for theta mapping each Q-generator to an automorphism of P.

    ``theta[q]`` is either a full element map (dict on all of P) or a map of
    P-generators to P-elements; it is extended and verified either way.  The
    action of Q on P must respect Q's relations: the induced map from Q into
    Aut(P) is checked to be multiplicative on all of Q.
    """
    autos = {}
    for q_gen in q_group.generators:
        spec = theta.get(q_gen)
        if spec is None:
            raise AutomorphismError("theta must cover every generator of Q")
        if set(spec) == set(p_group.elements()):
            full = dict(spec)
            if len(set(full.values())) != p_group.order:
                raise AutomorphismError("theta image is not a bijection")
            for x in p_group.elements():
                for y in p_group.elements():
                    if full[x * y] != full[x] * full[y]:
                        raise AutomorphismError("theta image is not a homomorphism")
        else:
            full = automorphism_from_images(p_group, spec)
        autos[q_gen] = full

    # extend q -> auto(q) along factorization chains, then verify it is a hom
    chains = _word_chains(q_group)
    p_elements = p_group.elements()
    p_index = {x: i for i, x in enumerate(p_elements)}

    def as_vector(full_map):
        return tuple(p_index[full_map[x]] for x in p_elements)

    identity_vec = tuple(range(len(p_elements)))
    vec_of = {}

    def vector_for(q):
        if q in vec_of:
            return vec_of[q]
        link = chains[q]
        if link is None:
            vec = identity_vec
        else:
            prev, i = link
            gen_vec = as_vector(autos[q_group.generators[i]])
            prev_vec = vector_for(prev)
            # theta(prev * gen) = theta(prev) o theta(gen)
            vec = tuple(prev_vec[j] for j in gen_vec)
        vec_of[q] = vec
        return vec

    for q in q_group.elements():
        vector_for(q)
    for q1 in q_group.elements():
        v1 = vec_of[q1]
        for q2 in q_group.elements():
            composed = tuple(v1[j] for j in vec_of[q2])
            if composed != vec_of[q1 * q2]:
                raise AutomorphismError("theta does not respect the relations of Q")

    q_elements = q_group.elements()
    q_index = {x: i for i, x in enumerate(q_elements)}
    np = len(p_elements)

    def point(pi, qi):
        return qi * np + pi

    def act(a_pi, b_qi):
        """Left multiplication by (p_a, q_b) as a permutation of pairs."""
        images = [0] * (np * len(q_elements))
        b_vec = vec_of[q_elements[b_qi]]
        for qi, q in enumerate(q_elements):
            for pi in range(np):
                theta_p = p_elements[b_vec[pi]]
                new_p = p_index[p_elements[a_pi] * theta_p]
                new_q = q_index[q_elements[b_qi] * q]
                images[point(pi, qi)] = point(new_p, new_q)
        return Permutation(images)

    gens = []
    embed_p = {}
    embed_q = {}
    ident_p = p_index[p_group.identity]
    ident_q = q_index[q_group.identity]
    for g in p_group.generators:
        perm = act(p_index[g], ident_q)
        gens.append(perm)
        embed_p[g] = perm
    for g in q_group.generators:
        perm = act(ident_p, q_index[g])
        gens.append(perm)
        embed_q[g] = perm
    group = FiniteGroup(gens, degree=np * len(q_elements))
    return SemidirectProduct(group, embed_p, embed_q)


@dataclass
class SemidirectProduct:
    group: FiniteGroup
    embed_p: dict
    embed_q: dict

    def p_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(self.group, tuple(self.embed_p.values()))

    def q_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(self.group, tuple(self.embed_q.values()))


# ---------------------------------------------------------------------------
# standard constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    if n == 1:
        return FiniteGroup((), degree=1, name="Z/1")
    g = Permutation.from_cycles(n, [tuple(range(n))])
    return FiniteGroup((g,), name="Z/%d" % n)


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return FiniteGroup((), degree=1, name="S1")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return FiniteGroup(gens, name="S%d" % n)


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return FiniteGroup((), degree=1, name="A%d" % n)
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        if n % 2 == 1:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n))]))
    return FiniteGroup(gens, name="A%d" % n)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on the n-gon."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    flip = Permutation([(-x) % n for x in range(n)])
    return FiniteGroup((rot, flip), name="D%d" % n)


def quaternion8() -> FiniteGroup:
    """Q8 in its degree-8 left regular representation.

    Elements are indexed x^a y^b with a mod 4, b mod 2, under the relations
    y^2 = x^2 and y^-1 x y = x^-1.
    """

    def idx(a, b):
        return (a % 4) * 2 + (b % 2)

    def mul(e1, e2):
        a, b = e1
        c, d = e2
        if b == 0:
            return (a + c) % 4, d % 2
        # y x^c = x^{-c} y, and y^2 = x^2
        a2 = (a + 3 * c) % 4
        b2 = b + d
        if b2 == 2:
            return (a2 + 2) % 4, 0
        return a2, b2 % 2

    def left_mult(e):
        images = [0] * 8
        for a in range(4):
            for b in range(2):
                images[idx(a, b)] = idx(*mul(e, (a, b)))
        return Permutation(images)

    x = left_mult((1, 0))
    y = left_mult((0, 1))
    return FiniteGroup((x, y), name="Q8")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if not is_prime(p) or k < 1:
        raise ValueError("need a prime p and k >= 1")
    group = cyclic(p)
    for _ in range(k - 1):
        group = direct_product(group, cyclic(p))
    group.name = "(Z/%d)^%d" % (p, k)
    return group


def is_cyclic(group: FiniteGroup) -> bool:
    n = group.order
    return any(x.order() == n for x in group.elements())


def exponent_of(handle: SubgroupHandle) -> int:
    e = 1
    for x in handle.elements:
        e = lcm(e, x.order())
    return e
