"""Built-in example groups and presentations.

Finite permutation groups (the verification corpus for the nilpotency
equivalence), pc presentations of the standard infinite examples, and
finitely presented groups for the fingerprint machinery.  Every entry
carries a short mathematical description; ``catalog(name)`` builds the
object fresh each call, so entries stay immutable from the caller's side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pcgroup import PcPresentation
from .perm import (
    FiniteGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    quaternion8,
    semidirect_product,
    symmetric,
)
from .presentations import FpPresentation
from .words import parse_word


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "perm" | "pc" | "fp"
    description: str
    builder: object

    def build(self):
        return self.builder()


def _semidirect(p_order, q_order, power):
    """Z/p x| Z/q with the generator acting as x -> x^power."""

    def build():
        p = cyclic(p_order)
        q = cyclic(q_order)
        g = p.generators[0]
        sd = semidirect_product(p, q, {q.generators[0]: {g: g**power}})
        sd.group.name = "Z/%d:Z/%d" % (p_order, q_order)
        return sd.group

    return build


def _z3z5_z2(invert_3, invert_5):
    def build():
        p = direct_product(cyclic(3), cyclic(5))
        q = cyclic(2)
        g3, g5 = p.generators
        images = {
            g3: g3 ** (-1 if invert_3 else 1),
            g5: g5 ** (-1 if invert_5 else 1),
        }
        sd = semidirect_product(p, q, {q.generators[0]: images})
        return sd.group

    return build


def _named(builder, name):
    def build():
        g = builder()
        g.name = name
        return g

    return build


def heisenberg_pc() -> PcPresentation:
    """Integer Heisenberg group: [a, b] = c central."""
    return PcPresentation(
        orders=[None, None, None],
        conjs={(0, 1, 1): (0, 1, -1), (0, 1, -1): (0, 1, 1)},
        names=["a", "b", "c"],
    )


def klein_bottle_pc() -> PcPresentation:
    """Klein bottle group, pc order b then a, with a^b = a^-1."""
    return PcPresentation(
        orders=[None, None],
        conjs={(0, 1, 1): (0, -1), (0, 1, -1): (0, -1)},
        names=["b", "a"],
    )


def z_lattice_pc(rank: int) -> PcPresentation:
    return PcPresentation(
        orders=[None] * rank,
        names=["x%d" % (i + 1) for i in range(rank)] if rank > 3
        else list("xyz"[:rank]),
    )


def heisenberg_mod_center_squared_pc() -> PcPresentation:
    """Heisenberg with c^2 = 1: class 2 with a torsion layer at the centre."""
    return PcPresentation(
        orders=[None, None, 2],
        powers={2: (0, 0, 0)},
        conjs={(0, 1, 1): (0, 1, 1), (0, 1, -1): (0, 1, 1)},
        names=["a", "b", "c"],
    )


def z5_rtimes_z_pc() -> PcPresentation:
    """Z/5 x| Z with the infinite generator acting as x -> x^2.

    The action generates the full automorphism group of Z/5, so the torsion
    generator lies in every lower-central term: the group is not residually
    nilpotent, and every nilpotent (hence every p-power) quotient kills it.
    """
    return PcPresentation(
        orders=[None, 5],
        powers={1: (0, 0)},
        conjs={(0, 1, 1): (0, 2), (0, 1, -1): (0, 3)},
        names=["b", "a"],
    )


def _fp(name, gens, *relators):
    def build():
        return FpPresentation(name, list(gens), [parse_word(r) for r in relators])

    return build


def _surface(genus: int):
    gens = ["a%d" % (i + 1) for i in range(2 * genus)]
    relator = "*".join(
        "[a%d,a%d]" % (2 * i + 1, 2 * i + 2) for i in range(genus)
    )
    return _fp("surface-%d" % genus, gens, relator)


def _free(rank: int):
    names = ["a%d" % (i + 1) for i in range(rank)] if rank > 4 else list("abcd"[:rank])
    return _fp("free-%d" % rank, names)


_PERM_ENTRIES = [
    ("s3", "symmetric group on 3 points", lambda: symmetric(3)),
    ("s4", "symmetric group on 4 points", lambda: symmetric(4)),
    ("a4", "alternating group on 4 points", lambda: alternating(4)),
    ("d4", "dihedral group of order 8", lambda: dihedral(4)),
    ("d5", "dihedral group of order 10", lambda: dihedral(5)),
    ("d6", "dihedral group of order 12", lambda: dihedral(6)),
    ("q8", "quaternion group in its regular representation", quaternion8),
    ("z1", "trivial group", lambda: cyclic(1)),
    ("z2", "cyclic group of order 2", lambda: cyclic(2)),
    ("z3", "cyclic group of order 3", lambda: cyclic(3)),
    ("z4", "cyclic group of order 4", lambda: cyclic(4)),
    ("z6", "cyclic group of order 6", lambda: cyclic(6)),
    ("z8", "cyclic group of order 8", lambda: cyclic(8)),
    ("z9", "cyclic group of order 9", lambda: cyclic(9)),
    ("z12", "cyclic group of order 12", lambda: cyclic(12)),
    ("z15", "cyclic group of order 15", lambda: cyclic(15)),
    ("z16", "cyclic group of order 16", lambda: cyclic(16)),
    ("z24", "cyclic group of order 24", lambda: cyclic(24)),
    ("z30", "cyclic group of order 30", lambda: cyclic(30)),
    ("z36", "cyclic group of order 36", lambda: cyclic(36)),
    ("z60", "cyclic group of order 60", lambda: cyclic(60)),
    ("z100", "cyclic group of order 100", lambda: cyclic(100)),
    ("z2^3", "elementary abelian group of order 8", lambda: elementary_abelian(2, 3)),
    ("z3^2", "elementary abelian group of order 9", lambda: elementary_abelian(3, 2)),
    ("z6xz6", "Z/6 x Z/6", _named(lambda: direct_product(cyclic(6), cyclic(6)), "Z/6xZ/6")),
    ("q8xz9", "Q8 x Z/9, a product of p-groups",
     _named(lambda: direct_product(quaternion8(), cyclic(9)), "Q8xZ/9")),
    ("d4xz3", "D4 x Z/3", _named(lambda: direct_product(dihedral(4), cyclic(3)), "D4xZ/3")),
    ("d4xz9", "D4 x Z/9, a product of p-groups (order 72)",
     _named(lambda: direct_product(dihedral(4), cyclic(9)), "D4xZ/9")),
    ("q8xz3", "Q8 x Z/3", _named(lambda: direct_product(quaternion8(), cyclic(3)), "Q8xZ/3")),
    ("z4xz27", "Z/4 x Z/27, a product of p-groups (order 108)",
     _named(lambda: direct_product(cyclic(4), cyclic(27)), "Z/4xZ/27")),
    ("s3xz4", "S3 x Z/4", _named(lambda: direct_product(symmetric(3), cyclic(4)), "S3xZ/4")),
    ("s3xs3", "S3 x S3", _named(lambda: direct_product(symmetric(3), symmetric(3)), "S3xS3")),
    ("z7:z3", "Z/7 x| Z/3 with x -> x^2 (nonabelian of order 21)", _semidirect(7, 3, 2)),
    ("z7:z3-trivial", "Z/7 x Z/3 built as a semidirect product with trivial action",
     _semidirect(7, 3, 1)),
    ("z5:z4", "Z/5 x| Z/4 with x -> x^2 (Frobenius group of order 20)", _semidirect(5, 4, 2)),
    ("z5:z4-trivial", "Z/5 x Z/4 with trivial action", _semidirect(5, 4, 1)),
    ("z9:z3", "Z/9 x| Z/3 with x -> x^4 (nonabelian group of order 27)", _semidirect(9, 3, 4)),
    ("z13:z3", "Z/13 x| Z/3 with x -> x^3 (nonabelian of order 39)", _semidirect(13, 3, 3)),
    ("z3xz5:z2-both", "(Z/3 x Z/5) x| Z/2 inverting both factors", _z3z5_z2(True, True)),
    ("z3xz5:z2-left", "(Z/3 x Z/5) x| Z/2 inverting the Z/3 factor", _z3z5_z2(True, False)),
    ("z3xz5:z2-right", "(Z/3 x Z/5) x| Z/2 inverting the Z/5 factor", _z3z5_z2(False, True)),
    ("z3xz5:z2-trivial", "(Z/3 x Z/5) x Z/2 with trivial action", _z3z5_z2(False, False)),
]

_PC_ENTRIES = [
    ("heisenberg", "integer Heisenberg group: free class-2 nilpotent of rank 2",
     heisenberg_pc),
    ("klein-bottle", "Klein bottle group: torsion-free polycyclic, Hirsch length 2, "
     "not residually-p for odd p", klein_bottle_pc),
    ("z", "infinite cyclic group", lambda: z_lattice_pc(1)),
    ("z^2", "free abelian group of rank 2", lambda: z_lattice_pc(2)),
    ("z^3", "free abelian group of rank 3", lambda: z_lattice_pc(3)),
    ("heisenberg-c2", "Heisenberg with the centre squared to torsion",
     heisenberg_mod_center_squared_pc),
    ("z5:z", "Z/5 x| Z with a full-order action: polycyclic, not residually "
     "nilpotent", z5_rtimes_z_pc),
]

_FP_ENTRIES = [
    ("trefoil", "trefoil knot group <a, b | a^2 b^3>", _fp("trefoil", "ab", "a^2*b^3")),
    ("surface-2", "closed orientable surface group of genus 2", _surface(2)),
    ("surface-3", "closed orientable surface group of genus 3", _surface(3)),
    ("free-1", "free group of rank 1", _free(1)),
    ("free-2", "free group of rank 2", _free(2)),
    ("free-3", "free group of rank 3", _free(3)),
    ("free-4", "free group of rank 4", _free(4)),
    ("klein-bottle-fp", "Klein bottle group as a one-relator presentation",
     _fp("klein-bottle-fp", "ab", "a*b*a*b^-1")),
]


_ENTRIES = {}
for name, desc, builder in _PERM_ENTRIES:
    _ENTRIES[name] = CatalogEntry(name, "perm", desc, builder)
for name, desc, builder in _PC_ENTRIES:
    _ENTRIES[name] = CatalogEntry(name, "pc", desc, builder)
for name, desc, builder in _FP_ENTRIES:
    _ENTRIES[name] = CatalogEntry(name, "fp", desc, builder)


class UnknownCatalogEntry(KeyError):
    pass


def catalog_names(kind=None):
    if kind is None:
        return list(_ENTRIES)
    return [name for name, e in _ENTRIES.items() if e.kind == kind]


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownCatalogEntry(
            "no catalog entry %r (see `prosep catalog`)" % name
        )


def catalog(name: str):
    return catalog_entry(name).build()


def finite_catalog(max_order=None):
    """(name, group) pairs for every finite entry, optionally order-capped."""
    out = []
    for name in catalog_names("perm"):
        group = catalog(name)
        if max_order is None or group.order <= max_order:
            out.append((name, group))
    return out
