"""Finitely presented groups and the presentation file format.

The file format is line based; ``#`` starts a comment.  Two kinds::

    kind: fp                      kind: pc
    name: trefoil                 name: klein-bottle
    generators: a b               generators: b a
    relator: a^2*b^3              orders: 0 0
                                  conj: a^b = a^-1
                                  conj: a^B = a^-1

For pc files, ``orders`` lists the relative orders in generator order (0 or
``inf`` meaning infinite).  Power lines read ``power: a^4 = <word>`` with
the exponent equal to the declared order; conjugation lines read
``conj: y^x = <word>`` where x may be an uppercase letter (or ``x^-1``)
for conjugation by an inverse.  Right-hand sides must be words in normal
form: generators in presentation order, exponents within range.  Parsed pc
presentations must pass the consistency check before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pcgroup import PcPresentation, consistency_check
from .words import Word, parse_word, serialize_word


class PresentationFormatError(ValueError):
    pass


@dataclass
class FpPresentation:
    """A finitely presented group: named generators and relator words."""

    name: str
    generators: list
    relators: list = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationFormatError("duplicate generator names")
        declared = set(self.generators)
        for rel in self.relators:
            undeclared = rel.generators() - declared
            if undeclared:
                raise PresentationFormatError(
                    "relator uses undeclared generators: %s" % sorted(undeclared)
                )

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index_of(self):
        return {g: i for i, g in enumerate(self.generators)}

    def relator_letters(self):
        idx = self.index_of()
        return [rel.letters(idx) for rel in self.relators]


def _split_names(text):
    return [t for t in text.replace(",", " ").split() if t]


def _parse_order(token):
    if token in ("0", "inf", "infinity"):
        return None
    value = int(token)
    if value < 2:
        raise PresentationFormatError("relative orders must be >= 2, 0 or inf")
    return value


def _word_to_vector(pres: PcPresentation, word: Word, line_no):
    """A normal-form word as an exponent vector; rejects non-normal forms."""
    vec = [0] * pres.n
    last = -1
    for g, e in word.syllables:
        try:
            i = pres.index_of(g)
        except ValueError:
            raise PresentationFormatError(
                "line %d: unknown generator %r" % (line_no, g)
            )
        if i <= last:
            raise PresentationFormatError(
                "line %d: right-hand side must be in normal form "
                "(generators in presentation order)" % line_no
            )
        o = pres.orders[i]
        if o is not None and not (0 <= e < o):
            raise PresentationFormatError(
                "line %d: exponent %d out of range for %s" % (line_no, e, g)
            )
        vec[i] = e
        last = i
    return tuple(vec)


def parse_presentation(text: str):
    """Parse a presentation file into an FpPresentation or PcPresentation.

    Pc presentations are consistency-checked; a failing overlap is a parse
    error naming the overlap.
    """
    kind = None
    name = None
    generators = None
    orders = None
    relators = []
    power_lines = []
    conj_lines = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PresentationFormatError("line %d: expected 'key: value'" % line_no)
        key, value = (part.strip() for part in line.split(":", 1))
        if key == "kind":
            if value not in ("fp", "pc"):
                raise PresentationFormatError(
                    "line %d: kind must be 'fp' or 'pc'" % line_no
                )
            kind = value
        elif key == "name":
            name = value
        elif key == "generators":
            generators = _split_names(value)
        elif key == "relator":
            relators.append((line_no, value))
        elif key == "orders":
            orders = [_parse_order(t) for t in _split_names(value)]
        elif key == "power":
            power_lines.append((line_no, value))
        elif key == "conj":
            conj_lines.append((line_no, value))
        else:
            raise PresentationFormatError("line %d: unknown key %r" % (line_no, key))

    if kind is None:
        raise PresentationFormatError("missing 'kind:' header")
    if generators is None:
        raise PresentationFormatError("missing 'generators:' line")
    if name is None:
        name = "unnamed"

    if kind == "fp":
        if orders is not None or power_lines or conj_lines:
            raise PresentationFormatError("fp presentations take only relators")
        words = [parse_word(text_) for _, text_ in relators]
        return FpPresentation(name, generators, words)

    if relators:
        raise PresentationFormatError("pc presentations take power/conj lines")
    if orders is None:
        raise PresentationFormatError("pc presentation needs an 'orders:' line")
    if len(orders) != len(generators):
        raise PresentationFormatError("orders and generators differ in length")
    pres = PcPresentation(orders, names=generators)
    for line_no, value in power_lines:
        left, right = _split_relation(value, line_no)
        gen, exponent = _parse_power_left(left, line_no)
        i = _gen_index(pres, gen, line_no)
        if pres.orders[i] is None:
            raise PresentationFormatError(
                "line %d: power relation on infinite generator %s" % (line_no, gen)
            )
        if exponent != pres.orders[i]:
            raise PresentationFormatError(
                "line %d: power exponent must equal the relative order %d"
                % (line_no, pres.orders[i])
            )
        pres.set_power(i, _word_to_vector(pres, parse_word(right), line_no))
    for line_no, value in conj_lines:
        left, right = _split_relation(value, line_no)
        target, conjugator, sign = _parse_conj_left(left, line_no)
        j = _gen_index(pres, target, line_no)
        i = _gen_index(pres, conjugator, line_no)
        if not i < j:
            raise PresentationFormatError(
                "line %d: conjugation must act on a later generator" % line_no
            )
        try:
            pres.set_conjugation(i, j, _word_to_vector(pres, parse_word(right), line_no),
                                 sign=sign)
        except ValueError as exc:
            raise PresentationFormatError("line %d: %s" % (line_no, exc))

    ok, failures = consistency_check(pres)
    if not ok:
        raise PresentationFormatError(
            "inconsistent pc presentation: %s" % failures[0]
        )
    return pres


def _split_relation(value, line_no):
    if "=" not in value:
        raise PresentationFormatError("line %d: relation needs '='" % line_no)
    left, right = value.split("=", 1)
    return left.strip(), right.strip()


def _parse_power_left(left, line_no):
    if "^" not in left:
        raise PresentationFormatError("line %d: power left side must be g^n" % line_no)
    gen, exp = left.split("^", 1)
    try:
        return gen.strip(), int(exp)
    except ValueError:
        raise PresentationFormatError("line %d: bad power exponent" % line_no)


def _parse_conj_left(left, line_no):
    if "^" not in left:
        raise PresentationFormatError("line %d: conj left side must be y^x" % line_no)
    target, conjugator = (t.strip() for t in left.split("^", 1))
    sign = 1
    if conjugator.startswith("(") and conjugator.endswith(")"):
        conjugator = conjugator[1:-1].strip()
    if conjugator.endswith("^-1"):
        conjugator = conjugator[:-3].strip()
        sign = -1
    elif len(conjugator) == 1 and conjugator.isupper():
        conjugator = conjugator.lower()
        sign = -1
    return target, conjugator, sign


def _gen_index(pres: PcPresentation, gen, line_no):
    try:
        return pres.index_of(gen)
    except ValueError:
        raise PresentationFormatError("line %d: unknown generator %r" % (line_no, gen))


def serialize_presentation(obj) -> str:
    """Render an FpPresentation or PcPresentation in the file format."""
    lines = []
    if isinstance(obj, FpPresentation):
        lines.append("kind: fp")
        lines.append("name: %s" % obj.name)
        lines.append("generators: %s" % " ".join(obj.generators))
        for rel in obj.relators:
            lines.append("relator: %s" % serialize_word(rel))
        return "\n".join(lines) + "\n"
    if isinstance(obj, PcPresentation):
        lines.append("kind: pc")
        lines.append("name: %s" % getattr(obj, "label", "unnamed"))
        lines.append("generators: %s" % " ".join(obj.names))
        lines.append("orders: %s" % " ".join(
            "0" if o is None else str(o) for o in obj.orders
        ))
        for i in sorted(obj.powers):
            lines.append("power: %s^%d = %s" % (
                obj.names[i], obj.orders[i], _vector_to_text(obj, obj.powers[i])
            ))
        for (i, j, s) in sorted(obj.conjs):
            suffix = "" if s == 1 else "^-1"
            lines.append("conj: %s^(%s%s) = %s" % (
                obj.names[j], obj.names[i], suffix,
                _vector_to_text(obj, obj.conjs[(i, j, s)]),
            ))
        return "\n".join(lines) + "\n"
    raise TypeError("cannot serialize %r" % type(obj))


def _vector_to_text(pres: PcPresentation, vec) -> str:
    w = Word.from_syllables(
        (pres.names[i], e) for i, e in enumerate(vec) if e
    )
    return serialize_word(w)
