"""Command-line interface.

Every operation is a subcommand emitting line-delimited JSON reports on
stdout (``--output human`` switches to prose).  Exit codes: 0 for any
computed result -- finding a counterexample is a success -- 1 for
bounded-depth inconclusive outcomes, 2 for input errors.  ``--figures DIR``
renders matplotlib figures next to the delimited output for the report
kinds that have a graphical face.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import report as rep
from .catalog import UnknownCatalogEntry, catalog, catalog_entry, catalog_names
from .nq import NqCapExceeded, TrivialWordError, WeightExceedsBound, fingerprint_compare, nq, relator_analysis
from .pcgroup import PcPresentation
from .pcsub import induced_subgroup, relative_index
from .pcseries import (
    NotNilpotentWithinBound,
    abelian_invariants_of_presentation,
    is_cyclic_quotient,
    layer_invariants,
    lower_central_series_pc,
    p_quotient,
    residually_p_witness,
    separability_witness,
)
from .perm import FiniteGroup, LatticeCapExceeded, lower_central_series, subgroup
from .presentations import FpPresentation, PresentationFormatError, parse_presentation
from .propfinite import is_pro_p_embeddable, p_radical_finite, theorem_c_verify
from .radical import RadicalCapabilityError, p_radical_nilpotent
from .words import WordSyntaxError, parse_word

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    pass


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise InputError("environment variable %s must be an integer" % name)


def load_group(spec: str):
    """A catalog name, or a path to a presentation file."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_presentation(fh.read())
    try:
        return catalog(spec)
    except UnknownCatalogEntry as exc:
        raise InputError(str(exc))


def _require_prime(p):
    from .perm import is_prime

    if not is_prime(p):
        raise InputError("%d is not prime" % p)


def _parse_primes(text):
    try:
        primes = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError("could not parse primes from %r" % text)
    for p in primes:
        _require_prime(p)
    return primes


def _split_top_level(text):
    """Split on commas that are not nested inside brackets or parens."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p for p in parts if p.strip()]


def _parse_words(text):
    try:
        return [parse_word(t) for t in _split_top_level(text)]
    except WordSyntaxError as exc:
        raise InputError(str(exc))


def _parse_single_word(text):
    try:
        return parse_word(text)
    except WordSyntaxError as exc:
        raise InputError(str(exc))


def perm_element(group: FiniteGroup, word):
    """Evaluate a word over the aliases g1..gn for the group's generators."""
    names = {"g%d" % (i + 1): g for i, g in enumerate(group.generators)}
    out = group.identity
    for name, e in word.syllables:
        if name not in names:
            raise InputError(
                "unknown generator %r (this group has g1..g%d)"
                % (name, len(group.generators))
            )
        out = out * names[name] ** e
    return out


def pc_element(pres: PcPresentation, word):
    try:
        letters = [(pres.index_of(g), e) for g, e in word.syllables]
    except ValueError as exc:
        raise InputError(str(exc))
    return pres.collect(letters)


def _emit(args, report_dict, human=""):
    if args.output == "human":
        print(human or rep.dumps(report_dict))
    else:
        rep.emit(report_dict)


# -- subcommand implementations ----------------------------------------------


def _verify_one(name, max_order, cap):
    group = catalog(name)
    if max_order is not None and group.order > max_order:
        return None
    verdict = theorem_c_verify(group, cap=cap)
    return rep.verdict_report(verdict, group_name=name)


def _verify_worker(payload):
    name, max_order, cap = payload
    return _verify_one(name, max_order, cap)


def cmd_verify_theorem_c(args):
    cap = _env_int("PROSEP_MAX_ORDER", 200)
    if args.catalog == "all":
        names = catalog_names("perm")
    else:
        names = [t for t in args.catalog.replace(",", " ").split() if t]
    reports = []
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        payloads = [(name, args.max_order, cap) for name in names]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for out in pool.map(_verify_worker, payloads):
                if out is not None:
                    reports.append(out)
    else:
        for name in names:
            out = _verify_one(name, args.max_order, cap)
            if out is not None:
                reports.append(out)
    agree = 0
    for out in reports:
        _emit(args, out, human=_verdict_human(out))
        if out["verdict"] == "nilpotent" or out.get("rechecked"):
            agree += 1
    summary = rep.summary_report(
        "verify-theorem-c",
        {
            "groups": len(reports),
            "nilpotent": sum(1 for r in reports if r["verdict"] == "nilpotent"),
            "counterexamples": sum(1 for r in reports if r["verdict"] != "nilpotent"),
            "agreements": agree,
        },
    )
    _emit(args, summary, human="checked %(groups)d groups, %(agreements)d agreements" % summary)
    if args.figures:
        from .figures import verdict_summary_figure

        verdict_summary_figure(reports, args.figures)
    return EXIT_OK


def _verdict_human(out):
    if out["verdict"] == "nilpotent":
        return "%s (order %d): nilpotent, every subgroup embeds" % (out["group"], out["order"])
    ce = out["counterexample"]
    return (
        "%s (order %d): counterexample at p=%d, subgroup of order %d, witness %s"
        % (out["group"], out["order"], ce["prime"], ce["subgroup_order"], ce["witness"])
    )


def cmd_embeddable(args):
    group = load_group(args.group)
    if not isinstance(group, FiniteGroup):
        raise InputError("embeddable runs on finite catalog groups")
    _require_prime(args.prime)
    gens = [perm_element(group, w) for w in _parse_words(args.subgroup)]
    handle = subgroup(group, gens)
    ok, witness = is_pro_p_embeddable(group, handle, args.prime)
    out = rep.embeddable_report(args.group, handle.order, args.prime, ok, witness)
    _emit(args, out, human="pro-%d embeddable: %s" % (args.prime, ok))
    return EXIT_OK


def _pc_subgroup(pres, text):
    return induced_subgroup(pres, [pc_element(pres, w) for w in _parse_words(text)])


def cmd_witness_separate(args):
    pres = load_group(args.group)
    if not isinstance(pres, PcPresentation):
        raise InputError("witness-separate runs on pc presentations")
    _require_prime(args.prime)
    sub = _pc_subgroup(pres, args.subgroup)
    lam = _pc_subgroup(pres, args.sublattice)
    try:
        result = separability_witness(pres, sub, lam, args.prime, k_max=args.k_max)
    except ValueError as exc:
        raise InputError(str(exc))
    out = rep.witness_report(result, group_name=args.group,
                             subgroup=args.subgroup, sublattice=args.sublattice)
    _emit(args, out, human=_witness_human(result))
    return EXIT_OK if result.succeeded else EXIT_INCONCLUSIVE


def cmd_witness_residual_p(args):
    pres = load_group(args.group)
    if not isinstance(pres, PcPresentation):
        raise InputError("witness-residual-p runs on pc presentations")
    _require_prime(args.prime)
    x = pc_element(pres, _parse_single_word(args.element))
    try:
        result = residually_p_witness(pres, x, args.prime, k_max=args.k_max)
    except ValueError as exc:
        raise InputError(str(exc))
    out = rep.witness_report(result, group_name=args.group, subgroup=args.element)
    _emit(args, out, human=_witness_human(result))
    return EXIT_OK if result.succeeded else EXIT_INCONCLUSIVE


def _witness_human(result):
    if result.succeeded:
        return "witnessed at level %d (quotient order %s)" % (
            result.level, result.details.get("quotient_order"))
    return "no witness up to level %d (bounded-depth failure, not a disproof)" % result.k_max


def cmd_radical(args):
    group = load_group(args.group)
    primes = _parse_primes(args.primes)
    if isinstance(group, FiniteGroup):
        gens = [perm_element(group, w) for w in _parse_words(args.subgroup)]
        handle = subgroup(group, gens)
        result = p_radical_finite(group, handle, primes)
        out = rep.radical_report(args.group, args.subgroup, primes, result=result)
        _emit(args, out, human="radical size %d, subgroup: %s, index %s" % (
            len(result.elements), result.is_subgroup, result.index))
        return EXIT_OK
    if isinstance(group, PcPresentation):
        sub = _pc_subgroup(group, args.subgroup)
        try:
            result = p_radical_nilpotent(group, sub, primes)
        except (NotNilpotentWithinBound, RadicalCapabilityError) as exc:
            raise InputError(str(exc))
        index = relative_index(group, result, sub)
        out = rep.radical_report(args.group, args.subgroup, primes,
                                 pc_result=result, index=index)
        _emit(args, out, human="radical sequence %s, index %s over the subgroup" % (
            out["sequence"], index))
        return EXIT_OK
    raise InputError("radical needs a finite group or a pc presentation")


def cmd_lcs(args):
    group = load_group(args.group)
    if isinstance(group, FiniteGroup):
        series = lower_central_series(group)
        out = rep.lcs_report(
            args.group,
            orders=[h.order for h in series],
            nilpotent=series[-1].is_trivial(),
        )
        _emit(args, out, human="term orders: %s" % out["term_orders"])
        return EXIT_OK
    if isinstance(group, PcPresentation):
        try:
            series = lower_central_series_pc(group)
        except NotNilpotentWithinBound as exc:
            out = rep.lcs_report(args.group, nilpotent=False)
            out["status"] = str(exc)
            _emit(args, out, human="not nilpotent within the depth bound")
            return EXIT_INCONCLUSIVE
        out = rep.lcs_report(
            args.group,
            sequences=[h.sequence for h in series],
            nilpotent=True,
            invariants=layer_invariants(group),
        )
        _emit(args, out, human="nilpotent of class %d" % (len(series) - 1))
        return EXIT_OK
    raise InputError("lcs needs a finite group or a pc presentation")


def cmd_p_quotient(args):
    pres = load_group(args.group)
    if not isinstance(pres, PcPresentation):
        raise InputError("p-quotient runs on pc presentations")
    _require_prime(args.prime)
    levels = []
    for k in range(1, args.level + 1):
        quo = p_quotient(pres, args.prime, k)
        levels.append((k, quo.group.group_order(), is_cyclic_quotient(quo.group)))
    out = rep.tower_report(args.group, args.prime, levels)
    final = p_quotient(pres, args.prime, args.level).group
    if all(v == final.generator_vector(j) for (i, j, s), v in final.conjs.items()):
        inv = abelian_invariants_of_presentation(final)
        out["final_invariants"] = {
            "free_rank": inv.free_rank, "torsion": list(inv.torsion)
        }
    _emit(args, out, human="tower orders: %s" % [o for _, o, _ in levels])
    if args.figures:
        from .figures import tower_figure

        tower_figure(out, args.figures)
    return EXIT_OK


def _load_fp(spec) -> FpPresentation:
    obj = load_group(spec)
    if not isinstance(obj, FpPresentation):
        raise InputError("%r is not a finitely presented group" % spec)
    return obj


def cmd_nq(args):
    fp = _load_fp(args.fp)
    result = _run_nq(fp, args.class_bound)
    out = rep.nq_report(result)
    _emit(args, out, human="fingerprint: %s" % result.fingerprint)
    return EXIT_OK


def cmd_fingerprint(args):
    fp = _load_fp(args.fp)
    result = _run_nq(fp, args.class_bound)
    out = rep.fingerprint_report(fp.name, result.fingerprint)
    _emit(args, out, human="fingerprint: %s" % result.fingerprint)
    if args.figures:
        from .figures import fingerprint_figure

        fingerprint_figure(out, args.figures)
    return EXIT_OK


def _run_nq(fp, class_bound):
    # an explicit --class on the command line is explicit intent, so the
    # effective cap is whatever was asked for unless PROSEP_CLASS_CAP binds
    cap = _env_int("PROSEP_CLASS_CAP", 0) or max(5, class_bound)
    try:
        return nq(fp, class_bound, class_cap=cap)
    except NqCapExceeded as exc:
        raise InputError(str(exc))


def cmd_compare(args):
    left = _run_nq(_load_fp(args.left), args.class_bound)
    right = _run_nq(_load_fp(args.right), args.class_bound)
    primes = _parse_primes(args.primes) if args.primes else []
    result = fingerprint_compare(left, right, primes=primes)
    out = rep.compare_report(result)
    _emit(args, out, human="all equal: %s (%s)" % (result.all_equal, result.caveat))
    if args.figures:
        from .figures import compare_figure

        compare_figure(out, args.figures)
    return EXIT_OK


def cmd_relator(args):
    word = _parse_single_word(args.word)
    try:
        result = relator_analysis(word, args.rank, args.max_class)
    except TrivialWordError as exc:
        raise InputError(str(exc))
    except WeightExceedsBound as exc:
        out = {"schema": "prosep.relator/1", "word": args.word,
               "rank": args.rank, "status": str(exc)}
        _emit(args, out, human=str(exc))
        return EXIT_INCONCLUSIVE
    out = rep.relator_report(result)
    _emit(args, out, human="weight %d, coordinates %s, proper power: %s" % (
        result.weight, result.coordinates, result.is_proper_power))
    return EXIT_OK


def cmd_catalog(args):
    names = catalog_names(args.kind)
    for name in names:
        entry = catalog_entry(name)
        extra = {}
        if entry.kind == "perm":
            extra["order"] = entry.build().order
        out = rep.catalog_report(name, entry.kind, entry.description, extra)
        _emit(args, out, human="%-18s %-4s %s" % (name, entry.kind, entry.description))
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prosep",
        description="pro-p separability toolkit: embeddability verdicts, "
        "witness searches, quotient towers and lower-central fingerprints",
    )
    parser.add_argument("--output", choices=("jsonl", "human"), default="jsonl",
                        help="report format on stdout (default jsonl)")
    parser.add_argument("--figures", metavar="DIR", default=None,
                        help="also render figures into DIR")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-theorem-c",
                       help="check nilpotency against subgroup embeddability")
    p.add_argument("--catalog", default="all",
                   help="'all' or a list of catalog names")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_theorem_c)

    p = sub.add_parser("embeddable", help="pro-p embeddability of a subgroup")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True,
                   help="comma-separated words in g1..gn")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.set_defaults(func=cmd_embeddable)

    p = sub.add_parser("witness-separate",
                       help="separability witness search in a pc group")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--sublattice", required=True,
                   help="finite p-power-index subgroup of the subgroup")
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--k-max", type=int, default=_env_int("PROSEP_K_MAX", 8))
    p.set_defaults(func=cmd_witness_separate)

    p = sub.add_parser("witness-residual-p",
                       help="residual-p witness search for one element")
    p.add_argument("--group", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--k-max", type=int, default=_env_int("PROSEP_K_MAX", 8))
    p.set_defaults(func=cmd_witness_residual_p)

    p = sub.add_parser("radical", help="P-radical of a subgroup")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--primes", required=True, help="e.g. 2,3")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("lcs", help="lower central series")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_lcs)

    p = sub.add_parser("p-quotient", help="p-lower-central quotient tower")
    p.add_argument("--group", required=True)
    p.add_argument("-p", "--prime", type=int, required=True)
    p.add_argument("--level", "-k", type=int, required=True)
    p.set_defaults(func=cmd_p_quotient)

    p = sub.add_parser("nq", help="nilpotent quotient of an fp group")
    p.add_argument("--fp", required=True)
    p.add_argument("--class", dest="class_bound", type=int, required=True)
    p.set_defaults(func=cmd_nq)

    p = sub.add_parser("fingerprint", help="lower-central fingerprint")
    p.add_argument("--fp", required=True)
    p.add_argument("--class", dest="class_bound", type=int, required=True)
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("compare", help="compare two fingerprints")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--class", dest="class_bound", type=int, required=True)
    p.add_argument("--primes", default="")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("relator", help="layer analysis of a free-group word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--max-class", type=int, required=True)
    p.set_defaults(func=cmd_relator)

    p = sub.add_parser("catalog", help="list the built-in examples")
    p.add_argument("--kind", choices=("perm", "pc", "fp"), default=None)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    flags = {"prime": "-p", "level": "--level", "k_max": "--k-max",
             "class_bound": "--class", "rank": "--rank", "max_class": "--max-class"}
    for attr, flag in flags.items():
        value = getattr(args, attr, None)
        if value is not None and value < 1:
            print("error: %s must be positive" % flag, file=sys.stderr)
            return EXIT_INPUT_ERROR
    try:
        return args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (PresentationFormatError, WordSyntaxError, UnknownCatalogEntry,
            LatticeCapExceeded, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
