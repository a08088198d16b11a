import io
import json

from prosep.catalog import catalog
from prosep.nq import nq, relator_analysis
from prosep.pcsub import induced_subgroup
from prosep.pcseries import residually_p_witness, separability_witness
from prosep.perm import cyclic, subgroup, symmetric
from prosep.propfinite import p_radical_finite, theorem_c_verify
from prosep.report import dumps, emit_report, parse_line, render


def roundtrip(obj, **meta):
    stream = io.StringIO()
    emit_report(obj, stream, **meta)
    line = stream.getvalue()
    assert line.endswith("\n")
    parsed = parse_line(line)
    assert parsed["schema"].startswith("prosep.")
    assert parsed["schema"].endswith("/1")
    return parsed


def test_verdict_dispatch():
    parsed = roundtrip(theorem_c_verify(symmetric(3)), group="s3")
    assert parsed["verdict"] == "counterexample"
    assert parsed["rechecked"] is True


def test_witness_dispatch():
    h = catalog("heisenberg")
    sub = induced_subgroup(h, [h.generator_vector(0)])
    lam = induced_subgroup(h, [h.pow(h.generator_vector(0), 2)])
    parsed = roundtrip(separability_witness(h, sub, lam, 2),
                       group="heisenberg", subgroup="a", sublattice="a^2")
    assert parsed["status"] == "success"
    parsed = roundtrip(residually_p_witness(h, h.generator_vector(2), 2),
                       group="heisenberg")
    assert parsed["level"] == 3


def test_nq_and_fingerprint_dispatch():
    result = nq(catalog("trefoil"), 3)
    parsed = roundtrip(result)
    assert parsed["presentation"] == "trefoil"
    parsed = roundtrip(result.fingerprint, group="trefoil")
    assert parsed["layers"][0]["free_rank"] == 1


def test_relator_dispatch():
    from prosep.words import parse_word

    parsed = roundtrip(relator_analysis(parse_word("[a,b]"), 2, 3))
    assert parsed["weight"] == 2


def test_radical_dispatch():
    z12 = cyclic(12)
    g = z12.generators[0]
    result = p_radical_finite(z12, subgroup(z12, [g**4]), [2])
    parsed = roundtrip(result, group="z12", subgroup="g1^4", primes=[2])
    assert parsed["index"] == 4


def test_deterministic_serialization():
    verdict = theorem_c_verify(symmetric(3))
    assert dumps(render(verdict, group="s3")) == dumps(render(verdict, group="s3"))


def test_unknown_type_rejected():
    import pytest

    with pytest.raises(TypeError):
        render(object())


def test_all_lines_are_json():
    h = catalog("heisenberg")
    stream = io.StringIO()
    emit_report(theorem_c_verify(symmetric(3)), stream, group="s3")
    emit_report(
        residually_p_witness(h, h.generator_vector(0), 3), stream, group="heisenberg"
    )
    for line in stream.getvalue().splitlines():
        json.loads(line)
