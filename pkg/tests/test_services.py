from random import Random

import pytest

from limweight.core.config import settings
from limweight.core.exceptions import HypothesisViolated, NotDominant, ParseError
from limweight.limits import Algebra, ModuleKind, parse_ideal
from limweight.rootdata import parse_borel
from limweight.services import (
    REGISTRY,
    DescriptorKind,
    guess_kind,
    int_weight,
    module_from,
    parse_descriptor,
    run_annihilator,
    run_bound,
    run_branch,
    run_classify,
    run_degree,
    run_hw,
    run_iso,
    run_parse,
    run_support,
    run_verification,
    select_checks,
)
from limweight.weights import SetDescriptor


@pytest.mark.parametrize(
    "text, kind",
    [
        ("I(0,1;[];[])", DescriptorKind.IDEAL),
        ("Isw", DescriptorKind.IDEAL),
        ("[asc{odds}; desc{evens}]", DescriptorKind.BOREL),
        ("blocks=[asc{all}]", DescriptorKind.BOREL),
        ("{1,3; period=2, pattern=10, start=5}", DescriptorKind.SET),
        ("odds", DescriptorKind.SET),
        ("[1,2,g0; tail=-1]", DescriptorKind.SEQ),
        ("2,1,0", DescriptorKind.WEIGHT),
        ("Lambda{odds}", DescriptorKind.MODULE),
        ("V", DescriptorKind.MODULE),
    ],
)
def test_guess_kind(text, kind):
    assert guess_kind(text) is kind


def test_parse_descriptor():
    kind, value = parse_descriptor("{1,3; period=2, pattern=10, start=5}")
    assert kind is DescriptorKind.SET
    assert value == SetDescriptor.odds()
    for text in ("[1,2,g0; tail=-1]", "[asc{odds}; desc{evens}]", "I(0,1;[];[])", "Lambda{odds}"):
        kind, value = parse_descriptor(text)
        assert parse_descriptor(str(value), kind)[1] == value


def test_listed_descending_block_is_a_borel_order():
    kind, value = parse_descriptor("[asc{odds}; desc{6,4,2}]")
    assert kind is DescriptorKind.BOREL
    assert value == parse_borel("[asc{odds}; desc{evens}]")
    assert parse_borel("[asc{odds}; desc{2,4,6,...}]") == value
    with pytest.raises(ParseError):
        parse_descriptor("[asc{odds}; desc{6,2}]")


def test_int_weight():
    assert int_weight("[2,1,0]") == (2, 1, 0)
    with pytest.raises(ParseError):
        int_weight("1/2,0")
    with pytest.raises(ParseError):
        int_weight("g0,1")


def test_module_from_needs_exactly_one_source():
    with pytest.raises(ParseError):
        module_from(Algebra.SL)
    with pytest.raises(ParseError):
        module_from(Algebra.SL, "V", "[1; tail=0]")
    with pytest.raises(ParseError):
        module_from(Algebra.OB, mu="[1; tail=0]")
    assert module_from(Algebra.SL, mu="[1; tail=0]").kind is ModuleKind.NATURAL


def test_classify_generic_tail(captured_logs):
    report = run_classify("sl", mu="[1,2,g0; tail=-1]", rank=2)
    assert report.family == ModuleKind.X_SL.value
    assert not report.integrable
    assert report.five_type is None
    assert not report.minuscule
    assert report.annihilator == "I(1,0;[];[])"
    assert report.finite_rank.rank == 2
    assert report.finite_rank.weight == "(1,2,g0)"
    assert not report.finite_rank.finite_dimensional
    assert report.finite_rank.identification is None
    assert any("classified" in message for message in captured_logs)


def test_classify_named_modules():
    report = run_classify("sl", module="Lambda{odds}")
    assert report.integrable
    assert report.five_type == "i"
    assert report.minuscule
    assert report.annihilator == "I(0,1;[];[])"
    spinor = run_classify("o-b", module="SpinB{odds}")
    assert spinor.five_type is None
    assert spinor.annihilator == "OSpin(B)"
    with pytest.raises(ParseError):
        run_classify("sl", module="V", rank=2)


def test_support():
    assert run_support("sl", "2,1,0", module="S(2,1)").member
    assert not run_support("sl", "3,0", module="S(2,1)").member
    assert run_support("sl", "[tail=1]", module="SinfV[tail=1; step=1]").member


def test_branch():
    report = run_branch("sl", "-1,1,0", box=2)
    assert report.ok
    assert not report.discrepancies
    assert [s.k for s in report.summands] == [-2, -1, 0]
    assert report.summands[-1].representative == "(-1,1)"
    assert all(len(s.support_sample) <= 3 for s in report.summands)


def test_degree():
    report = run_degree("2,1,0", nu="1,1,1")
    assert (report.dim, report.deg, report.weyl_dim) == (8, 2, 8)
    assert report.argmax_weights == ["1,1,1"]
    assert report.multiplicity == 2
    with pytest.raises(NotDominant):
        run_degree("0,1")
    with pytest.raises(ParseError):
        run_degree("1/2,0")


def test_bounds():
    report = run_bound("lem1", ["3", "2"])
    assert report.holds
    assert report.rhs == 2
    deg = run_bound("lemma-deg", ["g0,1,1,0,0"])
    assert deg.rhs == 3
    assert deg.lhs is None
    assert deg.window_size > 0
    with pytest.raises(HypothesisViolated):
        run_bound("lem1", ["1", "3"])
    with pytest.raises(HypothesisViolated):
        run_bound("lem3", ["1,0,0"])


@pytest.mark.parametrize("lemma, arguments", [("lem9", []), ("lem1", ["3"]), ("lem1", ["x", "2"])])
def test_bound_arguments_are_checked(lemma, arguments):
    with pytest.raises(ParseError):
        run_bound(lemma, arguments)


def test_highest_weight_of_a_limit_module():
    report = run_hw("sl", "[seq(1,2,3); dense{4,...}]", mu="[-1,-1,g0; tail=0]")
    assert report.status == "HighestWeight"
    assert report.side == "one-sided"
    assert (report.i0, report.a) == (3, "g0")


def test_highest_weight_at_finite_rank():
    report = run_hw("sl", "[asc{all}]", mu="-1,1,0")
    assert report.module == "X_sl(-1,1,0)"
    assert report.status in ("HighestWeight", "Neither")
    with pytest.raises(ParseError):
        run_hw("o-b", "[asc{all}]", mu="1,0")


def test_iso():
    assert run_iso("sl", "Lambda{odds}", "Lambda{2,3,5,7,...}").isomorphic
    assert not run_iso("sl", "V", "Vstar").isomorphic


def test_annihilator():
    assert run_annihilator("sp", mu="[tail=0]").label == "Isw"
    label = run_annihilator("sl", module="S(2,1)").label
    assert label == "I(0,0;[2,1];[])"
    assert str(parse_ideal(label)) == label


def test_parse():
    report = run_parse("{1,3; period=2, pattern=10, start=5}")
    assert report.kind == "set"
    assert run_parse(report.text).text == report.text
    assert run_parse("I(0,1;[];[])").text == "I(0,1;[];[])"
    assert run_parse("[1,2,g0; tail=-1]").kind == "seq"
    assert run_parse("2,1", kind="partition").text == "[2,1]"
    borel = run_parse("[asc{odds}; desc{evens}]")
    assert parse_borel(borel.text) == parse_borel("[asc{odds}; desc{evens}]")


def test_select_checks():
    assert len(select_checks()) == len(REGISTRY)
    assert len(select_checks(["all"])) == len(REGISTRY)
    assert all(c.suite == "core" for c in select_checks(["core"]))
    with pytest.raises(ParseError):
        select_checks(["nope"])


def test_verification_is_deterministic():
    first = run_verification(["core"], seed=7, budget=0.05, threads=2)
    assert first.ok
    assert first.suites == ["core"]
    assert first.passed == len(first.outcomes)
    second = run_verification(["core"], seed=7, budget=0.05, threads=1)
    assert first.model_dump() == second.model_dump()


def test_interlacing_pair_bound_check():
    (entry,) = [c for c in REGISTRY if c.name == "interlacing-pair-bound"]
    assert entry.suite == "degrees"
    assert entry.cases(1.0) == settings.VERIFY_CASES // 2
    assert entry.run(Random(7), 20) is None
