"""
Command logic behind the CLI: each function takes descriptor text, runs the
library and returns a report model.
"""
from typing import List, Optional

from loguru import logger

from limweight.branching import branch, verify_branch
from limweight.classify import (
    central_char_Xsl,
    central_char_Xsp,
    finite_dim_identify_Xsl,
    hw_test_Xsl,
    hw_test_Xsp,
    is_cuspidal,
    is_integrable,
    locally_finite_roots_Xsl,
    locally_finite_roots_Xsp,
)
from limweight.core.exceptions import ParseError
from limweight.degrees import (
    LemmaDegReport,
    argmax_weights,
    deg_fd,
    dim_fd,
    mult_fd,
    verify_lem0,
    verify_lem1,
    verify_lem2,
    verify_lem3,
    verify_lem4,
    verify_lemma_deg,
    weyl_dimension,
)
from limweight.limits import (
    Algebra,
    LimitModuleDescriptor,
    annihilator_label,
    canonical,
    classify_sl,
    five_type,
    hw_test_limit,
    is_minuscule,
    iso_limit,
    parse_module,
    support_oracle,
)
from limweight.realization import ModuleFamily
from limweight.rootdata import parse_borel
from limweight.schemas import (
    AnnihilatorReport,
    BoundResult,
    BranchReport,
    ClassifyReport,
    DegreeReport,
    FiniteRankReport,
    HwReport,
    IsoReport,
    ParseReport,
    SummandReport,
    SupportReport,
)
from limweight.weights import Weight, WeightSeq, parse_seq

from .descriptors import DescriptorKind, int_weight, parse_descriptor, parse_weight_like

# exponents listed per branch summand
SAMPLE_SIZE = 3


def module_from(algebra: Algebra, module: Optional[str] = None, mu: Optional[str] = None) -> LimitModuleDescriptor:
    """The module named by ``--module`` or the X module of ``--mu``"""
    if (module is None) == (mu is None):
        raise ParseError("give exactly one of --module and --mu")
    if module is not None:
        return parse_module(module, algebra)
    seq = parse_seq(mu)
    if algebra is Algebra.SL:
        return classify_sl(seq)[0]
    if algebra is Algebra.SP:
        return LimitModuleDescriptor.x_sp(seq)
    raise ParseError(f"--mu names an X module, which {algebra.value}(inf) does not have")


def _finite_rank(algebra: Algebra, seq: WeightSeq, rank: int) -> FiniteRankReport:
    if algebra is Algebra.SL:
        weight = seq.truncate(rank + 1)
        roots = locally_finite_roots_Xsl(weight, rank)
        central = central_char_Xsl(weight, rank)
        identification = str(finite_dim_identify_Xsl(weight, rank)) if is_integrable(roots) else None
    else:
        weight = seq.truncate(rank)
        roots = locally_finite_roots_Xsp(weight, rank)
        central = central_char_Xsp(weight)
        identification = None
    return FiniteRankReport(
        rank=rank,
        weight=str(weight),
        central_character=str(central),
        finite_dimensional=is_integrable(roots),
        cuspidal=is_cuspidal(roots),
        locally_finite_roots=len(roots.fin),
        infinite_roots=len(roots.inf),
        identification=identification,
    )


def run_classify(algebra: str, module: Optional[str] = None, mu: Optional[str] = None,
                 rank: Optional[int] = None) -> ClassifyReport:
    algebra = Algebra(algebra)
    d = canonical(module_from(algebra, module, mu))
    integrable = d.is_integrable
    report = ClassifyReport(
        algebra=algebra.value,
        module=str(d),
        family=d.kind.value,
        integrable=integrable,
        five_type=five_type(d) if integrable and algebra is Algebra.SL else None,
        minuscule=is_minuscule(d),
        annihilator=str(annihilator_label(d)),
    )
    if rank is not None:
        if mu is None or algebra not in (Algebra.SL, Algebra.SP):
            raise ParseError("--rank needs --mu over sl or sp")
        report.finite_rank = _finite_rank(algebra, parse_seq(mu), rank)
    logger.info("classified {} over {}(inf) as {}", report.module, algebra.value, report.family)
    return report


def run_support(algebra: str, weight: str, module: Optional[str] = None, mu: Optional[str] = None) -> SupportReport:
    algebra = Algebra(algebra)
    d = module_from(algebra, module, mu)
    lam = parse_weight_like(weight)
    return SupportReport(algebra=algebra.value, module=str(d), weight=str(lam), member=lam in support_oracle(d))


def run_branch(family: str, mu: str, box: Optional[int] = None, window: Optional[int] = None) -> BranchReport:
    family = ModuleFamily(family)
    weight = Weight.parse(mu)
    check = verify_branch(family, weight, window)
    summands = branch(family, weight, box)
    return BranchReport(
        family=family.value,
        mu=str(weight),
        summands=[
            SummandReport(
                k=s.k,
                representative=str(s.representative),
                charge=str(s.charge),
                support_sample=[str(w) for w in s.sample(1)[:SAMPLE_SIZE]],
            )
            for s in summands
        ],
        checked=check.checked,
        discrepancies=[{k: str(v) for k, v in item.items()} for item in check.discrepancies],
        ok=check.ok,
    )


def _int_text(weight) -> str:
    return ",".join(str(x) for x in weight)


def run_degree(lam: str, nu: Optional[str] = None) -> DegreeReport:
    weight = int_weight(lam)
    report = DegreeReport(
        weight=_int_text(weight),
        dim=dim_fd(weight),
        deg=deg_fd(weight),
        weyl_dim=weyl_dimension(weight),
        argmax_weights=[_int_text(top) for top in argmax_weights(weight)],
    )
    if nu is not None:
        target = int_weight(nu)
        report.nu = _int_text(target)
        report.multiplicity = mult_fd(weight, target)
    return report


def run_hw(algebra: str, borel: str, module: Optional[str] = None, mu: Optional[str] = None) -> HwReport:
    """Limit test for module descriptors and tailed sequences; finite-rank test for plain weights"""
    algebra = Algebra(algebra)
    b = parse_borel(borel)
    if mu is not None and "tail=" not in mu:
        return _finite_hw(algebra, Weight.parse(mu), b)
    d = module_from(algebra, module, mu)
    verdict = hw_test_limit(d, b)
    return HwReport(
        algebra=algebra.value,
        module=str(canonical(d)),
        borel=str(b),
        status=verdict.status.value,
        weight=None if verdict.weight is None else str(verdict.weight),
        side=None if verdict.side is None else verdict.side.value,
        i0=verdict.i0,
        a=None if verdict.a is None else str(verdict.a),
        detail=verdict.detail,
    )


def _finite_hw(algebra: Algebra, weight: Weight, b) -> HwReport:
    if algebra is Algebra.SL:
        certificate = hw_test_Xsl(weight, b.restricted(weight.rank))
        name = f"X_sl{weight}"
    elif algebra is Algebra.SP:
        certificate = hw_test_Xsp(weight, b.restricted(weight.rank))
        name = f"X_sp{weight}"
    else:
        raise ParseError(f"no finite-rank X module over {algebra.value}")
    return HwReport(
        algebra=algebra.value,
        module=name,
        borel=str(b.restricted(weight.rank)),
        status="HighestWeight" if certificate else "Neither",
        weight=None if certificate is None else str(certificate.hw_weight),
        i0=None if certificate is None else certificate.i0,
        a=None if certificate is None or certificate.a is None else str(certificate.a),
        detail="" if certificate is None else certificate.kind,
    )


def run_iso(algebra: str, first: str, second: str) -> IsoReport:
    algebra = Algebra(algebra)
    d1, d2 = parse_module(first, algebra), parse_module(second, algebra)
    return IsoReport(algebra=algebra.value, first=str(d1), second=str(d2), isomorphic=iso_limit(d1, d2))


def run_annihilator(algebra: str, module: Optional[str] = None, mu: Optional[str] = None) -> AnnihilatorReport:
    algebra = Algebra(algebra)
    d = module_from(algebra, module, mu)
    return AnnihilatorReport(algebra=algebra.value, module=str(d), label=str(annihilator_label(d)))


def run_parse(text: str, kind: Optional[str] = None, algebra: str = "sl") -> ParseReport:
    found, value = parse_descriptor(text, None if kind is None else DescriptorKind(kind), Algebra(algebra))
    return ParseReport(kind=found.value, text=str(value))


def _integer(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"expected an integer: {text!r}", 0, text)


# argument readers and verifier per lemma
BOUNDS = {
    "lem0": ((int_weight, int_weight, int_weight), verify_lem0),
    "lem1": ((_integer, _integer), verify_lem1),
    "lem2": ((_integer, _integer, _integer), verify_lem2),
    "lem3": ((int_weight,), verify_lem3),
    "lem4": ((int_weight, _integer), verify_lem4),
    "lemma-deg": ((Weight.parse,), verify_lemma_deg),
}


def run_bound(lemma: str, arguments: List[str]) -> BoundResult:
    """Check one degree lower bound on the given arguments"""
    if lemma not in BOUNDS:
        raise ParseError(f"unknown bound {lemma!r}; choose from {', '.join(BOUNDS)}")
    readers, verifier = BOUNDS[lemma]
    if len(arguments) != len(readers):
        raise ParseError(f"{lemma} takes {len(readers)} arguments, got {len(arguments)}")
    report = verifier(*(read(text) for read, text in zip(readers, arguments)))
    result = BoundResult(lemma=lemma, arguments=list(arguments), lhs=report.lhs, rhs=report.rhs, holds=report.holds)
    if isinstance(report, LemmaDegReport):
        result.window_size = report.window_size
        result.witness = report.mismatch
    else:
        result.witness = report.witness
    logger.info("{}{}: {} >= {} is {}", lemma, tuple(arguments), result.lhs, result.rhs, result.holds)
    return result
