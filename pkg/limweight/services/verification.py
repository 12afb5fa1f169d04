"""
Randomized and golden self-checks, grouped in suites.

Every check draws from its own ``Random`` seeded with the run seed and the
check name, so a failing case is reproduced by rerunning the same suite with
the same seed whatever the thread count.
"""
import sys
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from multiprocessing.pool import ThreadPool
from random import Random
from typing import Callable, Dict, Iterable, List, Optional

from loguru import logger
from rich.console import Console
from rich.progress import BarColumn, Progress, TaskProgressColumn, TextColumn, TimeRemainingColumn

from limweight.branching import coherence_window, verify_branch
from limweight.classify import hw_test_Xsl, hw_test_Xsp, iso_Xsl, sim_sl, sim_sp
from limweight.core.config import settings
from limweight.core.config.constants import SUITES
from limweight.core.exceptions import LimweightError, ParseError, RankTooSmall
from limweight.degrees import (
    deg_fd,
    dim_fd,
    equal_size_pairs,
    verify_lem0,
    verify_lem1,
    verify_lem2,
    verify_lem3,
    verify_lem4,
    weyl_dimension,
)
from limweight.degrees.patterns import weight_multiplicities
from limweight.limits import (
    Algebra,
    HwStatus,
    LimitModuleDescriptor,
    ModuleKind,
    Side,
    annihilator_label,
    approx_equiv,
    classify_sl,
    finite_shadow,
    five_type,
    hw_test_limit,
    iso_limit,
    reconstruct_mu,
    spinor_equiv_B,
    spinor_equiv_D,
    support_oracle,
)
from limweight.realization import MatrixLieAlgebra, ModuleFamily, Monomial, XModule, basis_window, bracket_fidelity, singular_monomials
from limweight.rootdata import BorelDescriptor, Family, LieType, parse_borel, roots, weyl_group
from limweight.schemas import CheckOutcome, VerifyReport
from limweight.weights import HALF, SetDescriptor, Weight, WeightSeq, int_sets

from .sampling import (
    finite_flip,
    nearby_seq,
    random_borel,
    random_int_seq,
    random_seq,
    random_set,
    random_weight,
)

Counterexample = Optional[Dict[str, str]]
CheckFn = Callable[[Random, int], Counterexample]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    run: CheckFn
    # share of the case budget; 0 runs the check once
    scale: float = 1.0

    def cases(self, budget: float) -> int:
        if not self.scale:
            return 1
        return max(1, int(settings.VERIFY_CASES * budget * self.scale))


REGISTRY: List[Check] = []


def check(suite: str, name: str, scale: float = 1.0):
    def register(fn: CheckFn) -> CheckFn:
        REGISTRY.append(Check(suite, name, fn, scale))
        return fn
    return register


def _found(**items) -> Dict[str, str]:
    return {k: str(v) for k, v in items.items()}


# core


@check("core", "set-algebra-laws")
def _set_laws(rng: Random, cases: int) -> Counterexample:
    everything = SetDescriptor.everything()
    for _ in range(cases):
        a, b = random_set(rng), random_set(rng)
        laws = (
            (a | b).complement() == a.complement() & b.complement(),
            (a ^ b) ^ b == a,
            a - b == a & b.complement(),
            a | a.complement() == everything,
            (a ^ b).is_finite == a.differs_finitely(b),
        )
        if not all(laws):
            return _found(a=a, b=b, laws=laws)
    return None


@check("core", "partial-sums-inverse")
def _partial_sums(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        seq = random_int_seq(rng)
        if not seq.partial_sums().differences().same_as(seq):
            return _found(seq=seq, sums=seq.partial_sums())
    return None


@check("core", "integrality-classes")
def _int_sets(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        seq = random_seq(rng)
        integral, plus, minus = int_sets(seq)
        if not (plus & minus).is_empty or plus | minus != integral:
            return _found(seq=seq, integral=integral, plus=plus, minus=minus)
    return None


# rootdata


_ROOT_COUNTS = {
    Family.A: lambda n: n * (n + 1),
    Family.B: lambda n: 2 * n * n,
    Family.C: lambda n: 2 * n * n,
    Family.D: lambda n: 2 * n * (n - 1),
}

_WEYL_ORDERS = {
    Family.A: lambda n: factorial(n + 1),
    Family.B: lambda n: 2 ** n * factorial(n),
    Family.C: lambda n: 2 ** n * factorial(n),
    Family.D: lambda n: 2 ** (n - 1) * factorial(n),
}


def _ranks(family: Family, top: int = 4) -> Iterable[int]:
    return range(2 if family is Family.D else 1, top + 1)


@check("rootdata", "root-counts", scale=0)
def _root_counts(rng: Random, cases: int) -> Counterexample:
    for family, expected in _ROOT_COUNTS.items():
        for n in _ranks(family):
            found = len(roots(LieType(family, n)))
            if found != expected(n):
                return _found(type=LieType(family, n), found=found, expected=expected(n))
    return None


@check("rootdata", "positive-roots-are-half", scale=0.1)
def _positive_half(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        family = rng.choice(list(Family))
        n = rng.choice(list(_ranks(family)))
        lie_type = LieType(family, n)
        size = lie_type.index_count
        order = rng.sample(range(1, size + 1), size)
        sign = random_set(rng) | SetDescriptor.finite([order[-1]])
        borel = BorelDescriptor.from_permutation(order, sign)
        positive = borel.positive_roots(lie_type)
        if 2 * len(positive) != len(roots(lie_type)):
            return _found(type=lie_type, borel=borel, positive=len(positive))
    return None


@check("rootdata", "weyl-group-orders", scale=0)
def _weyl_orders(rng: Random, cases: int) -> Counterexample:
    for family, expected in _WEYL_ORDERS.items():
        for n in _ranks(family, 3):
            size = n + 1 if family is Family.A else n
            found = sum(1 for _ in weyl_group(family, size))
            if found != expected(n):
                return _found(type=LieType(family, n), found=found, expected=expected(n))
    return None


# realization


@check("realization", "bracket-fidelity", scale=0.02)
def _fidelity(rng: Random, cases: int) -> Counterexample:
    algebras = [MatrixLieAlgebra.gl(1), MatrixLieAlgebra.gl(2), MatrixLieAlgebra.sp(1), MatrixLieAlgebra.sp(2)]
    for _ in range(cases):
        algebra = rng.choice(algebras)
        exponents = [random_weight(rng, algebra.variables) for _ in range(2)]
        failures = bracket_fidelity(algebra, exponents)
        if failures:
            return _found(algebra=algebra, failure=failures[0])
    return None


@check("realization", "window-stays-in-class", scale=0.1)
def _window_class(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        if rng.random() < 0.5:
            module, related = XModule.sl(random_weight(rng, rng.randint(2, 3))), sim_sl
        else:
            module, related = XModule.sp(random_weight(rng, rng.randint(1, 2))), sim_sp
        for m in basis_window(module, 2):
            if not related(m.exponent, module.mu):
                return _found(module=module, monomial=m)
    return None


# classify


def _finite_orders(size: int) -> List[BorelDescriptor]:
    return [BorelDescriptor.from_permutation(p) for p in permutations(range(1, size + 1))]


@check("classify", "certificate-iff-singular", scale=0.05)
def _certificate_singular(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        mu = random_weight(rng, rng.randint(2, 3), generic_rate=0.3)
        module = XModule.sl(mu)
        window = basis_window(module, 2)
        for borel in _finite_orders(mu.rank):
            certificate = hw_test_Xsl(mu, borel)
            if certificate is not None:
                top = Monomial(certificate.hw_weight)
                if not singular_monomials(module, borel, [top]):
                    return _found(mu=mu, borel=borel, certificate=certificate)
            elif singular_monomials(module, borel, window):
                return _found(mu=mu, borel=borel, singular=singular_monomials(module, borel, window)[0])
    return None


@check("classify", "equivalence-relations")
def _sim_relations(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        rank = rng.randint(2, 4)
        mu = random_weight(rng, rank)
        shift = [rng.randint(-2, 2) for _ in range(rank - 1)]
        nu = mu + tuple(shift + [-sum(shift)])
        other = random_weight(rng, rank)
        if not sim_sl(mu, mu) or sim_sl(mu, other) != sim_sl(other, mu):
            return _found(mu=mu, other=other)
        if sim_sl(mu, nu) != (int_sets(mu)[1] == int_sets(nu)[1]):
            return _found(mu=mu, nu=nu)
        if iso_Xsl(mu, other) != sim_sl(mu, other):
            return _found(mu=mu, other=other, relation="iso_Xsl")
    return None


# branching


@check("branching", "branch-window", scale=0.02)
def _branch_window(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        if rng.random() < 0.5:
            family, mu = ModuleFamily.SL, random_weight(rng, rng.randint(2, 3))
        else:
            family, mu = ModuleFamily.SP, random_weight(rng, 3)
        report = verify_branch(family, mu, 2)
        if not report.ok:
            return _found(family=family.value, mu=mu, discrepancy=report.discrepancies[0])
    return None


@check("branching", "branch-known-weight", scale=0)
def _branch_known(rng: Random, cases: int) -> Counterexample:
    mu = Weight.of(-1, 1, 0)
    report = verify_branch(ModuleFamily.SL, mu)
    return None if report.ok else _found(mu=mu, discrepancy=report.discrepancies[0])


@check("branching", "limit-coherence", scale=0.02)
def _coherence(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        mu = random_seq(rng)
        n = rng.randint(2, 3)
        family = rng.choice((ModuleFamily.SL, ModuleFamily.SP))
        mismatches = coherence_window(family, mu.truncate(n), mu.truncate(n + 1), window=2)
        if mismatches:
            return _found(mu=mu, n=n, family=family.value, first=mismatches[0], count=len(mismatches))
    return None


# degrees


def _dominant(rng: Random, low: int = 2, high: int = 4, top: int = 3) -> tuple:
    return tuple(sorted((rng.randint(0, top) for _ in range(rng.randint(low, high))), reverse=True))


@check("degrees", "dimension-formula", scale=0.1)
def _dimension(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        lam = _dominant(rng)
        if dim_fd(lam) != weyl_dimension(lam):
            return _found(weight=lam, patterns=dim_fd(lam), weyl=weyl_dimension(lam))
        if sum(weight_multiplicities(lam).values()) != weyl_dimension(lam):
            return _found(weight=lam, multiplicities="sum differs from the dimension")
    return None


@check("degrees", "interlacing-pair-bound", scale=0.5)
def _interlacing_pairs(rng: Random, cases: int) -> Counterexample:
    """Degree of lambda against two equal-size weights of its first GT row"""
    checked = 0
    while checked < cases:
        lam = _dominant(rng, 3, 4)
        pairs = equal_size_pairs(lam)
        if not pairs:
            continue
        first, second = rng.choice(pairs)
        report = verify_lem0(lam, first, second)
        if not report.holds:
            return _found(weight=lam, first=first, second=second, lhs=report.lhs, rhs=report.rhs)
        checked += 1
    return None


@check("degrees", "degree-bounds", scale=0.05)
def _degree_bounds(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        x, ell, k = rng.randint(2, 4), rng.randint(2, 3), rng.randint(1, 2)
        reports = [("lem1", verify_lem1(x, ell)), ("lem2", verify_lem2(x, k, ell - 1))]
        lam = _dominant(rng, 3, 4)
        if lam[0] - lam[-1] > 1:
            reports.append(("lem3", verify_lem3(lam)))
        head = tuple(sorted((rng.randint(1, 3) for _ in range(2)), reverse=True))
        if head[0] >= 2:
            reports.append(("lem4", verify_lem4(head, rng.randint(0, 2))))
        for name, report in reports:
            if not report.holds:
                return _found(bound=name, lhs=report.lhs, rhs=report.rhs, witness=report.witness)
    return None


# limits


def _random_descriptor(rng: Random) -> LimitModuleDescriptor:
    shape = rng.random()
    if shape < 0.5:
        return classify_sl(random_seq(rng))[0]
    if shape < 0.7:
        return LimitModuleDescriptor.exterior(random_set(rng, semi_infinite=True))
    if shape < 0.85:
        return LimitModuleDescriptor.spinor(random_set(rng), rng.choice("BD"))
    return LimitModuleDescriptor.x_sp(random_int_seq(rng, -2, 2))


def _neighbour(rng: Random, d: LimitModuleDescriptor) -> LimitModuleDescriptor:
    """A descriptor of the same shape whose data differs by a finite move"""
    if d.kind is ModuleKind.SEMI_INF_EXTERIOR:
        return LimitModuleDescriptor.exterior(finite_flip(rng, d.subset))
    if d.kind in (ModuleKind.SPINOR_B, ModuleKind.SPINOR_D):
        cartan = "B" if d.kind is ModuleKind.SPINOR_B else "D"
        return LimitModuleDescriptor.spinor(finite_flip(rng, d.subset), cartan)
    if d.kind is ModuleKind.X_SP:
        return LimitModuleDescriptor.x_sp(nearby_seq(rng, d.seq))
    mu = reconstruct_mu(d)
    return classify_sl(nearby_seq(rng, mu))[0]


def _sample_weight(rng: Random, d: LimitModuleDescriptor) -> WeightSeq:
    """A weight near the support of ``d``"""
    if d.subset is not None:
        locus = finite_flip(rng, d.subset)
        if d.kind is ModuleKind.SEMI_INF_EXTERIOR:
            return WeightSeq.indicator(locus)
        return WeightSeq.indicator(locus, HALF, -HALF)
    mu = reconstruct_mu(d)
    if mu is None:
        mu = d.seq if d.seq is not None else WeightSeq.constant(0)
    return nearby_seq(rng, mu)


@check("limits", "almost-equal-sets")
def _approx(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        a = random_set(rng, semi_infinite=True)
        b = finite_flip(rng, a)
        if not (approx_equiv(a, b) and approx_equiv(b, a)) or approx_equiv(a, a.complement()):
            return _found(a=a, b=b)
        if approx_equiv(a, b, balanced=True) != ((a - b).cardinality() == (b - a).cardinality()):
            return _found(a=a, b=b, relation="balanced")
    return None


@check("limits", "spinor-relations")
def _spinor_relations(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        a = random_set(rng)
        b = finite_flip(rng, a) if rng.random() < 0.8 else random_set(rng)
        if spinor_equiv_D(a, b) and not spinor_equiv_B(a, b):
            return _found(a=a, b=b)
        if spinor_equiv_B(a, b) != a.differs_finitely(b):
            return _found(a=a, b=b, relation="B")
    return None


@check("limits", "classification-retraction")
def _retraction(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        mu = random_seq(rng)
        d, shape = classify_sl(mu)
        back = reconstruct_mu(d)
        if back is None or not sim_sl(back, mu) or not iso_limit(classify_sl(back)[0], d):
            return _found(mu=mu, module=d, back=back)
        if shape is not None and five_type(d) != shape:
            return _found(mu=mu, module=d, shape=shape, five_type=five_type(d))
    return None


@check("limits", "isomorphic-modules-share-support", scale=0.5)
def _iso_support(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        d1 = _random_descriptor(rng)
        d2 = _neighbour(rng, d1)
        if not iso_limit(d1, d2):
            continue
        first, second = support_oracle(d1), support_oracle(d2)
        for _ in range(4):
            lam = _sample_weight(rng, d1)
            if (lam in first) != (lam in second):
                return _found(first=d1, second=d2, weight=lam)
        if annihilator_label(d1) != annihilator_label(d2):
            return _found(first=d1, second=d2, annihilator="labels differ")
    return None


@check("limits", "highest-weight-in-support", scale=0.5)
def _hw_support(rng: Random, cases: int) -> Counterexample:
    for _ in range(cases):
        d = _random_descriptor(rng)
        borel = random_borel(rng, signed=d.algebra is not Algebra.SL)
        verdict = hw_test_limit(d, borel)
        if verdict.is_highest_weight and verdict.weight not in support_oracle(d):
            return _found(module=d, borel=borel, weight=verdict.weight)
    return None


# Golden cases


def _expect(found, expected, **context) -> Counterexample:
    if found == expected:
        return None
    return _found(found=found, expected=expected, **context)


@check("paper-examples", "one-generic-entry-dense-tail", scale=0)
def _golden_generic(rng: Random, cases: int) -> Counterexample:
    d = LimitModuleDescriptor.x_sl(WeightSeq.of([-1, -1, "g0"], 0))
    borel = parse_borel("[seq(1,2,3); dense{4,...}]")
    verdict = hw_test_limit(d, borel)
    found = (verdict.status, verdict.side, verdict.i0, str(verdict.a))
    miss = _expect(found, (HwStatus.HIGHEST_WEIGHT, Side.ONE_SIDED, 3, "g0"), borel=borel)
    if miss:
        return miss
    return _expect(hw_test_limit(d, BorelDescriptor.natural()).status, HwStatus.HIGHEST_WEIGHT, borel="natural")


@check("paper-examples", "two-sided-highest-weight", scale=0)
def _golden_two_sided(rng: Random, cases: int) -> Counterexample:
    d = LimitModuleDescriptor.x_sl(WeightSeq.indicator(SetDescriptor.odds(), -1, 0))
    verdict = hw_test_limit(d, parse_borel("[asc{odds}; desc{evens}]"))
    return _expect((verdict.status, verdict.side), (HwStatus.HIGHEST_WEIGHT, Side.TWO_SIDED))


@check("paper-examples", "finite-rank-shadow", scale=0)
def _golden_shadow(rng: Random, cases: int) -> Counterexample:
    """Truncations of a highest weight module stay highest weight with coherent weights"""
    examples = (
        (WeightSeq.of([-1, -1, "g0"], 0), BorelDescriptor.natural()),
        (WeightSeq.indicator(SetDescriptor.odds(), -1, 0), parse_borel("[asc{odds}; desc{evens}]")),
    )
    for mu, borel in examples:
        if not hw_test_limit(LimitModuleDescriptor.x_sl(mu), borel).is_highest_weight:
            return _found(mu=mu, borel=borel, expected="HighestWeight")
        certificates = finite_shadow(mu, borel, range(2, 5))
        if any(c is None for c in certificates):
            return _found(mu=mu, borel=borel, certificates=certificates)
        for low, high in zip(certificates, certificates[1:]):
            if high.hw_weight.head(low.hw_weight.rank) != low.hw_weight:
                return _found(mu=mu, low=low, high=high)
    return None


@check("paper-examples", "drifting-tail-order-dependence", scale=0)
def _golden_drift(rng: Random, cases: int) -> Counterexample:
    d = LimitModuleDescriptor.x_sl(WeightSeq.of([1, 2, "g0"], -1, -1))
    natural = hw_test_limit(d, BorelDescriptor.natural()).status
    reversed_order = hw_test_limit(d, BorelDescriptor.reversed_natural()).status
    return _expect((natural, reversed_order), (HwStatus.NEITHER, HwStatus.PSEUDO))


@check("paper-examples", "sp-constant-sequence", scale=0)
def _golden_sp(rng: Random, cases: int) -> Counterexample:
    d = LimitModuleDescriptor.x_sp(WeightSeq.constant(1))
    verdict = hw_test_limit(d, BorelDescriptor.natural(SetDescriptor.empty()))
    return _expect(verdict.status, HwStatus.PSEUDO)


@check("paper-examples", "sp-fixed-borel", scale=0)
def _golden_sp_fixed(rng: Random, cases: int) -> Counterexample:
    for n in range(1, 4):
        certificate = hw_test_Xsp(Weight.zero(n), BorelDescriptor.fixed_sp(n))
        found = None if certificate is None else certificate.hw_weight
        miss = _expect(found, Weight.constant(n, HALF), n=n)
        if miss:
            return miss
    return None


@check("paper-examples", "sl2-exceptional-pair", scale=0)
def _golden_rank(rng: Random, cases: int) -> Counterexample:
    mu, nu = Weight.zero(2), Weight.constant(2, -1)
    try:
        iso_Xsl(mu, nu, 1, as_gl=False)
    except RankTooSmall:
        return _expect(iso_Xsl(Weight.zero(3), Weight.constant(3, -1), 2, as_gl=False), True)
    return _found(mu=mu, nu=nu, expected="RankTooSmall")


@check("paper-examples", "generic-tail-classification", scale=0)
def _golden_classify(rng: Random, cases: int) -> Counterexample:
    d, shape = classify_sl(WeightSeq.of([1, 2, "g0"], -1))
    return _expect((d.kind, shape, str(annihilator_label(d))), (ModuleKind.X_SL, None, "I(1,0;[];[])"))


@check("paper-examples", "degree-of-adjoint", scale=0)
def _golden_degree(rng: Random, cases: int) -> Counterexample:
    return _expect((dim_fd((2, 1, 0)), deg_fd((2, 1, 0))), (8, 2))


# Runner


def _run(item) -> CheckOutcome:
    entry, seed, budget = item
    rng = Random(f"{seed}:{entry.name}")
    cases = entry.cases(budget)
    try:
        counterexample = entry.run(rng, cases)
    except LimweightError as e:
        logger.warning("{}/{} raised {}: {}", entry.suite, entry.name, type(e).__name__, e)
        return CheckOutcome(suite=entry.suite, name=entry.name, ok=False, cases=cases,
                            detail=f"{type(e).__name__}: {e}")
    if counterexample is not None:
        logger.warning("{}/{} failed on {}", entry.suite, entry.name, counterexample)
    return CheckOutcome(
        suite=entry.suite,
        name=entry.name,
        ok=counterexample is None,
        cases=cases,
        counterexample=counterexample,
    )


def select_checks(suites: Optional[Iterable[str]] = None) -> List[Check]:
    wanted = list(suites or ())
    if not wanted or "all" in wanted:
        wanted = list(SUITES)
    unknown = [s for s in wanted if s not in SUITES]
    if unknown:
        raise ParseError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)}")
    return [c for c in REGISTRY if c.suite in wanted]


def run_verification(
    suites: Optional[Iterable[str]] = None,
    seed: Optional[int] = None,
    budget: float = 1.0,
    threads: Optional[int] = None,
) -> VerifyReport:
    """Run every registered check of ``suites`` on a thread pool"""
    seed = settings.SEED if seed is None else seed
    checks = select_checks(suites)
    names = sorted({c.suite for c in checks}, key=SUITES.index)
    console = Console(file=sys.stderr)
    pool = ThreadPool(threads or settings.THREADS)
    outcomes = []
    with Progress(
        TextColumn("[bold blue]Verifying:", justify="right"),
        BarColumn(bar_width=None),
        "[progress.percentage][{task.completed}/{task.total}]",
        TaskProgressColumn(),
        TimeRemainingColumn(),
        console=console,
        disable=not console.is_terminal,
    ) as progress:
        task_id = progress.add_task("verify", total=len(checks))
        for outcome in pool.imap_unordered(_run, ((c, seed, budget) for c in checks)):
            outcomes.append(outcome)
            progress.update(task_id, advance=1)
        progress.stop_task(task_id)
    pool.close()
    pool.join()
    outcomes.sort(key=lambda o: (SUITES.index(o.suite), o.name))
    passed = sum(1 for o in outcomes if o.ok)
    logger.info("verify seed={} budget={}: {} passed, {} failed", seed, budget, passed, len(outcomes) - passed)
    return VerifyReport(
        suites=names,
        seed=seed,
        budget=budget,
        passed=passed,
        failed=len(outcomes) - passed,
        outcomes=outcomes,
    )
