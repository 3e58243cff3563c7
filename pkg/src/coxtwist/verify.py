"""Verification suites: independent oracles and exhaustive structure checks.

The Bruhat oracle here is built straight from the definition (transitive
closure of x -> x*t over reflections t with a length increase) and never
calls core.bruhat_leq, so the two sides of the oracle-agreement suite stay
independent.  The remaining suites replay the structural guarantees of the
twisted and coset modules over whole groups, recording every counterexample
as a tuple of serialized canonical words.

run_suite accepts a config document with a ``corrupt`` key used as a
negative-control fixture in tests: it deterministically flips a sparse set
of oracle answers so that a healthy pipeline must report failures.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import core, cosets, twisted
from .core import CoxeterSystem, Element
from .cosets import TwistedSubgroup
from .descriptions import GroupDescription, RealizedCase
from .errors import CapExceeded, CoxeterError
from .twisted import GeneratorParity

DEFAULT_SEED = 271828
EXHAUSTIVE_LIMIT = 48
SAMPLE_PAIRS = 1000


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one suite on one system."""

    suite: str
    system: str
    checked: int
    failures: tuple[tuple[str, ...], ...]

    @property
    def passed(self) -> int:
        return self.checked - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerificationRun:
    """All reports of one run_suite invocation."""

    reports: tuple[VerificationReport, ...]
    seed: int

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def total_checked(self) -> int:
        return sum(r.checked for r in self.reports)

    @property
    def total_failed(self) -> int:
        return sum(len(r.failures) for r in self.reports)

    def to_records(self) -> dict:
        return {
            "seed": self.seed,
            "suites": [
                {
                    "suite": r.suite,
                    "system": r.system,
                    "checked": r.checked,
                    "passed": r.passed,
                    "failures": [list(f) for f in r.failures],
                }
                for r in self.reports
            ],
        }

    def to_text(self) -> str:
        rows = [("suite", "system", "checked", "passed", "failed")]
        for r in self.reports:
            rows.append((r.suite, r.system, str(r.checked), str(r.passed), str(len(r.failures))))
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = [f"seed: {self.seed}"]
        for row in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        for r in self.reports:
            if r.failures:
                lines.append(f"counterexamples for {r.suite} on {r.system}:")
                for f in r.failures[:5]:
                    lines.append("  " + " | ".join(f))
                if len(r.failures) > 5:
                    lines.append(f"  ... and {len(r.failures) - 5} more")
        lines.append(
            f"total: {self.total_checked} checked, {self.total_failed} failed"
        )
        return "\n".join(lines) + "\n"


# -- Bruhat oracle --------------------------------------------------------


def _below_masks(sys: CoxeterSystem) -> list[int]:
    """below[i] is the bitmask of indices u with u <= element i, computed as
    the transitive closure of the reflection-ascent relation."""
    if sys._bruhat_below is not None:
        return sys._bruhat_below
    if not sys.complete:
        raise CapExceeded("the Bruhat oracle needs a fully enumerated group")
    ref_words = [r.elt.word for r in core.reflections(sys)]
    words = sys.words
    below = [0] * sys.size
    for i in range(sys.size):
        mask = 1 << i
        li = len(words[i])
        for rw in ref_words:
            j = sys._walk(i, rw)
            if len(words[j]) < li:
                mask |= below[j]
        below[i] = mask
    sys._bruhat_below = below
    return below


def oracle_bruhat(sys: CoxeterSystem, u: Element, w: Element) -> bool:
    """Definitional Bruhat comparison, independent of core.bruhat_leq."""
    below = _below_masks(sys)
    return bool((below[w.index] >> u.index) & 1)


# -- individual checks ----------------------------------------------------


def check_oracle_agreement(
    sys: CoxeterSystem,
    label: str = "",
    seed: int = DEFAULT_SEED,
    corrupt: str | None = None,
) -> VerificationReport:
    """bruhat_leq against the oracle: every pair for groups of order at most
    48, otherwise a fixed-seed sample of ordered pairs."""
    below = _below_masks(sys)
    n = sys.size
    if n <= EXHAUSTIVE_LIMIT:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLE_PAIRS)]
    failures = []
    for iu, iw in pairs:
        expected = bool((below[iw] >> iu) & 1)
        if corrupt == "bruhat-oracle" and iu != iw and (iu + iw) % 3 == 1:
            expected = not expected
        got = core.bruhat_leq(sys.element(iu), sys.element(iw))
        if got != expected:
            failures.append((sys.element(iu).word_string(), sys.element(iw).word_string()))
    return VerificationReport("bruhat-oracle-agreement", label, len(pairs), tuple(failures))


def check_lemma_commuting_reflections(sys: CoxeterSystem, label: str = "") -> VerificationReport:
    """Distinct commuting reflections never invert each other."""
    refs = [r.elt for r in core.reflections(sys)]
    checked = 0
    failures = []
    for a in range(len(refs)):
        for b in range(len(refs)):
            if a == b:
                continue
            t, t2 = refs[a], refs[b]
            if core.multiply(t, t2) != core.multiply(t2, t):
                continue
            checked += 1
            # t in N(t2) would mean len(t2 * t) < len(t2)
            if core.multiply(t2, t).length < t2.length:
                failures.append((t.word_string(), t2.word_string()))
    return VerificationReport("commuting-reflection-inversions", label, checked, tuple(failures))


def check_lemma_long_gen(sys: CoxeterSystem, sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """A length ascent by a twisted generator is a Bruhat ascent."""
    checked = 0
    failures = []
    for g in sub.gens:
        for i in range(sys.size):
            u = sys.element(i)
            ux = core.multiply(u, g.elt)
            if ux.length <= u.length:
                continue
            checked += 1
            if not core.bruhat_leq(u, ux):
                failures.append((u.word_string(), g.elt.word_string()))
    return VerificationReport("ascent-implies-bruhat", label, checked, tuple(failures))


def check_lemma_corr(sys: CoxeterSystem, sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """If u <= w and the twisted generator x keeps the length of w, then u
    or u*x stays dominated by w*x without growing."""
    below = _below_masks(sys)
    words = sys.words
    checked = 0
    failures = []
    for g in sub.gens:
        gw = g.elt.word
        for iw in range(sys.size):
            iwx = sys._walk(iw, gw)
            if len(words[iwx]) != len(words[iw]):
                continue
            dominated = below[iw]
            target = below[iwx]
            easy = dominated & target
            checked += easy.bit_count()
            rest = dominated & ~target
            while rest:
                lsb = rest & -rest
                iu = lsb.bit_length() - 1
                rest ^= lsb
                checked += 1
                iux = sys._walk(iu, gw)
                if len(words[iux]) <= len(words[iu]) and (target >> iux) & 1:
                    continue
                failures.append(
                    (
                        sys.element(iu).word_string(),
                        sys.element(iw).word_string(),
                        g.elt.word_string(),
                    )
                )
    return VerificationReport("equal-length-transfer", label, checked, tuple(failures))


def check_prop_additivity(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """Plain length is additive along twisted reduced words."""
    failures = []
    for z in sub.elements:
        try:
            word = twisted.twisted_reduced_word(sub, z)
            if sum(g.elt.length for g in word) != z.length:
                failures.append((z.word_string(),))
        except CoxeterError:
            failures.append((z.word_string(),))
    return VerificationReport("length-additivity", label, len(sub.elements), tuple(failures))


def check_generator_parity(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """Twisted generators split into even elements and odd reflections."""
    failures = []
    for g in sub.gens:
        odd = g.elt.length % 2 == 1
        if (g.parity_class is GeneratorParity.ODD) != odd or core.is_reflection(g.elt) != odd:
            failures.append((g.elt.word_string(),))
    return VerificationReport("generator-parity", label, len(sub.gens), tuple(failures))


def check_fixed_subgroup_equality(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """The closure of the twisted generators equals the fixed-point filter
    of the parabolic W_L, checked element by element."""
    sys = sub.system
    theta = sub.theta
    gen_elts = [sys.element(sys._table[0][s]) for s in sorted(theta.L)]
    ball = core.enumerate_ball(sys, gen_elts)
    if not ball.complete:
        raise CapExceeded("W_L did not close within the enumerated region")
    failures = []
    member = sub._index_set
    ball_idx = set()
    for w in ball.elements:
        ball_idx.add(w.index)
        if twisted.is_fixed(theta, w) != (w.index in member):
            failures.append((w.word_string(),))
    for z in sub.elements:
        if z.index not in ball_idx:
            failures.append((z.word_string(),))
    return VerificationReport(
        "fixed-subgroup-equality", label, len(ball.elements), tuple(failures)
    )


def check_coset_partition(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """Cosets of the fixed subgroup tile the group without overlap."""
    sys = sub.system
    analyses = cosets.all_cosets(sub)
    seen: set[int] = set()
    failures = []
    for a in analyses:
        if len(a.members) != sub.order:
            failures.append((a.rep.word_string(), "size"))
        overlap = seen.intersection(w.index for w in a.members)
        if overlap:
            failures.append((a.rep.word_string(), "overlap"))
        seen.update(w.index for w in a.members)
    if len(seen) != sys.size:
        failures.append(("partition", "union"))
    return VerificationReport("coset-partition", label, len(analyses), tuple(failures))


def check_bruhat_minimal_equality(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """Minimal length in a coset coincides with Bruhat minimality."""
    sys = sub.system
    below = _below_masks(sys)
    checked = 0
    failures = []
    for a in cosets.all_cosets(sub):
        min_idx = {w.index for w in a.min_set}
        for w in a.members:
            checked += 1
            bruhat_minimal = not any(
                v.index != w.index and (below[w.index] >> v.index) & 1 for v in a.members
            )
            if bruhat_minimal != (w.index in min_idx):
                failures.append((a.rep.word_string(), w.word_string()))
    return VerificationReport("bruhat-minimal-equality", label, checked, tuple(failures))


def check_minimal_chains(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """Any two minimal members are linked through the minimal set."""
    checked = 0
    failures = []
    for a in cosets.all_cosets(sub):
        for u in a.min_set:
            for v in a.min_set:
                if u == v:
                    continue
                checked += 1
                try:
                    cosets.connect_minimals(sub, u, v)
                except CoxeterError:
                    failures.append((u.word_string(), v.word_string()))
    return VerificationReport("minimal-chains", label, checked, tuple(failures))


def check_step_dichotomy(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """From a minimal element, every twisted-word step keeps the length
    (even generators only) or ascends in the Bruhat order."""
    checked = 0
    failures = []
    for a in cosets.all_cosets(sub):
        for u in a.min_set:
            for z in sub.elements:
                checked += 1
                try:
                    cosets.escalation_trace(sub, u, z)
                except CoxeterError:
                    failures.append((u.word_string(), z.word_string()))
    return VerificationReport("step-dichotomy", label, checked, tuple(failures))


def check_dominated_search(sub: TwistedSubgroup, label: str = "") -> VerificationReport:
    """The constructive dominated-minimal witness matches exhaustive search."""
    sys = sub.system
    below = _below_masks(sys)
    checked = 0
    failures = []
    for a in cosets.all_cosets(sub):
        for x in a.members:
            checked += 1
            exhaustive = {v.index for v in a.min_set if (below[x.index] >> v.index) & 1}
            try:
                w = cosets.dominated_minimal(sub, x)
            except CoxeterError:
                failures.append((x.word_string(), "construction"))
                continue
            if not exhaustive or w.index not in exhaustive:
                failures.append((x.word_string(), w.word_string()))
    return VerificationReport("dominated-minimal-search", label, checked, tuple(failures))


# -- suite runner ---------------------------------------------------------

SUITE_NAMES = (
    "fixed-subgroup-equality",
    "generator-parity",
    "length-additivity",
    "coset-partition",
    "bruhat-minimal-equality",
    "minimal-chains",
    "step-dichotomy",
    "dominated-minimal-search",
    "ascent-implies-bruhat",
    "equal-length-transfer",
    "commuting-reflection-inversions",
    "bruhat-oracle-agreement",
)


def _run_one(name: str, case: RealizedCase, label: str, seed: int, corrupt: str | None) -> VerificationReport:
    sys, sub = case.system, case.subgroup
    if name == "fixed-subgroup-equality":
        return check_fixed_subgroup_equality(sub, label)
    if name == "generator-parity":
        return check_generator_parity(sub, label)
    if name == "length-additivity":
        return check_prop_additivity(sub, label)
    if name == "coset-partition":
        return check_coset_partition(sub, label)
    if name == "bruhat-minimal-equality":
        return check_bruhat_minimal_equality(sub, label)
    if name == "minimal-chains":
        return check_minimal_chains(sub, label)
    if name == "step-dichotomy":
        return check_step_dichotomy(sub, label)
    if name == "dominated-minimal-search":
        return check_dominated_search(sub, label)
    if name == "ascent-implies-bruhat":
        return check_lemma_long_gen(sys, sub, label)
    if name == "equal-length-transfer":
        return check_lemma_corr(sys, sub, label)
    if name == "commuting-reflection-inversions":
        return check_lemma_commuting_reflections(sys, label)
    if name == "bruhat-oracle-agreement":
        return check_oracle_agreement(sys, label, seed=seed, corrupt=corrupt)
    raise ValueError(f"unknown suite {name!r}")


def default_config() -> dict:
    """The bundled verification config: small twisted cases plus F4."""
    cases = [
        {"name": "A1xA1 swap", "type": ["A1", "A1"], "theta": [[1, 2]]},
        {"name": "A2 swap", "type": "A2", "theta": [[1, 2]]},
        {"name": "A3 swap", "type": "A3", "theta": [[1, 3]]},
        {"name": "B2 identity", "type": "B2"},
    ]
    for m in range(2, 9):
        cases.append({"name": f"I2({m}) swap", "type": f"I2({m})", "theta": [[1, 2]]})
    cases.append({"name": "A2xA2 swap", "type": ["A2", "A2"], "theta": [[1, 3], [2, 4]]})
    cases.append({"name": "F4 swap", "type": "F4", "theta": [[1, 4], [2, 3]]})
    return {"seed": DEFAULT_SEED, "cases": cases}


def run_suite(config: dict | None = None) -> VerificationRun:
    """Run the configured suites over the configured systems.

    Errors inside a suite become failure records; config problems raise.
    """
    if config is None:
        config = default_config()
    seed = config.get("seed", DEFAULT_SEED)
    corrupt = config.get("corrupt")
    reports = []
    for case_doc in config["cases"]:
        case_doc = dict(case_doc)
        suites = case_doc.pop("suites", None) or SUITE_NAMES
        label = case_doc.get("name") or "case"
        description = GroupDescription.from_dict(case_doc)
        case = description.build()
        for suite_name in suites:
            try:
                reports.append(_run_one(suite_name, case, label, seed, corrupt))
            except CoxeterError as e:
                reports.append(
                    VerificationReport(suite_name, label, 0, ((f"error: {e}",),))
                )
    return VerificationRun(reports=tuple(reports), seed=seed)
