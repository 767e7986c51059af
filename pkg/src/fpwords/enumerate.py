"""Exhaustive enumeration of cyclic words and batch verification of the structure theorems."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .cancellation import PieceQuery, min_zone_tiling, validate_tiling
from .classify import (
    UP,
    FormAM,
    FormAXBX,
    OutOfScope,
    TheoremViolation,
    classify,
    has_up_decomposition,
    is_exceptional,
    lemma_up_criterion,
    match_form_axbx,
    two_length,
    verify_classification,
)
from .groups import GroupTable, cyclic, elementary_abelian_2
from .words import FreeProduct, SymClassRep, Word, is_proper_power

RAW_WORD_CAP = 10**7

BUCKETS = ("UP", "FormAM", "FormAXBX(b^2=1)", "Exceptional", "OutOfScope")


class EnumerationTooLarge(ValueError):
    def __init__(self, estimate: int):
        self.estimate = estimate
        super().__init__(f"enumeration would generate about {estimate:,} raw words (cap {RAW_WORD_CAP:,})")


@dataclass
class EnumSpec:
    g1: GroupTable
    g2: GroupTable
    max_length: int
    m: int = 3
    min_length: int = 2
    require_primitive: bool = True  # drop proper powers
    max_d2: Optional[int] = 2
    d2_exact: Optional[int] = None

    def __post_init__(self):
        if self.max_length < 2:
            raise ValueError("max_length must be at least 2")
        if self.m < 3:
            raise ValueError("m must be at least 3")

    def lengths(self) -> range:
        lo = max(2, self.min_length + self.min_length % 2)
        return range(lo, self.max_length + 1, 2)

    def free_product(self) -> FreeProduct:
        return FreeProduct(self.g1, self.g2)

    def accepts(self, fp: FreeProduct, w: Word) -> bool:
        if self.require_primitive and is_proper_power(w)[0]:
            return False
        d2 = two_length(fp, w).d2
        if self.max_d2 is not None and d2 > self.max_d2:
            return False
        if self.d2_exact is not None and d2 != self.d2_exact:
            return False
        return True

    def describe(self) -> dict:
        return {
            "G1": self.g1.kind,
            "G2": self.g2.kind,
            "min_length": self.min_length,
            "max_length": self.max_length,
            "m": self.m,
            "require_primitive": self.require_primitive,
            "max_d2": self.max_d2,
            "d2_exact": self.d2_exact,
        }


def raw_word_count(g1: GroupTable, g2: GroupTable, length: int) -> int:
    """Number of cyclically reduced words of the given even length."""
    return 2 * ((g1.size - 1) * (g2.size - 1)) ** (length // 2)


def estimate_raw_words(spec: EnumSpec) -> int:
    return sum(raw_word_count(spec.g1, spec.g2, L) for L in spec.lengths())


def raw_words(fp: FreeProduct, length: int) -> Iterator[Word]:
    """All cyclically reduced words of an even length, in lexicographic order."""
    if length < 2 or length % 2:
        return
    half = length // 2
    for first, second in ((1, 2), (2, 1)):
        a, b = fp.letters(first), fp.letters(second)
        for pairs in product(product(a, b), repeat=half):
            yield tuple(x for pair in pairs for x in pair)


def classes_of_length(fp: FreeProduct, spec: EnumSpec, length: int) -> tuple[int, list[SymClassRep]]:
    """Canonical class representatives of one length, plus the number of raw words accepted."""
    seen: dict[Word, int] = {}
    raw = 0
    for w in raw_words(fp, length):
        if not spec.accepts(fp, w):
            continue
        raw += 1
        if w in seen:
            continue
        orbit = fp.sym_closure(w)
        rep = min(orbit)
        for u in orbit:
            seen[u] = 0
        seen[rep] = len(orbit)
    reps = sorted(SymClassRep(w, k) for w, k in seen.items() if k)
    return raw, reps


def enumerate_classes(spec: EnumSpec) -> Iterator[SymClassRep]:
    """One canonical representative per symmetrized class, by length then rep order."""
    fp = spec.free_product()
    for L in spec.lengths():
        yield from classes_of_length(fp, spec, L)[1]


@dataclass
class LengthStats:
    words: int = 0
    classes: int = 0
    orbit_sum: int = 0
    histogram: dict = field(default_factory=lambda: dict.fromkeys(BUCKETS, 0))
    lemma_agree: int = 0
    lemma_disagree: int = 0

    def to_dict(self) -> dict:
        return {
            "words": self.words,
            "classes": self.classes,
            "orbit_sum": self.orbit_sum,
            "histogram": dict(self.histogram),
            "lemma_agree": self.lemma_agree,
            "lemma_disagree": self.lemma_disagree,
        }


@dataclass
class VerificationReport:
    spec: dict
    per_length: dict = field(default_factory=dict)  # length -> LengthStats
    lemma_criterion_without_up: list = field(default_factory=list)
    lemma_up_without_criterion: list = field(default_factory=list)
    tiling_failures: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def histogram(self) -> dict:
        total = dict.fromkeys(BUCKETS, 0)
        for st in self.per_length.values():
            for k, v in st.histogram.items():
                total[k] += v
        return total

    @property
    def classes(self) -> int:
        return sum(st.classes for st in self.per_length.values())

    @property
    def passed(self) -> bool:
        return not (self.violations or self.tiling_failures or self.lemma_criterion_without_up)

    def lemma_counts(self) -> tuple[int, int]:
        return (
            sum(st.lemma_agree for st in self.per_length.values()),
            sum(st.lemma_disagree for st in self.per_length.values()),
        )

    def to_dict(self) -> dict:
        agree, disagree = self.lemma_counts()
        return {
            "spec": self.spec,
            "per_length": {str(L): st.to_dict() for L, st in sorted(self.per_length.items())},
            "classes": self.classes,
            "histogram": self.histogram,
            "lemma": {
                "agree": agree,
                "disagree": disagree,
                "criterion_without_up": self.lemma_criterion_without_up,
                "up_without_criterion": self.lemma_up_without_criterion,
            },
            "tiling_failures": self.tiling_failures,
            "violations": self.violations,
            "passed": self.passed,
        }

    def summary(self) -> str:
        lines = [f"{self.spec['G1']} * {self.spec['G2']}, lengths {self.spec['min_length']}..{self.spec['max_length']}, m={self.spec['m']}"]
        lines.append(f"{'len':>4} {'words':>8} {'classes':>8} " + " ".join(f"{b:>16}" for b in BUCKETS) + f" {'lemma ok/bad':>13}")
        for L, st in sorted(self.per_length.items()):
            lines.append(
                f"{L:>4} {st.words:>8} {st.classes:>8} "
                + " ".join(f"{st.histogram[b]:>16}" for b in BUCKETS)
                + f" {st.lemma_agree:>6}/{st.lemma_disagree:<6}"
            )
        agree, disagree = self.lemma_counts()
        lines.append(
            f"lemma: {agree} agree, {len(self.lemma_criterion_without_up)} criterion-without-UP, "
            f"{len(self.lemma_up_without_criterion)} UP-without-criterion"
        )
        lines.append(f"tiling failures: {len(self.tiling_failures)}; violations: {len(self.violations)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _bucket(fp: FreeProduct, w: Word, c) -> str:
    if isinstance(c, OutOfScope):
        return "OutOfScope"
    if isinstance(c, UP):
        return "UP"
    if is_exceptional(fp, w)[0]:
        return "Exceptional"
    if isinstance(c, FormAM):
        return "FormAM"
    return "FormAXBX(b^2=1)" if c.b_order2 else "Exceptional"


def run_verification(
    spec: EnumSpec, *, theorem1: bool = True, lemma: bool = True, tiling: bool = True
) -> VerificationReport:
    """Enumerate every class allowed by ``spec`` and check the requested properties.

    theorem1: every in-scope class classifies with a witness that re-verifies.
    lemma: on two-length-1 classes, the criterion is compared with brute-force
    UP search; only criterion-without-UP counts as a failure, the converse is
    reported separately.
    tiling: every UP class has min_zone_tiling(R^m) >= 2m with a valid witness.
    """
    fp = spec.free_product()
    report = VerificationReport(spec.describe())
    for L in spec.lengths():
        raw, reps = classes_of_length(fp, spec, L)
        st = LengthStats(words=raw, classes=len(reps), orbit_sum=sum(c.orbit_size for c in reps))
        report.per_length[L] = st
        if st.orbit_sum != raw:
            report.violations.append({"kind": "incomplete", "length": L, "words": raw, "orbit_sum": st.orbit_sum})
        for cls in reps:
            w = cls.rep
            word = fp.format(w)
            c = None
            if theorem1 or tiling:
                try:
                    c = classify(fp, w)
                except TheoremViolation as e:
                    report.violations.append({"kind": "theorem1", "word": word, "d2": e.d2})
                    continue
                if not verify_classification(fp, w, c):
                    report.violations.append({"kind": "witness", "word": word, "tag": c.tag})
                st.histogram[_bucket(fp, w, c)] += 1
            if tiling and isinstance(c, UP):
                q = PieceQuery(fp, w, spec.m)
                t = min_zone_tiling(q)
                if t.d_min < 2 * spec.m or not validate_tiling(q, t):
                    report.tiling_failures.append({"word": word, "d_min": t.d_min})
            if lemma and two_length(fp, w).d2 == 1:
                crit, _ = lemma_up_criterion(fp, w)
                up = has_up_decomposition(fp, w)
                if crit == up:
                    st.lemma_agree += 1
                else:
                    st.lemma_disagree += 1
                    target = report.lemma_criterion_without_up if crit else report.lemma_up_without_criterion
                    target.append(word)
    return report


def verify_theorem1(spec: EnumSpec, *, tiling: bool = True) -> VerificationReport:
    return run_verification(spec, theorem1=True, lemma=False, tiling=tiling)


def verify_lemma_iff(spec: EnumSpec) -> VerificationReport:
    if spec.d2_exact != 1:
        spec = EnumSpec(**{**spec.__dict__, "d2_exact": 1})
    return run_verification(spec, theorem1=False, lemma=True, tiling=False)


@dataclass
class CounterexampleReport:
    n: int
    word: list
    d2: int
    up_decomposition: bool
    conjugation_form: Optional[list]  # [x, X, y] names if some rotation is x X y X^-1 with x^2 = 1
    classification: str
    passed: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def counterexample_family(n: int, g2: Optional[GroupTable] = None) -> CounterexampleReport:
    """Check the word a b_1 a b_2 ... a b_n over Z_2 * G2 with distinct involutions b_i.

    For n > 2 the word must have two-length n, no UP decomposition and no
    rotation x X y X^-1 with x an involution. For n = 2 the classifier must
    land on FormAXBX.
    """
    if n < 2:
        raise ValueError("family needs n >= 2")
    if g2 is None:
        g2 = elementary_abelian_2(max(1, math.ceil(math.log2(n + 1))))
    fp = FreeProduct(cyclic(2, "a"), g2)
    invs = g2.involutions()
    if len(invs) < n:
        raise ValueError(f"G2 has only {len(invs)} involutions, need {n}")
    a = fp.letters(1)[0]
    s = tuple(x for b in invs[:n] for x in (a, fp.reduce([(2, b)])[0]))
    d2 = two_length(fp, s).d2
    up = any(has_up_decomposition(fp, w) for w in (s, fp.invert(s)))
    form = match_form_axbx(fp, s)
    if form is None:
        form = match_form_axbx(fp, fp.invert(s))
    form_names = [fp.name(form.a), fp.format(form.x), fp.name(form.b)] if form else None
    try:
        tag = classify(fp, s).tag
    except TheoremViolation:
        tag = "TheoremViolation"
    if n > 2:
        passed = d2 == n and not up and form is None and tag == "OutOfScope"
    else:
        passed = d2 == 2 and tag == "FormAXBX"
    return CounterexampleReport(n, fp.format(s), d2, up, form_names, tag, passed)
