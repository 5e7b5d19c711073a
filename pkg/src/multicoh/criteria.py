"""Cohomological splitting criteria for line bundle sums, and their audits.

Each criterion pairs a vanishing hypothesis with a splitting conclusion.
The hypothesis is quantified over the admissible tuples (i, j):

    1 <= i <= dim X - 1,   -i <= j_1 + ... + j_s <= 0,   -n_k <= j_k <= 0,

asking H^i(E(j + t*(1, ..., 1))) = 0 for every integer t, except on a
finite exceptional set of tuples where the allowed summands themselves
have cohomology.  The conclusions allow summands O(l*(1,...,1) + c*e_k)
with a per-axis cap on the excess c: cap 2 on every axis for the fixed
criterion (thm12), a caller-chosen cap vector r with 0 <= r_k <= n_k for
the parametrized one (thm13).

The exceptional set is computed from the allowed forms themselves: a
summand with excess c >= 1 on axis k has its cohomology concentrated in
degree i = dim X - n_k, at twists j with j_l - j_k <= c - n_l - 1 for
every l != k.  On two factors this reduces to the four classical tuples
(n_1, -n_1, 0), (n_1, -n_1+1, 0), (n_2, 0, -n_2), (n_2, 0, -n_2+1) for
caps (2, 2), which is the regression anchor; the same rule makes the
only-if direction exact on any number of factors.

The balanced-power criterion (lemma14) lives on (P^n)^s and bounds the
pairwise gaps of every summand degree by n.

desk_scale_audit enumerates every canonical bundle in a degree box up to
a rank cap and cross-tabulates hypothesis against conclusion, reporting
every mismatch verbatim.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from .core import (
    Degree,
    InputError,
    LineBundleSum,
    Shape,
    _as_shape,
    _check_vector,
    bundle_to_json,
    nonvanishing_twist_intervals,
    sum_cohomology_dim,
)

AUDIT_GUARD = 10_000_000


class HypothesisDomainError(InputError):
    """The bundle's shape is outside the criterion's domain."""

    def __init__(self, message: str):
        super().__init__("E_DOMAIN", message)


class AuditGuardError(InputError):
    """The requested enumeration exceeds the desk-scale guard."""

    def __init__(self, message: str):
        super().__init__("E_GUARD", message)


@lru_cache(maxsize=None)
def admissible_tuples(shape: Shape) -> tuple[tuple[int, Degree], ...]:
    """All (i, j) in the admissible region, sorted by (i, j)."""
    out = []
    total = shape.total_dim
    for j in product(*[range(-n, 1) for n in shape.dims]):
        sj = sum(j)
        for i in range(max(1, -sj), total):
            out.append((i, j))
    out.sort()
    return tuple(out)


def is_admissible(shape, i: int, j) -> bool:
    shape = _as_shape(shape)
    j = _check_vector(shape, j, "twist")
    if not 1 <= i <= shape.total_dim - 1:
        return False
    if not -i <= sum(j) <= 0:
        return False
    return all(-n <= x <= 0 for x, n in zip(j, shape.dims))


@lru_cache(maxsize=None)
def exceptional_tuples(shape: Shape, caps: tuple[int, ...]) -> frozenset[tuple[int, Degree]]:
    """Admissible tuples where the allowed summand forms have cohomology.

    For axis k with cap_k >= 1 these sit at i = dim X - n_k, at twists j
    with j_l - j_k <= cap_k - n_l - 1 for all l != k.  Empty for an axis
    with cap 0; monotone in the caps.
    """
    dims = shape.dims
    total = shape.total_dim
    out = set()
    for i, j in admissible_tuples(shape):
        for k, cap in enumerate(caps):
            if cap < 1 or i != total - dims[k]:
                continue
            if all(j[l] - j[k] <= cap - dims[l] - 1 for l in range(len(dims)) if l != k):
                out.add((i, j))
                break
    return frozenset(out)


@dataclass(frozen=True)
class ViolationReport:
    """Nonvanishing found outside the exceptional set: rows (i, j, t, dim)."""

    shape: Shape
    rows: tuple[tuple[int, Degree, int, int], ...] = field(default=())

    @property
    def empty(self) -> bool:
        return not self.rows

    def to_rows(self) -> list[dict]:
        return [{"i": i, "j": list(j), "t": t, "dim": dim} for i, j, t, dim in self.rows]


def _criterion_violations(E: LineBundleSum, caps: tuple[int, ...]) -> ViolationReport:
    shape = E.shape
    skip = exceptional_tuples(shape, caps)
    rows = []
    for i, j in admissible_tuples(shape):
        if (i, j) in skip:
            continue
        hits = nonvanishing_twist_intervals(E, j, i)
        for t in hits.values():
            d = tuple(x + t for x in j)
            rows.append((i, j, t, sum_cohomology_dim(E, d, i)))
    return ViolationReport(shape, tuple(rows))


def thm12_violations(E: LineBundleSum) -> ViolationReport:
    """Hypothesis check with every axis capped at excess 2; needs all n_k >= 2."""
    if any(n < 2 for n in E.shape.dims):
        raise HypothesisDomainError("excess-2 criterion needs every factor of dimension >= 2")
    return _criterion_violations(E, (2,) * E.shape.s)


def _check_caps(shape: Shape, r) -> tuple[int, ...]:
    r = _check_vector(shape, r, "cap vector r")
    for cap, n in zip(r, shape.dims):
        if not 0 <= cap <= n:
            raise InputError("E_RANGE", f"cap {cap} outside [0, {n}]")
    return r


def thm13_violations(E: LineBundleSum, r) -> ViolationReport:
    """Hypothesis check with per-axis excess caps r, 0 <= r_k <= n_k."""
    return _criterion_violations(E, _check_caps(E.shape, r))


def miyazaki_violations(E: LineBundleSum, r=None) -> ViolationReport:
    """Two-factor specialization: capped at 2 without r, at r with it."""
    if E.shape.s != 2:
        raise HypothesisDomainError("two-factor criterion needs exactly two factors")
    return thm12_violations(E) if r is None else thm13_violations(E, r)


@dataclass(frozen=True)
class SplitForm:
    """Result of matching every summand against the allowed split forms.

    assignment has one (degree, l, axis, c) entry per distinct summand
    degree, meaning degree = l*(1,...,1) + c*e_axis; axis is None when
    c = 0.  When a summand fits no form, matched is False and offender
    holds the first such degree.
    """

    matched: bool
    caps: tuple[int, ...]
    assignment: tuple[tuple[Degree, int, int | None, int], ...] = field(default=())
    offender: Degree | None = None

    def __bool__(self) -> bool:
        return self.matched


def _axis_form(degree: Degree, caps: tuple[int, ...]) -> tuple[int, int | None, int] | None:
    if len(degree) == 1:
        return (degree[0], None, 0)
    for k in range(len(degree)):
        others = degree[:k] + degree[k + 1:]
        if any(x != others[0] for x in others):
            continue
        ell = others[0]
        c = degree[k] - ell
        if 0 <= c <= caps[k]:
            return (ell, k if c else None, c)
    return None


def _match_forms(E: LineBundleSum, caps: tuple[int, ...]) -> SplitForm:
    assignment = []
    for degree, _ in E.summands:
        form = _axis_form(degree, caps)
        if form is None:
            return SplitForm(False, caps, offender=degree)
        assignment.append((degree,) + form)
    return SplitForm(True, caps, tuple(assignment))


def thm12_conclusion_match(E: LineBundleSum) -> SplitForm:
    """Match each summand to l*(1,...,1) + c*e_k with c in {0, 1, 2}."""
    return _match_forms(E, (2,) * E.shape.s)


def thm13_conclusion_match(E: LineBundleSum, r) -> SplitForm:
    """Match each summand to l*(1,...,1) + c*e_k with 0 <= c <= r_k."""
    return _match_forms(E, _check_caps(E.shape, r))


def lemma14_conclusion_match(E: LineBundleSum) -> tuple[bool, Degree | None]:
    """Whether every summand degree has pairwise coordinate gaps <= n."""
    n = E.shape.dims[0]
    for degree, _ in E.summands:
        if max(degree) - min(degree) > n:
            return (False, degree)
    return (True, None)


@dataclass(frozen=True)
class Lemma14Report:
    """Outcome of the balanced-power vanishing conditions.

    Witness rows are (condition, t, j, tau, dim) with condition "a" for
    the off-diagonal-degree checks over gap patterns j and "b" for the
    diagonal H^n check.  Degrees above dim X cannot carry sheaf
    cohomology; they are still part of the stated conditions, so they are
    recorded in vacuous_degrees rather than silently dropped.
    """

    conditions_hold: bool
    witnesses: tuple[tuple[str, int, Degree, int, int], ...] = field(default=())
    vacuous_degrees: tuple[int, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.conditions_hold

    def to_rows(self) -> list[dict]:
        return [
            {"condition": c, "t": t, "j": list(j), "tau": tau, "dim": dim}
            for c, t, j, tau, dim in self.witnesses
        ]

    def to_json(self) -> dict:
        return {
            "conditions_hold": self.conditions_hold,
            "vacuous_degrees": list(self.vacuous_degrees),
            "witnesses": self.to_rows(),
        }


def _require_power_shape(shape: Shape) -> int:
    n = shape.dims[0]
    if shape.s < 2 or any(m != n for m in shape.dims):
        raise HypothesisDomainError("balanced-power criterion needs (P^n)^s with s >= 2")
    return n


def lemma14_check(E: LineBundleSum) -> Lemma14Report:
    """Vanishing conditions on (P^n)^s.

    (a) H^t(E(j)) = 0 for every j with pairwise gaps <= n and every
        t in {1, ..., sn-1} that is not a multiple of n; the listed
        degree sn+1 exceeds dim X and is flagged vacuous.
    (b) H^n(E(t, ..., t)) = 0 for every integer t.

    The j quantifier in (a) is split into gap patterns (normalized to
    max j = 0) times a diagonal ray scanned by the interval engine.
    """
    shape = E.shape
    n = _require_power_shape(shape)
    s = shape.s
    witnesses = []
    patterns = [g for g in product(*[range(-n, 1)] * s) if max(g) == 0]
    for t in range(1, s * n):
        if t % n == 0:
            continue
        for g in patterns:
            for tau in nonvanishing_twist_intervals(E, g, t).values():
                d = tuple(x + tau for x in g)
                witnesses.append(("a", t, g, tau, sum_cohomology_dim(E, d, t)))
    zero = (0,) * s
    for tau in nonvanishing_twist_intervals(E, zero, n).values():
        d = (tau,) * s
        witnesses.append(("b", n, zero, tau, sum_cohomology_dim(E, d, n)))
    return Lemma14Report(not witnesses, tuple(witnesses), (s * n + 1,))


@dataclass(frozen=True)
class AuditReport:
    """Contingency table of hypothesis versus conclusion over an enumeration."""

    total: int
    both: int
    hyp_only: int
    concl_only: int
    neither: int
    mismatches: tuple[tuple[LineBundleSum, bool, bool], ...] = field(default=())

    @property
    def clean(self) -> bool:
        return self.hyp_only == 0 and self.concl_only == 0

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "both": self.both,
            "hyp_only": self.hyp_only,
            "concl_only": self.concl_only,
            "neither": self.neither,
            "mismatches": [
                {
                    "bundle": json.loads(bundle_to_json(E)),
                    "hypothesis": hyp,
                    "conclusion": concl,
                }
                for E, hyp, concl in self.mismatches
            ],
        }


def _validate_audit(shape: Shape, criterion: str, r):
    if criterion == "thm12":
        if any(n < 2 for n in shape.dims):
            raise HypothesisDomainError("excess-2 criterion needs every factor of dimension >= 2")
        if r is not None:
            raise InputError("E_USAGE", "caps r only apply to criterion thm13")
        return None
    if criterion == "thm13":
        if r is None:
            raise InputError("E_USAGE", "criterion thm13 needs a cap vector r")
        return _check_caps(shape, r)
    if criterion == "lemma14":
        if r is not None:
            raise InputError("E_USAGE", "caps r only apply to criterion thm13")
        _require_power_shape(shape)
        return None
    raise InputError("E_USAGE", f"unknown criterion {criterion!r}")


def _evaluate(E: LineBundleSum, criterion: str, r) -> tuple[bool, bool]:
    if criterion == "thm12":
        return (thm12_violations(E).empty, thm12_conclusion_match(E).matched)
    if criterion == "thm13":
        return (thm13_violations(E, r).empty, thm13_conclusion_match(E, r).matched)
    return (lemma14_check(E).conditions_hold, lemma14_conclusion_match(E)[0])


def _audit_task(args) -> tuple[int, list]:
    shape, criterion, r, degrees, rho, first = args
    cells = [0, 0, 0, 0]
    mismatches = []
    head = degrees[first]
    for combo in combinations_with_replacement(degrees[first:], rho - 1):
        E = LineBundleSum(shape, tuple((d, 1) for d in (head,) + combo))
        hyp, concl = _evaluate(E, criterion, r)
        cells[(not hyp) * 2 + (not concl)] += 1
        if hyp != concl:
            mismatches.append((E, hyp, concl))
    return (cells, mismatches)


def desk_scale_audit(
    shape,
    bound: int,
    max_rank: int,
    criterion: str,
    r=None,
    jobs: int = 1,
) -> AuditReport:
    """Cross-tabulate a criterion over every canonical bundle in a box.

    Enumerates all canonical LineBundleSums with summand degrees in
    [-bound, bound]^s and rank <= max_rank (multisets of degrees, so each
    bundle appears exactly once), evaluates hypothesis and conclusion for
    each, and reports the 2x2 counts plus every bundle where the two
    disagree.  Refuses enumerations beyond 10^7 candidates.  jobs > 1
    partitions the enumeration; the merge is associative, so the report
    does not depend on jobs.
    """
    shape = _as_shape(shape)
    if bound < 0 or max_rank < 1:
        raise InputError("E_RANGE", "need bound >= 0 and max_rank >= 1")
    r = _validate_audit(shape, criterion, r)
    n_degrees = (2 * bound + 1) ** shape.s
    candidates = sum(comb(n_degrees + rho - 1, rho) for rho in range(1, max_rank + 1))
    if candidates > AUDIT_GUARD:
        raise AuditGuardError(
            f"{candidates} candidate bundles exceed the desk-scale guard of {AUDIT_GUARD}"
        )
    degrees = tuple(sorted(product(range(-bound, bound + 1), repeat=shape.s)))
    tasks = [
        (shape, criterion, r, degrees, rho, first)
        for rho in range(1, max_rank + 1)
        for first in range(len(degrees))
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_audit_task, tasks, chunksize=8))
    else:
        results = [_audit_task(t) for t in tasks]
    cells = [0, 0, 0, 0]
    mismatches = []
    for task_cells, task_mismatches in results:
        for idx in range(4):
            cells[idx] += task_cells[idx]
        mismatches.extend(task_mismatches)
    return AuditReport(
        total=sum(cells),
        both=cells[0],
        hyp_only=cells[1],
        concl_only=cells[2],
        neither=cells[3],
        mismatches=tuple(mismatches),
    )
