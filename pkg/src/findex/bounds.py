"""Closed-form upper bounds on F for bicyclic graphs and the three-tier audit."""

from __future__ import annotations

import time
from concurrent.futures import Executor
from dataclasses import dataclass, field

from .enumeration import DEFAULT_CAP, EnumSpec, enumerate_bicyclic
from .graph import forgotten_index, is_bicyclic, max_degree
from .io import from_graph6
from .partition import ResidueParams, exact_histogram_max, residue_params

T_P0 = "T_p0"
T_P1 = "T_p1"
T_GENERAL = "T_general_p"
T_BOUNDARY = "boundary_p_eq_delta_minus_3"
T_NONE = "none"

HOLDS_TIGHT = "HOLDS_TIGHT"
HOLDS_SLACK = "HOLDS_SLACK"
VIOLATED = "VIOLATED"
NO_THEOREM = "NO_THEOREM"
UNVERIFIED = "UNVERIFIED"


def _coef(delta: int) -> int:
    return delta * delta + delta + 2


def bound_p0(n: int, delta: int) -> int:
    if delta < 3 or n % (delta - 1):
        raise ValueError(f"n={n} is not 0 mod {delta - 1}")
    return _coef(delta) * n + 26


def bound_p1(n: int, delta: int) -> int:
    if delta < 3 or n % (delta - 1) != 1 % (delta - 1):
        raise ValueError(f"n={n} is not 1 mod {delta - 1}")
    return _coef(delta) * n - (delta * delta + delta - 6)


def bound_general_p(n: int, delta: int, p: int) -> int:
    if not 2 <= p <= delta - 3:
        raise ValueError(f"p={p} outside 2..{delta - 3}")
    if n % (delta - 1) != p:
        raise ValueError(f"n={n} is not {p} mod {delta - 1}")
    return _coef(delta) * (n - p) + p**3 + 9 * p**2 + 28 * p + 26


@dataclass(frozen=True)
class BoundResult:
    theorem: str
    value: int | None
    params: ResidueParams


def applicable_bound(n: int, delta: int) -> BoundResult:
    """Pick the theorem covering ``n mod (delta - 1)`` and evaluate it."""
    params = residue_params(n, delta)
    p = params.p
    if p == 0:
        return BoundResult(T_P0, bound_p0(n, delta), params)
    if p == 1:
        return BoundResult(T_P1, bound_p1(n, delta), params)
    if p < delta - 3:
        return BoundResult(T_GENERAL, bound_general_p(n, delta, p), params)
    if p == delta - 3:
        # the statement says p < delta-3, the proof p <= delta-3; evaluated and audited
        return BoundResult(T_BOUNDARY, bound_general_p(n, delta, p), params)
    return BoundResult(T_NONE, None, params)


@dataclass
class AuditRecord:
    n: int
    delta: int
    p: int
    k: int
    theorem: str
    closed_form: int | None
    histogram_max: int
    empirical_max: int | None
    status: str
    gap: int | None
    witness_graph6: str | None
    runtime_ms: dict = field(default_factory=lambda: {"closed": 0, "histogram": 0, "enumeration": 0})

    FIELDS = ("n", "delta", "p", "k", "theorem", "closed_form", "histogram_max",
              "empirical_max", "status", "gap", "witness_graph6", "runtime_ms")

    def to_json(self) -> dict:
        return {name: getattr(self, name) for name in self.FIELDS}

    @classmethod
    def from_json(cls, obj: dict) -> "AuditRecord":
        return cls(**{name: obj[name] for name in cls.FIELDS})


def classify(closed_form: int | None, empirical_max: int | None) -> str:
    if closed_form is None:
        return NO_THEOREM
    if empirical_max is None:
        return UNVERIFIED
    if empirical_max > closed_form:
        return VIOLATED
    return HOLDS_TIGHT if empirical_max == closed_form else HOLDS_SLACK


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def audit(n: int, delta: int, enumeration_budget: int = DEFAULT_CAP, *,
          jobs: int = 1, executor: Executor | None = None,
          at_most: bool = False) -> AuditRecord:
    """Compare the closed form, the histogram relaxation and the true maximum.

    The true maximum is taken over bicyclic graphs whose maximum degree is
    exactly ``delta`` (at most ``delta`` with ``at_most``); it is skipped when
    ``n`` exceeds ``enumeration_budget``.
    """
    t0 = time.perf_counter()
    bound = applicable_bound(n, delta)
    params = bound.params
    t_closed = _ms(t0)

    t0 = time.perf_counter()
    _, hist_max = exact_histogram_max(params)
    t_hist = _ms(t0)

    t0 = time.perf_counter()
    empirical = witness = None
    if n <= enumeration_budget:
        spec = EnumSpec(n, delta_max=delta, symmetry_break=True, parallel_jobs=jobs) if at_most \
            else EnumSpec(n, delta_exact=delta, symmetry_break=True, parallel_jobs=jobs)
        summary = enumerate_bicyclic(spec, cap=enumeration_budget, executor=executor)
        empirical = summary.max_f
        witness = summary.argmax[0] if summary.argmax else None
    t_enum = _ms(t0)

    if empirical is not None:
        g = from_graph6(witness)
        if forgotten_index(g, verify=True) != empirical or not is_bicyclic(g):
            raise RuntimeError(f"witness {witness} does not reproduce F={empirical}")
        if not at_most:
            if max_degree(g) != delta:
                raise RuntimeError(f"witness {witness} has the wrong maximum degree")
            if empirical > hist_max:
                raise RuntimeError(f"empirical max {empirical} exceeds relaxation {hist_max} "
                                   f"at n={n}, delta={delta}")

    closed = bound.value
    gap = closed - empirical if closed is not None and empirical is not None else None
    return AuditRecord(
        n=n, delta=delta, p=params.p, k=params.k, theorem=bound.theorem,
        closed_form=closed, histogram_max=hist_max, empirical_max=empirical,
        status=classify(closed, empirical), gap=gap, witness_graph6=witness,
        runtime_ms={"closed": t_closed, "histogram": t_hist, "enumeration": t_enum},
    )
