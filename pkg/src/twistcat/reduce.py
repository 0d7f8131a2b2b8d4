"""Phase-spread reduction and heart alignment.

The reduction loop drives an object toward a stable one: at every step it
twists (or untwists) by the unique stable spherical object sitting at the
extreme phase, re-measures both phases, and certifies that the driven end
strictly improved, the other end did not deteriorate, and the spread
strictly decreased.  A certified conclusion failing is an engine invariant
violation and always raises; it is never swallowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisNotMet, InvariantViolation
from .homcore import (
    TwistedComplex,
    direct_sum,
    hom_dims,
    is_spherical,
    minimize,
    simple_object,
)
from .rootlat import Root
from .stability import Phase, ProbeHit, StabilityCondition, StableBuild
from .twists import BraidWord, apply_braid, twist, untwist

BOTTOM = "bottom"
TOP = "top"


@dataclass
class StepRecord:
    """One certified twist step with its measured phase data."""

    direction: str
    root: Root
    shift: int
    exponent: int
    phi_minus_before: Phase
    phi_minus_after: Phase
    phi_plus_before: Phase
    phi_plus_after: Phase
    spread_before: Phase
    spread_after: Phase
    checks: dict[str, str] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "direction": self.direction,
            "root": list(self.root),
            "shift": self.shift,
            "exponent": self.exponent,
            "phi_minus_before": self.phi_minus_before.to_json_dict(),
            "phi_minus_after": self.phi_minus_after.to_json_dict(),
            "phi_plus_before": self.phi_plus_before.to_json_dict(),
            "phi_plus_after": self.phi_plus_after.to_json_dict(),
            "spread_before": self.spread_before.to_json_dict(),
            "spread_after": self.spread_after.to_json_dict(),
            "checks": dict(self.checks),
        }


@dataclass
class ReductionTrace:
    strategy: str
    start: TwistedComplex
    final: TwistedComplex
    steps: list[StepRecord]
    word: BraidWord  # applying this to `final` reproduces `start`

    def to_json_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "steps": [s.to_json_dict() for s in self.steps],
            "final": self.final.to_json_dict(),
            "reconstruction_word_length": len(self.word),
        }


def _conjugated_twist_word(build: StableBuild, exponent: int) -> BraidWord:
    """Braid word acting as the twist (exponent +1/-1) in the built stable object."""
    core = BraidWord(((build.word.base, exponent),))
    return build.braid.inverse().then(core).then(build.braid)


def _default_budget(stab: StabilityCondition, y: TwistedComplex) -> int:
    lo, hi = y.shift_range()
    return max(16, 4 * len(stab.roots) * (hi - lo + 3))


def _certify(
    direction: str,
    lo: ProbeHit,
    hi: ProbeHit,
    new_lo: ProbeHit,
    new_hi: ProbeHit,
    narrow_clause_ok: bool,
) -> dict[str, str]:
    """Assert the step conclusions; returns the per-clause record."""
    spread = hi.phase - lo.phase
    new_spread = new_hi.phase - new_lo.phase
    checks: dict[str, str] = {}
    if direction == BOTTOM:
        if not new_lo.phase > lo.phase:
            raise InvariantViolation(
                f"bottom phase failed to strictly improve: {lo.phase} -> {new_lo.phase}"
            )
        checks["bottom_strict_improvement"] = "ok"
        clause = "wide_spread_top_non_deterioration" if spread >= Phase.integer(1) \
            else "narrow_spread_top_non_deterioration"
        if not narrow_clause_ok:
            checks[clause] = "skipped: hypothesis not established"
        elif new_hi.phase > hi.phase:
            raise InvariantViolation(
                f"top phase deteriorated: {hi.phase} -> {new_hi.phase}"
            )
        else:
            checks[clause] = "ok"
    else:
        if not new_hi.phase < hi.phase:
            raise InvariantViolation(
                f"top phase failed to strictly improve: {hi.phase} -> {new_hi.phase}"
            )
        checks["top_strict_improvement"] = "ok"
        clause = "wide_spread_bottom_non_deterioration" if spread >= Phase.integer(1) \
            else "narrow_spread_bottom_non_deterioration"
        if not narrow_clause_ok:
            checks[clause] = "skipped: hypothesis not established"
        elif new_lo.phase < lo.phase:
            raise InvariantViolation(
                f"bottom phase deteriorated: {lo.phase} -> {new_lo.phase}"
            )
        else:
            checks[clause] = "ok"
    if not new_spread < spread:
        raise InvariantViolation(f"spread failed to decrease: {spread} -> {new_spread}")
    checks["spread_strictly_decreases"] = "ok"
    return checks


def reduce_to_stable(
    stab: StabilityCondition,
    y: TwistedComplex,
    strategy: str = BOTTOM,
    step_budget: int | None = None,
) -> ReductionTrace:
    """Drive a spherical object to the stable representative of its orbit.

    Bottom strategy untwists by the stable object at the bottom phase; top
    strategy twists by the one at the top phase.  Every step is certified.
    """
    if strategy not in (BOTTOM, TOP):
        raise ValueError(f"unknown strategy {strategy!r}")
    stab.require_generic()
    start = minimize(y)
    if not is_spherical(start):
        raise ValueError("reduction is defined for spherical objects only")
    budget = step_budget if step_budget is not None else _default_budget(stab, start)
    cur = start
    lo, hi = stab.phi_probes(cur)
    steps: list[StepRecord] = []
    recon = BraidWord()
    while True:
        spread = hi.phase - lo.phase
        if spread.is_zero():
            break
        if len(steps) >= budget:
            raise InvariantViolation(
                f"reduction exceeded its step budget of {budget}; "
                "either the budget is too small or termination failed"
            )
        if strategy == BOTTOM:
            build = stab.stable_build(lo.root)
            new = untwist(build.obj, cur, _spherical_checked=True)
            exponent = -1
            witness = lo
        else:
            build = stab.stable_build(hi.root)
            new = twist(build.obj, cur, _spherical_checked=True)
            exponent = 1
            witness = hi
        new_lo, new_hi = stab.phi_probes(new)
        # spherical objects keep Hom^0(Y, Y) one-dimensional and have no
        # negative self-homs; twists preserve both, so the narrow-spread
        # clause hypotheses hold throughout the loop.
        checks = _certify(strategy, lo, hi, new_lo, new_hi, narrow_clause_ok=True)
        steps.append(
            StepRecord(
                direction=strategy,
                root=build.root,
                shift=witness.shift,
                exponent=exponent,
                phi_minus_before=lo.phase,
                phi_minus_after=new_lo.phase,
                phi_plus_before=hi.phase,
                phi_plus_after=new_hi.phase,
                spread_before=spread,
                spread_after=new_hi.phase - new_lo.phase,
                checks=checks,
            )
        )
        recon = _conjugated_twist_word(build, -exponent).then(recon)
        cur, lo, hi = new, new_lo, new_hi
    return ReductionTrace(strategy, start, cur, steps, recon)


def certify_step(
    stab: StabilityCondition,
    x: TwistedComplex,
    y: TwistedComplex,
    direction: str = BOTTOM,
) -> StepRecord:
    """Apply one twist by a stable spherical x, checking hypotheses explicitly.

    Hypothesis failures raise HypothesisNotMet; conclusion failures raise
    InvariantViolation, which is a falsification event.
    """
    if direction not in (BOTTOM, TOP):
        raise ValueError(f"unknown direction {direction!r}")
    stab.require_generic()
    x = minimize(x)
    if not is_spherical(x):
        raise HypothesisNotMet("the twisting object must be spherical")
    x_lo, x_hi = stab.phi_probes(x)
    if not (x_hi.phase - x_lo.phase).is_zero():
        raise HypothesisNotMet("the twisting object must be semistable")
    lo, hi = stab.phi_probes(y)
    spread = hi.phase - lo.phase
    if spread.is_zero():
        raise HypothesisNotMet(
            "y is already semistable; the stable object of its phase is a direct summand"
        )
    if direction == BOTTOM and x_lo.phase != lo.phase:
        raise HypothesisNotMet("x does not sit at the bottom phase of y")
    if direction == TOP and x_lo.phase != hi.phase:
        raise HypothesisNotMet("x does not sit at the top phase of y")
    self_homs = hom_dims(y, y)
    if any(d < 0 for d in self_homs):
        raise HypothesisNotMet("y has self-homs in negative degrees")
    narrow_ok = True
    if spread < Phase.integer(1):
        narrow_ok = self_homs.get(0) == 1
        if not narrow_ok:
            raise HypothesisNotMet(
                "the narrow-spread clause needs a one-dimensional endomorphism space"
            )
    if direction == BOTTOM:
        new = untwist(x, y, _spherical_checked=True)
        exponent = -1
        witness = lo
    else:
        new = twist(x, y, _spherical_checked=True)
        exponent = 1
        witness = hi
    new_lo, new_hi = stab.phi_probes(new)
    checks = _certify(direction, lo, hi, new_lo, new_hi, narrow_ok)
    return StepRecord(
        direction=direction,
        root=witness.root,
        shift=witness.shift,
        exponent=exponent,
        phi_minus_before=lo.phase,
        phi_minus_after=new_lo.phase,
        phi_plus_before=hi.phase,
        phi_plus_after=new_hi.phase,
        spread_before=spread,
        spread_after=new_hi.phase - new_lo.phase,
        checks=checks,
    )


def sandwich_check(
    stab: StabilityCondition,
    first: TwistedComplex,
    middle: TwistedComplex,
    last: TwistedComplex,
) -> bool:
    """Both middle-term phase inequalities for an exact triangle first -> middle -> last."""
    f_lo, f_hi = stab.phi_bounds(first)
    m_lo, m_hi = stab.phi_bounds(middle)
    l_lo, l_hi = stab.phi_bounds(last)
    return m_lo >= min(f_lo, l_lo) and m_hi <= max(f_hi, l_hi)


@dataclass(frozen=True)
class OrbitStability:
    """A stability condition presented as (transport word, rotation) over a base."""

    transport: BraidWord = BraidWord()
    rotation: Phase | None = None


@dataclass
class HeartAlignment:
    word: BraidWord  # applied to the simples, realizes the aligned heart
    alpha: Phase  # rotation taking the aligned window back to [0, 1)
    alpha_base: Phase  # the same window expressed over the base condition
    steps: list[StepRecord]
    final: TwistedComplex

    def to_json_dict(self) -> dict:
        return {
            "word_length": len(self.word),
            "alpha": self.alpha.to_json_dict(),
            "steps": [s.to_json_dict() for s in self.steps],
        }


def heart_align(
    stab: StabilityCondition,
    orbit: OrbitStability,
    step_budget: int | None = None,
) -> HeartAlignment:
    """Align a transported stability condition with the standard heart.

    Measures the direct sum of the simples in the transported condition and
    keeps untwisting at the bottom phase while the spread is at least one.
    On termination all simples fit in a width-one window [alpha, alpha+1);
    the rotation alpha is reported and the per-simple window membership is
    verified (an integer alpha is preferred when the window allows it, so an
    already standard condition aligns with alpha = 0).
    """
    stab.require_generic()
    alg = stab.alg
    n = stab.quiver.vertex_count
    simples = [simple_object(alg, v) for v in range(n)]
    word = orbit.transport.inverse()
    cur = minimize(apply_braid(alg, word, direct_sum(*simples)))
    lo, hi = stab.phi_probes(cur)
    budget = step_budget if step_budget is not None else _default_budget(stab, cur)
    steps: list[StepRecord] = []
    while hi.phase - lo.phase >= Phase.integer(1):
        if len(steps) >= budget:
            raise InvariantViolation(
                f"heart alignment exceeded its step budget of {budget}"
            )
        build = stab.stable_build(lo.root)
        new = untwist(build.obj, cur, _spherical_checked=True)
        new_lo, new_hi = stab.phi_probes(new)
        checks = _certify(BOTTOM, lo, hi, new_lo, new_hi, narrow_clause_ok=True)
        steps.append(
            StepRecord(
                direction=BOTTOM,
                root=build.root,
                shift=lo.shift,
                exponent=-1,
                phi_minus_before=lo.phase,
                phi_minus_after=new_lo.phase,
                phi_plus_before=hi.phase,
                phi_plus_after=new_hi.phase,
                spread_before=hi.phase - lo.phase,
                spread_after=new_hi.phase - new_lo.phase,
                checks=checks,
            )
        )
        word = word.then(_conjugated_twist_word(build, -1))
        cur, lo, hi = new, new_lo, new_hi
    floor = Phase.integer(lo.phase.shift)
    alpha_base = floor if hi.phase < floor + 1 else lo.phase
    alpha = alpha_base + orbit.rotation if orbit.rotation is not None else alpha_base
    for v in range(n):
        transported = apply_braid(alg, word, simples[v])
        t_lo, t_hi = stab.phi_bounds(transported)
        if not (t_lo >= alpha_base and t_hi < alpha_base + 1):
            raise InvariantViolation(
                f"realigned simple {v} escapes the [alpha, alpha+1) window"
            )
    return HeartAlignment(word=word, alpha=alpha, alpha_base=alpha_base, steps=steps, final=cur)
