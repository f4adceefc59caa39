"""Machine-checkable catalog of the sharp inequalities between the means.

Every entry couples a human-readable statement with a vectorised margin
function: positive margins mean the inequality holds on that pair, and the
attached :class:`~meanslab.constants.SharpConstant` objects are the claimed
best-possible weights or bounds.  Three things can be done with a record:

* :func:`verify` — evaluate the margins on one pair;
* :func:`verify_random` — sample many pairs (log-uniform in the ratio a/b,
  which is where sharpness lives) and aggregate minima and witnesses;
* :func:`sharpness_probe` — tighten a sharp constant by ε and hunt for a
  violating pair near the endpoint where the constant is attained, which
  demonstrates that the constant cannot be improved.

Margins are classified against a noise threshold of 100 ulp of the operand
scale: a strict analytic inequality can round to equality in doubles, so
anything smaller in magnitude is reported as *indeterminate* rather than as
a pass or a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Callable

import numpy as np

from .constants import SharpConstant, constant
from .errors import DegeneratePairError, NotApplicableError, ParameterError
from .means import (
    PositivePair,
    arithmetic,
    centroidal,
    ch_difference,
    contraharmonic,
    first_seiffert,
    generalized_logarithmic,
    geometric,
    harmonic,
    neuman_sandor,
    root_square,
    second_seiffert,
)

__all__ = [
    "InequalityRecord",
    "MarginSample",
    "Margins",
    "ProbeResult",
    "ProbeSpec",
    "VerificationReport",
    "catalog",
    "record",
    "verify",
    "verify_random",
    "sharpness_probe",
]

_EPS = float(np.finfo(np.float64).eps)
_NOISE_FACTOR = 100.0
_PROBE_STEPS = 64

_log_mean = partial(generalized_logarithmic, -1.0)
_identric = partial(generalized_logarithmic, 0.0)


@dataclass(frozen=True)
class MarginSample:
    """Raw signed margins for a batch of pairs plus their noise scales.

    A ``None`` side means the record makes no claim on that side.  Scales
    carry the magnitude of the quantities whose subtraction produced the
    margin, so ``100 eps * scale`` bounds the rounding noise in it.
    """

    lower: object
    upper: object
    lower_scale: object
    upper_scale: object


@dataclass(frozen=True)
class ProbeSpec:
    """How to attack one sharp constant: which side, which direction the
    tightening moves the constant, and the endpoint where violations live
    (``near`` is a/b → 1, ``far`` is a/b → ∞)."""

    side: str
    tighten: float
    endpoint: str


@dataclass(frozen=True)
class InequalityRecord:
    """One inequality with its margins and sharpness metadata.

    ``homogeneity_degree`` is how margins respond to (a, b) → (λa, λb):
    degree 1 for mean-valued margins, 0 for ratio forms, 2 for the product
    form, ``None`` when the statement is not scale-invariant at all.
    ``kind`` separates the package's core sharp results from the previously
    known bounds and classical orderings carried along for cross-checking.
    """

    id: str
    form: str
    statement: str
    kind: str
    lower: SharpConstant | None
    upper: SharpConstant | None
    strict: bool = True
    domain_note: str | None = None
    homogeneity_degree: int | None = 1
    sampler: str = "log-ratio"
    probes: tuple[ProbeSpec, ...] = ()
    margin_fn: Callable = field(default=None, repr=False, compare=False)

    def margins(self, a, b, *, lower_c: float | None = None, upper_c: float | None = None) -> MarginSample:
        """Margins on (a, b) with optional overrides for the constants.

        Overrides replace the record's lower/upper constant (for the
        exponent-window record, the L_p exponents); the probes use this to
        evaluate tightened variants of the inequality.
        """
        return self.margin_fn(a, b, lower_c, upper_c)


# --------------------------------------------------------------------------
# margin functions


def _combo_fn(mix, base, inner, lo_default, up_default):
    # w*mix + (1-w)*base compared against inner, on both sides.
    def fn(a, b, lo_c, up_c):
        x = mix(a, b)
        y = base(a, b)
        z = inner(a, b)
        scale = np.abs(x) + np.abs(y) + np.abs(z)
        w_lo = lo_default if lo_c is None else lo_c
        w_up = up_default if up_c is None else up_c
        lower = z - (w_lo * x + (1.0 - w_lo) * y)
        upper = (w_up * x + (1.0 - w_up) * y) - z
        return MarginSample(lower, upper, scale, scale)

    return fn


def _ratio_mc_fn(lo_default, up_default):
    # (M - C)/CH against two constants; scale-free value, but the float
    # ratio carries cancellation noise of order (M + C)/CH ulp.
    def fn(a, b, lo_c, up_c):
        m = neuman_sandor(a, b)
        c = contraharmonic(a, b)
        ch = ch_difference(a, b)
        value = (m - c) / ch
        scale = (m + c) / ch + 1.0
        lo = lo_default if lo_c is None else lo_c
        up = up_default if up_c is None else up_c
        return MarginSample(value - lo, up - value, scale, scale)

    return fn


def _ratio_one_sided_fn(lo_default):
    def fn(a, b, lo_c, up_c):
        m = neuman_sandor(a, b)
        ch = ch_difference(a, b)
        value = m / ch
        scale = value + 1.0
        lo = lo_default if lo_c is None else lo_c
        return MarginSample(value - lo, None, scale, None)

    return fn


def _additive_fn(minuend, lo_default, up_default):
    # lo*CH < minuend(a,b) - M < up*CH
    def fn(a, b, lo_c, up_c):
        big = minuend(a, b)
        m = neuman_sandor(a, b)
        ch = ch_difference(a, b)
        gap = big - m
        scale = np.abs(big) + np.abs(m)
        lo = lo_default if lo_c is None else lo_c
        up = up_default if up_c is None else up_c
        return MarginSample(gap - lo * ch, up * ch - gap, scale, scale)

    return fn


_CHAIN_MEANS = (
    geometric,
    _log_mean,
    first_seiffert,
    arithmetic,
    neuman_sandor,
    second_seiffert,
    root_square,
)


def _chain_fn(a, b, lo_c, up_c):
    values = np.stack([np.asarray(f(a, b), dtype=np.float64) for f in _CHAIN_MEANS])
    gaps = np.diff(values, axis=0)
    scale = np.abs(values).sum(axis=0)
    return MarginSample(gaps.min(axis=0), None, scale, None)


def _exponent_window_fn(lo_default, up_default):
    # L_p < M < L_q; the overridable "constants" are the exponents.
    def fn(a, b, lo_c, up_c):
        m = neuman_sandor(a, b)
        p = lo_default if lo_c is None else lo_c
        q = up_default if up_c is None else up_c
        below = generalized_logarithmic(p, a, b)
        above = generalized_logarithmic(q, a, b)
        scale_lo = np.abs(m) + np.abs(below)
        scale_up = np.abs(m) + np.abs(above)
        return MarginSample(m - below, above - m, scale_lo, scale_up)

    return fn


def _amt_fn(a, b, lo_c, up_c):
    am = arithmetic(a, b)
    m = neuman_sandor(a, b)
    t = second_seiffert(a, b)
    scale = np.abs(am) + np.abs(m) + np.abs(t)
    return MarginSample(m - am, t - m, scale, scale)


def _product_fn(a, b, lo_c, up_c):
    am = arithmetic(a, b)
    m = neuman_sandor(a, b)
    t = second_seiffert(a, b)
    m2 = m * m
    low_ref = am * t
    up_ref = 0.5 * (am * am + t * t)
    return MarginSample(m2 - low_ref, up_ref - m2, m2 + low_ref, m2 + up_ref)


_KY_FAN_MEANS = (
    geometric,
    _log_mean,
    first_seiffert,
    arithmetic,
    neuman_sandor,
    second_seiffert,
)


def _ky_fan_fn(a, b, lo_c, up_c):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    a2 = 1.0 - a
    b2 = 1.0 - b
    ratios = np.stack(
        [np.asarray(f(a, b) / f(a2, b2), dtype=np.float64) for f in _KY_FAN_MEANS]
    )
    gaps = np.diff(ratios, axis=0)
    scale = np.abs(ratios).sum(axis=0)
    return MarginSample(gaps.min(axis=0), None, scale, None)


# --------------------------------------------------------------------------
# the records


def _combo_record(rec_id, kind, mix_sym, base_sym, inner_sym, mix, base, inner, probes):
    lo = constant(f"{rec_id}.lower")
    up = constant(f"{rec_id}.upper")
    stmt = (
        f"alpha*{mix_sym} + (1-alpha)*{base_sym} < {inner_sym} < "
        f"beta*{mix_sym} + (1-beta)*{base_sym}, sharp at both weights"
    )
    return InequalityRecord(
        id=rec_id,
        form="convex-combination",
        statement=stmt,
        kind=kind,
        lower=lo,
        upper=up,
        probes=probes,
        margin_fn=_combo_fn(mix, base, inner, lo.float_value, up.float_value),
    )


@lru_cache(maxsize=1)
def catalog() -> tuple[InequalityRecord, ...]:
    """All inequality records, in a stable order."""
    records = [
        _combo_record(
            "neuman-QA", "prior-result", "Q", "A", "M",
            root_square, arithmetic, neuman_sandor,
            (ProbeSpec("lower", +1.0, "far"), ProbeSpec("upper", -1.0, "near")),
        ),
        _combo_record(
            "neuman-CA", "prior-result", "C", "A", "M",
            contraharmonic, arithmetic, neuman_sandor,
            (ProbeSpec("lower", +1.0, "far"), ProbeSpec("upper", -1.0, "near")),
        ),
        _combo_record(
            "zhao-HQ", "prior-result", "H", "Q", "M",
            harmonic, root_square, neuman_sandor,
            (ProbeSpec("lower", -1.0, "near"), ProbeSpec("upper", +1.0, "far")),
        ),
        _combo_record(
            "zhao-GQ", "prior-result", "G", "Q", "M",
            geometric, root_square, neuman_sandor,
            (ProbeSpec("lower", -1.0, "near"), ProbeSpec("upper", +1.0, "far")),
        ),
        _combo_record(
            "zhao-HC", "prior-result", "H", "C", "M",
            harmonic, contraharmonic, neuman_sandor,
            (ProbeSpec("lower", -1.0, "far"), ProbeSpec("upper", +1.0, "near")),
        ),
        _combo_record(
            "identric-IQ", "prior-result", "I", "Q", "M",
            _identric, root_square, neuman_sandor,
            (ProbeSpec("lower", -1.0, "near"), ProbeSpec("upper", +1.0, "far")),
        ),
        InequalityRecord(
            id="thm3.1",
            form="ratio-bound",
            statement="1/(2*ln(1+sqrt(2))) - 1 < (M - C)/CH < -5/12, both ends sharp",
            kind="core-result",
            lower=constant("thm3.1.lower"),
            upper=constant("thm3.1.upper"),
            homogeneity_degree=0,
            probes=(ProbeSpec("lower", +1.0, "far"), ProbeSpec("upper", -1.0, "near")),
            margin_fn=_ratio_mc_fn(
                constant("thm3.1.lower").float_value,
                constant("thm3.1.upper").float_value,
            ),
        ),
        InequalityRecord(
            id="thm3.2",
            form="ratio-bound",
            statement="M/CH > 1/(2*ln(1+sqrt(2))), the bound approached as a/b grows",
            kind="core-result",
            lower=constant("thm3.2.lower"),
            upper=None,
            homogeneity_degree=0,
            probes=(ProbeSpec("lower", +1.0, "far"),),
            margin_fn=_ratio_one_sided_fn(constant("thm3.2.lower").float_value),
        ),
        _combo_record(
            "thm3.3", "core-result", "Q", "M", "Cbar",
            root_square, neuman_sandor, centroidal,
            (ProbeSpec("lower", +1.0, "near"), ProbeSpec("upper", -1.0, "far")),
        ),
        _combo_record(
            "thm3.4", "core-result", "C", "M", "Q",
            contraharmonic, neuman_sandor, root_square,
            (ProbeSpec("lower", +1.0, "far"), ProbeSpec("upper", -1.0, "near")),
        ),
        InequalityRecord(
            id="cor3.1",
            form="additive-gap",
            statement="(5/12)*CH < C - M < (1 - 1/(2*ln(1+sqrt(2))))*CH, both ends sharp",
            kind="core-result",
            lower=constant("cor3.1.lower"),
            upper=constant("cor3.1.upper"),
            probes=(ProbeSpec("lower", +1.0, "near"), ProbeSpec("upper", -1.0, "far")),
            margin_fn=_additive_fn(
                contraharmonic,
                constant("cor3.1.lower").float_value,
                constant("cor3.1.upper").float_value,
            ),
        ),
        InequalityRecord(
            id="cor3.2",
            form="additive-gap",
            statement="(1/12)*CH < Cbar - M < (2/3 - 1/(2*ln(1+sqrt(2))))*CH, both ends sharp",
            kind="core-result",
            lower=constant("cor3.2.lower"),
            upper=constant("cor3.2.upper"),
            probes=(ProbeSpec("lower", +1.0, "near"), ProbeSpec("upper", -1.0, "far")),
            margin_fn=_additive_fn(
                centroidal,
                constant("cor3.2.lower").float_value,
                constant("cor3.2.upper").float_value,
            ),
        ),
        InequalityRecord(
            id="chain",
            form="chain",
            statement="G < L[-1] < P < A < M < T < Q for distinct arguments",
            kind="classical-ordering",
            lower=None,
            upper=None,
            margin_fn=_chain_fn,
        ),
        InequalityRecord(
            id="lp0-l2",
            form="exponent-window",
            statement="L[p0] < M < L[2], with p0 the root of (p+1)^(1/p) = 2*ln(1+sqrt(2))",
            kind="core-result",
            lower=constant("lp0-l2.lower"),
            upper=None,
            probes=(ProbeSpec("lower", +1.0, "far"),),
            margin_fn=_exponent_window_fn(constant("lp0-l2.lower").float_value, 2.0),
        ),
        InequalityRecord(
            id="amt",
            form="sandwich",
            statement="A < M < T for distinct arguments",
            kind="classical-ordering",
            lower=None,
            upper=None,
            margin_fn=_amt_fn,
        ),
        InequalityRecord(
            id="product",
            form="product-bound",
            statement="A*T < M^2 < (A^2 + T^2)/2 for distinct arguments",
            kind="classical-ordering",
            lower=None,
            upper=None,
            homogeneity_degree=2,
            margin_fn=_product_fn,
        ),
        InequalityRecord(
            id="kyfan",
            form="ky-fan-chain",
            statement=(
                "G/G' < L[-1]/L' < P/P' < A/A' < M/M' < T/T' with X' = X(1-a, 1-b)"
            ),
            kind="classical-ordering",
            lower=None,
            upper=None,
            domain_note="requires 0 < a, b < 1/2",
            homogeneity_degree=None,
            sampler="unit-interval",
            margin_fn=_ky_fan_fn,
        ),
    ]
    return tuple(records)


def record(record_id: str) -> InequalityRecord:
    """Look up a catalog record by id."""
    for rec in catalog():
        if rec.id == record_id:
            return rec
    raise ParameterError(f"unknown record id {record_id!r}")


def _resolve(rec) -> InequalityRecord:
    return rec if isinstance(rec, InequalityRecord) else record(rec)


# --------------------------------------------------------------------------
# verification


def _classify(margin: float, scale: float) -> str:
    threshold = _NOISE_FACTOR * _EPS * scale
    if margin > threshold:
        return "ok"
    if margin < 0.0 and -margin > threshold:
        return "fail"
    return "indeterminate"


@dataclass(frozen=True)
class Margins:
    """Signed margins of one record on one pair, with noise classification."""

    record_id: str
    lower: float | None
    upper: float | None
    lower_state: str | None
    upper_state: str | None

    @property
    def passed(self) -> bool:
        return "fail" not in (self.lower_state, self.upper_state)


def _check_domain(rec: InequalityRecord, a: float, b: float) -> None:
    if rec.domain_note is not None:
        if not (0.0 < a < 0.5 and 0.0 < b < 0.5):
            raise NotApplicableError(f"{rec.id}: {rec.domain_note}")


def verify(rec, pair: PositivePair) -> Margins:
    """Margins of one record on one pair.

    Raises DegeneratePairError for a = b (no strict inequality to check)
    and NotApplicableError when the pair is outside the record's stated
    domain — the latter is a skip signal, not a failure.
    """
    rec = _resolve(rec)
    if pair.degenerate:
        raise DegeneratePairError(f"{rec.id}: equal arguments have zero margins")
    _check_domain(rec, pair.a, pair.b)
    sample = rec.margins(pair.a, pair.b)
    lower = upper = None
    lower_state = upper_state = None
    if sample.lower is not None:
        lower = float(sample.lower)
        lower_state = _classify(lower, float(sample.lower_scale))
    if sample.upper is not None:
        upper = float(sample.upper)
        upper_state = _classify(upper, float(sample.upper_scale))
    return Margins(rec.id, lower, upper, lower_state, upper_state)


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate of verify() over a deterministic random sample."""

    record_id: str
    samples: int
    seed: int
    min_lower_margin: float | None
    lower_witness: tuple[float, float] | None
    min_upper_margin: float | None
    upper_witness: tuple[float, float] | None
    failures: int
    indeterminate: int
    passed: bool


def _sample_pairs(rec: InequalityRecord, rng: np.random.Generator, count: int):
    if rec.sampler == "unit-interval":
        low, high = 1e-6, 0.5 - 1e-6
        a = rng.uniform(low, high, count)
        b = rng.uniform(low, high, count)
        return a, b
    ratio = 10.0 ** rng.uniform(0.0, 8.0, count)
    b = 10.0 ** rng.uniform(-3.0, 3.0, count)
    return ratio * b, b


def _side_aggregate(margins, scales, a, b):
    m = np.asarray(margins, dtype=np.float64)
    s = np.asarray(scales, dtype=np.float64)
    threshold = _NOISE_FACTOR * _EPS * s
    fail = (m < 0.0) & (-m > threshold)
    ok = m > threshold
    indet = ~(fail | ok)
    ranked = np.where(np.isnan(m), np.inf, m)
    i = int(ranked.argmin())
    witness = (float(a[i]), float(b[i]))
    return float(m[i]), witness, int(fail.sum()), indet


def verify_random(rec, count: int, seed: int) -> VerificationReport:
    """Run one record over ``count`` seeded random pairs and aggregate.

    Sampling is log-uniform in the ratio a/b over (1, 1e8] with a random
    decade scale (the Ky Fan record instead draws both arguments uniformly
    from its stated domain).  ``passed`` means no sample produced a margin
    that is negative beyond the rounding-noise threshold.
    """
    rec = _resolve(rec)
    if count < 1:
        raise ParameterError("sample count must be >= 1")
    rng = np.random.default_rng(seed)
    a, b = _sample_pairs(rec, rng, int(count))
    sample = rec.margins(a, b)
    failures = 0
    min_lower = min_upper = None
    w_lower = w_upper = None
    indeterminate = np.zeros(int(count), dtype=bool)
    if sample.lower is not None:
        min_lower, w_lower, nfail, indet = _side_aggregate(sample.lower, sample.lower_scale, a, b)
        failures += nfail
        indeterminate |= indet
    if sample.upper is not None:
        min_upper, w_upper, nfail, indet = _side_aggregate(sample.upper, sample.upper_scale, a, b)
        failures += nfail
        indeterminate |= indet
    return VerificationReport(
        record_id=rec.id,
        samples=int(count),
        seed=int(seed),
        min_lower_margin=min_lower,
        lower_witness=w_lower,
        min_upper_margin=min_upper,
        upper_witness=w_upper,
        failures=failures,
        indeterminate=int(indeterminate.sum()),
        passed=failures == 0,
    )


# --------------------------------------------------------------------------
# sharpness


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of tightening one sharp constant by ε and hunting a witness."""

    record_id: str
    constant_name: str
    side: str
    endpoint: str
    epsilon: float
    tightened: float
    found: bool
    witness: tuple[float, float] | None
    steps: int
    margin: float | None


def sharpness_probe(rec, epsilon: float = 1e-6) -> tuple[ProbeResult, ...]:
    """Demonstrate sharpness of each of the record's constants.

    Each constant is moved by ε in the direction that strengthens its
    inequality; the probe then walks geometrically toward the endpoint
    where the constant is attained (ratios 1 + 2^-k for the near end,
    2^k for the far end, k = 1..64) and reports the first pair whose
    tightened margin is negative beyond the noise threshold.
    """
    rec = _resolve(rec)
    if not (epsilon > 0.0):
        raise ParameterError("epsilon must be positive")
    if not rec.probes:
        raise ParameterError(f"record {rec.id!r} has no sharp constants to probe")
    results = []
    for spec in rec.probes:
        const = rec.lower if spec.side == "lower" else rec.upper
        tightened = const.float_value + spec.tighten * epsilon
        found = False
        witness = None
        margin_at = None
        steps = _PROBE_STEPS
        for k in range(1, _PROBE_STEPS + 1):
            ratio = 1.0 + 2.0 ** (-k) if spec.endpoint == "near" else 2.0 ** k
            if ratio == 1.0:
                continue
            overrides = {"lower_c": tightened} if spec.side == "lower" else {"upper_c": tightened}
            sample = rec.margins(ratio, 1.0, **overrides)
            m = sample.lower if spec.side == "lower" else sample.upper
            s = sample.lower_scale if spec.side == "lower" else sample.upper_scale
            if _classify(float(m), float(s)) == "fail":
                found = True
                witness = (ratio, 1.0)
                margin_at = float(m)
                steps = k
                break
        results.append(
            ProbeResult(
                record_id=rec.id,
                constant_name=const.name,
                side=spec.side,
                endpoint=spec.endpoint,
                epsilon=epsilon,
                tightened=tightened,
                found=found,
                witness=witness,
                steps=steps,
                margin=margin_at,
            )
        )
    return tuple(results)
