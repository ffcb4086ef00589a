"""Registry of the audited source's numeric assertions, each recomputed.

Every printed numeric claim gets one record carrying its location (section /
lemma / table of the source document), the verbatim numeric fragment, the
recomputed value, a signed delta where meaningful, and a status:

    CONFIRMED   |delta| within the claim's tolerance, or the stated
                predicate holds over the full sweep
    DISCREPANT  recomputation contradicts the printed value
    ASSUMED     externally cited input the artifact cannot verify
    AMBIGUOUS   the claim admits readings the source does not resolve
    ERRORED     the computation itself failed (never expected)

Known discrepancies are carried in EXPECTED_DISCREPANT, which is policy data
for the strict exit mode only: it never changes how a claim is computed, and
an allowlisted claim that comes back CONFIRMED is reported as a warning so
the list cannot silently go stale.

Forensic notes baked into the expectations:

* CL-12: the printed corollary constant digit string -3.6113717392987086
  equals -2 log 2pi + (1/3) log 2 - 1/6, i.e. the symbolic constant with a
  dropped +log 2pi; the delta is accordingly ~log 2pi ~= 1.8379.
* CL-13: the printed slope 1.933721640489272 is the symbolic slope evaluated
  with the printed rounding 4 zeta'(-1) ~= -0.661685 (reproduced to ~6e-16).
* CL-19: the corollary statement prints 6/(pi y) where its own proof and the
  small-genus listing conclude 3/(pi y); the chain is CONFIRMED, the
  statement constant recorded separately as CL-19-statement.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Callable

from . import bounds, elliptic, torus
from .numerics import (
    DEFAULT_PRECISION,
    LN_2PI,
    LN_2PI4,
    Precision,
    UpperHalfPoint,
    exp_integral_e1,
    zeta_prime_minus1,
)

STATUSES = ("CONFIRMED", "DISCREPANT", "ASSUMED", "AMBIGUOUS", "ERRORED")

# Strict-mode policy data: claims allowed to be DISCREPANT without failing
# the audit.  CL-10 rows are included defensively (their tolerance is the
# loose 0.75 of an unrecoverable generating formula); when they confirm, the
# report warns about the stale allowlist entry instead of hiding it.
EXPECTED_DISCREPANT = (
    "CL-10-g2", "CL-10-g3", "CL-10-g4", "CL-10-g5", "CL-10-g6",
    "CL-10-g7", "CL-10-g8", "CL-10-g9", "CL-10-g10",
    "CL-11", "CL-12", "CL-14", "CL-19-statement",
)

SWEEP_G_RANGE = range(11, 3581)
ASYMPTOTE_SAMPLES = (3580, 10_000, 100_000)


@dataclass(frozen=True)
class Claim:
    """A registered assertion plus the recipe to recompute it."""

    id: str
    location: str
    quote: str
    kind: str  # equality | inequality | sweep | ambiguous
    claimed: float | str
    tolerance: float | None
    compute: Callable[[Precision], tuple]
    status_override: str | None = None  # ASSUMED / AMBIGUOUS claims


@dataclass(frozen=True)
class ClaimRecord:
    """One evaluated claim, as serialized into the report."""

    id: str
    location: str
    quote: str
    kind: str
    claimed: float | str
    computed: float | str | None
    delta: float | None
    status: str

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "location": self.location,
            "quote": self.quote,
            "kind": self.kind,
            "claimed": self.claimed,
            "computed": self.computed,
            "delta": self.delta,
            "status": self.status,
        }


@dataclass(frozen=True)
class ClaimReport:
    records: tuple[ClaimRecord, ...]
    precision: Precision
    warnings: tuple[str, ...]

    @property
    def summary(self) -> dict:
        counts = {status.lower(): 0 for status in STATUSES}
        for rec in self.records:
            counts[rec.status.lower()] += 1
        return counts

    def strict_ok(self) -> bool:
        """True unless some claim outside EXPECTED_DISCREPANT is DISCREPANT."""
        return not any(
            rec.status == "DISCREPANT" and rec.id not in EXPECTED_DISCREPANT
            for rec in self.records
        )

    def as_dict(self) -> dict:
        return {
            "precision": {
                "rel_tol": self.precision.rel_tol,
                "series_tail_tol": self.precision.series_tail_tol,
                "em_cutoff": self.precision.em_cutoff,
                "em_order": self.precision.em_order,
                "lattice_tail_tol": self.precision.lattice_tail_tol,
            },
            "claims": [rec.as_dict() for rec in self.records],
            "summary": self.summary,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def _id_sort_key(claim_id: str) -> tuple:
    return tuple(int(part) if part.isdigit() else part
                 for part in re.split(r"(\d+)", claim_id))


# ---------------------------------------------------------------------------
# Individual claim computations.  Each returns (computed, delta, passed);
# passed is ignored for ASSUMED/AMBIGUOUS claims.
# ---------------------------------------------------------------------------

def _cl01(prec):
    val = bounds.heat_integral()
    return val, val - 0.0832, (val <= 0.0832) and (val < 0.1)


def _cl02(prec):
    val = bounds.heat_integral()
    return val, val - 0.0832, abs(val - 0.0832) <= 2e-4


def _cl03(prec):
    # Large-g limit of the constant term: heat term - log 4 -> E1(1/4) - log 4.
    val = exp_integral_e1(0.25) - math.log(4.0)
    return val, val - (-0.33), abs(val - (-0.33)) <= 0.02


def _cl04(prec):
    val = 4.0 * math.pi * math.e
    return val, val - 36.0, val < 36.0


def _cl05(prec):
    val = bounds.kappa()
    return val, val - bounds.PAPER_KAPPA, abs(val - bounds.PAPER_KAPPA) <= 1e-8


def _cl06(prec):
    parts = {
        "log(2 pi^4)/3": (LN_2PI4 / 3.0, 1.7573),
        "(4/3) log 2pi": ((4.0 / 3.0) * LN_2PI, 2.4505),
        "log 2pi + log(2)/3": (LN_2PI + math.log(2.0) / 3.0, 2.07),
    }
    worst = max(abs(got - printed) for got, printed in parts.values())
    computed = "; ".join(f"{name} = {got:.6f} (printed {printed})"
                         for name, (got, printed) in parts.items())
    return computed, worst, worst <= 2e-3


def _cl07(prec):
    val = bounds.kappa()
    return val, val - 0.56, val < 0.56 < 1.0


def _sweep_margin(margin_of_g):
    worst_g = min(SWEEP_G_RANGE, key=margin_of_g)
    worst = margin_of_g(worst_g)
    return worst_g, worst


def _cl08(prec):
    worst_g, worst = _sweep_margin(
        lambda g: 0.44 * g - bounds.e_of_g(g, "refined"))
    computed = (f"0 violations over g in [11, 3580]; min margin "
                f"0.44g - E(g) = {worst:.6f} at g = {worst_g}")
    return computed, worst, worst > 0.0


def _cl09(prec):
    worst_g, worst = _sweep_margin(
        lambda g: g - bounds.upper_bound_logdet(g, "simplified").upper_simplified)
    computed = (f"0 violations over g in [11, 3580]; min margin "
                f"g - (0.56g + E(g)) = {worst:.6f} at g = {worst_g}")
    return computed, worst, worst > 0.0


def _cl10(g):
    def compute(prec):
        val = bounds.upper_bound_logdet(g, "exact", "c36").upper_exact
        delta = val - bounds.PAPER_TABLE_VALUES[g]
        return val, delta, abs(delta) <= 0.75
    return compute


def _cl11(prec):
    excesses = {
        g: bounds.upper_bound_logdet(g, "exact", "c36").upper_exact
        - (bounds.PAPER_KAPPA * g + 1.0)
        for g in ASYMPTOTE_SAMPLES
    }
    # The assembled bound exceeds kappa*g + 1 by ~log(g-1) + const, growing
    # with g, so no genus satisfies this reading.
    computed = "; ".join(f"excess at g={g}: {e:+.4f}" for g, e in excesses.items())
    computed += "; bound - (kappa g + 1) grows like log g: no genus satisfies"
    return computed, excesses[3580], all(e <= 0.0 for e in excesses.values())


def _cl12(prec):
    printed = -3.6113717392987086 + -0.661685
    _, c_a = bounds.fq_gap_coefficients("as_stated")
    return c_a, c_a - printed, abs(c_a - printed) <= 1e-6


def _cl13(prec):
    slope, _ = bounds.fq_gap_coefficients("as_stated")
    printed = 1.933721640489272
    return slope, slope - printed, abs(slope - printed) <= 1e-9


def _cl14(prec):
    val = 1.934 - 4.273  # the printed bound evaluated at g = 1
    printed = -2.334
    return val, val - printed, abs(val - printed) <= 1e-3


def _cl15(prec):
    val = bounds.genus0_det()
    return val, val - 2.46984, abs(val - 2.46984) <= 1e-4


def _cl16(prec):
    val = 4.0 * zeta_prime_minus1()
    printed = -0.661685
    return val, val - printed, abs(val - printed) <= 1e-5


def _cl17(prec):
    val = torus.spectral_zeta(torus.UnitTorus(UpperHalfPoint(0.0, 1.0)), 0.0, prec)
    return val, val - (-1.0), abs(val + 1.0) <= 1e-6


def _cl18(prec):
    worst = 0.0
    for tau in (UpperHalfPoint(0.0, 1.0), UpperHalfPoint(0.0, 2.0)):
        cmp = torus.compare_logdet(tau, prec)
        worst = max(worst, abs(cmp.difference))
    return worst, worst, worst <= 1e-6


def _cl19(prec):
    # Chain with 3/(pi y): 6 |q|/(1-|q|) = 6/(e^(2 pi y) - 1) <= 3/(pi y),
    # and the assembled bound dominates the Arakelov log det.
    violations = 0
    for i in range(500):
        y = 0.05 * (100.0 / 0.05) ** (i / 499.0)
        qa = math.exp(-2.0 * math.pi * y)
        if 6.0 * qa / (1.0 - qa) > 3.0 / (math.pi * y):
            violations += 1
        tau = UpperHalfPoint(0.3, y)
        if elliptic.arakelov_logdet(tau, prec) >= elliptic.elliptic_upper_bound_log(tau):
            violations += 1
    computed = (f"{violations} violations over 500 y in [0.05, 100] "
                f"(q-product chain and assembled genus-1 bound)")
    return computed, None, violations == 0


def _cl19_statement(prec):
    # Statement numerator 6 vs the proof / listing numerator 3.
    return 3.0, 3.0 - 6.0, abs(3.0 - 6.0) < 1e-12


def _cl20(prec):
    tau = UpperHalfPoint(0.0, 1.0)
    direct = elliptic.faltings_delta_elliptic(tau, "direct", prec)
    shifted = elliptic.faltings_delta_elliptic(tau, "shifted", prec)
    lower = bounds.wilms_lower(1)
    computed = (f"delta direct(i) = {direct:.6f}, shifted(i) = {shifted:.6f}, "
                f"lower bound -2 log(2 pi^4) = {lower:.6f}; margins "
                f"{direct - lower:+.6f} / {shifted - lower:+.6f}; the g = 1 "
                f"normalization reading is unresolved")
    return computed, None, None


def _cl21(prec):
    return None, None, None


def builtin_registry() -> list[Claim]:
    """The full claim registry, in id order, with per-claim tolerances
    matching the number of printed digits."""
    claims = [
        Claim("CL-01", "sec. 4", r"\le 0.0832<0.1", "inequality",
              "E1(1/4)/(4 pi) <= 0.0832 < 0.1", None, _cl01),
        Claim("CL-02", "sec. 4", "0.0832", "equality", 0.0832, 2e-4, _cl02),
        Claim("CL-03", "sec. 4", r"\frac{1}{g-1}-0.33", "equality",
              -0.33, 0.02, _cl03),
        Claim("CL-04", "sec. 4", r"e*4\pi(g-1)* (1366(g-1))^{..} < 36 (g-1)(..)",
              "inequality", "4 pi e < 36", None, _cl04),
        Claim("CL-05", "sec. 5", "0.5474277074g+1", "equality",
              0.5474277074, 1e-8, _cl05),
        Claim("CL-06", "sec. 4", r"\approx 1.7573-2.4505+2.07-\frac{1}{6}+4\zeta'(-1)",
              "equality", "partial constants 1.7573 / 2.4505 / 2.07", 2e-3, _cl06),
        Claim("CL-07", "sec. 4", "< 1.21-0.67=0.56<1", "inequality",
              "kappa < 0.56 < 1", None, _cl07),
        Claim("CL-08", "sec. 4", "for $g>10$, we have $E(g)<0.44g$", "sweep",
              "E_refined(g) < 0.44 g for 11 <= g <= 3580", None, _cl08),
        Claim("CL-09", "sec. 5", "Bounded above by $g$", "sweep",
              "0.56 g + E_refined(g) <= g for 11 <= g <= 3580", None, _cl09),
    ]
    for g, paper_val in sorted(bounds.PAPER_TABLE_VALUES.items()):
        claims.append(Claim(
            f"CL-10-g{g}", "sec. 5 table", f"$g={g}$: {paper_val}",
            "equality", paper_val, 0.75, _cl10(g)))
    claims += [
        Claim("CL-11", "sec. 5", r"$g\ge 3580$: Bounded above by $0.5474277074g+1$",
              "sweep", "upper_exact(g, c36) <= 0.5474277074 g + 1 for g >= 3580",
              None, _cl11),
        Claim("CL-12", "corollary (sec. 4)",
              r"\approx -3.6113717392987086-0.661685", "equality",
              -4.2730567392987086, 1e-6, _cl12),
        Claim("CL-13", "corollary (sec. 4)", r"\approx 1.933721640489272",
              "equality", 1.933721640489272, 1e-9, _cl13),
        Claim("CL-14", "corollary (sec. 4)", r"1.934g-4.273> -2.334",
              "equality", -2.334, 1e-3, _cl14),
        Claim("CL-15", "sec. 5", r"\approx 2.46984", "equality",
              2.46984, 1e-4, _cl15),
        Claim("CL-16", "corollary (sec. 4)", "-0.661685", "equality",
              -0.661685, 1e-5, _cl16),
        Claim("CL-17", "lemma 6.5 proof", "note $Z(0)=-1$", "equality",
              -1.0, 1e-6, _cl17),
        Claim("CL-18", "lemmas 6.4/6.5", r"\det(\Delta)=y|\eta(z)|^{4}",
              "equality", "spectral oracle = closed form at tau in {i, 2i}",
              1e-6, _cl18),
        Claim("CL-19", "corollary 6.6 proof",
              r"\le 2\log(y)-\frac{\pi y}{2}+\frac{3}{\pi y}", "sweep",
              "q-product chain with 3/(pi y) holds", None, _cl19),
        Claim("CL-19-statement", "corollary 6.6 statement", r"\frac{6}{\pi y}",
              "equality", 6.0, 1e-12, _cl19_statement),
        Claim("CL-20", "sec. 2", r"\delta_{Fal}(X)>-2g\log(2\pi^4)", "ambiguous",
              "delta(i) > -2 log(2 pi^4) under the g = 1 torsion relation",
              None, _cl20, status_override="AMBIGUOUS"),
        Claim("CL-21", "sec. 2",
              r"c_\text{sel}\ge -4\log(1366(g-1))", "ambiguous",
              "external inputs: c_sel lower bound, delta lower bound, "
              "metric-comparison corollary", None, _cl21,
              status_override="ASSUMED"),
    ]
    claims.sort(key=lambda c: _id_sort_key(c.id))
    return claims


def evaluate(claim: Claim, prec: Precision | None = None) -> ClaimRecord:
    """Recompute one claim; computation failures become ERRORED records."""
    p = prec or DEFAULT_PRECISION
    try:
        computed, delta, passed = claim.compute(p)
    except Exception as exc:  # noqa: BLE001 - audit must not abort
        return ClaimRecord(claim.id, claim.location, claim.quote, claim.kind,
                           claim.claimed, f"error: {exc}", None, "ERRORED")
    if claim.status_override is not None:
        status = claim.status_override
    else:
        status = "CONFIRMED" if passed else "DISCREPANT"
    return ClaimRecord(claim.id, claim.location, claim.quote, claim.kind,
                       claim.claimed, computed, delta, status)


def run_all(
    prec: Precision | None = None, only: list[str] | None = None
) -> ClaimReport:
    """Evaluate the registry (or the `only` subset) in id order.

    Deterministic: two runs at the same Precision serialize bit-identically.
    Raises KeyError for unknown ids in `only`.
    """
    p = prec or DEFAULT_PRECISION
    registry = builtin_registry()
    if only is not None:
        known = {c.id for c in registry}
        unknown = [cid for cid in only if cid not in known]
        if unknown:
            raise KeyError(f"unknown claim ids: {', '.join(unknown)}")
        wanted = set(only)
        registry = [c for c in registry if c.id in wanted]
    records = tuple(evaluate(claim, p) for claim in registry)
    warnings = tuple(
        f"{rec.id}: listed in the expected-discrepant allowlist but CONFIRMED"
        for rec in records
        if rec.id in EXPECTED_DISCREPANT and rec.status == "CONFIRMED"
    )
    return ClaimReport(records, p, warnings)
