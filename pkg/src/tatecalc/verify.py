"""Identity suites producing :class:`VerificationReport` records.

Each suite is deterministic given ``(ring, order, trials, seed, support)``.
Randomized checks are aggregated into one record per property; a failing
record carries the first offending trial as its witness.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .errors import CharacteristicError
from .fgl import FGLContext, group_law, group_law_checks, to_additive_coordinate
from .gradedring import RingDescriptor
from .series import (
    LaurentSeries,
    grading_stats,
    holomorphic_part,
    lagrange_reverse,
    principal_part,
    ser_add,
    ser_compose,
    ser_derivative,
    ser_invert,
    ser_mul,
    ser_residue,
    ser_reverse,
)
from .sampling import random_laurent, random_poly, random_power_series, random_substitution
from .tate import (
    TateModel,
    boardman_by_projection,
    boardman_transform,
    is_holomorphic,
    moments_of,
    p_star_del,
    reconstruct_from_moments,
    residue_functional,
)

SUITES = ("proposition", "lagrange", "residue", "boardman", "exactness", "grading", "fgl")
CHAR0_SUITES = {"proposition", "lagrange", "fgl"}


@dataclass
class CheckRecord:
    name: str
    passed: bool
    witness: Any = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    suite: str
    ring: str
    order: int
    trials: int
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)
    notes: dict[str, str] = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> CheckRecord | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "ring": self.ring,
            "order": self.order,
            "trials": self.trials,
            "seed": self.seed,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }
        if self.notes:
            out["notes"] = dict(sorted(self.notes.items()))
        failure = self.first_failure
        if failure is not None:
            out["first_failure"] = failure.to_json()
        if include_timing:
            out["duration_seconds"] = round(self.duration, 3)
        return out

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  ring {self.ring}  order {self.order}  "
                 f"trials {self.trials}  seed {self.seed}"]
        for c in self.checks:
            line = f"  {'PASS' if c.passed else 'FAIL'}  {c.name}"
            if not c.passed:
                line += f"  witness: {c.witness}"
            lines.append(line)
        for k, v in sorted(self.notes.items()):
            lines.append(f"  note  {k} = {v}")
        status = "pass" if self.passed else "FAIL"
        lines.append(f"{status}: {sum(c.passed for c in self.checks)}/{len(self.checks)} checks "
                     f"in {self.duration:.2f}s")
        return "\n".join(lines)


class _Trials:
    """Collects one pass/fail record per property over many trials."""

    def __init__(self, trials: int):
        self.trials = trials
        self._records: dict[str, CheckRecord] = {}

    def check(self, name: str, ok: bool, witness: Callable[[], Any] | Any = None):
        rec = self._records.get(name)
        if rec is None:
            rec = self._records[name] = CheckRecord(name, True)
        if not ok and rec.passed:
            rec.passed = False
            rec.witness = witness() if callable(witness) else witness

    def records(self) -> list[CheckRecord]:
        return list(self._records.values())


def _require_char0(ring: RingDescriptor, suite: str):
    if ring.characteristic != 0:
        raise CharacteristicError(f"suite {suite!r} needs the characteristic-0 ring")


def _grading_ok(s: LaurentSeries) -> bool:
    return all(p.degree == s.degree + n for n, p in s.coeffs.items())


# ------------------------------------------------------------------ suites

def suite_proposition(ring, order, trials, seed, support) -> tuple[list[CheckRecord], dict]:
    """res_z c^(-k-1) = p_k after c = exp(z), for every k <= order."""
    _require_char0(ring, "proposition")
    ctx = FGLContext(ring, order)
    checks = []
    for k in range(order + 1):
        c_power = LaurentSeries.monomial(ring, "c", -k - 1, -1)
        res = ser_residue(to_additive_coordinate(ctx, c_power))
        expected = ring.designated_class(k)
        checks.append(CheckRecord(f"res c^-{k + 1} = p_{k}", res == expected,
                                  {"k": k, "residue": str(res), "expected": str(expected)}))
    return checks, {}


def suite_fgl(ring, order, trials, seed, support):
    """Mutual inversion of log/exp, the generating identity, and group-law axioms."""
    _require_char0(ring, "fgl")
    ctx = FGLContext(ring, order)
    z = LaurentSeries.monomial(ring, "z", 1, order)
    u = LaurentSeries.monomial(ring, "u", 1, order)
    log_exp = ser_compose(ctx.log, ctx.exp)
    exp_log = ser_compose(ctx.exp, ctx.log)
    checks = [
        CheckRecord("log(exp(z)) = z", log_exp.agrees_with(z, order), str(log_exp)),
        CheckRecord("exp(log(u)) = u", exp_log.agrees_with(u, order), str(exp_log)),
        CheckRecord("d/du log = log'", ser_derivative(ctx.log) == ctx.log_prime),
    ]
    residues = {}
    for k in range(order + 1):
        c_power = LaurentSeries.monomial(ring, "c", -k - 1, -1)
        residues[k] = ser_residue(to_additive_coordinate(ctx, c_power))
    generating = LaurentSeries(ring, "u", 0, residues, order, 0)
    checks.append(CheckRecord("sum_k res(c^-k-1) u^k = log'(u)", generating == ctx.log_prime,
                              str(generating)))
    law_order = min(order, 6)
    for name, ok in group_law_checks(ctx, law_order).items():
        checks.append(CheckRecord(f"group law {name} (total order {law_order})", ok))
    a11 = group_law(ctx, min(order, 2)).coefficient(1, 1) if order >= 2 else None
    notes = {"a11": str(a11)} if a11 is not None else {}
    return checks, notes


def suite_lagrange(ring, order, trials, seed, support):
    """sum_k res(f^-k-1) u^k = (f^-1)'(u) and agreement of the two reversion algorithms."""
    _require_char0(ring, "lagrange")
    rng = random.Random(seed)
    t = _Trials(trials)
    for i in range(trials):
        f = random_substitution(ring, "z", order, rng, support)
        g = ser_reverse(f, "u")
        f_inv = ser_invert(f)
        residues = {}
        power = f_inv
        for k in range(order):
            if k:
                power = ser_mul(power, f_inv)
            residues[k] = ser_residue(power)
        lhs = LaurentSeries(ring, "u", 0, residues, order - 1, 0)
        rhs = ser_derivative(g)
        t.check("generalized Lagrange identity", lhs == rhs,
                lambda: {"trial": i, "f": str(f), "lhs": str(lhs), "rhs": str(rhs)})
        t.check("recursion = residue formula", g == lagrange_reverse(f, "u"),
                lambda: {"trial": i, "f": str(f)})
        comp = ser_compose(f.rename("u"), g.rename("z"))
        t.check("f(g(u)) = u", comp == LaurentSeries.monomial(ring, "z", 1, comp.order),
                lambda: {"trial": i, "f": str(f)})
    return t.records(), {}


def suite_residue(ring, order, trials, seed, support):
    """res(S') = 0 and res(L(f) f') = res(L)."""
    rng = random.Random(seed)
    t = _Trials(trials)
    for i in range(trials):
        s = random_laurent(ring, "z", order, rng, depth=4, support=support)
        t.check("res(S') = 0", ser_residue(ser_derivative(s)).is_zero(),
                lambda: {"trial": i, "S": str(s)})
        L = random_laurent(ring, "c", order, rng, depth=4, support=support)
        f = random_substitution(ring, "z", order, rng, support)
        lhs = ser_residue(ser_mul(ser_compose(L, f), ser_derivative(f)))
        rhs = ser_residue(L)
        t.check("res(L(f) f') = res(L)", lhs == rhs,
                lambda: {"trial": i, "L": str(L), "f": str(f), "lhs": str(lhs), "rhs": str(rhs)})
    return t.records(), {}


def suite_boardman(ring, order, trials, seed, support):
    """Projection laws of the Boardman transform."""
    rng = random.Random(seed)
    model = TateModel(ring, order)
    var = model.variable
    t = _Trials(trials)
    notes = {}
    if ring.characteristic == 2 and order >= 6:
        got = boardman_transform(model, model.monomial(-1))
        expected = "x2*w + (x2^2+x4)*w^3 + (x2^3+x6)*w^5"
        t.check("B(w^-1) worked value", got.truncate(6).to_text() == expected, str(got))
    if ring.characteristic == 0:
        t.check("p*d(c^-k-1) = res after c = exp(z), k <= order",
                all(residue_functional(model, model.monomial(-k - 1, order=-1))
                    == ring.designated_class(k) for k in range(order + 1)))
    for i in range(trials):
        L = random_laurent(ring, var, order, rng, depth=4, support=support)
        S = random_power_series(ring, var, order, rng, support=support)
        B = boardman_transform(model, L)
        t.check("B(L) is a power series", B.is_power_series(), lambda: {"trial": i, "L": str(L)})
        t.check("B preserves degree", B.degree == L.degree or B.is_zero(),
                lambda: {"trial": i, "L": str(L)})
        BB = boardman_transform(model, B)
        t.check("B(B(L)) = B(L)", BB.agrees_with(B), lambda: {"trial": i, "L": str(L)})
        t.check("B(L) = pi^-1 hol(L pi)", B == boardman_by_projection(model, L),
                lambda: {"trial": i, "L": str(L)})
        t.check("reconstruct(moments(L)) = B(L)",
                reconstruct_from_moments(model, moments_of(model, L)) == B,
                lambda: {"trial": i, "L": str(L)})
        BS = boardman_transform(model, S)
        t.check("B(S) = S for holomorphic S", BS == S.truncate(BS.order) and BS.order == S.order,
                lambda: {"trial": i, "S": str(S)})
        t.check("B(L) = L iff L holomorphic",
                (B.agrees_with(L) and L.order == B.order) == bool(is_holomorphic(model, L)),
                lambda: {"trial": i, "L": str(L)})
        c = random_poly(ring, rng.randint(0, 3), rng, support)
        L2 = random_laurent(ring, var, order, rng, depth=4, support=support,
                            degree=L.degree + c.degree)
        lin_lhs = boardman_transform(model, ser_add(L * c, L2))
        lin_rhs = ser_add(B * c, boardman_transform(model, L2))
        t.check("B linear over coefficients", lin_lhs == lin_rhs,
                lambda: {"trial": i, "L": str(L), "c": str(c), "L2": str(L2)})
    return t.records(), notes


def suite_exactness(ring, order, trials, seed, support):
    """Holomorphic/principal split of the Laurent ring."""
    rng = random.Random(seed)
    t = _Trials(trials)
    var = "w" if ring.characteristic == 2 else "c"
    for i in range(trials):
        L = random_laurent(ring, var, order, rng, depth=4, support=support)
        hol, prin = holomorphic_part(L), principal_part(L)
        t.check("hol + principal = id", ser_add(hol, prin) == L, lambda: {"trial": i, "L": str(L)})
        t.check("hol o hol = hol", holomorphic_part(hol) == hol, lambda: {"trial": i, "L": str(L)})
        t.check("principal vanishes exactly on power series",
                principal_part(L).is_zero() == L.is_power_series(), lambda: {"trial": i, "L": str(L)})
        S = random_power_series(ring, var, order, rng, support=support)
        t.check("hol o incl = id", holomorphic_part(S) == S, lambda: {"trial": i, "S": str(S)})
        t.check("principal o incl = 0", principal_part(S).is_zero(), lambda: {"trial": i, "S": str(S)})
    return t.records(), {}


def suite_grading(ring, order, trials, seed, support):
    """Run every series operation on random inputs and re-check the grading law."""
    rng = random.Random(seed)
    t = _Trials(trials)
    violations_before = grading_stats["violations"]
    model = TateModel(ring, order)
    var = model.variable
    ctx = FGLContext(ring, order) if ring.characteristic == 0 else None
    for i in range(trials):
        a = random_laurent(ring, var, order, rng, depth=3, support=support)
        b = random_laurent(ring, var, order, rng, depth=3, support=support, degree=a.degree)
        f = random_substitution(ring, "z", order, rng, support)
        outputs = {
            "add": ser_add(a, b),
            "mul": ser_mul(a, b),
            "derivative": ser_derivative(a),
            "compose": ser_compose(a, f),
            "reverse": ser_reverse(f, "u"),
            "invert": ser_invert(f),
            "holomorphic_part": holomorphic_part(a),
            "principal_part": principal_part(a),
            "boardman": boardman_transform(model, a),
        }
        if ctx is not None:
            outputs["to_additive"] = to_additive_coordinate(ctx, a)
        for name, out in outputs.items():
            t.check(f"grading law: {name}", _grading_ok(out), lambda: {"trial": i, "a": str(a)})
        t.check("residue lowers degree by 1", ser_residue(a).degree == a.degree - 1 or a.coefficient(-1).is_zero())
        t.check("p*d lowers degree by 1", p_star_del(model, a).degree == a.degree - 1)
        if ring.characteristic == 0:
            t.check("residue functional lowers degree by 1",
                    residue_functional(model, a).degree == a.degree - 1)
    t.check("no grading violations raised", grading_stats["violations"] == violations_before)
    return t.records(), {}


_RUNNERS = {
    "proposition": suite_proposition,
    "lagrange": suite_lagrange,
    "residue": suite_residue,
    "boardman": suite_boardman,
    "exactness": suite_exactness,
    "grading": suite_grading,
    "fgl": suite_fgl,
}


def suites_for(ring: RingDescriptor) -> list[str]:
    return [s for s in SUITES if ring.characteristic == 0 or s not in CHAR0_SUITES]


def run_suite(suite: str, ring: RingDescriptor, order: int = 8, trials: int = 100,
              seed: int = 0, support: int = 3) -> VerificationReport:
    """Run one suite (or ``"all"`` compatible suites) and collect a report."""
    start = time.perf_counter()
    names: Iterable[str]
    if suite == "all":
        names = suites_for(ring)
    elif suite in _RUNNERS:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    report = VerificationReport(suite, ring.name or "custom", order, trials, seed)
    for name in names:
        checks, notes = _RUNNERS[name](ring, order, trials, seed, support)
        if suite == "all":
            for c in checks:
                c.name = f"{name}: {c.name}"
        report.checks.extend(checks)
        report.notes.update(notes)
    report.duration = time.perf_counter() - start
    return report
