"""Named machine checks for the chart ideals, with structured reports.

Every check returns a ``CheckResult`` whose status is one of ``pass``,
``fail``, ``timeout`` or ``not-applicable``; failures and timeouts always
carry a witness (offending generator, computed versus expected number,
budget note).  A suite over several charts aggregates to pass only when
every executed check passes.

Component primality is not fully verified here (that is out of reach for
this engine); the special-fiber check enforces the structural facts instead:
the ideal equality I_s = intersection of the components, the component
count, equidimensionality, pairwise incomparability, and the leading-term
criterion (no pure power of the designated variable), and each report
carries a note saying so.
"""

import time
from dataclasses import dataclass, field as dataclass_field

from .charts import Chart
from .errors import BudgetExceeded, NotApplicable
from .fields import QQ, coefficient_field
from .groebner import Budget
from .ideals import Ideal, pure_power_free
from .matrices import antidiag, constant_matrix
from .rings import cast

LEMMA_CHECKS = (
    "X2-in-Iprime",
    "antisym",
    "B1JB2-symmetric",
    "S0-relation",
    "trace-in-ideal",
    "A-relations",
    "minors-reduce",
)
CHECK_NAMES = LEMMA_CHECKS + ("reduction", "dimensions", "flatness", "special-fiber")

PRIMALITY_NOTE = ("component primality is checked only through the "
                  "leading-term criterion and the structural checks, "
                  "not proved in full")


@dataclass
class CheckResult:
    name: str
    status: str
    witness: dict | None = None
    millis: float = 0.0


@dataclass
class EngineConfig:
    """Field and budget configuration for a verification run."""

    modulus: int = 32003          # 0 selects the rationals
    timeout: float | None = None  # seconds per check
    full_matrix_limit: int = 6    # largest d for checks on the full d*d ring
    reduced_limit: int = 8        # largest d for reduced-ring checks

    def field(self):
        return coefficient_field(self.modulus)

    def budget(self):
        return Budget(seconds=self.timeout) if self.timeout else None

    def describe(self):
        return {
            "modulus": self.modulus,
            "order": "grlex",
            "budgets": {"timeout_seconds": self.timeout,
                        "full_matrix_limit": self.full_matrix_limit,
                        "reduced_limit": self.reduced_limit},
        }


@dataclass
class ChartReport:
    d: int
    l: int
    case: str
    checks: list
    engine: dict
    notes: list = dataclass_field(default_factory=list)

    def passed(self):
        return all(c.status == "pass" for c in self.checks
                   if c.status != "not-applicable") and \
            any(c.status == "pass" for c in self.checks)

    def statuses(self):
        return {c.name: c.status for c in self.checks}


@dataclass
class SuiteReport:
    reports: list
    aggregate_pass: bool
    note: str | None = None


def _finish(name, t0, status, witness=None):
    return CheckResult(name, status, witness, (time.monotonic() - t0) * 1000.0)


def _run(name, t0, thunk):
    """Run a check body, mapping budget exhaustion to a timeout result."""
    try:
        return thunk()
    except BudgetExceeded as exc:
        return _finish(name, t0, "timeout", {"budget": str(exc)})
    except NotApplicable as exc:
        return _finish(name, t0, "not-applicable", {"reason": str(exc)})


def _membership_check(name, t0, targets, ideal, budget, label):
    for tag, g in targets:
        if not ideal.contains(g, budget):
            return _finish(name, t0, "fail",
                           {"target": label, "offending": tag,
                            "generator": _clip(g)})
    return _finish(name, t0, "pass")


def _clip(g, limit=180):
    s = str(g)
    return s if len(s) <= limit else s[:limit] + " ..."


def _tagged_entries(tag, mat, rows=None, cols=None):
    out = []
    for i in range(mat.nrows):
        for j in range(mat.ncols):
            g = mat[i, j]
            if not g.is_zero():
                ii = rows[i] if rows else i + 1
                jj = cols[j] if cols else j + 1
                out.append(("%s[%d][%d]" % (tag, ii, jj), g))
    return out


def _lemma_data(chart, name):
    """Target polynomials and the ideal they must belong to, per lemma."""
    ring = chart.ring
    X = chart.x_matrix()
    B1, A, B2, _ = chart._blocks(X)
    pi = chart.pi()
    Jm = antidiag(ring, chart.mid_size)
    Je = antidiag(ring, chart.e)
    G0, G1 = chart.gram()
    S0 = constant_matrix(ring, G0)
    S1 = constant_matrix(ring, G1)
    lin = (S0 @ X) + (S1 @ X).scale(pi)

    if name == "X2-in-Iprime":
        return _tagged_entries("X^2", X @ X), chart.intermediate_ideal()
    if name == "antisym":
        return (_tagged_entries("AJ-JAt", (A @ Jm) - (Jm @ A.T)),
                chart.intermediate_ideal())
    if name == "B1JB2-symmetric":
        theta = B1 @ Je @ B2.T
        return (_tagged_entries("theta-asym", theta - theta.T),
                chart._cached("minors-ideal",
                              lambda: Ideal(ring, X.minors2())))
    if name == "S0-relation":
        rel0 = (X.T @ (S0 @ X)) - lin.scale(pi.scale(2))
        return _tagged_entries("S0-rel", rel0), chart.intermediate_ideal()
    if name == "trace-in-ideal":
        def build():
            gens = X.minors2()
            gens.append(A.trace() + pi.scale(2))
            gens += ((B2 @ Je @ B1.T) - (A @ Jm)).entries()
            gens += ((X.T @ (S1 @ X)) + lin.scale(2)).entries()
            return Ideal(ring, gens)
        return ([("Tr(X)", X.trace())],
                chart._cached("iprime-sans-trace", build))
    if name == "A-relations":
        def build():
            gens = X.minors2()
            gens.append(A.trace() + pi.scale(2))
            gens += ((B2 @ Je @ B1.T) - (A @ Jm)).entries()
            gens += chart.solve_relations()
            return Ideal(ring, gens)
        two_pi = pi.scale(2)
        targets = _tagged_entries("AtJB1", (A.T @ Jm @ B1) + (Jm @ B1).scale(two_pi))
        targets += _tagged_entries("AtJB2", (A.T @ Jm @ B2) + (Jm @ B2).scale(two_pi))
        targets += _tagged_entries("AtJA", (A.T @ Jm @ A) + (Jm @ A).scale(two_pi))
        return targets, chart._cached("solve-plus-band", build)
    if name == "minors-reduce":
        def build():
            band = chart._sub(X, chart.rows, chart.cols)
            gens = chart.solve_relations() + band.minors2()
            gens.append(A.trace() + pi.scale(2))
            gens += ((B2 @ Je @ B1.T) - (A @ Jm)).entries()
            return Ideal(ring, gens)
        targets = [("minor[%d]" % k, g) for k, g in enumerate(X.minors2())]
        return targets, chart._cached("solve-plus-reduced", build)
    raise ValueError("unknown lemma check %r" % (name,))


def verify_lemma(name, chart, cfg):
    """One of the seven reduction lemmas as a membership check."""
    t0 = time.monotonic()
    if name not in LEMMA_CHECKS:
        raise ValueError("unknown lemma check %r" % (name,))
    if not chart.same_parity:
        return _finish(name, t0, "not-applicable",
                       {"reason": "lemma suite is for same-parity charts"})
    if chart.d > cfg.full_matrix_limit:
        return _finish(name, t0, "not-applicable",
                       {"reason": "full-matrix checks gated to d <= %d"
                                  % cfg.full_matrix_limit})

    def body():
        targets, ideal = _lemma_data(chart, name)
        return _membership_check(name, t0, targets, ideal, cfg.budget(), name)
    return _run(name, t0, body)


def verify_reduction(chart, cfg):
    """The chart ideal presents the quadric-in-determinantal ring.

    (a) the intermediate ideal equals the full one; (b) the substitution
    sends every generator into the reduced ideal; (c) the reduced generators
    lift into the full ideal; (d) the substitution is a section, i.e.
    x - phi(x) lies in the full ideal for every matrix variable.
    """
    t0 = time.monotonic()
    if not chart.same_parity:
        return _finish("reduction", t0, "not-applicable",
                       {"reason": "substitution map is printed for "
                                  "same-parity charts only"})
    if chart.d > cfg.full_matrix_limit:
        return _finish("reduction", t0, "not-applicable",
                       {"reason": "full-matrix checks gated to d <= %d"
                                  % cfg.full_matrix_limit})

    def body():
        budget = cfg.budget()
        full = chart.full_ideal()
        inter = chart.intermediate_ideal()
        if not full.equals(inter, budget):
            gA = full.groebner(budget)
            gB = inter.groebner(budget)
            extra = [p for p in gA if p not in gB.polys] or \
                    [p for p in gB if p not in gA.polys]
            return _finish("reduction", t0, "fail",
                           {"subcheck": "intermediate-equality",
                            "witness": _clip(extra[0])})
        red = chart.reduced_ideal()
        phi = chart.substitution_map()
        red_gb = red.groebner(budget)
        for g in full.gens:
            if not red_gb.contains(g.substitute(phi, chart.reduced_ring)):
                return _finish("reduction", t0, "fail",
                               {"subcheck": "phi-image", "generator": _clip(g)})
        full_gb = full.groebner(budget)
        for g in red.gens:
            if not full_gb.contains(cast(g, chart.ring)):
                return _finish("reduction", t0, "fail",
                               {"subcheck": "reduced-lift", "generator": _clip(g)})
        for nm in chart.ring.names:
            if nm == "pi":
                continue
            diff = chart.ring.var(nm) - cast(phi[nm], chart.ring)
            if not full_gb.contains(diff):
                return _finish("reduction", t0, "fail",
                               {"subcheck": "section", "variable": nm})
        return _finish("reduction", t0, "pass")
    return _run("reduction", t0, body)


def verify_dimensions(chart, cfg):
    """Special and generic fibers of the reduced ideal have dimension d-2."""
    t0 = time.monotonic()
    if chart.d > cfg.reduced_limit:
        return _finish("dimensions", t0, "not-applicable",
                       {"reason": "reduced-ring checks gated to d <= %d"
                                  % cfg.reduced_limit})

    def body():
        want = chart.d - 2
        ds = chart.special_fiber_ideal().dimension(cfg.budget())
        dg = chart.generic_fiber_ideal().dimension(cfg.budget())
        if ds == want and dg == want:
            return _finish("dimensions", t0, "pass")
        return _finish("dimensions", t0, "fail",
                       {"expected": want, "special": ds, "generic": dg})
    return _run("dimensions", t0, body)


def verify_flatness_proxy(chart, cfg):
    """pi is a non-zerodivisor: (I'' : pi) = I'', exactly, over Q[pi]."""
    t0 = time.monotonic()
    if chart.d > cfg.reduced_limit:
        return _finish("flatness", t0, "not-applicable",
                       {"reason": "reduced-ring checks gated to d <= %d"
                                  % cfg.reduced_limit})

    def body():
        cq = chart if chart.field == QQ else Chart(chart.d, chart.l, QQ)
        red = cq.reduced_ideal()
        budget = cfg.budget()
        pi = cq.reduced_ring.var("pi")
        colon = red.quotient(pi, budget)
        if colon.equals(red, budget):
            return _finish("flatness", t0, "pass")
        gA = colon.groebner(budget)
        gB = red.groebner(budget)
        extra = [p for p in gA if p not in gB.polys] or \
                [p for p in gB if p not in gA.polys]
        return _finish("flatness", t0, "fail",
                       {"witness": _clip(extra[0]),
                        "note": "(I:pi) differs from I"})
    return _run("flatness", t0, body)


def verify_special_fiber(chart, cfg):
    """Decomposition and reducedness of the special fiber.

    (i) I_s equals the intersection of the component ideals; (ii) the
    component count matches the case table; (iii) every component has
    dimension d-2; (iv) no component contains another; (v) the designated
    variable of each component is not a pure power in its leading-term
    ideal.
    """
    t0 = time.monotonic()
    if chart.d > cfg.reduced_limit:
        return _finish("special-fiber", t0, "not-applicable",
                       {"reason": "reduced-ring checks gated to d <= %d"
                                  % cfg.reduced_limit})

    def body():
        budget = cfg.budget()
        fiber = chart.special_fiber_ideal()
        comps = chart.component_ideals()
        expected = expected_component_count(chart)
        if len(comps) != expected:
            return _finish("special-fiber", t0, "fail",
                           {"subcheck": "component-count",
                            "expected": expected, "got": len(comps)})
        inter = None
        for _, ideal, _ in comps:
            inter = ideal if inter is None else inter.intersect(ideal, budget)
        if not fiber.equals(inter, budget):
            gA = fiber.groebner(budget)
            gB = inter.groebner(budget)
            extra = [p for p in gA if p not in gB.polys] or \
                    [p for p in gB if p not in gA.polys]
            return _finish("special-fiber", t0, "fail",
                           {"subcheck": "intersection-equality",
                            "witness": _clip(extra[0])})
        want = chart.d - 2
        for label, ideal, _ in comps:
            dim = ideal.dimension(budget)
            if dim != want:
                return _finish("special-fiber", t0, "fail",
                               {"subcheck": "component-dimension",
                                "component": label,
                                "expected": want, "got": dim})
        for la, ia, _ in comps:
            for lb, ib, _ in comps:
                if la != lb and all(ib.contains(g, budget) for g in ia.gens):
                    return _finish("special-fiber", t0, "fail",
                                   {"subcheck": "incomparability",
                                    "contained": la, "in": lb})
        for label, ideal, v in comps:
            if not pure_power_free(ideal.groebner(budget), v):
                return _finish("special-fiber", t0, "fail",
                               {"subcheck": "pure-power-free",
                                "component": label, "variable": v})
        return _finish("special-fiber", t0, "pass",
                       {"components": comps.labels()})
    return _run("special-fiber", t0, body)


def expected_component_count(chart):
    """The case table: EE has three components when l = 2 or l = d-2, OO
    when l = d-2, OE when l = 2; every other case has two."""
    d, l, case = chart.d, chart.l, chart.case
    if case == "EE" and l in (2, d - 2):
        return 3
    if case == "OO" and l == d - 2:
        return 3
    if case == "OE" and l == 2:
        return 3
    return 2


def verify_check(name, chart, cfg):
    """Dispatch a named check."""
    if name in LEMMA_CHECKS:
        return verify_lemma(name, chart, cfg)
    if name == "reduction":
        return verify_reduction(chart, cfg)
    if name == "dimensions":
        return verify_dimensions(chart, cfg)
    if name == "flatness":
        return verify_flatness_proxy(chart, cfg)
    if name == "special-fiber":
        return verify_special_fiber(chart, cfg)
    raise ValueError("unknown check %r (choose from %s)"
                     % (name, ", ".join(CHECK_NAMES)))


def applicable_checks(chart, cfg):
    names = []
    if chart.same_parity and chart.d <= cfg.full_matrix_limit:
        names.extend(LEMMA_CHECKS)
        names.append("reduction")
    names.extend(["dimensions", "flatness", "special-fiber"])
    return names


def chart_report(chart, cfg, checks=None):
    names = checks if checks is not None else applicable_checks(chart, cfg)
    results = [verify_check(nm, chart, cfg) for nm in names]
    return ChartReport(chart.d, chart.l, chart.case, results,
                       cfg.describe(), [PRIMALITY_NOTE])


def run_suite(charts, cfg=None):
    """Run every applicable check on each (d, l); deterministic order."""
    cfg = cfg or EngineConfig()
    reports = []
    for d, l in sorted(set(charts)):
        chart = Chart(d, l, cfg.field())
        reports.append(chart_report(chart, cfg))
    if not reports:
        return SuiteReport([], False, "no checks run")
    ok = all(r.passed() for r in reports)
    return SuiteReport(reports, ok)


DEFAULT_SUITE = ((6, 2), (5, 3), (6, 3), (5, 2))
