"""Verification suites: each returns a finalized VerificationReport with cases in a fixed order."""

from __future__ import annotations

import itertools
import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import basic_rep as br
from .poly_rep import (LevelledAction, monomial_box, verify_poly_presentation,
                       verify_smash_compatibility, unfaithfulness_search)
from .rational import CoeffRing
from .report import CaseRecord, VerificationReport, check
from .roots import (RootSystemData, RootSystemSpec, build_root_system, cartan_determinant,
                    parabolic_subsystem)
from .weyl import compute_omega, enumerate_ball

log = logging.getLogger(__name__)

SUITES = ("relations", "triangularity", "pbw", "polynomial", "parabolic", "omega")


@dataclass
class RunConfig:
    family: str
    rank: int
    twist: str = "untwisted"
    suites: tuple[str, ...] = SUITES
    max_length: int = 4
    pbw_length: int = 3
    pbw_box: int = 2
    cross_set: str = "generators"
    level: int = 1
    box: int = 4
    seed: int = 0
    specialize: bool = False
    timing: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"unknown suites {bad}; choose from {', '.join(SUITES)}")
        for name in ("max_length", "pbw_length", "pbw_box", "level", "box"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < (0 if name.endswith("length") else 1):
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.cross_set not in ("generators", "extended"):
            raise ValueError("cross_set must be 'generators' or 'extended'")

    @property
    def spec(self) -> RootSystemSpec:
        return RootSystemSpec(self.family, self.rank, self.twist)


def random_tau(rs: RootSystemData, seed: int) -> dict[int, Fraction]:
    """Seeded nonzero rationals with tau^2 != 1, one per tau-orbit."""
    rng = random.Random(seed)
    out = {}
    for orbit in range(2):
        while True:
            p, q = rng.randint(-9, 9), rng.randint(1, 9)
            if p and abs(p) != q:
                break
        out[orbit] = Fraction(p, q)
    return out


def make_ring(rs: RootSystemData, cfg: RunConfig) -> CoeffRing:
    ring = CoeffRing(rs)
    if cfg.specialize:
        ring = ring.specialized(random_tau(rs, cfg.seed))
    return ring


def _new_report(name: str, rs: RootSystemData, cfg: RunConfig, ring: CoeffRing) -> VerificationReport:
    extra = {}
    if cfg.specialize:
        extra["tau"] = {("short", "long")[k]: str(v) for k, v in ring.assignment.items()}
    return VerificationReport(name, rs.describe(), cfg.seed, extra=extra)


# -- relations --------------------------------------------------------------------------------


def relations_suite(rs, cfg, ring=None) -> VerificationReport:
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    report = _new_report("relations", rs, cfg, ring)
    n = rs.rank
    lams = (br.weight_test_set(n) if cfg.cross_set == "generators"
            else br.extended_weight_test_set(n))
    for j in range(n + 1):
        report.add(br.verify_quadratic(rep, j))
    for j in range(n + 1):
        for k in range(j + 1, n + 1):
            report.add(br.verify_braid(rep, j, k))
    omega = rep.W.omega()
    for u in omega:
        report.add(br.verify_omega(rep, u))
    for u in omega:
        for v in omega:
            report.add(br.verify_omega_product(rep, u, v))
    for lam in lams:
        for mu in lams:
            report.add(br.verify_x_relation(rep, lam, mu))
    for j in range(n + 1):
        for lam in lams:
            report.add(br.verify_cross(rep, j, lam))
    for j in range(n + 1):
        for lam in lams:
            for mu in lams:
                report.add(br.verify_cross_additivity(rep, j, lam, mu))
    for w, _ in enumerate_ball(rep.W, 2):
        for j in range(n + 1):
            report.add(br.verify_covariance(rep, w, rs.affine_simple_root(j)))
    return report


# -- triangularity ------------------------------------------------------------------------------


def triangularity_suite(rs, cfg, ring=None) -> VerificationReport:
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    report = _new_report("triangularity", rs, cfg, ring)
    ball = enumerate_ball(rep.W, cfg.max_length)
    for w, _ in ball:
        report.add(br.triangular_case(rep, w))
    for w, _ in ball:
        report.add(br.inversion_case(rep, w))
    report.extra["ball"] = len(ball)
    return report


# -- PBW -----------------------------------------------------------------------------------------


def pbw_pairs(rep, length: int, bound: int):
    ball = [w for w, _ in enumerate_ball(rep.W, length)]
    box = monomial_box(rep.rs.rank, bound)
    return [(mu, w) for w in ball for mu in box]


def pbw_suite(rs, cfg, ring=None) -> VerificationReport:
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    report = _new_report("pbw", rs, cfg, ring)
    pairs = pbw_pairs(rep, cfg.pbw_length, cfg.pbw_box)
    params = {"pairs": len(pairs), "max_length": cfg.pbw_length, "box": cfg.pbw_box}
    res = br.pbw_independence(rep, pairs)
    report.add(check("pbw-independence", params, res.independent, res.reason))
    # injected duplicate: must be detected with an explicit dependency
    dup = br.pbw_independence(rep, pairs + [pairs[len(pairs) // 2]])
    caught = (not dup.independent) and bool(dup.witness)
    mu, w = pairs[len(pairs) // 2]
    report.add(check("pbw-duplicate-detected", {"mu": mu, "w": br._word_label(rep, w)}, caught,
                     "duplicate not detected",
                     note=None if not caught else _render_witness(rep, dup.witness)))
    return report


def _render_witness(rep, witness) -> str:
    return " + ".join(f"({c})*X^{mu}*T{br._word_label(rep, w)}" for c, mu, w in witness)


# -- polynomial --------------------------------------------------------------------------------------


def polynomial_suite(rs, cfg, ring=None) -> VerificationReport:
    ring = ring or make_ring(rs, cfg)
    act = LevelledAction(rs, cfg.level)
    box = monomial_box(rs.rank, cfg.box)
    report = verify_poly_presentation(rs, act, box, ring, cross=cfg.cross_set == "extended")
    report.seed = cfg.seed
    if cfg.specialize:
        report.extra["tau"] = {("short", "long")[k]: str(v) for k, v in ring.assignment.items()}
    rep = br.BasicRepresentation(ring)
    small = monomial_box(rs.rank, min(cfg.box, 2))
    report.cases.extend(verify_smash_compatibility(act, ring, small, rep))
    hits = unfaithfulness_search(act, ring, monomial_box(rs.rank, 1), enumerate_ball(act.W, 2))
    report.extra["coincidences"] = [(br._word_label(rep, a), br._word_label(rep, b)) for a, b in hits]
    return report


# -- parabolic -------------------------------------------------------------------------------------------


def parabolic_suite(rs, cfg, ring=None) -> VerificationReport:
    """For every k: R_k is a finite rank-n system and the relations avoiding index k hold."""
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    report = _new_report("parabolic", rs, cfg, ring)
    n = rs.rank
    for k in range(n + 1):
        sub = parabolic_subsystem(rs, k)
        idx = [j for j in range(n + 1) if j != k]
        finite = all(rs.coxeter[a][b] != float("inf") for a in idx for b in idx)
        params = {"k": k, "roots": len(sub.members), "components": len(sub.components)}
        report.add(check("parabolic-finite", params, sub.rank == n and finite,
                         f"rank {sub.rank}, finite Coxeter submatrix: {finite}"))
        for j in idx:
            c = br.verify_quadratic(rep, j)
            c.params["k"] = k
            report.add(c)
        for a, b in itertools.combinations(idx, 2):
            c = br.verify_braid(rep, a, b)
            c.params["k"] = k
            report.add(c)
    return report


# -- omega ---------------------------------------------------------------------------------------------------


def omega_suite(rs, cfg, ring=None) -> VerificationReport:
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    W = rep.W
    report = _new_report("omega", rs, cfg, ring)
    omega = W.omega()
    det = cartan_determinant(rs)
    report.add(check("omega-order", {"order": len(omega), "cartan_determinant": det},
                     len(omega) == det, f"|Omega| = {len(omega)} but determinant = {det}"))
    for method in ("search", "closed"):
        other = compute_omega(W, method)
        same = sorted((u.elt.v, u.elt.lam) for u in other) == sorted((u.elt.v, u.elt.lam) for u in omega)
        report.add(check("omega-method", {"method": method}, same, "methods disagree"))
    for u in omega:
        bad = []
        for j in range(rs.rank + 1):
            img = W.act_on_affine_root(u.elt, rs.affine_simple_root(j))
            if img != rs.affine_simple_root(u.perm[j]):
                bad.append(j)
        report.add(check("omega-permutation", {"u": u.index, "perm": u.perm,
                                               "length": W.length(u.elt)},
                         not bad and W.length(u.elt) == 0, f"u a_j != a_(u_j) for j in {bad}"))
    report.add(br.verify_omega_descent(rep))
    return report


RUNNERS = {
    "relations": relations_suite,
    "triangularity": triangularity_suite,
    "pbw": pbw_suite,
    "polynomial": polynomial_suite,
    "parabolic": parabolic_suite,
    "omega": omega_suite,
}


def run_suite(name: str, cfg: RunConfig, rs: RootSystemData | None = None) -> VerificationReport:
    rs = rs or build_root_system(cfg.spec)
    t0 = time.perf_counter()
    log.info("running %s on %s", name, rs)
    report = RUNNERS[name](rs, cfg)
    report.timing_ms = (time.perf_counter() - t0) * 1000 if cfg.timing else None
    log.info("%s: %s", name, report.counts())
    return report.finalize()


def run(cfg: RunConfig) -> list[VerificationReport]:
    rs = build_root_system(cfg.spec)
    return [run_suite(name, cfg, rs) for name in cfg.suites]


def outcome_signature(reports) -> list[tuple[str, str, str]]:
    """(suite, relation, status) per case: what specialization consistency compares."""
    return [(r.suite, c.relation, c.status) for r in reports for c in r.cases]


# -- negative controls ------------------------------------------------------------------------------


def _control(name: str, params: dict, case) -> CaseRecord:
    """A control passes when the mutated check fails and carries a nonzero witness."""
    caught = case.status == "fail" and bool(case.witness) and case.witness.strip() != "0"
    return CaseRecord(f"control:{name}", params, "pass" if caught else "fail",
                      None if caught else f"mutated check returned {case.status}",
                      note=(case.witness or "")[:160] if caught else None)


def controls_suite(rs, cfg, ring=None) -> VerificationReport:
    """Mutated operators (tau -> tau^2 on one side) must be rejected by every checker."""
    ring = ring or make_ring(rs, cfg)
    rep = br.BasicRepresentation(ring)
    bad = br.BasicRepresentation(ring, tau_power=2)
    report = _new_report("controls", rs, cfg, ring)
    n = rs.rank
    for j in range(n + 1):
        report.add(_control("quadratic", {"j": j}, br.verify_quadratic(rep, j, op=bad.T(j))))
    for j in range(n + 1):
        for k in range(j + 1, n + 1):
            m = rs.coxeter[j][k]
            if m == float("inf"):
                continue
            lhs = bad.T(j) * br.braid_product(rep, k, j, int(m) - 1)
            rhs = br.braid_product(rep, k, j, int(m))
            case = check("braid", {"j": j, "k": k}, lhs == rhs, lambda: (lhs - rhs).render())
            report.add(_control("braid", {"j": j, "k": k}, case))
    W = rep.W
    for j in range(n + 1):
        # a weight moved by s_j, otherwise both sides commute and the control is void
        lam = next(x for x in br.weight_test_set(n) if W.act_weight(W.simple[j].v, x) != x)
        slam = W.act_weight(W.simple[j].v, lam)
        T = bad.T(j)
        residue = T * rep.x(lam) - rep.x(slam) * T - rep.correction(j, lam)
        case = check("cross", {"j": j}, residue.is_zero(), residue.render)
        report.add(_control("cross", {"j": j, "lambda": lam}, case))
    omega = rep.W.omega()
    if len(omega) > 1:
        u = omega[1]
        j = next(i for i in range(n + 1) if u.perm[i] != i)
        U = rep.group(u.elt)
        residue = U * rep.T(j) - rep.T(j) * U
        case = check("omega", {"u": u.index, "j": j}, residue.is_zero(), residue.render)
        report.add(_control("omega", {"u": u.index, "j": j}, case))
    act = LevelledAction(rs, cfg.level)
    poly = verify_poly_presentation(rs, act, monomial_box(n, 1), ring, mutate=1)
    for c in poly.cases:
        if c.relation in ("quadratic",) and c.params.get("j") == 1:
            report.add(_control("poly-quadratic", {"j": 1}, c))
        if c.relation == "braid" and 1 in (c.params["j"], c.params["k"]) and c.status != "vacuous":
            report.add(_control("poly-braid", {"j": c.params["j"], "k": c.params["k"]}, c))
    return report
