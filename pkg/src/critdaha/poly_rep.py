"""Polynomial representation of W and of the Demazure-Lusztig operators on L[P].

At a level c in (<alpha_0, alpha_0>/2) N the extended affine Weyl group acts on
the weight lattice by affine maps, w X^lam = X^{w(lam)}, and the operators

    T_j f = tau_j s_j f + (tau_j - tau_j^-1) (f - s_j f) / (1 - X^{-alpha_j'})

preserve L[P].  Operator identities are checked extensionally on a box of
monomials.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import Laurent
from .rational import CoeffRing, exact_divide, render_poly
from .report import VACUOUS, CaseRecord, VerificationReport, check
from .roots import INFINITE_ORDER, RootSystemData
from .smash import SmashElt
from .weyl import ExtAffineWeylElt, affine_weyl_group


class LevelConstraintError(ValueError):
    """The level does not make W act on P (non-integral image)."""


class DivisibilityError(ArithmeticError):
    """A Demazure-Lusztig image left a nonzero remainder."""


class LevelledAction:
    """Affine action of W on P in fundamental-weight coordinates at level c = t <a0,a0>/2."""

    def __init__(self, rs: RootSystemData, t: int = 1):
        if not isinstance(t, int) or isinstance(t, bool) or t <= 0:
            raise LevelConstraintError(f"level parameter must be a positive integer, got {t!r}")
        self.rs = rs
        self.t = t
        self.W = affine_weyl_group(rs)
        self.c = Fraction(t * rs.norms[rs.alpha0], 2)
        self._shift: dict[tuple, tuple[int, ...]] = {}

    def translation_part(self, lam_hat) -> tuple[int, ...]:
        """c * lam_hat as a weight in fundamental-weight coordinates."""
        lam_hat = tuple(lam_hat)
        hit = self._shift.get(lam_hat)
        if hit is None:
            rs = self.rs
            vec = rs.coweight_to_vector(lam_hat)
            coords = [self.c * rs.vector_pair_coroot(vec, k) for k in range(rs.rank)]
            if any(x.denominator != 1 for x in coords):
                raise LevelConstraintError(
                    f"c = {self.c} maps coweight {lam_hat} to non-integral weight {coords}")
            hit = self._shift[lam_hat] = tuple(int(x) for x in coords)
        return hit

    def weight(self, w: ExtAffineWeylElt, lam) -> tuple[int, ...]:
        shift = self.translation_part(w.lam)
        return self.W.act_weight(w.v, tuple(a + b for a, b in zip(lam, shift)))

    def poly(self, w: ExtAffineWeylElt, f: Laurent) -> Laurent:
        n = self.rs.rank
        return f.map_keys(lambda k: self.weight(w, k[:n]) + k[n:])


def affine_weight_action(w: ExtAffineWeylElt, lam, act: LevelledAction) -> tuple[int, ...]:
    return act.weight(w, lam)


def dl_poly_apply(j: int, f: Laurent, act: LevelledAction, ring: CoeffRing,
                  tau_power: int = 1) -> Laurent:
    rs = act.rs
    g = rs.affine_simple[j]
    orbit = rs.orbit[g]
    sf = act.poly(act.W.simple[j], f)
    quotient = exact_divide(ring, f - sf, g)
    if quotient is None:
        raise DivisibilityError(f"T_{j} applied to {render_poly(rs, f)} is not a Laurent polynomial")
    tau = ring.tau(orbit, tau_power)
    return tau * sf + (tau - ring.tau(orbit, -tau_power)) * quotient


def dl_word_apply(word: Sequence[int], f: Laurent, act: LevelledAction, ring: CoeffRing,
                  u: ExtAffineWeylElt | None = None) -> Laurent:
    """u T_{j1} ... T_{jl} f (rightmost letter first)."""
    for j in reversed(word):
        f = dl_poly_apply(j, f, act, ring)
    if u is not None:
        f = act.poly(u, f)
    return f


def apply_smash(S: SmashElt, f: Laurent) -> Laurent:
    """Act by sum f_w w on a polynomial through gradients; the result must be polynomial."""
    ring = S.ring
    total = ring.fn(ring.const(0))
    for w, coef in S.terms.items():
        total = total + coef * ring.fn(ring.act_poly(w.v, f))
    if not total.is_polynomial():
        raise DivisibilityError(f"smash element applied to {render_poly(ring.rs, f)} has a denominator")
    return total.num


def monomial_box(n: int, bound: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(-bound, bound + 1), repeat=n))


def _label(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def verify_poly_presentation(rs: RootSystemData, act: LevelledAction, box: Iterable,
                             ring: CoeffRing | None = None, suite: str = "polynomial",
                             cross: bool = False, mutate: int | None = None) -> VerificationReport:
    """Divisibility, quadratic and braid relations (optionally cross) on every X^lam in the box.

    mutate=j replaces T_j by its tau -> tau^2 deformation on one side of each
    identity; it exists for negative controls only.
    """
    ring = ring or CoeffRing(rs)
    box = [tuple(b) for b in box]
    n = rs.rank
    report = VerificationReport(suite, rs.describe(), extra={"level": act.t, "c": str(act.c),
                                                          "box": len(box)})

    def T(j, f, power=1):
        return dl_poly_apply(j, f, act, ring, power)

    def lhs_power(j):
        return 2 if j == mutate else 1

    # divisibility
    for j in range(n + 1):
        failed = None
        for lam in box:
            try:
                T(j, ring.x(lam), lhs_power(j))
            except DivisibilityError as exc:
                failed = f"lambda={_label(lam)}: {exc}"
                break
        report.add(check("divisibility", {"j": j}, failed is None, failed))
    # quadratic: T^2 f = (tau - tau^-1) T f + f
    for j in range(n + 1):
        c = ring.tau_j(j) - ring.tau_j(j, -1)
        failed = None
        for lam in box:
            f = ring.x(lam)
            try:
                Tf = T(j, f, lhs_power(j))
                res = T(j, Tf, lhs_power(j)) - c * Tf - f
            except DivisibilityError as exc:
                failed = f"lambda={_label(lam)}: {exc}"
                break
            if res:
                failed = f"lambda={_label(lam)}: residue {render_poly(rs, res)}"
                break
        report.add(check("quadratic", {"j": j}, failed is None, failed))
    # braid
    for j in range(n + 1):
        for k in range(j + 1, n + 1):
            m = rs.coxeter[j][k]
            params = {"j": j, "k": k, "m": m}
            if m == INFINITE_ORDER:
                report.add(CaseRecord("braid", params, VACUOUS, note="m_jk = infinity"))
                continue
            m = int(m)
            failed = None
            for lam in box:
                f = g = ring.x(lam)
                try:
                    for i in range(m):
                        a = j if i % 2 == 0 else k
                        b = k if i % 2 == 0 else j
                        f = T(a, f, lhs_power(a))
                        g = T(b, g)
                except DivisibilityError as exc:
                    failed = f"lambda={_label(lam)}: {exc}"
                    break
                if f != g:
                    failed = f"lambda={_label(lam)}: residue {render_poly(rs, f - g)}"
                    break
            report.add(check("braid", params, failed is None, failed))
    if cross:
        W = act.W
        for j in range(n + 1):
            s = W.simple[j].v
            for i in range(n):
                for sign in (1, -1):
                    mu = tuple(sign * int(i == k) for k in range(n))
                    smu = W.act_weight(s, mu)
                    corr = _correction_poly(ring, j, mu, smu)
                    failed = None
                    for lam in box:
                        f = ring.x(lam)
                        res = T(j, ring.x(mu) * f) - ring.x(smu) * T(j, f) - corr * f
                        if res:
                            failed = f"lambda={_label(lam)}: residue {render_poly(rs, res)}"
                            break
                    report.add(check("cross", {"j": j, "mu": mu}, failed is None, failed))
    return report.finalize()


def _correction_poly(ring: CoeffRing, j: int, mu, smu) -> Laurent:
    rs = ring.rs
    g = rs.affine_simple[j]
    q = exact_divide(ring, ring.x(mu) - ring.x(smu), g)
    orbit = rs.orbit[g]
    return (ring.tau(orbit) - ring.tau(orbit, -1)) * q


def verify_smash_compatibility(act: LevelledAction, ring: CoeffRing, box, rep) -> list[CaseRecord]:
    """For j >= 1 the polynomial operator equals the smash-product T_j acting through W_0."""
    out = []
    for j in range(1, act.rs.rank + 1):
        failed = None
        for lam in box:
            f = ring.x(lam)
            a = dl_poly_apply(j, f, act, ring)
            b = apply_smash(rep.T(j), f)
            if a != b:
                failed = f"lambda={_label(lam)}: residue {render_poly(act.rs, a - b)}"
                break
        out.append(check("smash-compatibility", {"j": j}, failed is None, failed))
    return out


def unfaithfulness_search(act: LevelledAction, ring: CoeffRing, box, ball) -> list[tuple]:
    """Pairs of distinct ball elements whose operators agree on the box (empirical only)."""
    seen: dict[tuple, ExtAffineWeylElt] = {}
    hits = []
    W = act.W
    for w, _ in ball:
        u, word = W.reduced_word(w)
        try:
            sig = tuple(dl_word_apply(word, ring.x(lam), act, ring, u.elt) for lam in box)
        except DivisibilityError:
            continue
        prev = seen.get(sig)
        if prev is None:
            seen[sig] = w
        else:
            hits.append((prev, w))
    return hits
