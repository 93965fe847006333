"""The basic representation T_j -> T-check_j, T_u -> u, X^lam -> X^lam in A # W.

Besides building the Demazure-Lusztig elements this module checks the
defining relations of the critical-level DAHA on their images, and certifies
injectivity at desk scale: the expansion of T-check_w over the Bruhat ideal
of w, invertibility of its leading coefficient in the delta_tau
localization, the inverse triangular expansion, and L-linear independence of
the X^mu T-check_w.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rational import CoeffRing, RationalFn, is_delta_tau_unit
from .report import VACUOUS, CaseRecord, check
from .roots import AffineRoot, INFINITE_ORDER
from .smash import SmashElt, embed_fn, embed_group, smash_sum
from .weyl import ExtAffineWeylElt, OmegaElt, bruhat_leq


class BasicRepresentation:
    """Images of the DAHA generators over a fixed coefficient ring (with caches)."""

    def __init__(self, ring: CoeffRing, tau_power: int = 1):
        self.ring = ring
        self.rs = ring.rs
        self.W = ring.W
        # tau_power != 1 builds a deliberately wrong operator (negative controls)
        self.tau_power = tau_power
        self._T: dict[int, SmashElt] = {}
        self._Tw: dict[ExtAffineWeylElt, SmashElt] = {}
        self._tri: dict[ExtAffineWeylElt, "TriangularExpansion"] = {}
        self._inv: dict[ExtAffineWeylElt, dict[ExtAffineWeylElt, RationalFn]] = {}

    # -- generators ----------------------------------------------------------------

    def T_affine(self, a: AffineRoot) -> SmashElt:
        """tau_a s_a + (tau_a - tau_a^-1)/(1 - X^-alpha) (1 - s_a)."""
        ring, rs = self.ring, self.rs
        rs.check_affine_root(a)
        orbit = rs.orbit[a.root]
        p = self.tau_power
        tau = ring.fn(ring.tau(orbit, p))
        c = ring.fn(ring.tau(orbit, p) - ring.tau(orbit, -p))
        q = c * ring.inv_one_minus_x(rs.neg(a.root))
        s = self.W.reflection(a)
        return SmashElt(ring, {self.W.identity: q, s: tau - q})

    def T(self, j: int) -> SmashElt:
        op = self._T.get(j)
        if op is None:
            op = self._T[j] = self.T_affine(self.rs.affine_simple_root(j))
        return op

    def T_inverse(self, j: int) -> SmashElt:
        """T_j^-1 = T_j - (tau_j - tau_j^-1)."""
        ring = self.ring
        orbit = self.rs.orbit[self.rs.affine_simple[j]]
        return self.T(j) - embed_fn(ring, ring.tau(orbit) - ring.tau(orbit, -1))

    def tau_j(self, j: int) -> RationalFn:
        return self.ring.fn(self.ring.tau_j(j))

    def x(self, lam) -> SmashElt:
        return embed_fn(self.ring, self.ring.x(lam))

    def group(self, w: ExtAffineWeylElt) -> SmashElt:
        return embed_group(self.ring, w)

    def word(self, u: OmegaElt | None, word: Sequence[int]) -> SmashElt:
        """u T_{j1} ... T_{jl} for an arbitrary (not necessarily reduced) word."""
        out = SmashElt.one(self.ring) if u is None else self.group(u.elt)
        for j in word:
            out = out * self.T(j)
        return out

    def T_elt(self, w: ExtAffineWeylElt) -> SmashElt:
        """T-check_w through a reduced word of w, built incrementally and cached."""
        hit = self._Tw.get(w)
        if hit is None:
            u, word = self.W.reduced_word(w)
            if not word:
                hit = self.group(u.elt)
            else:
                prefix = self.W.word_element(u, word[:-1])
                hit = self.T_elt(prefix) * self.T(word[-1])
            self._Tw[w] = hit
        return hit

    def correction(self, j: int, lam) -> RationalFn:
        """(tau_j - tau_j^-1)(X^lam - X^{s_j' lam})/(1 - X^-alpha_j)."""
        ring, rs = self.ring, self.rs
        g = rs.affine_simple[j]
        s = self.W.simple[j].v
        lam = tuple(lam)
        slam = self.W.act_weight(s, lam)
        orbit = rs.orbit[g]
        p = self.tau_power
        c = ring.tau(orbit, p) - ring.tau(orbit, -p)
        return ring.fn(c * (ring.x(lam) - ring.x(slam))) * ring.inv_one_minus_x(rs.neg(g))


def demazure_lusztig(rep: BasicRepresentation, a) -> SmashElt:
    """T-check(a) for an affine root, or T-check_j for a simple index j."""
    if isinstance(a, AffineRoot):
        return rep.T_affine(a)
    return rep.T(a)


def rep_image(rep: BasicRepresentation, u: OmegaElt | None, word: Sequence[int]) -> SmashElt:
    return rep.word(u, word)


# -- relations ------------------------------------------------------------------------


def verify_quadratic(rep: BasicRepresentation, j: int, op: SmashElt | None = None) -> CaseRecord:
    """(T_j - tau_j)(T_j + tau_j^-1) == 0."""
    T = rep.T(j) if op is None else op
    ring = rep.ring
    tau = ring.tau_j(j)
    residue = (T - tau) * (T + ring.tau_j(j, -1))
    return check("quadratic", {"j": j}, residue.is_zero(), residue.render)


def braid_product(rep: BasicRepresentation, j: int, k: int, m: int) -> SmashElt:
    out = SmashElt.one(rep.ring)
    for i in range(m):
        out = out * rep.T(j if i % 2 == 0 else k)
    return out


def verify_braid(rep: BasicRepresentation, j: int, k: int) -> CaseRecord:
    m = rep.rs.coxeter[j][k]
    params = {"j": j, "k": k, "m": m}
    if m == INFINITE_ORDER:
        return CaseRecord("braid", params, VACUOUS, note="m_jk = infinity, no braid relation")
    m = int(m)
    lhs = braid_product(rep, j, k, m)
    rhs = braid_product(rep, k, j, m)
    return check("braid", params, lhs == rhs, lambda: (lhs - rhs).render())


def verify_cross(rep: BasicRepresentation, j: int, lam) -> CaseRecord:
    """T_j X^lam - X^{s_j' lam} T_j - r_j(lam) == 0 with r_j(lam) a Laurent polynomial."""
    lam = tuple(lam)
    W = rep.W
    slam = W.act_weight(W.simple[j].v, lam)
    T = rep.T(j)
    r = rep.correction(j, lam)
    residue = T * rep.x(lam) - rep.x(slam) * T - embed_fn(rep.ring, r)
    params = {"j": j, "lambda": lam}
    if not r.is_polynomial():
        return CaseRecord("cross", params, "fail", f"correction term not a Laurent polynomial: {r!r}")
    return check("cross", params, residue.is_zero(), residue.render)


def verify_cross_additivity(rep: BasicRepresentation, j: int, lam, mu) -> CaseRecord:
    """r(lam + mu) == X^{s lam} r(mu) + r(lam) X^mu as an identity in A."""
    lam, mu = tuple(lam), tuple(mu)
    ring, W = rep.ring, rep.W
    slam = W.act_weight(W.simple[j].v, lam)
    both = tuple(a + b for a, b in zip(lam, mu))
    lhs = rep.correction(j, both)
    rhs = ring.fn(ring.x(slam)) * rep.correction(j, mu) + rep.correction(j, lam) * ring.fn(ring.x(mu))
    return check("cross-additivity", {"j": j, "lambda": lam, "mu": mu}, lhs == rhs,
                 lambda: repr(lhs - rhs))


def verify_x_relation(rep: BasicRepresentation, lam, mu) -> CaseRecord:
    lam, mu = tuple(lam), tuple(mu)
    both = tuple(a + b for a, b in zip(lam, mu))
    residue = rep.x(lam) * rep.x(mu) - rep.x(both)
    return check("x-relation", {"lambda": lam, "mu": mu}, residue.is_zero(), residue.render)


def verify_omega(rep: BasicRepresentation, u: OmegaElt) -> CaseRecord:
    """u T_j = T_{u_j} u for all j and u X^lam = X^{u' lam} u on +-omega_i."""
    n = rep.rs.rank
    params = {"u": u.index, "perm": u.perm}
    if u.elt.is_identity():
        return CaseRecord("omega", params, "pass", note="identity")
    U = rep.group(u.elt)
    for j in range(n + 1):
        residue = U * rep.T(j) - rep.T(u.perm[j]) * U
        if not residue.is_zero():
            return CaseRecord("omega", params, "fail", f"u T_{j} != T_{u.perm[j]} u: {residue.render()}")
    for lam in weight_test_set(rep.rs.rank):
        moved = rep.W.act_weight(u.elt.v, lam)
        residue = U * rep.x(lam) - rep.x(moved) * U
        if not residue.is_zero():
            return CaseRecord("omega", params, "fail", f"u X^{lam} != X^{moved} u: {residue.render()}")
    return CaseRecord("omega", params, "pass")


def verify_omega_product(rep: BasicRepresentation, u: OmegaElt, v: OmegaElt) -> CaseRecord:
    lhs = rep.group(u.elt) * rep.group(v.elt)
    rhs = rep.group(u.elt * v.elt)
    return check("omega-product", {"u": u.index, "v": v.index}, lhs == rhs,
                 lambda: (lhs - rhs).render())


def verify_omega_descent(rep: BasicRepresentation) -> CaseRecord:
    """Find (u, j >= 1) with u a_j = a_0 and confirm T_0 = u T_j u^-1."""
    omega = rep.W.omega()
    if len(omega) == 1:
        return CaseRecord("omega-descent", {}, VACUOUS, note="Omega is trivial")
    for u in omega[1:]:
        for j in range(1, rep.rs.rank + 1):
            if u.perm[j] == 0:
                conj = rep.T(j).conjugate_by(u.elt)
                params = {"u": u.index, "j": j}
                return check("omega-descent", params, conj == rep.T(0),
                             lambda: (conj - rep.T(0)).render())
    return CaseRecord("omega-descent", {}, "fail", "no (u, j) with u a_j = a_0 despite nontrivial Omega")


def verify_covariance(rep: BasicRepresentation, w: ExtAffineWeylElt, a: AffineRoot) -> CaseRecord:
    """w T(a) w^-1 == T(w a)."""
    lhs = rep.T_affine(a).conjugate_by(w)
    rhs = rep.T_affine(w.act(a))
    u, word = rep.W.reduced_word(w)
    params = {"w": f"[u{u.index}; {' '.join(map(str, word))}]", "a": (a.root, a.level)}
    return check("covariance", params, lhs == rhs, lambda: (lhs - rhs).render())


def weight_test_set(n: int) -> list[tuple[int, ...]]:
    """+-omega_i, the default cross-relation test set."""
    out = []
    for i in range(n):
        e = tuple(int(k == i) for k in range(n))
        out.append(e)
        out.append(tuple(-x for x in e))
    return out


def extended_weight_test_set(n: int) -> list[tuple[int, ...]]:
    base = weight_test_set(n)
    out = list(base)
    for i, a in enumerate(base):
        for b in base[i + 1:]:
            s = tuple(x + y for x, y in zip(a, b))
            if any(s) and s not in out:
                out.append(s)
    return out


# -- triangularity ------------------------------------------------------------------------


@dataclass
class TriangularExpansion:
    w: ExtAffineWeylElt
    coefficients: dict[ExtAffineWeylElt, RationalFn]
    support_in_ideal: bool
    leading_nonzero: bool
    leading_unit: bool
    escaped: list[ExtAffineWeylElt]

    @property
    def ok(self) -> bool:
        return self.support_in_ideal and self.leading_nonzero and self.leading_unit

    @property
    def leading(self) -> RationalFn:
        return self.coefficients.get(self.w)


def triangular_expand(rep: BasicRepresentation, w: ExtAffineWeylElt) -> TriangularExpansion:
    hit = rep._tri.get(w)
    if hit is None:
        T = rep.T_elt(w)
        escaped = [v for v in T.terms if not bruhat_leq(rep.W, v, w)]
        lead = T.terms.get(w)
        nonzero = lead is not None and not lead.is_zero()
        unit = nonzero and is_delta_tau_unit(lead)
        hit = rep._tri[w] = TriangularExpansion(w, dict(T.terms), not escaped, nonzero, unit, escaped)
    return hit


def triangular_case(rep: BasicRepresentation, w: ExtAffineWeylElt) -> CaseRecord:
    t = triangular_expand(rep, w)
    u, word = rep.W.reduced_word(w)
    params = {"w": f"[u{u.index}; {' '.join(map(str, word))}]", "length": len(word),
              "support": len(t.coefficients)}
    flags = {"support_in_ideal": t.support_in_ideal, "leading_nonzero": t.leading_nonzero,
             "leading_unit": t.leading_unit}
    params.update(flags)
    if t.ok:
        return CaseRecord("triangular", params, "pass")
    bad = [k for k, v in flags.items() if not v]
    witness = f"failed flags {bad}"
    if t.escaped:
        witness += "; escaped support: " + ", ".join(_word_label(rep, v) for v in t.escaped)
    return CaseRecord("triangular", params, "fail", witness)


def _word_label(rep, v) -> str:
    u, word = rep.W.reduced_word(v)
    return f"[u{u.index}; {' '.join(map(str, word))}]"


class InversionError(RuntimeError):
    pass


def invert_triangular(rep: BasicRepresentation, w: ExtAffineWeylElt) -> dict[ExtAffineWeylElt, RationalFn]:
    """Coefficients ft_{vw} with w = sum_{v <= w} ft_{vw} T-check_v (back-substitution)."""
    hit = rep._inv.get(w)
    if hit is not None:
        return hit
    t = triangular_expand(rep, w)
    if not (t.leading_nonzero and t.leading_unit):
        raise InversionError(f"leading coefficient of {_word_label(rep, w)} is not invertible")
    lead_inv = t.leading.inverse()
    ring = rep.ring
    acc: dict[ExtAffineWeylElt, list[RationalFn]] = {w: [ring.one_fn()]}
    for v, f in t.coefficients.items():
        if v == w:
            continue
        for x, g in invert_triangular(rep, v).items():
            acc.setdefault(x, []).append(-(f * g))
    from .rational import add_all
    out = {}
    for x, fs in acc.items():
        total = add_all(fs, ring)
        if not total.is_zero():
            out[x] = lead_inv * total
    rep._inv[w] = out
    return out


def recompose(rep: BasicRepresentation, coeffs: dict[ExtAffineWeylElt, RationalFn]) -> SmashElt:
    return smash_sum((rep.T_elt(x).scale_left(f) for x, f in coeffs.items()), rep.ring)


def inversion_case(rep: BasicRepresentation, w: ExtAffineWeylElt) -> CaseRecord:
    params = {"w": _word_label(rep, w)}
    try:
        coeffs = invert_triangular(rep, w)
    except InversionError as exc:
        return CaseRecord("inverse-triangular", params, "fail", str(exc))
    back = recompose(rep, coeffs)
    target = rep.group(w)
    lead = triangular_expand(rep, w).leading
    leading_ok = (coeffs.get(w) is not None) and (coeffs[w] * lead == rep.ring.one_fn())
    params["terms"] = len(coeffs)
    ok = back == target and leading_ok
    return check("inverse-triangular", params, ok,
                 lambda: ("leading coefficient is not f_ww^-1; " if not leading_ok else "")
                 + (back - target).render())


# -- PBW -------------------------------------------------------------------------------------


@dataclass
class PBWResult:
    independent: bool
    witness: list[tuple[int, tuple[int, ...], ExtAffineWeylElt]] | None = None
    reason: str = ""

    def __bool__(self):
        return self.independent


def _leading_x(f: RationalFn, n: int):
    return max(k[:n] for k in f.num.terms)


def pbw_independence(rep: BasicRepresentation,
                     pairs: Iterable[tuple[Sequence[int], ExtAffineWeylElt]]) -> PBWResult:
    """Certificate that the X^mu T-check_w are L-linearly independent.

    In a vanishing combination pick w Bruhat-maximal among the occurring
    elements.  If every T-check_v is supported on the Bruhat ideal of v, only
    the X^mu T-check_w contribute to the coefficient of w, giving
    (sum_mu c_mu X^mu) f_ww = 0.  With f_ww nonzero and the mu distinct this
    forces c_mu = 0.  A repeated pair yields the dependency 1*p - 1*p.
    """
    pairs = [(tuple(mu), w) for mu, w in pairs]
    seen: dict[tuple, int] = {}
    for i, p in enumerate(pairs):
        if p in seen:
            witness = [(1, p[0], p[1]), (-1, p[0], p[1])]
            total = smash_sum((rep.x(mu).scale_left(rep.ring.fn(c)) * rep.T_elt(w)
                               for c, mu, w in witness), rep.ring)
            assert total.is_zero()
            return PBWResult(False, witness, f"pair {seen[p]} repeated at position {i}")
        seen[p] = i
    n = rep.rs.rank
    by_w: dict[ExtAffineWeylElt, list[tuple[int, ...]]] = {}
    for mu, w in pairs:
        by_w.setdefault(w, []).append(mu)
    for w, mus in by_w.items():
        t = triangular_expand(rep, w)
        if not t.support_in_ideal or not t.leading_nonzero:
            return PBWResult(False, None, f"triangularity fails at {_word_label(rep, w)}")
        lead = _leading_x(t.leading, n)
        leads = {}
        for mu in mus:
            key = tuple(a + b for a, b in zip(mu, lead))
            if key in leads:
                return PBWResult(False, None, f"leading terms collide at {_word_label(rep, w)}")
            leads[key] = mu
    return PBWResult(True)
