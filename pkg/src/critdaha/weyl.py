"""The extended affine Weyl group W = W0 x| t(c P-hat).

An element is stored as a pair ``(v, lam)`` meaning ``v * t_{c lam}``: first
translate by ``c*lam``, then apply the finite Weyl group element ``v``.  The
finite part is an integer id into a registry of root-table permutations held
by the owning :class:`AffineWeylGroup`; ``lam`` lives in the fundamental
coweight basis of P-hat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, NamedTuple

from .roots import (AffineRoot, RootSystemData, cartan_determinant, is_positive_affine,
                    weyl_group_order)


class ConsistencyError(RuntimeError):
    """An internal invariant of the group or root data was violated."""


class FiniteWeylElt(NamedTuple):
    perm: tuple[int, ...]  # image of each root-table index
    matrix: tuple[tuple[int, ...], ...]  # action on V in simple-root coordinates (columns = images)


@dataclass(frozen=True)
class ExtAffineWeylElt:
    v: int
    lam: tuple[int, ...]
    group: "AffineWeylGroup" = field(compare=False, repr=False)

    def __mul__(self, other: "ExtAffineWeylElt") -> "ExtAffineWeylElt":
        return self.group.compose(self, other)

    def inverse(self) -> "ExtAffineWeylElt":
        return self.group.inverse(self)

    def __pow__(self, k: int) -> "ExtAffineWeylElt":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.group.identity
        for _ in range(k):
            out = out * self
        return out

    @property
    def gradient(self) -> int:
        return self.v

    def act(self, a: AffineRoot) -> AffineRoot:
        return self.group.act_on_affine_root(self, a)

    def length(self) -> int:
        return self.group.length(self)

    def is_identity(self) -> bool:
        return self.v == 0 and not any(self.lam)


@dataclass(frozen=True)
class OmegaElt:
    elt: ExtAffineWeylElt
    perm: tuple[int, ...]  # j -> u_j on {0..n}
    index: int = 0


class AffineWeylGroup:
    """Extended affine Weyl group of a realized affine root system."""

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        n = rs.rank
        ident = tuple(range(len(rs.roots)))
        self._perms: list[tuple[int, ...]] = [ident]
        self._ids: dict[tuple[int, ...], int] = {ident: 0}
        self._mul: dict[tuple[int, int], int] = {}
        self._inv: dict[int, int] = {0: 0}
        self._pmat: dict[int, tuple] = {}
        self._phat: dict[int, tuple] = {}
        self.zero = (0,) * n
        self.identity = ExtAffineWeylElt(0, self.zero, self)
        self.simple_finite = tuple(self._register(p) for p in rs.simple_reflection_perms)
        self.s0_finite = self._register(rs.reflection_perm(rs.alpha0))
        self.simple = tuple(self.reflection(rs.affine_simple_root(j)) for j in range(n + 1))
        self._omega: list[OmegaElt] | None = None
        self._omega_by_elt: dict[ExtAffineWeylElt, OmegaElt] = {}
        self._rw_cache: dict[ExtAffineWeylElt, tuple[int, tuple[int, ...]]] = {}

    # -- finite part ------------------------------------------------------------

    def _register(self, perm: tuple[int, ...]) -> int:
        i = self._ids.get(perm)
        if i is None:
            i = self._ids[perm] = len(self._perms)
            self._perms.append(perm)
        return i

    def fmul(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            pa, pb = self._perms[a], self._perms[b]
            r = self._mul[key] = self._register(tuple(pa[x] for x in pb))
        return r

    def finv(self, a: int) -> int:
        r = self._inv.get(a)
        if r is None:
            p = self._perms[a]
            q = [0] * len(p)
            for i, x in enumerate(p):
                q[x] = i
            r = self._register(tuple(q))
            self._inv[a] = r
            self._inv[r] = a
        return r

    def perm(self, v: int) -> tuple[int, ...]:
        return self._perms[v]

    def finite_elt(self, v: int) -> FiniteWeylElt:
        p = self._perms[v]
        n = self.rs.rank
        cols = [self.rs.roots[p[j]] for j in range(n)]
        return FiniteWeylElt(p, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    def root_image(self, v: int, i: int) -> int:
        return self._perms[v][i]

    def weight_matrix(self, v: int):
        """Integer matrix of v on P in the fundamental-weight basis."""
        M = self._pmat.get(v)
        if M is None:
            vinv = self._perms[self.finv(v)]
            rows = [self.rs.root_coroot[vinv[k]] for k in range(self.rs.rank)]
            M = self._pmat[v] = tuple(rows)
        return M

    def coweight_matrix(self, v: int):
        """Integer matrix of v on P-hat in the fundamental-coweight basis."""
        M = self._phat.get(v)
        if M is None:
            rs = self.rs
            m = rs.simple_multipliers
            vinv = self._perms[self.finv(v)]
            rows = []
            for k in range(rs.rank):
                b = rs.roots[vinv[k]]
                row = []
                for j in range(rs.rank):
                    x = Fraction(b[j] * m[j], m[k])
                    if x.denominator != 1:
                        raise ConsistencyError("coweight action is not integral")
                    row.append(int(x))
                rows.append(tuple(row))
            M = self._phat[v] = tuple(rows)
        return M

    def act_weight(self, v: int, lam: tuple[int, ...]) -> tuple[int, ...]:
        if v == 0:
            return lam
        M = self.weight_matrix(v)
        return tuple(sum(r[j] * lam[j] for j in range(len(lam))) for r in M)

    def act_coweight(self, v: int, lam: tuple[int, ...]) -> tuple[int, ...]:
        if v == 0:
            return lam
        M = self.coweight_matrix(v)
        return tuple(sum(r[j] * lam[j] for j in range(len(lam))) for r in M)

    def act_vector(self, v: int, x) -> tuple:
        """Action of the finite element v on a root-coordinate vector."""
        p = self._perms[v]
        n = self.rs.rank
        out = [0] * n
        for j in range(n):
            if x[j]:
                img = self.rs.roots[p[j]]
                out = [o + x[j] * c for o, c in zip(out, img)]
        return tuple(out)

    def finite_elements(self) -> list[int]:
        """All of W0 by closure under the simple reflections (desk-scale only)."""
        seen = [0]
        found = {0}
        frontier = [0]
        while frontier:
            new = []
            for v in frontier:
                for s in self.simple_finite:
                    w = self.fmul(v, s)
                    if w not in found:
                        found.add(w)
                        seen.append(w)
                        new.append(w)
            frontier = new
        return seen

    def longest_finite(self, subset=None) -> int:
        """Longest element of the parabolic W_J, J a subset of {1..n} (default: all)."""
        n = self.rs.rank
        J = list(range(1, n + 1)) if subset is None else sorted(subset)
        v = 0
        while True:
            for j in J:
                if self.rs.is_positive(self._perms[v][j - 1]):
                    v = self.fmul(v, self.simple_finite[j - 1])
                    break
            else:
                return v

    # -- the affine group -------------------------------------------------------

    def element(self, v: int, lam) -> ExtAffineWeylElt:
        return ExtAffineWeylElt(v, tuple(lam), self)

    def translation(self, lam) -> ExtAffineWeylElt:
        return ExtAffineWeylElt(0, tuple(lam), self)

    def _check(self, *ws):
        for w in ws:
            if w.group is not self:
                raise ValueError("elements belong to different affine Weyl groups")

    def compose(self, w1: ExtAffineWeylElt, w2: ExtAffineWeylElt) -> ExtAffineWeylElt:
        self._check(w1, w2)
        v = self.fmul(w1.v, w2.v)
        if any(w1.lam):
            moved = self.act_coweight(self.finv(w2.v), w1.lam)
            lam = tuple(a + b for a, b in zip(moved, w2.lam))
        else:
            lam = w2.lam
        return ExtAffineWeylElt(v, lam, self)

    def inverse(self, w: ExtAffineWeylElt) -> ExtAffineWeylElt:
        self._check(w)
        lam = self.act_coweight(w.v, w.lam)
        return ExtAffineWeylElt(self.finv(w.v), tuple(-x for x in lam), self)

    def reflection(self, a: AffineRoot) -> ExtAffineWeylElt:
        """s_a = s_alpha t_{c k alpha^v} for a = alpha + k c."""
        rs = self.rs
        rs.check_affine_root(a)
        v = self._register(rs.reflection_perm(a.root))
        r = a.level // rs.multiplier[a.root]
        lam = tuple(r * x for x in rs.root_hat[a.root])
        return ExtAffineWeylElt(v, lam, self)

    def act_on_affine_root(self, w: ExtAffineWeylElt, a: AffineRoot) -> AffineRoot:
        rs = self.rs
        self._check(w)
        k = a.level - rs.pair_coweight(a.root, w.lam)
        img = self._perms[w.v][a.root]
        if k % rs.multiplier[img]:
            raise ConsistencyError(f"image level {k} violates divisibility for {a} under {w}")
        return AffineRoot(img, k)

    def act_on_point(self, w: ExtAffineWeylElt, x, c=1):
        """Geometric action w(x) = v(x + c*lam) on a root-coordinate point of V."""
        lv = self.rs.coweight_to_vector(w.lam)
        shifted = tuple(Fraction(xi) + c * li for xi, li in zip(x, lv))
        return self.act_vector(w.v, shifted)

    def is_descent(self, w: ExtAffineWeylElt, j: int) -> bool:
        """True iff w.a_j is a negative affine root, i.e. l(w s_j) < l(w)."""
        a = self.act_on_affine_root(w, self.rs.affine_simple_root(j))
        return not is_positive_affine(self.rs, a)

    def length(self, w: ExtAffineWeylElt) -> int:
        """Number of positive affine roots sent to negative ones (closed sum over R0+)."""
        rs = self.rs
        p = self._perms[w.v]
        total = 0
        for i in range(rs.n_pos):
            m = rs.multiplier[i]
            q = rs.pair_coweight(i, w.lam)
            assert q % m == 0
            q //= m
            flips = not rs.is_positive(p[i])
            if q > 0:
                total += q + flips
            elif q == 0:
                total += flips
            else:
                total += -q - flips
        return total

    def reduced_word(self, w: ExtAffineWeylElt) -> tuple[OmegaElt, tuple[int, ...]]:
        """(u, word) with w = u s_{j1} ... s_{jl} and l = length(w)."""
        hit = self._rw_cache.get(w)
        if hit is None:
            picks = []
            x = w
            n = self.rs.rank
            while True:
                for j in range(n + 1):
                    if self.is_descent(x, j):
                        x = x * self.simple[j]
                        picks.append(j)
                        break
                else:
                    break
            u = self.omega_lookup(x)
            if u is None:
                raise ConsistencyError(f"terminal element {x} is not in the Omega table")
            hit = self._rw_cache[w] = (u.index, tuple(reversed(picks)))
        return self.omega()[hit[0]], hit[1]

    def word_element(self, u: OmegaElt | None, word) -> ExtAffineWeylElt:
        x = self.identity if u is None else u.elt
        for j in word:
            x = x * self.simple[j]
        return x

    def omega_part(self, w: ExtAffineWeylElt) -> OmegaElt:
        return self.reduced_word(w)[0]

    # -- Omega --------------------------------------------------------------------

    def _permutes_simple(self, w: ExtAffineWeylElt):
        rs = self.rs
        simple = {rs.affine_simple_root(j): j for j in range(rs.rank + 1)}
        table = []
        for j in range(rs.rank + 1):
            img = self.act_on_affine_root(w, rs.affine_simple_root(j))
            if img not in simple:
                return None
            table.append(simple[img])
        return tuple(table)

    def omega(self, method: str = "auto") -> list[OmegaElt]:
        if self._omega is None:
            self._omega = compute_omega(self, method)
            self._omega_by_elt = {u.elt: u for u in self._omega}
        return self._omega

    def omega_lookup(self, w: ExtAffineWeylElt) -> OmegaElt | None:
        self.omega()
        return self._omega_by_elt.get(w)

    def cartan_determinant(self) -> int:
        return cartan_determinant(self.rs)


def compute_omega(W: AffineWeylGroup, method: str = "auto") -> list[OmegaElt]:
    """All length-zero elements, identity first, then sorted by index permutation.

    ``method`` is "search" (scan v in W0 for each fundamental coweight),
    "closed" (u = t_{c w_i} w0_J w0 with post-verification) or "auto".
    """
    rs = W.rs
    n = rs.rank
    if method == "auto":
        method = "search" if weyl_group_order(rs.spec) <= 5000 else "closed"
    found: dict[ExtAffineWeylElt, tuple[int, ...]] = {W.identity: tuple(range(n + 1))}
    if method == "search":
        finite = W.finite_elements()
        for i in range(n):
            wi = tuple(int(k == i) for k in range(n))
            for v in finite:
                cand = ExtAffineWeylElt(v, W.act_coweight(W.finv(v), wi), W)
                table = W._permutes_simple(cand)
                if table is not None:
                    found[cand] = table
    elif method == "closed":
        w0 = W.longest_finite()
        for i in range(1, n + 1):
            wJ = W.longest_finite([j for j in range(1, n + 1) if j != i])
            wi = tuple(int(k == i - 1) for k in range(n))
            for v in (W.fmul(wJ, w0), W.fmul(w0, wJ)):
                cand = ExtAffineWeylElt(v, W.act_coweight(W.finv(v), wi), W)
                table = W._permutes_simple(cand)
                if table is not None:
                    found[cand] = table
    else:
        raise ValueError(f"unknown method {method!r}")

    # close under products (the closed construction only yields generators)
    changed = True
    while changed:
        changed = False
        for a in list(found):
            for b in list(found):
                ab = a * b
                if ab not in found:
                    table = W._permutes_simple(ab)
                    if table is None:
                        raise ConsistencyError("product of Omega elements does not permute simple roots")
                    found[ab] = table
                    changed = True
    ident = tuple(range(n + 1))
    ordered = sorted(found.items(), key=lambda kv: (kv[1] != ident, kv[1]))
    out = [OmegaElt(e, t, k) for k, (e, t) in enumerate(ordered)]
    if len(out) != cartan_determinant(rs):
        raise ConsistencyError(
            f"|Omega| = {len(out)} differs from the Cartan determinant {cartan_determinant(rs)}")
    return out


def enumerate_ball(W: AffineWeylGroup, L: int):
    """All w with length(w) <= L, each with one reduced word, in BFS order.

    Returns a list of ``(w, (u_index, word))``.
    """
    if L < 0:
        raise ValueError("L must be non-negative")
    n = W.rs.rank
    out = []
    seen = set()
    layer = []
    for u in W.omega():
        out.append((u.elt, (u.index, ())))
        seen.add(u.elt)
        layer.append((u.elt, (u.index, ())))
    for _ in range(L):
        nxt = []
        for w, (ui, word) in layer:
            for j in range(n + 1):
                if not W.is_descent(w, j):
                    x = w * W.simple[j]
                    if x not in seen:
                        seen.add(x)
                        item = (x, (ui, word + (j,)))
                        nxt.append(item)
                        out.append(item)
                        W._rw_cache.setdefault(x, (ui, word + (j,)))
        layer = nxt
    return out


def bruhat_leq(W: AffineWeylGroup, x: ExtAffineWeylElt, y: ExtAffineWeylElt) -> bool:
    """Bruhat order; elements with different Omega-parts are incomparable."""
    ux, _ = W.reduced_word(x)
    uy, word = W.reduced_word(y)
    if ux.index != uy.index:
        return False
    uinv = uy.elt.inverse()
    z = uinv * x
    # lifting property, peeling the last letter of y's reduced word each step
    for j in reversed(word):
        if W.is_descent(z, j):
            z = z * W.simple[j]
    return z.is_identity()


def bruhat_ideal(W: AffineWeylGroup, y: ExtAffineWeylElt) -> set[ExtAffineWeylElt]:
    """{x : x <= y} as the set of all subword products of a reduced word of y."""
    u, word = W.reduced_word(y)
    S = {u.elt}
    for j in word:
        S |= {x * W.simple[j] for x in S}
    return S


def reduced_words(W: AffineWeylGroup, w: ExtAffineWeylElt) -> Iterator[tuple[int, ...]]:
    """Every reduced word of w (the Omega-part is fixed)."""
    n = W.rs.rank
    if W.length(w) == 0:
        yield ()
        return
    for j in range(n + 1):
        if W.is_descent(w, j):
            for word in reduced_words(W, w * W.simple[j]):
                yield word + (j,)


_GROUPS: dict[int, AffineWeylGroup] = {}


def affine_weyl_group(rs: RootSystemData) -> AffineWeylGroup:
    """The (cached) extended affine Weyl group of rs."""
    W = _GROUPS.get(id(rs))
    if W is None or W.rs is not rs:
        W = _GROUPS[id(rs)] = AffineWeylGroup(rs)
    return W
