"""The coefficient tower L -> L[P] -> A (localized at the Weyl denominators).

A :class:`RationalFn` is ``num / prod(F ** m)`` where each denominator factor
``F`` is a binomial ``1 - kappa * X^gamma`` with gamma a root of R0 and kappa
a unit of L (a nonzero rational times a tau-monomial).  Two kinds occur:

* root factors ``1 - X^{-beta}``, beta in R0+ (localization at delta), and
* deformed factors ``1 - tau_gamma^2 X^gamma`` (localization at delta_tau,
  needed for the inverse leading coefficients of the triangular expansion).

Distinct canonical factors are pairwise coprime and squarefree, so the form
"no factor divides the numerator" is a unique normal form and equality is a
plain comparison of stored data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .laurent import Laurent, TauLaurent, divide_binomial
from .roots import RootSystemData
from .weyl import AffineWeylGroup, affine_weyl_group


class Factor(NamedTuple):
    """The binomial 1 - coef * tau^tau * X^{root}."""

    root: int
    coef: object  # int | Fraction
    tau: tuple[int, int]


class NotAUnit(ArithmeticError):
    pass


class CoeffRing:
    """Arithmetic context: root data plus an optional specialization of tau."""

    def __init__(self, rs: RootSystemData, assignment: Mapping[int, Fraction] | None = None):
        self.rs = rs
        self.W: AffineWeylGroup = affine_weyl_group(rs)
        self.n = rs.rank
        self.nvars = rs.rank + 2
        if assignment is not None:
            assignment = {int(k): Fraction(v) for k, v in assignment.items()}
            for k in range(rs.n_orbits):
                if k not in assignment:
                    raise ValueError(f"no value given for tau orbit {k}")
                if assignment[k] == 0:
                    raise ValueError("tau may only be specialized to nonzero values")
        self.assignment = assignment
        self._zero_x = (0,) * self.n
        self._one = Laurent.constant(1, self.nvars)
        self._delta_tau: list[Factor] | None = None

    @property
    def symbolic(self) -> bool:
        return self.assignment is None

    def specialized(self, assignment: Mapping[int, Fraction]) -> "CoeffRing":
        return CoeffRing(self.rs, assignment)

    def same(self, other: "CoeffRing") -> bool:
        return self is other or (self.rs is other.rs and self.assignment == other.assignment)

    # -- tau handling -----------------------------------------------------------

    def tau_monomial(self, orbit: int, power: int = 1):
        """(scalar, tau-exponent) pair representing tau_orbit ** power."""
        if self.assignment is None:
            return 1, ((power, 0) if orbit == 0 else (0, power))
        return Fraction(self.assignment[orbit]) ** power, (0, 0)

    def tau(self, orbit: int, power: int = 1) -> Laurent:
        c, t = self.tau_monomial(orbit, power)
        return Laurent.monomial(self._zero_x + t, c)

    def tau_j(self, j: int, power: int = 1) -> Laurent:
        rs = self.rs
        return self.tau(rs.orbit[rs.affine_simple[j]], power)

    def tau_minus_inverse(self, orbit: int) -> Laurent:
        return self.tau(orbit) - self.tau(orbit, -1)

    def specialize_key(self, key, coef):
        """Substitute the tau values into one term of a symbolic element."""
        n = self.n
        es, el = key[n], key[n + 1]
        c = coef
        if es:
            c = c * Fraction(self.assignment[0]) ** es
        if el:
            c = c * Fraction(self.assignment[1]) ** el
        return key[:n] + (0, 0), c

    # -- polynomial constructors --------------------------------------------------

    def one(self) -> Laurent:
        return self._one

    def const(self, c) -> Laurent:
        return Laurent.constant(c, self.nvars)

    def x(self, lam, coef=1) -> Laurent:
        """X^lam with lam in fundamental-weight coordinates."""
        return Laurent.monomial(tuple(lam) + (0, 0), coef)

    def from_tau(self, t: TauLaurent) -> Laurent:
        if self.assignment is None:
            return t.as_group_element(self.n)
        total = Fraction(0)
        for (es, el), c in t.terms.items():
            v = c * Fraction(self.assignment[0]) ** es
            if el:
                v *= Fraction(self.assignment[1]) ** el
            total += v
        return self.const(total)

    def act_poly(self, v: int, f: Laurent) -> Laurent:
        """Finite Weyl element v acting on L[P] through X^lam -> X^{v lam}."""
        if v == 0 or not f.terms:
            return f
        M = self.W.weight_matrix(v)
        n = self.n
        rows = [r for r in M]

        def move(k):
            lam = k[:n]
            return tuple(sum(r[j] * lam[j] for j in range(n)) for r in rows) + k[n:]

        return Laurent._raw({move(k): c for k, c in f.terms.items()}, f.nvars)

    # -- denominator factors ------------------------------------------------------

    def factor_shift(self, F: Factor) -> tuple[int, ...]:
        return self.rs.root_omega[F.root] + F.tau

    def canonical(self, F: Factor) -> tuple[Factor, bool]:
        """Pick the canonical member of {F, flip(F)}; second value says whether it flipped.

        flip(1 - k X^g) = 1 - k^-1 X^-g, and the two differ by the unit -k X^g.
        """
        if any(F.tau):
            first = next(x for x in F.tau if x)
            keep = first > 0
        elif abs(F.coef) != 1:
            keep = abs(F.coef) > 1
        else:
            keep = not self.rs.is_positive(F.root)
        if keep:
            return F, False
        return Factor(self.rs.neg(F.root), _inv(F.coef), (-F.tau[0], -F.tau[1])), True

    def flip_unit(self, F: Factor, m: int) -> Laurent:
        """(-kappa^-1 Z^-d)^m: the numerator correction when 1/F^m is rewritten by flip(F)."""
        d = self.factor_shift(F)
        c = (-_inv(F.coef)) ** m
        return Laurent.monomial(tuple(-m * x for x in d), c)

    def root_factor(self, beta: int) -> Factor:
        """Canonical factor 1 - X^{-beta} (beta a positive root index)."""
        rs = self.rs
        if not rs.is_positive(beta):
            raise ValueError("root factors are indexed by positive roots")
        return Factor(rs.neg(beta), 1, (0, 0))

    def deformed_factor(self, gamma: int) -> Factor:
        """Canonical form of 1 - tau_gamma^2 X^gamma."""
        c, t = self.tau_monomial(self.rs.orbit[gamma], 2)
        return self.canonical(Factor(gamma, c, t))[0]

    def delta_tau_factors(self) -> list[Factor]:
        """Every canonical factor of delta_tau, up to units."""
        if self._delta_tau is None:
            rs = self.rs
            seen = []
            for b in range(rs.n_pos):
                seen.append(self.root_factor(b))
            for g in range(len(rs.roots)):
                F = self.deformed_factor(g)
                if F not in seen:
                    seen.append(F)
            self._delta_tau = seen
        return self._delta_tau

    def divide(self, f: Laurent, F: Factor) -> Laurent | None:
        return divide_binomial(f, F.coef * 1, self.factor_shift(F))

    def expand_factor(self, F: Factor, m: int = 1) -> Laurent:
        out = self._one
        d = self.factor_shift(F)
        for _ in range(m):
            out = out.mul_binomial(F.coef, d)
        return out

    # -- RationalFn constructors --------------------------------------------------

    def fn(self, num: Laurent | int | Fraction, den: Mapping[Factor, int] | None = None) -> "RationalFn":
        if not isinstance(num, Laurent):
            num = self.const(num)
        return RationalFn.build(self, num, dict(den or {}))

    def zero_fn(self) -> "RationalFn":
        return RationalFn(self, Laurent.zero(self.nvars), {})

    def one_fn(self) -> "RationalFn":
        return RationalFn(self, self._one, {})

    def inv_one_minus_x(self, gamma: int, power: int = 1) -> "RationalFn":
        """(1 - X^gamma)^-power for a root gamma of either sign."""
        F = Factor(gamma, 1, (0, 0))
        Fc, flipped = self.canonical(F)
        num = self.flip_unit(F, power) if flipped else self._one
        return RationalFn.build(self, num, {Fc: power})


def _inv(c):
    return Fraction(1) / c if not isinstance(c, int) or c not in (1, -1) else c


class RationalFn:
    """An element of the localization, kept in unique normal form."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring: CoeffRing, num: Laurent, den: dict[Factor, int]):
        self.ring = ring
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def build(cls, ring: CoeffRing, num: Laurent, den: dict[Factor, int]) -> "RationalFn":
        """Normalize num / den (den already canonical) by cancelling common factors."""
        if not num.terms:
            return cls(ring, num, {})
        out = {}
        for F, m in den.items():
            while m > 0:
                q = ring.divide(num, F)
                if q is None:
                    break
                num = q
                m -= 1
            if m:
                out[F] = m
        return cls(ring, num, out)

    # -- protocol -------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Laurent)):
            return not self.den and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, frozenset(self.den.items())))
        return self._hash

    def __repr__(self):
        return f"RationalFn({render_fn(self)})"

    def is_polynomial(self) -> bool:
        return not self.den

    # -- arithmetic -----------------------------------------------------------------

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            if not self.ring.same(other.ring):
                raise ValueError("rational functions over different coefficient rings")
            return other
        if isinstance(other, Laurent):
            return RationalFn(self.ring, other, {})
        if isinstance(other, (int, Fraction)):
            return RationalFn(self.ring, self.ring.const(other), {})
        raise TypeError(f"cannot combine RationalFn with {type(other).__name__}")

    def __add__(self, other):
        return add_all([self, self._coerce(other)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(self.ring, -self.num, dict(self.den))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        ring = self.ring
        if self.is_zero() or other.is_zero():
            return ring.zero_fn()
        if not other.den and not self.den:
            return RationalFn(ring, self.num * other.num, {})
        # cancel crosswise first; keeps the product numerator small
        n1, d2 = _cancel(ring, self.num, other.den)
        n2, d1 = _cancel(ring, other.num, self.den)
        den = dict(d1)
        for F, m in d2.items():
            den[F] = den.get(F, 0) + m
        # a factor's prime pieces may still be split between n1 and n2
        return RationalFn.build(ring, n1 * n2, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def inverse(self) -> "RationalFn":
        """Inverse in L[P] localized at delta_tau; raises NotAUnit otherwise."""
        ring = self.ring
        factors, unit = unit_factorization(self)
        if unit is None:
            raise NotAUnit(f"{render_fn(self)} is not a unit of the delta_tau localization")
        key, c = unit
        num = Laurent.monomial(tuple(-x for x in key), Fraction(1) / c)
        for F, m in self.den.items():
            num = num * ring.expand_factor(F, m)
        return RationalFn.build(ring, num, factors)

    def act(self, v: int) -> "RationalFn":
        return gradient_action(v, self)


def _cancel(ring: CoeffRing, num: Laurent, den: Mapping[Factor, int]):
    out = {}
    for F, m in den.items():
        while m > 0:
            q = ring.divide(num, F)
            if q is None:
                break
            num = q
            m -= 1
        if m:
            out[F] = m
    return num, out


def add_all(fns: Iterable[RationalFn], ring: CoeffRing) -> RationalFn:
    """Sum over a common denominator, normalized once."""
    fns = [f for f in fns if not f.is_zero()]
    if not fns:
        return ring.zero_fn()
    if len(fns) == 1:
        return fns[0]
    den: dict[Factor, int] = {}
    for f in fns:
        for F, m in f.den.items():
            if m > den.get(F, 0):
                den[F] = m
    num = Laurent.zero(ring.nvars)
    for f in fns:
        part = f.num
        for F, m in den.items():
            extra = m - f.den.get(F, 0)
            if extra:
                d = ring.factor_shift(F)
                for _ in range(extra):
                    part = part.mul_binomial(F.coef, d)
        num = num + part
    return RationalFn.build(ring, num, den)


def gradient_action(v, f: RationalFn) -> RationalFn:
    """Action of a finite Weyl element (id, or an affine element via its gradient)."""
    if not isinstance(v, int):
        v = v.v
    if v == 0 or f.is_zero():
        return f
    ring = f.ring
    perm = ring.W.perm(v)
    num = ring.act_poly(v, f.num)
    den: dict[Factor, int] = {}
    for F, m in f.den.items():
        G = Factor(perm[F.root], F.coef, F.tau)
        Gc, flipped = ring.canonical(G)
        if flipped:
            num = num * ring.flip_unit(G, m)
        den[Gc] = den.get(Gc, 0) + m
    return RationalFn(ring, num, den)


def exact_divide(ring: CoeffRing, f: Laurent, beta) -> Laurent | None:
    """q with f = (1 - X^{-beta}) q, or None.  beta: root index or weight coordinates."""
    if isinstance(beta, int):
        beta = ring.rs.root_omega[beta]
    beta = tuple(beta)
    if not any(beta):
        raise ValueError("beta must be nonzero")
    return divide_binomial(f, 1, tuple(-x for x in beta) + (0, 0))


def unit_factorization(f: RationalFn):
    """Strip delta_tau factors from the numerator.

    Returns ``(factors, unit)`` where ``unit`` is ``(key, coef)`` when what is
    left is a single term (so f is a unit of the localization) and ``None``
    otherwise.
    """
    ring = f.ring
    num = f.num
    if num.is_zero():
        return {}, None
    found: dict[Factor, int] = {}
    for F in ring.delta_tau_factors():
        while len(num) > 1:
            q = ring.divide(num, F)
            if q is None:
                break
            num = q
            found[F] = found.get(F, 0) + 1
    if len(num) != 1:
        return found, None
    return found, num.single_term()


def is_delta_tau_unit(f: RationalFn) -> bool:
    return unit_factorization(f)[1] is not None


def specialize_fn(f: RationalFn, target: CoeffRing) -> RationalFn:
    """Image of a symbolic element under tau -> target.assignment."""
    src = f.ring
    if not src.symbolic:
        raise ValueError("element is already specialized")
    num = f.num.map_terms(target.specialize_key)
    den: dict[Factor, int] = {}
    for F, m in f.den.items():
        key, c = target.specialize_key((0,) * src.n + F.tau, F.coef)
        G = Factor(F.root, c, (0, 0))
        Gc, flipped = target.canonical(G)
        if flipped:
            num = num * target.flip_unit(G, m)
        den[Gc] = den.get(Gc, 0) + m
    return RationalFn.build(target, num, den)


# -- canonical text -------------------------------------------------------------------


def _tau_names(rs: RootSystemData):
    return ("t",) if rs.n_orbits == 1 else ("ts", "tl")


def _render_coef(c) -> str:
    return str(c)


def render_monomial(rs: RootSystemData, key, coef, show_one=False) -> str:
    n = rs.rank
    parts = []
    for name, e in zip(_tau_names(rs), key[n:]):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    if any(key[:n]):
        parts.append("X(" + ",".join(str(x) for x in key[:n]) + ")")
    body = "*".join(parts)
    if not body:
        return _render_coef(coef)
    if coef == 1:
        return body
    if coef == -1:
        return "-" + body
    return f"{_render_coef(coef)}*{body}"


def render_poly(rs: RootSystemData, f: Laurent) -> str:
    if not f.terms:
        return "0"
    items = sorted(f.terms.items())
    out = ""
    for k, c in items:
        s = render_monomial(rs, k, c)
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


def render_factor(rs: RootSystemData, F: Factor) -> str:
    key = tuple(rs.root_omega[F.root]) + F.tau
    return f"(1 - {render_monomial(rs, key, F.coef)})"


def render_fn(f: RationalFn) -> str:
    rs = f.ring.rs
    num = render_poly(rs, f.num)
    if not f.den:
        return num
    dens = []
    for F, m in sorted(f.den.items(), key=lambda kv: (kv[0].root, kv[0].tau, str(kv[0].coef))):
        s = render_factor(rs, F)
        dens.append(s if m == 1 else f"{s}^{m}")
    return f"({num})/({'*'.join(dens)})"
