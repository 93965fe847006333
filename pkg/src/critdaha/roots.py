"""Irreducible reduced affine root systems with reduced gradient.

Everything is realized in the basis of simple roots of the gradient system
R0, with the inner product given by an integral Gram matrix normalized so
that short roots have squared length 2.  Roots are integer vectors in that
basis; weights and coweights carry their own integral coordinates (in the
fundamental weight basis of P and the fundamental coweight basis of P-hat).

The affine roots are a = alpha + k*c with c a formal positive unit; see
:class:`AffineRoot`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")
TWISTS = ("twisted", "untwisted")

SHORT, LONG = 0, 1

INFINITE_ORDER = math.inf


class InadmissibleRootSystem(ValueError):
    pass


class InvalidAffineRoot(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int
    twist: str = "untwisted"

    def __post_init__(self):
        check_admissible(self.family, self.rank, self.twist)

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def label(self) -> str:
        return f"{self.family}{self.rank}({self.twist})"


def check_admissible(family: str, rank: int, twist: str) -> None:
    if family not in FAMILIES:
        raise InadmissibleRootSystem(f"unknown family {family!r}; expected one of {FAMILIES}")
    if twist not in TWISTS:
        raise InadmissibleRootSystem(f"unknown twist {twist!r}; expected one of {TWISTS}")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InadmissibleRootSystem(f"rank must be an integer, got {rank!r}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not ok:
        raise InadmissibleRootSystem(f"rank {rank} is not admissible for family {family}")


def gram_matrix(family: str, n: int) -> list[list[int]]:
    """Gram matrix of the simple roots (Bourbaki numbering), short roots of norm 2."""
    G = [[0] * n for _ in range(n)]

    def link(i, j, v):
        G[i - 1][j - 1] = G[j - 1][i - 1] = v

    if family == "A":
        for i in range(1, n + 1):
            G[i - 1][i - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -1)
    elif family == "B":
        # alpha_1..alpha_{n-1} long, alpha_n short
        for i in range(1, n):
            G[i - 1][i - 1] = 4
        G[n - 1][n - 1] = 2
        for i in range(1, n):
            link(i, i + 1, -2)
    elif family == "C":
        # alpha_1..alpha_{n-1} short, alpha_n long
        for i in range(1, n):
            G[i - 1][i - 1] = 2
        G[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif family == "D":
        for i in range(1, n + 1):
            G[i - 1][i - 1] = 2
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif family == "E":
        for i in range(1, n + 1):
            G[i - 1][i - 1] = 2
        link(1, 3, -1)
        link(2, 4, -1)
        for i in range(3, n):
            link(i, i + 1, -1)
    elif family == "F":
        G[0][0] = G[1][1] = 4
        G[2][2] = G[3][3] = 2
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif family == "G":
        # alpha_1 short, alpha_2 long
        G[0][0], G[1][1] = 2, 6
        link(1, 2, -3)
    return G


def _solve(M: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve M x = b exactly (M square, invertible)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(M, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [A[r][n] for r in range(n)]


def determinant(M: list[list]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        p = A[col][col]
        det *= p
        for r in range(col + 1, n):
            if A[r][col] != 0:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return det


@dataclass(frozen=True)
class AffineRoot:
    """a = alpha + level*c, alpha given by its index in the root table."""

    root: int
    level: int


@dataclass(frozen=True)
class FiniteRootSubsystem:
    ambient: "RootSystemData"
    members: tuple[int, ...]  # root-table indices
    simple: tuple[int, ...]  # root-table indices of the simple basis
    components: tuple[tuple[int, ...], ...]
    rank: int

    @property
    def lattice_basis(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.ambient.roots[i] for i in self.simple)


class RootSystemData:
    """A realized affine root system R together with its gradient R0.

    Root table layout: indices ``0 .. N-1`` are the positive roots sorted by
    height, ``N .. 2N-1`` their negatives in the same order, so the negative of
    root ``i`` is ``(i + N) % (2N)``.  The simple root alpha_j (j = 1..n) sits
    at index ``j - 1``.
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        n = self.rank = spec.rank
        self.gram = gram_matrix(spec.family, n)
        G = self.gram

        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(n):
                    img = self._reflect_coords(beta, i)
                    if img not in found:
                        found.add(img)
                        new.append(img)
            frontier = new
        found |= {tuple(-x for x in b) for b in found}
        pos = sorted((b for b in found if all(x >= 0 for x in b)),
                     key=lambda b: (sum(b), tuple(-x for x in b)))
        self.n_pos = N = len(pos)
        self.roots: tuple[tuple[int, ...], ...] = tuple(pos) + tuple(
            tuple(-x for x in b) for b in pos)
        self.index = {b: i for i, b in enumerate(self.roots)}

        self.norms = tuple(self.inner(b, b) for b in self.roots)
        short_norm = min(self.norms)
        long_norm = max(self.norms)
        if spec.simply_laced:
            self.orbit = tuple(SHORT for _ in self.roots)
        else:
            self.orbit = tuple(SHORT if nb == short_norm else LONG for nb in self.norms)
        self.n_orbits = 1 if spec.simply_laced else 2

        heights = [sum(b) for b in pos]
        self.highest_root = max(range(N), key=lambda i: heights[i])
        self.highest_short_root = max((i for i in range(N) if self.norms[i] == short_norm),
                                      key=lambda i: heights[i])
        twisted = spec.twist == "twisted"
        theta = self.highest_short_root if twisted else self.highest_root
        self.alpha0 = self.neg(theta)

        # multipliers m_alpha = <phi,phi>/<alpha_0,alpha_0> on the long orbit
        ratio = Fraction(self.norms[self.highest_root], self.norms[self.alpha0])
        assert ratio.denominator == 1
        self.long_multiplier = int(ratio)
        self.multiplier = tuple(
            1 if (spec.simply_laced or nb == short_norm) else self.long_multiplier
            for nb in self.norms)

        # affine simple gradients: a_0' = alpha_0, a_j' = alpha_j
        self.affine_simple = (self.alpha0,) + tuple(range(n))

        # coordinates of every root in the fundamental-weight basis of P
        self.root_omega = tuple(
            tuple(self._pair_coroot_simple(b, k) for k in range(n)) for b in self.roots)
        # coroot beta^v in the simple-coroot basis
        self.root_coroot = tuple(
            tuple(_as_int(Fraction(b[j] * G[j][j], nb)) for j in range(n))
            for b, nb in zip(self.roots, self.norms))
        m_simple = [self.multiplier[j] for j in range(n)]
        self.simple_multipliers = tuple(m_simple)
        # hat(beta) = m_beta * beta^v in the fundamental-coweight basis of P-hat
        self.root_hat = tuple(
            tuple(_as_int(Fraction(mb * 2 * self._gdot(b, k), nb * m_simple[k])) for k in range(n))
            for b, nb, mb in zip(self.roots, self.norms, self.multiplier))

        # fundamental weights and coweights as rational vectors in root coordinates
        Gf = [[Fraction(x) for x in row] for row in G]
        self.fundamental_weights = tuple(
            tuple(_solve(Gf, [Fraction(G[j][j], 2) if j == i else Fraction(0) for j in range(n)]))
            for i in range(n))
        self.fundamental_coweights = tuple(
            tuple(_solve(Gf, [Fraction(m_simple[i]) if j == i else Fraction(0) for j in range(n)]))
            for i in range(n))

        # simple reflections as permutations of the root table
        self.simple_reflection_perms = tuple(
            tuple(self.index[self._reflect_coords(b, i)] for b in self.roots) for i in range(n))
        self.reflection_perm_cache: dict[int, tuple[int, ...]] = {}

        self.coxeter = self._affine_coxeter_matrix()

    # -- elementary geometry -------------------------------------------------

    def _gdot(self, b, k) -> int:
        return sum(self.gram[k][j] * b[j] for j in range(self.rank))

    def inner(self, x: Iterable, y: Iterable):
        x, y = list(x), list(y)
        n = self.rank
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(n) for j in range(n))

    def _pair_coroot_simple(self, b, k) -> int:
        # <b, alpha_k^v>
        return _as_int(Fraction(2 * self._gdot(b, k), self.gram[k][k]))

    def _reflect_coords(self, b, i):
        c = self._pair_coroot_simple(b, i)
        return tuple(x - c * (j == i) for j, x in enumerate(b))

    def neg(self, i: int) -> int:
        N = self.n_pos
        return (i + N) % (2 * N)

    def is_positive(self, i: int) -> bool:
        return i < self.n_pos

    def reflection_perm(self, i: int) -> tuple[int, ...]:
        """Permutation of the root table induced by the reflection s_beta, beta = root i."""
        if i >= self.n_pos:
            i = self.neg(i)
        perm = self.reflection_perm_cache.get(i)
        if perm is None:
            b = self.roots[i]
            cv = self.root_coroot[i]
            perm = []
            for x in self.roots:
                # <x, beta^v> = sum_j cv_j <x, alpha_j^v>
                p = sum(cv[j] * self._pair_coroot_simple(x, j) for j in range(self.rank))
                perm.append(self.index[tuple(xi - p * bi for xi, bi in zip(x, b))])
            perm = self.reflection_perm_cache[i] = tuple(perm)
        return perm

    def pair_coweight(self, i: int, lam: tuple[int, ...]) -> int:
        """<beta, lam> for beta = root i and lam in P-hat (fundamental-coweight coordinates)."""
        b = self.roots[i]
        m = self.simple_multipliers
        return sum(b[k] * m[k] * lam[k] for k in range(self.rank))

    def coweight_to_vector(self, lam) -> tuple[Fraction, ...]:
        """Root-coordinate vector of a coweight given in fundamental-coweight coordinates."""
        out = [Fraction(0)] * self.rank
        for k, c in enumerate(lam):
            if c:
                out = [o + c * w for o, w in zip(out, self.fundamental_coweights[k])]
        return tuple(out)

    def weight_to_vector(self, lam) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.rank
        for k, c in enumerate(lam):
            if c:
                out = [o + c * w for o, w in zip(out, self.fundamental_weights[k])]
        return tuple(out)

    def vector_pair_coroot(self, x, i: int) -> Fraction:
        """<x, beta^v> for a root-coordinate vector x and beta = root i."""
        b = self.roots[i]
        return Fraction(2) * self.inner(x, b) / self.norms[i]

    # -- named data -----------------------------------------------------------

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.rank]

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self.roots[: self.n_pos]

    def tau_orbit(self, i: int) -> int:
        return self.orbit[i]

    def affine_simple_root(self, j: int) -> AffineRoot:
        if j == 0:
            return AffineRoot(self.alpha0, 1)
        return AffineRoot(j - 1, 0)

    def affine_root(self, root: int, level: int) -> AffineRoot:
        if level % self.multiplier[root]:
            raise InvalidAffineRoot(
                f"level {level} not divisible by multiplier {self.multiplier[root]} of root {self.roots[root]}")
        return AffineRoot(root, level)

    def check_affine_root(self, a: AffineRoot) -> None:
        if not 0 <= a.root < len(self.roots):
            raise InvalidAffineRoot(f"no root with index {a.root}")
        if a.level % self.multiplier[a.root]:
            raise InvalidAffineRoot(
                f"{a} has level not divisible by m_alpha = {self.multiplier[a.root]}")

    def _affine_coxeter_matrix(self):
        n = self.rank
        g = self.affine_simple
        order = {0: 2, 1: 3, 2: 4, 3: 6, 4: INFINITE_ORDER}
        M = [[1] * (n + 1) for _ in range(n + 1)]
        for j in range(n + 1):
            for k in range(n + 1):
                if j != k:
                    bj, bk = self.roots[g[j]], self.roots[g[k]]
                    ip = self.inner(bj, bk)
                    prod = Fraction(4 * ip * ip, self.norms[g[j]] * self.norms[g[k]])
                    M[j][k] = order[_as_int(prod)]
        return tuple(tuple(r) for r in M)

    def describe(self) -> dict:
        return {
            "family": self.spec.family,
            "rank": self.rank,
            "twist": self.spec.twist,
        }

    def __repr__(self):
        return f"RootSystemData({self.spec.label()})"


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


_CACHE: dict[RootSystemSpec, RootSystemData] = {}


def build_root_system(spec: RootSystemSpec | None = None, *, family=None, rank=None,
                      twist="untwisted") -> RootSystemData:
    """Build (and cache) the root data for an admissible (family, rank, twist)."""
    if spec is None:
        spec = RootSystemSpec(family, rank, twist)
    rs = _CACHE.get(spec)
    if rs is None:
        rs = _CACHE[spec] = RootSystemData(spec)
    return rs


def is_positive_affine(rs: RootSystemData, a: AffineRoot) -> bool:
    rs.check_affine_root(a)
    return a.level > 0 or (a.level == 0 and rs.is_positive(a.root))


def _reflection_closure(rs: RootSystemData, seeds: Iterable[int]) -> set[int]:
    seeds = list(seeds)
    perms = [rs.reflection_perm(s) for s in seeds]
    found = set(seeds)
    frontier = list(seeds)
    while frontier:
        new = []
        for x in frontier:
            for p in perms:
                y = p[x]
                if y not in found:
                    found.add(y)
                    new.append(y)
        frontier = new
    return found


def parabolic_subsystem(rs: RootSystemData, k: int) -> FiniteRootSubsystem:
    """The finite root system R_k generated by the gradients a_j', j != k."""
    n = rs.rank
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    simple = tuple(rs.affine_simple[j] for j in range(n + 1) if j != k)
    members = _reflection_closure(rs, simple)
    members |= {rs.neg(i) for i in members}

    # connected components of the simple basis under non-orthogonality
    comp_of = {s: s for s in simple}

    def find(x):
        while comp_of[x] != x:
            x = comp_of[x]
        return x

    for s in simple:
        for t in simple:
            if s < t and rs.inner(rs.roots[s], rs.roots[t]) != 0:
                comp_of[find(t)] = find(s)
    groups: dict[int, list[int]] = {}
    for s in simple:
        groups.setdefault(find(s), []).append(s)
    components = []
    for basis in sorted(groups.values()):
        comp = _reflection_closure(rs, basis)
        comp |= {rs.neg(i) for i in comp}
        components.append(tuple(sorted(comp)))
    return FiniteRootSubsystem(rs, tuple(sorted(members)), simple,
                               tuple(components), len(simple))


def subsystem_coordinates(sub: FiniteRootSubsystem, i: int) -> list[Fraction]:
    """Coordinates of root i in the simple basis of the subsystem."""
    rs = sub.ambient
    basis = [rs.roots[s] for s in sub.simple]
    M = [[Fraction(basis[c][r]) for c in range(len(basis))] for r in range(rs.rank)]
    return _solve(M, [Fraction(x) for x in rs.roots[i]])


def cartan_determinant(rs: RootSystemData) -> int:
    """Index [P-hat : Q-hat]: determinant of the simple hatted roots in the coweight basis."""
    n = rs.rank
    M = [list(rs.root_hat[j]) for j in range(n)]
    return _as_int(abs(determinant(M)))


def weyl_group_order(spec: RootSystemSpec) -> int:
    n, f = spec.rank, spec.family
    if f == "A":
        return math.factorial(n + 1)
    if f in "BC":
        return 2 ** n * math.factorial(n)
    if f == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(f, n)]
