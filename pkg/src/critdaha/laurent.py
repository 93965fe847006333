"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A :class:`Laurent` maps integer exponent tuples of a fixed length to nonzero
coefficients (``int`` or ``Fraction``).  The group algebra L[P] uses keys
``(lam_1, ..., lam_n, e_short, e_long)``: the weight in the fundamental-weight
basis followed by the exponents of the two Hecke parameters, so a single flat
dictionary carries both the X-part and the tau-part.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Laurent:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], Rational] | None = None, nvars: int = 0):
        self.terms: dict[tuple[int, ...], Rational] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = _clean(c)
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Laurent":
        out = cls.__new__(cls)
        out.terms = terms
        out.nvars = nvars
        out._hash = None
        return out

    @classmethod
    def monomial(cls, key: Iterable[int], coef: Rational = 1) -> "Laurent":
        key = tuple(key)
        return cls({key: coef}, len(key))

    @classmethod
    def constant(cls, c: Rational, nvars: int) -> "Laurent":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def zero(cls, nvars: int) -> "Laurent":
        return cls._raw({}, nvars)

    # -- basic protocol ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Laurent({self.terms!r})"

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def single_term(self):
        ((k, c),) = self.terms.items()
        return k, c

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.nvars != self.nvars and other.terms and self.terms:
                raise ValueError("Laurent polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Laurent.constant(other, self.nvars)
        raise TypeError(f"cannot combine Laurent with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _clean(v)
            else:
                out.pop(k, None)
        return Laurent._raw(out, self.nvars or other.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw({k: -c for k, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return Laurent.zero(self.nvars or other.nvars)
        if len(other.terms) == 1:
            (k, c), = other.terms.items()
            return self.shift(k, c)
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            return other.shift(k, c)
        out: dict = {}
        get = out.get
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = get(k, 0) + c1 * c2
        return Laurent._raw({k: _clean(v) for k, v in out.items() if v}, self.nvars)

    __rmul__ = __mul__

    def scale(self, c) -> "Laurent":
        if not c:
            return Laurent.zero(self.nvars)
        if c == 1:
            return self
        return Laurent._raw({k: _clean(v * c) for k, v in self.terms.items()}, self.nvars)

    def shift(self, d: tuple[int, ...], c=1) -> "Laurent":
        """Multiply by the monomial c * Z^d."""
        if not c:
            return Laurent.zero(self.nvars)
        if c == 1:
            return Laurent._raw({tuple(a + b for a, b in zip(k, d)): v
                                 for k, v in self.terms.items()}, self.nvars)
        return Laurent._raw({tuple(a + b for a, b in zip(k, d)): _clean(v * c)
                             for k, v in self.terms.items()}, self.nvars)

    def mul_binomial(self, kappa, d: tuple[int, ...]) -> "Laurent":
        """self * (1 - kappa Z^d)."""
        out = dict(self.terms)
        for k, c in self.terms.items():
            kk = tuple(a + b for a, b in zip(k, d))
            v = out.get(kk, 0) - kappa * c
            if v:
                out[kk] = _clean(v)
            else:
                out.pop(kk, None)
        return Laurent._raw(out, self.nvars)

    def __pow__(self, k: int) -> "Laurent":
        if k < 0:
            raise ValueError("negative powers of a polynomial are not polynomials")
        out = Laurent.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def map_keys(self, fn) -> "Laurent":
        out: dict = {}
        for k, c in self.terms.items():
            kk = fn(k)
            v = out.get(kk, 0) + c
            if v:
                out[kk] = v
            else:
                out.pop(kk, None)
        return Laurent._raw({k: _clean(v) for k, v in out.items()}, self.nvars)

    def map_terms(self, fn) -> "Laurent":
        """Apply fn(key, coef) -> (key', coef') termwise and re-collect."""
        out: dict = {}
        for k, c in self.terms.items():
            kk, cc = fn(k, c)
            v = out.get(kk, 0) + cc
            if v:
                out[kk] = v
            else:
                out.pop(kk, None)
        return Laurent._raw({k: _clean(v) for k, v in out.items() if v}, self.nvars)


def divide_binomial(f: Laurent, kappa, d: tuple[int, ...]) -> Laurent | None:
    """Exact quotient q with f = (1 - kappa Z^d) q, or None if the remainder is nonzero.

    The exponent lattice splits into lines e + Z d; along each line the
    division is a one-variable recurrence q_t = f_t + kappa q_{t-1}, and it is
    exact iff the recurrence closes at the top of the line.
    """
    if not f.terms:
        return f
    axis = next(i for i, x in enumerate(d) if x)
    da = d[axis]
    lines: dict[tuple, dict[int, Rational]] = {}
    for e, c in f.terms.items():
        t = e[axis] // da
        rep = tuple(x - t * y for x, y in zip(e, d))
        lines.setdefault(rep, {})[t] = c
    out = {}
    for rep, line in lines.items():
        tmin, tmax = min(line), max(line)
        q = 0
        for t in range(tmin, tmax + 1):
            q = line.get(t, 0) + kappa * q
            if t == tmax:
                if q:
                    return None
            elif q:
                out[tuple(x + t * y for x, y in zip(rep, d))] = _clean(q)
    return Laurent._raw(out, f.nvars)


class TauLaurent(Laurent):
    """Laurent polynomial in (tau_short, tau_long); keys are exponent pairs."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms, 2)

    @classmethod
    def tau(cls, orbit: int, power: int = 1, coef=1) -> "TauLaurent":
        key = (power, 0) if orbit == 0 else (0, power)
        return cls({key: coef})

    def as_group_element(self, nx: int) -> Laurent:
        pad = (0,) * nx
        return Laurent._raw({pad + k: c for k, c in self.terms.items()}, nx + 2)
