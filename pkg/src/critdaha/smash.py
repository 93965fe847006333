"""The smash product A # W.

Elements are finite sums ``sum f_w w`` stored as a dict from group elements to
nonzero rational functions; the dict is the normal form.  Multiplication uses
the cross relation (f v)(g w) = f g^{v'} vw, where only the gradient v' of v
acts on coefficients (translations act trivially at critical level).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .laurent import Laurent
from .rational import CoeffRing, RationalFn, add_all, gradient_action, render_fn, specialize_fn
from .weyl import ExtAffineWeylElt


class SmashElt:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: CoeffRing, terms: Mapping[ExtAffineWeylElt, RationalFn] | None = None):
        self.ring = ring
        self.terms: dict[ExtAffineWeylElt, RationalFn] = {
            w: f for w, f in (terms or {}).items() if not f.is_zero()}

    # -- construction ----------------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoeffRing) -> "SmashElt":
        return cls(ring)

    @classmethod
    def one(cls, ring: CoeffRing) -> "SmashElt":
        return cls(ring, {ring.W.identity: ring.one_fn()})

    def coefficient(self, w: ExtAffineWeylElt) -> RationalFn:
        return self.terms.get(w) or self.ring.zero_fn()

    def support(self) -> set[ExtAffineWeylElt]:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SmashElt):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None

    # -- arithmetic --------------------------------------------------------------------

    def _coerce(self, other) -> "SmashElt":
        if isinstance(other, SmashElt):
            if not self.ring.same(other.ring):
                raise ValueError("smash product elements over different coefficient rings")
            return other
        if isinstance(other, ExtAffineWeylElt):
            return embed_group(self.ring, other)
        if isinstance(other, (RationalFn, Laurent, int, Fraction)):
            return embed_fn(self.ring, other)
        raise TypeError(f"cannot combine SmashElt with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, f in other.terms.items():
            g = out.get(w)
            out[w] = f if g is None else g + f
        return SmashElt(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SmashElt(self.ring, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return smash_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return smash_mul(self._coerce(other), self)

    def scale_left(self, f: RationalFn) -> "SmashElt":
        """f * self for a coefficient f."""
        return SmashElt(self.ring, {w: f * g for w, g in self.terms.items()})

    def conjugate_by(self, w: ExtAffineWeylElt) -> "SmashElt":
        """w * self * w^-1."""
        return embed_group(self.ring, w) * self * embed_group(self.ring, w.inverse())

    def specialize(self, target: CoeffRing) -> "SmashElt":
        return SmashElt(target, {w: specialize_fn(f, target) for w, f in self.terms.items()})

    # -- reporting --------------------------------------------------------------------

    def sorted_terms(self):
        W = self.ring.W
        return sorted(self.terms.items(), key=lambda kv: support_key(W, kv[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        W = self.ring.W
        parts = []
        for w, f in self.sorted_terms():
            u, word = W.reduced_word(w)
            parts.append(f"{render_fn(f)} · [u{u.index}; {' '.join(map(str, word))}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"SmashElt({self.render()})"


def support_key(W, w: ExtAffineWeylElt):
    u, word = W.reduced_word(w)
    return (u.index, len(word), word)


def embed_fn(ring: CoeffRing, f) -> SmashElt:
    if isinstance(f, RationalFn):
        fn = f
    else:
        fn = ring.fn(f)
    return SmashElt(ring, {ring.W.identity: fn})


def embed_group(ring: CoeffRing, w: ExtAffineWeylElt) -> SmashElt:
    return SmashElt(ring, {w: ring.one_fn()})


def smash_add(A: SmashElt, B: SmashElt) -> SmashElt:
    return A + B


def smash_mul(A: SmashElt, B: SmashElt) -> SmashElt:
    ring = A.ring
    if not ring.same(B.ring):
        raise ValueError("smash product elements over different coefficient rings")
    acc: dict[ExtAffineWeylElt, list[RationalFn]] = {}
    moved: dict[tuple[int, ExtAffineWeylElt], RationalFn] = {}
    for v, f in A.terms.items():
        for w, g in B.terms.items():
            key = (v.v, w)
            gv = moved.get(key)
            if gv is None:
                gv = moved[key] = gradient_action(v.v, g)
            acc.setdefault(v * w, []).append(f * gv)
    return SmashElt(ring, {w: add_all(fs, ring) for w, fs in acc.items()})


def smash_eq(A: SmashElt, B: SmashElt) -> bool:
    return A == B


def smash_sum(items: Iterable[SmashElt], ring: CoeffRing) -> SmashElt:
    acc: dict[ExtAffineWeylElt, list[RationalFn]] = {}
    for X in items:
        for w, f in X.terms.items():
            acc.setdefault(w, []).append(f)
    return SmashElt(ring, {w: add_all(fs, ring) for w, fs in acc.items()})
