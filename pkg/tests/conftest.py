from fractions import Fraction

import pytest

from critdaha.rational import CoeffRing
from critdaha.roots import build_root_system

SYSTEMS = [
    ("A", 1, "untwisted"),
    ("A", 2, "untwisted"),
    ("C", 2, "twisted"),
    ("C", 2, "untwisted"),
    ("G", 2, "twisted"),
    ("G", 2, "untwisted"),
]


def rs_of(label):
    f, n, t = label
    return build_root_system(family=f, rank=n, twist=t)


def ids(label):
    return f"{label[0]}{label[1]}-{label[2]}"


@pytest.fixture(params=SYSTEMS, ids=ids)
def rs(request):
    return rs_of(request.param)


@pytest.fixture
def ring(rs):
    return CoeffRing(rs)


def evaluate_poly(f, xs, taus):
    """Value of a Laurent polynomial at X^{omega_i} = xs[i], tau = taus."""
    n = len(xs)
    total = Fraction(0)
    for k, c in f.terms.items():
        v = Fraction(c)
        for i in range(n):
            v *= Fraction(xs[i]) ** k[i]
        v *= Fraction(taus[0]) ** k[n] * Fraction(taus[1]) ** k[n + 1]
        total += v
    return total


def evaluate_fn(f, xs, taus):
    """Independent evaluation of num / prod(1 - coef tau^e X^root)^m at a point."""
    rs = f.ring.rs
    den = Fraction(1)
    for F, m in f.den.items():
        x = Fraction(1)
        for i, e in enumerate(rs.root_omega[F.root]):
            x *= Fraction(xs[i]) ** e
        t = Fraction(taus[0]) ** F.tau[0] * Fraction(taus[1]) ** F.tau[1]
        den *= (1 - F.coef * t * x) ** m
    return evaluate_poly(f.num, xs, taus) / den
