"""Parametric 3x3 quotient matrices of the extremal families, their exact
characteristic polynomials, and the auxiliary inequality functions built
from differences of those polynomials.

Everything here is exact (``fractions.Fraction``) until a root is needed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import graphs

Number = int | Fraction
Matrix = list[list[Fraction]]

VARIANTS = ("matching", "odd_factor", "case31", "case32")
ROOT_TOL = 1e-10


# -- polynomials -----------------------------------------------------------


class Poly:
    """Univariate polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs) if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, float) else 0.0
        if isinstance(x, float):
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(m))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Number) -> "Poly":
        scalar = Fraction(scalar)
        return Poly(c / scalar for c in self.coeffs)

    def deriv(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i) if len(self.coeffs) > 1 else Poly([0])

    def as_strings(self) -> list[str]:
        """Coefficients highest degree first, as exact ``p/q`` strings."""
        return [str(c) for c in reversed(self.coeffs)]

    def __repr__(self) -> str:
        return f"Poly({', '.join(self.as_strings())})"


class Cubic(Poly):
    """Monic degree-3 polynomial ``x^3 + c2 x^2 + c1 x + c0``."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[Number]):
        super().__init__(coeffs)
        if self.degree != 3 or self.coeffs[3] != 1:
            raise ValueError(f"not a monic cubic: {self.coeffs}")

    @classmethod
    def from_top(cls, c3: Number, c2: Number, c1: Number, c0: Number) -> "Cubic":
        return cls([c0, c1, c2, c3])

    c3 = property(lambda self: self.coeffs[3])
    c2 = property(lambda self: self.coeffs[2])
    c1 = property(lambda self: self.coeffs[1])
    c0 = property(lambda self: self.coeffs[0])


def interpolate(points: Sequence[tuple[Number, Number]]) -> Poly:
    """Lagrange interpolation through exact points."""
    out = Poly([0])
    for i, (xi, yi) in enumerate(points):
        term = Poly([yi])
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * Poly([-Fraction(xj), 1]) / (Fraction(xi) - Fraction(xj))
        out = out + term
    return out


def charpoly_exact(m) -> Poly:
    """``det(xI - M)`` by Faddeev-LeVerrier over the rationals."""
    a = [[Fraction(v) if not isinstance(v, float) else Fraction(v).limit_denominator(10**12)
          for v in row] for row in np.asarray(m, dtype=object).tolist()]
    order = len(a)
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[order] = Fraction(1)
    mk = [[Fraction(0)] * order for _ in range(order)]  # M_0 = 0
    c_prev = Fraction(1)
    for k in range(1, order + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k)/k
        prod = [[sum(a[i][t] * mk[t][j] for t in range(order)) for j in range(order)]
                for i in range(order)]
        for i in range(order):
            prod[i][i] += c_prev
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(order)) for j in range(order)]
              for i in range(order)]
        c_prev = -sum(am[i][i] for i in range(order)) / k
        coeffs[order - k] = c_prev
    if order == 3:
        return Cubic(coeffs)
    return Poly(coeffs)


# -- roots -----------------------------------------------------------------


def _real_roots_upto_quadratic(p: Poly) -> list[float]:
    d = p.degree
    if d <= 0:
        return []
    if d == 1:
        return [float(-p[0] / p[1])]
    if d == 2:
        a, b, c = float(p[2]), float(p[1]), float(p[0])
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        r = math.sqrt(disc)
        return sorted([(-b - r) / (2 * a), (-b + r) / (2 * a)])
    raise ValueError("critical points only supported for degree <= 3")


def largest_root(c: Poly, lower: float, upper: float | None = None,
                 tol: float = ROOT_TOL) -> float:
    """Largest real root of ``c`` above ``lower`` (degree <= 3, positive leading term).

    The bracket is cut at the critical points into monotone pieces; the
    highest piece with a sign change is bisected, then polished by Newton.
    Without ``upper`` the Cauchy bound is used.
    """
    if c.degree < 1 or c[c.degree] <= 0:
        raise ValueError("need a polynomial of positive degree with positive leading coefficient")
    if upper is None:
        lead = c[c.degree]
        upper = 1.0 + max(float(abs(c[i] / lead)) for i in range(c.degree))
    f = c.__call__
    crit = [x for x in _real_roots_upto_quadratic(c.deriv()) if lower < x < upper]
    cuts = [lower, *crit, upper]
    for a, b in reversed(list(zip(cuts, cuts[1:]))):
        fa, fb = f(float(a)), f(float(b))
        if fb == 0.0:
            return float(b)
        if fa == 0.0:
            return float(a)
        if (fa < 0.0) != (fb < 0.0):
            rising = fb > 0.0
            lo, hi = float(a), float(b)
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                if (f(mid) > 0.0) == rising:
                    hi = mid
                else:
                    lo = mid
            x = 0.5 * (lo + hi)
            df = c.deriv()
            for _ in range(3):
                d = df(x)
                if d == 0.0:
                    break
                step = f(x) / d
                if not lo - tol <= x - step <= hi + tol:
                    break
                x -= step
            return x
    raise ValueError(f"no sign change of the polynomial on [{lower}, {upper}]")


# -- family parameters -----------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    variant: str
    n: int
    s: int
    k: int | None = None
    b: int | None = None
    delta: int | None = None

    def __post_init__(self) -> None:
        validate(self)

    def graph(self) -> graphs.Graph:
        if self.variant == "matching":
            return graphs.family_matching(self.n, self.s, self.k)
        if self.variant == "odd_factor":
            return graphs.family_odd_factor(self.n, self.s, self.b)
        return graphs.family_case3(self.n, self.s, self.b, self.delta)

    def matrix(self) -> Matrix:
        return _MATRIX[self.variant](self)

    def quotient(self) -> np.ndarray:
        return np.array([[int(v) for v in row] for row in self.matrix()], dtype=np.int64)

    def charpoly(self) -> Cubic:
        return charpoly_exact(self.matrix())

    def radius(self) -> float:
        """Distance spectral radius of the family graph via its quotient cubic."""
        m = self.matrix()
        upper = 1.0 + float(max(sum(row) for row in m))
        return largest_root(self.charpoly(), float(self.n - 1), upper)

    def as_dict(self) -> dict:
        return {k: v for k, v in (("variant", self.variant), ("n", self.n), ("s", self.s),
                                  ("k", self.k), ("b", self.b), ("delta", self.delta))
                if v is not None}


def validate(p: FamilyParams) -> None:
    n, s = p.n, p.s
    if p.variant == "matching":
        if p.k is None:
            raise ValueError("matching family needs k")
        graphs.check_matching_params(n, s, p.k)
        return
    b = p.b
    if b is None or b < 1 or b % 2 == 0:
        raise ValueError(f"b must be a positive odd integer (b={b})")
    if p.variant == "odd_factor":
        if n % 2:
            raise ValueError(f"odd-factor family needs even n (n={n})")
        if not 1 <= s or (b + 1) * s > n - 2:
            raise ValueError(f"odd-factor family needs 1 <= s <= (n-2)/(b+1) (n={n}, s={s}, b={b})")
        return
    d = p.delta
    if p.variant not in ("case31", "case32"):
        raise ValueError(f"unknown variant {p.variant!r}")
    if d is None or d < 3:
        raise ValueError(f"delta must be at least 3 (delta={d})")
    if p.variant == "case31" and s != 1:
        raise ValueError("case31 has s = 1")
    if p.variant == "case32" and not 2 <= s <= d - 1:
        raise ValueError(f"case32 needs 2 <= s <= delta-1 (s={s}, delta={d})")
    if n - s - (d + 1 - s) * (b * s + 1) < 2 * (d - s + 1):
        raise ValueError("big clique smaller than 2(delta-s+1)")


def matching_matrix(n: Number, s: Number, k: Number) -> Matrix:
    n, s, k = Fraction(n), Fraction(s), Fraction(k)
    a = n + 1 - 2 * s - k
    c = s + k - 1
    return [[s - 1, a, c],
            [s, a - 1, 2 * c],
            [s, 2 * a, 2 * (c - 1)]]


def oddfactor_matrix(n: Number, s: Number, b: Number) -> Matrix:
    n, s, b = Fraction(n), Fraction(s), Fraction(b)
    a = n - (b + 1) * s - 1
    c = b * s + 1
    return [[s - 1, a, c],
            [s, a - 1, 2 * c],
            [s, 2 * a, 2 * (c - 1)]]


def case3_matrix(n: Number, s: Number, b: Number, delta: Number) -> Matrix:
    """Collapsed quotient of ``K_s v (K_a + (bs+1) K_p)``, ``p = delta+1-s``."""
    n, s, b, delta = map(Fraction, (n, s, b, delta))
    p = delta + 1 - s
    copies = b * s + 1
    a = n - s - p * copies
    small = p * copies
    # A small-clique vertex sees p-1 vertices at distance 1 inside its clique
    # and the other (copies-1)*p at distance 2.
    return [[s - 1, a, small],
            [s, a - 1, 2 * small],
            [s, 2 * a, (p - 1) + 2 * (copies - 1) * p]]


_MATRIX: dict[str, Callable[[FamilyParams], Matrix]] = {
    "matching": lambda p: matching_matrix(p.n, p.s, p.k),
    "odd_factor": lambda p: oddfactor_matrix(p.n, p.s, p.b),
    "case31": lambda p: case3_matrix(p.n, 1, p.b, p.delta),
    "case32": lambda p: case3_matrix(p.n, p.s, p.b, p.delta),
}


def matching_quotient(n: int, s: int, k: int, parity: bool = True) -> np.ndarray:
    graphs.check_matching_params(n, s, k, parity)
    return np.array(matching_matrix(n, s, k), dtype=np.int64)


def matching_charpoly(n: int, s: int, k: int) -> Cubic:
    return FamilyParams("matching", n, s, k=k).charpoly()


def oddfactor_quotient(n: int, s: int, b: int) -> np.ndarray:
    return FamilyParams("odd_factor", n, s, b=b).quotient()


def oddfactor_charpoly(n: int, s: int, b: int) -> Cubic:
    return FamilyParams("odd_factor", n, s, b=b).charpoly()


def case31_quotient(n: int, b: int, delta: int) -> np.ndarray:
    return FamilyParams("case31", n, 1, b=b, delta=delta).quotient()


def case31_charpoly(n: int, b: int, delta: int) -> Cubic:
    return FamilyParams("case31", n, 1, b=b, delta=delta).charpoly()


def case32_quotient(n: int, s: int, b: int, delta: int) -> np.ndarray:
    return FamilyParams("case32", n, s, b=b, delta=delta).quotient()


def case32_charpoly(n: int, s: int, b: int, delta: int) -> Cubic:
    return FamilyParams("case32", n, s, b=b, delta=delta).charpoly()


def random_params(variant: str, rng: random.Random, n_max: int = 60) -> FamilyParams:
    """A uniformly drawn valid parameter tuple with ``n <= n_max`` (rejection sampling)."""
    for _ in range(10_000):
        try:
            if variant == "matching":
                n = rng.randint(4, n_max)
                k = rng.randrange(2 + (n % 2), n - 1, 2)
                s = rng.randint(1, (n - k) // 2)
                return FamilyParams("matching", n, s, k=k)
            b = rng.choice((1, 3, 5))
            if variant == "odd_factor":
                n = rng.randrange(4, n_max + 1, 2)
                s = rng.randint(1, max(1, (n - 2) // (b + 1)))
                return FamilyParams("odd_factor", n, s, b=b)
            delta = rng.randint(3, 6)
            s = 1 if variant == "case31" else rng.randint(2, delta - 1)
            n = rng.randint(10, n_max)
            return FamilyParams(variant, n, s, b=b, delta=delta)
        except ValueError:
            continue
    raise RuntimeError(f"could not draw parameters for {variant}")


# -- auxiliary inequality functions -----------------------------------------

PROOF_FUNCTIONS = {
    # name: (required parameters, takes x)
    "p": (("n", "k", "t", "s"), True),
    "v": (("n", "k", "t", "s"), False),
    "c": (("n", "b", "delta", "s"), True),
    "h": (("n", "b", "delta", "s"), False),
    "l": (("b", "delta"), False),
    "m": (("n", "b", "delta"), False),
    "q": (("n", "b", "delta", "s"), False),
    "H": (("n", "b", "delta", "s"), True),
    "Hprime": (("n", "b", "delta", "s"), True),
    "g": (("n", "b", "delta", "s"), False),
    "v_b": (("b", "delta"), False),
}


def _cubic(m: Matrix) -> Poly:
    return charpoly_exact(m)


def matching_gap(n: Number, k: Number, t: Number, s: Number) -> Poly:
    """``p`` with ``f_s - f_t = (t - s) p``."""
    if s == t:
        raise ValueError("matching gap needs s != t")
    diff = _cubic(matching_matrix(n, s, k)) - _cubic(matching_matrix(n, t, k))
    return diff / (Fraction(t) - Fraction(s))


def oddfactor_gap(n: Number, b: Number, delta: Number, s: Number) -> Poly:
    """``c`` with ``f_s - f_delta = (delta - s) c``."""
    if s == delta:
        raise ValueError("odd-factor gap needs s != delta")
    diff = _cubic(oddfactor_matrix(n, s, b)) - _cubic(oddfactor_matrix(n, delta, b))
    return diff / (Fraction(delta) - Fraction(s))


def case31_gap(n: Number, b: Number, delta: Number) -> Poly:
    """``f_delta - f_1``; linear in x."""
    return _cubic(oddfactor_matrix(n, delta, b)) - _cubic(case3_matrix(n, 1, b, delta))


def case32_gap(n: Number, b: Number, delta: Number, s: Number) -> Poly:
    """``H`` with ``f_delta - f_s = (delta - s) H`` for the collapsed case-3 quotient."""
    if s == delta:
        raise ValueError("case-3 gap needs s != delta")
    diff = _cubic(oddfactor_matrix(n, delta, b)) - _cubic(case3_matrix(n, s, b, delta))
    return diff / (Fraction(delta) - Fraction(s))


def _g_in_s(b: Number, delta: Number, n: Number) -> Poly:
    # g(s) = H'(n-1) is a polynomial in s; recover it by interpolation at
    # points away from s = delta and check the degree.
    pts = []
    for j in range(1, 8):
        s = Fraction(delta) + j
        pts.append((s, case32_gap(n, b, delta, s).deriv()(Fraction(n) - 1)))
    poly = interpolate(pts)
    if poly.degree > 3:
        raise ArithmeticError(f"g(s) came out with degree {poly.degree}")
    return poly


def clique_bound_excess(b: Number, delta: Number) -> Fraction:
    """``2 b delta^2`` minus the maximum over real s of ``s + (bs+2)(2delta-2s+1)``.

    Positive means a largest odd component smaller than ``2(delta-s+1)``
    forces ``n < 2 b delta^2``.
    """
    b, delta = Fraction(b), Fraction(delta)
    phi = Poly([0, 1]) + Poly([2, b]) * Poly([2 * delta + 1, -2])
    d = phi.deriv()
    vertex = -d[0] / d[1]
    return 2 * b * delta**2 - phi(vertex)


def proof_function(name: str, params: dict, x: Number | None = None) -> Fraction:
    """Evaluate one of the auxiliary functions exactly.

    Names and parameters are listed in ``PROOF_FUNCTIONS``.  Each is built
    from the relevant difference of exact characteristic polynomials.
    """
    if name not in PROOF_FUNCTIONS:
        raise KeyError(f"unknown proof function {name!r}")
    needed, takes_x = PROOF_FUNCTIONS[name]
    missing = [k for k in needed if k not in params]
    if missing:
        raise ValueError(f"{name} needs parameters {missing}")
    if takes_x and x is None:
        raise ValueError(f"{name} needs an x value")
    P = {k: Fraction(params[k]) for k in needed}
    x = None if x is None else Fraction(x)
    if name == "p":
        return matching_gap(P["n"], P["k"], P["t"], P["s"])(x)
    if name == "v":
        return matching_gap(P["n"], P["k"], P["t"], P["s"])(P["n"] - 1)
    if name == "c":
        return oddfactor_gap(P["n"], P["b"], P["delta"], P["s"])(x)
    if name == "h":
        return oddfactor_gap(P["n"], P["b"], P["delta"], P["s"])(P["n"] - 1)
    if name == "l":
        return clique_bound_excess(P["b"], P["delta"])
    if name == "m":
        return case31_gap(P["n"], P["b"], P["delta"])(P["n"] - 1) / (P["delta"] - 1)
    if name == "q":
        return case32_gap(P["n"], P["b"], P["delta"], P["s"])(P["n"] - 1)
    if name == "H":
        return case32_gap(P["n"], P["b"], P["delta"], P["s"])(x)
    if name == "Hprime":
        return case32_gap(P["n"], P["b"], P["delta"], P["s"]).deriv()(x)
    if name == "g":
        return case32_gap(P["n"], P["b"], P["delta"], P["s"]).deriv()(P["n"] - 1)
    # v_b: three times the minimum over real s of g'(s), taken at n = 2 b delta^2
    n = 2 * P["b"] * P["delta"] ** 2
    gp = _g_in_s(P["b"], P["delta"], n).deriv()
    vertex = -gp[1] / (2 * gp[2])
    return 3 * gp(vertex)


def oddfactor_threshold(b: Number, delta: Number) -> Fraction:
    """Smallest admissible order for the odd-factor theorem (as an exact rational)."""
    b, delta = Fraction(b), Fraction(delta)
    return max(2 * b * delta**2, (3 / b + 5 + 2 * b) * delta + 1 + 3 * (b + 1) / b**2)


def matching_threshold(k: int, t: int) -> int:
    return 9 * k + 10 * t - 11
