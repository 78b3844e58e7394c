"""Closed forms as printed in the source derivation, transcribed verbatim.

These are comparison targets only; nothing else in the package computes
with them.  ``forms`` rebuilds every quantity from exact determinants, and
``compare_printed`` reports where the two disagree.
"""

from __future__ import annotations

from fractions import Fraction

from .forms import Cubic, FamilyParams, proof_function

F = Fraction


def matching_charpoly(n, s, k) -> Cubic:
    return Cubic.from_top(
        1,
        -s - n - k + 5,
        5 * s**2 + (-2 * n + 7 * k - 8) * s - 2 * k * n - n + 2 * k**2 - 5 * k + 8,
        -2 * s**3 + (n - 3 * k + 8) * s**2 + (k * n - 3 * n - k**2 + 9 * k - 8) * s
        - 2 * k * n + 2 * k**2 - 4 * k + 4,
    )


def oddfactor_charpoly(n, s, b) -> Cubic:
    return Cubic.from_top(
        1,
        -b * s - n + 3,
        2 * b**2 * s**2 + 3 * b * s**2 - 2 * b * n * s + 3 * b * s + 3 * s - 5 * n + 6,
        -(b**2 + b) * s**3 + (b * n + 2 * b**2 + b - 1) * s**2 + (n - 2 * b * n + 4 * b + 2) * s
        + 4 - 4 * n,
    )


def case31_charpoly(n, b, d) -> Cubic:
    return Cubic.from_top(
        1,
        3 - b * d - n,
        3 + 3 * d + b * d + 3 * d**2 + 5 * b * d**2 + 2 * b**2 * d**2 - 2 * n - 3 * d * n
        - 2 * b * d * n,
        (b**2 + 3 * b + 2) * d**2 + (-b * n - 2 * n + b + 2) * d - n + 1,
    )


def case32_charpoly(n, s, b, d) -> Cubic:
    x2 = 3 - n - b * s - b * d * s + b * s**2
    x1 = (2 * b**2 * s**4 + (2 * b - 4 * b**2 - 4 * b**2 * d) * s**3
          + (-5 * b + 2 * b**2 - 7 * b * d + 4 * b**2 * d + 2 * b**2 * d**2 + 2 * b * n) * s**2
          + (-3 + 3 * b - 3 * d + 8 * b * d + 5 * b * d**2 + 3 * n - 2 * b * n - 2 * b * d * n) * s
          - 3 * d * n - 5 * n + 3 * d**2 + 6 * d + 6)
    x0 = (-b**2 * s**5 + (-b + 4 * b**2 + 2 * b**2 * d) * s**4
          + (5 * b - 5 * b**2 + 3 * b * d - 6 * b**2 * d - b**2 * d**2 - b * n) * s**3
          + (1 - 8 * b + 2 * b**2 + d - 11 * b * d + 4 * b**2 * d - 2 * b * d**2 + 2 * b**2 * d**2
             - n + 3 * b * n + b * d * n) * s**2
          + (-4 + 4 * b - 5 * d + 9 * b * d - d**2 + 5 * b * d**2 + 4 * n - 2 * b * n + d * n
             - 2 * b * d * n) * s
          - 3 * d * n - 4 * n + 3 * d**2 + 6 * d + 4)
    return Cubic.from_top(1, x2, x1, x0)


# -- auxiliary functions -----------------------------------------------------


def p_bracket(x, n, k, t, s):
    """Bracket of the factored ``f_s - f_t`` display."""
    return (x**2 + (2 * n + 8 - 5 * (t + s) - 7 * k) * x + 2 * s**2 + (2 * t - n + 3 * k - 8) * s
            + 2 * t**2 + (-n + 3 * k - 8) * t + 3 * n - k * n + k**2 - 9 * k + 8)


def p_literal(x, n, k, t, s):
    """The standalone ``p(x)`` display read literally: ``2s^2(2t-n+3k-8)s``."""
    return (x**2 + (2 * n + 8 - 5 * (t + s) - 7 * k) * x + 2 * s**2 * (2 * t - n + 3 * k - 8) * s
            + 2 * t**2 + (-n + 3 * k - 8) * t + 3 * n - k * n + k**2 - 9 * k + 8)


def v(n, k, t, s):
    return (2 * s**2 + (3 * k + 2 * t - 6 * n - 3) * s + 3 * n**2 + 2 * t**2 + (3 * k - 6 * n - 3) * t
            + 7 * n - 8 * k * n + k**2 - 2 * k + 1)


def v_at_top(n, k, t):
    """Printed value of ``v((n-k)/2)``."""
    return F(1, 2) * (n**2 - (10 * t + 9 * k - 11) * n + 4 * t**2 + (4 * k - 6) * t - k + 2)


def c(x, n, b, d, s):
    return (b * x**2 + (-2 * b**2 * s - 3 * b * s + 2 * b * n - 2 * b**2 * d - 3 * b * d - 3 * b - 3) * x
            + (b**2 * s + b * s - b * n + b**2 * d + b * d - 2 * b**2 - b + 1) * s
            + (-b * n + b**2 * d + b * d - 2 * b**2 - b + 1) * d - n + 2 * b * n - 4 * b - 2)


def h(n, b, d, s):
    return ((b**2 + b) * s**2 + (1 + 2 * b + b * d + b**2 * d - 4 * b * n - 2 * b**2 * n) * s
            + 3 * b * n**2 + b * (b + 1) * d**2 + (1 + 2 * b - 4 * b * n - 2 * b**2 * n) * d
            - 4 * n - 5 * b * n + 1)


def h_at_top(n, b, d):
    """Printed value of ``h((n-2)/(b+1))``."""
    return F(1, b + 1) * (b**2 * n**2 - (3 + 3 * b + b**2 + (3 * b + 5 * b**2 + 2 * b**3) * d) * n
                          + b**3 * d**2 + 2 * d**2 * b**2 + b * d**2 + b**2 * d + (b + 1) * d + b - 1)


def case31_difference(x, n, b, d):
    """Printed linear form of ``f_delta - f_1``."""
    return ((3 * n * (d - 1) - 2 * b * d**2 - 3 * d**2 + 2 * b * d + 3) * x
            - (b**2 + b) * d**3 + (b * n + b**2 - 2 * b - 3) * d**2 + (-b * n + 3 * n + 3 * b) * d
            - 3 * n + 3)


def m(n, b, d):
    return 3 * n**2 - (b * d + 3 * d + 3) * n - b**2 * d**2 - b * d**2 - b * d


def m_at_threshold(b, d):
    """Printed value of ``m(2 b delta^2)``."""
    return b * d * (12 * b * d**3 - (2 * b + 6) * d**2 - (7 + b) * d - 1)


def H(x, n, b, d, s):
    return ((-b + b * s) * x**2
            + (-3 + 3 * b - 3 * d + 3 * b * d + 2 * b**2 * d + 3 * n - 2 * b * n
               + (-5 * b + 2 * b**2 - 5 * b * d + 2 * b * n) * s
               + (2 * b - 4 * b**2 - 2 * b**2 * d) * s**2 + 2 * b**2 * s**3) * x
            - b**2 * s**4 + (-b + 4 * b**2 + b**2 * d) * s**3
            + (5 * b - 5 * b**2 + 2 * b * d - 2 * b**2 * d - b * n) * s**2
            + (1 - 8 * b + 2 * b**2 + d - 6 * b * d - b**2 * d - n + 3 * b * n) * s
            + (b * d - 2 * b + 4) * n - (b**2 + b) * d**2 + (2 * b**2 + b - 4) * d + 4 * b - 4)


def q(n, b, d, s):
    return (3 * (1 - b + b * s) * n**2
            + (2 * b**2 * s**3 + (b - 4 * b**2 - 2 * b**2 * d) * s**2
               + (-1 - 6 * b + 2 * b**2 - 5 * b * d) * s + (2 * b**2 + 4 * b - 3) * d + 5 * b - 2) * n
            - b**2 * s**4 + (-b + 2 * b**2 + b**2 * d) * s**3 + (3 * b - b**2 + 2 * b * d) * s**2
            + (1 - 2 * b + d - b * d - b**2 * d) * s - (b**2 + b) * d**2 - (2 * b + 1) * d - 1)


def q_at_threshold(b, d, s):
    """Printed value of ``q(2 b delta^2)``."""
    return (12 * b**2 * (1 + b * (s - 1)) * d**4
            + (-6 * b + 8 * b**2 + 4 * b**3 - 10 * b**2 * s - 4 * b**3 * s**2) * d**3
            + (-5 * b + 9 * b**2 + (-2 * b - 12 * b**2 + 4 * b**3) * s + (2 * b**2 - 8 * b**3) * s**2
               + 4 * b**3 * s**3) * d**2
            + (-1 - 2 * b + (1 - b - b**2) * s + 2 * b * s**2 + b**2 * s**3) * d
            - 1 + (1 - 2 * b) * s + (3 * b - b**2) * s**2 + (-b + 2 * b**2) * s**3 - b**2 * s**4)


def g(n, b, d, s):
    return (2 * b**2 * s**3 + (2 * b - 4 * b**2 - 2 * b**2 * d) * s**2
            + (-7 * b + 2 * b**2 - 5 * b * d + 4 * b * n) * s
            + 2 * b**2 * d + (5 + 3 * d - 4 * n) * b + 3 * (n - d - 1))


def g_at_2(n, b, d):
    return ((3 + 4 * b) * n + 4 * (2 * b - 4 * b**2 - 2 * b**2 * d) + (2 * b**2 - 7 * b - 3) * d
            + 20 * b**2 - 9 * b - 3)


def l(b, d):
    return F(3, 2) * b * d**2 - (F(b + 5, 2) * d + F(b, 8) + 3)


def v_b(b, d):
    return 22 * b**2 * d**2 - 2 - 13 * b - 11 * b * d - 2 * b**2 - 8 * b**2 * d


CHARPOLYS = {
    "matching": lambda p: matching_charpoly(F(p.n), F(p.s), F(p.k)),
    "odd_factor": lambda p: oddfactor_charpoly(F(p.n), F(p.s), F(p.b)),
    "case31": lambda p: case31_charpoly(F(p.n), F(p.b), F(p.delta)),
    "case32": lambda p: case32_charpoly(F(p.n), F(p.s), F(p.b), F(p.delta)),
}

# Printed forms known to disagree with the exact derivation.  Each entry says
# how the printed text differs; ``compare_printed`` still recomputes both
# sides, so an entry only changes how a mismatch is classified.
KNOWN_DISCREPANCIES = {
    "p_literal": "standalone p(x) display drops a '+': '2s^2(2t-n+3k-8)s' should read "
                 "'2s^2+(2t-n+3k-8)s' (the bracket of the f_s - f_t display is correct)",
    "h_at_top": "printed h((n-2)/(b+1)) carries an extra b^2*delta/(b+1); the exact value is "
                "smaller by that amount, and the positivity conclusion drawn from it still holds",
}


def printed_charpoly(p: FamilyParams) -> Cubic:
    return CHARPOLYS[p.variant](p)


def compare_printed(name: str, params: dict) -> tuple[Fraction, Fraction]:
    """Return ``(rebuilt, printed)`` for one auxiliary quantity at exact parameters."""
    P = {k: F(v) for k, v in params.items()}
    pf = proof_function
    if name == "p_bracket":
        return pf("p", P, P["x"]), p_bracket(P["x"], P["n"], P["k"], P["t"], P["s"])
    if name == "p_literal":
        return pf("p", P, P["x"]), p_literal(P["x"], P["n"], P["k"], P["t"], P["s"])
    if name == "v":
        return pf("v", P), v(P["n"], P["k"], P["t"], P["s"])
    if name == "v_at_top":
        top = dict(P, s=(P["n"] - P["k"]) / 2)
        return pf("v", top), v_at_top(P["n"], P["k"], P["t"])
    if name == "c":
        return pf("c", P, P["x"]), c(P["x"], P["n"], P["b"], P["delta"], P["s"])
    if name == "h":
        return pf("h", P), h(P["n"], P["b"], P["delta"], P["s"])
    if name == "h_at_top":
        top = dict(P, s=(P["n"] - 2) / (P["b"] + 1))
        return pf("h", top), h_at_top(P["n"], P["b"], P["delta"])
    if name == "case31_difference":
        from .forms import case31_gap
        return (case31_gap(P["n"], P["b"], P["delta"])(P["x"]),
                case31_difference(P["x"], P["n"], P["b"], P["delta"]))
    if name == "m":
        return pf("m", P), m(P["n"], P["b"], P["delta"])
    if name == "m_at_threshold":
        at = dict(P, n=2 * P["b"] * P["delta"] ** 2)
        return pf("m", at), m_at_threshold(P["b"], P["delta"])
    if name == "H":
        return pf("H", P, P["x"]), H(P["x"], P["n"], P["b"], P["delta"], P["s"])
    if name == "q":
        return pf("q", P), q(P["n"], P["b"], P["delta"], P["s"])
    if name == "q_at_threshold":
        at = dict(P, n=2 * P["b"] * P["delta"] ** 2)
        return pf("q", at), q_at_threshold(P["b"], P["delta"], P["s"])
    if name == "g":
        return pf("g", P), g(P["n"], P["b"], P["delta"], P["s"])
    if name == "g_at_2":
        return pf("g", dict(P, s=F(2))), g_at_2(P["n"], P["b"], P["delta"])
    if name == "v_b":
        return pf("v_b", P), v_b(P["b"], P["delta"])
    raise KeyError(f"no printed form named {name!r}")


PRINTED_AUXILIARY = (
    "p_bracket", "p_literal", "v", "v_at_top", "c", "h", "h_at_top", "case31_difference",
    "m", "m_at_threshold", "H", "q", "q_at_threshold", "g", "g_at_2", "v_b",
)
