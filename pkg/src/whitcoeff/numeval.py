"""Floating-point evaluation of symbolic results.

Self-contained numerics (stdlib math only): completed zeta via
alternating-series acceleration, modified Bessel K by the cosh integral
representation, divisor sums by exact factorization.  The SL2 building
block evaluates per its closed form; the SL3 kernel is out of numeric
scope and stays symbolic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .symzeta import AffineArg, TermExpr, XiProduct


class NumericError(ValueError):
    pass


class PoleProximityError(NumericError):
    """Argument too close to a pole of xi for a meaningful float value."""


class DomainError(NumericError):
    pass


@dataclass(frozen=True)
class NumericConfig:
    """Accuracy targets and truncation knobs."""

    target_rel_error: float = 1e-10
    zeta_terms: int = 56  # alternating-series depth; error ~ (3+sqrt(8))^-n
    bessel_points_per_unit: int = 24  # Gauss-Legendre nodes per unit of t
    pole_guard: float = 1e-9

    def __post_init__(self):
        if not (0 < self.target_rel_error < 1e-4):
            raise NumericError("target relative error must be in (0, 1e-4)")
        if self.zeta_terms < 8 or self.bessel_points_per_unit < 4:
            raise NumericError("truncation parameters too small")


DEFAULT_CONFIG = NumericConfig()


def _eta_coefficients(n: int) -> list[int]:
    """d_k of the alternating-series acceleration, computed exactly:
    d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        val = n * acc
        assert val.denominator == 1
        d.append(int(val))
    return d


_ETA_CACHE: dict[int, list[int]] = {}


def _zeta_positive(x: float, n: int) -> float:
    """zeta(x) for x > 0, x != 1, by accelerated alternating series."""
    if n not in _ETA_CACHE:
        _ETA_CACHE[n] = _eta_coefficients(n)
    d = _ETA_CACHE[n]
    s = 0.0
    sign = 1
    for k in range(n):
        s += sign * (d[k] - d[n]) / (k + 1) ** x
        sign = -sign
    eta = -s / d[n]
    return eta / (1.0 - 2.0 ** (1.0 - x))


def zeta_num(x: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Riemann zeta at a real argument; reflection formula for x < 0."""
    x = float(x)
    if abs(x - 1.0) < config.pole_guard:
        raise PoleProximityError(f"zeta has a pole at 1 (got {x})")
    if x >= 0.0:
        if x == 0.0:
            return -0.5
        return _zeta_positive(x, config.zeta_terms)
    y = 1.0 - x
    return 2.0**x * math.pi ** (x - 1.0) * math.sin(math.pi * x / 2.0) * math.gamma(y) * _zeta_positive(y, config.zeta_terms)


def xi_num(x: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Completed zeta xi(x) = pi^(-x/2) Gamma(x/2) zeta(x) on the reals.

    Uses xi(x) = xi(1-x) to evaluate at max(x, 1-x) >= 1/2; refuses
    arguments within the pole guard of 0 or 1.
    """
    x = float(x)
    if min(abs(x), abs(x - 1.0)) < config.pole_guard:
        raise PoleProximityError(f"xi has simple poles at 0 and 1 (got {x})")
    y = max(x, 1.0 - x)
    return math.pi ** (-y / 2.0) * math.gamma(y / 2.0) * _zeta_positive(y, config.zeta_terms)


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (fine at coefficient scale)."""
    if m < 1:
        raise DomainError("factorize needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def divisor_sigma(t: float, m: int) -> float:
    """sigma_t(m) = sum of d^t over divisors d of m, via the factorization."""
    if not isinstance(m, int) or m < 1:
        raise DomainError("divisor_sigma needs a positive integer m")
    total = 1.0
    for p, e in factorize(m).items():
        total *= sum(float(p) ** (t * k) for k in range(e + 1))
    return total


def _gauss_legendre(n: int) -> tuple[list[float], list[float]]:
    """Nodes/weights on [-1, 1] by Newton iteration on the Legendre recurrence."""
    nodes, weights = [], []
    for i in range(1, n + 1):
        x = math.cos(math.pi * (i - 0.25) / (n + 0.5))
        for _ in range(60):
            p0, p1 = 1.0, x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1.0)
            dx = p1 / dp
            x -= dx
            if abs(dx) < 1e-15:
                break
        p0, p1 = 1.0, x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        nodes.append(x)
        weights.append(2.0 / ((1.0 - x * x) * dp * dp))
    return nodes, weights


_GL_CACHE: dict[int, tuple[list[float], list[float]]] = {}


def bessel_k(nu: float, x: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Modified Bessel K_nu(x) for real order, by the integral
    representation K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.

    The integrand is scaled by e^x to keep the quadrature well inside the
    float range; truncation T is chosen so the discarded tail is far below
    the target accuracy.
    """
    nu = abs(float(nu))
    x = float(x)
    if x <= 0.0:
        raise DomainError("bessel_k needs x > 0")
    # truncation: need x(cosh T - 1) - nu*T comfortably past the target
    budget = -math.log(config.target_rel_error) + 60.0
    T = 1.0
    while x * (math.cosh(T) - 1.0) - nu * T < budget:
        T *= 1.5
        if T > 1e4:
            raise NumericError("bessel_k truncation failed to converge")
    if 16 not in _GL_CACHE:
        _GL_CACHE[16] = _gauss_legendre(16)
    nodes, weights = _GL_CACHE[16]
    panels = max(4, int(math.ceil(T * config.bessel_points_per_unit / 16.0)))
    h = T / panels
    total = 0.0
    for p in range(panels):
        a = p * h
        for xn, wn in zip(nodes, weights):
            t = a + (xn + 1.0) * 0.5 * h
            total += wn * math.exp(-x * (math.cosh(t) - 1.0)) * math.cosh(nu * t)
    scaled = total * 0.5 * h
    return scaled * math.exp(-x)


def eval_xi_product(p: XiProduct, s0: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Numeric value of a xi product at a real point."""
    total = 1.0
    for arg, exp in p.factors:
        v = float(arg.a) * s0 + float(arg.b)
        total *= xi_num(v, config) ** exp
    return total


def eval_sl2_block(param: float, charge: int, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """The SL2 Whittaker block at the identity:
    2/xi(2p) * |m|^(p-1/2) * sigma_{1-2p}(|m|) * K_{p-1/2}(2 pi |m|)."""
    if charge == 0:
        raise DomainError("charge must be a nonzero integer")
    m = abs(int(charge))
    p = float(param)
    pref = 2.0 / xi_num(2.0 * p, config)
    return pref * m ** (p - 0.5) * divisor_sigma(1.0 - 2.0 * p, m) * bessel_k(p - 0.5, 2.0 * math.pi * m, config)


def eval_term(
    t: TermExpr,
    s0: float,
    charges: Mapping[int, int],
    config: NumericConfig = DEFAULT_CONFIG,
) -> float:
    """Numeric value of a term at real s0 with integer charges by node.

    Terms containing an SL3 block are refused: its kernel is a symbolic
    token here, not a numeric routine.
    """
    s0 = float(s0)
    total = eval_xi_product(t.xi, s0, config)
    for b in t.bfactors:
        if b.kind == "A2":
            raise NumericError("numeric SL3 kernel out of scope; A2 blocks are symbolic-only")
        node = b.nodes[0]
        if node not in charges:
            raise DomainError(f"no charge bound for support node {node}")
        p = float(b.params[0].a) * s0 + float(b.params[0].b)
        total *= eval_sl2_block(p, charges[node], config)
    return total
