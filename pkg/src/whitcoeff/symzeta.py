"""Symbolic output language of the reduction engine.

Expressions are sums of terms; a term is a product of completed-zeta
factors xi(a*s+b) with integer exponents times SL2/SL3 Whittaker
building-block factors B_m(p) / B_{m,n}(p1,p2) whose charge slots stay
attached to support nodes.

Vanishing bookkeeping rests on two analytic facts only: xi has simple
poles at 0 and 1 and no other real zeros or poles, and a building block
vanishes exactly where its completed-zeta prefactor forces it to
(B_m(p) iff p in {0, 1/2}; the SL3 kernel never vanishes).

Canonicalization quotients by the identities that relate equal printed
forms: the functional equation xi(x) = xi(1-x) argument-wise, and the
completed-Whittaker reflection  xi(2p) B_m(p) = xi(2-2p) B_m(1-p)  (and
its SL3 analogue over the Weyl orbit of the parameter pair), which moves
a ratio of xi factors between a building block and the zeta product.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

HALF = Fraction(1, 2)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class AffineArg:
    """An affine-linear argument a*s + b with exact rational a, b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @staticmethod
    def const(b) -> "AffineArg":
        return AffineArg(Fraction(0), _frac(b))

    @property
    def is_constant(self) -> bool:
        return self.a == 0

    def value_at(self, s0: Optional[Fraction]) -> Optional[Fraction]:
        """Exact value at rational s0; at generic s (s0=None) only constants
        have a value."""
        if s0 is None:
            return self.b if self.a == 0 else None
        return self.a * _frac(s0) + self.b

    def reflected(self) -> "AffineArg":
        """Image under x -> 1 - x."""
        return AffineArg(-self.a, 1 - self.b)

    @property
    def is_canonical(self) -> bool:
        return self.a > 0 or (self.a == 0 and self.b >= HALF)

    def canonical(self) -> "AffineArg":
        """Representative of {x, 1-x} with positive slope (or constant >= 1/2)."""
        return self if self.is_canonical else self.reflected()

    def scaled(self, c) -> "AffineArg":
        c = _frac(c)
        return AffineArg(c * self.a, c * self.b)

    def shifted(self, c) -> "AffineArg":
        return AffineArg(self.a, self.b + _frac(c))

    def plus(self, other: "AffineArg") -> "AffineArg":
        return AffineArg(self.a + other.a, self.b + other.b)

    def render(self, latex: bool = False) -> str:
        return _render_affine(self, latex)

    def __str__(self) -> str:
        return self.render()


def _render_frac(q: Fraction, latex: bool) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    if latex:
        sign = "-" if q < 0 else ""
        return f"{sign}\\tfrac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return f"{q.numerator}/{q.denominator}"


def _render_affine(arg: AffineArg, latex: bool) -> str:
    a, b = arg.a, arg.b
    if a == 0:
        return _render_frac(b, latex)
    if a == 1:
        s_part = "s"
    elif a == -1:
        s_part = "-s"
    else:
        s_part = f"{_render_frac(a, latex)}s"
    if b == 0:
        return s_part
    if a < 0 and b > 0:
        # prefer "6-s" over "-s+6"
        mag = "s" if a == -1 else f"{_render_frac(-a, latex)}s"
        return f"{_render_frac(b, latex)}-{mag}"
    sign = "+" if b > 0 else "-"
    return f"{s_part}{sign}{_render_frac(abs(b), latex)}"


def xi_order_at(x) -> int:
    """Order of the completed zeta xi at a rational point: -1 at the simple
    poles 0 and 1, otherwise 0 (xi has no real zeros)."""
    x = _frac(x)
    return -1 if x in (0, 1) else 0


@dataclass(frozen=True)
class XiProduct:
    """Finite product of xi(arg)^exp factors; empty product is 1.

    Construction merges repeated arguments and drops zero exponents but
    does not apply the functional equation; canonicalize() does.
    """

    factors: tuple[tuple[AffineArg, int], ...]

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[AffineArg, int]]) -> "XiProduct":
        merged: dict[AffineArg, int] = {}
        for arg, exp in pairs:
            merged[arg] = merged.get(arg, 0) + exp
        items = tuple(sorted(((a, e) for a, e in merged.items() if e != 0)))
        return XiProduct(items)

    @staticmethod
    def one() -> "XiProduct":
        return XiProduct(())

    @staticmethod
    def single(arg: AffineArg, exp: int = 1) -> "XiProduct":
        return XiProduct.from_pairs([(arg, exp)])

    @property
    def is_one(self) -> bool:
        return not self.factors

    def __mul__(self, other: "XiProduct") -> "XiProduct":
        return XiProduct.from_pairs(list(self.factors) + list(other.factors))

    def inverse(self) -> "XiProduct":
        return XiProduct(tuple((a, -e) for a, e in self.factors))

    def __truediv__(self, other: "XiProduct") -> "XiProduct":
        return self * other.inverse()

    def canonicalize(self) -> "XiProduct":
        """Map every argument to its functional-equation representative and
        re-merge; idempotent and value-preserving."""
        return XiProduct.from_pairs((a.canonical(), e) for a, e in self.factors)

    def order_at(self, s0: Optional[Fraction]) -> int:
        """Net vanishing order at s0 (None = generic s): a denominator pole of
        xi counts as a zero of the product."""
        total = 0
        for arg, exp in self.factors:
            v = arg.value_at(s0)
            if v is not None:
                total += exp * xi_order_at(v)
        return total

    def substitute(self, s0) -> "XiProduct":
        s0 = _frac(s0)
        return XiProduct.from_pairs((AffineArg.const(a.value_at(s0)), e) for a, e in self.factors)

    def numerator(self) -> tuple[tuple[AffineArg, int], ...]:
        return tuple((a, e) for a, e in self.factors if e > 0)

    def denominator(self) -> tuple[tuple[AffineArg, int], ...]:
        return tuple((a, -e) for a, e in self.factors if e < 0)

    def render(self, latex: bool = False) -> str:
        if self.is_one:
            return "1"
        sym = "\\xi" if latex else "ξ"

        def fac(arg: AffineArg, exp: int) -> str:
            base = f"{sym}({arg.render(latex)})"
            if exp == 1:
                return base
            return f"{base}^{{{exp}}}" if latex else f"{base}^{exp}"

        num = [fac(a, e) for a, e in self.numerator()]
        den = [fac(a, e) for a, e in self.denominator()]
        if latex:
            if den:
                return f"\\frac{{{''.join(num) or '1'}}}{{{''.join(den)}}}"
            return "".join(num)
        top = "".join(num) or "1"
        if not den:
            return top
        bottom = "".join(den)
        return f"{top}/({bottom})" if len(den) > 1 or self.denominator()[0][1] > 1 else f"{top}/{bottom}"

    def __str__(self) -> str:
        return self.render()


def canonicalize(p: XiProduct) -> XiProduct:
    """Module-level alias for XiProduct.canonicalize."""
    return p.canonicalize()


def _a2_parameter_orbit(p: AffineArg, q: AffineArg) -> list[tuple[AffineArg, AffineArg]]:
    """Weyl orbit of an SL3 parameter pair.

    The six images of (p, q) under the SL3 Weyl action on the weight
    2p*L1 + 2q*L2 - rho; charge slots are untouched by the action.
    """
    s12 = p.plus(q).shifted(-HALF)  # p + q - 1/2
    refl_p = AffineArg(-p.a, 1 - p.b)
    refl_q = AffineArg(-q.a, 1 - q.b)
    compl_ = AffineArg(-(p.a + q.a), Fraction(3, 2) - (p.b + q.b))  # 3/2 - p - q
    return [
        (p, q),
        (refl_p, s12),
        (s12, refl_q),
        (compl_, p),
        (q, compl_),
        (refl_q, refl_p),
    ]


def _a2_prefactor(p: AffineArg, q: AffineArg) -> XiProduct:
    """xi(2p) xi(2q) xi(2p+2q-1): the completed normalizer of the generic
    SL3 Whittaker coefficient."""
    return XiProduct.from_pairs(
        [(p.scaled(2), 1), (q.scaled(2), 1), (p.plus(q).scaled(2).shifted(-1), 1)]
    )


@dataclass(frozen=True)
class BFactor:
    """One building block attached to a connected support component.

    nodes: the component's support nodes in increasing Bourbaki order;
    slots: the charge labels bound to those nodes; params: the SL2/SL3
    spectral parameters in the same node order.
    """

    nodes: tuple[int, ...]
    slots: tuple[str, ...]
    params: tuple[AffineArg, ...]

    def __post_init__(self):
        if len(self.nodes) not in (1, 2):
            raise ValueError("building blocks are A1 or A2 only")
        if not (len(self.nodes) == len(self.slots) == len(self.params)):
            raise ValueError("nodes/slots/params length mismatch")
        if len(self.nodes) == 2 and not self.nodes[0] < self.nodes[1]:
            raise ValueError("A2 nodes must be in increasing Bourbaki order")

    @property
    def kind(self) -> str:
        return "A1" if len(self.nodes) == 1 else "A2"

    def prefactor_args(self) -> tuple[AffineArg, ...]:
        """Arguments of the xi factors in the block's completed denominator."""
        if self.kind == "A1":
            return (self.params[0].scaled(2),)
        p, q = self.params
        return (p.scaled(2), q.scaled(2), p.plus(q).scaled(2).shifted(-1))

    def order_at(self, s0: Optional[Fraction]) -> int:
        """Each prefactor argument landing on a xi pole is a simple zero."""
        return sum(1 for arg in self.prefactor_args() if arg.value_at(s0) in (0, 1))

    @property
    def is_identically_zero(self) -> bool:
        """Constant prefactor pole: the block does not represent a generic
        quasi-character and vanishes for every s."""
        return any(arg.is_constant and arg.b in (0, 1) for arg in self.prefactor_args())

    def substitute(self, s0) -> "BFactor":
        s0 = _frac(s0)
        return BFactor(self.nodes, self.slots, tuple(AffineArg.const(p.value_at(s0)) for p in self.params))

    def canonical(self) -> tuple["BFactor", XiProduct]:
        """Canonical parameter choice plus the xi conversion factor.

        Returns (block', conv) with  block = conv * block'  as functions,
        so a term replaces (xi, block) by (xi * conv, block').
        """
        if self.kind == "A1":
            p = self.params[0]
            if p.is_canonical:
                return self, XiProduct.one()
            q = p.canonical()
            conv = XiProduct.single(q.scaled(2)) / XiProduct.single(p.scaled(2))
            return BFactor(self.nodes, self.slots, (q,)), conv.canonicalize()
        p, q = self.params
        orbit = _a2_parameter_orbit(p, q)
        key = lambda pair: (
            sum(0 if x.is_canonical else 1 for x in pair),
            (pair[0].a, pair[0].b, pair[1].a, pair[1].b),
        )
        best = min(orbit, key=key)
        if best == (p, q):
            return self, XiProduct.one()
        conv = _a2_prefactor(*best) / _a2_prefactor(p, q)
        return BFactor(self.nodes, self.slots, best), conv.canonicalize()

    def render(self, latex: bool = False) -> str:
        slots = ",".join(self.slots)
        args = ", ".join(p.render(latex) for p in self.params)
        if latex:
            return f"B_{{{slots}}}({args})"
        return f"B_{slots}({args})"

    def __str__(self) -> str:
        return self.render()


CosetId = tuple


@dataclass(frozen=True)
class TermExpr:
    """One summand of a coefficient: originating coset, xi product, blocks."""

    coset_id: CosetId
    xi: XiProduct
    bfactors: tuple[BFactor, ...]

    def order_at(self, s0: Optional[Fraction]) -> int:
        return self.xi.order_at(s0) + sum(b.order_at(s0) for b in self.bfactors)

    def canonical(self) -> "TermExpr":
        xi = self.xi
        blocks = []
        for b in self.bfactors:
            nb, conv = b.canonical()
            blocks.append(nb)
            xi = xi * conv
        blocks.sort(key=lambda b: b.nodes)
        return TermExpr(self.coset_id, xi.canonicalize(), tuple(blocks))

    def substitute(self, s0) -> "TermExpr":
        return TermExpr(
            self.coset_id,
            self.xi.substitute(s0).canonicalize(),
            tuple(b.substitute(s0) for b in self.bfactors),
        )

    def content_key(self):
        """Comparison/sort key ignoring the coset id (use on canonical terms)."""
        bkey = tuple((b.nodes, b.slots, tuple((p.a, p.b) for p in b.params)) for b in self.bfactors)
        xkey = tuple((a.a, a.b, e) for a, e in self.xi.factors)
        return (bkey, xkey)

    def render(self, latex: bool = False) -> str:
        parts = []
        if not self.xi.is_one or not self.bfactors:
            parts.append(self.xi.render(latex))
        parts.extend(b.render(latex) for b in self.bfactors)
        sep = " " if latex else " · "
        return sep.join(parts)

    def __str__(self) -> str:
        return self.render()


class PoleReport:
    """First-class evaluation outcome: some surviving term has a pole."""

    def __init__(self, s0, offenders: list[tuple[CosetId, int]]):
        self.s0 = s0
        self.offenders = offenders

    def __repr__(self):
        locs = ", ".join(f"{cid} (order {o})" for cid, o in self.offenders)
        return f"PoleReport(s={self.s0}: {locs})"


@dataclass(frozen=True)
class CoeffExpr:
    """A degenerate Whittaker coefficient: sum of per-coset terms."""

    terms: tuple[TermExpr, ...]

    def __post_init__(self):
        ids = [t.coset_id for t in self.terms]
        if len(set(ids)) != len(ids):
            raise ValueError("terms must carry distinct coset ids")

    def canonical(self) -> "CoeffExpr":
        terms = sorted((t.canonical() for t in self.terms), key=lambda t: t.content_key())
        return CoeffExpr(tuple(terms))

    def content_multiset(self):
        return sorted(t.content_key() for t in self.canonical().terms)

    def render(self, latex: bool = False, grouped: bool = True) -> str:
        if not self.terms:
            return "0"
        if grouped:
            parts = [_render_group(g, latex) for g in grouped_terms(self)]
        else:
            parts = [t.render(latex) for t in self.canonical().terms]
        sep = " + "
        return sep.join(parts)

    def __str__(self) -> str:
        return self.render()


def same_coefficient(c1: CoeffExpr, c2: CoeffExpr) -> bool:
    """Symbolic equality after canonicalization, coset ids ignored."""
    return c1.content_multiset() == c2.content_multiset()


def term_order_at(t: TermExpr, s0) -> int:
    """Net order of vanishing of a term at rational s0 (negative = pole)."""
    return t.order_at(_frac(s0))


def evaluate_symbolic(c: CoeffExpr, s0=None) -> Union[CoeffExpr, PoleReport]:
    """Drop identically/locally vanishing terms at s0 (None = generic s).

    Surviving terms are returned with s substituted (when s0 is given);
    a pole among survivors yields a PoleReport instead of an expression.
    """
    s0 = None if s0 is None else _frac(s0)
    survivors = []
    offenders = []
    for t in c.terms:
        o = t.order_at(s0)
        if o > 0:
            continue
        if o < 0:
            offenders.append((t.coset_id, o))
        else:
            survivors.append(t if s0 is None else t.substitute(s0))
    if offenders:
        return PoleReport(s0, offenders)
    return CoeffExpr(tuple(survivors))


def grouped_terms(c: CoeffExpr) -> list[tuple[tuple[BFactor, ...], list[XiProduct]]]:
    """Display grouping: terms sharing blocks and xi denominator are one
    summand whose numerators add (the paper's printed shape)."""
    canon = c.canonical()
    groups: dict = {}
    for t in canon.terms:
        bkey = tuple((b.nodes, b.slots, tuple((p.a, p.b) for p in b.params)) for b in t.bfactors)
        dkey = t.xi.denominator()
        groups.setdefault((bkey, dkey), (t.bfactors, []))[1].append(t.xi)
    out = []
    for (bkey, dkey), (bfs, xis) in sorted(groups.items(), key=lambda kv: (kv[0][0], kv[0][1], min(x.factors for x in kv[1][1]))):
        out.append((bfs, sorted(xis, key=lambda x: x.factors)))
    return out


def _render_group(group, latex: bool) -> str:
    bfs, xis = group
    if len(xis) == 1:
        xi_str = xis[0].render(latex)
    else:
        seps = " + "
        if latex:
            num = seps.join(XiProduct(x.numerator()).render(True) for x in xis)
            den_prod = "".join(
                f"\\xi({a.render(True)})" + (f"^{{{e}}}" if e != 1 else "") for a, e in xis[0].denominator()
            )
            xi_str = f"\\frac{{{num}}}{{{den_prod}}}" if xis[0].denominator() else f"({num})"
        else:
            num = seps.join(XiProduct(x.numerator()).render(False) for x in xis)
            den = "".join(
                f"ξ({a.render(False)})" + (f"^{e}" if e != 1 else "") for a, e in xis[0].denominator()
            )
            xi_str = f"({num})/({den})" if den else f"({num})"
    parts = [b.render(latex) for b in bfs]
    if xi_str != "1" or not parts:
        parts.insert(0, xi_str)
    sep = " " if latex else " · "
    return sep.join(parts)


def coeff_to_json(c: CoeffExpr) -> dict:
    """Canonical JSON rendering (schema-stable, exact rationals as strings)."""

    def frac_s(q: Fraction) -> str:
        return str(q)

    def arg_j(a: AffineArg) -> dict:
        return {"slope": frac_s(a.a), "intercept": frac_s(a.b), "text": a.render()}

    canon = c.canonical()
    return {
        "terms": [
            {
                "coset_id": list(map(_jsonable, t.coset_id)),
                "xi": [{"arg": arg_j(a), "exp": e} for a, e in t.xi.factors],
                "bfactors": [
                    {
                        "kind": b.kind,
                        "nodes": list(b.nodes),
                        "slots": list(b.slots),
                        "params": [arg_j(p) for p in b.params],
                    }
                    for b in t.bfactors
                ],
                "text": t.render(),
            }
            for t in canon.terms
        ],
        "text": canon.render(),
    }


def _jsonable(x):
    if isinstance(x, tuple):
        return list(map(_jsonable, x))
    return x
