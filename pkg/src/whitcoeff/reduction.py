"""Reduction of a degenerate Whittaker coefficient of a spherical
Eisenstein series to a finite sum over Weyl cosets.

For a weight lam and a character supported on the simple-root set Pi',
the coefficient at the identity is a sum over minimal-length coset
representatives w of W/W(Pi') of

    M(w^{-1}, lam) * (product of SL2/SL3 building blocks on Pi'),

where M is the completed-zeta intertwiner over the inversion set of
w^{-1} and each support node alpha carries the spectral parameter
(<w^{-1} lam | alpha> + 1)/2.

Terms that are identically zero in s are dropped: either a building
block has a constant parameter at a zero of its completed prefactor
(the restricted weight is not a generic quasi-character there), or the
intertwiner's constant-argument xi ledger has positive net order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .rootsys import AffineWeight, RootSystem, RootSystemError, classify_subdiagram, eisenstein_weight
from .symzeta import (
    AffineArg,
    BFactor,
    CoeffExpr,
    PoleReport,
    TermExpr,
    XiProduct,
    evaluate_symbolic,
)
from .weyl import (
    CosetTable,
    InfeasibleEnumeration,
    WeylElement,
    coset_reps_exhaustive,
    coset_reps_levi_pruned,
    reflect_weight_coords,
    weyl_group_order,
)

EXHAUSTIVE_FAST_LIMIT = 60_000  # |W| above this needs slow=True


class ReductionError(ValueError):
    pass


class SupportError(ReductionError):
    """Character support outside the A1/A2 building-block vocabulary."""


@dataclass(frozen=True)
class CharacterSupport:
    """Nonzero charges on simple-root nodes; slots stay symbolic until
    numeric evaluation binds them."""

    charges: tuple[tuple[int, str], ...]

    @staticmethod
    def of(charges: Mapping[int, Union[str, int, Fraction]]) -> "CharacterSupport":
        if not charges:
            raise SupportError("character support must be nonempty")
        items = []
        for node, slot in sorted(charges.items()):
            if isinstance(slot, str):
                if not slot:
                    raise SupportError("empty charge slot label")
            else:
                if Fraction(slot) == 0:
                    raise SupportError(f"charge at node {node} must be nonzero")
                slot = str(slot)
            items.append((int(node), slot))
        return CharacterSupport(tuple(items))

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.charges)

    def slot(self, node: int) -> str:
        return dict(self.charges)[node]

    def components(self, rs: RootSystem) -> list[tuple[int, ...]]:
        """Connected components of the support subdiagram; each must be A1
        or A2."""
        comps = classify_subdiagram(rs, self.nodes)
        out = []
        for series, rank, nodes in comps:
            if series != "A" or rank > 2:
                raise SupportError(
                    f"support component {nodes} has type {series}{rank}; "
                    "only A1 and A2 building blocks are available"
                )
            out.append(nodes)
        return out


@dataclass(frozen=True)
class EisensteinSpec:
    """A spherical Eisenstein series datum: group plus affine weight."""

    rs: RootSystem
    lam: AffineWeight
    inducing_node: Optional[int]

    @staticmethod
    def degenerate(rs: RootSystem, node: int) -> "EisensteinSpec":
        """The maximal-parabolic weight 2s*Lambda_node - rho."""
        return EisensteinSpec(rs, eisenstein_weight(rs, node), node)

    @staticmethod
    def from_affine(rs: RootSystem, lam: AffineWeight) -> "EisensteinSpec":
        if lam.rank != rs.rank:
            raise RootSystemError("weight rank mismatch")
        return EisensteinSpec(rs, lam, _detect_inducing_node(rs, lam))

    @property
    def prunable_node(self) -> Optional[int]:
        """Node i* allowing Levi pruning: all other coordinates must be the
        constant -1 and the i* coordinate non-constant."""
        return _detect_prunable_node(self.rs, self.lam)


def _detect_prunable_node(rs: RootSystem, lam: AffineWeight) -> Optional[int]:
    candidates = [i for i in rs.nodes() if lam.slopes[i - 1] != 0]
    if len(candidates) != 1:
        return None
    node = candidates[0]
    for j in rs.nodes():
        if j != node and lam.intercepts[j - 1] != -1:
            return None
    return node


def _detect_inducing_node(rs: RootSystem, lam: AffineWeight) -> Optional[int]:
    node = _detect_prunable_node(rs, lam)
    if node is None:
        return None
    if lam.slopes[node - 1] == 2 and lam.intercepts[node - 1] == -1:
        return node
    return None


@dataclass(frozen=True)
class EulerianityVerdict:
    """Classification of a coefficient after symbolic evaluation."""

    kind: str  # "eulerian" | "zero" | "non_eulerian" | "pole"
    surviving: int
    term: Optional[TermExpr] = None
    pole: Optional[PoleReport] = None

    def __str__(self) -> str:
        if self.kind == "eulerian":
            return "Eulerian (single term)"
        if self.kind == "zero":
            return "Zero (no surviving terms)"
        if self.kind == "non_eulerian":
            return f"NonEulerian ({self.surviving} terms)"
        return f"Pole: {self.pole}"


def _demote(coords) -> tuple:
    """Use plain ints when exact (they are, for 2s*L_i - rho); Fraction
    arithmetic is an order of magnitude slower in the fold loop."""
    if all(c.denominator == 1 for c in coords):
        return tuple(c.numerator for c in coords)
    return coords


def _fold_word(rs: RootSystem, word: Iterable[int], lam: AffineWeight, stop_on_dead: bool = False):
    """One pass over a reduced word w: yields the pairings <beta|lam> over
    the inversion set of w^{-1} and returns w^{-1} lam.

    With stop_on_dead (sound only when no constant pairing can be a xi
    pole, e.g. for the degenerate weights), returns (None, None) as soon
    as a constant pairing -1 appears: that factor is xi(-1)/xi(0) = 0 and
    nothing later can cancel it.
    """
    slopes = _demote(lam.slopes)
    inters = _demote(lam.intercepts)
    args = []
    for i in word:
        a, b = slopes[i - 1], inters[i - 1]
        if stop_on_dead and a == 0 and b == -1:
            return None, None
        args.append(AffineArg(a, b))
        slopes = reflect_weight_coords(rs, slopes, i)
        inters = reflect_weight_coords(rs, inters, i)
    return args, AffineWeight(slopes, inters)


def intertwiner(rs: RootSystem, w: WeylElement, lam: AffineWeight) -> XiProduct:
    """M(w^{-1}, lam) = prod over {alpha>0 : w^{-1} alpha<0} of
    xi(<alpha|lam>)/xi(<alpha|lam>+1), canonicalized."""
    args, _ = _fold_word(rs, w.word, lam)
    pairs = []
    for arg in args:
        pairs.append((arg, 1))
        pairs.append((arg.shifted(1), -1))
    return XiProduct.from_pairs(pairs).canonicalize()


def restricted_parameters(
    rs: RootSystem, w: WeylElement, lam: AffineWeight, support: Iterable[int]
) -> dict[int, AffineArg]:
    """SL2 parameter (<w^{-1} lam|alpha>+1)/2 of the restricted
    quasi-character at each support node."""
    _, mu = _fold_word(rs, w.word, lam)
    out = {}
    for node in support:
        a, b = mu.coord(node)
        out[node] = AffineArg(a / 2, (b + 1) / 2)
    return out


def _build_term(rs, word, lam, support: CharacterSupport, components, fast_drop: bool) -> Optional[TermExpr]:
    args, mu = _fold_word(rs, word, lam, stop_on_dead=fast_drop)
    if args is None:
        return None
    pairs = []
    for arg in args:
        pairs.append((arg, 1))
        pairs.append((arg.shifted(1), -1))
    xi = XiProduct.from_pairs(pairs).canonicalize()

    bfactors = []
    for nodes in components:
        params = []
        for node in nodes:
            a, b = mu.coord(node)
            params.append(AffineArg(a / 2, (b + 1) / 2))
        slots = tuple(support.slot(n) for n in nodes)
        bf = BFactor(nodes, slots, tuple(params))
        if bf.is_identically_zero:
            return None
        bfactors.append(bf)

    term = TermExpr(tuple(word), xi, tuple(bfactors))
    if term.order_at(None) > 0:
        return None
    return term


def resolve_coset_table(
    spec: EisensteinSpec,
    support_nodes: tuple[int, ...],
    strategy: str = "auto",
    slow: bool = False,
    table: Optional[CosetTable] = None,
) -> CosetTable:
    """Pick/construct the coset table for a reduction run.

    strategy: "auto" (pruned when the weight allows it), "levi_pruned",
    or "exhaustive".  Exhaustive on groups with |W| above the fast limit
    needs slow=True; E8 exhaustive is always refused.
    """
    rs = spec.rs
    if table is not None:
        return table
    if strategy == "auto":
        strategy = "levi_pruned" if spec.prunable_node is not None else "exhaustive"
    if strategy == "levi_pruned":
        node = spec.prunable_node
        if node is None:
            raise ReductionError(
                "Levi-pruned enumeration needs a weight of the degenerate form "
                "2s*Lambda_i - rho (all other coordinates constant -1)"
            )
        levi = tuple(i for i in rs.nodes() if i != node)
        return coset_reps_levi_pruned(rs, levi, support_nodes)
    if strategy == "exhaustive":
        order = weyl_group_order(rs.series, rs.rank)
        if order > EXHAUSTIVE_FAST_LIMIT and not slow:
            raise InfeasibleEnumeration(
                f"exhaustive enumeration over |W({rs.name})| = {order} is gated: "
                "pass slow=True (CLI: --slow), or use the levi_pruned strategy"
            )
        return coset_reps_exhaustive(rs, support_nodes)
    raise ReductionError(f"unknown strategy {strategy!r}")


def degenerate_whittaker(
    spec: EisensteinSpec,
    support: CharacterSupport,
    strategy: str = "auto",
    slow: bool = False,
    table: Optional[CosetTable] = None,
) -> CoeffExpr:
    """Assemble the symbolic coefficient: one term per coset that is not
    identically zero, in canonical order."""
    rs = spec.rs
    components = support.components(rs)
    tab = resolve_coset_table(spec, support.nodes, strategy, slow, table)
    fast_drop = spec.prunable_node is not None
    terms = []
    for word in tab.word_tuples():
        t = _build_term(rs, word, spec.lam, support, components, fast_drop)
        if t is not None:
            terms.append(t)
    return CoeffExpr(tuple(terms)).canonical()


def constant_term(spec: EisensteinSpec, table: Optional[CosetTable] = None) -> CoeffExpr:
    """Langlands constant term at the identity over the Levi-pruned cosets:
    intertwiner-only terms, no building blocks."""
    if spec.prunable_node is None:
        raise ReductionError("constant_term needs an inducing node (degenerate weight)")
    rs = spec.rs
    if table is None:
        levi = tuple(i for i in rs.nodes() if i != spec.prunable_node)
        table = coset_reps_levi_pruned(rs, levi, ())
    terms = []
    for word in table.word_tuples():
        args, _ = _fold_word(rs, word, spec.lam)
        pairs = []
        for arg in args:
            pairs.append((arg, 1))
            pairs.append((arg.shifted(1), -1))
        xi = XiProduct.from_pairs(pairs).canonicalize()
        term = TermExpr(tuple(word), xi, ())
        if term.order_at(None) > 0:
            continue
        terms.append(term)
    return CoeffExpr(tuple(terms)).canonical()


def eulerianity_report(c: CoeffExpr, s0=None) -> EulerianityVerdict:
    """Evaluate at s0 (None = generic) and classify by survivor count."""
    result = evaluate_symbolic(c, s0)
    if isinstance(result, PoleReport):
        return EulerianityVerdict("pole", 0, pole=result)
    n = len(result.terms)
    if n == 0:
        return EulerianityVerdict("zero", 0)
    if n == 1:
        return EulerianityVerdict("eulerian", 1, term=result.terms[0])
    return EulerianityVerdict("non_eulerian", n)
