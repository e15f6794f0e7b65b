"""Nilpotent-orbit catalog and exact Whittaker-pair linear algebra.

The catalog covers types A and D by partitions (dimensions from the
classical formulas, closure as dominance order, very-even splitting for
D) and types E6/E7/E8 by an embedded table of the small orbits.

The Lie-algebra side builds a Chevalley basis for any supported root
system with structure constants from a bimultiplicative sign cocycle on
the root lattice (eps(a,a) = -1 on roots), which gives exact integer
constants and the bracket rules
    [h, x_g] = <g|h> x_g,  [x_g, x_d] = eps(g,d) x_{g+d},
    [x_g, x_{-g}] = g^vee.
Everything downstream (gradings, stabilizers, the antisymmetric form
omega and its radical, dominance) is exact rational linear algebra.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import linalg
from .rootsys import Root, RootSystem, RootSystemError, build_root_system, pairing

Partition = tuple[int, ...]


class OrbitError(ValueError):
    pass


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class NilpotentOrbit:
    series: str
    rank: int
    partition: Optional[Partition]  # types A and D
    very_even_class: Optional[str]  # "I"/"II" for very even D partitions
    bala_carter: Optional[str]
    dim: int
    zero: bool
    minimal: bool
    next_to_minimal: bool

    @property
    def label(self) -> str:
        if self.partition is not None:
            base = "".join(str(p) for p in self.partition) if max(self.partition) < 10 else ",".join(map(str, self.partition))
            if self.very_even_class:
                base += f"^{self.very_even_class}"
            return base
        return self.bala_carter or "?"

    def to_json(self) -> dict:
        return {
            "group": f"{self.series}{self.rank}",
            "partition": list(self.partition) if self.partition else None,
            "very_even_class": self.very_even_class,
            "bala_carter": self.bala_carter,
            "dim": self.dim,
            "zero": self.zero,
            "minimal": self.minimal,
            "next_to_minimal": self.next_to_minimal,
        }


def _partitions(n: int, maxpart: Optional[int] = None) -> Iterable[Partition]:
    if n == 0:
        yield ()
        return
    maxpart = n if maxpart is None else min(maxpart, n)
    for first in range(maxpart, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def dual_partition(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def _dim_gl_orbit(p: Partition) -> int:
    n = sum(p)
    return n * n - sum(x * x for x in dual_partition(p))


def _dim_so_orbit(p: Partition) -> int:
    n = sum(p)
    odd = sum(1 for x in p if x % 2 == 1)
    twice = (n * n - n) // 2 - (sum(x * x for x in dual_partition(p)) - odd) // 2
    return twice


def dominance_leq(p: Partition, q: Partition) -> bool:
    """p <= q in dominance order (prefix sums), partitions of the same n."""
    if sum(p) != sum(q):
        raise OrbitError("dominance compares partitions of the same integer")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp > sq:
            return False
    return True


_E_TABLE = {
    # (rank) -> rows (bala_carter, dim, minimal, next_to_minimal); zero row added in code
    6: [("A1", 22, True, False), ("2A1", 32, False, True)],
    7: [("A1", 34, True, False), ("2A1", 52, False, True)],
    8: [("A1", 58, True, False), ("2A1", 92, False, True), ("3A1", 112, False, False), ("A2", 114, False, False)],
}


def orbit_catalog(series: str, rank: int) -> tuple[NilpotentOrbit, ...]:
    """All orbits for types A/D (by partitions); the small-orbit table for E.

    For E groups only the rows needed here are embedded: zero, minimal,
    next-to-minimal, plus for E8 the 3A1 and the A2 lying directly over it.
    """
    series = series.upper()
    if series == "A":
        if rank < 1:
            raise OrbitError("type A needs rank >= 1")
        n = rank + 1
        out = []
        for p in _partitions(n):
            dim = _dim_gl_orbit(p)
            zero = p == (1,) * n
            minimal = p == (2,) + (1,) * (n - 2)
            ntm = n >= 4 and p == (2, 2) + (1,) * (n - 4)
            bc = "0" if zero else ("A1" if minimal else ("2A1" if ntm else None))
            out.append(NilpotentOrbit("A", rank, p, None, bc, dim, zero, minimal, ntm))
        return tuple(sorted(out, key=lambda o: (o.dim, o.partition)))
    if series == "D":
        if rank < 4:
            raise OrbitError("type D needs rank >= 4")
        n = 2 * rank
        out = []
        for p in _partitions(n):
            counts = {v: p.count(v) for v in set(p)}
            if any(v % 2 == 0 and c % 2 == 1 for v, c in counts.items()):
                continue
            dim = _dim_so_orbit(p)
            zero = p == (1,) * n
            minimal = p == (2, 2) + (1,) * (n - 4)
            prime = p == (3,) + (1,) * (n - 3)
            dblprime = p == (2, 2, 2, 2) + (1,) * (n - 8)
            bc = None
            if zero:
                bc = "0"
            elif minimal:
                bc = "A1"
            elif prime:
                bc = "(2A1)'"
            elif dblprime:
                bc = "(2A1)''"
            very_even = all(v % 2 == 0 for v in p)
            if very_even:
                for cls in ("I", "II"):
                    out.append(NilpotentOrbit("D", rank, p, cls, bc, dim, zero, minimal, prime or dblprime))
            else:
                out.append(NilpotentOrbit("D", rank, p, None, bc, dim, zero, minimal, prime or dblprime))
        return tuple(sorted(out, key=lambda o: (o.dim, o.partition, o.very_even_class or "")))
    if series == "E":
        if rank not in _E_TABLE:
            raise OrbitError("type E needs rank 6, 7 or 8")
        rows = [NilpotentOrbit("E", rank, None, None, "0", 0, True, False, False)]
        for bc, dim, mn, ntm in _E_TABLE[rank]:
            rows.append(NilpotentOrbit("E", rank, None, None, bc, dim, False, mn, ntm))
        return tuple(rows)
    raise OrbitError(f"unsupported series {series!r}")


def closure_leq(o1: NilpotentOrbit, o2: NilpotentOrbit) -> bool:
    """Whether the closure of o2 contains o1.

    A/D: dominance order on partitions, with equal very-even partitions of
    different class incomparable.  E: the embedded chain by dimension.
    """
    if (o1.series, o1.rank) != (o2.series, o2.rank):
        raise OrbitError("orbits from different groups")
    if o1.partition is not None:
        if o1.partition == o2.partition:
            return o1.very_even_class == o2.very_even_class
        return dominance_leq(o1.partition, o2.partition)
    return o1.dim <= o2.dim


def closure_covers(catalog: Sequence[NilpotentOrbit], o: NilpotentOrbit) -> list[NilpotentOrbit]:
    """Orbits covered by o in the closure order (Hasse neighbours below)."""
    below = [p for p in catalog if p != o and closure_leq(p, o)]
    return [p for p in below if not any(closure_leq(p, q) and closure_leq(q, o) and q != p and q != o for q in below)]


def find_orbit(
    catalog: Sequence[NilpotentOrbit],
    partition: Optional[Sequence[int]] = None,
    bala_carter: Optional[str] = None,
    very_even_class: Optional[str] = None,
) -> NilpotentOrbit:
    matches = [
        o
        for o in catalog
        if (partition is None or o.partition == tuple(sorted(partition, reverse=True)))
        and (bala_carter is None or o.bala_carter == bala_carter)
        and (very_even_class is None or o.very_even_class == very_even_class)
    ]
    if not matches:
        raise OrbitError("no orbit matches the query")
    if len(matches) > 1:
        raise OrbitError(f"ambiguous orbit query ({len(matches)} matches); add the very-even class")
    return matches[0]


# ---------------------------------------------------------------------------
# Chevalley algebra

Vector = list[Fraction]


class ChevalleyAlgebra:
    """Exact Chevalley-basis Lie algebra over Q for a simply-laced type.

    Basis order: Cartan coroots h_1..h_r, then x_gamma over positive roots
    followed by negative roots (in the root system's positive-root order).
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.roots: list[Root] = list(rs.positive_roots) + [tuple(-c for c in r) for r in rs.positive_roots]
        self.dim = rs.rank + len(self.roots)
        self._index = {r: i for i, r in enumerate(self.roots)}
        self._rootset = set(self.roots)
        self._npos = len(rs.positive_roots)
        n = rs.rank
        # upper-triangular exponent matrix of the sign cocycle
        self._emat = [[0] * n for _ in range(n)]
        for i in range(n):
            self._emat[i][i] = 1
            for j in range(i + 1, n):
                if rs.cartan_matrix[i][j] != 0:
                    self._emat[i][j] = 1

    # -- basis bookkeeping

    def zero(self) -> Vector:
        return [Fraction(0)] * self.dim

    def basis_label(self, k: int) -> str:
        if k < self.rs.rank:
            return f"h{k + 1}"
        return f"x[{','.join(map(str, self.roots[k - self.rs.rank]))}]"

    def root_index(self, gamma: Root) -> int:
        return self.rs.rank + self._index[tuple(gamma)]

    def cartan_vector(self, coro: Sequence) -> Vector:
        """Element sum_i c_i h_i of the Cartan from coroot-basis coords."""
        v = self.zero()
        for i, c in enumerate(coro):
            v[i] = Fraction(c)
        return v

    def root_vector(self, gamma: Root, coeff=1) -> Vector:
        v = self.zero()
        v[self.root_index(gamma)] = Fraction(coeff)
        return v

    def eps(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Bimultiplicative sign cocycle (-1)^(a . E . b) on the root lattice."""
        n = self.rs.rank
        total = 0
        for i in range(n):
            ai = a[i]
            if ai == 0:
                continue
            row = self._emat[i]
            total += ai * sum(row[j] * b[j] for j in range(n))
        return -1 if total % 2 else 1

    def structure_sign(self, g: Root, d: Root, tot: Root) -> int:
        """N(g,d) for [x_g, x_d] = N x_{g+d}: the cocycle sign twisted by
        root positivities, which restores [x_g, x_{-g}] = g^vee and Jacobi
        (and gives the Chevalley property N(-g,-d) = -N(g,d))."""
        sgn = self.eps(g, d)
        for r in (g, d, tot):
            if self._index[r] >= self._npos:
                sgn = -sgn
        return sgn

    def root_eigenvalue(self, gamma: Root, s_values: Sequence[Fraction]) -> Fraction:
        """gamma(S) for a Cartan S given by its simple-root values."""
        return sum((Fraction(c) * Fraction(v) for c, v in zip(gamma, s_values)), Fraction(0))

    # -- bracket

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = self.zero()
        r = self.rs.rank
        xs = [(k, c) for k, c in enumerate(x) if c != 0]
        ys = [(k, c) for k, c in enumerate(y) if c != 0]
        C = self.rs.cartan_matrix
        for kx, cx in xs:
            for ky, cy in ys:
                c = cx * cy
                if kx < r and ky < r:
                    continue
                if kx < r:  # [h_i, x_gamma]
                    gamma = self.roots[ky - r]
                    val = sum(C[kx][j] * gamma[j] for j in range(r))
                    if val:
                        out[ky] += c * val
                elif ky < r:
                    gamma = self.roots[kx - r]
                    val = sum(C[ky][j] * gamma[j] for j in range(r))
                    if val:
                        out[kx] -= c * val
                else:
                    g = self.roots[kx - r]
                    d = self.roots[ky - r]
                    tot = tuple(a + b for a, b in zip(g, d))
                    if all(t == 0 for t in tot):
                        for i in range(r):
                            if g[i]:
                                out[i] += c * g[i]
                    elif tot in self._rootset:
                        out[self.root_index(tot)] += c * self.structure_sign(g, d, tot)
        return out

    def ad_matrix_columns(self, x: Vector, domain: Sequence[Vector]) -> list[Vector]:
        return [self.bracket(x, v) for v in domain]


# ---------------------------------------------------------------------------
# Whittaker pairs

ChargeLike = Union[int, Fraction, str]


@dataclass(frozen=True)
class WhittakerPair:
    """A rational Cartan element S (by its simple-root values) and the
    nilpotent functional phi given by f_phi = sum of charge * x_root."""

    alg: ChevalleyAlgebra
    s_values: tuple[Fraction, ...]
    f_terms: tuple[tuple[Root, Fraction], ...]

    def __post_init__(self):
        rs = self.alg.rs
        if len(self.s_values) != rs.rank:
            raise OrbitError("S needs one value per simple root")
        for gamma, charge in self.f_terms:
            if tuple(gamma) not in self.alg._rootset:
                raise OrbitError(f"{gamma} is not a root of {rs.name}")
            if charge == 0:
                raise OrbitError("zero charge in f_phi")
            if self.alg.root_eigenvalue(gamma, self.s_values) != -2:
                raise OrbitError(f"not a Whittaker pair: root {gamma} has S-eigenvalue != -2")

    def f_vector(self) -> Vector:
        v = self.alg.zero()
        for gamma, charge in self.f_terms:
            v[self.alg.root_index(gamma)] += charge
        return v

    def phi(self, x: Vector) -> Fraction:
        """phi(x) = <f_phi, x> under the invariant form with <x_g, x_-g> = 1."""
        total = Fraction(0)
        for gamma, charge in self.f_terms:
            neg = tuple(-c for c in gamma)
            total += charge * x[self.alg.root_index(neg)]
        return total


@dataclass(frozen=True)
class GradedSubspace:
    """ad(S)-eigenspace decomposition: eigenvalue -> basis indices."""

    alg: ChevalleyAlgebra
    layers: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def dims(self) -> dict[Fraction, int]:
        return {ev: len(ix) for ev, ix in self.layers}

    def indices(self, predicate) -> list[int]:
        out = []
        for ev, ix in self.layers:
            if predicate(ev):
                out.extend(ix)
        return sorted(out)

    def dim_at(self, ev) -> int:
        ev = Fraction(ev)
        for e, ix in self.layers:
            if e == ev:
                return len(ix)
        return 0


def grade_by(alg: ChevalleyAlgebra, s_values: Sequence) -> GradedSubspace:
    """Eigenspaces of ad(S): the Cartan at 0, each root vector at gamma(S)."""
    s_values = tuple(Fraction(v) for v in s_values)
    layers: dict[Fraction, list[int]] = {}
    for i in range(alg.rs.rank):
        layers.setdefault(Fraction(0), []).append(i)
    for k, gamma in enumerate(alg.roots):
        ev = alg.root_eigenvalue(gamma, s_values)
        layers.setdefault(ev, []).append(alg.rs.rank + k)
    total = sum(len(v) for v in layers.values())
    assert total == alg.dim
    items = tuple(sorted((ev, tuple(ix)) for ev, ix in layers.items()))
    return GradedSubspace(alg, items)


def _rows_from_indices(alg: ChevalleyAlgebra, indices: Iterable[int]) -> list[Vector]:
    rows = []
    for k in indices:
        v = alg.zero()
        v[k] = Fraction(1)
        rows.append(v)
    return rows


def n_S_phi(alg: ChevalleyAlgebra, pair: WhittakerPair) -> list[Vector]:
    """Basis of n_{S,phi} = g^S_{>1} + (g^S_1 meet stab(phi)).

    The coadjoint stabilizer of phi is the centralizer of f_phi (the
    invariant form is invariant), so the eigenvalue-1 piece is the kernel
    of ad(f_phi) restricted there.
    """
    grading = grade_by(alg, pair.s_values)
    above = grading.indices(lambda ev: ev > 1)
    rows = _rows_from_indices(alg, above)
    ones = grading.indices(lambda ev: ev == 1)
    if ones:
        f = pair.f_vector()
        cols = [alg.bracket(f, row) for row in _rows_from_indices(alg, ones)]
        system = [[cols[j][i] for j in range(len(ones))] for i in range(alg.dim)]
        for combo in linalg.nullspace(system, len(ones)):
            v = alg.zero()
            for j, c in enumerate(combo):
                if c != 0:
                    v[ones[j]] = c
            rows.append(v)
    return rows


def u_S_indices(alg: ChevalleyAlgebra, pair: WhittakerPair) -> list[int]:
    return grade_by(alg, pair.s_values).indices(lambda ev: ev >= 1)


def omega_radical(alg: ChevalleyAlgebra, pair: WhittakerPair) -> list[Vector]:
    """Radical of the antisymmetric form omega(x,y) = phi([x,y]) on g^S_{>=1}."""
    idx = u_S_indices(alg, pair)
    base = _rows_from_indices(alg, idx)
    brackets = [[alg.bracket(base[i], base[j]) for j in range(len(idx))] for i in range(len(idx))]
    gram = [[pair.phi(brackets[i][j]) for j in range(len(idx))] for i in range(len(idx))]
    rows = []
    for combo in linalg.nullspace(gram, len(idx)):
        v = alg.zero()
        for j, c in enumerate(combo):
            if c != 0:
                v[idx[j]] = c
        rows.append(v)
    return rows


def subspaces_equal(alg: ChevalleyAlgebra, a: list[Vector], b: list[Vector]) -> bool:
    return linalg.same_span(a, b, alg.dim)


def stabilizer_dimension(alg: ChevalleyAlgebra, pair: WhittakerPair) -> int:
    """dim of the centralizer of f_phi; orbit dim = dim g - this."""
    f = pair.f_vector()
    basis = _rows_from_indices(alg, range(alg.dim))
    cols = [alg.bracket(f, b) for b in basis]
    system = [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)]
    return len(linalg.nullspace(system, alg.dim))


def dominates(pair1: WhittakerPair, pair2: WhittakerPair) -> bool:
    """Whether (H,phi) = pair1 dominates (S,phi) = pair2:
    stab(phi) meet g^H_{>=1} lies in the nonnegative eigenspaces of S-H."""
    if pair1.alg is not pair2.alg or set(pair1.f_terms) != set(pair2.f_terms):
        raise OrbitError("dominance needs the same phi on the same algebra")
    alg = pair1.alg
    f = pair1.f_vector()
    basis = _rows_from_indices(alg, range(alg.dim))
    cols = [alg.bracket(f, b) for b in basis]
    system = [[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)]
    stab_rows = linalg.nullspace(system, alg.dim)

    h_ge1 = grade_by(alg, pair1.s_values).indices(lambda ev: ev >= 1)
    ge1_rows = _rows_from_indices(alg, h_ge1)
    meet = linalg.intersect(stab_rows, ge1_rows, alg.dim)

    diff = tuple(Fraction(s) - Fraction(h) for h, s in zip(pair1.s_values, pair2.s_values))
    for vec in meet:
        for k, c in enumerate(vec):
            if c == 0 or k < alg.rs.rank:
                continue  # Cartan has S-H eigenvalue 0
            gamma = alg.roots[k - alg.rs.rank]
            if alg.root_eigenvalue(gamma, diff) < 0:
                return False
    return True


def neutral_pair_for(alg: ChevalleyAlgebra, support: Mapping[int, ChargeLike]) -> WhittakerPair:
    """Neutral pair for charges on pairwise-orthogonal positive roots.

    support maps a 1-based simple-root node (or a root tuple) to a nonzero
    rational charge; h = sum of coroots, f = sum charge*x_{-root}, and the
    sl2 relations for (e, h, f) with e = sum charge^{-1} x_root are
    verified exactly.
    """
    rs = alg.rs
    roots: list[tuple[Root, Fraction]] = []
    for key, charge in sorted(support.items(), key=lambda kv: str(kv[0])):
        beta = _as_positive_root(rs, key)
        roots.append((beta, Fraction(charge)))
    for (b1, _), (b2, _) in itertools.combinations(roots, 2):
        if pairing(rs, b1, b2) != 0:
            raise OrbitError(f"support roots {b1} and {b2} are not orthogonal (general sl2 triples out of scope)")
    s_values = tuple(
        sum((Fraction(pairing(rs, rs.simple_root(j), beta)) for beta, _ in roots), Fraction(0))
        for j in rs.nodes()
    )
    f_terms = tuple((tuple(-c for c in beta), charge) for beta, charge in roots)
    pair = WhittakerPair(alg, s_values, f_terms)

    h = alg.cartan_vector([Fraction(0)] * rs.rank)
    for beta, _ in roots:
        for i, c in enumerate(beta):
            h[i] += c
    e = alg.zero()
    f = pair.f_vector()
    for beta, charge in roots:
        e[alg.root_index(beta)] += 1 / Fraction(charge)
    if alg.bracket(h, e) != [2 * c for c in e]:
        raise OrbitError("sl2 relation [h,e] = 2e failed")
    if alg.bracket(h, f) != [-2 * c for c in f]:
        raise OrbitError("sl2 relation [h,f] = -2f failed")
    if alg.bracket(e, f) != h:
        raise OrbitError("sl2 relation [e,f] = h failed")
    return pair


def _as_positive_root(rs: RootSystem, key) -> Root:
    if isinstance(key, int):
        if not 1 <= key <= rs.rank:
            raise RootSystemError(f"node {key} out of range for {rs.name}")
        return rs.simple_root(key)
    beta = tuple(key)
    if beta not in set(rs.positive_roots):
        raise OrbitError(f"{beta} is not a positive root of {rs.name}")
    return beta


def isotropic_dimension_check(alg: ChevalleyAlgebra, pair: WhittakerPair, orbit: NilpotentOrbit) -> bool:
    """Whether dim n_{S,phi} + dim(g^S_1)/2 equals half the orbit dimension
    (maximal isotropic = Fourier-Jacobi integration dimension)."""
    grading = grade_by(alg, pair.s_values)
    ones = grading.dim_at(1)
    if ones % 2:
        return False
    dim_i = len(n_S_phi(alg, pair)) + ones // 2
    return 2 * dim_i == orbit.dim


def build_algebra(series: str, rank: int) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(build_root_system(series, rank))
