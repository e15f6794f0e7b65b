"""Exact root-system data for the split simply-laced types A, D, E.

Bourbaki node numbering throughout: A_n is the chain 1-2-...-n; D_n is the
chain 1-...-(n-2) with both n-1 and n attached to n-2; E_n is the chain
1-3-4-...-n with node 2 attached to node 4.

Two coordinate systems are used and never mixed silently:

* roots live in the root-lattice basis (integer coordinates over the
  simple roots),
* weights live in the fundamental-weight basis (rational coordinates).

With the pairing normalized so that every root has squared length 2
(coroot = root), the pairing of a root with a weight is the plain dot
product of the two coordinate tuples, which is why the split is worth it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Root = tuple[int, ...]

_WEYL_ORDER_E = {6: 51840, 7: 2903040, 8: 696729600}
_POSROOT_COUNT_E = {6: 36, 7: 63, 8: 120}


class RootSystemError(ValueError):
    """Unsupported type/rank or malformed input to a root-system operation."""


@dataclass(frozen=True)
class WeightVector:
    """A weight in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.coords))

    def scale(self, c) -> "WeightVector":
        c = Fraction(c)
        return WeightVector(tuple(c * a for a in self.coords))


@dataclass(frozen=True)
class AffineWeight:
    """A weight whose fundamental coordinates are affine-linear in s.

    Stored as the pair (slopes, intercepts): coordinate i is
    slopes[i]*s + intercepts[i].
    """

    slopes: tuple[Fraction, ...]
    intercepts: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(Fraction(c) for c in self.slopes))
        object.__setattr__(self, "intercepts", tuple(Fraction(c) for c in self.intercepts))
        if len(self.slopes) != len(self.intercepts):
            raise RootSystemError("slope/intercept length mismatch")

    @property
    def rank(self) -> int:
        return len(self.slopes)

    def coord(self, node: int) -> tuple[Fraction, Fraction]:
        """(slope, intercept) of the coordinate at a 1-based node."""
        return self.slopes[node - 1], self.intercepts[node - 1]

    def at(self, s0) -> WeightVector:
        s0 = Fraction(s0)
        return WeightVector(tuple(a * s0 + b for a, b in zip(self.slopes, self.intercepts)))

    @staticmethod
    def constant(w: WeightVector) -> "AffineWeight":
        return AffineWeight((Fraction(0),) * len(w.coords), w.coords)


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    fundamental_weights: tuple[WeightVector, ...]
    weyl_vector: WeightVector

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def nodes(self) -> range:
        """1-based Bourbaki node numbers."""
        return range(1, self.rank + 1)

    def simple_root(self, node: int) -> Root:
        return self.simple_roots[node - 1]

    def fundamental_weight(self, node: int) -> WeightVector:
        return self.fundamental_weights[node - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return self.cartan_matrix[i - 1][j - 1] == -1

    def height(self, root: Root) -> int:
        return sum(root)

    def is_positive(self, root: Root) -> bool:
        return any(c > 0 for c in root) and all(c >= 0 for c in root)

    def root_to_weight_coords(self, root: Root) -> tuple[Fraction, ...]:
        """Fundamental coordinates of a root-basis vector (Cartan matrix column)."""
        C = self.cartan_matrix
        n = self.rank
        return tuple(Fraction(sum(root[i] * C[i][j] for i in range(n))) for j in range(n))

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "simple_roots": [list(r) for r in self.simple_roots],
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def _cartan_edges(series: str, rank: int) -> list[tuple[int, int]]:
    if series == "A":
        if rank < 1:
            raise RootSystemError("type A requires rank >= 1")
        return [(i, i + 1) for i in range(1, rank)]
    if series == "D":
        if rank < 4:
            raise RootSystemError("type D requires rank >= 4")
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((rank - 2, rank))
        return edges
    if series == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError("type E requires rank 6, 7 or 8")
        edges = [(1, 3)] + [(i, i + 1) for i in range(3, rank)]
        edges.append((2, 4))
        return edges
    raise RootSystemError(f"unsupported series {series!r} (simply-laced A/D/E only)")


def _generate_positive_roots(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Close the simple roots under simple reflections; keep the positive ones.

    Reflection of a root-basis vector: s_i(b) = b - <b|a_i> a_i, and
    <b|a_i> = (C b)_i, so only coordinate i changes.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * beta[j] for j in range(n))
                if c == 0:
                    continue
                refl = list(beta)
                refl[i] -= c
                refl_t = tuple(refl)
                if refl_t not in seen:
                    seen.add(refl_t)
                    nxt.append(refl_t)
        frontier = nxt
    positives = [r for r in seen if all(c >= 0 for c in r)]
    positives.sort(key=lambda r: (sum(r), r))
    return positives


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system of the given simply-laced type.

    Raises RootSystemError on anything outside A_n (n>=1), D_n (n>=4),
    E6/E7/E8.
    """
    series = series.upper()
    edges = _cartan_edges(series, int(rank))
    n = int(rank)
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    for i, j in edges:
        C[i - 1][j - 1] = -1
        C[j - 1][i - 1] = -1
    cartan = tuple(tuple(row) for row in C)
    simple = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    positives = tuple(_generate_positive_roots(cartan))

    expected = _positive_root_count(series, n)
    assert len(positives) == expected, f"{series}{n}: generated {len(positives)} positive roots, expected {expected}"

    fund = tuple(WeightVector(tuple(Fraction(1 if j == i else 0) for j in range(n))) for i in range(n))
    rho = WeightVector((Fraction(1),) * n)
    return RootSystem(series, n, cartan, simple, positives, fund, rho)


def _positive_root_count(series: str, rank: int) -> int:
    if series == "A":
        return rank * (rank + 1) // 2
    if series == "D":
        return rank * (rank - 1)
    return _POSROOT_COUNT_E[rank]


def weyl_group_order(series: str, rank: int) -> int:
    """|W| for a simply-laced simple type."""
    if series == "A":
        import math

        return math.factorial(rank + 1)
    if series == "D":
        import math

        return 2 ** (rank - 1) * math.factorial(rank)
    return _WEYL_ORDER_E[rank]


def classify_subdiagram(rs: RootSystem, nodes: Iterable[int]) -> list[tuple[str, int, tuple[int, ...]]]:
    """Split a node subset into connected components and name their types.

    Returns (series, rank, sorted component nodes) per component.  Induced
    subdiagrams of A/D/E diagrams are again of type A/D/E.
    """
    nodes = sorted(set(nodes))
    for v in nodes:
        if not 1 <= v <= rs.rank:
            raise RootSystemError(f"node {v} out of range for {rs.name}")
    remaining = set(nodes)
    components = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            v = frontier.pop()
            for u in remaining - comp:
                if rs.adjacent(v, u):
                    comp.add(u)
                    frontier.append(u)
        remaining -= comp
        components.append(_classify_component(rs, sorted(comp)))
    return components


def _classify_component(rs: RootSystem, comp: list[int]) -> tuple[str, int, tuple[int, ...]]:
    k = len(comp)
    deg = {v: sum(1 for u in comp if u != v and rs.adjacent(v, u)) for v in comp}
    branch = [v for v in comp if deg[v] == 3]
    if not branch:
        return ("A", k, tuple(comp))
    if len(branch) != 1 or max(deg.values()) > 3:
        raise RootSystemError(f"subdiagram on {comp} is not of type A/D/E")
    arms = []
    for u in comp:
        if u in branch or not rs.adjacent(branch[0], u):
            continue
        length = 1
        prev, cur = branch[0], u
        while True:
            nxt = [w for w in comp if w not in (prev, branch[0]) and rs.adjacent(cur, w)]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", k, tuple(comp))
    if arms == [1, 2, 2] or arms == [1, 2, 3] or arms == [1, 2, 4]:
        return ("E", k, tuple(comp))
    raise RootSystemError(f"subdiagram on {comp} is not of type A/D/E")


def subgroup_weyl_order(rs: RootSystem, nodes: Iterable[int]) -> int:
    """Order of the parabolic Weyl subgroup generated by a node subset."""
    order = 1
    for series, rank, _ in classify_subdiagram(rs, nodes):
        order *= weyl_group_order(series, rank)
    return order


PairLike = Union[WeightVector, Root, Sequence[int]]


def pairing(rs: RootSystem, v: PairLike, w: PairLike) -> Fraction:
    """Normalized symmetric pairing <v|w> with <root|root> = 2 on roots.

    Accepts roots (root-basis integer tuples) and WeightVectors in any
    combination; converts through the Cartan matrix as needed.
    """
    v_is_weight = isinstance(v, WeightVector)
    w_is_weight = isinstance(w, WeightVector)
    n = rs.rank
    if v_is_weight and w_is_weight:
        _check_len(rs, v.coords)
        _check_len(rs, w.coords)
        root_w = _weight_to_root_coords(rs, w.coords)
        return sum((a * b for a, b in zip(v.coords, root_w)), Fraction(0))
    if v_is_weight != w_is_weight:
        weight = v if v_is_weight else w
        root = tuple(w if v_is_weight else v)
        _check_len(rs, weight.coords)
        _check_len(rs, root)
        return sum((Fraction(a) * b for a, b in zip(root, weight.coords)), Fraction(0))
    rv, rw = tuple(v), tuple(w)
    _check_len(rs, rv)
    _check_len(rs, rw)
    C = rs.cartan_matrix
    return Fraction(sum(rv[i] * C[i][j] * rw[j] for i in range(n) for j in range(n)))


def _check_len(rs: RootSystem, coords) -> None:
    if len(coords) != rs.rank:
        raise RootSystemError(f"dimension mismatch: expected {rs.rank} coordinates, got {len(coords)}")


def _weight_to_root_coords(rs: RootSystem, coords: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Solve C x = coords to express a weight in the root basis."""
    n = rs.rank
    aug = [[Fraction(rs.cartan_matrix[i][j]) for j in range(n)] + [Fraction(coords[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def eisenstein_weight(rs: RootSystem, node: int) -> AffineWeight:
    """The degenerate weight 2s*Lambda_node - rho: coordinate 2s-1 at the
    node, -1 elsewhere."""
    if not 1 <= node <= rs.rank:
        raise RootSystemError(f"node {node} out of range for {rs.name}")
    slopes = tuple(Fraction(2 if i == node - 1 else 0) for i in range(rs.rank))
    intercepts = (Fraction(-1),) * rs.rank
    return AffineWeight(slopes, intercepts)


def highest_root(rs: RootSystem) -> Root:
    return max(rs.positive_roots, key=lambda r: sum(r))
