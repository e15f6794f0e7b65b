"""Weyl group machinery: elements as reduced words, inversion sets, the
longest element, and minimal-length coset representatives of W/W' by two
strategies.

Exhaustive enumeration walks the W-orbit of a weight whose stabilizer is
exactly W' (breadth-first, so the first path to an orbit point is a
reduced word of the unique minimal representative of its coset).

The Levi-pruned strategy enumerates only representatives w with
w^{-1}(alpha) > 0 for every simple root alpha of the Levi complement of
one node: the candidates come from the (small) W-orbit of the node's
fundamental weight, then get canonicalized into their left W'-coset
minimum and deduplicated.  For the degenerate weight 2s*L_i - rho these
are exactly the cosets whose intertwiner is not identically zero, which
is what makes E8 feasible.

Words are stored as byte strings of 1-based node letters; the word
(i1, i2, ..., ik) denotes s_{i1} s_{i2} ... s_{ik}, so the rightmost
letter acts first on vectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .rootsys import (
    AffineWeight,
    Root,
    RootSystem,
    RootSystemError,
    WeightVector,
    subgroup_weyl_order,
    weyl_group_order,
)

DEFAULT_EXHAUSTIVE_CAP = 3_000_000  # on |W|; covers A_n<=9, D_n<=7, E6, E7


class WeylError(ValueError):
    pass


class InfeasibleEnumeration(WeylError):
    """Exhaustive enumeration refused; the message names the alternative."""


def reflect_weight_coords(rs: RootSystem, coords: Sequence, i: int) -> tuple:
    """s_i on fundamental coordinates: subtract coords[i-1] times row i of
    the Cartan matrix."""
    m = coords[i - 1]
    if m == 0:
        return tuple(coords)
    row = rs.cartan_matrix[i - 1]
    return tuple(c - m * row[j] for j, c in enumerate(coords))


def reflect_root_coords(rs: RootSystem, root: Sequence[int], i: int) -> Root:
    """s_i on root coordinates: only coordinate i-1 changes."""
    row = rs.cartan_matrix[i - 1]
    c = sum(row[j] * root[j] for j in range(rs.rank))
    if c == 0:
        return tuple(root)
    out = list(root)
    out[i - 1] -= c
    return tuple(out)


def _apply_word_to_root(rs: RootSystem, word: Sequence[int], root: Root) -> Root:
    for i in reversed(word):
        root = reflect_root_coords(rs, root, i)
    return root


def _apply_word_to_weight(rs: RootSystem, word: Sequence[int], coords: tuple) -> tuple:
    for i in reversed(word):
        coords = reflect_weight_coords(rs, coords, i)
    return coords


class WeylElement:
    """Group element carried as a reduced word; equality and hashing go
    through the action matrix since reduced words are not unique."""

    __slots__ = ("rs", "word", "_rmat")

    def __init__(self, rs: RootSystem, word: Iterable[int]):
        self.rs = rs
        self.word = tuple(word)
        self._rmat: Optional[tuple] = None

    @staticmethod
    def identity(rs: RootSystem) -> "WeylElement":
        return WeylElement(rs, ())

    @property
    def length(self) -> int:
        return len(self.word)

    def root_matrix(self) -> tuple[Root, ...]:
        """Columns j = image of alpha_{j+1} in root coordinates."""
        if self._rmat is None:
            cols = []
            for j in range(self.rs.rank):
                e = tuple(1 if k == j else 0 for k in range(self.rs.rank))
                cols.append(_apply_word_to_root(self.rs, self.word, e))
            self._rmat = tuple(cols)
        return self._rmat

    def act_root(self, root: Sequence[int]) -> Root:
        return _apply_word_to_root(self.rs, self.word, tuple(root))

    def act(self, v):
        """Apply to a WeightVector, AffineWeight, or root-coordinate tuple."""
        if isinstance(v, WeightVector):
            return WeightVector(_apply_word_to_weight(self.rs, self.word, v.coords))
        if isinstance(v, AffineWeight):
            return AffineWeight(
                _apply_word_to_weight(self.rs, self.word, v.slopes),
                _apply_word_to_weight(self.rs, self.word, v.intercepts),
            )
        return self.act_root(v)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.rs is other.rs and self.root_matrix() == other.root_matrix()

    def __hash__(self) -> int:
        return hash(self.root_matrix())

    def __repr__(self) -> str:
        return f"WeylElement({self.rs.name}, word={'.'.join(map(str, self.word)) or 'e'})"


def act(w: WeylElement, v):
    """Linear action of w; permutes the root set, invertible."""
    return w.act(v)


def multiply(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Product w1*w2 with a freshly reduced word."""
    cols = []
    for j in range(w1.rs.rank):
        e = tuple(1 if k == j else 0 for k in range(w1.rs.rank))
        cols.append(w1.act_root(w2.act_root(e)))
    return WeylElement(w1.rs, _word_from_root_columns(w1.rs, cols))


def _word_from_root_columns(rs: RootSystem, cols: list[Root]) -> tuple[int, ...]:
    """Reduced word of the element whose root-basis column images are cols.

    Greedy descent: while some simple root goes negative, strip the
    corresponding reflection off the right.
    """
    n = rs.rank
    cols = [tuple(c) for c in cols]
    ident = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    letters = []
    while cols != ident:
        for i in range(1, n + 1):
            if any(c < 0 for c in cols[i - 1]):
                break
        else:
            raise WeylError("column matrix is not a Weyl action")
        letters.append(i)
        # right-multiply by s_i: new column j = old action applied to s_i(alpha_j)
        row = rs.cartan_matrix[i - 1]
        base = cols[i - 1]
        cols = [
            tuple(cj - row[j] * bi for cj, bi in zip(cols[j], base)) if row[j] and j != i - 1 else cols[j]
            for j in range(n)
        ]
        cols[i - 1] = tuple(-x for x in base)
    return tuple(reversed(letters))


def longest_element(rs: RootSystem) -> WeylElement:
    """w_0, built by greedily making -rho dominant; length = #positive roots."""
    coords = tuple(-c for c in rs.weyl_vector.coords)
    letters = []
    while True:
        neg = [i for i in range(1, rs.rank + 1) if coords[i - 1] < 0]
        if not neg:
            break
        i = neg[0]
        coords = reflect_weight_coords(rs, coords, i)
        letters.append(i)
    w0 = WeylElement(rs, tuple(letters))
    assert w0.length == len(rs.positive_roots)
    return w0


def inversion_set(w: WeylElement) -> set[Root]:
    """{alpha > 0 : w(alpha) < 0}; its size is the length of w."""
    out = set()
    for beta in w.rs.positive_roots:
        img = w.act_root(beta)
        if all(c <= 0 for c in img):
            out.add(beta)
    assert len(out) == w.length, "word is not reduced"
    return out


def inversion_roots_of_inverse(rs: RootSystem, word: Sequence[int]) -> list[Root]:
    """N(w^{-1}) for w given by a reduced word, via prefix images:
    {alpha_{i1}, s_{i1} alpha_{i2}, s_{i1} s_{i2} alpha_{i3}, ...}."""
    roots = []
    for j, i in enumerate(word):
        e = tuple(1 if k == i - 1 else 0 for k in range(rs.rank))
        prefix = word[:j]
        roots.append(_apply_word_to_root(rs, prefix, e))
    return roots


@dataclass(frozen=True)
class CosetTable:
    """Minimal-length representatives of W/W_{subset}."""

    rs: RootSystem
    subset: tuple[int, ...]
    strategy: str  # "exhaustive" | "levi_pruned"
    levi_excluded_node: Optional[int]
    words: tuple[bytes, ...]

    def __len__(self) -> int:
        return len(self.words)

    def word_tuples(self) -> Iterator[tuple[int, ...]]:
        for wb in self.words:
            yield tuple(wb)

    def reps(self) -> Iterator[WeylElement]:
        for wb in self.words:
            yield WeylElement(self.rs, tuple(wb))

    def to_json(self) -> dict:
        return {
            "group": self.rs.name,
            "subset": list(self.subset),
            "strategy": self.strategy,
            "levi_excluded_node": self.levi_excluded_node,
            "words": [list(wb) for wb in self.words],
        }

    @staticmethod
    def from_json(rs: RootSystem, data: dict) -> "CosetTable":
        if data["group"] != rs.name:
            raise WeylError(f"cached table is for {data['group']}, not {rs.name}")
        return CosetTable(
            rs,
            tuple(data["subset"]),
            data["strategy"],
            data.get("levi_excluded_node"),
            tuple(bytes(w) for w in data["words"]),
        )


def _orbit_bfs(rs: RootSystem, seed: tuple[int, ...]) -> dict[tuple[int, ...], bytes]:
    """Breadth-first W-orbit of an integral weight; value = reduced word of
    the minimal element mapping the seed to the key.  Levels are expanded in
    sorted order so the table is canonical."""
    visited: dict[tuple[int, ...], bytes] = {seed: b""}
    level = [seed]
    while level:
        level.sort()
        nxt = []
        for mu in level:
            word = visited[mu]
            for i in range(1, rs.rank + 1):
                nu = reflect_weight_coords(rs, mu, i)
                if nu != mu and nu not in visited:
                    visited[nu] = bytes([i]) + word
                    nxt.append(nu)
        level = nxt
    return visited


def coset_reps_exhaustive(
    rs: RootSystem, subset: Iterable[int], cap: int = DEFAULT_EXHAUSTIVE_CAP
) -> CosetTable:
    """All minimal-length representatives of W/W_{subset}.

    Refuses groups with |W| above the cap and points at the Levi-pruned
    strategy instead.
    """
    subset = tuple(sorted(set(subset)))
    _check_nodes(rs, subset)
    order = weyl_group_order(rs.series, rs.rank)
    if order > cap:
        raise InfeasibleEnumeration(
            f"|W({rs.name})| = {order} exceeds the exhaustive cap {cap}; "
            "use the Levi-pruned strategy (coset_reps_levi_pruned)"
        )
    seed = tuple(0 if (j + 1) in subset else 1 for j in range(rs.rank))
    visited = _orbit_bfs(rs, seed)
    expected = order // subgroup_weyl_order(rs, subset)
    assert len(visited) == expected, f"orbit size {len(visited)} != |W|/|W'| = {expected}"
    words = tuple(visited[mu] for mu in sorted(visited, key=lambda m: (len(visited[m]), m)))
    return CosetTable(rs, subset, "exhaustive", None, words)


def _min_rep_columns(rs: RootSystem, word: Sequence[int], subset: tuple[int, ...]) -> list[Root]:
    """Root-action columns of the minimal element of (word)W_{subset}."""
    n = rs.rank
    cols = []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        cols.append(_apply_word_to_root(rs, word, e))
    while True:
        bad = next((i for i in subset if any(c < 0 for c in cols[i - 1])), None)
        if bad is None:
            return cols
        i = bad
        row = rs.cartan_matrix[i - 1]
        base = cols[i - 1]
        cols = [
            tuple(cj - row[j] * bi for cj, bi in zip(cols[j], base)) if row[j] and j != i - 1 else cols[j]
            for j in range(n)
        ]
        cols[i - 1] = tuple(-x for x in base)


def coset_reps_levi_pruned(
    rs: RootSystem, levi: Iterable[int], subset: Iterable[int]
) -> CosetTable:
    """Minimal-length reps w of W/W_{subset} with w^{-1}(Levi simples) > 0.

    The Levi must be the complement of a single node i*.  Candidates are
    indexed by the W-orbit of Lambda_{i*} (BFS path = reduced word), then
    canonicalized into their left coset minimum and deduplicated.
    """
    subset = tuple(sorted(set(subset)))
    levi = tuple(sorted(set(levi)))
    _check_nodes(rs, subset)
    _check_nodes(rs, levi)
    missing = [i for i in rs.nodes() if i not in levi]
    if len(missing) != 1:
        raise WeylError("Levi subset must omit exactly one node")
    node = missing[0]

    seed = tuple(1 if j + 1 == node else 0 for j in range(rs.rank))
    visited = _orbit_bfs(rs, seed)

    found: dict[tuple, bytes] = {}
    for v_word in visited.values():
        w_word = tuple(reversed(v_word))  # w = v^{-1}, minimal in its right Levi coset
        cols = _min_rep_columns(rs, w_word, subset)
        key = tuple(cols)
        if key in found:
            continue
        word = _word_from_root_columns(rs, cols)
        # keep only reps whose inverse also sends the Levi simples to positives
        inv = WeylElement(rs, tuple(reversed(word)))
        if all(all(c >= 0 for c in inv.act_root(_unit(rs, i))) for i in levi):
            found[key] = bytes(word)
    words = tuple(sorted(found.values(), key=lambda wb: (len(wb), wb)))
    return CosetTable(rs, subset, "levi_pruned", node, words)


def _unit(rs: RootSystem, i: int) -> Root:
    return tuple(1 if k == i - 1 else 0 for k in range(rs.rank))


def _check_nodes(rs: RootSystem, nodes: tuple[int, ...]) -> None:
    for i in nodes:
        if not 1 <= i <= rs.rank:
            raise RootSystemError(f"node {i} out of range for {rs.name}")
