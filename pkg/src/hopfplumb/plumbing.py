"""Combinatorial model of positive Hopf-band plumbings.

The family built here starts from the fibre surface ``S`` of the torus link
T(2, 2g): a chain of ``2g - 1`` positive Hopf bands with cores
``alpha_1, beta_1, ..., beta_{g-1}, alpha_g``. A last band is plumbed along
the arc ``gamma_n = t_c^n(gamma)``, where ``c`` bounds a neighbourhood of
``alpha_g`` and ``beta_{g-1}``. The resulting surface ``S_n`` bounds the knot
``K_n``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import IntegerMatrix, determinant

__all__ = [
    "SeifertMatrix", "PlumbingTree", "CurveChainModel",
    "build_family_matrix", "twist_intersection_bounds", "transvection_power",
    "seifert_chain", "seifert_tree", "seifert_family", "load_tree",
]

DEFAULT_CONVENTION = -1


def _check_convention(convention: int) -> int:
    if convention not in (-1, 1):
        raise ValueError(f"convention must be -1 or +1, got {convention!r}")
    return convention


@dataclass(frozen=True)
class SeifertMatrix:
    """Seifert form of a fibre surface built from positive Hopf bands.

    ``convention`` is the self-linking assigned to the core of a positive
    Hopf band. Flipping it negates the whole matrix.
    """

    matrix: IntegerMatrix
    convention: int = DEFAULT_CONVENTION

    def __post_init__(self):
        _check_convention(self.convention)
        if not self.matrix.is_square:
            raise ValueError("Seifert matrix must be square")
        if abs(determinant(self.matrix)) != 1:
            raise ValueError("Seifert matrix of a fibre surface must be unimodular")

    @property
    def size(self) -> int:
        return self.matrix.nrows

    @property
    def T(self) -> IntegerMatrix:
        return self.matrix.T

    def intersection_form(self) -> IntegerMatrix:
        return self.matrix - self.matrix.T

    def flipped(self) -> SeifertMatrix:
        return SeifertMatrix(-self.matrix, -self.convention)

    def tolist(self):
        return self.matrix.tolist()


@dataclass(frozen=True)
class PlumbingTree:
    node_count: int
    edges: tuple[tuple[int, int], ...]
    plumbing_order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        n = self.node_count
        if n < 1:
            raise ValueError("a plumbing needs at least one band")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        order = tuple(self.plumbing_order) or tuple(range(n))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "plumbing_order", order)
        if sorted(order) != list(range(n)):
            raise ValueError("plumbing order must be a permutation of the nodes")
        if len(edges) != n - 1:
            raise ValueError(f"a tree on {n} nodes has {n - 1} edges, got {len(edges)}")
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ValueError(f"invalid edge ({a}, {b})")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("edge set contains a cycle")
            parent[ra] = rb

    @classmethod
    def path(cls, k: int) -> PlumbingTree:
        return cls(k, tuple((i, i + 1) for i in range(k - 1)))


def load_tree(source) -> tuple[PlumbingTree, int]:
    """Read a plumbing tree file; returns the tree and its sign convention."""
    if isinstance(source, dict):
        obj = source
    else:
        with open(source) as fh:
            obj = json.load(fh)
    try:
        tree = PlumbingTree(int(obj["nodes"]), tuple(tuple(e) for e in obj["edges"]),
                            tuple(obj.get("order", ())))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed plumbing tree: {exc}") from None
    return tree, _check_convention(obj.get("convention", DEFAULT_CONVENTION))


def seifert_tree(tree: PlumbingTree, convention: int = DEFAULT_CONVENTION) -> SeifertMatrix:
    """Seifert matrix of an arborescent plumbing of positive Hopf bands.

    Within an edge, the band plumbed earlier carries the ``+1`` linking with
    the later one (default convention).
    """
    _check_convention(convention)
    n = tree.node_count
    rank = {node: k for k, node in enumerate(tree.plumbing_order)}
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = -1
    for a, b in tree.edges:
        first, second = (a, b) if rank[a] < rank[b] else (b, a)
        rows[first][second] = 1
    A = IntegerMatrix(rows)
    return SeifertMatrix(A if convention == -1 else -A, convention)


def seifert_chain(k: int, convention: int = DEFAULT_CONVENTION) -> SeifertMatrix:
    """Seifert matrix of a linear chain of ``k`` positive Hopf bands, fibre of T(2, k+1)."""
    if k < 1:
        raise ValueError("chain needs at least one band")
    return seifert_tree(PlumbingTree.path(k), convention)


def build_family_matrix(g: int, n: int) -> IntegerMatrix:
    """Geometric intersection matrix between the multicurves ``alpha`` and ``beta``.

    Row ``i`` is ``alpha_{i+1}``, column ``j`` is ``beta_{j+1}``; the last
    column is ``beta_{g,n}``.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rows = [[0] * g for _ in range(g)]
    for i in range(g):
        rows[i][i] = 1
    for i in range(g - 1):
        rows[i + 1][i] = 1
    rows[g - 2][g - 1] = 4 * n
    return IntegerMatrix(rows)


def twist_intersection_bounds(i_ac: int, i_cb: int, i_ab: int, n: int) -> tuple[int, int]:
    """Bounds on ``i(t_c^n(a), b)`` from ``|i(t_c^n a, b) - n i(a,c) i(c,b)| <= i(a,b)``."""
    if n < 1:
        raise ValueError("twist inequality needs n >= 1")
    if min(i_ac, i_cb, i_ab) < 0:
        raise ValueError("intersection numbers are nonnegative")
    core = n * i_ac * i_cb
    return max(0, core - i_ab), core + i_ab


def transvection_power(c: Sequence[int], x: Sequence[int], n: int, J: IntegerMatrix) -> tuple[int, ...]:
    """Homological action of ``t_c^n``: ``x + n <x, c> c`` with ``<x, c> = x^T J c``."""
    c, x = tuple(c), tuple(x)
    if not (len(c) == len(x) == J.nrows == J.ncols):
        raise ValueError("vector and pairing sizes do not match")
    if J != -J.T:
        raise ValueError("pairing matrix must be skew-symmetric")
    pairing = sum(a * b for a, b in zip(x, J @ c))
    return tuple(a + n * pairing * b for a, b in zip(x, c))


@dataclass(frozen=True)
class CurveChainModel:
    """Curve data on the T(2, 2g) fibre ``S`` in the chain order of its basis.

    ``basis`` lists ``alpha_1, beta_1, ..., beta_{g-1}, alpha_g``. Unsigned
    counts are recorded as given by the construction, keyed by label pairs.
    """

    genus: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")

    @property
    def basis(self) -> tuple[str, ...]:
        g = self.genus
        labels = []
        for i in range(1, g):
            labels += [f"alpha_{i}", f"beta_{i}"]
        return tuple(labels + [f"alpha_{g}"])

    @property
    def rank(self) -> int:
        return 2 * self.genus - 1

    def pairing(self) -> IntegerMatrix:
        """Algebraic intersection form on H_1(S) in the chain basis."""
        return seifert_chain(self.rank).intersection_form()

    def c_class(self) -> tuple[int, ...]:
        # c bounds a neighbourhood of alpha_g and beta_{g-1}, hence is separating
        return (0,) * self.rank

    def gamma_functional(self) -> tuple[int, ...]:
        """``x -> <x, gamma>`` on the basis; gamma crosses only alpha_g, once."""
        return (0,) * (self.rank - 1) + (1,)

    def unsigned_counts(self) -> dict[frozenset, int]:
        g = self.genus
        counts = {}
        b = self.basis
        for i in range(len(b)):
            for j in range(i + 1, len(b)):
                counts[frozenset((b[i], b[j]))] = int(j == i + 1)
        for x in b:
            counts[frozenset(("gamma", x))] = int(x == f"alpha_{g}")
            counts[frozenset(("c", x))] = 2 if x == f"alpha_{g - 1}" else 0
        counts[frozenset(("gamma", "c"))] = 2
        return counts

    def gamma_n_functional(self, n: int) -> tuple[int, ...]:
        """``x -> <x, t_c^n(gamma)>``, obtained as ``<t_c^{-n} x, gamma>``."""
        J, c, f = self.pairing(), self.c_class(), self.gamma_functional()
        out = []
        for k in range(self.rank):
            x = tuple(int(i == k) for i in range(self.rank))
            for _ in range(n):
                x = transvection_power(c, x, -1, J)
            out.append(sum(a * b for a, b in zip(f, x)))
        return tuple(out)

    def alpha_gm1_count(self, n: int) -> int:
        """Number of points of ``gamma_n`` on ``alpha_{g-1}``."""
        g = self.genus
        counts = self.unsigned_counts()
        i_ac = counts[frozenset(("gamma", "c"))]
        i_cb = counts[frozenset(("c", f"alpha_{g - 1}"))]
        i_ab = counts[frozenset(("gamma", f"alpha_{g - 1}"))]
        if n == 0:
            return i_ab
        lo, hi = twist_intersection_bounds(i_ac, i_cb, i_ab, n)
        if lo != hi:
            raise ArithmeticError("twist inequality does not pin the count")
        return lo


def seifert_family(g: int, n: int, convention: int = DEFAULT_CONVENTION) -> SeifertMatrix:
    """Seifert matrix of ``S_n`` in the basis ``alpha_1, beta_1, ..., alpha_g, beta_{g,n}``.

    The leading block is the form of ``S``. The last band's row and column
    come from the class of ``gamma_n``: the core ``beta_{g,n}`` bounds a disc
    below ``S``, so its linking with the upper push-off of ``x`` is
    ``<x, gamma_n>`` and with the lower push-off it is 0.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    model = CurveChainModel(g)
    base = seifert_chain(model.rank).matrix
    f = model.gamma_n_functional(n)
    J = model.pairing()
    size = model.rank + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(model.rank):
        rows[i][:model.rank] = base.rows[i]
    upper = list(f)
    # A - A^T on (x, beta) is the intersection <x, beta> = <x, gamma_n>
    lower = [u - fx for u, fx in zip(upper, f)]
    for i in range(model.rank):
        rows[i][-1] = upper[i]
        rows[-1][i] = lower[i]
    rows[-1][-1] = -1
    A = IntegerMatrix(rows)
    assert all((A - A.T)[i, j] == J[i, j] for i in range(model.rank) for j in range(model.rank))
    return SeifertMatrix(A if convention == -1 else -A, _check_convention(convention))
