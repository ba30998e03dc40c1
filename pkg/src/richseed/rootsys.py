"""Simply-laced root-system arithmetic.

Conventions used everywhere in the package:

* roots are integer vectors in the simple-root basis,
* weights are integer vectors in the fundamental-weight basis,
* vertices of the Dynkin diagram (colors) are numbered 1..rank.

In a simply-laced type the Cartan matrix is symmetric and every root is
its own coroot, so the pairing of a weight ``lam`` with the coroot of a
root ``beta`` is the plain dot product ``sum(lam[j] * beta[j])`` of
weight coordinates against root coordinates.  The Cartan matrix is the
only change of basis: the j-th simple root has weight coordinates equal
to the j-th column (= row) of the Cartan matrix.  This identification is
relied on silently below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import IllegalType

Vec = tuple[int, ...]


@dataclass(frozen=True)
class CartanData:
    """A simply-laced Dynkin type with its Cartan matrix and diagram."""

    family: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    adjacency: frozenset[tuple[int, int]]

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_{ij} for colors 1..rank."""
        return self.matrix[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.adjacency

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(j for j in range(1, self.rank + 1) if j != i and self.adjacent(i, j)))

    def __repr__(self) -> str:  # pragma: no cover
        return f"CartanData({self.family}{self.rank})"


def _edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A":
        if rank < 1:
            raise IllegalType(f"A{rank} does not exist")
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        if rank < 4:
            raise IllegalType(f"D{rank} does not exist (rank >= 4 required)")
        chain = [(i, i + 1) for i in range(1, rank - 2)]
        return chain + [(rank - 2, rank - 1), (rank - 2, rank)]
    if family == "E":
        if rank not in (6, 7, 8):
            raise IllegalType(f"E{rank} does not exist")
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)]
        chain += [(i, i + 1) for i in range(6, rank)]
        return chain + [(2, 4)]
    raise IllegalType(f"unknown family {family!r}")


def cartan(family: str, rank: int) -> CartanData:
    """Cartan data for type ``family``+``rank``, vertices numbered 1..rank.

    A_n is the chain 1--2--...--n, D_n branches at n-2, and in E_n the
    vertex 2 hangs off vertex 4 of the chain 1--3--4--5--...--n.
    """
    family = family.upper()
    edges = _edges(family, rank)
    adj = frozenset((min(i, j), max(i, j)) for i, j in edges)
    rows = []
    for i in range(1, rank + 1):
        row = []
        for j in range(1, rank + 1):
            if i == j:
                row.append(2)
            elif (min(i, j), max(i, j)) in adj:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return CartanData(family, rank, tuple(rows), adj)


def parse_type(spec: str) -> CartanData:
    """Parse a type string such as ``"A5"`` or ``"d4"``."""
    spec = spec.strip()
    if len(spec) < 2 or spec[0].upper() not in "ADE":
        raise IllegalType(f"cannot parse type {spec!r}")
    try:
        rank = int(spec[1:])
    except ValueError as exc:
        raise IllegalType(f"cannot parse type {spec!r}") from exc
    return cartan(spec[0], rank)


# ---------------------------------------------------------------------------
# root and weight arithmetic


def simple_root(c: CartanData, i: int) -> Vec:
    return tuple(1 if j == i - 1 else 0 for j in range(c.rank))


def fundamental_weight(c: CartanData, i: int) -> Vec:
    return tuple(1 if j == i - 1 else 0 for j in range(c.rank))


def root_pairing(c: CartanData, lam: Vec, beta: Vec) -> int:
    """Pairing <lam, beta^vee> of a weight with the coroot of a root."""
    return sum(l * b for l, b in zip(lam, beta))


def root_to_weight(c: CartanData, beta: Vec) -> Vec:
    """Weight coordinates of a root vector (multiply by the Cartan matrix)."""
    return tuple(sum(c.matrix[i][j] * beta[j] for j in range(c.rank)) for i in range(c.rank))


def reflect_root(c: CartanData, i: int, v: Vec) -> Vec:
    """s_i acting on root coordinates."""
    pairing = sum(c.matrix[i - 1][j] * v[j] for j in range(c.rank))
    out = list(v)
    out[i - 1] -= pairing
    return tuple(out)


def reflect_weight_simple(c: CartanData, i: int, lam: Vec) -> Vec:
    """s_i acting on weight coordinates."""
    n = lam[i - 1]
    return tuple(lam[j] - n * c.matrix[j][i - 1] for j in range(c.rank))


def reflect_weight(c: CartanData, lam: Vec, beta: Vec) -> Vec:
    """Reflection s_beta of a weight in the hyperplane of the root beta."""
    n = root_pairing(c, lam, beta)
    beta_w = root_to_weight(c, beta)
    return tuple(lam[j] - n * beta_w[j] for j in range(c.rank))


def is_positive(v: Vec) -> bool:
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


def is_negative(v: Vec) -> bool:
    return all(x <= 0 for x in v) and any(x < 0 for x in v)


@lru_cache(maxsize=None)
def positive_roots(c: CartanData) -> tuple[Vec, ...]:
    """All positive roots, sorted by height then lexicographically."""
    roots = {simple_root(c, i) for i in range(1, c.rank + 1)}
    frontier = set(roots)
    while frontier:
        new = set()
        for v in frontier:
            for i in range(1, c.rank + 1):
                img = reflect_root(c, i, v)
                if is_positive(img) and img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return tuple(sorted(roots, key=lambda v: (sum(v), v)))


def number_of_positive_roots(c: CartanData) -> int:
    return len(positive_roots(c))


# ---------------------------------------------------------------------------
# Weyl group elements as integer matrices on the root lattice


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as an integer matrix on the simple-root basis.

    Column j of the matrix holds the root coordinates of the image of
    the j-th simple root.  Equality of elements is equality of matrices.
    """

    cartan: CartanData
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, v: Vec) -> Vec:
        n = self.cartan.rank
        return tuple(sum(self.matrix[i][j] * v[j] for j in range(n)) for i in range(n))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.cartan != other.cartan:
            raise ValueError("elements of different Weyl groups")
        n = self.cartan.rank
        a, b = self.matrix, other.matrix
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
        )
        return WeylElement(self.cartan, prod)

    def inverse(self) -> "WeylElement":
        return WeylElement(self.cartan, _invert_unimodular(self.matrix))

    def is_identity(self) -> bool:
        return self == identity_element(self.cartan)

    @property
    def length(self) -> int:
        return _length(self)

    def right_descents(self) -> tuple[int, ...]:
        """Colors i with l(w s_i) < l(w), i.e. w(alpha_i) negative."""
        out = []
        for i in range(1, self.cartan.rank + 1):
            col = tuple(row[i - 1] for row in self.matrix)
            if is_negative(col):
                out.append(i)
        return tuple(out)

    def is_right_descent(self, i: int) -> bool:
        col = tuple(row[i - 1] for row in self.matrix)
        return is_negative(col)

    def __repr__(self) -> str:  # pragma: no cover
        return f"WeylElement({self.cartan.family}{self.cartan.rank}, len={self.length})"


def _invert_unimodular(matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    inv = tuple(tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n))
    check = [[Fraction(aug[i][n + j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if check[i][j].denominator != 1:
                raise ValueError("matrix is not unimodular")
    return inv


@lru_cache(maxsize=None)
def identity_element(c: CartanData) -> WeylElement:
    m = tuple(tuple(int(i == j) for j in range(c.rank)) for i in range(c.rank))
    return WeylElement(c, m)


@lru_cache(maxsize=None)
def simple_reflection(c: CartanData, i: int) -> WeylElement:
    cols = [reflect_root(c, i, simple_root(c, j)) for j in range(1, c.rank + 1)]
    m = tuple(tuple(cols[j][r] for j in range(c.rank)) for r in range(c.rank))
    return WeylElement(c, m)


def element_of_word(c: CartanData, letters) -> WeylElement:
    """Element s_{i_k} ... s_{i_1} for letters (i_1, ..., i_k) in application order.

    The word need not be reduced.
    """
    w = identity_element(c)
    for i in letters:
        if not 1 <= i <= c.rank:
            raise ValueError(f"letter {i} out of range 1..{c.rank}")
        w = simple_reflection(c, i) * w
    return w


@lru_cache(maxsize=None)
def _length(w: WeylElement) -> int:
    return sum(1 for beta in positive_roots(w.cartan) if is_negative(w.apply(beta)))


@lru_cache(maxsize=None)
def longest_element(c: CartanData) -> WeylElement:
    w, _ = _build_w0(c)
    return w


@lru_cache(maxsize=None)
def longest_element_word(c: CartanData) -> tuple[int, ...]:
    """One reduced word for w0, letters in application order (i_1 first)."""
    _, letters = _build_w0(c)
    return letters


def _build_w0(c: CartanData) -> tuple[WeylElement, tuple[int, ...]]:
    # Greedy ascent from the identity: keep right-multiplying by the
    # smallest generator that still increases length.
    w = identity_element(c)
    picked: list[int] = []
    r = number_of_positive_roots(c)
    while w.length < r:
        for i in range(1, c.rank + 1):
            if not w.is_right_descent(i):
                w = w * simple_reflection(c, i)
                picked.append(i)
                break
    # w0 = s_{d_1} s_{d_2} ... s_{d_r}, so in application order the word
    # reads (d_r, ..., d_1).
    return w, tuple(reversed(picked))
