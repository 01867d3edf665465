r"""
Lattice-point monoids of low-dimensional rational cones.

A rational cone P = { x in R^m : A x >= 0 } (A an integer inequality matrix,
m <= 3) meets the lattice in a finitely generated monoid P cap Z^m.  This
module computes, by bounded-box brute force chosen for independent
verifiability over generality:

  * hilbert_basis -- the irreducible monoid elements Omega inside a scanned
    coordinate box, with an exhaustive completeness check (every monoid point
    of the box decomposes over Omega) that reports "bound too small" instead
    of returning an unverified set;
  * omega0 -- the interior seed set: sums of subsets W of Omega that are not
    contained in any single facet of P.  Such a sum has strictly positive
    pairing with every facet row, so it lies in int(P), and together the
    seeds reach every interior lattice point:

        int(P) cap Z^m = { a + sum_b k_b b : a in Omega_0, k_b >= 0 };

  * decompose_interior -- an exhaustive depth-first search realizing that
    equality for a given interior point, with the identity re-verified on
    every returned decomposition;
  * arithmetic_split -- delta = alpha + n beta with beta the generator of
    largest coefficient; any valid decomposition forces

        n >= norm(delta) / (max_{a in Omega_0} norm(a) + sum_b norm(b))

    whenever norm(delta) exceeds that denominator, for any functional that is
    linear and nonnegative on the cone.

Only pointed cones are accepted (a cone containing a line has units in its
monoid and no irreducible generating set); pointedness gives the strictly
positive integer functional c = sum of the rows of A, whose level decreases
along every monoid decomposition and bounds all searches.  Facets are the
inequality rows whose tight locus inside the scanned box spans dimension
m - 1; redundant rows are dropped by that test, and duplicate rows cutting
the same facet are merged.  All arithmetic is exact (integers and fractions).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .bounds import cone_constant

__all__ = [
    "Point",
    "ConeSpec",
    "HilbertData",
    "InteriorDecomposition",
    "ArithmeticSplit",
    "EmptyInteriorError",
    "BoundTooSmallError",
    "NoDecompositionError",
    "hilbert_basis",
    "omega0",
    "hilbert_data",
    "hilbert_data_from_omega",
    "decompose_interior",
    "arithmetic_split",
    "l1_norm",
    "thurston_form",
]

Point = tuple[int, ...]


class EmptyInteriorError(ValueError):
    """No strictly interior lattice point was found in the search box."""


class BoundTooSmallError(ValueError):
    """The scanned box cannot certify completeness of the generator set."""


class NoDecompositionError(ValueError):
    """No seed-plus-generators decomposition was found (incomplete omega)."""


def l1_norm(point: Point) -> int:
    return sum(abs(c) for c in point)


def thurston_form(point: Point) -> int:
    """x + y - z: the Thurston norm as a linear form on the magic cone."""
    if len(point) != 3:
        raise ValueError("the Thurston form needs 3 coordinates")
    return point[0] + point[1] - point[2]


def _dot(row: Sequence[int], x: Point) -> int:
    return sum(r * c for r, c in zip(row, x))


@dataclass(frozen=True)
class ConeSpec:
    """An integer inequality matrix A defining P = {x : A x >= 0}.

    Construction certifies a nonempty interior by locating a lattice point
    with A x > 0 strictly in a growing coordinate box (up to radius 64);
    cones that fail are rejected.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("need at least one inequality row")
        m = len(self.rows[0])
        if not 1 <= m <= 3:
            raise ValueError("only ambient dimensions 1..3 are supported")
        for row in self.rows:
            if len(row) != m:
                raise ValueError("inequality rows must have equal length")
            for r in row:
                if not isinstance(r, int):
                    raise ValueError("inequality entries must be integers")
        object.__setattr__(self, "_interior_witness", self._find_interior())

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    def contains(self, x: Point) -> bool:
        return all(_dot(row, x) >= 0 for row in self.rows)

    def strictly_positive_rows(self, x: Point) -> bool:
        return all(_dot(row, x) > 0 for row in self.rows)

    def _find_interior(self) -> Point:
        radius = 1
        while radius <= 64:
            for x in product(range(-radius, radius + 1), repeat=self.dim):
                if self.strictly_positive_rows(x):
                    return x
            radius *= 2
        raise EmptyInteriorError(
            "no lattice point with A x > 0 found in the search box; "
            "the cone has empty interior (or is too thin to certify)"
        )

    def level_form(self) -> tuple[int, ...]:
        """c = sum of rows: c . x >= 0 on P, and > 0 off 0 when P is pointed."""
        return tuple(sum(col) for col in zip(*self.rows))


def _box_monoid_points(spec: ConeSpec, bound: int) -> list[Point]:
    """Nonzero monoid points in [-bound, bound]^m, sorted by (level, lex)."""
    c = spec.level_form()
    pts = [
        x
        for x in product(range(-bound, bound + 1), repeat=spec.dim)
        if any(x) and spec.contains(x)
    ]
    pts.sort(key=lambda x: (_dot(c, x), x))
    return pts


def _check_pointed(spec: ConeSpec, pts: Iterable[Point]) -> None:
    for x in pts:
        if spec.contains(tuple(-c for c in x)):
            raise ValueError(
                f"cone contains the line through {x}: its lattice monoid has "
                "units and no irreducible generating set"
            )


def _solve_coefficients(
    residual: Point,
    omega: Sequence[Point],
    spec: ConeSpec,
    memo: set[tuple[Point, int]],
) -> list[int] | None:
    """Nonnegative k with residual = sum k_b b, by exhaustive DFS, or None."""
    c = spec.level_form()
    zero = (0,) * spec.dim

    def rec(res: Point, idx: int) -> list[int] | None:
        if res == zero:
            return [0] * (len(omega) - idx)
        if idx == len(omega):
            return None
        key = (res, idx)
        if key in memo:
            return None
        b = omega[idx]
        cb = _dot(c, b)
        kmax = _dot(c, res) // cb if cb > 0 else 0
        for k in range(kmax, -1, -1):
            nxt = tuple(r - k * bc for r, bc in zip(res, b))
            if not spec.contains(nxt):
                continue
            sub = rec(nxt, idx + 1)
            if sub is not None:
                return [k] + sub
        memo.add(key)
        return None

    if not spec.contains(residual):
        return None
    return rec(residual, 0)


def hilbert_basis(spec: ConeSpec, search_bound: int) -> tuple[Point, ...]:
    """Irreducible monoid elements within the box, certified complete.

    A candidate is irreducible when it is not a previously found irreducible
    plus another monoid point; processing candidates by increasing level of
    the positive functional c makes that test exhaustive.  Afterwards every
    box point must decompose over the returned set, else the box cannot have
    seen all generators and BoundTooSmallError is raised.
    """
    if search_bound < 1:
        raise ValueError("search bound must be positive")
    pts = _box_monoid_points(spec, search_bound)
    _check_pointed(spec, pts)
    zero = (0,) * spec.dim
    irreducible: list[Point] = []
    for x in pts:
        reducible = False
        for v in irreducible:
            u = tuple(a - b for a, b in zip(x, v))
            if u != zero and spec.contains(u):
                reducible = True
                break
        if not reducible:
            irreducible.append(x)
    omega = tuple(sorted(irreducible))
    memo: set[tuple[Point, int]] = set()
    for x in pts:
        if _solve_coefficients(x, omega, spec, memo) is None:
            raise BoundTooSmallError(
                f"box point {x} does not decompose over the {len(omega)} "
                f"generators found; bound too small"
            )
    return omega


def _rational_rank(vectors: Sequence[Point]) -> int:
    """Rank over Q of a set of integer vectors, by exact elimination."""
    rows = [[Fraction(c) for c in v] for v in vectors if any(v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col] / prow[col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


def _facet_row_indices(spec: ConeSpec, search_bound: int) -> tuple[int, ...]:
    """Rows whose tight locus in the box spans dimension m - 1.

    Redundant rows (tight nowhere, or only on lower-dimensional faces) are
    dropped; rows cutting the same facet are merged to the first occurrence.
    """
    box = [
        x
        for x in product(range(-search_bound, search_bound + 1), repeat=spec.dim)
        if spec.contains(x)
    ]
    facet_rows: list[int] = []
    seen_tight: list[frozenset[Point]] = []
    for ridx, row in enumerate(spec.rows):
        tight = frozenset(x for x in box if _dot(row, x) == 0)
        if _rational_rank(list(tight)) != spec.dim - 1:
            continue
        if tight in seen_tight:
            continue
        seen_tight.append(tight)
        facet_rows.append(ridx)
    return tuple(facet_rows)


@dataclass(frozen=True)
class HilbertData:
    """Generators and interior seeds of a cone's lattice monoid.

    facets[f] is the set of omega indices lying on the f-th facet, and
    facet_row_indices[f] the index into cone.rows of a row cutting it.
    """

    cone: ConeSpec
    omega: tuple[Point, ...]
    omega0: tuple[Point, ...]
    facets: tuple[frozenset[int], ...]
    facet_row_indices: tuple[int, ...]

    def is_interior(self, x: Point) -> bool:
        """x in int(P): nonnegative on all rows, strict on every facet row."""
        if not self.cone.contains(x):
            return False
        return all(_dot(self.cone.rows[r], x) > 0 for r in self.facet_row_indices)


def omega0(
    omega: Sequence[Point], spec: ConeSpec, search_bound: int | None = None
) -> tuple[Point, ...]:
    """Sums of subsets of omega not contained in any single facet.

    A subset W lies in a facet exactly when some facet row annihilates all of
    W; the sums of the remaining subsets pair strictly positively with every
    facet row, hence are interior.  The result is deduplicated and sorted.
    """
    return hilbert_data_from_omega(omega, spec, search_bound).omega0


def hilbert_data_from_omega(
    omega: Sequence[Point], spec: ConeSpec, search_bound: int | None = None
) -> HilbertData:
    """Assemble HilbertData around a caller-supplied generating set.

    omega need not be the minimal Hilbert basis, but every interior seed is
    built from it, so decompose_interior against the result only ever uses
    these generators.  The default search_bound for the facet scan covers a
    box twice as wide as the largest omega coordinate.
    """
    omega = tuple(sorted(tuple(p) for p in omega))
    if not omega:
        raise ValueError("omega must be nonempty")
    if len(omega) > 20:
        raise ValueError("subset enumeration over more than 20 generators refused")
    if search_bound is None:
        search_bound = max(8, 2 * max(abs(c) for p in omega for c in p))
    facet_rows = _facet_row_indices(spec, search_bound)
    facets = tuple(
        frozenset(
            i for i, b in enumerate(omega) if _dot(spec.rows[r], b) == 0
        )
        for r in facet_rows
    )
    sums: set[Point] = set()
    for mask in range(1, 1 << len(omega)):
        members = frozenset(i for i in range(len(omega)) if mask >> i & 1)
        if any(members <= facet for facet in facets):
            continue
        total = tuple(
            sum(omega[i][c] for i in members) for c in range(spec.dim)
        )
        sums.add(total)
    data = HilbertData(spec, omega, tuple(sorted(sums)), facets, facet_rows)
    for a in data.omega0:
        if not data.is_interior(a):
            raise RuntimeError(f"seed {a} is not interior; facet analysis is wrong")
    return data


def hilbert_data(spec: ConeSpec, search_bound: int) -> HilbertData:
    """hilbert_basis and omega0 packaged with the facet bookkeeping."""
    omega = hilbert_basis(spec, search_bound)
    return hilbert_data_from_omega(omega, spec, search_bound)


@dataclass(frozen=True)
class InteriorDecomposition:
    """point = seed + sum over omega of coefficients[i] * omega[i]."""

    seed: Point
    coefficients: tuple[int, ...]


def decompose_interior(point: Point, h: HilbertData) -> InteriorDecomposition:
    """Express an interior lattice point as a seed plus generators.

    Seeds are tried in canonical order, coefficients by exhaustive
    depth-first search in canonical generator order (largest count first),
    and the first solution is returned after re-verification.  Failure means
    the generator set cannot be complete.
    """
    point = tuple(point)
    if not h.is_interior(point):
        raise ValueError(f"{point} is not an interior lattice point of the cone")
    memo: set[tuple[Point, int]] = set()
    for a in h.omega0:
        residual = tuple(p - s for p, s in zip(point, a))
        coeffs = _solve_coefficients(residual, h.omega, h.cone, memo)
        if coeffs is None:
            continue
        recomposed = tuple(
            s + sum(k * b[c] for k, b in zip(coeffs, h.omega))
            for c, s in enumerate(a)
        )
        if recomposed != point or any(k < 0 for k in coeffs):
            raise RuntimeError(f"decomposition of {point} failed re-verification")
        return InteriorDecomposition(a, tuple(coeffs))
    raise NoDecompositionError(
        f"no decomposition of {point} within bounds; the generator set "
        "must be incomplete"
    )


@dataclass(frozen=True)
class ArithmeticSplit:
    """point = alpha + n * beta, with beta the heaviest generator.

    n = 0 (degenerate: the point is a bare seed) is flagged so callers skip
    the twist-power bound.
    """

    alpha: Point
    beta: Point
    n: int
    decomposition: InteriorDecomposition

    @property
    def degenerate(self) -> bool:
        return self.n == 0


def arithmetic_split(
    point: Point, h: HilbertData, norm: Callable[[Point], int]
) -> ArithmeticSplit:
    """Split off the heaviest generator; ties go to the smallest index.

    When norm(point) exceeds D = cone_constant of the generator norms, the
    returned n is guaranteed (and re-checked) to satisfy n >= norm(point)/D.
    """
    point = tuple(point)
    decomp = decompose_interior(point, h)
    coeffs = decomp.coefficients
    idx = coeffs.index(max(coeffs))
    n = coeffs[idx]
    beta = h.omega[idx]
    alpha = tuple(p - n * b for p, b in zip(point, beta))
    d_const = cone_constant(
        [norm(a) for a in h.omega0], [norm(b) for b in h.omega]
    )
    value = norm(point)
    if value > d_const and n * d_const < value:
        raise RuntimeError(
            f"split guarantee violated: n={n}, D={d_const}, norm={value}; "
            "the norm is not linear-nonnegative on this cone"
        )
    return ArithmeticSplit(alpha, beta, n, decomp)
