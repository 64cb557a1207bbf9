"""Hom complexes between complexes of projectives, and their cohomology.

The degree-n part of Hom(X, Y) collects maps X^k -> Y^{k+n} for all k; its
basis elements are tuples (k, r, c, q): component degree, target summand,
source summand, and an algebra basis path supported on the matching
idempotent block.  The differential is D(f) = d_Y f - (-1)^n f d_X, so
degree-n cocycles are exactly degree-n chain maps and coboundaries are the
null-homotopic ones.

When either complex is an incomplete (truncated) resolution, cohomology is
served only in the degree range where the missing part provably cannot
contribute; outside it, TruncationUnsound is raised rather than returning a
wrong number.
"""

from __future__ import annotations

from ..errors import TruncationUnsound
from ..linalg import GaussianSpan, identity_matrix, solve, zero_vector
from .complexes import ChainMap, ProjComplex, alg_zero_matrix

BasisElt = tuple[int, int, int, int]


class HomComplex:
    """The total complex of graded maps between two complexes."""

    def __init__(self, source: ProjComplex, target: ProjComplex):
        if source.algebra is not target.algebra:
            raise ValueError("complexes live over different algebras")
        self.source = source
        self.target = target
        self.algebra = source.algebra
        self.field = self.algebra.field
        raw: dict[int, list[BasisElt]] = {}
        for k in source.summands:
            for m in target.summands:
                n = m - k
                for c, w in enumerate(source.summands[k]):
                    for r, v in enumerate(target.summands[m]):
                        for q in self.algebra.hom_basis(v, w):
                            raw.setdefault(n, []).append((k, r, c, q))
        self.basis: dict[int, tuple[BasisElt, ...]] = {
            n: tuple(sorted(elts)) for n, elts in raw.items()
        }
        self.index = {
            n: {e: i for i, e in enumerate(es)} for n, es in self.basis.items()
        }
        self._diff: dict[int, list] = {}
        for n, elts in self.basis.items():
            rows = len(self.basis.get(n + 1, ()))
            mat = [zero_vector(self.field, len(elts)) for _ in range(rows)]
            sign = -1 if n % 2 else 1
            for col, (k, r, c, q) in enumerate(elts):
                pq = self.algebra.basis_element(q)
                dy = target.differential(k + n)
                for r2 in range(len(target.summands.get(k + n + 1, ()))):
                    product = dy[r2][r] * pq
                    for qi, coeff in product.coeffs.items():
                        row = self.index[n + 1][(k, r2, c, qi)]
                        mat[row][col] = mat[row][col] + coeff
                dx = source.differential(k - 1)
                for c2 in range(len(source.summands.get(k - 1, ()))):
                    product = pq * dx[c][c2]
                    for qi, coeff in product.coeffs.items():
                        row = self.index[n + 1][(k - 1, r, c2, qi)]
                        mat[row][col] = mat[row][col] - sign * coeff
            self._diff[n] = mat

    # -- underlying graded pieces --------------------------------------

    def degrees(self) -> list[int]:
        return sorted(n for n in self.basis if self.basis[n])

    def dimension(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def graded_dimensions(self) -> dict[int, int]:
        return {n: len(es) for n, es in self.basis.items() if es}

    def differential_matrix(self, n: int) -> list:
        return self._diff.get(n, [])

    def differential_rank(self, n: int) -> int:
        from ..linalg import rank

        return rank(self.field, self._diff.get(n, []))

    # -- cocycles, boundaries, cohomology ------------------------------

    def cocycles(self, n: int) -> list:
        from ..linalg import kernel_basis

        dim = self.dimension(n)
        if dim == 0:
            return []
        mat = self._diff.get(n, [])
        if not mat:
            return [row[:] for row in identity_matrix(self.field, dim)]
        return kernel_basis(self.field, mat)

    def boundary_span(self, n: int) -> GaussianSpan:
        span = GaussianSpan(self.field, self.dimension(n))
        prev = self._diff.get(n - 1, [])
        if prev:
            cols = len(prev[0]) if prev else 0
            for j in range(cols):
                span.add([prev[i][j] for i in range(len(prev))])
        return span

    def cohomology_reps(self, n: int) -> list:
        """Cocycle vectors spanning a complement of the boundaries, chosen
        greedily in the fixed basis order."""
        span = self.boundary_span(n)
        reps = []
        for z in self.cocycles(n):
            if span.add(z):
                reps.append(z)
        return reps

    def cohomology_dim(self, n: int) -> int:
        return len(self.cohomology_reps(n))

    # -- conversions ---------------------------------------------------

    def vector_to_map(self, n: int, vec: list) -> ChainMap:
        components: dict[int, list] = {}
        for i, coeff in enumerate(vec):
            if not coeff:
                continue
            k, r, c, q = self.basis[n][i]
            if k not in components:
                components[k] = alg_zero_matrix(
                    self.algebra,
                    len(self.target.summands[k + n]),
                    len(self.source.summands[k]),
                )
            components[k][r][c] = components[k][r][c] + self.algebra.basis_element(q).scale(coeff)
        return ChainMap(self.source, self.target, components, degree=n, check=False)

    def map_to_vector(self, f: ChainMap) -> list:
        if f.degree not in self.basis:
            return []
        vec = zero_vector(self.field, self.dimension(f.degree))
        for k, mat in f.components.items():
            for r, row in enumerate(mat):
                for c, entry in enumerate(row):
                    for q, coeff in entry.coeffs.items():
                        vec[self.index[f.degree][(k, r, c, q)]] = (
                            vec[self.index[f.degree][(k, r, c, q)]] + coeff
                        )
        return vec


def trusted_window(x: ProjComplex, y: ProjComplex) -> tuple[float, float]:
    """Degrees n for which H^n Hom(x, y) is unaffected by truncation.

    A resolution truncated below its lowest degree b can only contribute
    Hom basis elements in high (for the source) or low (for the target)
    degrees; cohomology at n also needs degrees n-1 and n+1 to be clean.
    """
    lo: float = float("-inf")
    hi: float = float("inf")
    if not x.complete and not x.is_zero() and not y.is_zero():
        hi = y.min_degree - x.min_degree - 1
    if not y.complete and not x.is_zero() and not y.is_zero():
        lo = y.min_degree - x.min_degree + 1
    return lo, hi


class HomSpace:
    """H^n of a Hom complex, with chain-map representatives and coordinates
    for arbitrary cocycles modulo boundaries."""

    def __init__(self, hom: HomComplex, degree: int):
        self.complex = hom
        self.degree = degree
        self._boundary = hom.boundary_span(degree)
        self._rep_vectors = hom.cohomology_reps(degree)
        self.representatives = [
            hom.vector_to_map(degree, v) for v in self._rep_vectors
        ]
        self.dimension = len(self._rep_vectors)

    def class_coordinates(self, f: ChainMap) -> list:
        """Coordinates of [f] in the representative basis (f must be a
        cocycle of the right degree)."""
        vec = self.complex.map_to_vector(f)
        if not vec:
            return []
        reduced = self._boundary.reduce(vec)
        if self.dimension == 0:
            if any(reduced):
                raise ValueError("map is not a boundary but the space is zero")
            return []
        cols = [self._boundary.reduce(r) for r in self._rep_vectors]
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(len(vec))]
        coords = solve(self.complex.field, matrix, reduced)
        if coords is None:
            raise ValueError("map is not a cocycle modulo boundaries")
        return coords

    def is_boundary(self, f: ChainMap) -> bool:
        vec = self.complex.map_to_vector(f)
        if not vec:
            return True
        return not any(self._boundary.reduce(vec))


def hom_complex(x: ProjComplex, y: ProjComplex) -> HomComplex:
    return HomComplex(x, y)


def hom_space(x: ProjComplex, y: ProjComplex, n: int) -> HomSpace:
    """H^n Hom(x, y): degree-n chain maps up to homotopy.

    Raises TruncationUnsound if either complex is an incomplete resolution
    and n lies outside the range its truncation leaves intact.
    """
    lo, hi = trusted_window(x, y)
    if not (lo <= n <= hi):
        raise TruncationUnsound(
            f"H^{n} of the Hom complex is not determined by the truncated "
            f"resolutions (trusted degrees: {lo} .. {hi})",
            degree=n,
            window=(lo, hi),
        )
    return HomSpace(HomComplex(x, y), n)


def euler_form_dims(hom: HomComplex) -> int:
    """Alternating sum of the graded dimensions of the Hom complex."""
    return sum((-1) ** (n % 2) * d for n, d in hom.graded_dimensions().items())


def euler_form_cohomology(hom: HomComplex) -> int:
    """Alternating sum of the cohomology dimensions of the Hom complex."""
    total = 0
    for n in hom.degrees():
        total += (-1) ** (n % 2) * hom.cohomology_dim(n)
    return total


def cartan_pairing(algebra, class_x: dict[str, int], class_y: dict[str, int]) -> int:
    """Euler pairing of class vectors: sums dim e_w A e_v over pairs of
    vertices weighted by the alternating-sum multiplicities."""
    total = 0
    for v, cv in class_x.items():
        if not cv:
            continue
        for w, cw in class_y.items():
            if not cw:
                continue
            total += cv * cw * algebra.cartan_entry(w, v)
    return total
