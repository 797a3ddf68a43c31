"""Exact Laplacian / distance-Laplacian spectra over the integers.

No floating point is used anywhere in this module. Characteristic polynomials
are computed either by Hessenberg reduction modulo several word-size primes
recombined with the CRT under a Hadamard coefficient bound (the default), or
by Bareiss determinants of ``xI - M`` at ``n + 1`` integer points followed by
exact interpolation. The two routes share no code beyond the matrix type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .graph_core import INF, Graph, GraphError, distances


class DisconnectedGraphError(GraphError):
    """A connected graph was required."""

    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: vertices {u} and {v} are in different components")
        self.pair = (u, v)


class SpectrumError(ArithmeticError):
    """Internal-consistency failure in a computed spectrum."""


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        m = cls(tuple(tuple(int(x) for x in r) for r in rows))
        if any(len(r) != m.n for r in m.rows):
            raise ValueError("matrix must be square")
        return m

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i))

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in (c or [0])))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        c = [1]
        for r in roots:
            c = [0] + c
            for i in range(len(c) - 1):
                c[i] -= r * c[i + 1]
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self, c: int) -> "IntPolynomial":
        """``(-1)^deg p(c - x)``: roots ``r`` become ``c - r``, monic stays monic."""
        shifted = [0]
        for a in reversed(self.coeffs):
            nxt = [0] * (len(shifted) + 1)
            for i, b in enumerate(shifted):
                nxt[i] += c * b
                nxt[i + 1] += b
            nxt[0] += a
            shifted = nxt
        sign = -1 if self.degree % 2 else 1
        return IntPolynomial(tuple(sign * b * (-1) ** k for k, b in enumerate(shifted)))

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: f"{mag}", 1: "x" if mag == 1 else f"{mag}x"}.get(
                k, f"x^{k}" if mag == 1 else f"{mag}x^{k}"
            )
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues with multiplicities, largest first.

    ``residual`` holds whatever factor of the characteristic polynomial has no
    integer roots in the searched range (``None`` when fully factored).
    """

    pairs: tuple[tuple[int, int], ...]
    residual: IntPolynomial | None = None

    @classmethod
    def from_multiplicities(
        cls, items: Iterable[tuple[int, int]], residual: IntPolynomial | None = None
    ) -> "Spectrum":
        """Merge repeated eigenvalues and drop zero multiplicities."""
        acc: dict[int, int] = {}
        for value, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity for eigenvalue {value}")
            if mult:
                acc[value] = acc.get(value, 0) + mult
        if residual is not None and residual.degree == 0:
            residual = None
        return cls(tuple(sorted(acc.items(), reverse=True)), residual)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.pairs) + (self.residual.degree if self.residual else 0)

    @property
    def fully_factored(self) -> bool:
        return self.residual is None

    def multiplicity(self, value: int) -> int:
        return dict(self.pairs).get(value, 0)

    def eigenvalues(self) -> list[int]:
        """Listed eigenvalues repeated by multiplicity, descending."""
        return [v for v, m in self.pairs for _ in range(m)]

    def trace(self) -> int:
        """Sum of all eigenvalues including residual roots."""
        total = sum(v * m for v, m in self.pairs)
        if self.residual is not None:
            r = self.residual.coeffs
            total += -r[-2] // r[-1] if len(r) > 1 else 0
        return total

    def to_json(self) -> list[list[int]]:
        return [[v, m] for v, m in self.pairs]


# -- matrices ------------------------------------------------------------------


def laplacian(g: Graph) -> IntMatrix:
    rows = []
    for i in range(g.n):
        row = [0] * g.n
        row[i] = g.degree(i)
        for j in g.adj[i]:
            row[j] = -1
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def distance_laplacian(g: Graph) -> IntMatrix:
    """Transmission diagonal minus the hop-distance matrix; requires ``g`` connected."""
    table = distances(g)
    for u in range(g.n):
        row = table.dist[u]
        if INF in row:
            raise DisconnectedGraphError(u, row.index(INF))
    rows = []
    for i in range(g.n):
        d = table.dist[i]
        tr = sum(d)  # type: ignore[arg-type]
        rows.append(tuple(tr if j == i else -d[j] for j in range(g.n)))  # type: ignore[operator]
    return IntMatrix(tuple(rows))


# -- determinants and characteristic polynomials ------------------------------


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate stays integral."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def _is_probable_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.3e24
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(index: int) -> int:
    """The ``index``-th prime below 2**61, counting downward."""
    p = (1 << 61) - 1 if index == 0 else _prime(index - 1) - 2
    while not _is_probable_prime(p):
        p -= 2
    return p


def _coefficient_bound(m: IntMatrix) -> int:
    # every k x k principal minor is bounded by R^k (Hadamard), and there are
    # C(n, k) of them, so |coefficient| <= (1 + R)^n
    r2 = max((sum(x * x for x in row) for row in m.rows), default=0)
    radius = math.isqrt(r2) + 1
    return (1 + radius) ** m.n


def _charpoly_mod(rows: tuple[tuple[int, ...], ...], p: int) -> list[int]:
    n = len(rows)
    a = [[x % p for x in row] for row in rows]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if a[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            a[piv], a[j + 1] = a[j + 1], a[piv]
            for row in a:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        inv = pow(a[j + 1][j], -1, p)
        pivot_row = a[j + 1]
        for i in range(j + 2, n):
            u = a[i][j] * inv % p
            if not u:
                continue
            ri = a[i]
            for k in range(n):
                ri[k] = (ri[k] - u * pivot_row[k]) % p
            for row in a:
                row[j + 1] = (row[j + 1] + u * row[i]) % p
    # p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}(x)
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[-1]
        new = [0] + prev
        hkk = a[k - 1][k - 1]
        for t, c in enumerate(prev):
            new[t] = (new[t] - hkk * c) % p
        sub = 1
        for i in range(k - 1, 0, -1):
            sub = sub * a[i][i - 1] % p
            if not sub:
                break
            c = a[i - 1][k - 1] * sub % p
            if c:
                for t, q in enumerate(polys[i - 1]):
                    new[t] = (new[t] - c * q) % p
        polys.append(new)
    return polys[-1]


def _char_poly_modular(m: IntMatrix) -> IntPolynomial:
    bound = 2 * _coefficient_bound(m) + 1
    modulus = 1
    coeffs = [0] * (m.n + 1)
    index = 0
    while modulus < bound:
        p = _prime(index)
        index += 1
        residues = _charpoly_mod(m.rows, p)
        # CRT: lift coeffs (mod modulus) and residues (mod p) to mod modulus*p
        inv = pow(modulus % p, -1, p)
        for t in range(m.n + 1):
            delta = (residues[t] - coeffs[t]) * inv % p
            coeffs[t] += modulus * delta
        modulus *= p
    half = modulus // 2
    return IntPolynomial(tuple(c - modulus if c > half else c for c in coeffs))


def _char_poly_interpolated(m: IntMatrix) -> IntPolynomial:
    n = m.n
    values = []
    for x in range(n + 1):
        shifted = [[(x if i == j else 0) - m.rows[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(shifted))
    # forward differences at 0..n give the binomial-basis coefficients
    diffs = []
    col = values[:]
    while col:
        diffs.append(col[0])
        col = [col[i + 1] - col[i] for i in range(len(col) - 1)]
    coeffs = [Fraction(0)] * (n + 1)
    falling = [Fraction(1)]  # x (x-1) ... (x-k+1) / k!
    for k, d in enumerate(diffs):
        for t, c in enumerate(falling):
            coeffs[t] += d * c
        nxt = [Fraction(0)] * (len(falling) + 1)
        for t, c in enumerate(falling):
            nxt[t + 1] += c / (k + 1)
            nxt[t] -= c * k / (k + 1)
        falling = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise SpectrumError("interpolated characteristic polynomial is not integral")
    return IntPolynomial(tuple(int(c) for c in coeffs))


def char_poly(m: IntMatrix, method: str = "modular") -> IntPolynomial:
    """``det(xI - m)`` with exact integer coefficients (monic).

    ``method`` is ``"modular"`` (Hessenberg mod primes + CRT) or
    ``"interpolation"`` (Bareiss at ``0..n`` + exact interpolation).
    """
    if m.n == 0:
        return IntPolynomial((1,))
    if method == "modular":
        return _char_poly_modular(m)
    if method == "interpolation":
        return _char_poly_interpolated(m)
    raise ValueError(f"unknown char_poly method {method!r}")


# -- spectra -------------------------------------------------------------------


def _divide_linear(coeffs: list[int], root: int) -> tuple[list[int], int]:
    """Synthetic division by ``(x - root)``; returns quotient and remainder."""
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + carry * root
        out[k - 1] = carry
    return out, coeffs[0] + carry * root


def integer_spectrum(p: IntPolynomial, root_bound: int) -> Spectrum:
    """Peel off every integer root in ``[0, root_bound]`` by repeated synthetic division."""
    if p.leading != 1:
        raise ValueError("integer_spectrum expects a monic polynomial")
    coeffs = list(p.coeffs)
    pairs = []
    for r in range(root_bound + 1):
        mult = 0
        while len(coeffs) > 1:
            q, rem = _divide_linear(coeffs, r)
            if rem:
                break
            coeffs = q
            mult += 1
        if mult:
            pairs.append((r, mult))
    residual = IntPolynomial(tuple(coeffs))
    return Spectrum.from_multiplicities(pairs, None if residual.degree == 0 else residual)


def matrix_spectrum(m: IntMatrix, root_bound: int | None = None, method: str = "modular") -> Spectrum:
    """Characteristic polynomial + integer roots, with the trace identity asserted.

    Without ``root_bound`` the Gershgorin radius is used, which covers every
    real eigenvalue.
    """
    if root_bound is None:
        root_bound = max((sum(abs(x) for x in row) for row in m.rows), default=0)
    spec = integer_spectrum(char_poly(m, method), root_bound)
    if spec.size != m.n:
        raise SpectrumError(f"spectrum has {spec.size} eigenvalues for a {m.n}x{m.n} matrix")
    if spec.residual is None and spec.trace() != m.trace():
        raise SpectrumError(f"eigenvalue sum {spec.trace()} differs from trace {m.trace()}")
    return spec


def laplacian_spectrum(g: Graph, method: str = "modular") -> Spectrum:
    return matrix_spectrum(laplacian(g), g.n, method)


def distance_laplacian_spectrum(g: Graph, method: str = "modular") -> Spectrum:
    """dL spectrum; searches ``[0, 2n]`` when diameter <= 2, else the Gershgorin range."""
    m = distance_laplacian(g)
    bound = 2 * g.n if all(x >= -2 for row in m.rows for x in row) else None
    return matrix_spectrum(m, bound, method)


# -- spanning trees ------------------------------------------------------------


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: determinant of the Laplacian with row/column 0 removed."""
    lap = laplacian(g).rows
    reduced = [row[1:] for row in lap[1:]]
    return bareiss_det(reduced)


def spanning_tree_count_from_spectrum(s: Spectrum, n: int) -> int:
    """Product of the non-zero Laplacian eigenvalues divided exactly by ``n``."""
    if not s.fully_factored:
        raise SpectrumError("spectrum has an unfactored residual")
    if not s.pairs or s.pairs[-1][0] != 0:
        raise SpectrumError("a Laplacian spectrum must contain 0")
    if s.size != n:
        raise SpectrumError(f"spectrum has {s.size} eigenvalues, expected {n}")
    if s.multiplicity(0) > 1:
        return 0
    product = 1
    for value, mult in s.pairs:
        if value:
            product *= value**mult
    count, rem = divmod(product, n)
    if rem:
        raise SpectrumError(f"eigenvalue product {product} is not divisible by n={n}")
    return count


def dl_spectrum_via_transfer(laplacian_spectrum: Spectrum, n: int) -> Spectrum:
    """Map each non-zero Laplacian eigenvalue ``lam`` to ``2n - lam``; valid for diameter <= 2.

    A residual factor is carried across by the same substitution, so graphs
    with irrational Laplacian eigenvalues transfer too.
    """
    zero = laplacian_spectrum.multiplicity(0)
    if zero != 1:
        raise SpectrumError(f"eigenvalue 0 has multiplicity {zero}; source graph is not connected")
    return Spectrum.from_multiplicities(
        [(0, 1)] + [(2 * n - v, m) for v, m in laplacian_spectrum.pairs if v != 0],
        None if laplacian_spectrum.residual is None else laplacian_spectrum.residual.reflect(2 * n),
    )
