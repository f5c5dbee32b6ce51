"""Line Hermitian Grassmann codes: parameters, encoder, local decoder and
a majority-vote error corrector.

A message of length K = m(m-1)/2 fills the strict upper triangle of an
m x m matrix row by row; the induced alternating Gram matrix W evaluates
each codeword component as A W B^T on the RREF rows (A; B) of the line
with the matching rank.  No generator matrix is ever materialized: both
the encoder and the decoder address components through the line
enumerator.

The decoder recovers every upper-triangle entry of W from O(K) codeword
components; the corrector re-derives a single component from triangles of
lines inside each totally isotropic plane through its line and takes a
majority vote across the pencil of such planes.

Codewords may be passed as sequences, mappings from 1-based component
index to symbol, or callables; the decoder and corrector only read the
components they actually probe, which keeps them usable at lengths where
materializing a full codeword is too expensive.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from .gf import GF
from .geometry import (form, is_isotropic_line, num_lines, num_points,
                       rref_matrix, rref_pair)
from .line_enum import line_rank, line_unrank
from .point_enum import point_unrank


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d_min: int
    n_points: int
    n_lines: int


def code_params(m: int, q: int) -> CodeParams:
    """[N, K, d_min] of the line code on V(m, q^2), plus the space sizes."""
    if m < 4:
        raise ValueError("code requires m >= 4")
    s = (-1) ** (m - 1)
    numer = ((q ** m + s) * (q ** (m - 1) - s)
             * (q ** (m - 2) + s) * (q ** (m - 3) - s))
    denom = (q * q - 1) ** 2 * (q * q + 1)
    assert numer % denom == 0
    n = numer // denom
    assert n == num_lines(q, m)
    k = m * (m - 1) // 2
    if m in (4, 6):
        d = q ** (4 * m - 12) - q ** (2 * m - 6)
    elif m % 2 == 0:
        d = q ** (4 * m - 12)
    else:
        d = q ** (4 * m - 12) - q ** (3 * m - 9)
    return CodeParams(n=n, k=k, d_min=d, n_points=num_points(q, m),
                      n_lines=num_lines(q, m))


def message_index(m: int, i: int, j: int) -> int:
    """0-based message position of the upper-triangle entry (i, j), 1-based."""
    if not 1 <= i < j <= m:
        raise ValueError(f"need 1 <= i < j <= m, got ({i}, {j})")
    return (i - 1) * (2 * m - i) // 2 + (j - i) - 1


@dataclass(frozen=True)
class PlaneProbe:
    """One plane of the pencil through a line, with its three probe reads.

    Each read is (component_index, det, coeffs): the 1-based codeword
    index of a probe line, the basis-change determinant rescaling that
    read, and the row of the 3x3 system expressing the read in the
    unknowns (w(u,v), w(u,apex), w(v,apex)).
    """
    apex: tuple
    reads: tuple


# plane-coordinate point pairs spanning candidate probe lines (u, v, apex)
_TRIANGLE_CANDIDATES = (
    ((1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (0, 0, 1)),
    ((1, 0, 1), (0, 1, 1)),
    ((1, 1, 0), (0, 0, 1)),
    ((1, 0, 1), (0, 1, 0)),
    ((1, 0, 0), (0, 1, 1)),
)


class LineCode:
    """Encoder/decoder/corrector bound to one field and dimension."""

    def __init__(self, field: GF, m: int):
        self.F = field
        self.m = m
        self.params = code_params(m, field.q)
        self._line_cache: dict[int, tuple[tuple, tuple]] = {}
        self._rank_cache: dict[tuple[tuple, tuple], int] = {}
        self._points: list[tuple] | None = None

    # -- enumerator access ---------------------------------------------

    def line(self, r: int) -> tuple[tuple, tuple]:
        hit = self._line_cache.get(r)
        if hit is None:
            hit = line_unrank(self.F, self.m, r)
            self._line_cache[r] = hit
        return hit

    def rank_of(self, A, B) -> int:
        key = (tuple(A), tuple(B))
        hit = self._rank_cache.get(key)
        if hit is None:
            hit = line_rank(self.F, self.m, *key)
            self._rank_cache[key] = hit
        return hit

    # -- encoding -------------------------------------------------------

    def _gram(self, w) -> list[list[int]]:
        F, m = self.F, self.m
        if len(w) != self.params.k:
            raise ValueError(f"message length {len(w)} != K={self.params.k}")
        W = [[0] * (m + 1) for _ in range(m + 1)]
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                v = F.element(w[message_index(m, i, j)])
                W[i][j] = v
                W[j][i] = F.neg(v)
        return W

    def _omega(self, W, X, Y) -> int:
        F, m = self.F, self.m
        acc = 0
        for r in range(m):
            xr = X[r]
            yr = Y[r]
            if not xr and not yr:
                continue
            for s in range(r + 1, m):
                wrs = W[r + 1][s + 1]
                if not wrs:
                    continue
                minor = F.sub(F.mul(xr, Y[s]), F.mul(X[s], yr))
                if minor:
                    acc = F.add(acc, F.mul(wrs, minor))
        return acc

    def _check_index(self, i: int) -> int:
        if not 1 <= i <= self.params.n:
            raise ValueError(f"component index {i} out of range")
        return i

    def eval_component(self, w, i: int) -> int:
        """Single codeword component, via the enumerator only."""
        self._check_index(i)
        A, B = self.line(i - 1)
        return self._omega(self._gram(w), A, B)

    def codeword_function(self, w):
        """Lazy codeword: a callable from 1-based index to component.

        The Gram matrix is built once, so repeated reads cost only one
        bilinear evaluation each; nothing of length N is materialized.
        """
        W = self._gram(w)
        return lambda i: self._omega(W, *self.line(self._check_index(i) - 1))

    def encode(self, w) -> list[int]:
        W = self._gram(w)
        return [self._omega(W, *self.line(r)) for r in range(self.params.n)]

    # -- reading received vectors --------------------------------------

    def _reader(self, c):
        if callable(c):
            return c
        if isinstance(c, Mapping):
            return lambda i: c[i]
        if isinstance(c, Sequence):
            if len(c) != self.params.n:
                raise ValueError(
                    f"codeword length {len(c)} != N={self.params.n}")
            return lambda i: c[i - 1]
        raise TypeError("codeword must be a sequence, mapping or callable")

    def _read_line(self, read, u, v) -> int:
        """Read w(u, v) for an arbitrary isotropic basis (u, v)."""
        F = self.F
        assert is_isotropic_line(F, u, v)
        (A, B), det = rref_pair(F, u, v)
        return F.mul(det, F.element(read(self.rank_of(A, B) + 1)))

    # -- decoding -------------------------------------------------------

    def decode(self, c) -> list[int]:
        """Recover the message from a clean codeword by O(K) probes."""
        F, m = self.F, self.m
        read = self._reader(c)
        big = m if m % 2 else m + 1  # ambient odd dimension
        off = big - m

        def unit(i_l: int) -> tuple:
            # lifted index -> original basis vector
            return tuple(1 if k == i_l - off - 1 else 0 for k in range(m))

        mm: dict[tuple[int, int], int] = {}

        # direct reads: coordinate lines that are totally isotropic
        for i_l in range(1 + off, big + 1):
            if i_l < 2:
                continue
            for j_l in range(i_l + 1, big + 1):
                if i_l % 2 == 0 and j_l == i_l + 1:
                    continue  # hyperbolic pair, handled by the 2x2 systems
                mm[(i_l, j_l)] = self._read_line(read, unit(i_l), unit(j_l))

        # hyperbolic pairs: two conjugate probe lines give a 2x2 system in
        # the pair entry and the next pair entry
        sigma = next(x for x in range(F.order)
                     if not F.in_subfield(x) and F.trace(x) != 0)
        beta = F.neg(F.trace(sigma))
        g = F.add(sigma, beta)
        sigma_q = F.conj(sigma)
        g_q = F.conj(g)
        det_s = F.sub(F.mul(g, sigma_q), F.mul(g_q, sigma))
        assert det_s != 0
        for i_l in range(2, big - 2, 2):
            rhs = []
            for sg, gg in ((sigma, g), (sigma_q, g_q)):
                u = self._combine(((1, unit(i_l)), (gg, unit(i_l + 3))))
                v = self._combine(((sg, unit(i_l + 1)), (1, unit(i_l + 2))))
                val = self._read_line(read, u, v)
                k1 = mm[(i_l, i_l + 2)]
                k2 = mm[(i_l + 1, i_l + 3)]
                rhs.append(F.add(F.sub(val, k1), F.mul(F.mul(gg, sg), k2)))
            # [[sigma, -g], [sigma_q, -g_q]] (X, Y)^T = rhs
            x = F.mul(F.inv(det_s),
                      F.sub(F.mul(g, rhs[1]), F.mul(g_q, rhs[0])))
            y = F.mul(F.inv(det_s),
                      F.sub(F.mul(sigma, rhs[1]), F.mul(sigma_q, rhs[0])))
            mm[(i_l, i_l + 1)] = x
            mm[(i_l + 2, i_l + 3)] = y

        if off == 0:
            # first row of the Gram matrix: probe through an isotropic
            # vector supported on coordinates {1, 2, 3} (or {1, 4, 5})
            lam = next(x for x in range(F.order)
                       if F.trace(x) == F.neg(1))
            u = self._combine(((1, unit(1)), (lam, unit(2)), (1, unit(3))))
            for j in range(4, m + 1):
                val = self._read_line(read, u, unit(j))
                mm[(1, j)] = F.sub(val, F.add(F.mul(lam, mm[(2, j)]),
                                              mm[(3, j)]))
            u2 = self._combine(((1, unit(1)), (lam, unit(4)), (1, unit(5))))
            for j in (2, 3):
                val = self._read_line(read, u2, unit(j))
                mm[(1, j)] = F.add(val, F.add(F.mul(lam, mm[(j, 4)]),
                                              mm[(j, 5)]))

        w = [0] * self.params.k
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                w[message_index(m, i, j)] = mm[(i + off, j + off)]
        return w

    def _combine(self, terms) -> tuple:
        F, m = self.F, self.m
        out = [0] * m
        for coeff, vec in terms:
            for k in range(m):
                if vec[k]:
                    out[k] = F.add(out[k], F.mul(coeff, vec[k]))
        return tuple(out)

    # -- error correction ----------------------------------------------

    def _all_points(self) -> list[tuple]:
        if self._points is None:
            self._points = [point_unrank(self.F, self.m, r)
                            for r in range(self.params.n_points)]
        return self._points

    def _pencil(self, A, B) -> list[tuple]:
        """Apex points, one per totally isotropic plane through <A, B>."""
        F = self.F
        seen: dict[tuple, tuple] = {}
        for p in self._all_points():
            if form(F, p, A) or form(F, p, B):
                continue
            reduced = rref_matrix(F, [A, B, p])
            if len(reduced) != 3:
                continue  # p lies on the line itself
            key = tuple(reduced)
            if key not in seen:
                seen[key] = p
        return list(seen.values())

    def probe_plan(self, x: int) -> list[PlaneProbe]:
        """Planes and probe reads used to certify component x (1-based)."""
        if self.m < 6:
            raise ValueError("correction requires totally isotropic planes "
                             "(m >= 6)")
        if not 1 <= x <= self.params.n:
            raise ValueError(f"component index {x} out of range")
        F = self.F
        u, v = self.line(x - 1)
        apexes = self._pencil(u, v)
        assert apexes, "empty pencil"
        plan = []
        for wpt in apexes:
            triangle = self._triangle(u, v, wpt)
            reads = []
            for (p1, p2), coeffs in triangle:
                vec1 = self._combine(((p1[0], u), (p1[1], v), (p1[2], wpt)))
                vec2 = self._combine(((p2[0], u), (p2[1], v), (p2[2], wpt)))
                assert is_isotropic_line(F, vec1, vec2)
                (ra, rb), det = rref_pair(F, vec1, vec2)
                idx = self.rank_of(ra, rb) + 1
                assert idx != x
                reads.append((idx, det, coeffs))
            plan.append(PlaneProbe(apex=wpt, reads=tuple(reads)))
        return plan

    def _triangle(self, u, v, wpt):
        """First candidate triple of plane lines with a nonsingular system."""
        F = self.F
        rows = []
        for pair in _TRIANGLE_CANDIDATES:
            p1, p2 = pair
            coeffs = (
                F.sub(F.mul(p1[0], p2[1]), F.mul(p1[1], p2[0])),
                F.sub(F.mul(p1[0], p2[2]), F.mul(p1[2], p2[0])),
                F.sub(F.mul(p1[1], p2[2]), F.mul(p1[2], p2[1])),
            )
            rows.append((pair, coeffs))
        for triple in combinations(rows, 3):
            mat = [list(c) for _, c in triple]
            if self._det3(mat) != 0:
                return list(triple)
        raise AssertionError("no nonsingular probe triangle found")

    def _det3(self, mat) -> int:
        F = self.F
        a, b, c = mat[0]
        d, e, f = mat[1]
        g, h, i = mat[2]
        t1 = F.mul(a, F.sub(F.mul(e, i), F.mul(f, h)))
        t2 = F.mul(b, F.sub(F.mul(d, i), F.mul(f, g)))
        t3 = F.mul(c, F.sub(F.mul(d, h), F.mul(e, g)))
        return F.add(F.sub(t1, t2), t3)

    def _solve3(self, mat, rhs) -> list[int]:
        F = self.F
        a = [list(row) + [r] for row, r in zip(mat, rhs)]
        for col in range(3):
            piv = next(r for r in range(col, 3) if a[r][col])
            a[col], a[piv] = a[piv], a[col]
            c = F.inv(a[col][col])
            a[col] = [F.mul(c, x) for x in a[col]]
            for r in range(3):
                if r != col and a[r][col]:
                    f = a[r][col]
                    a[r] = [F.sub(x, F.mul(f, y))
                            for x, y in zip(a[r], a[col])]
        return [a[r][3] for r in range(3)]

    def correct(self, received, indices=None) -> dict[int, int]:
        """Majority-vote value of each requested component.

        Ties (no strict plurality across the pencil) keep the received
        value.  Only the probed components of ``received`` are read.
        """
        F = self.F
        read = self._reader(received)
        if indices is None:
            indices = range(1, self.params.n + 1)
        out = {}
        for x in indices:
            votes = []
            for plane in self.probe_plan(x):
                mat = [coeffs for _, _, coeffs in plane.reads]
                rhs = [F.mul(det, F.element(read(idx)))
                       for idx, det, _ in plane.reads]
                votes.append(self._solve3(mat, rhs)[0])
            tally = Counter(votes).most_common()
            if len(tally) == 1 or tally[0][1] > tally[1][1]:
                out[x] = tally[0][0]
            else:
                out[x] = F.element(read(x))
        return out
