"""Brute-force reference implementations and agreement checks.

Everything here recomputes, by exhaustive search, quantities that the
fast modules obtain in closed form: point and line lists, prefix counts,
code parameters and the exact minimum distance.  The fast paths must
agree with these oracles on every feasible instance; ``selftest`` runs
the standard agreement suites and reports one record per check.

All exhaustive scans are protected by hard feasibility guards that raise
``GuardError`` instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .codec import LineCode, code_params
from .gf import GF
from .geometry import (is_isotropic_line, is_isotropic_point,
                       is_left_normalized, num_lines, num_points, rref_pair)
from .line_enum import count_lines_with_prefix, line_rank, line_unrank
from .point_enum import count_points_with_prefix, point_rank, point_unrank

ENUM_GUARD = 1 << 32       # max q^(2m) for exhaustive vector scans
DISTANCE_GUARD = 10 ** 9   # max q^(2K) * N symbol operations
MATRIX_GUARD = 10 ** 7     # max K * N entries for an explicit generator


class GuardError(RuntimeError):
    """An exhaustive computation would exceed its feasibility guard."""


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    q: int
    m: int
    oracle_value: object
    fast_value: object

    @property
    def agree(self) -> bool:
        return self.oracle_value == self.fast_value

    def __str__(self):
        flag = "agree" if self.agree else "DISAGREE"

        def show(v):
            if isinstance(v, list) and len(v) > 8:
                return f"<{len(v)} values>"
            return repr(v)

        return (f"{self.quantity} (q={self.q}, m={self.m}): "
                f"oracle={show(self.oracle_value)} "
                f"fast={show(self.fast_value)} [{flag}]")


def _check_enum_guard(F: GF, m: int) -> None:
    if F.order ** m > ENUM_GUARD:
        raise GuardError(
            f"exhaustive scan of {F.order}^{m} vectors exceeds the guard")


def all_points_brute(F: GF, m: int) -> list[tuple]:
    """All normalized isotropic points, in lexicographic encoding order."""
    _check_enum_guard(F, m)
    out = []
    for vec in product(range(F.order), repeat=m):
        if any(vec) and is_left_normalized(vec) and is_isotropic_point(F, vec):
            out.append(vec)
    return out  # product() already yields in lexicographic order


def _column_key(A, B) -> tuple:
    return tuple(x for col in zip(A, B) for x in col)


def all_lines_brute(F: GF, m: int) -> list[tuple[tuple, tuple]]:
    """All totally isotropic lines as RREF pairs, column-lexicographic."""
    points = all_points_brute(F, m)
    seen = set()
    for i, u in enumerate(points):
        for v in points[i + 1:]:
            if not is_isotropic_line(F, u, v):
                continue
            (A, B), _ = rref_pair(F, u, v)
            seen.add((A, B))
    return sorted(seen, key=lambda ab: _column_key(*ab))


def count_points_with_prefix_brute(F: GF, m: int, D, points=None) -> int:
    """Exhaustive count of normalized isotropic points with the prefix."""
    if points is None:
        points = all_points_brute(F, m)
    D = tuple(D)
    t = len(D)
    return sum(1 for p in points if p[:t] == D)


def count_lines_with_prefix_brute(F: GF, m: int, A, B, lines=None) -> int:
    """Exhaustive count of isotropic RREF lines with the column prefix."""
    if lines is None:
        lines = all_lines_brute(F, m)
    A, B = tuple(A), tuple(B)
    t = len(A)
    return sum(1 for (LA, LB) in lines if LA[:t] == A and LB[:t] == B)


def generator_matrix(F: GF, m: int) -> list[list[int]]:
    """Explicit K x N generator matrix; row i is encode(unit message i)."""
    code = LineCode(F, m)
    k, n = code.params.k, code.params.n
    if k * n > MATRIX_GUARD:
        raise GuardError(f"generator matrix of {k}x{n} entries exceeds guard")
    rows = []
    for i in range(k):
        w = [0] * k
        w[i] = 1
        rows.append(code.encode(w))
    return rows


def min_distance_brute(F: GF, m: int) -> int:
    """Exact minimum distance by scanning every nonzero codeword.

    The message space is split in half and all codewords are formed as
    sums of one codeword from each half (meet-in-the-middle), with field
    addition vectorized through an addition table.
    """
    code = LineCode(F, m)
    k, n = code.params.k, code.params.n
    if F.order ** k * n > DISTANCE_GUARD:
        raise GuardError(
            f"{F.order}^{k} codewords x {n} components exceeds the guard")
    gen = generator_matrix(F, m)
    order = F.order
    dtype = np.uint8 if order <= 256 else np.uint16
    add = np.empty((order, order), dtype=dtype)
    for x in range(order):
        for y in range(order):
            add[x, y] = F.add(x, y)

    def span(rows) -> np.ndarray:
        """All linear combinations of the given generator rows."""
        acc = np.zeros((1, n), dtype=dtype)
        for row in rows:
            mults = np.array([[F.mul(a, g) for g in row]
                              for a in range(order)], dtype=dtype)
            acc = add[acc[:, None, :], mults[None, :, :]].reshape(-1, n)
        return acc

    k1 = k // 2
    left = span(gen[:k1])
    right = span(gen[k1:])
    best = n + 1
    for j in range(len(right)):
        weights = np.count_nonzero(add[left, right[j][None, :]], axis=1)
        if j == 0:
            weights[0] = n + 1  # the zero codeword
        w = int(weights.min())
        if w < best:
            best = w
    return best


# ----------------------------------------------------------------------
# Agreement suites
# ----------------------------------------------------------------------

def _suite_instance(F: GF, m: int, check_prefixes: bool) -> list[OracleReport]:
    q = F.q
    points = all_points_brute(F, m)
    lines = all_lines_brute(F, m)
    reports = [
        OracleReport("point count", q, m, len(points), num_points(q, m)),
        OracleReport("line count", q, m, len(lines), num_lines(q, m)),
        OracleReport("point order isomorphism", q, m, points,
                     [point_unrank(F, m, i) for i in range(len(points))]),
        OracleReport("line order isomorphism", q, m, lines,
                     [line_unrank(F, m, i) for i in range(len(lines))]),
        OracleReport("point rank inverse", q, m, list(range(len(points))),
                     [point_rank(F, m, p) for p in points]),
        OracleReport("line rank inverse", q, m, list(range(len(lines))),
                     [line_rank(F, m, *ln) for ln in lines]),
    ]
    if m >= 4:
        params = code_params(m, q)
        reports.append(OracleReport("code length vs line count", q, m,
                                    len(lines), params.n))
    if check_prefixes:
        bf = []
        fast = []
        for t in range(m + 1):
            for D in product(range(F.order), repeat=t):
                bf.append(count_points_with_prefix_brute(F, m, D, points))
                fast.append(count_points_with_prefix(F, m, D))
        reports.append(OracleReport("point prefix counts", q, m, bf, fast))
        seen: dict[tuple, int] = {}
        for A, B in lines:
            for t in range(m + 1):
                key = (A[:t], B[:t])
                seen[key] = seen.get(key, 0) + 1
        bfl = list(seen.values())
        fastl = [count_lines_with_prefix(F, m, A, B) for A, B in seen]
        reports.append(OracleReport("line prefix counts", q, m, bfl, fastl))
    return reports


def selftest(level: str = "fast") -> list[OracleReport]:
    """Run the standard oracle agreement suites.

    ``fast`` covers (m, q) = (4, 2) and (5, 2) including all prefix
    counts and the exhaustive minimum distance at (4, 2); ``full`` adds
    the (6, 2) line suite and the (5, 2) minimum distance.
    """
    if level not in ("fast", "full"):
        raise ValueError(f"unknown selftest level {level!r}")
    F2 = GF(2, 1)
    reports = []
    reports += _suite_instance(F2, 4, check_prefixes=True)
    reports += _suite_instance(F2, 5, check_prefixes=True)
    reports.append(OracleReport("minimum distance", 2, 4,
                                min_distance_brute(F2, 4),
                                code_params(4, 2).d_min))
    if level == "full":
        reports += _suite_instance(F2, 6, check_prefixes=False)
        reports.append(OracleReport("minimum distance", 2, 5,
                                    min_distance_brute(F2, 5),
                                    code_params(5, 2).d_min))
    return reports
