"""Prefix counting and rank/unrank for isotropic points.

Points are represented by left-normalized coordinate vectors (first
nonzero entry 1).  ``count_points_with_prefix`` returns, in closed form,
how many such points start with a given prefix; ranking sums these counts
over lexicographically smaller prefixes and unranking inverts the sum
greedily.  Even dimensions delegate to the next odd dimension on lifted
vectors, whose ranks coincide.
"""

from __future__ import annotations

from .gf import GF
from .geometry import (herm_product, is_isotropic_point, is_left_normalized,
                       lift_vector, num_points)


def count_points_with_prefix(F: GF, m: int, D) -> int:
    """Number of normalized isotropic points of dimension m with prefix D."""
    if m % 2 == 0:
        return count_points_with_prefix(F, m + 1, lift_vector(D))
    D = tuple(D)
    t = len(D)
    if t > m:
        raise ValueError(f"prefix longer than m={m}")
    return _point_completions(F, m, D)


def _point_completions(F: GF, m: int, D: tuple,
                       dd: int | None = None) -> int:
    """Count completions; dd, when given, is the partial form value of D.

    Passing dd lets recursive callers that maintain form values
    incrementally avoid the linear-time recomputation.
    """
    q = F.q
    t = len(D)
    if not is_left_normalized(D):
        return 0
    if t % 2 == 1:
        if not any(D):
            return num_points(q, m - t)
        s = (q * q - 1) * num_points(q, m - t) + 1
        if dd is None:
            dd = herm_product(F, D, D, t)
        if dd == 0:
            return s
        numer = q ** (2 * (m - t)) - s
        assert numer % (q - 1) == 0
        return numer // (q - 1)
    # t even (t < m since m is odd)
    if not any(D):
        return (_point_completions(F, m, D + (0,))
                + _point_completions(F, m, D + (1,)))
    if D[-1] == 0:
        # appending a zero leaves the partial form value unchanged
        return q * q * _point_completions(F, m, D + (0,), dd)
    # trailing entry nonzero: the next coordinate absorbs any completion
    return q ** (2 * (m - t - 1) + 1)


def point_rank(F: GF, m: int, X) -> int:
    """Rank of a normalized isotropic point in lexicographic order."""
    X = tuple(X)
    if len(X) != m:
        raise ValueError(f"vector length {len(X)} != m={m}")
    if m % 2 == 0:
        return point_rank(F, m + 1, lift_vector(X))
    if not any(X) or not is_left_normalized(X):
        raise ValueError("vector is not a normalized point")
    if not is_isotropic_point(F, X):
        raise ValueError("point is not isotropic")
    total = 0
    for j in range(m):
        prefix = X[:j]
        for x in range(X[j]):
            total += _point_completions(F, m, prefix + (x,))
    return total


def point_unrank(F: GF, m: int, i: int) -> tuple:
    """The normalized isotropic point with the given lexicographic rank."""
    n = num_points(F.q, m)
    if not 0 <= i < n:
        raise ValueError(f"rank {i} out of range [0, {n})")
    if m % 2 == 0:
        X = point_unrank(F, m + 1, i)
        assert X[0] == 0
        return X[1:]
    word: tuple = ()
    for _ in range(m):
        run = 0
        chosen = None
        chosen_run = 0
        for y in range(F.order):
            c = _point_completions(F, m, word + (y,))
            if c > 0 and run <= i:
                chosen, chosen_run = y, run
            run += c
            if run > i:
                break
        assert chosen is not None
        word += (chosen,)
        i -= chosen_run
    return word
