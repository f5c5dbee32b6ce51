"""Prefix counting and rank/unrank for totally isotropic lines.

A line is represented by the unique 2 x m row-reduced echelon matrix
spanning it; prefixes are column prefixes (A_t; B_t).  The alphabet for
ranking is the set of q^4 columns (a; b), ordered lexicographically by the
element order, so the rank order is column-lexicographic on RREF matrices.

``count_lines_with_prefix`` is total: column prefixes that cannot start
the RREF of any rank-2 matrix count 0.  Internally the recursion works on
the completion-count semantics, which is invariant under row operations on
the prefix; the echelon-shape filter is applied once at the public entry.
Even dimensions delegate to the next odd dimension via a zero first
column.

The recursion threads the three pairwise partial form values (A with A,
B with B, A with B) through every call: appending a column updates them
in constant time, so a single count costs O(m^2) field multiplications
and a full rank O(q^4 m^3).
"""

from __future__ import annotations

from .gf import GF
from .geometry import (herm_product, is_isotropic_line, is_rref_pair,
                       lift_line, num_lines, num_points)
from .point_enum import _point_completions


def _prefix_feasible(A, B, t: int, m: int) -> bool:
    """Whether some rank-2 RREF 2 x m matrix starts with columns (A; B)."""
    ia = next((i for i, a in enumerate(A) if a), None)
    ib = next((i for i, b in enumerate(B) if b), None)
    if ia is not None and A[ia] != 1:
        return False
    if ib is not None:
        if B[ib] != 1:
            return False
        if ia is None or ia >= ib:
            return False
        if A[ib] != 0:
            return False
    if t == m and (ia is None or ib is None):
        return False
    return True


def _extend_forms(F: GF, t_new: int, xp, yp, x, y, aa, bb, ab):
    """Partial form values after appending column (x; y) at position t_new.

    (xp; yp) is the previous column.  Positions follow the odd-dimension
    pairing: position 1 is self-paired, even positions wait for their
    partner, odd positions >= 3 complete the pair with the previous one.
    """
    if t_new == 1:
        return (F.mul(F.conj(x), x), F.mul(F.conj(y), y),
                F.mul(F.conj(x), y))
    if t_new % 2 == 0:
        return aa, bb, ab
    aa = F.add(aa, F.add(F.mul(F.conj(xp), x), F.mul(F.conj(x), xp)))
    bb = F.add(bb, F.add(F.mul(F.conj(yp), y), F.mul(F.conj(y), yp)))
    ab = F.add(ab, F.add(F.mul(F.conj(xp), y), F.mul(F.conj(x), yp)))
    return aa, bb, ab


def count_lines_with_prefix(F: GF, m: int, A, B) -> int:
    """Number of isotropic lines whose RREF starts with columns (A; B)."""
    if m % 2 == 0:
        return count_lines_with_prefix(F, m + 1, *lift_line(A, B))
    A, B = tuple(A), tuple(B)
    if len(A) != len(B):
        raise ValueError("prefix rows of unequal length")
    t = len(A)
    if t > m:
        raise ValueError(f"prefix longer than m={m}")
    if not _prefix_feasible(A, B, t, m):
        return 0
    aa = herm_product(F, A, A, t)
    bb = herm_product(F, B, B, t)
    ab = herm_product(F, A, B, t)
    return _line_completions(F, m, A, B, aa, bb, ab)


def _line_completions(F: GF, m: int, A: tuple, B: tuple,
                      aa: int, bb: int, ab: int) -> int:
    if len(A) % 2 == 0:
        return _line_completions_even(F, m, A, B, aa, bb, ab)
    return _line_completions_odd(F, m, A, B, aa, bb, ab)


def _line_completions_even(F: GF, m: int, A, B, aa, bb, ab) -> int:
    q = F.q
    t = len(A)
    if t == 0:
        return num_lines(q, m)
    a, b = A[-1], B[-1]
    if a and b:
        # row operation forcing the trailing first-row entry to zero;
        # leaves the completion count unchanged
        lam = F.mul(a, F.inv(b))
        A = tuple(F.sub(x, F.mul(lam, y)) for x, y in zip(A, B))
        lam_q = F.conj(lam)
        ba = F.conj(ab)
        aa = F.add(F.sub(F.sub(aa, F.mul(lam, ab)), F.mul(lam_q, ba)),
                   F.mul(F.mul(lam_q, lam), bb))
        ab = F.sub(ab, F.mul(lam_q, bb))
        a = 0
    a_zero_row = not any(A)
    b_zero_row = not any(B)
    if a_zero_row and b_zero_row:
        return num_points(q, m - t - 1) + q ** 4 * num_lines(q, m - t - 1)
    if a and b_zero_row:
        mu = num_points(q, m - t - 1)
        return q ** (2 * m - 2 * t - 3) * mu if mu else 0
    if a or b:
        # one trailing entry nonzero, the other row also to be completed
        prod = (_point_completions(F, m, A, aa)
                * _point_completions(F, m, B, bb))
        assert prod % (q * q) == 0
        return prod // (q * q)
    # a == b == 0; appending zeros never changes the partial form values
    if not a_zero_row and not b_zero_row:
        return q ** 4 * _line_completions(F, m, A + (0,), B + (0,),
                                          aa, bb, ab)
    if not a_zero_row:
        return (q * q * _line_completions(F, m, A + (0,), B + (0,), aa, 0, 0)
                + _line_completions(F, m, A + (0,), B + (1,), aa, 0, 0))
    raise AssertionError("zero first row above a nonzero second row")


def _line_completions_odd(F: GF, m: int, A, B, aa, bb, ab) -> int:
    q = F.q
    t = len(A)
    if t == m:
        if not _prefix_feasible(A, B, m, m):
            return 0
        return 1 if aa == 0 and bb == 0 and ab == 0 else 0
    a_zero_row = not any(A)
    b_zero_row = not any(B)
    if a_zero_row and b_zero_row:
        return num_lines(q, m - t)
    if b_zero_row:
        zero = (aa, 0, 0)
        return ((q * q - 1) * _line_completions(F, m, A + (1,), B + (0,),
                                                *zero)
                + _line_completions(F, m, A + (0,), B + (1,), *zero)
                + q * q * _line_completions(F, m, A + (0, 0), B + (0, 0),
                                            *zero)
                + _line_completions(F, m, A + (0, 0), B + (0, 1), *zero))
    if a_zero_row:
        raise AssertionError("zero first row above a nonzero second row")
    vals = (aa, bb, ab)
    return (_both_nonzero_extensions(F, m, A, B, aa, bb, ab)
            + (q * q - 1) * (_line_completions(F, m, A + (0,), B + (1,),
                                               *vals)
                             + _line_completions(F, m, A + (1,), B + (0,),
                                                 *vals))
            + q ** 4 * _line_completions(F, m, A + (0, 0), B + (0, 0),
                                         *vals))


def _isotropic_scalars(F: GF, aa: int, bb: int, ab: int) -> int:
    """Number of nonzero scalars c with A - c*B isotropic on the prefix.

    Geometrically: how often the line through A and B meets the isotropic
    set away from its two base vectors.  Decided entirely by the three
    pairwise form values; the last branch is a tangency test.
    """
    q = F.q
    if aa == 0 and bb == 0:
        return q * q - 1 if ab == 0 else q - 1
    if ab == 0:
        return q + 1 if (aa and bb) else 0
    if aa == 0 or bb == 0:
        return q
    ba = F.conj(ab)
    delta = F.conj(F.mul(ab, F.inv(bb)))
    # double root of the restricted norm equation <=> tangency
    val = F.add(F.sub(F.mul(F.mul(delta, F.conj(delta)), bb),
                      F.mul(delta, ab)),
                F.sub(aa, F.mul(F.conj(delta), ba)))
    return 1 if val == 0 else q + 1


def _both_nonzero_extensions(F: GF, m: int, A, B, aa, bb, ab) -> int:
    """Count over the next columns that have both entries nonzero."""
    q = F.q
    t = len(A)
    k = _isotropic_scalars(F, aa, bb, ab)
    s = (q * q - 1) * num_points(q, m - t - 2) + 1
    numer = q ** (2 * m - 2 * t - 4) - s
    assert numer % (q - 1) == 0
    rest = numer // (q - 1)
    return ((q * q - 1) * _point_completions(F, m, B + (1,), bb)
            * (k * s + (q * q - 1 - k) * rest))


def line_rank(F: GF, m: int, A, B) -> int:
    """Rank of an isotropic RREF line in column-lexicographic order."""
    if m % 2 == 0:
        return line_rank(F, m + 1, *lift_line(A, B))
    A, B = tuple(A), tuple(B)
    if len(A) != m or len(B) != m:
        raise ValueError(f"rows must have length m={m}")
    if not is_rref_pair(A, B):
        raise ValueError("matrix is not in RREF")
    if not is_isotropic_line(F, A, B):
        raise ValueError("line is not totally isotropic")
    q2 = F.order
    total = 0
    aa = bb = ab = 0
    for j in range(m):
        ap, bp = A[:j], B[:j]
        xp = A[j - 1] if j else 0
        yp = B[j - 1] if j else 0
        target = A[j] * q2 + B[j]
        for ci in range(target):
            a, b = divmod(ci, q2)
            if not _prefix_feasible(ap + (a,), bp + (b,), j + 1, m):
                continue
            vals = _extend_forms(F, j + 1, xp, yp, a, b, aa, bb, ab)
            total += _line_completions(F, m, ap + (a,), bp + (b,), *vals)
        aa, bb, ab = _extend_forms(F, j + 1, xp, yp, A[j], B[j], aa, bb, ab)
    return total


def line_unrank(F: GF, m: int, i: int) -> tuple[tuple, tuple]:
    """The isotropic RREF line with the given rank."""
    n = num_lines(F.q, m)
    if not 0 <= i < n:
        raise ValueError(f"rank {i} out of range [0, {n})")
    if m % 2 == 0:
        A, B = line_unrank(F, m + 1, i)
        assert A[0] == 0 and B[0] == 0
        return A[1:], B[1:]
    q2 = F.order
    A: tuple = ()
    B: tuple = ()
    aa = bb = ab = 0
    for j in range(m):
        xp = A[j - 1] if j else 0
        yp = B[j - 1] if j else 0
        run = 0
        chosen = None
        chosen_run = 0
        for ci in range(q2 * q2):
            a, b = divmod(ci, q2)
            if not _prefix_feasible(A + (a,), B + (b,), j + 1, m):
                continue
            vals = _extend_forms(F, j + 1, xp, yp, a, b, aa, bb, ab)
            c = _line_completions(F, m, A + (a,), B + (b,), *vals)
            if c > 0 and run <= i:
                chosen, chosen_run = (a, b), run
            run += c
            if run > i:
                break
        assert chosen is not None
        A += (chosen[0],)
        B += (chosen[1],)
        aa, bb, ab = _extend_forms(F, j + 1, xp, yp, *chosen, aa, bb, ab)
        i -= chosen_run
    return A, B
