"""Hermitian geometry of V(m, q^2).

The sesquilinear form uses the coordinate convention for odd dimension:
position 1 is self-paired (contributing x_1^q * y_1) and positions
(2,3), (4,5), ... are hyperbolic pairs.  Even-dimensional spaces are
treated as the hyperplane x_1 = 0 of the next odd dimension: vectors are
lifted by prepending a zero coordinate, lines by prepending a zero column.

Vectors are tuples of field-element encodings; a line is a pair of rows
(A, B) of equal length.
"""

from __future__ import annotations

from .gf import GF


def herm_product(F: GF, X, Y, t: int | None = None) -> int:
    """Partial Hermitian form on the leading t coordinates (odd convention).

    Pairs that are split by the cut at t contribute nothing; for even t the
    trailing coordinate x_t has no partner inside the prefix.
    """
    if t is None:
        t = len(X)
    if t > len(X) or t > len(Y):
        raise ValueError("t exceeds vector length")
    if t == 0:
        return 0
    acc = F.mul(F.conj(X[0]), Y[0])
    i = 1
    while i + 1 < t:
        term = F.add(F.mul(F.conj(X[i]), Y[i + 1]),
                     F.mul(F.conj(X[i + 1]), Y[i]))
        acc = F.add(acc, term)
        i += 2
    return acc


def lift_vector(X) -> tuple:
    """Embed a vector of even length as a prefix-0 vector one longer."""
    return (0,) + tuple(X)


def lift_line(A, B) -> tuple[tuple, tuple]:
    """Embed a line of an even-dimensional space by a zero first column."""
    return (0,) + tuple(A), (0,) + tuple(B)


def form(F: GF, X, Y) -> int:
    """Full Hermitian form value, lifting even-length vectors."""
    if len(X) % 2 == 0:
        X, Y = lift_vector(X), lift_vector(Y)
    return herm_product(F, X, Y)


def is_isotropic_point(F: GF, X) -> bool:
    return form(F, X, X) == 0


def is_isotropic_line(F: GF, A, B) -> bool:
    """Whether the span of A and B is totally isotropic (basis independent)."""
    return (form(F, A, A) == 0 and form(F, B, B) == 0
            and form(F, A, B) == 0)


def num_points(q: int, m: int) -> int:
    """Number of isotropic points of the rank-appropriate Hermitian space
    in projective dimension m-1; 0 for m < 2 by convention."""
    if m < 0:
        raise ValueError("negative dimension")
    if m == 0:
        return 0
    s = (-1) ** (m - 1)
    numer = (q ** m + s) * (q ** (m - 1) - s)
    denom = q * q - 1
    assert numer % denom == 0
    return numer // denom


def num_lines(q: int, m: int) -> int:
    """Number of totally isotropic lines; 0 for m < 3 by convention."""
    if m < 0:
        raise ValueError("negative dimension")
    if m < 3:
        return 0
    numer = num_points(q, m) * num_points(q, m - 2)
    denom = q * q + 1
    assert numer % denom == 0
    return numer // denom


def is_left_normalized(D) -> bool:
    """First nonzero entry, if any, equals 1."""
    for d in D:
        if d:
            return d == 1
    return True


def normalize_point(F: GF, X) -> tuple:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    for d in X:
        if d:
            c = F.inv(d)
            return tuple(F.mul(c, x) for x in X)
    raise ValueError("cannot normalize the zero vector")


def is_rref_pair(A, B) -> bool:
    """Whether (A; B) is a rank-2 matrix in row-reduced echelon form."""
    ia = next((i for i, a in enumerate(A) if a), None)
    ib = next((i for i, b in enumerate(B) if b), None)
    if ia is None or ib is None:
        return False
    return (A[ia] == 1 and B[ib] == 1 and ia < ib and A[ib] == 0)


def rref_pair(F: GF, u, v) -> tuple[tuple[tuple, tuple], int]:
    """RREF basis of the span of two independent vectors.

    Returns ((A, B), det) where det is the determinant of the 2x2 matrix M
    with (u; v) = M (A; B).  Decoding reads use det to rescale codeword
    components probed via non-canonical bases.
    """
    r1, r2 = list(u), list(v)
    if len(r1) != len(r2):
        raise ValueError("rows of unequal length")
    det_e = 1  # determinant of the accumulated row operations E, (A;B)=E(u;v)
    j1 = next((i for i, a in enumerate(r1) if a), None)
    j2 = next((i for i, b in enumerate(r2) if b), None)
    if j1 is None or j2 is None:
        raise ValueError("dependent input vectors")
    if j2 < j1:
        r1, r2 = r2, r1
        det_e = F.neg(det_e)
        j1 = j2
    if r1[j1] != 1:
        c = F.inv(r1[j1])
        det_e = F.mul(det_e, c)
        r1 = [F.mul(c, x) for x in r1]
    if r2[j1]:
        c = r2[j1]
        r2 = [F.sub(x, F.mul(c, y)) for x, y in zip(r2, r1)]
    j2 = next((i for i, b in enumerate(r2) if b), None)
    if j2 is None:
        raise ValueError("dependent input vectors")
    if r2[j2] != 1:
        c = F.inv(r2[j2])
        det_e = F.mul(det_e, c)
        r2 = [F.mul(c, x) for x in r2]
    if r1[j2]:
        c = r1[j2]
        r1 = [F.sub(x, F.mul(c, y)) for x, y in zip(r1, r2)]
    return (tuple(r1), tuple(r2)), F.inv(det_e)


def rref_matrix(F: GF, rows) -> list[tuple]:
    """Row-reduced echelon form of an arbitrary list of rows.

    Zero rows are dropped; the result has one row per pivot.
    """
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        src = None
        for r in work:
            if r[col]:
                src = r
                break
        if src is None:
            continue
        work.remove(src)
        c = F.inv(src[col])
        src = [F.mul(c, x) for x in src]
        for rows_ in (work, out):
            for r in rows_:
                if r[col]:
                    f = r[col]
                    for k in range(ncols):
                        r[k] = F.sub(r[k], F.mul(f, src[k]))
        out.append(src)
        pivots.append(col)
        work = [r for r in work if any(r)]
        if not work:
            break
    return [tuple(r) for r in out]
