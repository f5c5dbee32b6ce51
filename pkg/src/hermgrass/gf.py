"""Arithmetic for the quadratic extension GF(q^2) over its subfield GF(q).

Here q = p^e.  Elements are plain ints in [0, q^2): the coefficient vector
(c_0, ..., c_{2e-1}) of the polynomial-basis representation, packed as
sum c_i * p^i.  The encoding is a bijection onto [0, q^2) and the integer
order on encodings is the total element order used by all enumerators in
this package; 0 encodes the zero element, so 0 is the order minimum.

The reduction modulus is a monic irreducible polynomial of degree 2e over
GF(p), stored as a low-degree-first coefficient list.  When none is
supplied, the lexicographically smallest monic irreducible (by that
coefficient list) is selected, so element encodings are reproducible
across runs without shipping polynomial tables.

For fields with q^2 <= table_limit (default 2^16), log/antilog tables over
a primitive element are built at construction; multiplication, inversion,
conjugation x -> x^q and norm-equation solving then become table lookups.
Larger fields fall back to polynomial arithmetic.

A ``mul_count`` attribute counts field multiplications; the complexity
tests use it as an operation meter.
"""

from __future__ import annotations

from itertools import product

TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ----------------------------------------------------------------------
# Polynomials over GF(p): low-degree-first lists of ints in [0, p).
# ----------------------------------------------------------------------

def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _prem(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic
    a = list(a)
    n = len(mod) - 1
    while len(a) > n:
        c = a[-1]
        if c:
            shift = len(a) - 1 - n
            for j, mj in enumerate(mod):
                a[shift + j] = (a[shift + j] - c * mj) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # make b monic before reducing
        lead = b[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            b = [(c * inv) % p for c in b]
        a, b = b, _prem(a, b, p)
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _ppowmod(base: list[int], exp: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _prem(base, mod, p)
    while exp:
        if exp & 1:
            result = _prem(_pmul(result, base, p), mod, p)
        base = _prem(_pmul(base, base, p), mod, p)
        exp >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test for a monic polynomial f over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    # x^(p^n) == x mod f
    h = _ppowmod(x, p ** n, f, p)
    if _ptrim([(a - b) % p for a, b in
               zip(h + [0] * len(x), x + [0] * len(h))]):
        return False
    for r in _prime_factors(n):
        h = _ppowmod(x, p ** (n // r), f, p)
        diff = [(a - b) % p for a, b in zip(h + [0, 0], x + [0] * len(h))]
        if len(_pgcd(f, _ptrim(diff), p)) > 1:
            return False
    return True


def _canonical_modulus(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of the given degree."""
    for coeffs in product(range(p), repeat=degree):
        f = list(coeffs) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise RuntimeError(
        f"no irreducible polynomial of degree {degree} over GF({p})")


# ----------------------------------------------------------------------
# The field context
# ----------------------------------------------------------------------

class GF:
    """GF(q^2) with q = p^e, together with its subfield structure.

    Elements are ints in [0, order) where order = q^2.  All operations are
    pure; the context is immutable after construction apart from the
    ``mul_count`` meter.
    """

    def __init__(self, p: int, e: int, modulus=None,
                 table_limit: int = TABLE_LIMIT):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if e < 1:
            raise ValueError(f"e={e} must be positive")
        self.p = p
        self.e = e
        self.q = p ** e
        self.order = self.q ** 2
        degree = 2 * e
        if modulus is None:
            self.modulus = _canonical_modulus(p, degree)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {degree}")
            if not _is_irreducible(list(modulus), p):
                raise ValueError("modulus is reducible over GF(p)")
            self.modulus = modulus
        self.mul_count = 0

        self._exp = None
        self._log = None
        if self.order <= table_limit:
            self._build_tables()

    # -- encoding -------------------------------------------------------

    def element(self, n: int) -> int:
        """Validate an integer encoding and return it."""
        n = int(n)
        if not 0 <= n < self.order:
            raise ValueError(f"encoding {n} out of range [0, {self.order})")
        return n

    def _coeffs(self, x: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(2 * self.e):
            x, r = divmod(x, p)
            out.append(r)
        return out

    def _encode(self, coeffs) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + (c % self.p)
        return x

    def elements(self):
        return range(self.order)

    # -- tables ---------------------------------------------------------

    def _build_tables(self):
        n = self.order
        # find a primitive element by order testing
        group = n - 1
        factors = _prime_factors(group)
        gen = None
        for g in range(2, n):
            if all(self._pow_poly(g, group // r) != 1 for r in factors):
                gen = g
                break
        if gen is None:  # pragma: no cover - cannot happen, group is cyclic
            raise RuntimeError("no primitive element found")
        exp = [0] * (2 * group)
        log = [0] * n
        v = 1
        for i in range(group):
            exp[i] = v
            log[v] = i
            v = self._mul_poly(v, gen)
        for i in range(group, 2 * group):
            exp[i] = exp[i - group]
        self._exp = exp
        self._log = log

    # -- raw polynomial arithmetic (no tables) --------------------------

    def _mul_poly(self, x: int, y: int) -> int:
        prod_ = _pmul(_ptrim(self._coeffs(x)), _ptrim(self._coeffs(y)),
                      self.p)
        reduced = _prem(prod_, list(self.modulus), self.p)
        return self._encode(reduced + [0] * (2 * self.e))

    def _pow_poly(self, x: int, k: int) -> int:
        result = 1
        base = x
        while k:
            if k & 1:
                result = self._mul_poly(result, base)
            base = self._mul_poly(base, base)
            k >>= 1
        return result

    # -- arithmetic -----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        p = self.p
        out = 0
        mult = 1
        for _ in range(2 * self.e):
            out += ((x % p + y % p) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        p = self.p
        out = 0
        mult = 1
        for _ in range(2 * self.e):
            out += ((-(x % p)) % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self.mul_count += 1
        if x == 0 or y == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._mul_poly(x, y)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is not None:
            self.mul_count += 1
            return self._exp[(self.order - 1) - self._log[x]]
        return self._pow_poly_counted(x, self.order - 2)

    def _pow_poly_counted(self, x: int, k: int) -> int:
        result = 1
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(x), -k)
        if x == 0:
            return 0 if k else 1
        if self._exp is not None:
            self.mul_count += 1
            return self._exp[(self._log[x] * k) % (self.order - 1)]
        return self._pow_poly_counted(x, k)

    def conj(self, x: int) -> int:
        """The involution x -> x^q; fixes exactly the subfield GF(q)."""
        if x == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[x] * self.q) % (self.order - 1)]
        # e successive p-th powers
        out = x
        for _ in range(self.e):
            out = self._pow_poly_counted(out, self.p)
        return out

    def trace(self, x: int) -> int:
        """Trace onto GF(q): x + x^q."""
        return self.add(x, self.conj(x))

    def norm(self, x: int) -> int:
        """Norm onto GF(q): x^(q+1)."""
        return self.mul(x, self.conj(x))

    def in_subfield(self, x: int) -> bool:
        return self.conj(x) == x

    def norm_solutions(self, c: int) -> set[int]:
        """All lambda with lambda^(q+1) == c.

        Returns {0} for c == 0, a set of exactly q+1 elements when c is a
        nonzero subfield element, and the empty set otherwise.
        """
        if c == 0:
            return {0}
        if not self.in_subfield(c):
            return set()
        if self._exp is not None:
            group = self.order - 1
            d = self.q + 1
            lc = self._log[c]
            if lc % d:  # pragma: no cover - subfield logs are multiples of d
                return set()
            step = group // d
            base = lc // d
            return {self._exp[(base + k * step) % group] for k in range(d)}
        return {x for x in range(1, self.order)
                if self._pow_poly(x, self.q + 1) == c}

    # -- misc -----------------------------------------------------------

    def reset_mul_count(self) -> None:
        self.mul_count = 0

    def __repr__(self):
        return f"GF(p={self.p}, e={self.e}, order={self.order})"

    def __eq__(self, other):
        return (isinstance(other, GF) and (self.p, self.e, self.modulus)
                == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))
