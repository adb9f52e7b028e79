"""Finite-field arithmetic for prime-power order q = p^e, q <= 2^16.

Elements are encoded as integers 0..q-1.  For prime fields the encoding is
the residue itself.  For extension fields the base-p digits of the encoding
are the coefficients of the residue polynomial (least significant digit =
constant coefficient), so 0 is always the additive and 1 the multiplicative
identity.

Two deterministic choices make the construction reproducible across runs
and implementations:

  * the modulus is the monic irreducible polynomial of degree e over F_p
    with the smallest integer encoding;
  * the discrete-log tables use the nonzero element with the smallest
    encoding whose multiplicative order is q - 1.

Multiplication and inversion go through exp/log tables (size O(q)); the
dense q x q tables demanded by exhaustive validation are built lazily and
only for small q.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_ORDER = 1 << 16

# Dense q x q tables get large quickly; 4096^2 int32 entries is 64 MiB.
DENSE_TABLE_MAX_ORDER = 4096

# Exhaustive axiom checking touches q^3 triples.
VALIDATE_MAX_ORDER = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# ----------------------------------------------------------------------
# Polynomial helpers over F_p. Polynomials are encoded as integers whose
# base-p digits are the coefficients (little endian).
# ----------------------------------------------------------------------

def _poly_digits(x: int, p: int) -> list[int]:
    out = []
    while x:
        x, r = divmod(x, p)
        out.append(r)
    return out


def _poly_degree(x: int, p: int) -> int:
    d = -1
    while x:
        x //= p
        d += 1
    return d


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of polynomial division, coefficient lists little endian."""
    num = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        f = (c * lead_inv) % p
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _irreducible_poly(p: int, e: int) -> int:
    """Monic irreducible of degree e over F_p with the smallest encoding.

    Found by trial division against every monic polynomial of degree
    1..e//2; cheap because p^(e//2) <= sqrt(q) <= 256 here.
    """
    q = p**e
    for cand in range(q, 2 * q):
        if (cand // q) != 1:
            continue
        cd = _poly_digits(cand, p)
        if cd[0] == 0:
            # divisible by x unless e == 1
            if e > 1:
                continue
        reducible = False
        for deg in range(1, e // 2 + 1):
            lo = p**deg
            for div in range(lo, 2 * lo):
                if (div // lo) != 1:
                    continue
                if not _poly_mod(cd, _poly_digits(div, p), p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class FieldSpec:
    """Arithmetic tables for the field with q = p^e elements.

    Immutable after construction; safe to share between threads and to
    pickle into worker processes.
    """

    def __init__(self, p: int, e: int) -> None:
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > MAX_ORDER:
            raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = _irreducible_poly(p, e) if e > 1 else p
        self._mod_digits = _poly_digits(self.modulus, p)

        self._build_log_tables()
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = self._exp[(q - 1 - self._log[a]) % (q - 1)]
        self._add_dense: np.ndarray | None = None
        self._mul_dense: np.ndarray | None = None

    # -- raw arithmetic used only to bootstrap the tables ---------------

    def _add_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        mult = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * mult
            mult *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a * b) % p
        da = _poly_digits(a, p)
        db = _poly_digits(b, p)
        if not da or not db:
            return 0
        prod = [0] * (len(da) + len(db) - 1)
        for i, ca in enumerate(da):
            if ca == 0:
                continue
            for j, cb in enumerate(db):
                prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_mod(prod, self._mod_digits, p)
        out = 0
        for c in reversed(rem):
            out = out * self.p + c
        return out

    def _pow_raw(self, a: int, m: int) -> int:
        out = 1
        base = a
        while m:
            if m & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            m >>= 1
        return out

    def _build_log_tables(self) -> None:
        q = self.q
        if q == 2:
            self._exp = [1]
            self._log = [0, 0]
            self.generator = 1
            return
        factors = prime_factors(q - 1)
        gen = None
        for g in range(2, q):
            if all(self._pow_raw(g, (q - 1) // r) != 1 for r in factors):
                gen = g
                break
        if gen is None:
            raise AssertionError("no multiplicative generator found")
        self.generator = gen
        exp = [0] * (q - 1)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, gen)
        self._exp = exp
        self._log = log

    # -- element operations ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            a, r = divmod(a, p)
            out += ((-r) % p) * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    # -- dense tables and exhaustive validation ---------------------------

    @property
    def add_table(self) -> np.ndarray:
        if self._add_dense is None:
            self._add_dense = self._dense(self.add)
        return self._add_dense

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul_dense is None:
            self._mul_dense = self._dense(self.mul)
        return self._mul_dense

    def _dense(self, op) -> np.ndarray:
        q = self.q
        if q > DENSE_TABLE_MAX_ORDER:
            raise ValueError(f"dense tables limited to q <= {DENSE_TABLE_MAX_ORDER}")
        t = np.zeros((q, q), dtype=np.int32)
        for a in range(q):
            for b in range(a, q):
                v = op(a, b)
                t[a, b] = v
                t[b, a] = v
        return t

    def validate(self) -> None:
        """Exhaustively check the field axioms; raises on any violation.

        Touches q^3 triples through vectorized table lookups, so it is
        restricted to q <= 256.
        """
        q = self.q
        if q > VALIDATE_MAX_ORDER:
            raise ValueError(f"exhaustive validation limited to q <= {VALIDATE_MAX_ORDER}")
        add = self.add_table
        mul = self.mul_table
        idx = np.arange(q)

        if not np.array_equal(add[0], idx):
            raise AssertionError("0 is not the additive identity")
        if not np.array_equal(mul[1], idx):
            raise AssertionError("1 is not the multiplicative identity")
        if np.any(mul[0] != 0):
            raise AssertionError("0 does not annihilate")
        if not np.array_equal(add, add.T) or not np.array_equal(mul, mul.T):
            raise AssertionError("commutativity fails")
        # (a+b)+c == a+(b+c); a(bc) == (ab)c
        if not np.array_equal(add[add][:, :, idx], add[:, add]):
            raise AssertionError("additive associativity fails")
        if not np.array_equal(mul[mul][:, :, idx], mul[:, mul]):
            raise AssertionError("multiplicative associativity fails")
        # a(b+c) == ab + ac
        lhs = mul[:, add]
        rhs = add[mul[:, :, None], mul[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise AssertionError("distributivity fails")
        # every element has an additive inverse, every nonzero one a
        # multiplicative inverse
        if not np.all((add == 0).any(axis=1)):
            raise AssertionError("additive inverse missing")
        for a in range(1, q):
            if self.mul(a, self.inv_table[a]) != 1:
                raise AssertionError(f"inverse of {a} is wrong")

    def __repr__(self) -> str:  # pragma: no cover
        return f"FieldSpec(q={self.q}, p={self.p}, e={self.e}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_make(p: int, e: int) -> FieldSpec:
    """Field with q = p^e elements. Cached so repeated calls share tables."""
    return FieldSpec(p, e)


@lru_cache(maxsize=None)
def field_for_order(q: int) -> FieldSpec:
    """Field of order q; q must be a prime power <= 2^16."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    fac = prime_factors(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fac[0]
    e = 0
    m = q
    while m > 1:
        m //= p
        e += 1
    if p**e != q:
        raise ValueError(f"{q} is not a prime power")
    return field_make(p, e)
