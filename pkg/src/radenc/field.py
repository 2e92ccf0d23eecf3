"""Exact arithmetic in F_p and F_{p^2}, deterministic l-th roots, square roots.

Elements of F_p are represented as Python ints in [0, p); elements of the
quadratic extension F_{p^2} = F_p(w), w^2 = nonresidue, as pairs (c0, c1)
standing for c0 + c1*w.  A FieldCtx carries the modulus, the extension
degree and (for degree 2) the chosen quadratic non-residue.

The one operation the encodings rely on is the deterministic l-th root
for gcd(l, p*(p-1)) = 1: on such fields x -> x^l is a bijection and the
root is a^(l^-1 mod p-1).  Square roots (Tonelli-Shanks) are provided for
search procedures only; no encoding path ever extracts a square root.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

MAX_PRIME_BITS = 63  # moduli are limited to 63-bit primes

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24 (covers 63 bits)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_2mod3(n: int) -> int:
    """Smallest prime >= n congruent to 2 mod 3 (handy for cube-root fields)."""
    k = n
    while not (is_prime(k) and k % 3 == 2):
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def find_nonresidue(p: int) -> int:
    """Smallest quadratic non-residue of F_p, by deterministic scan 2, 3, 5, ..."""
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    return n


class FieldCtx:
    """A prime field F_p or its quadratic extension F_{p^2}.

    Invariants: p is an odd prime below 2^63; for ext_degree 2 the stored
    nonresidue has Legendre symbol -1 mod p.
    """

    __slots__ = ("p", "ext_degree", "nonresidue")

    def __init__(self, p: int, ext_degree: int = 1, nonresidue: int | None = None):
        if not is_prime(p) or p == 2:
            raise ValueError(f"modulus {p} is not an odd prime")
        if p.bit_length() > MAX_PRIME_BITS:
            raise ValueError(f"modulus exceeds {MAX_PRIME_BITS} bits")
        if ext_degree not in (1, 2):
            raise ValueError("ext_degree must be 1 or 2")
        self.p = p
        self.ext_degree = ext_degree
        if ext_degree == 2:
            if nonresidue is None:
                nonresidue = find_nonresidue(p)
            if pow(nonresidue, (p - 1) // 2, p) != p - 1:
                raise ValueError(f"{nonresidue} is not a non-residue mod {p}")
            self.nonresidue = nonresidue
        else:
            self.nonresidue = None

    @property
    def order(self) -> int:
        return self.p ** self.ext_degree

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def el(self, c0: int, c1: int = 0) -> FieldElement:
        return FieldElement(self, c0, c1)

    def extension(self) -> FieldCtx:
        """The quadratic extension context sharing this prime."""
        if self.ext_degree != 1:
            raise ValueError("already an extension field")
        return FieldCtx(self.p, 2)

    def elements(self):
        """Iterate over all field elements (desk-scale enumeration)."""
        if self.ext_degree == 1:
            for c0 in range(self.p):
                yield FieldElement(self, c0)
        else:
            for c0 in range(self.p):
                for c1 in range(self.p):
                    yield FieldElement(self, c0, c1)

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.ext_degree == other.ext_degree
                and self.nonresidue == other.nonresidue)

    def __hash__(self):
        return hash((self.p, self.ext_degree, self.nonresidue))

    def __repr__(self):
        if self.ext_degree == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, ext_degree=2, w^2={self.nonresidue})"


@dataclass(frozen=True)
class FieldElement:
    """An element of F_p (degree 1) or F_{p^2} (degree 2, value c0 + c1*w)."""

    ctx: FieldCtx
    c0: int
    c1: int = 0

    def __post_init__(self):
        p = self.ctx.p
        object.__setattr__(self, "c0", self.c0 % p)
        object.__setattr__(self, "c1", self.c1 % p)
        if self.ctx.ext_degree == 1 and self.c1 != 0:
            raise ValueError("degree-1 element with a w-component")

    def _check(self, other: FieldElement):
        if self.ctx != other.ctx:
            raise ValueError("elements from different field contexts")

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.ctx, self.c0 + other.c0, self.c1 + other.c1)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return FieldElement(self.ctx, -self.c0, -self.c1)

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.ctx, self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            self._check(other)
            return other
        if isinstance(other, int):
            return FieldElement(self.ctx, other)
        raise TypeError(f"cannot coerce {other!r} into {self.ctx}")

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.ctx.p
        if self.ctx.ext_degree == 1:
            return FieldElement(self.ctx, self.c0 * other.c0 % p)
        nr = self.ctx.nonresidue
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        return FieldElement(self.ctx, (a0 * b0 + a1 * b1 % p * nr) % p,
                            (a0 * b1 + a1 * b0) % p)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if self.ctx.ext_degree == 1:
            if n < 0:
                return FieldElement(self.ctx, pow(self.c0, n, self.ctx.p))
            return FieldElement(self.ctx, pow(self.c0, n, self.ctx.p))
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        p = self.ctx.p
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.ctx.ext_degree == 1:
            return FieldElement(self.ctx, pow(self.c0, -1, p))
        # (c0 + c1 w)^-1 = (c0 - c1 w) / (c0^2 - nr c1^2), the norm is in F_p*
        nr = self.ctx.nonresidue
        norm = (self.c0 * self.c0 - nr * self.c1 * self.c1) % p
        ninv = pow(norm, -1, p)
        return FieldElement(self.ctx, self.c0 * ninv % p, -self.c1 * ninv % p)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def frobenius(self) -> FieldElement:
        """x -> x^p; for c0 + c1 w this is c0 - c1 w since w^p = -w."""
        if self.ctx.ext_degree == 1:
            return self
        return FieldElement(self.ctx, self.c0, -self.c1)

    def norm(self) -> int:
        """Norm down to F_p, as a plain int."""
        if self.ctx.ext_degree == 1:
            return self.c0
        return (self.c0 * self.c0 - self.ctx.nonresidue * self.c1 * self.c1) % self.ctx.p

    def lift(self) -> int:
        """Canonical integer encoding: c0 for degree 1, c0 + c1*p for degree 2."""
        return self.c0 + self.c1 * self.ctx.p

    def __str__(self):
        if self.ctx.ext_degree == 1 or self.c1 == 0:
            return str(self.c0)
        return f"{self.c0}+{self.c1}*w"

    def __repr__(self):
        return f"F({self})"


def parse_element(ctx: FieldCtx, text: str) -> FieldElement:
    """Inverse of str(): decimal for F_p, "c0+c1*w" for F_{p^2}."""
    text = text.strip()
    if "w" in text:
        if ctx.ext_degree != 2:
            raise ValueError("w-component in a degree-1 context")
        left, right = text.split("+")
        return FieldElement(ctx, int(left), int(right.rstrip("*w")))
    return FieldElement(ctx, int(text))


def legendre(a: FieldElement) -> int:
    """Legendre symbol by Euler's criterion (degree-1 contexts only)."""
    if a.ctx.ext_degree != 1:
        raise ValueError("legendre is defined on degree-1 contexts")
    if a.c0 == 0:
        return 0
    return 1 if pow(a.c0, (a.ctx.p - 1) // 2, a.ctx.p) == 1 else -1


def is_square(a: FieldElement) -> bool:
    """Squareness test, valid in both F_p and F_{p^2} (via the norm)."""
    if a.is_zero():
        return True
    p = a.ctx.p
    return pow(a.norm(), (p - 1) // 2, p) == 1


def lth_root_deterministic(a: FieldElement, l: int) -> FieldElement:
    """The unique b with b^l = a, for gcd(l, p*(p-1)) = 1.

    x -> x^l is then a bijection of F_p and the root is a^(l^-1 mod p-1);
    no other l is accepted because the root would not be well defined.
    """
    ctx = a.ctx
    if ctx.ext_degree != 1:
        raise ValueError("deterministic l-th roots live in degree-1 contexts")
    if l < 1:
        raise ValueError("root degree must be positive")
    if gcd(l, ctx.p * (ctx.p - 1)) != 1:
        raise ValueError(f"x -> x^{l} is not a bijection of F_{ctx.p}: "
                         f"gcd({l}, p(p-1)) != 1")
    e = pow(l, -1, ctx.p - 1)
    return FieldElement(ctx, pow(a.c0, e, ctx.p))


def cube_roots(a: FieldElement) -> list[FieldElement]:
    """All cube roots of a in F_p (one when gcd(3, p-1) = 1, else 0 or 3)."""
    ctx = a.ctx
    p = ctx.p
    if p % 3 == 2:
        return [lth_root_deterministic(a, 3)]
    if a.is_zero():
        return [ctx.zero()]
    if pow(a.c0, (p - 1) // 3, p) != 1:
        return []
    # cube map is 3:1; find one root via Adleman-Manders-Miller style search
    r = _prime_power_root(a.c0, 3, p)
    omega = _root_of_unity(3, p)
    return sorted((FieldElement(ctx, r * pow(omega, i, p) % p) for i in range(3)),
                  key=lambda e: e.c0)


def _root_of_unity(l: int, p: int) -> int:
    """A primitive l-th root of unity mod p (l prime, l | p-1)."""
    e = (p - 1) // l
    g = 2
    while True:
        z = pow(g, e, p)
        if z != 1:
            return z
        g += 1


def _prime_power_root(a: int, l: int, p: int) -> int:
    """One l-th root of the l-th-power residue a mod p, l an odd prime | p-1."""
    q, s = p - 1, 0
    while q % l == 0:
        q //= l
        s += 1
    # find an l-th non-residue for the descent
    g = 2
    while pow(g, (p - 1) // l, p) == 1:
        g += 1
    z = pow(g, q, p)  # order l^s
    # a^q has order dividing l^(s-?) inside the l-Sylow subgroup
    x = pow(a, (pow(l, -1, q) * (q + 1) - 1) // l if q % l != 0 else 0, p)
    # straightforward discrete-log descent in the l-Sylow subgroup
    x = pow(a, pow(l, -1, q), p)  # correct up to an l-power-order factor
    t = pow(x, l, p) * pow(a, -1, p) % p  # element of the Sylow subgroup
    # write t = z^(-k) with k determined digit by digit, then x * z^(k/l...) fixes it
    for _ in range(p.bit_length() * 2):
        if t == 1:
            break
        # order of t is l^m for some m <= s; find c with z^(l^(s-m)) matching
        m = 0
        u = t
        while u != 1:
            u = pow(u, l, p)
            m += 1
        base = pow(z, pow(l, s - m, p - 1), p)  # order l^m
        # solve base^c = t^-1 in the cyclic group of order l^m (small l^m here)
        c = _dlog_small(base, pow(t, -1, p), l, m, p)
        x = x * pow(z, c * pow(l, s - m - 1 + 1, p - 1) // l, p) % p
        x = x % p
        t = pow(x, l, p) * pow(a, -1, p) % p
    assert pow(x, l, p) == a % p
    return x


def _dlog_small(base: int, target: int, l: int, m: int, p: int) -> int:
    """Discrete log in the cyclic group <base> of order l^m, brute force."""
    acc = 1
    for c in range(l ** m):
        if acc == target:
            return c
        acc = acc * base % p
    raise ArithmeticError("discrete log not found")


def sqrt_ts(a: FieldElement, rng_seed: int = 0) -> FieldElement | None:
    """Some b with b^2 = a when a is a square, else None.

    Tonelli-Shanks with the context's deterministic non-residue; rng_seed is
    accepted for interface stability but unused, so runs are reproducible.
    Of the two roots the one with the smaller canonical integer encoding is
    returned.
    """
    del rng_seed
    ctx = a.ctx
    if a.is_zero():
        return ctx.zero()
    if not is_square(a):
        return None
    if ctx.ext_degree == 1:
        r = _sqrt_mod_p(a.c0, ctx.p)
        return FieldElement(ctx, min(r, ctx.p - r))
    r = _sqrt_fp2(a)
    r2 = -r
    return r if r.lift() <= r2.lift() else r2


def _sqrt_mod_p(a: int, p: int) -> int:
    """Tonelli-Shanks in F_p for a known square a != 0."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = pow(find_nonresidue(p), q, p)
    m, c, t, r = s, z, pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _sqrt_fp2(a: FieldElement) -> FieldElement:
    """Square root in F_{p^2} for a known square, via a half-trace style split."""
    ctx = a.ctx
    p = ctx.p
    if a.c1 == 0:
        # a in F_p: either a is a square in F_p, or a = (c*w)^2 with c^2 = a/nr
        if pow(a.c0, (p - 1) // 2, p) == 1:
            return FieldElement(ctx, _sqrt_mod_p(a.c0, p))
        c = _sqrt_mod_p(a.c0 * pow(ctx.nonresidue, -1, p) % p, p)
        return FieldElement(ctx, 0, c)
    # write sqrt = x0 + x1 w: x0^2 = (c0 + sqrt(norm))/2 or (c0 - sqrt(norm))/2
    n = _sqrt_mod_p(a.norm(), p)  # norm of a square is a square in F_p
    inv2 = pow(2, -1, p)
    for sign in (n, (-n) % p):
        x0sq = (a.c0 + sign) * inv2 % p
        if x0sq == 0 or pow(x0sq, (p - 1) // 2, p) == 1:
            if x0sq == 0:
                continue
            x0 = _sqrt_mod_p(x0sq, p)
            x1 = a.c1 * inv2 % p * pow(x0, -1, p) % p
            cand = FieldElement(ctx, x0, x1)
            if cand * cand == a:
                return cand
    raise ArithmeticError("sqrt_fp2 failed on a square input")


def _is_lth_power(a: int, l: int, p: int) -> bool:
    """Is a an l-th power in F_p*?  (a != 0)"""
    g = gcd(l, p - 1)
    return pow(a, (p - 1) // g, p) == 1


def binomial_is_irreducible(a: FieldElement, d: int) -> bool:
    """Whether x^d - a is irreducible over F_p.

    Criterion: for every prime l | d the scalar a is not an l-th power,
    and if 4 | d then -4a is not a fourth power.
    """
    ctx = a.ctx
    if ctx.ext_degree != 1:
        raise ValueError("binomial irreducibility implemented for F_p only")
    if a.is_zero():
        raise ValueError("a must be nonzero")
    if d < 1:
        raise ValueError("degree must be positive")
    if d == 1:
        return True
    p = ctx.p
    n = d
    l = 2
    primes = set()
    while l * l <= n:
        if n % l == 0:
            primes.add(l)
            while n % l == 0:
                n //= l
        l += 1
    if n > 1:
        primes.add(n)
    for l in primes:
        if _is_lth_power(a.c0, l, p):
            return False
    if d % 4 == 0 and _is_lth_power(-4 * a.c0 % p, 4, p):
        return False
    return True
