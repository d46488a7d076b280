"""Exact arithmetic in the two supported coefficient domains.

The library works over two unique factorization domains: the rational
integers, and univariate polynomials over a prime field F_p.  This module
provides the shared value types (FpPoly, Irreducible, Factorization),
factorization into irreducibles by trial division, associate
canonicalization (positive integers, monic polynomials), multiplicity
vectors with gcd on exponents, and the text forms used by the CLI and the
JSON graph format.

Scale is deliberately modest: integers up to around 10**12 and polynomials
of degree up to around 8 over p <= 13 factor quickly by trial division.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product as _cartesian

__all__ = [
    "FpPoly",
    "Irreducible",
    "Factorization",
    "factor_integer",
    "factor_polynomial",
    "multiplicity_vector",
    "gcd_exponents",
    "poly_gcd",
    "is_prime",
    "monic_polys",
    "format_poly_compact",
    "parse_poly_compact",
    "format_poly_pretty",
    "parse_poly_pretty",
]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check, fine at desk scale."""
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


# --- polynomials over F_p -------------------------------------------------


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p; coefficients run constant term first.

    Construction reduces coefficients mod p and trims high zeros, so equal
    values compare equal.  The zero polynomial has an empty tuple and
    degree -1.
    """

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.p < 2 or not is_prime(self.p):
            raise ValueError(f"characteristic must be a prime, got {self.p}")
        c = tuple(int(a) % self.p for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> FpPoly:
        """The monic associate."""
        inv = pow(self.leading, -1, self.p)
        return FpPoly(self.p, tuple(a * inv % self.p for a in self.coeffs))

    def sort_key(self) -> tuple:
        # degree first, then the coefficient tuple (constant term first)
        return (self.degree, self.coeffs)

    def _coerce(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> FpPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] = (c[i] + x) % self.p
        return FpPoly(self.p, tuple(c))

    __radd__ = __add__

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, tuple(-a % self.p for a in self.coeffs))

    def __sub__(self, other) -> FpPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other) -> FpPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return FpPoly(self.p, ())
        c = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                c[i + j] = (c[i + j] + a * b) % self.p
        return FpPoly(self.p, tuple(c))

    __rmul__ = __mul__

    def __divmod__(self, other) -> tuple[FpPoly, FpPoly]:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(o.coeffs) + 1)
        inv = pow(o.leading, -1, p)
        for k in range(len(q) - 1, -1, -1):
            top = len(o.coeffs) - 1 + k
            if top >= len(rem):
                continue
            factor = rem[top] * inv % p
            if factor == 0:
                continue
            q[k] = factor
            for i, b in enumerate(o.coeffs):
                rem[i + k] = (rem[i + k] - factor * b) % p
        return FpPoly(p, tuple(q)), FpPoly(p, tuple(rem))

    def __mod__(self, other) -> FpPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other) -> FpPoly:
        return divmod(self, other)[0]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        return format_poly_pretty(self)


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd of two polynomials over the same F_p (zero if both zero)."""
    if a.p != b.p:
        raise ValueError(f"mixed characteristics {a.p} and {b.p}")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def monic_polys(p: int, degree: int):
    """Yield the monic polynomials of the given degree over F_p.

    Order is canonical: ascending lexicographic on the lower coefficient
    tuple (constant term first), matching FpPoly.sort_key within a degree.
    """
    if degree < 0:
        return
    if degree == 0:
        yield FpPoly(p, (1,))
        return
    for lower in _cartesian(range(p), repeat=degree):
        yield FpPoly(p, (*lower, 1))


# --- irreducibles and factorizations ---------------------------------------


@dataclass(frozen=True)
class Irreducible:
    """A canonical irreducible: a positive prime, or a monic irreducible poly.

    Irreducibility is certified by the factoring routine that produced the
    value; recheck() re-verifies by trial division.
    """

    value: int | FpPoly

    def __post_init__(self) -> None:
        v = self.value
        if isinstance(v, bool) or not isinstance(v, (int, FpPoly)):
            raise TypeError(f"unsupported irreducible value {v!r}")
        if isinstance(v, int):
            if v < 2:
                raise ValueError(f"integer irreducible must be >= 2, got {v}")
        else:
            if v.degree < 1:
                raise ValueError("polynomial irreducible must have degree >= 1")
            if not v.is_monic():
                raise ValueError("polynomial irreducible must be monic")

    @property
    def backend(self) -> str:
        return "int" if isinstance(self.value, int) else "poly"

    def sort_key(self) -> tuple:
        if isinstance(self.value, int):
            return (0, self.value)
        return self.value.sort_key()

    def recheck(self) -> bool:
        """Re-verify irreducibility by trial division."""
        v = self.value
        if isinstance(v, int):
            return is_prime(v)
        for d in range(1, v.degree // 2 + 1):
            for cand in monic_polys(v.p, d):
                if (v % cand).is_zero:
                    return False
        return True


@dataclass(frozen=True)
class Factorization:
    """unit * product of irreducible powers, in one backend.

    The unit is the sign for integers and the leading coefficient (as an
    integer in [1, p)) for polynomials.  Factors are sorted canonically
    and pairwise distinct with exponents >= 1.
    """

    backend: str
    unit: int
    factors: tuple[tuple[Irreducible, int], ...]

    def __post_init__(self) -> None:
        if self.backend not in ("int", "poly"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.backend == "int" and self.unit not in (1, -1):
            raise ValueError(f"integer unit must be +-1, got {self.unit}")
        keys = []
        for irr, e in self.factors:
            if irr.backend != self.backend:
                raise ValueError("factor backend does not match factorization")
            if e < 1:
                raise ValueError(f"exponent must be >= 1, got {e}")
            keys.append(irr.sort_key())
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("factors must be sorted and distinct")
        if self.backend == "poly":
            p = self.char
            if p is not None and not 1 <= self.unit < p:
                raise ValueError(f"polynomial unit must lie in [1, p), got {self.unit}")

    @property
    def char(self) -> int | None:
        """Field characteristic for the poly backend, None for integers."""
        if self.backend == "int":
            return None
        if not self.factors:
            return None
        value = self.factors[0][0].value
        assert isinstance(value, FpPoly)
        return value.p

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def irreducibles(self) -> tuple[Irreducible, ...]:
        return tuple(irr for irr, _ in self.factors)

    def value(self) -> int | FpPoly:
        """Multiply the factorization back out."""
        if self.backend == "int":
            out = self.unit
            for irr, e in self.factors:
                out *= irr.value**e
            return out
        p = self.char
        if p is None:
            raise ValueError("cannot rebuild a polynomial value without factors")
        out = FpPoly(p, (self.unit,))
        for irr, e in self.factors:
            for _ in range(e):
                out = out * irr.value
        return out

    def divisor(self, vector: tuple[int, ...]) -> int | FpPoly:
        """The canonical divisor with the given exponent vector (no unit)."""
        if len(vector) != len(self.factors):
            raise ValueError("exponent vector length does not match factor count")
        if self.backend == "int":
            out = 1
            for (irr, e), v in zip(self.factors, vector):
                if not 0 <= v <= e:
                    raise ValueError(f"exponent {v} out of range [0, {e}]")
                out *= irr.value**v
            return out
        p = self.char
        assert p is not None
        out = FpPoly(p, (1,))
        for (irr, e), v in zip(self.factors, vector):
            if not 0 <= v <= e:
                raise ValueError(f"exponent {v} out of range [0, {e}]")
            for _ in range(v):
                out = out * irr.value
        return out


def factor_integer(n: int) -> Factorization:
    """Factor an integer n >= 2 into primes by trial division."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"factor_integer needs n >= 2, got {n}")
    pairs: list[tuple[Irreducible, int]] = []
    m = n
    for d in (2, 3):
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            pairs.append((Irreducible(d), e))
    # remaining candidates 6k +- 1
    d = 5
    while d * d <= m:
        for cand in (d, d + 2):
            e = 0
            while m % cand == 0:
                m //= cand
                e += 1
            if e:
                pairs.append((Irreducible(cand), e))
        d += 6
    if m > 1:
        pairs.append((Irreducible(m), 1))
    return Factorization("int", 1, tuple(pairs))


def factor_polynomial(f: FpPoly | tuple[int, ...] | list[int], p: int | None = None) -> Factorization:
    """Factor a polynomial of degree >= 1 over F_p into monic irreducibles.

    Trial division by monic polynomials in canonical order; a divisor of
    minimal degree is automatically irreducible.  The unit part is the
    leading coefficient.
    """
    if isinstance(f, FpPoly):
        poly = f
        if p is not None and p != poly.p:
            raise ValueError(f"characteristic mismatch: {p} vs {poly.p}")
    else:
        if p is None:
            raise ValueError("a coefficient sequence needs an explicit characteristic")
        poly = FpPoly(p, tuple(f))
    if poly.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if poly.degree < 1:
        raise ValueError("factor_polynomial needs degree >= 1")
    unit = poly.leading
    rest = poly.monic()
    pairs: list[tuple[Irreducible, int]] = []
    d = 1
    while rest.degree > 0:
        if d > rest.degree // 2:
            pairs.append((Irreducible(rest), 1))
            break
        found = None
        for cand in monic_polys(poly.p, d):
            if (rest % cand).is_zero:
                found = cand
                break
        if found is None:
            d += 1
            continue
        e = 0
        while True:
            q, r = divmod(rest, found)
            if not r.is_zero:
                break
            rest = q
            e += 1
        pairs.append((Irreducible(found), e))
    pairs.sort(key=lambda fe: fe[0].sort_key())
    return Factorization("poly", unit, tuple(pairs))


# --- multiplicity vectors ---------------------------------------------------


def multiplicity_vector(a: int | FpPoly, fact: Factorization) -> tuple[tuple[int, ...], bool]:
    """Exponent of each irreducible of ``fact`` in a, plus a cofactor check.

    Writes a = y * prod(p_i ** k_i) and returns (k, coprime) where coprime
    records that the cofactor y shares no factor with the factored value;
    it is returned for self-checking and is always True.  The zero element
    is rejected; callers map it to the zero class themselves.
    """
    if fact.backend == "int":
        if not isinstance(a, int) or isinstance(a, bool):
            raise TypeError("integer backend expects an int")
        if a == 0:
            raise ValueError("a must be nonzero; the zero class is handled by the caller")
        y = a
        ks = []
        for irr, _ in fact.factors:
            q = irr.value
            assert isinstance(q, int)
            k = 0
            while y % q == 0:
                y //= q
                k += 1
            ks.append(k)
        n = fact.value()
        assert isinstance(n, int)
        return tuple(ks), math.gcd(y, n) == 1
    if not isinstance(a, FpPoly):
        raise TypeError("polynomial backend expects an FpPoly")
    if a.is_zero:
        raise ValueError("a must be nonzero; the zero class is handled by the caller")
    if fact.char is not None and a.p != fact.char:
        raise ValueError(f"characteristic mismatch: {a.p} vs {fact.char}")
    y = a
    ks = []
    for irr, _ in fact.factors:
        q = irr.value
        assert isinstance(q, FpPoly)
        k = 0
        while True:
            quo, rem = divmod(y, q)
            if not rem.is_zero:
                break
            y = quo
            k += 1
        ks.append(k)
    n = fact.value()
    assert isinstance(n, FpPoly)
    return tuple(ks), poly_gcd(y, n).degree == 0


def gcd_exponents(k: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
    """Componentwise min of two aligned exponent vectors."""
    if len(k) != len(s):
        raise ValueError(f"vector lengths differ: {len(k)} vs {len(s)}")
    if any(x < 0 for x in k) or any(x < 0 for x in s):
        raise ValueError("exponents must be nonnegative")
    return tuple(min(a, b) for a, b in zip(k, s))


# --- serialized text forms --------------------------------------------------


def format_poly_compact(f: FpPoly) -> str:
    """Serialize as "c0,c1,...,ck@p", constant term first."""
    if f.is_zero:
        return f"0@{f.p}"
    return ",".join(str(c) for c in f.coeffs) + f"@{f.p}"


def parse_poly_compact(s: str) -> FpPoly:
    """Parse the "c0,c1,...,ck@p" form."""
    body, sep, tail = s.partition("@")
    if not sep or not tail:
        raise ValueError(f"missing characteristic in {s!r}")
    try:
        p = int(tail)
        coeffs = tuple(int(t) for t in body.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed polynomial {s!r}") from exc
    if any(not 0 <= c < p for c in coeffs):
        raise ValueError(f"coefficients of {s!r} must lie in [0, {p})")
    return FpPoly(p, coeffs)


def format_poly_pretty(f: FpPoly, var: str = "x") -> str:
    """Human form in descending powers, e.g. "x^2+2*x+1"."""
    if f.is_zero:
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        power = var if k == 1 else f"{var}^{k}"
        terms.append(power if c == 1 else f"{c}*{power}")
    return "+".join(terms)


_PRETTY_TERM = re.compile(r"^(?:(\d+)\*)?([a-z])(?:\^(\d+))?$|^(\d+)$")


def parse_poly_pretty(s: str, p: int, var: str = "x") -> FpPoly:
    """Parse the human form; coefficients reduce mod p."""
    text = s.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return FpPoly(p, ())
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        m = _PRETTY_TERM.match(term)
        if m is None:
            raise ValueError(f"malformed term {term!r} in {s!r}")
        if m.group(4) is not None:
            coeffs[0] = coeffs.get(0, 0) + int(m.group(4))
            continue
        if m.group(2) != var:
            raise ValueError(f"unknown variable {m.group(2)!r} in {s!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = int(m.group(3)) if m.group(3) else 1
        coeffs[k] = coeffs.get(k, 0) + c
    top = max(coeffs)
    return FpPoly(p, tuple(coeffs.get(i, 0) for i in range(top + 1)))
