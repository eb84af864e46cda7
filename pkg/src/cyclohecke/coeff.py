"""Exact scalar domains for the whole package.

Three coefficient domains are supported, all with decidable equality:

* the rationals (``QQ``), backed by ``gmpy2.mpq``;
* prime fields GF(p), for specialized modular computations;
* the one-variable rational-function field ``K(x)`` over either of the
  above, used for "generic" parameters.

Rational functions are kept in canonical form (numerator and denominator
coprime, denominator monic), so ``==`` and ``hash`` are structural.  On top
of the fields this module provides the local-ring analysis at ``x = 0``:
every f in K(x) splits uniquely as

    f = regular + principal

with ``regular`` pole-free at 0 and ``principal`` a polynomial in ``1/x``
without constant term.  That decomposition (``split_at_zero``) and exact
specialization ``x -> 0`` are what the distinguished-basis machinery builds
on; no power series are ever truncated because every element we construct
is honestly rational.

>>> K = RationalFunctionField(QQ)
>>> x = K.x
>>> sp = split_at_zero(1 / (x * (x - 1)))
>>> sp.regular == 1 / (x - 1), sp.principal == -1 / x
(True, True)
>>> split_at_zero(x + 3)
LocalSplit(regular=(3 + x), principal=(0))
>>> specialize_at_zero(x + 3)
mpq(3,1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

__all__ = [
    "QQ",
    "RationalField",
    "PrimeField",
    "RationalFunctionField",
    "RatFunc",
    "LocalSplit",
    "GenericParams",
    "PoleAtZeroError",
    "split_at_zero",
    "specialize_at_zero",
    "principal_coeff",
    "order_at_zero",
    "laurent_coeff",
    "quantum_integer",
    "scalar_to_json",
    "scalar_from_json",
]


class PoleAtZeroError(ArithmeticError):
    """Raised when a rational function with a pole at x=0 is specialized there."""


# ---------------------------------------------------------------------------
# polynomial helpers (dense ascending tuples over a field, () == 0)
# ---------------------------------------------------------------------------

def _ptrim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _ptrim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [None] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            p = ca * cb
            out[i + j] = p if out[i + j] is None else out[i + j] + p
    return _ptrim(out)


def _pscale(a, c):
    if not c:
        return ()
    return _ptrim([ca * c for ca in a])


def _pdivmod(a, b):
    """Euclidean division of dense polynomials; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    quo = [b[0] - b[0]] * (len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] * inv_lead
        if c:
            quo[i] = c
            for j, cb in enumerate(b):
                rem[i + j] = rem[i + j] - c * cb
    return _ptrim(quo), _ptrim(rem)


def _pmonic(a):
    if not a or a[-1] == a[-1] ** 0:
        return a
    return _pscale(a, 1 / a[-1])


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pmonic(a)


def _peval(a, t, zero):
    acc = zero
    for c in reversed(a):
        acc = acc * t + c
    return acc


def _pval(a):
    """Order of vanishing at 0 (number of leading zero coefficients)."""
    for i, c in enumerate(a):
        if c:
            return i
    return len(a)


# ---------------------------------------------------------------------------
# the rationals
# ---------------------------------------------------------------------------

class RationalField:
    """The field of rational numbers; elements are ``gmpy2.mpq`` values."""

    characteristic = 0

    def __call__(self, v):
        if isinstance(v, str):
            return mpq(v)
        return mpq(v)

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# ---------------------------------------------------------------------------
# prime fields
# ---------------------------------------------------------------------------

class PrimeFieldElement:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise TypeError("mixed prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, type(mpq(0))):
            num, den = other.numerator, other.denominator
            return (int(num) * pow(int(den), -1, self.p)) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o * pow(self.v, -1, self.p), self.p)

    def __pow__(self, k):
        if k == 0:
            return PrimeFieldElement(1, self.p)
        return PrimeFieldElement(pow(self.v, k, self.p), self.p)

    def __neg__(self):
        return PrimeFieldElement(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, v):
        if isinstance(v, PrimeFieldElement):
            if v.p != self.p:
                raise TypeError("mixed prime fields")
            return v
        if isinstance(v, str):
            if "/" in v:
                num, den = v.split("/")
                return self(int(num)) / self(int(den))
            v = int(v)
        if isinstance(v, type(mpq(0))):
            return PrimeFieldElement(0, self.p) + v
        return PrimeFieldElement(int(v), self.p)

    @property
    def zero(self):
        return PrimeFieldElement(0, self.p)

    @property
    def one(self):
        return PrimeFieldElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RatFunc:
    """An element of K(x) in canonical form (reduced, monic denominator)."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den, field, _canonical=False):
        if _canonical:
            self.num, self.den = num, den
        else:
            num = _ptrim(num)
            den = _ptrim(den)
            if not den:
                raise ZeroDivisionError("rational function with zero denominator")
            if not num:
                den = (field.base.one,)
            else:
                g = _pgcd(num, den)
                if len(g) > 1:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
                lead = den[-1]
                if lead != lead ** 0:
                    inv = 1 / lead
                    num = _pscale(num, inv)
                    den = _pscale(den, inv)
            self.num, self.den = num, den
        self.field = field

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise TypeError("mixed rational-function fields")
            return other
        try:
            return self.field(other)
        except (TypeError, ValueError):
            return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(_padd(self.num, o.num), self.den, self.field)
        return RatFunc(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
            self.field,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return self.field.zero
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k == 0:
            return self.field.one
        if k < 0:
            if not self.num:
                raise ZeroDivisionError("inverting zero rational function")
            base = RatFunc(self.den, self.num, self.field)
            k = -k
        else:
            base = self
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, self.field, _canonical=True)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        if o is None or not isinstance(o, RatFunc):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        def side(cs):
            parts = []
            for i, c in enumerate(cs):
                if not c:
                    continue
                if i == 0:
                    parts.append(f"{c}")
                elif i == 1:
                    parts.append(f"{c}*x" if c != c ** 0 else "x")
                else:
                    parts.append(f"{c}*x^{i}" if c != c ** 0 else f"x^{i}")
            return " + ".join(parts) if parts else "0"

        if self.den == (self.field.base.one,):
            return f"({side(self.num)})"
        return f"(({side(self.num)})/({side(self.den)}))"

    # -- analysis at x = 0 -------------------------------------------------

    def order_at_zero(self):
        """Valuation at x=0; None for the zero function."""
        if not self.num:
            return None
        return _pval(self.num) - _pval(self.den)


class RationalFunctionField:
    """K(x) over a base field K (the rationals or a prime field)."""

    def __init__(self, base):
        self.base = base
        self.characteristic = base.characteristic
        self.x = RatFunc((base.zero, base.one), (base.one,), self)

    def __call__(self, v):
        if isinstance(v, RatFunc):
            if v.field != self:
                raise TypeError("mixed rational-function fields")
            return v
        if isinstance(v, (list, tuple)):
            return self.from_poly(v)
        c = self.base(v)
        return RatFunc((c,), (self.base.one,), self)

    def from_poly(self, coeffs: Sequence):
        """Build the polynomial with the given ascending coefficients."""
        return RatFunc(tuple(self.base(c) for c in coeffs), (self.base.one,), self)

    @property
    def zero(self):
        return RatFunc((), (self.base.one,), self, _canonical=True)

    @property
    def one(self):
        return RatFunc((self.base.one,), (self.base.one,), self, _canonical=True)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.base == self.base

    def __hash__(self):
        return hash(("FRAC", self.base))

    def __repr__(self):
        return f"{self.base!r}(x)"


# ---------------------------------------------------------------------------
# local-ring analysis at x = 0
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalSplit:
    """The unique decomposition f = regular + principal at x = 0."""

    regular: RatFunc
    principal: RatFunc


def order_at_zero(f: RatFunc):
    return f.order_at_zero()


def split_at_zero(f: RatFunc) -> LocalSplit:
    """Split f into its pole-free part and its principal part at x = 0.

    The principal part is the finite tail of strictly negative powers of x
    in the Laurent expansion of f at 0; both summands are returned as exact
    rational functions and add back to f on the nose.
    """
    K = f.field
    if not f.num:
        return LocalSplit(K.zero, K.zero)
    k = _pval(f.den)
    if k == 0:
        return LocalSplit(f, K.zero)
    d0 = f.den[k:]
    # power-series inverse of d0 modulo x^k
    inv0 = 1 / d0[0]
    t = [inv0]
    for j in range(1, k):
        acc = None
        for i in range(1, min(j, len(d0) - 1) + 1):
            term = d0[i] * t[j - i]
            acc = term if acc is None else acc + term
        t.append(-inv0 * acc if acc is not None else d0[0] - d0[0])
    # series of num/d0 modulo x^k
    s = [K.base.zero] * k
    for i, c in enumerate(f.num[:k]):
        if not c:
            continue
        for j in range(k - i):
            s[i + j] = s[i + j] + c * t[j]
    xk = (K.base.zero,) * k + (K.base.one,)
    principal = RatFunc(tuple(s), xk, K)
    return LocalSplit(f - principal, principal)


def specialize_at_zero(f: RatFunc):
    """Evaluate f at x = 0 exactly; raises PoleAtZeroError on a pole."""
    ord0 = f.order_at_zero()
    if ord0 is not None and ord0 < 0:
        raise PoleAtZeroError(f"pole of order {-ord0} at x=0: {f!r}")
    base = f.field.base
    return _peval(f.num, base.zero, base.zero) / _peval(f.den, base.zero, base.zero)


def principal_coeff(f: RatFunc, d: int):
    """The coefficient of x^(-d), d >= 1, in the Laurent expansion of f at 0."""
    if d < 1:
        raise ValueError("principal_coeff wants d >= 1")
    base = f.field.base
    pr = split_at_zero(f).principal
    if not pr.num:
        return base.zero
    k = _pval(pr.den)  # pr = s(x) / x^k in lowest terms
    i = k - d
    if i < 0 or i >= len(pr.num):
        return base.zero
    return pr.num[i]


def laurent_coeff(f: RatFunc, k: int):
    """The coefficient of x^k, any integer k, in the Laurent expansion at 0."""
    base = f.field.base
    if not f.num:
        return base.zero
    if k < 0:
        return principal_coeff(f, -k)
    reg = split_at_zero(f).regular
    if not reg.num:
        return base.zero
    num, den = reg.num, reg.den
    inv0 = 1 / den[0]
    coeffs = []
    for j in range(k + 1):
        acc = num[j] if j < len(num) else base.zero
        for i in range(1, min(j, len(den) - 1) + 1):
            acc = acc - den[i] * coeffs[j - i]
        coeffs.append(acc * inv0)
    return coeffs[k]


# ---------------------------------------------------------------------------
# quantum integers
# ---------------------------------------------------------------------------

def quantum_integer(k: int, xi):
    """[k] = (xi^k - 1)/(xi - 1) for any integer k, with [k] = k at xi = 1."""
    one = xi ** 0
    if xi == one:
        return one * k
    return (xi ** k - one) / (xi - one)


# ---------------------------------------------------------------------------
# parameter bundles
# ---------------------------------------------------------------------------

class GenericParams:
    """The parameter tuple (n, ell, xi, Q_1..Q_ell) over a base field.

    With ``generic=True`` the active coefficient field becomes K(x) and the
    active parameters are the deformed ones

        xi      ->  x + xi,
        Q_i     ->  x^(i*n) + Q_i,

    which specialize back to the input at x = 0 and keep all tableau
    contents pairwise distinct.  All algebra modules read ``.field``,
    ``.xi`` and ``.Q`` and never care which mode is active.
    """

    def __init__(self, n: int, ell: int, xi, Q, base=QQ, generic: bool = False):
        if n < 0 or ell < 1:
            raise ValueError("need n >= 0 and ell >= 1")
        self.n = n
        self.ell = ell
        self.base = base
        self.xi0 = base(xi)
        self.Q0 = tuple(base(q) for q in Q)
        if len(self.Q0) != ell:
            raise ValueError(f"expected {ell} cyclotomic parameters, got {len(self.Q0)}")
        if not self.xi0:
            raise ValueError("xi must be invertible")
        self.generic = bool(generic)
        if self.generic:
            K = RationalFunctionField(base)
            self.field = K
            self.xi = K.x + self.xi0
            self.Q = tuple(K.x ** (i * n) + q for i, q in enumerate(self.Q0, start=1))
        else:
            self.field = base
            self.xi = self.xi0
            self.Q = self.Q0

    # -- mode switches -----------------------------------------------------

    def generic_version(self) -> "GenericParams":
        if self.generic:
            return self
        return GenericParams(self.n, self.ell, self.xi0, self.Q0, self.base, generic=True)

    def specialized_version(self) -> "GenericParams":
        if not self.generic:
            return self
        return GenericParams(self.n, self.ell, self.xi0, self.Q0, self.base, generic=False)

    def embed_base(self, c):
        """Lift a base-field constant into the active field."""
        return self.field(c) if self.generic else self.base(c)

    def specialize_scalar(self, v):
        """Map an active-field scalar to the base field (x -> 0 when generic)."""
        if not self.generic:
            return v
        return specialize_at_zero(v)

    def _key(self):
        return (self.n, self.ell, self.base, self.xi0, self.Q0, self.generic)

    def __eq__(self, other):
        return isinstance(other, GenericParams) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        mode = "generic" if self.generic else "specialized"
        return (f"GenericParams(n={self.n}, ell={self.ell}, xi={self.xi0}, "
                f"Q={tuple(str(q) for q in self.Q0)}, base={self.base!r}, {mode})")


# ---------------------------------------------------------------------------
# JSON encodings (see README: "p/q" strings; ratfuncs as coefficient arrays)
# ---------------------------------------------------------------------------

def scalar_to_json(v):
    if isinstance(v, RatFunc):
        return {
            "num": [str(c) for c in v.num],
            "den": [str(c) for c in v.den],
        }
    return str(v)


def scalar_from_json(data, field):
    if isinstance(data, dict):
        if not isinstance(field, RationalFunctionField):
            raise TypeError("rational-function JSON needs a rational-function field")
        num = tuple(field.base(c) for c in data["num"])
        den = tuple(field.base(c) for c in data["den"])
        return RatFunc(num, den, field)
    return field(data)
