"""The cyclotomic Hecke algebra of type G(l,1,n), as a rewrite system.

The algebra has generators L_1..L_n (a commuting family) and T_1..T_{n-1},
subject to

    prod_l (L_1 - Q_l) = 0,            (T_r + 1)(T_r - xi) = 0,
    braid relations for the T's,       T_r L_t = L_t T_r  (t != r, r+1),
    L_{r+1} (T_r - xi + 1) = T_r L_r + 1,

and is free as a module with basis  L_1^{c_1} .. L_n^{c_n} T_w  where
0 <= c_i < l and w runs over the symmetric group; its dimension is
l^n * n!.  Elements are stored as dictionaries mapping such monomials to
scalars, and products are computed by rewriting:

* left multiplication by T_i swaps the two neighbouring L-exponents and
  resolves T_i T_w by length, plus lower correction terms in the L's whose
  exponents never exceed the larger of the two swapped ones -- so no
  cyclotomic reduction is ever needed mid-step;
* an L-exponent that reaches l is eliminated by a cached normal form of
  L_k^l.  For k = 1 this is the cyclotomic relation; for k > 1 it is built
  recursively from L_k^l = xi^{-1} T_{k-1} L_{k-1}^l T_{k-1} + (correction
  terms with legal exponents) T_{k-1}, which only needs the normal form at
  k-1 and overflow-free T-multiplications.

Reduction of a general monomial always substitutes at the largest
offending index; the normal form of L_k^l only involves L_1..L_k, so the
vector of exponent excesses, read from position n down to 1, drops
lexicographically at each substitution and the rewriting terminates.

>>> from .coeff import GenericParams
>>> H = HeckeAlgebra(GenericParams(2, 2, 3, (1, 2)))
>>> H.dim
8
>>> T1, L1, L2 = H.T(1), H.L(1), H.L(2)
>>> T1 * L1 == L2 * T1 - (H.xi - 1) * L2 - H.one()
True
>>> (T1 + H.one()) * (T1 - H.xi * H.one()) == H.zero()
True
>>> (L1 - 1) * (L1 - 2) == H.zero()
True
"""

from __future__ import annotations

import itertools
import os
from typing import Dict, Iterator, Tuple

from .coeff import GenericParams
from .combinat import Permutation

__all__ = ["HeckeAlgebra", "HeckeElement"]

Mono = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (L-exponents, permutation images)


class HeckeElement:
    """An element, stored as {(exponents, permutation images): scalar}."""

    __slots__ = ("algebra", "data")

    def __init__(self, algebra: "HeckeAlgebra", data: Dict[Mono, object]):
        self.algebra = algebra
        self.data = data

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        other = self.algebra.coerce(other)
        out = dict(self.data)
        for k, v in other.data.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return HeckeElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.algebra, {k: -v for k, v in self.data.items()})

    def __sub__(self, other):
        return self + (-self.algebra.coerce(other))

    def __rsub__(self, other):
        return self.algebra.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        s = self.algebra.scalar(other)
        if s is None:
            return NotImplemented
        if not s:
            return self.algebra.zero()
        return HeckeElement(self.algebra, {k: v * s for k, v in self.data.items()})

    def __rmul__(self, other):
        s = self.algebra.scalar(other)
        if s is None:
            return NotImplemented
        if not s:
            return self.algebra.zero()
        return HeckeElement(self.algebra, {k: s * v for k, v in self.data.items()})

    def __truediv__(self, other):
        s = self.algebra.scalar(other)
        if s is None:
            return NotImplemented
        return self * (s ** -1 if hasattr(s, "__pow__") else 1 / s)

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra is other.algebra and self.data == other.data
        coerced = self.algebra.scalar(other)
        if coerced is not None:
            return self == self.algebra.one() * coerced
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def __bool__(self):
        return bool(self.data)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.data

    def coeff(self, exps, w):
        img = w.img if isinstance(w, Permutation) else tuple(w)
        v = self.data.get((tuple(exps), img))
        return v if v is not None else self.algebra.field_zero

    def terms(self):
        """Sorted (exponents, Permutation, coefficient) triples."""
        for (c, img) in sorted(self.data):
            yield c, Permutation(img), self.data[(c, img)]

    def support_size(self) -> int:
        return len(self.data)

    def star(self) -> "HeckeElement":
        return self.algebra.star(self)

    def to_json(self):
        from .coeff import scalar_to_json
        return [{"c": list(c), "w": list(img), "coeff": scalar_to_json(v)}
                for (c, img), v in sorted(self.data.items())]

    def __repr__(self):
        if not self.data:
            return "0"
        parts = []
        for c, w, v in self.terms():
            mono = []
            for k, e in enumerate(c, start=1):
                if e == 1:
                    mono.append(f"L{k}")
                elif e:
                    mono.append(f"L{k}^{e}")
            if not w.is_identity():
                mono.append("T[" + ",".join(map(str, w.reduced_word())) + "]")
            body = "*".join(mono) if mono else "1"
            parts.append(f"({v})*{body}")
        return " + ".join(parts)


class HeckeAlgebra:
    """The algebra attached to a parameter bundle, with cached rewriting."""

    def __init__(self, params: GenericParams):
        self.params = params
        self.n = params.n
        self.ell = params.ell
        self.field = params.field
        self.xi = params.xi
        self.Q = params.Q
        self.field_one = self.xi ** 0
        self.field_zero = self.field_one - self.field_one
        self.xi_inv = self.xi ** -1
        self._id_img = tuple(range(1, self.n + 1))
        self._tmul_cache: Dict[Tuple[int, Mono], Dict[Mono, object]] = {}
        self._rtmul_cache: Dict[Tuple[Mono, int], Dict[Mono, object]] = {}
        self._nf_cache: Dict[int, Dict[Mono, object]] = {}
        # CYCLOHECKE_CACHE_LIMIT caps the number of memoized single-step
        # products (per cache); the cache is dropped wholesale when full.
        limit = os.environ.get("CYCLOHECKE_CACHE_LIMIT")
        self._cache_limit = int(limit) if limit else None

    def _cache_put(self, cache, key, val):
        if self._cache_limit is not None and len(cache) >= self._cache_limit:
            cache.clear()
        cache[key] = val

    # -- element construction ---------------------------------------------

    @property
    def dim(self) -> int:
        d = self.ell ** self.n
        for k in range(2, self.n + 1):
            d *= k
        return d

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def one(self) -> HeckeElement:
        return self.monomial((0,) * self.n, Permutation.identity(self.n))

    def monomial(self, exps, w) -> HeckeElement:
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 or e >= self.ell for e in exps):
            raise ValueError(f"illegal exponent vector {exps}")
        img = w.img if isinstance(w, Permutation) else tuple(w)
        return HeckeElement(self, {(exps, img): self.field_one})

    def L(self, k: int) -> HeckeElement:
        if not 1 <= k <= self.n:
            raise ValueError(f"L_{k} does not exist for n={self.n}")
        if self.ell == 1:
            # L_1 = Q_1 and the higher L's follow from the corollary;
            # with l = 1 every exponent reduces immediately.
            return self._elem(self._nf(k))
        exps = tuple(1 if j == k else 0 for j in range(1, self.n + 1))
        return self.monomial(exps, Permutation.identity(self.n))

    def T(self, i: int) -> HeckeElement:
        return self.monomial((0,) * self.n, Permutation.transposition(self.n, i))

    def t_w(self, w: Permutation) -> HeckeElement:
        """The basis element T_w."""
        return self.monomial((0,) * self.n, w)

    def l_monomial(self, exps) -> HeckeElement:
        """L_1^{c_1} .. L_n^{c_n} for arbitrary non-negative exponents."""
        out: Dict[Mono, object] = {}
        self._reduce_into(tuple(exps), self._id_img, self.field_one, out)
        return self._elem(out)

    def element(self, data) -> HeckeElement:
        out = {}
        for (c, w), v in data.items():
            img = w.img if isinstance(w, Permutation) else tuple(w)
            if v:
                out[(tuple(c), img)] = v
        return HeckeElement(self, out)

    def basis(self) -> Iterator[HeckeElement]:
        for c, img in self.basis_keys():
            yield HeckeElement(self, {(c, img): self.field_one})

    def basis_keys(self) -> Iterator[Mono]:
        for c in itertools.product(range(self.ell), repeat=self.n):
            for img in itertools.permutations(range(1, self.n + 1)):
                yield (c, img)

    def coerce(self, v) -> HeckeElement:
        if isinstance(v, HeckeElement):
            if v.algebra is not self:
                raise ValueError("mixed algebras")
            return v
        s = self.scalar(v)
        if s is None:
            raise TypeError(f"cannot coerce {v!r} into the algebra")
        return self.one() * s

    def scalar(self, v):
        if isinstance(v, HeckeElement):
            return None
        try:
            return self.params.embed_base(v) if not hasattr(v, "field") else self.field(v)
        except (TypeError, ValueError):
            return None

    def _elem(self, data: Dict[Mono, object]) -> HeckeElement:
        return HeckeElement(self, {k: v for k, v in data.items() if v})

    # -- rewriting ---------------------------------------------------------

    def _t_times_mono(self, i: int, mono: Mono) -> Dict[Mono, object]:
        """T_i * (L-monomial * T_w), all results in normal form."""
        key = (i, mono)
        hit = self._tmul_cache.get(key)
        if hit is not None:
            return hit
        exps, img = mono
        k, m = exps[i - 1], exps[i]  # exponents of L_i and L_{i+1}
        out: Dict[Mono, object] = {}

        def add(e, w, coeff):
            key2 = (e, w)
            s = out.get(key2)
            s = coeff if s is None else s + coeff
            if s:
                out[key2] = s
            elif key2 in out:
                del out[key2]

        # main term: exponents swapped, then T_i T_w resolved by length
        swapped = list(exps)
        swapped[i - 1], swapped[i] = m, k
        swapped = tuple(swapped)
        pre = list(img)
        pre[i - 1], pre[i] = pre[i], pre[i - 1]  # images of s_i * w
        pre = tuple(pre)
        if img[i - 1] < img[i]:  # length goes up
            add(swapped, pre, self.field_one)
        else:
            add(swapped, img, self.xi - 1)
            add(swapped, pre, self.xi)

        # correction terms: pure L-monomials times T_w
        def lterm(ei, eip1, coeff):
            e = list(exps)
            e[i - 1], e[i] = ei, eip1
            add(tuple(e), img, coeff)

        if k >= m:
            for c in range(m + 1, k + 1):
                lterm(k + m - c, c, -(self.xi - 1))
            for c in range(m, k):
                lterm(k + m - c - 1, c, -self.field_one)
        else:
            for c in range(k + 1, m + 1):
                lterm(k + m - c, c, self.xi - 1)
            for c in range(k, m):
                lterm(k + m - c - 1, c, self.field_one)

        self._cache_put(self._tmul_cache, key, out)
        return out

    def _t_times(self, i: int, data: Dict[Mono, object]) -> Dict[Mono, object]:
        out: Dict[Mono, object] = {}
        for mono, v in data.items():
            for m2, c2 in self._t_times_mono(i, mono).items():
                s = out.get(m2)
                s = v * c2 if s is None else s + v * c2
                if s:
                    out[m2] = s
                elif m2 in out:
                    del out[m2]
        return out

    def _mono_times_t(self, mono: Mono, r: int) -> Dict[Mono, object]:
        """(L-monomial * T_w) * T_r; only the T-part is touched."""
        key = (mono, r)
        hit = self._rtmul_cache.get(key)
        if hit is not None:
            return hit
        exps, img = mono
        post = tuple(r + 1 if a == r else r if a == r + 1 else a for a in img)
        if img.index(r) < img.index(r + 1):  # length goes up
            out = {(exps, post): self.field_one}
        else:
            out = {(exps, img): self.xi - 1, (exps, post): self.xi}
        self._cache_put(self._rtmul_cache, key, out)
        return out

    def _times_t(self, data: Dict[Mono, object], r: int) -> Dict[Mono, object]:
        out: Dict[Mono, object] = {}
        for mono, v in data.items():
            for m2, c2 in self._mono_times_t(mono, r).items():
                s = out.get(m2)
                s = v * c2 if s is None else s + v * c2
                if s:
                    out[m2] = s
                elif m2 in out:
                    del out[m2]
        return out

    def _cyclotomic_coeffs(self):
        """L_1^l = sum_j coeffs[j] L_1^j from prod_l (L_1 - Q_l) = 0."""
        poly = [self.field_one]  # coefficients of prod (X - Q_l), ascending
        for q in self.Q:
            new = [self.field_zero] * (len(poly) + 1)
            for j, c in enumerate(poly):
                new[j + 1] = new[j + 1] + c
                new[j] = new[j] - q * c
            poly = new
        return [-c for c in poly[:-1]]  # X^l = -(lower part)

    def _nf(self, k: int) -> Dict[Mono, object]:
        """Normal form of L_k^l (of L_1 = Q_1 itself when l = 1)."""
        hit = self._nf_cache.get(k)
        if hit is not None:
            return hit
        if k == 1:
            coeffs = self._cyclotomic_coeffs()
            out = {}
            for j, c in enumerate(coeffs):
                if c:
                    exps = tuple(j if t == 0 else 0 for t in range(self.n))
                    out[(exps, self._id_img)] = c
        else:
            prev = self._nf(k - 1)  # L_{k-1}^l
            # xi^{-1} T_{k-1} L_{k-1}^l T_{k-1}
            acc = self._t_times(k - 1, prev)
            acc = self._times_t(acc, k - 1)
            out = {m: self.xi_inv * v for m, v in acc.items()}

            def add_mono(exps, img, coeff):
                key2 = (tuple(exps), img)
                s = out.get(key2)
                s = coeff if s is None else s + coeff
                if s:
                    out[key2] = s
                elif key2 in out:
                    del out[key2]

            sk = tuple(k if a == k - 1 else k - 1 if a == k else a
                       for a in self._id_img)  # images of s_{k-1}
            lvl = self.ell
            # xi^{-1}(xi-1) sum_{c=1}^{l-1} L_k^c L_{k-1}^{l-c} T_{k-1}
            for c in range(1, lvl):
                e = [0] * self.n
                e[k - 1], e[k - 2] = c, lvl - c
                add_mono(e, sk, self.xi_inv * (self.xi - 1))
            # xi^{-1} sum_{c=0}^{l-1} L_{k-1}^c L_k^{l-1-c} T_{k-1}
            for c in range(0, lvl):
                e = [0] * self.n
                e[k - 2], e[k - 1] = c, lvl - 1 - c
                add_mono(e, sk, self.xi_inv)
        self._nf_cache[k] = out
        return out

    def _reduce_into(self, exps, img, coeff, out: Dict[Mono, object]):
        """Accumulate coeff * L^exps T_w, rewriting oversized exponents."""
        t = None
        for j in range(self.n - 1, -1, -1):
            if exps[j] >= self.ell:
                t = j
                break
        if t is None:
            key = (tuple(exps), img)
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s:
                out[key] = s
            elif key in out:
                del out[key]
            return
        rest = list(exps)
        rest[t] -= self.ell
        for (d, v), c2 in self._nf(t + 1).items():
            merged = [a + b for a, b in zip(rest, d)]
            term = self._compose_t(v, img)
            for w2, c3 in term.items():
                self._reduce_into(tuple(merged), w2, coeff * c2 * c3, out)

    def _compose_t(self, vimg, wimg) -> Dict[Tuple[int, ...], object]:
        """T_v * T_w as a combination of T_u (no L-parts involved)."""
        if vimg == self._id_img:
            return {wimg: self.field_one}
        word = Permutation(vimg).reduced_word()
        acc = {((0,) * self.n, wimg): self.field_one}
        for i in reversed(word):
            acc = self._t_times(i, acc)
        return {img: v for ((_e, img), v) in acc.items()}

    # -- products ----------------------------------------------------------

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("mixed algebras")
        out: Dict[Mono, object] = {}
        for (c, img), va in a.data.items():
            word = Permutation(img).reduced_word()
            acc = b.data
            for i in reversed(word):
                acc = self._t_times(i, acc)
            for (d, v), vb in acc.items():
                merged = tuple(x + y for x, y in zip(c, d))
                self._reduce_into(merged, v, va * vb, out)
        return self._elem(out)

    def star(self, a: HeckeElement) -> HeckeElement:
        """The anti-involution fixing every generator L_k and T_i."""
        out = self.zero()
        for (c, img), v in a.data.items():
            w_inv = Permutation(img).inverse()
            out = out + v * self.multiply(self.t_w(w_inv), self.l_monomial(c))
        return out
