"""Murphy-type cellular elements for the unified Hecke algebra.

For a multicomposition mu of n with ell components,

    m_mu = ( sum_{w in S_mu} T_w ) * prod_{k=2}^{ell} prod_{m=1}^{a_k} (L_m - Q_k)

with a_k = |mu^(1)| + ... + |mu^(k-1)|, and the dual element

    n_mu = (-xi)^{n(mu)} * ( sum_{w in S_mu'} (-xi)^{-len(w)} T_w )
            * prod_{k=2}^{ell} prod_{m=1}^{b_k} (L_m - Q_{ell-k+1})

with b_k = |mu^(ell)| + ... + |mu^(ell-k+2)| and n(mu) = sum_i (i-1)|mu^(i)|.
Pairs of standard tableaux then index the cellular family and its dual:

    m_st = T_{d(s)}^* m_lambda T_{d(t)},
    n_st = (-xi)^{-len(d'(s)) - len(d'(t))} T_{d(s')}^* n_lambda T_{d(t')},

where s' is the conjugate tableau (of shape lambda') and d(t') = d'(t); the
test-suite checks that identity rather than trusting it.  The quasi-idempotent
z_lambda = m_lambda T_{w_lambda} n_lambda drives the cocenter computations.

>>> from .coeff import QQ, GenericParams
>>> from .hecke import HeckeAlgebra
>>> from .combinat import Multipartition
>>> H = HeckeAlgebra(GenericParams(1, 2, QQ(2), (QQ(3), QQ(5))))
>>> cb = CellularBasis(H)
>>> cb.m_mu(Multipartition(((1,), ())))
(-5)*1 + (1)*L1
>>> cb.n_mu(Multipartition(((1,), ())))
(1)*1
>>> cb.n_mu(Multipartition(((), (1,))))
(6)*1 + (-2)*L1
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .combinat import (
    Multicomposition,
    Multipartition,
    StandardTableau,
    cell_pairs_ordered,
    w_lambda,
    young_subgroup,
)
from .hecke import HeckeAlgebra, HeckeElement

__all__ = ["CellularBasis", "n_of_shape"]


def n_of_shape(mu: Multicomposition) -> int:
    """sum_i (i-1)|mu^(i)| over the components."""
    return sum(i * sum(comp) for i, comp in enumerate(mu.comps))


class CellularBasis:
    """Cellular (and dual cellular) elements of one Hecke algebra, cached."""

    def __init__(self, algebra: HeckeAlgebra):
        self.algebra = algebra
        self._m_mu: Dict[Multicomposition, HeckeElement] = {}
        self._n_mu: Dict[Multicomposition, HeckeElement] = {}
        self._m_st: Dict[Tuple[StandardTableau, StandardTableau], HeckeElement] = {}
        self._n_st: Dict[Tuple[StandardTableau, StandardTableau], HeckeElement] = {}

    # -- the shape-level elements ------------------------------------------

    def _subgroup_sum(self, mc: Multicomposition, signed: bool) -> HeckeElement:
        H = self.algebra
        acc = H.zero()
        neg_xi_inv = -H.xi_inv
        for w in young_subgroup(mc):
            term = H.t_w(w)
            if signed:
                term = term * neg_xi_inv ** w.length()
            acc = acc + term
        return acc

    def m_mu(self, mu: Multicomposition) -> HeckeElement:
        try:
            return self._m_mu[mu]
        except KeyError:
            pass
        H = self.algebra
        acc = self._subgroup_sum(mu, signed=False)
        sizes = [sum(c) for c in mu.comps]
        for k in range(2, H.ell + 1):
            q = H.one() * H.Q[k - 1]
            for m in range(1, sum(sizes[: k - 1]) + 1):
                acc = acc * (H.L(m) - q)
        self._m_mu[mu] = acc
        return acc

    def n_mu(self, mu: Multicomposition) -> HeckeElement:
        try:
            return self._n_mu[mu]
        except KeyError:
            pass
        H = self.algebra
        acc = self._subgroup_sum(mu.conjugate(), signed=True)
        sizes = [sum(c) for c in mu.comps]
        for k in range(2, H.ell + 1):
            # parameters are consumed in reverse: interval 1..b_k hits Q_{ell-k+1}
            q = H.one() * H.Q[H.ell - k]
            for m in range(1, sum(sizes[H.ell - k + 1:]) + 1):
                acc = acc * (H.L(m) - q)
        acc = acc * (-H.xi) ** n_of_shape(mu)
        self._n_mu[mu] = acc
        return acc

    # -- tableau pairs ------------------------------------------------------

    def m_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        key = (s, t)
        try:
            return self._m_st[key]
        except KeyError:
            pass
        H = self.algebra
        lam = s.shape
        if t.shape != lam:
            raise ValueError("tableaux of different shapes")
        elem = H.t_w(s.d_perm().inverse()) * self.m_mu(lam) * H.t_w(t.d_perm())
        self._m_st[key] = elem
        return elem

    def n_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        key = (s, t)
        try:
            return self._n_st[key]
        except KeyError:
            pass
        H = self.algebra
        lam = s.shape
        if t.shape != lam:
            raise ValueError("tableaux of different shapes")
        ds = s.conjugate().d_perm()  # = d'(s)
        dt = t.conjugate().d_perm()  # = d'(t)
        elem = H.t_w(ds.inverse()) * self.n_mu(lam) * H.t_w(dt)
        elem = elem * (-H.xi_inv) ** (ds.length() + dt.length())
        self._n_st[key] = elem
        return elem

    def z_lambda(self, lam: Multipartition) -> HeckeElement:
        H = self.algebra
        return self.m_mu(lam) * H.t_w(w_lambda(lam)) * self.n_mu(lam)

    # -- whole families -----------------------------------------------------

    def pairs(self) -> List[Tuple[Multipartition, StandardTableau, StandardTableau]]:
        """Cellular labels in a total order refining pair dominance
        (most dominant first)."""
        H = self.algebra
        return cell_pairs_ordered(H.n, H.ell)

    def m_family(self) -> List[HeckeElement]:
        return [self.m_st(s, t) for (_, s, t) in self.pairs()]

    def n_family(self) -> List[HeckeElement]:
        return [self.n_st(s, t) for (_, s, t) in self.pairs()]
