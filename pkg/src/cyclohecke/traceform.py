"""The unified symmetrizing trace and the scalars attached to it.

On the monomial basis the trace is

    tau(L_1^{c_1} ... L_n^{c_n} T_w) = (1-xi)^{n(ell-1) - sum c_i}   if w = 1,
                                       0                             otherwise,

with the convention 0^0 = 1 so that the degenerate point xi = 1 is included
(the exponent is always >= 0, and it vanishes exactly on the monomial with
every L-exponent maximal).  At xi = 1 this collapses to the top-coefficient
functional, for xi != 1 it is (1-xi)^{n(ell-1)} times the identity-coefficient
functional; neither of those two is symmetric on its own for ell > 1, which
is the point of the unified definition.

>>> from .coeff import QQ, GenericParams
>>> from .hecke import HeckeAlgebra
>>> H = HeckeAlgebra(GenericParams(2, 2, QQ(3), (QQ(2), QQ(5))))
>>> tau(H.one())        # (1-3)^(2*1)
mpq(4,1)
>>> tau(H.L(1))         # (1-3)^1
mpq(-2,1)
>>> tau(H.L(1) * H.L(2))
mpq(1,1)
>>> tau(H.T(1))
mpq(0,1)

The scalar r_lambda is the trace of the quasi-idempotent product
m_lambda T_{w_lambda} n_lambda T_{w_lambda'}; it is a unit exactly when every
Q_s(xi-1)+1 is:

    r_lambda = (-1)^{n(lambda)} xi^{n(lambda)+len(w_lambda)}
                   prod_s (Q_s(xi-1)+1)^{n-|lambda^(s)|}.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .coeff import quantum_integer
from .combinat import Multipartition, enumerate_multipartitions, w_lambda
from .hecke import HeckeAlgebra, HeckeElement

__all__ = [
    "tau",
    "r_lambda",
    "gram_matrix",
    "cellular_gram",
    "gram_diagonal_unit",
    "semisimple_criterion",
    "schur_elements",
]


def tau(elem: HeckeElement):
    """The symmetrizing trace of a Hecke algebra element."""
    H = elem.algebra
    base = H.field_one - H.xi
    total = H.n * (H.ell - 1)
    ident = H._id_img
    acc = H.field_zero
    for (exps, img), coeff in elem.data.items():
        if img != ident:
            continue
        e = total - sum(exps)
        if e == 0:
            acc = acc + coeff
        else:
            acc = acc + coeff * base ** e
    return acc


def r_lambda(H: HeckeAlgebra, lam: Multipartition):
    """(-1)^n(lam) xi^(n(lam)+len(w_lam)) prod_s (Q_s(xi-1)+1)^(n-|lam^(s)|)."""
    nn = sum(i * sum(comp) for i, comp in enumerate(lam.comps))
    acc = H.xi ** (nn + w_lambda(lam).length())
    if nn % 2:
        acc = -acc
    ximinus1 = H.xi - H.field_one
    comps = list(lam.comps) + [()] * (H.ell - len(lam.comps))
    for s in range(H.ell):
        e = H.n - sum(comps[s])
        if e:
            acc = acc * (H.Q[s] * ximinus1 + H.field_one) ** e
    return acc


def gram_matrix(family1: Sequence[HeckeElement], family2: Sequence[HeckeElement]):
    """tau(a*b) over the two families."""
    return [[tau(a * b) for b in family2] for a in family1]


def gram_diagonal_unit(H: HeckeAlgebra, s, t):
    """The normalization (-xi)^(-len(d'(s))-len(d'(t))) that the dual cellular
    element carries; the Gram diagonal is this unit times r_lambda."""
    e = s.conjugate().d_perm().length() + t.conjugate().d_perm().length()
    return (-H.xi_inv) ** e


def cellular_gram(cell) -> Tuple[list, List[list]]:
    """The Gram matrix tau(m_st * n_(t_j s_j)) with both sides run through the
    dominance linearization of cellular labels; lower triangular, and the
    (i,i) entry is gram_diagonal_unit(s_i,t_i) * r_lambda.

    Returns (labels, matrix) with labels[i] = (shape, s_i, t_i)."""
    pairs = cell.pairs()
    rows = [cell.m_st(s, t) for (_, s, t) in pairs]
    cols = [cell.n_st(t, s) for (_, s, t) in pairs]
    return pairs, gram_matrix(rows, cols)


def semisimple_criterion(H: HeckeAlgebra):
    """Nonzero exactly when the algebra is (split) semisimple:
    prod_{1<=k<=n} [k]_xi * prod_{l<r} prod_{-n<k<n} (Q_r - xi^k Q_l - [k]_xi)."""
    acc = H.field_one
    for k in range(1, H.n + 1):
        acc = acc * quantum_integer(k, H.xi)
    for l in range(H.ell):
        for r in range(l + 1, H.ell):
            for k in range(-(H.n - 1), H.n):
                acc = acc * (H.Q[r] - H.xi ** k * H.Q[l] - quantum_integer(k, H.xi))
    return acc


def schur_elements(seminormal) -> dict:
    """Schur elements via the trace decomposition tau = sum_lam (1/s_lam) chi^lam.

    The irreducible characters are evaluated through the seminormal
    coordinates (chi^lam(h) = sum_s gamma_s * [f_ss-coordinate of h]) and the
    weights 1/s_lam are solved from tau(b) over the whole monomial basis; the
    system is overdetermined and must be consistent."""
    from .algkit import solve

    H = seminormal.algebra
    shapes = enumerate_multipartitions(H.n, H.ell)
    rows = []
    rhs = []
    for key in H.basis_keys():
        elem = H.monomial(*key)
        coords = seminormal.expand_in_f(elem)
        chi = {lam: H.field_zero for lam in shapes}
        for (s, t), c in coords.items():
            if s == t:
                lam = s.shape
                chi[lam] = chi[lam] + seminormal.gamma(s) * c
        rows.append([chi[lam] for lam in shapes])
        rhs.append(tau(elem))
    sol = solve(rows, rhs)
    if sol is None:
        raise ArithmeticError("character system is inconsistent")
    out = {}
    for lam, inv in zip(shapes, sol):
        if not inv:
            raise ZeroDivisionError(f"vanishing Schur element weight at {lam!r}")
        out[lam] = H.field_one / inv
    return out


# ---------------------------------------------------------------------------
# the cocenter of the Hecke algebra
# ---------------------------------------------------------------------------

def structure_algebra(H: HeckeAlgebra):
    """The multiplication table of the algebra over its monomial basis,
    packaged for the generic center/cocenter machinery, with the trace
    vector attached."""
    from .algkit import StructureConstantAlgebra

    keys = list(H.basis_keys())
    index = {k: i for i, k in enumerate(keys)}
    table = []
    for a in keys:
        ea = HeckeElement(H, {a: H.field_one})
        row = []
        for b in keys:
            prod = ea * HeckeElement(H, {b: H.field_one})
            row.append({index[k]: c for k, c in prod.data.items()})
        table.append(row)
    one_vec = [H.field_zero] * len(keys)
    for k, c in H.one().data.items():
        one_vec[index[k]] = c
    trace = [tau(HeckeElement(H, {k: H.field_one})) for k in keys]
    alg = StructureConstantAlgebra(len(keys), table, one_vec, H.field_one,
                                   trace=trace)
    alg.key_index = index
    return alg


def element_vector(alg, elem: HeckeElement):
    """Coordinates of a Hecke element over the monomial basis, in the order
    used by structure_algebra."""
    vec = [alg.zero] * alg.dimension
    for k, c in elem.data.items():
        vec[alg.key_index[k]] = c
    return vec


def class_element(H: HeckeAlgebra, lam: Multipartition) -> HeckeElement:
    """The canonical cocenter representative z_lambda T_{w_{lambda'}}.

    Its class in H/[H,H] depends on lambda only through the residue
    equivalence class of lambda, and the classes of inequivalent shapes are
    linearly independent whenever every Q_r(xi-1)+1 is invertible.
    """
    from .cellular import CellularBasis

    cell = CellularBasis(H)
    return cell.z_lambda(lam) * H.t_w(w_lambda(lam.conjugate()))


def class_dependence(H: HeckeAlgebra, lam: Multipartition, mu: Multipartition,
                     alg=None) -> bool:
    """Are the cocenter classes of z_lam T_{w_{lam'}} and z_mu T_{w_{mu'}}
    linearly dependent?  (Pass a cached structure_algebra to amortize.)"""
    if alg is None:
        alg = structure_algebra(H)
    u = element_vector(alg, class_element(H, lam))
    v = element_vector(alg, class_element(H, mu))
    return alg.class_dependence(u, v)
