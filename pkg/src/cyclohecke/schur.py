"""The cyclotomic Schur algebra of a saturated multicomposition family.

Fix the Hecke algebra of G(l,1,n) and a family C of multicompositions of n
with l components such that the column-reading multipartition
omega = (0,..,0,(1^n)) lies in C and every multipartition strictly dominating
a member of C lies in C.  The Schur algebra is

    S  =  End_H( + over mu in C of  m_mu H ),

acting on the left of the right ideals m_mu H generated by the cellular
generators m_mu.  It carries the semistandard cellular basis

    phi_ST : m_nu h  |->  m_ST h        (zero on the other summands),

indexed by pairs of semistandard lambda-tableaux S (of type mu) and T (of
type nu) over all multipartition shapes lambda, where m_ST is the sum of the
cellular basis elements m_st over the standard pairs mapping onto (S,T).
Since m_omega = 1, the corner phi1_omega S phi1_omega is the Hecke algebra
itself, embedded by left multiplication; the trace, center and cocenter of
the two algebras are compared through that corner.

Elements are stored as exact coordinate vectors over the semistandard basis.
Each basis element also materializes, on demand, its block matrix acting on
the chosen module bases of the m_mu H; the action is faithful, so products,
commutation and idempotency can be checked there and expanded back into
coordinates afterwards.

The seminormal layer (over a field where the tableau contents separate, e.g.
the deformed one) diagonalizes the Jucys-Murphy operators

    L^mu_{i,k}  =  sum of the L_a over the entries a in row i of component k
                   of the row filling of mu  (left multiplication on m_mu H),

producing the idempotents F_T projecting onto the simultaneous eigenspace
with eigenvalues cont_T(i,k), the seminormal basis F_ST = F_S phi_ST F_T
with  F_ST F_UV = delta_TU gamma_T F_SV,  and the extension of the
symmetrizing trace with  tr~(F_ST) = delta_ST gamma_S / s_lambda.

>>> from .coeff import QQ, GenericParams
>>> from .hecke import HeckeAlgebra
>>> H = HeckeAlgebra(GenericParams(2, 1, QQ(3), (QQ(0),)))
>>> S = SchurContext(H)                     # full family: (2,0),(1,1),(0,2)
>>> S.dimension                             # the classical q-Schur S(2,2)
10
>>> S.one() * S.one() == S.one()
True
>>> e = S.phi1_omega()
>>> e * e == e
True
>>> h = S.embed(H.T(1) + H.one())           # corner copy of the Hecke algebra
>>> h * h == S.embed((H.T(1) + H.one()) * (H.T(1) + H.one()))
True
>>> S.divide_by_m(S.omega, H.T(1)) == H.T(1)    # m_omega = 1
True
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .algkit import (
    IncrementalSpan,
    StructureConstantAlgebra,
    invert,
    mat_mul,
    mat_vec,
    nullspace,
    rref,
    solve,
)
from .cellular import CellularBasis
from .combinat import (
    Multicomposition,
    Multipartition,
    Node,
    SemistandardTableau,
    StandardTableau,
    dominance_compare,
    enumerate_multicompositions,
    enumerate_multipartitions,
    enumerate_std,
    node_content,
    shape_key,
    type_fibers,
    type_tableau,
)
from .hecke import HeckeAlgebra, HeckeElement
from .seminormal import SeminormalBasis

__all__ = [
    "SchurContext",
    "SchurElement",
    "CocenterDecomposition",
    "SeparationError",
    "omega_comp",
    "full_comps",
    "partition_comps",
]


class SeparationError(RuntimeError):
    """The tableau contents fail to separate the semistandard tableaux at the
    active parameters; the seminormal layer does not exist there."""


def omega_comp(n: int, ell: int) -> Multipartition:
    """The column multipartition (0,..,0,(1^n)) whose module is the algebra."""
    return Multipartition(((),) * (ell - 1) + ((1,) * n,))


def full_comps(n: int, ell: int) -> Tuple[Multicomposition, ...]:
    """Every multicomposition of n with l components padded to exactly n
    (possibly zero) parts each; the classical choice."""
    return enumerate_multicompositions(n, ell, n)


def partition_comps(n: int, ell: int) -> Tuple[Multipartition, ...]:
    """Only the multipartitions (omega included); the small saturated family."""
    return enumerate_multipartitions(n, ell)


def _strip(mu: Multicomposition) -> tuple:
    """Component tuples with trailing zeros removed (diagram equality key)."""
    out = []
    for comp in mu.comps:
        m = len(comp)
        while m and comp[m - 1] == 0:
            m -= 1
        out.append(comp[:m])
    return tuple(out)


class SchurElement:
    """An element of the Schur algebra in semistandard coordinates."""

    __slots__ = ("context", "terms")

    def __init__(self, context: "SchurContext", terms: dict):
        self.context = context
        self.terms = {k: v for k, v in terms.items() if v}

    def __add__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        data = dict(self.terms)
        for k, v in other.terms.items():
            w = data.get(k)
            data[k] = v if w is None else w + v
        return SchurElement(self.context, data)

    def __sub__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        data = dict(self.terms)
        zero = self.context.algebra.field_zero
        for k, v in other.terms.items():
            data[k] = data.get(k, zero) - v
        return SchurElement(self.context, data)

    def __neg__(self):
        return SchurElement(self.context, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SchurElement):
            return self.context.multiply(self, other)
        s = self.context.algebra.scalar(other)
        if s is None:
            return NotImplemented
        return SchurElement(self.context, {k: v * s for k, v in self.terms.items()})

    def __rmul__(self, other):
        s = self.context.algebra.scalar(other)
        if s is None:
            return NotImplemented
        return SchurElement(self.context, {k: s * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, SchurElement) and other.context is self.context
                and other.terms == self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def matrix(self):
        """Block matrices of the action on the chosen module bases."""
        return self.context.element_matrix(self)

    def __repr__(self):
        if not self.terms:
            return "SchurElement(0)"
        bits = []
        for (lam, S, T) in self.context.sorted_keys(self.terms):
            c = self.terms[(lam, S, T)]
            bits.append(f"({c})*phi[{S!r},{T!r}]")
        return " + ".join(bits)


class CocenterDecomposition:
    """input = sum over shapes of  coefficients[lam] * phi_{T^lam T^lam}
    plus a witness lying in the commutator subspace [S,S]."""

    __slots__ = ("input", "coefficients", "witness")

    def __init__(self, input: SchurElement, coefficients: dict, witness: SchurElement):
        self.input = input
        self.coefficients = coefficients
        self.witness = witness
        ctx = input.context
        recomposed = witness
        for lam, c in coefficients.items():
            recomposed = recomposed + c * ctx.superstandard_phi(lam)
        if recomposed != input:
            raise ArithmeticError("cocenter decomposition does not recompose")

    def __repr__(self):
        parts = ", ".join(f"{lam!r}: {c}" for lam, c in self.coefficients.items() if c)
        return f"CocenterDecomposition({{{parts}}} + commutator witness)"


# ---------------------------------------------------------------------------
# block matrices: dict (target mu, source nu) -> dense rows
# ---------------------------------------------------------------------------

def _blocks_mul(A: dict, B: dict, zero) -> dict:
    out = {}
    for (mu, nu), a in A.items():
        for (nu2, rho), b in B.items():
            if nu2 != nu:
                continue
            prod = mat_mul(a, b)
            cur = out.get((mu, rho))
            if cur is None:
                out[(mu, rho)] = prod
            else:
                out[(mu, rho)] = [[x + y for x, y in zip(r1, r2)]
                                  for r1, r2 in zip(cur, prod)]
    return {k: v for k, v in out.items() if any(any(x for x in r) for r in v)}


def _blocks_add_into(acc: dict, B: dict, scale) -> None:
    for key, b in B.items():
        scaled = [[scale * x for x in row] for row in b]
        cur = acc.get(key)
        if cur is None:
            acc[key] = scaled
        else:
            acc[key] = [[x + y for x, y in zip(r1, r2)]
                        for r1, r2 in zip(cur, scaled)]


def _blocks_eq(A: dict, B: dict) -> bool:
    for key in set(A) | set(B):
        a, b = A.get(key), B.get(key)
        if a is None:
            a, b = b, a
            if a is None:
                continue
            b = None
        if b is None:
            if any(any(x for x in row) for row in a):
                return False
            continue
        for r1, r2 in zip(a, b):
            if any(x != y for x, y in zip(r1, r2)):
                return False
    return True


class SchurContext:
    """The Schur algebra of a Hecke algebra and a saturated family C.

    `comps` is "full" (default), "partitions", or an explicit iterable of
    multicompositions; the family is checked for omega-membership and upward
    saturation, and ordered most dominant first.
    """

    def __init__(self, algebra: HeckeAlgebra, comps="full"):
        H = algebra
        self.algebra = H
        n, ell = H.n, H.ell
        if comps == "full":
            comps = full_comps(n, ell)
        elif comps == "partitions":
            comps = partition_comps(n, ell)
        else:
            comps = tuple(mu if isinstance(mu, Multicomposition)
                          else Multicomposition(mu) for mu in comps)
        comps = tuple(sorted(comps, key=lambda m: (shape_key(m, n), repr(m)),
                             reverse=True))
        stripped = [_strip(mu) for mu in comps]
        if len(set(stripped)) != len(stripped):
            raise ValueError("duplicate diagrams in the multicomposition family")
        self.comps = comps
        self._member_key = set(stripped)

        omega = omega_comp(n, ell)
        members = [mu for mu in comps if _strip(mu) == _strip(omega)]
        if not members:
            raise ValueError("the family must contain omega = (0,..,0,(1^n))")
        self.omega = members[0]

        self.compsplus: Tuple[Multipartition, ...] = tuple(
            mu.as_multipartition() for mu in comps if mu.is_multipartition())
        self._plus_member = {_strip(mu): mu for mu in comps if mu.is_multipartition()}
        for mu in comps:
            for nu in enumerate_multipartitions(n, ell):
                if dominance_compare(nu, mu) == 1 and _strip(nu) not in self._member_key:
                    raise ValueError(
                        f"family not saturated: {nu!r} dominates {mu!r} but is missing")

        # -- tableau bookkeeping ------------------------------------------
        self.cell = CellularBasis(H)
        self.m_of: Dict[Multicomposition, HeckeElement] = {
            mu: self.cell.m_mu(mu) for mu in comps}
        if self.m_of[self.omega] != H.one():
            raise AssertionError("m_omega must be the identity")

        self.shapes: Tuple[Multipartition, ...] = self.compsplus
        self.tabs: Dict[tuple, tuple] = {}
        self.fibers: Dict[tuple, dict] = {}
        self.type_of: Dict[SemistandardTableau, Multicomposition] = {}
        for lam in self.shapes:
            for mu in comps:
                fib = type_fibers(lam, mu)
                self.tabs[(lam, mu)] = tuple(fib.keys())
                self.fibers[(lam, mu)] = fib
                for T in fib:
                    self.type_of[T] = mu
        for lam in enumerate_multipartitions(n, ell):
            if _strip(lam) not in self._member_key:
                if any(type_fibers(lam, mu) for mu in comps):
                    raise AssertionError(
                        f"shape {lam!r} carries tableaux but is outside the family")

        self.superstd: Dict[Multipartition, SemistandardTableau] = {
            lam: type_tableau(StandardTableau.initial_tableau(lam),
                              self._plus_member[_strip(lam)])
            for lam in self.shapes}
        self._num_std_cache: Dict[Multipartition, int] = {}

        self.col_index: Dict[Multipartition, list] = {
            lam: [(mu, T) for mu in comps for T in self.tabs[(lam, mu)]]
            for lam in self.shapes}
        self.labels: List[tuple] = [
            (lam, S, T)
            for lam in self.shapes
            for (_, S) in self.col_index[lam]
            for (_, T) in self.col_index[lam]]
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}

        # -- module bases of the m_mu H ------------------------------------
        self.keys = tuple(H.basis_keys())
        self.key_index = {k: i for i, k in enumerate(self.keys)}
        self._modspan: Dict[Multicomposition, IncrementalSpan] = {}
        self._modwit: Dict[Multicomposition, list] = {}
        self._modvecs: Dict[Multicomposition, list] = {}
        for mu in comps:
            vecs, wits = [], []
            probe = IncrementalSpan()
            m_mu = self.m_of[mu]
            for key in self.keys:
                v = self._hvec(m_mu * H.monomial(*key))
                if probe.insert(v):
                    vecs.append(v)
                    wits.append(key)
            span = IncrementalSpan()
            for v in vecs:
                span.insert(v)
            self._modspan[mu] = span
            self._modwit[mu] = wits
            self._modvecs[mu] = vecs
            expected = sum(len(self.tabs[(lam, mu)]) * self._num_std(lam)
                           for lam in self.shapes)
            if span.dim != expected:
                raise AssertionError(
                    f"dim m_mu H = {span.dim} but the semistandard count gives "
                    f"{expected} at mu = {mu!r}")

        # -- caches --------------------------------------------------------
        self._mst: Dict[int, HeckeElement] = {}
        self._mats: Dict[int, dict] = {}
        self._expspan: Dict[tuple, tuple] = {}
        self._divider: Dict[Multicomposition, tuple] = {}
        self._div_cache: Dict[tuple, HeckeElement] = {}
        self._sc: Dict[tuple, dict] = {}
        self._one: Optional[SchurElement] = None
        self._comm_span = None
        self._cocenter_data = None
        self._seminormal = None

    # -- small helpers ----------------------------------------------------

    def _num_std(self, lam: Multipartition) -> int:
        k = self._num_std_cache.get(lam)
        if k is None:
            k = self._num_std_cache[lam] = len(enumerate_std(lam))
        return k

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def _hvec(self, elem: HeckeElement) -> list:
        H = self.algebra
        vec = [H.field_zero] * len(self.keys)
        for k, c in elem.data.items():
            vec[self.key_index[k]] = c
        return vec

    def _helem(self, vec) -> HeckeElement:
        H = self.algebra
        return HeckeElement(H, {k: c for k, c in zip(self.keys, vec) if c})

    def sorted_keys(self, terms: dict) -> list:
        return sorted(terms, key=lambda k: self.label_index[k])

    def phi(self, lam, S, T) -> SchurElement:
        """A semistandard basis element."""
        key = (lam, S, T)
        if key not in self.label_index:
            raise KeyError(f"not a basis label: {key!r}")
        return SchurElement(self, {key: self.algebra.field_one})

    def superstandard_phi(self, lam) -> SchurElement:
        T = self.superstd[lam]
        return self.phi(lam, T, T)

    def m_ST(self, lam, S, T) -> HeckeElement:
        """The double fiber sum of cellular basis elements over (S,T)."""
        idx = self.label_index[(lam, S, T)]
        cached = self._mst.get(idx)
        if cached is None:
            mu, nu = self.type_of[S], self.type_of[T]
            acc = self.algebra.zero()
            for s in self.fibers[(lam, mu)][S]:
                for t in self.fibers[(lam, nu)][T]:
                    acc = acc + self.cell.m_st(s, t)
            cached = self._mst[idx] = acc
        return cached

    def one(self) -> SchurElement:
        if self._one is None:
            terms = {}
            for mu in self.comps:
                terms.update(self._expand_block(mu, mu, self.m_of[mu]))
            self._one = SchurElement(self, terms)
        return self._one

    def phi1_omega(self) -> SchurElement:
        """The idempotent projecting onto the omega summand."""
        return SchurElement(
            self, self._expand_block(self.omega, self.omega, self.algebra.one()))

    # -- expansion of operators over the semistandard basis ----------------

    def _expansion_span(self, mu, nu):
        key = (mu, nu)
        cached = self._expspan.get(key)
        if cached is None:
            span = IncrementalSpan()
            labels = []
            for lam in self.shapes:
                for S in self.tabs[(lam, mu)]:
                    for T in self.tabs[(lam, nu)]:
                        if not span.insert(self._hvec(self.m_ST(lam, S, T))):
                            raise AssertionError(
                                f"dependent m_ST family at types {mu!r}, {nu!r}")
                        labels.append((lam, S, T))
            cached = self._expspan[key] = (span, labels)
        return cached

    def _expand_block(self, mu, nu, image: HeckeElement) -> dict:
        """Coordinates of the homomorphism m_nu h -> image h over the phi's
        with row type mu and column type nu."""
        span, labels = self._expansion_span(mu, nu)
        combo = span.express(self._hvec(image))
        if combo is None:
            raise ArithmeticError(
                f"operator image lies outside the semistandard span "
                f"(types {mu!r} -> {nu!r})")
        return {labels[i]: c for i, c in combo.items() if c}

    # -- division by the cellular generators -------------------------------

    def divide_by_m(self, mu, y: HeckeElement) -> HeckeElement:
        """Some h with m_mu h = y, provided y lies in m_mu H.

        Deterministic choice: the solution supported on the pivot monomials
        of the left-multiplication matrix of m_mu, the free coordinates being
        set to zero (columns scanned in the canonical monomial order).
        """
        H = self.algebra
        fac = self._divider.get(mu)
        if fac is None:
            dim = len(self.keys)
            m_mu = self.m_of[mu]
            cols = [self._hvec(m_mu * H.monomial(*key)) for key in self.keys]
            one, zero = H.field_one, H.field_zero
            aug = [[cols[j][i] for j in range(dim)]
                   + [one if r == i else zero for r in range(dim)]
                   for i in range(dim)]
            red, pivots = rref(aug)
            fac = self._divider[mu] = (red, pivots, dim)
        red, pivots, dim = fac
        yv = self._hvec(y)
        x = [H.field_zero] * dim
        for row, pc in zip(red, pivots):
            val = H.field_zero
            for j, c in enumerate(row[dim:]):
                if c and yv[j]:
                    val = val + c * yv[j]
            if pc < dim:
                x[pc] = val
            elif val:
                raise ArithmeticError(f"element is not divisible by m_{mu!r}")
        out = HeckeElement(H, {k: c for k, c in zip(self.keys, x) if c})
        if self.m_of[mu] * out != y:
            raise ArithmeticError(f"element is not divisible by m_{mu!r}")
        return out

    # -- multiplication ----------------------------------------------------

    def _basis_product(self, i: int, j: int) -> dict:
        key = (i, j)
        cached = self._sc.get(key)
        if cached is None:
            lam, S, T = self.labels[i]
            rho, U, V = self.labels[j]
            nu = self.type_of[T]
            if nu != self.type_of[U]:
                cached = {}
            else:
                dkey = (id(nu), j)
                h0 = self._div_cache.get(dkey)
                if h0 is None:
                    h0 = self.divide_by_m(nu, self.m_ST(rho, U, V))
                    self._div_cache[dkey] = h0
                y = self.m_ST(lam, S, T) * h0
                cached = self._expand_block(self.type_of[S], self.type_of[V], y)
            self._sc[key] = cached
        return cached

    def multiply(self, a: SchurElement, b: SchurElement) -> SchurElement:
        """Composition of endomorphisms, bilinear over the basis products."""
        H = self.algebra
        out: dict = {}
        for ka, va in a.terms.items():
            ia = self.label_index[ka]
            for kb, vb in b.terms.items():
                c = va * vb
                for kk, w in self._basis_product(ia, self.label_index[kb]).items():
                    cur = out.get(kk)
                    cw = c * w
                    out[kk] = cw if cur is None else cur + cw
        return SchurElement(self, out)

    # -- the faithful block-matrix action ----------------------------------

    def module_dim(self, mu) -> int:
        return len(self._modwit[mu])

    def module_coords(self, mu, elem: HeckeElement) -> list:
        combo = self._modspan[mu].express(self._hvec(elem))
        if combo is None:
            raise ArithmeticError(f"element outside m_mu H for mu = {mu!r}")
        return [combo.get(i, self.algebra.field_zero)
                for i in range(self.module_dim(mu))]

    def label_matrix(self, i: int) -> dict:
        """Blocks of the action of the i-th basis element."""
        cached = self._mats.get(i)
        if cached is None:
            lam, S, T = self.labels[i]
            mu, nu = self.type_of[S], self.type_of[T]
            mst = self.m_ST(lam, S, T)
            cols = [self.module_coords(mu, mst * self.algebra.monomial(*key))
                    for key in self._modwit[nu]]
            block = [[cols[j][r] for j in range(len(cols))]
                     for r in range(self.module_dim(mu))]
            cached = self._mats[i] = {(mu, nu): block}
        return cached

    def element_matrix(self, a: SchurElement) -> dict:
        acc: dict = {}
        for k, v in a.terms.items():
            _blocks_add_into(acc, self.label_matrix(self.label_index[k]), v)
        return acc

    def from_matrix(self, blocks: dict) -> SchurElement:
        """Expand a block action back into semistandard coordinates."""
        terms = {}
        for (mu, nu), block in blocks.items():
            image = mat_vec(block, self.module_coords(nu, self.m_of[nu]))
            acc = [self.algebra.field_zero] * len(self.keys)
            for c, bv in zip(image, self._modvecs[mu]):
                if c:
                    for r, x in enumerate(bv):
                        if x:
                            acc[r] = acc[r] + c * x
            for k, v in self._expand_block(mu, nu, self._helem(acc)).items():
                cur = terms.get(k)
                terms[k] = v if cur is None else cur + v
        return SchurElement(self, terms)

    # -- distinguished elements -------------------------------------------

    def embed(self, h: HeckeElement) -> SchurElement:
        """Left multiplication by h on the omega summand, zero elsewhere."""
        return SchurElement(self, self._expand_block(self.omega, self.omega, h))

    def jm_element(self, mu, i: int, k: int) -> HeckeElement:
        """L^mu_{i,k}: the sum of the L_a over row i of component k of mu."""
        H = self.algebra
        if not (1 <= i <= H.n and 1 <= k <= H.ell):
            raise ValueError(f"no Jucys-Murphy index (i,k)=({i},{k})")
        blocks = iter(mu.row_blocks())
        acc = H.zero()
        for kc, comp in enumerate(mu.comps, start=1):
            for ic, _ in enumerate(comp, start=1):
                block = next(blocks)
                if kc == k and ic == i:
                    for a in block:
                        acc = acc + H.L(a)
        return acc

    def jm(self, mu, i: int, k: int) -> SchurElement:
        """The Jucys-Murphy operator: multiplication by L^mu_{i,k} on the mu
        summand, zero on the others."""
        y = self.jm_element(mu, i, k) * self.m_of[mu]
        return SchurElement(self, self._expand_block(mu, mu, y))

    def cont(self, T: SemistandardTableau, i: int, k: int):
        """Sum of the contents of the nodes of T carrying the entry (i,k)."""
        H = self.algebra
        acc = H.field_zero
        for kc, comp in enumerate(T.rows, start=1):
            for ic, row in enumerate(comp, start=1):
                for jc, entry in enumerate(row, start=1):
                    if entry == (i, k):
                        acc = acc + node_content(Node(kc, ic, jc), H.xi, H.Q)
        return acc

    def theta_lift(self, z: HeckeElement) -> SchurElement:
        """The center isomorphism: z acting on every summand at once.

        Rejects non-central z (commutation with the generators is checked)
        and certifies that the image commutes with every basis element."""
        H = self.algebra
        gens = [H.T(i) for i in range(1, H.n)] + [H.L(k) for k in range(1, H.n + 1)]
        for g in gens:
            if z * g != g * z:
                raise ValueError("theta_lift needs a central element")
        terms: dict = {}
        for mu in self.comps:
            for k, v in self._expand_block(mu, mu, z * self.m_of[mu]).items():
                terms[k] = terms.get(k, H.field_zero) + v
        out = SchurElement(self, terms)
        mat = self.element_matrix(out)
        for i in range(self.dimension):
            other = self.label_matrix(i)
            if not _blocks_eq(_blocks_mul(mat, other, H.field_zero),
                              _blocks_mul(other, mat, H.field_zero)):
                raise AssertionError("theta image fails to be central")
        return out

    # -- Weyl modules ------------------------------------------------------

    def weyl_labels(self, lam) -> list:
        """The (type, tableau) pairs indexing the Weyl module basis."""
        return list(self.col_index[lam])

    def weyl_gram(self, lam):
        """Gram matrix of the bilinear form on the Weyl module of shape lam,
        read off from products of basis elements modulo the ideal spanned by
        strictly dominating shapes."""
        T_lam = self.superstd[lam]
        cols = self.weyl_labels(lam)
        rows = []
        for (_, S) in cols:
            out_row = []
            for (_, T) in cols:
                prod = self._basis_product(self.label_index[(lam, T_lam, S)],
                                           self.label_index[(lam, T, T_lam)])
                entry = self.algebra.field_zero
                for (rho, A, B), c in prod.items():
                    if rho == lam:
                        if (A, B) != (T_lam, T_lam):
                            raise AssertionError(
                                "Weyl product has an unexpected same-shape term")
                        entry = c
                    elif dominance_compare(rho, lam) != 1:
                        raise AssertionError(
                            "Weyl product leaks below the dominance filtration")
                out_row.append(entry)
            rows.append(out_row)
        return cols, rows

    # -- cocenter ----------------------------------------------------------

    def coords_vec(self, a: SchurElement) -> list:
        vec = [self.algebra.field_zero] * self.dimension
        for k, v in a.terms.items():
            vec[self.label_index[k]] = v
        return vec

    def from_vec(self, vec) -> SchurElement:
        return SchurElement(self, {self.labels[i]: c
                                   for i, c in enumerate(vec) if c})

    def commutator_span(self) -> IncrementalSpan:
        """Row space of all pairwise commutators of basis elements."""
        if self._comm_span is None:
            span = IncrementalSpan()
            zero = self.algebra.field_zero
            for i in range(self.dimension):
                for j in range(i + 1, self.dimension):
                    vec = [zero] * self.dimension
                    for k, c in self._basis_product(i, j).items():
                        vec[self.label_index[k]] = vec[self.label_index[k]] + c
                    for k, c in self._basis_product(j, i).items():
                        vec[self.label_index[k]] = vec[self.label_index[k]] - c
                    span.insert(vec)
            self._comm_span = span
        return self._comm_span

    def cocenter_dim(self) -> int:
        return self.dimension - self.commutator_span().dim

    def _cocenter_basis(self):
        """Residues of the phi_{T^lam T^lam} modulo [S,S]; checks that they
        descend to a basis of the quotient."""
        if self._cocenter_data is None:
            comm = self.commutator_span()
            resid = []
            for lam in self.shapes:
                v = self.coords_vec(self.superstandard_phi(lam))
                resid.append(comm.residue(v))
            probe = IncrementalSpan()
            for r in resid:
                if not probe.insert(list(r)):
                    raise ArithmeticError(
                        "superstandard classes are dependent in the cocenter")
            if comm.dim + len(resid) != self.dimension:
                raise ArithmeticError(
                    "superstandard classes do not span the cocenter")
            self._cocenter_data = resid
        return self._cocenter_data

    def cocenter_decompose(self, a: SchurElement) -> CocenterDecomposition:
        """Write a as a combination of the phi_{T^lam T^lam} plus an element
        of the commutator subspace (with membership certified)."""
        comm = self.commutator_span()
        resid = self._cocenter_basis()
        target = comm.residue(self.coords_vec(a))
        rows = [[resid[j][r] for j in range(len(resid))]
                for r in range(self.dimension)]
        sol = solve(rows, list(target))
        if sol is None:
            raise ArithmeticError("cocenter decomposition failed")
        coeffs = {lam: c for lam, c in zip(self.shapes, sol)}
        witness = a
        for lam, c in coeffs.items():
            if c:
                witness = witness - c * self.superstandard_phi(lam)
        if not comm.contains(self.coords_vec(witness)):
            raise ArithmeticError("cocenter witness escapes the commutator span")
        return CocenterDecomposition(a, coeffs, witness)

    def commutator_family(self):
        """The commutator-subspace family phi_ST - sum_rho a^rho phi_{T^rho T^rho}
        over all non-superstandard labels, with each member certified."""
        out = []
        for lab in self.labels:
            lam, S, T = lab
            if S == T == self.superstd[lam]:
                continue
            dec = self.cocenter_decompose(self.phi(lam, S, T))
            out.append((lab, dec))
        return out

    def structure_algebra(self) -> StructureConstantAlgebra:
        """The multiplication table over the semistandard basis, for the
        generic center/cocenter machinery."""
        idx = self.label_index
        table = [[{idx[k]: c for k, c in self._basis_product(i, j).items()}
                  for j in range(self.dimension)]
                 for i in range(self.dimension)]
        return StructureConstantAlgebra(self.dimension, table,
                                        self.coords_vec(self.one()),
                                        self.algebra.field_one)

    def seminormal(self) -> "SchurSeminormal":
        if self._seminormal is None:
            self._seminormal = SchurSeminormal(self)
        return self._seminormal


class SchurSeminormal:
    """The seminormal layer of a Schur context over a separating field.

    Builds, per type mu, the common eigenspace decomposition of the
    Jucys-Murphy action on m_mu H; F_T is the projection onto the eigenspace
    of T inside its own summand (zero elsewhere), F_ST = F_S phi_ST F_T, and
    gamma_T is the scalar in F_{T^lam T} F_{T T^lam} = gamma_T F_{T^lam T^lam}.
    The extension of the symmetrizing trace is evaluated per shape as
    trace of (a e_lam) / (|Std(lam)| s_lam) summed over shapes, where e_lam
    is the sum of the F_T of shape lam.
    """

    def __init__(self, context: SchurContext):
        self.context = context
        H = context.algebra
        self.tab_list: List[tuple] = [
            (lam, mu, T)
            for lam in context.shapes
            for mu in context.comps
            for T in context.tabs[(lam, mu)]]

        ik_pairs = [(i, k) for i in range(1, H.n + 1) for k in range(1, H.ell + 1)]
        self.cont_vec: Dict[SemistandardTableau, tuple] = {}
        for (lam, mu, T) in self.tab_list:
            self.cont_vec[T] = tuple(context.cont(T, i, k) for (i, k) in ik_pairs)
        for mu in context.comps:
            seen = {}
            for (lam, mu2, T) in self.tab_list:
                if mu2 != mu:
                    continue
                v = self.cont_vec[T]
                if v in seen:
                    raise SeparationError(
                        f"contents fail to separate {seen[v]!r} and {T!r}")
                seen[v] = T

        # JM action matrices per type, then common eigenspaces.
        self._proj: Dict[SemistandardTableau, dict] = {}
        zero, one = H.field_zero, H.field_one
        for mu in context.comps:
            d = context.module_dim(mu)
            jms = []
            for (i, k) in ik_pairs:
                L = context.jm_element(mu, i, k)
                cols = [context.module_coords(
                            mu, L * (context.m_of[mu] * H.monomial(*key)))
                        for key in context._modwit[mu]]
                jms.append([[cols[j][r] for j in range(d)] for r in range(d)])
            tabs_mu = [(lam, T) for (lam, mu2, T) in self.tab_list if mu2 == mu]
            eig_cols, slices = [], []
            for (lam, T) in tabs_mu:
                stacked = []
                cvec = self.cont_vec[T]
                for J, c in zip(jms, cvec):
                    for r in range(d):
                        row = list(J[r])
                        row[r] = row[r] - c
                        stacked.append(row)
                kern = nullspace(stacked, one)
                if len(kern) != context._num_std(lam):
                    raise SeparationError(
                        f"eigenspace of {T!r} has dimension {len(kern)}, "
                        f"expected {context._num_std(lam)}")
                start = len(eig_cols)
                eig_cols.extend(kern)
                slices.append((lam, T, start, len(eig_cols)))
            if len(eig_cols) != d:
                raise SeparationError(
                    f"eigenvectors of type {mu!r} do not fill the summand")
            P = [[eig_cols[j][r] for j in range(d)] for r in range(d)]
            Pinv = invert(P)
            for (lam, T, a, b) in slices:
                block = [[sum((P[r][j] * Pinv[j][c] for j in range(a, b)),
                              start=zero)
                          for c in range(d)] for r in range(d)]
                self._proj[T] = {(mu, mu): block}

        self._gamma: Dict[SemistandardTableau, object] = {}
        self._fst: Dict[tuple, dict] = {}
        self._e_lam: Dict[Multipartition, dict] = {}
        self._snb: Optional[SeminormalBasis] = None
        self._schur_el: Dict[Multipartition, object] = {}

    # -- the basic objects -------------------------------------------------

    def F_T(self, T: SemistandardTableau) -> dict:
        """Block matrix of the idempotent F_T."""
        return self._proj[T]

    def F_T_element(self, T: SemistandardTableau) -> SchurElement:
        return self.context.from_matrix(self._proj[T])

    def F_ST(self, lam, S, T) -> dict:
        key = (lam, S, T)
        cached = self._fst.get(key)
        if cached is None:
            ctx = self.context
            zero = ctx.algebra.field_zero
            phi = ctx.label_matrix(ctx.label_index[key])
            cached = _blocks_mul(_blocks_mul(self._proj[S], phi, zero),
                                 self._proj[T], zero)
            self._fst[key] = cached
        return cached

    def F_ST_element(self, lam, S, T) -> SchurElement:
        return self.context.from_matrix(self.F_ST(lam, S, T))

    def e_shape(self, lam) -> dict:
        """The central idempotent of the shape: sum of its F_T."""
        cached = self._e_lam.get(lam)
        if cached is None:
            acc: dict = {}
            for (rho, mu, T) in self.tab_list:
                if rho == lam:
                    _blocks_add_into(acc, self._proj[T], self.context.algebra.field_one)
            cached = self._e_lam[lam] = acc
        return cached

    def gamma(self, T: SemistandardTableau):
        """The seminormal structure scalar of T."""
        cached = self._gamma.get(T)
        if cached is None:
            ctx = self.context
            lam = None
            for (rho, mu, T2) in self.tab_list:
                if T2 == T:
                    lam = rho
                    break
            T_lam = ctx.superstd[lam]
            zero = ctx.algebra.field_zero
            prod = _blocks_mul(self.F_ST(lam, T_lam, T), self.F_ST(lam, T, T_lam),
                               zero)
            base = self.F_ST(lam, T_lam, T_lam)
            cached = self._gamma[T] = self._proportion(prod, base)
        return cached

    @staticmethod
    def _proportion(A: dict, B: dict):
        """The scalar c with A = c B (asserted exact)."""
        ratio = None
        for key, b in B.items():
            a = A.get(key)
            for r, row in enumerate(b):
                for c, x in enumerate(row):
                    if x:
                        ratio = (a[r][c] / x) if a is not None else x - x
                        break
                if ratio is not None:
                    break
            if ratio is not None:
                break
        if ratio is None:
            raise ZeroDivisionError("proportion against the zero matrix")
        check: dict = {}
        _blocks_add_into(check, B, ratio)
        if not _blocks_eq(A, check):
            raise ArithmeticError("matrices are not proportional")
        return ratio

    def gamma_table(self) -> dict:
        return {T: self.gamma(T) for (_, _, T) in self.tab_list}

    # -- trace extension ---------------------------------------------------

    def hecke_seminormal(self) -> SeminormalBasis:
        if self._snb is None:
            self._snb = SeminormalBasis(self.context.algebra)
        return self._snb

    def schur_element(self, lam):
        cached = self._schur_el.get(lam)
        if cached is None:
            cached = self._schur_el[lam] = self.hecke_seminormal().schur_element(lam)
        return cached

    def extended_trace(self, a: SchurElement):
        """The symmetrizing form with tr~(F_ST) = delta_ST gamma_S/s_lam;
        restricted to the omega corner it is the Hecke trace."""
        ctx = self.context
        H = ctx.algebra
        mat = ctx.element_matrix(a)
        total = H.field_zero
        for lam in ctx.shapes:
            prod = _blocks_mul(mat, self.e_shape(lam), H.field_zero)
            tr = H.field_zero
            for (mu, nu), block in prod.items():
                if mu == nu:
                    for r in range(len(block)):
                        tr = tr + block[r][r]
            if tr:
                total = total + tr / (H.field(self.context._num_std(lam))
                                      * self.schur_element(lam))
        return total
