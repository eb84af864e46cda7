"""Multipartitions, tableaux and permutations for type G(l,1,n).

Conventions used throughout the package:

* A multicomposition is an l-tuple of compositions; zero parts are
  significant there (``(2,0) != (2,)`` as compositions).  A multipartition
  keeps each component weakly decreasing and is stored with trailing zero
  parts stripped, so equality is the mathematical one.
* Permutations act on the right: ``(m)w = w.img[m-1]``, and ``v * w`` means
  "apply v, then w".  Reduced words are read left to right in application
  order, and ``reduced_word`` returns the lexicographically smallest one.
* Tableaux are multipartition-shaped fillings; ``t.apply_perm(w)`` replaces
  every entry m by (m)w.  ``initial_tableau`` is the row-reading filling
  (components first to last), ``final_tableau`` the column-reading filling
  (components last to first), and ``d_perm`` / ``dprime_perm`` are the
  permutations carrying those to a given standard tableau.
* The conjugate of a multicomposition reverses the component order and
  transposes each diagram; on boxes it is (k,i,j) -> (l+1-k, j, i).
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

from .coeff import quantum_integer

__all__ = [
    "Multicomposition",
    "Multipartition",
    "Node",
    "Permutation",
    "StandardTableau",
    "SemistandardTableau",
    "enumerate_compositions",
    "enumerate_partitions",
    "enumerate_multicompositions",
    "enumerate_multipartitions",
    "dominates",
    "dominance_compare",
    "pair_dominates",
    "young_subgroup",
    "enumerate_std",
    "tableau_dominates",
    "node_content",
    "content_sequence",
    "all_content_sets",
    "residue_multiset",
    "residue_equivalent",
    "type_tableau",
    "enumerate_semistd",
    "type_fibers",
    "shape_key",
    "tableau_key",
    "std_by_dominance",
    "cell_pairs_ordered",
    "semistd_key",
    "semistd_dominates",
    "semistd_pair_dominates",
]


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------

class Node(NamedTuple):
    """A box (component, row, column), all 1-based."""

    comp: int
    row: int
    col: int

    def conjugate(self, ell: int) -> "Node":
        return Node(ell + 1 - self.comp, self.col, self.row)


def _conjugate_composition(alpha: Sequence[int]) -> Tuple[int, ...]:
    """Conjugate partition of a composition: counts of parts >= k."""
    out = []
    k = 1
    while True:
        c = sum(1 for a in alpha if a >= k)
        if c == 0:
            return tuple(out)
        out.append(c)
        k += 1


class Multicomposition:
    """An l-tuple of compositions of non-negative integers."""

    __slots__ = ("comps",)

    def __init__(self, comps):
        comps = tuple(tuple(int(a) for a in c) for c in comps)
        if any(a < 0 for c in comps for a in c):
            raise ValueError("negative part in multicomposition")
        self.comps = comps

    @property
    def ell(self) -> int:
        return len(self.comps)

    @property
    def n(self) -> int:
        return sum(a for c in self.comps for a in c)

    def is_multipartition(self) -> bool:
        return all(all(c[i] >= c[i + 1] for i in range(len(c) - 1)) for c in self.comps)

    def as_multipartition(self) -> "Multipartition":
        return Multipartition(self.comps)

    def conjugate(self) -> "Multipartition":
        return Multipartition(tuple(_conjugate_composition(c)
                                    for c in reversed(self.comps)))

    def nodes(self) -> Iterator[Node]:
        for k, comp in enumerate(self.comps, start=1):
            for i, row_len in enumerate(comp, start=1):
                for j in range(1, row_len + 1):
                    yield Node(k, i, j)

    def row_blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Rows as consecutive intervals of {1..n}, in reading order."""
        out, start = [], 1
        for comp in self.comps:
            for row_len in comp:
                out.append(tuple(range(start, start + row_len)))
                start += row_len
        return tuple(out)

    def _key(self):
        return self.comps

    def __eq__(self, other):
        return isinstance(other, Multicomposition) and other.comps == self.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return "|".join("(" + ",".join(map(str, c)) + ")" for c in self.comps)


class Multipartition(Multicomposition):
    """A multicomposition whose components weakly decrease; trailing zero
    parts are stripped so that equality is equality of Young diagrams."""

    __slots__ = ()

    def __init__(self, comps):
        comps = tuple(tuple(int(a) for a in c) for c in comps)
        stripped = []
        for c in comps:
            m = len(c)
            while m and c[m - 1] == 0:
                m -= 1
            stripped.append(c[:m])
        super().__init__(stripped)
        for c in self.comps:
            if any(c[i] < c[i + 1] for i in range(len(c) - 1)):
                raise ValueError(f"component {c} is not a partition")


def enumerate_compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All compositions of n into exactly `parts` non-negative parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in enumerate_compositions(n - first, parts - 1):
            yield (first,) + rest


def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """All partitions of n with parts <= max_part, largest part first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def _dominance_vector(mc: Multicomposition, n: int) -> Tuple[int, ...]:
    vec = []
    before = 0
    for comp in mc.comps:
        acc = before
        padded = list(comp) + [0] * n
        for i in range(n):
            acc += padded[i]
            vec.append(acc)
        before += sum(comp)
    return tuple(vec)


def dominates(a: Multicomposition, b: Multicomposition) -> bool:
    """True iff a dominates b (cumulative row sums, component by component)."""
    if a.ell != b.ell or a.n != b.n:
        raise ValueError("dominance needs equal size and number of components")
    n = a.n
    va, vb = _dominance_vector(a, n), _dominance_vector(b, n)
    return all(x >= y for x, y in zip(va, vb))


def dominance_compare(a: Multicomposition, b: Multicomposition) -> Optional[int]:
    """1 if a strictly dominates b, -1 if b strictly dominates a, 0 if the
    diagrams coincide, None if incomparable."""
    ge = dominates(a, b)
    le = dominates(b, a)
    if ge and le:
        return 0
    if ge:
        return 1
    if le:
        return -1
    return None


def enumerate_multipartitions(n: int, ell: int) -> Tuple[Multipartition, ...]:
    """All multipartitions of n with ell components, most dominant first.

    The order sorts the cumulative-sum vectors descending lexicographically,
    which refines the dominance order (strictly more dominant comes first).

    >>> [str(p) for p in enumerate_multipartitions(2, 2)]
    ['(2)|()', '(1,1)|()', '(1)|(1)', '()|(2)', '()|(1,1)']
    """
    out = []
    for sizes in enumerate_compositions(n, ell):
        for parts in itertools.product(*(enumerate_partitions(m) for m in sizes)):
            out.append(Multipartition(parts))
    out.sort(key=lambda p: _dominance_vector(p, n), reverse=True)
    return tuple(out)


def enumerate_multicompositions(n: int, ell: int, parts_per_component: int
                                ) -> Tuple[Multicomposition, ...]:
    """All multicompositions of n, each component with a fixed number of
    (possibly zero) parts, most dominant first."""
    out = []
    for sizes in enumerate_compositions(n, ell):
        for combo in itertools.product(
                *(enumerate_compositions(m, parts_per_component) for m in sizes)):
            out.append(Multicomposition(combo))
    out.sort(key=lambda p: _dominance_vector(p, n), reverse=True)
    return tuple(out)


def young_subgroup(mc: Multicomposition) -> Tuple["Permutation", ...]:
    """All elements of the parabolic subgroup S_mc <= S_n (row stabilizer)."""
    n = mc.n
    blocks = [b for b in mc.row_blocks() if b]
    perms = []
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        img = list(range(1, n + 1))
        for block, images in zip(blocks, combo):
            for src, dst in zip(block, images):
                img[src - 1] = dst
        perms.append(Permutation(img))
    return tuple(perms)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

class Permutation:
    """A permutation of {1..n} acting on the right: (m)w = img[m-1]."""

    __slots__ = ("img",)

    def __init__(self, img):
        img = tuple(int(a) for a in img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")
        self.img = img

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        """The simple transposition s_i = (i, i+1) in S_n."""
        if not 1 <= i < n:
            raise ValueError(f"s_{i} does not live in S_{n}")
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Permutation":
        """Product of simple transpositions, first letter applied first."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.transposition(n, i)
        return w

    @property
    def n(self) -> int:
        return len(self.img)

    def __call__(self, m: int) -> int:
        return self.img[m - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        if other.n != self.n:
            raise ValueError("mixed symmetric groups")
        return Permutation(tuple(other.img[a - 1] for a in self.img))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for m, a in enumerate(self.img, start=1):
            inv[a - 1] = m
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions = length of any reduced word."""
        return sum(1 for a, b in itertools.combinations(self.img, 2) if a > b)

    def is_identity(self) -> bool:
        return all(a == m for m, a in enumerate(self.img, start=1))

    def reduced_word(self) -> Tuple[int, ...]:
        """The lexicographically smallest reduced word, letters in
        application order (the first letter acts first)."""
        img = list(self.img)
        word = []
        while True:
            for i in range(len(img) - 1):
                if img[i] > img[i + 1]:
                    word.append(i + 1)
                    img[i], img[i + 1] = img[i + 1], img[i]
                    break
            else:
                return tuple(word)

    def __eq__(self, other):
        return isinstance(other, Permutation) and other.img == self.img

    def __hash__(self):
        return hash(self.img)

    def __repr__(self):
        return f"Perm{self.img}"


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    for img in itertools.permutations(range(1, n + 1)):
        yield Permutation(img)


# ---------------------------------------------------------------------------
# standard tableaux
# ---------------------------------------------------------------------------

class StandardTableau:
    """A standard filling of a multipartition by 1..n.

    >>> lam = Multipartition([(2, 1), ()])
    >>> t = StandardTableau.initial_tableau(lam)
    >>> t
    Std[[1,2/3]|[]]
    >>> StandardTableau.final_tableau(lam)
    Std[[1,3/2]|[]]
    >>> t.apply_perm(Permutation((1, 3, 2)))
    Std[[1,3/2]|[]]
    """

    __slots__ = ("rows", "_pos")

    def __init__(self, rows):
        rows = tuple(tuple(tuple(int(e) for e in r) for r in comp) for comp in rows)
        entries = sorted(e for comp in rows for r in comp for e in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("entries must be exactly 1..n")
        for comp in rows:
            for r in comp:
                if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                    raise ValueError("rows must strictly increase")
            for i in range(len(comp) - 1):
                upper, lower = comp[i], comp[i + 1]
                if len(lower) > len(upper):
                    raise ValueError("shape is not a multipartition")
                if any(upper[j] >= lower[j] for j in range(len(lower))):
                    raise ValueError("columns must strictly increase")
        self.rows = rows
        pos = {}
        for k, comp in enumerate(rows, start=1):
            for i, r in enumerate(comp, start=1):
                for j, e in enumerate(r, start=1):
                    pos[e] = Node(k, i, j)
        self._pos = pos

    # -- construction ------------------------------------------------------

    @classmethod
    def initial_tableau(cls, lam: Multicomposition) -> "StandardTableau":
        """Row-reading filling: 1,2,... along rows, components first to last."""
        m = 1
        rows = []
        for comp in lam.comps:
            crows = []
            for row_len in comp:
                crows.append(tuple(range(m, m + row_len)))
                m += row_len
            rows.append(tuple(crows))
        return cls(rows)

    @classmethod
    def final_tableau(cls, lam: Multipartition) -> "StandardTableau":
        """Column-reading filling: down columns, components last to first."""
        grids = [[[None] * row_len for row_len in comp] for comp in lam.comps]
        m = 1
        for k in range(len(lam.comps) - 1, -1, -1):
            comp = lam.comps[k]
            width = comp[0] if comp else 0
            heights = _conjugate_composition(comp)
            for j in range(width):
                for i in range(heights[j]):
                    grids[k][i][j] = m
                    m += 1
        return cls(tuple(tuple(tuple(r) for r in g) for g in grids))

    # -- basic data --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._pos)

    @property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(r) for r in comp) for comp in self.rows))

    def position(self, m: int) -> Node:
        return self._pos[m]

    def entry(self, node: Node) -> int:
        return self.rows[node.comp - 1][node.row - 1][node.col - 1]

    # -- operations --------------------------------------------------------

    def apply_perm(self, w: Permutation) -> "StandardTableau":
        """Replace every entry m by (m)w; the result must again be standard."""
        return StandardTableau(
            tuple(tuple(tuple(w(e) for e in r) for r in comp) for comp in self.rows))

    def conjugate(self) -> "StandardTableau":
        out = []
        for comp in reversed(self.rows):
            if not comp:
                out.append(())
                continue
            width = len(comp[0])
            cols = []
            for j in range(width):
                cols.append(tuple(r[j] for r in comp if j < len(r)))
            out.append(tuple(cols))
        return StandardTableau(tuple(out))

    def d_perm(self) -> Permutation:
        """The w with self = initial_tableau(shape).apply_perm(w): each entry
        of the row-reading filling goes to our entry in the same box."""
        ini = StandardTableau.initial_tableau(self.shape)
        img = [0] * self.n
        for m0 in range(1, self.n + 1):
            img[m0 - 1] = self.entry(ini.position(m0))
        return Permutation(img)

    def dprime_perm(self) -> Permutation:
        """The w with self = final_tableau(shape).apply_perm(w)."""
        fin = StandardTableau.final_tableau(self.shape)
        img = [0] * self.n
        for m0 in range(1, self.n + 1):
            img[m0 - 1] = self.entry(fin.position(m0))
        return Permutation(img)

    def restricted_shape(self, m: int) -> Multipartition:
        """Shape of the subtableau containing 1..m."""
        comps = []
        for comp in self.rows:
            crows = []
            for r in comp:
                crows.append(sum(1 for e in r if e <= m))
            comps.append(tuple(crows))
        return Multipartition(comps)

    def reading_word(self) -> Tuple[int, ...]:
        return tuple(e for comp in self.rows for r in comp for e in r)

    def _key(self):
        return self.rows

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and other.rows == self.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        comps = []
        for comp in self.rows:
            comps.append("[" + "/".join(",".join(map(str, r)) for r in comp) + "]")
        return "Std[" + "|".join(comps) + "]"


def w_lambda(lam: Multipartition) -> Permutation:
    """The permutation taking the row-reading filling to the column-reading one."""
    return StandardTableau.final_tableau(lam).d_perm()


def enumerate_std(lam: Multipartition) -> Tuple[StandardTableau, ...]:
    """All standard tableaux of the given shape, sorted by reading word
    (so the row-reading filling comes first)."""
    n = lam.n

    def build(shape_rows, m):
        # shape_rows: list of lists of current row lengths; place m, m-1, ...
        if m == 0:
            yield [[[] for _ in comp] for comp in shape_rows]
            return
        for k, comp in enumerate(shape_rows):
            for i, row_len in enumerate(comp):
                if row_len == 0:
                    continue
                if i + 1 < len(comp) and comp[i + 1] == row_len:
                    continue  # not a removable corner
                comp[i] -= 1
                for partial in build(shape_rows, m - 1):
                    partial[k][i].append(m)
                    yield partial
                comp[i] += 1

    shape0 = [list(c) for c in lam.comps]
    out = []
    for filled in build(shape0, n):
        rows = tuple(tuple(tuple(r) for r in comp) for comp in filled)
        out.append(StandardTableau(rows))
    out.sort(key=lambda t: t.reading_word())
    return tuple(out)


def tableau_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """s dominates t: every restriction of s dominates that of t."""
    if s.n != t.n:
        raise ValueError("mixed sizes")
    return all(dominates(s.restricted_shape(m), t.restricted_shape(m))
               for m in range(1, s.n + 1))


def pair_dominates(st, uv) -> bool:
    """Dominance on pairs of standard tableaux: (s,t) >= (u,v) iff the shape
    of the first pair strictly dominates, or shapes agree and s >= u, t >= v."""
    s, t = st
    u, v = uv
    lam, mu = s.shape, u.shape
    cmp = dominance_compare(lam, mu)
    if cmp == 1:
        return True
    if cmp == 0:
        return tableau_dominates(s, u) and tableau_dominates(t, v)
    return lam == mu and tableau_dominates(s, u) and tableau_dominates(t, v)


# ---------------------------------------------------------------------------
# contents and residues
# ---------------------------------------------------------------------------

def node_content(node: Node, xi, Q):
    """xi^(j-i) Q_c + [j-i] for the box (c,i,j)."""
    d = node.col - node.row
    return xi ** d * Q[node.comp - 1] + quantum_integer(d, xi)


def content_sequence(t: StandardTableau, xi, Q) -> tuple:
    return tuple(node_content(t.position(k), xi, Q) for k in range(1, t.n + 1))


def all_content_sets(n: int, ell: int, xi, Q):
    """For each k, the distinct contents c_t(k) over all standard tableaux of
    all multipartition shapes, in first-seen order."""
    sets = [dict() for _ in range(n)]  # value -> None, insertion ordered
    for lam in enumerate_multipartitions(n, ell):
        for t in enumerate_std(lam):
            for k in range(1, n + 1):
                sets[k - 1].setdefault(node_content(t.position(k), xi, Q))
    return [list(d.keys()) for d in sets]


def residue_multiset(lam: Multipartition, xi, Q) -> Counter:
    return Counter(node_content(node, xi, Q) for node in lam.nodes())


def residue_equivalent(lam: Multipartition, mu: Multipartition, xi, Q) -> bool:
    return residue_multiset(lam, xi, Q) == residue_multiset(mu, xi, Q)


# ---------------------------------------------------------------------------
# semistandard tableaux
# ---------------------------------------------------------------------------

class SemistandardTableau:
    """A multipartition-shaped filling by pairs (i,k) = (row of type, component
    of type), weakly increasing along rows and strictly increasing down
    columns in the order (i1,k1) < (i2,k2) iff k1 < k2, or k1 = k2 and
    i1 < i2; component k may only contain pairs with second entry >= k."""

    __slots__ = ("rows",)

    def __init__(self, rows, check: bool = True):
        rows = tuple(tuple(tuple((int(i), int(k)) for (i, k) in r) for r in comp)
                     for comp in rows)
        if check:
            for kc, comp in enumerate(rows, start=1):
                for r in comp:
                    for (i, k) in r:
                        if k < kc:
                            raise ValueError(
                                f"entry ({i},{k}) too small for component {kc}")
                    if any(_pair_key(r[j]) > _pair_key(r[j + 1])
                           for j in range(len(r) - 1)):
                        raise ValueError("rows must weakly increase")
                for i in range(len(comp) - 1):
                    upper, lower = comp[i], comp[i + 1]
                    if any(_pair_key(upper[j]) >= _pair_key(lower[j])
                           for j in range(len(lower))):
                        raise ValueError("columns must strictly increase")
        self.rows = rows

    @property
    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(r) for r in comp) for comp in self.rows))

    def type_counts(self) -> Counter:
        return Counter(e for comp in self.rows for r in comp for e in r)

    def has_type(self, mu: Multicomposition) -> bool:
        counts = self.type_counts()
        want = Counter()
        for k, comp in enumerate(mu.comps, start=1):
            for i, a in enumerate(comp, start=1):
                if a:
                    want[(i, k)] = a
        return counts == want

    def __eq__(self, other):
        return isinstance(other, SemistandardTableau) and other.rows == self.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        comps = []
        for comp in self.rows:
            comps.append("[" + "/".join(
                ",".join(f"{i}.{k}" for (i, k) in r) for r in comp) + "]")
        return "SStd[" + "|".join(comps) + "]"


def _pair_key(pair):
    i, k = pair
    return (k, i)


def _is_semistandard(rows, ell: int) -> bool:
    try:
        SemistandardTableau(rows, check=True)
        return True
    except ValueError:
        return False


def type_tableau(s: StandardTableau, mu: Multicomposition) -> SemistandardTableau:
    """Replace every entry m of s by (i,k) where m lies in row i of component
    k of the row-reading filling of mu; may fail if the result is not
    semistandard (then s contributes nothing for this type).

    The row-reading filling of a multicomposition need not be a standard
    tableau (rows of unequal length may break column-strictness), so the
    entry -> (row, component) map is read off the consecutive row blocks
    directly instead of going through StandardTableau."""
    where = {}
    block = iter(mu.row_blocks())
    for k, comp in enumerate(mu.comps, start=1):
        for i, _ in enumerate(comp, start=1):
            for m in next(block):
                where[m] = (i, k)
    rows = tuple(tuple(tuple(where[e] for e in r) for r in comp)
                 for comp in s.rows)
    return SemistandardTableau(rows)


def type_fibers(lam: Multipartition, mu: Multicomposition):
    """Map each semistandard lam-tableau of type mu to the standard tableaux
    mapping onto it; keys sorted by their row-reading words."""
    fibers = {}
    for s in enumerate_std(lam):
        try:
            S = type_tableau(s, mu)
        except ValueError:
            continue
        fibers.setdefault(S, []).append(s)
    items = sorted(fibers.items(),
                   key=lambda kv: tuple(_pair_key(e) for comp in kv[0].rows
                                        for r in comp for e in r))
    return {S: tuple(ss) for S, ss in items}


def enumerate_semistd(lam: Multipartition, mu: Multicomposition
                      ) -> Tuple[SemistandardTableau, ...]:
    """All semistandard lam-tableaux of type mu."""
    return tuple(type_fibers(lam, mu).keys())


# ---------------------------------------------------------------------------
# dominance linearizations
# ---------------------------------------------------------------------------
# Total orders refining the various dominance orders, used to arrange Gram
# and transition matrices triangularly.  Keys compare descending: a shape
# (tableau, pair) that dominates another has the lexicographically larger
# key, so sorting by key with reverse=True puts dominant labels first.

def shape_key(shape: Multicomposition, n: Optional[int] = None):
    return _dominance_vector(shape, n if n is not None else shape.n)


def tableau_key(t: StandardTableau):
    n = t.n
    return tuple(_dominance_vector(t.restricted_shape(m), n)
                 for m in range(1, n + 1))


def std_by_dominance(lam: Multipartition) -> Tuple[StandardTableau, ...]:
    """Standard tableaux, most dominant first (row-reading filling leads)."""
    return tuple(sorted(enumerate_std(lam), key=tableau_key, reverse=True))


def cell_pairs_ordered(n: int, ell: int):
    """All (shape, s, t) cellular labels, linearized so that pair dominance
    (s,t) |> (u,v) implies (s,t) appears first."""
    out = []
    for lam in enumerate_multipartitions(n, ell):
        stds = std_by_dominance(lam)
        for s in stds:
            for t in stds:
                out.append((lam, s, t))
    return out


def semistd_key(S: SemistandardTableau, ell: int):
    """Restriction key for semistandard dominance: for every threshold entry
    (i,k), taken in the (k,i) order, the dominance vector of the
    multicomposition counting boxes with entries <= (i,k) in each row."""
    n = S.shape.n
    thresholds = [(i, k) for k in range(1, ell + 1) for i in range(1, n + 1)]
    key = []
    for thr in thresholds:
        counts = tuple(
            tuple(sum(1 for e in r if _pair_key(e) <= _pair_key(thr)) for r in comp)
            for comp in S.rows)
        key.append(_dominance_vector(Multicomposition(counts), n))
    return tuple(key)


def semistd_dominates(S: SemistandardTableau, T: SemistandardTableau,
                      ell: int) -> bool:
    """S dominates T: every entry-threshold restriction of S dominates the
    matching restriction of T (same shape and type assumed)."""
    ks, kt = semistd_key(S, ell), semistd_key(T, ell)
    return all(all(a >= b for a, b in zip(vs, vt)) for vs, vt in zip(ks, kt))


def semistd_pair_dominates(ST, UV, ell: int) -> bool:
    """(S,T) >= (U,V) iff Shape(S) strictly dominates Shape(U), or the shapes
    agree and S >= U, T >= V under semistandard dominance."""
    S, T = ST
    U, V = UV
    cmp = dominance_compare(S.shape, U.shape)
    if cmp == 1:
        return True
    if cmp == 0 or S.shape == U.shape:
        return (S.shape == U.shape and semistd_dominates(S, U, ell)
                and semistd_dominates(T, V, ell))
    return False
