"""Dense exact linear algebra over any of the package's coefficient fields.

Vectors are lists/tuples of field elements; the only protocol assumed is the
arithmetic operators, `x**0` for the unit and falsiness of zero.  Everything
here is plain Gaussian elimination -- the matrices in this package are small
and exactness matters more than asymptotics.
"""

from __future__ import annotations

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "solve",
    "invert",
    "mat_mul",
    "mat_vec",
    "IncrementalSpan",
    "StructureConstantAlgebra",
]


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != piv ** 0:
            inv = 1 / piv
            rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r] + rows[r:], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, one):
    """Basis of the right kernel; `one` is the field unit (needed when the
    matrix has no nonzero entry to steal it from)."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    zero = one - one
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of A x = b, or None if inconsistent."""
    if not rows:
        return [] if not any(rhs) else None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    ncols = len(rows[0])
    if ncols in pivots:
        return None  # pivot in the rhs column
    one = None
    for r in red:
        for x in r:
            if x:
                one = x ** 0
                break
        if one is not None:
            break
    if one is None:
        return None if any(rhs) else [rhs[0] - rhs[0]] * ncols if rhs else []
    zero = one - one
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def invert(rows):
    n = len(rows)
    one = rows[0][0] ** 0 if rows[0][0] else None
    if one is None:
        for r in rows:
            for x in r:
                if x:
                    one = x ** 0
                    break
            if one:
                break
    if one is None:
        raise ZeroDivisionError("singular matrix")
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red[:n]]


def mat_mul(a, b):
    if not a or not b:
        return []
    out = []
    for row in a:
        acc = [None] * len(b[0])
        for i, x in enumerate(row):
            if not x:
                continue
            bi = b[i]
            for j, y in enumerate(bi):
                if not y:
                    continue
                p = x * y
                acc[j] = p if acc[j] is None else acc[j] + p
        zero = None
        for v in acc:
            if v is not None:
                zero = v - v
                break
        if zero is None:
            zero = _find_zero(a, b)
        out.append([zero if v is None else v for v in acc])
    return out


def _find_zero(*mats):
    for m in mats:
        for r in m:
            for x in r:
                if x:
                    return x - x
    raise ValueError("cannot infer the zero of an all-zero product")


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if not x or not y:
                continue
            p = x * y
            acc = p if acc is None else acc + p
        out.append(acc if acc is not None else _vec_zero(v))
    return out


def _vec_zero(v):
    for x in v:
        if x:
            return x - x
    return v[0] - v[0] if v else 0


class IncrementalSpan:
    """A growing row space in reduced echelon form.

    Every inserted vector gets an index (in insertion order); the object
    tracks how each stored echelon row decomposes over the inserted
    generators, so `express` can rewrite any member of the span as an exact
    combination of the generators that were fed in.
    """

    def __init__(self):
        self.rows = []  # (pivot, vector, {generator index: coefficient})
        self.inserted = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec, combo):
        for pivot, v, c in self.rows:
            f = vec[pivot]
            if not f:
                continue
            vec = [a - f * b for a, b in zip(vec, v)]
            for i, x in c.items():
                combo[i] = combo.get(i, 0) - f * x
        return vec, combo

    def insert(self, vec) -> bool:
        """Add a generator; True iff it enlarged the span."""
        idx = self.inserted
        self.inserted += 1
        vec, combo = self._reduce(list(vec), {idx: 1})
        pivot = next((j for j, x in enumerate(vec) if x), None)
        if pivot is None:
            return False
        inv = 1 / vec[pivot]
        vec = [inv * x for x in vec]
        combo = {i: inv * x for i, x in combo.items() if x}
        for k, (p, v, c) in enumerate(self.rows):
            f = v[pivot]
            if not f:
                continue
            v = [a - f * b for a, b in zip(v, vec)]
            for i, x in combo.items():
                c[i] = c.get(i, 0) - f * x
            self.rows[k] = (p, v, c)
        self.rows.append((pivot, vec, combo))
        self.rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec) -> bool:
        vec, _ = self._reduce(list(vec), {})
        return not any(vec)

    def residue(self, vec):
        """The canonical representative of vec modulo the span."""
        vec, _ = self._reduce(list(vec), {})
        return vec

    def express(self, vec):
        """Coefficients {generator index: coeff} writing vec over the
        inserted generators, or None if vec is outside the span."""
        vec, combo = self._reduce(list(vec), {})
        if any(vec):
            return None
        return {i: -x for i, x in combo.items() if x}


class StructureConstantAlgebra:
    """A finite-dimensional algebra given by structure constants.

    `table[i][j]` is a sparse dict {k: coeff} with b_i b_j = sum coeff b_k.
    Elements are dense coordinate vectors.
    """

    def __init__(self, dim, table, one_vec, field_one, trace=None):
        self.dimension = dim
        self.table = table
        self.one_vec = one_vec
        self.one = field_one
        self.zero = field_one - field_one
        self.trace = trace
        self._comm = None

    def multiply(self, u, v):
        out = [self.zero] * self.dimension
        for i, x in enumerate(u):
            if not x:
                continue
            ti = self.table[i]
            for j, y in enumerate(v):
                if not y:
                    continue
                xy = x * y
                for k, c in ti[j].items():
                    out[k] = out[k] + xy * c
        return out

    def commutator(self, u, v):
        uv = self.multiply(u, v)
        vu = self.multiply(v, u)
        return [a - b for a, b in zip(uv, vu)]

    def center_basis(self):
        """Solve z b_j = b_j z for all j; returns coordinate vectors."""
        rows = []
        for j in range(self.dimension):
            for k in range(self.dimension):
                row = []
                for i in range(self.dimension):
                    c = self.table[i][j].get(k, self.zero)
                    d = self.table[j][i].get(k, self.zero)
                    row.append(c - d)
                rows.append(row)
        # transpose: unknowns z_i, equations indexed by (j,k)
        return nullspace(rows, self.one)

    def commutator_subspace(self) -> IncrementalSpan:
        if self._comm is not None:
            return self._comm
        span = IncrementalSpan()
        for i in range(self.dimension):
            ti = self.table[i]
            for j in range(i + 1, self.dimension):
                vec = [self.zero] * self.dimension
                for k, c in ti[j].items():
                    vec[k] = vec[k] + c
                for k, c in self.table[j][i].items():
                    vec[k] = vec[k] - c
                span.insert(vec)
        self._comm = span
        return span

    def cocenter_dim(self) -> int:
        return self.dimension - self.commutator_subspace().dim

    def class_relations(self, vectors):
        """Linear relations among the given elements in the quotient by the
        commutator subspace: a basis of {c : sum c_i v_i in [A,A]}."""
        comm = self.commutator_subspace()
        cols = [comm.residue(v) for v in vectors]
        # relations = nullspace of the matrix whose columns are the residues
        rows = [[cols[i][r] for i in range(len(cols))]
                for r in range(self.dimension)]
        return nullspace(rows, self.one)

    def class_dependence(self, u, v) -> bool:
        """Are the images of u and v linearly dependent in A/[A,A]?"""
        return bool(self.class_relations([u, v]))
