"""Smith normal form over the integers, with transformation matrices.

Everything here is exact big-integer arithmetic; matrices are lists of
lists of python ints.  This is the workhorse for abelian invariants of
lower-central layers, so overflow must be impossible by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors of a finitely generated abelian group.

    ``free_rank`` counts the infinite cyclic summands; ``torsion`` is the
    chain d_1 | d_2 | ... of torsion coefficients, each >= 2.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    @property
    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    return [
        [sum(ra[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for ra in a
    ]


@dataclass
class SmithForm:
    """D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ...

    ``vinv`` is V^{-1}, maintained alongside V; its rows f_i form a basis of
    Z^cols with row-space(M) = span(d_i * f_i).
    """

    d: list
    u: list
    v: list
    vinv: list
    rows: int
    cols: int
    invariants: AbelianInvariants = field(init=False)

    def __post_init__(self):
        rank = sum(1 for x in self.d if x != 0)
        torsion = tuple(x for x in self.d if x > 1)
        self.invariants = AbelianInvariants(self.cols - rank, torsion)

    def diagonal_matrix(self):
        m = [[0] * self.cols for _ in range(self.rows)]
        for i, x in enumerate(self.d):
            m[i][i] = x
        return m


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, c):
    m[dst] = [x + c * y for x, y in zip(m[dst], m[src])]


def _add_col(m, dst, src, c):
    for row in m:
        row[dst] += c * row[src]


def _negate_row(m, i):
    m[i] = [-x for x in m[i]]


def smith_normal_form(matrix) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Returns the diagonal entries together with the transforms, so that
    ``U * M * V`` reproduces the diagonal exactly (verified in tests, not
    here: callers on hot paths rely on this staying cheap).
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[int(x) for x in row] for row in matrix]
    u = identity_matrix(rows)
    v = identity_matrix(cols)
    vinv = identity_matrix(cols)

    def pivot_at(t):
        # smallest nonzero entry in the remaining block, for mild coefficient control
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = pivot_at(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            _swap_rows(a, t, i)
            _swap_rows(u, t, i)
        if j != t:
            _swap_cols(a, t, j)
            _swap_cols(v, t, j)
            _swap_rows(vinv, t, j)
        if a[t][t] < 0:
            _negate_row(a, t)
            _negate_row(u, t)

        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                _add_row(a, i, t, -q)
                _add_row(u, i, t, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                _add_col(a, j, t, -q)
                _add_col(v, j, t, -q)
                _add_row(vinv, t, j, q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue

        # enforce divisibility: pivot must divide every deeper entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
            continue
        t += 1

    d = [a[i][i] for i in range(min(rows, cols))]
    return SmithForm(d=d, u=u, v=v, vinv=vinv, rows=rows, cols=cols)


def abelian_invariants_of_relations(n_generators, relation_rows) -> AbelianInvariants:
    """Invariants of Z^n modulo the lattice spanned by the given rows."""
    if n_generators == 0:
        return AbelianInvariants(0)
    if not relation_rows:
        return AbelianInvariants(n_generators)
    return smith_normal_form(relation_rows).invariants


def solve_integer_system(matrix, rhs):
    """One integer solution x of matrix * x = rhs, or None.

    ``matrix`` is a list of rows.  Solved through the Smith form: with
    U M V = D, x = V y where y_i = (U rhs)_i / d_i.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    sf = smith_normal_form(matrix)
    c = [sum(sf.u[i][k] * rhs[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        d = sf.d[i] if i < len(sf.d) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            if i < cols:
                y[i] = c[i] // d
    return [sum(sf.v[i][k] * y[k] for k in range(cols)) for i in range(cols)]


def saturate_lattice(n, rows, primes):
    """Generators of {v in Z^n : m*v in L for some product m of the given primes}.

    L is the lattice spanned by ``rows``.  Column-operation bookkeeping on the
    Smith form gives a basis f_i of Z^n with L = span(d_i * f_i); dividing each
    d_i by its largest divisor supported on ``primes`` yields the saturation.
    """
    if not rows:
        return []
    sf = smith_normal_form(rows)
    out = []
    for i, di in enumerate(sf.d):
        if di == 0:
            continue
        m = di
        for p in primes:
            while m % p == 0:
                m //= p
        out.append([m * x for x in sf.vinv[i]])
    return out
