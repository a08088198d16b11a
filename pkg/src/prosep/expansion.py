"""Truncated series in non-commuting variables, one variable per generator.

Sending each generator g_i to 1 + x_i embeds the free group into the units
of Z<<x_1..x_r>> truncated at a fixed degree.  Two classical facts make
this the backbone of all free nilpotent computations here:

* an element lies in the k-th lower central term iff its series is
  1 + (terms of degree >= k);
* for such an element the degree-k homogeneous component is a Lie element,
  and reading it in the Hall basis of the free Lie ring gives exactly the
  element's coordinates in the free abelian layer gamma_k/gamma_{k+1}.

Series are dicts mapping monomials (tuples of variable indices) to ints.
The zero-length monomial is the constant term.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction

from .hall import HallBasis


class SeriesContext:
    """Fixes the variable count and truncation degree for series arithmetic."""

    def __init__(self, rank: int, degree: int):
        self.rank = rank
        self.degree = degree

    def one(self):
        return {(): 1}

    def generator(self, i: int, sign: int = 1):
        """Series of g_i (sign=1) or g_i^{-1} (sign=-1)."""
        if sign == 1:
            return {(): 1, (i,): 1}
        out = {(): 1}
        coeff = 1
        for d in range(1, self.degree + 1):
            coeff = -coeff
            out[(i,) * d] = coeff
        return out

    def mul(self, s, t):
        out = {}
        deg = self.degree
        for m1, c1 in s.items():
            room = deg - len(m1)
            for m2, c2 in t.items():
                if len(m2) > room:
                    continue
                key = m1 + m2
                val = out.get(key, 0) + c1 * c2
                if val:
                    out[key] = val
                elif key in out:
                    del out[key]
        return out

    def inverse(self, s):
        """Inverse of a series with constant term 1."""
        if s.get((), 0) != 1:
            raise ValueError("series must have constant term 1")
        n = {m: -c for m, c in s.items() if m}
        out = self.one()
        power = self.one()
        for _ in range(self.degree):
            power = self.mul(power, n)
            if not power:
                break
            for m, c in power.items():
                val = out.get(m, 0) + c
                if val:
                    out[m] = val
                elif m in out:
                    del out[m]
        return out

    def power(self, s, e: int):
        if e < 0:
            return self.power(self.inverse(s), -e)
        result = self.one()
        base = s
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base) if e > 1 else base
            e >>= 1
        return result

    def word(self, letters):
        """Series of a word given as (generator, exponent) syllables."""
        out = self.one()
        for g, e in letters:
            if e == 0:
                continue
            out = self.mul(out, self.power(self.generator(g, 1 if e > 0 else -1), abs(e)))
        return out

    def commutator(self, s, t):
        return self.mul(self.mul(self.inverse(s), self.inverse(t)), self.mul(s, t))

    def is_one(self, s):
        return s == self.one()

    def weight(self, s):
        """Least degree >= 1 with a nonzero term, or None for the identity."""
        best = None
        for m, c in s.items():
            if m and c:
                if best is None or len(m) < best:
                    best = len(m)
        return best

    def homogeneous(self, s, k: int):
        return {m: c for m, c in s.items() if len(m) == k and c}


class LayerSolver:
    """Expresses degree-k Lie components in the weight-k Hall basis."""

    def __init__(self, basis: HallBasis, ctx: SeriesContext):
        self.basis = basis
        self.ctx = ctx
        self._cache = {}

    def _lie_tensor(self, index: int):
        """Tensor expansion of a basic commutator as an iterated bracket."""
        c = self.basis.commutators[index]
        if c.is_leaf():
            return {(c.leaf,): 1}
        left = self._lie_tensor(c.left)
        right = self._lie_tensor(c.right)
        out = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                for key, sgn in ((m1 + m2, 1), (m2 + m1, -1)):
                    val = out.get(key, 0) + sgn * c1 * c2
                    if val:
                        out[key] = val
                    elif key in out:
                        del out[key]
        return out

    def _system(self, k: int):
        if k in self._cache:
            return self._cache[k]
        indices = self.basis.indices_of_weight(k)
        tensors = [self._lie_tensor(i) for i in indices]
        monomials = sorted({m for t in tensors for m in t})
        column_of = {m: j for j, m in enumerate(monomials)}
        rows = [
            [t.get(m, 0) for m in monomials]
            for t in tensors
        ]
        self._cache[k] = (indices, rows, column_of)
        return self._cache[k]

    def coordinates(self, component, k: int):
        """Integer coordinates of a degree-k Lie element in the Hall basis.

        Raises ValueError if the component is not an integral combination of
        the weight-k basis tensors (which would mean the input was not the
        layer image of a group element).
        """
        indices, rows, column_of = self._system(k)
        ncols = len(column_of)
        target = [0] * ncols
        for m, c in component.items():
            if m not in column_of:
                raise ValueError("component involves a foreign monomial")
            target[column_of[m]] = c
        coeffs = _solve_integer(rows, target)
        if coeffs is None:
            raise ValueError("component is not in the weight-%d Lie layer" % k)
        return coeffs


def _solve_integer(rows, target):
    """Solve x * rows = target for integer x, or None if inconsistent.

    The rows are linearly independent over Q (they expand a basis), so
    fraction-free Gauss over Q followed by an integrality check is enough.
    """
    n = len(rows)
    if n == 0:
        return [] if not any(target) else None
    m = len(rows[0])
    # transpose to solve A^T y = b with y the coefficient vector
    a = [[Fraction(rows[i][j]) for i in range(n)] for j in range(m)]
    b = [Fraction(t) for t in target]
    pivots = []
    row = 0
    for col in range(n):
        piv = None
        for i in range(row, m):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        b[row], b[piv] = b[piv], b[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        b[row] *= inv
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
                b[i] -= f * b[row]
        pivots.append(col)
        row += 1
    if len(pivots) != n:
        raise ValueError("basis tensors are not independent")
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = b[r]
    # consistency on non-pivot rows
    for i in range(row, m):
        if b[i] != 0:
            return None
    out = []
    for val in x:
        if val.denominator != 1:
            return None
        out.append(int(val))
    return out
