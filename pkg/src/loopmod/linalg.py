"""Exact dense linear algebra over cyclotomic fields.

Matrices hold CycScalar entries sharing one cyclotomic order; mixed
orders are lifted to the lcm on construction.  Elimination uses exact
pivoting on the first nonzero entry, never a tolerance.
"""

from .cyclo import CycScalar, QQ, lcm


def _common_order(entries):
    N = 1
    for x in entries:
        N = lcm(N, x.order)
    return N


class ExactMatrix:
    __slots__ = ("rows", "cols", "order", "data")

    def __init__(self, data, order=None):
        data = [list(row) for row in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for row in data:
            assert len(row) == self.cols
        if order is None:
            order = _common_order([x for row in data for x in row]) if data else 1
        self.order = order
        self.data = [[x.lift(order) if x.order != order else x for x in row]
                     for row in data]

    # -- constructors

    @staticmethod
    def zero(rows, cols, order=1):
        z = CycScalar.zero(order)
        return ExactMatrix([[z] * cols for _ in range(rows)], order)

    @staticmethod
    def identity(n, order=1):
        z, o = CycScalar.zero(order), CycScalar.one(order)
        return ExactMatrix([[o if i == j else z for j in range(n)]
                            for i in range(n)], order)

    @staticmethod
    def from_rational(data, order=1):
        return ExactMatrix([[CycScalar.rational(QQ(x), order) for x in row]
                            for row in data], order)

    @staticmethod
    def column(vec):
        return ExactMatrix([[x] for x in vec])

    def copy(self):
        return ExactMatrix([row[:] for row in self.data], self.order)

    # -- basic ops

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def __add__(self, other):
        a, b = self._pair(other)
        return ExactMatrix([[x + y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(a.data, b.data)])

    def __sub__(self, other):
        a, b = self._pair(other)
        return ExactMatrix([[x - y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(a.data, b.data)])

    def __neg__(self):
        return self.scale(CycScalar.rational(-1, self.order))

    def scale(self, c):
        return ExactMatrix([[c * x for x in row] for row in self.data])

    def _pair(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        if self.order == other.order:
            return self, other
        M = lcm(self.order, other.order)
        return ExactMatrix(self.data, M), ExactMatrix(other.data, M)

    def __matmul__(self, other):
        assert self.cols == other.rows, "shape mismatch"
        M = lcm(self.order, other.order)
        a = self if self.order == M else ExactMatrix(self.data, M)
        b = other if other.order == M else ExactMatrix(other.data, M)
        zero = CycScalar.zero(M)
        out = []
        bt = list(zip(*b.data))
        for row in a.data:
            orow = []
            for col in bt:
                acc = zero
                for x, y in zip(row, col):
                    if not (x.is_zero() or y.is_zero()):
                        acc = acc + x * y
                orow.append(acc)
            out.append(orow)
        return ExactMatrix(out, M)

    def __mul__(self, other):
        if isinstance(other, (ExactMatrix,)):
            return self.__matmul__(other)
        return self.scale(other if isinstance(other, CycScalar)
                          else CycScalar.rational(QQ(other), self.order))

    __rmul__ = __mul__

    def __eq__(self, other):
        a, b = self._pair(other)
        return all(x == y for r1, r2 in zip(a.data, b.data)
                   for x, y in zip(r1, r2))

    __hash__ = None

    def is_zero(self):
        return all(x.is_zero() for row in self.data for x in row)

    def transpose(self):
        return ExactMatrix([list(c) for c in zip(*self.data)], self.order)

    def apply(self, vec):
        """Matrix times column vector (list of CycScalar)."""
        col = self @ ExactMatrix.column(vec)
        return [col.data[i][0] for i in range(col.rows)]

    def hstack(self, other):
        assert self.rows == other.rows
        M = lcm(self.order, other.order)
        return ExactMatrix([r1 + r2 for r1, r2 in zip(self.data, other.data)], M)

    def column_vec(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column_vec(j) for j in range(self.cols)]

    def flatten(self):
        return [x for row in self.data for x in row]

    # -- elimination

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        m = [row[:] for row in self.data]
        order = self.order
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = None
            for i in range(r, self.rows):
                if not m[i][c].is_zero():
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = m[r][c].inverse()
            m[r] = [inv * x for x in m[r]]
            for i in range(self.rows):
                if i != r and not m[i][c].is_zero():
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return ExactMatrix(m, order), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right kernel, as a list of column vectors."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        zero, one = CycScalar.zero(self.order), CycScalar.one(self.order)
        for f in free:
            v = [zero] * self.cols
            v[f] = one
            for i, p in enumerate(pivots):
                v[p] = -R.data[i][f]
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution of A x = b (b a column vector), or None."""
        aug = self.hstack(ExactMatrix.column(b))
        R, pivots = aug.rref()
        if self.cols in pivots:
            return None
        zero = CycScalar.zero(R.order)
        x = [zero] * self.cols
        for i, p in enumerate(pivots):
            x[p] = R.data[i][self.cols]
        return x

    def inverse(self):
        assert self.rows == self.cols
        aug = self.hstack(ExactMatrix.identity(self.rows, self.order))
        R, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            raise ValueError("matrix is singular")
        return ExactMatrix([row[self.rows:] for row in R.data], R.order)

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def det(self):
        assert self.rows == self.cols
        m = [row[:] for row in self.data]
        det = CycScalar.one(self.order)
        for c in range(self.cols):
            piv = None
            for i in range(c, self.rows):
                if not m[i][c].is_zero():
                    piv = i
                    break
            if piv is None:
                return CycScalar.zero(self.order)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inverse()
            for i in range(c + 1, self.rows):
                if not m[i][c].is_zero():
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def __repr__(self):
        return "ExactMatrix(%dx%d over Q(zeta_%d))" % (
            self.rows, self.cols, self.order)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self.data)


# ---------------------------------------------------------------------------

def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]

def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]

def vec_scale(c, v):
    return [c * x for x in v]

def vec_is_zero(v):
    return all(x.is_zero() for x in v)


class Subspace:
    """A subspace of F^n kept as a reduced echelon basis.

    Supports incremental insertion with membership and coordinate
    queries; raises its cyclotomic order on demand.
    """

    def __init__(self, dim, order=1):
        self.ambient = dim
        self.order = order
        self.rows = []     # echelon basis vectors
        self.pivots = []   # pivot index of each row
        self.raw = []      # vectors as inserted (spanning set = basis)

    def _ensure_order(self, N):
        if N == self.order:
            return
        M = lcm(self.order, N)
        if M != self.order:
            self.rows = [[x.lift(M) for x in row] for row in self.rows]
            self.raw = [[x.lift(M) for x in row] for row in self.raw]
            self.order = M

    def _reduce(self, vec):
        self._ensure_order(_common_order(vec))
        v = [x.lift(self.order) if x.order != self.order else x for x in vec]
        coords = [CycScalar.zero(self.order)] * len(self.rows)
        for i, (row, p) in enumerate(zip(self.rows, self.pivots)):
            if not v[p].is_zero():
                c = v[p]
                coords[i] = c
                v = [x if y.is_zero() else x - c * y
                     for x, y in zip(v, row)]
        return v, coords

    def add(self, vec):
        """Insert a vector; returns True if the span grew."""
        v, _ = self._reduce(vec)
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return False
        inv = v[p].inverse()
        v = [x if x.is_zero() else inv * x for x in v]
        # keep basis reduced
        for i, row in enumerate(self.rows):
            if not row[p].is_zero():
                c = row[p]
                self.rows[i] = [x if y.is_zero() else x - c * y
                                for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        self.raw.append([x.lift(self.order) if x.order != self.order else x
                         for x in vec])
        return True

    def contains(self, vec):
        v, _ = self._reduce(vec)
        return vec_is_zero(v)

    def coords_echelon(self, vec):
        """Coordinates of vec in the echelon basis, or None."""
        v, coords = self._reduce(vec)
        if not vec_is_zero(v):
            return None
        return coords

    def coords_raw(self, vec):
        """Coordinates of vec in the inserted (raw) basis, or None."""
        if not self.raw:
            return [] if vec_is_zero(vec) else None
        A = ExactMatrix(list(zip(*self.raw)))
        self._ensure_order(A.order)
        v = [x.lift(A.order) for x in vec]
        return A.solve(v)

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [row[:] for row in self.rows]
