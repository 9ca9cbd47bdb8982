"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Scalars are kept in canonical form: coordinates in the power basis
{zeta_N^i : 0 <= i < phi(N)} after reduction modulo the N-th cyclotomic
polynomial, with fully reduced rational coefficients.  No floating point
is used anywhere.
"""

from functools import lru_cache
from math import gcd

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

Q0 = QQ(0)
Q1 = QQ(1)


class FieldNotSplit(Exception):
    """A required root does not exist in any cyclotomic field Q(zeta_M)."""


class OrderMismatch(ValueError):
    """Root-of-unity order does not divide the ambient cyclotomic order."""


def lcm(a, b):
    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Polynomials over Q, represented as tuples of QQ, low degree first.

def poly_trim(p):
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Q0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Exact division with remainder; q need not be monic."""
    q = poly_trim(q)
    assert q, "division by zero polynomial"
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [Q0] * max(0, len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = c / lead
        quo[i - dq] = c
        for j in range(dq + 1):
            rem[i - dq + j] -= c * q[j]
    return poly_trim(quo), poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N):
    """Phi_N as a coefficient tuple, computed by recursive exact division
    of x^N - 1 by the product of Phi_d over proper divisors d of N."""
    assert N >= 1
    num = [Q0] * (N + 1)
    num[0], num[N] = QQ(-1), Q1
    den = (Q1,)
    for d in range(1, N):
        if N % d == 0:
            den = poly_mul(den, cyclotomic_polynomial(d))
    quo, rem = poly_divmod(tuple(num), den)
    assert not rem
    return quo


@lru_cache(maxsize=None)
def euler_phi(N):
    return len(cyclotomic_polynomial(N)) - 1


@lru_cache(maxsize=None)
def _reduction_table(N):
    """Rows i = 0..2*phi-2: canonical coordinates of zeta_N^i."""
    phi = euler_phi(N)
    Phi = cyclotomic_polynomial(N)
    rows = []
    for i in range(phi):
        row = [Q0] * phi
        row[i] = Q1
        rows.append(tuple(row))
    # zeta^phi = -(Phi - x^phi); higher powers by shifting
    cur = [-c for c in Phi[:phi]]
    for _ in range(phi - 1):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        cur = [Q0] + cur[: phi - 1]
        if top != 0:
            for j in range(phi):
                cur[j] -= top * Phi[j]
    if phi > 1:
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_coords(N, k):
    """Canonical coordinates of zeta_N^k for any k >= 0."""
    k %= N
    phi = euler_phi(N)
    if phi == 1:
        return (QQ(-1),) if (N == 2 and k == 1) else (Q1,)
    if k < phi:
        row = [Q0] * phi
        row[k] = Q1
        return tuple(row)
    table = _reduction_table(N)
    if k < len(table):
        return table[k]
    # reduce x^k mod Phi_N by repeated squaring on coordinate vectors
    half = _power_coords(N, k // 2)
    out = _coords_mul(N, half, half)
    if k % 2:
        out = _coords_mul(N, out, _power_coords(N, 1))
    return out


@lru_cache(maxsize=None)
def _sparse_table(N):
    """Nonzero (index, value) pairs of each reduction-table row."""
    return tuple(tuple((t, v) for t, v in enumerate(row) if v)
                 for row in _reduction_table(N))


def _coords_mul(N, a, b):
    phi = euler_phi(N)
    table = _sparse_table(N)
    out = [Q0] * phi
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if not y:
                continue
            c = x * y
            if i + j < phi:
                out[i + j] += c
            else:
                for t, v in table[i + j]:
                    out[t] += c * v
    return tuple(out)


@lru_cache(maxsize=None)
def _lift_rows(N, M):
    """Canonical order-M coordinates of zeta_N^i for i < phi(N)."""
    assert M % N == 0
    k = M // N
    return tuple(_power_coords(M, k * i) for i in range(euler_phi(N)))


# ---------------------------------------------------------------------------

class CycScalar:
    """Element of Q(zeta_N) in canonical power-basis coordinates."""

    __slots__ = ("order", "coeffs")
    __hash__ = None

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == euler_phi(order)

    # -- constructors

    @staticmethod
    def rational(q, order=1):
        coeffs = [Q0] * euler_phi(order)
        coeffs[0] = QQ(q)
        return CycScalar(order, coeffs)

    @staticmethod
    def zero(order=1):
        return CycScalar.rational(0, order)

    @staticmethod
    def one(order=1):
        return CycScalar.rational(1, order)

    @staticmethod
    def zeta(N, power=1):
        return CycScalar(N, _power_coords(N, power))

    # -- order management

    def lift(self, M):
        if M == self.order:
            return self
        if M % self.order != 0:
            raise OrderMismatch(
                "cannot lift order %d into order %d" % (self.order, M))
        rows = _lift_rows(self.order, M)
        phi = euler_phi(M)
        out = [Q0] * phi
        for c, row in zip(self.coeffs, rows):
            if c != 0:
                for t in range(phi):
                    if row[t] != 0:
                        out[t] += c * row[t]
        return CycScalar(M, out)

    def try_restrict(self, M):
        """Express this value in Q(zeta_M) (M | order) or return None."""
        if M == self.order:
            return self
        assert self.order % M == 0
        rows = _lift_rows(M, self.order)
        # solve sum_i x_i * rows[i] = self.coeffs by echelon elimination
        phi_big = euler_phi(self.order)
        aug = [list(rows[i]) + [Q1 if j == i else Q0
                                for j in range(len(rows))]
               for i in range(len(rows))]
        target = list(self.coeffs)
        sol = [Q0] * len(rows)
        used = [False] * len(rows)
        for col in range(phi_big):
            piv = None
            for i, row in enumerate(aug):
                if not used[i] and row[col] != 0:
                    piv = i
                    break
            if piv is None:
                if target[col] != 0:
                    return None
                continue
            used[piv] = True
            factor = target[col] / aug[piv][col]
            for i in range(len(rows)):
                sol[i] += factor * aug[piv][phi_big + i]
            for t in range(phi_big):
                target[t] -= factor * aug[piv][t]
            aug = [row if used[i] else
                   [row[t] - (row[col] / aug[piv][col]) * aug[piv][t]
                    for t in range(len(row))]
                   for i, row in enumerate(aug)]
        if any(t != 0 for t in target):
            return None
        return CycScalar(M, sol)

    def _pair(self, other):
        if not isinstance(other, CycScalar):
            other = CycScalar.rational(other)
        if self.order == other.order:
            return self, other
        M = lcm(self.order, other.order)
        return self.lift(M), other.lift(M)

    # -- predicates

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        assert self.is_rational()
        return self.coeffs[0]

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, CycScalar) and other.order == self.order:
            return CycScalar(self.order, [x + y for x, y in
                                          zip(self.coeffs, other.coeffs)])
        a, b = self._pair(other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, CycScalar) and other.order == self.order:
            return CycScalar(self.order, [x - y for x, y in
                                          zip(self.coeffs, other.coeffs)])
        a, b = self._pair(other)
        return CycScalar(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycScalar) and other.order == self.order:
            return CycScalar(self.order, _coords_mul(
                self.order, self.coeffs, other.coeffs))
        a, b = self._pair(other)
        return CycScalar(a.order, _coords_mul(a.order, a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        assert not self.is_zero(), "inverse of zero"
        if self.is_rational():
            coeffs = [Q0] * len(self.coeffs)
            coeffs[0] = 1 / self.coeffs[0]
            return CycScalar(self.order, coeffs)
        # extended Euclid: u * self + v * Phi_N = 1 in Q[x]
        Phi = cyclotomic_polynomial(self.order)
        r0, r1 = Phi, poly_trim(self.coeffs)
        s0, s1 = (), (Q1,)
        while r1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_trim(
                [a - b for a, b in
                 zip(list(s0) + [Q0] * max(0, len(poly_mul(q, s1)) - len(s0)),
                     list(poly_mul(q, s1)) + [Q0] * max(0, len(s0) - len(poly_mul(q, s1))))])
        assert len(r0) == 1, "gcd with Phi_N must be a unit"
        inv_lead = 1 / r0[0]
        coeffs = [c * inv_lead for c in s0]
        coeffs += [Q0] * (euler_phi(self.order) - len(coeffs))
        _, red = poly_divmod(tuple(coeffs), Phi)
        out = list(red) + [Q0] * (euler_phi(self.order) - len(red))
        return CycScalar(self.order, out)

    def __truediv__(self, other):
        a, b = self._pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycScalar.rational(other, self.order) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycScalar.one(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    # -- display, per the scalar literal grammar (z denotes zeta_N)

    def __repr__(self):
        return "CycScalar(%d, %s)" % (self.order, format_scalar(self))

    def __str__(self):
        return format_scalar(self)


def format_scalar(x):
    terms = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append("z^%d" % i if i > 1 else "z")
        else:
            terms.append("%s*z^%d" % (c, i) if i > 1 else "%s*z" % c)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += ("+" + t) if not t.startswith("-") else t
    return out


def parse_scalar(text, order):
    """Parse the CLI scalar grammar: sums of rat, rat*z^k, z^k, z."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty scalar literal")
    # split into signed terms
    terms = []
    cur = ""
    for i, ch in enumerate(text):
        if ch in "+-" and i > 0 and text[i - 1] not in "+-*/^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    total = CycScalar.zero(order)
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if "z" in term:
            if "*" in term:
                rat, zpart = term.split("*")
            else:
                rat, zpart = "1", term
            k = 1 if zpart == "z" else int(zpart[2:])
            coeff = _parse_rat(rat)
            total = total + CycScalar.zeta(order, k) * QQ(sign * coeff)
        else:
            total = total + CycScalar.rational(sign * _parse_rat(term), order)
    return total


def _parse_rat(text):
    if "/" in text:
        num, den = text.split("/")
        return QQ(int(num), int(den))
    return QQ(int(text))


def root_of_unity(k, N):
    """Primitive k-th root of unity zeta_N^(N/k) inside Q(zeta_N)."""
    if N % k != 0:
        raise OrderMismatch("%d does not divide %d" % (k, N))
    return CycScalar.zeta(N, N // k)


def _rational_nth_root(q, m):
    """Exact m-th root of a positive rational, or None."""
    num, den = QQ(q).numerator, QQ(q).denominator

    def iroot(n):
        if n == 0:
            return 0
        lo, hi = 0, int(n)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if mid ** m <= n:
                lo = mid
            else:
                hi = mid - 1
        return lo if lo ** m == n else None

    rn, rd = iroot(int(num)), iroot(int(den))
    if rn is None or rd is None:
        return None
    return QQ(rn, rd)


def scalar_root(x, m):
    """An m-th root of x in a possibly larger cyclotomic field.

    Succeeds when x = q * zeta^j with q a rational possessing a rational
    m-th root (after folding signs into the root of unity); raises
    FieldNotSplit otherwise.
    """
    assert m >= 1
    if m == 1 or x.is_zero():
        return x
    N = lcm(x.order, 2)
    y = x.lift(N)
    for j in range(N):
        quot = y * CycScalar.zeta(N, j).inverse()
        if quot.is_rational():
            q = quot.rational_value()
            if q < 0:
                continue
            r = _rational_nth_root(q, m)
            if r is None:
                break
            M = lcm(N * m, 2)
            # (zeta_{Nm}^{N*m - j})^m = zeta_N^{-j}, so invert back
            root = CycScalar.rational(r, M) * CycScalar.zeta(M, (M // (N * m)) * (N * m - j)).inverse()
            assert root ** m == x
            return root
    raise FieldNotSplit(
        "no m-th root of %s in cyclotomic fields (m=%d)" % (x, m))
