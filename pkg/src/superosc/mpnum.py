"""Arbitrary-precision scalars, dense matrices and symmetric linear algebra.

The substrate for the whole package: everything downstream works either
with :class:`BigReal` / :class:`BigComplex` values that carry their own
precision, or (inside kernels) with raw ``mpf`` values at an explicit
working precision.  Matrices stay dense; the problem sizes here are a
few hundred at most and conditioning, not volume, is the enemy.
"""

from fractions import Fraction

from mpmath import mp, mpf, mpc

from . import kernels
from .errors import DimensionMismatch, NoConvergence, NotPositiveDefinite

MIN_PRECISION = 64
DEFAULT_PRECISION = 128

_EXACT_TYPES = (int, float)  # binary-exact inputs; floats convert losslessly


def _to_mpf(value, prec):
    """Convert ``value`` to mpf with a single rounding at ``prec`` bits."""
    with mp.workprec(prec):
        if isinstance(value, BigReal):
            return +value.value
        if isinstance(value, Fraction):
            return mp.mpf(value.numerator) / mp.mpf(value.denominator)
        if isinstance(value, str):
            s = value.strip()
            if "/" in s:
                f = Fraction(s)
                return mp.mpf(f.numerator) / mp.mpf(f.denominator)
            return mp.mpf(s)
        return mp.mpf(value)


class BigReal:
    """An arbitrary-precision real that remembers its precision.

    Arithmetic between two values is carried out at the larger of the
    two precisions and the result records that precision.  Precision
    never drops below ``MIN_PRECISION`` bits.
    """

    __slots__ = ("value", "precision")

    def __init__(self, value=0, precision=None):
        if precision is None:
            if isinstance(value, BigReal):
                precision = value.precision
            else:
                precision = DEFAULT_PRECISION
        precision = int(precision)
        if precision < MIN_PRECISION:
            raise ValueError(
                "precision must be at least %d bits, got %d"
                % (MIN_PRECISION, precision)
            )
        self.precision = precision
        self.value = _to_mpf(value, precision)

    @classmethod
    def _raw(cls, value, precision):
        """Wrap an mpf that is already correctly rounded."""
        out = object.__new__(cls)
        out.value = value
        out.precision = precision
        return out

    def _coerce(self, other):
        """Return (mpf other, result precision) or None."""
        if isinstance(other, BigReal):
            return other.value, max(self.precision, other.precision)
        if isinstance(other, _EXACT_TYPES) or isinstance(other, mpf):
            return other, self.precision
        if isinstance(other, Fraction):
            return _to_mpf(other, self.precision), self.precision
        return None

    def _binary(self, other, op):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        rhs, prec = pair
        with mp.workprec(prec):
            return BigReal._raw(op(self.value, rhs), prec)

    def _rbinary(self, other, op):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        rhs, prec = pair
        with mp.workprec(prec):
            return BigReal._raw(op(rhs, self.value), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._rbinary(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._rbinary(other, lambda a, b: a / b)

    def __pow__(self, other):
        return self._binary(other, lambda a, b: a ** b)

    def __rpow__(self, other):
        return self._rbinary(other, lambda a, b: a ** b)

    def __neg__(self):
        return BigReal._raw(-self.value, self.precision)

    def __pos__(self):
        return self

    def __abs__(self):
        return BigReal._raw(abs(self.value), self.precision)

    def _cmp_value(self, other):
        if isinstance(other, BigReal):
            return other.value
        if isinstance(other, _EXACT_TYPES) or isinstance(other, mpf):
            return other
        if isinstance(other, Fraction):
            return _to_mpf(other, max(self.precision, 2 * MIN_PRECISION))
        return None

    def __eq__(self, other):
        rhs = self._cmp_value(other)
        return NotImplemented if rhs is None else self.value == rhs

    def __lt__(self, other):
        rhs = self._cmp_value(other)
        return NotImplemented if rhs is None else self.value < rhs

    def __le__(self, other):
        rhs = self._cmp_value(other)
        return NotImplemented if rhs is None else self.value <= rhs

    def __gt__(self, other):
        rhs = self._cmp_value(other)
        return NotImplemented if rhs is None else self.value > rhs

    def __ge__(self, other):
        rhs = self._cmp_value(other)
        return NotImplemented if rhs is None else self.value >= rhs

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return to_decimal(self, digits_for(self.precision))

    def __repr__(self):
        return "BigReal('%s', %d)" % (self, self.precision)


class BigComplex:
    """Complex value built from two :class:`BigReal` parts of equal
    precision."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0, precision=None):
        re = re if isinstance(re, BigReal) else BigReal(re, precision)
        im = im if isinstance(im, BigReal) else BigReal(im, precision)
        prec = max(re.precision, im.precision)
        if precision is not None:
            prec = max(prec, int(precision))
        self.re = BigReal._raw(re.value, prec)
        self.im = BigReal._raw(im.value, prec)

    @property
    def precision(self):
        return self.re.precision

    def _as_pair(self, other):
        if isinstance(other, BigComplex):
            return other.re, other.im
        if isinstance(other, (BigReal, int, float, Fraction)):
            return other, 0
        return None

    def __add__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        return BigComplex(self.re + pair[0], self.im + pair[1])

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        return BigComplex(self.re - pair[0], self.im - pair[1])

    def __rsub__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        return BigComplex(pair[0] - self.re, pair[1] - self.im)

    def __mul__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = pair
        return BigComplex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        c, d = pair
        if not isinstance(c, BigReal):
            c = BigReal(c, self.precision)
        if not isinstance(d, BigReal):
            d = BigReal(d, self.precision)
        den = c * c + d * d
        a, b = self.re, self.im
        return BigComplex((a * c + b * d) / den, (b * c - a * d) / den)

    def __neg__(self):
        return BigComplex(-self.re, -self.im)

    def conjugate(self):
        return BigComplex(self.re, -self.im)

    def __abs__(self):
        return sqrt(self.re * self.re + self.im * self.im)

    def abs_squared(self):
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        pair = self._as_pair(other)
        if pair is None:
            return NotImplemented
        return self.re == pair[0] and self.im == pair[1]

    def __hash__(self):
        return hash((self.re.value, self.im.value))

    def __repr__(self):
        return "BigComplex(%s, %s)" % (self.re, self.im)


def _unary(fn):
    def wrapped(x, precision=None):
        if not isinstance(x, BigReal):
            x = BigReal(x, precision)
        with mp.workprec(x.precision):
            return BigReal._raw(fn(x.value), x.precision)

    return wrapped


sqrt = _unary(lambda v: mp.sqrt(v))
sin = _unary(lambda v: mp.sin(v))
cos = _unary(lambda v: mp.cos(v))
exp = _unary(lambda v: mp.exp(v))
log = _unary(lambda v: mp.log(v))


def log2(x, precision=None):
    if not isinstance(x, BigReal):
        x = BigReal(x, precision)
    with mp.workprec(x.precision):
        return BigReal._raw(mp.log(x.value, 2), x.precision)


def pi(precision=DEFAULT_PRECISION):
    precision = int(precision)
    with mp.workprec(precision):
        return BigReal._raw(+mp.pi, precision)


def digits_for(precision_bits):
    """Decimal digits used when serializing values of this precision."""
    return max(1, -(-(precision_bits * 3) // 10))


def to_decimal(x, digits):
    """Decimal string with ``digits`` significant digits."""
    v = x.value if isinstance(x, BigReal) else x
    return mp.nstr(v, digits, strip_zeros=True)


def solver_epsilon(precision):
    """Contract tolerance for solves and eigendecompositions:
    2**(-precision/2), so half the working bits absorb conditioning and
    half back the guarantee."""
    return BigReal._raw(mpf(2) ** (-(int(precision) // 2)), int(precision))


class DenseMatrix:
    """Dense matrix of uniform-precision entries (real or complex).

    Construction freezes the entries; a matrix built through
    :meth:`symmetric_from_rows` mirrors its lower triangle so symmetry
    holds exactly, and ``is_symmetric`` records that promise.
    """

    __slots__ = ("rows", "cols", "precision", "is_symmetric", "_data",
                 "_complex")

    def __init__(self, data, rows, cols, precision, symmetric=False,
                 is_complex=False):
        if rows <= 0 or cols <= 0 or len(data) != rows * cols:
            raise DimensionMismatch(
                "entry count %d does not match %dx%d" % (len(data), rows, cols)
            )
        self.rows = rows
        self.cols = cols
        self.precision = int(precision)
        self.is_symmetric = symmetric
        self._data = list(data)
        self._complex = is_complex

    @classmethod
    def from_rows(cls, rows, precision=None):
        nr = len(rows)
        nc = len(rows[0])
        if any(len(r) != nc for r in rows):
            raise DimensionMismatch("ragged rows")
        prec = precision
        if prec is None:
            prec = DEFAULT_PRECISION
            for r in rows:
                for v in r:
                    if isinstance(v, (BigReal, BigComplex)):
                        prec = max(prec, v.precision)
        flat = []
        is_complex = False
        for r in rows:
            for v in r:
                if isinstance(v, BigComplex):
                    flat.append(mpc(v.re.value, v.im.value))
                    is_complex = True
                elif isinstance(v, mpc):
                    flat.append(v)
                    is_complex = True
                else:
                    flat.append(_to_mpf(v, prec))
        return cls(flat, nr, nc, prec, is_complex=is_complex)

    @classmethod
    def symmetric_from_rows(cls, rows, precision=None):
        m = cls.from_rows(rows, precision)
        if m.rows != m.cols:
            raise DimensionMismatch("symmetric matrix must be square")
        n = m.rows
        for i in range(n):
            for j in range(i):
                m._data[i * n + j] = m._data[j * n + i]
        m.is_symmetric = True
        return m

    @classmethod
    def identity(cls, n, precision=DEFAULT_PRECISION):
        data = [mpf(0)] * (n * n)
        for i in range(n):
            data[i * n + i] = mpf(1)
        return cls(data, n, n, precision, symmetric=True)

    @property
    def is_complex(self):
        return self._complex

    @property
    def shape(self):
        return (self.rows, self.cols)

    def raw(self, i, j):
        return self._data[i * self.cols + j]

    def entry(self, i, j):
        v = self.raw(i, j)
        if self._complex:
            return BigComplex(BigReal._raw(v.real, self.precision),
                              BigReal._raw(v.imag, self.precision))
        return BigReal._raw(v, self.precision)

    def row_raw(self, i):
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column_raw(self, j):
        return [self._data[i * self.cols + j] for i in range(self.rows)]

    def transpose(self):
        data = [self._data[i * self.cols + j]
                for j in range(self.cols) for i in range(self.rows)]
        return DenseMatrix(data, self.cols, self.rows, self.precision,
                           symmetric=self.is_symmetric,
                           is_complex=self._complex)

    def conj_transpose(self):
        if not self._complex:
            return self.transpose()
        data = [self._data[i * self.cols + j].conjugate()
                for j in range(self.cols) for i in range(self.rows)]
        return DenseMatrix(data, self.cols, self.rows, self.precision,
                           is_complex=True)

    def matvec(self, x):
        if len(x) != self.cols:
            raise DimensionMismatch(
                "vector of length %d against %d columns" % (len(x), self.cols)
            )
        raw_x = [_to_mpf(v, self.precision) if not isinstance(v, (mpf, mpc))
                 else v for v in _strip(x)]
        if self._complex or any(isinstance(v, mpc) for v in raw_x):
            with mp.workprec(self.precision + 10):
                out = []
                for i in range(self.rows):
                    s = mpc(0)
                    for j in range(self.cols):
                        s += self.raw(i, j) * raw_x[j]
                    out.append(s)
        else:
            out = kernels.mat_vec(self._data, self.rows, self.cols, raw_x,
                                  self.precision)
        return [_wrap(v, self.precision) for v in out]

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(
                "%dx%d times %dx%d" % (self.shape + other.shape)
            )
        prec = max(self.precision, other.precision)
        if self._complex or other._complex:
            with mp.workprec(prec + 10):
                data = [mpc(0)] * (self.rows * other.cols)
                for i in range(self.rows):
                    for k in range(self.cols):
                        aik = self.raw(i, k)
                        if aik == 0:
                            continue
                        for j in range(other.cols):
                            data[i * other.cols + j] += aik * other.raw(k, j)
            return DenseMatrix(data, self.rows, other.cols, prec,
                               is_complex=True)
        data = kernels.mat_mul(self._data, self.rows, self.cols,
                               other._data, other.cols, prec)
        return DenseMatrix(data, self.rows, other.cols, prec)

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        with mp.workprec(self.precision + 10):
            s = sum(self.raw(i, i) for i in range(self.rows))
        return _wrap(s, self.precision)

    def frobenius_norm(self):
        with mp.workprec(self.precision + 10):
            s = mpf(0)
            for v in self._data:
                s += abs(v) ** 2
            return BigReal._raw(mp.sqrt(s), self.precision)

    def max_abs_difference(self, other):
        """Largest entrywise |self - other| (shapes must agree)."""
        if self.shape != other.shape:
            raise DimensionMismatch("shape mismatch %s vs %s"
                                    % (self.shape, other.shape))
        prec = max(self.precision, other.precision)
        with mp.workprec(prec + 10):
            worst = mpf(0)
            for a, b in zip(self._data, other._data):
                d = abs(a - b)
                if d > worst:
                    worst = d
        return BigReal._raw(worst, prec)

    def __repr__(self):
        kind = "complex" if self._complex else "real"
        return "DenseMatrix(%dx%d, %s, %d bits)" % (
            self.rows, self.cols, kind, self.precision)


def _strip(values):
    out = []
    for v in values:
        if isinstance(v, BigReal):
            out.append(v.value)
        elif isinstance(v, BigComplex):
            out.append(mpc(v.re.value, v.im.value))
        else:
            out.append(v)
    return out


def _wrap(v, prec):
    if isinstance(v, mpc):
        return BigComplex(BigReal._raw(v.real, prec),
                          BigReal._raw(v.imag, prec))
    return BigReal._raw(v, prec)


def _require_real_symmetric(a):
    if a.rows != a.cols:
        raise DimensionMismatch("matrix must be square")
    if a.is_complex:
        raise DimensionMismatch("matrix must be real")
    if not a.is_symmetric:
        n = a.rows
        for i in range(n):
            for j in range(i):
                if a.raw(i, j) != a.raw(j, i):
                    raise DimensionMismatch("matrix is not symmetric")


def solve_spd(a, b, raw=False):
    """Solve ``A x = b`` for symmetric positive-definite ``A``.

    Uses a Cholesky factorization; the residual satisfies
    ``|A x - b| <= solver_epsilon(A.precision) * |b|`` whenever the
    working precision was provisioned for the conditioning (see
    :func:`required_precision`).

    Raises :class:`NotPositiveDefinite` when a pivot fails, which in
    this package signals duplicate prescribed times or an insufficient
    precision choice.
    """
    _require_real_symmetric(a)
    n = a.rows
    if len(b) != n:
        raise DimensionMismatch("rhs length %d against %d rows" % (len(b), n))
    raw_b = [v.value if isinstance(v, BigReal) else _to_mpf(v, a.precision)
             for v in b]
    L, ok = kernels.cholesky_factor(a._data, n, a.precision)
    if not ok:
        raise NotPositiveDefinite(
            "nonpositive pivot during Cholesky factorization"
        )
    x = kernels.cholesky_solve_factored(L, n, raw_b, a.precision)
    if raw:
        return x
    return [BigReal._raw(v, a.precision) for v in x]


def determinant_spd(a):
    """Determinant of an SPD matrix via its Cholesky factor."""
    _require_real_symmetric(a)
    n = a.rows
    L, ok = kernels.cholesky_factor(a._data, n, a.precision)
    if not ok:
        raise NotPositiveDefinite(
            "nonpositive pivot during Cholesky factorization"
        )
    with mp.workprec(a.precision + 10):
        det = mpf(1)
        for i in range(n):
            det *= L[i * n + i] ** 2
    return BigReal._raw(det, a.precision)


class EigenDecomposition:
    """Eigenvalues (descending) and orthonormal eigenvectors of a real
    symmetric matrix; column ``k`` of ``eigenvectors`` pairs with
    ``eigenvalues[k]``."""

    __slots__ = ("eigenvalues", "eigenvectors", "precision")

    def __init__(self, eigenvalues, eigenvectors, precision):
        self.eigenvalues = tuple(eigenvalues)
        self.eigenvectors = eigenvectors
        self.precision = precision

    def eigenvector(self, k):
        return [self.eigenvectors.entry(i, k)
                for i in range(self.eigenvectors.rows)]

    def eigenvector_raw(self, k):
        return self.eigenvectors.column_raw(k)

    @property
    def smallest(self):
        return self.eigenvalues[-1]

    def __repr__(self):
        return "EigenDecomposition(n=%d, %d bits)" % (
            len(self.eigenvalues), self.precision)


def eigen_symmetric(a, max_sweeps=80):
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi
    rotations.

    Jacobi is slow but unconditionally accurate at these sizes and, for
    positive-definite input, resolves even the tiny trailing eigenvalues
    with high relative accuracy, which is exactly what the
    ill-conditioned kernel matrices here need.

    Raises :class:`NoConvergence` if the off-diagonal norm has not
    collapsed after ``max_sweeps`` full sweeps.
    """
    _require_real_symmetric(a)
    n = a.rows
    diag, vec, converged = kernels.jacobi_eigen(a._data, n, a.precision,
                                                max_sweeps)
    if not converged:
        raise NoConvergence(
            "Jacobi sweeps did not converge in %d sweeps; raise the "
            "working precision" % max_sweeps
        )
    order = sorted(range(n), key=lambda k: diag[k], reverse=True)
    values = [BigReal._raw(diag[k], a.precision) for k in order]
    data = [mpf(0)] * (n * n)
    with mp.workprec(a.precision + 10):
        for new_k, old_k in enumerate(order):
            col = [vec[i * n + old_k] for i in range(n)]
            # fix the sign so the largest-magnitude entry is positive
            pivot = 0
            for i in range(1, n):
                if abs(col[i]) > abs(col[pivot]):
                    pivot = i
            if col[pivot] < 0:
                col = [-v for v in col]
            for i in range(n):
                data[i * n + new_k] = col[i]
    vectors = DenseMatrix(data, n, n, a.precision)
    return EigenDecomposition(values, vectors, a.precision)


def _lambda_smallest_estimate(n, mu_delta):
    """Crude closed-form estimate of the smallest kernel-matrix
    eigenvalue for ``n`` equispaced constraints at scaled spacing
    ``mu_delta``, used only to provision precision."""
    with mp.workprec(DEFAULT_PRECISION):
        x = mp.pi * mu_delta
        return (mp.sqrt(mp.pi) * x ** (2 * n - 1) * mpf(n - 1) ** mpf(1.5)
                / (mpf(2) ** (4 * n - 4) * (2 * n - 1)))


def required_precision(n, mu_delta):
    """Working precision (bits) for an ``n``-point problem with scaled
    spacing ``mu_delta``.

    Returns at least ``log2(1/lambda_estimate) + 96`` bits; in practice
    twice the estimated dynamic range plus 96 guard bits, so that the
    ``solver_epsilon`` contract stays self-consistent even when the
    estimate is off by the usual constant factors.  Never below 128.
    """
    n = int(n)
    if n < 1:
        raise ValueError("need n >= 1")
    if isinstance(mu_delta, BigReal):
        mu_delta = mu_delta.value
    elif isinstance(mu_delta, Fraction):
        mu_delta = _to_mpf(mu_delta, DEFAULT_PRECISION)
    elif isinstance(mu_delta, str):
        mu_delta = _to_mpf(mu_delta, DEFAULT_PRECISION)
    if mu_delta <= 0:
        raise ValueError("need mu_delta > 0")
    if n == 1:
        return 128
    lam = _lambda_smallest_estimate(n, mu_delta)
    with mp.workprec(DEFAULT_PRECISION):
        if lam >= 1:
            return 128
        bits = int(mp.ceil(-mp.log(lam, 2)))
    return max(128, 2 * bits + 96)
