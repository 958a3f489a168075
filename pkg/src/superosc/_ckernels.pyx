"""Hot numeric kernels on flat arbitrary-precision arrays.

Every function here takes flat row-major lists of mpmath ``mpf`` values
plus an explicit working precision in bits, and runs with plain index
loops so the whole module can also be compiled as a C extension
(``superosc._ckernels``) from this exact source.  Selection between the
compiled and interpreted copies happens in :mod:`superosc.kernels`.

Nothing in here raises package exceptions; failures are signalled
through return values and mapped to exceptions by the callers.
"""

from mpmath import mp


def dot(x, y, prec):
    """Inner product of two equal-length vectors."""
    with mp.workprec(prec + 10):
        s = mp.mpf(0)
        for i in range(len(x)):
            s += x[i] * y[i]
        return s


def norm2(x, prec):
    """Euclidean norm of a vector."""
    with mp.workprec(prec + 10):
        s = mp.mpf(0)
        for i in range(len(x)):
            s += x[i] * x[i]
        return mp.sqrt(s)


def mat_vec(a, rows, cols, x, prec):
    """Product of a flat ``rows x cols`` matrix with a vector."""
    with mp.workprec(prec + 10):
        out = []
        for i in range(rows):
            s = mp.mpf(0)
            base = i * cols
            for j in range(cols):
                s += a[base + j] * x[j]
            out.append(s)
        return out


def mat_mul(a, ar, ac, b, bc, prec):
    """Product of flat ``ar x ac`` and ``ac x bc`` matrices."""
    with mp.workprec(prec + 10):
        out = [mp.mpf(0)] * (ar * bc)
        for i in range(ar):
            for k in range(ac):
                aik = a[i * ac + k]
                if aik == 0:
                    continue
                base = k * bc
                obase = i * bc
                for j in range(bc):
                    out[obase + j] += aik * b[base + j]
        return out


def cholesky_factor(a, n, prec):
    """L with A = L L^T for flat symmetric ``a``.

    Returns ``(L_flat, ok)``; ``ok`` is False when a pivot fails to stay
    positive, in which case ``L_flat`` is None.
    """
    with mp.workprec(prec + 10):
        L = [mp.mpf(0)] * (n * n)
        for j in range(n):
            s = a[j * n + j]
            for k in range(j):
                s -= L[j * n + k] * L[j * n + k]
            if s <= 0:
                return None, False
            ljj = mp.sqrt(s)
            L[j * n + j] = ljj
            for i in range(j + 1, n):
                s = a[i * n + j]
                for k in range(j):
                    s -= L[i * n + k] * L[j * n + k]
                L[i * n + j] = s / ljj
        return L, True


def cholesky_solve_factored(L, n, b, prec):
    """Solve L L^T x = b given the Cholesky factor."""
    with mp.workprec(prec + 10):
        y = [mp.mpf(0)] * n
        for i in range(n):
            s = b[i]
            for k in range(i):
                s -= L[i * n + k] * y[k]
            y[i] = s / L[i * n + i]
        x = [mp.mpf(0)] * n
        for i in range(n - 1, -1, -1):
            s = y[i]
            for k in range(i + 1, n):
                s -= L[k * n + i] * x[k]
            x[i] = s / L[i * n + i]
        return x


def jacobi_eigen(a, n, prec, max_sweeps=80):
    """Cyclic Jacobi rotations for a flat symmetric matrix.

    Returns ``(diag, vecs, converged)`` where ``diag`` holds the
    unsorted eigenvalue approximations, ``vecs`` is the flat accumulated
    rotation matrix (column k pairs with ``diag[k]``) and ``converged``
    reports whether the off-diagonal norm went below the target before
    the sweep cap.
    """
    with mp.workprec(prec + 10):
        one = mp.mpf(1)
        zero = mp.mpf(0)
        A = list(a)
        V = [zero] * (n * n)
        for i in range(n):
            V[i * n + i] = one
        fro2 = mp.mpf(0)
        for i in range(n * n):
            fro2 += A[i] * A[i]
        if fro2 == 0:
            return [zero] * n, V, True
        tol = mp.sqrt(fro2) * mp.mpf(2) ** (-prec + 4)
        thresh = tol / (4 * n)
        converged = False
        for _sweep in range(max_sweeps):
            off2 = mp.mpf(0)
            for i in range(n):
                for j in range(i + 1, n):
                    off2 += A[i * n + j] * A[i * n + j]
            if mp.sqrt(2 * off2) <= tol:
                converged = True
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = A[p * n + q]
                    if abs(apq) <= thresh:
                        continue
                    app = A[p * n + p]
                    aqq = A[q * n + q]
                    tau = (aqq - app) / (2 * apq)
                    t = one / (abs(tau) + mp.sqrt(1 + tau * tau))
                    if tau < 0:
                        t = -t
                    c = one / mp.sqrt(1 + t * t)
                    s = t * c
                    A[p * n + p] = app - t * apq
                    A[q * n + q] = aqq + t * apq
                    A[p * n + q] = zero
                    A[q * n + p] = zero
                    for i in range(n):
                        if i == p or i == q:
                            continue
                        aip = A[i * n + p]
                        aiq = A[i * n + q]
                        A[i * n + p] = c * aip - s * aiq
                        A[p * n + i] = A[i * n + p]
                        A[i * n + q] = s * aip + c * aiq
                        A[q * n + i] = A[i * n + q]
                    for i in range(n):
                        vip = V[i * n + p]
                        viq = V[i * n + q]
                        V[i * n + p] = c * vip - s * viq
                        V[i * n + q] = s * vip + c * viq
        diag = [A[i * n + i] for i in range(n)]
        return diag, V, converged
