"""Throwaway oracle experiment: pin down the sinc convention that reproduces
the paper's asymptotics (Eq. 6/7) and the Fig. 4 scaling fit (Eq. 43).
Not part of the deliverable."""
import math
import time
from mpmath import mp, mpf, sin, cos, pi, sqrt, factorial, log, exp

def sinc_n(x):  # normalized sin(pi x)/(pi x)
    if x == 0:
        return mpf(1)
    return sin(pi * x) / (pi * x)

def sinc_u(x):  # unnormalized sin(x)/x
    if x == 0:
        return mpf(1)
    return sin(x) / x

def prolate(N, mu, delta, kind):
    f = sinc_n if kind == 'n' else sinc_u
    return [[mu * f(mu * delta * (i - j)) for j in range(N)] for i in range(N)]

def dirichlet(M, t):
    if t == 0:
        return mpf(2 * M + 1)
    return sin((M + mpf(1) / 2) * t) / sin(t / 2)

def smat(M, delta):
    return [[dirichlet(M, delta * (i - j)) for j in range(M)] for i in range(M)]

def jacobi_eig(A):
    n = len(A)
    A = [row[:] for row in A]
    V = [[mpf(1) if i == j else mpf(0) for j in range(n)] for i in range(n)]
    eps = mpf(2) ** (-mp.prec + 16)
    normA = sqrt(sum(A[i][j] ** 2 for i in range(n) for j in range(n)))
    for sweep in range(100):
        off = sqrt(sum(A[i][j] ** 2 for i in range(n) for j in range(i + 1, n)) * 2)
        if off <= eps * normA:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p][q]
                if abs(apq) <= eps * normA / (10 * n * n):
                    continue
                tau = (A[q][q] - A[p][p]) / (2 * apq)
                t = (1 if tau >= 0 else -1) / (abs(tau) + sqrt(1 + tau * tau))
                c = 1 / sqrt(1 + t * t)
                s = t * c
                for i in range(n):
                    aip, aiq = A[i][p], A[i][q]
                    A[i][p] = c * aip - s * aiq
                    A[i][q] = s * aip + c * aiq
                for i in range(n):
                    api, aqi = A[p][i], A[q][i]
                    A[p][i] = c * api - s * aqi
                    A[q][i] = s * api + c * aqi
                for i in range(n):
                    vip, viq = V[i][p], V[i][q]
                    V[i][p] = c * vip - s * viq
                    V[i][q] = s * vip + c * viq
    evals = sorted([A[i][i] for i in range(n)], reverse=True)
    return evals

def eq6(N, mu, delta, k, pi_adj=False):
    d = pi * delta if pi_adj else mpf(delta)
    prod = mpf(1)
    for j in range(-k, k + 1):
        prod *= (N - j)
    return ((d * mu) ** (2 * k + 1) / d) * (mpf(2) ** (2 * k) * factorial(k) ** 6 /
           ((2 * k + 1) ** 2 * factorial(2 * k) ** 4)) * prod

def eq7(N, dmu, k):
    return dmu ** 2 * (4 * mpf(k + 1) ** 6 * (2 * k - 1) ** 2 /
           ((2 * k + 1) ** 6 * mpf(2 * k + 2) ** 4)) * (N * N - (k + 1) ** 2)

def ratio_corrected(N, dmu, k, pi_adj=True):
    v = (pi * dmu if pi_adj else mpf(dmu)) ** 2
    return v * (k + 1) ** 2 * (N * N - (k + 1) ** 2) / (mpf(4) * (2 * k + 1) ** 2 * (2 * k + 3) ** 2)

def eq5(N, mudelta):
    return sqrt(pi) * (pi * mudelta) ** (2 * N - 1) * mpf(N - 1) ** mpf(1.5) / (mpf(2) ** (4 * N - 4) * (2 * N - 1))

mp.prec = 800

print("=== A) N=5, mu=1: computed lambda_k vs Eq.6 (verbatim / pi-adjusted) ===")
N, mu = 5, 1
for delta in [0.05, 0.025, 0.01]:
    d = mpf(delta)
    for kind in ['n', 'u']:
        ev = jacobi_eig(prolate(N, mu, d, kind))
        lam_star = ev[-1]
        a_verb = eq6(N, mu, d, N - 1, pi_adj=False)
        a_adj = eq6(N, mu, d, N - 1, pi_adj=True)
        print(f" delta={delta} kind={kind}: l*={mp.nstr(lam_star,6)} "
              f"l*/Eq6verb={mp.nstr(lam_star/a_verb,6)} l*/Eq6adj={mp.nstr(lam_star/a_adj,6)}")

print("=== B) ratios lambda_{k+1}/lambda_k at delta=0.01, N=5, normalized ===")
d = mpf('0.01')
ev = jacobi_eig(prolate(5, 1, d, 'n'))
for k in range(4):
    r = ev[k + 1] / ev[k]
    print(f" k={k}: computed={mp.nstr(r,6)} eq7verb={mp.nstr(eq7(5, d, k),6)} "
          f"corrected_pi={mp.nstr(ratio_corrected(5, d, k, True),6)} corrected_nopi={mp.nstr(ratio_corrected(5, d, k, False),6)}")
ev_u = jacobi_eig(prolate(5, 1, d, 'u'))
print(" unnormalized:")
for k in range(4):
    r = ev_u[k + 1] / ev_u[k]
    print(f" k={k}: computed={mp.nstr(r,6)} eq7verb={mp.nstr(eq7(5, d, k),6)} corrected_nopi={mp.nstr(ratio_corrected(5, d, k, False),6)}")

print("=== C) C(M) fit, both conventions ===")
t0 = time.time()
for kind in ['n', 'u']:
    pts = []
    for M in [5, 9, 13, 17]:
        lp = ls = None
        ratio_prev = None
        for x in [0.4, 0.2, 0.1, 0.05]:
            delta = mpf(x) / M
            # precision: scale with expected lambda* magnitude
            need = int(-math.log2(abs(float(eq5(M, x)) or 1e-300)) * 2) + 128
            with mp.workprec(max(300, need)):
                lam_p = jacobi_eig(smat(M, delta))[-1]
                lam_r = jacobi_eig(prolate(M, M, delta, kind))[-1]
            ratio = lam_p / lam_r
            ratio_prev = ratio
        pts.append((M, log(ratio_prev)))
        print(f"  kind={kind} M={M}: C={mp.nstr(ratio_prev,6)} lnC={mp.nstr(log(ratio_prev),6)}")
    n = len(pts)
    sx = sum(p[0] for p in pts); sy = sum(p[1] for p in pts)
    sxx = sum(p[0] ** 2 for p in pts); sxy = sum(p[0] * p[1] for p in pts)
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    inter = (sy - slope * sx) / n
    print(f" kind={kind}: fitted slope={mp.nstr(slope,5)} intercept={mp.nstr(inter,5)}  [paper: 0.089, -1.85]")
print(f"(C took {time.time()-t0:.1f}s)")

print("=== D) Eq.5 vs computed l* at fixed M*delta=0.1 ===")
for M in [6, 10, 14]:
    delta = mpf('0.1') / M
    need = int(-math.log2(float(eq5(M, 0.1)))) * 2 + 128
    with mp.workprec(max(300, need)):
        lam_n = jacobi_eig(prolate(M, M, delta, 'n'))[-1]
        lam_u = jacobi_eig(prolate(M, M, delta, 'u'))[-1]
    e5 = eq5(M, mpf('0.1'))
    print(f" M={M}: eq5={mp.nstr(e5,4)} l*_n={mp.nstr(lam_n,4)} l*_u={mp.nstr(lam_u,4)} "
          f"eq5/l*_n={mp.nstr(e5/lam_n,4)} eq5/l*_u={mp.nstr(e5/lam_u,4)}")
