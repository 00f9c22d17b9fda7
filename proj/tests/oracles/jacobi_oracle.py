"""Jacobi polynomial roots in high precision (mpmath) and the derived checks:
median residual of the quadratic Cauchy-transform equation on |z|=2,
max root modulus for alpha=n^2, beta=n^2+n, and the A=B=1 support distance.
"""
import mpmath as m


def binom(g, k):
    r = m.mpc(1)
    for j in range(k):
        r = r * (g - j) / (j + 1)
    return r


def jacobi_coeffs(n, a, b):
    """Ascending monomial coefficients from the (z-1)^k (z+1)^(n-k) expansion."""
    c = [m.mpc(0)] * (n + 1)
    for k in range(n + 1):
        w = binom(n + a, n - k) * binom(n + b, k)
        p = [m.mpc(1)]
        for _ in range(k):
            p = [(p[i - 1] if i > 0 else 0) - (p[i] if i < len(p) else 0) for i in range(len(p) + 1)]
        for _ in range(n - k):
            p = [(p[i - 1] if i > 0 else 0) + (p[i] if i < len(p) else 0) for i in range(len(p) + 1)]
        for i in range(n + 1):
            c[i] += w * p[i]
    return [x / 2**n for x in c]


def roots(n, a, b):
    c = jacobi_coeffs(n, a, b)
    return m.polyroots(list(reversed(c)), maxsteps=400, extraprec=400)


def median_residual(rts, A, B, probes):
    out = []
    n = len(rts)
    for z in probes:
        C = sum(1 / (z - r) for r in rts) / n
        out.append(abs((1 - z * z) * C * C - ((A + B) * z + A - B) * C + (A + B + 1)))
    out.sort()
    return (out[len(out) // 2] + out[len(out) // 2 - 1]) / 2


if __name__ == "__main__":
    m.mp.dps = 120
    probes = [2 * m.expj(2 * m.pi * (k + 0.5) / 64) for k in range(64)]
    for A, B in [(0, 0), (0.3, 0.7), (0.9, 0.2)]:
        for n in (20, 40, 60):
            print("residual", A, B, n, float(median_residual(roots(n, A * n, B * n), A, B, probes)))
    for n in (10, 20, 30, 40, 60):
        print("quadratic parameters", n, float(max(abs(x) for x in roots(n, n * n, n * n + n))))
    r = roots(60, 60, 60)
    e = m.sqrt(3) / 2
    d = max(abs(x.imag) if abs(x.real) <= e else abs(x - m.sign(x.real) * e) for x in r)
    print("A=B=1 n=60 support distance", float(d))
