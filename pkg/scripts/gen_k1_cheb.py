"""Regenerate the Chebyshev table used by coopnoma.bessel for x > 2.

Fits exp(x) sqrt(x) K1(x) in the variable u = (8/x - 2)/2, u in (-1, 1]
for x in [2, inf), against 60-digit mpmath reference values, trims the
negligible tail and prints the ``_K1E_CHEB`` tuple plus the measured fit
error over a random log-spaced grid. Run it only when changing the
branch split or the accuracy target; the output is pasted into
``src/coopnoma/bessel.py``.
"""

import random

import mpmath as mp

mp.mp.dps = 60
N_NODES = 34
TAIL_CUTOFF = mp.mpf("1e-19")


def g(u):
    x = 8 / (2 * u + 2)
    return mp.exp(x) * mp.sqrt(x) * mp.besselk(1, x)


def chebyshev_coefficients():
    nodes = [mp.cos(mp.pi * (j + mp.mpf(1) / 2) / N_NODES) for j in range(N_NODES)]
    vals = [g(u) for u in nodes]
    coefs = []
    for k in range(N_NODES):
        s = mp.mpf(0)
        for j in range(N_NODES):
            s += vals[j] * mp.cos(mp.pi * k * (j + mp.mpf(1) / 2) / N_NODES)
        coefs.append((2 if k else 1) * s / N_NODES)  # c0 halved by convention
    trim = N_NODES
    while trim > 1 and abs(coefs[trim - 1]) < TAIL_CUTOFF:
        trim -= 1
    return coefs[:trim]


def clenshaw(u, c):
    b1 = b2 = mp.mpf(0)
    for a in reversed(c[1:]):
        b1, b2 = 2 * u * b1 - b2 + a, b1
    return u * b1 - b2 + c[0]


def max_relative_error(coefs):
    random.seed(1)
    pts = [2.0 + 1e-12, 700.0, 5000.0]
    pts += [2.0 * (1 + 10 ** random.uniform(-6, 2.8)) for _ in range(400)]
    worst = mp.mpf(0)
    for x in pts:
        u = (8.0 / x - 2.0) / 2.0
        approx = clenshaw(mp.mpf(u), coefs) * mp.exp(-x) / mp.sqrt(x)
        ref = mp.besselk(1, x)
        worst = max(worst, abs(approx - ref) / ref)
    return worst


if __name__ == "__main__":
    coefs = chebyshev_coefficients()
    print(f"# kept {len(coefs)} coefficients, "
          f"max rel fit error {mp.nstr(max_relative_error(coefs), 3)}")
    print("_K1E_CHEB = (")
    for c in coefs:
        print(f"    {mp.nstr(c, 20, strip_zeros=False)},")
    print(")")
