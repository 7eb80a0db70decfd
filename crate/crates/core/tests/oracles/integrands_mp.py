"""50-digit reference values for the scalar integrands.

Evaluates the closed-form integrands directly with mpmath and prints the
values frozen into `tests/integrands.rs`. Run: python3 integrands_mp.py
"""
from mpmath import mp, mpf, sin, pi, quad

mp.dps = 50


def resolvent(t, x, a, s):
    c = sin(pi * a) / ((1 - a) * pi)
    return c * (1 - t) ** (s * a / (1 - a) - 1) * (1 + (s - 1) * t) / (
        (1 - t) ** (s / (1 - a)) * x + t ** (1 / (1 - a)))


def resolvent_minimal(t, x, a):
    c = sin(pi * a) / (a * (1 - a) * pi)
    return c * (a + (1 - 2 * a) * t) / ((1 - t) ** (1 / a) * x + t ** (1 / (1 - a)))


def inverse_resolvent(t, x, a, s):
    c = sin(pi * a) / (a * pi)
    return c * (1 - t) ** (s * (1 - a) / a - 1) * (1 + (s - 1) * t) / (
        (1 - t) ** (s / a) + t ** (1 / a) * x)


def inverse_resolvent_minimal(t, x, a):
    c = sin(pi * a) / (a * (1 - a) * pi)
    return c * (1 - a + (2 * a - 1) * t) / ((1 - t) ** (1 / (1 - a)) + t ** (1 / a) * x)


def split(t, x, a, s):
    return s * sin(pi * a) / pi * (t ** (s * a - 1) / (1 + t ** s * x)
                                   + t ** (s * (1 - a) - 1) / (x + t ** s))


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


a = mpf("0.25")
show("resolvent(0.5, 10, a=0.25, kappa=3)", resolvent(mpf("0.5"), 10, a, 3 * (1 - a) / a))
a = mpf("0.75")
show("split(0.3, 100, a=0.75, kappa=2)", split(mpf("0.3"), 100, a, 2 * max(1 / a, 1 / (1 - a))))
show("resolvent_minimal(0.5, 2, a=0.25)", resolvent_minimal(mpf("0.5"), 2, mpf("0.25")))
show("inverse_resolvent_minimal(0.25, 1e6, a=0.9)",
     inverse_resolvent_minimal(mpf("0.25"), mpf(10) ** 6, mpf("0.9")))
a = mpf("0.1")
show("inverse_resolvent(0.7, 1e3, a=0.1, sigma=2*sigma2)",
     inverse_resolvent(mpf("0.7"), 1000, a, 2 * a / (1 - a)))

# Simpson (M=4) sum of the resolvent density, alpha=0.75, kappa=5, and the exact integral.
a = mpf("0.75")
s = 5 * (1 - a) / a
c = sin(pi * a) / ((1 - a) * pi)
dens = lambda t: c * (1 - t) ** (s * a / (1 - a) - 1) * (1 + (s - 1) * t)
m = 4
w = [1, 4, 2, 4, 1]
simp = sum(wi * dens(mpf(i) / m) for i, wi in enumerate(w)) / (3 * m)
show("simpson4 density sum (a=0.75, kappa=5)", simp)
show("integral of density (a=0.75, kappa=5)", quad(dens, [0, 1]))
