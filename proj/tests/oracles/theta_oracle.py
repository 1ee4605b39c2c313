#!/usr/bin/env python3
# Independent reference values for the C++ test suites.
#
# Everything here is computed with mpmath/sympy by brute-force summation,
# numeric differentiation or quadrature, never by the library's own
# algorithms. The printed values are frozen into tests/oracle_values.hpp.
# Re-run with:  python3 tests/oracles/theta_oracle.py

import math

import sympy as sp
from mpmath import mp, mpf, exp, pi, diff, log, quad, inf, sqrt

mp.prec = 512

# Transcribed from a published table of pi (50 decimals), not computed.
PI_50 = "3.14159265358979323846264338327950288419716939937510"


def theta4(y, nu=0, terms=200):
    s = mpf(0)
    for k in range(-terms, terms + 1):
        s += (-1) ** k * (-pi * k * k) ** nu * exp(-pi * k * k * y)
    return s


def theta2(y, nu=0, terms=200):
    s = mpf(0)
    for n in range(-terms, terms):
        t = (n + mpf(1) / 2) ** 2
        s += (-pi * t) ** nu * exp(-pi * y * t)
    return s


def f(y):
    return y * y * theta4(y, 1) / theta4(y, 0)


def g(y):
    e = exp(pi * y)
    return 2 * (e - 1) ** 2 - 4 * y * pi * e * (e - 1) + pi**2 * y**2 * e * (e + 1)


def show(name, v, digits=45):
    print(f"{name:28s} {mp.nstr(v, digits)}")


print("pi (transcribed)            ", PI_50)
assert abs(mpf(PI_50) - pi) < mpf(10) ** -49

for y in (mpf(1), mpf(10), mpf("0.5"), mpf(5), mpf(2)):
    for nu in range(4):
        show(f"theta4({mp.nstr(y, 3)}, {nu})", theta4(y, nu))
for y in (mpf(1), mpf(2)):
    for nu in range(4):
        show(f"theta2({mp.nstr(y, 3)}, {nu})", theta2(y, nu))

mp.prec = 256
for y in (mpf(1), mpf(10), mpf("0.01"), mpf(2)):
    show(f"f({mp.nstr(y, 3)})", f(y))
show("f''(2) numeric", diff(f, mpf(2), 2))
show("f'(1) numeric", diff(f, mpf(1), 1))

show("g(1)", g(mpf(1)))
show("g'(1)", diff(g, mpf(1), 1))
show("g''(1)", diff(g, mpf(1), 2))
show("(1+sqrt3)/pi", (1 + sqrt(3)) / pi)

# Tail integral by quadrature.
for nu in range(4):
    for y in (mpf(1), mpf(2)):
        v = quad(lambda t: t**nu * exp(-pi * t * y / 4), [24, 60, inf])
        show(f"tail_integral({nu}, {int(y)})", v, 30)
        if y == 1:
            show(f"  c-factor nu={nu}", exp(9 * pi / 4) / 9**nu * v, 12)

# Greek constants by exact symbolic expansion in u = e^{-pi y/4}.
y, u, P = sp.symbols("y u P", positive=True)
c = [sp.Rational(1, 100000), sp.Rational(3, 100000), sp.Rational(8, 100000), sp.Rational(3, 10000)]
lo = lambda n: 2 * P**n / 4**n * (u + 9**n * u**9)
up = lambda n: 2 * P**n / 4**n * (u + (1 + c[n]) * 9**n * u**9)
expr = (2 * lo(1) ** 2 * lo(0) - 2 * up(2) * up(0) ** 2) + y * (
    2 * lo(1) ** 3 - 3 * up(2) * up(1) * up(0) + lo(3) * lo(0) ** 2
)
expr = sp.expand(expr / u**27)
for k, label in ((-24, "e^{6 pi y}"), (-16, "e^{4 pi y}"), (-8, "e^{2 pi y}"), (0, "e^0")):
    co = expr.coeff(u, k)
    a, b = sp.factor(co.coeff(y, 1)), sp.factor(co.coeff(y, 0))
    print(f"{label:12s} y-coef {a}   const {b}")
    print(f"{'':12s} = {sp.N(a.subs(P, sp.pi), 20)}   {sp.N(b.subs(P, sp.pi), 20)}")


# h(1/y) display and h(y).
def hrec(yy):
    t = [theta2(yy, i) for i in range(4)]
    return (2 * yy**4.5 * t[1] ** 2 * t[0] - 2 * yy**4.5 * t[2] * t[0] ** 2 - 2 * yy**5.5 * t[1] ** 3
            + 3 * yy**5.5 * t[2] * t[1] * t[0] - yy**5.5 * t[3] * t[0] ** 2)


show("h_reciprocal(1)", hrec(mpf(1)))
show("h_reciprocal(2)", hrec(mpf(2)))


# Exponent scan: f_a''(y) by numeric differentiation of y^a (log theta4)'.
def fa2(a, yy):
    return diff(lambda t: t**a * diff(lambda s: log(theta4(s, 0, 60)), t), yy, 2)


mp.prec = 256
for a in ("2.1", "3", "2.0"):
    ys = [0.05 * math.exp((i + 0.5) / 64 * math.log(100)) for i in range(64)]
    vals = [(fa2(mpf(a), mpf(v)), v) for v in ys]
    best = min(vals)
    print(f"scan a={a}: negatives={sum(1 for v, _ in vals if v < 0)} min={mp.nstr(best[0], 10)} at y={best[1]:.6f}")
show("f_{2.1}''(0.05)", fa2(mpf("2.1"), mpf("0.05")), 20)
show("f_0''(1)", fa2(mpf(0), mpf(1)), 30)

# Envelope and final-bracket spot values.
mp.prec = 256
show("lower_envelope(1, 0)", 2 * exp(-pi / 4) + 2 * exp(-9 * pi / 4), 40)
show("lower_envelope(1, 1)", pi / 2 * exp(-pi / 4) + 9 * pi / 2 * exp(-9 * pi / 4), 40)
show("upper-lower (2, 2)", mpf(8) / 100000 * 2 * 81 * pi**2 * exp(-9 * pi / 2) / 16, 40)
show("final bracket(1)", exp(2 * pi) * (1057472 - 337488) - 2 - mpf("0.08"), 30)
