"""Numeric oracle for the two-interior wedge pushforward."""
import mpmath as mp

mp.mp.dps = 20

t = mp.mpf("0.3")
x = mp.mpc("-0.5", "0.8")
y = mp.mpc("0.7", "1.3")
TWO_I_PI = 2j * mp.pi


def a_coeff(z, s):
    return ((1 - t) / (z - s) + t / (z - mp.conj(s))) / TWO_I_PI


def b_coeff(z, s):
    zb = mp.conj(z)
    return -((1 - t) / (zb - s) + t / (zb - mp.conj(s))) / TWO_I_PI


def integrand(u, v):
    z = mp.mpc(u, v)
    w = a_coeff(z, x) * b_coeff(z, y) - a_coeff(z, y) * b_coeff(z, x)
    return w * (-2j)


# split the domain around the singular points
us = [-mp.inf, x.real, y.real, mp.inf]
vs = [0, x.imag, y.imag, mp.inf]
total = mp.mpc(0)
for i in range(3):
    for j in range(3):
        total += mp.quad(lambda u, v: integrand(u, v),
                         [us[i], us[i + 1]], [vs[j], vs[j + 1]])

golden = mp.log((x - mp.conj(y)) / (y - mp.conj(x))) / TWO_I_PI
print("numeric :", total)
print("golden  :", golden)
print("diff    :", abs(total - golden))


def L(b, a):
    return mp.log(a - b) / TWO_I_PI


# symbolic totals from dev_wedge2, evaluated with principal branches
xb, yb = mp.conj(x), mp.conj(y)
A = 2 - 3 * t + t ** 2
B = 2 * t - t ** 2
C = -(1 - t) ** 2
D = -t * (1 - t)
core = (A * L(y, x) + B * L(yb, x) - A * L(x, y) - B * L(xb, y)
        + C * L(y, xb) + D * L(yb, xb) - C * L(x, yb) - D * L(xb, yb))
for const, name in [((t - 1), "order xy"), ((1 - t), "order yx")]:
    val = const + core
    print(name, ":", val, " diff:", abs(val - golden))
