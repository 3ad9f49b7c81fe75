"""Hand integrand vs quad_fibre for the one-real wedge."""
import cmath
import mpmath as mp

mp.mp.dps = 16
t = mp.mpf("0.5")
x = mp.mpc("0.4", "0.8")
q = mp.mpf(0)
TWO_I_PI = 2j * mp.pi


def a_coeff(z, s, sb):
    return ((1 - t) / (z - s) + t / (z - sb)) / TWO_I_PI


def b_coeff(z, s, sb):
    zb = mp.conj(z)
    return -((1 - t) / (zb - s) + t / (zb - sb)) / TWO_I_PI


def integrand(u, v):
    z = mp.mpc(u, v)
    xb = mp.conj(x)
    w = (a_coeff(z, x, xb) * b_coeff(z, q, q)
         - a_coeff(z, q, q) * b_coeff(z, x, xb))
    return w * (-2j)


us = [-mp.inf, 0, x.real, mp.inf]
vs = [0, x.imag, mp.inf]
total = mp.mpc(0)
for i in range(len(us) - 1):
    for j in range(len(vs) - 1):
        total += mp.quad(integrand, [us[i], us[i + 1]], [vs[j], vs[j + 1]])

golden = mp.log((x - q) / (q - mp.conj(x))) / (1j * mp.pi)
print("hand quad:", total)
print("golden   :", golden)
print("diff     :", abs(total - golden))
