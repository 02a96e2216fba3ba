"""Reference roots of cot(k L/2) = P(k) used by test_analytic.cpp.

relativistic: P = k / (sqrt(k^2 + m^2) + m)
rest_mass:    P = k / (2 m)
"""
import mpmath as mp

mp.mp.dps = 30


def root(L, m, model):
    if model == "relativistic":
        P = lambda k: k / (mp.sqrt(k * k + m * m) + m)
    else:
        P = lambda k: k / (2 * m)
    f = lambda k: mp.cot(k * L / 2) - P(k)
    return mp.findroot(f, (mp.mpf("1e-9"), mp.pi / L * (1 - mp.mpf("1e-12"))), solver="anderson")


for L, m, model in [(2, 0.5, "relativistic"), (2, 0.5, "rest_mass"),
                    (2, 2000, "relativistic"), (2, 2000, "rest_mass"),
                    (224, 0.15, "relativistic"), (224, 0.15, "rest_mass")]:
    print(f"L={L} m={m} {model}: {mp.nstr(root(L, mp.mpf(m), model), 17)}")
