"""Independent high-precision reference values for the unit tests.

Run with `python3 derive_oracles.py`; the printed constants are frozen in
the C++ tests. Uses mpmath only (no code shared with the library).
"""
import mpmath as mp

mp.mp.dps = 30


def half_integer_series(value, x):
    """sum_m value(m) sinc(pi (x - m)) over m in Z + 1/2, paired as m, -m."""
    c = mp.cos(mp.pi * x) / mp.pi
    return c * mp.nsum(lambda k: (-1) ** int(k) * value(k + mp.mpf(1) / 2) * 2 * (k + mp.mpf(1) / 2)
                       / ((k + mp.mpf(1) / 2) ** 2 - x ** 2), [0, mp.inf])


def K(lam, x):
    if mp.cos(mp.pi * x) == 0:
        return mp.exp(-lam * abs(x))
    return half_integer_series(lambda m: mp.exp(-lam * m), x)


def K_hat(lam, t):
    if abs(t) >= mp.mpf(1) / 2:
        return mp.mpf(0)
    s = mp.sinh(lam / 2)
    return s * mp.cos(mp.pi * t) / (s ** 2 + mp.sin(mp.pi * t) ** 2)


def V(x):
    """Log approximant, -sum f(m) sinc with f = -log."""
    return half_integer_series(lambda m: mp.log(m), x)


def V_sigma(sigma, x):
    g = mp.gamma(1 - sigma)
    raw = half_integer_series(lambda m: g * (m ** (sigma - 1) - 1), x)
    return raw / g + 1


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


show("catalan", mp.catalan)
show("l1_exp(1,1)", 2 - 2 * mp.sech(mp.mpf(1) / 2))
show("l1_exp(1,2)", 2 - 2 * mp.sech(mp.mpf(1) / 4))
show("l1_exp(0.1,1)", 20 * (1 - mp.sech(mp.mpf('0.05'))))
show("K(1,0)", K(1, 0))
show("K(2,0)", K(2, 0))
show("K(1,0.25)", K(1, mp.mpf('0.25')))
show("K(1,0.75)", K(1, mp.mpf('0.75')))
show("K(1,1+0.5i)", K(1, mp.mpc(1, '0.5')))
show("int K_hat(2,t) dt", mp.quad(lambda t: K_hat(2, t), [-0.5, 0, 0.5]))
show("V(0)", V(0))
show("V(0.25)", V(mp.mpf('0.25')))
show("log(0.25) - V(0.25)", mp.log(mp.mpf('0.25')) - V(mp.mpf('0.25')))
show("log(2.2) - V(2.2)", mp.log(mp.mpf('2.2')) - V(mp.mpf('2.2')))
show("Vsigma(0.5, 0)", V_sigma(mp.mpf('0.5'), 0))
show("Vsigma(1.5, 0.3)", V_sigma(mp.mpf('1.5'), mp.mpf('0.3')))
show("Haar L1 4G/pi", 4 * mp.catalan / mp.pi)


def power_l1(sigma):
    beta = mp.nsum(lambda n: (-1) ** int(n) / (2 * n + 1) ** (1 + sigma), [0, mp.inf])
    return 4 * beta / (mp.sin(mp.pi * sigma / 2) * mp.pi ** sigma) / abs(mp.gamma(1 - sigma))


show("power L1 sigma=0.5", power_l1(mp.mpf('0.5')))
show("power L1 sigma=1.5", power_l1(mp.mpf('1.5')))
show("power L1 sigma=0.5 raw quad",
     mp.quad(lambda l: 2 / l * (1 - mp.sech(l / 2)) * l ** mp.mpf('-0.5'), [0, 1, mp.inf]))
show("FT haar t=0.25", 2 - mp.quad(lambda l: K_hat(l, mp.mpf('0.25')) / l, [0, 1, mp.inf]))
show("FT haar t=1", mp.mpf(1) / 2)

# Periodic side.
show("p(1,0.3)", mp.cosh(mp.mpf('-0.2')) / mp.sinh(mp.mpf('0.5')) - 2)
show("k(1,0) c0", -2 + mp.csch(mp.mpf(1) / 4) / 2)
show("k(1,3) c1", K_hat(mp.mpf(1) / 8, mp.mpf(1) / 8) / 8)
show("k_mu(haar,0) c0", -mp.quad(lambda l: (2 / l - mp.csch(l / 4) / 2) / l, [0, 4, mp.inf]))
show("k_mu(haar,1) c1", mp.quad(lambda l: K_hat(l / 4, mp.mpf(1) / 4) / l, [0, 4, mp.inf]) / 4)
show("k_mu(haar,2) c2", mp.quad(lambda l: K_hat(l / 6, mp.mpf(2) / 6) / l, [0, 6, mp.inf]) / 6)
sig = mp.mpf('1.5')
qconst = 2 * mp.pi / mp.sin(mp.pi * sig / 2) * (2 * mp.pi) ** (-sig)
show("q_mu(power1.5, 0)", qconst * mp.zeta(sig))
show("q_mu(power1.5, 0.3)", qconst * mp.re(mp.polylog(sig, mp.exp(2j * mp.pi * mp.mpf('0.3')))))
sig = mp.mpf('0.5')
qconst = 2 * mp.pi / mp.sin(mp.pi * sig / 2) * (2 * mp.pi) ** (-sig)
show("q_mu(power0.5, 0.3)", qconst * mp.re(mp.polylog(sig, mp.exp(2j * mp.pi * mp.mpf('0.3')))))
show("periodic power0.5 N=2", mp.quad(lambda l: 2 / l * (1 - mp.sech(l / 12)) * l ** mp.mpf('-0.5'), [0, 6, mp.inf]))


def dirichlet_beta(s):
    return (mp.zeta(s, mp.mpf(1) / 4) - mp.zeta(s, mp.mpf(3) / 4)) / 4 ** s


show("beta(1.3)", dirichlet_beta(mp.mpf('1.3')))
show("beta(0.5)", dirichlet_beta(mp.mpf('0.5')))
