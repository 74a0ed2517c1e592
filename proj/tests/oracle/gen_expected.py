#!/usr/bin/env python3
"""High-precision oracle for the formula-level unit suite.

Evaluates every closed-form quantity asserted in tests/test_formulas.cpp
with 60-digit arithmetic (mpmath) and emits tests/frozen_values.hpp.
The C++ implementation must match these values to 1e-9 relative.

Run from the repository root:  python3 tests/oracle/gen_expected.py
"""

import mpmath as mp

mp.mp.dps = 60

LN = mp.log


def g_dev(x, y):
    return mp.sqrt(2 * x * LN(1 / y))


def hoeffding_rel(x, y, z):
    L = LN(1 / (z * z))
    return L * (1 + mp.sqrt(1 + 4 * x * y / L)) / (2 * x)


def mu_lower(x, n, eps):
    return x - mp.sqrt(n / 2 * LN(1 / eps))


def serfling_lambda(x, y, z):
    return mp.sqrt((x - y + 1) * LN(1 / z) / (2 * x * y))


def serfling_upsilon(x, y, z):
    return mp.sqrt((x + 1) * LN(1 / z) / (2 * y * (x + y)))


def chi(x, y, z):
    return mp.sqrt((y + x) * (y + 1) / (x * y * y) * LN(1 / z))


def h2(p):
    if p == 0 or p == 1:
        return mp.mpf(0)
    return -p * mp.log(p, 2) - (1 - p) * mp.log(1 - p, 2)


def chernoff_case1(x, eps_mean, eps_lo, eps_up):
    # branch 1 deviations: Delta = g(x, eps_lo^4/16), Dhat = g(x, eps_up^(3/2))
    delta = mp.sqrt(2 * x * (LN(16) + 4 * LN(1 / eps_lo)))
    dhat = mp.sqrt(2 * x * mp.mpf(3) / 2 * LN(1 / eps_up))
    return delta, dhat


def tau_nm(n, m, aa, bb, p):
    s = mp.mpf(0)
    for i, a in enumerate(aa):
        for j, b in enumerate(bb):
            s += mp.e ** (-(a + b)) * a**n * b**m * p[i][j]
    return s / (mp.factorial(n) * mp.factorial(m))


VALUES = []


def emit(name, value):
    VALUES.append((name, mp.nstr(mp.mpf(value), 20, strip_zeros=False)))


# ---- bounds ----
emit("g_dev_1000_1em10", g_dev(1000, mp.mpf("1e-10")))
emit("g_dev_100_em2", g_dev(100, mp.e ** -2))
emit("hoeffding_1e6_1em3_1em10", hoeffding_rel(10**6, mp.mpf("1e-3"), mp.mpf("1e-10")))
emit("hoeffding_1e4_05_1em6", hoeffding_rel(10**4, mp.mpf("0.5"), mp.mpf("1e-6")))
emit("mu_lower_1e4_1e6_1em10", mu_lower(10**4, 10**6, mp.mpf("1e-10")))
emit("mu_lower_0_100_05", mu_lower(0, 100, mp.mpf("0.5")))
d1, d1h = chernoff_case1(10**4, mp.mpf("1e-10"), mp.mpf("1e-10"), mp.mpf("1e-10"))
emit("chernoff_b1_delta", d1)
emit("chernoff_b1_delta_hat", d1h)
emit("serfling_lambda_1e6_1e5_1em10", serfling_lambda(10**6, 10**5, mp.mpf("1e-10")))
emit("serfling_lambda_1e3_1e3_em2", serfling_lambda(1000, 1000, mp.e ** -2))
emit("serfling_upsilon_1e3_1e3_1em10", serfling_upsilon(10**3, 10**3, mp.mpf("1e-10")))
emit("serfling_upsilon_0_1e3_em2", serfling_upsilon(0, 10**3, mp.e ** -2))
emit("chi_1e4_1e4_1em10", chi(10**4, 10**4, mp.mpf("1e-10")))
emit("chi_1e4_1e8_1em10", chi(10**4, 10**8, mp.mpf("1e-10")))

# ---- analytic estimation helpers ----
aa = [mp.mpf("0.5"), mp.mpf("0.1"), mp.mpf("0.0005")]
p9 = [[mp.mpf(1) / 9] * 3 for _ in range(3)]
emit("tau_11_grid", tau_nm(1, 1, aa, aa, p9))
emit("tau_00_grid", tau_nm(0, 0, aa, aa, p9))
emit("rescale_1000_05_05_01", 1000 * mp.e / mp.mpf("0.1"))
# serfling scale example: m=5000, Z=1e4, n_k=1e4, eps=1e-10
lam = serfling_lambda(10**4, 10**4, mp.mpf("1e-10"))
emit("serfling_scale_floor_5000", mp.floor(10**4 * mp.mpf(5000) / 10**4 - 10**4 * lam))
# e_k1 example: n1 = nbar = 1e3, ebar = 30, eps''' = 1e-10
ups = serfling_upsilon(10**3, 10**3, mp.mpf("1e-10"))
emit("ek1_count_example", mp.ceil(30 + 2000 * ups))

# ---- LP post-processing ----
emit("lp_mk0_1e4_1em10", mp.floor(10**4 - g_dev(10**4, mp.mpf("1e-10"))))
emit("photon_delta_1e12_1em3_1em10",
     min(g_dev(mp.mpf("1e-3") / mp.mpf("1e12"), mp.mpf("1e-10")), mp.mpf("1e-3")))

# ---- key rate ----
emit("h2_011", h2(mp.mpf("0.11")))
emit("h2_0015", h2(mp.mpf("0.015")))
emit("leak_1e6_0015_116", 10**6 * mp.mpf("1.16") * h2(mp.mpf("0.015")))
# key_length example: n0=1e3, n1=1e5, e=0.02, leak=5e4,
# eps_cor=1e-15, eps'=eps_hat=eps_pa=1e-11
ec, ep, eh, epa = (mp.mpf("1e-15"), mp.mpf("1e-11"), mp.mpf("1e-11"), mp.mpf("1e-11"))
raw = (1000 + 10**5 * (1 - h2(mp.mpf("0.02"))) - 5 * 10**4
       - mp.log(8 / ec, 2) - 2 * mp.log(2 / (ep * eh), 2) - 2 * mp.log(1 / (2 * epa), 2))
emit("key_length_example", mp.floor(raw))
emit("eps_sec_uniform_1em12_2k", 2 * (2 * (1 + 2 + 1) + 4) * mp.mpf("1e-12"))

hdr = [
    "// Generated by tests/oracle/gen_expected.py -- do not edit by hand.",
    "#pragma once",
    "",
    "namespace frozen {",
]
for name, val in VALUES:
    hdr.append(f"inline constexpr double {name} = {val};")
hdr.append("}  // namespace frozen")
hdr.append("")

import pathlib

out = pathlib.Path(__file__).resolve().parent.parent / "frozen_values.hpp"
out.write_text("\n".join(hdr))
print(f"wrote {out}")
for name, val in VALUES:
    print(f"{name:34s} {val}")
