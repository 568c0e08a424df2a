"""Arbitrary-precision reference values for the bound formulas.

Run with `python3 bounds_oracle.py`; the printed values are frozen in
tests/test_bounds.cpp and tests/test_plan.cpp.
"""

from mpmath import ceil, ln, log, mp, mpf, nstr, sqrt

mp.dps = 50


def log2(x):
    return log(x, 2)


def h(p):
    p = mpf(p)
    if p in (0, 1):
        return mpf(0)
    return -p * log2(p) - (1 - p) * log2(1 - p)


def thm1(dk, theta):
    return 1 - 1 / (2 - mpf(theta) / log2(dk))


def thm3(dk, eps):
    L = log2(dk)
    return 1 - L / (L + log2((dk - 1) / mpf(eps)))


def thm3_gap(dk, eps):
    return log2(dk) - 2 * log2(1 + mpf(eps))


def prop1(eps, ds):
    eps = mpf(eps)
    t = 2 * sqrt(eps) + 3 * eps
    return 2 * (sqrt(eps) + mpf(3) / 2 * eps) * (1 + log2(ds)) + (1 + t) * h(t / (1 + t))


def thm4_eta(eps):
    eps = mpf(eps)
    return 1 - 8 * eps - 4 * h(eps)


def thm4_fraction(eps):
    eps = mpf(eps)
    half = eps / 2
    num = 1 + (1 + half) * h(half / (1 + half))
    den = 1 + log2((1 - 2 * eps) / (2 * eps))
    return 1 - num / den - half


def prop2(eps, dk, ds):
    eps = mpf(eps)
    t = 2 * (sqrt(eps) + eps)
    return 2 * (sqrt(eps) + eps) * log2(dk * ds) + (1 + t) * h(t / (1 + t))


def thm5_eta(dk, eps):
    eps = mpf(eps)
    return log2(dk) - 8 * eps * log2(dk) - 4 * h(eps)


def thm5_fraction(dk, eps):
    eps = mpf(eps)
    L = log2(dk)
    half = eps / 2
    num = L + (1 + half) * h(half / (1 + half))
    den = L + log2((dk - 1) / eps) + log2(1 - eps * dk)
    return 1 - half - num / den


def cor2_floor(dk, ds):
    return mpf(dk - 1) / (ds + dk * (dk - 1))


def lemma2_plan(gap, dk):
    def g(ds):
        eps = cor2_floor(dk, ds)
        return thm5_eta(dk, eps) - prop2(eps, dk, ds)

    lo, hi = 2, 1 << 30
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if g(mid) >= gap:
            hi = mid
        else:
            lo = mid
    return hi


def show(name, value):
    print(f"{name} = {nstr(value, 17)}")


if __name__ == "__main__":
    show("h(1/4)", h(mpf(1) / 4))
    show("thm1(4, 0.2)", thm1(4, mpf("0.2")))
    show("thm3(2, 1/3)", thm3(2, mpf(1) / 3))
    show("thm3_gap(4, 0.1)", thm3_gap(4, mpf("0.1")))
    show("prop1(0.04, 16)", prop1(mpf("0.04"), 16))
    show("thm4_eta(0.01)", thm4_eta(mpf("0.01")))
    show("thm4_fraction(0.01)", thm4_fraction(mpf("0.01")))
    show("thm4_gap(0.01, 64)", thm4_eta(mpf("0.01")) - prop1(mpf("0.01"), 64))
    show("prop2(0.01, 2, 98)", prop2(mpf("0.01"), 2, 98))
    show("thm5_eta(4, 0.01)", thm5_eta(4, mpf("0.01")))
    show("thm5_fraction(4, 0.01)", thm5_fraction(4, mpf("0.01")))
    show("thm5_gap(4, 34, 0.02)", thm5_eta(4, mpf("0.02")) - prop2(mpf("0.02"), 4, 34))
    show("min_ds(2, 0.01)", ceil((1 - mpf("0.01") * 2) / mpf("0.01")))
    show("2^0.1 - 1", mpf(2) ** mpf("0.1") - 1)
    show("ceil(1/(2^0.1 - 1))", ceil(1 / (mpf(2) ** mpf("0.1") - 1)))
    show("ceil((2/ln2)/0.2)", ceil(2 / ln(2) / mpf("0.2")))
    show("lemma2 plan d_s (0.8, 2)", lemma2_plan(mpf("0.8"), 2))
