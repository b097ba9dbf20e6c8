"""Logarithmic mean and the exact EC1 monomial fluctuation by symbolic division."""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def log_mean(a, b):
    a, b = mp.mpf(a), mp.mpf(b)
    return (b - a) / (mp.log(b) - mp.log(a))


def ec1_fluctuation(m, n, um, up):
    # Solves the EC condition for D = h^num [[u^n]] with U = u^2 / 2; the
    # remainder of the division by <u> is zero exactly when n is odd.
    a, b = sp.symbols("a b")
    d = m + n + 1
    alpha = sp.Rational(m + 1, d)
    # alpha <u> D + (1 - alpha) (a^(m+1) + b^(m+1))/2 [[u^n]] = [[F]]
    # with F' = u^(m+1) n u^(n-1), i.e. F = n/(m+n+1) u^(m+n+1).
    big_f = sp.Rational(n, d) * (b**d - a**d)
    local = (1 - alpha) * sp.Rational(1, 2) * (a ** (m + 1) + b ** (m + 1)) * (b**n - a**n)
    dnum = sp.simplify((big_f - local) / (alpha * (a + b) / 2))
    _, r = sp.div(sp.expand(big_f - local), sp.expand(alpha * (a + b) / 2), a)
    return sp.nsimplify(dnum.subs({a: sp.Rational(str(um)), b: sp.Rational(str(up))})), r


if __name__ == "__main__":
    for a, b in [(1, 2), (0.5, 3.0), (2.0, 2.0 + 1e-5)]:
        print(f"log_mean({a}, {b}) = {mp.nstr(log_mean(a, b), 20)}")
    for m, n, um, up in [(1, 1, 0.0, 1.0), (2, 3, 0.5, 1.5), (4, 5, -0.3, 0.7), (1, 2, 0.25, -1.0)]:
        val, rem = ec1_fluctuation(m, n, um, up)
        print(f"ec1({m},{n},{um},{up}) = {sp.N(val, 20)}   remainder {rem}")
