"""Stability polynomial of the ten-stage fourth-order SSP scheme in exact arithmetic."""
from fractions import Fraction as F


def poly_mul_scalar(p, s):
    return [c * s for c in p]


def poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def shift(p):
    return [F(0)] + p


def stability_polynomial():
    # y' = z y with dt = 1; polynomials in z
    one = [F(1)]
    q1 = list(one)
    q2 = list(one)
    for _ in range(5):
        q1 = poly_add(q1, poly_mul_scalar(shift(q1), F(1, 6)))
    q2 = poly_add(poly_mul_scalar(q2, F(1, 25)), poly_mul_scalar(q1, F(9, 25)))
    q1 = poly_add(poly_mul_scalar(q2, F(15)), poly_mul_scalar(q1, F(-5)))
    for _ in range(4):
        q1 = poly_add(q1, poly_mul_scalar(shift(q1), F(1, 6)))
    return poly_add(q2, poly_add(poly_mul_scalar(q1, F(3, 5)), poly_mul_scalar(shift(q1), F(1, 10))))


if __name__ == "__main__":
    coeffs = stability_polynomial()
    print("coefficients", [str(c) for c in coeffs])
    for z in (F(-1, 2), F(-3), F(1, 4)):
        val = sum(c * z**k for k, c in enumerate(coeffs))
        print(f"R({z}) = {float(val):.17g}")
