"""psi series of I_lambda from the rational product, expanded by power series division.

psi+ is expanded at z = infinity (coefficients of z^-j), psi- at z = 0.
Prints values at q=2/3, t=5/7 frozen into test_eha.cpp.
"""
from fractions import Fraction as Fr

Q0, T0 = Fr(2, 3), Fr(5, 7)


def boxes(lam):
    return [(r + 1, c + 1) for r, p in enumerate(lam) for c in range(p)]


def pmul(a, b):
    out = [Fr(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def psi(lam, at_infinity):
    """Numerator and denominator coefficient lists in u, with z = u or z = 1/u."""

    def lin(a):
        return [Fr(1), -a] if at_infinity else [-a, Fr(1)]

    num, den = [Fr(-1)], [Fr(1)]
    num = pmul(num, lin(1 / (Q0 * T0)))
    den = pmul(den, lin(Fr(1)))
    for r, c in boxes(lam):
        x = Q0 ** (c - 1) * T0 ** (r - 1)
        for a in (x / Q0, x / T0, Q0 * T0 * x):
            num = pmul(num, lin(a))
        for a in (Q0 * x, T0 * x, x / (Q0 * T0)):
            den = pmul(den, lin(a))
    return num, den


def taylor(a, b, n):
    out = []
    for j in range(n):
        acc = (a[j] if j < len(a) else 0) - sum(out[i] * (b[j - i] if j - i < len(b) else 0) for i in range(j))
        out.append(acc / b[0])
    return out


for lam in [(1,), (2, 1)]:
    print(lam, "+", [str(x) for x in taylor(*psi(lam, True), 4)])
    print(lam, "-", [str(x) for x in taylor(*psi(lam, False), 4)])
