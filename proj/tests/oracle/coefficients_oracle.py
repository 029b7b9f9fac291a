"""Independent sympy evaluation of the box coefficients.

Prints values at q=2/3, t=5/7 used as frozen constants in test_combinatorics.cpp.
"""
import sympy as sp

q, t = sp.symbols("q t")
Q0, T0 = sp.Rational(2, 3), sp.Rational(5, 7)


def boxes(lam):
    return [(r + 1, c + 1) for r, p in enumerate(lam) for c in range(p)]


def content(b):
    return q ** (b[1] - 1) * t ** (b[0] - 1)


def plethystic_lambda(expr):
    """prod (1 - m)^coef over the monomials of a Laurent polynomial."""
    expr = sp.expand(expr)
    out = sp.Integer(1)
    for term in sp.Add.make_args(expr):
        coef, mono = term.as_coeff_Mul()
        if coef == 0:
            continue
        if mono == 1:
            if coef > 0:
                return sp.Integer(0)
            raise ZeroDivisionError
        out *= (1 - mono) ** coef
    return out


def B(lam):
    return sum((content(b) for b in boxes(lam)), sp.Integer(0))


def Bstar(lam):
    return sum((1 / content(b) for b in boxes(lam)), sp.Integer(0))


def c(lam, x):
    X = content(x)
    return -plethystic_lambda(-1 / X + (1 - q) * (1 - t) * B(lam) / X + 1)


def cstar(mu, x):
    lam = list(mu)
    lam[x[0] - 1] -= 1
    lam = [p for p in lam if p]
    X = content(x)
    return plethystic_lambda(-(1 - q) * (1 - t) * Bstar(lam) * X) / X


def d(lam):
    pref = sp.Integer(1)
    for b in boxes(lam):
        pref *= content(b)
    return pref * plethystic_lambda(-Bstar(lam) + (1 - q) * (1 - t) * B(lam) * Bstar(lam))


def at(e):
    return sp.nsimplify(sp.simplify(e).subs({q: Q0, t: T0}))


if __name__ == "__main__":
    cases_c = [((), (1, 1)), ((1,), (1, 2)), ((1,), (2, 1)), ((2, 1), (1, 3)), ((2, 1), (2, 2)),
               ((2, 1), (3, 1)), ((3, 1, 1), (2, 2))]
    for lam, x in cases_c:
        print("c", lam, x, at(c(lam, x)))
    cases_cs = [((1,), (1, 1)), ((2,), (1, 2)), ((2, 1), (1, 2)), ((2, 1), (2, 1)), ((3, 2), (2, 2)),
                ((3, 1, 1), (3, 1))]
    for mu, x in cases_cs:
        print("cstar", mu, x, at(cstar(mu, x)))
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        print("d", lam, at(d(lam)))
    print("cstar (2) (1,2) simplified:", sp.factor(cstar((2,), (1, 2))))
