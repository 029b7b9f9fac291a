"""Independent sympy model of the tower actions on small states.

States are (side, lambda, w) with w written w_k, ..., w_1. c is taken from its
plethystic form; c* is recovered from the residue of psi at the removed box,
c(lam; y) c*(lam + y; y) = (1 - q^-1 t^-1)^-1 Res_{z=y} psi_lam(z) / y.
Prints values at q=2/3, t=5/7 that are frozen into test_polyrep.cpp.
"""
import sympy as sp

q, t, z = sp.symbols("q t z")
Q0, T0 = sp.Rational(2, 3), sp.Rational(5, 7)


def boxes(lam):
    return [(r + 1, c + 1) for r, p in enumerate(lam) for c in range(p)]


def content(b):
    return q ** (b[1] - 1) * t ** (b[0] - 1)


def addable(lam):
    lam = list(lam)
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        prev = lam[r - 1] if r > 0 else None
        if prev is None or prev > cur:
            out.append((r + 1, cur + 1))
    return out


def removable(lam):
    lam = list(lam)
    return [(r + 1, lam[r]) for r in range(len(lam)) if r + 1 == len(lam) or lam[r] > lam[r + 1]]


def add_box(lam, b):
    lam = list(lam)
    if b[0] > len(lam):
        lam.append(0)
    lam[b[0] - 1] += 1
    return tuple(lam)


def remove_box(lam, b):
    lam = list(lam)
    lam[b[0] - 1] -= 1
    return tuple(p for p in lam if p)


def plethystic_lambda(expr):
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


def c(lam, x):
    X = content(x)
    B = sum((content(b) for b in boxes(lam)), sp.Integer(0))
    return -plethystic_lambda(-1 / X + (1 - q) * (1 - t) * B / X + 1)


def psi(lam):
    f = -(z - 1 / (q * t)) / (z - 1)
    for b in boxes(lam):
        x = content(b)
        f *= (z - x / q) * (z - x / t) * (z - q * t * x) / ((z - q * x) * (z - t * x) * (z - x / (q * t)))
    return f


def cstar(mu, x):
    lam = remove_box(mu, x)
    y = content(x)
    res = sp.cancel((z - y) * sp.cancel(psi(lam))).subs(z, y)
    return sp.cancel(res / y / (1 - 1 / (q * t)) / c(lam, x))


def outer(s):
    side, lam, w = s
    cur = lam
    for b in w:
        cur = add_box(cur, b) if side == "+" else remove_box(cur, b)
    return cur


def norm(s):
    side, lam, w = s
    return ("+", lam, ()) if not w else s


def d_plus(s):
    side, lam, w = s
    k = len(w)
    if side == "-" and k:
        return {norm(("-", remove_box(lam, w[0]), w[1:])): sp.Integer(1)}
    mu = outer(s)
    out = {}
    for x in addable(mu):
        X = content(x)
        coef = -(q ** k) * c(mu, x)
        for b in w:
            W = content(b)
            coef *= (X - t * W) / (X - q * t * W)
        out[("+", lam, w + (x,))] = coef
    return out


def d_minus(s):
    side, lam, w = s
    k = len(w)
    if side == "+" and k:
        return {norm(("+", add_box(lam, w[0]), w[1:])): sp.Integer(1)}
    mu = outer(s)
    out = {}
    for x in removable(mu):
        X = content(x)
        coef = -(q ** (-k)) * cstar(mu, x)
        for b in w:
            W = content(b)
            coef *= (X - W / t) / (X - W / (q * t))
        out[("-", lam, w + (x,))] = coef
    return out


def zj(j, s):
    side, lam, w = s
    return {s: content(w[len(w) - j])}


def T(i, s):
    side, lam, w = s
    p = q if side == "+" else 1 / q
    k = len(w)
    wi, wi1 = content(w[k - i]), content(w[k - i - 1])
    sw = list(w)
    sw[k - i], sw[k - i - 1] = sw[k - i - 1], sw[k - i]
    out = {s: (p - 1) * wi1 / (wi - wi1)}
    swapped = (side, lam, tuple(sw))
    coef = (wi - p * wi1) / (wi - wi1)
    if sp.simplify(coef) != 0:
        out[swapped] = out.get(swapped, 0) + coef
    return out


def apply(op, v):
    out = {}
    for s, a in v.items():
        for s2, b in op(s).items():
            out[s2] = out.get(s2, 0) + a * b
    return {s: e for s, e in out.items() if sp.simplify(e) != 0}


def word(ops, s):
    v = {s: sp.Integer(1)}
    for op in reversed(ops):
        v = apply(op, v)
    return v


def show(s):
    side, lam, w = s
    head = "I" if side == "+" else "I-"
    lam_s = "(" + ",".join(map(str, lam)) + ")" if lam else "()"
    if not w:
        return head + "_{" + lam_s + "}"
    return head + "_{" + lam_s + ",(" + ",".join("(%d,%d)" % b for b in w) + ")}"


def dump(name, v):
    print("  // " + name)
    for s in sorted(v, key=show):
        print('  {"%s", "%s"},' % (show(s), sp.nsimplify(v[s].subs({q: Q0, t: T0}))))


def z1(s):
    return zj(1, s)


def T1(s):
    return T(1, s)


I = lambda lam: ("+", tuple(lam), ())
dump("d+ I_(1)", word([d_plus], I([1])))
dump("d+ d+ I_(1)", word([d_plus, d_plus], I([1])))
dump("T1 d+ d+ I_(1)", word([T1, d_plus, d_plus], I([1])))
dump("e_1 I_(2,1)", word([d_minus, z1, d_plus], I([2, 1])))
dump("d- I_(2,1)", word([d_minus], I([2, 1])))
dump("d- d- I_(3,1)", word([d_minus, d_minus], I([3, 1])))
dump("T1 d- d- I_(3,1)", word([T1, d_minus, d_minus], I([3, 1])))
dump("f_-1 I_(2,1)", word([d_plus, lambda s: {s: 1 / content(s[2][-1])}, d_minus], I([2, 1])))
dump("d- z1 d+ d+ I_(1)", word([d_minus, z1, d_plus, d_plus], I([1])))
print("  // symbolic d+ I_(1):", {show(s): sp.factor(e) for s, e in word([d_plus], I([1])).items()})
