"""Independent sympy oracle for frozen test values.

Computes <x,k> straight from the defining recurrence with sympy's own
rational-function arithmetic and prints the values frozen in the C++ tests.
"""
from functools import lru_cache

import sympy as sp

x, t, u = sp.symbols("x t u")


@lru_cache(None)
def gb(k):
    if k < 0:
        return sp.Integer(0)
    if k == 0:
        return sp.Integer(1)
    prev = t * gb(k - 1).subs(x, x - 1) + (1 - t) * gb(k - 2).subs(x, x - 2)
    return sp.expand(x * prev / k)


def at(n, k):
    return sp.factor(gb(k).subs(x, n))


def main():
    print("<2,3> =", at(2, 3))
    print("<-1,2> =", at(-1, 2))
    print("<2,2> =", sp.expand(at(2, 2)))
    print("<1,2> =", at(1, 2))
    G = sp.series((1 + t * u + (1 - t) * sum(
        (-u) ** (k + 2) / sp.factorial(k + 2) * sp.prod([k - i + 1 + (t - 1) * i for i in range(k + 1)])
        for k in range(6))), u, 0, 6).removeO()
    print("G u^2, u^3 =", sp.factor(G.coeff(u, 2)), "|", sp.factor(G.coeff(u, 3)))
    print("G^2 u^1 =", sp.expand(G ** 2).coeff(u, 1))
    k = sp.symbols("k")
    f = {1: sp.Integer(1), 2: t}
    for n in range(3, 6):
        f[n] = sp.expand(t * f[n - 1].subs(k, k - 1) + (1 - t) * (k - 1) / (n - 1) * f[n - 2].subs(k, k - 2))
    print("f3 =", sp.factor(f[3]), " f4 =", sp.factor(f[4]), " f4(5) =", sp.factor(f[4].subs(k, 5)))
    # psi_{1,1} body: b_0 = -1*<0,0>, b_{-1} = 2<1,2>/(1-t)
    print("b_-1 for r=1:", sp.simplify(2 * at(1, 2) / (1 - t)))
    # Rothe, classical B=0 case
    A, C, n = 2, 3, 2
    lhs = sum(sp.binomial(A, kk) * sp.binomial(C, n - kk) for kk in range(n + 1))
    print("Rothe B=0:", lhs, sp.binomial(A + C, n))
    for kk in range(1, 5):
        expansion = [sp.factor(c) for c in binomial_coeffs(gb(kk), kk)]
        print(f"binomial expansion <x,{kk}>:", expansion)


def binomial_coeffs(p, k):
    cs = []
    for j in range(k + 1):
        v = p.subs(x, j) - sum(cs[i] * sp.binomial(j, i) for i in range(j))
        cs.append(sp.expand(v))
    return cs


if __name__ == "__main__":
    main()
