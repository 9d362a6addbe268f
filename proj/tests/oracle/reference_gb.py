"""Independent reference for pinned Groebner bases.

Strong bases over Z come from a deliberately naive Buchberger (every S- and
G-pair, any eligible reducer, no criteria) followed by canonicalization that
computes each residue from the gcd of the eligible leading coefficients.
Bases over Q and F_p come from sympy. Output uses the same text format as
the C++ formatter so values can be frozen into tests.

usage: python3 reference_gb.py   (prints the corpus table)
"""
from fractions import Fraction
from math import gcd
import itertools
import sys

import sympy


def lex_key(e):
    return tuple(e)


def dp_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


ORDERS = {"lp": lex_key, "dp": dp_key}


class Ring:
    def __init__(self, names, order):
        self.names = names
        self.key = ORDERS[order]
        self.order = order

    def lead(self, p):
        return max(p, key=self.key)


def parse(text, ring):
    """Singular-flavoured: 3y2-yx. Only what the corpus needs."""
    expr = text
    for v in ring.names:
        pass
    syms = sympy.symbols(ring.names)
    local = {n: s for n, s in zip(ring.names, syms)}
    out = []
    i = 0
    # insert explicit operators
    buf = ""
    prev = ""
    while i < len(expr):
        c = expr[i]
        if c.isalpha():
            if prev and (prev.isdigit() or prev.isalpha() or prev == ")"):
                buf += "*"
            buf += c
            j = i + 1
            while j < len(expr) and expr[j].isdigit():
                j += 1
            if j > i + 1:
                buf += "**" + expr[i + 1:j]
            prev = c
            i = j
            continue
        if c == "(" and prev and (prev.isalnum() or prev == ")"):
            buf += "*"
        buf += c
        prev = c if not c.isspace() else prev
        i += 1
    poly = sympy.Poly(sympy.sympify(buf, locals=local), *syms)
    return {tuple(m): int(c) for m, c in poly.terms()}


def add(p, q, c=1, shift=None):
    r = dict(p)
    for m, v in q.items():
        if shift is not None:
            m = tuple(a + b for a, b in zip(m, shift))
        r[m] = r.get(m, 0) + c * v
        if r[m] == 0:
            del r[m]
    return r


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mdiv(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mlcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, u, v = egcd(b, a % b)
    return (g, v, u - (a // b) * v)


def top_reduce_any(p, G, ring):
    """Strong reduction of leading terms only, any eligible reducer."""
    changed = True
    while p and changed:
        changed = False
        lm = ring.lead(p)
        c = p[lm]
        for g in G:
            glm = ring.lead(g)
            a = g[glm]
            if divides(glm, lm) and c % a == 0:
                p = add(p, g, -(c // a), mdiv(lm, glm))
                changed = True
                break
    return p


def full_reduce(p, G, ring):
    """Leading-term strong reduction applied to every term, top down."""
    r = {}
    p = dict(p)
    while p:
        p = top_reduce_any(p, G, ring)
        if not p:
            break
        lm = ring.lead(p)
        r[lm] = p.pop(lm)
    return r


def strong_gb(F, ring):
    G = [dict(f) for f in F if f]
    done = set()
    while True:
        new = None
        for i, j in itertools.combinations(range(len(G)), 2):
            if (i, j) in done:
                continue
            done.add((i, j))
            f, g = G[i], G[j]
            fm, gm = ring.lead(f), ring.lead(g)
            a, b = f[fm], g[gm]
            L = mlcm(fm, gm)
            c = a * b // gcd(a, b)
            s = add({}, f, c // a, mdiv(L, fm))
            s = add(s, g, -(c // b), mdiv(L, gm))
            gg, u, v = egcd(a, b)
            gp = add({}, f, u, mdiv(L, fm))
            gp = add(gp, g, v, mdiv(L, gm))
            for h in (s, gp):
                h = full_reduce(h, G, ring)
                if h:
                    new = h
                    break
            if new:
                break
        if new is None:
            return G
        G.append(new)


def canonical_z(G, ring):
    G = [dict(g) for g in G]
    for g in G:
        if g[ring.lead(g)] < 0:
            for m in g:
                g[m] = -g[m]
    # Minimal: drop elements whose leading term another leading term divides.
    keep = []
    for j, g in enumerate(G):
        gm = ring.lead(g)
        red = False
        for i, f in enumerate(G):
            if i == j:
                continue
            fm = ring.lead(f)
            if divides(fm, gm) and g[gm] % f[fm] == 0:
                if (fm, f[fm]) != (gm, g[gm]) or i < j:
                    red = True
                    break
        if not red:
            keep.append(g)
    out = []
    for g in keep:
        gm = ring.lead(g)
        h = {gm: g[gm]}
        tail = {m: v for m, v in g.items() if m != gm}
        # Canonical residue of each tail term: c mod d, d the gcd of all
        # eligible leading coefficients; the difference is a Z-combination.
        while tail:
            m = ring.lead(tail)
            elig = [f for f in keep if divides(ring.lead(f), m)]
            if not elig:
                h[m] = tail.pop(m)
                continue
            d = 0
            for f in elig:
                d = gcd(d, f[ring.lead(f)])
            c = tail[m]
            target = c % d
            # write c - target as sum k_f a_f
            need = c - target
            coeffs = bezout([f[ring.lead(f)] for f in elig], need)
            for k, f in zip(coeffs, elig):
                if k:
                    tail = add(tail, f, -k, mdiv(m, ring.lead(f)))
            assert tail.get(m, 0) == target
            if target:
                h[m] = tail.pop(m)
        out.append(h)
    out.sort(key=lambda g: (ring.key(ring.lead(g)), abs(g[ring.lead(g)])))
    return out


def bezout(coeffs, need):
    g = 0
    ks = []
    for a in coeffs:
        if g == 0:
            g, ks = abs(a), [1 if a > 0 else -1]
            continue
        gg, u, v = egcd(g, a)
        ks = [k * u for k in ks] + [v]
        g = gg
    assert need % g == 0
    return [k * (need // g) for k in ks]


def fmt_coeff(c):
    c = Fraction(c)
    if c.denominator == 1:
        return str(abs(c.numerator))
    return f"{abs(c.numerator)}/{c.denominator}"


def fmt_poly(p, ring):
    if not p:
        return "0"
    s = ""
    for i, m in enumerate(sorted(p, key=ring.key, reverse=True)):
        c = Fraction(p[m])
        if c < 0:
            s += "-"
        elif i:
            s += "+"
        mono = "*".join(
            n if e == 1 else f"{n}^{e}" for n, e in zip(ring.names, m) if e)
        if abs(c) != 1 or not mono:
            s += fmt_coeff(c) + ("*" if mono else "")
        s += mono
    return s


def fmt_basis(G, ring):
    if not G:
        return "0"
    return "\n".join(fmt_poly(g, ring) for g in G)


def z_basis(F, ring):
    return canonical_z(strong_gb(F, ring), ring)


def mod_basis(F, ring, m):
    G = z_basis(F + [{tuple([0] * len(ring.names)): m}], ring)
    out = []
    for g in G:
        h = {k: v % m for k, v in g.items() if v % m}
        if h:
            out.append(h)
    return out


def field_basis(F, ring, modulus=None):
    syms = sympy.symbols(ring.names)
    exprs = [sum(c * sympy.prod([s ** e for s, e in zip(syms, m)]) for m, c in f.items()) for f in F]
    order = {"lp": "lex", "dp": "grevlex"}[ring.order]
    if not exprs:
        return []
    kw = {"modulus": modulus} if modulus else {}
    gb = sympy.groebner(exprs, *syms, order=order, **kw)
    out = []
    for e in gb.exprs:
        poly = sympy.Poly(e, *syms, **kw)
        d = {tuple(m): (Fraction(int(c.p), int(c.q)) if not modulus else int(c) % modulus)
             for m, c in poly.terms()}
        lm = ring.lead(d)
        lc = d[lm]
        if modulus:
            inv = pow(int(lc), -1, modulus)
            d = {k: (v * inv) % modulus for k, v in d.items()}
        else:
            d = {k: v / lc for k, v in d.items()}
        out.append({k: v for k, v in d.items() if v})
    out.sort(key=lambda g: ring.key(ring.lead(g)))
    return out


CORPUS = [
    ("A", ["z", "y", "x"], "dp", ["3z-y", "3y-x", "3x"]),
    ("A_lp_x", ["z", "y", "x"], "lp", ["3z-y", "3y-x", "x"]),
    ("B", ["y", "x"], "lp", ["3y2-yx", "3yx-x3", "3x3"]),
    ("C", ["y", "x"], "lp", ["3y2-yx", "3yx-x3", "x3"]),
    ("D", ["y", "x"], "lp", ["3y2x-5yx2+2x3", "-7y3x+5y2x2", "7y6-2y3x3+yx5"]),
]

DOMAINS = {
    "A": ["ZZ", "ZZ/9", "QQ"],
    "A_lp_x": ["ZZ", "ZZ/9", "QQ"],
    "B": ["ZZ", "ZZ/9", "ZZ/27", "ZZ/81", "QQ"],
    "C": ["ZZ", "ZZ/9", "ZZ/27", "ZZ/81", "QQ"],
    "D": ["QQ", "ZZ/2", "ZZ/3", "ZZ/5", "ZZ/7"],
}


# the naive strong completion does not finish on these in reasonable time
FIELD_ONLY = {"D"}


def compute(label, names, order, gens, dom):
    ring = Ring(names, order)
    F = [parse(g, ring) for g in gens]
    if dom == "ZZ":
        G = z_basis(F, ring)
    elif dom == "QQ":
        G = field_basis(F, ring)
    else:
        m = int(dom.split("/")[1])
        if sympy.isprime(m) and label in FIELD_ONLY:
            G = field_basis(F, ring, m)
        else:
            G = mod_basis(F, ring, m)
            if sympy.isprime(m):
                H = field_basis(F, ring, m)
                assert fmt_basis(G, ring) == fmt_basis(H, ring), (label, dom)
    return fmt_basis(G, ring)


def main():
    for label, names, order, gens in CORPUS:
        for dom in DOMAINS[label]:
            print(f"## {label} {dom} {order} ({','.join(names)}) {', '.join(gens)}")
            print(compute(label, names, order, gens, dom))


if __name__ == "__main__":
    sys.exit(main())
