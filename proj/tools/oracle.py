"""Independent cross-check of the values frozen in the C++ tests.

Shares no code with the library: covers are found by brute force over all edge
labelings, origamis are compared by relabeling search, and the quartic identities
are expanded with sympy.  Run: python3 tools/oracle.py
"""
import itertools
from fractions import Fraction

import sympy as sp


def compose(p, q):  # (p q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def normal_form(sx, sy):
    """Smallest relabeling (over base squares) reached by a DFS on x, y, x^-1, y^-1."""
    d = len(sx)
    sxi, syi = inverse(sx), inverse(sy)
    best = None
    for base in range(d):
        lab = {base: 0}
        order = [base]
        stack = [base]
        while stack:
            i = stack.pop()
            for j in (sy[i], syi[i], sx[i], sxi[i]):
                if j not in lab:
                    lab[j] = len(order)
                    order.append(j)
                    stack.append(j)
        cand = tuple(lab[sx[order[k]]] for k in range(d)) + tuple(lab[sy[order[k]]] for k in range(d))
        if best is None or cand < best:
            best = cand
    return best


def act_S(o):
    sx, sy = o
    return (inverse(sy), sx)


def act_T(o):
    sx, sy = o
    return (sx, compose(sy, inverse(sx)))


def orbit_size(o):
    seen = {normal_form(*o)}
    todo = [o]
    while todo:
        x = todo.pop()
        for y in (act_S(x), act_T(x)):
            k = normal_form(*y)
            if k not in seen:
                seen.add(k)
                todo.append(y)
    return len(seen), seen


def connected(sx, sy):
    seen, todo = {0}, [0]
    while todo:
        i = todo.pop()
        for j in (sx[i], sy[i]):
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return len(seen) == len(sx)


def commutator_cycles(sx, sy):
    k = compose(compose(sx, sy), compose(inverse(sx), inverse(sy)))
    seen, out = set(), []
    for i in range(len(k)):
        if i in seen:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j)
            j = k[j]
        out.append(c)
    return out


def double_covers(n, p, q):
    """All double covers branched over S, grouped by the (x^n, y^n) monodromy."""
    pts = [(p % n, q % n), (-q % n, p % n), (-p % n, -q % n), (q % n, -p % n)]
    branch = {v for v in pts if pts.count(v) % 2 == 1}
    nn = n * n
    idx = lambda a, b, s: s * nn + (b % n) * n + (a % n)
    found = {}
    for bits in itertools.product((0, 1), repeat=2 * nn):
        lx = lambda a, b: bits[(b % n) * n + (a % n)]
        ly = lambda a, b: bits[nn + (b % n) * n + (a % n)]
        eps = (sum(lx(a, 0) for a in range(n)) % 2, sum(ly(0, b) for b in range(n)) % 2)
        if eps in found:
            continue
        sx = tuple(idx(a + 1, b, s ^ lx(a, b)) for s in (0, 1) for b in range(n) for a in range(n))
        sy = tuple(idx(a, b + 1, s ^ ly(a, b)) for s in (0, 1) for b in range(n) for a in range(n))
        if not connected(sx, sy):
            continue
        twos = {(c[0] % nn % n, c[0] % nn // n) for c in commutator_cycles(sx, sy) if len(c) == 2}
        if twos == branch and all(len(c) <= 2 for c in commutator_cycles(sx, sy)):
            found[eps] = (sx, sy)
        if len(found) == 4:
            break
    return found


def minus_one_fixed_totals(sx, sy):
    d = len(sx)
    sxi, syi = inverse(sx), inverse(sy)
    cyc = commutator_cycles(sx, sy)
    cls = {i: c for c, cy in enumerate(cyc) for i in cy}
    totals = []
    for t in range(d):
        rho = {0: t}
        ok, todo = True, [0]
        while todo and ok:
            i = todo.pop()
            for src, dst in ((sx, sxi), (sy, syi)):
                j, im = src[i], dst[rho[i]]
                if j not in rho:
                    if im in rho.values():
                        ok = False
                        break
                    rho[j] = im
                    todo.append(j)
                elif rho[j] != im:
                    ok = False
                    break
        if not ok or len(rho) != d:
            continue
        f = sum(rho[i] == i for i in range(d)) + sum(rho[i] == sx[i] for i in range(d))
        f += sum(rho[i] == sy[i] for i in range(d))
        f += sum(cls[sy[sx[rho[cy[0]]]]] == c for c, cy in enumerate(cyc))
        totals.append(f)
    return sorted(totals, reverse=True)


def sl2_order(m):
    return sum(1 for a, b, c, d in itertools.product(range(m), repeat=4) if (a * d - b * c) % m == 1)


def quartic_checks():
    x, y, z, t, a, b, c = sp.symbols("x y z t a b c")
    f = lambda a, b, c, X, Y, Z: X**4 + Y**4 + Z**4 + 2 * a * X**2 * Y**2 + 2 * b * X**2 * Z**2 + 2 * c * Y**2 * Z**2
    lhs = sp.expand(f(0, 3, 0, x + z, t * y, x - z))
    lhs = sp.rem(sp.Poly(lhs, t), sp.Poly(t**4 - 8, t)).as_expr()
    print("fermat identity:", sp.expand(lhs - 8 * f(0, 0, 0, x, y, z)) == 0)

    def sing_points(a, b, c, q):
        pts = [(1, yy, zz) for yy in range(q) for zz in range(q)] + [(0, 1, zz) for zz in range(q)] + [(0, 0, 1)]
        F = f(a, b, c, x, y, z)
        grads = [F] + [sp.diff(F, v) for v in (x, y, z)]
        fns = [sp.lambdify((x, y, z), g) for g in grads]
        return [pt for pt in pts if all(int(fn(*pt)) % q == 0 for fn in fns)]

    print("sing (1,2,3) mod 13:", sing_points(1, 2, 3, 13))
    print("sing (7,2,2) mod 13:", sing_points(7, 2, 2, 13))
    print("sing (0,0,0) mod 5:", sing_points(0, 0, 0, 5))
    conv = lambda v: (v + 1) / (v - 1)
    print("lambda -1 ->", conv(Fraction(-1)), " 2 ->", conv(Fraction(2)), " back", conv(conv(Fraction(2))))


def trace_zero_count(p):
    return sum(1 for a, b, c, d in itertools.product(range(p), repeat=4) if (a + d) % p == 0 and (a * d - b * c) % p == 1)


def stab_size(n, p, q):
    pts = sorted([(p % n, q % n), (-q % n, p % n), (-p % n, -q % n), (q % n, -p % n)])
    cnt = 0
    for A in itertools.product(range(n), repeat=4):
        a, b, c, d = A
        if (a * d - b * c) % n != 1:
            continue
        img = sorted([((a * u + b * v) % n, (c * u + d * v) % n) for u, v in pts])
        cnt += img == pts
    return cnt


if __name__ == "__main__":
    # quaternion origami: squares 1,i,j,k,-1,-i,-j,-k, right multiplication by i and j
    sx = (1, 4, 7, 2, 5, 0, 3, 6)
    sy = (2, 3, 4, 5, 6, 7, 0, 1)
    print("W orbit:", orbit_size((sx, sy))[0], " cycles:", sorted(len(c) for c in commutator_cycles(sx, sy)))
    print("W -I lifts:", minus_one_fixed_totals(sx, sy))
    covers = double_covers(3, 1, 0)
    keysets = {}
    for eps, o in sorted(covers.items()):
        size, keys = orbit_size(o)
        keysets[eps] = keys
        print("D(3,1,0) eps", eps, "orbit", size, "lifts", minus_one_fixed_totals(*o))
    nonhyp = [e for e in keysets if orbit_size(covers[e])[0] == 18]
    print("(1,0) isomorphic to (0,1):", normal_form(*covers[(1, 0)]) == normal_form(*covers[(0, 1)]))
    print("non-hyperelliptic key sets equal:", all(keysets[e] == keysets[nonhyp[0]] for e in nonhyp))
    print("|SL2(Z/m)| m=2..12:", [sl2_order(m) for m in range(2, 13)])
    print("trace-0 counts p=3,5,7,11,13:", [trace_zero_count(p) for p in (3, 5, 7, 11, 13)])
    print("stab sizes (3,1,0),(5,1,1),(7,1,0),(5,1,2):", [stab_size(*c) for c in ((3, 1, 0), (5, 1, 1), (7, 1, 0), (5, 1, 2))])
    quartic_checks()
