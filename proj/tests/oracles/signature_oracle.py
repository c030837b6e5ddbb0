#!/usr/bin/env python3
"""Dense-linear-algebra oracle for Lie algebra invariants.

Independent of the C++ library: structure constants are re-entered here from
the printed presentations, and every quantity is computed with dense rational
matrices (sympy DomainMatrix over QQ).  The output is frozen into
tests/golden/signatures.json and compared against the library by the test
suites.

    python3 tests/oracles/signature_oracle.py > tests/golden/signatures.json
"""
import itertools
import json
import sys

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def algebra(n, rels):
    """rels: list of (i, j, {k: c}) with 1-based indices, [e_i, e_j] = sum c e_k."""
    c = [[[QQ(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, out in rels:
        for k, v in out.items():
            c[i - 1][j - 1][k - 1] += QQ(v)
            c[j - 1][i - 1][k - 1] -= QQ(v)
    return c


def direct_sum(a, b):
    n, m = len(a), len(b)
    c = [[[QQ(0)] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = a[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                c[n + i][n + j][n + k] = b[i][j][k]
    return c


def abelian(n):
    return algebra(n, [])


def heisenberg(m):
    return algebra(2 * m + 1, [(2 * i - 1, 2 * i, {2 * m + 1: 1}) for i in range(1, m + 1)])


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), QQ).rank()


def bracket_vec(c, x, y):
    n = len(c)
    out = [QQ(0)] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return out


def span_basis(vectors, n):
    """Row-reduced basis of the span (dense Gauss-Jordan over QQ)."""
    rows = [list(v) for v in vectors if any(x != 0 for x in v)]
    if not rows:
        return []
    m = DomainMatrix(rows, (len(rows), n), QQ).rref()[0].to_Matrix()
    out = []
    for r in range(m.rows):
        row = [QQ.from_sympy(m[r, k]) for k in range(n)]
        if any(x != 0 for x in row):
            out.append(row)
    return out


def nullspace_basis(rows, ncols):
    if ncols == 0:
        return []
    if not rows:
        return [[QQ(1) if k == j else QQ(0) for k in range(ncols)] for j in range(ncols)]
    dm = DomainMatrix([list(r) for r in rows], (len(rows), ncols), QQ)
    ns = dm.nullspace().to_Matrix()
    return [[QQ.from_sympy(ns[r, k]) for k in range(ncols)] for r in range(ns.rows)]


def lcs(c):
    n = len(c)
    if n == 0:
        return []
    e = [[QQ(1) if k == j else QQ(0) for k in range(n)] for j in range(n)]
    cur = e
    dims = [n]
    while True:
        nxt = span_basis([bracket_vec(c, x, y) for x in cur for y in e], n)
        if len(nxt) == len(cur):
            break
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            break
    return dims


def derived(c):
    n = len(c)
    if n == 0:
        return []
    cur = [[QQ(1) if k == j else QQ(0) for k in range(n)] for j in range(n)]
    dims = [n]
    while True:
        nxt = span_basis([bracket_vec(c, x, y) for x in cur for y in cur], n)
        if len(nxt) == len(cur):
            break
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            break
    return dims


def ucs(c):
    """Z_{i+1} = {x : [x, e_j] in Z_i for all j}; membership tested by rank."""
    n = len(c)
    if n == 0:
        return []
    z = []
    dims = [0]
    while True:
        # unknown x in C^n; condition: [x, e_j] lies in span(z) for all j.
        # Use projection onto a complement: solve with extra unknowns.
        # Unknowns: x (n) and coefficients a_{j,t} expressing [x,e_j] = sum a z_t.
        zt = len(z)
        ncols = n + n * zt
        rows = []
        for j in range(n):
            for k in range(n):
                row = [QQ(0)] * ncols
                for i in range(n):
                    row[i] = c[i][j][k]
                for t in range(zt):
                    row[n + j * zt + t] = -z[t][k]
                rows.append(row)
        sol = nullspace_basis(rows, ncols)
        nxt = span_basis([s[:n] for s in sol], n)
        if len(nxt) == len(z):
            break
        dims.append(len(nxt))
        z = nxt
        if len(z) == n:
            break
    return dims


def der_dim(c):
    n = len(c)
    if n == 0:
        return 0
    # unknown D[a][i] at i*n + a
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [QQ(0)] * (n * n)
                for l in range(n):
                    row[l * n + k] += c[i][j][l]
                for a in range(n):
                    row[i * n + a] -= c[a][j][k]
                    row[j * n + a] -= c[i][a][k]
                rows.append(row)
    return n * n - rank(rows, n * n)


def inn_dim(c):
    n = len(c)
    if n == 0:
        return 0
    return rank([[c[i][j][a] for j in range(n) for a in range(n)] for i in range(n)], n * n)


def ce_matrix(c, rho, m, k):
    """Dense matrix of d: C^k -> C^{k+1}; rho[i] is an m x m list (rho[i][b][a])."""
    n = len(c)
    src = list(itertools.combinations(range(n), k))
    dst = list(itertools.combinations(range(n), k + 1))
    sidx = {s: t for t, s in enumerate(src)}
    ncols = len(src) * m
    rows = []
    for tup in dst:
        block = [[QQ(0)] * ncols for _ in range(m)]
        for p in range(len(tup)):
            rest = tup[:p] + tup[p + 1:]
            sign = 1 if p % 2 == 0 else -1
            base = sidx[rest] * m
            for b in range(m):
                for a in range(m):
                    block[b][base + a] += sign * rho[tup[p]][b][a]
        for p in range(len(tup)):
            for r in range(p + 1, len(tup)):
                rest = tup[:p] + tup[p + 1:r] + tup[r + 1:]
                outer = 1 if (p + r) % 2 == 0 else -1
                for l in range(n):
                    coef = c[tup[p]][tup[r]][l]
                    if coef == 0 or l in rest:
                        continue
                    t = (l,) + rest
                    inv = sum(1 for x in rest if x < l)
                    s = -1 if inv % 2 else 1
                    base = sidx[tuple(sorted(t))] * m
                    for a in range(m):
                        block[a][base + a] += outer * s * coef
        rows.extend(block)
    return rows, ncols


def adjoint(c):
    n = len(c)
    # rho(e_i)[b][a] = coefficient of e_b in [e_i, e_a]
    return [[[c[i][a][b] for a in range(n)] for b in range(n)] for i in range(n)]


def trivial(c):
    return [[[QQ(0)]] for _ in range(len(c))]


def betti(c, rho, m):
    n = len(c)
    ranks = []
    for k in range(n + 1):
        rows, ncols = ce_matrix(c, rho, m, k)
        ranks.append(rank(rows, ncols))
    out = []
    from math import comb
    for k in range(n + 1):
        out.append(comb(n, k) * m - ranks[k] - (ranks[k - 1] if k else 0))
    return out, ranks


def signature(c, with_full_betti):
    n = len(c)
    l = lcs(c)
    u = ucs(c)
    d = derived(c)
    rho = adjoint(c)
    h1 = None
    h2 = None
    b2 = None
    if n >= 1:
        r0 = rank(*ce_matrix(c, rho, n, 0)) if n else 0
        r1 = rank(*ce_matrix(c, rho, n, 1))
        r2 = rank(*ce_matrix(c, rho, n, 2)) if n >= 2 else 0
        from math import comb
        h1 = n * n - r1 - r0
        h2 = comb(n, 2) * n - r2 - r1
        b2 = r1
    dd = der_dim(c)
    sig = {
        "dim": n,
        "lcs": l,
        "ucs": u,
        "derived": d,
        "center": u[1] if len(u) > 1 else 0,
        "der": dd,
        "inn": inn_dim(c),
        "h1": h1,
        "h2": h2,
        "b2": b2,
        "nilpotent_class": (len(l) - 1) if l and l[-1] == 0 else None,
        "solvable_length": (len(d) - 1) if d and d[-1] == 0 else None,
        "abelian": all(c[i][j][k] == 0 for i in range(n) for j in range(n) for k in range(n)),
    }
    # Two routes to H^1 must agree: CE ranks vs Der/Inn.
    assert h1 is None or h1 == dd - sig["inn"], "H^1 routes disagree"
    if n >= 1 and len(u) > 1 and u[1] == 0:
        sig["center"] = 0
    if with_full_betti:
        sig["betti_trivial"] = betti(c, trivial(c), 1)[0]
        sig["betti_adjoint"] = betti(c, rho, n)[0]
    return sig


def catalog():
    i1 = abelian(1)
    h1 = heisenberg(1)
    n43 = algebra(4, [(1, 2, {3: 1}), (1, 3, {4: 1})])
    cat = {}
    for n in range(1, 8):
        cat[f"abelian_{n}"] = abelian(n)
    for m in range(1, 5):
        cat[f"h_{m}"] = heisenberg(m)
    cat["n_3_1"] = abelian(3)
    cat["n_3_2"] = h1
    cat["n_4_1"] = direct_sum(abelian(3), i1)
    cat["n_4_2"] = direct_sum(h1, i1)
    cat["n_4_3"] = n43
    cat["n_5_1"] = direct_sum(direct_sum(abelian(3), i1), i1)
    cat["n_5_2"] = direct_sum(direct_sum(h1, i1), i1)
    cat["n_5_3"] = direct_sum(n43, i1)
    cat["n_5_4"] = algebra(5, [(1, 2, {5: 1}), (3, 4, {5: 1})])
    cat["n_5_5"] = algebra(5, [(1, 2, {3: 1}), (1, 3, {5: 1}), (2, 4, {5: 1})])
    cat["n_5_6"] = algebra(5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1}), (2, 3, {5: 1})])
    cat["n_5_7"] = algebra(5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (1, 4, {5: 1})])
    cat["n_5_8"] = algebra(5, [(1, 2, {4: 1}), (1, 3, {5: 1})])
    cat["n_5_9"] = algebra(5, [(1, 2, {3: 1}), (1, 3, {4: 1}), (2, 3, {5: 1})])
    # basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    cat["sl2"] = algebra(3, [(1, 2, {3: 1}), (3, 1, {1: 2}), (3, 2, {2: -2})])
    # v1=A, v2=B, v3=B^dag, v4=A^dag, v5=I
    cat["a_sh"] = algebra(5, [(1, 2, {5: 1}), (3, 4, {5: 1}), (1, 4, {5: 1}), (3, 2, {5: 1})])
    return cat


def main():
    cat = catalog()
    out = {}
    for name, c in cat.items():
        out[name] = signature(c, with_full_betti=len(c) <= 5)
    # Spot values used by unit tests.
    h1 = cat["h_1"]
    extra = {
        "b2_h1_trivial": rank(*ce_matrix(h1, trivial(h1), 1, 1)),
        "z2_sl2_adjoint": (lambda rows_ncols: rows_ncols[1] - rank(*rows_ncols))(
            ce_matrix(cat["sl2"], adjoint(cat["sl2"]), 3, 2)),
    }
    json.dump({"signatures": out, "extra": extra}, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
