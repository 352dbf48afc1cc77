"""Independent reference values for the cohomology tests.

Cochains here are dictionaries over *all* ordered argument tuples, built by
antisymmetric extension, and coboundaries are evaluated term by term on
vectors. Nothing is shared with the Rust assembly code: no canonical
indexing, no matrices until the final rank computation.

Run `python3 oracle.py > golden.json` to regenerate.
"""

import itertools
import json
from fractions import Fraction as F


def vec(*pairs):
    out = {}
    for c, v in pairs:
        for k, x in v.items():
            out[k] = out.get(k, 0) + c * x
    return {k: x for k, x in out.items() if x != 0}


def e(i):
    return {i: F(1)}


class Algebra:
    def __init__(self, d, lie):
        # lie: {(i, j): {k: c}} for i < j, 0-based
        self.d = d
        self.b = {}
        for (i, j), v in lie.items():
            self.b[(i, j)] = {k: F(c) for k, c in v.items()}
            self.b[(j, i)] = {k: -F(c) for k, c in v.items()}

    def br(self, x, y):
        return vec(*[(a * b, self.b.get((i, j), {})) for i, a in x.items() for j, b in y.items()])

    def tr(self, x, y, z):
        return self.br(self.br(x, y), z)


class Rep:
    """(rho, D, theta) as functions of algebra vectors acting on module vectors."""

    def __init__(self, m, rho, dd, th):
        self.m, self.rho, self.D, self.th = m, rho, dd, th


def adjoint(alg):
    return Rep(alg.d, lambda x, v: alg.br(x, v), lambda x, y, v: alg.tr(x, y, v), lambda x, y, v: alg.tr(v, x, y))


def pulled(rep, phi):
    return Rep(rep.m, lambda x, v: rep.rho(phi(x), v), lambda x, y, v: rep.D(phi(x), phi(y), v),
               lambda x, y, v: rep.th(phi(x), phi(y), v))


def linmap(mat):
    """mat[r][c]: image of e_c has coordinate r."""
    return lambda x: vec(*[(a, {r: F(mat[r][c]) for r in range(len(mat)) if mat[r][c] != 0}) for c, a in x.items()])


def ev(c, xs):
    """Multilinear evaluation of a full-tuple cochain on vectors."""
    acc = []
    for combo in itertools.product(*[list(x.items()) for x in xs]):
        coef = F(1)
        for _, a in combo:
            coef *= a
        acc.append((coef, c.get(tuple(k for k, _ in combo), {})))
    return vec(*acc)


def basis_cochains(arity, d, m):
    """Antisymmetric-in-pairs basis cochains on all ordered tuples."""
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    npairs = arity // 2
    frees = range(d) if arity % 2 else [None]
    out = []
    for ps in itertools.product(pairs, repeat=npairs):
        for fr in frees:
            for r in range(m):
                c = {}
                for flips in itertools.product([0, 1], repeat=npairs):
                    args, sgn = [], 1
                    for (i, j), fl in zip(ps, flips):
                        args += [j, i] if fl else [i, j]
                        sgn = -sgn if fl else sgn
                    if fr is not None:
                        args.append(fr)
                    c[tuple(args)] = {r: F(sgn)}
                out.append(c)
    return out


def delta(n, f, g, alg, rep):
    """Coboundary of (f, g) in C^(2n, 2n+1); for n = 0 pass f = g = the linear map."""
    d = alg.d
    df, dg = {}, {}
    sg = lambda e_: F(-1) ** e_
    for xs in itertools.product(range(d), repeat=2 * n + 2):
        X = [e(i) for i in xs]
        t = [(1, rep.rho(X[2 * n], ev(g, X[:2 * n] + [X[2 * n + 1]]))),
             (-1, rep.rho(X[2 * n + 1], ev(g, X[:2 * n] + [X[2 * n]]))),
             (-1, ev(g, X[:2 * n] + [alg.br(X[2 * n], X[2 * n + 1])]))]
        for k in range(1, n + 1):
            a, b = X[2 * k - 2], X[2 * k - 1]
            rest = X[:2 * k - 2] + X[2 * k:]
            t.append((sg(n + k + 1), rep.D(a, b, ev(f, rest))))
            for j in range(2 * k, 2 * n + 2):
                Y = list(X)
                Y[j] = alg.tr(a, b, X[j])
                t.append((sg(n + k), ev(f, Y[:2 * k - 2] + Y[2 * k:])))
        v = vec(*t)
        if v:
            df[xs] = v
    for xs in itertools.product(range(d), repeat=2 * n + 3):
        X = [e(i) for i in xs]
        t = [(1, rep.th(X[2 * n + 1], X[2 * n + 2], ev(g, X[:2 * n + 1]))),
             (-1, rep.th(X[2 * n], X[2 * n + 2], ev(g, X[:2 * n] + [X[2 * n + 1]])))]
        for k in range(1, n + 2):
            a, b = X[2 * k - 2], X[2 * k - 1]
            rest = X[:2 * k - 2] + X[2 * k:]
            t.append((sg(n + k + 1), rep.D(a, b, ev(g, rest))))
            for j in range(2 * k, 2 * n + 3):
                Y = list(X)
                Y[j] = alg.tr(a, b, X[j])
                t.append((sg(n + k), ev(g, Y[:2 * k - 2] + Y[2 * k:])))
        v = vec(*t)
        if v:
            dg[xs] = v
    return df, dg


def post(c, psi):
    return {k: vec(*[(x, {r: F(psi[r][s]) for r in range(len(psi)) if psi[r][s] != 0}) for s, x in v.items()])
            for k, v in c.items()}


def pull(c, phi, d1, arity):
    out = {}
    for xs in itertools.product(range(d1), repeat=arity):
        v = ev(c, [phi(e(i)) for i in xs])
        if v:
            out[xs] = v
    return out


def sub(a, b):
    keys = set(a) | set(b)
    out = {k: vec((1, a.get(k, {})), (-1, b.get(k, {}))) for k in keys}
    return {k: v for k, v in out.items() if v}


def flatten(parts):
    return {(i, k, r): x for i, p in enumerate(parts) for k, v in p.items() for r, x in v.items()}


def rank(columns):
    rows = []
    keys = sorted({k for c in columns for k in c})
    mat = [[c.get(k, F(0)) for c in columns] for k in keys]
    r = 0
    ncols = len(columns)
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                fac = mat[i][col] / mat[r][col]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


def algebra_dims(alg, rep):
    m = rep.m
    diag = [delta(0, c, c, alg, rep) for c in basis_cochains(1, alg.d, m)]
    src = [(c, {}) for c in basis_cochains(2, alg.d, m)] + [({}, c) for c in basis_cochains(3, alg.d, m)]
    nxt = [delta(1, f, g, alg, rep) for f, g in src]
    rb = rank([flatten(x) for x in diag])
    rz = len(src) - rank([flatten(x) for x in nxt])
    return {"dim_z": rz, "dim_b": rb, "dim_h": rz - rb}


def morphism_dims(a1, a2, phi_mat):
    """Self representation: V = L1, W = L2, psi = phi."""
    d1, d2 = a1.d, a2.d
    phi = linmap(phi_mat)
    rv, rw = adjoint(a1), adjoint(a2)
    rwp = pulled(rw, phi)
    d0_cols = []
    for c in basis_cochains(1, d1, d1):
        d0_cols.append([*delta(0, c, c, a1, rv), {}, {}, post(c, phi_mat)])
    for c in basis_cochains(1, d2, d2):
        d0_cols.append([{}, {}, *delta(0, c, c, a2, rw), sub({}, pull(c, phi, d1, 1))])
    src = []
    for c in basis_cochains(2, d1, d1):
        src.append(((c, {}), ({}, {}), {}))
    for c in basis_cochains(3, d1, d1):
        src.append((({}, c), ({}, {}), {}))
    for c in basis_cochains(2, d2, d2):
        src.append((({}, {}), (c, {}), {}))
    for c in basis_cochains(3, d2, d2):
        src.append((({}, {}), ({}, c), {}))
    for c in basis_cochains(1, d1, d2):
        src.append((({}, {}), ({}, {}), c))
    d1_cols = []
    for (af, ag), (bf, bg), gam in src:
        da = delta(1, af, ag, a1, rv)
        db = delta(1, bf, bg, a2, rw)
        dgam = delta(0, gam, gam, a1, rwp)
        third_f = sub(sub(post(af, phi_mat), pull(bf, phi, d1, 2)), dgam[0])
        third_g = sub(sub(post(ag, phi_mat), pull(bg, phi, d1, 3)), dgam[1])
        d1_cols.append([*da, *db, third_f, third_g])
    rb = rank([flatten(c) for c in d0_cols])
    rz = len(src) - rank([flatten(c) for c in d1_cols])
    return {"dim_z": rz, "dim_b": rb, "dim_h": rz - rb, "degree_dim": len(src)}


def main():
    aff2 = Algebra(2, {(0, 1): {0: 1}})
    sl2 = Algebra(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
    heis = Algebra(3, {(0, 1): {2: 1}})
    ab1, ab2 = Algebra(1, {}), Algebra(2, {})
    ident = lambda d: [[int(i == j) for j in range(d)] for i in range(d)]

    out = {"algebra": {}, "morphism": {}, "values": {}}
    out["algebra"]["aff2_adjoint"] = algebra_dims(aff2, adjoint(aff2))
    out["algebra"]["sl2_adjoint"] = algebra_dims(sl2, adjoint(sl2))
    out["algebra"]["heisenberg_adjoint"] = algebra_dims(heis, adjoint(heis))
    triv = lambda a: Rep(1, lambda x, v: {}, lambda x, y, v: {}, lambda x, y, v: {})
    out["algebra"]["aff2_trivial"] = algebra_dims(aff2, triv(aff2))

    out["morphism"]["id_aff2"] = morphism_dims(aff2, aff2, ident(2))
    out["morphism"]["zero_aff2"] = morphism_dims(aff2, aff2, [[0, 0], [0, 0]])
    out["morphism"]["line_into_aff2"] = morphism_dims(ab1, aff2, [[0], [1]])
    out["morphism"]["heisenberg_projection"] = morphism_dims(heis, ab2, [[1, 0, 0], [0, 1, 0]])
    out["morphism"]["id_heisenberg"] = morphism_dims(heis, heis, ident(3))

    # Coboundaries of single-entry cochains on aff2 with the adjoint action.
    # Keys name the nonzero entry (1-based args, output index); values list
    # the nonzero results on canonical (4,5) tuples.
    canon = lambda k: all(k[2 * i] < k[2 * i + 1] for i in range(len(k) // 2))
    show = lambda c: {",".join(str(i + 1) for i in k): [str(v.get(r, F(0))) for r in range(2)]
                      for k, v in sorted(c.items()) if canon(k)}
    for name, arity, free, r in (("g(1,2,2)=e1", 3, 1, 0), ("g(1,2,1)=e2", 3, 0, 1), ("f(1,2)=e2", 2, None, 1)):
        c = {}
        for (a, b), s in (((0, 1), 1), ((1, 0), -1)):
            c[(a, b) if free is None else (a, b, free)] = {r: F(s)}
        f, g = (c, {}) if arity == 2 else ({}, c)
        df, dg = delta(1, f, g, aff2, adjoint(aff2))
        out["values"][name] = {"f": show(df), "g": show(dg)}
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
