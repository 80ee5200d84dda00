#!/usr/bin/env python3
"""Derives degree-18 permutation generators for 3.A6.

3.A6 is the preimage in SL(3,4) of the hyperoval stabiliser A6 < PSL(3,4).
It permutes the 18 nonzero vectors lying over the six hyperoval points, and
the six fibres of size 3 carry the natural A6 action.

The script picks a of order 15 and an involution z whose images on the six
fibres are (1 2 3 4 5) and (3 4)(5 6), then sets b = a^3 and c = a^10, so
that a = b^2 c with c central of order 3. Output is JSON on stdout; with
--cpp PATH the generators are also written as a C++ data file.
"""

import argparse
import itertools
import json
import sys

# GF(4) = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is XOR.
EXP = [1, 2, 3]
LOG = {1: 0, 2: 1, 3: 2}


def mul(x, y):
    if x == 0 or y == 0:
        return 0
    return EXP[(LOG[x] + LOG[y]) % 3]


def vec_mat(v, m):
    out = []
    for j in range(3):
        s = 0
        for i in range(3):
            s ^= mul(v[i], m[i][j])
        out.append(s)
    return tuple(out)


def det(m):
    def term(i, j, k):
        return mul(mul(m[0][i], m[1][j]), m[2][k])
    # Characteristic 2: every sign is +.
    return (term(0, 1, 2) ^ term(0, 2, 1) ^ term(1, 0, 2) ^ term(1, 2, 0)
            ^ term(2, 0, 1) ^ term(2, 1, 0))


def scale(s, v):
    return tuple(mul(s, x) for x in v)


def compose(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def power(p, n):
    r = tuple(range(len(p)))
    for _ in range(n):
        r = compose(r, p)
    return r


def order(p):
    n, r = 1, p
    ident = tuple(range(len(p)))
    while r != ident:
        r = compose(r, p)
        n += 1
    return n


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = compose(e, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def write_cpp(path, data):
    lines = [
        "// Generated by tools/three_a6_oracle.py; do not edit by hand.",
        "#include <array>",
        "",
        '#include "rotamap/catalog_data.hpp"',
        "",
        "namespace rotamap::detail {",
        "",
    ]
    for name in ("a", "z", "b", "c", "ap"):
        images = ", ".join(map(str, data["generators"][name]))
        lines.append(f"const std::array<Point, 18> kThreeA6_{name} = {{{images}}};")
    lines += ["", "const std::array<std::array<Point, 3>, 6> kThreeA6Blocks = {{"]
    for block in data["blocks"]:
        lines.append(f"    {{{', '.join(map(str, block))}}},")
    lines += ["}};", "", "}  // namespace rotamap::detail", ""]
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cpp", help="also write the C++ data file here")
    args = parser.parse_args()

    # Conic x0 x2 = x1^2 plus its nucleus (0,1,0).
    points = [(1, t, mul(t, t)) for t in range(4)] + [(0, 0, 1), (0, 1, 0)]
    vectors = [scale(s, p) for p in points for s in (1, 2, 3)]
    index = {v: i for i, v in enumerate(vectors)}
    fibre = [i // 3 for i in range(18)]

    # The standard basis vectors lie on the hyperoval, so every matrix in
    # the stabiliser has its rows among the 18 vectors.
    group = set()
    for rows in itertools.product(vectors, repeat=3):
        if det(rows) != 1:
            continue
        images = [vec_mat(v, rows) for v in vectors]
        if all(w in index for w in images):
            group.add(tuple(index[w] for w in images))
    assert len(group) == 1080, len(group)

    ident = tuple(range(18))
    center = [g for g in group if all(compose(g, h) == compose(h, g) for h in group)]
    assert len(center) == 3

    def on_fibres(g):
        return tuple(fibre[g[3 * i]] for i in range(6))

    elements = sorted(group)
    involutions = [g for g in elements if order(g) == 2]
    order15 = [g for g in elements if order(g) == 15]

    for a in order15:
        abar = on_fibres(a)
        # Label the fibres so that abar = (1 2 3 4 5): fixed fibre is 6.
        fixed = [i for i in range(6) if abar[i] == i]
        if len(fixed) != 1:
            continue
        for start in range(6):
            if start == fixed[0]:
                continue
            label = {}
            p = start
            for k in range(5):
                label[p] = k
                p = abar[p]
            label[fixed[0]] = 5
            want = {2: 3, 3: 2, 4: 5, 5: 4, 0: 0, 1: 1}
            for z in involutions:
                zbar = on_fibres(z)
                if all(label[zbar[f]] == want[label[f]] for f in range(6)):
                    zza = compose(z, compose(inverse(a), compose(z, a)))
                    gen = closure([a, z])
                    if len(gen) != 1080:
                        continue
                    b = power(a, 3)
                    c = power(a, 10)
                    assert c in center and order(c) == 3
                    assert compose(power(b, 2), c) == a
                    blocks = [None] * 6
                    for f, lab in label.items():
                        blocks[lab] = [3 * f, 3 * f + 1, 3 * f + 2]
                    out = {
                        "degree": 18,
                        "generators": {
                            "a": list(a),
                            "z": list(z),
                            "b": list(b),
                            "c": list(c),
                            "ap": list(power(a, 11)),
                        },
                        "blocks": blocks,
                        "checks": {
                            "order": len(group),
                            "center": len(center),
                            "order_a": order(a),
                            "order_zza": order(zza),
                        },
                    }
                    if args.cpp:
                        write_cpp(args.cpp, out)
                    json.dump(out, sys.stdout, indent=1)
                    sys.stdout.write("\n")
                    return 0
    print("no suitable pair found", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
