#!/usr/bin/env python3
"""Brute-force finite group oracle.

Builds small finite groups from concrete generators, computes conjugacy
classes and character tables (Burnside's class-matrix eigenvector method),
derives fusion rules from the characters, and writes

  data/catalog/<name>.json   ring documents in canonical form
  data/oracle/<name>.json    group facts the library is checked against

Nothing here shares code with the C++ library.  Run from the repo root:

  python3 tools/gen_catalog.py
"""

import itertools
import json
import math
import os
import sys

import numpy as np

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# ---------------------------------------------------------------- groups


def perm_mul(a, b):
    """(a*b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


class Group:
    def __init__(self, identity, gens, mul):
        elems = [identity]
        index = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in index:
                        index[y] = len(elems)
                        elems.append(y)
                        nxt.append(y)
            frontier = nxt
        n = len(elems)
        self.n = n
        self.table = np.zeros((n, n), dtype=int)
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                self.table[i, j] = index[mul(x, y)]
        self.inv = [0] * n
        for i in range(n):
            for j in range(n):
                if self.table[i, j] == 0:
                    self.inv[i] = j
        self._classes()

    def _classes(self):
        n, t = self.n, self.table
        seen = [False] * n
        self.classes = []
        for x in range(n):
            if seen[x]:
                continue
            cls = sorted({t[t[g, x], self.inv[g]] for g in range(n)})
            for y in cls:
                seen[y] = True
            self.classes.append(cls)
        self.class_of = [0] * n
        for c, cls in enumerate(self.classes):
            for y in cls:
                self.class_of[y] = c

    def order_of(self, x):
        k, y = 1, x
        while y != 0:
            y = self.table[y, x]
            k += 1
        return k

    def closure(self, gens):
        sub = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x, g]
                    if y not in sub:
                        sub.add(y)
                        nxt.append(y)
            frontier = nxt
        return sub


def cyclic(n):
    return Group(tuple(range(n)), [tuple((i + 1) % n for i in range(n))], perm_mul)


def klein():
    return Group((0, 1, 2, 3), [(1, 0, 3, 2), (2, 3, 0, 1)], perm_mul)


def symmetric3():
    return Group((0, 1, 2), [(1, 2, 0), (1, 0, 2)], perm_mul)


def dihedral4():
    # rotation and a reflection of the square's vertices 0..3
    return Group((0, 1, 2, 3), [(1, 2, 3, 0), (3, 2, 1, 0)], perm_mul)


def quaternion8():
    return Group((1, 0, 0, 0), [(0, 1, 0, 0), (0, 0, 1, 0)], quat_mul)


def alternating4():
    return Group((0, 1, 2, 3), [(1, 2, 0, 3), (1, 0, 3, 2)], perm_mul)


def trivial():
    return Group((0,), [], perm_mul)


# ------------------------------------------------------ character table


def character_table(G, seed=7):
    """Rows = irreps, columns = classes.  Burnside's algorithm."""
    k = len(G.classes)
    sizes = [len(c) for c in G.classes]
    reps = [c[0] for c in G.classes]
    # c[i][j][l] = #{(x, y) in C_i x C_j : x*y = rep_l}
    c = np.zeros((k, k, k))
    for i in range(k):
        for x in G.classes[i]:
            for j in range(k):
                for y in G.classes[j]:
                    z = G.table[x, y]
                    if z == reps[G.class_of[z]]:
                        c[i, j, G.class_of[z]] += 1
    rng = np.random.default_rng(seed)
    for _ in range(20):
        coef = rng.normal(size=k)
        # w_i w_j = sum_l c_ijl w_l  =>  w is an eigenvector of A with
        # A[i, l] = sum_j coef_j c[i, j, l]
        A = np.einsum("j,ijl->il", coef, c)
        vals, vecs = np.linalg.eig(A)
        gaps = [abs(vals[a] - vals[b]) for a in range(k) for b in range(a + 1, k)]
        if not gaps or min(gaps) > 1e-6:
            break
    else:
        raise RuntimeError("degenerate class-matrix spectrum")
    rows = []
    for m in range(k):
        w = vecs[:, m] / vecs[0, m]
        norm = sum(abs(w[i]) ** 2 / sizes[i] for i in range(k))
        dim = math.sqrt(G.n / norm.real)
        chi = np.array([w[i] * dim / sizes[i] for i in range(k)])
        rows.append(chi)
    # orthogonality sanity check
    for a in range(k):
        for b in range(k):
            ip = sum(sizes[i] * rows[a][i] * np.conj(rows[b][i]) for i in range(k)) / G.n
            assert abs(ip - (1 if a == b else 0)) < 1e-8, (a, b, ip)
    return rows


def sort_key(chi):
    key = [round(chi[0].real)]
    for v in chi[1:]:
        arg = math.atan2(v.imag, v.real) % (2 * math.pi)
        if abs(v) < 1e-9 or abs(arg - 2 * math.pi) < 1e-9:
            arg = 0.0
        key.append(round(abs(v), 6))
        key.append(round(arg, 6))
    return key


def make_labels(dims):
    labels, seen = [], {}
    total = {d: dims.count(d) for d in dims}
    for i, d in enumerate(dims):
        if i == 0:
            labels.append("1")
            continue
        count = total[d] - (1 if d == 1 else 0)
        idx = seen.get(d, 0)
        seen[d] = idx + 1
        labels.append(str(d) if count == 1 and d != 1 else f"{d}{chr(ord('a') + idx)}")
    return labels


# --------------------------------------------------- abelian structure


def census(table, elems):
    """Sorted list of element orders in a group given by table restricted to elems."""
    out = []
    for x in elems:
        k, y = 1, x
        while y != elems[0]:
            y = table[y][x]
            k += 1
        out.append(k)
    return sorted(out)


def factor_lists(n):
    """All invariant-factor lists d1 | d2 | ... with product n, each d >= 2."""
    result = []

    def rec(rem, prefix):
        if rem == 1:
            result.append(list(prefix))
            return
        for d in range(2, rem + 1):
            if rem % d:
                continue
            if prefix and d % prefix[-1]:
                continue
            rec(rem // d, prefix + [d])

    rec(n, [])
    return result


def cyclic_product_census(factors):
    orders = []
    for tup in itertools.product(*[range(d) for d in factors]):
        o = 1
        for x, d in zip(tup, factors):
            o = math.lcm(o, d // math.gcd(x, d))
        orders.append(o)
    return sorted(orders)


def invariant_factors(table, elems):
    """Abelian group given by a table on elems (elems[0] = identity).
    Matched against every candidate factorization by element-order census,
    which determines a finite abelian group up to isomorphism."""
    target = census(table, elems)
    hits = [f for f in factor_lists(len(elems)) if cyclic_product_census(f) == target]
    assert len(hits) == 1, hits
    return hits[0]


# ---------------------------------------------------------- group facts


def center(G):
    return [x for x in range(G.n) if all(G.table[x, g] == G.table[g, x] for g in range(G.n))]


def commutator_subgroup(G):
    comms = set()
    for x in range(G.n):
        for y in range(G.n):
            comms.add(G.table[G.table[G.inv[x], G.inv[y]], G.table[x, y]])
    return G.closure(comms)


def quotient_factors(G, N):
    N = sorted(N)
    cosets, coset_of = [], {}
    for x in range(G.n):
        if x in coset_of:
            continue
        cs = sorted({G.table[x, h] for h in N})
        for y in cs:
            coset_of[y] = len(cosets)
        cosets.append(cs)
    m = len(cosets)
    qt = [[coset_of[G.table[cosets[a][0], cosets[b][0]]] for b in range(m)] for a in range(m)]
    return invariant_factors(qt, list(range(m)))


def normal_subgroups(G):
    k = len(G.classes)
    out = []
    for mask in range(1 << k):
        if not mask & 1:
            continue
        S = set()
        for c in range(k):
            if mask >> c & 1:
                S.update(G.classes[c])
        if all(G.table[x, y] in S for x in S for y in S):
            out.append(sorted(S))
    return out


# -------------------------------------------------------------- output


def fusion_rules(G, rows):
    k = len(rows)
    sizes = [len(c) for c in G.classes]
    quads = []
    for p in range(k):
        for q in range(p, k):
            for r in range(k):
                v = sum(sizes[i] * rows[p][i] * rows[q][i] * np.conj(rows[r][i]) for i in range(k)) / G.n
                m = round(v.real)
                assert abs(v - m) < 1e-8
                if m:
                    quads.append([p, q, r, m])
    return quads


def dual_perm(rows):
    k = len(rows)
    out = []
    for p in range(k):
        conj = np.conj(rows[p])
        hit = [q for q in range(k) if np.allclose(rows[q], conj, atol=1e-8)]
        assert len(hit) == 1
        out.append(hit[0])
    return out


def fs_indicator(G, chi_index, rows):
    # nu(chi) = 1/|G| sum_g chi(g^2)
    total = 0
    for g in range(G.n):
        total += rows[chi_index][G.class_of[G.table[g, g]]]
    v = total / G.n
    m = round(v.real)
    assert abs(v - m) < 1e-8
    return {1: "real", 0: "complex", -1: "pseudoreal"}[m]


def canonical_document(name, labels, dual, quads, metadata):
    lines = ["{"]
    lines.append(f'  "dual": [{", ".join(str(d) for d in dual)}],')
    if quads:
        lines.append('  "fusion": [')
        body = [f"    [{q[0]}, {q[1]}, {q[2]}, {q[3]}]" for q in sorted(quads)]
        lines.append(",\n".join(body))
        lines.append("  ],")
    else:
        lines.append('  "fusion": [],')
    lines.append(f'  "labels": [{", ".join(json.dumps(s) for s in labels)}],')
    if metadata:
        lines.append('  "metadata": {')
        items = []
        for key in sorted(metadata):
            val = metadata[key]
            if isinstance(val, dict):
                if val:
                    inner = ",\n".join(f"      {json.dumps(k)}: {json.dumps(val[k])}" for k in sorted(val))
                    items.append(f"    {json.dumps(key)}: {{\n{inner}\n    }}")
                else:
                    items.append(f"    {json.dumps(key)}: {{}}")
            else:
                items.append(f"    {json.dumps(key)}: {json.dumps(val)}")
        lines.append(",\n".join(items))
        lines.append("  },")
    else:
        lines.append('  "metadata": {},')
    lines.append(f'  "name": {json.dumps(name)},')
    lines.append(f'  "rank": {len(labels)},')
    lines.append('  "unit": 0')
    lines.append("}")
    return "\n".join(lines) + "\n"


GROUPS = [
    ("trivial", trivial),
    ("Z2", lambda: cyclic(2)),
    ("Z3", lambda: cyclic(3)),
    ("Z4", lambda: cyclic(4)),
    ("Z5", lambda: cyclic(5)),
    ("Z6", lambda: cyclic(6)),
    ("Z2xZ2", klein),
    ("S3", symmetric3),
    ("D4", dihedral4),
    ("Q8", quaternion8),
    ("A4", alternating4),
]


def build(name, ctor):
    G = ctor()
    rows = character_table(G)
    order = sorted(range(len(rows)), key=lambda i: sort_key(rows[i]))
    rows = [rows[i] for i in order]
    assert abs(rows[0] - 1).max() < 1e-9, "trivial character must sort first"
    dims = [round(r[0].real) for r in rows]
    labels = make_labels(dims)
    quads = fusion_rules(G, rows)
    dual = dual_perm(rows)
    fs = {labels[i]: fs_indicator(G, i, rows) for i in range(len(rows))}
    doc = canonical_document(name, labels, dual, quads, {"fs_indicators": fs})

    z = center(G)
    comm = commutator_subgroup(G)
    facts = {
        "name": name,
        "group_order": G.n,
        "class_sizes": [len(c) for c in G.classes],
        "order2_elements": sum(1 for x in range(G.n) if G.order_of(x) == 2),
        "square_roots_of_identity": sum(1 for x in range(G.n) if G.table[x, x] == 0),
        "center_order": len(z),
        "center_factors": invariant_factors(G.table, z),
        "commutator_order": len(comm),
        "abelianization_factors": quotient_factors(G, comm),
        "normal_subgroup_count": len(normal_subgroups(G)),
        "dimensions": dims,
        # one column per conjugacy class: the character values on that class,
        # indexed by irrep in the ring document's basis order
        "character_columns": [
            [[float(round(rows[p][c].real, 12)), float(round(rows[p][c].imag, 12))] for p in range(len(rows))]
            for c in range(len(G.classes))
        ],
    }
    return doc, facts


def main():
    cat_dir = os.path.join(ROOT, "data", "catalog")
    ora_dir = os.path.join(ROOT, "data", "oracle")
    os.makedirs(cat_dir, exist_ok=True)
    os.makedirs(ora_dir, exist_ok=True)
    for name, ctor in GROUPS:
        doc, facts = build(name, ctor)
        with open(os.path.join(cat_dir, f"{name}.json"), "w") as f:
            f.write(doc)
        with open(os.path.join(ora_dir, f"{name}.json"), "w") as f:
            json.dump(facts, f, indent=2, sort_keys=True)
            f.write("\n")
        print(f"{name}: order {facts['group_order']}, {len(facts['dimensions'])} irreps", file=sys.stderr)


if __name__ == "__main__":
    main()
