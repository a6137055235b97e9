#!/usr/bin/env python3
"""Regenerates the alist fixtures used by the test suites.

- bch_15_7.alist: the 8x15 BCH(15,7) matrix used as the worked example.
- bch_63_XX.alist: parity-check matrices of the narrow-sense binary BCH
  codes of length 63 (systematic form derived from the generator
  polynomial).
- lte_like_396_268_dense.alist: a deliberately densified full-rank
  268x396 matrix whose underlying code has a sparse representation;
  stands in for the LTE-TC-N396-K128 database matrix in benchmarks.
"""

import random
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write_alist(path, rows, n):
    """rows: list of sorted 0-based column index lists."""
    m = len(rows)
    cols = [[] for _ in range(n)]
    for i, r in enumerate(rows):
        for j in r:
            cols[j].append(i)
    col_deg = [len(c) for c in cols]
    row_deg = [len(r) for r in rows]
    lines = []
    lines.append(f"{n} {m}")
    lines.append(f"{max(col_deg) if col_deg else 0} {max(row_deg) if row_deg else 0}")
    lines.append(" ".join(str(d) for d in col_deg))
    lines.append(" ".join(str(d) for d in row_deg))
    for c in cols:
        lines.append(" ".join(str(i + 1) for i in c))
    for r in rows:
        lines.append(" ".join(str(j + 1) for j in r))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------- GF(64)

PRIM = 0b1000011  # x^6 + x + 1


def gf_mul_x(a):
    a <<= 1
    if a & 0b1000000:
        a ^= PRIM
    return a


def cyclotomic_coset(s, n=63):
    c = set()
    x = s
    while x not in c:
        c.add(x)
        x = (x * 2) % n
    return sorted(c)


def poly_mul(a, b):
    """Polynomials over GF(2) as ints, LSB = constant term."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def min_poly(exp):
    """Minimal polynomial of alpha^exp over GF(2), alpha primitive in GF(64)."""
    # product of (x - alpha^e) for e in the coset, computed with GF(64) coeffs
    coset = cyclotomic_coset(exp)
    # polynomial with GF(64) coefficients, list index = degree
    poly = [1]
    alpha_pows = [1]
    for _ in range(63):
        alpha_pows.append(gf_mul_x(alpha_pows[-1]))

    def gf_mul(a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            a = gf_mul_x(a)
            b >>= 1
        return r

    for e in coset:
        root = alpha_pows[e % 63]
        new = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            new[d + 1] ^= c
            new[d] ^= gf_mul(c, root)
        poly = new
    # all coefficients must be 0 or 1 now
    assert all(c in (0, 1) for c in poly), poly
    out = 0
    for d, c in enumerate(poly):
        out |= c << d
    return out


def bch_generator(designed_distance):
    g = 1
    seen = set()
    for e in range(1, designed_distance):
        coset = tuple(cyclotomic_coset(e))
        if coset in seen:
            continue
        seen.add(coset)
        g = poly_mul(g, min_poly(e))
    return g


def bch_pcm(designed_distance, n=63):
    """Systematic PCM [P^T | I_m] of the narrow-sense BCH code."""
    g = bch_generator(designed_distance)
    deg = g.bit_length() - 1
    k = n - deg
    # generator matrix rows: x^i * g(x), i = 0..k-1; already has leading-1
    # staircase on columns 0..k-1, reduce to [I_k | P]
    grows = [g << i for i in range(k)]
    for i in reversed(range(k)):
        for i2 in range(i):
            if grows[i2] >> i & 1:
                grows[i2] ^= grows[i]
    for i in range(k):
        assert grows[i] & ((1 << k) - 1) == 1 << i
    # P is k x m, P[i][j] = bit (k+j) of grows[i]
    m = n - k
    hrows = []
    for j in range(m):
        idx = [i for i in range(k) if grows[i] >> (k + j) & 1]
        idx.append(k + j)
        hrows.append(sorted(idx))
    return hrows, k


def dual_min_basis_total(hrows, n):
    """Exact minimum total weight of any basis of the row space."""
    m = len(hrows)
    rows_int = []
    for r in hrows:
        v = 0
        for j in r:
            v |= 1 << j
        rows_int.append(v)
    # enumerate all nonzero combinations (Gray code)
    vecs = []
    acc = 0
    prev = 0
    for c in range(1, 1 << m):
        gray = c ^ (c >> 1)
        diff = gray ^ prev
        acc ^= rows_int[diff.bit_length() - 1]
        prev = gray
        vecs.append(acc)
    vecs.sort(key=lambda v: bin(v).count("1"))
    # greedy independent selection, echelon basis keyed by leading bit
    pivots = {}
    total = 0
    count = 0
    for v in vecs:
        red = v
        while red:
            lead = red.bit_length() - 1
            if lead not in pivots:
                break
            red ^= pivots[lead]
        if red:
            pivots[red.bit_length() - 1] = red
            total += bin(v).count("1")
            count += 1
            if count == m:
                break
    return total


def main():
    random.seed(20240817)

    # worked example matrix
    bch_15_7 = [
        "101110011000000",
        "011010001000000",
        "001101000100000",
        "000110100010000",
        "000011010001000",
        "000001101000100",
        "000000110100010",
        "000000011010001",
    ]
    rows = [[j for j, ch in enumerate(r) if ch == "1"] for r in bch_15_7]
    write_alist(os.path.join(HERE, "bch_15_7.alist"), rows, 15)
    print("bch_15_7 ones:", sum(len(r) for r in rows))
    print("bch_15_7 min basis total:", dual_min_basis_total(rows, 15))

    for d, kexp in [(3, 57), (5, 51), (7, 45), (9, 39), (11, 36), (13, 30)]:
        hrows, k = bch_pcm(d)
        assert k == kexp, (d, k, kexp)
        write_alist(os.path.join(HERE, f"bch_63_{k}.alist"), hrows, 63)
        m = 63 - k
        ones = sum(len(r) for r in hrows)
        msg = f"bch_63_{k}: m={m} ones={ones}"
        if m <= 18:
            msg += f" min_basis={dual_min_basis_total(hrows, 63)}"
        print(msg)

    # LTE-like surrogate: sparse full-rank base, then densifying row adds
    m, n, k = 268, 396, 128
    base = []
    for i in range(m):
        idx = {k + i}
        idx.update(random.sample(range(k), 4))
        base.append(sorted(idx))
    rows_int = []
    for r in base:
        v = 0
        for j in r:
            v |= 1 << j
        rows_int.append(v)
    base_ones = sum(bin(v).count("1") for v in rows_int)
    # densify while keeping the row space fixed, stopping a bit above
    # 4000 ones so sparsification has real work to do
    dense = list(rows_int)
    total = base_ones
    while total < 4400:
        i = random.randrange(m)
        j = random.randrange(m)
        if i == j:
            continue
        cand = dense[j] ^ dense[i]
        delta = bin(cand).count("1") - bin(dense[j]).count("1")
        dense[j] = cand
        total += delta
    dense_rows = [[j for j in range(n) if v >> j & 1] for v in dense]
    dense_ones = sum(len(r) for r in dense_rows)
    print(f"lte_like: base ones={base_ones} dense ones={dense_ones}")
    write_alist(os.path.join(HERE, "lte_like_396_268_dense.alist"), dense_rows, n)


if __name__ == "__main__":
    main()
