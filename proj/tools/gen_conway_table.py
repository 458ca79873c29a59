#!/usr/bin/env python3
"""Generate src/conway_table.cpp: Conway polynomials for every prime power
p^m <= 2^16 with m > 1.

A Conway polynomial f_{p,n} is the least monic primitive polynomial of degree
n over GF(p), in the order that compares (a_{n-1}, ..., a_0) lexicographically
where f = x^n + sum_i (-1)^(n-i) a_i x^i, subject to compatibility with every
f_{p,m}, m | n: f_{p,m}(x^((p^n-1)/(p^m-1))) = 0 mod f_{p,n}.
"""
import itertools
import sys

LIMIT = 1 << 16


def primes_upto(n):
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(sieve[i * i::i])
    return [i for i, v in enumerate(sieve) if v]


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, f, p):
    # a, b: coefficient lists (low degree first) of length n; f monic degree n
    n = len(f) - 1
    res = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    res[i + j] = (res[i + j] + ai * bj) % p
    for d in range(2 * n - 2, n - 1, -1):
        c = res[d]
        if c:
            for i in range(n + 1):
                res[d - n + i] = (res[d - n + i] - c * f[i]) % p
    return res[:n]


def polypowmod(base, e, f, p):
    n = len(f) - 1
    result = [1] + [0] * (n - 1)
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def evaluate_at(g, point, f, p):
    # Horner evaluation of g (low first) at a residue mod f.
    n = len(f) - 1
    acc = [0] * n
    for c in reversed(g):
        acc = polymulmod(acc, point, f, p)
        acc[0] = (acc[0] + c) % p
    return acc


def conway(p, n, known):
    q = p ** n
    order = q - 1
    factors = prime_factors(order)
    x = [0, 1] + [0] * (n - 2) if n > 1 else [0]
    one = [1] + [0] * (n - 1)
    for a in itertools.product(range(p), repeat=n):
        # a = (a_{n-1}, ..., a_0)
        coeffs = [0] * (n + 1)
        coeffs[n] = 1
        for idx, ai in enumerate(a):
            deg = n - 1 - idx
            coeffs[deg] = ((-1) ** (n - deg) * ai) % p
        if coeffs[0] == 0:
            continue
        if n == 1:
            root = [(-coeffs[0]) % p]
            gen = root
        else:
            gen = x
        if polypowmod(gen, order, coeffs, p) != one:
            continue
        if any(polypowmod(gen, order // r, coeffs, p) == one for r in factors):
            continue
        ok = True
        for m in range(1, n):
            if n % m:
                continue
            sub = known[m]
            point = polypowmod(gen, order // (p ** m - 1), coeffs, p)
            if any(evaluate_at(sub, point, coeffs, p)):
                ok = False
                break
        if ok:
            return coeffs
    raise RuntimeError(f"no Conway polynomial for {p}^{n}")


def main():
    rows = []
    for p in primes_upto(256):
        known = {}
        n = 1
        while p ** n <= LIMIT:
            known[n] = conway(p, n, known)
            if n > 1:
                rows.append((p, n, known[n]))
            n += 1
    out = sys.stdout
    out.write("// Generated by tools/gen_conway_table.py. Do not edit.\n\n")
    out.write('#include "conway_table.hpp"\n\n')
    out.write("namespace starprod::fq {\n\n")
    out.write("namespace {\n\n")
    out.write("// {p, m, c_0, c_1, ..., c_{m-1}}; the leading coefficient is 1.\n")
    out.write("constexpr std::uint16_t kRaw[] = {\n")
    for p, n, c in rows:
        out.write("    %d, %d, %s,\n" % (p, n, ", ".join(str(v) for v in c[:-1])))
    out.write("};\n\n")
    out.write("}  // namespace\n\n")
    out.write("std::span<const std::uint16_t> conway_raw_table() { return kRaw; }\n\n")
    out.write("}  // namespace starprod::fq\n")


if __name__ == "__main__":
    main()
