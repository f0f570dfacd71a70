"""Independent oracle values frozen into the C++ tests.

Uses sympy determinants and a standalone splitmix64, sharing no code with
the library. Run: python3 tests/oracles/compute_oracles.py
"""
import itertools
import json

import sympy as sp

MASK = (1 << 64) - 1


def splitmix64(seed):
    state = seed
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        yield z ^ (z >> 31)


def random_dense_gfp(n, p, seed):
    rng = splitmix64(seed)
    upper = []
    for _ in range(n * (n - 1) // 2):
        r = 0
        while r == 0:
            r = next(rng) % p
        upper.append(r)
    return upper


def skew_from_upper(n, upper):
    m = sp.zeros(n, n)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = upper[k]
            m[j, i] = -upper[k]
            k += 1
    return m


def skew_cycle(n, corner):
    m = sp.zeros(n, n)
    for i in range(n - 1):
        m[i, i + 1] = 1
        m[i + 1, i] = -1
    m[n - 1, 0] = corner
    m[0, n - 1] = -corner
    return m


def sym_cycle(n, corner):
    m = sp.zeros(n, n)
    for i in range(n - 1):
        m[i, i + 1] = m[i + 1, i] = 1
    m[n - 1, 0] = m[0, n - 1] = corner
    return m


def pf_expand(m, idx):
    if not idx:
        return 1
    i, rest = idx[0], idx[1:]
    total = 0
    for t, j in enumerate(rest):
        sub = [x for x in rest if x != j]
        total += (-1) ** t * m[i, j] * pf_expand(m, sub)
    return total


def main():
    out = {}
    # square roots
    out["sqrt_2_mod_7"] = [r for r in range(7) if r * r % 7 == 2]
    out["sqrt_3_mod_5"] = [r for r in range(5) if r * r % 5 == 3]

    # pfaffian example
    m4 = skew_from_upper(4, [1, 2, 3, 4, 5, 6])
    out["pf_4x4"] = int(pf_expand(m4, list(range(4))))
    out["det_4x4"] = int(m4.det())

    # A^inf of the 3x3 example (inf last, a_inf,j = 1)
    a3 = skew_from_upper(3, [1, 2, 3])
    ainf = sp.zeros(4, 4)
    ainf[:3, :3] = a3
    for j in range(3):
        ainf[3, j] = 1
        ainf[j, 3] = -1
    out["det_a3_inf"] = int(ainf.det())

    # skew cycles
    for n in (6, 8):
        a, b = skew_cycle(n, 1), skew_cycle(n, -1)
        out[f"skew_cycle_{n}"] = [int(a.det()), int(b.det())]
        ok = all(a.extract(list(x), list(x)).det() == b.extract(list(x), list(x)).det()
                 for k in range(1, n) for x in itertools.combinations(range(n), k))
        out[f"skew_cycle_{n}_proper_equal"] = ok
    out["pf_B6"] = int(pf_expand(skew_cycle(6, -1), list(range(6))))

    # symmetric cycles
    for n in (4, 5):
        a, b = sym_cycle(n, 1), sym_cycle(n, -1)
        out[f"sym_cycle_{n}"] = [int(a.det()), int(b.det())]
        ok = all(a.extract(list(x), list(x)).det() == b.extract(list(x), list(x)).det()
                 for k in range(1, n) for x in itertools.combinations(range(n), k))
        out[f"sym_cycle_{n}_proper_equal"] = ok

    # golden random dense matrix
    out["random_dense_n6_p7_seed42_upper"] = random_dense_gfp(6, 7, 42)

    # witness fixture
    fx = skew_from_upper(4, [1, 1, 1, 1, 2, 3])
    out["fixture_order2"] = [int(fx[i, j] ** 2) for i in range(4) for j in range(i + 1, 4)]
    out["fixture_det"] = int(fx.det())
    sols = []
    for e23, e24, e34 in itertools.product((1, -1), repeat=3):
        if (3 * e34 - 2 * e24 + 1 * e23) ** 2 == 4:
            sols.append([e23, e24, e34])
    out["fixture_sign_solutions"] = sols
    # HL-indecomposability of the fixture: det of each balanced split block
    out["fixture_split_dets"] = [
        int(fx.extract([0, 1], [2, 3]).det()),
        int(fx.extract([0, 2], [1, 3]).det()),
        int(fx.extract([0, 3], [1, 2]).det()),
    ]
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
