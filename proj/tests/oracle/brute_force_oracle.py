"""Independent brute-force oracle for the case-study fixtures.

Ordering is done by enumerating every permutation and picking the one that
satisfies the ordered-element prerequisites, so it shares no code path with
the C++ sort. Exact rationals are used for probabilities and scores.
"""
from fractions import Fraction as F
from itertools import permutations
import math
import json
import sys

PHF = [
    [[(55, .22), (68, .51), (73, .27)], [(60, .61), (66, .39)], [(62, .69), (68, .21)], [(64, .66), (72, .32)]],
    [[(62, .28), (77, .63)], [(68, .29), (77, .71)], [(60, .18), (73, .21), (85, .61)], [(77, .60), (88, .36)]],
    [[(63, .32), (71, .48), (77, .12)], [(66, .48), (71, .52)], [(68, .59), (74, .32)], [(71, .53), (78, .22), (81, .25)]],
    [[(67, .49), (72, .44)], [(62, .55), (69, .45)], [(67, .61), (71, .26)], [(68, .36), (73, .41), (79, .15)]],
]
W_PHF = [[(.34, .68), (.40, .32)], [(.09, .39), (.11, .61)], [(.19, .56), (.22, .44)], [(.21, .43), (.27, .57)]]
LAMBDA = 2.25


def q(x):
    return F(str(x))


def normalize(e):
    s = sum(q(p) for _, p in e)
    return [(q(d), q(p) / s) for d, p in e]


def score(e):
    return sum(d * p for d, p in e)


def variance(e):
    s = score(e)
    return sum(p * (d - s) ** 2 for d, p in e)


def pad(e, n):
    mx = max(d for d, _ in e)
    return e + [(mx, F(0))] * (n - len(e))


def is_ordered(seq):
    for a, b in zip(seq, seq[1:]):
        pa, pb = a[0] * a[1], b[0] * b[1]
        if pa > pb or (pa == pb and a[0] > b[0]):
            return False
    return True


def brute_order(e):
    for perm in permutations(e):
        if is_ordered(list(perm)):
            return list(perm)
    raise AssertionError("no ordering")


def phf_distance(a, b, n=None):
    n = n or max(len(a), len(b))
    a, b = brute_order(pad(a, n)), brute_order(pad(b, n))
    return sum(abs(x[0] * x[1] - y[0] * y[1]) for x, y in zip(a, b)) / n


def cmp_phf(a, b):
    sa, sb = score(a), score(b)
    if sa != sb:
        return 1 if sa > sb else -1
    va, vb = variance(a), variance(b)
    if va != vb:
        return 1 if va < vb else -1
    return 0


def hf_score(e):
    return sum(q(x) for x in e) / len(e)


def hf_var(e):
    s = hf_score(e)
    return math.sqrt(float(sum((q(x) - s) ** 2 for x in e))) / len(e)


def cmp_hf(a, b):
    sa, sb = hf_score(a), hf_score(b)
    if sa != sb:
        return 1 if sa > sb else -1
    va, vb = hf_var(a), hf_var(b)
    if abs(va - vb) > 1e-12:
        return 1 if va < vb else -1
    return 0


def hf_distance(a, b, n=None):
    n = n or max(len(a), len(b))
    a = sorted(q(x) for x in a) + [max(q(x) for x in a)] * (n - len(a))
    b = sorted(q(x) for x in b) + [max(q(x) for x in b)] * (n - len(b))
    return sum(abs(x - y) for x, y in zip(sorted(a), sorted(b))) / n


def kernel(c, d, rel, rsum, lam):
    if c > 0:
        return math.sqrt(float(rel / rsum * d))
    if c < 0:
        return -1.0 / lam * math.sqrt(float(rsum / rel * d))
    return 0.0


def run(cells, weights, cmp, dist, lam=LAMBDA):
    n, m = len(cells), len(cells[0])
    wmax = max(weights)
    rel = [w / wmax for w in weights]
    rsum = sum(rel)
    dom = [[[0.0] * n for _ in range(n)] for _ in range(m)]
    dists = [[[0.0] * n for _ in range(n)] for _ in range(m)]
    for j in range(m):
        for i in range(n):
            for k in range(n):
                if i == k:
                    continue
                width = max(len(cells[x][j]) for x in range(n))
                d = dist(cells[i][j], cells[k][j], width)
                dists[j][i][k] = float(d)
                dom[j][i][k] = kernel(cmp(cells[i][j], cells[k][j]), d, rel[j], rsum, lam)
    theta = [[sum(dom[j][i][k] for j in range(m)) for k in range(n)] for i in range(n)]
    s = [sum(r) for r in theta]
    lo, hi = min(s), max(s)
    o = [(x - lo) / (hi - lo) for x in s]
    return dict(rel=[float(r) for r in rel], rsum=float(rsum), dom=dom, dist=dists, theta=theta, o=o)


def crisp(values, weights, lam=LAMBDA):
    n, m = len(values), len(values[0])
    wmax = max(weights)
    rel = [w / wmax for w in weights]
    rsum = sum(rel)
    psi = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            for j in range(m):
                diff = values[i][j] - values[k][j]
                c = (diff > 0) - (diff < 0)
                psi[i][k] += kernel(c, abs(diff), rel[j], rsum, lam)
    return psi


def main():
    cells = [[normalize(c) for c in row] for row in PHF]
    wraw = [score(normalize(w)) for w in W_PHF]
    wn = [w / sum(wraw) for w in wraw]
    phf = run(cells, wn, cmp_phf, phf_distance)
    hf_cells = [[[d for d, _ in c] for c in row] for row in PHF]
    hf_w = [hf_score([d for d, _ in w]) for w in W_PHF]
    hf = run(hf_cells, hf_w, cmp_hf, hf_distance)
    out = dict(phf_raw_weights=[float(w) for w in wraw], phf_weights=[float(w) for w in wn],
               phf=phf, hf_raw_weights=[float(w) for w in hf_w], hf=hf,
               crisp_two_by_two=crisp([[q(.9), q(.2)], [q(.5), q(.7)]], [q(.6), q(.4)]))
    json.dump(out, sys.stdout, indent=1)




def emit_cpp(path):
    """Writes the frozen expected values used by the C++ suites."""
    cells = [[normalize(c) for c in row] for row in PHF]
    wraw = [score(normalize(w)) for w in W_PHF]
    wn = [w / sum(wraw) for w in wraw]
    phf = run(cells, wn, cmp_phf, phf_distance)
    hf_cells = [[[d for d, _ in c] for c in row] for row in PHF]
    hf_w = [hf_score([d for d, _ in w]) for w in W_PHF]
    hf = run(hf_cells, hf_w, cmp_hf, hf_distance)
    psi = crisp([[q(.9), q(.2)], [q(.5), q(.7)]], [q(.6), q(.4)])

    def vec(v):
        return "{" + ", ".join(repr(float(x)) for x in v) + "}"

    def mat(mx):
        return "{{" + "}, {".join(", ".join(repr(float(x)) for x in r) for r in mx) + "}}"

    def cube(c):
        return "{" + ", ".join(mat(mx) for mx in c) + "}"

    lines = [
        "#pragma once",
        "",
        "// Generated by tests/oracle/brute_force_oracle.py --emit-cpp; do not edit.",
        "// Exact-rational, permutation-enumerating evaluation of the bundled case study.",
        "",
        "namespace golden {",
        "",
        f"inline constexpr double kPhfRawWeights[4] = {vec(wraw)};",
        f"inline constexpr double kPhfWeights[4] = {vec(wn)};",
        f"inline constexpr double kPhfRelative[4] = {vec(phf['rel'])};",
        f"inline constexpr double kPhfRelativeSum = {phf['rsum']!r};",
        "// [criterion][i][k]",
        f"inline constexpr double kPhfDominance[4][4][4] = {cube(phf['dom'])};",
        f"inline constexpr double kPhfDistance[4][4][4] = {cube(phf['dist'])};",
        f"inline constexpr double kPhfTheta[4][4] = {mat(phf['theta'])};",
        f"inline constexpr double kPhfOverall[4] = {vec(phf['o'])};",
        "",
        f"inline constexpr double kHfRawWeights[4] = {vec(hf_w)};",
        f"inline constexpr double kHfRelative[4] = {vec(hf['rel'])};",
        f"inline constexpr double kHfRelativeSum = {hf['rsum']!r};",
        f"inline constexpr double kHfDominance[4][4][4] = {cube(hf['dom'])};",
        f"inline constexpr double kHfDistance[4][4][4] = {cube(hf['dist'])};",
        f"inline constexpr double kHfTheta[4][4] = {mat(hf['theta'])};",
        f"inline constexpr double kHfOverall[4] = {vec(hf['o'])};",
        "",
        "// two alternatives, weights (0.6, 0.4), A1 = (0.9, 0.2), A2 = (0.5, 0.7), lambda 2.25",
        f"inline constexpr double kCrispTwoByTwo[2][2] = {mat(psi)};",
        "",
        "}  // namespace golden",
        "",
    ]
    with open(path, "w") as fh:
        fh.write("\n".join(lines))


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "--emit-cpp":
        emit_cpp(sys.argv[2])
    else:
        main()
