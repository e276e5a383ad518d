"""Rebuilds the OEIS b-file prefixes in oeis/ from each sequence's own
definition. The files are offline stand-ins: drop the official b-files from
oeis.org into a directory and pass it with --oeis-dir for an authoritative
check."""
from math import comb, factorial
import os

HERE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "oeis")


def write(name, header, pairs):
    with open(os.path.join(HERE, name), "w") as f:
        for line in header:
            f.write("# " + line + "\n")
        for i, v in pairs:
            f.write(f"{i} {v}\n")


def a006958(count):
    # g.f. 1/(1 - x/(1 - x/(1 - x^2/(1 - x^2/(1 - x^3/...))))) as a series
    n = count

    def mul(a, b):
        c = [0] * n
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b[: n - i]):
                    c[i + j] += x * y
        return c

    def inv(a):
        b = [0] * n
        b[0] = 1
        for m in range(1, n):
            b[m] = -sum(a[i] * b[m - i] for i in range(1, m + 1))
        return b

    t = [1] + [0] * (n - 1)
    for e in reversed([i // 2 + 1 for i in range(2 * n)]):
        num = [0] * n
        if e < n:
            num[e] = 1
        t = inv([(1 if i == 0 else 0) - v for i, v in enumerate(mul(num, t))])
    return t


def narayana(n, k):
    return comb(n, k) * comb(n, k - 1) // n


write("b006958.txt",
      ["A006958 (prefix): parallelogram polyominoes with n cells.",
       "Reconstructed offline from the continued-fraction g.f."],
      enumerate(a006958(25)))
write("b045943.txt",
      ["A045943 (prefix): a(n) = 3n(n+1)/2.",
       "Reconstructed offline from the defining formula."],
      ((n, 3 * n * (n + 1) // 2) for n in range(0, 31)))
write("b000891.txt",
      ["A000891 (prefix): a(n) = (2n)!(2n+1)!/(n!^2 (n+1)!^2).",
       "Reconstructed offline from the defining formula."],
      ((n, factorial(2 * n) * factorial(2 * n + 1) // (factorial(n) ** 2 * factorial(n + 1) ** 2))
       for n in range(0, 21)))
tri = [narayana(n, k) ** 2 for n in range(1, 11) for k in range(1, n + 1)]
write("b174158.txt",
      ["A174158 (prefix): triangle of squared Narayana numbers N(n,k)^2, read by rows.",
       "Reconstructed offline from N(n,k) = C(n,k) C(n,k-1) / n."],
      enumerate(tri, start=1))
write("b319743.txt",
      ["A319743 (prefix): a(n) = sum_k N(n,k)^2.",
       "Reconstructed offline from N(n,k) = C(n,k) C(n,k-1) / n."],
      ((n, sum(narayana(n, k) ** 2 for k in range(1, n + 1))) for n in range(1, 21)))
