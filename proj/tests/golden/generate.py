#!/usr/bin/env python3
"""Regenerates the n <= 10 golden .dat files.

Independent of the C++ code: L and T are literal known counts, Lmax is the
large Schroder number S_{n+1} from its convolution recurrence, Tmax is the
antichain number A_{n+2} from its binomial-sum closed form, and the ratio
is L/T in Decimal with round-half-up at 12 significant digits.
"""

import decimal
import math
import pathlib

L = [2, 9, 56, 416, 3457, 31063, 295834, 2948082, 30471080, 324580196, 3546142551]
T = [2, 10, 68, 544, 4828, 46124, 465932, 4919062, 53832832, 607000122, 7019272236]


def schroder(limit):
    s = [1, 2]
    for n in range(2, limit + 1):
        s.append(s[n - 1] + sum(s[k] * s[n - 1 - k] for k in range(n)))
    return s


def antichain(n):
    total = sum(math.comb(2 * i + 1, i) * math.comb(2 * n - 1, n - i - 1) for i in range(n))
    assert total % (2 * n - 1) == 0
    return total // (2 * n - 1)


def ratio(num, den, digits=12):
    decimal.getcontext().prec = 80
    q = decimal.Decimal(num) / decimal.Decimal(den)
    r = q.quantize(decimal.Decimal(1).scaleb(q.adjusted() - digits + 1), rounding=decimal.ROUND_HALF_UP)
    if r.adjusted() != q.adjusted():
        r = q.quantize(decimal.Decimal(1).scaleb(r.adjusted() - digits + 1), rounding=decimal.ROUND_HALF_UP)
    return format(r, "f")


def main():
    out = pathlib.Path(__file__).resolve().parent
    s = schroder(11)
    assert s[:5] == [1, 2, 6, 22, 90]
    assert [antichain(n) for n in range(1, 6)] == [1, 2, 7, 29, 131]
    series = {
        "L.dat": [str(v) for v in L],
        "T.dat": [str(v) for v in T],
        "Lmax.dat": [str(s[n + 1]) for n in range(11)],
        "Tmax.dat": [str(antichain(n + 2)) for n in range(11)],
        "ratio_LT.dat": [ratio(L[n], T[n]) for n in range(11)],
    }
    for name, values in series.items():
        (out / name).write_text("".join(f"{n} {v}\n" for n, v in enumerate(values)))


if __name__ == "__main__":
    main()
