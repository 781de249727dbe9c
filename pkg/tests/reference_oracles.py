"""Independent reference computations used to freeze expected test values.

These deliberately avoid the library's own summation/quadrature code
paths: extended-precision (80-bit longdouble) brute-force accumulation,
explicit Pochhammer products, and textbook formulas only.
"""

from __future__ import annotations

import numpy as np


def brute_force_pfq(num, den, z, n_terms: int = 10_000_000,
                    tail_correction: bool = True) -> float:
    """Real-parameter pFq by longdouble brute force, chunked.

    For |z| = 1 the truncation error after N terms scales like
    N^(-delta)/delta; the leading integral of the term power law is added
    back (midpoint rule), leaving an error O(term_N) which is far below
    the comparison tolerances used in the tests.
    """
    num = [np.longdouble(a) for a in num]
    den = [np.longdouble(b) for b in den]
    z = np.longdouble(z)
    total = np.longdouble(0.0)
    term0 = np.longdouble(1.0)
    chunk = 250_000
    start = 0
    last_term = term0
    while start < n_terms:
        stop = min(start + chunk, n_terms)
        n = np.arange(start, stop, dtype=np.longdouble)
        ratio = np.full(n.shape, z, dtype=np.longdouble)
        for a in num:
            ratio *= a + n
        for b in den:
            ratio /= b + n
        ratio /= n + 1
        terms = np.empty(n.shape, dtype=np.longdouble)
        terms[0] = term0
        terms[1:] = term0 * np.cumprod(ratio[:-1])
        total += terms.sum()
        term0 = terms[-1] * ratio[-1]
        last_term = term0
        start = stop
    if tail_correction and abs(z) == 1.0 and len(num) == len(den) + 1:
        delta = np.longdouble(sum(den)) - np.longdouble(sum(num))
        if z == 1.0 and delta > 0:
            # sum_{n>=N} C n^(-1-delta) ~ integral from N-1/2: the term at
            # index N is last_term, N = n_terms
            big_n = np.longdouble(n_terms)
            total += last_term * (big_n - 0.5) / delta
        elif z == -1.0:
            # alternating tail: half the first omitted term
            total += last_term / 2
    return float(total)


def explicit_terminating_sum(num, den, z, order: int) -> complex:
    """Terminating series by explicit Pochhammer products (no recurrence)."""
    def poch(x, n):
        out = complex(1.0)
        for k in range(n):
            out *= complex(x) + k
        return out

    total = complex(0.0)
    fact = 1.0
    for n in range(order + 1):
        if n > 0:
            fact *= n
        term = complex(z) ** n / fact
        for a in num:
            term *= poch(a, n)
        for b in den:
            term /= poch(b, n)
        total += term
    return total
