"""Pure-Python Littlewood-Richardson coefficients.

Fills the skew shape nu/lam row by row.  In each row the letters form
consecutive blocks a[0] <= ... (letter i only in rows >= i).  Column
strictness and the lattice condition on the right-to-left, top-to-bottom
reading word both reduce to inequalities between block sizes of adjacent
rows, so no tableau is ever materialized.
"""
from __future__ import annotations


def lr_coefficients(lam, mu, m):
    """Return {nu: c^nu_{lam,mu}} over partitions nu with at most m rows.

    ``lam`` and ``mu`` are partitions (non-increasing, non-negative) of
    length at most ``m``.
    """
    lam = [int(x) for x in lam if x > 0]
    mu = [int(x) for x in mu if x > 0]
    if len(lam) > m or len(mu) > m:
        return {}
    lam = lam + [0] * (m - len(lam))
    nletters = len(mu)
    result: dict[tuple, int] = {}
    if nletters == 0:
        result[tuple(lam)] = 1
        return result

    cnt = [0] * nletters
    rows: list[int] = []

    def fill_row(r, a_prev, nu_prev):
        if all(cnt[i] == mu[i] for i in range(nletters)):
            nu = tuple(rows) + tuple(lam[r:])
            result[nu] = result.get(nu, 0) + 1
            return
        if r == m:
            return
        top = min(r, nletters - 1)
        a = [0] * nletters
        prefix_prev = [0] * (nletters + 1)
        for i in range(nletters):
            prefix_prev[i + 1] = prefix_prev[i] + a_prev[i]
        lam_prev = lam[r - 1] if r > 0 else 0

        def place(i, filled):
            if i > top:
                if r > 0 and filled > nu_prev:
                    return
                for j in range(top + 1):
                    cnt[j] += a[j]
                rows.append(filled)
                fill_row(r + 1, list(a), filled)
                rows.pop()
                for j in range(top + 1):
                    cnt[j] -= a[j]
                return
            hi = mu[i] - cnt[i]
            if i > 0:
                hi = min(hi, cnt[i - 1] - cnt[i])
            if r > 0:
                hi = min(hi, lam_prev + prefix_prev[i] - filled)
            a[i] = 0
            place(i + 1, filled)
            for v in range(1, hi + 1):
                a[i] = v
                place(i + 1, filled + v)
            a[i] = 0

        place(0, lam[r])

    fill_row(0, [0] * nletters, 0)
    return result
