# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Littlewood-Richardson kernel; same row-block algorithm as _lr_py."""

cdef enum:
    MAXR = 32

cdef struct State:
    int m
    int nletters
    int lam[MAXR]
    int mu[MAXR]
    int cnt[MAXR]
    int rows[MAXR]
    int a[MAXR][MAXR]


cdef bint _done(State* s):
    cdef int i
    for i in range(s.nletters):
        if s.cnt[i] != s.mu[i]:
            return False
    return True


cdef void _record(State* s, int r, dict out):
    cdef int i
    nu = []
    for i in range(r):
        nu.append(s.rows[i])
    for i in range(r, s.m):
        nu.append(s.lam[i])
    key = tuple(nu)
    out[key] = out.get(key, 0) + 1


cdef void _place(State* s, int r, int i, int top, int filled, int nu_prev,
                 int* prefix_prev, int lam_prev, dict out):
    cdef int hi, v, j
    if i > top:
        if r > 0 and filled > nu_prev:
            return
        for j in range(top + 1):
            s.cnt[j] += s.a[r][j]
        s.rows[r] = filled
        _fill_row(s, r + 1, filled, out)
        for j in range(top + 1):
            s.cnt[j] -= s.a[r][j]
        return
    hi = s.mu[i] - s.cnt[i]
    if i > 0 and s.cnt[i - 1] - s.cnt[i] < hi:
        hi = s.cnt[i - 1] - s.cnt[i]
    if r > 0 and lam_prev + prefix_prev[i] - filled < hi:
        hi = lam_prev + prefix_prev[i] - filled
    s.a[r][i] = 0
    _place(s, r, i + 1, top, filled, nu_prev, prefix_prev, lam_prev, out)
    for v in range(1, hi + 1):
        s.a[r][i] = v
        _place(s, r, i + 1, top, filled + v, nu_prev, prefix_prev, lam_prev, out)
    s.a[r][i] = 0


cdef void _fill_row(State* s, int r, int nu_prev, dict out):
    cdef int top, i, lam_prev
    cdef int prefix_prev[MAXR + 1]
    if _done(s):
        _record(s, r, out)
        return
    if r == s.m:
        return
    top = r if r < s.nletters - 1 else s.nletters - 1
    prefix_prev[0] = 0
    for i in range(s.nletters):
        prefix_prev[i + 1] = prefix_prev[i] + (s.a[r - 1][i] if r > 0 else 0)
    for i in range(s.nletters):
        s.a[r][i] = 0
    lam_prev = s.lam[r - 1] if r > 0 else 0
    _place(s, r, 0, top, s.lam[r], nu_prev, prefix_prev, lam_prev, out)


def lr_coefficients(lam, mu, int m):
    """Return {nu: c^nu_{lam,mu}} over partitions nu with at most m rows."""
    cdef State s
    cdef int i
    lam_l = [int(x) for x in lam if x > 0]
    mu_l = [int(x) for x in mu if x > 0]
    if len(lam_l) > m or len(mu_l) > m:
        return {}
    if m > MAXR:
        raise ValueError("rank too large for the compiled kernel")
    out = {}
    s.m = m
    s.nletters = len(mu_l)
    for i in range(MAXR):
        s.lam[i] = 0
        s.mu[i] = 0
        s.cnt[i] = 0
        s.rows[i] = 0
    for i in range(len(lam_l)):
        s.lam[i] = lam_l[i]
    for i in range(len(mu_l)):
        s.mu[i] = mu_l[i]
    if s.nletters == 0:
        out[tuple(s.lam[i] for i in range(m))] = 1
        return out
    _fill_row(&s, 0, 0, out)
    return out
