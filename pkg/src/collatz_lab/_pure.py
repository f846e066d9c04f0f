"""Pure-Python integer kernels.

Reference implementations of the hot inner loops.  `collatz_lab.kernels`
swaps in the compiled twins from `collatz_lab._fast` when that extension is
available; both modules expose exactly the same functions and must agree on
every input.  Functions here assume validated arguments (the checked public
surface lives in `arith`, `sequences` and `reverse_tree`); everything is
plain-int arithmetic, so arbitrarily large values are handled natively.
"""

from __future__ import annotations


def ruler(n):
    """Position of the lowest set bit of n, counted from one.

    Equals the 2-adic valuation of 2n: 1 for odd n, 2 for n = 2 mod 4, ...
    """
    return (n & -n).bit_length()


def interleave_p(n):
    # p(2n) = n, p(2n+1) = p(n): halve through the odd prefix, then once more.
    while n & 1:
        n >>= 1
    return n >> 1


def shifted_ruler_q(n):
    """Ruler value of n + 1; counts the trailing one-bits of n, plus one."""
    m = n + 1
    return (m & -m).bit_length()


def odd_part(n):
    return n >> ((n & -n).bit_length() - 1)


def apt_step(n):
    """One full parity run of the half-step map, in closed form.

    Even n drops to its odd part; odd n lands on 3^e * ((n+1)/2^e) - 1 where
    e is the 2-adic valuation of n + 1.  The shift is exact by choice of e.
    """
    if n & 1 == 0:
        return n >> ((n & -n).bit_length() - 1)
    m = n + 1
    e = (m & -m).bit_length() - 1
    return 3**e * (m >> e) - 1


def emapt_step_pq(u):
    """Even-to-even accelerated step via the interleave/shifted-ruler pair."""
    m = interleave_p((u - 2) >> 1)
    return (2 * interleave_p(m) + 1) * 3 ** shifted_ruler_q(m) - 1


def emapt_step_ruler(u):
    """Even-to-even accelerated step via ruler values only.

    Defined for any u >= 1 (odd u gives the step out of an odd seed); the
    public API restricts it to even u, the checkers use the odd case too.
    """
    v = u >> ((u & -u).bit_length() - 1)
    m = v + 1
    e = (m & -m).bit_length() - 1
    return 3**e * (m >> e) - 1


def omapt_step(v):
    """Odd-to-odd accelerated step."""
    m = (v - 1) >> 1
    k = ((2 * interleave_p(m) + 1) * 3 ** shifted_ruler_q(m) - 3) >> 1
    return 2 * interleave_p(k) + 1


def x_step(x):
    """Index form of the even-to-even step: x maps to (emapt(6x+2) - 2) / 6."""
    m = interleave_p(3 * x)
    return ((2 * interleave_p(m) + 1) * 3 ** (shifted_ruler_q(m) - 1) - 1) >> 1


def _c_step(n):
    return n >> 1 if n & 1 == 0 else 3 * n + 1


def _t_step(n):
    return n >> 1 if n & 1 == 0 else (3 * n + 1) >> 1


def _orbit_to_one(step, n, budget):
    seq = [n]
    x = n
    left = budget
    while x != 1 and left > 0:
        x = step(x)
        seq.append(x)
        left -= 1
    return seq, x == 1


def _is_subsequence(inner, outer):
    j = 0
    limit = len(outer)
    for x in inner:
        while j < limit and outer[j] != x:
            j += 1
        if j == limit:
            return False
        j += 1
    return True


def covering_chain(n, budget):
    """Element counts of the three orbits from n down to 1, plus containment.

    Returns (c_len, t_len, a_len, ok).  A length is -1 when the step budget
    ran out before reaching 1.  ok is 1 when the accelerated orbit embeds in
    the half-step orbit embeds in the plain orbit (ordered subsequences),
    0 when an embedding fails, -1 when any orbit is unfinished.
    """
    c, c_done = _orbit_to_one(_c_step, n, budget)
    t, t_done = _orbit_to_one(_t_step, n, budget)
    a, a_done = _orbit_to_one(apt_step, n, budget)
    if not (c_done and t_done and a_done):
        return (
            len(c) if c_done else -1,
            len(t) if t_done else -1,
            len(a) if a_done else -1,
            -1,
        )
    ok = 1 if (_is_subsequence(a, t) and _is_subsequence(t, c)) else 0
    return len(c), len(t), len(a), ok


def apt_stopping(n, budget):
    """Steps for the accelerated map to reach 1, or -1 if the budget runs out."""
    steps = 0
    while n != 1:
        if steps >= budget:
            return -1
        n = apt_step(n)
        steps += 1
    return steps


def emapt_stopping(u, budget):
    """Steps for the even-only map to reach 2, or -1 if the budget runs out."""
    steps = 0
    while u != 2:
        if steps >= budget:
            return -1
        u = emapt_step_pq(u)
        steps += 1
    return steps


# --- range scans; each returns the list of violating inputs -----------------


def scan_index_reps(lo, hi):
    # (2 p(n) + 1) 2^q(n) must rebuild 2(n+1), and its predecessor 2n+1.
    bad = []
    for n in range(lo, hi + 1):
        e = (2 * interleave_p(n) + 1) << shifted_ruler_q(n)
        if e != 2 * (n + 1) or e - 1 != 2 * n + 1:
            bad.append(n)
    return bad


def scan_ruler_identities(lo, hi):
    # ruler of e/2 (equivalently of (o+1)/2, o = e-1) must equal q(n).
    bad = []
    for n in range(lo, hi + 1):
        q = shifted_ruler_q(n)
        e = (2 * interleave_p(n) + 1) << q
        if ruler(e >> 1) != q:
            bad.append(n)
    return bad


def scan_p3n(lo, hi):
    bad = []
    for n in range(lo, hi + 1):
        if interleave_p(3 * n) % 3 == 1:
            bad.append(n)
    return bad


def scan_x_residues(lo, hi):
    bad = []
    for x in range(lo, hi + 1):
        if x_step(x) % 3 == 2:
            bad.append(x)
    return bad


def scan_emapt_forms(lo, hi):
    """Even u in [lo, hi] where the two step formulations disagree."""
    lo = max(lo, 2)   # the even-step domain starts at 2
    start = lo if lo % 2 == 0 else lo + 1
    bad = []
    for u in range(start, hi + 1, 2):
        if emapt_step_pq(u) != emapt_step_ruler(u):
            bad.append(u)
    return bad
