# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels; drop-in twin of collatz_lab._pure.

Every function runs a fixed-width uint64 fast path with explicit overflow
guards and defers to the arbitrary-precision implementation in
collatz_lab._pure the moment a value might not fit.  Results are therefore
identical to the pure module on all inputs.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc, realloc

from collatz_lab import _pure

cdef uint64_t U64_MAX = <uint64_t>0xFFFFFFFFFFFFFFFF
cdef uint64_t SAFE3 = (<uint64_t>0xFFFFFFFFFFFFFFFF - 1) // 3   # 3n+1 fits below this
cdef uint64_t SAFE_N = <uint64_t>1 << 62


cdef inline int _ctz(uint64_t x):
    # x != 0
    cdef int c = 0
    while (x & 1) == 0:
        x >>= 1
        c += 1
    return c


cdef inline uint64_t _p_u64(uint64_t v):
    while v & 1:
        v >>= 1
    return v >> 1


cdef inline int _q_u64(uint64_t v):
    cdef int c = 0
    while v & 1:
        v >>= 1
        c += 1
    return c + 1


cdef inline uint64_t _pow3_mul(uint64_t odd, int e, int *overflow):
    # odd * 3**e with checked multiplies; odd >= 1
    cdef uint64_t acc = odd
    while e > 0:
        if acc > U64_MAX // 3:
            overflow[0] = 1
            return 0
        acc *= 3
        e -= 1
    return acc


def ruler(n):
    cdef uint64_t v
    try:
        v = n
    except OverflowError:
        return _pure.ruler(n)
    return _ctz(v) + 1


def interleave_p(n):
    cdef uint64_t v
    try:
        v = n
    except OverflowError:
        return _pure.interleave_p(n)
    return _p_u64(v)


def shifted_ruler_q(n):
    cdef uint64_t v
    try:
        v = n
    except OverflowError:
        return _pure.shifted_ruler_q(n)
    return _q_u64(v)


def odd_part(n):
    cdef uint64_t v
    try:
        v = n
    except OverflowError:
        return _pure.odd_part(n)
    return v >> _ctz(v)


cdef inline uint64_t _apt_u64(uint64_t v, int *overflow):
    cdef uint64_t m, out
    cdef int e
    if (v & 1) == 0:
        return v >> _ctz(v)
    if v == U64_MAX:
        overflow[0] = 1
        return 0
    m = v + 1
    e = _ctz(m)
    out = _pow3_mul(m >> e, e, overflow)
    if overflow[0]:
        return 0
    return out - 1


def apt_step(n):
    cdef uint64_t v, out
    cdef int overflow = 0
    try:
        v = n
    except OverflowError:
        return _pure.apt_step(n)
    out = _apt_u64(v, &overflow)
    if overflow:
        return _pure.apt_step(n)
    return out


cdef inline uint64_t _emapt_u64(uint64_t u, int *overflow):
    cdef uint64_t m = _p_u64((u - 2) >> 1)
    cdef uint64_t out = _pow3_mul(2 * _p_u64(m) + 1, _q_u64(m), overflow)
    if overflow[0]:
        return 0
    return out - 1


def emapt_step_pq(u):
    cdef uint64_t v, out
    cdef int overflow = 0
    try:
        v = u
    except OverflowError:
        return _pure.emapt_step_pq(u)
    out = _emapt_u64(v, &overflow)
    if overflow:
        return _pure.emapt_step_pq(u)
    return out


cdef inline uint64_t _emapt_ruler_u64(uint64_t u, int *overflow):
    cdef uint64_t m = (u >> _ctz(u)) + 1   # odd part, plus one; no overflow: u even or > 1
    cdef int e = _ctz(m)
    cdef uint64_t out = _pow3_mul(m >> e, e, overflow)
    if overflow[0]:
        return 0
    return out - 1


def emapt_step_ruler(u):
    cdef uint64_t v, out
    cdef int overflow = 0
    try:
        v = u
    except OverflowError:
        return _pure.emapt_step_ruler(u)
    if v == U64_MAX:
        return _pure.emapt_step_ruler(u)
    out = _emapt_ruler_u64(v, &overflow)
    if overflow:
        return _pure.emapt_step_ruler(u)
    return out


cdef inline uint64_t _omapt_u64(uint64_t v, int *overflow):
    cdef uint64_t m = (v - 1) >> 1
    cdef uint64_t k = _pow3_mul(2 * _p_u64(m) + 1, _q_u64(m), overflow)
    if overflow[0]:
        return 0
    k = (k - 3) >> 1
    return 2 * _p_u64(k) + 1


def omapt_step(v):
    cdef uint64_t w, out
    cdef int overflow = 0
    try:
        w = v
    except OverflowError:
        return _pure.omapt_step(v)
    out = _omapt_u64(w, &overflow)
    if overflow:
        return _pure.omapt_step(v)
    return out


cdef inline uint64_t _x_u64(uint64_t x, int *overflow):
    cdef uint64_t m, out
    if x > SAFE3:
        overflow[0] = 1
        return 0
    m = _p_u64(3 * x)
    out = _pow3_mul(2 * _p_u64(m) + 1, _q_u64(m) - 1, overflow)
    if overflow[0]:
        return 0
    return (out - 1) >> 1


def x_step(x):
    cdef uint64_t v, out
    cdef int overflow = 0
    try:
        v = x
    except OverflowError:
        return _pure.x_step(x)
    out = _x_u64(v, &overflow)
    if overflow:
        return _pure.x_step(x)
    return out


# --- orbit buffers -----------------------------------------------------------

cdef struct Buf:
    uint64_t *data
    Py_ssize_t size
    Py_ssize_t cap


cdef int _buf_init(Buf *b, Py_ssize_t cap):
    b.data = <uint64_t *>malloc(cap * sizeof(uint64_t))
    b.size = 0
    b.cap = cap
    return 0 if b.data != NULL else -1


cdef int _buf_push(Buf *b, uint64_t v):
    cdef uint64_t *grown
    if b.size == b.cap:
        b.cap <<= 1
        grown = <uint64_t *>realloc(b.data, b.cap * sizeof(uint64_t))
        if grown == NULL:
            return -1
        b.data = grown
    b.data[b.size] = v
    b.size += 1
    return 0


cdef int _fill_c(Buf *b, uint64_t n, long long budget):
    # 1 reached one, 0 budget exhausted, -1 overflow or allocation failure
    cdef uint64_t x = n
    if _buf_push(b, x) < 0:
        return -1
    while x != 1 and budget > 0:
        if x & 1:
            if x > SAFE3:
                return -1
            x = 3 * x + 1
        else:
            x >>= 1
        if _buf_push(b, x) < 0:
            return -1
        budget -= 1
    return 1 if x == 1 else 0


cdef int _fill_t(Buf *b, uint64_t n, long long budget):
    cdef uint64_t x = n
    if _buf_push(b, x) < 0:
        return -1
    while x != 1 and budget > 0:
        if x & 1:
            if x > SAFE3:
                return -1
            x = (3 * x + 1) >> 1
        else:
            x >>= 1
        if _buf_push(b, x) < 0:
            return -1
        budget -= 1
    return 1 if x == 1 else 0


cdef int _fill_a(Buf *b, uint64_t n, long long budget):
    cdef uint64_t x = n
    cdef int overflow = 0
    if _buf_push(b, x) < 0:
        return -1
    while x != 1 and budget > 0:
        x = _apt_u64(x, &overflow)
        if overflow:
            return -1
        if _buf_push(b, x) < 0:
            return -1
        budget -= 1
    return 1 if x == 1 else 0


cdef bint _subseq(Buf *inner, Buf *outer):
    cdef Py_ssize_t i = 0, j = 0
    while i < inner.size:
        while j < outer.size and outer.data[j] != inner.data[i]:
            j += 1
        if j == outer.size:
            return 0
        j += 1
        i += 1
    return 1


def covering_chain(n, budget):
    cdef uint64_t v
    cdef long long bud
    cdef Buf bc, bt, ba
    cdef int rc, rt, ra, ok
    try:
        v = n
        bud = budget
    except OverflowError:
        return _pure.covering_chain(n, budget)
    if _buf_init(&bc, 128) < 0:
        raise MemoryError
    if _buf_init(&bt, 128) < 0:
        free(bc.data)
        raise MemoryError
    if _buf_init(&ba, 128) < 0:
        free(bc.data)
        free(bt.data)
        raise MemoryError
    try:
        rc = _fill_c(&bc, v, bud)
        rt = _fill_t(&bt, v, bud)
        ra = _fill_a(&ba, v, bud)
        if rc < 0 or rt < 0 or ra < 0:
            return _pure.covering_chain(n, budget)
        if rc == 1 and rt == 1 and ra == 1:
            ok = 1 if (_subseq(&ba, &bt) and _subseq(&bt, &bc)) else 0
            return (bc.size, bt.size, ba.size, ok)
        return (
            bc.size if rc == 1 else -1,
            bt.size if rt == 1 else -1,
            ba.size if ra == 1 else -1,
            -1,
        )
    finally:
        free(bc.data)
        free(bt.data)
        free(ba.data)


def apt_stopping(n, budget):
    cdef uint64_t v
    cdef long long bud, steps = 0
    cdef int overflow = 0
    try:
        v = n
        bud = budget
    except OverflowError:
        return _pure.apt_stopping(n, budget)
    while v != 1:
        if steps >= bud:
            return -1
        v = _apt_u64(v, &overflow)
        if overflow:
            return _pure.apt_stopping(n, budget)
        steps += 1
    return steps


def emapt_stopping(u, budget):
    cdef uint64_t v
    cdef long long bud, steps = 0
    cdef int overflow = 0
    try:
        v = u
        bud = budget
    except OverflowError:
        return _pure.emapt_stopping(u, budget)
    while v != 2:
        if steps >= bud:
            return -1
        v = _emapt_u64(v, &overflow)
        if overflow:
            return _pure.emapt_stopping(u, budget)
        steps += 1
    return steps


# --- range scans -------------------------------------------------------------


def scan_index_reps(lo, hi):
    cdef uint64_t a, b, n, e
    cdef int q
    try:
        a = lo
        b = hi
    except OverflowError:
        return _pure.scan_index_reps(lo, hi)
    if b >= SAFE_N:
        return _pure.scan_index_reps(lo, hi)
    bad = []
    n = a
    while n <= b:
        q = _q_u64(n)
        e = (2 * _p_u64(n) + 1) << q
        if e != 2 * (n + 1) or e - 1 != 2 * n + 1:
            bad.append(n)
        n += 1
    return bad


def scan_ruler_identities(lo, hi):
    cdef uint64_t a, b, n, e
    cdef int q
    try:
        a = lo
        b = hi
    except OverflowError:
        return _pure.scan_ruler_identities(lo, hi)
    if b >= SAFE_N:
        return _pure.scan_ruler_identities(lo, hi)
    bad = []
    n = a
    while n <= b:
        q = _q_u64(n)
        e = (2 * _p_u64(n) + 1) << q
        if _ctz(e >> 1) + 1 != q:
            bad.append(n)
        n += 1
    return bad


def scan_p3n(lo, hi):
    cdef uint64_t a, b, n
    try:
        a = lo
        b = hi
    except OverflowError:
        return _pure.scan_p3n(lo, hi)
    if b > SAFE3:
        return _pure.scan_p3n(lo, hi)
    bad = []
    n = a
    while n <= b:
        if _p_u64(3 * n) % 3 == 1:
            bad.append(n)
        n += 1
    return bad


def scan_x_residues(lo, hi):
    cdef uint64_t a, b, x, out
    cdef int overflow
    try:
        a = lo
        b = hi
    except OverflowError:
        return _pure.scan_x_residues(lo, hi)
    bad = []
    x = a
    while x <= b:
        overflow = 0
        out = _x_u64(x, &overflow)
        if overflow:
            if _pure.x_step(x) % 3 == 2:
                bad.append(x)
        elif out % 3 == 2:
            bad.append(x)
        if x == U64_MAX:
            break
        x += 1
    return bad


def scan_emapt_forms(lo, hi):
    cdef uint64_t a, b, u, via_pq, via_ruler
    cdef int of1, of2
    try:
        a = lo
        b = hi
    except OverflowError:
        return _pure.scan_emapt_forms(lo, hi)
    if b >= U64_MAX - 1:   # keep u += 2 from wrapping
        return _pure.scan_emapt_forms(lo, hi)
    if a < 2:   # the even-step domain starts at 2
        a = 2
    if a & 1:
        a += 1
    bad = []
    u = a
    while u <= b:
        of1 = 0
        of2 = 0
        via_pq = _emapt_u64(u, &of1)
        via_ruler = _emapt_ruler_u64(u, &of2)
        if of1 or of2:
            if _pure.emapt_step_pq(u) != _pure.emapt_step_ruler(u):
                bad.append(u)
        elif via_pq != via_ruler:
            bad.append(u)
        u += 2
    return bad
