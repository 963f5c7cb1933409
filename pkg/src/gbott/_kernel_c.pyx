# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels for exact sparse polynomial arithmetic.

Twin of gbott._kernel_py with identical functions and semantics; see
that module for the representation contract.  Coefficients stay Python
objects (arbitrary-precision int / Fraction), so results are bit-for-bit
identical to the pure kernel; the speedup comes from compiling the dict
and tuple traffic of the inner loops.
"""


def punit(Py_ssize_t nvars):
    """The constant polynomial 1 in `nvars` generators."""
    return {(0,) * nvars: 1}


def padd(dict a, dict b):
    """a + b."""
    cdef dict out
    cdef tuple e
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def psub(dict a, dict b):
    """a - b."""
    cdef dict out
    cdef tuple e
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) - c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def pneg(dict a):
    """-a."""
    cdef dict out = {}
    cdef tuple e
    for e, c in a.items():
        out[e] = -c
    return out


def pscale(dict a, c):
    """c * a for a scalar c (exact; c may be int or Fraction)."""
    cdef dict out = {}
    cdef tuple e
    if not c:
        return out
    for e, v in a.items():
        out[e] = v * c
    return out


cdef inline tuple _esum(tuple ea, tuple eb):
    cdef Py_ssize_t n = len(ea)
    cdef Py_ssize_t i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ea[i] + eb[i]
    return tuple(out)


def pmul(dict a, dict b):
    """a * b by distributing over all term pairs."""
    cdef dict out = {}
    cdef tuple ea, eb, e
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _esum(ea, eb)
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def ppow(dict a, long k, Py_ssize_t nvars):
    """a ** k by repeated multiplication; k must be >= 0, a**0 = 1."""
    cdef long i
    if k < 0:
        raise ValueError("exponent must be non-negative")
    out = punit(nvars)
    for i in range(k):
        out = pmul(out, a)
    return out


def preduce(dict p, caps, tails):
    """Normal form of p under the triangular rewrites
    x_i^(caps[i]+1) -> tails[i]; same contract as the pure kernel."""
    cdef dict cur = dict(p)
    cdef dict tail
    cdef list pending
    cdef tuple e, te, ne, rem
    cdef Py_ssize_t i, cap, step
    cdef Py_ssize_t h = len(caps)
    for i in range(h - 1, -1, -1):
        cap = caps[i]
        tail = tails[i]
        step = cap + 1
        pending = [e for e in cur if <Py_ssize_t> e[i] > cap]
        while pending:
            e = pending.pop()
            c = cur.pop(e, 0)
            if not c:
                continue
            rem = e[:i] + (e[i] - step,) + e[i + 1:]
            for te, tc in tail.items():
                ne = _esum(rem, te)
                s = cur.get(ne, 0) + c * tc
                if s:
                    cur[ne] = s
                    if <Py_ssize_t> ne[i] > cap:
                        pending.append(ne)
                else:
                    cur.pop(ne, None)
    return cur


def psubst(dict p, images, Py_ssize_t nvars_out):
    """Substitute generator j -> images[j] into p; same contract as the
    pure kernel."""
    cdef tuple unit = (0,) * nvars_out
    cdef list caches = [{1: img} for img in images]
    cdef dict out = {}
    cdef dict term
    cdef tuple e, ne
    cdef Py_ssize_t j, ej
    for e, c in p.items():
        term = {unit: c}
        for j in range(len(e)):
            ej = e[j]
            if not ej:
                continue
            term = pmul(term, _power(images[j], ej, caches[j], nvars_out))
            if not term:
                break
        for ne, nc in term.items():
            s = out.get(ne, 0) + nc
            if s:
                out[ne] = s
            elif ne in out:
                del out[ne]
    return out


cdef dict _power(dict base, Py_ssize_t k, dict cache, Py_ssize_t nvars):
    got = cache.get(k)
    if got is not None:
        return <dict> got
    cdef dict r
    if k == 0:
        r = {(0,) * nvars: 1}
    else:
        r = pmul(_power(base, k - 1, cache, nvars), base)
    cache[k] = r
    return r
