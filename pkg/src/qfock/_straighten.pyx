# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled straightening kernel; same API and results as ``_straighten_py``."""

from heapq import heappop, heappush

IMPLEMENTATION = "cython"


cdef inline tuple _cd(long k, long n, long l):
    cdef long t = (k - 1) % (n * l)
    if t < 0:
        t += n * l
    return (t % n + 1, t // n + 1)


cdef dict _two(long e1, long c1, long e2, long c2):
    if e1 == e2:
        return {e1: c1 + c2} if c1 + c2 else {}
    return {e1: c1, e2: c2}


cdef dict _alt(long top, long count):
    cdef dict out = {}
    cdef long j
    for j in range(count):
        out[top - 2 * j] = 1 if j % 2 == 0 else -1
    return out


cdef dict _times_q_minus_qinv(dict f, long sign):
    cdef dict out = {}
    for e, c in f.items():
        out[e + 1] = out.get(e + 1, 0) + sign * c
        out[e - 1] = out.get(e - 1, 0) - sign * c
    return {e: c for e, c in out.items() if c}


cdef bint _emit(list out, long k1, long k2, long x, dict coeff):
    cdef long a = k2 - x, b = k1 + x
    if a > b:
        if coeff:
            out.append((a, b, coeff))
        return True
    return False


def rule_terms(long k1, long k2, long n, long l):
    if k1 > k2:
        raise ValueError(f"not an infraction: {k1} > {k2}")
    if k1 == k2:
        return []
    cdef long nl = n * l
    cdef long c1, d1, c2, d2, gamma, delta, i
    c1, d1 = _cd(k1, n, l)
    c2, d2 = _cd(k2, n, l)
    gamma = (c2 - c1) % nl
    if gamma < 0:
        gamma += nl
    delta = (n * (d2 - d1)) % nl
    if delta < 0:
        delta += nl
    cdef list out = []
    if gamma == 0 and delta == 0:
        out.append((k2, k1, {0: -1}))
    elif delta == 0:
        out.append((k2, k1, {-1: -1}))
        i = 1
        while _emit(out, k1, k2, nl * i, _two(-2 * i - 1, -1, -2 * i + 1, 1)):
            i += 1
        i = 0
        while _emit(out, k1, k2, gamma + nl * i, _two(-2 * i - 2, 1, -2 * i, -1)):
            i += 1
    elif gamma == 0:
        out.append((k2, k1, {1: -1}))
        i = 1
        while _emit(out, k1, k2, nl * i, _two(2 * i + 1, -1, 2 * i - 1, 1)):
            i += 1
        i = 0
        while _emit(out, k1, k2, delta + nl * i, _two(2 * i + 2, 1, 2 * i, -1)):
            i += 1
    else:
        out.append((k2, k1, {0: -1}))
        i = 1
        while _emit(out, k1, k2, nl * i, _times_q_minus_qinv(_alt(2 * i - 1, 2 * i), -1)):
            i += 1
        i = 0
        while _emit(out, k1, k2, gamma + nl * i, _times_q_minus_qinv(_alt(2 * i, 2 * i + 1), -1)):
            i += 1
        i = 0
        while _emit(out, k1, k2, delta + nl * i, _times_q_minus_qinv(_alt(2 * i, 2 * i + 1), 1)):
            i += 1
        i = 0
        while _emit(out, k1, k2, gamma + delta + nl * i, _times_q_minus_qinv(_alt(2 * i + 1, 2 * i + 2), 1)):
            i += 1
    return out


def _check_terms(long k1, long k2, long n, list terms):
    res = sorted((k1 % n, k2 % n))
    for a, b, _ in terms:
        assert a + b == k1 + k2, "degree not conserved"
        assert k1 <= b < a <= k2, "entry left the interval"
        assert sorted((a % n, b % n)) == res, "residues not conserved"


cdef long _first_infraction(tuple w):
    cdef Py_ssize_t i, m = len(w)
    for i in range(m - 1):
        if <long>w[i] <= <long>w[i + 1]:
            return i
    return -1


cdef long _potential(tuple w):
    cdef long p = 0
    cdef Py_ssize_t i
    for i in range(len(w)):
        p += i * <long>w[i]
    return p


cdef bint _crowded(tuple w, Py_ssize_t i):
    cdef long lo, hi, x
    cdef Py_ssize_t j, m = len(w)
    lo = hi = w[i + 1]
    for j in range(i + 1, -1, -1):
        x = w[j]
        if x < lo:
            lo = x
        elif x > hi:
            hi = x
        if hi - lo < i + 1 - j:
            return True
    lo = hi = w[i]
    for j in range(i, m):
        x = w[j]
        if x < lo:
            lo = x
        elif x > hi:
            hi = x
        if hi - lo < j - i:
            return True
    return False


cdef dict _mul(dict f, dict g):
    cdef dict out
    if len(f) == 1 and len(g) == 1:
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                return {e1 + e2: c1 * c2}
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


cdef void _iadd(dict acc, dict f):
    for e, c in f.items():
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


cdef class Straightener:
    cdef public long n, l
    cdef public bint use_cache, check, prune
    cdef public dict cache, memo
    cdef dict _rules
    cdef public long rewrites

    def __init__(self, long n, long l, use_cache=True, check=True, prune=True):
        if n < 1 or l < 1:
            raise ValueError("n and l must be positive")
        self.n = n
        self.l = l
        self.use_cache = use_cache
        self.check = check
        self.prune = prune
        self.cache = {}
        self.memo = {}
        self._rules = {}
        self.rewrites = 0

    cpdef list rule(self, long k1, long k2):
        key = (k1, k2)
        r = self._rules.get(key)
        if r is None:
            r = rule_terms(k1, k2, self.n, self.l)
            if self.check:
                _check_terms(k1, k2, self.n, r)
            self._rules[key] = r
        return r

    cpdef dict normal_form(self, word):
        cdef tuple w0 = tuple(word)
        cdef dict cache = self.cache if self.use_cache else None
        cdef dict result, pending, c, acc, hit, prod
        cdef list heap
        cdef tuple w, nw, head, tail
        cdef long i, k1, k2
        cdef bint prune = self.prune
        if cache is not None:
            hit = cache.get(w0)
            if hit is not None:
                return hit
        if _first_infraction(w0) < 0:
            return {w0: {0: 1}}
        result = {}
        pending = {w0: {0: 1}}
        heap = [(-_potential(w0), w0)]
        while heap:
            w = heappop(heap)[1]
            c = pending.pop(w)
            if not c:
                continue
            i = _first_infraction(w)
            if i < 0:
                acc = result.get(w)
                if acc is None:
                    result[w] = dict(c)
                else:
                    _iadd(acc, c)
                continue
            if cache is not None and w is not w0:
                hit = cache.get(w)
                if hit is not None:
                    for w2, c2 in hit.items():
                        acc = result.get(w2)
                        if acc is None:
                            result[w2] = _mul(c, c2)
                        else:
                            _iadd(acc, _mul(c, c2))
                    continue
            k1 = w[i]
            k2 = w[i + 1]
            if k1 == k2:
                continue
            self.rewrites += 1
            head = w[:i]
            tail = w[i + 2:]
            for a, b, rc in self.rule(k1, k2):
                nw = head + (a, b) + tail
                if prune and _crowded(nw, i):
                    continue
                prod = _mul(c, rc)
                acc = pending.get(nw)
                if acc is None:
                    pending[nw] = prod
                    heappush(heap, (-_potential(nw), nw))
                else:
                    _iadd(acc, prod)
        result = {w: c for w, c in result.items() if c}
        if cache is not None:
            cache[w0] = result
        return result

    cpdef dict insert(self, tuple prefix, long x, dict memo=None):
        cdef Py_ssize_t m = len(prefix)
        cdef long last
        cdef dict out, hit, acc, c1
        cdef tuple head, key
        if m == 0:
            return {(x,): {0: 1}}
        last = prefix[m - 1]
        if last > x:
            return {prefix + (x,): {0: 1}}
        if last == x:
            return {}
        if memo is None:
            memo = self.memo
        key = (prefix, x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        self.rewrites += 1
        head = prefix[:m - 1]
        out = {}
        for a, b, rc in self.rule(last, x):
            for v, c in self.insert(head, a, memo).items():
                c1 = _mul(c, rc)
                for w, c2 in self.insert(v, b, memo).items():
                    acc = out.get(w)
                    if acc is None:
                        out[w] = _mul(c1, c2)
                    else:
                        _iadd(acc, _mul(c1, c2))
        out = {w: c for w, c in out.items() if c}
        memo[key] = out
        return out

    def straighten(self, word, incremental=True):
        cdef tuple w0 = tuple(word)
        cdef dict vec, nxt, acc, memo
        if not incremental:
            return self.normal_form(w0)
        memo = self.memo if self.use_cache else {}
        vec = {(): {0: 1}}
        for x in w0:
            nxt = {}
            for p, c in vec.items():
                for w2, c2 in self.insert(p, x, memo).items():
                    acc = nxt.get(w2)
                    if acc is None:
                        nxt[w2] = _mul(c, c2)
                    else:
                        _iadd(acc, _mul(c, c2))
            vec = {w: c for w, c in nxt.items() if c}
        return vec
