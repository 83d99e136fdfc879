"""Pure-Python straightening kernel.

Coefficients inside the kernel are plain ``dict`` objects mapping exponent to
integer; the public wrappers in :mod:`qfock.wedge` convert them to
:class:`~qfock.laurent.LaurentPoly`. ``_straighten.pyx`` mirrors this file.
"""

from heapq import heappop, heappush

IMPLEMENTATION = "python"


def _cd(k, n, l):
    t = (k - 1) % (n * l)
    return t % n + 1, t // n + 1


def _mono(e, c):
    return {e: c}


def _two(e1, c1, e2, c2):
    if e1 == e2:
        return {e1: c1 + c2} if c1 + c2 else {}
    return {e1: c1, e2: c2}


def _alt(top, count, sign):
    # sum_{j<count} (-1)^j q^(top-2j), times sign
    return {top - 2 * j: sign * (1 if j % 2 == 0 else -1) for j in range(count)}


def _times_q_minus_qinv(f, sign):
    out = {}
    for e, c in f.items():
        out[e + 1] = out.get(e + 1, 0) + sign * c
        out[e - 1] = out.get(e - 1, 0) - sign * c
    return {e: c for e, c in out.items() if c}


def rule_terms(k1, k2, n, l):
    """Ordered right-hand side of the ordering rule for ``v_k1 ^ v_k2``.

    Returns a list of ``(a, b, coeff)`` with ``a > b`` and ``coeff`` a dict.
    """
    if k1 > k2:
        raise ValueError(f"not an infraction: {k1} > {k2}")
    if k1 == k2:
        return []
    nl = n * l
    c1, d1 = _cd(k1, n, l)
    c2, d2 = _cd(k2, n, l)
    gamma = (c2 - c1) % nl
    delta = (n * (d2 - d1)) % nl
    out = []

    def emit(x, coeff):
        a, b = k2 - x, k1 + x
        if a > b and coeff:
            out.append((a, b, coeff))
        return a > b

    if gamma == 0 and delta == 0:
        out.append((k2, k1, {0: -1}))
    elif delta == 0:
        out.append((k2, k1, {-1: -1}))
        i = 1
        while emit(nl * i, _two(-2 * i - 1, -1, -2 * i + 1, 1)):
            i += 1
        i = 0
        while emit(gamma + nl * i, _two(-2 * i - 2, 1, -2 * i, -1)):
            i += 1
    elif gamma == 0:
        out.append((k2, k1, {1: -1}))
        i = 1
        while emit(nl * i, _two(2 * i + 1, -1, 2 * i - 1, 1)):
            i += 1
        i = 0
        while emit(delta + nl * i, _two(2 * i + 2, 1, 2 * i, -1)):
            i += 1
    else:
        out.append((k2, k1, {0: -1}))
        i = 1
        while emit(nl * i, _times_q_minus_qinv(_alt(2 * i - 1, 2 * i, 1), -1)):
            i += 1
        i = 0
        while emit(gamma + nl * i, _times_q_minus_qinv(_alt(2 * i, 2 * i + 1, 1), -1)):
            i += 1
        i = 0
        while emit(delta + nl * i, _times_q_minus_qinv(_alt(2 * i, 2 * i + 1, 1), 1)):
            i += 1
        i = 0
        while emit(gamma + delta + nl * i, _times_q_minus_qinv(_alt(2 * i + 1, 2 * i + 2, 1), 1)):
            i += 1
    return out


def _check_terms(k1, k2, n, terms):
    res = sorted((k1 % n, k2 % n))
    for a, b, _ in terms:
        assert a + b == k1 + k2, "degree not conserved"
        assert k1 <= b < a <= k2, "entry left the interval"
        assert sorted((a % n, b % n)) == res, "residues not conserved"


def _first_infraction(w):
    for i in range(len(w) - 1):
        if w[i] <= w[i + 1]:
            return i
    return -1


def _potential(w):
    p = 0
    for i, x in enumerate(w):
        p += i * x
    return p


def _crowded(w, i):
    """True if a factor of ``w`` touching positions ``i, i+1`` holds more
    letters than there are integers in its range; such a word is zero."""
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
    for j in range(i, len(w)):
        x = w[j]
        if x < lo:
            lo = x
        elif x > hi:
            hi = x
        if hi - lo < j - i:
            return True
    return False


def _mul(f, g):
    if len(f) == 1 and len(g) == 1:
        (e1, c1), = f.items()
        (e2, c2), = g.items()
        return {e1 + e2: c1 * c2}
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _iadd(acc, f):
    for e, c in f.items():
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


class Straightener:
    """Rewrites q-wedge words of a fixed ``(n, l)`` into ordered normal form.

    ``cache`` maps a word to its first-infraction normal form and ``memo``
    maps ``(ordered prefix, letter)`` to the normal form of their product
    (``dict word -> coeff dict`` in both).  Concurrent inserts store identical
    values, so last-writer-wins is safe.
    """

    def __init__(self, n, l, use_cache=True, check=True, prune=True):
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

    def rule(self, k1, k2):
        key = (k1, k2)
        r = self._rules.get(key)
        if r is None:
            r = rule_terms(k1, k2, self.n, self.l)
            if self.check:
                _check_terms(k1, k2, self.n, r)
            self._rules[key] = r
        return r

    def normal_form(self, word):
        """Normal form of ``v_word`` by repeated first-infraction rewriting."""
        word = tuple(word)
        cache = self.cache if self.use_cache else None
        prune = self.prune
        if cache is not None:
            hit = cache.get(word)
            if hit is not None:
                return hit
        if _first_infraction(word) < 0:
            return {word: {0: 1}}
        result = {}
        pending = {word: {0: 1}}
        heap = [(-_potential(word), word)]
        while heap:
            _, w = heappop(heap)
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
            if cache is not None and w is not word:
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
            cache[word] = result
        return result

    def insert(self, prefix, x, memo=None):
        """Normal form of ``v_prefix ^ v_x`` for an ordered ``prefix``.

        The last infraction is rewritten, the larger entry is inserted into the
        shorter prefix and the smaller one into each resulting word.  Results
        are memoized on ``(prefix, x)``.
        """
        if not prefix or prefix[-1] > x:
            return {prefix + (x,): {0: 1}}
        if prefix[-1] == x:
            return {}
        if memo is None:
            memo = self.memo
        key = (prefix, x)
        hit = memo.get(key)
        if hit is not None:
            return hit
        self.rewrites += 1
        head = prefix[:-1]
        out = {}
        for a, b, rc in self.rule(prefix[-1], x):
            for v, c1 in self.insert(head, a, memo).items():
                c1 = _mul(c1, rc)
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
        """Normal form of an arbitrary word.

        By default the word is built one letter at a time with :meth:`insert`;
        ``incremental=False`` runs plain first-infraction rewriting instead.
        """
        word = tuple(word)
        if not incremental:
            return self.normal_form(word)
        memo = self.memo if self.use_cache else {}
        vec = {(): {0: 1}}
        for x in word:
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
