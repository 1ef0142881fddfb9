# cython: language_level=3, boundscheck=False
"""Compiled hot kernels; same API and results as ``_pykernels``."""

from heapq import heapify, heappop, heappush


cpdef bint divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] + <long>b[i]
    return tuple(out)


cpdef tuple mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] - <long>b[i]
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x > y else y
    return tuple(out)


cdef tuple _negkey(object key, tuple m):
    cdef tuple k = key(m)
    cdef Py_ssize_t i, n = len(k)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -<long>k[i]
    return tuple(out)


def normal_form_terms(dict terms, list divisors, object key):
    cdef dict p = dict(terms)
    cdef list heap = [(_negkey(key, m), m) for m in p]
    cdef set queued = set(p)
    cdef dict rem = {}
    cdef tuple m, lead, q, nm, entry
    cdef list tail
    cdef object c, v, tc, tm
    cdef bint reduced
    heapify(heap)
    while heap:
        m = heappop(heap)[1]
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        reduced = False
        for entry in divisors:
            lead = entry[0]
            if divides(lead, m):
                tail = entry[1]
                q = mono_div(m, lead)
                for tm, tc in tail:
                    nm = mono_mul(tm, q)
                    v = p.get(nm, 0) - c * tc
                    if v:
                        p[nm] = v
                        if nm not in queued:
                            queued.add(nm)
                            heappush(heap, (_negkey(key, nm), nm))
                    else:
                        p.pop(nm, None)
                reduced = True
                break
        if not reduced:
            rem[m] = c
    return rem


cpdef list minimalize(gens):
    cdef list out = []
    cdef tuple g, h
    cdef bint keep
    for g in sorted(set(gens), key=sum):
        keep = True
        for h in out:
            if divides(h, g):
                keep = False
                break
        if keep:
            out.append(g)
    return sorted(out)


cdef list _poly_mul(list a, list b):
    cdef Py_ssize_t i, j
    cdef list out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        if a[i]:
            for j in range(len(b)):
                out[i + j] += a[i] * b[j]
    return out


cdef list _poly_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return out


cdef list _numerator(list gens):
    cdef Py_ssize_t i, nv, e, d, best, var
    cdef tuple g
    cdef bint coprime
    cdef list out, f, counts, with_pivot, colon, shifted
    cdef tuple pivot
    if not gens:
        return [1]
    nv = len(gens[0])
    # base case: pairwise coprime generators give prod (1 - t^deg g)
    cdef list used = [False] * nv
    coprime = True
    for g in gens:
        for i in range(nv):
            if <long>g[i] and used[i]:
                coprime = False
                break
        if not coprime:
            break
        for i in range(nv):
            if <long>g[i]:
                used[i] = True
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            f = [0] * (d + 1)
            f[0] = 1
            f[d] -= 1
            out = _poly_mul(out, f)
        return out
    # pivot on the variable occurring in the most non-pure-power generators
    counts = [0] * nv
    for g in gens:
        d = 0
        for i in range(nv):
            if <long>g[i]:
                d += 1
        if d > 1:
            for i in range(nv):
                if <long>g[i]:
                    counts[i] += 1
    var = 0
    best = -1
    for i in range(nv):
        if counts[i] > best:
            best = counts[i]
            var = i
    e = -1
    for g in gens:
        if <long>g[var] and (e < 0 or <long>g[var] < e):
            e = g[var]
    pivot = tuple([e if i == var else 0 for i in range(nv)])
    with_pivot = minimalize(gens + [pivot])
    colon = minimalize([tuple([x - y if x > y else 0 for x, y in zip(g, pivot)]) for g in gens])
    shifted = [0] * e + _numerator(colon)
    return _poly_add(_numerator(with_pivot), shifted)


def hilbert_numerator(gens, nvars):
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != nvars:
            raise ValueError("generator length does not match the number of variables")
    cdef list out = _numerator(minimalize(gens))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
