"""Pure-Python hot kernels: monomial divisibility, multivariate division, staircase numerators.

Monomials are tuples of nonnegative exponents. ``_ckernels.pyx`` implements the
same functions with the same signatures; ``conering.kernels`` picks one at import.
"""

from heapq import heapify, heappop, heappush


def divides(a, b):
    """True when monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def normal_form_terms(terms, divisors, key):
    """Full remainder of ``terms`` under division by monic ``divisors``.

    terms    -- dict monomial -> coefficient
    divisors -- list of (leading monomial, [(monomial, coefficient), ...] tail)
    key      -- monomial -> tuple of ints, larger tuple = larger monomial

    The greatest remaining monomial is processed first and reduced by the
    first divisor (in list order) whose leading monomial divides it.
    """
    p = dict(terms)
    heap = [(tuple([-k for k in key(m)]), m) for m in p]
    heapify(heap)
    queued = set(p)
    rem = {}
    while heap:
        m = heappop(heap)[1]
        queued.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        for lead, tail in divisors:
            if divides(lead, m):
                q = mono_div(m, lead)
                for tm, tc in tail:
                    nm = mono_mul(tm, q)
                    v = p.get(nm, 0) - c * tc
                    if v:
                        p[nm] = v
                        if nm not in queued:
                            queued.add(nm)
                            heappush(heap, (tuple([-k for k in key(nm)]), nm))
                    else:
                        p.pop(nm, None)
                break
        else:
            rem[m] = c
    return rem


def minimalize(gens):
    """Minimal generators of the monomial ideal spanned by gens, sorted."""
    out = []
    for g in sorted(set(gens), key=sum):
        if not any(divides(h, g) for h in out):
            out.append(g)
    return sorted(out)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _numerator(gens):
    if not gens:
        return [1]
    # base case: pairwise coprime generators give prod (1 - t^deg g)
    support = [{i for i, e in enumerate(g) if e} for g in gens]
    seen = set()
    coprime = True
    for s in support:
        if seen & s:
            coprime = False
            break
        seen |= s
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
    counts = {}
    for s in support:
        if len(s) > 1:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    var = max(sorted(counts), key=lambda i: counts[i])
    e = min(g[var] for g in gens if g[var])
    pivot = tuple([e if i == var else 0 for i in range(len(gens[0]))])
    with_pivot = minimalize(list(gens) + [pivot])
    colon = minimalize([tuple([x - y if x > y else 0 for x, y in zip(g, pivot)]) for g in gens])
    shifted = [0] * e + _numerator(colon)
    return _poly_add(_numerator(with_pivot), shifted)


def hilbert_numerator(gens, nvars):
    """K(t) with HS(S/I) = K(t)/(1-t)^nvars for the monomial ideal I = (gens)."""
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != nvars:
            raise ValueError("generator length does not match the number of variables")
    out = _numerator(minimalize(gens))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
