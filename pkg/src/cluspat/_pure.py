"""Pure-Python term-map kernels.

A term map is a dict from a combined exponent tuple to a nonzero integer
coefficient.  These functions are the hot inner loops of the engine;
``cluspat._speedups`` is a compiled drop-in replacement and
``cluspat._kernels`` picks the backend at import time.
"""


def tuple_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def min_exponents(terms):
    # componentwise minimum over all keys; terms must be nonempty
    it = iter(terms)
    lo = list(next(it))
    for key in it:
        for i, e in enumerate(key):
            if e < lo[i]:
                lo[i] = e
    return tuple(lo)


def add_terms(a, b):
    if len(b) > len(a):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def scale_terms(terms, c):
    # c must be nonzero
    return {k: c * v for k, v in terms.items()}


def shift_terms(terms, shift):
    return {tuple_add(k, shift): v for k, v in terms.items()}


def mul_terms(a, b):
    if not a or not b:
        return {}
    if len(b) > len(a):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sub_scaled_inplace(r, q, c, shift):
    """r -= c * x^shift * q, in place; returns keys left with nonzero entries."""
    touched = []
    for kq, cq in q.items():
        k = tuple_add(kq, shift)
        s = r.get(k, 0) - c * cq
        if s:
            r[k] = s
            touched.append(k)
        else:
            r.pop(k, None)
    return touched
