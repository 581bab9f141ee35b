"""Univariate factorization.

Over the rationals: squarefree decomposition (Yun), factorization modulo a
small prime, Hensel lifting and subset recombination.  Over a prime field:
distinct-degree plus equal-degree (Cantor-Zassenhaus) splitting.  Over a
one-parameter rational function field only the patterns the analyzer needs
are certified (monomials, Eisenstein at a small prime of F_p[s], and
inseparable binomials X^(p^e) - c); anything else is left unresolved and
flagged.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from ..fields import (
    PrimeField,
    RationalField,
    RationalFunctionField,
)
from .multipoly import MultiPoly


class FactorizationError(Exception):
    pass


class Factorization:
    """unit * prod(factor^multiplicity); factors monic, pairwise non-associate.

    ``complete`` is False when part of the input could not be factored (only
    possible over a rational function field); the unfactored remainder is then
    listed in ``unresolved`` as (polynomial, multiplicity) pairs.
    """

    def __init__(self, unit, factors, unresolved=(), vars=("X",)):
        self.unit = unit
        self.factors = list(factors)
        self.unresolved = list(unresolved)
        if self.factors or self.unresolved:
            vars = (self.factors or self.unresolved)[0][0].vars
        self.vars = vars

    @property
    def complete(self):
        return not self.unresolved

    def expand(self):
        acc = MultiPoly.constant(self.unit.field, self.vars, self.unit)
        for f, m in list(self.factors) + list(self.unresolved):
            acc = acc * f**m
        return acc

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        parts = [f"({f}, {m})" for f, m in self.factors]
        parts += [f"unresolved({f}, {m})" for f, m in self.unresolved]
        return f"Factorization(unit={self.unit}, {', '.join(parts)})"


# ---------------------------------------------------------------------------
# dense integer-polynomial helpers (low degree first, plain ints)
# ---------------------------------------------------------------------------


def _ztrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ztrim(out)


def _zcontent(a):
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g or 1


def _zprimitive(a):
    g = _zcontent(a)
    if a and a[-1] < 0:
        g = -g
    return [x // g for x in a], g


def _zdivide_exact(a, b):
    """Exact division of integer polynomials, or None."""
    if not b:
        return None
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        if a[-1] % b[-1]:
            return None
        c = a[-1] // b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        a = _ztrim(a)
    return q if not a else None


# ---------------------------------------------------------------------------
# F_p dense helpers and factorization
# ---------------------------------------------------------------------------


def _ptrim(a, p):
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out, p)


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while a and len(a) >= len(b):
        c = (a[-1] * inv) % p
        shift = len(a) - len(b)
        q[shift] = c
        for i in range(len(b)):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        a = _ptrim(a, p)
    return _ptrim(q, p), a


def _pgcd(a, b, p):
    a, b = _ptrim(a, p), _ptrim(b, p)
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def _pmonic(a, p):
    a = _ptrim(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [(x * inv) % p for x in a]


def _pderiv(a, p):
    return _ptrim([(i * a[i]) % p for i in range(1, len(a))], p)


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _pdivmod(_pmul(base, base, p), mod, p)[1]
    return result


def _p_squarefree_decomposition(a, p):
    """[(g_i, m_i)] with a = prod g_i^m_i, g_i monic squarefree, char-p aware."""
    a = _pmonic(a, p)
    if len(a) <= 1:
        return []
    out = []
    d = _pderiv(a, p)
    if not d:
        # a = h(X^p) = (h')^p with coefficients fixed by Frobenius
        root = [a[i] for i in range(0, len(a), p)]
        for g, m in _p_squarefree_decomposition(root, p):
            out.append((g, m * p))
        return out
    g = _pgcd(a, d, p)
    w, _ = _pdivmod(a, g, p)
    m = 1
    while len(w) > 1:
        y = _pgcd(w, g, p)
        z, _ = _pdivmod(w, y, p)
        if len(z) > 1:
            out.append((z, m))
        w = y
        g, _ = _pdivmod(g, y, p)
        m += 1
    if len(g) > 1:
        # g carries the factors of p-divisible multiplicity with their full
        # exponents; its derivative vanishes, so the recursion takes the
        # p-th-root branch and returns the true multiplicities directly
        out.extend(_p_squarefree_decomposition(g, p))
    return out


def _p_distinct_degree(a, p):
    """[(product-of-irreducibles-of-degree-d, d)] for monic squarefree a."""
    out = []
    x = [0, 1]
    h = x
    f = list(a)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, f, p)
        g = _pgcd([(hi - xi) % p for hi, xi in _zip_pad(h, x, p)], f, p)
        if len(g) > 1:
            out.append((g, d))
            f, _ = _pdivmod(f, g, p)
            h = _pdivmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _zip_pad(a, b, p):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _p_equal_degree(a, d, p, rng):
    """Split monic squarefree a (all factors of degree d) into irreducibles."""
    n = len(a) - 1
    if n == d:
        return [a]
    while True:
        r = [rng.randrange(p) for _ in range(n)] + [1]
        if p == 2:
            # trace map over F_2
            t = list(r)
            acc = list(r)
            for _ in range(d - 1):
                acc = _ppowmod(acc, 2, a, 2)
                t = _ptrim([(x + y) % 2 for x, y in _zip_pad(t, acc, 2)], 2)
            g = _pgcd(t, a, 2)
        else:
            e = (p**d - 1) // 2
            t = _ppowmod(r, e, a, p)
            t = _ptrim([(x - y) % p for x, y in _zip_pad(t, [1], p)], p)
            g = _pgcd(t, a, p)
        if 1 < len(g) < len(a):
            h, _ = _pdivmod(a, g, p)
            return _p_equal_degree(g, d, p, rng) + _p_equal_degree(h, d, p, rng)


def factor_mod_p(coeffs, p, rng=None):
    """Full monic factorization over F_p: returns (unit, [(dense, mult)])."""
    rng = rng or random.Random(20240901)
    a = _ptrim(coeffs, p)
    if not a:
        raise FactorizationError("cannot factor the zero polynomial")
    unit = a[-1]
    a = _pmonic(a, p)
    factors = []
    for g, m in _p_squarefree_decomposition(a, p):
        for h, d in _p_distinct_degree(g, p):
            for irr in _p_equal_degree(h, d, p, rng):
                factors.append((irr, m))
    factors.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return unit, factors


# ---------------------------------------------------------------------------
# rational factorization (Zassenhaus)
# ---------------------------------------------------------------------------

_SMALL_PRIMES = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
]


def _yun_squarefree(a):
    """Yun's squarefree decomposition for primitive integer polynomials."""
    out = []
    d = _ztrim([i * a[i] for i in range(1, len(a))])
    g = _zgcd_poly(a, d)
    if len(g) == 1:
        return [(a, 1)]
    w = _zdivide_exact(a, g)
    y = _zdivide_exact(d, g)
    m = 1
    while True:
        wd = _ztrim([i * w[i] for i in range(1, len(w))])
        z = _ztrim([yi - wi for yi, wi in _izip_pad(y, wd)])
        if not z:
            if len(w) > 1:
                out.append((w, m))
            break
        g = _zgcd_poly(w, z)
        if len(g) > 1:
            out.append((g, m))
        w = _zdivide_exact(w, g)
        y = _zdivide_exact(z, g)
        m += 1
    return out


def _izip_pad(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _zgcd_poly(a, b):
    """Primitive gcd of integer polynomials via a modular-free PRS."""
    a, _ = _zprimitive(_ztrim(a))
    b, _ = _zprimitive(_ztrim(b))
    if not a:
        return b or [1]
    if not b:
        return a
    while b:
        # pseudo-remainder
        r = list(a)
        db = len(b) - 1
        lb = b[-1]
        while r and len(r) - 1 >= db:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for i in range(len(b)):
                r[shift + i] -= c * b[i]
            r = _ztrim(r)
        a, b = b, _zprimitive(r)[0] if r else []
    a, _ = _zprimitive(a)
    return a


def _zadd_scalar(a, b, c):
    """a + b + c (c added to constant coefficient)."""
    out = [x + y for x, y in _izip_pad(a, b)]
    if out:
        out[0] += c
    else:
        out = [c]
    return _ztrim(out)


def _zdivmod_mod(a, b, m):
    """Division of integer polys mod m; b must be monic mod m."""
    a = [x % m for x in a]
    b = [x % m for x in b]
    b = _ztrim(b)
    assert b and b[-1] % m == 1, "divisor must be monic mod m"
    q = [0] * max(0, len(a) - len(b) + 1)
    a = list(a)
    while True:
        a = _ztrim([x % m for x in a])
        if not a or len(a) < len(b):
            break
        c = a[-1] % m
        shift = len(a) - len(b)
        q[shift] = (q[shift] + c) % m
        for i in range(len(b)):
            a[shift + i] = (a[shift + i] - c * b[i]) % m
    return _ztrim([x % m for x in q]), a


def _p_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = _ptrim(g, p), _ptrim(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _ptrim([(x - y) % p for x, y in _zip_pad(s0, _pmul(q, s1, p), p)], p)
        t0, t1 = t1, _ptrim([(x - y) % p for x, y in _zip_pad(t0, _pmul(q, t1, p), p)], p)
    assert len(r0) == 1, "inputs are not coprime mod p"
    inv = pow(r0[0], -1, p)
    return [(x * inv) % p for x in s0], [(x * inv) % p for x in t0]


def _mignotte_bound(a):
    n = len(a) - 1
    norm = math.isqrt(sum(x * x for x in a)) + 1
    return 2 ** (n + 1) * norm * abs(a[-1])


def _centered(x, m):
    x %= m
    return x - m if x > m // 2 else x


def _factor_squarefree_z(a, rng):
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = len(a) - 1
    if n <= 0:
        return []
    if n == 1:
        return [a]
    for p in _SMALL_PRIMES:
        if a[-1] % p == 0:
            continue
        am = _ptrim(a, p)
        if len(am) - 1 != n:
            continue
        if len(_pgcd(am, _pderiv(am, p), p)) == 1:
            break
    else:
        raise FactorizationError("no suitable prime found for reduction")
    _, modular = factor_mod_p(a, p, rng)
    modular = [f for f, _ in modular]
    if len(modular) == 1:
        return [a]
    bound = 2 * _mignotte_bound(a) + 1
    k = 1
    while p**k < bound:
        k += 1
    lifted = _hensel_lift_tree(a, modular, p, k)
    pk = p**k

    factors = []
    remaining = list(range(len(lifted)))
    current = list(a)
    size = 1
    while 2 * size <= len(remaining):
        found = True
        while found:
            found = False
            for subset in _subsets(remaining, size):
                cand = [current[-1] % pk]
                for i in subset:
                    cand = [x % pk for x in _zmul(cand, lifted[i])]
                cand = [_centered(x, pk) for x in cand]
                cand_prim, _ = _zprimitive(_ztrim(cand))
                if not cand_prim or len(cand_prim) == 1:
                    continue
                q = _zdivide_exact(current, cand_prim)
                if q is not None:
                    factors.append(cand_prim)
                    current = q
                    remaining = [i for i in remaining if i not in subset]
                    found = True
                    break
            if 2 * size > len(remaining):
                break
        size += 1
    if len(current) > 1:
        factors.append(_zprimitive(current)[0])
    return factors


def _subsets(items, size):
    import itertools

    return itertools.combinations(items, size)


def _hensel_lift_tree(f, factors, p, k):
    """Lift the monic factors of f mod p to mod p^k (binary splitting)."""
    if len(factors) == 1:
        # single factor: f = lc * g mod p^k with g monic; recover g from f
        pk = p**k
        inv = pow(f[-1], -1, pk)
        return [[(x * inv) % pk for x in f]]
    mid = len(factors) // 2
    g = [1]
    for fac in factors[:mid]:
        g = _pmul(g, fac, p)
    h = [1]
    for fac in factors[mid:]:
        h = _pmul(h, fac, p)
    # make f monic mod p^k for the pair lift, then push lc back later
    pk = p**k
    inv = pow(f[-1], -1, pk)
    f_monic = [(x * inv) % pk for x in f]
    G, H = _hensel_pair(f_monic, g, h, p, k)
    left = _hensel_lift_tree(G, factors[:mid], p, k)
    right = _hensel_lift_tree(H, factors[mid:], p, k)
    return left + right


def _hensel_pair(f, g, h, p, k):
    """Quadratic Hensel: f = g*h mod p with f, g, h monic -> mod p^k."""
    s, t = _p_bezout(g, h, p)
    q = p
    target = p**k
    g, h, s, t = list(g), list(h), list(s), list(t)
    while q < target:
        q2 = q * q
        e = _ztrim([x % q2 for x in (_zsub(f, _zmul(g, h)))])
        qg, r = _zdivmod_mod(_zmul(s, e), h, q2)
        h_new = _ztrim([(x + y) % q2 for x, y in _izip_pad(h, r)])
        g_new = _ztrim(
            [
                (x + y) % q2
                for x, y in _izip_pad(g, _zadd(_zmul(t, e), _zmul(qg, g)))
            ]
        )
        g, h = g_new, h_new
        b = _ztrim([x % q2 for x in _zadd_scalar(_zadd(_zmul(s, g), _zmul(t, h)), [], -1)])
        qs, r_s = _zdivmod_mod(_zmul(s, b), h, q2)
        s_new = _ztrim([(x - y) % q2 for x, y in _izip_pad(s, r_s)])
        t_new = _ztrim(
            [
                (x - y) % q2
                for x, y in _izip_pad(t, _zadd(_zmul(t, b), _zmul(qs, g)))
            ]
        )
        s, t = s_new, t_new
        q = q2
    return g, h


def _zadd(a, b):
    return _ztrim([x + y for x, y in _izip_pad(a, b)])


def _zsub(a, b):
    return _ztrim([x - y for x, y in _izip_pad(a, b)])


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def univariate_factor(poly, rng=None, var=None):
    """Complete irreducible factorization of a univariate polynomial.

    Supported coefficient fields: the rationals, prime fields, and (with the
    documented pattern restrictions) one-parameter rational function fields.
    Factors are monic; the unit collects the leading coefficient.
    """
    if poly.is_zero():
        raise FactorizationError("cannot factor the zero polynomial")
    field = poly.field
    used = [v for v in poly.vars if poly.involves(v)]
    if len(used) > 1:
        raise FactorizationError("polynomial is not univariate")
    if var is None:
        var = used[0] if used else poly.vars[0]
    rng = rng or random.Random(20240901)

    if isinstance(field, RationalField):
        return _factor_over_q(poly, var, rng)
    if isinstance(field, PrimeField):
        return _factor_over_gfp(poly, var, rng)
    if isinstance(field, RationalFunctionField):
        return _factor_over_rff(poly, var)
    raise FactorizationError(
        f"univariate factorization over {field} is not supported"
    )


def _factor_over_q(poly, var, rng):
    coeffs = poly.to_dense(var)
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.rep.denominator // math.gcd(den_lcm, c.rep.denominator)
    ints = [int(c.rep * den_lcm) for c in coeffs]
    prim, content = _zprimitive(_ztrim(ints))
    unit_value = Fraction(content, den_lcm)
    field = poly.field
    factors = []
    for sf, mult in _yun_squarefree(prim):
        sf_prim, extra = _zprimitive(sf)
        unit_value *= Fraction(extra) ** mult
        for irr in _factor_squarefree_z(sf_prim, rng):
            lc = irr[-1]
            unit_value *= Fraction(lc) ** mult
            monic = [Fraction(x, lc) for x in irr]
            factors.append(
                (MultiPoly.from_dense(field, poly.vars, var, monic), mult)
            )
    factors.sort(key=lambda fm: (fm[0].total_degree(), str(fm[0])))
    return Factorization(field.element(unit_value), factors, vars=poly.vars)


def _factor_over_gfp(poly, var, rng):
    field = poly.field
    p = field.p
    coeffs = [c.rep for c in poly.to_dense(var)]
    unit, dense_factors = factor_mod_p(coeffs, p, rng)
    factors = [
        (MultiPoly.from_dense(field, poly.vars, var, f), m)
        for f, m in dense_factors
    ]
    return Factorization(field.element(unit), factors, vars=poly.vars)


def _factor_over_rff(poly, var):
    """Restricted factorization over F_p(s); may return unresolved parts."""
    field = poly.field
    p = field.p
    coeffs = poly.to_dense(var)
    unit = field.one()
    # strip X-monomial content
    low = 0
    while coeffs and coeffs[low].is_zero():
        low += 1
    factors = []
    if low:
        factors.append((MultiPoly.variable(field, poly.vars, var), low))
        coeffs = coeffs[low:]
    lc = coeffs[-1]
    unit = unit * lc
    coeffs = [c / lc for c in coeffs]
    if len(coeffs) == 1:
        return Factorization(unit, factors, vars=poly.vars)
    body = MultiPoly.from_dense(field, poly.vars, var, coeffs)
    if len(coeffs) == 2:
        factors.append((body, 1))
        return Factorization(unit, factors, vars=poly.vars)
    if _rff_is_irreducible(field, coeffs):
        factors.append((body, 1))
        return Factorization(unit, factors, vars=poly.vars)
    # try to split off roots in F_p (cheap trial divisions)
    unresolved = []
    changed = True
    current = coeffs
    while changed and len(current) > 2:
        changed = False
        for c0 in range(p):
            root = field.from_int(c0)
            val = field.zero()
            for c in reversed(current):
                val = val * root + c
            if val.is_zero():
                lin = [-root, field.one()]
                current = _rff_exact_div(field, current, lin)
                factors.append(
                    (
                        MultiPoly.from_dense(field, poly.vars, var, lin),
                        1,
                    )
                )
                changed = True
                break
    if len(current) == 2:
        factors.append(
            (MultiPoly.from_dense(field, poly.vars, var, current), 1)
        )
    elif len(current) > 2:
        if _rff_is_irreducible(field, current):
            factors.append(
                (MultiPoly.from_dense(field, poly.vars, var, current), 1)
            )
        else:
            unresolved.append(
                (MultiPoly.from_dense(field, poly.vars, var, current), 1)
            )
    merged = {}
    for f, m in factors:
        key = str(f)
        if key in merged:
            g, old = merged[key]
            merged[key] = (g, old + m)
        else:
            merged[key] = (f, m)
    return Factorization(unit, list(merged.values()), unresolved, vars=poly.vars)


def _rff_exact_div(field, a, b):
    out = []
    a = list(a)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        out.append(c)
        shift = len(a) - len(b)
        for i in range(len(b)):
            a[shift + i] = a[shift + i] - c * b[i]
        while a and a[-1].is_zero():
            a.pop()
    out.reverse()
    return out


def _rff_is_irreducible(field, coeffs):
    """Certify irreducibility over F_p(s) for the supported patterns.

    Patterns: binomials X^(p^e) - c with c not a p-th power, and Eisenstein
    at s or s - c (after clearing denominators).  Returns True only when
    certified.
    """
    p = field.p
    n = len(coeffs) - 1
    # inseparable binomial X^(p^e) - c
    if n >= 2 and all(coeffs[i].is_zero() for i in range(1, n)):
        e = 0
        m = n
        while m % p == 0:
            m //= p
            e += 1
        if m == 1 and e >= 1:
            c = -coeffs[0]
            probe = c
            has_root = True
            for _ in range(e):
                r = field.pth_root(probe)
                if r is None:
                    has_root = False
                    break
                probe = r
            if not has_root and field.pth_root(c) is None:
                return True
    # Eisenstein at small primes of F_p[s]
    base = field.base
    dens = [c.rep[1] for c in coeffs]
    lcm = (1 % p,)
    from ..fields import _dense_divmod, _dense_gcd, _dense_mul

    for d in dens:
        g = _dense_gcd(base, lcm, d)
        q, _ = _dense_divmod(base, d, g)
        lcm = _dense_mul(base, lcm, q)
    cleared = []
    for c in coeffs:
        num, den = c.rep
        q, r = _dense_divmod(base, lcm, den)
        assert not r
        cleared.append(_dense_mul(base, num, q))
    eisenstein_primes = [(0, 1)] + [((p - c) % p, 1) for c in range(p)]
    seen = set()
    for pi in eisenstein_primes:
        if pi in seen:
            continue
        seen.add(pi)
        def vmod(poly):
            _, r = _dense_divmod(base, poly, pi)
            return r
        if vmod(cleared[-1]):
            ok = all(not vmod(c) for c in cleared[:-1])
            if ok and cleared:
                # p^2 must not divide the constant term
                q, r = _dense_divmod(base, cleared[0], pi)
                if not r:
                    _, r2 = _dense_divmod(base, q, pi)
                    if r2:
                        return True
    return False


def certify_irreducible_univariate(field, dense_reps, varname="g"):
    """Return None when the monic dense polynomial is certified irreducible,
    otherwise a string naming a nontrivial factor (or describing failure).

    Used by field-extension construction.
    """
    elems = [field.element(r) for r in dense_reps]
    poly = MultiPoly.from_dense(field, (varname,), varname, elems)
    if isinstance(field, RationalFunctionField):
        coeffs = poly.to_dense(varname)
        if len(coeffs) == 2:
            return None
        if _rff_is_irreducible(field, [c / coeffs[-1] for c in coeffs]):
            return None
        # find certificate of reducibility: roots in F_p
        p = field.p
        for c0 in range(p):
            root = field.from_int(c0)
            val = field.zero()
            for c in reversed(coeffs):
                val = val * root + c
            if val.is_zero():
                return f"{varname}-{c0}" if c0 else varname
        return (
            "irreducibility could not be certified over "
            f"{field} (unsupported pattern)"
        )
    fact = univariate_factor(poly)
    if len(fact.factors) == 1 and fact.factors[0][1] == 1:
        return None
    f0, m0 = fact.factors[0]
    if m0 > 1 or len(fact.factors) > 1:
        return str(f0)
    return None
