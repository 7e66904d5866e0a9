# -*- coding: utf-8 -*-
"""
Nuclei interi dei polinomi sparsi.

Un polinomio a coefficienti interi in n variabili è un dict
{monomio: coefficiente} dove il monomio è un intero che impacchetta gli
esponenti in campi da FIELD bit, la prima variabile nel campo più
significativo. Con questa scelta il confronto fra interi è esattamente
l'ordine lessicografico, la moltiplicazione di monomi è una somma e
"togliere la prima variabile" è una maschera.

Il bit alto di ogni campo resta libero (esponenti < 2**15): serve come
bit di guardia per il test di divisibilità fra monomi senza spacchettare.

Qui dentro solo interi: i razionali vengono gestiti da MultiPoly, che
porta fuori il contenuto come scalare.
"""

import heapq
import math

FIELD = 16
FIELD_MASK = (1 << FIELD) - 1
MAX_EXPONENT = (1 << (FIELD - 1)) - 1
MAX_VARIABLES = 32
GUARD = sum(1 << (FIELD * i + FIELD - 1) for i in range(MAX_VARIABLES))

# Tentativi del gcd euristico prima di passare alla sequenza dei subrisultanti.
HEU_GCD_MAX = 6


class HeuristicGCDFailed(ArithmeticError):
    """The evaluation/interpolation gcd found no verified candidate."""


def pack(exps):
    m = 0
    for e in exps:
        if e > MAX_EXPONENT:
            raise OverflowError(f"Exponent {e} exceeds the packed field limit {MAX_EXPONENT}.")
        m = (m << FIELD) | e
    return m


def unpack(m, n):
    return tuple((m >> (FIELD * (n - 1 - i))) & FIELD_MASK for i in range(n))


def shift_of(n, i):
    """Bit offset of variable i in an n-variable monomial."""
    return FIELD * (n - 1 - i)


def degree_of(m, n, i):
    return (m >> shift_of(n, i)) & FIELD_MASK


def total_degree(m):
    d = 0
    while m:
        d += m & FIELD_MASK
        m >>= FIELD
    return d


def monomial_divides(a, b):
    """True if the monomial a divides the monomial b."""
    return ((b | GUARD) - a) & GUARD == GUARD


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def sub(f, g):
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def neg(f):
    return {m: -c for m, c in f.items()}


def scale(f, c):
    if not c:
        return {}
    return {m: c * v for m, v in f.items()}


def mul(f, g):
    if not f or not g:
        return {}
    if len(f) > len(g):
        f, g = g, f
    out = {}
    get = out.get
    g_items = list(g.items())
    for m1, c1 in f.items():
        for m2, c2 in g_items:
            m = m1 + m2
            out[m] = get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


def power(f, k):
    result = {0: 1}
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def content(f):
    """Gcd of the coefficients, with the sign of the lex-leading coefficient."""
    if not f:
        return 0
    g = 0
    for c in f.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return -g if f[max(f)] < 0 else g


def primitive(f):
    c = content(f)
    if c in (0, 1):
        return c, f
    return c, {m: v // c for m, v in f.items()}


def max_norm(f):
    return max((abs(c) for c in f.values()), default=0)


def divide_exact(f, g):
    """
    Quoziente esatto f / g, oppure None se g non divide f.

    Divisione sul termine di testa lessicografico con un heap di monomi
    ancora da eliminare; le voci cancellate restano nell'heap e vengono
    saltate quando riemergono.
    """
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}
    lm_g = max(g)
    lc_g = g[lm_g]
    if len(g) == 1:
        q = {}
        for m, c in f.items():
            if not monomial_divides(lm_g, m):
                return None
            qc, rem = divmod(c, lc_g)
            if rem:
                return None
            q[m - lm_g] = qc
        return q

    rest_g = [(m, c) for m, c in g.items() if m != lm_g]
    r = dict(f)
    heap = [-m for m in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        m = -heapq.heappop(heap)
        c = r.pop(m, 0)
        if not c:
            continue
        if not monomial_divides(lm_g, m):
            return None
        qc, rem = divmod(c, lc_g)
        if rem:
            return None
        qm = m - lm_g
        q[qm] = qc
        for mg, cg in rest_g:
            mm = qm + mg
            old = r.get(mm)
            v = (old or 0) - qc * cg
            if v:
                if old is None:
                    heapq.heappush(heap, -mm)
                r[mm] = v
            elif old is not None:
                del r[mm]
    return q


def evaluate(f, n, values, denominator=1):
    """
    Valore di f nel punto values/denominator, come coppia (num, den^N).

    values sono interi; il risultato è numeratore intero e la potenza del
    denominatore comune, così la valutazione resta tutta in aritmetica
    intera.
    """
    if not f:
        return 0, 1
    exps = [(unpack(m, n), c) for m, c in f.items()]
    top = max(sum(e) for e, _ in exps)
    powers = []
    for i in range(n):
        deg = max(e[i] for e, _ in exps)
        row = [1] * (deg + 1)
        for k in range(1, deg + 1):
            row[k] = row[k - 1] * values[i]
        powers.append(row)
    den_powers = [1] * (top + 1)
    for k in range(1, top + 1):
        den_powers[k] = den_powers[k - 1] * denominator
    total = 0
    for e, c in exps:
        term = c * den_powers[top - sum(e)]
        for i, k in enumerate(e):
            if k:
                term *= powers[i][k]
        total += term
    return total, den_powers[top]


def eval_first(f, n, x):
    """Substitute the integer x for the first variable; result has n-1 variables."""
    sh = shift_of(n, 0)
    mask = (1 << sh) - 1
    cache = {}
    out = {}
    for m, c in f.items():
        e = m >> sh
        xp = cache.get(e)
        if xp is None:
            xp = cache[e] = x ** e
        rest = m & mask
        out[rest] = out.get(rest, 0) + c * xp
    return {m: c for m, c in out.items() if c}


def specialize(f, n, keep, values):
    """
    Univariate image of f: every variable except `keep` takes the integer
    value given in `values` (indexed by variable); result is {exponent: coeff}.
    """
    out = {}
    for m, c in f.items():
        e = unpack(m, n)
        term = c
        for i, k in enumerate(e):
            if i != keep and k:
                term *= values[i] ** k
        d = e[keep]
        out[d] = out.get(d, 0) + term
    return {d: c for d, c in out.items() if c}


def _symmetric_mod(c, x):
    r = c % x
    return r - x if r > x // 2 else r


def _interpolate(h, x, n):
    """Rebuild an n-variable polynomial from its image at first variable = x."""
    sh = shift_of(n, 0)
    out = {}
    i = 0
    while h:
        digits = {}
        for m, c in h.items():
            d = _symmetric_mod(c, x)
            if d:
                digits[m] = d
                out[(i << sh) | m] = d
        nxt = {}
        for m, c in h.items():
            v = (c - digits.get(m, 0)) // x
            if v:
                nxt[m] = v
        h = nxt
        i += 1
    if out and out[max(out)] < 0:
        out = neg(out)
    return out


def heugcd(f, g, n):
    """
    Gcd euristico per valutazione e interpolazione.

    Ritorna (h, cff, cfg) con f = h*cff e g = h*cfg, h con coefficiente di
    testa positivo; solleva HeuristicGCDFailed se nessun candidato supera
    la verifica per divisione esatta.
    """
    if n == 0:
        a = f.get(0, 0)
        b = g.get(0, 0)
        h = math.gcd(a, b)
        if h == 0:
            return {}, {}, {}
        return {0: h}, ({0: a // h} if a else {}), ({0: b // h} if b else {})
    if not f and not g:
        return {}, {}, {}
    if not f or not g:
        other = g if not f else f
        c, p = primitive(other)
        sign = 1 if other[max(other)] > 0 else -1
        h = scale(p, abs(c)) if c else p
        if not f:
            return h, {}, {0: sign}
        return h, {0: sign}, {}

    cf, f = primitive(f)
    cg, g = primitive(g)
    common = math.gcd(cf, cg)
    cf //= common
    cg //= common

    f_norm = max_norm(f)
    g_norm = max_norm(g)
    b = 2 * min(f_norm, g_norm) + 29
    x = max(min(b, 99 * math.isqrt(b)),
            2 * min(f_norm // abs(f[max(f)]), g_norm // abs(g[max(g)])) + 4)

    for _ in range(HEU_GCD_MAX):
        ff = eval_first(f, n, x)
        gg = eval_first(g, n, x)
        if ff and gg:
            try:
                h_img, cff_img, cfg_img = heugcd(ff, gg, n - 1)
            except HeuristicGCDFailed:
                h_img = None
            if h_img is not None:
                h = primitive(_interpolate(h_img, x, n))[1]
                cff = divide_exact(f, h)
                if cff is not None:
                    cfg = divide_exact(g, h)
                    if cfg is not None:
                        return scale(h, common), scale(cff, cf), scale(cfg, cg)
                cff = _interpolate(cff_img, x, n)
                h = divide_exact(f, cff) if cff else None
                if h is not None:
                    cfg = divide_exact(g, h)
                    if cfg is not None:
                        return scale(h, common), scale(cff, cf), scale(cfg, cg)
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011

    raise HeuristicGCDFailed("no verified candidate")


def univariate_gcd_degree(f, g):
    """Degree of gcd of two univariate integer polynomials {exp: coeff}."""
    if not f or not g:
        return max(f or g or {0: 0})
    packed_f = {e: c for e, c in f.items()}
    packed_g = {e: c for e, c in g.items()}
    try:
        h = heugcd(packed_f, packed_g, 1)[0]
    except HeuristicGCDFailed:
        return None
    return max(h) if h else 0
