"""Division, S-polynomials, Buchberger's algorithm, reduced Groebner bases.

The public surface works with ``Polynomial`` values.  Internally the
computation runs on raw ``{packed monomial: coefficient}`` dicts with two
coefficient strategies:

* prime field: coefficients are ints in [0, p), basis elements kept monic;
* rationals: coefficients are ints, every polynomial kept primitive
  (content-free) and reductions are fraction-free, so no Fraction ever enters
  the hot loop.  Content is stripped after each full reduction.

Pair management is Gebauer-Moeller: the coprime-leading-monomial skip plus
the chain criteria, with the normal selection strategy (smallest lcm degree
first, ties broken by the packed lcm, then by pair index) so runs are
deterministic.
"""

import heapq
import time
from fractions import Fraction
from math import gcd

from .errors import BudgetExceeded, InvalidDivisor, InvalidInput
from .rings import Polynomial


class Budget:
    """Explicit resource limits for a Groebner run."""

    def __init__(self, seconds=None, max_pairs=None, max_reductions=None):
        self.seconds = seconds
        self.max_pairs = max_pairs
        self.max_reductions = max_reductions
        self._t0 = time.monotonic()
        self._pairs = 0
        self._reductions = 0

    def pair(self):
        self._pairs += 1
        if self.max_pairs is not None and self._pairs > self.max_pairs:
            raise BudgetExceeded("pair budget %d exhausted" % self.max_pairs)
        if self.seconds is not None and self._pairs % 64 == 0 \
                and time.monotonic() - self._t0 > self.seconds:
            raise BudgetExceeded("time budget %.1fs exhausted" % self.seconds)

    def reduction_step(self):
        self._reductions += 1
        if self.max_reductions is not None and self._reductions > self.max_reductions:
            raise BudgetExceeded("reduction budget %d exhausted" % self.max_reductions)
        if self.seconds is not None and self._reductions % 1024 == 0 \
                and time.monotonic() - self._t0 > self.seconds:
            raise BudgetExceeded("time budget %.1fs exhausted" % self.seconds)


# ---------------------------------------------------------------------------
# public textbook operations
# ---------------------------------------------------------------------------

class DivisionResult:
    """Quotients and remainder with f = sum(q_i * f_i) + r."""

    def __init__(self, quotients, remainder):
        self.quotients = quotients
        self.remainder = remainder

    def recombine(self, divisors):
        acc = self.remainder
        for q, g in zip(self.quotients, divisors):
            acc = acc + q * g
        return acc


def multivariate_division(f, divisors):
    """Divide f by an ordered list of divisors (classical algorithm).

    Deterministic: at each step the first divisor whose leading term divides
    the current leading term is used; otherwise the leading term moves to the
    remainder.
    """
    ring = f.ring
    field = ring.field
    for g in divisors:
        if g.is_zero():
            raise InvalidDivisor("zero divisor polynomial")
        if g.ring is not ring:
            raise InvalidDivisor("divisor from a different ring")
    lts = [g.lt() for g in divisors]
    quotients = [dict() for _ in divisors]
    remainder = {}
    work = dict(f._d)
    divides = ring.mono_divides
    while work:
        t = max(work)
        c = work.pop(t)
        for i, (lm, lc) in enumerate(lts):
            if divides(lm, t):
                shift = t - lm
                q = field.div(c, lc)
                acc = field.add(quotients[i].get(shift, field.zero), q)
                if field.is_zero(acc):
                    quotients[i].pop(shift, None)
                else:
                    quotients[i][shift] = acc
                for m, cv in divisors[i]._d.items():
                    if m == lm:
                        continue
                    key = m + shift
                    v = field.sub(work.get(key, field.zero), field.mul(q, cv))
                    if field.is_zero(v):
                        work.pop(key, None)
                    else:
                        work[key] = v
                break
        else:
            remainder[t] = c
    return DivisionResult([Polynomial(ring, q) for q in quotients],
                          Polynomial(ring, remainder))


def s_polynomial(f, g):
    """S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g for the leading-monomial lcm."""
    if f.is_zero() or g.is_zero():
        raise InvalidInput("S-polynomial of a zero polynomial")
    ring = f.ring
    if g.ring is not ring:
        raise InvalidInput("operands from different rings")
    field = ring.field
    mf, cf = f.lt()
    mg, cg = g.lt()
    lcm = ring.mono_lcm(mf, mg)
    d = {}
    inv_cf = field.inv(cf)
    for m, c in f._d.items():
        d[m + lcm - mf] = field.mul(c, inv_cf)
    inv_cg = field.inv(cg)
    for m, c in g._d.items():
        key = m + lcm - mg
        v = field.sub(d.get(key, field.zero), field.mul(c, inv_cg))
        if field.is_zero(v):
            d.pop(key, None)
        else:
            d[key] = v
    return Polynomial(ring, d)


# ---------------------------------------------------------------------------
# raw engines
# ---------------------------------------------------------------------------

def _strip_content(d):
    """Divide an integer-coefficient dict by its content, positive lead."""
    if not d:
        return d
    g = 0
    for c in d.values():
        g = gcd(g, c)
        if g == 1:
            break
    if d[max(d)] < 0:
        g = -g
    if g != 1:
        return {m: c // g for m, c in d.items()}
    return d


class _RationalEngine:
    """Fraction-free arithmetic on primitive integer-coefficient dicts."""

    def __init__(self, ring):
        self.ring = ring

    def prepare(self, poly_dict):
        den = 1
        for c in poly_dict.values():
            den = den * c.denominator // gcd(den, c.denominator)
        return _strip_content({m: int(c * den) for m, c in poly_dict.items()})

    def finish(self, d):
        lead = d[max(d)]
        return {m: Fraction(c, lead) for m, c in d.items()}

    def reduce(self, f, lts, lcs, tails, budget=None, skip=-1):
        """Full normal form of f (destroyed) against the basis arrays.

        Returns a primitive integer dict equal to the true normal form up to
        a positive rational factor.
        """
        guard = self.ring.guard_mask
        out = {}
        nb = len(lts)
        steps = 0
        while f:
            t = max(f)
            c = f.pop(t)
            if c == 0:
                continue
            hit = -1
            for i in range(nb):
                if i != skip and not (t - lts[i]) & guard:
                    hit = i
                    break
            if hit < 0:
                out[t] = c
                continue
            if budget is not None:
                budget.reduction_step()
            shift = t - lts[hit]
            a = lcs[hit]
            if a != 1:
                for k in f:
                    f[k] *= a
                for k in out:
                    out[k] *= a
            for m, cv in tails[hit]:
                key = m + shift
                v = f.get(key, 0) - c * cv
                if v:
                    f[key] = v
                else:
                    f.pop(key, None)
            steps += 1
            if steps % 64 == 0 and f:
                # joint content strip keeps the integers small mid-reduction
                g = 0
                for c2 in f.values():
                    g = gcd(g, c2)
                    if g == 1:
                        break
                if g != 1:
                    for c2 in out.values():
                        g = gcd(g, c2)
                        if g == 1:
                            break
                if g > 1:
                    f = {m: c2 // g for m, c2 in f.items()}
                    out = {m: c2 // g for m, c2 in out.items()}
        return _strip_content(out)

    def spair(self, i, j, lts, lcs, tails, lcm):
        f = {lcm: lcs[i]}
        si = lcm - lts[i]
        for m, c in tails[i]:
            f[m + si] = c
        # now f = (lcm/lt_i) * g_i up to the leading coefficient layout
        sj = lcm - lts[j]
        a, b = lcs[j], lcs[i]
        # a*f_i_part - b*g_j aligned at lcm; leads cancel by construction
        out = {}
        for m, c in f.items():
            out[m] = a * c
        out.pop(lcm)
        for m, c in tails[j]:
            key = m + sj
            v = out.get(key, 0) - b * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return _strip_content(out)


class _PrimeEngine:
    """Monic arithmetic on int dicts mod p."""

    def __init__(self, ring, p):
        self.ring = ring
        self.p = p

    def prepare(self, poly_dict):
        p = self.p
        d = {m: c % p for m, c in poly_dict.items() if c % p}
        if not d:
            return d
        inv = pow(d[max(d)], -1, p)
        if inv != 1:
            d = {m: c * inv % p for m, c in d.items()}
        return d

    def finish(self, d):
        return d

    def reduce(self, f, lts, lcs, tails, budget=None, skip=-1):
        p = self.p
        guard = self.ring.guard_mask
        out = {}
        nb = len(lts)
        while f:
            t = max(f)
            c = f.pop(t)
            if not c:
                continue
            hit = -1
            for i in range(nb):
                if i != skip and not (t - lts[i]) & guard:
                    hit = i
                    break
            if hit < 0:
                out[t] = c
                continue
            if budget is not None:
                budget.reduction_step()
            shift = t - lts[hit]
            for m, cv in tails[hit]:
                key = m + shift
                v = (f.get(key, 0) - c * cv) % p
                if v:
                    f[key] = v
                else:
                    f.pop(key, None)
        return out

    def spair(self, i, j, lts, lcs, tails, lcm):
        p = self.p
        out = {}
        si = lcm - lts[i]
        for m, c in tails[i]:
            out[m + si] = c
        sj = lcm - lts[j]
        for m, c in tails[j]:
            key = m + sj
            v = (out.get(key, 0) - c) % p
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return out


def _engine_for(ring):
    if ring.field.characteristic == 0:
        return _RationalEngine(ring)
    return _PrimeEngine(ring, ring.field.characteristic)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _interreduce(engine, ding):
    """One ascending pass of input cleanup: each generator is fully reduced
    against the ones already kept.  Safe (never loses the ideal) and cheap;
    the final auto-reduction happens after Buchberger terminates."""
    ding = sorted((d for d in ding if d), key=max)
    kept, lts, lcs, tails = [], [], [], []
    for d in ding:
        if kept:
            d = engine.reduce(dict(d), lts, lcs, tails)
            d = _renorm(engine, d)
        if d:
            kept.append(d)
            lts.append(max(d))
            lcs.append(d[max(d)])
            tails.append(tuple((m, c) for m, c in d.items() if m != max(d)))
    return kept


def _renorm(engine, d):
    if not d:
        return d
    if isinstance(engine, _PrimeEngine):
        inv = pow(d[max(d)], -1, engine.p)
        if inv != 1:
            return {m: c * inv % engine.p for m, c in d.items()}
        return d
    return _strip_content(d)


def buchberger(generators, budget=None):
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Applies the coprime-leading-monomial skip and the Gebauer-Moeller chain
    criteria; pair selection is the normal strategy.  Raises BudgetExceeded
    when the optional budget runs out.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise InvalidInput("need at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring is not ring:
            raise InvalidInput("generators from different rings")
    engine = _engine_for(ring)

    basis = []
    seen = set()
    for g in gens:
        d = engine.prepare(g._d)
        if d:
            key = tuple(sorted(d.items()))
            if key not in seen:
                seen.add(key)
                basis.append(d)
    basis = _interreduce(engine, basis)
    if not basis:
        return GroebnerBasis(ring, ())

    lts = [max(d) for d in basis]
    lcs = [d[max(d)] for d in basis]
    tails = [tuple((m, c) for m, c in d.items() if m != max(d)) for d in basis]
    lcm_of = ring.mono_lcm
    mono_deg = ring.mono_degree

    pairs = {}          # (i, j) -> lcm, i < j
    heap = []

    def push_pairs(t):
        """Gebauer-Moeller update for the arrival of basis element t."""
        lt_t = lts[t]
        cand = {}
        for i in range(t):
            cand[i] = lcm_of(lts[i], lt_t)
        # chain criterion among the new pairs
        keep = {}
        for i in sorted(cand, key=lambda i: (mono_deg(cand[i]), cand[i], i)):
            li = cand[i]
            dominated = False
            for j, lj in keep.items():
                if lj != li and not (li - lj) & ring.guard_mask:
                    dominated = True
                    break
            if not dominated:
                keep[i] = li
        # drop duplicates of equal lcm (keep lowest index)
        by_lcm = {}
        for i in sorted(keep):
            by_lcm.setdefault(keep[i], i)
        survivors = {i: l for l, i in by_lcm.items()}
        # coprime-leading-monomial criterion
        survivors = {i: l for i, l in survivors.items() if l != lts[i] + lt_t}
        # prune old pairs via the new leading term
        stale = []
        for (i, j), l in pairs.items():
            if not (l - lt_t) & ring.guard_mask \
                    and lcm_of(lts[i], lt_t) != l and lcm_of(lts[j], lt_t) != l:
                stale.append((i, j))
        for key in stale:
            del pairs[key]
        for i, l in survivors.items():
            pairs[(i, t)] = l
            heapq.heappush(heap, (mono_deg(l), l, i, t))

    for t in range(len(basis)):
        push_pairs(t)

    while heap:
        _, l, i, j = heapq.heappop(heap)
        if pairs.get((i, j)) != l:
            continue
        del pairs[(i, j)]
        if budget is not None:
            budget.pair()
        s = engine.spair(i, j, lts, lcs, tails, l)
        if not s:
            continue
        r = engine.reduce(s, lts, lcs, tails, budget)
        if not r:
            continue
        r = _renorm(engine, r)
        basis.append(r)
        lts.append(max(r))
        lcs.append(r[max(r)])
        tails.append(tuple((m, c) for m, c in r.items() if m != max(r)))
        push_pairs(len(basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    guard = ring.guard_mask
    order_idx = sorted(range(len(basis)), key=lambda i: lts[i])
    minimal = []
    for i in order_idx:
        if not any(not (lts[i] - lts[j]) & guard for j in minimal):
            minimal.append(i)
    # tail-reduce the minimal elements against each other
    mlts = [lts[i] for i in minimal]
    mlcs = [lcs[i] for i in minimal]
    mtails = [tails[i] for i in minimal]
    reduced = []
    for k, i in enumerate(minimal):
        r = engine.reduce(dict(basis[i]), mlts, mlcs, mtails, budget, skip=k)
        r = _renorm(engine, r)
        reduced.append(r)
        mlcs[k] = r[max(r)]
        mtails[k] = tuple((m, c) for m, c in r.items() if m != max(r))
    reduced.sort(key=max, reverse=True)
    polys = tuple(Polynomial(ring, engine.finish(d)) for d in reduced)
    return GroebnerBasis(ring, polys)


class GroebnerBasis:
    """A reduced Groebner basis: monic, auto-reduced, sorted by leading term."""

    def __init__(self, ring, polys):
        self.ring = ring
        self.polys = tuple(polys)
        self._lts = tuple(p.lm() for p in self.polys)
        if ring.field.characteristic == 0:
            self._red = [_strip_content(
                {m: int(c * _common_den(p._d)) for m, c in p._d.items()})
                for p in self.polys]
        else:
            self._red = [dict(p._d) for p in self.polys]
        self._lcs = [d[max(d)] for d in self._red]
        self._tails = [tuple((m, c) for m, c in d.items() if m != max(d))
                       for d in self._red]

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring is other.ring \
            and self.polys == other.polys

    def lead_monomials(self):
        return self._lts

    def is_unit_ideal(self):
        return len(self.polys) == 1 and self.polys[0].lm() == 0

    def normal_form(self, f):
        """Unique remainder of f against the reduced basis."""
        if f.ring is not self.ring:
            raise InvalidInput("polynomial from a different ring")
        if not self.polys:
            return f
        if self.ring.field.characteristic == 0:
            den = _common_den(f._d)
            work = {m: int(c * den) for m, c in f._d.items()}
            out, mult = self._reduce_tracking(work, Fraction(den))
            return Polynomial(self.ring,
                              {m: Fraction(c) / mult for m, c in out.items()})
        engine = _engine_for(self.ring)
        work = {m: c for m, c in f._d.items()}
        out = engine.reduce(work, list(self._lts), self._lcs, self._tails)
        return Polynomial(self.ring, out)

    def _reduce_tracking(self, f, mult):
        guard = self.ring.guard_mask
        lts = self._lts
        lcs = self._lcs
        tails = self._tails
        nb = len(lts)
        out = {}
        while f:
            t = max(f)
            c = f.pop(t)
            if not c:
                continue
            hit = -1
            for i in range(nb):
                if not (t - lts[i]) & guard:
                    hit = i
                    break
            if hit < 0:
                out[t] = c
                continue
            a = lcs[hit]
            if a != 1:
                for k in f:
                    f[k] *= a
                for k in out:
                    out[k] *= a
                mult *= a
            shift = t - lts[hit]
            for m, cv in tails[hit]:
                key = m + shift
                v = f.get(key, 0) - c * cv
                if v:
                    f[key] = v
                else:
                    f.pop(key, None)
        return out, mult

    def contains(self, f):
        return self.normal_form(f).is_zero()


def _common_den(d):
    den = 1
    for c in d.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return den


def normal_form_membership(f, gb):
    """Normal form and membership flag of f against a reduced basis."""
    nf = gb.normal_form(f)
    return nf, nf.is_zero()
