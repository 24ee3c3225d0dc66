"""Sparse multivariate Laurent polynomials over cyclotomic coefficients,
with an optional finite-torsion twist so elements of the integral group
ring Z[Z^b + Z/d_1 + ... + Z/d_t] share one representation.

Term keys are (free exponent vector, torsion exponent vector); torsion
exponents are reduced modulo the orders.  The term order is lexicographic
on the combined key, which fixes pivots, canonical forms and serialized
output.  Rank and division are only defined for torsion-free elements
(the group ring with torsion is not a domain); callers specialize the
torsion twist to roots of unity first.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyc


def _coerce(c):
    if isinstance(c, Cyc):
        return c
    return Cyc.rational(c)


class LaurentPoly:
    """A finite sum of terms coeff * z^v * s^w, w taken mod torsion orders."""

    __slots__ = ("nvars", "torsion", "terms")

    def __init__(self, nvars, torsion=(), terms=None):
        self.nvars = nvars
        self.torsion = tuple(torsion)
        self.terms = {}
        if terms:
            for key, c in terms.items():
                c = _coerce(c)
                if not c.is_zero():
                    self.terms[self._norm_key(key)] = c

    def _norm_key(self, key):
        free, tors = key
        tors = tuple(e % d for e, d in zip(tors, self.torsion))
        return (tuple(free), tors)

    @staticmethod
    def zero(nvars, torsion=()):
        return LaurentPoly(nvars, torsion)

    @staticmethod
    def one(nvars, torsion=()):
        return LaurentPoly.monomial(((0,) * nvars, (0,) * len(torsion)), nvars, torsion)

    @staticmethod
    def monomial(key, nvars, torsion=(), coeff=1):
        p = LaurentPoly(nvars, torsion)
        c = _coerce(coeff)
        if not c.is_zero():
            p.terms[p._norm_key(key)] = c
        return p

    @staticmethod
    def constant(c, nvars, torsion=()):
        return LaurentPoly.monomial(((0,) * nvars, (0,) * len(torsion)),
                                    nvars, torsion, coeff=c)

    def add_term(self, key, coeff):
        out = self.copy()
        key = self._norm_key(key)
        c = out.terms.get(key, Cyc.zero()) + _coerce(coeff)
        if c.is_zero():
            out.terms.pop(key, None)
        else:
            out.terms[key] = c
        return out

    def copy(self):
        p = LaurentPoly(self.nvars, self.torsion)
        p.terms = dict(self.terms)
        return p

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.nvars != other.nvars or self.torsion != other.torsion:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __add__(self, other):
        out = self.copy()
        for key, c in other.terms.items():
            cur = out.terms.get(key, Cyc.zero()) + c
            if cur.is_zero():
                out.terms.pop(key, None)
            else:
                out.terms[key] = cur
        return out

    def __neg__(self):
        p = LaurentPoly(self.nvars, self.torsion)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            c0 = _coerce(other)
            p = LaurentPoly(self.nvars, self.torsion)
            if not c0.is_zero():
                for k, c in self.terms.items():
                    v = c * c0
                    if not v.is_zero():
                        p.terms[k] = v
            return p
        out = LaurentPoly(self.nvars, self.torsion)
        for (v1, w1), c1 in self.terms.items():
            for (v2, w2), c2 in other.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                key = (tuple(a + b for a, b in zip(v1, v2)),
                       tuple((a + b) % d for a, b, d in zip(w1, w2, self.torsion)))
                cur = out.terms.get(key, Cyc.zero()) + c
                if cur.is_zero():
                    out.terms.pop(key, None)
                else:
                    out.terms[key] = cur
        return out

    __rmul__ = __mul__

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def leading(self):
        """(key, coeff) of the lexicographically largest term."""
        key = max(self.terms)
        return key, self.terms[key]

    def evaluate(self, free_values, torsion_values=()):
        """Plug Cyc values into the variables; negative exponents invert."""
        total = Cyc.zero()
        for (v, w), c in self.terms.items():
            val = c
            for x, e in zip(free_values, v):
                if e:
                    val = val * (x ** e)
            for x, e in zip(torsion_values, w):
                if e:
                    val = val * (x ** e)
            total = total + val
        return total

    def specialize_torsion(self, torsion_values):
        """Evaluate the torsion twist at roots of unity, leaving a plain
        Laurent polynomial in the free variables."""
        out = LaurentPoly(self.nvars, ())
        for (v, w), c in self.terms.items():
            val = c
            for x, e in zip(torsion_values, w):
                if e:
                    val = val * (x ** e)
            if val.is_zero():
                continue
            key = (v, ())
            cur = out.terms.get(key, Cyc.zero()) + val
            if cur.is_zero():
                out.terms.pop(key, None)
            else:
                out.terms[key] = cur
        return out

    def substitute_monomials(self, lattice_cols, translate_values, new_nvars,
                             torsion_values=()):
        """z_j -> translate_values[j] * prod_k s_k^B[j][k] with B given by
        columns; torsion generators evaluate at torsion_values.  Returns a
        torsion-free Laurent polynomial in new_nvars variables."""
        out = LaurentPoly(new_nvars, ())
        for (v, w), c in self.terms.items():
            val = c
            for x, e in zip(translate_values, v):
                if e:
                    val = val * (x ** e)
            for x, e in zip(torsion_values, w):
                if e:
                    val = val * (x ** e)
            if val.is_zero():
                continue
            exps = tuple(sum(lattice_cols[j][k] * v[j] for j in range(self.nvars))
                         for k in range(new_nvars))
            key = (exps, ())
            cur = out.terms.get(key, Cyc.zero()) + val
            if cur.is_zero():
                out.terms.pop(key, None)
            else:
                out.terms[key] = cur
        return out

    def shift_normalize(self):
        """Multiply by the unit monomial making all exponents >= 0 with a
        zero minimum per variable."""
        if not self.terms:
            return self
        mins = [min(k[0][j] for k in self.terms) for j in range(self.nvars)]
        if all(m == 0 for m in mins):
            return self
        p = LaurentPoly(self.nvars, self.torsion)
        for (v, w), c in self.terms.items():
            p.terms[(tuple(a - m for a, m in zip(v, mins)), w)] = c
        return p

    def content_normalize(self):
        """Canonical ideal generator: exponents shifted to zero minimum,
        rational content divided out, leading coefficient made positive.
        Only meaningful for rational-coefficient elements (Fox minors)."""
        p = self.shift_normalize()
        if not p.terms:
            return p
        from math import gcd
        num_gcd, den_lcm = 0, 1
        rational = all(c.is_rational() for c in p.terms.values())
        if rational:
            for c in p.terms.values():
                q = c.rational_value()
                num_gcd = gcd(num_gcd, q.numerator)
                den_lcm = den_lcm * q.denominator // gcd(den_lcm, q.denominator)
            scale = Fraction(den_lcm, num_gcd) if num_gcd else Fraction(1)
            p = p * scale
            _, lead = p.leading()
            if lead.rational_value() < 0:
                p = p * Fraction(-1)
        else:
            _, lead = p.leading()
            p = p * lead.inverse()
        return p

    def exact_div(self, other):
        """Exact division by another torsion-free Laurent polynomial.

        Both operands are shifted to nonnegative exponents first; in an
        exact multivariate division every intermediate remainder keeps a
        leading term divisible by the divisor's, so a failed monomial
        divisibility check proves inexactness (and guarantees termination,
        which plain Laurent leading-term division would not).
        """
        assert not self.torsion and not other.torsion
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return self
        mins_f = [min(k[0][j] for k in self.terms) for j in range(self.nvars)]
        mins_g = [min(k[0][j] for k in other.terms) for j in range(self.nvars)]
        rem = self.shift_normalize()
        g = other.shift_normalize()
        out = LaurentPoly(self.nvars)
        lk, lc = g.leading()
        lc_inv = lc.inverse()
        while rem.terms:
            rk, rc = rem.leading()
            if any(a < b for a, b in zip(rk[0], lk[0])):
                raise ValueError("inexact Laurent division")
            qkey = (tuple(a - b for a, b in zip(rk[0], lk[0])), ())
            q = LaurentPoly.monomial(qkey, self.nvars, coeff=rc * lc_inv)
            out = out + q
            rem = rem - q * g
        shift = tuple(a - b for a, b in zip(mins_f, mins_g))
        if any(shift):
            out = out * LaurentPoly.monomial((shift, ()), self.nvars)
        return out

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for (v, w), c in self.sorted_terms():
            bits.append(f"{c!r}*z^{list(v)}" + (f"*s^{list(w)}" if w else ""))
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def serialize(self):
        return [
            {"exps": list(v), "tors": list(w), "coeff": c.serialize()}
            for (v, w), c in self.sorted_terms()
        ]


def rank_generic(matrix):
    """Rank over the fraction field of the Laurent ring.

    Fraction-free Bareiss elimination with first-nonzero pivoting in the
    canonical term order.  Entries must be torsion-free LaurentPoly.
    """
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    nvars = rows[0][0].nvars
    prev = LaurentPoly.one(nvars)
    rank = 0
    r = 0
    for _ in range(min(nrows, ncols)):
        piv = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                if not rows[i][j].is_zero():
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        rows[r], rows[pi] = rows[pi], rows[r]
        if pj != r:
            for row in rows:
                row[r], row[pj] = row[pj], row[r]
        p = rows[r][r]
        for i in range(r + 1, nrows):
            for j in range(r + 1, ncols):
                num = p * rows[i][j] - rows[i][r] * rows[r][j]
                rows[i][j] = num.exact_div(prev)
            rows[i][r] = LaurentPoly.zero(nvars)
        prev = p
        rank += 1
        r += 1
    return rank


def univariate_view(poly, var):
    """Coefficient dict {degree: LaurentPoly in the remaining variables}
    of a torsion-free poly seen in one variable, exponents shifted to be
    nonnegative (a unit shift, harmless for root sets on the torus)."""
    assert not poly.torsion
    if poly.is_zero():
        return {}
    shift = min(k[0][var] for k in poly.terms)
    out = {}
    rest = poly.nvars - 1
    for (v, _), c in poly.terms.items():
        deg = v[var] - shift
        key = (tuple(x for j, x in enumerate(v) if j != var), ())
        cur = out.setdefault(deg, LaurentPoly(rest))
        prev = cur.terms.get(key, Cyc.zero()) + c
        if prev.is_zero():
            cur.terms.pop(key, None)
        else:
            cur.terms[key] = prev
    return {d: p for d, p in out.items() if not p.is_zero()}


def resultant(p, q, var):
    """Resultant of two torsion-free Laurent polynomials with respect to
    one variable: a Laurent polynomial in the remaining variables, zero
    exactly on the projection-relevant common locus (up to unit factors
    absorbed by the exponent shifts)."""
    pv = univariate_view(p, var)
    qv = univariate_view(q, var)
    if not pv or not qv:
        return LaurentPoly.zero(p.nvars - 1)
    dp, dq = max(pv), max(qv)
    rest = p.nvars - 1
    if dp == 0:
        out = LaurentPoly.one(rest)
        for _ in range(dq):
            out = out * pv[0]
        return out
    if dq == 0:
        out = LaurentPoly.one(rest)
        for _ in range(dp):
            out = out * qv[0]
        return out
    size = dp + dq
    zero = LaurentPoly.zero(rest)
    rows = []
    for i in range(dq):
        row = [zero] * size
        for d, c in pv.items():
            row[i + dp - d] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * size
        for d, c in qv.items():
            row[i + dq - d] = c
        rows.append(row)
    return det_bareiss(rows)


def det_bareiss(matrix):
    """Determinant of a square torsion-free LaurentPoly matrix."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one(0)
    nvars = matrix[0][0].nvars
    rows = [list(r) for r in matrix]
    prev = LaurentPoly.one(nvars)
    sign = 1
    for r in range(n - 1):
        piv = next((i for i in range(r, n) if not rows[i][r].is_zero()), None)
        if piv is None:
            return LaurentPoly.zero(nvars)
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][r]
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                num = p * rows[i][j] - rows[i][r] * rows[r][j]
                rows[i][j] = num.exact_div(prev)
            rows[i][r] = LaurentPoly.zero(nvars)
        prev = p
    out = rows[n - 1][n - 1]
    return out if sign == 1 else -out
