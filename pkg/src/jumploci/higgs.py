"""Higgs line bundles on complex tori: the character correspondence, the
pair's cohomology, the Hodge-type splitting check, and the partition
identity for multiplicity loci.

A character of the lattice with log-rational moduli r_j = exp(q_j) and
rational angles keeps everything exact: the holomorphic 1-form comes from
a rational linear solve, and the group-cohomology side treats e^(1/D) as
a transcendental Laurent variable over Q(zeta), where generic rank equals
the true rank because a nonzero rational function cannot vanish at a
transcendental point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .cyclotomic import Cyc, rank_exact
from .laurent import LaurentPoly, rank_generic
from .numutil import frac_mod1, lcm_all


class TorusModelError(ValueError):
    pass


@dataclass(frozen=True)
class ComplexTorusModel:
    """C^n modulo a rank-2n lattice; periods[j] is the j-th lattice
    generator as a vector of (real, imag) rational pairs."""

    n: int
    periods: tuple     # 2n entries, each an n-tuple of (Fraction, Fraction)

    def __post_init__(self):
        if len(self.periods) != 2 * self.n:
            raise TorusModelError("need 2n lattice generators")
        periods = tuple(
            tuple((Fraction(re), Fraction(im)) for re, im in row)
            for row in self.periods)
        object.__setattr__(self, "periods", periods)
        if _det_rational(self.real_period_matrix()) == 0:
            raise TorusModelError("lattice does not span")

    @staticmethod
    def standard(n):
        """Lattice Z^n + i Z^n."""
        rows = []
        for j in range(n):
            rows.append(tuple((Fraction(int(k == j)), Fraction(0)) for k in range(n)))
        for j in range(n):
            rows.append(tuple((Fraction(0), Fraction(int(k == j))) for k in range(n)))
        return ComplexTorusModel(n, tuple(rows))

    def real_period_matrix(self):
        """2n x 2n rational matrix sending (Re theta, Im theta) to the
        vector of 2 Re theta(lambda_j)."""
        rows = []
        for lam in self.periods:
            row = [2 * re for re, _ in lam] + [-2 * im for _, im in lam]
            rows.append(row)
        return rows


def _det_rational(m):
    n = len(m)
    mat = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col]:
                f = mat[i][col] * inv
                for j in range(col, n):
                    mat[i][j] -= f * mat[col][j]
    return det


def _solve_rational(m, rhs):
    n = len(m)
    mat = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(m, rhs)]
    for col in range(n):
        piv = next(i for i in range(col, n) if mat[i][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for i in range(n):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[col])]
    return [mat[i][n] for i in range(n)]


@dataclass(frozen=True)
class LatticeCharacter:
    """Exact character of the period lattice: modulus exp(log_moduli[j])
    and angle angles[j] (in turns) on the j-th generator."""

    log_moduli: tuple      # Fractions q_j with r_j = exp(q_j)
    angles: tuple          # Fractions, reduced mod 1

    def __post_init__(self):
        object.__setattr__(self, "log_moduli",
                           tuple(Fraction(q) for q in self.log_moduli))
        object.__setattr__(self, "angles",
                           tuple(frac_mod1(Fraction(a)) for a in self.angles))

    @property
    def rank(self):
        return len(self.log_moduli)

    @property
    def is_unitary(self):
        return all(q == 0 for q in self.log_moduli)

    @property
    def is_trivial(self):
        return self.is_unitary and all(a == 0 for a in self.angles)

    def __mul__(self, other):
        return LatticeCharacter(
            tuple(a + b for a, b in zip(self.log_moduli, other.log_moduli)),
            tuple(a + b for a, b in zip(self.angles, other.angles)))

    def scale(self, t: Fraction):
        """The positive-real action fixing angles and powering moduli,
        exact for any rational t in the log parametrization."""
        t = Fraction(t)
        return LatticeCharacter(tuple(t * q for q in self.log_moduli), self.angles)

    def serialize(self):
        return {"log_moduli": [str(q) for q in self.log_moduli],
                "angles": [str(a) for a in self.angles]}


@dataclass(frozen=True)
class HiggsLineBundle:
    """Unitary character (the flat line bundle), torsion first Chern
    class (always trivial on a torus model, kept as data), and the
    1-form coefficient vector theta with rational real/imag parts."""

    angles: tuple            # unitary character of the lattice
    theta: tuple             # n pairs (Fraction re, Fraction im)
    torsion_class: int = 0

    def __post_init__(self):
        object.__setattr__(self, "angles",
                           tuple(frac_mod1(Fraction(a)) for a in self.angles))
        object.__setattr__(self, "theta",
                           tuple((Fraction(re), Fraction(im)) for re, im in self.theta))
        if self.torsion_class != 0:
            raise TorusModelError("complex tori have no torsion classes")

    @property
    def flat_is_trivial(self):
        return all(a == 0 for a in self.angles)

    @property
    def theta_is_zero(self):
        return all(re == 0 and im == 0 for re, im in self.theta)

    def scale_theta(self, t: Fraction):
        t = Fraction(t)
        return HiggsLineBundle(self.angles,
                               tuple((t * re, t * im) for re, im in self.theta))

    def add(self, other):
        return HiggsLineBundle(
            tuple(a + b for a, b in zip(self.angles, other.angles)),
            tuple((r1 + r2, i1 + i2) for (r1, i1), (r2, i2)
                  in zip(self.theta, other.theta)))

    def serialize(self):
        return {"angles": [str(a) for a in self.angles],
                "theta": [[str(re), str(im)] for re, im in self.theta],
                "torsion_class": self.torsion_class}


def character_to_higgs(x: ComplexTorusModel, rho: LatticeCharacter):
    """The pair (flat part, 1-form) of a character: theta is the unique
    complex-linear functional with 2 Re theta(lambda_j) = log r_j."""
    if rho.rank != 2 * x.n:
        raise TorusModelError("character rank does not match the lattice")
    sol = _solve_rational(x.real_period_matrix(), list(rho.log_moduli))
    theta = tuple((sol[k], sol[x.n + k]) for k in range(x.n))
    return HiggsLineBundle(rho.angles, theta)


def higgs_to_character(x: ComplexTorusModel, h: HiggsLineBundle):
    """Inverse correspondence: log r_j = 2 Re theta(lambda_j)."""
    logs = []
    for lam in x.periods:
        total = Fraction(0)
        for (lre, lim), (tre, tim) in zip(lam, h.theta):
            total += 2 * (tre * lre - tim * lim)
        logs.append(total)
    return LatticeCharacter(tuple(logs), h.angles)


# ---------------------------------------------------------------------------
# Cohomology of a Higgs line bundle on the torus model


def _wedge_matrix(n, p, theta_gauss):
    """Matrix of wedging with theta: Lambda^p W* -> Lambda^(p+1) W*,
    over Gaussian rationals embedded in Q(i)."""
    src = list(combinations(range(n), p))
    dst = list(combinations(range(n), p + 1))
    dst_index = {s: i for i, s in enumerate(dst)}
    rows = [[Cyc.zero() for _ in src] for _ in dst]
    for si, s in enumerate(src):
        for j in range(n):
            if j in s:
                continue
            t = tuple(sorted(s + (j,)))
            sign = (-1) ** sum(1 for y in s if y < j)
            val = theta_gauss[j]
            rows[dst_index[t]][si] = val * sign
    return rows


def _theta_gauss(h: HiggsLineBundle):
    i_unit = Cyc.root_of_unity(4)
    return [Cyc.rational(re) + i_unit * im for re, im in h.theta]


def higgs_cohomology_dim(x: ComplexTorusModel, h: HiggsLineBundle, p, q):
    """dim of the (p, q) cohomology of the pair: middle cohomology of
    wedging with theta on Lambda^* W*, tensored with Lambda^q Wbar*.
    On a torus every Dolbeault group of a nontrivial flat bundle
    vanishes, so a nontrivial flat part forces zero."""
    n = x.n
    if not (0 <= p <= n and 0 <= q <= n):
        raise TorusModelError("(p, q) out of range")
    if not h.flat_is_trivial:
        return 0
    theta = _theta_gauss(h)
    up = _wedge_matrix(n, p, theta)
    down = _wedge_matrix(n, p - 1, theta) if p >= 1 else []
    rank_up = rank_exact(up) if up and up[0] else 0
    rank_down = rank_exact(down) if down and down[0] else 0
    middle = comb(n, p) - rank_up - rank_down
    return middle * comb(n, q)


def sigma_pq_membership(x, h, p, q, mult):
    """Membership in the (p, q) multiplicity-m locus of Higgs pairs."""
    return higgs_cohomology_dim(x, h, p, q) >= mult


def s_pq_membership(x, angles, p, q, mult):
    """The flat-bundle locus: the (p, q) locus intersected with the
    theta = 0 slice."""
    h = HiggsLineBundle(tuple(angles), tuple((Fraction(0), Fraction(0))
                                             for _ in range(x.n)))
    return sigma_pq_membership(x, h, p, q, mult)


# ---------------------------------------------------------------------------
# Group-cohomology side and the splitting check


def lattice_cohomology_dims(x: ComplexTorusModel, rho: LatticeCharacter):
    """Exact Betti numbers of the lattice Z^(2n) with coefficients in
    the rank-one system rho, via the Koszul complex.

    Values exp(q_j) zeta live in Q(zeta)[e^(1/D)] with e^(1/D) treated as
    a Laurent variable; transcendence makes generic rank exact."""
    b = 2 * x.n
    den = lcm_all([q.denominator for q in rho.log_moduli], start=1)
    ang_den = lcm_all([a.denominator for a in rho.angles], start=1)
    values = []
    for q, a in zip(rho.log_moduli, rho.angles):
        coeff = Cyc.from_angle(a)
        exp_int = int(q * den)
        values.append(LaurentPoly.monomial(((exp_int,), ()), 1, coeff=coeff))
    one = LaurentPoly.one(1)
    ops = [v - one for v in values]
    subsets = {p: list(combinations(range(b), p)) for p in range(b + 1)}
    index = {p: {s: i for i, s in enumerate(subsets[p])} for p in subsets}
    ranks = []
    for p in range(b):
        src, dst = subsets[p], subsets[p + 1]
        mat = [[LaurentPoly.zero(1) for _ in src] for _ in dst]
        for si, s in enumerate(src):
            for j in range(b):
                if j in s:
                    continue
                t = tuple(sorted(s + (j,)))
                sign = (-1) ** sum(1 for y in s if y < j)
                entry = ops[j] if sign > 0 else -ops[j]
                mat[index[p + 1][t]][si] = entry
        ranks.append(rank_generic(mat) if mat and mat[0] else 0)
    dims = []
    for p in range(b + 1):
        total = comb(b, p)
        up = ranks[p] if p < b else 0
        down = ranks[p - 1] if p > 0 else 0
        dims.append(total - up - down)
    return tuple(dims)


def splitting_check(x: ComplexTorusModel, rho: LatticeCharacter, degree):
    """Whether the rank-one Betti number in the given degree equals the
    sum of the pair's (p, q) dimensions over p + q = degree."""
    lhs = lattice_cohomology_dims(x, rho)[degree]
    h = character_to_higgs(x, rho)
    rhs = sum(higgs_cohomology_dim(x, h, p, degree - p)
              for p in range(max(0, degree - x.n), min(degree, x.n) + 1))
    return lhs == rhs, lhs, rhs


def partitions_of(m, parts):
    """All functions mu: {0..parts-1} -> Z>=0 with sum m."""
    if parts == 1:
        yield (m,)
        return
    for head in range(m + 1):
        for rest in partitions_of(m - head, parts - 1):
            yield (head,) + rest


def partition_check(x: ComplexTorusModel, rho: LatticeCharacter, degree, mult):
    """Membership in the degree/mult jump locus matches the union over
    partitions mu of m of the intersections of the (k, degree-k) loci
    with multiplicities mu(k)."""
    lhs = lattice_cohomology_dims(x, rho)[degree] >= mult
    h = character_to_higgs(x, rho)
    rhs = False
    for mu in partitions_of(mult, degree + 1):
        if all(higgs_cohomology_dim(x, h, k, degree - k) >= mu[k]
               for k in range(degree + 1) if mu[k] > 0):
            rhs = True
            break
    return lhs == rhs, lhs, rhs
