"""Finite group presentations: abelianization, Fox calculus, and
Reidemeister-Schreier subgroup presentations.

The abelianization H1 = Z^b + Z/d_1 + ... + Z/d_t is computed once per
presentation by Smith normal form of the relator exponent matrix; every
generator gets explicit (free, torsion) coordinates in that decomposition.
Fox derivative rows are recorded in the integral group ring of H1, as
laurent.LaurentPoly values with a torsion twist.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import words
from .laurent import LaurentPoly
from .intlinalg import smith_normal_form, rank_int


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class FinitePresentation:
    """Generators x_0 .. x_{g-1} and cyclically reduced relator words."""

    generator_count: int
    relators: tuple
    aspherical: bool = False
    names: tuple = ()

    def __post_init__(self):
        if self.generator_count < 0:
            raise PresentationError("generator count must be nonnegative")
        reduced = []
        for rel in self.relators:
            rel = words.cyclic_reduce(words.free_reduce(rel))
            if rel and words.max_index(rel) >= self.generator_count:
                raise PresentationError("relator uses an unknown generator")
            if rel:
                reduced.append(rel)
        object.__setattr__(self, "relators", tuple(reduced))
        if not self.names:
            object.__setattr__(
                self, "names",
                tuple(_default_name(i) for i in range(self.generator_count)))

    @property
    def relator_count(self):
        return len(self.relators)

    def exponent_matrix(self):
        """Relator exponent sums, one row per relator."""
        return [words.exponent_sums(r, self.generator_count) for r in self.relators]


def _default_name(i):
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    if i < len(alphabet):
        return alphabet[i]
    return f"x{i}"


@dataclass(frozen=True)
class AbelianizationData:
    """H1 of a presentation as Z^b + Z/d_1 + ... + Z/d_t with projection.

    gen_images[j] = (free coords in Z^b, torsion coords mod d_i) of the
    j-th generator.  basis_lifts[k] is an exponent vector in Z^g mapping to
    the k-th free basis vector (torsion coords zero), used to transport
    characters between Tietze-equivalent presentations.
    """

    free_rank: int
    torsion: tuple
    gen_images: tuple
    basis_lifts: tuple = field(default=(), compare=False)
    torsion_lifts: tuple = field(default=(), compare=False)

    @property
    def generator_count(self):
        return len(self.gen_images)

    def project_vector(self, exps):
        """Image in H1 of a generator exponent vector."""
        b, t = self.free_rank, len(self.torsion)
        free = [0] * b
        tors = [0] * t
        for j, e in enumerate(exps):
            if not e:
                continue
            gf, gt = self.gen_images[j]
            for k in range(b):
                free[k] += e * gf[k]
            for k in range(t):
                tors[k] = (tors[k] + e * gt[k]) % self.torsion[k]
        return tuple(free), tuple(tors)

    def project_word(self, letters):
        exps = words.exponent_sums(letters, self.generator_count)
        return self.project_vector(exps)


def abelianize(p: FinitePresentation) -> AbelianizationData:
    """Smith-normal-form invariants of the relator exponent matrix.

    An empty relator list gives the free abelianization Z^g.
    """
    g = p.generator_count
    e = p.exponent_matrix()
    if not e:
        gen_images = tuple((tuple(1 if k == j else 0 for k in range(g)), ())
                           for j in range(g))
        lifts = tuple(tuple(1 if k == j else 0 for k in range(g)) for j in range(g))
        return AbelianizationData(g, (), gen_images, lifts, ())
    # Relator images are columns of e^T; H1 = Z^g / column span.
    a = [[e[i][j] for i in range(len(e))] for j in range(g)]
    u, d, v = smith_normal_form(a)
    n = min(len(a), len(a[0]))
    diag = [d[i][i] for i in range(n)]
    rank = sum(1 for x in diag if x)
    torsion_pos = [i for i in range(rank) if diag[i] >= 2]
    free_pos = list(range(rank, g))
    torsion = tuple(diag[i] for i in torsion_pos)
    b = len(free_pos)
    # Coordinates of generator j: reorder u @ e_j into (free, torsion).
    gen_images = []
    for j in range(g):
        col = [u[i][j] for i in range(g)]
        free = tuple(col[i] for i in free_pos)
        tors = tuple(col[torsion_pos[k]] % torsion[k] for k in range(len(torsion_pos)))
        gen_images.append((free, tors))
    # Lift basis vectors through u^{-1}: solve u @ x = e_pos.
    uinv = _unimodular_inverse(u)
    basis_lifts = tuple(tuple(uinv[r][pos] for r in range(g)) for pos in free_pos)
    torsion_lifts = tuple(tuple(uinv[r][pos] for r in range(g)) for pos in torsion_pos)
    data = AbelianizationData(b, torsion, tuple(gen_images), basis_lifts, torsion_lifts)
    _check_accounting(p, data, rank)
    return data


def _unimodular_inverse(u):
    """Inverse of a unimodular integer matrix, exact."""
    n = len(u)
    from fractions import Fraction
    m = [[Fraction(u[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if m[i][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    out = [[int(m[i][n + j]) for j in range(n)] for i in range(n)]
    return out


def _check_accounting(p, data, rank):
    # b + #(nontrivial torsion) <= g and b = g - rank(exponent matrix).
    g = p.generator_count
    e = p.exponent_matrix()
    assert data.free_rank == g - rank_int(e), "free rank accounting failed"
    for rel in p.relators:
        free, tors = data.project_word(rel)
        assert all(x == 0 for x in free) and all(x == 0 for x in tors), \
            "projection does not kill a relator"


def fox_derivative(rel, j, ab: AbelianizationData):
    """Fox derivative of a relator w.r.t. generator j, abelianized.

    Rules: d(uv) = du + u dv, dx/dx = 1, d(x^-1)/dx = -x^-1.  Prefix
    images are taken in H1, so the result lives in Z[H1].
    """
    g = ab.generator_count
    b, torsion = ab.free_rank, ab.torsion
    out = LaurentPoly.zero(b, torsion)
    prefix = [0] * g
    for idx, exp in rel:
        if idx == j:
            if exp == 1:
                key = ab.project_vector(prefix)
                out = out.add_term(key, 1)
            else:
                step = list(prefix)
                step[idx] -= 1
                key = ab.project_vector(step)
                out = out.add_term(key, -1)
        prefix[idx] += exp
    return out


def fox_matrix(p: FinitePresentation, ab: AbelianizationData):
    """r x g matrix over Z[H1] whose rows are Fox derivative vectors."""
    return [
        [fox_derivative(rel, j, ab) for j in range(p.generator_count)]
        for rel in p.relators
    ]


def fox_identity_holds(p: FinitePresentation, ab: AbelianizationData, rel):
    """sum_j (dr/dx_j)(x_j - 1) == r - 1 == 0 in Z[H1] for a relator."""
    b, torsion = ab.free_rank, ab.torsion
    total = LaurentPoly.zero(b, torsion)
    for j in range(p.generator_count):
        d = fox_derivative(rel, j, ab)
        xj = LaurentPoly.monomial(ab.project_vector(
            [1 if k == j else 0 for k in range(p.generator_count)]), b, torsion)
        one = LaurentPoly.one(b, torsion)
        total = total + d * (xj - one)
    return total.is_zero()


def permuted_inverted(p: FinitePresentation, perm, signs):
    """Tietze variant: new generator j is old generator perm[j]^signs[j].

    Words are rewritten through the inverse substitution, so the variant
    presents the same group.
    """
    g = p.generator_count
    inv_perm = [0] * g
    for j, t in enumerate(perm):
        inv_perm[t] = j
    new_rels = []
    for rel in p.relators:
        letters = []
        for idx, exp in rel:
            nj = inv_perm[idx]
            letters.append((nj, exp * signs[nj]))
        new_rels.append(tuple(letters))
    names = tuple(p.names[perm[j]] for j in range(g))
    return FinitePresentation(g, tuple(new_rels), p.aspherical, names)


class CoverError(ValueError):
    pass


def reidemeister_schreier(p: FinitePresentation, gen_targets, group_orders):
    """Presentation of the kernel of pi1 -> Q, Q finite abelian.

    Q is given as Z/o_1 + ... + Z/o_k (group_orders, each >= 1) and
    gen_targets[j] is the image tuple of generator j.  Raises CoverError
    when the images do not generate Q.  Schreier generators come from a
    BFS transversal; the output is simplified only by free reduction and
    dropping empty relators.
    """
    g = p.generator_count
    orders = tuple(group_orders)
    size = 1
    for o in orders:
        size *= o

    def add(c, t):
        return tuple((a + b) % o for a, b, o in zip(c, t, orders))

    def neg(t):
        return tuple((-a) % o for a, o in zip(t, orders))

    zero = tuple(0 for _ in orders)
    # BFS over the coset graph; transversal words are Schreier (prefix closed).
    transversal = {zero: ()}
    queue = [zero]
    while queue:
        c = queue.pop(0)
        for j in range(g):
            for exp in (1, -1):
                t = gen_targets[j] if exp == 1 else neg(gen_targets[j])
                nc = add(c, t)
                if nc not in transversal:
                    transversal[nc] = transversal[c] + ((j, exp),)
                    queue.append(nc)
    if len(transversal) != size:
        raise CoverError("not a covering of the stated degree")

    cosets = sorted(transversal)
    coset_index = {c: i for i, c in enumerate(cosets)}

    # Schreier generator for (coset c, generator j); tree edges are trivial.
    sgen_index = {}
    sgen_words = []
    names = []
    for c in cosets:
        for j in range(g):
            target = add(c, gen_targets[j])
            word = words.concat(transversal[c], words.generator(j),
                                words.inverse(transversal[target]))
            if not word:
                sgen_index[(c, j)] = None
                continue
            sgen_index[(c, j)] = len(sgen_words)
            sgen_words.append(word)
            names.append(f"{p.names[j]}_{coset_index[c]}")

    def rewrite(c, rel):
        out = []
        cur = c
        for idx, exp in rel:
            if exp == 1:
                s = sgen_index[(cur, idx)]
                if s is not None:
                    out.append((s, 1))
                cur = add(cur, gen_targets[idx])
            else:
                cur = add(cur, neg(gen_targets[idx]))
                s = sgen_index[(cur, idx)]
                if s is not None:
                    out.append((s, -1))
        return words.free_reduce(out)

    new_rels = []
    for c in cosets:
        for rel in p.relators:
            w = rewrite(c, rel)
            if w:
                new_rels.append(w)

    cover = FinitePresentation(len(sgen_words), tuple(new_rels),
                               p.aspherical, tuple(names))
    return cover, tuple(sgen_words)
