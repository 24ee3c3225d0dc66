import random

import pytest

from jumploci import corpus, words
from jumploci.laurent import LaurentPoly
from jumploci.presentation import (CoverError, FinitePresentation, abelianize,
                                   fox_identity_holds, fox_matrix,
                                   permuted_inverted, reidemeister_schreier)


def test_abelianize_examples():
    s2 = corpus.get("surface2")
    ab = abelianize(s2)
    assert ab.free_rank == 4 and ab.torsion == ()
    z2 = corpus.get("z2")
    ab2 = abelianize(z2)
    assert ab2.free_rank == 2 and ab2.torsion == ()
    c3 = FinitePresentation(1, (words.generator(0, 3),))
    ab3 = abelianize(c3)
    assert ab3.free_rank == 0 and ab3.torsion == (3,)
    free = FinitePresentation(3, ())
    assert abelianize(free).free_rank == 3


def test_abelianize_kills_relators_and_counts():
    for name in corpus.CORPUS:
        p = corpus.get(name)
        ab = abelianize(p)
        for rel in p.relators:
            free, tors = ab.project_word(rel)
            assert all(x == 0 for x in free) and all(x == 0 for x in tors)
        assert ab.free_rank + len([d for d in ab.torsion]) <= p.generator_count


def test_fox_matrix_commutator_row():
    z2 = corpus.get("z2")
    ab = abelianize(z2)
    fm = fox_matrix(z2, ab)
    A = LaurentPoly.monomial(ab.gen_images[0], 2)
    B = LaurentPoly.monomial(ab.gen_images[1], 2)
    one = LaurentPoly.one(2)
    assert fm[0][0] == one - B
    assert fm[0][1] == A - one


def test_fox_matrix_power_row():
    c3 = FinitePresentation(1, (words.generator(0, 3),))
    ab = abelianize(c3)
    fm = fox_matrix(c3, ab)
    e = fm[0][0]
    # 1 + A + A^2 in the group ring of Z/3
    expected = LaurentPoly.zero(0, (3,))
    for k in range(3):
        expected = expected.add_term(((), (k,)), 1)
    assert e == expected


def test_fox_matrix_free_group_empty():
    free = FinitePresentation(2, ())
    ab = abelianize(free)
    assert fox_matrix(free, ab) == []


def test_fox_fundamental_identity_all_corpus_relators():
    for name in corpus.CORPUS:
        p = corpus.get(name)
        ab = abelianize(p)
        for rel in p.relators:
            assert fox_identity_holds(p, ab, rel), (name, rel)


def test_reidemeister_schreier_examples():
    z2 = corpus.get("z2")
    cover, _ = reidemeister_schreier(z2, [(1,), (0,)], (2,))
    abc = abelianize(cover)
    assert abc.free_rank == 2 and abc.torsion == ()

    s2 = corpus.get("surface2")
    cov2, _ = reidemeister_schreier(s2, [(1,), (0,), (0,), (0,)], (2,))
    assert cov2.generator_count == 2 * (4 - 1) + 1
    ab2 = abelianize(cov2)
    assert ab2.free_rank == 6 and ab2.torsion == ()   # genus 3

    free2 = corpus.get("free2")
    covf, _ = reidemeister_schreier(free2, [(1,), (0,)], (3,))
    assert covf.generator_count == 3 * (2 - 1) + 1 == 4
    assert covf.relator_count == 0
    assert abelianize(covf).free_rank == 4            # Nielsen-Schreier


def test_reidemeister_schreier_rejects_nonsurjective():
    z2 = corpus.get("z2")
    with pytest.raises(CoverError):
        reidemeister_schreier(z2, [(0,), (0,)], (2,))


def test_cover_free_rank_matches_euler_characteristic():
    # index-n covers of a genus-g surface have genus n(g-1) + 1; free
    # groups of rank r lift to rank n(r-1) + 1.
    rng = random.Random(31)
    for genus in (2, 3):
        p = corpus.get(f"surface{genus}")
        for n in (2, 3):
            targets = [(1,)] + [(0,)] * (p.generator_count - 1)
            cover, _ = reidemeister_schreier(p, targets, (n,))
            ab = abelianize(cover)
            assert ab.free_rank == 2 * (n * (genus - 1) + 1)
    for rank in (2, 3):
        p = corpus.get(f"free{rank}")
        for n in (2, 4):
            targets = [(1,)] + [(0,)] * (rank - 1)
            cover, _ = reidemeister_schreier(p, targets, (n,))
            assert abelianize(cover).free_rank == n * (rank - 1) + 1


def test_snf_invariants_stable_under_tietze_moves():
    rng = random.Random(32)
    for name in ("surface2", "z3", "c3xz", "trefoil", "torus_bundle3"):
        p = corpus.get(name)
        ab = abelianize(p)
        for _ in range(8):
            perm = list(range(p.generator_count))
            rng.shuffle(perm)
            signs = [rng.choice([1, -1]) for _ in range(p.generator_count)]
            q = permuted_inverted(p, perm, signs)
            abq = abelianize(q)
            assert (abq.free_rank, abq.torsion) == (ab.free_rank, ab.torsion)
