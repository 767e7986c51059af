import random

import pytest

from fpwords.cancellation import (
    CASE_INVOLUTIONS,
    CertifiedByClassification,
    CertifiedByTiling,
    NotCertified,
    PieceQuery,
    c6_status,
    min_zone_tiling,
    validate_tiling,
)
from fpwords.classify import find_up_decomposition
from fpwords.words import ProperPowerError, WordError, cyclic_subword, rotations

from conftest import W, make_fp
from oracles import brute_force_tiling, naive_is_piece, random_cyclic_word


def test_piece_examples(z3z3, z2z3):
    r = W(z3z3, "s t s^2 t^2")
    q = PieceQuery(z3z3, r, 3)
    assert naive_is_piece(z3z3, r, 3, 1, 0, 1)
    assert q.is_piece(1, 0, 1)
    assert not naive_is_piece(z3z3, r, 3, 1, 0, 5)
    assert not q.is_piece(1, 0, 5)
    r = W(z2z3, "a t a t^2")
    assert z2z3.invert(r) in rotations(r)
    q = PieceQuery(z2z3, r, 3)
    assert naive_is_piece(z2z3, r, 3, 1, 0, 11)
    assert q.is_piece(1, 0, 11)
    assert q.second_occurrence(1, 0, 11).sign == -1


def test_piece_length_bounds(z2z3):
    q = PieceQuery(z2z3, W(z2z3, "a t a t^2"), 3)
    with pytest.raises(ValueError):
        q.is_piece(1, 0, 0)
    with pytest.raises(ValueError):
        q.is_piece(1, 0, 12)


@pytest.mark.parametrize("kind", ["Z3*Z3", "Z4*Z3", "Z2*V4", "Z6*Z3"])
def test_piece_table_matches_naive(kind):
    rng = random.Random(11)
    fp = make_fp(kind)
    checked = 0
    while checked < 6:
        r = random_cyclic_word(fp, rng, (1, 3))
        try:
            q = PieceQuery(fp, r, 3)
        except ProperPowerError:
            continue
        for sign in (1, -1):
            for start in range(q.N):
                for length in range(1, q.N):
                    assert q.is_piece(sign, start, length) == naive_is_piece(fp, r, 3, sign, start, length)
        # mirror symmetry: the inverse of the subword at (+1, i, L) sits at (-1, N - i - L, L)
        for start in range(q.N):
            for length in range(1, q.N):
                j = (q.N - start - length) % q.N
                assert q.subword(-1, j, length) == fp.invert(q.subword(1, start, length))
                assert q.is_piece(1, start, length) == q.is_piece(-1, j, length)
        checked += 1


def test_tiling_examples(z3z3, z2z3):
    r = W(z3z3, "s t s^2 t^2")
    q = PieceQuery(z3z3, r, 3)
    t = min_zone_tiling(q)
    assert t.d_min == brute_force_tiling(q.N, lambda s, L: naive_is_piece(z3z3, r, 3, 1, s, L)) == 6
    assert validate_tiling(q, t)
    r = W(z2z3, "a t a t^2")
    q = PieceQuery(z2z3, r, 3)
    t = min_zone_tiling(q)
    assert t.d_min == 1
    assert len(t.witness[0].piece) == 11
    assert validate_tiling(q, t)


def test_tiling_no_pieces_gives_all_junctions(z3z3):
    q = PieceQuery(z3z3, W(z3z3, "s t s^2 t^2"), 3)
    t = min_zone_tiling(q, is_piece=lambda s, L: False)
    assert t.d_min == q.N
    assert all(seg.piece == () for seg in t.witness)
    assert min_zone_tiling(q, is_piece=lambda s, L: True).d_min == 1


@pytest.mark.parametrize("kind", ["Z3*Z3", "Z4*Z3", "Z2*V4"])
def test_tiling_matches_brute_force(kind):
    rng = random.Random(5)
    fp = make_fp(kind)
    done = 0
    while done < 8:
        r = random_cyclic_word(fp, rng, (1, 2))
        try:
            q = PieceQuery(fp, r, 3)
        except ProperPowerError:
            continue
        t = min_zone_tiling(q)
        assert t.d_min == brute_force_tiling(q.N, lambda s, L: naive_is_piece(fp, r, 3, 1, s, L))
        assert validate_tiling(q, t)
        assert t.concat() == cyclic_subword(q.w, t.offset, q.N)
        done += 1


def test_more_pieces_never_increase_d_min(z4z3):
    q = PieceQuery(z4z3, W(z4z3, "c^2 t c t c^3 t^2"), 3)
    base = min_zone_tiling(q).d_min
    extra = lambda s, L: q.is_piece(1, s, L) or L <= 2
    assert min_zone_tiling(q, is_piece=extra).d_min <= base


def test_up_pieces_avoid_u_and_v(z3z3):
    r = W(z3z3, "s t s^2 t^2")
    d = find_up_decomposition(z3z3, r)
    q = PieceQuery(z3z3, r, 3)
    for start in range(q.N):
        for length in range(1, q.max_piece_length(1, start) + 1):
            p = q.subword(1, start, length)
            for part in (d.u, d.v):
                assert not any(p[i : i + len(part)] == part for i in range(len(p)))


def test_c6_examples(z3z3, z2z3, z4z3):
    assert c6_status(z3z3, W(z3z3, "s t s^2 t^2"), 3) == CertifiedByTiling(6)
    assert c6_status(z2z3, W(z2z3, "a t a t^2"), 3) == CertifiedByClassification(CASE_INVOLUTIONS, 1)
    s = c6_status(z4z3, W(z4z3, "c^2 t c t^2"), 3)
    assert isinstance(s, NotCertified)
    assert (s.witness.a, s.witness.x, s.witness.b) == (z4z3.letter("c^2"), W(z4z3, "t"), z4z3.letter("c"))


def test_c6_rejects_out_of_scope(z2v4, z2z3):
    with pytest.raises(WordError):
        c6_status(z2v4, W(z2v4, "a b1 a b2 a b3"), 3)
    with pytest.raises(ValueError):
        c6_status(z2z3, W(z2z3, "a t a t^2"), 2)
