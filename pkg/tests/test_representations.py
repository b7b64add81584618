"""Exact matrix/permutation/sign oracles and their compatibility with the relations."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcgroots.presentation import relation_catalog
from mcgroots.representations import (
    CrosscapPermutation,
    IntMatrix,
    derive_generator_matrices,
    gl2_image,
    homology_of,
    perm_of,
    sign_of,
)
from mcgroots.words import (
    GeneratorLetter,
    SurfaceModel,
    WordError,
    normalize_slides,
    parse_word,
)

from conftest import model_word_pairs, words_for


def _w(text, model):
    return parse_word(text, model)


class TestIntMatrix:
    def test_identity_and_mul(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        i2 = IntMatrix.identity(2)
        assert a * i2 == a and i2 * a == a
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert a * b == IntMatrix.from_rows([[2, 1], [4, 3]])

    def test_pow(self):
        a = IntMatrix.from_rows([[1, 1], [0, 1]])
        assert a**5 == IntMatrix.from_rows([[1, 5], [0, 1]])
        assert a**0 == IntMatrix.identity(2)
        assert a**-3 == IntMatrix.from_rows([[1, -3], [0, 1]])

    def test_det_examples(self):
        assert IntMatrix.from_rows([[2, 1], [1, 1]]).det() == 1
        assert IntMatrix.from_rows([[0, 1], [1, 0]]).det() == -1
        assert IntMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]]).det() == -3
        assert IntMatrix.from_rows([[1, 2], [2, 4]]).det() == 0

    def test_det_pivoting(self):
        # leading zero forces a row swap inside the elimination
        assert IntMatrix.from_rows([[0, 1, 2], [1, 0, 3], [2, 1, 0]]).det() == 8

    def test_inv_unimodular(self):
        a = IntMatrix.from_rows([[2, 1], [1, 1]])
        assert a * a.inv() == IntMatrix.identity(2)
        assert a.inv() == IntMatrix.from_rows([[1, -1], [-1, 2]])

    def test_inv_errors(self):
        with pytest.raises(ArithmeticError, match="singular"):
            IntMatrix.from_rows([[1, 2], [2, 4]]).inv()
        with pytest.raises(ArithmeticError, match="not integral"):
            IntMatrix.from_rows([[2, 0], [0, 1]]).inv()

    def test_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(((1, 2), (3,)))
        with pytest.raises(ValueError):
            IntMatrix(((1.5,),))

    @settings(max_examples=40)
    @given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
    def test_det_is_multiplicative(self, rows):
        a = IntMatrix.from_rows(rows)
        b = IntMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 1]])
        assert (a * b).det() == a.det() * b.det()


class TestCrosscapPermutation:
    def test_transposition(self):
        t2 = CrosscapPermutation.transposition(4, 2)
        assert t2.images == (0, 2, 1, 3)
        with pytest.raises(ValueError):
            CrosscapPermutation.transposition(4, 4)

    def test_composition_applies_right_factor_first(self):
        t1 = CrosscapPermutation.transposition(3, 1)
        t2 = CrosscapPermutation.transposition(3, 2)
        assert (t1 * t2).images == (1, 2, 0)
        assert (t2 * t1).images == (2, 0, 1)

    def test_inverse_and_order(self):
        t1 = CrosscapPermutation.transposition(3, 1)
        t2 = CrosscapPermutation.transposition(3, 2)
        cycle = t1 * t2
        assert cycle.order() == 3
        assert (cycle * cycle.inverse()).is_identity
        assert CrosscapPermutation.identity(5).order() == 1

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            CrosscapPermutation((0, 0, 1))


class TestSign:
    def test_examples(self, std5):
        assert sign_of(_w("u1", std5)) == -1
        assert sign_of(_w("y3", std5)) == -1
        assert sign_of(_w("t2^9", std5)) == 1
        assert sign_of(_w("y3^2", std5)) == 1
        assert sign_of(_w("u1^-1 y2 t1", std5)) == 1
        assert sign_of(_w("", std5)) == 1

    def test_hybrid_chain_letters_are_even(self, hyb6):
        assert sign_of(_w("c1 c4^3", hyb6)) == 1
        assert sign_of(_w("u1 c2", hyb6)) == -1

    @settings(max_examples=60)
    @given(model_word_pairs())
    def test_multiplicative(self, data):
        _, a, b = data
        assert sign_of(a * b) == sign_of(a) * sign_of(b)
        assert sign_of(a.inverse()) == sign_of(a)


class TestPermutationOracle:
    def test_transpositions_and_even_exponents(self, std5):
        assert perm_of(_w("u2", std5)).images == (0, 2, 1, 3, 4)
        assert perm_of(_w("u2^2", std5)).is_identity
        assert perm_of(_w("y2", std5)) == perm_of(_w("u2", std5))
        assert perm_of(_w("t1^7", std5)).is_identity

    def test_rotation_has_full_order(self):
        for g in range(3, 9):
            m = SurfaceModel.standard(g)
            delta = _w(" ".join(f"u{i}" for i in range(1, g)), m)
            assert perm_of(delta).order() == g
            assert perm_of(delta**g).is_identity

    def test_stabilized_rotation_has_order_genus_minus_one(self):
        for g in range(3, 9):
            m = SurfaceModel.standard(g)
            w = _w("u1^2 " + " ".join(f"u{i}" for i in range(2, g)), m)
            assert perm_of(w).order() == g - 1

    def test_rejects_hybrid(self, hyb6):
        with pytest.raises(WordError):
            perm_of(_w("u1", hyb6))

    @settings(max_examples=60)
    @given(model_word_pairs())
    def test_antihomomorphism_free(self, data):
        # letters act left to right, so images compose contravariantly
        _, a, b = data
        assert perm_of(a * b) == perm_of(a) * perm_of(b)
        assert perm_of(a.inverse()) == perm_of(a).inverse()


class TestHomologyMatrices:
    def test_genus3_table(self, std3):
        table = derive_generator_matrices(3)
        expect = {
            "t1": [[2, -1], [1, 0]],
            "t2": [[1, -1], [0, 1]],
            "u1": [[0, 1], [1, 0]],
            "u2": [[1, -1], [0, -1]],
            "y1": [[-1, 2], [0, 1]],
        }
        for name, rows in expect.items():
            letter = GeneratorLetter(name[0], int(name[1]))
            assert table[letter] == IntMatrix.from_rows(rows)

    def test_genus2_table(self):
        table = derive_generator_matrices(2)
        assert table[GeneratorLetter("t", 1)] == IntMatrix.from_rows([[1]])
        assert table[GeneratorLetter("u", 1)] == IntMatrix.from_rows([[-1]])
        assert table[GeneratorLetter("y", 1)] == IntMatrix.from_rows([[-1]])

    def test_slide_is_twist_times_transposition(self):
        for g in range(2, 9):
            table = derive_generator_matrices(g)
            for i in range(1, g):
                y = table[GeneratorLetter("y", i)]
                t = table[GeneratorLetter("t", i)]
                u = table[GeneratorLetter("u", i)]
                assert y == t * u

    def test_determinants_match_sign_character(self):
        for g in range(2, 9):
            table = derive_generator_matrices(g)
            for letter, m in table.items():
                assert m.det() == (1 if letter.kind == "t" else -1)

    def test_matrices_are_unimodular(self):
        for g in range(2, 7):
            for letter, m in derive_generator_matrices(g).items():
                assert m * m.inv() == IntMatrix.identity(g - 1)

    def test_cached_and_read_only(self):
        table = derive_generator_matrices(4)
        assert derive_generator_matrices(4) is table
        with pytest.raises(TypeError):
            table[GeneratorLetter("t", 1)] = IntMatrix.identity(3)

    def test_genus_validation(self):
        with pytest.raises(WordError):
            derive_generator_matrices(1)


class TestHomologyOracle:
    def test_word_image(self, std3):
        assert homology_of(_w("t1 t2", std3)) == IntMatrix.from_rows([[2, -3], [1, -1]])
        assert homology_of(_w("", std3)) == IntMatrix.identity(2)

    def test_inverse_letters(self, std3):
        w = _w("t1^-1", std3)
        assert homology_of(w) == IntMatrix.from_rows([[0, 1], [-1, 2]])
        assert homology_of(w) * homology_of(w.inverse()) == IntMatrix.identity(2)

    def test_rejects_hybrid(self, hyb6):
        with pytest.raises(WordError):
            homology_of(_w("u1", hyb6))

    @settings(max_examples=50)
    @given(model_word_pairs(max_genus=6))
    def test_homomorphism(self, data):
        _, a, b = data
        assert homology_of(a * b) == homology_of(a) * homology_of(b)
        assert homology_of(a.inverse()) == homology_of(a).inv()

    @settings(max_examples=50)
    @given(model_word_pairs(max_genus=6))
    def test_det_equals_sign(self, data):
        _, a, _ = data
        assert homology_of(a).det() == sign_of(a)

    @settings(max_examples=50)
    @given(st.integers(2, 6).flatmap(lambda g: words_for(SurfaceModel.standard(g))))
    def test_slide_normalization_invariance(self, w):
        n = normalize_slides(w)
        assert homology_of(n) == homology_of(w)
        assert perm_of(n) == perm_of(w)
        assert sign_of(n) == sign_of(w)


class TestGl2Image:
    def test_frozen_order_six_element(self, std3):
        m = gl2_image(_w("t1 t2", std3))
        assert m == IntMatrix.from_rows([[2, -3], [1, -1]])
        assert m**6 == IntMatrix.identity(2)
        assert all(m**k != IntMatrix.identity(2) for k in range(1, 6))

    def test_requires_standard_genus3(self, std5, hyb6):
        with pytest.raises(WordError):
            gl2_image(_w("u1", std5))
        with pytest.raises(WordError):
            gl2_image(_w("u1", hyb6))


class TestRelationCompatibility:
    @pytest.mark.parametrize("genus", range(2, 9))
    def test_standard_catalog(self, genus):
        model = SurfaceModel.standard(genus)
        for inst in relation_catalog(model):
            assert sign_of(inst.lhs) == sign_of(inst.rhs), inst.schema
            assert perm_of(inst.lhs) == perm_of(inst.rhs), inst.schema
            assert homology_of(inst.lhs) == homology_of(inst.rhs), inst.schema

    @pytest.mark.parametrize("genus", (4, 6, 8))
    def test_hybrid_catalog_sign(self, genus):
        for inst in relation_catalog(SurfaceModel.hybrid(genus)):
            assert sign_of(inst.lhs) == sign_of(inst.rhs), inst.schema
