import pytest
from math import gcd

from cipherduel.modmath import Mat2, NotInvertible, mod_inverse, solve_linear_congruence


def brute_inverse(a, m):
    """Independent oracle: scan all residues."""
    for x in range(m):
        if (a * x) % m == 1:
            return x
    return None


def brute_congruence(a, b, m):
    return {x for x in range(m) if (a * x) % m == b % m}


class TestModInverse:
    def test_examples(self):
        assert mod_inverse(15, 26) == 7 == brute_inverse(15, 26)
        assert mod_inverse(1, 26) == 1

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            mod_inverse(13, 26)

    def test_all_units_mod_26(self):
        units = [a for a in range(26) if gcd(a, 26) == 1]
        assert len(units) == 12
        for a in units:
            assert a * mod_inverse(a, 26) % 26 == 1

    @pytest.mark.parametrize("m", [2, 3, 5, 12, 26, 27])
    def test_matches_oracle_small_moduli(self, m):
        for a in range(m):
            expected = brute_inverse(a, m)
            if expected is None:
                with pytest.raises(NotInvertible):
                    mod_inverse(a, m)
            else:
                assert mod_inverse(a, m) == expected


class TestLinearCongruence:
    def test_examples(self):
        assert solve_linear_congruence(11, 1, 26) == {19}
        assert 11 * 19 % 26 == 1
        assert solve_linear_congruence(2, 3, 26) == set()
        assert solve_linear_congruence(2, 4, 26) == {2, 15}

    def test_exhaustive_mod_26(self):
        for a in range(26):
            for b in range(26):
                got = solve_linear_congruence(a, b, 26)
                assert got == brute_congruence(a, b, 26)
                g = gcd(a, 26) or 26
                assert len(got) == (g if b % g == 0 else 0)

    @pytest.mark.parametrize("m", [2, 7, 12])
    def test_exhaustive_other_moduli(self, m):
        for a in range(m):
            for b in range(m):
                assert solve_linear_congruence(a, b, m) == brute_congruence(a, b, m)


class TestMat2:
    def test_det_examples(self):
        assert Mat2(19, 7, 7, 4).det() == 1  # 76 - 49 = 27
        assert Mat2.identity().det() == 1
        assert Mat2(2, 0, 0, 13).det() == 0

    def test_inverse_example(self):
        m = Mat2(19, 7, 7, 4)
        inv = m.inverse()
        assert inv == Mat2(4, 19, 19, 19)
        assert m @ inv == Mat2.identity()
        assert inv @ m == Mat2.identity()

    def test_inverse_identity(self):
        assert Mat2.identity().inverse() == Mat2.identity()

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            Mat2(2, 4, 1, 2).inverse()

    def test_entries_reduced(self):
        m = Mat2(-1, 27, 52, 30)
        assert (m.a, m.b, m.c, m.d) == (25, 1, 0, 4)

    def test_gl2_order(self):
        # unit-determinant count over all 26^4 matrices; group-order
        # cross-check |GL2(Z2)| * |GL2(Z13)| = 6 * (168*156)
        count = 0
        for a in range(26):
            for b in range(26):
                for c in range(26):
                    for d in range(26):
                        if gcd((a * d - b * c) % 26, 26) == 1:
                            count += 1
        assert count == 157_248 == 6 * 168 * 156

    def test_invertible_iff_unit_det_sampled(self):
        import random

        rng = random.Random(2024)
        identity = Mat2.identity()
        for _ in range(2000):
            m = Mat2(*(rng.randrange(26) for _ in range(4)))
            if gcd(m.det(), 26) == 1:
                assert m @ m.inverse() == identity
            else:
                assert not m.is_invertible()
                with pytest.raises(NotInvertible):
                    m.inverse()
