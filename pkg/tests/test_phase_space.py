import pytest
from hypothesis import given, strategies as hst

from cqcalab.laurent import LaurentPoly, parse_poly
from cqcalab.phase_space import (
    PhaseVector,
    compose_observables,
    format_observable,
    parse_observable,
    pauli_to_phase_space,
    phase_space_to_pauli,
    symplectic_form,
)

from oracles import scalar_product_terms, to_terms

letters = hst.text(alphabet="1XYZ", min_size=1, max_size=9)
vectors = hst.builds(
    pauli_to_phase_space, letters, hst.integers(min_value=-6, max_value=6)
)


def P(text):
    return parse_poly(text)


class TestEncoding:
    def test_glider_image_of_z(self):
        v = pauli_to_phase_space("ZXZ", -1)
        assert v == PhaseVector(P("1"), P("u^-1 + u"))

    def test_four_letter_string(self):
        v = pauli_to_phase_space("XYZX", -1)
        assert v == PhaseVector(P("u^-1 + 1 + u^2"), P("1 + u"))

    def test_identity_factor_leaves_a_gap(self):
        v = pauli_to_phase_space("X1Z", 0)
        assert v == PhaseVector(P("1"), P("u^2"))

    def test_identity(self):
        assert pauli_to_phase_space("1", 0) == PhaseVector.zero()

    def test_illegal_letter(self):
        with pytest.raises(ValueError):
            pauli_to_phase_space("XQZ", 0)

    def test_decode_glider_image(self):
        assert phase_space_to_pauli(PhaseVector(P("1"), P("u^-1 + u"))) == ("ZXZ", -1)

    def test_decode_shifted_glider(self):
        v = PhaseVector(P("u^-1 + 1"), P("u^-2 + u^-1"))
        assert phase_space_to_pauli(v) == ("ZYX", -2)

    def test_decode_identity(self):
        assert phase_space_to_pauli(PhaseVector.zero()) == ("1", 0)

    @given(letters, hst.integers(min_value=-6, max_value=6))
    def test_round_trip(self, text, offset):
        v = pauli_to_phase_space(text, offset)
        decoded_letters, decoded_offset = phase_space_to_pauli(v)
        assert pauli_to_phase_space(decoded_letters, decoded_offset) == v
        # canonical strings: no leading or trailing identity factor
        if decoded_letters != "1":
            assert decoded_letters[0] != "1" and decoded_letters[-1] != "1"


class TestSymplecticForm:
    def test_same_site_x_z_anticommute(self):
        x = pauli_to_phase_space("X", 0)
        z = pauli_to_phase_space("Z", 0)
        assert symplectic_form(x, z) == 1

    def test_disjoint_support_commutes(self):
        assert symplectic_form(pauli_to_phase_space("X", 0), pauli_to_phase_space("Z", 1)) == 0

    def test_translates_of_stabilizer_generator_commute(self):
        a = pauli_to_phase_space("ZXZ", -1)
        b = pauli_to_phase_space("ZXZ", 0)
        assert symplectic_form(a, b) == 0

    @given(vectors, vectors)
    def test_against_scalar_product_oracle(self, a, b):
        expected = (
            scalar_product_terms(to_terms(a.xi_plus), to_terms(b.xi_minus))
            ^ scalar_product_terms(to_terms(a.xi_minus), to_terms(b.xi_plus))
        )
        assert symplectic_form(a, b) == expected

    @given(vectors, vectors)
    def test_symmetric_and_alternating(self, a, b):
        assert symplectic_form(a, b) == symplectic_form(b, a)
        assert symplectic_form(a, a) == 0

    @given(vectors, vectors, vectors)
    def test_bilinear(self, a, b, c):
        assert symplectic_form(compose_observables(a, b), c) == (
            symplectic_form(a, c) ^ symplectic_form(b, c)
        )


class TestCompose:
    def test_paper_decomposition(self):
        v = compose_observables(
            compose_observables(
                pauli_to_phase_space("Z", -1), pauli_to_phase_space("Y", 0)
            ),
            pauli_to_phase_space("X", 1),
        )
        assert v == PhaseVector(P("1 + u"), P("u^-1 + 1"))

    @given(vectors)
    def test_involution(self, a):
        assert compose_observables(a, a) == PhaseVector.zero()

    def test_x_times_z_is_y(self):
        v = compose_observables(
            pauli_to_phase_space("X", 0), pauli_to_phase_space("Z", 0)
        )
        assert v == pauli_to_phase_space("Y", 0)


class TestLiteralFormat:
    def test_parse_with_offset(self):
        assert parse_observable("ZYX@-1") == pauli_to_phase_space("ZYX", -1)

    def test_default_offset(self):
        assert parse_observable("ZXZ") == pauli_to_phase_space("ZXZ", 0)

    def test_format(self):
        assert format_observable(pauli_to_phase_space("ZYX", -2)) == "ZYX@-2"
        assert format_observable(PhaseVector.zero()) == "1"

    def test_bad_offset(self):
        with pytest.raises(ValueError):
            parse_observable("ZXZ@q")


class TestRestriction:
    def test_restrict_to_right_half(self):
        v = pauli_to_phase_space("ZXZ", -1)
        assert v.restricted(lo=0) == pauli_to_phase_space("XZ", 0)

    def test_shift(self):
        v = pauli_to_phase_space("ZXZ", -1)
        assert v.shifted(3) == pauli_to_phase_space("ZXZ", 2)

    def test_dg_takes_widest_component(self):
        v = PhaseVector(P("u^-2 + u^2"), P("1"))
        assert v.dg() == 2
        assert PhaseVector.zero().dg() is None
