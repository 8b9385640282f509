from nzcod.dyadic import CC_ONE, ComplexCoefficient, DyadicRootTwo
from nzcod.forms import (
    EntryForm,
    GeneralLinear,
    Part,
    RealCoordinate,
    ScaledInterleaved,
    ScaledVariable,
    Zero,
    classify_entry,
)


def test_variable_form_coordinates():
    f = EntryForm.variable(2)
    assert f.coefficient(RealCoordinate(2, Part.I)) == CC_ONE
    assert f.coefficient(RealCoordinate(2, Part.Q)) == CC_ONE.mul_j()
    g = EntryForm.variable(2, conj=True)
    assert g.coefficient(RealCoordinate(2, Part.Q)) == -CC_ONE.mul_j()


def test_addition_drops_cancelled_terms():
    f = EntryForm.variable(1) + (-EntryForm.variable(1))
    assert f.is_zero


def test_classify_negated_conjugate_variable():
    cls = classify_entry(-EntryForm.variable(2, conj=True))
    assert cls == ScaledVariable(k=2, conjugated=True, coeff=DyadicRootTwo(-1))


def test_classify_scaled_interleaved():
    half_sqrt = ComplexCoefficient.real(DyadicRootTwo(0, 1, 1))
    cls = classify_entry(EntryForm.interleaved(1, 2, coeff=half_sqrt))
    assert cls == ScaledInterleaved(i=1, k=2, conjugated=False,
                                    coeff=DyadicRootTwo(0, 1, 1))


def test_classify_reverse_index_interleaved():
    # x_{2,1}: in-phase part from variable 2, quadrature from variable 1
    cls = classify_entry(EntryForm.interleaved(2, 1, conj=True))
    assert cls == ScaledInterleaved(i=2, k=1, conjugated=True,
                                    coeff=DyadicRootTwo(1))


def test_classify_self_interleaved_is_variable():
    cls = classify_entry(EntryForm.interleaved(3, 3))
    assert cls == ScaledVariable(k=3, conjugated=False, coeff=DyadicRootTwo(1))


def test_classify_two_variable_combination_general():
    cls = classify_entry(EntryForm.variable(1, conj=True) - EntryForm.variable(2))
    assert isinstance(cls, GeneralLinear)


def test_classify_j_scaled_variable_general():
    cls = classify_entry(EntryForm.variable(1).scaled(CC_ONE.mul_j()))
    assert isinstance(cls, GeneralLinear)


def test_classify_zero():
    assert isinstance(classify_entry(EntryForm.zero()), Zero)


def test_conjugation_is_involutive():
    f = EntryForm.interleaved(1, 2, coeff=ComplexCoefficient.from_ints(0, -1))
    assert f.conj().conj() == f
