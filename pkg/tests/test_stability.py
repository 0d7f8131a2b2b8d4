import json
import math
import random
from fractions import Fraction

import pytest

from twistcat import (
    CentralCharge,
    ExactComplex,
    NonGenericChargeError,
    Phase,
    StabilityCondition,
    WeylWord,
    ZigzagAlgebra,
    apply_braid,
    braid_word_to_text,
    direct_sum,
    hom_dims,
    is_isomorphic,
    is_spherical,
    named_quiver,
    parse_braid_word,
    random_generic_charge,
    simple_object,
    twist,
    untwist,
    zero_object,
)
from conftest import a3_reference_charge


def test_exact_complex_arithmetic():
    a = ExactComplex.of(1, 2)
    b = ExactComplex.of(-1, Fraction(1, 2))
    assert (a + b) == ExactComplex.of(0, Fraction(5, 2))
    assert (a * b) == ExactComplex.of(-2, Fraction(-3, 2))
    assert a.conjugate() == ExactComplex.of(1, -2)
    assert not ExactComplex.of(-1, 0).in_upper_half()
    assert ExactComplex.of(1, 0).in_upper_half()
    assert ExactComplex.of(0, 1).in_upper_half()


def test_phase_normalization_and_order():
    i = ExactComplex.of(0, 1)
    one = ExactComplex.of(1, 0)
    assert Phase.of(one) == Phase.integer(0)
    assert Phase.of(-one) == Phase.integer(1)
    assert Phase.of(ExactComplex.of(0, -1)) == Phase(-1, i)
    low = Phase.of(ExactComplex.of(2, 1))
    high = Phase.of(ExactComplex.of(-2, 1))
    assert low < high < Phase.integer(1)
    assert Phase.integer(0) < low
    assert low < low + 1
    assert math.isclose(float(Phase(0, i)), 0.5)


def test_phase_add_sub_roundtrip():
    rng = random.Random("phase")
    for _ in range(100):
        za = ExactComplex.of(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(0, 9)))
        zb = ExactComplex.of(Fraction(rng.randint(-9, 9)), Fraction(rng.randint(0, 9)))
        if za.is_zero() or zb.is_zero() or not za.in_upper_half() or not zb.in_upper_half():
            continue
        pa = Phase(rng.randint(-3, 3), za)
        pb = Phase(rng.randint(-3, 3), zb)
        assert (pa + pb) - pb == pa
        assert math.isclose(float(pa + pb), float(pa) + float(pb), abs_tol=1e-12)
        assert math.isclose(float(pa - pb), float(pa) - float(pb), abs_tol=1e-12)
    assert (Phase.integer(2) - Phase.integer(2)).is_zero()


def test_charge_validation_and_json():
    with pytest.raises(ValueError):
        CentralCharge([ExactComplex.of(0, -1)])
    with pytest.raises(ValueError):
        CentralCharge([ExactComplex.of(-1, 0)])
    charge = a3_reference_charge()
    payload = charge.to_json_dict()
    assert payload["1"] == [-1, 1, 1, 2]
    back = CentralCharge.from_json_dict(json.loads(json.dumps(payload)))
    assert back.values == charge.values


def test_validate_generic(stab_a3, alg_a2):
    assert stab_a3.validate_generic()
    equal = StabilityCondition(
        alg_a2, CentralCharge([ExactComplex.of(0, 1), ExactComplex.of(0, 1)])
    )
    assert not equal.validate_generic()
    proportional = StabilityCondition(
        alg_a2, CentralCharge([ExactComplex.of(0, 1), ExactComplex.of(0, 2)])
    )
    assert not proportional.validate_generic()
    with pytest.raises(NonGenericChargeError):
        proportional.stable_object((1, 1))


def test_sign_rule_figure_pattern(stab_a3):
    seq = [(1, 1, 1), (1, 1, 0), (0, 1, 1), (0, 1, 0)]
    assert stab_a3.sign_rule(seq) == (1, -1, -1)
    assert stab_a3.sign_rule([(1, 1, 1)]) == ()
    assert stab_a3.sign_rule([]) == ()


def test_sign_rule_a2_restriction(stab_a2):
    assert stab_a2.sign_rule([(1, 1), (1, 0)]) == (1,)


def test_sign_rule_rejects_bad_input(stab_a2, alg_a2):
    with pytest.raises(ValueError):
        stab_a2.sign_rule([(1, 1), (-1, 0)])
    degenerate = StabilityCondition(
        alg_a2, CentralCharge([ExactComplex.of(0, 1), ExactComplex.of(0, 2)])
    )
    with pytest.raises(NonGenericChargeError):
        degenerate.sign_rule([(1, 0), (0, 1)])


def test_sign_rule_scaling_invariance(stab_a3, alg_a3):
    scaled = StabilityCondition(
        alg_a3,
        CentralCharge([z.scale(Fraction(7, 3)) for z in stab_a3.charge.values]),
    )
    seq = [(1, 1, 1), (1, 1, 0), (0, 1, 1), (0, 1, 0)]
    assert scaled.sign_rule(seq) == stab_a3.sign_rule(seq)
    for w in stab_a3.roots:
        assert scaled.stable_build(w).signs == stab_a3.stable_build(w).signs


def test_stable_object_simple_root(stab_a3, alg_a3):
    build = stab_a3.stable_build((0, 1, 0))
    assert build.braid.letters == ()
    assert build.obj == simple_object(alg_a3, 1)


def test_stable_object_a2(stab_a2, alg_a2):
    build = stab_a2.stable_build((1, 1))
    assert braid_word_to_text(build.braid) == "s1"
    assert build.obj == twist(simple_object(alg_a2, 0), simple_object(alg_a2, 1))


def test_stable_object_figure_word(stab_a3, alg_a3):
    word = WeylWord(base=1, letters=(0, 2, 1))
    build = stab_a3.stable_build((1, 1, 1), word)
    assert braid_word_to_text(build.braid) == "s2' s3' s1"
    obj = build.obj
    assert obj.k_class() == (1, 1, 1)
    assert is_spherical(obj)
    assert stab_a3.heart_test(obj)
    assert stab_a3.spread(obj).is_zero()
    assert is_isomorphic(obj, stab_a3.stable_object((1, 1, 1)))


def test_stable_object_rejects_wrong_word(stab_a3):
    with pytest.raises(ValueError):
        stab_a3.stable_object((1, 1, 1), WeylWord(base=0, letters=(1,)))


def test_phi_bounds_examples(stab_a3, alg_a3):
    p1, p2 = simple_object(alg_a3, 0), simple_object(alg_a3, 1)
    lo, hi = stab_a3.phi_bounds(p2)
    assert lo == hi == Phase(0, ExactComplex.of(0, 1))
    summed = direct_sum(p1, p2.shift(1))
    lo, hi = stab_a3.phi_bounds(summed)
    assert lo == Phase(0, ExactComplex.of(-1, Fraction(1, 2)))
    assert hi == Phase(1, ExactComplex.of(0, 1))
    assert math.isclose(float(lo), 0.8524163823495667)
    assert math.isclose(float(hi), 1.5)
    spread = stab_a3.spread(summed)
    assert math.isclose(float(spread), 0.6475836176504333)
    assert not stab_a3.heart_test(summed)


def test_unstable_flip_example(stab_a2, alg_a2):
    flipped = apply_braid(alg_a2, parse_braid_word("s1'"), simple_object(alg_a2, 1))
    spread = stab_a2.spread(flipped)
    assert not spread.is_zero()
    assert spread > Phase.integer(0)


def test_phi_bounds_rejects_zero(stab_a2, alg_a2):
    with pytest.raises(ValueError):
        stab_a2.phi_bounds(zero_object(alg_a2))


def test_heart_examples(stab_a2, alg_a2):
    p1, p2 = simple_object(alg_a2, 0), simple_object(alg_a2, 1)
    assert stab_a2.heart_test(direct_sum(p1, p2))
    assert not stab_a2.heart_test(direct_sum(p1, p2.shift(1)))
    assert stab_a2.spread(stab_a2.stable_object((1, 1))).is_zero()


def test_heart_criterion_for_simple_twists(stab_a3, alg_a3):
    """An inverse twist by a simple keeps a heart object in the heart exactly
    when the simple admits no map into it (dually for positive twists)."""
    rng = random.Random("heart-criterion")
    heart_objects = [stab_a3.stable_object(w) for w in stab_a3.roots]
    for _ in range(6):
        pieces = rng.sample(heart_objects, k=rng.randint(1, 2))
        x = direct_sum(*pieces)
        for v in range(3):
            p = simple_object(alg_a3, v)
            into = hom_dims(p, x).get(0, 0)
            assert stab_a3.heart_test(untwist(p, x)) == (into == 0), (v, pieces)
            onto = hom_dims(x, p).get(0, 0)
            assert stab_a3.heart_test(twist(p, x)) == (onto == 0), (v, pieces)


def test_phase_zero_charge_is_legal():
    q = named_quiver("A1")
    alg = ZigzagAlgebra(q)
    stab = StabilityCondition(alg, CentralCharge([ExactComplex.of(1, 0)]))
    assert stab.validate_generic()
    p = simple_object(alg, 0)
    lo, hi = stab.phi_bounds(p)
    assert lo == hi == Phase.integer(0)
    assert stab.heart_test(p)


def test_random_generic_charges_are_generic():
    q = named_quiver("A4")
    for seed in range(5):
        charge = random_generic_charge(q, random.Random(f"gen:{seed}"))
        stab = StabilityCondition(ZigzagAlgebra(q), charge)
        assert stab.validate_generic()
        for z in charge.values:
            assert z.re.denominator <= 64 and z.im.denominator <= 64


def test_stable_objects_under_many_charges(alg_a3):
    q = alg_a3.quiver
    rng = random.Random("many-charges")
    for _ in range(3):
        stab = StabilityCondition(alg_a3, random_generic_charge(q, rng))
        for w in stab.roots:
            obj = stab.stable_object(w)
            assert obj.k_class() == w
            assert stab.heart_test(obj)
            assert stab.spread(obj).is_zero()
