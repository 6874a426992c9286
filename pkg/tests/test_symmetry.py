import pytest

import oracles
from xpol.complex import PureComplex, face_str, make_face, x
from xpol.crosspoly import build_B
from xpol.symmetry import (
    ClosureLimitError,
    apply_to_face,
    check_relations,
    compose,
    generator,
    group_closure,
    identity,
    inverse,
    is_centrally_symmetric,
    label,
    power,
    preserves,
    symmetry_generators,
)


def _as_dict(p, d):
    return {label(k, d): label(v, d) for k, v in enumerate(p)}


@pytest.mark.parametrize("name", ["D", "E", "R", "Rprime"])
@pytest.mark.parametrize("d", range(1, 8))
def test_generators_match_label_description(name, d):
    assert _as_dict(generator(name, d), d) == oracles.label_perm(name, d)


def test_alias_and_unknown():
    assert generator("R'", 4) == generator("Rprime", 4)
    with pytest.raises(ValueError):
        generator("Q", 4)


def test_apply_to_face():
    R = generator("R", 4)
    assert face_str(apply_to_face(R, make_face(["x1", "y4"]))) == "{y1, x2}"
    Rp = generator("Rprime", 4)
    assert face_str(apply_to_face(Rp, x(4))) == "{y1}"


def test_compose_inverse_power():
    R = generator("R", 5)
    assert compose(R, inverse(R)) == identity(5)
    assert power(R, 5) == identity(5)
    assert power(R, -1) == inverse(R)


@pytest.mark.parametrize("d", range(1, 11))
def test_preservation(d):
    for i in range(d):
        B = build_B(i, d)
        assert preserves(generator("D", d), B)
        assert preserves(generator("E", d), B)
        if i % 2 == 0:
            assert preserves(generator("R", d), B)
        else:
            assert preserves(generator("Rprime", d), B)


def test_rotation_parity_matters():
    # R moves B(1,4) off itself and R' moves B(2,4) off itself
    assert not preserves(generator("R", 4), build_B(1, 4))
    assert not preserves(generator("Rprime", 4), build_B(2, 4))


@pytest.mark.parametrize("d", range(3, 11))
def test_group_order_and_transitivity(d):
    for i in range(d):
        gens = symmetry_generators(i, d)
        rep = group_closure(gens, build_B(i, d))
        order, orbit = oracles.group_order([oracles.label_perm(n, d) for n in gens], d)
        assert rep.order == order == 4 * d
        assert rep.vertex_transitive and len(orbit) == 2 * d
        assert rep.preserves_complex
        assert rep.relations_ok


def test_small_d_orders_fall_short():
    # at d = 2, E and R coincide; at d = 1 both are trivial
    assert generator("E", 2) == generator("R", 2)
    assert group_closure(symmetry_generators(0, 2)).order == 4
    assert group_closure(symmetry_generators(1, 2)).order == 8
    assert group_closure(symmetry_generators(0, 1)).order == 2


def test_relations_reported():
    rel = check_relations(symmetry_generators(1, 6), 6)
    assert rel == {"E^2 = id": True, "R'^2d = id": True, "ER'E = R'^-1": True, "R'^d = D": True}
    rel = check_relations(symmetry_generators(0, 6), 6)
    assert rel["ERE = R^-1"] and rel["R^d = id"] and rel["DR = RD"]


def test_closure_bound():
    with pytest.raises(ClosureLimitError):
        group_closure([generator("R", 6), generator("E", 6)], bound=5)


def test_central_symmetry():
    assert is_centrally_symmetric(build_B(2, 5))
    lopsided = PureComplex.from_facets(3, [x(1) | x(2) | x(3)])
    assert not is_centrally_symmetric(lopsided)
