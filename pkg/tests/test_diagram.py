import json
import random

import pytest

from linkhom.diagram import (
    LINK,
    STRING_LINK,
    Diagram,
    DiagramError,
    canonical_code,
    change_crossing,
    closure,
    compact,
    crossing_sign,
    delete_component,
    infer_signs,
    linking_number,
    lobe_linking,
    lobe_split,
    permute_crossings,
    reflect,
    relabel,
    require_valid,
    set_crossing_sign,
    smooth,
    stack,
    validate,
)
from linkhom.fixtures import FIXTURE_NAMES, build_catalog, fixture
from linkhom.morse import braid_closure, pure_braid
from linkhom.skein import conway

CAT = build_catalog()


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_validate_and_match_catalog(name):
    D = fixture(name)
    assert validate(D).ok, validate(D)
    assert canonical_code(D) == canonical_code(CAT[name])


def test_validation_failures():
    empty = Diagram(LINK, (), (), {}, None)
    rep = validate(empty)
    assert not rep.ok and "component count 0" in str(rep)
    hopf = CAT["hopf_pos"]
    tripled = hopf.replace(crossings=((1, 2, 1, 1),) + hopf.crossings[1:])
    rep = validate(tripled)
    assert not rep.ok and "arc multiplicity" in str(rep)
    with pytest.raises(DiagramError):
        require_valid(tripled)


def test_validation_rejects_bad_labels_and_signs():
    hopf = CAT["hopf_pos"]
    assert not validate(hopf.replace(signs=(1, 2))).ok
    assert not validate(hopf.replace(arc_component={a: 1 for a in hopf.arc_component})).ok
    assert not validate(hopf.replace(kind="knotted")).ok


def test_json_roundtrip_and_sign_inference():
    for name in FIXTURE_NAMES:
        D = CAT[name]
        data = json.loads(json.dumps(D.to_json()))
        assert Diagram.from_json(data) == D
        data.pop("signs")
        assert Diagram.from_json(data).signs == D.signs
        assert infer_signs(D.crossings, D.strand_boundaries) == D.signs


def test_crossing_signs_and_linking_numbers():
    assert crossing_sign(CAT["hopf_pos"], 0) == 1
    assert [crossing_sign(CAT["trefoil"], c) for c in range(3)] == [1, 1, 1]
    assert linking_number(CAT["unlink2"]) == 0
    assert linking_number(CAT["hopf_pos"]) == 1
    assert linking_number(CAT["whitehead"]) == 0
    assert linking_number(fixture("psi")) == 0
    assert linking_number(fixture("lambda(3)")) == 3
    assert fixture("lambda(3)").n_crossings == 6
    assert canonical_code(fixture("lambda(0)")) == canonical_code(CAT["xi2"])
    with pytest.raises(DiagramError):
        linking_number(CAT["trefoil"])


def test_unknown_crossing_id():
    with pytest.raises(DiagramError):
        change_crossing(CAT["hopf_pos"], 5)


def test_change_crossing():
    hopf = CAT["hopf_pos"]
    flipped = change_crossing(change_crossing(hopf, 0), 1)
    assert linking_number(flipped) == -1
    for name in ("trefoil", "whitehead", "psi"):
        D = CAT[name]
        for c in range(D.n_crossings):
            assert change_crossing(change_crossing(D, c), c) == D
            assert crossing_sign(change_crossing(D, c), c) == -crossing_sign(D, c)
            assert validate(change_crossing(D, c)).ok
    assert conway(change_crossing(CAT["trefoil"], 0)) == conway(CAT["unknot"])
    assert set_crossing_sign(hopf, 0, 1) == hopf


def test_smoothing():
    hopf = CAT["hopf_pos"]
    once = smooth(hopf, 0)
    assert once.n_crossings == 1 and once.n_components() == 1
    twice = smooth(once, 0)
    assert twice.n_crossings == 0 and twice.n_components() == 2
    # smoothing a kink splits off a circle
    kink = CAT["kinked_hopf"]
    s = smooth(kink, 0)
    assert s.n_components() == 3
    assert len(s.free_arcs()) == 1


def test_delete_component():
    W = CAT["whitehead"]
    K1 = delete_component(W, 2)
    assert K1.n_components() == 1
    assert all(c == 1 for c in K1.arc_component.values())
    assert validate(K1).ok


def test_closure_stack_reflect():
    xi = CAT["xi2"]
    psi = CAT["psi"]
    lam1 = pure_braid(1)
    assert canonical_code(closure(xi)) == canonical_code(CAT["unlink2"])
    assert linking_number(closure(lam1)) == 1
    assert conway(closure(psi)) == conway(CAT["whitehead"])
    assert stack(xi, xi).n_crossings == 0
    assert linking_number(stack(lam1, lam1)) == 2
    assert linking_number(stack(psi, reflect(psi))) == 0
    assert canonical_code(reflect(xi)) == canonical_code(xi)
    assert canonical_code(reflect(reflect(psi))) == canonical_code(psi)
    # reflection negates crossing signs, hence the linking number
    assert linking_number(reflect(lam1)) == -1
    assert validate(reflect(psi)).ok
    with pytest.raises(DiagramError):
        closure(CAT["hopf_pos"])


def test_lobes():
    kh = CAT["kinked_hopf"]
    a, b = lobe_split(kh, 0)
    assert len(a) == 1 and set(a) | set(b) == {x for x, c in kh.arc_component.items() if c == 1}
    assert lobe_linking(kh, 0) == (0, 1)
    with pytest.raises(DiagramError):
        lobe_split(CAT["hopf_pos"], 0)
    assert lobe_linking(fixture("psi_jin_step"), 1)[0] == 1


@pytest.mark.parametrize("seed", range(20))
def test_lobe_linkings_sum_to_lk(seed):
    rng = random.Random(seed)
    while True:
        word = [rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(rng.randint(3, 10))]
        D = braid_closure(3, word)
        if D.n_components() == 2:
            break
    for c in range(D.n_crossings):
        if D.is_self_crossing(c):
            assert sum(lobe_linking(D, c)) == linking_number(D)


def test_canonical_code_invariance():
    rng = random.Random(5)
    for name in ("hopf_pos", "whitehead", "psi", "kinked_hopf"):
        D = CAT[name]
        arcs = list(D.arc_component)
        shuffled = arcs[:]
        rng.shuffle(shuffled)
        R = relabel(D, {a: b + 100 for a, b in zip(arcs, shuffled)})
        assert canonical_code(R) == canonical_code(D)
        perm = list(range(D.n_crossings))
        rng.shuffle(perm)
        assert canonical_code(permute_crossings(D, perm)) == canonical_code(D)
        assert compact(R).arcs() == list(range(1, len(arcs) + 1))
    assert canonical_code(CAT["hopf_pos"]) != canonical_code(CAT["unlink2"])
    assert canonical_code(CAT["trefoil"]) != canonical_code(change_crossing(CAT["trefoil"], 0))


def test_string_link_components_start_at_boundaries():
    psi = CAT["psi"]
    comps = psi.components()
    assert len(comps) == 2
    for i, comp in zip(sorted(psi.strand_boundaries), comps):
        assert comp[0] == psi.strand_boundaries[i][0]
        assert comp[-1] == psi.strand_boundaries[i][1]
    assert psi.kind == STRING_LINK
