import pytest

from qroots.errors import BadLabelError, CyclicQuiverError, LoopError
from qroots.quiver import (
    Quiver,
    admissible_relabel,
    build_quiver,
    connected_components,
    full_subquiver,
    is_admissible,
    quiver_from_json,
    quiver_to_json,
    sink_first_order,
    sink_source_reflection,
    support_is_connected,
)


def test_build_kronecker():
    q = build_quiver(2, [(1, 2), (1, 2)])
    assert q.n == 2 and q.arrows == ((1, 2), (1, 2))
    assert len(connected_components(q)) == 1


def test_single_vertex():
    q = build_quiver(1, [])
    assert q.n == 1 and q.arrows == ()


def test_two_cycle_rejected():
    with pytest.raises(CyclicQuiverError):
        build_quiver(2, [(1, 2), (2, 1)])


def test_loop_rejected():
    with pytest.raises(LoopError):
        build_quiver(2, [(1, 1)])


def test_bad_labels_rejected():
    with pytest.raises(BadLabelError):
        build_quiver(2, [(1, 3)])
    with pytest.raises(BadLabelError):
        build_quiver(2, [(0, 1)])


def test_admissible_relabel_single_arrow():
    q = build_quiver(2, [(1, 2)])
    rq, perm = admissible_relabel(q)
    assert rq.arrows == ((2, 1),)
    assert perm == (2, 1)
    assert is_admissible(rq)


def test_admissible_relabel_identity_when_already_admissible():
    q = build_quiver(2, [(2, 1)])
    rq, perm = admissible_relabel(q)
    assert rq == q and perm == (1, 2)


def test_admissible_relabel_path():
    q = build_quiver(3, [(1, 2), (2, 3)])
    rq, _ = admissible_relabel(q)
    assert all(t > h for t, h in rq.arrows)


def test_sink_first_order_path():
    q = build_quiver(3, [(1, 2), (2, 3)])
    order = sink_first_order(q)
    # every arrow's head precedes its tail
    pos = {v: i for i, v in enumerate(order)}
    assert all(pos[h] < pos[t] for t, h in q.arrows)


def test_components_disconnected():
    q = build_quiver(4, [(1, 2)])
    comps = connected_components(q)
    assert sorted(len(c) for c in comps) == [1, 1, 2]


def test_full_subquiver_keeps_multiplicity():
    q = build_quiver(3, [(1, 2), (1, 2), (2, 3)])
    sub, relabel = full_subquiver(q, (1, 2))
    assert sub.n == 2 and len(sub.arrows) == 2
    assert set(relabel) == {1, 2}


def test_sink_source_reflection_flips_arrows():
    q = build_quiver(2, [(1, 2)])
    r = sink_source_reflection(q, 2)
    assert r.arrows == ((2, 1),)


def test_support_connectivity():
    q = build_quiver(3, [(1, 2), (2, 3)])
    assert support_is_connected(q, (1, 1, 0))
    assert not support_is_connected(q, (1, 0, 1))


def test_json_round_trip_is_byte_identical():
    q = build_quiver(3, [(1, 2), (1, 2), (2, 3)])
    text = quiver_to_json(q)
    assert quiver_from_json(text) == q
    assert quiver_to_json(quiver_from_json(text)) == text


def test_json_rejects_malformed():
    with pytest.raises(BadLabelError):
        quiver_from_json("{not json")
    with pytest.raises(BadLabelError):
        quiver_from_json('{"vertices": 2}')


def test_quiver_is_hashable_value_type():
    assert build_quiver(2, [(1, 2)]) == Quiver(2, ((1, 2),))
    assert len({build_quiver(2, [(1, 2)]), Quiver(2, ((1, 2),))}) == 1
