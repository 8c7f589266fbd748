import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdex.model import (EvalContext, Instance, InstanceError, from_json,
                        random_instance, to_json, union_size, validate)


def test_validate_ref1_ok(ref1):
    assert validate(ref1) is None


def test_validate_uncovered_packet():
    inst = Instance(2, ({1}, {1}))
    msg = validate(inst)
    assert msg is not None and "packet 2" in msg


def test_validate_single_client():
    inst = Instance(1, ({1},))
    msg = validate(inst)
    assert msg is not None and "2 clients" in msg


def test_validate_packet_out_of_range():
    inst = Instance(2, ({1, 3}, {2}))
    assert validate(inst) is not None


def test_union_size_ref1(ref1):
    ctx = EvalContext()
    assert union_size(ctx, ref1, {1, 3}) == 6
    assert union_size(ctx, ref1, {1, 2, 3, 4}) == 7
    assert ctx.gamma_count == 2


def test_union_size_singleton_charges_one(ref1):
    ctx = EvalContext()
    assert union_size(ctx, ref1, {2}) == 4
    assert ctx.gamma_count == 1


def test_union_size_bad_client(ref1):
    with pytest.raises(InstanceError):
        union_size(EvalContext(), ref1, {5})


def test_union_size_monotone(ref1):
    ctx = EvalContext()
    members = sorted(ref1.clients)
    for i in range(1, len(members) + 1):
        inner = union_size(ctx, ref1, members[:i])
        outer = union_size(ctx, ref1, members[: i + 1] if i < len(members) else members)
        assert inner <= outer
    assert union_size(ctx, ref1, members) == ref1.num_packets


def test_random_instance_valid_and_deterministic():
    for seed in range(200):
        inst = random_instance(5, 50, 0.5, seed)
        assert validate(inst) is None
        again = random_instance(5, 50, 0.5, seed)
        assert inst == again


def test_random_instance_coverage_repair():
    # Low density forces repair to kick in regularly.
    for seed in range(300):
        inst = random_instance(3, 12, 0.05, seed)
        assert validate(inst) is None


@pytest.mark.parametrize("K,L,density", [(1, 5, 0.5), (3, 0, 0.5), (3, 5, 0.0), (3, 5, 1.0)])
def test_random_instance_bad_params(K, L, density):
    with pytest.raises(InstanceError):
        random_instance(K, L, density, 0)


def test_json_round_trip(ref1):
    assert from_json(to_json(ref1)) == ref1


def test_json_example_format():
    inst = from_json('{"L":7,"has_sets":[[1,3,4,6,7],[1,2,3,5],[1,5,6],[3,5,6]]}')
    assert inst.num_packets == 7 and inst.num_clients == 4


@pytest.mark.parametrize("text", ['{"L":7}', '{"has_sets":[[1]]}', 'nonsense',
                                  '{"L":2,"has_sets":[[1],[1]]}'])
def test_json_malformed(text):
    with pytest.raises(InstanceError):
        from_json(text)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 6), st.integers(1, 10))
def test_union_size_subset_monotone_property(seed, K, L):
    inst = random_instance(K, L, 0.5, seed)
    ctx = EvalContext()
    clients = sorted(inst.clients)
    for cut in range(1, K):
        assert union_size(ctx, inst, clients[:cut]) <= union_size(ctx, inst, clients[:cut + 1])
