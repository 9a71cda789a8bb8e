import pytest

import rsieve


def test_engines_agree():
    want = rsieve.simple_sieve(20000)
    for engine in ("simple", "segmented", "rolling", "atkin"):
        assert rsieve.primes(2, 20000, engine) == want
    assert rsieve.count(10**6) == 78498
    assert rsieve.segmented_sieve(100, 10) == rsieve.base_primes(100)
    assert rsieve.sieve_segment(100, 120) == [101, 103, 107, 109, 113]


def test_rolling_sieve_state_machine():
    s = rsieve.RollingSieve(100)
    assert (s.root_bound, s.delta, s.current) == (11, 13, 100)
    assert [s.next() for _ in range(6)] == [False, True, False, True, False, False]
    assert s.nextprime() == 107
    s.audit()
    assert rsieve.RollingSieve(100).next_factored() == (100, [(2, 2), (5, 2)])


def test_snapshot_round_trip():
    s = rsieve.RollingSieve(100)
    for _ in range(5000):
        s.next()
    blob = s.save()
    assert blob[:4] == b"RSV1"
    t = rsieve.RollingSieve.load(blob)
    assert [t.next() for _ in range(3000)] == [s.next() for _ in range(3000)]
    with pytest.raises(ValueError):
        rsieve.RollingSieve.load(b"XXXX" + blob[4:])


def test_atkin_interval_is_pausable():
    whole = rsieve.AtkinInterval(10**6, 1000)
    whole.run()
    p = rsieve.AtkinInterval(10**6, 1000)
    assert p.phase == "FORM1"
    while not p.done:
        completed, used = p.step(7)
        assert used <= 7
    assert p.finish() == whole.finish() == rsieve.sieve_segment(10**6, 10**6 + 999)


def test_incremental_sieve():
    s = rsieve.IncrementalSieve(100)
    r = rsieve.RollingSieve(100)
    assert [s.next() for _ in range(5000)] == [r.next() for _ in range(5000)]
    assert s.nextprime() == r.nextprime()
    tight = rsieve.IncrementalSieve(100000, budget=1)
    with pytest.raises(rsieve.InvariantViolation):
        for _ in range(10000):
            tight.next()


def test_instrumentation():
    work = rsieve.count_rolling_work(100, 10000)
    assert work["pushes"] == rsieve.expected_pushes(100, 10000)
    assert work["peak_nodes"] == 25
    assert rsieve.incremental_profile(1000, 20000)["gaps"] == rsieve.count(20000) - rsieve.count(1000)
    assert 0.9 < rsieve.pnt_check(10**6) < 1.2
    assert 0.9 < rsieve.chebyshev_check(10**6) < 1.2
    assert abs(rsieve.mertens_check(10**5) - rsieve.mertens_check(10**6)) < 0.01


def test_bitmap_round_trip():
    bits = [bool(x % 3) for x in range(37)]
    blob = rsieve.encode_bitmap(100, bits)
    assert blob[:4] == b"PBM1"
    assert rsieve.decode_bitmap(blob) == (100, bits)


def test_argument_errors():
    with pytest.raises(ValueError):
        rsieve.RollingSieve(99)
    with pytest.raises(ValueError):
        rsieve.primes(2, 10, "nope")
