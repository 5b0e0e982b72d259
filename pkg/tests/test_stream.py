"""Generator behaviour against published terms and the brute-force oracle."""

from itertools import islice

import pytest

from figfig import TripleStream, triples, value_at

from oracle import oracle_triples

# Leading terms as published for A005228, A030124, and A225687.
A_FIRST = [1, 3, 7, 12, 18, 26, 35, 45, 56, 69]
B_FIRST = [2, 4, 5, 6, 8, 9, 10, 11, 13, 14]
U_FIRST = [1, 2, 2, 2, 3, 3, 3, 3, 4, 4]


def test_first_ten_rows_match_published_terms():
    rows = TripleStream().take(10)
    assert [r.n for r in rows] == list(range(1, 11))
    assert [r.a for r in rows] == A_FIRST
    assert [r.b for r in rows] == B_FIRST
    assert [r.u for r in rows] == U_FIRST


def test_single_steps_and_checkpoints():
    stream = TripleStream()
    assert stream.next_triple() == (1, 1, 2, 1)
    assert stream.next_triple() == (2, 3, 4, 2)
    rest = stream.take(18)
    assert rest[7] == (10, 69, 14, 4)
    assert rest[-1] == (20, 260, 25, 5)


def test_take_returns_leading_rows():
    assert TripleStream().take(3) == [(1, 1, 2, 1), (2, 3, 4, 2), (3, 7, 5, 2)]
    assert TripleStream().take(1) == [(1, 1, 2, 1)]


def test_b_jumps_over_a_values():
    rows = TripleStream().take(21)
    # 18 and 26 are a-values, so b skips them
    assert [r.b for r in rows[11:14]] == [16, 17, 19]
    assert rows[20].b == 27


def test_take_rejects_bad_count():
    with pytest.raises(ValueError):
        TripleStream().take(0)


def test_value_at_checkpoints():
    assert value_at("a", 5) == 18
    assert value_at("u", 9) == 4
    assert value_at("b", 21) == 27
    assert value_at("a", 1) == 1


def test_value_at_rejects_bad_arguments():
    with pytest.raises(ValueError):
        value_at("c", 5)
    with pytest.raises(ValueError):
        value_at("a", 0)


def test_matches_oracle_deeply():
    rows = TripleStream().take(2000)
    assert [tuple(r) for r in rows] == oracle_triples(2000)


def test_fresh_streams_are_identical():
    assert TripleStream().take(500) == TripleStream().take(500)


def test_iteration_protocol_matches_take():
    assert list(islice(triples(), 5)) == TripleStream().take(5)


def test_monotonicity_and_u_steps():
    rows = TripleStream().take(1500)
    assert rows[0].u == 1
    for before, after in zip(rows, rows[1:]):
        assert after.a > before.a
        assert after.b > before.b
        assert after.u - before.u in (0, 1)


def test_shift_identity():
    for row in TripleStream().take(1500):
        assert row.b == row.n + row.u


def test_prefix_tracks_leading_a_values():
    stream = TripleStream()
    rows = stream.take(400)
    prefix = stream.a_prefix
    assert list(prefix) == [r.a for r in rows[: len(prefix)]]
    last_u = rows[-1].u
    assert last_u + 1 <= len(prefix) <= last_u + 2


def test_prefix_starts_at_one():
    stream = TripleStream()
    stream.next_triple()
    assert stream.a_prefix[0] == 1


def test_prefix_stays_sublinear():
    stream = TripleStream()
    for _ in range(20_000):
        row = stream.next_triple()
    assert len(stream.a_prefix) <= row.u + 2


def test_early_a_accessor():
    stream = TripleStream()
    stream.take(50)
    assert stream.early_a(1) == 1
    assert stream.early_a(5) == 18
    with pytest.raises(ValueError):
        stream.early_a(0)
    with pytest.raises(IndexError):
        stream.early_a(10**6)


def test_counting_window_bracket():
    stream = TripleStream()
    for row in islice(stream, 300):
        low = stream.early_a(row.u) - row.u
        high = stream.early_a(row.u + 1) - (row.u + 1)
        assert low < row.n <= high
