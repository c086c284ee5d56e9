import pytest

from tirpmine import (
    Constraints,
    Span,
    build_psm,
    build_singleton_vdbs,
    classify_relation,
    extend_vdb,
    parse_database,
    usfp_filter,
)
from tirpmine.vertical import PatternOccurrence, VerticalDatabase

from conftest import EXAMPLE_CONSTRAINTS, random_trial


class TestSingletonVdbs:
    def test_event_counts_on_filtered_example(self, example_db):
        filtered = usfp_filter(example_db, ("A", "C"))
        vdbs = build_singleton_vdbs(filtered, EXAMPLE_CONSTRAINTS)
        b = vdbs["B"]
        assert b.vertical_support() == 3
        assert b.horizontal_support(1) == 2
        assert b.horizontal_support(3) == 1
        assert b.horizontal_support(5) == 2

    def test_absent_event(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        assert "Z" not in vdbs

    def test_duration_filter_drops_everything(self, example_db):
        vdbs = build_singleton_vdbs(example_db, Constraints(max_dura=0))
        assert vdbs == {}

    def test_rows_carry_own_bounds(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        for vdb in vdbs.values():
            for r in vdb.rows:
                assert r.relations == ()
                assert r.sources == (r.eid,)
                assert r.start_t <= r.end_t


class TestPsm:
    def test_worked_value_on_filtered_db(self, example_db):
        filtered = usfp_filter(example_db, ("A", "C"))
        psm = build_psm(filtered, EXAMPLE_CONSTRAINTS)
        assert psm.support("A", "B") == 3

    def test_absent_pair_is_zero(self, example_db):
        psm = build_psm(example_db, EXAMPLE_CONSTRAINTS)
        assert psm.support("A", "Z") == 0

    def test_vertical_not_horizontal(self):
        db = parse_database("1|A,0,2 B,3,4 A,5,7 B,8,9\n")
        psm = build_psm(db, Constraints())
        assert psm.support("A", "B") == 1

    def test_gap_not_checked(self):
        # pair far beyond any gap bound still counts toward the matrix
        db = parse_database("1|C,0,3 C,10,13\n2|C,0,3 C,10,13\n")
        psm = build_psm(db, Constraints(max_gap=2, max_dura=20))
        assert psm.support("C", "C") == 2

    def test_max_dura_checked(self):
        db = parse_database("1|A,0,3 B,30,33\n")
        psm = build_psm(db, Constraints(max_dura=20))
        assert psm.support("A", "B") == 0


class TestExtendVdb:
    def test_cb_row_in_s1(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        cb = extend_vdb(vdbs["C"], "B", vdbs["B"], EXAMPLE_CONSTRAINTS)
        assert cb.events == ("C", "B")
        (row,) = [r for r in cb.rows if r.sid == 1]
        assert (row.eid, row.start_t, row.end_t) == (5, 12, 20)
        assert row.relations == ("s",)
        assert row.sources == (4, 5)

    def test_empty_prefix_join(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        empty = VerticalDatabase(("Z",), [])
        ext = extend_vdb(empty, "A", vdbs["A"], EXAMPLE_CONSTRAINTS)
        assert ext.rows == []

    def test_ba_horizontal_support_in_s1(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        ba = extend_vdb(vdbs["B"], "A", vdbs["A"], EXAMPLE_CONSTRAINTS)
        assert ba.horizontal_support(1) == 3

    def test_merged_eid_strictly_increases(self, example_db):
        vdbs = build_singleton_vdbs(example_db, EXAMPLE_CONSTRAINTS)
        for first in vdbs.values():
            for ev, single in vdbs.items():
                ext = extend_vdb(first, ev, single, EXAMPLE_CONSTRAINTS)
                for r in ext.rows:
                    assert r.sources[-2] < r.eid == r.sources[-1]


@pytest.mark.parametrize("seed", range(25))
def test_extension_invariants_on_random_dbs(seed):
    db, constraints, min_sup, _qes = random_trial(seed)
    threshold = min_sup * len(db)
    vdbs = build_singleton_vdbs(db, constraints)
    psm = build_psm(db, constraints)
    sequences = {s.sid: s for s in db.sequences}

    for ev, prefix in vdbs.items():
        for cand, single in vdbs.items():
            ext = extend_vdb(prefix, cand, single, constraints)
            # anti-monotonicity of vertical support
            assert ext.vertical_support() <= prefix.vertical_support()
            # pair support matrix bounds the extension's support
            assert ext.vertical_support() <= psm.support(ev, cand)
            for r in ext.rows:
                assert list(r.sources) == sorted(set(r.sources))
                assert len(r.relations) == len(r.sources) - 1
                _replay_relations(sequences[r.sid], r, constraints.epsilon)


def _replay_relations(seq, row: PatternOccurrence, epsilon: int) -> None:
    """Re-derive a row's stored relations from its source intervals."""
    first = seq.intervals[row.sources[0] - 1]
    lo, hi = first.start, first.end
    for rel, pos in zip(row.relations, row.sources[1:]):
        nxt = seq.intervals[pos - 1]
        assert classify_relation(Span(lo, hi), nxt, epsilon) == rel
        lo, hi = min(lo, nxt.start), max(hi, nxt.end)
    assert (lo, hi) == (row.start_t, row.end_t)
