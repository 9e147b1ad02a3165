import itertools

import pytest

from mvpolytopes import bz, lusztig


def a2_datum(a2, m2, m23, m3, m13):
    """The running two-parameter family: M at Lambda-orbit points fixed to 0."""
    return bz.make_bz(
        a2,
        {
            (1, 0): 0,
            (0, 1): 0,
            (-1, 1): m2,
            (-1, 0): m23,
            (0, -1): m3,
            (1, -1): m13,
        },
    )


def test_make_bz_checks_keys(a2):
    with pytest.raises(ValueError, match="missing"):
        bz.make_bz(a2, {(1, 0): 0})
    with pytest.raises(ValueError, match="not chamber weights"):
        bz.make_bz(a2, {(9, 9): 0})


def test_value_lookup(a2):
    d = a2_datum(a2, -2, -3, -2, -1)
    assert d.value((-1, 0)) == -3
    assert d.as_dict()[(1, -1)] == -1


def test_from_lusztig_frozen(a2):
    d = bz.from_lusztig(a2, (1, 2, 1), (2, 1, 1))
    assert d.value((-1, 1)) == -2
    assert d.value((-1, 0)) == -3
    assert d.value((0, -1)) == -2
    assert d.value((1, -1)) == -1
    assert d.value((1, 0)) == 0 and d.value((0, 1)) == 0


def test_lusztig_data_round_trip(a2):
    d = bz.from_lusztig(a2, (1, 2, 1), (2, 1, 1))
    assert bz.lusztig_data(a2, d, (1, 2, 1)) == (2, 1, 1)
    assert bz.lusztig_data(a2, d, (2, 1, 2)) == (1, 1, 2)


def test_round_trip_all_words_b2(b2):
    words = b2.reduced_words(b2.w0)
    for n in itertools.product(range(3), repeat=4):
        d = bz.from_lusztig(b2, words[0], n)
        assert bz.lusztig_data(b2, d, words[0]) == n
        m = bz.lusztig_data(b2, d, words[1])
        assert bz.from_lusztig(b2, words[1], m) == d


def test_edge_lengths_nonneg_iff_valid_family(a2):
    # M2 = -2, M23 = -3, M3 = -2; M13 = x free
    for x, edges_ok in [(-2, True), (-1, True), (0, True), (1, False), (-3, False)]:
        d = a2_datum(a2, -2, -3, -2, x)
        report = bz.validate(a2, d)
        assert (not report.edge_violations) == edges_ok


def test_tropical_relation_picks_one_point(a2):
    # within the edge-valid window only x = -1 satisfies the min-relation
    valid = [x for x in range(-2, 1) if bz.is_valid(a2, a2_datum(a2, -2, -3, -2, x))]
    assert valid == [-1]


def test_validation_report_lines(a2):
    d = a2_datum(a2, -2, -3, -2, 1)
    report = bz.validate(a2, d)
    assert not report.is_valid
    assert any("edge" in line for line in report.lines())
    good = bz.from_lusztig(a2, (1, 2, 1), (0, 1, 2))
    assert bz.validate(a2, good).lines() == ["valid"]


def test_face_relation_holds_spot(a2, b2):
    d = bz.from_lusztig(a2, (1, 2, 1), (2, 1, 1))
    for face in a2.two_faces():
        assert bz.face_relation_holds(a2, d, face)
    db = bz.from_lusztig(b2, b2.reference_word, (1, 2, 0, 1))
    for face in b2.two_faces():
        assert bz.face_relation_holds(b2, db, face)


def test_from_lusztig_covers_all_words_consistently(a3):
    n = (1, 0, 2, 0, 1, 1)
    ref = a3.reference_word
    d = bz.from_lusztig(a3, ref, n)
    for word in a3.reduced_words(a3.w0):
        expected = lusztig.transport(a3, ref, word, n)
        assert bz.lusztig_data(a3, d, word) == expected


def test_edge_length_is_lusztig_entry(b2):
    ref = b2.reference_word
    n = (2, 0, 1, 3)
    d = bz.from_lusztig(b2, ref, n)
    w = b2.identity
    for k, i in enumerate(ref):
        assert bz.edge_length(b2, d, w, i) == n[k]
        w = b2.right(w, i)
