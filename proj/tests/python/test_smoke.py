import zzschur


def test_dimensions():
    assert zzschur.zigzag_dim(1) == 5
    assert zzschur.zigzag_dim(3) == 13
    assert zzschur.tilting_dim(2) == 8
    assert zzschur.schur_dim(2, 1, 1) == 20
    assert zzschur.schur_dim(2, 2, 1) == 202
    assert zzschur.schur_dim(1, 2, 1) == 13


def test_lr_and_kostka():
    assert zzschur.lr_coeff([1], [1], [2]) == 1
    assert zzschur.lr_coeff([2, 1], [2, 1], [3, 2, 1]) == 2
    assert zzschur.lr_coeff([1], [1], [3]) == 0
    # one box in color 1: fillable by 1^{e_1} or 1^{a_{0,1}}
    assert zzschur.kostka(2, 1, [[], [1]], [[], [1, 0]]) == 1
    assert zzschur.kostka(2, 1, [[], [1]], [[1, 0], []]) == 1


def test_characters():
    ch = zzschur.delta_character(2, 1, [[1, 1], []])
    assert sum(ch.values()) == 1  # column shape has a single tableau
    doms = zzschur.dominant_weights(2, 2, 1)
    assert len(doms) == 5


def test_verification_reports():
    rep = zzschur.verify_heredity(3)
    assert rep["pass"] is True
    rep = zzschur.verify_lzprime(2)
    assert rep["pass"] is True
    rep = zzschur.verify_dims(2, 2, 1)
    assert rep["pass"] is True
    assert rep["stats"]["kostka_square_sum"] == "202"


def test_ringel_small():
    rep = zzschur.verify_ringel(2, 1, 1, "Q")
    assert rep["pass"] is True
    assert rep["stats"]["end_total"] == "20"


def test_tilting_dump():
    t = zzschur.dump_tilting(1)
    assert len(t["basis"]) == 4
    names = {b["name"] for b in t["basis"]}
    assert "v0" in names
