"""Alpha sweeps, CSV emission, and crossing-point location."""

import math

import numpy as np
import pytest

from gramq import (
    InvalidParameter,
    SweepSpec,
    canonical,
    find_crossings,
    records_to_csv,
    reference_curve,
    sweep_records,
)
from gramq.curves import CSV_HEADER


def test_sweep_spec_validation():
    with pytest.raises(InvalidParameter):
        SweepSpec(2.0, 1.0, 0.1)
    with pytest.raises(InvalidParameter):
        SweepSpec(0.1, 2.0, 0.0)
    with pytest.raises(InvalidParameter):
        SweepSpec(0.1, 2.0, 0.1, z=0.0)


def test_grid_skips_window_and_inserts_limit():
    grid = SweepSpec(0.9, 1.1, 0.05, exclude_window=0.06).grid()
    assert 1.0 in grid
    assert all(not (0.94 < a < 1.06) or a == 1.0 for a in grid)
    assert grid == sorted(grid)


def test_grid_entirely_inside_window_is_single_limit():
    grid = SweepSpec(0.9995, 1.0005, 0.0001, exclude_window=1e-3).grid()
    assert grid == [1.0]


def test_grid_away_from_one_has_no_limit_row():
    grid = SweepSpec(1.2, 2.0, 0.2).grid()
    assert 1.0 not in grid
    assert grid == pytest.approx([1.2, 1.4, 1.6, 1.8, 2.0])


def test_sweep_records_order_and_limit_method():
    records = sweep_records([canonical("trine"), canonical("b92")], SweepSpec(0.5, 1.5, 0.5))
    labels = [r.ensemble_label for r in records]
    assert labels == ["trine"] * 3 + ["b92"] * 3
    alphas = [r.alpha for r in records[:3]]
    assert alphas == [0.5, 1.0, 1.5]
    by_alpha = {r.alpha: r for r in records[:3]}
    assert by_alpha[1.0].method == "limit"
    assert by_alpha[1.0].value == pytest.approx(math.log(1.5), abs=1e-12)
    assert by_alpha[0.5].method == "generic_eq3"


def test_csv_header_and_round_trip():
    records = sweep_records([canonical("six")], SweepSpec(0.3, 1.9, 0.4))
    text = records_to_csv(records)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    for line, rec in zip(lines[1:], records):
        fields = line.split(",")
        assert float(fields[1]) == rec.alpha
        assert float(fields[4]) == rec.value  # 17 significant digits round-trip


def test_sweep_bb84_tetrad_identical_columns():
    spec = SweepSpec(0.05, 2.0, 0.05)
    bb84 = sweep_records([canonical("bb84")], spec)
    tetrad = sweep_records([canonical("tetrad")], spec)
    assert len(bb84) == len(tetrad)
    for a, b in zip(bb84, tetrad):
        assert a.alpha == b.alpha
        assert abs(a.value - b.value) < 1e-10


def test_reference_curve_continuous_through_one():
    for name in ("b92", "diag", "trine", "bb84", "six"):
        lim = reference_curve(name, 1.0)
        assert reference_curve(name, 1.0 + 1e-7) == pytest.approx(lim, abs=1e-6)
        assert reference_curve(name, 1.0 - 1e-7) == pytest.approx(lim, abs=1e-6)


PAPER_ROOTS = {
    ("b92", "Qcomm[table]"): 1.53,
    ("diag", "Ql1[table]"): 0.23,
    ("diag", "Qbig[table]"): 0.54,
    ("trine", "Ql1[table]"): 0.20,
    ("trine", "QFS_ref[table]"): 1.77,
    ("trine", "Qcomm[table]"): 1.77,
    ("trine", "Qclon_ref[table]"): 1.33,
    ("trine", "QHol[table]"): 0.96,
    ("trine", "Qbig[table]"): 0.41,
    ("bb84", "QHol[table]"): 1.59,
    ("bb84", "Qbig[table]"): 0.50,
    ("tetrad", "QHol[table]"): 1.26,
}


def test_crossings_match_paper_observations():
    results, notes = find_crossings()
    assert notes == []
    found = {(r.ensemble, r.rhs): r for r in results}

    star = found[("trine,diag", "Qaz:diag")]
    assert star.alpha_root == pytest.approx(0.33, abs=0.01)

    for key, expected in PAPER_ROOTS.items():
        r = found[key]
        assert r.alpha_root == pytest.approx(expected, abs=0.02), key

    # the BB84 curve meets its commutator value of 1 exactly at alpha = 1/2
    assert found[("bb84", "Qbig[table]")].alpha_root == pytest.approx(0.5, abs=1e-6)
    assert found[("trine", "Ql1[table]")].alpha_root == pytest.approx(0.20, abs=0.01)

    for r in results:
        assert abs(r.residual) < 1e-8


def test_crossings_include_computed_constant_variants():
    results, _ = find_crossings()
    rhs = {r.rhs for r in results}
    assert "Ql1[computed]" in rhs and "Qbig[computed]" in rhs
    table = next(r for r in results if r.ensemble == "diag" and r.rhs == "Ql1[table]")
    exact = next(r for r in results if r.ensemble == "diag" and r.rhs == "Ql1[computed]")
    # 0.94 vs 2 sqrt(2) / 3 = 0.9428...: the roots differ past the second decimal
    assert abs(table.alpha_root - exact.alpha_root) < 0.01
    assert exact.rhs_value == pytest.approx(2 * np.sqrt(2) / 3, abs=1e-12)
