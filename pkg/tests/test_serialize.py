import json

import numpy as np

from dsmkit.serialize import (
    format_float,
    matrix_to_csv,
    read_matrix_csv,
    write_csv_rows,
    write_json,
    write_matrix_csv,
    write_residual_mass_csv,
)


def test_format_float_round_trips():
    for v in [1.0 / 3.0, 1e-300, 123456.789, 0.1 + 0.2, -7.25]:
        assert float(format_float(v)) == v


def test_matrix_csv_round_trip(tmp_path):
    rng = np.random.Generator(np.random.PCG64(0))
    m = rng.standard_normal((4, 3))
    path = str(tmp_path / "m.csv")
    write_matrix_csv(m, path)
    back = read_matrix_csv(path)
    assert np.array_equal(back, m)  # exact, thanks to 17 significant digits


def test_matrix_csv_vector_promotes_to_row():
    assert matrix_to_csv(np.array([1.0, 2.0])) == "1,2\n"


def test_read_matrix_csv_tolerates_header(tmp_path):
    path = str(tmp_path / "m.csv")
    with open(path, "w") as fh:
        fh.write("a,b\n1.5,2.5\n")
    assert np.array_equal(read_matrix_csv(path), [[1.5, 2.5]])


def test_residual_mass_csv(tmp_path):
    path = str(tmp_path / "m.csv")
    write_residual_mass_csv(np.array([0.5, 0.25]), path)
    assert open(path).read() == "m\n0.5\n0.25\n"


def test_write_csv_rows_none_becomes_empty_cell(tmp_path):
    path = str(tmp_path / "r.csv")
    write_csv_rows(path, ["a", "b"], [(1, None), (2, 0.5)])
    assert open(path).read() == "a,b\n1,\n2,0.5\n"


def test_write_json_sorted_and_newline_terminated(tmp_path):
    path = str(tmp_path / "r.json")
    write_json({"b": 1, "a": 2}, path)
    text = open(path).read()
    assert text.endswith("\n")
    assert json.loads(text) == {"a": 2, "b": 1}
    assert text.index('"a"') < text.index('"b"')
