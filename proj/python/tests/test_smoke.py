import json
from fractions import Fraction

import pytest

import supchar


def test_counts():
    assert supchar.count_supertheories(supchar.cyclic_table(13)) == 6
    assert supchar.count_supertheories(supchar.dihedral_table(23), mode="first") == 3
    assert supchar.count_supertheories(supchar.frobenius_table(7, 3), threads=4) == 5


def test_bad_parts_and_alpha():
    z13 = supchar.cyclic_table(13)
    assert supchar.bad_part_count(z13) == 4020
    assert supchar.alpha(z13) == Fraction(4020, 4095)
    assert supchar.alpha(supchar.dihedral_table(2)) == 0


def test_bell_numbers_are_exact():
    assert supchar.bell_number(12) == 4213597
    assert supchar.bell_number(17) == 82864869804
    assert supchar.bell_number(30) == 846749014511809332450147


def test_z7_theories():
    t = supchar.cyclic_table(7)
    doc = supchar.find_supertheories(t)
    assert doc["group"] == "Z7"
    parts = [th["x_partition"] for th in doc["theories"]]
    assert [[1], [2, 3, 5], [4, 6, 7]] in parts
    assert [[1], [2, 7], [3, 6], [4, 5]] in parts
    assert all(supchar.verify(t, doc))


def test_modes_agree():
    t = supchar.dihedral_table(19)
    main = supchar.find_supertheories(t, mode="main")
    first = supchar.find_supertheories(t, mode="first")
    strip = lambda d: [(th["x_partition"], th["k_partition"]) for th in d["theories"]]
    assert strip(main) == strip(first)
    assert first["stats"]["kappa_calls"] == supchar.bell_number(10)


def test_table_round_trip(tmp_path):
    t = supchar.frobenius_table(13, 3)
    text = t.to_json()
    back = supchar.load_table(text)
    assert back.num_classes == 7 and back.order == 39 and back.root_order == 39
    path = tmp_path / "t.json"
    path.write_text(text)
    assert supchar.load_table_file(str(path)).name == "T13_3"
    assert supchar.validate_table(back) == []


def test_errors(tmp_path):
    doc = json.loads(supchar.cyclic_table(5).to_json())
    doc["order"] = 6
    with pytest.raises(supchar.InvalidTable, match="class sizes sum"):
        supchar.load_table(json.dumps(doc))
    with pytest.raises(supchar.SizeError):
        supchar.cyclic_table(65)
    with pytest.raises(supchar.IoError):
        supchar.load_table_file(str(tmp_path / "missing.json"))
    with pytest.raises(supchar.ArgumentError):
        supchar.count_supertheories(supchar.cyclic_table(5), mode="fast")
    assert issubclass(supchar.InvalidTable, supchar.SupcharError)
