import pytest

from fingerlab.tables import TABLE_IDS, regenerate_table


@pytest.mark.parametrize("table_id", ["I", "III", "IV"])
def test_regeneration_matches_bundled(table_id):
    table, diff = regenerate_table(table_id)
    assert diff == [], diff[:10]


def test_table_one_row_order():
    table, _ = regenerate_table("I")
    assert table.row_labels == ["1", "4/3", "3/2", "2", "3", "4"]
    assert table.cells[("2", "9")].value == "12"
    assert table.cells[("2", "11")].value == ">=17"


def test_csv_rendering():
    table, _ = regenerate_table("IV")
    csv = table.to_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == ",2,3,4"
    assert lines[1] == "2,0,0,0"
    assert "5/8^e" in csv and ".4330" in csv


def test_unknown_table_rejected():
    with pytest.raises(ValueError):
        regenerate_table("V")
    assert set(TABLE_IDS) == {"I", "II", "III", "IV", "SMP"}


def test_provenance_distinguishes_literature():
    table, _ = regenerate_table("III")
    assert table.cells[("4", "3")].provenance.startswith("construction:etf")
    assert table.cells[("5", "3")].provenance.startswith("literature")
    table, _ = regenerate_table("IV")
    assert table.cells[("13", "4")].mark == "e"
    assert table.cells[("5", "3")].provenance.startswith("literature")
