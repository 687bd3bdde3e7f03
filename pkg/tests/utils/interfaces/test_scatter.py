import csv

from dowkerpriv.homology import link_survey
from dowkerpriv.homology import scatter_measures
from dowkerpriv.utils.interfaces.scatter import COLUMNS
from dowkerpriv.utils.interfaces.scatter import write_scatter_csv


def test_write_scatter_csv(tmp_path, travel):
    points = scatter_measures(link_survey(travel))
    path = tmp_path / "scatter.csv"
    write_scatter_csv(points, path)

    with open(path, newline="", encoding="utf-8") as file:
        rows = list(csv.DictReader(file))

    assert tuple(rows[0].keys()) == COLUMNS
    assert [row["individual"] for row in rows] == [p.individual for p in points]
    for row, p in zip(rows, points):
        assert int(row["h"]) == p.h
        assert int(row["i"]) == p.i
        assert float(row["h_root"]) == p.h_root
        assert row["log_i"] == ("" if p.log_i is None else repr(p.log_i))
