import pytest

from dowkerpriv.models import RelationFormat
from dowkerpriv.utils.exceptions import DuplicateIdError
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.relations import guess_format
from dowkerpriv.utils.interfaces.relations import parse_relation
from dowkerpriv.utils.interfaces.relations import read_relation
from dowkerpriv.utils.interfaces.relations import serialize_relation
from dowkerpriv.utils.interfaces.relations import write_relation


def test_read_fixture_formats(fixtures_dir, staircase, travel, tetrahedron, double_mobius):
    assert read_relation(fixtures_dir / "staircase.csv") == staircase
    assert read_relation(fixtures_dir / "travel.csv") == travel
    assert read_relation(fixtures_dir / "tetrahedron.json") == tetrahedron
    assert read_relation(fixtures_dir / "double_mobius.pairs") == double_mobius


def test_csv_matrix_cells():
    r = parse_relation(b"\xef\xbb\xbf,a,b\n1,1,\n2, 0 ,1\n\n", "csv-matrix")
    assert r.individuals == ("1", "2")
    assert r.row("1") == {"a"}
    assert r.row("2") == {"b"}

    with pytest.raises(ParseError) as e:
        parse_relation(",a,b\n1,1\n", RelationFormat.CSV_MATRIX)
    assert e.value.line == 2

    with pytest.raises(ParseError):
        parse_relation("", RelationFormat.CSV_MATRIX)
    with pytest.raises(ParseError):
        parse_relation(b"\xff\xfe", RelationFormat.CSV_MATRIX)
    with pytest.raises(DuplicateIdError):
        parse_relation(",a\n1,1\n1,0\n", RelationFormat.CSV_MATRIX)


def test_pairs_directives():
    text = "# individuals: 1,2,3\n# attributes: a,b\n1,a\n2,b\n2,b\n"
    r = parse_relation(text, "pairs")
    assert r.individuals == ("1", "2", "3")
    assert r.row("3") == frozenset(), "Individual 3 is listed without pairs"
    assert r.n_pairs() == 2, "Duplicate pairs are dropped"

    with pytest.raises(ParseError):
        parse_relation("# individuals: 1\n2,a\n", "pairs")
    with pytest.raises(ParseError) as e:
        parse_relation("1,a\n1\n", "pairs")
    assert e.value.line == 2


def test_json_documents():
    r = parse_relation('{"individuals": [1, 2], "attributes": ["a"], "pairs": [[1, "a"]]}', "json")
    assert r.individuals == ("1", "2")
    assert r.row("1") == {"a"}

    with pytest.raises(ParseError):
        parse_relation('{"individuals": [], "attributes": []}', "json")
    with pytest.raises(ParseError):
        parse_relation('{"individuals": ["1"], "attributes": ["a"], "pairs": [["1", "b"]]}', "json")
    with pytest.raises(ParseError):
        parse_relation('{"schema_version": 2, "individuals": [], "attributes": [], "pairs": []}', "json")
    with pytest.raises(ParseError) as e:
        parse_relation('{\n  "individuals": [\n', "json")
    assert e.value.line is not None


def test_serialization_keeps_relation(travel):
    blank = travel.with_rows(list(travel.rows[:-1]) + [0])
    for fmt in RelationFormat:
        assert parse_relation(serialize_relation(blank, fmt), fmt) == blank, f"{fmt.value} changed the relation"


def test_guess_format(tmp_path, staircase):
    assert guess_format("relation.CSV") == RelationFormat.CSV_MATRIX
    assert guess_format("relation.txt") == RelationFormat.PAIRS
    with pytest.raises(ValueError):
        guess_format("relation.xlsx")

    path = tmp_path / "staircase.json"
    write_relation(staircase, path)
    assert read_relation(path) == staircase
    assert read_relation(path, "json") == staircase
