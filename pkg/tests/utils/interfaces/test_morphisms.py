import pytest

from dowkerpriv.morphism import validate_morphism
from dowkerpriv.utils.exceptions import ParseError
from dowkerpriv.utils.interfaces.morphisms import parse_morphism
from dowkerpriv.utils.interfaces.morphisms import read_morphism


def test_read_quotient_maps(fixtures_dir, cyclic5, tetrahedron):
    m = read_morphism(fixtures_dir / "quotient.json", cyclic5, tetrahedron)
    assert m.fx["5"] == "4"
    assert m.fy["e"] == "a"
    assert validate_morphism(m) == (True, [])


def test_morphism_documents_need_both_maps(staircase):
    with pytest.raises(ParseError):
        parse_morphism('{"individuals": {"1": "1"}}', staircase, staircase)
    with pytest.raises(ParseError):
        parse_morphism('{"individuals": ["1"], "attributes": {}}', staircase, staircase)

    m = parse_morphism('{"individuals": {"1": 1}, "attributes": {}}', staircase, staircase)
    assert m.fx == {"1": "1"}, "Ids are read as strings"
