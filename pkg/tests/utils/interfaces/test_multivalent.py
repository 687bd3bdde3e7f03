import pytest

from dowkerpriv.relation import uniquely_identifiable
from dowkerpriv.utils.exceptions import MissingFieldError
from dowkerpriv.utils.exceptions import PreconditionViolatedError
from dowkerpriv.utils.interfaces.multivalent import encode_multivalent
from dowkerpriv.utils.interfaces.multivalent import read_records


def test_encode_records(fixtures_dir):
    records = read_records(fixtures_dir / "records.csv")
    assert records[0] == {"id": "p1", "age": "30", "zip": "111"}

    encoded = encode_multivalent(records, ["age", "zip"], id_field="id")
    r = encoded.relation
    assert r.individuals == ("p1", "p2", "p3")
    assert r.row("p3") == {"age=40", "zip=111"}
    assert encoded.multiplicities == {"p1": 2, "p2": 1, "p3": 1}
    assert encoded.members["p1"] == ("p1", "p4")

    assert all(len(r.row(x)) == 2 for x in r.individuals), "One attribute per field"
    assert uniquely_identifiable(r, "p2")


def test_records_are_numbered_without_id_field():
    encoded = encode_multivalent([{"color": "red"}, {"color": "blue"}], ["color"])
    assert encoded.relation.individuals == ("1", "2")
    assert encoded.relation.attributes == ("color=red", "color=blue")


def test_invalid_encodings():
    with pytest.raises(PreconditionViolatedError):
        encode_multivalent([], ["color"])
    with pytest.raises(PreconditionViolatedError):
        encode_multivalent([{"color": "red"}], ["color", "color"])
    with pytest.raises(MissingFieldError):
        encode_multivalent([{"color": "red"}, {"size": "s"}], ["color"])
    with pytest.raises(MissingFieldError):
        encode_multivalent([{"color": "red"}], ["color"], id_field="id")
