import json

import pytest

from dowkerpriv.cli import main
from dowkerpriv.utils.interfaces.hdf5 import load_link_survey


def _run(capsys, *argv) -> dict:
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return json.loads(captured.out)


def test_analyze(capsys, fixtures_dir):
    report = _run(capsys, "analyze", fixtures_dir / "staircase.csv")
    assert report["schema_version"] == 1
    assert report["command"] == "analyze"
    assert report["relation"] == {"individuals": 4, "attributes": 3, "pairs": 6}
    assert report["tight"] and report["connected"]
    assert not report["attribute_privacy"]
    assert report["individual_attribute_privacy"] == {"1": False, "2": True, "3": True, "4": True}
    assert report["uniquely_identifiable"] == ["1", "2"]
    assert report["free_faces"] == [["a"], ["c"]]
    assert report["attribute_complex"]["facets"] == [["a", "b"], ["b", "c"]]
    assert [s["shape"] for s in report["shapes"]] == ["other"]


def test_iars(capsys, fixtures_dir):
    report = _run(capsys, "iars", fixtures_dir / "travel.csv", "--individual", "3")
    assert report["target"]["label"] == "(3, BCD)"
    assert report["r_fast"] == 2
    assert report["r_slow"] == 3
    assert report["max_length"] == 3
    assert len(report["sequences"]) == 4
    assert ["B", "C", "D"] in report["sequences"]


def test_homology(capsys, fixtures_dir):
    report = _run(capsys, "homology", fixtures_dir / "double_mobius.pairs")
    assert report["betti"] == [0, 0, 4]
    assert not report["empty"]
    assert report["chain_bound"]["holds"]

    report = _run(capsys, "homology", fixtures_dir / "double_mobius.pairs", "--max-dim", "1")
    assert report["betti"] == []


def test_lattice(capsys, fixtures_dir):
    report = _run(capsys, "lattice", fixtures_dir / "travel.csv")
    assert report["top"] == "(12345, ∅)"
    assert report["length"] == 4
    assert len(report["elements"]) == 17


def test_inference_lattice(capsys, fixtures_dir):
    report = _run(
        capsys,
        "lattice",
        fixtures_dir / "sequences.json",
        "--inference",
        "--observe",
        "a",
        "--observe",
        "",
        "--observe",
        "cc",
    )
    assert report["valid"]
    assert report["proper_elements"] == 7
    assert report["observations"]["a"] == {"outcome": "elements", "elements": [[["1", "2"], "a"]]}
    assert report["observations"][""]["outcome"] == "top"
    assert report["observations"]["cc"]["outcome"] == "inconsistent"


def test_strategy(capsys, fixtures_dir):
    report = _run(capsys, "strategy", fixtures_dir / "three_states.json", "--goal", "3", "--strategy", "s1")
    assert [s["name"] for s in report["strategies"]] == ["s1", "s2", "s3", "s4"]
    assert report["strategies"][0] == {"name": "s1", "actions": ["a3", "a4"], "goals": ["1"]}
    assert report["fully_controllable"]
    assert report["goal_delay"] == {"goal": "3", "sequence": ["a4", "a1"]}
    assert report["strategy_iars"]["max_length"] == 2
    assert report["strategy_iars"]["sequences"] == [["a3", "a4"], ["a4", "a3"]]

    report = _run(capsys, "strategy", fixtures_dir / "four_states.json")
    assert len(report["strategies"]) == 7


def test_morphism(capsys, fixtures_dir):
    report = _run(
        capsys,
        "morphism",
        fixtures_dir / "cyclic5.csv",
        fixtures_dir / "tetrahedron.json",
        fixtures_dir / "quotient.json",
    )
    assert report["valid"]
    assert report["epimorphism"]
    assert not report["monomorphism"]
    assert report["maps"]["pairs"] == {"surjective": True, "injective": False}
    assert report["generated"]["fxg"]["reached"] == 14
    assert report["generated"]["fyg"]["witnesses"]["(13, ac)"] == "(1, abc) ∨ (3, acd)"


def test_encode(capsys, fixtures_dir, tmp_path):
    saved = tmp_path / "encoded.csv"
    report = _run(
        capsys,
        "encode",
        fixtures_dir / "records.csv",
        "--fields",
        "age,zip",
        "--id-field",
        "id",
        "--save",
        saved,
    )
    assert report["relation"]["individuals"] == ["p1", "p2", "p3"]
    assert report["relation"]["attributes"] == ["age=30", "age=40", "zip=111", "zip=222"]
    assert report["multiplicities"] == {"p1": 2, "p2": 1, "p3": 1}
    assert report["members"]["p1"] == ["p1", "p4"]
    assert saved.exists()


def test_embed(capsys, fixtures_dir):
    report = _run(capsys, "embed", fixtures_dir / "triangle.csv", fixtures_dir / "tetrahedron.json")
    assert report["count"] == 24


def test_link_outputs(capsys, fixtures_dir, tmp_path):
    scatter = tmp_path / "scatter.csv"
    survey = tmp_path / "survey.h5"
    report = _run(
        capsys,
        "link",
        fixtures_dir / "travel.csv",
        "--individual",
        "3",
        "--scatter",
        scatter,
        "--hdf5",
        survey,
    )
    [record] = report["records"]
    assert record["stripped"]["betti"] == [1]
    assert record["longest_iars"] == 3

    assert scatter.read_text(encoding="utf-8").splitlines()[0] == "individual,h,i,h_root,log_i,link_size"
    [loaded] = load_link_survey(str(survey))
    assert loaded.individual == "3"
    assert loaded.longest_iars == 3


def test_output_is_deterministic(capsys, fixtures_dir, tmp_path):
    first = _run(capsys, "analyze", fixtures_dir / "travel.csv")
    second = _run(capsys, "analyze", fixtures_dir / "travel.csv")
    assert first == second

    out = tmp_path / "report.json"
    assert main(["analyze", str(fixtures_dir / "travel.csv"), "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text(encoding="utf-8")) == first


def test_data_errors_exit_with_one(capsys, tmp_path):
    broken = tmp_path / "broken.csv"
    broken.write_text(",a,b\n1,1,0\n2,1,x\n", encoding="utf-8")
    assert main(["analyze", str(broken)]) == 1
    assert "line 3, column 3" in capsys.readouterr().err

    unknown = tmp_path / "relation.xyz"
    unknown.write_text("1,a\n1,b\n2,b\n2,c\n3,c\n4,c\n", encoding="utf-8")
    assert main(["analyze", str(unknown)]) == 1
    assert main(["analyze", str(unknown), "--format", "pairs"]) == 0


def test_usage_errors_exit_with_two(fixtures_dir):
    with pytest.raises(SystemExit) as e:
        main(["analyze"])
    assert e.value.code == 2

    with pytest.raises(SystemExit) as e:
        main(["link", str(fixtures_dir / "travel.csv")])
    assert e.value.code == 2, "link needs --all or an individual"
