import os
import subprocess

import jsonschema
import pytest

import wpx

MODEL = """
automaton hop;
vars x;
location a { inv: x <= 5; rate x in [1, 1]; }
location b { rate x in [0, 0]; }
location c { }
trans a -> b { label: move; guard: x >= 1; }
init a { x = 0; }
"""


def test_parse_model_and_problem():
    model = wpx.parse_model(MODEL)
    assert model.name == "hop"
    assert model.locations == ["a", "b", "c"]
    assert model.transition_count == 1
    p = wpx.parse_problem("problem p; goal b; depth 1;", model)
    assert (p.init, p.goal, p.depth, p.depth_unit) == ("a", "b", 1, "transitions")
    assert wpx.validate(p) == []
    again = wpx.parse_model(model.serialize())
    assert again.serialize() == model.serialize()


def test_errors_are_typed():
    with pytest.raises(wpx.ParseError, match="strict inequality"):
        wpx.parse_model("automaton m; vars x; location a { inv: x < 1; } init a { true; }")
    with pytest.raises(wpx.SemanticError, match="undeclared variable y"):
        wpx.parse_model("automaton m; vars x; location a { inv: y <= 1; } init a { true; }")
    model = wpx.parse_model(MODEL)
    with pytest.raises(wpx.SemanticError):
        wpx.parse_problem("problem p; goal zz; depth 1;", model)
    assert issubclass(wpx.ResourceError, wpx.Error)


def test_solvable_toy(schema):
    p = wpx.parse_problem("problem p; goal b; depth 1;", wpx.parse_model(MODEL))
    report = wpx.explain(p)
    jsonschema.validate(report, schema)
    assert report["explanation"]["kind"] == "solvable_contradiction"
    assert report["explanation"]["plan"]["steps"][0]["action"] == "move"
    check = wpx.check(p)
    assert check["status"] == "reachable"
    assert check["path"] == ["a", "b"]


def test_discrete_infeasible(schema):
    p = wpx.parse_problem("problem p; goal c; depth 4;", wpx.parse_model(MODEL))
    assert wpx.enumerate_paths(p) == []
    report = wpx.explain(p)
    jsonschema.validate(report, schema)
    assert report["explanation"] == {"kind": "discrete_infeasible"}
    assert report["chain"] is None


def test_rover(benchmarks, schema):
    p = wpx.load_problem(benchmarks / "planetary_rover" / "depth12.prob")
    assert len(wpx.enumerate_paths(p)) == 3
    assert wpx.count_paths(p) == 3
    assert wpx.waypoints(p) == ["loc11", "loc6", "loc1", "loc2", "loc3", "loc8", "loc13", "loc14", "loc25"]
    report = wpx.explain(p, parallel=2)
    jsonschema.validate(report, schema)
    assert report["explanation"] == {"kind": "first_unreachable_waypoint", "location": "loc13"}
    assert report["feasible_waypoints"] == 6
    assert wpx.check(p)["status"] == "unreachable"


def test_depth_override_and_caps(benchmarks):
    p = wpx.load_problem(benchmarks / "water_level_monitor" / "depth50.prob", depth=20)
    assert p.depth == 20
    assert wpx.count_paths(p) == 5
    nav = wpx.load_problem(benchmarks / "nav" / "depth10.prob")
    with pytest.raises(wpx.ResourceError):
        wpx.enumerate_paths(nav, max_paths=10)
    assert wpx.waypoints(nav) == ["loc1", "loc6"]


def _cli():
    return os.environ.get("WPX_CLI")


@pytest.mark.skipif(not _cli(), reason="WPX_CLI not set")
def test_cli_json_validates_for_every_benchmark(benchmarks, schema, sub_schema):
    problems = sorted(benchmarks.glob("*/*.prob"))
    assert problems
    for prob in problems:
        for command, check in (("explain", schema), ("check", sub_schema("check")),
                               ("waypoints", sub_schema("waypoints")), ("paths", sub_schema("paths"))):
            out = subprocess.run([_cli(), command, "--json", "--problem", str(prob)], capture_output=True,
                                 text=True, check=True).stdout
            jsonschema.validate(__import__("json").loads(out), check)
