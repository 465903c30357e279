"""Waypoint explanations for unsolvable hybrid planning problems."""

import json
from pathlib import Path

from ._wpx import (  # noqa: F401
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_PATHS,
    Error,
    InternalError,
    Model,
    ParseError,
    PreconditionError,
    Problem,
    ResourceError,
    SemanticError,
    check_json,
    count_paths,
    enumerate_paths,
    explain_json,
    parse_model,
    parse_problem,
    problem_model_path,
    validate,
    waypoints,
)


def load_problem(problem, model=None, depth=None):
    """Reads a problem file. The model defaults to the one the problem names,
    relative to the problem's directory."""
    problem = Path(problem)
    text = problem.read_text(encoding="utf-8")
    if model is None:
        named = problem_model_path(text)
        if named is None:
            raise ValueError(f"{problem}: no model given")
        model = problem.parent / named
    model = Path(model)
    p = parse_problem(text, parse_model(model.read_text(encoding="utf-8"), str(model)))
    if depth is not None:
        p.depth = depth
    return p


def explain(problem, **options):
    """Explanation report as a dict (see schema/report.schema.json)."""
    return json.loads(explain_json(problem, **options))


def check(problem, **options):
    return json.loads(check_json(problem, **options))
