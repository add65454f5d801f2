"""The committed catalog JSON artifacts match the builders exactly."""

import json
from pathlib import Path

import pytest

from polyrel.catalog import equation_names, get_equation

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "catalog"


def test_artifact_directory_is_complete():
    names = set(equation_names())
    files = {p.stem for p in DATA_DIR.glob("*.json")}
    assert files == names


@pytest.mark.parametrize("name", equation_names())
def test_artifact_matches_builder(name):
    data = json.loads((DATA_DIR / f"{name}.json").read_text())
    assert data == get_equation(name).to_json()


def test_env_seed_is_honored(monkeypatch):
    import contextlib
    import io

    from polyrel.cli import main

    monkeypatch.setenv("POLYLOG_SEED", "99")

    def run():
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            code = main(
                ["verify", "--equation", "three_term", "--mode", "symbolic",
                 "--trials", "2", "--functionals", "2", "--json"]
            )
        return code, json.loads(out.getvalue())

    code, data = run()
    assert code == 0
    assert data["seed"] == 99
