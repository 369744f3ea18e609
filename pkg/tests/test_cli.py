import json

import pytest
import typer
from typer.testing import CliRunner

from cluster_bases._cli import handle_errors
from cluster_bases.cli import app
from cluster_bases.errors import InvalidArgumentError

runner = CliRunner()

LOOP = "X[1,-1] + X[-1,1] + X[-1,-1]"


def test_mutate_prints_variable_and_matrices(fixtures):
    """Quantum mutation of the SL3 seed prints X1', B and Lambda."""
    result = runner.invoke(app, ["mutate", "--seed", str(fixtures / "sl3.json"), "-k", "1", "--quantum"])
    assert result.exit_code == 0, result.output
    assert "X1' = X[-1,1,0] + X[-1,0,1]" in result.output
    assert "B =" in result.output
    assert "Lambda =" in result.output


def test_mutate_json(fixtures):
    result = runner.invoke(app, ["mutate", "--seed", str(fixtures / "sl3.json"), "-k", "1", "--quantum", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["variables"] == {"1": "X[-1,1,0] + X[-1,0,1]"}
    assert payload["b"] == [[0, 1, -1], [-1, 0, 0], [1, 0, 0]]
    assert payload["lambda"] == [[0, 1, -1], [-1, 0, 0], [1, 0, 0]]


def test_mutate_unknown_vertex(fixtures):
    """An undeclared vertex is a domain error."""
    result = runner.invoke(app, ["mutate", "--seed", str(fixtures / "sl3.json"), "-k", "7"])
    assert result.exit_code == 1
    assert "vertex out of range" in result.output


def test_malformed_seed_names_entry(tmp_path):
    """A b-matrix that is not skew-symmetrizable is rejected as malformed input."""
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": ["1", "2"], "frozen": [], "d": [1, 1], "b": [[0, 1], [1, 0]]}))
    result = runner.invoke(app, ["mutate", "--seed", str(path), "-k", "1"])
    assert result.exit_code == 2
    assert "(0,1)" in result.output


def test_expand_json(fixtures):
    result = runner.invoke(app, ["expand", "--seed", str(fixtures / "kronecker.json"), "-k", "1,2", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["history"] == ["1", "2"]
    assert payload["variables"] == {
        "1": "X[-1,2] + X[-1,0]",
        "2": "X[0,-1] + X[-2,3] + 2*X[-2,1] + X[-2,-1]",
    }


def test_trop_transports_degree(fixtures):
    result = runner.invoke(app, ["trop", "--seed", str(fixtures / "kronecker.json"), "-g", "1,0", "-k", "1"])
    assert result.exit_code == 0, result.output
    assert result.output.startswith("g=[-1,")


def test_explore_export(fixtures, tmp_path):
    """Exported catalogs land in the output folder as JSON."""
    result = runner.invoke(
        app,
        ["explore", "--seed", str(fixtures / "kronecker.json"), "--depth", "3", "--export", "-o", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    assert "seeds: 7" in result.output
    (written,) = tmp_path.glob("catalog_depth3_unlabeled_*.json")
    document = json.loads(written.read_text())
    assert document["mode"] == "unlabeled"
    assert len(document["seeds"]) == 7
    assert len(document["variables"]) == 8


@pytest.mark.parametrize("name", ["sl3.json", "annulus_triangulation.json", "kronecker_vl.json"])
def test_roundtrip_is_byte_identical(fixtures, name):
    result = runner.invoke(app, ["roundtrip", str(fixtures / name)])
    assert result.exit_code == 0, result.output
    assert result.output == (fixtures / name).read_text()


def test_check_all_suites_pass(fixtures):
    """Every property suite holds on the Kronecker exchange graph."""
    seed = str(fixtures / "kronecker.json")
    result = runner.invoke(app, ["check", "--seed", seed, "--depth", "4", "--laurent", "--positivity", "--tropical"])
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert [line.split(":")[0] for line in lines] == ["laurent", "positivity", "tropical"]
    assert all(line.endswith(", 0 failed") for line in lines)


def test_check_single_suite_json(fixtures):
    result = runner.invoke(
        app, ["check", "--seed", str(fixtures / "kronecker.json"), "--depth", "2", "--positivity", "--json"]
    )
    assert result.exit_code == 0, result.output
    (row,) = json.loads(result.output)
    assert row["suite"] == "positivity"
    assert row["failed"] == 0


def test_bases_annulus(fixtures):
    result = runner.invoke(app, ["bases", "annulus", "--seed", str(fixtures / "kronecker.json"), "-k", "1"])
    assert result.exit_code == 0, result.output
    assert result.output.strip() == LOOP


def test_ccmap_of_representation(fixtures):
    """The cluster character of the loop module is the loop element."""
    result = runner.invoke(
        app,
        ["ccmap", "--seed", str(fixtures / "kronecker.json"), "--rep", str(fixtures / "kronecker_vl.json"), "--json"],
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["g"] == [1, -1]
    assert payload["element"] == LOOP


def test_ccmap_generic_requires_rng_seed(fixtures):
    result = runner.invoke(app, ["ccmap", "--seed", str(fixtures / "kronecker.json"), "--generic", "1,-1"])
    assert result.exit_code == 2


def test_ccmap_rejects_quiver_mismatch(fixtures):
    result = runner.invoke(
        app, ["ccmap", "--seed", str(fixtures / "sl3.json"), "--rep", str(fixtures / "kronecker_vl.json")]
    )
    assert result.exit_code == 1


def test_domain_errors_exit_with_one():
    """Arguments outside an operation's domain are domain errors, not malformed input."""
    with pytest.raises(typer.Exit) as excinfo:
        with handle_errors():
            raise InvalidArgumentError("max_depth must be nonnegative")
    assert excinfo.value.exit_code == 1


def test_explore_with_workers(fixtures):
    result = runner.invoke(app, ["explore", "--seed", str(fixtures / "kronecker.json"), "--depth", "2", "-w", "2"])
    assert result.exit_code == 0, result.output
    assert "seeds: 5" in result.output


def test_verify_triangular_reports_cluster_monomials(fixtures, tmp_path):
    """With a search depth the report includes the cluster monomial check."""
    path = tmp_path / "family.json"
    path.write_text(json.dumps({"elements": ["X[1,0]", "X[0,1]"]}))
    seed = str(fixtures / "kronecker.json")
    result = runner.invoke(app, ["bases", "verify-triangular", "--seed", seed, "-f", str(path), "-n", "2", "--json"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["monomials"] is None
    result = runner.invoke(
        app, ["bases", "verify-triangular", "--seed", seed, "-f", str(path), "-n", "2", "-d", "4", "--json"]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["monomials"] == "inconclusive"
