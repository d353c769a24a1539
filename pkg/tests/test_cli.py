import csv
import io

import pytest

from hypercolor import load_instance, projective_plane
from hypercolor.cli import main, parse_sweep_config
from hypercolor.core import dump_instance
from hypercolor.errors import FormatError


def run_cli(*args):
    try:
        return main(list(args))
    except SystemExit as exc:  # argparse usage errors
        return exc.code


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_gen_writes_loadable_instance(tmp_path):
    out = tmp_path / "fano.json"
    assert run_cli("gen", "--kind", "projective_plane", "--params", "2", "--out", str(out)) == 0
    h = load_instance(str(out))
    assert h.num_edges == 7


def test_gen_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen", "--kind", "random_regular_linear", "--params", "20,3", "--seed", "9"]
    assert run_cli(*args, "--out", str(a)) == 0
    assert run_cli(*args, "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_infeasible_exits_2(tmp_path):
    out = tmp_path / "x.json"
    code = run_cli("gen", "--kind", "random_regular_linear", "--params", "2,3", "--out", str(out))
    assert code == 2


def test_bound_csv_row(capsys):
    assert run_cli("bound", "--n", "100", "--r", "4", "--csv") == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0][0] == "n"
    record = dict(zip(rows[0], rows[1]))
    assert record["budget_m"] == "118"
    assert record["case_limit"] == "1.181"


def test_bound_human_readable(capsys):
    assert run_cli("bound", "--n", "101", "--r", "3") == 0
    out = capsys.readouterr().out
    assert "budget_m         129" in out
    assert "case_limit       1.281" in out


def test_bound_rejects_bad_r():
    assert run_cli("bound", "--n", "10", "--r", "2") == 2


def test_color_verify_round_trip(tmp_path):
    inst = tmp_path / "fano.json"
    colors = tmp_path / "colors.json"
    dump_instance(projective_plane(2), str(inst))
    code = run_cli(
        "color", "--in", str(inst), "--procedure", "greedy-recolor",
        "--palette", "7", "--out", str(colors),
    )
    assert code == 0
    assert run_cli("verify", "--in", str(inst), "--coloring", str(colors)) == 0


def test_color_default_palette_is_budget(tmp_path, capsys):
    inst = tmp_path / "fano.json"
    colors = tmp_path / "colors.json"
    dump_instance(projective_plane(2), str(inst))
    code = run_cli("color", "--in", str(inst), "--procedure", "greedy-recolor", "--out", str(colors))
    assert code == 0  # fano is 3-regular: budget(7, 3) = 10 colors available


def test_color_abort_exits_1(tmp_path):
    inst = tmp_path / "fano.json"
    dump_instance(projective_plane(2), str(inst))
    code = run_cli(
        "color", "--in", str(inst), "--procedure", "greedy-recolor",
        "--palette", "6", "--out", str(tmp_path / "c.json"),
    )
    assert code == 1
    assert not (tmp_path / "c.json").exists()


def test_color_random_order(tmp_path):
    inst = tmp_path / "fano.json"
    colors = tmp_path / "colors.json"
    dump_instance(projective_plane(2), str(inst))
    code = run_cli(
        "color", "--in", str(inst), "--procedure", "greedy-recolor",
        "--palette", "8", "--order", "random:3", "--out", str(colors),
    )
    assert code == 0
    assert run_cli("verify", "--in", str(inst), "--coloring", str(colors)) == 0


def test_verify_detects_violation(tmp_path):
    inst = tmp_path / "pair.json"
    bad = tmp_path / "bad.json"
    inst.write_text('{"num_vertices":2,"edges":[[0,1]]}\n')
    bad.write_text('{"0":1,"1":1}\n')
    assert run_cli("verify", "--in", str(inst), "--coloring", str(bad)) == 1


def test_reader_rejects_bad_instance(tmp_path):
    inst = tmp_path / "bad.json"
    inst.write_text('{"num_vertices":2,"edges":[[0,5]]}\n')
    code = run_cli("exact", "--in", str(inst))
    assert code == 2


def test_exact_fano(tmp_path, capsys):
    inst = tmp_path / "fano.json"
    dump_instance(projective_plane(2), str(inst))
    assert run_cli("exact", "--in", str(inst)) == 0
    assert capsys.readouterr().out.strip() == "7"
    assert run_cli("exact", "--in", str(inst), "--cap", "5") == 2


def test_unknown_procedure_is_usage_error(tmp_path):
    inst = tmp_path / "fano.json"
    dump_instance(projective_plane(2), str(inst))
    code = run_cli(
        "color", "--in", str(inst), "--procedure", "mystery", "--out", str(tmp_path / "c.json")
    )
    assert code == 2


SWEEP_CONFIG = """
# theorem 1 smoke sweep
generator = random_regular_linear
procedure = greedy_recolor
n = 20,40
r = 3,4
seeds = 5
"""


def test_sweep_twenty_records(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    out = tmp_path / "out.csv"
    cfg.write_text(SWEEP_CONFIG)
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out)) == 0
    rows = read_csv(out)
    assert rows[0] == [
        "kind", "params", "seed", "n", "r_or_rank", "num_vertices", "palette_size",
        "procedure", "outcome", "colors_used", "budget_m", "case_limit", "ratio",
        "wall_time_ms",
    ]
    body = rows[1:]
    assert len(body) == 20
    header = rows[0]
    for row in body:
        record = dict(zip(header, row))
        assert record["outcome"] == "colored"
        assert int(record["colors_used"]) <= int(record["budget_m"])


def test_sweep_is_deterministic_modulo_timing(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(SWEEP_CONFIG)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out1), "--seed", "3") == 0
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out2), "--seed", "3") == 0
    strip = lambda rows: [row[:-1] for row in rows]
    assert strip(read_csv(out1)) == strip(read_csv(out2))


def test_sweep_root_seed_changes_instances(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(SWEEP_CONFIG)
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out1), "--seed", "1") == 0
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out2), "--seed", "2") == 0
    seeds1 = [row[2] for row in read_csv(out1)[1:]]
    seeds2 = [row[2] for row in read_csv(out2)[1:]]
    assert seeds1 != seeds2


def test_sweep_empty_generator_list(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    out = tmp_path / "out.csv"
    cfg.write_text("generator =\nprocedure = greedy_recolor\nseeds = 3\n")
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out)) == 0
    assert len(read_csv(out)) == 1  # header only


def test_sweep_unknown_procedure_exits_2(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("generator = sunflower\nprocedure = quantum\nn = 4\nrank = 2\nseeds = 1\n")
    assert run_cli("sweep", "--config", str(cfg), "--out", str(tmp_path / "o.csv")) == 2


def test_sweep_uniform_procedure(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    out = tmp_path / "out.csv"
    cfg.write_text(
        "generator = random_uniform_linear\n"
        "procedure = uniform_maxdeg\n"
        "num_vertices = 40\n"
        "rank = 3\n"
        "n_edges = 10,16\n"
        "force_high_degree = 1\n"
        "seeds = 3\n"
    )
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out)) == 0
    rows = read_csv(out)
    body = rows[1:]
    assert len(body) == 6
    header = rows[0]
    for row in body:
        record = dict(zip(header, row))
        assert record["outcome"] == "colored"
        assert record["case_limit"] == "1.250"
        assert int(record["colors_used"]) <= int(record["budget_m"])


def test_sweep_invalid_coloring_is_fatal(tmp_path, monkeypatch):
    """A procedure emitting an improper coloring must stop the sweep with exit 1."""
    from hypercolor import Coloring
    from hypercolor import cli as cli_module

    def broken(h, palette, order=None):
        return Coloring.from_assignment({v: 1 for v in range(h.num_vertices)})

    monkeypatch.setattr(cli_module.coloring, "greedy_recolor", broken)
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("generator = random_regular_linear\nprocedure = greedy_recolor\nn = 12\nr = 3\nseeds = 1\n")
    assert run_cli("sweep", "--config", str(cfg), "--out", str(tmp_path / "o.csv")) == 1


def test_sweep_records_guarantee_violation(tmp_path, monkeypatch):
    """An abort where the hypotheses promise success exits 1 but keeps the CSV."""
    from hypercolor.coloring import AbortReport
    from hypercolor import cli as cli_module

    def always_abort(h, palette, order=None):
        return AbortReport(0, palette, frozenset(), {}, {})

    monkeypatch.setattr(cli_module.coloring, "greedy_recolor", always_abort)
    cfg = tmp_path / "sweep.cfg"
    out = tmp_path / "o.csv"
    cfg.write_text("generator = random_regular_linear\nprocedure = greedy_recolor\nn = 12\nr = 3\nseeds = 2\n")
    assert run_cli("sweep", "--config", str(cfg), "--out", str(out)) == 1
    rows = read_csv(out)
    assert len(rows) == 3
    assert all(row[8] == "aborted" for row in rows[1:])


def test_parse_sweep_config_errors():
    with pytest.raises(FormatError):
        parse_sweep_config("generator = sunflower\nmystery_key = 3\n")
    with pytest.raises(FormatError):
        parse_sweep_config("generator = sunflower\nprocedure = greedy_recolor\nn = a,b\n")
    with pytest.raises(FormatError):
        parse_sweep_config("generator = sunflower\n")  # no procedure named
