import json

from click.testing import CliRunner

from surgekit.cli import main
from surgekit.circuit import parse_circuit


def invoke(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def test_randgen_writes_parseable_circuit(tmp_path):
    out = tmp_path / "c.circ"
    result = invoke("randgen", "--qubits", "6", "--gates", "20", "--tfrac", "0.5", "--seed", "4", "--out", str(out))
    assert result.exit_code == 0
    circuit = parse_circuit(out.read_text())
    assert circuit.num_qubits == 6 and len(circuit.gates) == 20


def test_compile_writes_assembly_and_report(tmp_path):
    circ = tmp_path / "c.circ"
    circ.write_text("qubits 2\nH 0\nCNOT 0 1\n")
    asm = tmp_path / "out.assembly.json"
    rep = tmp_path / "report.json"
    result = invoke("compile", str(circ), "--distance", "5", "--out", str(asm), "--report", str(rep))
    assert result.exit_code == 0
    payload = json.loads(asm.read_text())
    assert payload["version"] == 1 and payload["distance"] == 5
    report = json.loads(rep.read_text())
    assert report["code_distance"] == 5
    assert "volume" in result.output


def test_estimate_prints_report(tmp_path):
    circ = tmp_path / "c.circ"
    circ.write_text("qubits 1\nS 0\n")
    result = invoke("estimate", str(circ))
    assert result.exit_code == 0
    assert "num_steps: 2" in result.output
    assert "physical_qubits" in result.output


def test_layout_prints_map():
    result = invoke("layout", "--qubits", "10")
    assert result.exit_code == 0
    assert "footprint" in result.output
    assert "D" in result.output and "a" in result.output


def test_layout_json_dump():
    result = invoke("layout", "--qubits", "4", "--json")
    payload = json.loads(result.output)
    assert payload["version"] == 1
    assert len(payload["cells"]) == payload["dims"][0] * payload["dims"][1]


def test_bench_writes_csv(tmp_path):
    out = tmp_path / "table.csv"
    result = invoke("bench", "--qubits", "3", "--gates", "5,10", "--seeds", "2", "--out", str(out))
    assert result.exit_code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "qub,gates,volume_mean,pt_mean_seconds"
    assert len(lines) == 3
