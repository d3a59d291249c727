"""Compile a small circuit end to end and export the assembly for the viewer.

Walks the whole pipeline on a 4-qubit circuit: parse, lower to surgery
instructions, place patches, schedule, and write the assembly file that
frontend/ renders.
"""
from pathlib import Path

from surgekit import compile_circuit, export_assembly, parse_circuit

TEXT = """\
qubits 4
H 0
CNOT 0 1
T 1
CNOT 1 2
S 2
CNOT 2 3
T 3
"""

circuit = parse_circuit(TEXT)
result = compile_circuit(circuit)

print("input circuit:")
print(TEXT)
print(f"lowered to {len(result.program.ops)} surgery instructions, "
      f"{result.program.magic_requests} magic states requested")
print()
print("schedule:")
for entry in result.assembly.schedule:
    print(f"  t={entry.start:>3} +{entry.duration} {entry.label:<18} (op {entry.op_index})")
print()
print("resource report:")
for key, value in result.report.to_dict().items():
    print(f"  {key}: {value}")

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
target = out / "demo.assembly.json"
export_assembly(result.assembly, result.report, target)
print(f"\nassembly written to {target} (load it in frontend/ to inspect in 3D)")
