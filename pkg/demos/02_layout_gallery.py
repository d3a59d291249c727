"""Show how the patch layout scales with the qubit count.

Prints the ASCII map for a few sizes (D data, a ancilla routing, M
distillation, . unused) and the routing-ancilla overhead relative to the
number of data patches, which stays near the 50-70% mark.
"""
from surgekit.layout import CellKind, build_layout, layout_ascii

for num_qubits in (1, 4, 10, 16, 33):
    grid = build_layout(num_qubits)
    print(f"=== {num_qubits} qubit(s): {grid.width}x{grid.height}, footprint {grid.footprint}")
    print(layout_ascii(grid))
    print()

print("routing overhead (ancilla cells / data cells):")
for num_qubits in (10, 20, 50, 100, 150, 200):
    counts = build_layout(num_qubits).counts()
    ratio = counts[CellKind.ANCILLA_ROUTE] / counts[CellKind.DATA]
    bar = "#" * round(ratio * 40)
    print(f"  q={num_qubits:>3}  {ratio:5.3f}  {bar}")
