"""Small random-circuit benchmark.

Generates seeded Clifford+T circuits (half the gates are T), compiles each,
and reports mean assembly volume and mean preparation time per configuration.
The full-size run lives in the acceptance suite; this one finishes in a few
seconds.
"""
from surgekit.bench import linear_fit_r_squared, run_benchmark

table = run_benchmark(
    qubit_counts=[20],
    gate_counts=[50, 100, 150, 200],
    t_fraction=0.5,
    seeds_per_config=5,
)

print(table.to_csv())

xs = [row.gates for row in table.rows]
ys = [row.pt_mean_seconds for row in table.rows]
print(f"preparation-time linearity: R^2 = {linear_fit_r_squared(xs, ys):.4f}")
