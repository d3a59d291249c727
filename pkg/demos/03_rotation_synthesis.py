"""Approximate arbitrary Z rotations with Clifford+T words.

For a few angles, shows the trace-distance error of the enumerated base
search (depth 0) and of one and two Solovay-Kitaev refinement rounds,
plus the word the synthesizer settles on.
"""
import math

from surgekit.synthesis import rz_matrix, solovay_kitaev, trace_distance

angles = [math.pi / 3, 1.0, 2.686, 4.5471, math.pi / 128]

print(f"{'angle':>10} {'depth 0':>10} {'depth 1':>10} {'depth 2':>10} {'len@2':>6}")
for angle in angles:
    u = rz_matrix(angle)
    row = []
    final = None
    for depth in (0, 1, 2):
        seq = solovay_kitaev(u, depth)
        row.append(trace_distance(seq.matrix, u))
        final = seq
    print(f"{angle:10.5f} {row[0]:10.6f} {row[1]:10.6f} {row[2]:10.6f} {len(final.gates):6d}")

seq = solovay_kitaev(rz_matrix(2.686), depth=2)
print("\nword for RZ(2.686) at depth 2:")
print("  " + " ".join(g.value for g in seq.gates))
