"""
Reading and writing graph6
==========================

Encode a few graphs to graph6, parse them back, and print the spectrum
of each one from a multi-line graph6 file.
"""

import tempfile
from pathlib import Path

from alphaspec import all_pairs_distances, alpha_spectrum, generate_family
from alphaspec.formats import encode_graph6, parse_graph6, read_graphs
from alphaspec.graphs import generate_random_connected

graphs = [generate_family("path", 3), generate_family("cycle", 5), generate_random_connected(9, 6, 1)]
lines = [encode_graph6(g) for g in graphs]
for g, line in zip(graphs, lines):
    assert parse_graph6(line) == g
    print(f"n={g.n:2d} m={g.m:2d} -> {line.decode()}")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "small.g6"
    path.write_bytes(b"\n".join(lines) + b"\n")
    for g in read_graphs(path):
        s = alpha_spectrum(all_pairs_distances(g), 0.5)
        print(f"n={g.n}: sigma_1={s.radius:.6f}  sigma_n={s.smallest:.6f}")
