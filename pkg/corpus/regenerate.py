"""Rebuild the edge-list corpus and its manifest from the generators.

    python3 corpus/regenerate.py
"""

from pathlib import Path

from drgwb import graphs

HERE = Path(__file__).resolve().parent

CORPUS = [
    ("cycle5", graphs.cycle(5)),
    ("petersen", graphs.petersen()),
    ("hypercube3", graphs.hypercube(3)),
    ("hypercube4", graphs.hypercube(4)),
    ("hypercube5", graphs.hypercube(5)),
    ("hypercube6", graphs.hypercube(6)),
    ("folded_hypercube5", graphs.folded_hypercube(5)),
    ("folded_hypercube7", graphs.folded_hypercube(7)),
    ("hamming3_3", graphs.hamming(3, 3)),
    ("johnson5_2", graphs.johnson(5, 2)),
    ("grassmann4_2_2", graphs.grassmann_q(4, 2, 2)),
    # a tree, deliberately not distance-regular
    ("tree6", graphs.Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)], "tree6")),
]


def main():
    lines = ["# name\tfile\texpected intersection array"]
    for name, g in CORPUS:
        (HERE / f"{name}.el").write_text(graphs.to_edge_list(g))
        res = graphs.is_distance_regular(g)
        expected = str(res) if not isinstance(res, graphs.NotDistanceRegular) else "not-drg"
        lines.append(f"{name}\t{name}.el\t{expected}")
    (HERE / "manifest.tsv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
