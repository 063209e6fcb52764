"""
How fast is the fully random process? Gathering scaling evidence
================================================================

From a random start with uniformly random selection, is the one-draw
process O(n log(max degree))? No proof is known either way; this script
only tabulates the normalized means so the trend can be inspected. A flat
mean/(n*ln(max degree)) column is consistent with that rate, a flat
mean/(n*max degree) column would suggest the slower one.
"""

from decolor import ExperimentConfig, sweep, sweep_to_csv

print("cliques, one-draw, random start and order (20k trials per point):")
rows = sweep(
    ExperimentConfig(graph={"kind": "clique", "n": 4}, algorithm="dc",
                     trials=20_000, master_seed=7,
                     counters=("step3_draws",)),
    "graph.n", [4, 8, 16, 32],
)
print(sweep_to_csv(rows))

print("sparse random graphs, D = max degree + 1 (20k trials per point):")
rows = sweep(
    ExperimentConfig(graph={"kind": "erdos", "n": 16, "p": 0.2, "seed": 160},
                     algorithm="dc", trials=20_000, master_seed=8,
                     counters=("step3_draws",)),
    "graph.n", [16, 32, 64],
)
print(sweep_to_csv(rows))
print("(per-n edge probability is fixed, so the max degree grows with n;")
print(" nothing here is a proof, the table is evidence only)")
