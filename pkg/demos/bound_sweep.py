"""
Sweeping every bound over a random corpus
=========================================

Build a small corpus of random connected graphs, evaluate all bounds on an
alpha grid and list the tightest inequality for each bound id.
"""

from alphaspec.sweep import CorpusSpec, SweepConfig, run_sweep, to_text

config = SweepConfig(alpha_grid=(0.0, 0.5, 0.9), corpus=CorpusSpec(seeds=40, n_range=(3, 9)))
report = run_sweep(config)
print(to_text(report))

# smallest slack per bound id, scaled by the size of the compared quantity
tightest = {}
for rec in report.records:
    for ar in rec.alphas:
        for r in ar.results:
            if not r.applicable:
                continue
            scaled = r.slack / (1 + abs(r.actual_value))
            if r.bound_id not in tightest or scaled < tightest[r.bound_id][0]:
                tightest[r.bound_id] = (scaled, rec.graph_id, ar.alpha, r.side)

for bound_id, (scaled, gid, a, side) in tightest.items():
    print(f"{bound_id:32s} {side:5s} slack/(1+|x|)={scaled:10.3e}  at {gid}, alpha={a}")
