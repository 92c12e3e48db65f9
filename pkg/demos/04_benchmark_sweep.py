"""
A small benchmark sweep
=======================

The same harness that backs ``paretosum bench``: every (instance, algorithm,
t) cell runs in a child process with a timeout, rows go to a CSV file.
"""

#%%
import csv
import tempfile
from pathlib import Path

from paretosum.bench import append_csv, generated_instances, run_bench

instances = generated_instances("near-curved", sizes=[500, 2000], seeds=[0])
records = run_bench(
    instances,
    ["sc", "bsc", "conv-enhanced", "conv-cp", "conv-cdxz"],
    [1, 10],
    repeats=3,
    timeout_secs=60,
)

#%%
out = Path(tempfile.mkdtemp()) / "bench.csv"
append_csv(out, records)
rows = list(csv.DictReader(out.open()))
print(out)
print(f"{'instance':22s} {'algo':14s} {'mode':6s} {'t':>3s} {'k':>6s} {'delta':>5s} {'pruned':>7s} {'ms':>9s}")
for r in rows:
    ms = int(r["time_nanos"]) / 1e6
    pruned = f"{float(r['pruned_fraction']):.2f}" if r["pruned_fraction"] else ""
    print(f"{r['instance_id']:22s} {r['algo']:14s} {r['mode']:6s} {r['t']:>3s} {r['output_size']:>6s} "
          f"{r['delta_measured']:>5s} {pruned:>7s} {ms:9.2f}")
