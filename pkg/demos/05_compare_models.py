"""Multi-task comparison sweep (hypernetwork, unnormalized ablation,
instruction-blind base policy, FLOP-matched monolithic model).

    python demos/05_compare_models.py OUT_DIR [STEPS] [SEEDS]

Finished runs are skipped, so the sweep can be restarted after interruption.
"""

import json
import sys

from hyperpolicy.experiments import SweepBudget, run_sweep

out = sys.argv[1] if len(sys.argv) > 1 else "runs/multitask"
steps = int(sys.argv[2]) if len(sys.argv) > 2 else 5_000
seeds = tuple(int(s) for s in sys.argv[3].split(",")) if len(sys.argv) > 3 else (0, 1, 2)
budget = SweepBudget(steps=steps, warmup_steps=steps // 10, seeds=seeds, extra=["trainer.peak_lr=0.001"])
summary = run_sweep(out, budget)
for name, m in summary["models"].items():
    print(f"{name:<24} ID {m['id_mean']:.3f} +- {m['id_stderr']:.3f}   OOD {m['ood_mean']:.3f} +- {m['ood_stderr']:.3f}")
print(json.dumps(summary["budget"]))
