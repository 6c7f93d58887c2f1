"""Batch-1 control latency: the bound policy versus rerunning the
hypernetwork at every step."""

from hyperpolicy.evalbench import profile_cost
from hyperpolicy.policy import HyperPolicy, ModelConfig

cost = profile_cost(HyperPolicy(ModelConfig(), 0), warmup=200, timed=1000, counterfactual_timed=300)
print(f"compact step        {cost.latency_ms:.3f} ms  ({cost.step_flops:,} FLOPs)")
print(f"per-step hypernet   {cost.counterfactual_latency_ms:.3f} ms  ({cost.counterfactual_step_flops:,} FLOPs)")
print(f"speedup             x{cost.speedup:.1f}")
print(f"hypernet calls per episode: {cost.hn_invocations_per_episode}")
