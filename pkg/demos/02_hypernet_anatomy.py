"""What the hypernetwork owns and what it emits.

Prints the parameter accounting, the generated-tensor layout, and shows that
at initialization every instruction yields the same policy.
"""

import numpy as np

from hyperpolicy import autodiff as ad
from hyperpolicy.policy import HyperPolicy, ModelConfig, activated_param_count
from hyperpolicy.taskworld import TaskWorld, all_combos, sample_task

model = HyperPolicy(ModelConfig(), seed=0)
print(f"shared encoder     {model.shared_param_count():>12,}")
print(f"generated policy   {model.generated_param_count():>12,}")
print(f"hypernetwork       {model.hypernet_param_count():>12,}")
print(f"activated (train)  {activated_param_count(model, 'train'):>12,}")
print(f"activated (test)   {activated_param_count(model, 'test'):>12,}")
print(f"per-step FLOPs     {model.step_flops():>12,}")
print(f"per-episode FLOPs  {model.episode_flops(9):>12,}")

print("\nfirst entries of the generated layout:")
for ent in model.layout[:6]:
    print(f"  {ent.target_id:<32} offset {ent.offset:>7}  shape {ent.shape}")

world = TaskWorld()
rng = np.random.default_rng(0)
resets = [world.reset(sample_task(c, rng)) for c in all_combos()[:3]]
ids = np.stack([r[2] for r in resets])
first = np.stack([r[1] for r in resets])
with ad.no_grad():
    flat = model.generate(ids, first).flat.data
print("\nthree instructions, identical generated weights at init:", bool((flat == flat[0]).all()))
