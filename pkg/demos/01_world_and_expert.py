"""Tour of the pick-and-place world: render a task, roll out the scripted
expert, and save the frames as a PPM strip you can open in any viewer."""

from pathlib import Path

import numpy as np

from hyperpolicy.taskworld import TaskWorld, all_combos, instruction_text, rollout_expert, sample_task

world = TaskWorld()
spec = sample_task(all_combos()[17], np.random.default_rng(4))
print("instruction:", instruction_text(spec))
print("distractors:", spec.distractors or "none")

ep = rollout_expert(world, spec)
print(f"expert {'succeeded' if ep.success else 'failed'} in {ep.length} steps")
for t in range(0, ep.length, 8):
    print(f"  t={t:2d} action={np.round(ep.actions[t], 2)}")

# every 4th frame side by side, 8-bit PPM
frames = ep.observations[::4]
strip = (np.concatenate(list(frames), axis=1) * 255).round().astype(np.uint8)
out = Path("expert_strip.ppm")
out.write_bytes(b"P6 %d %d 255\n" % (strip.shape[1], strip.shape[0]) + strip.tobytes())
print("wrote", out)
