"""Why the context embedding is divided by sqrt(d_e).

One SGD step on an output head moves the generated vector by
lr * |e|^2 * dL/dtheta. A standardized embedding has |e|^2 = d_e, so the
base weights would move d_e times faster than under direct training.
"""

from hyperpolicy.hypernet import update_scale_probe

print(f"{'d_e':>5}  {'raw ratio':>10}  {'normalized ratio':>16}")
for d in (1, 4, 16, 64, 128):
    raw = update_scale_probe(d, normalize=False).ratio
    norm = update_scale_probe(d, normalize=True).ratio
    print(f"{d:>5}  {raw:>10.4f}  {norm:>16.6f}")
