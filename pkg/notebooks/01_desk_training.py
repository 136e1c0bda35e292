"""
Training the desk-scale models
==============================

Trains the semantic codec and then the hiding network on 2500 synthetic
32x32 images, exactly as ``checkpoints/desk.ini`` describes, through the
command-line entry point. About 10 minutes on one CPU core.

Run from the repository root::

    python notebooks/01_desk_training.py

Outputs land in ``runs/desk/``; the two checkpoints are then copied to
``checkpoints/`` where the demo and the desk-scale tests pick them up.
"""

# %%
import csv
import shutil
import time
from pathlib import Path

import numpy as np

from stegosem.cli import main

CONFIG = Path("checkpoints/desk.ini")
RUN = Path("runs/desk")

# %% [markdown]
# Stage one: the codec alone, trained through a channel whose SNR is drawn
# uniformly from 0 to 20 dB for every image.

# %%
start = time.perf_counter()
assert main(["-v", "train-codec", str(CONFIG)]) == 0
print(f"codec trained in {time.perf_counter() - start:.0f} s")

# %% [markdown]
# Stage two: the hiding network on top of the frozen codec. Each step pairs
# every training image with another one as (host, private).

# %%
start = time.perf_counter()
assert main(["-v", "train-stego", str(CONFIG)]) == 0
print(f"hiding network trained in {time.perf_counter() - start:.0f} s")

# %% [markdown]
# The loss CSVs hold one row per step and term. Epoch means of the three
# parts show the usual picture: the container drifts away from the host
# signal (forward term grows) while recovery and privacy terms fall.

# %%
with (RUN / "stego_loss.csv").open() as fh:
    rows = list(csv.DictReader(fh))
steps_per_epoch = int(np.ceil(2500 / 32))
for term in ("forward", "backward", "privacy", "total"):
    values = np.array([float(r["value"]) for r in rows if r["term"] == term])
    epochs = values[: len(values) // steps_per_epoch * steps_per_epoch].reshape(-1, steps_per_epoch).mean(axis=1)
    print(f"{term:>9}: " + " ".join(f"{v:8.1f}" for v in epochs))

# %%
shutil.copy(RUN / "codec.sjsc", "checkpoints/desk_codec.sjsc")
shutil.copy(RUN / "stego.sjsc", "checkpoints/desk_stego.sjsc")
print("copied checkpoints to checkpoints/")
