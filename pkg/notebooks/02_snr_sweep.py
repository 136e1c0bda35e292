"""
Bob and Eve across the main-link SNR
====================================

Scores Bob's host and private reconstructions and the naive eavesdropper's
decoding over 0-20 dB, with and without the hiding network, using the
shipped desk-scale checkpoints. Eve hears at the same SNR as Bob here.

    python notebooks/02_snr_sweep.py

Everything printed is recomputed from ``runs/sweep/metrics.csv``.
"""

# %%
from pathlib import Path

from stegosem.cli import main
from stegosem.evaluation import read_csv, summarize

CKPT = Path("checkpoints")
OUT = Path("runs")

# %%
rc = main([
    "evaluate", str(CKPT / "desk.ini"),
    "--set", "run.run_id=sweep", "--set", f"run.output_dir={OUT}",
    "--set", "eval.n_pairs=100", "--set", "eval.mia_pairs=0",
    "--codec", str(CKPT / "desk_codec.sjsc"), "--stego", str(CKPT / "desk_stego.sjsc"),
])
assert rc == 0

# %% [markdown]
# One line per SNR. ``plain`` is the codec sending the private image
# directly, which is what Eve would see without any hiding.

# %%
s = summarize(read_csv(OUT / "sweep" / "metrics.csv"))
grid = sorted({k[1] for k in s})
print(f"{'SNR':>4} | {'Bob host':>9} {'Bob priv':>9} {'plain':>9} | {'Eve host':>9} {'Eve priv':>9}   (MS-SSIM)")
for snr in grid:
    print(
        f"{snr:4.0f} | {s['sweep', snr, 'bob', 'host', 'ms_ssim']:9.3f} {s['sweep', snr, 'bob', 'private', 'ms_ssim']:9.3f}"
        f" {s['sweep:no-stego', snr, 'bob', 'private', 'ms_ssim']:9.3f} |"
        f" {s['sweep', snr, 'eve_naive', 'host', 'ms_ssim']:9.3f} {s['sweep', snr, 'eve_naive', 'private', 'ms_ssim']:9.3f}"
    )

# %%
print(f"\n{'SNR':>4} | {'Bob priv':>9} {'plain':>9} | {'Eve priv':>9}   (PSNR, dB)")
for snr in grid:
    print(
        f"{snr:4.0f} | {s['sweep', snr, 'bob', 'private', 'psnr']:9.2f}"
        f" {s['sweep:no-stego', snr, 'bob', 'private', 'psnr']:9.2f} |"
        f" {s['sweep', snr, 'eve_naive', 'private', 'psnr']:9.2f}"
    )
