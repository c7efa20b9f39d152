"""Patient-level folds and the four image-quality metrics, hands on.

First builds the 10-fold patient split for a 105-patient corpus and prints
the per-fold counts (train/val/test stay within one patient of 0.8/0.1/0.1,
and every patient is tested exactly once). Then degrades one image with
noise and blur and charts how MSE, PSNR, SSIM and VIF respond.

Run: python demos/02_folds_and_metrics.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy import ndimage

from cesmvce.dataset import make_folds
from cesmvce.metrics import mse, psnr, ssim, vif

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def show_folds() -> None:
    patients = {f"P{i:03d}" for i in range(105)}
    folds = make_folds(patients, n_folds=10, seed=42)
    print("fold  train  val  test")
    tested = set()
    for fold in folds:
        print(f"{fold.fold_index:4d}  {len(fold.train_patients):5d}"
              f"  {len(fold.val_patients):3d}  {len(fold.test_patients):4d}")
        tested |= fold.test_patients
    print(f"patients tested exactly once: {tested == patients}\n")


def metric_curves() -> None:
    rng = np.random.default_rng(0)
    y = ndimage.gaussian_filter(rng.random((128, 128)), 1.2)
    y = (y - y.min()) / (y.max() - y.min())

    sigmas = [0.0, 0.02, 0.05, 0.1, 0.2, 0.3]
    rows = []
    for s in sigmas:
        noisy = np.clip(y + rng.normal(0, s, y.shape), 0, 1) if s else y.copy()
        rows.append((f"noise {s}", mse(y, noisy), psnr(y, noisy),
                     ssim(y, noisy), vif(y, noisy)))
    blurred = ndimage.gaussian_filter(y, 2.5)
    rows.append(("blur 2.5", mse(y, blurred), psnr(y, blurred),
                 ssim(y, blurred), vif(y, blurred)))

    print(f"{'distortion':>12}  {'MSE':>8}  {'PSNR':>8}  {'SSIM':>7}  {'VIF':>7}")
    for name, m, p, s, v in rows:
        p_txt = "inf" if p == float("inf") else f"{p:8.2f}"
        print(f"{name:>12}  {m:8.5f}  {p_txt:>8}  {s:7.4f}  {v:7.4f}")

    fig, axes = plt.subplots(1, 3, figsize=(10, 3.2))
    noise_rows = rows[1:-1]
    xs = sigmas[1:]
    axes[0].plot(xs, [r[2] for r in noise_rows], "o-")
    axes[0].set_title("PSNR vs noise")
    axes[1].plot(xs, [r[3] for r in noise_rows], "o-")
    axes[1].set_title("SSIM vs noise")
    axes[2].plot(xs, [r[4] for r in noise_rows], "o-")
    axes[2].set_title("VIF vs noise")
    for ax in axes:
        ax.set_xlabel("noise sigma")
        ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(OUT / "02_metric_curves.png", dpi=110)
    print(f"\ncurves -> {OUT / '02_metric_curves.png'}")


if __name__ == "__main__":
    show_folds()
    metric_curves()
