"""Walk one synthetic mammogram through the preprocessing chain.

Builds a portrait image with a bright chest-wall edge, then shows every
stage: zero-padding to square (anchored at the chest wall), percentile
contrast stretch, [0, 1] normalization and the bilinear resize, plus one
paired augmentation draw with its replayable parameter record.

Run: python demos/01_preprocess_chain.py   (writes demos/output/01_*.png)
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cesmvce.preprocess import (
    AugmentConfig,
    PreprocessConfig,
    augment,
    contrast_stretch,
    normalize,
    pad_to_square,
    resize,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def synthetic_mammogram(rows=360, cols=240, seed=3) -> np.ndarray:
    """Portrait view: tissue bulging from the left (chest wall) edge."""
    rng = np.random.default_rng(seed)
    rr, cc = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    breast = np.clip(1.0 - cc / (0.7 * cols) - 0.25 * ((rr - rows / 2) / rows) ** 2, 0, 1)
    texture = rng.normal(0, 0.05, (rows, cols))
    lesion = 0.6 * np.exp(-(((rr - 0.45 * rows) ** 2 + (cc - 0.3 * cols) ** 2) / 400))
    img = np.clip(breast * 0.7 + lesion + texture * breast, 0, 1.4)
    return (img / img.max() * 3800).astype(np.uint16)


def main() -> None:
    cfg = PreprocessConfig(target_size=256)
    raw = synthetic_mammogram()
    padded = pad_to_square(raw)
    stretched = contrast_stretch(padded, cfg)
    normalized = normalize(stretched)
    resized = resize(normalized, cfg.target_size)

    stages = [
        (f"raw {raw.shape}", raw),
        (f"padded {padded.shape}", padded),
        ("stretched (2-98 pct)", stretched),
        ("normalized [0,1]", normalized),
        (f"resized {resized.shape}", resized),
    ]
    fig, axes = plt.subplots(1, len(stages), figsize=(3 * len(stages), 3.4))
    for ax, (title, img) in zip(axes, stages):
        ax.imshow(img, cmap="gray")
        ax.set_title(title, fontsize=9)
        ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(OUT / "01_chain.png", dpi=110)
    print(f"chain stages -> {OUT / '01_chain.png'}")

    rng = np.random.default_rng(7)
    aug_x, aug_y, params = augment(resized, resized.copy(), AugmentConfig(), rng)
    print("sampled transform:", params.to_dict())
    assert np.array_equal(aug_x, aug_y), "pair must stay aligned"

    fig, axes = plt.subplots(1, 2, figsize=(6.5, 3.4))
    axes[0].imshow(resized, cmap="gray")
    axes[0].set_title("before augmentation", fontsize=9)
    axes[1].imshow(aug_x, cmap="gray")
    axes[1].set_title("after (shift/zoom/flip/rotate)", fontsize=9)
    for ax in axes:
        ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(OUT / "01_augment.png", dpi=110)
    print(f"augmentation example -> {OUT / '01_augment.png'}")


if __name__ == "__main__":
    main()
