"""Train all three models on a tiny synthetic corpus and report the results.

Uses the blob dataset (target = pointwise square-root brightening of the
input) at desk scale: small channel counts, a few epochs. Produces the
cross-model metric table and a side-by-side panel figure from the persisted
fold outputs, exactly as a full run would.

Run: python demos/03_toy_training.py     (a few minutes on CPU)
"""

from pathlib import Path

from cesmvce import metrics, report, trainer
from cesmvce.dataset import make_folds
from cesmvce.models import LossWeights
from cesmvce.pngio import load_gray16
from cesmvce.synthetic import make_blob_pairs
from cesmvce.trainer import ModelSetup, OptimizerConfig, TrainConfig

OUT = Path(__file__).parent / "output" / "toy_runs"

SETUPS = {
    "autoencoder": (ModelSetup("autoencoder", 64, gen_channels=8),
                    OptimizerConfig(1e-3, beta1=0.9)),
    "pix2pix": (ModelSetup("pix2pix", 64, gen_channels=8, disc_channels=8),
                OptimizerConfig(2e-4, beta1=0.5)),
    "cyclegan": (ModelSetup("cyclegan", 64, gen_channels=8, disc_channels=8,
                            n_residual_blocks=2),
                 OptimizerConfig(2e-4, beta1=0.5)),
}


def main() -> None:
    data = make_blob_pairs(120, size=64, seed=5)
    folds = make_folds(set(data.patient_ids), n_folds=10, seed=0)
    fold = folds[0]
    cfg = TrainConfig(max_epochs=6, early_stop_patience=6, batch_size=8, seed=0)

    aggregates = {}
    example_images = {}
    for model_kind, (setup, opt) in SETUPS.items():
        run_dir = OUT / model_kind / "fold_0"
        print(f"training {model_kind} ...")
        best, state = trainer.train_fold(
            model_kind, data, fold, cfg, opt, LossWeights(), None, run_dir, setup
        )
        print(f"  epochs {state.epoch}, best val {state.best_val_loss:.4f}")
        manifest = trainer.generate_outputs(
            best, data.for_patients(fold.test_patients), run_dir / "test_outputs", 0
        )
        results = []
        import json

        for line in Path(manifest).read_text().splitlines():
            entry = json.loads(line)
            y = load_gray16(entry["target_path"])
            y_hat = load_gray16(entry["output_path"])
            results.append(metrics.score_pair(
                y, y_hat, entry["pair_id"], entry["fold"], entry["acr_category"]))
            if entry["pair_id"] not in example_images:
                example_images[entry["pair_id"]] = {
                    "LE input": load_gray16(entry["input_path"]),
                    "DES target": y,
                }
            example_images[entry["pair_id"]][model_kind] = y_hat
        aggregates[model_kind] = metrics.aggregate(results)

    paths = report.render_model_table(aggregates, OUT / "reports")
    print("\n" + Path(paths["txt"]).read_text())

    pair_id, images = next(iter(example_images.items()))
    panel = report.render_panels(
        [report.PanelRow(label=pair_id, images=images)],
        OUT / "reports" / "panel.png",
    )
    print(f"panel -> {panel}")


if __name__ == "__main__":
    main()
