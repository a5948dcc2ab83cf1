"""End-to-end cohort pipeline through the command-line interface.

Writes a synthetic cohort, encodes the aorta branch to latents, trains a
small two-stage diffusion pair, draws unconditional samples with meshes,
and prints the biomarker table of the generated set next to the cohort's.

Runs in a few minutes; training here is deliberately short, so treat the
samples as a smoke-level demonstration, not a converged model.
"""
from __future__ import annotations

import csv
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from arterygen.cli import main  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "output", "cohort_demo")


def run(*argv: str) -> None:
    print("$ arterygen " + " ".join(argv), flush=True)
    code = main(list(argv))
    if code != 0:
        raise SystemExit(f"step failed with exit code {code}")


def biomarker_summary(path: str) -> dict[str, tuple[float, float]]:
    """field -> (mean, std) across rows of a biomarker CSV."""
    with open(path) as f:
        rows = list(csv.DictReader(f))
    out = {}
    for k in rows[0]:
        vals = [float(r[k]) for r in rows]
        mu = sum(vals) / len(vals)
        var = sum((v - mu) ** 2 for v in vals) / len(vals)
        out[k] = (mu, var ** 0.5)
    return out


def main_demo() -> None:
    t0 = time.time()
    os.makedirs(OUT, exist_ok=True)
    cohort_dir = os.path.join(OUT, "cohort")
    latent_dir = os.path.join(OUT, "latents")
    model_dir = os.path.join(OUT, "models")
    sample_dir = os.path.join(OUT, "samples")

    run("synth-data", "--out", cohort_dir, "--count", "12", "--seed", "7")
    run("encode", "--cohort", cohort_dir, "--branch", "aorta",
        "--out", latent_dir)

    for component, cfg in (("cl", {"learning_rate": 4e-4, "epochs": 1500}),
                           ("rad", {"learning_rate": 3e-4, "epochs": 2500,
                                    "ema_decay": 0.999})):
        cfg_path = os.path.join(OUT, f"{component}.train.json")
        with open(cfg_path, "w") as f:
            json.dump(cfg, f)
        hidden = "512" if component == "rad" else "256"
        run("train", "--latents", latent_dir, "--component", component,
            "--config", cfg_path, "--hidden", hidden, "--out", model_dir)

    run("sample", "--checkpoints", model_dir, "--count", "6", "--seed", "3",
        "--mesh", "--out", sample_dir)
    run("biomarkers", "--latents", latent_dir,
        "--out", os.path.join(OUT, "bio_cohort"))
    run("biomarkers", "--latents", sample_dir,
        "--out", os.path.join(OUT, "bio_samples"))

    real = biomarker_summary(os.path.join(OUT, "bio_cohort",
                                          "biomarkers.csv"))
    fake = biomarker_summary(os.path.join(OUT, "bio_samples",
                                          "biomarkers.csv"))
    print(f"\n{'biomarker':22s} {'cohort mean':>12s} {'sample mean':>12s}")
    for k in real:
        print(f"{k:22s} {real[k][0]:12.4f} {fake[k][0]:12.4f}")
    objs = [f for f in os.listdir(sample_dir) if f.endswith(".obj")]
    print(f"\n{len(objs)} sample meshes in {sample_dir}")
    print(f"total {time.time() - t0:.0f}s")


if __name__ == "__main__":
    main_demo()
