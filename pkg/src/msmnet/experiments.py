"""Reproducible experiment drivers and file emission.

Every run is specified by an ExperimentManifest; all randomness derives from
its single 64-bit seed through named sub-streams, so a rerun with the same
manifest produces byte-identical CSVs. Two sampling modes exist: redraw the
weights for every realization, or draw the weights once and resample only the
graph. Each CSV gets a JSON sidecar naming the manifest, seed, version, and
wall-clock runtime.
"""

from __future__ import annotations

import csv
import json
import math
import subprocess
import time
from dataclasses import dataclass, field, asdict
from enum import Enum
from pathlib import Path

import numpy as np

from . import __version__, _kernels
from .clustering import (
    Convention,
    average_clustering,
    empirical_clustering_function,
)
from .fractions import (
    approx_fractions,
    empirical_fractions,
    exact_conditional_fractions,
)
from .graph import Graph, sample_graph
from .theory import annealed_curve, default_curve_grid, write_curve_csv
from .weights import (
    WeightSource,
    WeightVector,
    rescaled_quantities,
    sample_one_sided_stable,
    sample_pareto,
    stable_scale,
    write_weight_csv,
)

PAPER_ALPHAS = (0.3, 0.5, 0.7)
PAPER_N_VALUES = (100, 1000, 10000)
PAPER_REALIZATIONS = 10
TAIL_SAMPLES_MIN = 100_000
_SUB_WEIGHTS = 1
_SUB_EDGES = 2
_SUB_TAIL = 3


class ExperimentKind(Enum):
    CLUSTERING_FUNCTION = "clustering-function"
    AVERAGE_CLUSTERING_SWEEP = "avg-clustering"
    DEGREE_FRACTIONS_SWEEP = "degree-fractions"
    TAIL_COMPARISON = "tail-compare"
    ANNEALED_CURVE_ONLY = "annealed-curve"


class Mode(Enum):
    REDRAW_WEIGHTS = "redraw"
    FIXED_WEIGHTS = "fixed"


class ValidationError(ValueError):
    pass


@dataclass
class ExperimentManifest:
    experiment: ExperimentKind
    alpha: float
    n_values: list[int]
    realizations: int
    mode: Mode
    source: WeightSource
    seed: int
    out_dir: Path
    tol: float = 1e-7
    outputs: dict[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ValidationError(f"alpha must be in (0,1), got {self.alpha}")
        if self.realizations < 1:
            raise ValidationError(f"realizations must be >= 1, got {self.realizations}")
        if not self.n_values:
            raise ValidationError("at least one n value is required")
        if any(n < 2 for n in self.n_values):
            raise ValidationError("all n values must be >= 2")
        if self.experiment is ExperimentKind.TAIL_COMPARISON and min(self.n_values) < TAIL_SAMPLES_MIN:
            raise ValidationError(
                f"tail comparison needs sample size >= {TAIL_SAMPLES_MIN}"
            )
        if not 0 <= self.seed < 2 ** 64:
            raise ValidationError("seed must fit in 64 bits")

    def register(self, name: str, path: Path) -> Path:
        # record the path before the file is written
        self.outputs[name] = str(path)
        return path

    def to_json(self) -> dict:
        d = asdict(self)
        d["experiment"] = self.experiment.value
        d["mode"] = self.mode.value
        d["source"] = self.source.value
        d["out_dir"] = str(self.out_dir)
        return d


def _version_string() -> str:
    tag = f"msmnet-{__version__}"
    try:
        rev = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            capture_output=True, text=True, timeout=5, cwd=Path(__file__).parent,
        )
        if rev.returncode == 0:
            return f"{tag}+g{rev.stdout.strip()}"
    except OSError:
        pass
    return tag


def weight_rng(seed: int, n: int, rep: int, mode: Mode) -> np.random.Generator:
    """Named weight stream; under fixed mode every realization shares rep 0."""
    rep_eff = 0 if mode is Mode.FIXED_WEIGHTS else rep
    return np.random.default_rng(np.random.SeedSequence([seed, n, rep_eff, _SUB_WEIGHTS]))


def edge_seed(seed: int, n: int, rep: int) -> int:
    """Independent 64-bit sub-seed for the per-pair edge coins."""
    ss = np.random.SeedSequence([seed, n, rep, _SUB_EDGES])
    return int(ss.generate_state(1, np.uint64)[0])


def draw_weights(alpha: float, n: int, source: WeightSource, rng: np.random.Generator) -> WeightVector:
    if source is WeightSource.PARETO:
        return sample_pareto(alpha, n, rng)
    return sample_one_sided_stable(stable_scale(alpha), n, rng)


class _Emitter:
    """Writes CSVs plus sidecars and tracks them in the manifest registry."""

    def __init__(self, manifest: ExperimentManifest):
        self.manifest = manifest
        self.started = time.monotonic()
        manifest.out_dir.mkdir(parents=True, exist_ok=True)

    def csv_path(self, name: str, filename: str) -> Path:
        return Path(self.manifest.register(name, self.manifest.out_dir / filename))

    def write_rows(self, name: str, filename: str, header: list[str], rows, kind: str, params: dict) -> Path:
        path = self.csv_path(name, filename)
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                writer.writerow([_fmt(x) for x in row])
        self.sidecar(path, kind, params)
        return path

    def sidecar(self, csv_path: Path, kind: str, params: dict) -> None:
        payload = {
            "schema_version": 1,
            "kind": kind,
            "params": params,
            "manifest": self.manifest.to_json(),
            "seed": self.manifest.seed,
            "version": _version_string(),
            "backend": _kernels.backend_name(),
            "runtime_s": round(time.monotonic() - self.started, 3),
        }
        csv_path.with_suffix(".json").write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )

    def finish(self) -> Path:
        path = self.manifest.out_dir / "manifest.json"
        self.manifest.outputs["manifest"] = str(path)
        payload = self.manifest.to_json()
        payload["version"] = _version_string()
        payload["runtime_s"] = round(time.monotonic() - self.started, 3)
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        return path


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _alpha_tag(alpha: float) -> str:
    return f"{alpha:g}".replace(".", "p")


@dataclass
class Realization:
    n: int
    rep: int
    weights: WeightVector
    graph: Graph


def realizations(manifest: ExperimentManifest, n: int):
    """Yield (rep, weights, graph) in realization order."""
    for rep in range(manifest.realizations):
        rng = weight_rng(manifest.seed, n, rep, manifest.mode)
        weights = draw_weights(manifest.alpha, n, manifest.source, rng)
        graph = sample_graph(weights, edge_seed(manifest.seed, n, rep))
        yield Realization(n=n, rep=rep, weights=weights, graph=graph)


def run_clustering_function(manifest: ExperimentManifest) -> dict[str, str]:
    """Per-realization clustering profiles plus one theory curve per (n, alpha)."""
    manifest.validate()
    if len(manifest.n_values) != 1:
        raise ValidationError("clustering-function runs one n per invocation")
    n = manifest.n_values[0]
    atag = _alpha_tag(manifest.alpha)
    em = _Emitter(manifest)
    try:
        k_min, k_max = n, 2
        for real in realizations(manifest, n):
            profile = empirical_clustering_function(real.graph)
            rows = []
            for k in profile.degrees():
                count, mean_c = profile.per_degree[k]
                rows.append([k, k / math.sqrt(n), count, float(mean_c)])
                k_min = min(k_min, k)
                k_max = max(k_max, k)
            params = {"n": n, "alpha": manifest.alpha, "rep": real.rep}
            em.write_rows(
                f"profile_rep{real.rep}",
                f"profile_alpha{atag}_n{n}_rep{real.rep}.csv",
                ["k", "a", "N_k", "C_k"],
                rows,
                "clustering_profile",
                params,
            )
            wpath = em.csv_path(
                f"weights_rep{real.rep}", f"weights_alpha{atag}_n{n}_rep{real.rep}.csv"
            )
            write_weight_csv(real.weights, wpath)
            em.sidecar(wpath, "weights", params)
        if k_max < 2:
            k_min, k_max = 2, max(3, int(math.sqrt(n)))
        curve = annealed_curve(
            manifest.alpha, default_curve_grid(n, k_min, k_max), manifest.tol
        )
        cpath = em.csv_path("curve", f"curve_alpha{atag}_n{n}.csv")
        write_curve_csv(curve, cpath)
        em.sidecar(cpath, "annealed_curve", {"n": n, "alpha": manifest.alpha})
    finally:
        em.finish()
    return manifest.outputs


_FRACTION_HEADER = [
    "n", "alpha", "seed", "mode",
    "r0_emp", "r1_emp", "r0_exact", "r1_exact", "r0_approx", "r1_approx",
    "c_excl", "c_incl",
]


def _fraction_row(manifest: ExperimentManifest, real: Realization) -> list:
    emp = empirical_fractions(real.graph)
    exact = exact_conditional_fractions(real.weights)
    approx = approx_fractions(rescaled_quantities(real.weights), manifest.alpha)
    c_excl = average_clustering(real.graph, Convention.EXCLUDE_LOW_DEGREE)
    c_incl = average_clustering(real.graph, Convention.ZERO_LOW_DEGREE)
    return [
        real.n, manifest.alpha, edge_seed(manifest.seed, real.n, real.rep),
        manifest.mode.value,
        emp.r0, emp.r1, exact.r0, exact.r1, approx.r0, approx.r1,
        c_excl, c_incl,
    ]


def _sweep_rows(manifest: ExperimentManifest, em: _Emitter, write_weights: bool) -> list[list]:
    rows = []
    atag = _alpha_tag(manifest.alpha)
    for n in sorted(manifest.n_values):
        for real in realizations(manifest, n):
            rows.append(_fraction_row(manifest, real))
            if write_weights:
                wpath = em.csv_path(
                    f"weights_n{n}_rep{real.rep}",
                    f"weights_alpha{atag}_n{n}_rep{real.rep}_{manifest.mode.value}.csv",
                )
                write_weight_csv(real.weights, wpath)
                em.sidecar(wpath, "weights", {"n": n, "alpha": manifest.alpha, "rep": real.rep})
    return rows


def _summary_rows(rows: list[list]) -> tuple[list[str], list[list]]:
    cols = {name: i for i, name in enumerate(_FRACTION_HEADER)}
    metrics = {
        "c_excl": lambda r: r[cols["c_excl"]],
        "c_incl": lambda r: r[cols["c_incl"]],
        "one_minus_r01_emp": lambda r: 1.0 - r[cols["r0_emp"]] - r[cols["r1_emp"]],
        "one_minus_r01_exact": lambda r: 1.0 - r[cols["r0_exact"]] - r[cols["r1_exact"]],
        "one_minus_r01_approx": lambda r: 1.0 - r[cols["r0_approx"]] - r[cols["r1_approx"]],
        "r0_emp": lambda r: r[cols["r0_emp"]],
        "r0_approx": lambda r: r[cols["r0_approx"]],
        "r1_emp": lambda r: r[cols["r1_emp"]],
        "r1_approx": lambda r: r[cols["r1_approx"]],
    }
    header = ["n", "mode", "reps"]
    for name in metrics:
        header += [f"{name}_mean", f"{name}_std"]
    out = []
    for n in sorted({int(r[0]) for r in rows}):
        group = [r for r in rows if int(r[0]) == n]
        line: list = [n, group[0][cols["mode"]], len(group)]
        for fn in metrics.values():
            vals = np.array([fn(r) for r in group], dtype=np.float64)
            mean = float(np.nanmean(vals))
            std = float(np.nanstd(vals, ddof=1)) if len(vals) > 1 else 0.0
            line += [mean, std]
        out.append(line)
    return header, out


def run_average_clustering_sweep(manifest: ExperimentManifest) -> dict[str, str]:
    """Per-realization fractions/clustering plus a per-n mean/std summary."""
    manifest.validate()
    atag = _alpha_tag(manifest.alpha)
    em = _Emitter(manifest)
    try:
        rows = _sweep_rows(manifest, em, write_weights=True)
        params = {"alpha": manifest.alpha, "n_values": sorted(manifest.n_values)}
        em.write_rows(
            "fractions",
            f"fractions_alpha{atag}_{manifest.mode.value}.csv",
            _FRACTION_HEADER, rows, "fractions", params,
        )
        header, summary = _summary_rows(rows)
        em.write_rows(
            "summary",
            f"summary_alpha{atag}_{manifest.mode.value}.csv",
            header, summary, "sweep_summary", params,
        )
    finally:
        em.finish()
    return manifest.outputs


def run_degree_fractions_sweep(manifest: ExperimentManifest) -> dict[str, str]:
    """Per-realization degree fractions by all three methods."""
    manifest.validate()
    atag = _alpha_tag(manifest.alpha)
    em = _Emitter(manifest)
    try:
        rows = _sweep_rows(manifest, em, write_weights=True)
        em.write_rows(
            "fractions",
            f"fractions_alpha{atag}_{manifest.mode.value}_{manifest.source.value}.csv",
            _FRACTION_HEADER, rows, "fractions",
            {"alpha": manifest.alpha, "source": manifest.source.value},
        )
    finally:
        em.finish()
    return manifest.outputs


def run_tail_comparison(manifest: ExperimentManifest) -> dict[str, str]:
    """Empirical CCDFs of the two weight samplers on a shared log grid."""
    manifest.validate()
    samples = max(manifest.n_values)
    atag = _alpha_tag(manifest.alpha)
    em = _Emitter(manifest)
    try:
        rng_p = np.random.default_rng(
            np.random.SeedSequence([manifest.seed, samples, 0, _SUB_TAIL])
        )
        rng_s = np.random.default_rng(
            np.random.SeedSequence([manifest.seed, samples, 1, _SUB_TAIL])
        )
        pareto = sample_pareto(manifest.alpha, samples, rng_p).values
        stable = sample_one_sided_stable(stable_scale(manifest.alpha), samples, rng_s).values
        hi = float(np.quantile(pareto, 0.9999))
        grid = np.geomspace(1.0, max(hi, 10.0), 200)
        pareto_sorted = np.sort(pareto)
        stable_sorted = np.sort(stable)
        rows = []
        for w in grid:
            ccdf_p = 1.0 - np.searchsorted(pareto_sorted, w, side="right") / samples
            ccdf_s = 1.0 - np.searchsorted(stable_sorted, w, side="right") / samples
            rows.append([float(w), float(ccdf_p), float(ccdf_s), manifest.alpha])
        em.write_rows(
            "tail",
            f"tailccdf_alpha{atag}.csv",
            ["w", "ccdf_pareto", "ccdf_stable", "alpha"],
            rows, "tail_ccdf", {"alpha": manifest.alpha, "samples": samples},
        )
    finally:
        em.finish()
    return manifest.outputs


def run_annealed_curve(manifest: ExperimentManifest, a_min: float = 1e-2,
                       a_max: float = 1e2, points: int = 60) -> dict[str, str]:
    """Theory curve only, no sampling."""
    manifest.validate()
    atag = _alpha_tag(manifest.alpha)
    em = _Emitter(manifest)
    try:
        grid = list(np.geomspace(a_min, a_max, points))
        curve = annealed_curve(manifest.alpha, grid, manifest.tol)
        path = em.csv_path("curve", f"curve_alpha{atag}.csv")
        write_curve_csv(curve, path)
        em.sidecar(path, "annealed_curve", {"alpha": manifest.alpha})
    finally:
        em.finish()
    return manifest.outputs
