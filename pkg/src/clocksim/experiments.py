"""End-to-end experiment presets, scaling sweeps, and JSON/CSV plumbing.

The two presets mirror the package's headline measurements:

* ``standard_fk_run`` -- a truncated Gaussian packet on the clock chain
  of a 5G-gate circuit, evolved long enough for the center to cross from
  chain fraction 1/5 to 4/5, with energy, path-length, orthogonality,
  speed-limit and success-window metrics.

* ``standard_lin_run`` -- the smooth cosine packet on the
  linear-dispersion chain of a 3G-gate circuit, which traverses from
  fraction 1/6 to 5/6 dispersion-free in time T = G.

``clock_speed_ratio_sweep`` repeats a preset over a range of G and fits
log-log slopes of the energy spread and the clock-speed-per-energy
ratios, the scaling that shows speed per unit energy growing with G.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .circuits import (
    Circuit,
    build_circuit,
    named_gate,
    pad_with_identities,
    random_circuit,
)
from .clockenc import combinadic_encoding, pulse_encoding
from .dynamics import Trajectory, evolve_fullspace, evolve_subspace, overlap_series
from .hamiltonian import (
    build_fk_hamiltonian,
    build_lin_hamiltonian,
    history_state,
    history_weights_to_clock_indexed,
    subspace_operator,
)
from .metrics import (
    chain_position_moments,
    energy_stats,
    fit_loglog_slope,
    orthogonality_metrics,
    path_length,
    speed_limit_bounds,
    success_probability,
)
from .packets import GaussianParams, make_cosine_packet, make_gaussian

SCHEMA_VERSION = 1

SWEEP_FIELDS = [
    "G",
    "T",
    "E_mean",
    "E_std",
    "f_clock",
    "ratio_E",
    "ratio_dE",
    "L",
    "orth_count",
    "p_success",
]


def _jsonable(v):
    """Replace non-finite floats with None so output stays strict JSON."""
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def config_hash(cfg: dict) -> str:
    """Stable digest of a JSON-able configuration."""
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def identity_circuit(n: int, gate_count: int) -> Circuit:
    """A circuit of ``gate_count`` identity gates on qubit 0."""
    return Circuit(n, tuple(named_gate("I", (0,)) for _ in range(gate_count)))


def _chain_metrics(
    traj: Trajectory,
    op,
    psi0: np.ndarray,
    g_scale: int,
    success_lo: int,
    success_hi: int,
    eps_count: float = 0.1,
    eps_orth: float = 0.01,
) -> dict:
    """The standard metric row for a chain trajectory."""
    stats = energy_stats(op, psi0)
    arc = path_length(traj, op)
    count, _ = orthogonality_metrics(traj, eps=eps_count)
    _, t_orth = orthogonality_metrics(traj, eps=eps_orth)
    c0, _ = chain_position_moments(traj.states[0])
    c1, s1 = chain_position_moments(traj.states[-1])
    report = speed_limit_bounds(stats, c1 - c0, traj.duration, t_orth)
    return {
        "G": g_scale,
        "T": traj.duration,
        "E_mean": stats.mean,
        "E_std": stats.stddev,
        "f_clock": report.f_clock,
        "ratio_E": report.ratio_mean,
        "ratio_dE": report.ratio_std,
        "L": arc,
        "orth_count": count,
        "p_success": success_probability(traj, success_lo, success_hi),
        "t_orth": t_orth,
        "mt_bound": report.mt_bound,
        "ml_bound": report.ml_bound,
        "final_center": c1,
        "final_std": s1,
    }


def standard_fk_run(
    G: int,
    samples: int = 201,
    params: GaussianParams | None = None,
) -> dict:
    """Gaussian packet on the clock chain of a 5G-gate circuit.

    The duration 3 g^2 / (10 p0) carries the packet center from chain
    fraction 1/5 to 4/5; the success window is the final fifth of the
    chain padded down to fraction 3/5, i.e. sites 3G..5G.
    """
    if params is None:
        params = GaussianParams()
    g = 5 * G
    t_final = 3.0 * g**2 / (10.0 * params.p0)
    op = subspace_operator("fk", g)
    psi0 = make_gaussian(g, params)
    traj = evolve_subspace(op, psi0, t_final, samples)
    return _chain_metrics(traj, op, psi0, G, 3 * G, 5 * G)


def standard_lin_run(G: int, samples: int = 201) -> dict:
    """Cosine packet on the linear-dispersion chain of a 3G-gate circuit.

    The packet occupies the first third of the chain and moves right at
    two sites per unit time; T = G carries it to the final third, which
    is the success window.
    """
    if G % 2 != 0:
        raise ValueError("G must be even so the gate count 3G is a multiple of 6")
    g = 3 * G
    op = subspace_operator("lin", g)
    psi0 = make_cosine_packet(g)
    traj = evolve_subspace(op, psi0, float(G), samples)
    lo = 2 * g // 3 + 1
    return _chain_metrics(traj, op, psi0, G, lo, g + 1)


def _sweep_worker(args) -> dict:
    family, G, samples = args
    if family == "fk":
        return standard_fk_run(G, samples)
    if family == "lin":
        return standard_lin_run(G, samples)
    raise ValueError(f"unknown family {family!r}")


def worker_count() -> int:
    """Parallelism for sweeps, set via the CLOCKSIM_WORKERS variable."""
    try:
        return max(1, int(os.environ.get("CLOCKSIM_WORKERS", "1")))
    except ValueError:
        return 1


def clock_speed_ratio_sweep(
    family: str, G_values, samples: int = 201
) -> tuple[list[dict], dict]:
    """Preset runs over a range of G plus log-log scaling slopes.

    Returns the per-G metric rows and the fitted slopes of E_std,
    f_clock, ratio_E and ratio_dE against G.  At least two G values are
    required; four or more spanning nearly an order of magnitude give
    trustworthy slopes.
    """
    gs = sorted(int(v) for v in G_values)
    if len(gs) < 2:
        raise ValueError("a sweep needs at least two G values to fit slopes")
    if len(set(gs)) != len(gs):
        raise ValueError("duplicate G values in sweep")
    jobs = [(family, G, samples) for G in gs]
    workers = worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_worker, jobs))
    else:
        rows = [_sweep_worker(j) for j in jobs]
    slopes = {}
    for key in ("E_std", "f_clock", "ratio_E", "ratio_dE"):
        ys = [row[key] for row in rows]
        finite = all(math.isfinite(y) and y > 0 for y in ys)
        slopes[f"slope_{key}"] = fit_loglog_slope(gs, ys) if finite else None
    return rows, slopes


def write_sweep_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in SWEEP_FIELDS})


def sweep_scaling(family: str, G_values, out_dir, samples: int = 201) -> dict:
    """Run a sweep and write rows (CSV) and slopes (JSON) under out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows, slopes = clock_speed_ratio_sweep(family, G_values, samples)
    cfg = {
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "G_values": sorted(int(v) for v in G_values),
        "samples": samples,
    }
    summary = {
        "config": cfg,
        "config_hash": config_hash(cfg),
        "tool_version": __version__,
        "slopes": slopes,
        "rows": [{k: _jsonable(v) for k, v in row.items()} for row in rows],
    }
    write_sweep_csv(rows, out / f"sweep_{family}.csv")
    with open(out / f"sweep_{family}.json", "w") as fh:
        json.dump(summary, fh, indent=2)
    return summary


# ---------------------------------------------------------------------------
# Config-driven single experiments
# ---------------------------------------------------------------------------


DEFAULT_CONFIG = {
    "schema_version": SCHEMA_VERSION,
    "family": "fk",
    "circuit": {"generator": "identity", "n": 1, "gates": 60},
    "padding": {"front": 0, "back": 0},
    "encoding": {"kind": "pulse", "r": 1},
    "packet": {"type": "gaussian", "sigma": 0.05, "x0": 0.2, "p0": 240.0, "cutoff": 4.0},
    "evolution": {"t_final": None, "samples": 201, "method": "spectral-subspace"},
}


def load_config(path) -> dict:
    with open(path) as fh:
        cfg = json.load(fh)
    if cfg.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            f"unsupported config schema_version {cfg.get('schema_version')!r}; "
            f"this tool reads version {SCHEMA_VERSION}"
        )
    return cfg


def resolve_circuit(cfg: dict) -> Circuit:
    """Materialize the circuit described by a config (with padding)."""
    spec = cfg.get("circuit", DEFAULT_CONFIG["circuit"])
    if "path" in spec:
        with open(spec["path"]) as fh:
            circuit = build_circuit(json.load(fh))
    elif isinstance(spec.get("gates"), list):
        circuit = build_circuit(spec)  # inline circuit description
    else:
        generator = spec.get("generator", "identity")
        n = int(spec.get("n", 1))
        gates = int(spec.get("gates", 60))
        if generator == "identity":
            circuit = identity_circuit(n, gates)
        elif generator == "random":
            rng = np.random.default_rng(int(spec.get("seed", 0)))
            circuit = random_circuit(n, gates, rng)
        else:
            raise ValueError(f"unknown circuit generator {generator!r}")
    pad = cfg.get("padding", {})
    front, back = int(pad.get("front", 0)), int(pad.get("back", 0))
    if front or back:
        circuit = pad_with_identities(circuit, front, back)
    return circuit


def resolve_encoding(cfg: dict, capacity: int):
    spec = cfg.get("encoding", DEFAULT_CONFIG["encoding"])
    if spec.get("kind", "pulse") == "pulse":
        return pulse_encoding(capacity)
    return combinadic_encoding(capacity, int(spec.get("r", 2)))


def _resolve_packet(cfg: dict, family: str, g: int) -> np.ndarray:
    spec = cfg.get("packet", DEFAULT_CONFIG["packet"])
    kind = spec.get("type", "gaussian")
    if kind == "cosine":
        if family != "lin":
            raise ValueError("cosine packet is defined on the lin chain")
        return make_cosine_packet(g)
    if kind != "gaussian":
        raise ValueError(f"unknown packet type {kind!r}")
    if family != "fk":
        raise ValueError("gaussian packet preset is defined on the fk chain")
    params = GaussianParams(
        sigma=float(spec.get("sigma", 0.05)),
        x0=float(spec.get("x0", 0.2)),
        p0=float(spec.get("p0", 240.0)),
        cutoff=float(spec.get("cutoff", 4.0)),
    )
    return make_gaussian(g, params)


def run_experiment(cfg: dict, out_dir=None) -> dict:
    """Run one configured experiment and return (and optionally write) results.

    The spectral-subspace engine evolves the packet on the history chain
    directly; the dense-fullspace engine builds the complete term
    Hamiltonian, evolves in the full 2^(n+b) space, and projects back,
    cross-validating the subspace restriction on small instances.
    """
    family = cfg.get("family", "fk")
    circuit = resolve_circuit(cfg)
    g = circuit.gate_count
    evo = cfg.get("evolution", DEFAULT_CONFIG["evolution"])
    samples = int(evo.get("samples", 201))
    psi0 = _resolve_packet(cfg, family, g)

    if family == "fk":
        p0 = float(cfg.get("packet", DEFAULT_CONFIG["packet"]).get("p0", 240.0))
        default_t = 3.0 * g**2 / (10.0 * p0)
        lo, hi = int(round(0.6 * g)), g
    elif family == "lin":
        default_t = g / 3.0
        lo, hi = 2 * g // 3 + 1, g + 1
    else:
        raise ValueError(f"unknown family {family!r}")
    t_final = evo.get("t_final")
    t_final = default_t if t_final is None else float(t_final)

    op = subspace_operator(family, g)
    method = evo.get("method", "spectral-subspace")
    leakage = None
    if method == "spectral-subspace":
        traj = evolve_subspace(op, psi0, t_final, samples)
    elif method == "dense-fullspace":
        capacity = g + 1 if family == "fk" else g + 2
        enc = resolve_encoding(cfg, capacity)
        builder = build_fk_hamiltonian if family == "fk" else build_lin_hamiltonian
        ham = builder(circuit, enc)
        psi_full = history_state(circuit, psi0, enc, family)
        full_traj = evolve_fullspace(ham, psi_full, t_final, samples)
        basis = np.column_stack(
            [
                history_state(circuit, _delta(op.dim, c), enc, family)
                for c in range(op.dim)
            ]
        )
        chain_states = full_traj.states @ basis.conj()
        leakage = float(
            np.max(
                np.abs(
                    np.linalg.norm(full_traj.states, axis=1) ** 2
                    - np.linalg.norm(chain_states, axis=1) ** 2
                )
            )
        )
        traj = Trajectory(times=full_traj.times, states=chain_states)
    else:
        raise ValueError(f"unknown evolution method {method!r}")

    g_scale = g // 5 if family == "fk" else g // 3
    row = _chain_metrics(traj, op, psi0, g_scale, lo, hi)
    result = {
        "config": cfg,
        "config_hash": config_hash(cfg),
        "tool_version": __version__,
        "gate_count": g,
        "metrics": {k: _jsonable(v) for k, v in row.items()},
        "leakage": leakage,
        "series": {
            "t": traj.times.tolist(),
            "overlap_initial": overlap_series(traj, psi0).tolist(),
            "center": [chain_position_moments(s)[0] for s in traj.states],
            "std": [chain_position_moments(s)[1] for s in traj.states],
        },
    }
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "summary.json", "w") as fh:
            json.dump(result, fh, indent=2)
        with open(out / "series.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "overlap_initial", "center", "std"])
            s = result["series"]
            for k in range(len(s["t"])):
                writer.writerow(
                    [s["t"][k], s["overlap_initial"][k], s["center"][k], s["std"][k]]
                )
    return result


def _delta(dim: int, c: int) -> np.ndarray:
    v = np.zeros(dim)
    v[c] = 1.0
    return v
