"""Command-line entry point.

Subcommands cover the full pipeline: partition verification, circuit
synthesis, fidelity sweeps, cutoff-time scaling fits, localization
profiles, complete-graph closed-form checks, and IPR traces.  Sweeps
write CSV files (plus rendered figures by default) into the output
directory; every CSV starts with '#' comment lines recording the full
configuration so a rerun with the same flags is byte-identical.

Exit codes: 0 success, 2 invalid configuration, 3 verification or
tolerance failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import reporting
from .analysis import (
    complete_graph_ipr_average,
    complete_graph_return_average,
    complete_graph_return_probability,
    fit_exponential,
    ipr,
)
from .circuits import circuit_to_json, disassemble, gate_count
from .graphs import (
    Graph,
    complete_graph,
    generate_erdos_renyi,
    laplacian,
    read_edge_list,
)
from .partition import conjugated_blocks, partition_laplacian, partition_to_json
from .simulator import Statevector, circuit_unitary, jacobi_eigh
from .sweeps import (
    CutoffTask,
    FidelityTask,
    IprTask,
    LocalizationTask,
    cutoff_for,
    fidelity_rows,
    ipr_rows,
    localization_for,
)
from .synthesis import synthesize_component, synthesize_trotter_step

OUTPUT_DIR_ENV = "CTQWALK_OUTDIR"

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3


class ValidationError(Exception):
    """Bad configuration; maps to exit code 2."""


class VerificationError(Exception):
    """A numeric check failed its tolerance; maps to exit code 3."""


@dataclass
class RunConfig:
    """Validated sweep configuration shared by the experiment commands."""

    subcommand: str
    n_values: list[int]
    p_values: list[float]
    dt_values: list[float]
    gamma: float
    seeds: list[int]
    t_max: float
    points_per_decade: int
    start_policy: str
    output_dir: str
    jobs: int
    figures: bool
    extra: dict = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if not self.n_values or any(n < 1 for n in self.n_values):
            raise ValidationError("need at least one register size n >= 1")
        if not self.p_values or any(not 0.0 <= p <= 1.0 for p in self.p_values):
            raise ValidationError("edge probabilities must lie in [0, 1]")
        if not self.dt_values or any(dt <= 0 for dt in self.dt_values):
            raise ValidationError("time steps must be positive")
        if self.gamma <= 0:
            raise ValidationError("gamma must be positive")
        if not self.seeds:
            raise ValidationError("need at least one seed")
        if self.t_max <= 0 or self.points_per_decade < 1:
            raise ValidationError("need t_max > 0 and points per decade >= 1")
        if self.jobs < 1:
            raise ValidationError("jobs must be >= 1")
        if self.start_policy not in ("min-degree", "max-degree"):
            try:
                int(self.start_policy)
            except ValueError:
                raise ValidationError(
                    "start policy must be min-degree, max-degree, or an index")
        return self

    def as_header(self) -> dict:
        doc = {
            "subcommand": self.subcommand,
            "n": ",".join(map(str, self.n_values)),
            "p": ",".join(repr(p) for p in self.p_values),
            "dt": ",".join(repr(dt) for dt in self.dt_values),
            "gamma": repr(self.gamma),
            "seeds": ",".join(map(str, self.seeds)),
            "t_max": repr(self.t_max),
            "points_per_decade": str(self.points_per_decade),
            "start": self.start_policy,
        }
        doc.update({k: str(v) for k, v in sorted(self.extra.items())})
        return doc


# ---------------------------------------------------------------------------
# argument parsing helpers

def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ValidationError(f"cannot parse float list {text!r}")


def _parse_ints(text: str) -> list[int]:
    """Comma list or inclusive colon range: '1,2,5' or '3:7'."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ValidationError(f"cannot parse int list/range {text!r}")


def _output_dir(args) -> str:
    directory = args.output_dir or os.environ.get(OUTPUT_DIR_ENV) or "."
    os.makedirs(directory, exist_ok=True)
    return directory


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path: str, columns: Sequence[str], rows: Sequence[tuple],
              header: dict) -> None:
    """CSV with '#'-prefixed config lines, then the column header, then
    one comma-joined row per record (floats via repr, byte-stable)."""
    with open(path, "w") as fh:
        for key, value in header.items():
            fh.write(f"# {key}={value}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_format_cell(v) for v in row) + "\n")


def _run_tasks(fn: Callable, tasks: Sequence, jobs: int) -> list:
    """Map fn over tasks, optionally on a worker pool.  Results keep
    task order, so parallel and serial runs merge identically."""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _load_graph(args) -> tuple[Graph, Optional[float], Optional[int]]:
    """Graph from --graph FILE, --complete, or the (--n, --p, --seed)
    generator flags."""
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            return read_edge_list(fh)
    if getattr(args, "complete", False):
        if args.n is None:
            raise ValidationError("--complete requires --n")
        return complete_graph(args.n), None, None
    if args.n is None or args.p is None or args.seed is None:
        raise ValidationError("need --graph FILE or all of --n, --p, --seed")
    if not 0.0 <= args.p <= 1.0:
        raise ValidationError("edge probability must lie in [0, 1]")
    return generate_erdos_renyi(args.n, args.p, args.seed), args.p, args.seed


# ---------------------------------------------------------------------------
# subcommands

def cmd_partition(args) -> int:
    g, p, seed = _load_graph(args)
    L = laplacian(g)
    partition = partition_laplacian(L)

    ok = True
    reconstructed = np.array_equal(partition.reconstruct(), L)
    print(f"exact-reconstruction: {'pass' if reconstructed else 'FAIL'}")
    ok &= reconstructed

    supports: set[tuple[int, int]] = set()
    disjoint = True
    for comp in partition.components:
        for r, c, _ in comp.entries:
            if (r, c) in supports:
                disjoint = False
            supports.add((r, c))
    print(f"disjoint-support: {'pass' if disjoint else 'FAIL'}")
    ok &= disjoint

    try:
        for comp in partition.components:
            conjugated_blocks(comp)
        print("block-diagonal-conjugation: pass")
    except AssertionError as exc:
        print(f"block-diagonal-conjugation: FAIL ({exc})")
        ok = False

    out = args.output or os.path.join(_output_dir(args), "partition.json")
    with open(out, "w") as fh:
        fh.write(partition_to_json(partition) + "\n")
    print(f"wrote {out} ({len(partition.components)} components, "
          f"op_count={partition.op_count})")
    if not ok:
        raise VerificationError("partition verification failed")
    return EXIT_OK


def cmd_synthesize(args) -> int:
    g, _, _ = _load_graph(args)
    if args.dt <= 0 or args.gamma <= 0:
        raise ValidationError("gamma and dt must be positive")
    L = laplacian(g)
    partition = partition_laplacian(L)
    circuit = synthesize_trotter_step(partition, args.gamma, args.dt)

    out = args.output or os.path.join(_output_dir(args), "circuit.json")
    with open(out, "w") as fh:
        fh.write(circuit_to_json(circuit) + "\n")
    txt = os.path.splitext(out)[0] + ".txt"
    with open(txt, "w") as fh:
        fh.write(disassemble(circuit))
    counts = gate_count(circuit)
    print(f"wrote {out} and {txt} "
          f"({counts['CNOT']} CNOT, {counts['ROT']} rotations, "
          f"{counts['DIAG_PHASE']} diagonal phases)")

    if g.n > args.dense_limit:
        print(f"dense check skipped: n={g.n} exceeds limit {args.dense_limit}")
        return EXIT_OK
    worst = 0.0
    for comp in partition.components[1:]:
        fold = partition.components[0] if comp.j == 1 else None
        per_comp = synthesize_component(comp, args.gamma, args.dt,
                                        fold_diagonal=fold)
        dense = comp.dense().astype(float)
        if fold is not None:
            dense = dense + partition.components[0].dense()
        evals, Q = jacobi_eigh(dense)
        expected = Q @ np.diag(np.exp(1j * args.gamma * args.dt * evals)) @ Q.T
        deviation = float(np.linalg.norm(circuit_unitary(per_comp) - expected))
        worst = max(worst, deviation)
        print(f"component j={comp.j}: frobenius deviation {deviation:.3e}")
    print(f"max deviation {worst:.3e}")
    if worst > 1e-8:
        raise VerificationError(f"synthesis deviation {worst:.3e} > 1e-8")
    return EXIT_OK


def _sweep_config(args, subcommand: str, **extra) -> RunConfig:
    return RunConfig(
        subcommand=subcommand,
        n_values=_parse_ints(args.n),
        p_values=_parse_floats(args.p),
        dt_values=_parse_floats(args.dt),
        gamma=args.gamma,
        seeds=_parse_ints(args.seeds),
        t_max=args.t_max,
        points_per_decade=getattr(args, "points_per_decade", 50),
        start_policy=args.start,
        output_dir=_output_dir(args),
        jobs=args.jobs,
        figures=args.figures,
        extra=extra,
    ).validate()


def cmd_fidelity_sweep(args) -> int:
    cfg = _sweep_config(args, "fidelity-sweep")
    tasks = [
        FidelityTask(n=n, p=p, seed=seed, dt=dt, gamma=cfg.gamma,
                     t_max=cfg.t_max, points_per_decade=cfg.points_per_decade,
                     start_policy=cfg.start_policy)
        for n in cfg.n_values
        for p in cfg.p_values
        for dt in cfg.dt_values
        for seed in cfg.seeds
    ]
    rows = [row for chunk in _run_tasks(fidelity_rows, tasks, cfg.jobs)
            for row in chunk]
    path = os.path.join(cfg.output_dir, "fidelity.csv")
    write_csv(path, ["n", "p", "seed", "dt", "t_eff", "fidelity"], rows,
              cfg.as_header())
    print(f"wrote {path} ({len(rows)} rows)")
    if cfg.figures:
        fig = os.path.join(cfg.output_dir, "fidelity.png")
        reporting.save_fidelity_figure(rows, fig)
        print(f"wrote {fig}")
    return EXIT_OK


def cmd_cutoff_scaling(args) -> int:
    cfg = _sweep_config(args, "cutoff-scaling", threshold=args.threshold)
    if len(cfg.n_values) < 3:
        raise ValidationError("cutoff scaling needs at least 3 register sizes")
    if not 0.0 < args.threshold < 1.0:
        raise ValidationError("threshold must lie in (0, 1)")
    tasks = [
        CutoffTask(n=n, p=p, seed=seed, dt=dt, gamma=cfg.gamma,
                   t_max=cfg.t_max, points_per_decade=cfg.points_per_decade,
                   threshold=args.threshold, start_policy=cfg.start_policy)
        for dt in cfg.dt_values
        for p in cfg.p_values
        for n in cfg.n_values
        for seed in cfg.seeds
    ]
    taus = _run_tasks(cutoff_for, tasks, cfg.jobs)

    cutoff_rows = [
        (t.n, t.p, t.seed, t.dt, tau if tau is not None else "beyond-horizon")
        for t, tau in zip(tasks, taus)
    ]
    cutoff_path = os.path.join(cfg.output_dir, "cutoff.csv")
    write_csv(cutoff_path, ["n", "p", "seed", "dt", "tau_c"], cutoff_rows,
              cfg.as_header())
    print(f"wrote {cutoff_path} ({len(cutoff_rows)} rows)")

    averaged: list[tuple[int, float, float, float]] = []  # (n, p, dt, mean tau)
    for dt in cfg.dt_values:
        for p in cfg.p_values:
            for n in cfg.n_values:
                values = [tau for t, tau in zip(tasks, taus)
                          if (t.n, t.p, t.dt) == (n, p, dt) and tau is not None]
                if values:
                    averaged.append((n, p, dt, float(np.mean(values))))

    fit_rows = []
    for dt in cfg.dt_values:
        for p in cfg.p_values:
            points = [(n, tau) for n, pp, dd, tau in averaged
                      if (pp, dd) == (p, dt)]
            if len(points) < 3:
                print(f"fit skipped for p={p:g}, dt={dt:g}: "
                      f"only {len(points)} resolvable sizes")
                continue
            fit = fit_exponential(points)
            fit_rows.append((dt, p, fit.slope, fit.intercept, fit.residual))
            print(f"p={p:g}, dt={dt:g}: slope {fit.slope:+.4f}, "
                  f"intercept {fit.intercept:+.4f}")
    fits_path = os.path.join(cfg.output_dir, "fits.csv")
    write_csv(fits_path, ["dt", "p", "slope", "intercept", "residual"],
              fit_rows, cfg.as_header())
    print(f"wrote {fits_path} ({len(fit_rows)} rows)")
    if cfg.figures:
        fig = os.path.join(cfg.output_dir, "cutoff.png")
        reporting.save_cutoff_figure(averaged, fit_rows, fig)
        print(f"wrote {fig}")
    return EXIT_OK


def cmd_localization(args) -> int:
    cfg = _sweep_config(args, "localization", samples=args.samples,
                        horizon=args.horizon)
    if args.samples < 1 or args.horizon <= 0:
        raise ValidationError("need samples >= 1 and horizon > 0")
    dt = cfg.dt_values[0]
    tasks = [
        LocalizationTask(n=n, p=p, seed=seed, dt=dt, gamma=cfg.gamma,
                         samples=args.samples, horizon=args.horizon,
                         start_policy=cfg.start_policy)
        for n in cfg.n_values
        for p in cfg.p_values
        for seed in cfg.seeds
    ]
    results = _run_tasks(localization_for, tasks, cfg.jobs)

    circ_rows, exact_rows, contour_rows = [], [], []
    for task, res in zip(tasks, results):
        for v in range(res.circuit.N):
            circ_rows.append((task.n, task.p, task.seed, v,
                              float(res.circuit.p_bar[v])))
            exact_rows.append((task.n, task.p, task.seed, v,
                               float(res.exact.p_bar[v])))
        for t_eff, probs in zip(res.contour_times, res.contour_probs):
            for v in range(res.circuit.N):
                contour_rows.append((task.n, task.p, task.seed,
                                     float(t_eff), v, float(probs[v])))
        dist = float(np.max(np.abs(res.exact.p_bar - res.circuit.p_bar)))
        print(f"n={task.n}, p={task.p:g}, seed={task.seed}: start vertex "
              f"{res.start_vertex}, p_bar(start)={res.circuit.p_bar[res.start_vertex]:.4f}, "
              f"exact-vs-circuit Linf={dist:.2e}")

    header = cfg.as_header()
    loc_path = os.path.join(cfg.output_dir, "localization.csv")
    write_csv(loc_path, ["n", "p", "seed", "vertex", "p_bar"], circ_rows, header)
    exact_path = os.path.join(cfg.output_dir, "localization_exact.csv")
    write_csv(exact_path, ["n", "p", "seed", "vertex", "p_bar"], exact_rows, header)
    contour_path = os.path.join(cfg.output_dir, "contour.csv")
    write_csv(contour_path, ["n", "p", "seed", "t_eff", "vertex", "prob"],
              contour_rows, header)
    print(f"wrote {loc_path}, {exact_path}, {contour_path}")

    if cfg.figures:
        seen: set[tuple[int, float]] = set()
        for task, res in zip(tasks, results):
            if (task.n, task.p) in seen:
                continue
            seen.add((task.n, task.p))
            tag = f"n{task.n}_p{task.p:g}_s{task.seed}"
            bar = os.path.join(cfg.output_dir, f"localization_{tag}.png")
            reporting.save_localization_figure(
                res.exact.p_bar, res.circuit.p_bar, res.start_vertex, bar,
                title=f"n={task.n}, p={task.p:g}, seed={task.seed}")
            heat = os.path.join(cfg.output_dir, f"contour_{tag}.png")
            reporting.save_contour_figure(res.contour_times, res.contour_probs,
                                          heat,
                                          title=f"n={task.n}, p={task.p:g}, "
                                                f"seed={task.seed}")
            print(f"wrote {bar} and {heat}")
    return EXIT_OK


def cmd_complete_graph_check(args) -> int:
    n_values = _parse_ints(args.n_range)
    if not n_values or any(n < 1 for n in n_values):
        raise ValidationError("need register sizes n >= 1")
    tol = 1e-9
    rng = np.random.Generator(np.random.PCG64(0))
    worst = 0.0
    print(f"{'N':>5} {'avg return (num)':>18} {'closed form':>14} "
          f"{'avg IPR (num)':>14} {'closed form':>14}")
    for n in n_values:
        g = complete_graph(n)
        N = g.N
        L = laplacian(g)
        evals, Q = jacobi_eigh(L.astype(float))
        psi0 = Statevector.basis_state(n, 0)
        coeffs = Q.T @ psi0.amplitudes

        # instantaneous return probability at random times
        for t in rng.uniform(0.0, 10.0, size=args.time_samples):
            psi = Q @ (np.exp(1j * evals * t) * coeffs)
            delta = abs(abs(psi[0]) ** 2 - complete_graph_return_probability(N, t))
            worst = max(worst, delta)

        # discrete average aligned to the dynamical period 2*pi/N
        K = 1000
        horizon = 2 * np.pi  # N full periods of cos(N t)
        ret_acc = 0.0
        ipr_acc = 0.0
        for k in range(1, K + 1):
            t = k * horizon / K
            psi = Q @ (np.exp(1j * evals * t) * coeffs)
            prob = np.abs(psi) ** 2
            ret_acc += prob[0]
            ipr_acc += ipr(prob / prob.sum())
        ret_avg = ret_acc / K
        ipr_avg = ipr_acc / K
        ret_cf = complete_graph_return_average(N)
        ipr_cf = complete_graph_ipr_average(N)
        worst = max(worst, abs(ret_avg - ret_cf), abs(ipr_avg - ipr_cf))
        print(f"{N:>5} {ret_avg:>18.12f} {ret_cf:>14.12f} "
              f"{ipr_avg:>14.12f} {ipr_cf:>14.12f}")
    print(f"max deviation {worst:.3e} (tolerance {tol:g})")
    if worst > tol:
        raise VerificationError(
            f"closed-form deviation {worst:.3e} exceeds {tol:g}")
    return EXIT_OK


def cmd_ipr(args) -> int:
    cfg = _sweep_config(args, "ipr", evolve=args.evolve)
    if args.evolve not in ("exact", "circuit"):
        raise ValidationError("evolve must be 'exact' or 'circuit'")
    dt = cfg.dt_values[0]
    tasks = [
        IprTask(n=n, p=p, seed=seed, dt=dt, gamma=cfg.gamma, t_max=cfg.t_max,
                points_per_decade=cfg.points_per_decade,
                start_policy=cfg.start_policy, evolve=args.evolve)
        for n in cfg.n_values
        for p in cfg.p_values
        for seed in cfg.seeds
    ]
    rows = [row for chunk in _run_tasks(ipr_rows, tasks, cfg.jobs)
            for row in chunk]
    path = os.path.join(cfg.output_dir, "ipr.csv")
    write_csv(path, ["n", "p", "seed", "t_eff", "ipr"], rows, cfg.as_header())
    print(f"wrote {path} ({len(rows)} rows)")
    if cfg.figures:
        fig = os.path.join(cfg.output_dir, "ipr.png")
        reporting.save_ipr_figure(rows, fig)
        print(f"wrote {fig}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly

def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", help="edge-list file ('n p seed' header)")
    sub.add_argument("--complete", action="store_true",
                     help="use the complete graph on 2^n vertices")
    sub.add_argument("--n", type=int, help="register size (N = 2^n vertices)")
    sub.add_argument("--p", type=float, help="edge probability")
    sub.add_argument("--seed", type=int, help="graph seed")
    sub.add_argument("--output-dir", help=f"output directory "
                     f"(default ${OUTPUT_DIR_ENV} or '.')")


def _add_sweep_flags(sub: argparse.ArgumentParser, t_max: float) -> None:
    sub.add_argument("--n", required=True,
                     help="register sizes: comma list or lo:hi range")
    sub.add_argument("--p", required=True, help="edge probabilities, comma list")
    sub.add_argument("--seeds", default="0:9",
                     help="seeds: comma list or lo:hi range (default 0:9)")
    sub.add_argument("--gamma", type=float, default=1.0)
    sub.add_argument("--t-max", type=float, default=t_max)
    sub.add_argument("--points-per-decade", type=int, default=50)
    sub.add_argument("--start", default="min-degree",
                     help="start vertex: min-degree | max-degree | index")
    sub.add_argument("--jobs", type=int, default=1,
                     help="worker processes over (parameter, seed) tuples")
    sub.add_argument("--output-dir", help=f"output directory "
                     f"(default ${OUTPUT_DIR_ENV} or '.')")
    sub.add_argument("--figures", dest="figures", action="store_true",
                     default=True, help="render figures next to the CSVs")
    sub.add_argument("--no-figures", dest="figures", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctqwalk",
        description="Trotterized continuous-time quantum walks from "
                    "Laplacian partitions")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("partition",
                              help="partition a Laplacian and verify it")
    _add_graph_flags(sub)
    sub.add_argument("--output", help="partition JSON path")
    sub.set_defaults(func=cmd_partition)

    sub = commands.add_parser("synthesize",
                              help="compile a Trotter step circuit")
    _add_graph_flags(sub)
    sub.add_argument("--gamma", type=float, default=1.0)
    sub.add_argument("--dt", type=float, default=1e-3)
    sub.add_argument("--dense-limit", type=int, default=5,
                     help="largest n for the dense equivalence report")
    sub.add_argument("--output", help="circuit JSON path")
    sub.set_defaults(func=cmd_synthesize)

    sub = commands.add_parser("fidelity-sweep",
                              help="exact-vs-Trotter fidelity curves")
    _add_sweep_flags(sub, t_max=1e5)
    sub.add_argument("--dt", default="1e-3", help="time steps, comma list")
    sub.set_defaults(func=cmd_fidelity_sweep)

    sub = commands.add_parser("cutoff-scaling",
                              help="cutoff-time scaling fits over n")
    _add_sweep_flags(sub, t_max=1e6)
    sub.add_argument("--dt", default="1e-3", help="time steps, comma list")
    sub.add_argument("--threshold", type=float, default=0.95)
    sub.set_defaults(func=cmd_cutoff_scaling)

    sub = commands.add_parser("localization",
                              help="time-averaged vertex probabilities")
    _add_sweep_flags(sub, t_max=100.0)
    sub.add_argument("--dt", default="1e-3",
                     help="Trotter step for the circuit path")
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--horizon", type=float, default=100.0)
    sub.set_defaults(func=cmd_localization)

    sub = commands.add_parser("complete-graph-check",
                              help="numeric vs closed-form table for K_N")
    sub.add_argument("--n-range", default="1:6",
                     help="register sizes: comma list or lo:hi range")
    sub.add_argument("--time-samples", type=int, default=100)
    sub.set_defaults(func=cmd_complete_graph_check)

    sub = commands.add_parser("ipr", help="inverse participation ratio traces")
    _add_sweep_flags(sub, t_max=100.0)
    sub.add_argument("--dt", default="1e-3")
    sub.add_argument("--evolve", default="circuit",
                     choices=("exact", "circuit"))
    sub.set_defaults(func=cmd_ipr)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
