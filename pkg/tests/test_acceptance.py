"""End-to-end acceptance suite.

Each test exercises one headline claim of the library at desk scale and
prints a single PASS/FAIL line to the terminal (bypassing capture), so
a full run reads as a ten-line report.  Tolerances are pinned in the
assertions; the module tests cover the fine-grained behavior.
"""
import numpy as np

from conftest import expm_i_symmetric
from ctqwalk.analysis import (
    _ExactPropagator,
    _StepPropagator,
    complete_graph_ipr_average,
    complete_graph_return_average,
    complete_graph_return_probability,
    cutoff_time,
    fit_exponential,
    ipr,
    localization_test,
    log_time_grid,
    time_averaged_probability,
    trotter_error_bound,
)
from ctqwalk.graphs import complete_graph, extremal_degree_vertex, \
    generate_erdos_renyi, laplacian
from ctqwalk.partition import conjugated_blocks, operation_count, \
    partition_laplacian
from ctqwalk.permutations import cycles_for, verify_cnot_equals_cycles
from ctqwalk.simulator import Statevector, circuit_unitary, jacobi_eigh, \
    step_unitary
from ctqwalk.synthesis import default_masks, multiplexor_forward, sign_matrix, \
    solve_multiplexor_angles, synthesize_component


def _report(capsys, number, name, ok):
    with capsys.disabled():
        print(f"\n[criterion {number:2d}] {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({name}) failed"


def _fidelity_samples(L, partition, gamma, dt, times, start=0):
    psi0 = np.zeros(L.shape[0], dtype=complex)
    psi0[start] = 1.0
    exact = _ExactPropagator(L, gamma)
    steps = _StepPropagator(partition, gamma, dt)
    out = []
    for t in times:
        r = int(round(t / dt))
        f = abs(np.vdot(exact.state(psi0, r * dt), steps.power(r) @ psi0)) ** 2
        out.append(min(float(f), 1.0))
    return np.array(out)


def test_criterion_01_partition_exactness(capsys):
    ps = (0.1, 0.3, 0.5, 0.7, 0.9, 1.0)
    ok = True
    for n in range(2, 8):
        for seed in range(100):
            L = laplacian(generate_erdos_renyi(n, ps[seed % len(ps)], seed))
            partition = partition_laplacian(L)
            ok &= np.array_equal(partition.reconstruct(), L)
            positions = [pos for comp in partition.components
                         for pos in ((r, c) for r, c, _ in comp.entries)]
            ok &= len(positions) == len(set(positions))
            for comp in partition.components:
                conjugated_blocks(comp)  # raises unless 2x2 block-diagonal
            if not ok:
                break
    _report(capsys, 1, "partition exactness on 600 random graphs", ok)


def test_criterion_02_permutation_equivalence(capsys):
    ok = all(verify_cnot_equals_cycles(n, j)
             for n in range(1, 7) for j in range(1 << n))
    # worked n=3 transposition products for x = 1 (1-based endpoints)
    ok &= cycles_for(3, 3).cycles == ((2, 4), (6, 8))
    ok &= cycles_for(3, 2).cycles == ((2, 3), (6, 7))
    _report(capsys, 2, "CNOT sequences equal cycle permutations (n <= 6)", ok)


def test_criterion_03_synthesis_exactness(capsys):
    graphs = [(2, s) for s in range(4)] + [(3, s) for s in range(6)] + \
             [(4, s) for s in range(6)] + [(5, s) for s in range(4)]
    assert len(graphs) == 20
    gamma, dt = 1.0, 0.01
    worst = 0.0
    for idx, (n, seed) in enumerate(graphs):
        p = (0.2, 0.5, 0.8)[idx % 3]
        L = laplacian(generate_erdos_renyi(n, p, seed))
        partition = partition_laplacian(L)
        for j in range(1, 1 << n):
            fold = partition.components[0] if j == 1 else None
            circ = synthesize_component(partition.components[j], gamma, dt,
                                        fold_diagonal=fold)
            dense = partition.components[j].dense().astype(float)
            if fold is not None:
                dense = dense + fold.dense()
            dev = np.linalg.norm(circuit_unitary(circ)
                                 - expm_i_symmetric(gamma * dt, dense))
            worst = max(worst, float(dev))
    _report(capsys, 3,
            f"component circuits match exponentials (max dev {worst:.2e})",
            worst < 1e-10)


def test_criterion_04_walsh_parity(capsys):
    S = sign_matrix(default_masks(2), 2)
    ok = np.array_equal(S, [[1, 1, 1, 1], [1, -1, 1, -1],
                            [1, 1, -1, -1], [1, -1, -1, 1]])
    rng = np.random.Generator(np.random.PCG64(2))
    for k in range(1, 7):
        eta = rng.normal(size=1 << k)
        ok &= bool(np.linalg.norm(
            multiplexor_forward(solve_multiplexor_angles(eta)) - eta) < 1e-12)
    _report(capsys, 4, "Walsh sign table and angle-solve round trip", ok)


def test_criterion_05_fidelity_reproduction(capsys):
    n, gamma, seeds = 6, 1.0, range(10)
    p_values = (0.1, 0.4, 0.7, 1.0)
    dt_values = (1e-3, 1e-2)
    grid = log_time_grid(1e4, points_per_decade=5)
    t_ord = int(np.argmin(np.abs(grid - 1e3)))  # grid point at t = 10^3

    curves = {}
    for p in p_values:
        for seed in seeds:
            g = generate_erdos_renyi(n, p, seed)
            L = laplacian(g)
            partition = partition_laplacian(L)
            start = extremal_degree_vertex(g, "min")
            for dt in dt_values:
                curves[(p, dt, seed)] = _fidelity_samples(
                    L, partition, gamma, dt, grid, start=start)

    def mean_curve(p, dt):
        return np.mean([curves[(p, dt, s)] for s in seeds], axis=0)

    # sparse graphs stay essentially exact out to t = 10^4
    ok_sparse = bool(np.all(mean_curve(0.1, 1e-3) > 0.98))

    # fidelity ordering at t = 10^3 (dt = 1e-3, seed-averaged); the last
    # link is "approximately or greater": in this implementation the
    # complete graph shows no Trotter decay at all (the step unitary
    # commutes with the walk's two-dimensional invariant subspace), so
    # p = 1.0 sits at fidelity ~1 and the comparison carries a 0.01 slack
    at_ord = {p: mean_curve(p, 1e-3)[t_ord] for p in p_values}
    ok_order = (at_ord[0.1] > at_ord[0.4] > at_ord[0.7]
                and at_ord[0.7] >= at_ord[1.0] - 0.01)

    # smaller step dominates pointwise per (p, seed); 1e-6 slack absorbs
    # round-off where both curves sit at 1
    ok_dom = all(
        bool(np.all(curves[(p, 1e-3, s)] >= curves[(p, 1e-2, s)] - 1e-6))
        for p in p_values for s in seeds)

    _report(capsys, 5,
            f"fidelity curves (sparse>{0.98}: {ok_sparse}, "
            f"ordering: {ok_order}, dt dominance: {ok_dom})",
            ok_sparse and ok_order and ok_dom)


def test_criterion_06_cutoff_scaling(capsys):
    gamma, threshold = 1.0, 0.95
    n_values = range(3, 8)
    seeds = range(10)
    # p = 0.1 (small n) and p = 1.0 never cross the threshold, so the
    # fit uses the resolvable densities
    p_values = (0.4, 0.7)
    targets = {1e-3: -np.sqrt(1.5), 1e-2: -np.sqrt(2.0)}

    slopes = {}
    for dt in targets:
        per_p = []
        for p in p_values:
            points = []
            for n in n_values:
                taus = []
                for seed in seeds:
                    g = generate_erdos_renyi(n, p, seed)
                    L = laplacian(g)
                    partition = partition_laplacian(L)
                    start = extremal_degree_vertex(g, "min")
                    psi0 = np.zeros(g.N, dtype=complex)
                    psi0[start] = 1.0
                    exact = _ExactPropagator(L, gamma)
                    steps = _StepPropagator(partition, gamma, dt)
                    samples = []
                    for t in log_time_grid(1e8, points_per_decade=6):
                        r = int(round(t / dt))
                        f = float(abs(np.vdot(exact.state(psi0, r * dt),
                                              steps.power(r) @ psi0)) ** 2)
                        samples.append((r * dt, f))
                        if f < threshold - 0.2:
                            break
                    tau = cutoff_time(samples, threshold)
                    if tau is not None:
                        taus.append(tau)
                if taus:
                    points.append((n, float(np.mean(taus))))
            per_p.append(fit_exponential(points).slope)
        slopes[dt] = float(np.mean(per_p))

    ok = all(abs(slopes[dt] - targets[dt]) < 0.25 for dt in targets)
    _report(capsys, 6,
            f"cutoff-time scaling (slope {slopes[1e-3]:+.3f} vs "
            f"{targets[1e-3]:+.3f}; {slopes[1e-2]:+.3f} vs "
            f"{targets[1e-2]:+.3f})", ok)


def test_criterion_07_trotter_bound(capsys):
    # the bound itself is exactly exponential with slope 2 per qubit
    logs = [np.log2(trotter_error_bound(n, 1e-3)) for n in range(1, 11)]
    ok = bool(np.allclose(np.diff(logs), 2.0))

    # the measured single-step error never exceeds it
    gamma = 1.0
    for n in range(3, 7):
        for dt in (1e-2, 1e-3):
            bound = trotter_error_bound(n, dt)
            for seed in range(10):
                L = laplacian(generate_erdos_renyi(n, 0.5, seed))
                U = step_unitary(partition_laplacian(L), gamma, dt)
                err = np.linalg.norm(U - expm_i_symmetric(gamma * dt,
                                                          L.astype(float)), 2)
                ok &= bool(err <= bound)
    _report(capsys, 7, "Trotter error bound (slope 2, step error <= bound)", ok)


def test_criterion_08_complete_graph_closed_forms(capsys):
    rng = np.random.Generator(np.random.PCG64(0))
    worst_inst, worst_avg = 0.0, 0.0
    for n in range(1, 9):  # N = 2 .. 256
        N = 1 << n
        L = laplacian(complete_graph(n))
        evals, Q = jacobi_eigh(L.astype(float))
        psi0 = np.zeros(N, dtype=complex)
        psi0[0] = 1.0
        coeffs = Q.T @ psi0
        for t in rng.uniform(0.0, 10.0, size=100):
            psi = Q @ (np.exp(1j * evals * t) * coeffs)
            worst_inst = max(worst_inst, abs(
                abs(psi[0]) ** 2 - complete_graph_return_probability(N, t)))
        # discrete average over horizon 2*pi = N full periods of
        # cos(N t).  With t_k = 2*pi*k/K, sum_k cos(N t_k) = 0 exactly
        # whenever K does not divide N (true here: K = 1000), so the
        # finite-horizon correction vanishes and only round-off remains.
        K = 1000
        ret_acc, ipr_acc = 0.0, 0.0
        for k in range(1, K + 1):
            psi = Q @ (np.exp(1j * evals * (2 * np.pi * k / K)) * coeffs)
            prob = np.abs(psi) ** 2
            ret_acc += prob[0]
            ipr_acc += ipr(prob / prob.sum())
        worst_avg = max(worst_avg,
                        abs(ret_acc / K - complete_graph_return_average(N)),
                        abs(ipr_acc / K - complete_graph_ipr_average(N)))
    ok = worst_inst < 1e-10 and worst_avg < 1e-9
    _report(capsys, 8,
            f"complete-graph closed forms (inst {worst_inst:.1e}, "
            f"avg {worst_avg:.1e})", ok)


def test_criterion_09_localization_agreement(capsys):
    n, gamma, dt = 5, 1.0, 1e-3
    ok = True
    for p in (0.1, 0.4):
        for seed in range(3):
            g = generate_erdos_renyi(n, p, seed)
            L = laplacian(g)
            partition = partition_laplacian(L)
            start = extremal_degree_vertex(g, "min")
            psi0 = Statevector.basis_state(n, start)
            exact = time_averaged_probability(L, gamma, psi0, samples=1000,
                                              horizon=100.0,
                                              start_vertex=start)
            circ = time_averaged_probability(L, gamma, psi0, samples=1000,
                                             horizon=100.0, evolve="circuit",
                                             partition=partition, dt=dt,
                                             start_vertex=start)
            ok &= localization_test(exact, start)
            ok &= localization_test(circ, start)
            ok &= bool(np.max(np.abs(exact.p_bar - circ.p_bar)) < 0.05)
    _report(capsys, 9,
            "localization at min-degree start, exact vs circuit", ok)


def test_criterion_10_partition_complexity(capsys):
    counts = []
    for n in range(4, 10):
        L = laplacian(generate_erdos_renyi(n, 0.5, seed=1))
        counts.append((n, operation_count(partition_laplacian(L))))
    ns = np.array([n for n, _ in counts], dtype=float)
    logs = np.log2([c for _, c in counts])
    slope = float(np.polyfit(ns, logs, 1)[0])
    ok = abs(slope - 2.0) < 0.2
    _report(capsys, 10,
            f"partition op-count scaling (slope {slope:+.3f})", ok)
