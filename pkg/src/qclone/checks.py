"""Numbered verification suite: every published prediction, checked.

Each criterion function runs one family of checks and returns a
``CriterionResult`` whose rows carry (reference value, computed value,
tolerance).  The CLI ``reproduce`` command renders these as a table and the
acceptance test suite asserts them one by one; both go through this module
so there is exactly one implementation of each check.

Seeds are fixed so every run works on the same inputs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import analysis
from .cloners import (
    gisin_massar_map,
    local_register_clone,
    mdim_clone,
    nonlocal_register_clone,
    uqcm_map,
)
from .linalg import (
    StateVector,
    SubsystemLayout,
    bures_distance,
    hermitian_eigenvalues,
    outer,
    partial_transpose,
    reduced_density,
    von_neumann_entropy,
)
from .network import build_prep_circuit_1, clone_via_network, run_circuit
from .states import BlochQubit, bloch_ket, haar_random_ket, random_bloch


@dataclass(frozen=True)
class CheckRow:
    """One line of the verification table.

    mode ``abs``: pass iff |computed - reference| <= tol;
    mode ``ge``:  pass iff computed >= reference - tol;
    mode ``le``:  pass iff computed <= reference + tol.
    """

    label: str
    reference: float
    computed: float
    tol: float
    mode: str = "abs"

    @property
    def delta(self) -> float:
        return abs(self.computed - self.reference)

    @property
    def ok(self) -> bool:
        if self.mode == "abs":
            return self.delta <= self.tol
        if self.mode == "ge":
            return self.computed >= self.reference - self.tol
        if self.mode == "le":
            return self.computed <= self.reference + self.tol
        raise ValueError(f"unknown row mode {self.mode!r}")


@dataclass(frozen=True)
class CriterionResult:
    index: int
    title: str
    rows: tuple[CheckRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)


def _worst(values: Iterable[float], ref: float) -> float:
    """The observed value farthest from the reference."""
    vals = list(values)
    return vals[int(np.argmax([abs(v - ref) for v in vals]))]


def _haar_qubits(count: int, seed: int) -> list[BlochQubit]:
    rng = np.random.default_rng(seed)
    return [random_bloch(rng) for _ in range(count)]


def criterion_network_uqcm() -> CriterionResult:
    """Single-copy cloning through the gate network: the clone marginals fit
    the scaled form with s = 2/3 and every input is copied with fidelity
    5/6."""
    s_vals, residuals, fids = [], [], []
    for q in _haar_qubits(100, seed=11):
        psi = clone_via_network(q, 1)
        ideal = outer(bloch_ket(q))
        amps = bloch_ket(q).amps
        for wire in (0, 1):
            marg = reduced_density(psi, [wire])
            fit = analysis.extract_scaling_factor(marg, ideal)
            s_vals.append(fit.s)
            residuals.append(fit.residual)
            fids.append(float(np.vdot(amps, marg.mat @ amps).real))
    rows = (
        CheckRow("scaling factor s, both clones, 100 Haar inputs", 2.0 / 3.0, _worst(s_vals, 2 / 3), 1e-10),
        CheckRow("scaled-form residual (max norm)", 0.0, max(residuals), 1e-10),
        CheckRow("per-input clone fidelity", 5.0 / 6.0, _worst(fids, 5 / 6), 1e-10),
    )
    return CriterionResult(1, "1->2 network: scaling 2/3, fidelity 5/6", rows)


def criterion_prep_circuit() -> CriterionResult:
    """The two-qubit preparation circuit turns |00> into
    (2|00> + |01> + |11>)/sqrt(6)."""
    start = StateVector(SubsystemLayout((2, 2)), np.array([1, 0, 0, 0], dtype=np.complex128))
    amps = run_circuit(build_prep_circuit_1(), start).amps
    r6 = 1.0 / math.sqrt(6.0)
    targets = (2 * r6, r6, 0.0, r6)
    labels = ("|00>", "|01>", "|10>", "|11>")
    rows = tuple(
        CheckRow(f"amplitude on {lbl}", t, float(amps[i].real), 1e-12)
        for i, (lbl, t) in enumerate(zip(labels, targets))
    ) + (CheckRow("largest imaginary part", 0.0, float(np.abs(amps.imag).max()), 1e-12),)
    return CriterionResult(2, "preparation circuit output state", rows)


def criterion_network_equals_map() -> CriterionResult:
    """The copy-stage network acting on the prepared state reproduces the
    direct 1-to-(n+1) cloning isometry, up to global phase."""
    rows = []
    for n in range(1, 6):
        overlaps = []
        for q in _haar_qubits(20, seed=100 + n):
            net = clone_via_network(q, n).amps
            direct = gisin_massar_map(q, n).joint.amps
            overlaps.append(float(abs(np.vdot(net, direct))))
        rows.append(CheckRow(f"min overlap |<network|map>|, n={n}", 1.0, min(overlaps), 1e-10))
    return CriterionResult(3, "network output equals direct cloning map", tuple(rows))


def criterion_scaling_factor() -> CriterionResult:
    """Clone marginals scale as s = 1/3 + 2/(3(n+1)) and all n+1 clones of a
    run carry identical marginals."""
    rows = []
    spread = 0.0
    for n in range(1, 7):
        s_vals = []
        for q in _haar_qubits(5, seed=200 + n):
            out = gisin_massar_map(q, n)
            ideal = outer(bloch_ket(q))
            margs = [out.clone_marginal(i) for i in range(n + 1)]
            s_vals.extend(analysis.extract_scaling_factor(m, ideal).s for m in margs)
            for i in range(len(margs)):
                for j in range(i + 1, len(margs)):
                    spread = max(spread, float(np.abs(margs[i].mat - margs[j].mat).max()))
        ref = analysis.scaling_factor_formula(n)
        rows.append(CheckRow(f"scaling factor, n={n}", ref, _worst(s_vals, ref), 1e-10))
    rows.append(CheckRow("max pairwise clone-marginal deviation", 0.0, spread, 1e-10))
    return CriterionResult(4, "multi-copy scaling law and clone symmetry", tuple(rows))


def criterion_idle_law() -> CriterionResult:
    """Every idle copier qubit ends in (1/3) rho_id^T + (1/3) identity,
    whatever is being cloned."""
    rows = []
    for n in range(1, 6):
        devs = [
            analysis.idle_qubit_check(gisin_massar_map(q, n), q)
            for q in _haar_qubits(5, seed=300 + n)
        ]
        rows.append(CheckRow(f"max idle-qubit deviation, n={n}", 0.0, max(devs), 1e-10))
    return CriterionResult(5, "idle-qubit marginal law", tuple(rows))


def criterion_pt_spectra() -> CriterionResult:
    """Two-clone partial-transpose spectra match the closed form, do not
    depend on the input, and signal entanglement only for n = 1."""
    rows = []
    min_eig_n1 = 0.0
    min_eig_rest = np.inf
    for n in range(1, 7):
        formula = analysis.pt_spectrum_formula(n)
        spectra = []
        for q in _haar_qubits(20, seed=400 + n):
            out = gisin_massar_map(q, n)
            w = hermitian_eigenvalues(partial_transpose(out.pair_marginal(0, 1), 1))
            spectra.append(w)
        spectra = np.array(spectra)
        dev = float(np.abs(spectra - formula).max())
        input_spread = float(spectra.std(axis=0).max())
        rows.append(CheckRow(f"PT spectrum vs formula, n={n}", 0.0, dev, 1e-9))
        rows.append(CheckRow(f"PT spectrum input dependence (std), n={n}", 0.0, input_spread, 1e-10))
        if n == 1:
            min_eig_n1 = float(spectra[:, 0].max())
        else:
            min_eig_rest = min(min_eig_rest, float(spectra[:, 0].min()))
    rows.append(CheckRow("clone pair entangled at n=1 (min PT eig < 0)", 0.0, min_eig_n1, 0.0, mode="le"))
    rows.append(CheckRow("clone pairs separable for n>=2 (min PT eig >= 0)", 0.0, min_eig_rest, 1e-10, mode="ge"))
    return CriterionResult(6, "two-clone partial-transpose spectra", tuple(rows))


def criterion_a1b1_spectrum() -> CriterionResult:
    """The (clone, copier-qubit) pair of the single-copy cloner: for real
    inputs its PT spectrum is {(1-sqrt(17))/12, 1/6, (1+sqrt(17))/12, 2/3},
    and its smallest PT eigenvalue is negative for every input."""
    frozen = np.sort([(1 - math.sqrt(17)) / 12, 1 / 6, (1 + math.sqrt(17)) / 12, 2 / 3])
    dev = 0.0
    for theta in np.linspace(0.05, math.pi - 0.05, 7):
        w = analysis.rho_a1b1_pt_spectrum(BlochQubit(float(theta), 0.0))
        dev = max(dev, float(np.abs(w - frozen).max()))
    worst_min = -np.inf
    thetas = np.linspace(math.pi / 40, math.pi * 39 / 40, 20)
    phis = np.linspace(0.0, 2 * math.pi, 20, endpoint=False)
    for theta in thetas:
        for phi in phis:
            w = analysis.rho_a1b1_pt_spectrum(BlochQubit(float(theta), float(phi)))
            worst_min = max(worst_min, float(w[0]))
    rows = (
        CheckRow("PT spectrum vs frozen values (real inputs)", 0.0, dev, 1e-9),
        CheckRow("largest min-PT-eigenvalue over 20x20 grid", 0.0, worst_min, 0.0, mode="le"),
    )
    return CriterionResult(7, "clone/copier pair stays entangled", rows)


def criterion_copier_purity() -> CriterionResult:
    """Copier purity matches 2(2n^2+7n+6)/(3(n+1)(n+2)^2) and sits above the
    1/(n+1) floor."""
    rows = []
    min_margin = np.inf
    for n in range(1, 7):
        ref = analysis.purity_xi(n)
        vals = [
            analysis.purity_xi_simulated(gisin_massar_map(q, n))
            for q in _haar_qubits(3, seed=500 + n)
        ]
        rows.append(CheckRow(f"copier purity, n={n}", ref, _worst(vals, ref), 1e-10))
        min_margin = min(min_margin, min(vals) - 1.0 / (n + 1))
    rows.append(CheckRow("purity above 1/(n+1) floor", 0.0, float(min_margin), 0.0, mode="ge"))
    return CriterionResult(8, "copier purity law", tuple(rows))


def criterion_mdim() -> CriterionResult:
    """M-dimensional cloner: scaling, Bures distance, entropies and the
    copier marginal all match their closed forms; M = 2 reduces to the
    qubit cloner exactly."""
    rows = []
    ent_dev = 0.0
    copier_dev = 0.0
    for m in (2, 3, 4, 8, 16, 32, 64):
        f = analysis.mdim_formulas(m)
        s_vals, b_vals = [], []
        for k in range(2):
            phi = haar_random_ket(m, seed=600 + 10 * m + k)
            out = mdim_clone(phi)
            ideal = outer(phi)
            marg = out.clone_marginal(0)
            s_vals.append(analysis.extract_scaling_factor(marg, ideal).s)
            b_vals.append(bures_distance(marg, ideal))
            ent_dev = max(ent_dev, abs(von_neumann_entropy(marg) - f.entropy_clone))
            copier = out.copier_marginal()
            ent_dev = max(ent_dev, abs(von_neumann_entropy(copier) - f.entropy_copier))
            copier_dev = max(
                copier_dev,
                float(np.abs(copier.mat - analysis.mdim_copier_formula(phi).mat).max()),
            )
        rows.append(CheckRow(f"scaling factor, m={m}", f.scaling, _worst(s_vals, f.scaling), 1e-9))
        rows.append(CheckRow(f"Bures distance to ideal, m={m}", f.bures, _worst(b_vals, f.bures), 1e-9))
    rows.append(CheckRow("clone/copier entropies vs formulas (max dev)", 0.0, ent_dev, 1e-9))
    rows.append(CheckRow("copier marginal vs closed form (max dev)", 0.0, copier_dev, 1e-9))
    # m = 2 must be the qubit cloner itself, joint state and all
    amp_dev = 0.0
    for q in _haar_qubits(10, seed=660):
        a = mdim_clone(bloch_ket(q)).joint.amps
        b = uqcm_map(q).joint.amps
        amp_dev = max(amp_dev, float(np.abs(a - b).max()))
    rows.append(CheckRow("m=2 joint state equals 1->2 cloner joint", 0.0, amp_dev, 1e-12))
    return CriterionResult(9, "M-dimensional cloner closed forms", tuple(rows))


def criterion_register() -> CriterionResult:
    """Cloned register pairs match their closed-form densities; the
    inseparability intervals land on the analytic boundaries and the
    nonlocal interval strictly contains the local one."""
    local_dev = nonlocal_dev = 0.0
    for alpha2 in np.linspace(0.0, 1.0, 20):
        alpha = math.sqrt(float(alpha2))
        local_dev = max(
            local_dev,
            float(np.abs(local_register_clone(alpha).mat - analysis.register_pair_formula("local", alpha).mat).max()),
        )
        nonlocal_dev = max(
            nonlocal_dev,
            float(np.abs(nonlocal_register_clone(alpha).mat - analysis.register_pair_formula("nonlocal", alpha).mat).max()),
        )
    local = analysis.inseparability_boundary("local")
    nonloc = analysis.inseparability_boundary("nonlocal")
    lo_ref = 0.5 - math.sqrt(39.0) / 16.0
    hi_ref = 0.5 + math.sqrt(39.0) / 16.0
    lo_ref_nl = 0.5 - math.sqrt(2.0) / 3.0
    hi_ref_nl = 0.5 + math.sqrt(2.0) / 3.0
    contains = nonloc.lower < local.lower and local.upper < nonloc.upper
    rows = (
        CheckRow("local pair density vs closed form (max dev)", 0.0, local_dev, 1e-10),
        CheckRow("nonlocal pair density vs closed form (max dev)", 0.0, nonlocal_dev, 1e-10),
        CheckRow("local inseparability onset (alpha^2)", lo_ref, local.lower, 1e-6),
        CheckRow("local inseparability end (alpha^2)", hi_ref, local.upper, 1e-6),
        CheckRow("nonlocal inseparability onset (alpha^2)", lo_ref_nl, nonloc.lower, 1e-6),
        CheckRow("nonlocal inseparability end (alpha^2)", hi_ref_nl, nonloc.upper, 1e-6),
        CheckRow("nonlocal interval strictly contains local", 1.0, 1.0 if contains else 0.0, 0.0),
    )
    return CriterionResult(10, "register cloning and inseparability", rows)


def criterion_mean_fidelity() -> CriterionResult:
    """Bloch-sphere quadrature of the simulated clone fidelity lands on
    (1 + s)/2 for the single-copy and multi-copy machines."""

    def uqcm_marginal(q: BlochQubit):
        return uqcm_map(q).clone_marginal(0)

    def gm_marginal(n: int):
        return lambda q: gisin_massar_map(q, n).clone_marginal(0)

    rows = [
        CheckRow(
            "mean fidelity, 1->2 cloner",
            analysis.fidelity_formula(1),
            analysis.mean_fidelity(uqcm_marginal),
            1e-6,
        )
    ]
    for n in (2, 3):
        rows.append(
            CheckRow(
                f"mean fidelity, n={n}",
                analysis.fidelity_formula(n),
                analysis.mean_fidelity(gm_marginal(n)),
                1e-6,
            )
        )
    return CriterionResult(11, "Bloch-sphere mean fidelity", tuple(rows))


def criterion_universality() -> CriterionResult:
    """Universal machines degrade every input equally: the Bures distance
    between clone and ideal has vanishing spread over Haar inputs.  The
    qubit-by-qubit register cloner fails this by a wide margin."""
    rows = []

    def spread(distances: Sequence[float]) -> float:
        return float(np.std(np.asarray(distances)))

    dists = []
    for q in _haar_qubits(100, seed=700):
        out = uqcm_map(q)
        dists.append(bures_distance(out.clone_marginal(0), outer(bloch_ket(q))))
    rows.append(CheckRow("Bures spread, 1->2 cloner", 0.0, spread(dists), 1e-10))

    for n in range(1, 6):
        dists = []
        for q in _haar_qubits(100, seed=710 + n):
            out = gisin_massar_map(q, n)
            dists.append(bures_distance(out.clone_marginal(0), outer(bloch_ket(q))))
        rows.append(CheckRow(f"Bures spread, n={n}", 0.0, spread(dists), 1e-10))

    for m in (2, 3, 4, 8, 16):
        dists = []
        rng = np.random.default_rng(730 + m)
        for _ in range(100):
            phi = haar_random_ket(m, rng)
            out = mdim_clone(phi)
            dists.append(bures_distance(out.clone_marginal(0), outer(phi)))
        rows.append(CheckRow(f"Bures spread, m={m}", 0.0, spread(dists), 1e-10))

    rng = np.random.default_rng(750)
    dists = []
    for _ in range(100):
        alpha = math.sqrt(rng.uniform(0.0, 1.0))
        rho = local_register_clone(alpha)
        beta = math.sqrt(1.0 - alpha * alpha)
        vec = np.array([alpha, 0.0, 0.0, beta], dtype=np.complex128)
        ideal = outer(StateVector(SubsystemLayout((2, 2)), vec))
        dists.append(bures_distance(rho, ideal))
    rows.append(
        CheckRow("Bures spread, local register cloner (must exceed 1e-3)", 1e-3, spread(dists), 0.0, mode="ge")
    )
    return CriterionResult(12, "universality of the cloning quality", tuple(rows))


ALL_CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_network_uqcm,
    criterion_prep_circuit,
    criterion_network_equals_map,
    criterion_scaling_factor,
    criterion_idle_law,
    criterion_pt_spectra,
    criterion_a1b1_spectrum,
    criterion_copier_purity,
    criterion_mdim,
    criterion_register,
    criterion_mean_fidelity,
    criterion_universality,
)


def run_all() -> list[CriterionResult]:
    """Run the full verification suite in order."""
    return [fn() for fn in ALL_CRITERIA]
