"""Aggregate report for one cloning run, with JSON and CSV emission.

Numbers serialize at 12 significant digits so identical runs produce
byte-identical output and every value round-trips through ``json.loads``
without further loss.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .analysis import extract_scaling_factor, ppt_separable
from .cloners import (
    CloneOutput,
    gisin_massar_map,
    local_register_clone,
    mdim_clone,
    nonlocal_register_clone,
    uqcm_map,
)
from .linalg import (
    DensityOperator,
    StateVector,
    SubsystemLayout,
    bures_distance,
    hermitian_eigenvalues,
    outer,
    partial_transpose,
    purity,
    von_neumann_entropy,
)
from .states import BlochQubit, bloch_ket


def round12(x: float) -> float:
    """Round to 12 significant digits (the serialization precision)."""
    return float(f"{float(x):.12g}")


@dataclass(frozen=True)
class CloneReport:
    """Everything measured on a single cloning run.

    ``pt_eigenvalues`` and ``separable`` cover the clone pairs where the
    partial-transpose test is conclusive (two-qubit pairs); they are empty
    for higher-dimensional clones.  ``purity_xi`` is the copier purity and
    is None where no copier marginal is defined (register pairings).
    """

    kind: str
    n_or_m: int
    input: dict
    scaling_factor: float
    scaling_residual: float
    fidelity: float
    bures: float
    pt_eigenvalues: list[float] = field(default_factory=list)
    separable: dict[str, bool] = field(default_factory=dict)
    purity_xi: float | None = None
    entropies: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> str:
        def walk(x):
            if isinstance(x, float):
                return round12(x)
            if isinstance(x, dict):
                return {k: walk(v) for k, v in x.items()}
            if isinstance(x, list):
                return [walk(v) for v in x]
            return x

        return json.dumps(walk(asdict(self)), indent=2, sort_keys=False) + "\n"

    CSV_COLUMNS = (
        "kind",
        "n_or_m",
        "theta",
        "phi",
        "alpha",
        "seed",
        "scaling_factor",
        "scaling_residual",
        "fidelity",
        "bures",
        "pt_min",
        "separable_all",
        "purity_xi",
        "entropy_clone",
        "entropy_copier",
    )

    def csv_row(self) -> str:
        def fmt(x) -> str:
            if x is None:
                return ""
            if isinstance(x, bool):
                return str(x).lower()
            if isinstance(x, float):
                return f"{x:.12g}"
            return str(x)

        vals = {
            "kind": self.kind,
            "n_or_m": self.n_or_m,
            "theta": self.input.get("theta"),
            "phi": self.input.get("phi"),
            "alpha": self.input.get("alpha"),
            "seed": self.input.get("seed"),
            "scaling_factor": self.scaling_factor,
            "scaling_residual": self.scaling_residual,
            "fidelity": self.fidelity,
            "bures": self.bures,
            "pt_min": min(self.pt_eigenvalues) if self.pt_eigenvalues else None,
            "separable_all": all(self.separable.values()) if self.separable else None,
            "purity_xi": self.purity_xi,
            "entropy_clone": self.entropies.get("clone", self.entropies.get("clone_pair")),
            "entropy_copier": self.entropies.get("copier"),
        }
        return ",".join(fmt(vals[c]) for c in self.CSV_COLUMNS)

    def to_csv(self) -> str:
        return ",".join(self.CSV_COLUMNS) + "\n" + self.csv_row() + "\n"

    def to_table(self) -> str:
        lines = [f"{'kind':<18} {self.kind}", f"{'n_or_m':<18} {self.n_or_m}"]
        for k, v in self.input.items():
            lines.append(f"{'input ' + k:<18} {v!r}" if not isinstance(v, float) else f"{'input ' + k:<18} {v:.12g}")
        lines.append(f"{'scaling_factor':<18} {self.scaling_factor:.12g}")
        lines.append(f"{'scaling_residual':<18} {self.scaling_residual:.3g}")
        lines.append(f"{'fidelity':<18} {self.fidelity:.12g}")
        lines.append(f"{'bures':<18} {self.bures:.12g}")
        if self.pt_eigenvalues:
            lines.append(f"{'pt_eigenvalues':<18} " + " ".join(f"{x:.12g}" for x in self.pt_eigenvalues))
        for pair, sep in self.separable.items():
            lines.append(f"{'separable ' + pair:<18} {str(sep).lower()}")
        if self.purity_xi is not None:
            lines.append(f"{'purity_xi':<18} {self.purity_xi:.12g}")
        for k, v in self.entropies.items():
            lines.append(f"{'entropy ' + k:<18} {v:.12g}")
        return "\n".join(lines) + "\n"


def _clone_pair_checks(out: CloneOutput) -> tuple[list[float], dict[str, bool]]:
    """PT spectrum of the first clone pair plus separability verdicts of
    every two-qubit clone pair."""
    if out.joint.layout.dims[0] != 2 or out.clone_count < 2:
        return [], {}
    first = out.pair_marginal(0, 1)
    spectrum = [float(x) for x in hermitian_eigenvalues(partial_transpose(first, 1))]
    verdicts = {}
    for i in range(out.clone_count):
        for j in range(i + 1, out.clone_count):
            sep, _ = ppt_separable(out.pair_marginal(i, j))
            verdicts[f"a{i}-a{j}"] = sep
    return spectrum, verdicts


def _qubit_report(kind: str, n: int, q: BlochQubit, out: CloneOutput, seed=None) -> CloneReport:
    ideal = outer(bloch_ket(q))
    marg = out.clone_marginal(0)
    fit = extract_scaling_factor(marg, ideal)
    spectrum, verdicts = _clone_pair_checks(out)
    info = {"theta": round12(q.theta), "phi": round12(q.phi)}
    if seed is not None:
        info["seed"] = seed
    return CloneReport(
        kind=kind,
        n_or_m=n,
        input=info,
        scaling_factor=fit.s,
        scaling_residual=fit.residual,
        fidelity=float(np.vdot(bloch_ket(q).amps, marg.mat @ bloch_ket(q).amps).real),
        bures=bures_distance(marg, ideal),
        pt_eigenvalues=spectrum,
        separable=verdicts,
        purity_xi=purity(out.copier_marginal()),
        entropies={
            "clone": von_neumann_entropy(marg),
            "copier": von_neumann_entropy(out.copier_marginal()),
        },
    )


def report_uqcm(q: BlochQubit, seed=None) -> CloneReport:
    """Measure everything on one symmetric 1-to-2 qubit cloning run."""
    return _qubit_report("uqcm", 1, q, uqcm_map(q), seed)


def report_gm(q: BlochQubit, n: int, seed=None) -> CloneReport:
    """Measure everything on one 1-to-(n+1) cloning run."""
    return _qubit_report("gm", n, q, gisin_massar_map(q, n), seed)


def report_mdim(phi: StateVector, seed=None) -> CloneReport:
    """Measure everything on one M-dimensional cloning run."""
    m = phi.dim
    out = mdim_clone(phi)
    ideal = outer(phi)
    marg = out.clone_marginal(0)
    fit = extract_scaling_factor(marg, ideal)
    if m == 2:
        spectrum, verdicts = _clone_pair_checks(out)
    elif m <= 8:
        spectrum = [float(x) for x in hermitian_eigenvalues(partial_transpose(out.pair_marginal(0, 1), 1))]
        verdicts = {}
    else:  # PT spectrum of an m^2 x m^2 matrix is not worth the eigensolve
        spectrum, verdicts = [], {}
    info = {} if seed is None else {"seed": seed}
    return CloneReport(
        kind="mdim",
        n_or_m=m,
        input=info,
        scaling_factor=fit.s,
        scaling_residual=fit.residual,
        fidelity=float(np.vdot(phi.amps, marg.mat @ phi.amps).real),
        bures=bures_distance(marg, ideal),
        pt_eigenvalues=spectrum,
        separable=verdicts,
        purity_xi=purity(out.copier_marginal()),
        entropies={
            "clone": von_neumann_entropy(marg),
            "copier": von_neumann_entropy(out.copier_marginal()),
        },
    )


def report_register(method: str, alpha: float) -> CloneReport:
    """Measure everything on one cloned register pairing."""
    if method == "local":
        rho = local_register_clone(alpha)
    elif method == "nonlocal":
        rho = nonlocal_register_clone(alpha)
    else:
        raise ValueError(f"method must be 'local' or 'nonlocal', got {method!r}")
    beta = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    ideal_vec = np.zeros(4, dtype=np.complex128)
    ideal_vec[0], ideal_vec[3] = alpha, beta
    ideal = outer(StateVector(SubsystemLayout((2, 2)), ideal_vec))
    fit = extract_scaling_factor(rho, ideal)
    sep, _ = ppt_separable(rho)
    return CloneReport(
        kind=f"register-{method}",
        n_or_m=4,
        input={"alpha": round12(alpha)},
        scaling_factor=fit.s,
        scaling_residual=fit.residual,
        fidelity=float(np.vdot(ideal_vec, rho.mat @ ideal_vec).real),
        bures=bures_distance(rho, ideal),
        pt_eigenvalues=[float(x) for x in hermitian_eigenvalues(partial_transpose(rho, 1))],
        separable={"a0b1": sep},
        purity_xi=None,
        entropies={"clone_pair": von_neumann_entropy(rho)},
    )
