"""Gate-network realization of the cloning transformation.

Two gate kinds suffice: a real single-qubit rotation R(theta) taking
|0> -> cos(theta)|0> + sin(theta)|1> and |1> -> -sin(theta)|0> + cos(theta)|1>,
and the two-qubit CNOT.  Wire order for the 1-to-(n+1) cloner is fixed as
(a_0, a_1..a_n, b_1..b_n): a_0 carries the input, the a wires end up holding
the clones and the b wires the copier.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import StateVector, tensor
from .states import BlochQubit, bloch_ket, prep_state

ROTATION = "rotation"
CNOT = "cnot"

# Preparation angles: theta_1 = acos(1/sqrt(5))/2, theta_2 = acos(sqrt(5)/3)/2,
# theta_3 = acos(2/sqrt(5))/2.  With the circuit below they turn |00> into
# (2|00> + |01> + |11>)/sqrt(6).
PREP_THETA_1 = 0.5 * math.acos(1.0 / math.sqrt(5.0))
PREP_THETA_2 = 0.5 * math.acos(math.sqrt(5.0) / 3.0)
PREP_THETA_3 = 0.5 * math.acos(2.0 / math.sqrt(5.0))

CIRCUIT_FORMAT_VERSION = 1


@dataclass(frozen=True)
class GateOp:
    """One gate: kind is ``rotation`` (wires=(wire,), theta set) or ``cnot``
    (wires=(control, target))."""

    kind: str
    wires: tuple[int, ...]
    theta: float | None = None

    def __post_init__(self):
        if self.kind not in (ROTATION, CNOT):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == ROTATION and (len(self.wires) != 1 or self.theta is None):
            raise ValueError("rotation takes one wire and an angle")
        if self.kind == CNOT:
            if len(self.wires) != 2 or self.theta is not None:
                raise ValueError("cnot takes exactly (control, target) and no angle")
            if self.wires[0] == self.wires[1]:
                raise ValueError("cnot control and target must differ")


def rotation(wire: int, theta: float) -> GateOp:
    return GateOp(ROTATION, (wire,), float(theta))


def cnot(control: int, target: int) -> GateOp:
    return GateOp(CNOT, (control, target))


@dataclass(frozen=True)
class Circuit:
    """Gate list over ``width`` qubit wires, applied first to last."""

    width: int
    ops: tuple[GateOp, ...]

    def __post_init__(self):
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            for w in op.wires:
                if not 0 <= w < self.width:
                    raise ValueError(f"wire {w} out of range for width {self.width}")


def _qubit_tensor(psi: StateVector) -> np.ndarray:
    dims = psi.layout.dims
    if any(d != 2 for d in dims):
        raise ValueError(f"gates act on qubit wires only, layout is {dims}")
    return psi.amps.reshape(dims)


def apply_rotation(psi: StateVector, wire: int, theta: float) -> StateVector:
    """Apply R(theta) on one wire."""
    t = _qubit_tensor(psi)
    if not 0 <= wire < t.ndim:
        raise ValueError(f"wire {wire} out of range")
    c, s = math.cos(theta), math.sin(theta)
    r = np.array([[c, -s], [s, c]], dtype=np.complex128)
    out = np.tensordot(t, r, axes=([wire], [1]))
    out = np.moveaxis(out, -1, wire)
    return StateVector(psi.layout, out.reshape(-1))


def apply_cnot(psi: StateVector, control: int, target: int) -> StateVector:
    """Apply a CNOT: flip ``target`` on the control = 1 slice."""
    if control == target:
        raise ValueError("cnot control and target must differ")
    t = _qubit_tensor(psi).copy()
    if not (0 <= control < t.ndim and 0 <= target < t.ndim):
        raise ValueError("cnot wire out of range")
    one = [slice(None)] * t.ndim
    one[control] = 1
    t[tuple(one)] = np.flip(t[tuple(one)], axis=target if target < control else target - 1)
    return StateVector(psi.layout, t.reshape(-1))


def run_circuit(circuit: Circuit, psi: StateVector) -> StateVector:
    """Run every gate in order; the layout must be ``width`` qubit wires."""
    if len(psi.layout) != circuit.width or any(d != 2 for d in psi.layout.dims):
        raise ValueError(
            f"state layout {psi.layout.dims} does not match circuit width {circuit.width}"
        )
    for op in circuit.ops:
        if op.kind == ROTATION:
            psi = apply_rotation(psi, op.wires[0], op.theta)
        else:
            psi = apply_cnot(psi, op.wires[0], op.wires[1])
    return psi


def build_prep_circuit_1() -> Circuit:
    """Two-qubit preparation circuit for the single-copy (n = 1) cloner.

    On wires (a_1, b_1) starting from |00>:
    R(theta_1) on a_1, CNOT a_1->b_1, R(theta_2) on b_1, CNOT b_1->a_1,
    R(theta_3) on a_1.
    """
    return Circuit(
        2,
        (
            rotation(0, PREP_THETA_1),
            cnot(0, 1),
            rotation(1, PREP_THETA_2),
            cnot(1, 0),
            rotation(0, PREP_THETA_3),
        ),
    )


def build_copy_stage(n: int) -> Circuit:
    """Copy stage of the 1-to-(n+1) cloner on wires (a_0, a_1.., b_1..).

    Four CNOT cascades: a_0 fans out onto every a_i, then onto every b_i,
    then every a_i drives a_0, then every b_i drives a_0 (ascending wire
    order inside each cascade).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = list(range(1, n + 1))
    b = list(range(n + 1, 2 * n + 1))
    ops = [cnot(0, w) for w in a + b] + [cnot(w, 0) for w in a + b]
    return Circuit(2 * n + 1, tuple(ops))


def clone_via_network(q: BlochQubit, n: int) -> StateVector:
    """Full circuit route: tensor the input qubit with the prepared copier
    state and run the copy stage.  Wires come out as (a_0..a_n, b_1..b_n)
    with the clones on the a wires."""
    if not 1 <= n <= 8:
        raise ValueError(f"clone count is limited to 1 <= n <= 8, got {n}")
    psi = tensor(bloch_ket(q), prep_state(n))
    return run_circuit(build_copy_stage(n), psi)


def circuit_to_text(circuit: Circuit) -> str:
    """Serialize to the line format ``WIDTH n`` then one gate per line:
    ``R wire theta`` or ``CX control target``.  Angles print via repr so the
    text round-trips exactly."""
    lines = [f"WIDTH {circuit.width}"]
    for op in circuit.ops:
        if op.kind == ROTATION:
            lines.append(f"R {op.wires[0]} {op.theta!r}")
        else:
            lines.append(f"CX {op.wires[0]} {op.wires[1]}")
    return "\n".join(lines) + "\n"


def circuit_from_text(text: str) -> Circuit:
    """Parse the :func:`circuit_to_text` format."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("WIDTH "):
        raise ValueError("circuit text must start with a WIDTH line")
    width = int(lines[0].split()[1])
    ops = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "R" and len(parts) == 3:
            ops.append(rotation(int(parts[1]), float(parts[2])))
        elif parts[0] == "CX" and len(parts) == 3:
            ops.append(cnot(int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"unrecognized circuit line: {ln!r}")
    return Circuit(width, tuple(ops))
