"""Structured outcome of a verification run."""
import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Measured quantities of one check and the tolerance they are held to.

    ``passed`` is derived: it is true exactly when every measured value is
    at most ``tolerance``.  Sampling checks also fill ``trials``,
    ``mismatches`` and ``worst_margin``.
    """

    name: str
    inputs: str
    measured: list
    tolerance: float
    seed: object = None
    trials: object = None
    mismatches: object = None
    worst_margin: object = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(value <= self.tolerance for _, value in self.measured)

    def value(self, label):
        for key, val in self.measured:
            if key == label:
                return val
        raise KeyError(label)

    def to_dict(self):
        out = {
            "name": self.name,
            "inputs": self.inputs,
            "measured": {label: float(value) for label, value in self.measured},
            "tolerance": float(self.tolerance),
            "pass": self.passed,
            "seed": self.seed,
        }
        if self.trials is not None:
            out["trials"] = int(self.trials)
            out["mismatches"] = int(self.mismatches)
            out["worst_margin"] = None if self.worst_margin is None else float(self.worst_margin)
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        parts = ", ".join(f"{k}={v:.3e}" for k, v in self.measured)
        return f"[{status}] {self.name}: {parts} (tol {self.tolerance:.3e})"
