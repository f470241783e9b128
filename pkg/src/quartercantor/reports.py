from __future__ import annotations

from dataclasses import asdict, dataclass, field
import json


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verification.

    A failing report always carries a counterexample (a tuple of the
    offending frequency labels).
    """

    check_name: str
    parameters: dict = field(default_factory=dict)
    passed: bool = True
    counterexample: tuple | None = None
    details: str = ""

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError(f"failing report {self.check_name!r} needs a counterexample")

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if d["counterexample"] is not None:
            d["counterexample"] = list(d["counterexample"])
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.check_name} {params}".rstrip()
        if not self.passed:
            line += f" counterexample={self.counterexample}"
        return line
