"""Check reports shared by the verify_* functions and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"
MAX_WITNESSES = 10


@dataclass
class Check:
    law: str
    domain: str
    status: str = PASS
    witness: object = None
    checked: int = 0
    failures: int = 0
    mode: str = "exhaustive"  # or "sampled"
    note: str = ""
    witnesses: list = field(default_factory=list)

    def record(self, ok, witness=None):
        self.checked += 1
        if not ok:
            self.failures += 1
            self.status = FAIL
            if self.witness is None:
                self.witness = witness
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)
        return ok

    def line(self):
        s = f"{self.status} {self.law} [{self.domain}] {self.mode} checked={self.checked}"
        if self.failures:
            s += f" failures={self.failures} witness={_plain(self.witness)}"
        if self.note:
            s += f" ({self.note})"
        return s


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def new(self, law, domain, **kw):
        c = Check(law, domain, **kw)
        self.checks.append(c)
        return c

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    def get(self, law):
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)

    def summary(self):
        bad = self.failed()
        if not bad:
            return f"{self.command}: all {len(self.checks)} checks passed"
        return f"{self.command}: {len(bad)} of {len(self.checks)} checks failed: " + \
            "; ".join(c.line() for c in bad)

    def to_text(self):
        return "\n".join(c.line() for c in self.checks)

    def to_dict(self):
        return {"command": self.command, "params": _plain(self.params),
                "checks": [{"law": c.law, "domain": c.domain, "status": c.status,
                            "witness": _plain(c.witness), "checked": c.checked,
                            "failures": c.failures, "mode": c.mode, "note": c.note}
                           for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def _plain(x):
    """Make witnesses JSON friendly (tuples to lists, other objects to str)."""
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_plain(v) for v in x]
    return str(x)
