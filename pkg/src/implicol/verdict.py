from __future__ import annotations

from dataclasses import dataclass, field

CONFIRMED = "confirmed"
REFUTED = "refuted"
NOT_APPLICABLE = "not-applicable"
INCOMPLETE = "incomplete"


@dataclass
class TheoremVerdict:
    """Outcome of checking one claim over a family of instances.

    ``status`` is refuted exactly when ``counterexamples`` is non-empty;
    ``incomplete`` means a budget ran out before any refutation was found.
    """

    theorem_id: str
    instances_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    status: str = CONFIRMED
    anchor: str = ""

    def record(self, counterexample: dict, limit: int | None = None) -> None:
        if limit is None or len(self.counterexamples) < limit:
            self.counterexamples.append(counterexample)
        self.status = REFUTED

    def finish(self, complete: bool = True) -> TheoremVerdict:
        if self.counterexamples:
            self.status = REFUTED
        elif not complete:
            self.status = INCOMPLETE
        elif self.instances_checked == 0:
            self.status = NOT_APPLICABLE
        else:
            self.status = CONFIRMED
        return self

    @property
    def ok(self) -> bool:
        return self.status in (CONFIRMED, NOT_APPLICABLE)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "anchor": self.anchor,
            "checked": self.instances_checked,
            "status": self.status,
            "counterexamples": self.counterexamples,
        }
