from dataclasses import dataclass, field
from enum import Enum


class Outcome(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate, with a labelled witness when it fails.

    ``witness`` is a tuple of ``(role, value)`` pairs; values are ring elements,
    ideals or plain data. VACUOUS counts as passing.
    """

    outcome: Outcome
    witness: tuple = ()
    notes: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self):
        return self.outcome is not Outcome.FAIL

    @property
    def vacuous(self):
        return self.outcome is Outcome.VACUOUS

    def witness_dict(self):
        return dict(self.witness)

    def witness_text(self):
        return {role: repr(value) for role, value in self.witness}

    @classmethod
    def ok(cls, notes=""):
        return cls(Outcome.PASS, (), notes)

    @classmethod
    def fail(cls, *witness, notes=""):
        return cls(Outcome.FAIL, tuple(witness), notes)

    def __str__(self):
        if self.witness:
            inner = ", ".join(f"{role}={value!r}" for role, value in self.witness)
            return f"{self.outcome.value} [{inner}]"
        return self.outcome.value
