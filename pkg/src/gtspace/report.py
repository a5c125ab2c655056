from dataclasses import dataclass, field
from fractions import Fraction


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class PropertyReport:
    """Outcome of a decision procedure together with the evidence behind it.

    ``witnesses`` holds plain dicts (indices, labels, degrees) that can be
    re-checked against the space; ``notes`` records reductions and vacuous
    passes.
    """

    property: str
    holds: bool
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "witnesses": _plain(self.witnesses),
            "notes": list(self.notes),
        }
