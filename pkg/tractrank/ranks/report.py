# coding=utf-8

"""Rank results, intervals and the combined report."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Union

from tractrank import constants
from tractrank.exceptions import ParseError, PreconditionViolation

# Ranks that must not decrease along this order: lift rank, phi-matroidal
# rank, matroidal rank, column rank.
CHAIN = (
    constants.RANK_PREIMAGE,
    constants.RANK_PHI_MAT,
    constants.RANK_MAT,
    constants.RANK_COL,
)


@dataclass(frozen=True)
class RankBounds:
    """A rank known only up to an interval."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise PreconditionViolation(f"Empty rank interval [{self.lower}, {self.upper}].")

    @property
    def exact(self) -> Optional[int]:
        """The rank when both ends meet."""
        return self.lower if self.lower == self.upper else None

    def collapsed(self) -> Union[int, "RankBounds"]:
        """The exact rank if known, else the interval itself."""
        return self.lower if self.exact is not None else self

    def __str__(self) -> str:
        return f">= {self.lower} / <= {self.upper}"


Value = Union[int, RankBounds]


def lower(value: Value) -> int:
    """Lower end of a rank value."""
    return value.lower if isinstance(value, RankBounds) else value


def upper(value: Value) -> int:
    """Upper end of a rank value."""
    return value.upper if isinstance(value, RankBounds) else value


def base_name(name: str) -> str:
    """The rank name without its `:hom` suffix, e.g. `phimat:fp2` -> `phimat`."""
    return name.split(":", 1)[0]


@dataclass(frozen=True)
class RankResult:
    """One computed rank with the data that certifies it."""

    name: str
    value: Value
    witness: Dict[str, Any] = field(default_factory=dict, hash=False)

    @property
    def lower(self) -> int:
        """Lower end of the value."""
        return lower(self.value)

    @property
    def upper(self) -> int:
        """Upper end of the value."""
        return upper(self.value)

    @property
    def exact(self) -> Optional[int]:
        """The value when it is a single integer."""
        return self.lower if self.lower == self.upper else None


def chain_holds(values: Dict[str, Value]) -> bool:
    """Whether the computed values can satisfy the rank chain.

    Intervals only violate the chain when the larger rank's upper end is
    below the smaller rank's lower end.
    """
    present = [name for name in CHAIN if name in values]
    for index, larger in enumerate(present):
        for smaller in present[index + 1 :]:
            if upper(values[larger]) < lower(values[smaller]):
                return False
    return True


@dataclass
class RankReport:
    """The ranks requested for one matrix."""

    requested: List[str]
    values: Dict[str, Value]
    witnesses: Dict[str, Dict[str, Any]]
    chain_ok: bool

    @classmethod
    def from_results(cls, requested: Sequence[str], results: Sequence[RankResult]) -> "RankReport":
        """Assemble a report and check the rank chain."""
        values = {result.name: result.value for result in results}
        return cls(
            requested=list(requested),
            values=values,
            witnesses={result.name: result.witness for result in results},
            chain_ok=chain_holds(values),
        )

    def as_dict(self) -> Dict[str, Any]:
        """The JSON form of the report."""
        return {
            "requested": list(self.requested),
            "values": {
                name: (
                    {"lower": value.lower, "upper": value.upper}
                    if isinstance(value, RankBounds)
                    else value
                )
                for name, value in self.values.items()
            },
            "witnesses": self.witnesses,
            "chain_ok": self.chain_ok,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RankReport":
        """Read the JSON form written by `as_dict`."""
        try:
            values = {
                name: RankBounds(value["lower"], value["upper"])
                if isinstance(value, dict)
                else int(value)
                for name, value in data["values"].items()
            }
            return cls(
                requested=list(data["requested"]),
                values=values,
                witnesses=dict(data.get("witnesses", {})),
                chain_ok=bool(data["chain_ok"]),
            )
        except (KeyError, TypeError, ValueError) as error:
            raise ParseError(f"Invalid rank report: {error}.") from error

    def lines(self) -> List[str]:
        """Human readable lines, one per requested rank."""
        lines = []
        for name in self.requested:
            base = base_name(name)
            if base in self.values:
                lines.append(f"{name}: {self.values[base]}")
        lines.append(f"chain: {'ok' if self.chain_ok else 'VIOLATED'}")
        return lines
