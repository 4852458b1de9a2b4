"""Serializable, byte-stable invariant reports."""
import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__

SCHEMA_VERSION = 1


def fmt(q):
    """Exact rational as 'num/den' in lowest terms (den = 1 included)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    return Fraction(text.strip())


def _jsonable(value):
    if isinstance(value, Fraction):
        return fmt(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


@dataclass
class InvariantReport:
    command: str
    inputs: dict
    results: dict
    certificates: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    version: str = __version__

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "results": _jsonable(self.results),
            "certificates": _jsonable(self.certificates),
            "notes": list(self.notes),
            "version": self.version,
            "schema": SCHEMA_VERSION,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_text(self):
        d = self.to_dict()
        lines = [f"{d['command']} (version {d['version']})"]
        for key, value in d["inputs"].items():
            lines.append(f"  input  {key}: {_flat(value)}")
        for key, value in d["results"].items():
            lines.append(f"  result {key}: {_flat(value)}")
        for cert in d["certificates"]:
            lines.append(f"  cert   {_flat(cert)}")
        for note in d["notes"]:
            lines.append(f"  note   {note}")
        return "\n".join(lines)


def _flat(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)
