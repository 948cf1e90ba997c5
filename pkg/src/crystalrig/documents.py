"""JSON documents tagged with a kind: mlt, seq, rc, or zero."""

from __future__ import annotations

from .bijection import rc_from_lanes, seq_from_rc
from .cascading import CascadingSequence, phi, phi_inverse
from .rigged import RiggedConfiguration
from .tableaux import MarginallyLargeTableau

KINDS = ("mlt", "seq", "rc")
ZERO = {"kind": "zero"}


def load(data):
    kind = data.get("kind")
    if kind == "mlt":
        return MarginallyLargeTableau.from_json(data)
    if kind == "seq":
        return CascadingSequence.from_json(data)
    if kind == "rc":
        return RiggedConfiguration.from_json(data)
    raise ValueError(f"unknown document kind {kind!r}")


def kind_of(obj):
    if isinstance(obj, MarginallyLargeTableau):
        return "mlt"
    if isinstance(obj, CascadingSequence):
        return "seq"
    if isinstance(obj, RiggedConfiguration):
        return "rc"
    raise TypeError(type(obj).__name__)


def dump(obj):
    if obj is None:
        return dict(ZERO)
    return {"kind": kind_of(obj), **obj.to_json()}


def convert(obj, to):
    """Convert between the three models; everything passes through the sequence."""
    kind = kind_of(obj)
    if kind == to:
        return obj
    if kind == "mlt":
        seq = phi(obj)
    elif kind == "rc":
        seq = seq_from_rc(obj)
    else:
        seq = obj
    if to == "seq":
        return seq
    if to == "mlt":
        return phi_inverse(seq)
    if to == "rc":
        return rc_from_lanes(seq)
    raise ValueError(f"unknown target kind {to!r}")
