"""Core data types for contact surgery diagrams.

A diagram consists of an ordered Legendrian surgery link (each component
carrying tb, rot and a reciprocal-integer contact surgery coefficient),
the symmetric matrix of pairwise linking numbers, and a list of companion
knots living in the link complement whose invariants in the surgered
manifold are to be computed.

All types are immutable values and all arithmetic is exact: plain Python
integers and fractions.Fraction, never floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

_COEFF_RE = re.compile(r"^([+-])1(?:/([1-9][0-9]*))?$")

LEGENDRIAN = "legendrian"
TRANSVERSE = "transverse"


@dataclass(frozen=True)
class ContactCoefficient:
    """A contact surgery coefficient sign/magnitude with magnitude >= 1.

    Only reciprocal integers +-1/m are representable.  General rational
    coefficients must be expanded into a sequence of +-1/m surgeries
    before they reach this library; `parse` rejects them with a pointer
    to that requirement.
    """

    sign: int
    magnitude: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"coefficient sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.magnitude, int) or self.magnitude < 1:
            raise ValueError(f"coefficient magnitude must be a positive integer, got {self.magnitude!r}")

    @classmethod
    def parse(cls, text: str) -> "ContactCoefficient":
        m = _COEFF_RE.match(text.strip())
        if m is None:
            raise ValueError(
                f"unsupported contact surgery coefficient {text!r}: only '+1', '-1', "
                "'+1/m' and '-1/m' are accepted; rewrite general rational coefficients "
                "as an already-expanded diagram of +-1/m surgeries"
            )
        sign = 1 if m.group(1) == "+" else -1
        return cls(sign, int(m.group(2) or "1"))

    def as_fraction(self) -> Fraction:
        return Fraction(self.sign, self.magnitude)

    def __str__(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"{s}1" if self.magnitude == 1 else f"{s}1/{self.magnitude}"


@dataclass(frozen=True)
class LegendrianComponent:
    """One component of the surgery link."""

    name: str
    tb: int
    rot: int
    coeff: ContactCoefficient


@dataclass(frozen=True)
class CompanionKnot:
    """A knot in the complement of the surgery link.

    Legendrian companions carry (tb, rot); transverse companions carry the
    self-linking number and an orientation sign (+1 positively transverse,
    -1 negatively transverse).  `lk` lists the linking numbers with the
    surgery link components, in diagram order.
    """

    name: str
    kind: str
    lk: tuple[int, ...]
    tb: Optional[int] = None
    rot: Optional[int] = None
    sl: Optional[int] = None
    transverse_sign: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "lk", tuple(self.lk))

    @property
    def is_legendrian(self) -> bool:
        return self.kind == LEGENDRIAN

    @property
    def is_transverse(self) -> bool:
        return self.kind == TRANSVERSE


@dataclass(frozen=True)
class SurgeryDiagram:
    """An oriented Legendrian surgery link with companion knots.

    `linking` is the full k x k matrix of pairwise linking numbers with
    zero diagonal; framing information lives exclusively in the tb of each
    component, never on the diagonal.
    """

    components: tuple[LegendrianComponent, ...]
    linking: tuple[tuple[int, ...], ...]
    knots: tuple[CompanionKnot, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "linking", tuple(tuple(row) for row in self.linking))
        object.__setattr__(self, "knots", tuple(self.knots))

    @property
    def k(self) -> int:
        return len(self.components)

    def knot(self, name: str) -> CompanionKnot:
        for knot in self.knots:
            if knot.name == name:
                return knot
        raise KeyError(f"no companion knot named {name!r}")


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" or "warning"
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.message}"


def _parity_check(name: str, tb: int, rot: int, out: list[Diagnostic]) -> None:
    # Every Legendrian knot in the standard 3-sphere has tb+rot odd; treat
    # violations as warnings so hypothetical data stays usable.
    if (tb + rot) % 2 == 0:
        out.append(Diagnostic("warning", f"{name}: tb+rot even (tb={tb}, rot={rot})"))


def validate(diagram: SurgeryDiagram) -> list[Diagnostic]:
    """Check a diagram against the type invariants.

    Returns an empty list iff the diagram is fully consistent.  Structural
    problems (asymmetric linking matrix, wrong vector lengths, malformed
    companion data) are errors; tb+rot parity violations are warnings.
    """
    out: list[Diagnostic] = []
    k = diagram.k

    names = [c.name for c in diagram.components] + [w.name for w in diagram.knots]
    seen = set()
    for name in names:
        if name in seen:
            out.append(Diagnostic("error", f"duplicate name {name!r}"))
        seen.add(name)

    if len(diagram.linking) != k or any(len(row) != k for row in diagram.linking):
        out.append(Diagnostic("error", f"linking matrix must be {k}x{k}"))
    else:
        for i in range(k):
            if diagram.linking[i][i] != 0:
                out.append(Diagnostic("error", f"linking matrix diagonal must be zero (entry ({i},{i}))"))
            for j in range(i + 1, k):
                if diagram.linking[i][j] != diagram.linking[j][i]:
                    out.append(Diagnostic(
                        "error", f"linking matrix not symmetric (entries ({i},{j}) and ({j},{i}))"))

    for c in diagram.components:
        _parity_check(c.name, c.tb, c.rot, out)

    for w in diagram.knots:
        if w.kind not in (LEGENDRIAN, TRANSVERSE):
            out.append(Diagnostic("error", f"{w.name}: unknown knot kind {w.kind!r}"))
            continue
        if len(w.lk) != k:
            out.append(Diagnostic(
                "error", f"{w.name}: lk vector has length {len(w.lk)}, expected {k}"))
        if w.is_legendrian:
            if w.tb is None or w.rot is None:
                out.append(Diagnostic("error", f"{w.name}: legendrian knot needs tb and rot"))
            else:
                _parity_check(w.name, w.tb, w.rot, out)
            if w.sl is not None or w.transverse_sign is not None:
                out.append(Diagnostic("error", f"{w.name}: legendrian knot cannot carry sl or a transverse sign"))
        else:
            if w.sl is None or w.transverse_sign is None:
                out.append(Diagnostic("error", f"{w.name}: transverse knot needs sl and a transverse sign"))
            elif w.transverse_sign not in (1, -1):
                out.append(Diagnostic("error", f"{w.name}: transverse sign must be +1 or -1"))
            if w.tb is not None or w.rot is not None:
                out.append(Diagnostic("error", f"{w.name}: transverse knot cannot carry tb or rot"))

    return out


def topological_coefficient(component: LegendrianComponent) -> tuple[int, int]:
    """Topological surgery slope (p, q) of a component, normalized to q > 0.

    The topological coefficient is the contact coefficient plus tb, so for
    a contact coefficient s/m the slope is p/q = (m*tb + s)/m.  The result
    is always reduced: p is congruent to +-1 mod m, hence coprime to q.
    """
    m = component.coeff.magnitude
    p = m * component.tb + component.coeff.sign
    assert p == 0 or gcd(abs(p), m) == 1
    return p, m
