"""Surgery presentations: generalized linking matrix, homology, expansion.

The generalized linking matrix of a diagram has the topological surgery
slopes p_i on the diagonal and q_j * lk(L_i, L_j) off it, written in the
meridian basis.  It presents the first homology of the surgered manifold
and drives every invariant computed by this package.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagrams import ContactCoefficient, LegendrianComponent, SurgeryDiagram, topological_coefficient
from .exactlin import Matrix, smith_normal_form, symmetric_signature


@dataclass(frozen=True)
class GeneralizedLinkingMatrix:
    """Square integer matrix Q with row/column i attached to the meridian
    of the i-th surgery component.

    Q itself is symmetric only when all coefficient magnitudes are 1, but
    diag(m_1, ..., m_k) * Q is always symmetric.
    """

    entries: Matrix
    magnitudes: tuple[int, ...]
    names: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.entries)


def linking_matrix(diagram: SurgeryDiagram) -> GeneralizedLinkingMatrix:
    """Build the generalized linking matrix of a diagram."""
    k = diagram.k
    slopes = [topological_coefficient(c) for c in diagram.components]
    entries = tuple(
        tuple(slopes[i][0] if i == j else slopes[j][1] * diagram.linking[i][j]
              for j in range(k))
        for i in range(k))
    return GeneralizedLinkingMatrix(
        entries,
        tuple(q for _, q in slopes),
        tuple(c.name for c in diagram.components))


@dataclass(frozen=True)
class HomologyPresentation:
    """First homology of the surgered manifold: torsion invariant factors
    (each > 1, each dividing the next) and the free rank."""

    invariant_factors: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0


def homology(q: GeneralizedLinkingMatrix) -> HomologyPresentation:
    """Present H_1 of the surgered manifold from the relation matrix Q."""
    snf = smith_normal_form(q.entries)
    factors = tuple(d for d in snf.diagonal if d > 1)
    return HomologyPresentation(factors, q.k - snf.rank)


def expand_to_pm1(diagram: SurgeryDiagram) -> SurgeryDiagram:
    """Replace every 1/m coefficient by m push-off copies with coefficient 1.

    Each component with coefficient s/m becomes m parallel copies carrying
    the same tb and rot and coefficient s/1.  Copies of one component link
    each other with tb (push-offs of a Legendrian knot realize its contact
    framing); copies of distinct components inherit the original linking
    number, and companion lk entries are repeated per copy.

    Diagrams that already carry only +-1 coefficients are returned
    unchanged; otherwise copy j of component X is renamed "X.j".
    """
    if all(c.coeff.magnitude == 1 for c in diagram.components):
        return diagram

    components: list[LegendrianComponent] = []
    origin: list[int] = []  # index of the original component per copy
    for i, c in enumerate(diagram.components):
        for j in range(c.coeff.magnitude):
            components.append(LegendrianComponent(
                f"{c.name}.{j + 1}", c.tb, c.rot, ContactCoefficient(c.coeff.sign, 1)))
            origin.append(i)

    n = len(components)
    linking = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            i, j = origin[a], origin[b]
            linking[a][b] = diagram.components[i].tb if i == j else diagram.linking[i][j]

    knots = tuple(
        replace(w, lk=tuple(w.lk[origin[a]] for a in range(n)))
        for w in diagram.knots)

    return SurgeryDiagram(tuple(components), tuple(tuple(r) for r in linking), knots)


def diagram_signature(diagram: SurgeryDiagram) -> int:
    """Signature of the generalized linking matrix.

    Q is not symmetric in general, but all its eigenvalues are real: they
    lift to eigenvalues of the symmetric matrix Q' of the expanded diagram,
    whose extra eigenvalues are exactly the coefficient signs s_i with
    multiplicity m_i - 1.  Hence sigma(Q) = sigma(Q') - sum (m_i - 1) s_i,
    which is computable exactly without real-root isolation.
    """
    expanded = expand_to_pm1(diagram)
    n_plus, _, n_minus = symmetric_signature(linking_matrix(expanded).entries)
    correction = sum((c.coeff.magnitude - 1) * c.coeff.sign for c in diagram.components)
    return n_plus - n_minus - correction
