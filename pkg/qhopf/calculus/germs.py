"""Quantum germs of the 3D calculus and the right action on invariant forms.

The calculus is presented by a right ideal R ⊂ ker ε. Germs are computed in
two independent ways:

* by linear reduction of a − ε(a)𝟙 modulo span{r·M} inside a filtration
  block (``germs_by_quotient``), which is how the tables are built, and
* by the recursion π(ab) = ε(a)π(b) + π(a)∘b on PBW words (``germs``),
  which only needs the germs of the four generators and the ``circ_table``.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..coefficients import ONE, ScalarQ
from ..errors import ConventionError, FiltrationError
from ..linalg import rank, rref
from ..quantum_group import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELEMENT,
    AlgebraElement,
    Generator,
    Monomial,
    coproduct_monomial,
    counit,
    counit_monomial,
    monomials_up_to_length,
)
from ..quantum_group.hopf import antipode_monomial
from .forms import BASIS_NAMES, ZERO_FORM, InvariantForm

logger = logging.getLogger(__name__)

DEFAULT_LEVEL = 3

IDEAL_GENERATORS: Tuple[Tuple[str, AlgebraElement], ...] = (
    ("gamma^2", GAMMA * GAMMA),
    ("gamma gamma*", GAMMA * GAMMA_STAR),
    ("gamma*^2", GAMMA_STAR * GAMMA_STAR),
    (
        "alpha + q^2 alpha* - (1 + q^2)",
        ALPHA + ALPHA_STAR.scale(ScalarQ.q_power(2)) - ONE_ELEMENT.scale(ONE + ScalarQ.q_power(2)),
    ),
    ("(alpha - 1) gamma", (ALPHA - ONE_ELEMENT) * GAMMA),
    ("(alpha - 1) gamma*", (ALPHA - ONE_ELEMENT) * GAMMA_STAR),
)

# coset representatives of η₋, η₀, η₊, in BASIS_NAMES order
BASIS_CHOICE: Tuple[Tuple[str, AlgebraElement], ...] = (
    ("minus", GAMMA_STAR),
    ("zero", ALPHA - ONE_ELEMENT),
    ("plus", GAMMA),
)


def element_length(a: AlgebraElement) -> int:
    return max((m.length for m in a.monomials()), default=0)


def _column(a: AlgebraElement) -> Dict[Monomial, ScalarQ]:
    return dict(a.items())


class GermQuotient:
    """(ker ε ∩ F_L)/R_L for the filtration block F_L of word length ≤ L.

    Args:
        level: the filtration level L.
    """

    def __init__(self, level: int):
        if level < 1:
            raise ValueError(f"filtration level must be positive, got {level}")
        self.level = level
        self.monomials = monomials_up_to_length(level)
        self.relations = self._relations()

    def _relations(self) -> List[AlgebraElement]:
        out = []
        for _, r in IDEAL_GENERATORS:
            budget = self.level - element_length(r)
            if budget < 0:
                continue
            for m in monomials_up_to_length(budget):
                out.append(r * AlgebraElement.from_monomial(m))
        return out

    def dimension(self) -> int:
        relation_rank = rank([_column(r) for r in self.relations])
        return len(self.monomials) - 1 - relation_rank

    def reduce_many(self, elements: Sequence[AlgebraElement]) -> List[InvariantForm]:
        """Coordinates of the classes of ``elements`` (all in ker ε).

        Raises:
            FiltrationError: if an element leaves the filtration block.
            ConventionError: if the basis choice does not span the quotient.
        """
        for a in elements:
            if not counit(a).is_zero():
                raise ValueError(f"{a.to_text()} is not in the kernel of the counit")
            if element_length(a) > self.level:
                raise FiltrationError(
                    f"{a.to_text()} has length > {self.level}; increase filtration"
                )
        n_rel = len(self.relations)
        columns = [_column(r) for r in self.relations]
        columns += [_column(rep) for _, rep in BASIS_CHOICE]
        columns += [_column(a) for a in elements]
        reduced, pivots = rref(columns)
        pivot_row = {col: row for row, col in enumerate(pivots)}

        rep_columns = [n_rel + i for i in range(len(BASIS_CHOICE))]
        if any(col not in pivot_row for col in rep_columns):
            raise ConventionError(
                f"basis choice is dependent modulo the ideal at level {self.level}"
            )
        out = []
        for offset, a in enumerate(elements):
            target = n_rel + len(BASIS_CHOICE) + offset
            if target in pivot_row:
                raise ConventionError(
                    f"{a.to_text()} is not spanned by the basis choice modulo the "
                    f"ideal at level {self.level}"
                )
            out.append(
                InvariantForm(*(reduced[pivot_row[col]][target] for col in rep_columns))
            )
        return out


@lru_cache(maxsize=None)
def germ_quotient(level: int) -> GermQuotient:
    return GermQuotient(level)


def germs_by_quotient(a: AlgebraElement, level: int = None) -> InvariantForm:
    """π(a) as the class of a − ε(a)𝟙, reduced in the smallest block holding a."""
    shifted = a - ONE_ELEMENT.scale(counit(a))
    if shifted.is_zero():
        return ZERO_FORM
    level = level or max(element_length(shifted), 1)
    return germ_quotient(level).reduce_many([shifted])[0]


@dataclass(frozen=True)
class GermsData:
    """The calculus data every other module reads.

    Attributes:
        level: filtration level the tables were reduced at.
        ideal_generators: the generators of R with their labels.
        basis_choice: coset representatives of η₋, η₀, η₊.
        generator_germs: π(g) for the four generators.
        circ_table: η_i∘g for each basis form and generator.
        quotient_dimensions: dim (ker ε ∩ F_L)/R_L per level L.
    """

    level: int
    ideal_generators: Tuple[Tuple[str, AlgebraElement], ...]
    basis_choice: Tuple[Tuple[str, AlgebraElement], ...]
    generator_germs: Dict[Generator, InvariantForm] = field(hash=False)
    circ_table: Dict[Tuple[str, Generator], InvariantForm] = field(hash=False)
    quotient_dimensions: Dict[int, int] = field(hash=False)

    def is_diagonal(self) -> bool:
        for (name, _), form in self.circ_table.items():
            for other, c in zip(BASIS_NAMES, form.components()):
                if other != name and not c.is_zero():
                    return False
        return True

    def character(self, name: str, g: Generator) -> ScalarQ:
        """The scalar f with η_name∘g = f·η_name.

        Raises:
            ConventionError: if the circ table is not diagonal.
        """
        if not self.is_diagonal():
            raise ConventionError("circ table is not diagonal in the η basis")
        return self.circ_table[(name, g)].component(name)

    def ideal_counits(self) -> Dict[str, ScalarQ]:
        return {label: counit(r) for label, r in self.ideal_generators}


def build_germs_data(level: int = DEFAULT_LEVEL) -> GermsData:
    """Validates the ideal and reduces the germ and circ tables.

    Raises:
        ConventionError: if an ideal generator leaves ker ε or some
            filtration block has quotient dimension other than 3.
    """
    if level < 2:
        raise ValueError(f"germ tables need level >= 2, got {level}")
    for label, r in IDEAL_GENERATORS:
        if not counit(r).is_zero():
            raise ConventionError(f"ideal generator {label} has nonzero counit")

    dimensions = {}
    for current in range(1, level + 1):
        dimensions[current] = germ_quotient(current).dimension()
        if dimensions[current] != 3:
            raise ConventionError(
                f"quotient dimension {dimensions[current]} != 3 at level {current}"
            )
    logger.info(f"germ quotient dimensions: {dimensions}")

    quotient = germ_quotient(level)
    generators = list(Generator)
    shifted = [
        AlgebraElement.generator(g) - ONE_ELEMENT.scale(counit(AlgebraElement.generator(g)))
        for g in generators
    ]
    generator_germs = dict(zip(generators, quotient.reduce_many(shifted)))

    keys = [(name, g) for name, _ in BASIS_CHOICE for g in generators]
    products = [
        rep * AlgebraElement.generator(g)
        for _, rep in BASIS_CHOICE
        for g in generators
    ]
    circ_table = dict(zip(keys, quotient.reduce_many(products)))

    return GermsData(
        level=level,
        ideal_generators=IDEAL_GENERATORS,
        basis_choice=BASIS_CHOICE,
        generator_germs=generator_germs,
        circ_table=circ_table,
        quotient_dimensions=dimensions,
    )


@lru_cache(maxsize=None)
def get_germs_data(level: int = DEFAULT_LEVEL) -> GermsData:
    return build_germs_data(level)


# right action


def circ_generator(theta: InvariantForm, g: Generator) -> InvariantForm:
    table = get_germs_data().circ_table
    total = ZERO_FORM
    for name, c in zip(BASIS_NAMES, theta.components()):
        if not c.is_zero():
            total = total + table[(name, g)].scale(c)
    return total


def circ_monomial(theta: InvariantForm, m: Monomial) -> InvariantForm:
    for g in m.word():
        theta = circ_generator(theta, g)
    return theta


def circ(theta: InvariantForm, b: AlgebraElement) -> InvariantForm:
    """θ∘b, the right action of the algebra on invariant forms."""
    total = ZERO_FORM
    for m, c in b.items():
        total = total + circ_monomial(theta, m).scale(c)
    return total


def adjoint_germ(x: AlgebraElement, b: AlgebraElement) -> InvariantForm:
    """π(κ(b⁽¹⁾)·x·b⁽²⁾), the adjoint-type expression for π(x)∘b."""
    total = AlgebraElement()
    for m, c in b.items():
        for (m1, m2), c12 in coproduct_monomial(m).items():
            term = antipode_monomial(m1) * x * AlgebraElement.from_monomial(m2)
            total = total + term.scale(c * c12)
    return germs(total)


# germs by recursion


@lru_cache(maxsize=None)
def germ_monomial(m: Monomial) -> InvariantForm:
    if m.is_identity():
        return ZERO_FORM
    rest, last = m.split_last()
    own = get_germs_data().generator_germs[last].scale(counit_monomial(rest))
    return own + circ_generator(germ_monomial(rest), last)


def germs(a: AlgebraElement) -> InvariantForm:
    """π(a), extended termwise from PBW monomials.

    Examples:
        >>> germs(GAMMA).to_text()
        '(1)*eta_plus'
    """
    total = ZERO_FORM
    for m, c in a.items():
        total = total + germ_monomial(m).scale(c)
    return total


def lambda_functionals(a: AlgebraElement) -> Tuple[ScalarQ, ScalarQ, ScalarQ]:
    """(λ₋(a), λ₀(a), λ₊(a)), the coordinates of π(a)."""
    return germs(a).components()


def germ_functional(name: str, m: Monomial) -> ScalarQ:
    return germ_monomial(m).component(name)
