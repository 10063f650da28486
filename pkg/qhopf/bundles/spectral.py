"""Gram-adjoint assembly of the bundle Laplacians and their spectra.

The degree-n block {α^{n−k+l}γ^kγ*^l : k + l ≤ N} splits into chains of
fixed α-power; the members of a chain differ by powers of γγ*. Both
Laplacians map a chain member into the span of itself and the shorter
members of its chain, so every chain matrix is triangular and its
eigenvalues sit on the diagonal.

The Laplacian is recovered from ∇ by the adjoint relation
⟨Δe_j, e_k⟩ = ⟨∇e_j, ∇e_k⟩: with G the section Gram matrix and F the
1-form Gram matrix, the image of e_j has coordinates row j of F·G⁻¹.
"""

import logging
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from .. import BASE_CACHE_PATH
from ..calculus import partial_minus, partial_plus
from ..coefficients import ONE, ZERO, ScalarQ
from ..errors import ConventionError
from ..linalg import inverse, matmul
from ..quantum_group import AlgebraElement, Monomial, monomials_of_degree
from ..utils import cached_pickle
from .covariant import Section, check_side, form_inner, nabla, section_inner
from .tables import TableEntry, table_entry

logger = logging.getLogger(__name__)

DEFAULT_BUFFER = 2

Q2 = ScalarQ.q_power(2)

# leading coefficients of the eigenvectors whose normalization is fixed
LEADING_COEFFICIENTS: Dict[Tuple[str, Monomial], ScalarQ] = {
    ("left", Monomial(1, 1, 1)): ScalarQ.q_power(6)
    + 3 * ScalarQ.q_power(4)
    + 2 * Q2
    + ONE,
    ("right", Monomial(1, 1, 1)): ScalarQ.q_power(4)
    + 2 * Q2
    + ScalarQ.q_power(-2)
    + 3,
    ("left", Monomial(0, 1, 1)): -(ONE + Q2),
    ("right", Monomial(0, 1, 1)): -(ONE + Q2),
}


def chain_key(m: Monomial) -> Tuple[int, int]:
    """(α-power, k − l); monomials with the same key form one chain."""
    return m.a_power, m.k - m.l


def chain_start(a_power: int, d: int) -> Monomial:
    return Monomial(a_power, max(d, 0), max(-d, 0))


def chain_member(a_power: int, d: int, j: int) -> Monomial:
    start = chain_start(a_power, d)
    return Monomial(a_power, start.k + j, start.l + j)


def chain_index(m: Monomial) -> int:
    return min(m.k, m.l)


def chain_length_within(a_power: int, d: int, N: int) -> int:
    """Number of chain members with k + l ≤ N."""
    start = chain_start(a_power, d)
    room = N - start.k - start.l
    return room // 2 + 1 if room >= 0 else 0


@dataclass(frozen=True)
class ChainMatrix:
    """One chain of a block.

    Attributes:
        side: "left" or "right".
        members: the chain monomials, shortest first.
        gram: section pairings ⟨e_i, e_j⟩.
        energy: 1-form pairings ⟨∇e_i, ∇e_j⟩.
        images: row j holds the coordinates of Δe_j.
    """

    side: str
    members: Tuple[Monomial, ...]
    gram: Tuple[Tuple[ScalarQ, ...], ...]
    energy: Tuple[Tuple[ScalarQ, ...], ...]
    images: Tuple[Tuple[ScalarQ, ...], ...]

    def is_triangular(self) -> bool:
        return all(
            self.images[j][i].is_zero()
            for j in range(len(self.members))
            for i in range(j + 1, len(self.members))
        )

    def is_symmetric(self) -> bool:
        size = len(self.members)
        return all(
            self.gram[i][j] == self.gram[j][i] and self.energy[i][j] == self.energy[j][i]
            for i in range(size)
            for j in range(i + 1, size)
        )

    def restrict(self, count: int) -> "ChainMatrix":
        return ChainMatrix(
            side=self.side,
            members=self.members[:count],
            gram=tuple(row[:count] for row in self.gram[:count]),
            energy=tuple(row[:count] for row in self.energy[:count]),
            images=tuple(row[:count] for row in self.images[:count]),
        )


def _square(rows: List[List[ScalarQ]]) -> Tuple[Tuple[ScalarQ, ...], ...]:
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def chain_matrix(side: str, a_power: int, d: int, count: int) -> ChainMatrix:
    """Assembles the Laplacian on the first ``count`` members of a chain.

    Raises:
        GramSingularError: if the section Gram matrix is singular.
    """
    check_side(side)
    members = tuple(chain_member(a_power, d, j) for j in range(count))
    elements = [AlgebraElement.from_monomial(m) for m in members]
    n = a_power + d
    derivatives = [nabla(side, Section(n, e)) for e in elements]
    gram = [[section_inner(side, ei, ej) for ej in elements] for ei in elements]
    energy = [[form_inner(side, fi, fj) for fj in derivatives] for fi in derivatives]
    images = matmul(energy, inverse(gram)) if count else []
    logger.debug(
        f"assembled {side} chain (a={a_power}, k-l={d}) with {count} members"
    )
    return ChainMatrix(
        side=side,
        members=members,
        gram=_square(gram),
        energy=_square(energy),
        images=_square(images),
    )


def buffered_chain(
    side: str, a_power: int, d: int, count: int, buffer: int = DEFAULT_BUFFER
) -> ChainMatrix:
    """Assembles ``count + buffer`` members and keeps the first ``count``."""
    if buffer < 0:
        raise ValueError(f"buffer must be non-negative, got {buffer}")
    return chain_matrix(side, a_power, d, count + buffer).restrict(count)


@dataclass
class SpectralBlock:
    """The Laplacian of one side on the degree-n block with k + l ≤ N.

    ``matrix[i][j]`` is the coefficient of ``basis[i]`` in Δ(basis[j]).
    """

    n: int
    N: int
    side: str
    buffer: int
    basis: List[Monomial]
    matrix: List[List[ScalarQ]]
    chains: Dict[Tuple[int, int], ChainMatrix] = field(default_factory=dict)

    def index(self, m: Monomial) -> int:
        return self.basis.index(m)

    def entry(self, row: Monomial, column: Monomial) -> ScalarQ:
        return self.matrix[self.index(row)][self.index(column)]

    def diagonal(self) -> List[ScalarQ]:
        return [self.matrix[i][i] for i in range(len(self.basis))]

    def is_triangular(self) -> bool:
        """Upper triangular in basis order (each chain sorted shortest first)."""
        return all(
            self.matrix[i][j].is_zero()
            for j in range(len(self.basis))
            for i in range(j + 1, len(self.basis))
        )

    def is_self_adjoint(self) -> bool:
        return all(chain.is_symmetric() for chain in self.chains.values())

    def is_nonnegative(self, q_values=(0.5, -0.5, 0.9), tol: float = 1e-12) -> bool:
        """The diagonal (hence the spectrum) is ≥ 0 at the sample values of q."""
        for q0 in q_values:
            values = np.array([float(v.evaluate(q0)) for v in self.diagonal()])
            if values.size and values.min() < -tol:
                return False
        return True


def laplacian_matrix(
    n: int, N: int, side: str, buffer: int = DEFAULT_BUFFER
) -> SpectralBlock:
    """Assembles the Laplacian block of winding n on filtration N."""
    if N < 0:
        raise ValueError(f"filtration bound must be non-negative, got {N}")
    check_side(side)
    basis = monomials_of_degree(n, N)
    position = {m: i for i, m in enumerate(basis)}
    matrix = [[ZERO] * len(basis) for _ in basis]
    chains: Dict[Tuple[int, int], ChainMatrix] = {}
    for m in basis:
        key = chain_key(m)
        if key in chains:
            continue
        count = chain_length_within(key[0], key[1], N)
        chain = buffered_chain(side, key[0], key[1], count, buffer)
        chains[key] = chain
        for j, column in enumerate(chain.members):
            for i, row in enumerate(chain.members):
                value = chain.images[j][i]
                if not value.is_zero():
                    matrix[position[row]][position[column]] = value
    logger.debug(f"{side} block n={n}, N={N}: {len(basis)} monomials, {len(chains)} chains")
    return SpectralBlock(
        n=n, N=N, side=side, buffer=buffer, basis=basis, matrix=matrix, chains=chains
    )


def _cache_path(n: int, N: int, side: str, buffer: int) -> str:
    return os.path.join(BASE_CACHE_PATH, "blocks", f"{side}_n{n}_N{N}_b{buffer}.pkl")


def load_block(
    n: int, N: int, side: str, buffer: int = DEFAULT_BUFFER, refresh_cache: bool = False
) -> SpectralBlock:
    """``laplacian_matrix`` backed by a pickle under the package cache."""
    return cached_pickle(
        _cache_path(n, N, side, buffer),
        lambda: laplacian_matrix(n, N, side, buffer),
        refresh_cache=refresh_cache,
        what=f"{side} block n={n}, N={N}",
    )


@dataclass(frozen=True)
class Eigenpair:
    """An eigenvector with its eigenvalue and the matching table entry."""

    n: int
    side: str
    monomial: Monomial
    eigenvalue: ScalarQ
    eigenvector: AlgebraElement
    table: TableEntry

    @property
    def match(self) -> bool:
        return self.eigenvalue == self.table.value


def _eigenvector(chain: ChainMatrix, top: int) -> AlgebraElement:
    """Back-substitution for the eigenvector whose longest monomial is ``top``."""
    value = chain.images[top][top]
    coords: Dict[int, ScalarQ] = {top: ONE}
    for i in range(top - 1, -1, -1):
        total = ZERO
        for k in range(i + 1, top + 1):
            if not coords[k].is_zero():
                total = total + chain.images[k][i] * coords[k]
        gap = value - chain.images[i][i]
        if gap.is_zero():
            if not total.is_zero():
                raise ConventionError(
                    f"{chain.side} chain through {chain.members[top].to_text()} "
                    f"is not diagonalizable"
                )
            coords[i] = ZERO
        else:
            coords[i] = total / gap
    lead = LEADING_COEFFICIENTS.get((chain.side, chain.members[top]), ONE)
    return AlgebraElement(
        {chain.members[i]: c * lead for i, c in coords.items() if not c.is_zero()}
    )


def spectrum(block: SpectralBlock) -> List[Eigenpair]:
    """Eigenpairs of a block, one per basis monomial, in basis order.

    Raises:
        ConventionError: if the block is not triangular or a chain has a
            repeated eigenvalue without a full eigenspace.
    """
    if not block.is_triangular():
        raise ConventionError(
            f"{block.side} block n={block.n}, N={block.N} is not triangular"
        )
    pairs = []
    for m in block.basis:
        chain = block.chains[chain_key(m)]
        top = chain_index(m)
        pairs.append(
            Eigenpair(
                n=block.n,
                side=block.side,
                monomial=m,
                eigenvalue=chain.images[top][top],
                eigenvector=_eigenvector(chain, top),
                table=table_entry(block.side, m),
            )
        )
    return pairs


class LaplacianOperator:
    """Applies Δ_L or Δ_R to any element, chain by chain.

    Args:
        side: "left" or "right".
        buffer: extra chain members assembled beyond the longest input.
    """

    def __init__(self, side: str, buffer: int = DEFAULT_BUFFER):
        self.side = check_side(side)
        self.buffer = buffer

    def apply_monomial(self, m: Monomial) -> AlgebraElement:
        a_power, d = chain_key(m)
        top = chain_index(m)
        chain = buffered_chain(self.side, a_power, d, top + 1, self.buffer)
        return AlgebraElement(
            {
                chain.members[i]: chain.images[top][i]
                for i in range(top + 1)
                if not chain.images[top][i].is_zero()
            }
        )

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        return a.map_terms(self.apply_monomial)

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        return self.apply(a)


def closed_form_laplacian(side: str, a: AlgebraElement) -> AlgebraElement:
    """Δ from the partial derivatives, one homogeneous component at a time.

    Δ_L = −(q^{2n+1}/2)(∂₊∂₋ + ∂₋∂₊) and Δ_R = −½(q⁻¹∂₋∂₊ + q³∂₊∂₋).
    """
    check_side(side)
    half = ScalarQ(1) / 2
    total = AlgebraElement()
    for n, part in a.homogeneous_components().items():
        minus_plus = partial_minus(partial_plus(part))
        plus_minus = partial_plus(partial_minus(part))
        if side == "left":
            value = (plus_minus + minus_plus).scale(-half * ScalarQ.q_power(2 * n + 1))
        else:
            value = minus_plus.scale(-half * ScalarQ.q_power(-1)) + plus_minus.scale(
                -half * ScalarQ.q_power(3)
            )
        total = total + value
    return total


def spectrum_rows(pairs: List[Eigenpair]) -> List[Dict[str, object]]:
    """Flat records of eigenpairs, for the emitters."""
    return [
        {
            "n": p.n,
            "side": p.side,
            "monomial": p.monomial.to_text(),
            "row": p.table.row,
            "eigenvalue": p.eigenvalue,
            "table_value": p.table.value,
            "match": p.match,
        }
        for p in pairs
    ]


def block_spectrum(
    n: int,
    N: int,
    side: str,
    buffer: int = DEFAULT_BUFFER,
    refresh_cache: bool = False,
    use_cache: bool = True,
) -> List[Eigenpair]:
    if use_cache:
        block = load_block(n, N, side, buffer, refresh_cache=refresh_cache)
    else:
        block = laplacian_matrix(n, N, side, buffer)
    return spectrum(block)


def classical_limit(pairs: List[Eigenpair]) -> Optional[List[float]]:
    """Eigenvalues at q = 1, or None if one of them has a pole there."""
    try:
        return [float(p.eigenvalue.evaluate(1)) for p in pairs]
    except ValueError:
        return None
