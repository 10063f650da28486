"""The rewriting system that presents SU_q(2) in PBW normal form.

Words over the four generators are rewritten with the seven rules of
``RULES`` until no left-hand side occurs. The system is confluent, so the
normal form does not depend on which redex is contracted first; the
``strategy`` argument exists to exercise exactly that.
"""

import random
from typing import Dict, List, Optional, Sequence, Tuple

from ..coefficients import ONE, ScalarQ
from .element import AlgebraElement
from .monomial import Generator, Monomial

Word = Tuple[Generator, ...]

A, AS, G, GS = (
    Generator.ALPHA,
    Generator.ALPHA_STAR,
    Generator.GAMMA,
    Generator.GAMMA_STAR,
)

RULES: Dict[Tuple[Generator, Generator], List[Tuple[ScalarQ, Word]]] = {
    (G, A): [(ScalarQ.q_power(-1), (A, G))],
    (GS, A): [(ScalarQ.q_power(-1), (A, GS))],
    (G, AS): [(ScalarQ.q_power(1), (AS, G))],
    (GS, AS): [(ScalarQ.q_power(1), (AS, GS))],
    (GS, G): [(ONE, (G, GS))],
    (A, AS): [(ONE, ()), (-ScalarQ.q_power(2), (G, GS))],
    (AS, A): [(ONE, ()), (-ONE, (G, GS))],
}


def redexes(word: Word) -> List[int]:
    """Positions i such that word[i:i+2] is a left-hand side."""
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in RULES]


def word_to_monomial(word: Word) -> Monomial:
    """Reads off the monomial of an irreducible word."""
    assert not redexes(word), f"word {word} is not in normal form"
    a = word.count(A) - word.count(AS)
    return Monomial(a, word.count(G), word.count(GS))


def normal_form(
    word: Sequence[Generator],
    scalar: ScalarQ = ONE,
    strategy: str = "leftmost",
    seed: Optional[int] = None,
) -> AlgebraElement:
    """Reduces ``scalar · word`` to PBW normal form.

    Args:
        word: sequence of generators; the empty word is the unit.
        scalar: coefficient of the word.
        strategy: "leftmost" contracts the first redex, "random" a
            uniformly chosen one (reproducible through ``seed``).
        seed: seed for the random strategy.

    Returns:
        The PBW normal form as an AlgebraElement.

    Examples:
        >>> normal_form([Generator.GAMMA, Generator.ALPHA]).to_text()
        '(1*q^-1)*alpha^1 gamma^1'
    """
    if strategy not in ("leftmost", "random"):
        raise ValueError(f"Unknown rewriting strategy: {strategy}")
    rng = random.Random(seed)
    pending: Dict[Word, ScalarQ] = {tuple(word): scalar}
    done: Dict[Monomial, ScalarQ] = {}
    while pending:
        current, coeff = pending.popitem()
        if coeff.is_zero():
            continue
        positions = redexes(current)
        if not positions:
            m = word_to_monomial(current)
            done[m] = done[m] + coeff if m in done else coeff
            continue
        i = positions[0] if strategy == "leftmost" else rng.choice(positions)
        for factor, replacement in RULES[(current[i], current[i + 1])]:
            new_word = current[:i] + replacement + current[i + 2 :]
            value = coeff * factor
            pending[new_word] = (
                pending[new_word] + value if new_word in pending else value
            )
    return AlgebraElement(done)
