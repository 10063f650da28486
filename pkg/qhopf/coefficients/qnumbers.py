"""q-numbers, q-factorials and Gaussian binomials."""

from functools import lru_cache

from .scalar import ONE, ZERO, ScalarQ


@lru_cache(maxsize=None)
def q_int(r: int) -> ScalarQ:
    """The q²-number [r] = (1 − q^{2r})/(1 − q²) for any integer r.

    For r ≥ 0 this is 1 + q² + … + q^{2(r−1)}; for r < 0 it equals
    −q^{2r}[−r], again a Laurent polynomial.
    """
    if r >= 0:
        total = ZERO
        for j in range(r):
            total = total + ScalarQ.q_power(2 * j)
        return total
    return -ScalarQ.q_power(2 * r) * q_int(-r)


def q_number(r: int) -> ScalarQ:
    """The q²-number [r] for a positive integer r.

    Args:
        r: positive integer.

    Returns:
        1 + q² + … + q^{2(r−1)}.

    Raises:
        ValueError: if r < 1.
    """
    if r < 1:
        raise ValueError(f"q_number expects r >= 1, got {r}")
    return q_int(r)


def q_number_at(r: int, base: ScalarQ) -> ScalarQ:
    """[r]_base = 1 + base + … + base^{r−1}, for r ≥ 0."""
    total = ZERO
    power = ONE
    for _ in range(r):
        total = total + power
        power = power * base
    return total


@lru_cache(maxsize=None)
def q_factorial(r: int) -> ScalarQ:
    """[r]! = [1][2]…[r] at base q², with [0]! = 1."""
    if r < 0:
        raise ValueError(f"q_factorial expects r >= 0, got {r}")
    value = ONE
    for j in range(1, r + 1):
        value = value * q_int(j)
    return value


def q_binomial(n: int, k: int, base: ScalarQ) -> ScalarQ:
    """Gaussian binomial coefficient at ``base``.

    Built with the q-Pascal recurrence
    (n, k) = (n−1, k−1) + base^k (n−1, k).

    Args:
        n: nonnegative integer.
        k: nonnegative integer; k > n gives zero.
        base: the deformation base (q⁻² for the generator columns).

    Examples:
        >>> q_binomial(2, 1, ScalarQ.q_power(-2)).to_text()
        '1*q^-2 + 1'
    """
    if n < 0 or k < 0:
        raise ValueError(f"q_binomial expects nonnegative arguments, got {n}, {k}")
    if k > n:
        return ZERO
    return _q_binomial(n, k, base)


@lru_cache(maxsize=None)
def _q_binomial(n: int, k: int, base: ScalarQ) -> ScalarQ:
    if k == 0 or k == n:
        return ONE
    return _q_binomial(n - 1, k - 1, base) + base**k * _q_binomial(n - 1, k, base)
