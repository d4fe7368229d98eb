from partlab.arith._coprime_set import FiniteCoprimeSet


def frobenius_threshold(coprime: FiniteCoprimeSet) -> int:
    """Least N such that every n >= N is a nonnegative combination of the set.

    Scans representability upward; once a_1 consecutive integers are
    representable, adding a_1 covers everything beyond them.
    """
    smallest = coprime.elements[0]
    reachable: list[bool] = []
    run = 0
    n = 0
    while True:
        hit = n == 0 or any(a <= n and reachable[n - a] for a in coprime.elements)
        reachable.append(hit)
        run = run + 1 if hit else 0
        if run == smallest:
            return n - smallest + 1
        n += 1


def frobenius_number(coprime: FiniteCoprimeSet) -> int:
    """Largest non-representable integer, -1 when every n >= 0 is representable."""
    return frobenius_threshold(coprime) - 1
