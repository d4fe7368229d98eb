def euler_pentagonal_table(upto: int) -> list[int]:
    """Unrestricted p(0..upto) from Euler's pentagonal number recurrence."""
    p = [1] + [0] * upto
    for n in range(1, upto + 1):
        total = 0
        k = 1
        while True:
            first = n - k * (3 * k - 1) // 2
            if first < 0:
                break
            second = first - k
            term = p[first] + (p[second] if second >= 0 else 0)
            total += term if k % 2 else -term
            k += 1
        p[n] = total
    return p
