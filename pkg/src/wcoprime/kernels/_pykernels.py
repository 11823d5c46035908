"""Pure-Python tuple-counting kernel (reference and fallback)."""


def count_disjoint_tuples(masks, weights, m):
    """Weighted number of ordered m-tuples whose masks AND to zero.

    ``masks[i]`` is a nonnegative int bitmask standing for ``weights[i]``
    identical items.  Each m-tuple (i_1, ..., i_m) contributes the product of
    its weights when ``masks[i_1] & ... & masks[i_m] == 0``.  Once a prefix
    already ANDs to zero every completion counts, so the remaining
    coordinates contribute ``total_weight ** remaining`` at once.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(masks) != len(weights):
        raise ValueError("masks and weights differ in length")
    pairs = [(mk, wt) for mk, wt in zip(masks, weights) if wt]
    total = sum(wt for _, wt in pairs)
    tail = [total**k for k in range(m)]

    def walk(prefix, depth):
        left = m - depth - 1
        acc = 0
        for mk, wt in pairs:
            cur = prefix & mk
            if cur == 0:
                acc += wt * tail[left]
            elif left:
                acc += wt * walk(cur, depth + 1)
        return acc

    acc = 0
    for mk, wt in pairs:
        if mk == 0:
            acc += wt * tail[m - 1]
        elif m > 1:
            acc += wt * walk(mk, 1)
    return acc
