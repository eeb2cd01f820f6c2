"""Pure-Python kernels.  Same contract as the compiled ``_kernels`` module."""

MTF, TRANS, FC, MFM, MTP = 0, 1, 2, 3, 4


def serve(order, requests, rule, q, counts, dynamic, record):
    """Serve dense-id ``requests`` on ``order`` under one move rule.

    ``order`` holds dense ids 0..cap-1 (a prefix of them in dynamic mode,
    where an unseen id is appended at the back before being served).
    ``counts`` is the FC tally, indexed by id and updated in place.

    Returns ``(access, free_moves, final_order, found, targets)``; the last
    two are ``None`` unless ``record`` is set.
    """
    order = list(order)
    present = None
    if dynamic:
        cap = len(order)
        if requests:
            cap = max(cap, max(requests) + 1)
        present = [False] * cap
        for x in order:
            present[x] = True
    found = [] if record else None
    targets = [] if record else None
    access = 0
    free_moves = 0
    index = order.index
    for x in requests:
        if dynamic and not present[x]:
            order.append(x)
            present[x] = True
            p = len(order)
        else:
            p = index(x) + 1
        access += p
        l = len(order)
        if rule == MTF:
            t = 1
        elif rule == MFM:
            m = (l + 1) // 2
            t = 1 if p <= m else m
        elif rule == MTP:
            t = 1 if p <= q else q
        elif rule == TRANS:
            t = p - 1 if p > 1 else 1
        else:
            counts[x] += 1
            c = counts[x]
            t = p
            while t > 1 and counts[order[t - 2]] < c:
                t -= 1
        if t < p:
            free_moves += 1
            del order[p - 1]
            order.insert(t - 1, x)
        if record:
            found.append(p)
            targets.append(t)
    return access, free_moves, order, found, targets


def count_inversions(seq):
    """Inversions in a sequence of distinct integers (merge sort)."""
    a = list(seq)
    n = len(a)
    if n < 2:
        return 0
    buf = [0] * n
    inv = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    buf[k] = a[i]
                    i += 1
                else:
                    buf[k] = a[j]
                    j += 1
                    inv += mid - i
                k += 1
            while i < mid:
                buf[k] = a[i]
                i += 1
                k += 1
            while j < hi:
                buf[k] = a[j]
                j += 1
                k += 1
        a, buf = buf, a
        width *= 2
    return inv
