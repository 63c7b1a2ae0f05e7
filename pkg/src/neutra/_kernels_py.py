"""Pure-Python versions of the hot loops.

Structures are handed over as integer tables: elements are indices
``0..n-1``, subsets are bitmasks, and a table entry of ``-1`` means the
result falls outside the carrier (``-2`` marks a shape mismatch in the
addition table).  ``_kernels.pyx`` mirrors every function here.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closed_subsets(n, need, bad, add, zero_mask):
    """Proper subsets W (bitmasks) with need[v] inside W for each v in W,
    no element of ``bad``, and, when ``add`` is given, every pairwise sum
    inside W.  Subsets made only of zero elements are skipped."""
    full = (1 << n) - 1
    out = []
    for mask in range(1, full):
        if mask & bad or not mask & ~zero_mask:
            continue
        ok = True
        for v in _bits(mask):
            if need[v] & ~mask:
                ok = False
                break
        if ok and add is not None:
            members = list(_bits(mask))
            for i, v in enumerate(members):
                row = v * n
                for w in members[i:]:
                    t = add[row + w]
                    if t < 0 or not (mask >> t) & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(mask)
    return out


def additive_closure(n, mask, add):
    """Close ``mask`` under pairwise sums.  Returns -1 when a sum leaves
    the carrier; shape mismatches are skipped."""
    frontier = mask
    while frontier:
        fresh = 0
        for v in _bits(frontier):
            row = v * n
            for w in _bits(mask):
                t = add[row + w]
                if t == -2:
                    continue
                if t < 0:
                    return -1
                if not (mask >> t) & 1 and not (fresh >> t) & 1:
                    fresh |= 1 << t
        mask |= fresh
        frontier = fresh
    return mask


def _combinations(pool, k):
    # lexicographic index combinations, like itertools.combinations
    m = len(pool)
    if k > m:
        return
    idx = list(range(k))
    yield [pool[i] for i in idx]
    while True:
        for i in reversed(range(k)):
            if idx[i] != i + m - k:
                break
        else:
            return
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1
        yield [pool[i] for i in idx]


def min_generating(n, cover, add, forced, candidates, target):
    """All generating masks of minimum size that contain ``forced`` and
    otherwise draw from ``candidates``.  ``cover[v]`` is the mask reached
    from v by the scalar action (v included)."""
    base = 0
    for v in _bits(forced):
        base |= cover[v]
    for k in range(len(candidates) + 1):
        found = []
        for combo in _combinations(candidates, k):
            reach = base
            gens = forced
            for c in combo:
                reach |= cover[c]
                gens |= 1 << c
            if add is not None:
                reach = additive_closure(n, reach, add)
            if reach == target:
                found.append(gens)
        if found:
            return found
    return []


def enumerate_maps(nd, nc, cod_act, cod_add, constraints, fixed):
    """Image tuples (lexicographic) satisfying every constraint.

    ``constraints[k]`` lists records (kind, z, s, v, u) checked once
    position k is assigned; kind 0: img[z] == act[s][img[v]], kind 1:
    img[z] == add[img[v]][img[u]], kind 2: img[z] == add[act[s][img[v]]][img[u]].
    ``fixed[k]`` pins position k to one image when not -1.
    """
    out = []
    img = [0] * nd

    def holds(rec):
        kind, z, s, v, u = rec
        if kind == 0:
            w = cod_act[s * nc + img[v]]
        elif kind == 1:
            w = cod_add[img[v] * nc + img[u]]
        else:
            a = cod_act[s * nc + img[v]]
            if a < 0:
                return False
            w = cod_add[a * nc + img[u]]
        return w >= 0 and w == img[z]

    def assign(k):
        if k == nd:
            out.append(tuple(img))
            return
        options = range(nc) if fixed[k] < 0 else (fixed[k],)
        for w in options:
            img[k] = w
            if all(holds(rec) for rec in constraints[k]):
                assign(k + 1)

    if nd == 0:
        return [()]
    assign(0)
    return out
