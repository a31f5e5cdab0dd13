"""Brute-force enumeration of pattern-avoiding inversion sequences.

Ground truth for everything else in the package: counts here come from
exhaustive backtracking over the tree of inversion-sequence prefixes,
with subtrees pruned as soon as a prefix contains a basis pattern.
Pruning is sound because removing the last entry of an avoider leaves an
avoider, so every avoider of length n sits below an avoider of every
smaller length.

Only occurrences ending at the newly appended entry need to be checked at
each step; older occurrences would already have pruned the prefix.  For
bases whose patterns all have length 2 or 3 we precompute, for every value
pair (a, w), the set of next values v such that (a, w, v) standardizes to a
forbidden pattern.  The per-node work is then a few bitmask operations.
Longer patterns fall back to a subsequence search anchored at the new
entry.

>>> count_avoiders(((2, 0, 1), (2, 1, 0)), 5)
116
>>> count_sequence(((0, 1, 1), (2, 0, 1)), 5)
[1, 1, 2, 5, 15, 51]
"""

from .core import render_word, standardize, validate_pattern

# ---------- basis handling ----------


def clean_basis(basis):
    """Validate patterns and drop duplicates, keeping first-seen order."""
    seen = []
    for p in basis:
        p = tuple(p)
        validate_pattern(p)
        if p not in seen:
            seen.append(p)
    return tuple(seen)


def _mask_tables(basis, n):
    """Forbidden-value bitmasks for a basis of patterns of length <= 3.

    Returns (single, pair) where single[w] is the mask of values v making
    (w, v) standardize to a length-2 basis pattern, and pair[a][w] the mask
    of v making (a, w, v) standardize to a length-3 one.  Values range over
    0..n-1, the largest entry any length-n inversion sequence can hold.
    """
    twos = {p for p in basis if len(p) == 2}
    threes = {p for p in basis if len(p) == 3}
    single = [0] * n
    for w in range(n):
        for v in range(n):
            if standardize((w, v)) in twos:
                single[w] |= 1 << v
    pair = [[0] * n for _ in range(n)]
    if threes:
        for a in range(n):
            row = pair[a]
            for w in range(n):
                for v in range(n):
                    if standardize((a, w, v)) in threes:
                        row[w] |= 1 << v
    return single, pair


# ---------- fast path: every pattern has length 2 or 3 ----------


def _count_fast(basis, n_max):
    """Level counts [|I_0|, .., |I_n_max|] via bitmask backtracking."""
    counts = [0] * (n_max + 1)
    counts[0] = 1
    if n_max == 0:
        return counts
    single, pair = _mask_tables(basis, n_max)
    last = n_max - 1

    def walk(depth, banned, seen):
        # candidates for entry number `depth` are 0..depth, minus banned ones
        allowed = ~banned & ((1 << (depth + 1)) - 1)
        if depth == last:
            counts[n_max] += allowed.bit_count()
            return
        d1 = depth + 1
        rest = allowed
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            counts[d1] += 1
            delta = single[v]
            s = seen
            while s:
                abit = s & -s
                s ^= abit
                delta |= pair[abit.bit_length() - 1][v]
            walk(d1, banned | delta, seen | bit)

    # the first entry is always 0, and nothing can ban it: an occurrence
    # ending there would need the whole pattern inside a length-1 prefix
    counts[1] = 1
    if n_max > 1:
        walk(1, single[0], 1)
    return counts


# ---------- generic path: subsequence search anchored at the new entry ----------


def _completes_pattern(prefix, v, p):
    """Would appending v create an occurrence of p ending at the new entry?

    Searches for positions in prefix whose values, followed by v, are
    order-isomorphic to p.  Each new choice is compared against all earlier
    ones, which pins the standardization without computing it.
    """
    k = len(p)
    if k == 1:
        return True  # the only length-1 pattern is (0,), matched by anything
    n = len(prefix)
    if n < k - 1:
        return False
    last = p[-1]

    def extend(start, chosen):
        j = len(chosen)
        if j == k - 1:
            return True
        for i in range(start, n - (k - 1 - j) + 1):
            w = prefix[i]
            if (w > v) - (w < v) != (p[j] > last) - (p[j] < last):
                continue
            if all((w > c) - (w < c) == (p[j] > p[t]) - (p[j] < p[t])
                   for t, c in enumerate(chosen)):
                if extend(i + 1, chosen + (w,)):
                    return True
        return False

    return extend(0, ())


def _count_generic(basis, n_max):
    counts = [0] * (n_max + 1)
    counts[0] = 1
    prefix = []

    def walk(depth):
        for v in range(depth + 1):
            if any(_completes_pattern(prefix, v, p) for p in basis):
                continue
            counts[depth + 1] += 1
            if depth + 1 < n_max:
                prefix.append(v)
                walk(depth + 1)
                prefix.pop()

    if n_max >= 1:
        walk(0)
    return counts


# ---------- public operations ----------


def count_sequence(basis, n_max):
    """[|I_0(basis)|, ..., |I_n_max(basis)|] from a single backtracking pass."""
    basis = clean_basis(basis)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if basis and all(len(p) in (2, 3) for p in basis):
        return _count_fast(basis, n_max)
    return _count_generic(basis, n_max)


def count_avoiders(basis, n):
    """The number of inversion sequences of length n avoiding every basis
    pattern, as an exact integer."""
    return count_sequence(basis, n)[n]


def list_avoiders(basis, n):
    """All members of I_n(basis) in lexicographic order.

    Candidate values are tried in increasing order at every position, so
    the output comes out sorted without a final sort.  Intended for small
    n; the result has count_avoiders(basis, n) members.
    """
    basis = clean_basis(basis)
    if n < 0:
        raise ValueError("n must be non-negative")
    found = []
    prefix = []

    def walk(depth):
        for v in range(depth + 1):
            if any(_completes_pattern(prefix, v, p) for p in basis):
                continue
            prefix.append(v)
            if depth + 1 == n:
                found.append(tuple(prefix))
            else:
                walk(depth + 1)
            prefix.pop()

    if n == 0:
        return [()]
    walk(0)
    return found
