"""Inversion sequences, patterns, and classical containment.

An inversion sequence of length n is a word e(1)...e(n) of non-negative
integers with 0 <= e(i) < i for every position i (1-indexed).  Internally
words are plain tuples indexed from 0, so the bound reads e[i] <= i.

A pattern is a word that uses every value between 0 and its maximum, e.g.
101 is a pattern but 202 is not.  A sequence contains a pattern if some
(not necessarily consecutive) subsequence standardizes to it; otherwise it
avoids the pattern.

>>> standardize((4, 3, 4, 7, 1, 9, 9, 3))
(2, 1, 2, 3, 0, 4, 4, 1)
>>> contains((0, 0, 0, 2, 0, 3, 4), (1, 0, 2))
True
>>> avoids((0, 0, 0, 2, 0, 3, 4), ((0, 1, 1),))
True
"""

from collections import namedtuple


def parse_word(text):
    """Parse a word from digit-string or comma-separated form.

    "0023136638899" and "0,0,2,3,1,3,6,6,3,8,8,9,9" denote the same word.
    A comma anywhere selects the comma form; otherwise every character is
    one single-digit value.  Whitespace around commas is tolerated.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        values = tuple(int(part) for part in text.split(","))
        if any(v < 0 for v in values):
            raise ValueError("word %r has negative entries" % text)
        return values
    if not text.isdigit():
        raise ValueError("word %r is neither digits nor comma-separated integers" % text)
    return tuple(int(ch) for ch in text)


def render_word(word):
    """Inverse of parse_word: digit-string when all values fit in one digit."""
    if all(v <= 9 for v in word):
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def standardize(word):
    """Replace each entry by the rank of its value (smallest distinct value
    becomes 0, next becomes 1, and so on).

    >>> standardize((5, 5, 5))
    (0, 0, 0)
    """
    ranks = {v: r for r, v in enumerate(sorted(set(word)))}
    return tuple(ranks[v] for v in word)


def is_inversion_sequence(word):
    """True when 0 <= word[i] <= i for every 0-indexed position."""
    return all(0 <= v <= i for i, v in enumerate(word))


def is_valid_pattern(word):
    """True when the word uses every value from 0 to its maximum.

    The empty word is a valid (if useless) pattern under this test; callers
    that need a nonempty pattern must check that separately.
    """
    if not word:
        return True
    if min(word) < 0:
        return False
    return set(word) == set(range(max(word) + 1))


def validate_pattern(word):
    """Raise ValueError unless word is a valid nonempty pattern."""
    if not word:
        raise ValueError("empty pattern: containment of the empty pattern is undefined")
    if not is_valid_pattern(word):
        raise ValueError("%s is not an inversion pattern: it does not use every "
                         "value between 0 and its maximum" % render_word(word))


def _cmp(a, b):
    return (a > b) - (a < b)


def contains(e, p):
    """Does e contain the pattern p as a classical (subsequence) pattern?

    A subsequence matches p exactly when all pairwise comparisons agree with
    those of p, so we search depth-first for positions whose values are
    order-isomorphic to p, pruning branches with too few entries left.
    """
    p = tuple(p)
    validate_pattern(p)
    e = tuple(e)
    n, k = len(e), len(p)
    if k > n:
        return False

    def extend(start, chosen):
        j = len(chosen)
        if j == k:
            return True
        # leave room for the k - j values still needed
        for i in range(start, n - (k - j) + 1):
            v = e[i]
            if all(_cmp(v, c) == _cmp(p[j], p[t]) for t, c in enumerate(chosen)):
                if extend(i + 1, chosen + (v,)):
                    return True
        return False

    return extend(0, ())


def avoids(e, basis):
    """True when e contains none of the patterns in basis."""
    return not any(contains(e, p) for p in basis)


def structure_check_201_210(e):
    """Avoidance test for {201, 210} that never searches for an occurrence.

    A sequence avoids both 201 and 210 exactly when, for each left-to-right
    maximum, the entries strictly smaller and strictly to the right of it
    take at most one distinct value.  We sweep right to left keeping the two
    smallest distinct values of the suffix: a left-to-right maximum m fails
    the condition exactly when the second-smallest suffix value is below m.

    >>> structure_check_201_210((0, 0, 2, 0, 1))
    False
    """
    e = tuple(e)
    n = len(e)
    if n == 0:
        return True
    # prefix maxima mark the left-to-right maxima (ties included)
    is_lr_max = [False] * n
    best = -1
    for i, v in enumerate(e):
        if v >= best:
            is_lr_max[i] = True
            best = v
    lo1 = lo2 = None  # two smallest distinct values strictly to the right
    for i in range(n - 1, -1, -1):
        if is_lr_max[i] and lo2 is not None and lo2 < e[i]:
            return False
        v = e[i]
        if lo1 is None or v < lo1:
            if lo1 is not None and v != lo1:
                lo2 = lo1 if (lo2 is None or lo1 < lo2) else lo2
            lo1 = v
        elif v != lo1 and (lo2 is None or v < lo2):
            lo2 = v
    return True


# big_value: max entry, or None for the empty sequence.
# little_value: the common value strictly under and right of the big entries,
#   or None when no such entry exists.
# bounce: length minus max entry (0 for the empty sequence).
StructureProfile = namedtuple("StructureProfile", "big_value little_value bounce")


def structure_profile(e):
    """Big value, little value, and bounce of a {201,210}-avoider.

    The big value is the maximum entry.  The little value is the single
    value taken by entries that lie strictly below and strictly to the
    right of an entry equal to the maximum; it is absent when no such
    entries exist.  The bounce is length minus maximum, which counts how
    many larger values could still become left-to-right maxima.

    Raises ValueError when e contains 201 or 210, since then the little
    value need not be well defined.
    """
    e = tuple(e)
    if not is_inversion_sequence(e):
        raise ValueError("not an inversion sequence: %s" % render_word(e))
    if not structure_check_201_210(e):
        raise ValueError("%s contains 201 or 210; little value is undefined"
                         % render_word(e))
    if not e:
        return StructureProfile(None, None, 0)
    big = max(e)
    first_big = e.index(big)
    littles = {v for v in e[first_big + 1:] if v < big}
    little = littles.pop() if littles else None
    return StructureProfile(big, little, len(e) - big)
