"""Succession-rule systems and exact dynamic programming over their states.

A succession system rewrites state labels: starting from an axiom label,
each state produces a finite multiset of successor states, and the number
of length-n production paths landing in accepting states counts the
objects of size n.  Three systems are built in:

``201-210``
    States (k, ell, c) where k is the bounce of the sequence built so far,
    ell records whether a little value exists, and c whether we are still
    committed to placing entries at a promised little value.  Only states
    with c = F describe completed sequences, so those are the accepting
    ones.  Counts |I_n(201, 210)|.

``011-201`` and ``010-100-120-210``
    States (k, ell) with k the bounce and ell the number of values below
    the maximum that are still unused.  Every state accepts.  The two
    systems produce identical counting sequences as far as anyone has
    checked, which is why they share a module.

A level vector is a plain dict mapping states to positive integer counts;
the depth is whatever number of steps produced it.  step() applies the
rules literally; step_fast() uses suffix partial sums so each level costs
time linear in the number of live states, which is what makes n in the
thousands routine.

>>> count_via_rules("201-210", 7)
3720
>>> count_via_rules("011-201", 5)
51
"""

from itertools import accumulate

# ---------- the three rule systems ----------


class RuleSystem:
    """A named succession system: axiom, productions, acceptance."""

    def __init__(self, name, axiom, successors, accept, state_str):
        self.name = name
        self.axiom = axiom
        self.successors = successors
        self.accept = accept
        self.state_str = state_str

    def __repr__(self):
        return "RuleSystem(%r)" % self.name


def _successors_201_210(state):
    """Production multiset for one (k, ell, c) state, as (state, mult) pairs."""
    k, ell, c = state
    if c and not ell:
        raise ValueError("state (%d,F,T) is unreachable: a commitment "
                         "presupposes a little value" % k)
    if not ell:
        # no little value yet: grow the bounce, bounce to a smaller one,
        # or commit to one of the k - i + 1 admissible little values
        out = [((k + 1, False, False), 1)]
        for i in range(1, k + 1):
            out.append(((i, False, False), 1))
            out.append(((i, True, True), k - i + 1))
    elif not c:
        # little value exists, commitment fulfilled; the doubled first rule
        # covers the two ways of placing a new big entry (at or above the
        # old maximum) that keep the same little value
        out = [((k + 1, True, False), 2)]
        for i in range(1, k + 1):
            out.append(((i, True, False), 1))
            out.append(((i, True, True), k - i + 1))
    else:
        # committed: either keep stalling or place the promised entry now
        out = [((k + 1, True, True), 1), ((k + 1, True, False), 1)]
        for i in range(1, k + 1):
            out.append(((i, True, True), 1))
    return out


def _successors_011_201(state):
    k, ell = state
    out = [((k + 1, 0), 1)]
    out += [((i, ell + k - i), 1) for i in range(1, k + 1)]
    out += [((k + 1, i), 1) for i in range(ell)]
    return out


def _successors_010_100_120_210(state):
    k, ell = state
    out = [((k + 1, ell), 1)]
    out += [((k + 1, i), 1) for i in range(ell)]
    out += [((i, k - i), 1) for i in range(1, k + 1)]
    return out


def _str_3(state):
    k, ell, c = state
    return "(%d,%s,%s)" % (k, "T" if ell else "F", "T" if c else "F")


def _str_2(state):
    return "(%d,%d)" % state


# ---------- generic and fast stepping ----------


def step(system, level):
    """Apply every production once: one depth of the generating tree.

    level maps states to counts; the result does the same, with zero-count
    states omitted.
    """
    nxt = {}
    for state, m in level.items():
        for target, mult in system.successors(state):
            nxt[target] = nxt.get(target, 0) + m * mult
    return {s: c for s, c in nxt.items() if c}


def _suffix_sums(xs):
    """S with S[j] = xs[j] + xs[j+1] + ...; one longer than xs, ends in 0."""
    out = list(accumulate(reversed(xs)))
    out.reverse()
    out.append(0)
    return out


def _fast_step_201_210(a, b, c):
    """Advance the three k-indexed count slices one depth.

    a[k], b[k], c[k] hold the counts of states (k,F,F), (k,T,F), (k,T,T).
    Ranged productions (i, ...) for i = 1..k turn into suffix sums over k,
    and the triangular multiplicities k - i + 1 into suffix sums of suffix
    sums, so one call is O(max k) integer additions.
    """
    n = len(a)
    sa, sb, sc = _suffix_sums(a), _suffix_sums(b), _suffix_sums(c)
    sab = [x + y for x, y in zip(sa, sb)]
    t = _suffix_sums(sab)
    new_a = [0] * (n + 1)
    new_b = [0] * (n + 1)
    new_c = [0] * (n + 1)
    for j in range(1, n + 1):
        new_a[j] = a[j - 1] + sa[j]
        new_b[j] = 2 * b[j - 1] + sb[j] + c[j - 1]
        new_c[j] = c[j - 1] + sc[j] + t[j]
    return new_a, new_b, new_c


def _fast_step_2int(rows, diagonal_spread):
    """Advance a dense triangle rows[k][ell] one depth.

    With diagonal_spread True this is the 011-201 system, whose bouncing
    production (i, ell + k - i) walks along anti-diagonals; with False it
    is the 010-100-120-210 system, whose production (i, k - i) forgets ell
    and lands on the diagonal k' + ell' = k.  Both are O(states) per call.
    """
    nrows = len(rows)
    max_d = max((k + len(r) - 1 for k, r in enumerate(rows) if r), default=0)
    size = max_d + 2               # next level holds k + ell up to max_d + 1
    row_sum = [sum(r) for r in rows]
    row_suf = [_suffix_sums(r) for r in rows]
    if diagonal_spread:
        # diag_suf[d][j] = sum of rows[k][d - k] over k >= j
        diag_suf = []
        for d in range(max_d + 1):
            diag = [rows[k][d - k] if k < nrows and d - k < len(rows[k]) else 0
                    for k in range(d + 1)]
            diag_suf.append(_suffix_sums(diag))
    new = [[0] * (size - k) for k in range(size)]
    for k in range(1, size):
        prev = k - 1
        prev_row = rows[prev] if prev < nrows else ()
        prev_suf = row_suf[prev] if prev < nrows else ()
        for ell in range(size - k):
            total = 0
            if diagonal_spread:
                if ell == 0 and prev < nrows:
                    total += row_sum[prev]
            elif ell < len(prev_row):
                total += prev_row[ell]
            if ell + 1 < len(prev_suf):
                total += prev_suf[ell + 1]
            d = k + ell
            if diagonal_spread:
                if d <= max_d and k <= d:
                    total += diag_suf[d][k]
            elif d < nrows:
                total += row_sum[d]
            new[k][ell] = total
    return new


def _accept_all(state):
    return True

def _accept_uncommitted(state):
    return not state[2]


SYSTEMS = {
    "201-210": RuleSystem("201-210", (0, False, False), _successors_201_210,
                          _accept_uncommitted, _str_3),
    "011-201": RuleSystem("011-201", (0, 0), _successors_011_201,
                          _accept_all, _str_2),
    "010-100-120-210": RuleSystem("010-100-120-210", (0, 0),
                                  _successors_010_100_120_210,
                                  _accept_all, _str_2),
}


def get_system(system_id):
    if system_id not in SYSTEMS:
        raise ValueError("unknown succession system %r (have: %s)"
                         % (system_id, ", ".join(sorted(SYSTEMS))))
    return SYSTEMS[system_id]


# dict <-> dense conversions for the public step_fast


def _to_slices_201_210(level):
    top = max((s[0] for s in level), default=0)
    a = [0] * (top + 1)
    b = [0] * (top + 1)
    c = [0] * (top + 1)
    for (k, ell, com), m in level.items():
        if com and not ell:
            raise ValueError("state (%d,F,T) is unreachable" % k)
        (c if com else (b if ell else a))[k] = m
    return a, b, c


def _to_rows_2int(level):
    top = max((max(s) for s in level), default=0)
    rows = [[0] * (top + 1) for _ in range(top + 1)]
    for (k, ell), m in level.items():
        rows[k][ell] = m
    return rows


def step_fast(system, level):
    """Same contract as step(), via the per-system partial-sum kernels."""
    if not level:
        return {}
    if system.name == "201-210":
        a, b, c = _fast_step_201_210(*_to_slices_201_210(level))
        out = {}
        for k, m in enumerate(a):
            if m:
                out[(k, False, False)] = m
        for k, m in enumerate(b):
            if m:
                out[(k, True, False)] = m
        for k, m in enumerate(c):
            if m:
                out[(k, True, True)] = m
        return out
    rows = _fast_step_2int(_to_rows_2int(level),
                           diagonal_spread=(system.name == "011-201"))
    return {(k, ell): m
            for k, row in enumerate(rows) for ell, m in enumerate(row) if m}


# ---------- counting ----------


def _accepted_201_210(a, b, c):
    return sum(a) + sum(b)


def rule_counting_sequence(system_id, n_max):
    """[count at depth 0, ..., count at depth n_max] for one system,
    summing accepted states at every level of a single DP run."""
    system = get_system(system_id)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    out = []
    if system.name == "201-210":
        a, b, c = [1], [0], [0]
        out.append(_accepted_201_210(a, b, c))
        for _ in range(n_max):
            a, b, c = _fast_step_201_210(a, b, c)
            out.append(_accepted_201_210(a, b, c))
    else:
        rows = [[1]]
        spread = system.name == "011-201"
        out.append(1)
        for _ in range(n_max):
            rows = _fast_step_2int(rows, diagonal_spread=spread)
            out.append(sum(map(sum, rows)))
    return out


def count_via_rules(system_id, n):
    """Number of accepted depth-n states, counted with multiplicity: the
    size of the class the system enumerates."""
    return rule_counting_sequence(system_id, n)[n]


def profile_slices_201_210(n_max):
    """Yield the (a, b, c) slices of the 201-210 DP for depths 0..n_max.

    a[k], b[k], c[k] are the counts of (k,F,F), (k,T,F), (k,T,T); the
    generating-function checks consume these directly as the coefficient
    rows of the bivariate series they verify.
    """
    a, b, c = [1], [0], [0]
    yield a, b, c
    for _ in range(n_max):
        a, b, c = _fast_step_201_210(a, b, c)
        yield a, b, c


def state_profile(system_id, n):
    """The full depth-n level vector, as a dict from state to count."""
    system = get_system(system_id)
    if n < 0:
        raise ValueError("n must be non-negative")
    level = {system.axiom: 1}
    for _ in range(n):
        level = step_fast(system, level)
    return level


# ---------- diagram output ----------


def emit_diagram(system_id, depth):
    """The first `depth` levels of the generating tree in DOT format.

    Nodes are (level, state) pairs carrying the state count at that level;
    edges carry the production multiplicity as a mult attribute when it
    exceeds one.  Meant for eyeballing small depths, not for plotting the
    DP itself.
    """
    system = get_system(system_id)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    levels = [{system.axiom: 1}]
    for _ in range(depth):
        levels.append(step(system, levels[-1]))

    def node_id(d, state):
        return '"L%d %s"' % (d, system.state_str(state))

    lines = ["digraph \"%s\" {" % system.name, "  rankdir=TB;",
             "  node [shape=box];"]
    for d, level in enumerate(levels):
        for state in sorted(level):
            lines.append("  %s [label=\"%s\", count=%d];"
                         % (node_id(d, state), system.state_str(state),
                            level[state]))
    for d, level in enumerate(levels[:-1]):
        for state in sorted(level):
            edges = {}
            for target, mult in system.successors(state):
                edges[target] = edges.get(target, 0) + mult
            for target in sorted(edges):
                mult = edges[target]
                attr = " [mult=%d]" % mult if mult > 1 else ""
                lines.append("  %s -> %s%s;"
                             % (node_id(d, state), node_id(d + 1, target), attr))
    lines.append("}")
    return "\n".join(lines) + "\n"
