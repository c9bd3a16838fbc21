"""Pure-Python kernels for the hot relation-algebra loops.

A relation on an n-element ground set (n <= 64) is a tuple of n ints; bit j of
row i is set iff the pair (i, j) is in the relation.  All kernels here have a
compiled twin in ``quolat._fast`` with identical semantics, including discovery
order, so the two backends are interchangeable (see ``quolat.kernel``).
"""

from __future__ import annotations

STOP_TARGET = 0
STOP_BUDGET = 1
STOP_SATURATED = 2

STOP_REASONS = ("target-atoms-found", "budget-exceeded", "saturated")


class CapacityError(RuntimeError):
    """Raised when a saturation run exceeds its element limit."""


def transitive_closure(rows):
    """Reflexive-transitive closure of a reflexive relation (bitset Warshall)."""
    out = list(rows)
    n = len(out)
    for k in range(n):
        rk = out[k]
        bit = 1 << k
        for i in range(n):
            if out[i] & bit:
                out[i] |= rk
    return tuple(out)


def join_rows(a, b):
    """Least quasiorder containing both operands."""
    return transitive_closure(tuple(x | y for x, y in zip(a, b)))


def meet_rows(a, b):
    return tuple(x & y for x, y in zip(a, b))


def is_transitive(rows):
    for i, ri in enumerate(rows):
        acc = 0
        rest = ri
        while rest:
            j = (rest & -rest).bit_length() - 1
            acc |= rows[j]
            rest &= rest - 1
        if acc & ~ri:
            return False
    return True


def saturate_join(seeds, atoms, limit):
    """Breadth-first join saturation: repeatedly join frontier elements with
    each atom, deduplicating by row tuple.  Discovery order is deterministic.
    """
    elements = []
    index = {}
    for r in seeds:
        if r not in index:
            if len(elements) >= limit:
                raise CapacityError("saturation exceeded element limit %d" % limit)
            index[r] = len(elements)
            elements.append(r)
    frontier = range(len(elements))
    while frontier:
        first_new = len(elements)
        for i in frontier:
            base = elements[i]
            for at in atoms:
                cand = join_rows(base, at)
                if cand not in index:
                    if len(elements) >= limit:
                        raise CapacityError(
                            "saturation exceeded element limit %d" % limit
                        )
                    index[cand] = len(elements)
                    elements.append(cand)
        frontier = range(first_new, len(elements))
    return elements


def pair_closure(gens, max_elements, max_depth, targets, want_elements):
    """Meet/join closure of ``gens``, breadth-first by derivation depth.

    Depth d+1 elements are all meets and joins of pairs with both operands of
    depth <= d and at least one of depth d; each unordered pair is visited
    once, meet before join.  Stops as soon as every target is present, the
    element budget (or depth cap) is exceeded, or the set saturates.

    Returns ``(count, depth_reached, stop, found_positions, elements, depths)``
    where ``stop`` indexes ``STOP_REASONS`` and ``found_positions`` lists the
    indices into ``targets`` that were discovered.  ``elements``/``depths`` are
    None unless ``want_elements``.
    """
    elements = []
    depths = []
    index = {}
    target_pos = {}
    if targets:
        for pos, t in enumerate(targets):
            target_pos.setdefault(t, pos)
    found = set()

    def result(stop):
        positions = sorted(found)
        depth_reached = depths[-1] if depths else 0
        if want_elements:
            return len(elements), depth_reached, stop, positions, elements, depths
        return len(elements), depth_reached, stop, positions, None, None

    def insert(cand, depth):
        """Returns the stop code if the run must end, else None."""
        if cand in index:
            return None
        if len(elements) >= max_elements:
            return STOP_BUDGET
        index[cand] = len(elements)
        elements.append(cand)
        depths.append(depth)
        if target_pos:
            pos = target_pos.get(cand)
            if pos is not None:
                found.add(pos)
                if len(found) == len(target_pos):
                    return STOP_TARGET
        return None

    for g in gens:
        stop = insert(g, 0)
        if stop is not None:
            return result(stop)
    level_start, level_end = 0, len(elements)
    depth = 0
    while True:
        if max_depth is not None and depth >= max_depth:
            return result(STOP_BUDGET)
        for i in range(level_start, level_end):
            a = elements[i]
            for j in range(i):
                b = elements[j]
                stop = insert(meet_rows(a, b), depth + 1)
                if stop is not None:
                    return result(stop)
                stop = insert(join_rows(a, b), depth + 1)
                if stop is not None:
                    return result(stop)
        if len(elements) == level_end:
            return result(STOP_SATURATED)
        depth += 1
        level_start, level_end = level_end, len(elements)


def table_closure(meet_tab, join_tab, n_elements, subset, required):
    """Closure of ``subset`` (element ids) under table-driven meet and join.

    ``required`` is a sequence of ids; the run exits early once all of them are
    reached.  Returns ``(all_required_reached, reached_count)``.
    """
    member = bytearray(n_elements)
    known = []
    for s in subset:
        if not member[s]:
            member[s] = 1
            known.append(s)
    need = set()
    for r in required:
        if not member[r]:
            need.add(r)
    if not need:
        return True, len(known)
    frontier = list(known)
    while frontier:
        new = []
        for a in frontier:
            base = a * n_elements
            for b in known:
                for cand in (meet_tab[base + b], join_tab[base + b]):
                    if not member[cand]:
                        member[cand] = 1
                        new.append(cand)
                        if cand in need:
                            need.discard(cand)
                            if not need:
                                return True, len(known) + len(new)
        known.extend(new)
        frontier = new
    return False, len(known)


def canonical_subset(subset, perms_flat, n_perms, n_elements):
    """Lexicographically least image of a sorted id tuple under the given
    element permutations (flattened row-major)."""
    best = tuple(sorted(subset))
    for p in range(n_perms):
        base = p * n_elements
        cand = tuple(sorted(perms_flat[base + i] for i in subset))
        if cand < best:
            best = cand
    return best
