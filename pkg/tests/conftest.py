"""Shared helpers for the test suite."""


def oracle_generate(j, x, y, z, n_terms):
    """Deliberately naive reference generator.

    Literal reading of the recurrence: at step k, test k-j against the
    set of every value produced so far.  O(1) membership via a set, no
    cursor tricks, no assumptions about monotonicity.  Returns (values,
    hits) with hits[i] covering step k = i + 2.
    """
    values = [x]
    seen = {x}
    hits = []
    for k in range(2, n_terms + 1):
        hit = (k - j) in seen
        hits.append(hit)
        values.append(values[-1] + (y if hit else z))
        seen.add(values[-1])
    return values, hits
