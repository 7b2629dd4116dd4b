"""Pure-Python DP kernels; fallback when the compiled extension is absent.

Both kernels update one rolling array of exact integer counts in place,
adding one part's layer to the table.  Keep the loop bodies free of any
abstraction: this is the hot path of every table build.
"""

BACKEND = "python"


def unbounded_layer(values: list, a: int) -> None:
    """Fold in a part with unrestricted multiplicity (classical recurrence).

    Ascending order makes values[v - a] the already-updated entry, which
    is exactly the unbounded reuse.
    """
    for v in range(a, len(values)):
        values[v] += values[v - a]


def restricted_layer(values: list, offsets: list) -> None:
    """Fold in a part whose admissible positive multiples are `offsets`
    (ascending; the zero multiplicity is the implicit identity term).

    Descending order keeps every values[v - off] at its previous-layer
    value while values[v] is rewritten, so no second array is needed.
    """
    for v in range(len(values) - 1, 0, -1):
        acc = values[v]
        for off in offsets:
            if off > v:
                break
            acc += values[v - off]
        values[v] = acc
