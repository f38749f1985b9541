"""Named quivers used throughout the tests, CLI, demos, and UI presets."""

from __future__ import annotations

from .quiver import QuiverSpec

_PRESETS: dict[str, QuiverSpec] = {
    # Dynkin types: finite mutation patterns, classical root counts
    "a2": QuiverSpec(2, ((1, 2, 1),)),
    "a3": QuiverSpec(3, ((1, 2, 1), (2, 3, 1))),
    "a4": QuiverSpec(4, ((1, 2, 1), (2, 3, 1), (3, 4, 1))),
    "d4": QuiverSpec(4, ((1, 2, 1), (1, 3, 1), (1, 4, 1))),
    # affine rank 2
    "kronecker": QuiverSpec(2, ((1, 2, 2),)),
    # non-acyclic: the double-arrow cycle
    "markov": QuiverSpec(3, ((1, 2, 2), (2, 3, 2), (3, 1, 2))),
    # non-acyclic: single arrows a, b plus a double arrow closing the cycle
    "atilde2": QuiverSpec(3, ((1, 2, 1), (2, 3, 1), (3, 1, 2))),
    # wild acyclic: multiplicities (1,1,2) with the double arrow on the
    # long edge, the only desk-scale orientation (see the demos)
    "wild": QuiverSpec(3, ((1, 2, 1), (2, 3, 1), (1, 3, 2))),
}


def preset(name: str) -> QuiverSpec:
    """Look up a named quiver; raises KeyError listing the valid names."""
    try:
        return _PRESETS[name.lower()]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; choose from {', '.join(sorted(_PRESETS))}"
        ) from None


def preset_names() -> tuple[str, ...]:
    return tuple(sorted(_PRESETS))
