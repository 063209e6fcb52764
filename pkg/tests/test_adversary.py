"""Adversary schedulers and the rigged bipartite start."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from decolor.adversary import (
    bad_bipartite_start,
    max_conflicted_pick,
    mimic_persistent_pick,
    min_phi_drift_pick,
    phi_drift_numerators,
    scripted_pick,
)
from decolor.coloring import Coloring, conflicted_vertices, is_conflicted
from decolor.graphs import from_edge_list, gen_clique, gen_fig2_like
from decolor.oracle import exact_expected_phi_delta


def test_bad_bipartite_start_shape():
    g, c = bad_bipartite_start(3)
    assert g.n == 6
    assert g.max_degree == 3
    assert c.palette_size == 4
    assert c.colors == [1, 1, 1, 1, 2, 3]
    # every left vertex collides with the right vertex colored 1
    assert conflicted_vertices(g, c) == [0, 1, 2, 3]


def test_bad_bipartite_start_rejects_nonpositive_delta():
    with pytest.raises(ValueError):
        bad_bipartite_start(0)
    g, c = bad_bipartite_start(1)  # degenerate but legal: a single mono edge
    assert g.n == 2 and c.colors == [1, 1] and c.palette_size == 2


@st.composite
def invalid_states(draw):
    n = draw(st.integers(2, 8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    g = from_edge_list(n, edges)
    D = draw(st.integers(2, 5))
    colors = draw(st.lists(st.integers(1, D), min_size=n, max_size=n))
    u, v = edges[draw(st.integers(0, len(edges) - 1))]
    colors[v] = colors[u]  # force at least one conflict
    return g, Coloring(colors, D)


@given(invalid_states())
@settings(max_examples=100, deadline=None)
def test_drift_numerators_match_brute_force(state):
    """The articulation-count shortcut equals recomputing the potential D times."""
    g, c = state
    conflicted = conflicted_vertices(g, c)
    nums = phi_drift_numerators(g, c, conflicted)
    D = c.palette_size
    for v, num in zip(conflicted, nums):
        assert Fraction(num, D) == exact_expected_phi_delta(g, c, v).value


def test_min_phi_drift_breaks_ties_toward_low_ids():
    g = gen_clique(3)
    c = Coloring([1, 1, 1], 3)
    # symmetric state: every vertex has the same drift
    assert min_phi_drift_pick(g, c, [0, 1, 2]) == 0
    assert min_phi_drift_pick(g, c, [1, 2]) == 1


def test_min_phi_drift_prefers_the_gadget_focus():
    g, c, focus = gen_fig2_like()
    conflicted = conflicted_vertices(g, c)
    best = min_phi_drift_pick(g, c, conflicted)
    drifts = {v: exact_expected_phi_delta(g, c, v).value for v in conflicted}
    assert drifts[best] == min(drifts.values())


def test_max_conflicted_pick():
    g = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    c = Coloring([1, 1, 1, 1], 4)
    # the hub has three same-colored neighbors, the leaves one each
    assert max_conflicted_pick(g, c, [0, 1, 2, 3]) == 0
    assert max_conflicted_pick(g, c, [1, 2, 3]) == 1


def test_mimic_sticks_until_cleared():
    g = gen_clique(3)
    c = Coloring([1, 1, 2], 3)
    rng = np.random.default_rng(0)
    assert mimic_persistent_pick(g, c, [0, 1], [1], rng, "lowest") == 1
    assert mimic_persistent_pick(g, c, [0, 1], [1], rng, "uniform") == 1
    with pytest.raises(ValueError, match="empty"):
        mimic_persistent_pick(g, c, [], [1], rng, "lowest")


def test_mimic_lowest_moves_to_next_conflicted():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    c = Coloring([1, 2, 3, 3], 3)
    rng = np.random.default_rng(0)
    # history says 0 was worked on; it is clear now, so pick the lowest conflicted
    assert mimic_persistent_pick(g, c, [2, 3], [0, 0], rng, "lowest") == 2


def test_scripted_pick_follows_and_validates():
    assert scripted_pick([2, 0], [0, 2], []) == 2
    assert scripted_pick([2, 0], [0, 2], [2]) == 0
    with pytest.raises(ValueError, match="exhausted"):
        scripted_pick([2], [0, 2], [2])
    with pytest.raises(ValueError, match="not conflicted"):
        scripted_pick([1], [0, 2], [])
