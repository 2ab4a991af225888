import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan_local.canon import brute_canonical_form, canonical_form, canonical_graph
from turan_local.enumeration import KNOWN_COUNTS, count_graphs, enumerate_graphs
from turan_local.errors import SizeLimitError
from turan_local.graph import cycle_graph, empty_graph, graph_from_edges, path_graph, relabel

from conftest import gnp, graphs


def all_labeled(n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for keep in product((0, 1), repeat=len(pairs)):
        yield graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


def test_relabeled_path_same_form():
    assert canonical_form(path_graph(3)) == canonical_form(graph_from_edges(3, [(2, 0), (0, 1)]))


def test_c5_differs_from_p5():
    assert canonical_form(cycle_graph(5)) != canonical_form(path_graph(5))


def test_four_forms_on_three_vertices():
    forms = {canonical_form(G) for G in all_labeled(3)}
    assert len(forms) == 4
    named = {canonical_form(g) for g in (empty_graph(3), graph_from_edges(3, [(0, 1)]), path_graph(3), cycle_graph(3))}
    assert forms == named


@pytest.mark.parametrize("n", [4, 5])
def test_refinement_matches_brute_force_on_all_labeled(n):
    # labeled graph count 2^C(n,2): 64 and 1024
    classes_fast: dict[bytes, bytes] = {}
    for G in all_labeled(n):
        fast, slow = canonical_form(G), brute_canonical_form(G)
        assert classes_fast.setdefault(fast, slow) == slow
    assert len(classes_fast) == KNOWN_COUNTS[n]


def test_refinement_matches_brute_force_random():
    rng = random.Random(3)
    seen: dict[bytes, bytes] = {}
    back: dict[bytes, bytes] = {}
    for _ in range(300):
        G = gnp(rng.randint(6, 7), rng.random(), rng)
        fast, slow = canonical_form(G), brute_canonical_form(G)
        assert seen.setdefault(fast, slow) == slow
        assert back.setdefault(slow, fast) == fast


def test_canonical_form_relabel_invariance():
    rng = random.Random(11)
    sample = [gnp(rng.randint(1, 10), rng.random(), rng) for _ in range(50)]
    for G in sample:
        form = canonical_form(G)
        for _ in range(100):
            perm = list(range(G.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(G, perm)) == form


def test_regular_graphs_canonicalize():
    # vertex-transitive inputs are the worst case for the search
    petersen = graph_from_edges(
        10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    perm = [3, 9, 1, 7, 5, 0, 2, 8, 4, 6]
    assert canonical_form(petersen) == canonical_form(relabel(petersen, perm))
    assert canonical_form(petersen) != canonical_form(cycle_graph(10))


def test_size_guard():
    with pytest.raises(SizeLimitError):
        canonical_form(empty_graph(11))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_counts(n):
    assert count_graphs(n) == KNOWN_COUNTS[n]
    assert sum(1 for _ in enumerate_graphs(n)) == KNOWN_COUNTS[n]


def test_enumeration_small_against_labeled_oracle():
    for n in range(1, 6):
        oracle = {canonical_form(G) for G in all_labeled(n)}
        assert {canonical_form(G) for G in enumerate_graphs(n)} == oracle


def test_enumeration_representatives_are_canonical():
    for n in range(1, 8):
        for G in enumerate_graphs(n):
            assert canonical_graph(G) == G


@pytest.mark.parametrize("n", [0, 9])
def test_enumeration_range(n):
    with pytest.raises(SizeLimitError):
        list(enumerate_graphs(n))


@settings(max_examples=60)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_graph_is_isomorphic_representative(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert canonical_graph(G) == canonical_graph(H)
    assert sorted(canonical_graph(G).degrees()) == sorted(G.degrees())
