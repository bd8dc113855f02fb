import math
import random

import numpy as np
import pytest

from litcompare.alignment import (
    EmbeddingProvider,
    MaskMatrix,
    Property,
    align_properties,
    cosine,
    group_properties,
    mask_matrix,
    naive_align,
    similarity_matrix,
    slice_mask,
    symmetrize,
)
from litcompare.errors import NotFoundError, ValidationError
from litcompare.graph import Literal
from litcompare.selection import select_related

from conftest import make_contribution


# -- embedding ------------------------------------------------------------------


def test_single_token_embeds_to_its_vector(vector_provider):
    assert np.allclose(vector_provider.embed_label("population"), [1.0, 0.0, 0.0])


def test_two_token_label_embeds_to_mean(vector_provider):
    # hand average of (1,0,0) and (0.92,0.56,0)
    assert np.allclose(vector_provider.embed_label("population total"), [0.96, 0.28, 0.0])


def test_camel_case_label_embeds_like_spaced(vector_provider):
    assert np.allclose(
        vector_provider.embed_label("populationTotal"),
        vector_provider.embed_label("population total"),
    )


def test_unknown_tokens_embed_to_zero(vector_provider):
    vec = vector_provider.embed_label("completely unknown words")
    assert np.allclose(vec, 0.0)
    assert cosine(vec, vector_provider.embed_label("population")) == 0.0


def test_vector_file_roundtrip(tmp_path):
    path = tmp_path / "vectors.txt"
    path.write_text("2 3\nfoo 1 0 0\nbar 0 1 0\n", encoding="utf-8")
    provider = EmbeddingProvider.from_file(path)
    assert provider.dim == 3
    assert np.allclose(provider.embed_label("foo"), [1, 0, 0])


def test_vector_file_without_header(tmp_path):
    path = tmp_path / "vectors.txt"
    path.write_text("foo 1 0\nbar 0 1\n", encoding="utf-8")
    provider = EmbeddingProvider.from_file(path)
    assert provider.dim == 2


# -- similarity matrix ------------------------------------------------------------


def test_identical_labels_cosine_one(vector_provider):
    props = [Property("P1", "population"), Property("P2", "population")]
    gamma = similarity_matrix(props, vector_provider)
    assert gamma.value("P1", "P2") == pytest.approx(1.0)


def test_fixture_cosine_point_nine_six(vector_provider):
    props = [Property("P1", "population"), Property("P2", "population total")]
    gamma = similarity_matrix(props, vector_provider)
    assert gamma.value("P1", "P2") == pytest.approx(0.96)
    assert gamma.value("P1", "P2") >= 0.9


def test_orthogonal_vectors_not_similar(vector_provider):
    props = [Property("P1", "population"), Property("P2", "orthogonal")]
    gamma = similarity_matrix(props, vector_provider)
    assert gamma.value("P1", "P2") == pytest.approx(0.0)
    assert gamma.value("P1", "P2") < 0.9


def test_matrix_symmetric_unit_diagonal(vector_provider):
    props = [Property(f"P{i}", lab) for i, lab in enumerate(["population", "total", "orthogonal"])]
    gamma = similarity_matrix(props, vector_provider)
    assert np.allclose(gamma.matrix, gamma.matrix.T)
    assert np.allclose(np.diag(gamma.matrix), 1.0)
    assert np.all(gamma.matrix <= 1 + 1e-9) and np.all(gamma.matrix >= -1 - 1e-9)


def test_each_label_embedded_once(vector_provider):
    props = [Property(f"P{i}", "population") for i in range(5)] + [Property("P9", "total")]
    vector_provider.embed_calls = 0
    similarity_matrix(props, vector_provider)
    assert vector_provider.embed_calls == 2  # two distinct labels


# -- align / group ------------------------------------------------------------------


def abc_properties():
    return [Property("Pa", "alpha"), Property("Pb", "beta"), Property("Pc", "gamma")]


def test_align_chain_pairs(vector_provider):
    # cos(alpha,beta)=0.95, cos(beta,gamma)=0.92, cos(alpha,gamma)<0.9
    pairs = align_properties(abc_properties(), 0.9, vector_provider)
    assert pairs == {("Pa", "Pb"), ("Pb", "Pc")}


def test_align_all_identical_labels(vector_provider):
    props = [Property(f"P{i}", "population") for i in range(3)]
    pairs = align_properties(props, 0.9, vector_provider)
    assert pairs == {("P0", "P1"), ("P0", "P2"), ("P1", "P2")}


def test_tau_one_keeps_only_exact_labels(vector_provider):
    props = abc_properties() + [Property("Pd", "alpha")]
    pairs = align_properties(props, 1.0, vector_provider)
    assert pairs == {("Pa", "Pd")}


def test_exact_labels_pair_even_when_out_of_vocabulary(vector_provider):
    props = [Property("P1", "unknownword"), Property("P2", "unknownword")]
    assert align_properties(props, 0.9, vector_provider) == {("P1", "P2")}


def test_group_transitive_closure(vector_provider):
    groups = group_properties({("Pa", "Pb"), ("Pb", "Pc")}, abc_properties())
    assert len(groups) == 1
    assert groups[0].members == ("Pa", "Pb", "Pc")


def test_no_pairs_singleton_groups(vector_provider):
    groups = group_properties(set(), abc_properties())
    assert len(groups) == 3
    assert all(len(g.members) == 1 for g in groups)


def test_two_clusters_partition(vector_provider):
    props = abc_properties() + [Property("Pd", "x"), Property("Pe", "y")]
    groups = group_properties({("Pa", "Pb"), ("Pd", "Pe")}, props)
    members = sorted(m for g in groups for m in g.members)
    assert members == ["Pa", "Pb", "Pc", "Pd", "Pe"]
    assert sorted(len(g.members) for g in groups) == [1, 2, 2]


def test_representative_label_most_used_then_lexicographic():
    props = [Property("P1", "zebra"), Property("P2", "apple"), Property("P3", "mango")]
    used_by = {"P1": frozenset({"C1", "C2"}), "P2": frozenset({"C1"}), "P3": frozenset()}
    groups = group_properties({("P1", "P2"), ("P2", "P3")}, props, used_by)
    assert groups[0].representative_label == "zebra"
    assert groups[0].support_count == 2
    tied = group_properties({("P1", "P2")}, props[:2], {"P1": frozenset({"C1"}), "P2": frozenset({"C2"})})
    assert tied[0].representative_label == "apple"  # tie broken lexicographically


def test_group_size_monotone_in_threshold(vector_provider):
    rng = random.Random(5)
    tokens = [f"w{i}" for i in range(12)]
    provider = EmbeddingProvider({t: [rng.gauss(0, 1) for _ in range(6)] for t in tokens})
    props = [Property(f"P{i}", rng.choice(tokens) + " " + rng.choice(tokens)) for i in range(15)]
    taus = [0.99, 0.9, 0.7, 0.5, 0.3]
    for hi, lo in zip(taus, taus[1:]):
        hi_groups = group_properties(align_properties(props, hi, provider), props)
        lo_groups = group_properties(align_properties(props, lo, provider), props)
        # lowering tau only merges: every high-tau group is inside a low-tau group
        for g in hi_groups:
            assert any(set(g.members) <= set(g2.members) for g2 in lo_groups)


# -- mask / slice ----------------------------------------------------------------


def test_mask_matrix_direct(store):
    c1 = make_contribution(store, "C1", "prob")
    c2 = make_contribution(store, "C2", "prob")
    p1 = store.create_predicate("zp1")
    p2 = store.create_predicate("zp2")
    store.add_statement(c1, p1, Literal("x"))
    store.add_statement(c1, p2, Literal("x"))
    store.add_statement(c2, p2, Literal("x"))
    subgraphs = select_related(store, [c1, c2])
    props = [Property(p1, "zp1"), Property(p2, "zp2")]
    mask = mask_matrix(subgraphs, props)
    assert mask.matrix.tolist() == [[1, 1], [0, 1]]


def test_mask_empty_subgraph_all_zero_row(store):
    c1 = make_contribution(store, "C1", "prob")
    c2 = make_contribution(store, "C2", "prob")
    p1 = store.create_predicate("zp1")
    store.add_statement(c1, p1, Literal("x"))
    subgraphs = select_related(store, [c1, c2])
    mask = mask_matrix(subgraphs, [Property(p1, "zp1")])
    assert mask.matrix.tolist() == [[1], [0]]


def test_mask_random_matches_membership_oracle(store):
    rng = random.Random(9)
    contributions = [make_contribution(store, f"C{i}", "prob") for i in range(5)]
    predicates = [store.create_predicate(f"qp{i}") for i in range(8)]
    usage = {(c, p): False for c in contributions for p in predicates}
    for c in contributions:
        for p in rng.sample(predicates, k=rng.randrange(0, 8)):
            store.add_statement(c, p, Literal("v"))
            usage[(c, p)] = True
    subgraphs = select_related(store, contributions)
    props = [Property(p, store.predicate(p).label) for p in predicates]
    mask = mask_matrix(subgraphs, props)
    for i, c in enumerate(mask.contributions):
        for j, p in enumerate(mask.properties):
            assert mask.matrix[i, j] == int(usage[(c, p)])


def test_slice_single_column(vector_provider):
    props = [Property("Pa", "alpha"), Property("Pc", "gamma")]
    gamma = similarity_matrix(props, vector_provider)
    mask = MaskMatrix(("C1",), ("Pa", "Pc"), np.array([[1, 0]]))
    sliced = slice_mask(mask, gamma, "Pa", 0.99)
    assert sliced.columns == ("Pa",)
    assert sliced.matrix.tolist() == [[1]]


def test_slice_uses_raw_cosines_not_transitivity(vector_provider):
    props = abc_properties()
    gamma = similarity_matrix(props, vector_provider)
    mask = MaskMatrix(("C1", "C2"), ("Pa", "Pb", "Pc"), np.array([[1, 1, 0], [0, 1, 1]]))
    sliced = slice_mask(mask, gamma, "Pa", 0.9)
    # sim(alpha) = {alpha, beta}: gamma(alpha, gamma-label) < 0.9 even though
    # grouping would merge all three transitively
    assert sliced.columns == ("Pa", "Pb")


def test_slice_unknown_property(vector_provider):
    props = abc_properties()
    gamma = similarity_matrix(props, vector_provider)
    mask = MaskMatrix(("C1",), ("Pa", "Pb", "Pc"), np.array([[1, 1, 1]]))
    with pytest.raises(NotFoundError):
        slice_mask(mask, gamma, "Pz", 0.9)


def test_tau_one_distinct_labels_all_slices_single(vector_provider):
    props = abc_properties()
    gamma = similarity_matrix(props, vector_provider)
    mask = MaskMatrix(("C1",), tuple(p.id for p in props), np.array([[1, 1, 1]]))
    for p in props:
        assert slice_mask(mask, gamma, p.id, 1.0).columns == (p.id,)


# -- naive oracle -----------------------------------------------------------------


def test_naive_equals_optimized_on_fixture(vector_provider):
    props = abc_properties()
    assert symmetrize(naive_align(props, 0.9, vector_provider)) == align_properties(
        props, 0.9, vector_provider
    )


def test_naive_call_count_quadratic(vector_provider):
    props = abc_properties()
    vector_provider.embed_calls = 0
    naive_align(props, 0.9, vector_provider)
    assert vector_provider.embed_calls == 2 * len(props) ** 2
    vector_provider.embed_calls = 0
    align_properties(props, 0.9, vector_provider)
    assert vector_provider.embed_calls <= len({p.label for p in props})


def test_naive_equivalence_random_instances():
    rng = random.Random(17)
    tokens = [f"t{i}" for i in range(20)]
    provider = EmbeddingProvider({t: [rng.gauss(0, 1) for _ in range(5)] for t in tokens})
    for _ in range(30):
        n = rng.randrange(2, 51)
        props = [
            Property(f"P{i:02d}", " ".join(rng.sample(tokens, rng.randrange(1, 3))))
            for i in range(n)
        ]
        tau = rng.choice([0.5, 0.7, 0.9, 0.95])
        optimized = group_properties(align_properties(props, tau, provider), props)
        naive = group_properties(symmetrize(naive_align(props, tau, provider)), props)
        assert [g.members for g in optimized] == [g.members for g in naive]


def test_empty_properties_rejected(vector_provider):
    with pytest.raises(ValidationError):
        similarity_matrix([], vector_provider)
