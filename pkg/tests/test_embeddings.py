import io

import numpy as np
import pytest

from toposense.embeddings import k_nearest, load_embeddings, make_matrix
from toposense.errors import (
    DomainError,
    EmbeddingFormatError,
    NeighborCountError,
    UnknownWordError,
)

from helpers import write_embedding_file
from oracles import knn_full_sort


def load_text(text: str):
    return load_embeddings(io.StringIO(text))


class TestLoadEmbeddings:
    def test_minimal_file(self):
        matrix = load_text("2 3\ncat 1 0 0\ndog 0 1 0\n")
        assert matrix.tokens == ["cat", "dog"]
        assert matrix.dim == 3
        assert np.array_equal(matrix.vectors, [[1, 0, 0], [0, 1, 0]])

    def test_wrong_component_count_reports_line(self):
        with pytest.raises(EmbeddingFormatError, match="line 2"):
            load_text("2 3\ncat 1 0\ndog 0 1 0\n")

    def test_malformed_header(self):
        for header in ["", "2", "2 3 4", "a b", "0 3", "2 0"]:
            with pytest.raises(EmbeddingFormatError, match="line 1"):
                load_text(header + "\ncat 1 0 0\n")

    def test_duplicate_token(self):
        with pytest.raises(EmbeddingFormatError, match="duplicate.*line 3|line 3.*duplicate"):
            load_text("2 2\ncat 1 0\ncat 0 1\n")

    def test_non_finite_value(self):
        with pytest.raises(EmbeddingFormatError, match="line 2"):
            load_text("1 2\ncat nan 0\n")
        with pytest.raises(EmbeddingFormatError, match="line 3"):
            load_text("2 2\ncat 1 0\ndog inf 0\n")

    def test_bad_float(self):
        with pytest.raises(EmbeddingFormatError, match="line 2"):
            load_text("1 2\ncat 1 x\n")

    def test_row_count_mismatch(self):
        with pytest.raises(EmbeddingFormatError):
            load_text("3 2\ncat 1 0\ndog 0 1\n")
        with pytest.raises(EmbeddingFormatError):
            load_text("1 2\ncat 1 0\ndog 0 1\n")

    def test_round_trip(self, rng, tmp_path):
        tokens = [f"word{i}" for i in range(10)]
        vectors = rng.normal(size=(10, 5))
        path = tmp_path / "emb.txt"
        write_embedding_file(path, tokens, vectors)
        matrix = load_embeddings(path)
        assert matrix.tokens == tokens
        assert np.array_equal(matrix.vectors, vectors)

    def test_loads_from_binary_stream(self):
        data = io.BytesIO(b"1 2\ncat 0.5 -1.25\n")
        matrix = load_embeddings(data)
        assert matrix.row("cat").tolist() == [0.5, -1.25]

    def test_vectors_are_immutable(self):
        matrix = load_text("1 2\ncat 1 2\n")
        with pytest.raises(ValueError):
            matrix.vectors[0, 0] = 9.0


class TestKNearest:
    def test_nearest_of_two(self):
        matrix = make_matrix(["a", "b", "c"], [[0.0], [1.0], [10.0]])
        cloud = k_nearest(matrix, "a", 1)
        assert sorted(cloud.labels) == ["a", "b"]
        assert cloud.labels[cloud.center_index] == "a"

    def test_k_zero_returns_only_query(self):
        matrix = make_matrix(["a", "b"], [[0.0], [1.0]])
        cloud = k_nearest(matrix, "b", 0)
        assert cloud.labels == ["b"]
        assert len(cloud) == 1

    def test_matches_full_sort_oracle(self, rng):
        vectors = rng.normal(size=(50, 4))
        tokens = [f"w{i}" for i in range(50)]
        matrix = make_matrix(tokens, vectors)
        for metric in ("euclidean", "cosine"):
            cloud = k_nearest(matrix, "w7", 10, metric)
            expected = [tokens[r] for r in knn_full_sort(vectors, 7, 10, metric)]
            assert cloud.labels[1:] == expected
            assert len(cloud) == 11

    def test_tie_break_by_vocabulary_index(self):
        # three candidates all at distance 1 from the query
        matrix = make_matrix(
            ["q", "z", "y", "x"], [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]
        )
        cloud = k_nearest(matrix, "q", 2)
        assert cloud.labels == ["q", "z", "y"]

    def test_unknown_word(self):
        matrix = make_matrix(["a"], [[0.0]])
        with pytest.raises(UnknownWordError):
            k_nearest(matrix, "nope", 0)

    def test_k_too_large(self):
        matrix = make_matrix(["a", "b"], [[0.0], [1.0]])
        with pytest.raises(NeighborCountError):
            k_nearest(matrix, "a", 2)

    def test_cosine_rejects_zero_vector(self):
        matrix = make_matrix(["a", "b"], [[0.0, 0.0], [1.0, 0.0]])
        with pytest.raises(DomainError):
            k_nearest(matrix, "b", 1, metric="cosine")

    def test_neighbor_sets_invariant_under_row_permutation(self, rng):
        vectors = rng.normal(size=(30, 3))
        tokens = [f"w{i}" for i in range(30)]
        matrix = make_matrix(tokens, vectors)
        base = set(k_nearest(matrix, "w3", 8).labels)
        for seed in range(5):
            perm = np.random.default_rng(seed).permutation(30)
            shuffled = make_matrix(
                [tokens[p] for p in perm], vectors[perm]
            )
            assert set(k_nearest(shuffled, "w3", 8).labels) == base

    def test_neighbor_sets_invariant_under_scaling(self, rng):
        vectors = rng.normal(size=(40, 6))
        tokens = [f"w{i}" for i in range(40)]
        base = k_nearest(make_matrix(tokens, vectors), "w11", 9).labels
        for factor in (0.25, 3.0, 1e4):
            scaled = k_nearest(make_matrix(tokens, vectors * factor), "w11", 9).labels
            assert scaled == base


class TestMakeMatrix:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            make_matrix(["a", "a"], [[0.0], [1.0]])

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            make_matrix(["a"], [[0.0], [1.0]])

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            make_matrix(["a"], [[np.nan]])
