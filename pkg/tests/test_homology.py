import random

import pytest
from sympy import Matrix, isprime

from src.buildset.element_set import ElementSet, iter_submasks
from src.complexes.nested import even_complex, induced_parity_subcomplex, nested_set_complex, odd_complex
from src.complexes.simplicial import SimplicialComplex
from src.homology.betti import BettiVector, euler_characteristic, reduced_betti
from src.homology.chains import boundary_matrices
from src.homology.linalg import bareiss_rank, modular_rank, random_prime, sparse_integer_rank
from tests.builders import connected_chordal_building_sets, six_label_instances


def _random_matrix(rng, rows, cols):
    return [[rng.choice([-2, -1, 0, 0, 0, 1, 2]) for _ in range(cols)] for _ in range(rows)]


def _sparse_rows(matrix):
    return [{c: v for c, v in enumerate(row) if v} for row in matrix]


def alexander_dual(complex_):
    n = len(complex_.vertices)
    full = (1 << n) - 1
    return SimplicialComplex(complex_.vertices, [full & ~f for f in range(full + 1) if f not in complex_.faces])


def random_complex(rng, n, facets=4):
    vertices = list(range(n))
    chosen = [rng.sample(vertices, rng.randint(1, n - 1)) for _ in range(facets)]
    return SimplicialComplex.from_facets(vertices, chosen)


# ============================================================================
# RANK
# ============================================================================

def test_small_ranks():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[2, 4], [1, 3]]) == 2
    assert bareiss_rank([]) == 0
    assert sparse_integer_rank([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1
    assert modular_rank([{0: 3}, {1: 5}], 3) == 1


def test_ranks_match_sympy():
    rng = random.Random(11)
    for _ in range(40):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        matrix = _random_matrix(rng, rows, cols)
        expected = Matrix(matrix).rank()
        assert bareiss_rank(matrix) == expected
        assert sparse_integer_rank(_sparse_rows(matrix)) == expected
        assert modular_rank(_sparse_rows(matrix), random_prime(rng)) == expected


def test_random_prime_is_62_bits():
    prime = random_prime(random.Random(3))
    assert isprime(prime)
    assert prime.bit_length() == 62


# ============================================================================
# BETTI NUMBERS
# ============================================================================

def test_betti_vector_accessors():
    betti = BettiVector.from_degrees({-1: 0, 0: 0, 1: 1, 2: 0})
    assert betti.values == (0, 0, 1)
    assert betti[1] == 1 and betti[5] == 0 and betti[-3] == 0
    assert betti.nonzero_degrees() == (1,)
    assert betti.is_concentrated_in(1)
    assert betti.as_dict() == {1: 1}
    assert betti.euler_characteristic() == -1
    assert BettiVector.from_degrees({}).is_zero()


def test_void_empty_and_point():
    void = reduced_betti(SimplicialComplex.void())
    assert void.void and void.is_zero()
    assert reduced_betti(SimplicialComplex([], [0])).as_dict() == {-1: 1}
    point = reduced_betti(SimplicialComplex.from_facets("v", ["v"]))
    assert point.values == () and not point.void
    assert reduced_betti(SimplicialComplex.from_facets("ab", ["a", "b"])).as_dict() == {0: 1}


def test_circle_euler_characteristic():
    circle = SimplicialComplex.from_facets("abc", ["ab", "bc", "ac"])
    assert reduced_betti(circle).as_dict() == {1: 1}
    assert euler_characteristic(circle) == 0
    assert euler_characteristic(circle, reduced=True) == -1


@pytest.mark.parametrize("fixture", ["maximal4", "path4"])
def test_nested_complexes_are_spheres(request, fixture):
    complex_ = nested_set_complex(request.getfixturevalue(fixture))
    assert boundary_matrices(complex_).is_chain_complex()
    assert reduced_betti(complex_).as_dict() == {2: 1}


def test_rank_paths_agree(example_building_set, hoch_2_4):
    rng = random.Random(5)
    for b in [example_building_set, hoch_2_4] + six_label_instances():
        ground = b.ground.mask
        for mask in iter_submasks(ground):
            subset = ElementSet(mask)
            if len(subset) % 2:
                continue
            complex_ = induced_parity_subcomplex(b, subset)
            exact = reduced_betti(complex_)
            assert reduced_betti(complex_, dense_limit=0) == exact
            assert reduced_betti(complex_, fast=True, rng=rng) == exact
            assert reduced_betti(complex_, cross_check=True, rng=rng) == exact


def test_alexander_duality():
    rng = random.Random(19)
    for _ in range(25):
        n = rng.randint(3, 6)
        complex_ = random_complex(rng, n)
        dual = alexander_dual(complex_)
        betti, dual_betti = reduced_betti(complex_), reduced_betti(dual)
        for degree in range(-1, n - 1):
            assert betti[degree] == dual_betti[n - degree - 3]


def test_odd_and_even_complexes_are_alexander_dual(hoch_2_4):
    # both are full subcomplexes of the sphere K_B on complementary vertex sets
    for b in connected_chordal_building_sets(4) + [hoch_2_4] + six_label_instances():
        size = len(b.ground)
        odd, even = reduced_betti(odd_complex(b)), reduced_betti(even_complex(b))
        for degree in range(-1, size - 1):
            assert odd[degree] == even[size - 3 - degree], b


def test_betti_numbers_ignore_vertex_order():
    rng = random.Random(23)
    for b in connected_chordal_building_sets(4) + six_label_instances(count=2):
        for complex_ in (nested_set_complex(b), odd_complex(b), even_complex(b)):
            order = list(range(len(complex_.vertices)))
            rng.shuffle(order)
            shuffled = complex_.relabeled(lambda v: ("vertex", v), order)
            assert reduced_betti(shuffled) == reduced_betti(complex_)
