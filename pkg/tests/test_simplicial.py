import math

import pytest

from binoidal import rewrite, spectrum
from binoidal.errors import PresentationError
from binoidal.parser import parse_presentation
from binoidal.presentation import bipointed_union, smash
from binoidal.simplicial import (
    CYCLE,
    OTHER,
    POINT,
    SIMPLEX_BOUNDARY,
    cap_classification,
    connected_components,
    delta_cup_binoid,
    dimension,
    disjoint_union,
    f_vector,
    from_facets,
    minimal_nonfaces,
    product,
    recognize_simplicial,
    simplicial_binoid,
    sr_ideal,
)

PATH = from_facets(["a", "b", "c"], [["a", "b"], ["b", "c"]])
POINTS3 = from_facets(["a", "b", "c"], [["a"], ["b"], ["c"]])
TRIANGLE = from_facets(["a", "b", "c"], [["a", "b"], ["b", "c"], ["a", "c"]])
FULL3 = from_facets(["a", "b", "c"], [["a", "b", "c"]])


def full(n):
    names = [f"v{i}" for i in range(n)]
    return from_facets(names, [names])


def test_from_facets_prunes_non_maximal():
    delta = from_facets(["a", "b"], [["a", "b"], ["a"]])
    assert delta.facets == (frozenset({0, 1}),)


def test_from_facets_requires_vertex_coverage():
    with pytest.raises(PresentationError):
        from_facets(["a", "b", "c"], [["a", "b"]])


def test_from_facets_rejects_unknown_vertex_and_duplicates():
    with pytest.raises(PresentationError):
        from_facets(["a"], [["b"]])
    with pytest.raises(PresentationError):
        from_facets(["a", "a"], [["a"]])


def test_empty_complex_on_no_vertices():
    delta = from_facets([], [])
    assert dimension(delta) == -1
    assert f_vector(delta).entries == (1,)


def test_f_vector_and_dimension():
    assert f_vector(PATH).entries == (1, 3, 2)
    assert dimension(PATH) == 1
    assert f_vector(POINTS3).entries == (1, 3)
    assert dimension(POINTS3) == 0


def test_f_vector_of_full_complex_is_binomial():
    for n in range(1, 6):
        fv = f_vector(full(n)).entries
        assert fv == tuple(math.comb(n, k) for k in range(n + 1))
        assert dimension(full(n)) == n - 1


def test_minimal_nonfaces():
    assert [sorted(s) for s in minimal_nonfaces(PATH)] == [[0, 2]]
    assert minimal_nonfaces(full(4)) == []
    assert [sorted(s) for s in minimal_nonfaces(POINTS3)] == [[0, 1], [0, 2], [1, 2]]


def test_connected_components():
    two = from_facets(["a", "b", "c"], [["a", "b"], ["c"]])
    assert len(connected_components(two)) == 2
    assert len(connected_components(PATH)) == 1
    assert len(connected_components(POINTS3)) == 3


def test_simplicial_binoid_presentations():
    assert simplicial_binoid(PATH).pretty() == "free(a,b,c)/(a+c=inf)"
    assert simplicial_binoid(full(3)).pretty() == "free(v0,v1,v2)"
    two_points = from_facets(["x", "y"], [["x"], ["y"]])
    assert simplicial_binoid(two_points).pretty() == "free(x,y)/(x+y=inf)"


def test_simplicial_binoid_prefixes_numeric_vertices():
    delta = from_facets(["1", "2", "3"], [["1", "2"], ["2", "3"]])
    assert simplicial_binoid(delta).pretty() == "free(v1,v2,v3)/(v1+v3=inf)"


def test_delta_cup_binoid_counts_faces():
    p = delta_cup_binoid(PATH)
    rs = rewrite.complete(p)
    finite = rewrite.enumerate_elements(rs, p.rank)
    assert len(finite) + 1 == 7  # faces plus the absorbing element
    assert spectrum.predicates(p).boolean


def test_delta_cup_binoid_of_single_vertex_has_three_elements():
    p = delta_cup_binoid(full(1))
    rs = rewrite.complete(p)
    assert len(rewrite.enumerate_elements(rs, 3)) + 1 == 3


def test_spec_of_simplicial_binoid_matches_face_data():
    for delta in [PATH, POINTS3, TRIANGLE, FULL3, full(4)]:
        p = simplicial_binoid(delta)
        assert spectrum.f_vector(p).entries == f_vector(delta).entries
        assert spectrum.dim(p) == dimension(delta) + 1
        facets = {frozenset(f) for f in delta.facets}
        mins = {
            frozenset(range(p.rank)) - frozenset(q.gens)
            for q in spectrum.minimal_primes(p)
        }
        assert mins == facets


def test_booleanize_cardinality_is_faces_plus_one():
    for delta in [PATH, POINTS3, TRIANGLE, FULL3]:
        p = simplicial_binoid(delta)
        assert spectrum.booleanize(p).cardinality == len(delta.faces()) + 1


def test_recognize_roundtrip():
    for delta in [PATH, POINTS3, TRIANGLE, FULL3, full(4)]:
        assert recognize_simplicial(simplicial_binoid(delta)) == delta


def test_recognize_rejects_non_reduced():
    from binoidal.simplicial import NOT_REDUCED, recognize_simplicial_report

    p = parse_presentation("free(x,y)/(2x+y=inf)")
    assert recognize_simplicial(p) is None
    assert recognize_simplicial_report(p) == (None, NOT_REDUCED)


def test_recognize_rejects_non_semifree():
    from binoidal.simplicial import NOT_SEMIFREE, recognize_simplicial_report

    p = parse_presentation("free(x,y)/(2x=3y)")
    assert recognize_simplicial(p) is None
    assert recognize_simplicial_report(p) == (None, NOT_SEMIFREE)


def test_recognize_two_points():
    delta = recognize_simplicial(parse_presentation("free(x,y)/(x+y=inf)"))
    assert delta.vertices == ("x", "y")
    assert delta.facets == (frozenset({0}), frozenset({1}))


def test_recognize_drops_absorbing_generators():
    delta = recognize_simplicial(parse_presentation("free(x,y)/(y=inf)"))
    assert delta.vertices == ("x",)


def test_recognize_fully_collapsed_presentation_is_the_empty_complex():
    delta = recognize_simplicial(parse_presentation("free(x)/(x=inf)"))
    assert delta.vertices == ()
    assert dimension(delta) == -1


def test_sr_ideal_formats():
    assert sr_ideal(PATH) == "ring K[X1,X2,X3]; ideal (X1*X3)"
    assert sr_ideal(full(3)) == "ring K[X1,X2,X3]; ideal (0)"
    assert sr_ideal(POINTS3) == "ring K[X1,X2,X3]; ideal (X1*X2, X1*X3, X2*X3)"
    assert sr_ideal(PATH, fmt="macaulay2") == "R = QQ[X1,X2,X3];\nI = ideal(X1*X3);"
    assert (
        sr_ideal(PATH, fmt="singular")
        == "ring R = 0,(X1,X2,X3),dp;\nideal I = X1*X3;"
    )
    with pytest.raises(ValueError):
        sr_ideal(PATH, fmt="latex")


def test_cap_classification_boundary():
    report = cap_classification(TRIANGLE)
    assert report.component_labels == (SIMPLEX_BOUNDARY,)
    assert report.isomorphic


def test_cap_classification_square():
    square = from_facets(
        ["0", "1", "2", "3"],
        [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]],
    )
    report = cap_classification(square)
    assert report.component_labels == (CYCLE,)
    assert report.isomorphic


def test_cap_classification_other():
    delta = from_facets(
        ["1", "2", "3", "4"],
        [["1", "2"], ["1", "3"], ["1", "4"], ["2", "3"], ["3", "4"]],
    )
    report = cap_classification(delta)
    assert report.component_labels == (OTHER,)
    assert not report.isomorphic


def test_cap_classification_mixture():
    mix = disjoint_union(POINTS3, TRIANGLE)
    report = cap_classification(mix)
    assert report.component_labels == (POINT, POINT, POINT, SIMPLEX_BOUNDARY)
    assert report.isomorphic


def test_cap_path_is_other():
    assert cap_classification(PATH).component_labels == (OTHER,)


def test_disjoint_union_binoid_is_bipointed_union():
    left, right = PATH, POINTS3
    via_complex = simplicial_binoid(disjoint_union(left, right))
    via_binoids = bipointed_union(simplicial_binoid(left), simplicial_binoid(right))
    a = len(spectrum.compute_spectrum(via_complex))
    b = len(spectrum.compute_spectrum(via_binoids))
    assert a == b
    assert spectrum.f_vector(via_complex).entries == spectrum.f_vector(via_binoids).entries


def test_product_binoid_is_smash():
    left, right = PATH, POINTS3
    via_complex = simplicial_binoid(product(left, right))
    via_binoids = smash(simplicial_binoid(left), simplicial_binoid(right))
    assert len(spectrum.compute_spectrum(via_complex)) == len(
        spectrum.compute_spectrum(via_binoids)
    )
    assert (
        spectrum.f_vector(via_complex).entries
        == spectrum.f_vector(via_binoids).entries
    )


def test_cone_shifts_the_f_vector():
    point = from_facets(["p"], [["p"]])
    cone = product(PATH, point)
    base = f_vector(PATH).entries
    got = f_vector(cone).entries
    # each face of the cone is a face of the base or one joined with the apex
    expected = [base[0]] + [
        (base[i] if i < len(base) else 0) + base[i - 1]
        for i in range(1, len(base) + 1)
    ]
    assert got == tuple(v for v in expected if v)
