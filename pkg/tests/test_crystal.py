"""Root operators, tensor rule, crystal generation, characters, isomorphism."""

from fractions import Fraction

import pytest

from demtensor.cartan import root_system, vadd, vsub
from demtensor.crystal import (
    CharPoly,
    MultipleHighestWeights,
    TensorElement,
    character,
    components_of,
    e_op,
    emax,
    eps,
    f_op,
    f_string_closure,
    fmax,
    generate_crystal,
    graph_on,
    induced_component,
    is_isomorphic,
    phi,
    reflection_lift,
    tensor_product_elements,
    to_dot,
    weight_of,
)
from demtensor.lspath import concatenate, straight_path

A2 = root_system("A", 2)
A1 = root_system("A", 1)
B2 = root_system("B", 2)
F = Fraction


def weyl_dim(rs, lam):
    """Independent size oracle: the dimension product formula over positive roots."""
    rho = (1,) * rs.rank
    num, den = 1, 1
    for beta in rs.positive_roots:
        num *= rs.root_pairing(vadd(lam, rho), beta)
        den *= rs.root_pairing(rho, beta)
    assert num % den == 0
    return num // den


def test_operators_on_straight_paths():
    lam = (1, 1)
    top = straight_path(A2, lam)
    for i in (1, 2):
        assert e_op(top, i) is None
    # height of the second fundamental weight against the first coroot is zero
    assert f_op(straight_path(A2, (0, 1)), 1) is None
    assert f_op(straight_path(A2, (1, 0)), 1) == straight_path(A2, (1, 0), (-1, 1))


def test_operator_weight_bookkeeping():
    x = straight_path(A2, (1, 1))
    y = f_op(x, 1)
    assert weight_of(y) == vsub(weight_of(x), A2.simple_roots[0].fw)
    assert e_op(y, 1) == x


def test_operator_cuts_segment():
    # lowering the straight (2,-1) path cuts it at time 1/2
    x = straight_path(A2, (1, 1), (2, -1))
    y = f_op(x, 1)
    assert y.directions == ((-2, 1), (2, -1))
    assert y.breaks == (F(0), F(1, 2), F(1))
    assert y.validate() is None
    assert e_op(y, 1) == x


def test_eps_phi_examples():
    lam = (1, 1)
    top = straight_path(A2, lam)
    assert eps(top, 1) == 0 and eps(top, 2) == 0
    assert phi(straight_path(A2, (1, 0)), 1) == 1
    assert phi(straight_path(A2, (1, 0)), 2) == 0
    assert phi(top, 1) == 1


def test_eps_phi_axiom():
    for lam in [(1, 0), (1, 1), (2, 0)]:
        for x in generate_crystal(A2, lam):
            for i in (1, 2):
                assert phi(x, i) == eps(x, i) + A2.pairing(weight_of(x), i)


def test_tensor_rule_examples():
    lam, mu = (1, 1), (1, 0)
    top = TensorElement(straight_path(A2, lam), straight_path(A2, mu))
    # phi_1(left) = 1 > 0 = eps_1(right): the left factor moves
    moved = f_op(top, 1)
    assert moved == TensorElement(f_op(straight_path(A2, lam), 1), straight_path(A2, mu))
    # with the right factor already lowered, color 2 still moves the left factor
    x = TensorElement(straight_path(A2, lam), f_op(straight_path(A2, mu), 1))
    y = f_op(x, 2)
    assert y == TensorElement(f_op(straight_path(A2, lam), 2), f_op(straight_path(A2, mu), 1))
    # raising that is null in the chosen factor is null overall
    assert e_op(top, 1) is None and e_op(top, 2) is None


def test_tensor_eps_phi_closed_form_matches_iteration():
    crystal = generate_crystal(A2, (1, 0))
    for a in crystal:
        for b in crystal:
            x = TensorElement(a, b)
            for i in (1, 2):
                n = 0
                y = e_op(x, i)
                while y is not None:
                    n += 1
                    y = e_op(y, i)
                assert eps(x, i) == n
                n = 0
                y = f_op(x, i)
                while y is not None:
                    n += 1
                    y = f_op(y, i)
                assert phi(x, i) == n


def test_emax_fmax():
    x = straight_path(A2, (1, 0))
    assert emax(x, 1) == x
    assert fmax(x, 1) == straight_path(A2, (1, 0), (-1, 1))
    assert e_op(emax(fmax(x, 1), 1), 1) is None


def test_reflection_lift():
    x = straight_path(A2, (0, 1))
    assert reflection_lift(x, 1) == x  # pairing zero
    assert reflection_lift(straight_path(A2, (1, 0)), 1) == straight_path(A2, (1, 0), (-1, 1))
    for x in generate_crystal(A2, (1, 1)):
        for i in (1, 2):
            assert weight_of(reflection_lift(x, i)) == A2.simple_reflect(weight_of(x), i)
            # applying the lift twice returns to the start
            assert reflection_lift(reflection_lift(x, i), i) == x


@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_rank_one_string_lengths(m):
    crystal = generate_crystal(A1, (m,))
    assert len(crystal) == m + 1 == weyl_dim(A1, (m,))


@pytest.mark.parametrize(
    "rs,lam",
    [
        (A2, (1, 0)),
        (A2, (0, 1)),
        (A2, (1, 1)),
        (A2, (2, 0)),
        (A2, (2, 1)),
        (B2, (1, 0)),
        (B2, (0, 1)),
        (B2, (1, 1)),
        (root_system("G", 2), (1, 0)),
        (root_system("G", 2), (0, 1)),
        (root_system("A", 3), (1, 0, 0)),
        (root_system("A", 3), (0, 1, 0)),
    ],
)
def test_crystal_sizes_match_dimension_formula(rs, lam):
    assert len(generate_crystal(rs, lam)) == weyl_dim(rs, lam)


def test_known_small_dimensions():
    # frozen values from the classification of small representations
    assert len(generate_crystal(root_system("G", 2), (1, 0))) == 7
    assert len(generate_crystal(root_system("G", 2), (0, 1))) == 14
    assert len(generate_crystal(root_system("A", 3), (0, 1, 0))) == 6
    assert len(generate_crystal(B2, (1, 0))) == 5
    assert len(generate_crystal(B2, (0, 1))) == 4


def test_generated_paths_are_valid():
    for lam in [(1, 0), (1, 1), (2, 0), (1, 2)]:
        for x in generate_crystal(A2, lam):
            assert x.validate() is None
            assert x.shape == lam


def test_character_basics():
    lam = (1, 1)
    assert character([straight_path(A2, lam)]) == CharPoly.monomial(lam)
    ch = character(generate_crystal(A2, (1, 0)))
    assert ch == (
        CharPoly.monomial((1, 0)) + CharPoly.monomial((-1, 1)) + CharPoly.monomial((0, -1))
    )


def test_character_is_weyl_invariant():
    for rs, lam in [(A2, (1, 1)), (A2, (2, 1)), (B2, (1, 1))]:
        ch = character(generate_crystal(rs, lam))
        for i in range(1, rs.rank + 1):
            reflected = CharPoly({rs.simple_reflect(w, i): c for w, c in ch.terms.items()})
            assert reflected == ch


def test_character_multiplicativity():
    a = generate_crystal(A2, (1, 0))
    b = generate_crystal(A2, (1, 1))
    prod = tensor_product_elements(a.vertices, b.vertices)
    assert character(prod) == character(a) * character(b)


def test_tensor_agrees_with_concatenation():
    # the tensor rule and the root operators on concatenated paths agree
    for lam, mu in [((1, 0), (1, 0)), ((1, 1), (1, 0))]:
        left = generate_crystal(A2, lam)
        right = generate_crystal(A2, mu)
        for a in left:
            for b in right:
                x = TensorElement(a, b)
                raw = concatenate(a, b)
                for i in (1, 2):
                    for op in (f_op, e_op):
                        y = op(x, i)
                        z = op(raw, i)
                        if y is None:
                            assert z is None
                        else:
                            assert z == concatenate(y.left, y.right)


def test_full_tensor_partition_into_dominant_components():
    # the product of two full crystals splits along dominant paths of the right factor
    lam, mu = (1, 1), (1, 0)
    left = generate_crystal(A2, lam)
    right = generate_crystal(A2, mu)
    prod = tensor_product_elements(left.vertices, right.vertices)
    dominant = [b for b in right if b.is_dominant_for(lam)]
    top = straight_path(A2, lam)
    comps = []
    for piel in dominant:
        comp = induced_component(A2, TensorElement(top, piel), prod)
        comps.append(comp)
        # and each component matches the full crystal of the shifted weight
        target = generate_crystal(A2, vadd(lam, weight_of(piel)))
        assert is_isomorphic(A2, comp, frozenset(target.vertices))
    assert sum(len(c) for c in comps) == len(prod)
    assert frozenset().union(*comps) == prod
    assert comps == components_of(A2, prod)[: len(comps)] or len(comps) == len(
        components_of(A2, prod)
    )


def test_induced_component_whole_crystal():
    crystal = generate_crystal(A2, (1, 1))
    members = frozenset(crystal.vertices)
    comp = induced_component(A2, crystal.vertices[0], members)
    assert comp == members
    with pytest.raises(ValueError):
        induced_component(A2, straight_path(A2, (5, 5)), members)


def test_f_string_closure():
    x = straight_path(A2, (1, 0))
    closure = f_string_closure([x], 1)
    assert closure == {x, f_op(x, 1)}


def test_is_isomorphic_self_and_shifted():
    crystal = generate_crystal(A2, (1, 0))
    members = frozenset(crystal.vertices)
    assert is_isomorphic(A2, members, members)
    # a different shape of the same size is not isomorphic (weights differ)
    other = frozenset(generate_crystal(A2, (0, 1)).vertices)
    assert not is_isomorphic(A2, members, other)


def test_is_isomorphic_rejects_multiple_tops():
    a = straight_path(A2, (1, 0))
    b = straight_path(A2, (0, 1))
    with pytest.raises(MultipleHighestWeights):
        is_isomorphic(A2, frozenset([a, b]), frozenset([a]))


def test_graph_on_and_dot_determinism():
    crystal = generate_crystal(A2, (1, 0))
    graph = graph_on(A2, crystal.vertices)
    assert len(graph.edges) == 2
    assert graph.highest_weight_vertices == (straight_path(A2, (1, 0)),)
    dot1 = to_dot(graph)
    dot2 = to_dot(graph_on(A2, crystal.vertices))
    assert dot1 == dot2
    assert "label=1" in dot1 and "label=2" in dot1


def test_i_strings_partition():
    crystal = generate_crystal(A2, (1, 1))
    for i in (1, 2):
        strings = crystal.i_strings(i)
        seen = [x for s in strings for x in s]
        assert len(seen) == len(set(seen)) == len(crystal)
        for s in strings:
            assert e_op(s[0], i) is None
            for a, b in zip(s, s[1:]):
                assert f_op(a, i) == b


def enumerate_valid_paths(rs, lam):
    """Brute-force oracle: every normal-form path satisfying the validity
    clauses, built from explicit direction chains and candidate breakpoints."""
    from demtensor.lspath import make_path
    from demtensor.weyl import weyl_group
    from itertools import combinations

    group = weyl_group(rs)
    poset = group.orbit_poset(lam)
    points = list(poset.points)
    candidates = set()
    for mu in points:
        for beta in rs.positive_roots:
            pairing = abs(rs.root_pairing(mu, beta))
            for k in range(1, pairing):
                candidates.add(Fraction(k, pairing))
    candidates = sorted(candidates)
    # all strictly decreasing direction chains
    chains = [[mu] for mu in points]
    out = set()
    while chains:
        chain = chains.pop()
        r = len(chain)
        if r == 1:
            out.add(make_path(rs, lam, tuple(chain), (Fraction(0), Fraction(1))))
        else:
            for breaks in combinations(candidates, r - 1):
                pi = make_path(rs, lam, tuple(chain), (Fraction(0),) + breaks + (Fraction(1),))
                if pi.validate() is None:
                    out.add(pi)
        for nxt in points:
            if nxt != chain[-1] and poset.leq(nxt, chain[-1]):
                chains.append(chain + [nxt])
    return out


@pytest.mark.parametrize("rs,lam", [(A2, (1, 0)), (A2, (1, 1)), (A2, (2, 0)), (A2, (1, 2)), (B2, (1, 0)), (B2, (0, 1))])
def test_validity_matches_operator_reachability(rs, lam):
    # the paths accepted by the validity clauses are exactly the ones the
    # operators generate from the straight dominant path
    reachable = frozenset(generate_crystal(rs, lam).vertices)
    assert enumerate_valid_paths(rs, lam) == reachable
