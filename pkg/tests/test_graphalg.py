import itertools
import json
import random

import networkx as nx
import pytest

from conftest import loops, random_graph, random_k_graphs
from tempered_kit.errors import ConditionKError, NotLocallyClosedError, NotNestedError, ShapeMismatchError
from tempered_kit.graphalg import (
    SIX_MAPS,
    Graph,
    Verdict,
    _prim,
    _in_semigroup_z,
    condition_K,
    filtered_k,
    hereditary_saturated_brute_force,
    identity_candidate,
    ideal_lattice,
    iso_certificate_check,
    k_pair,
    prim_space,
    saturated_hereditary_closure,
    six_term,
    tempered_signature,
)
from tempered_kit.intlin import FinAbGroup, GroupHom
from tempered_kit.poset import open_sets
from tempered_kit.signature import format_signature


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def sigs(g):
    return [format_signature(s) for s in tempered_signature(g)]


def cycle_counts_oracle(g):
    """Simple cycles through each vertex, weighting parallel edges, via networkx."""
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    d.add_edges_from((u, v) for u, v, _ in g.edges())
    counts = dict.fromkeys(g.vertices, 0)
    for cyc in nx.simple_cycles(d):
        w = 1
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            w *= g.mult(a, b)
        for v in cyc:
            counts[v] += w
    return counts


def hs_oracle(g):
    out = set()
    vs = list(g.vertices)
    for k in range(len(vs) + 1):
        for sub in itertools.combinations(vs, k):
            s = set(sub)
            hereditary = all(w in s for v in s for w in g.successors(v))
            saturated = all(
                v in s for v in vs if g.successors(v) and g.successors(v) <= s
            )
            if hereditary and saturated:
                out.add(frozenset(s))
    return out


# -- closure, Condition (K), lattice ---------------------------------------


def test_closure_examples():
    assert saturated_hereditary_closure(path(3), {3}) == {1, 2, 3}
    both = loops({1: 1, 2: 1}, [(1, 2, 1)])
    assert saturated_hereditary_closure(both, {2}) == {2}
    assert saturated_hereditary_closure(path(3), set()) == frozenset()


def test_condition_k_examples():
    assert condition_K(loops({1: 1})) == (False, 1)
    assert condition_K(loops({1: 2})) == (True, None)
    assert condition_K(path(4)) == (True, None)
    # two distinct 2-cycles through vertex 1 via parallel edges
    assert condition_K(Graph.from_edges(2, [(1, 2, 2), (2, 1)])) == (True, None)
    assert condition_K(Graph.from_edges(2, [(1, 2), (2, 1)])) == (False, 1)


def test_condition_k_against_networkx():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng)
        counts = cycle_counts_oracle(g)
        bad = sorted(v for v, c in counts.items() if c == 1)
        assert condition_K(g) == ((False, bad[0]) if bad else (True, None))


def test_lattice_examples(pi_chain_graph):
    assert ideal_lattice(path(3)).elements == (frozenset(), frozenset({1, 2, 3}))
    assert set(ideal_lattice(pi_chain_graph).elements) == {frozenset(), frozenset({2}), frozenset({1, 2})}
    assert len(ideal_lattice(Graph.from_edges(2, []))) == 4
    with pytest.raises(ConditionKError) as exc:
        ideal_lattice(loops({1: 1}))
    assert exc.value.witness == 1


def test_lattice_against_subset_filter():
    for g in random_k_graphs(150, seed=4, max_vertices=7):
        lat = ideal_lattice(g)
        assert set(lat.elements) == hs_oracle(g)
        assert list(lat.elements) == hereditary_saturated_brute_force(g)


# -- Prim ------------------------------------------------------------------


def test_prim_examples(pi_chain_graph, mixed_graph):
    assert sigs(pi_chain_graph) == ["2.1.3"]
    assert sigs(mixed_graph) == ["2.1.2"]
    assert sigs(path(3)) == ["1.0.0"]
    assert sigs(Graph.from_edges(2, [(1, 1, 2), (2, 2, 2)])) == ["1.0.1", "1.0.1"]
    space, pts = prim_space(mixed_graph)
    assert [p.temperature for p in pts] == [1, 0]
    assert pts[0].stratum == {1} and pts[1].stratum == {2}


def test_prim_properties():
    for g in random_k_graphs(150, seed=6):
        lat = ideal_lattice(g)
        space, pts = prim_space(g)
        assert space.n == len(lat.join_irreducibles())
        for p in pts:
            assert p.stratum
            assert p.temperature == int(g.has_cycle_within(p.stratum))
        pd = _prim(g)
        opens = open_sets(space.poset)
        images = [pd.lattice_element(o) for o in opens]
        assert set(images) == set(lat.elements)
        assert len(set(images)) == len(opens)
        for o in opens:
            assert pd.open_set(pd.lattice_element(o)) == o


# -- K-theory --------------------------------------------------------------


@pytest.mark.parametrize("m", range(2, 7))
def test_loops_k_theory(m):
    kp = k_pair(loops({1: m}), {1})
    assert str(kp.k0) == (f"Z/{m - 1}" if m > 2 else "0") and kp.k1.is_trivial()


def test_sink_and_worked_k_theory(worked_graph):
    kp = k_pair(Graph.from_edges(1, []), {1})
    assert kp.k0 == FinAbGroup.free(1) and kp.k1.is_trivial()
    assert kp.k0.generator_images == ((1,),)
    kp = k_pair(worked_graph, {1, 2})
    assert str(kp.k0) == "Z/2" and kp.k1.is_trivial()
    with pytest.raises(NotLocallyClosedError):
        k_pair(path(3), {1})


def test_sink_rank_identity():
    for g in random_k_graphs(100, seed=8):
        fk = filtered_k(g)
        for kp in fk.groups.values():
            sinks = sum(1 for v in kp.vertices if g.is_sink(v))
            assert kp.k0.free_rank - kp.k1.free_rank == sinks
            assert len(kp.k0.generator_images) == len(kp.vertices)


def test_worked_six_term(worked_graph):
    st = six_term(worked_graph, set(), {2}, {1, 2})
    a, b, c = st.groups
    assert a.k0.is_trivial() and str(b.k0) == "Z/2" and str(c.k0) == "Z/2"
    assert st.maps["pi0"].is_iso()
    assert st.maps["d0"].is_zero() and st.maps["d1"].is_zero()
    assert st.is_exact


def test_degenerate_and_bad_triples(worked_graph):
    st = six_term(worked_graph, {2}, {2}, {1, 2})
    assert st.maps["pi0"].is_iso() and st.maps["d1"].is_zero() and st.is_exact
    with pytest.raises(NotNestedError):
        six_term(worked_graph, {1, 2}, {2}, {1, 2})
    with pytest.raises(NotNestedError):
        six_term(worked_graph, set(), {1}, {1, 2})


def test_acyclic_triples_have_no_k1():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 6)
        edges = [(u, v, rng.randint(1, 3)) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.4]
        g = Graph.from_edges(n, edges)
        fk = filtered_k(g)
        for kp in fk.groups.values():
            assert kp.k1.is_trivial() and not kp.k0.torsion
        assert fk.all_exact


def test_filtered_k_sizes(pi_chain_graph):
    fk = filtered_k(path(3))
    assert len([y for y in fk.groups if y]) == 1 and not fk.transforms
    fk = filtered_k(pi_chain_graph)
    assert len(fk.groups) == 4 and len(fk.transforms) == 1
    chain4 = loops({1: 2, 2: 2, 3: 2, 4: 2}, [(1, 2, 1), (2, 3, 1), (3, 4, 1)])
    fk = filtered_k(chain4)
    assert sigs(chain4) == ["4.3F.15"]
    assert len(fk.groups) == 11 and len([y for y in fk.groups if y]) == 10


def test_filtered_k_exact_on_random_graphs():
    for g in random_k_graphs(60, seed=21):
        assert filtered_k(g).all_exact


def test_filtered_k_maps_are_compositions_of_homs():
    # composing consecutive maps gives zero around every cycle
    for g in random_k_graphs(40, seed=22):
        for maps in filtered_k(g).transforms.values():
            cyc = [maps[k] for k in SIX_MAPS]
            for f, h in zip(cyc, cyc[1:] + cyc[:1]):
                assert (h @ f).is_zero()


def test_filtered_k_json(mixed_graph):
    fk = filtered_k(mixed_graph)
    doc = json.loads(json.dumps(fk.to_json()))
    assert doc["prim"] == {"points": 2, "covers": [[1, 2]], "temp": [1, 0]}
    assert [g["subset"] for g in doc["groups"]] == [[], [1], [2], [1, 2]]
    by_subset = {tuple(g["subset"]): g for g in doc["groups"]}
    assert by_subset[(2,)]["k0"]["rank"] == 1
    assert len(doc["sequences"]) == 1 and all(doc["sequences"][0]["exact"])


# -- certificates ----------------------------------------------------------


def _negate_at(fk, y, degree):
    cand = identity_candidate(fk)
    pair = list(cand[y])
    pair[degree] = -pair[degree]
    cand[y] = tuple(pair)
    return cand


def test_identity_certificate():
    for g in random_k_graphs(30, seed=30):
        fk = filtered_k(g)
        assert iso_certificate_check(fk, fk, identity_candidate(fk)) is Verdict.VALID


def test_sign_flip_on_af_point():
    fk = filtered_k(Graph.from_edges(1, []))
    assert iso_certificate_check(fk, fk, _negate_at(fk, frozenset({1}), 0)) is Verdict.INVALID


def test_sign_flip_in_mixed_graph(mixed_graph):
    fk = filtered_k(mixed_graph)
    af = next(x for x in fk.prim.poset.points if fk.prim.temp[x - 1] == 0)
    verdict = iso_certificate_check(fk, fk, _negate_at(fk, frozenset({af}), 0))
    assert verdict is Verdict.INVALID and not verdict


@pytest.mark.parametrize("m", [3, 4, 6])
def test_negation_on_pi_point(m):
    fk = filtered_k(loops({1: m}))
    cand = {y: (-a0, -a1) for y, (a0, a1) in identity_candidate(fk).items()}
    assert iso_certificate_check(fk, fk, cand) is Verdict.VALID


def test_non_iso_candidate_rejected():
    fk = filtered_k(loops({1: 4}))
    cand = identity_candidate(fk)
    k0 = fk.groups[frozenset({1})].k0
    cand[frozenset({1})] = (GroupHom.zero(k0, k0), cand[frozenset({1})][1])
    assert iso_certificate_check(fk, fk, cand) is Verdict.INVALID


def test_certificate_shape_mismatch(mixed_graph, pi_chain_graph):
    with pytest.raises(ShapeMismatchError):
        iso_certificate_check(filtered_k(mixed_graph), filtered_k(pi_chain_graph), {})


def test_certificate_across_relabelled_graphs(mixed_graph):
    # every group here is 0 or Z, so candidates are sign choices; exactly one
    # is both natural and positive
    swapped = Graph.from_edges(2, [(2, 2, 2), (2, 1, 1)])
    fk1, fk2 = filtered_k(mixed_graph), filtered_k(swapped)
    base = identity_candidate(fk1)
    keys = [y for y, kp in fk1.groups.items() if kp.k0.free_rank]
    verdicts = []
    for signs in itertools.product((1, -1), repeat=len(keys)):
        cand = dict(base)
        for y, s in zip(keys, signs):
            a0, a1 = cand[y]
            cand[y] = (a0 if s == 1 else -a0, a1)
        verdicts.append(iso_certificate_check(fk1, fk2, cand))
    assert verdicts.count(Verdict.VALID) == 1
    assert verdicts.count(Verdict.INVALID) == len(verdicts) - 1


def test_semigroup_membership_against_brute_force():
    rng = random.Random(40)
    for _ in range(400):
        gens = [rng.randint(-6, 9) for _ in range(rng.randint(0, 3))]
        v = rng.randint(-40, 60)
        reach, frontier = {0}, {0}
        while frontier:
            frontier = {r + x for r in frontier for x in gens if abs(r + x) <= 200} - reach
            reach |= frontier
        brute = v in reach
        assert _in_semigroup_z(gens, v) == brute, (gens, v)
