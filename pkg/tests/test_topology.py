"""Topology axioms, enumeration, star realisation, and topological verifiers."""

from itertools import combinations

import pytest

from iasl_lab import (DegenerateTopologyError, GroundSet, IntSet, Labeling,
                      NotRealizableError, Topology, TopologyParseError,
                      enumerate_topologies, is_topology, parse_graph,
                      parse_labeling, parse_topology, realize_topology,
                      verify_top_iasgl, verify_top_iasl)

# topologies on an n-element set, n = 1..4
TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}


def sets(*families):
    return [IntSet(f) for f in families]


def brute_topologies(ground: frozenset):
    """Independent enumeration on plain frozensets, closure checked textbook-style."""
    elems = sorted(ground)
    proper = [frozenset(c) for r in range(1, len(elems))
              for c in combinations(elems, r)]
    out = []
    for choice in range(1 << len(proper)):
        family = {frozenset(), ground}
        for i, s in enumerate(proper):
            if choice >> i & 1:
                family.add(s)
        ok = all(a | b in family and a & b in family
                 for a in family for b in family)
        if ok:
            out.append(frozenset(family))
    return set(out)


class TestIsTopology:
    def test_chain(self):
        x = GroundSet((0, 1))
        assert is_topology(sets((), (0,), (0, 1)), x).ok

    def test_missing_union(self):
        x = GroundSet((0, 1))
        check = is_topology(sets((), (0,), (1,)), x)
        assert not check.ok

    def test_union_witness(self):
        x = GroundSet((0, 1, 2))
        check = is_topology(sets((), (0,), (1,), (0, 1, 2)), x)
        assert not check.ok
        a, b, op, res = check.witness
        assert op == "union"
        assert (a | b) == res

    def test_discrete(self):
        x = GroundSet((0, 1, 2))
        from iasl_lab import all_nonempty_subsets
        family = [IntSet(())] + all_nonempty_subsets(x)
        assert is_topology(family, x).ok

    def test_member_outside_ground(self):
        with pytest.raises(ValueError):
            is_topology(sets((), (5,)), GroundSet((0, 1)))


class TestEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_counts(self, n):
        x = GroundSet(tuple(range(n)))
        assert len(enumerate_topologies(x)) == TOPOLOGY_COUNTS[n]

    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_independent_enumeration(self, n):
        ground = frozenset(range(n))
        expected = brute_topologies(ground)
        got = {frozenset(frozenset(s.elements) for s in t.opens)
               for t in enumerate_topologies(GroundSet(ground))}
        assert got == expected

    def test_zero_singleton_filter(self):
        x = GroundSet((0, 1))
        tops = enumerate_topologies(x, require_zero_singleton=True)
        assert len(tops) == 2
        families = [[str(s) for s in t.opens] for t in tops]
        assert ["{}", "{0}", "{0,1}"] in families
        assert ["{}", "{0}", "{1}", "{0,1}"] in families

    def test_cap(self):
        from iasl_lab import EnumerationInfeasible
        with pytest.raises(EnumerationInfeasible):
            enumerate_topologies(GroundSet((0, 1, 2, 3, 4)))

    def test_every_family_satisfies_axioms(self):
        x = GroundSet((0, 1, 2))
        for t in enumerate_topologies(x):
            assert is_topology(list(t.opens), x).ok


class TestRealize:
    def test_chain_topology(self):
        t = Topology.from_family(sets((), (0,), (0, 1), (0, 1, 2)))
        g, f = realize_topology(t)
        assert g.n == 3 and g.m == 2
        assert str(f.assignment["c"]) == "{0}"
        leaf_labels = {str(f.assignment[v]) for v in g.vertices if v != "c"}
        assert leaf_labels == {"{0,1}", "{0,1,2}"}
        assert verify_top_iasl(g, f).verdict

    def test_discrete_two_element(self):
        t = Topology.from_family(sets((), (0,), (1,), (0, 1)))
        g, f = realize_topology(t)
        assert g.n == 3 and g.m == 2
        assert verify_top_iasl(g, f).verdict
        assert verify_top_iasgl(g, f).verdict  # this one is also set-graceful

    def test_three_open_topology_gives_single_edge(self):
        t = Topology.from_family(sets((), (0,), (0, 1)))
        g, f = realize_topology(t)
        assert g.n == 2 and g.m == 1
        assert str(f.assignment["p1"]) == "{0,1}"
        assert verify_top_iasl(g, f).verdict

    def test_rejects_missing_zero_singleton(self):
        t = Topology.from_family(sets((), (1,), (0, 1)))
        with pytest.raises(NotRealizableError):
            realize_topology(t)

    def test_rejects_indiscrete(self):
        t = Topology.from_family(sets((), (0, 1)))
        with pytest.raises(DegenerateTopologyError):
            realize_topology(t)

    def test_every_zero_topology_realises(self):
        for n in (2, 3, 4):
            x = GroundSet(tuple(range(n)))
            for t in enumerate_topologies(x, require_zero_singleton=True):
                if len(t.opens) < 3:
                    continue
                g, f = realize_topology(t)
                assert verify_top_iasl(g, f).verdict
                family = {s.mask for s in f.assignment.values()}
                assert family == {m for m in t.open_masks if m != 0}


class TestTopologyFile:
    def test_parse_and_round_trip(self):
        t = parse_topology("∅\n{0}\n{0,1}\n")
        assert [str(s) for s in t.opens] == ["{}", "{0}", "{0,1}"]
        assert parse_topology(t.emit()).opens == t.opens

    def test_infers_ground_from_union(self):
        t = parse_topology("{}\n{0}\n{0,2}\n")
        assert str(t.ground) == "{0,2}"

    def test_bad_literal(self):
        with pytest.raises(TopologyParseError) as err:
            parse_topology("{}\n{zz}\n")
        assert err.value.line == 2

    def test_empty_file(self):
        with pytest.raises(TopologyParseError):
            parse_topology("\n")

    def test_rejects_non_topology_family(self):
        with pytest.raises(ValueError, match="union"):
            parse_topology("{}\n{0}\n{1}\n{0,1,2}\n")
        with pytest.raises(ValueError, match="empty set"):
            parse_topology("{0}\n{0,1}\n")


class TestVerifyTopIasl:
    def test_discrete_family_other_center(self):
        # vertex labels {1}, {0}, {0,1}: the family plus ∅ is the whole power
        # set, a topology, even though an edge sumset escapes X
        g = parse_graph("c l1\nc l2\n")
        f = parse_labeling("X {0,1}\nc {1}\nl1 {0}\nl2 {0,1}\n")
        assert verify_top_iasl(g, f).verdict

    def test_missing_ground_set_in_image(self):
        g = parse_graph("a b\n")
        f = parse_labeling("X {0,1}\na {0}\nb {1}\n")
        report = verify_top_iasl(g, f)
        assert not report.verdict
        assert any(v.kind == "not-a-topology" for v in report.violations)

    def test_verdict_includes_iasl_requirements(self):
        g = parse_graph("a b\n")
        f = Labeling(GroundSet((0, 1)), {"a": IntSet((0,)), "b": IntSet((0,))})
        assert not verify_top_iasl(g, f).verdict

    def test_label_outside_ground_set_reports_not_raises(self):
        g = parse_graph("a b\n")
        f = Labeling(GroundSet((0, 1)), {"a": IntSet((0,)), "b": IntSet((3,))})
        report = verify_top_iasl(g, f)
        assert not report.verdict
        assert any(v.kind == "not-a-subset" for v in report.violations)


class TestVerifyTopIasgl:
    def test_small_star(self):
        g = parse_graph("c l1\nc l2\n")
        f = parse_labeling("X {0,1}\nc {0}\nl1 {1}\nl2 {0,1}\n")
        assert verify_top_iasgl(g, f).verdict

    def test_full_star(self):
        lines = ["X {0,1,2}", "c {0}", "l1 {1}", "l2 {2}", "l3 {0,1}",
                 "l4 {0,2}", "l5 {1,2}", "l6 {0,1,2}"]
        g = parse_graph("\n".join(f"c l{i}" for i in range(1, 7)) + "\n")
        f = parse_labeling("\n".join(lines) + "\n")
        assert verify_top_iasgl(g, f).verdict

    def test_graceful_but_not_topological(self):
        # star plus one leaf-leaf edge: covers the image but the family is
        # not closed under union ({1} ∪ {2} missing)
        g = parse_graph("c l1\nc l2\nc l3\nc l4\nc l5\nl1 l3\n")
        f = parse_labeling("X {0,1,2}\nc {0}\nl1 {1}\nl2 {2}\nl3 {0,1}\n"
                           "l4 {0,2}\nl5 {0,1,2}\n")
        from iasl_lab import verify_iasgl
        assert verify_iasgl(g, f).verdict
        report = verify_top_iasgl(g, f)
        assert not report.verdict
        assert any(v.kind == "not-a-topology" for v in report.violations)
