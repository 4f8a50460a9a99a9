from hypothesis import given, settings
from hypothesis import strategies as st

from idealspaces import (
    ALL_KINDS,
    PointSet,
    check_contraction_property,
    check_mip,
    enumerate_ideals,
    generate_ideal,
    has_partition_of_unity,
    hull,
    image_of_kernel,
    kernel,
    kuratowski_union_axiom,
    make_product,
    make_spectrum,
    make_zmod,
    unit_ideal,
    x_radical,
    zero_ideal,
)
from idealspaces.rings import RingHom


class TestHullKernel:
    def test_hull_examples(self, ring):
        R = ring("Z12")
        spc = make_spectrum(R, "spc")
        assert [p.name for p in hull(spc, generate_ideal(R, [4])).ideals] == ["⟨2⟩"]
        assert hull(spc, unit_ideal(R)).is_empty
        assert hull(spc, zero_ideal(R)).mask == spc.full_mask

    def test_kernel_examples(self, ring):
        R = ring("Z12")
        spc = make_spectrum(R, "spc")
        two, three = generate_ideal(R, [2]), generate_ideal(R, [3])
        pair = PointSet(spc, (1 << spc.index[two]) | (1 << spc.index[three]))
        assert kernel(pair).members == generate_ideal(R, [6]).members
        empty = kernel(PointSet(spc, 0))
        assert not empty.proper
        single = PointSet(spc, 1 << spc.index[two])
        assert kernel(single).members == two.members

    def test_image_of_kernel(self, ring):
        P = ring("Z2xZ2xZ2")
        mins = make_spectrum(P, "min")
        names = [a.name for a in image_of_kernel(mins)]
        assert names == ["o", "⟨(1,0,0)⟩", "⟨(0,1,0)⟩", "⟨(0,0,1)⟩", "R"]
        R = ring("Z12")
        spc = make_spectrum(R, "spc")
        assert {a.name for a in image_of_kernel(spc)} == {"⟨6⟩", "⟨3⟩", "⟨2⟩", "R"}

    def test_one_point_spectrum(self, ring):
        spc = make_spectrum(ring("Z4"), "spc")
        assert [a.name for a in image_of_kernel(spc)] == ["⟨2⟩", "R"]


class TestMip:
    def test_min_of_triple_product_fails_exactly(self, ring):
        rep = check_mip(make_spectrum(ring("Z2xZ2xZ2"), "min"))
        assert rep.fails
        assert [rep.witness[k]["ideal"] for k in ("a", "b", "s")] == \
            ["⟨(1,0,0)⟩", "⟨(0,1,0)⟩", "⟨(0,0,1)⟩"]

    def test_proper_spectrum_of_z36_fails_with_designated_witness(self, ring):
        rep = check_mip(make_spectrum(ring("Z36"), "prp"))
        assert rep.fails
        assert [rep.witness[k]["ideal"] for k in ("a", "b", "s")] == ["⟨2⟩", "⟨3⟩", "⟨6⟩"]

    def test_strongly_irreducible_always_holds(self, suite_rings):
        for R in suite_rings:
            assert check_mip(make_spectrum(R, "irs")).holds, R.label

    def test_agrees_with_union_axiom_everywhere(self, suite_rings):
        for R in suite_rings:
            for kind in ALL_KINDS:
                spec = make_spectrum(R, kind)
                ok, _ = kuratowski_union_axiom(spec)
                assert ok == check_mip(spec).holds, (R.label, kind)


class TestXRadical:
    def test_examples(self, ring):
        R = ring("Z12")
        four = generate_ideal(R, [4])
        assert x_radical(make_spectrum(R, "spc"), four).name == "⟨2⟩"
        assert x_radical(make_spectrum(R, "prp"), four).name == "⟨4⟩"

    def test_points_are_fixed(self, suite_rings):
        for R in suite_rings[:4]:
            for kind in ("spc", "prp", "min", "irs"):
                spec = make_spectrum(R, kind)
                for p in spec.points:
                    assert x_radical(spec, p).members == p.members


class TestGaloisConnection:
    @given(st.integers(min_value=2, max_value=24), st.integers(min_value=0, max_value=2 ** 10))
    @settings(max_examples=40, deadline=None)
    def test_random_subsets(self, n, raw_mask):
        R = make_zmod(n)
        spec = make_spectrum(R, "prp")
        mask = raw_mask & spec.full_mask
        S = PointSet(spec, mask)
        kS = kernel(S)
        for a in enumerate_ideals(R).ideals:
            assert (mask & ~hull(spec, a).mask == 0) == (a.members <= kS.members)

    @given(st.integers(min_value=2, max_value=24),
           st.sampled_from(["prp", "min", "rad", "irs"]),
           st.integers(min_value=0, max_value=2 ** 10))
    @settings(max_examples=40, deadline=None)
    def test_hk_is_a_closure_operation(self, n, kind, raw_mask):
        # extensive, monotone, idempotent, regardless of the meet-inclusion
        # property (the union axiom is what can fail)
        R = make_zmod(n)
        spec = make_spectrum(R, kind)
        mask = raw_mask & spec.full_mask
        hk1 = hull(spec, kernel(PointSet(spec, mask))).mask
        assert mask & ~hk1 == 0
        assert hull(spec, kernel(PointSet(spec, hk1))).mask == hk1
        sub = mask & (mask >> 1)
        hk_sub = hull(spec, kernel(PointSet(spec, sub))).mask
        assert hk_sub & ~hk1 == 0


class TestPartitionOfUnity:
    def test_examples(self, ring):
        R = ring("Z12")
        assert has_partition_of_unity(make_spectrum(R, "prp"))
        assert has_partition_of_unity(make_spectrum(R, "spc"))
        assert not has_partition_of_unity(make_spectrum(ring("Z2xZ2xZ2"), "min"))


class TestContractionProperty:
    def test_prime_always_contracts(self, ring):
        from idealspaces import enumerate_homs
        R, S = ring("Z12"), ring("Z4")
        f = enumerate_homs(R, S)[0]
        assert check_contraction_property("spc", f).holds
        assert check_contraction_property("prp", f).holds

    def test_min_is_vacuous_onto_a_field(self):
        # Min(Z2) is empty (no nonzero proper ideals), so the projection
        # Z2xZ2 -> Z2 gives a vacuous instance rather than a failing one
        P = make_product([make_zmod(2), make_zmod(2)])
        Z2 = make_zmod(2)
        proj = RingHom(P, Z2, tuple(i & 1 for i in range(4)))
        assert check_contraction_property("min", proj).status == "vacuous"

    def test_min_fails_on_a_projection(self):
        P = make_product([make_zmod(2), make_zmod(4)])
        Z4 = make_zmod(4)
        proj = RingHom(P, Z4, tuple(i >> 1 for i in range(8)))
        rep = check_contraction_property("min", proj)
        assert rep.fails
        # the preimage of the target's sole Min point is too big to be minimal
        assert rep.witness["preimage"]["elements"] == [0, 1, 4, 5]

    def test_vacuous_on_empty_target(self, ring):
        from idealspaces import enumerate_homs
        f = enumerate_homs(ring("Z4"), ring("Z2"))[0]
        assert check_contraction_property("min", f).status == "vacuous"
