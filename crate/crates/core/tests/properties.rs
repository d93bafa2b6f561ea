use crflag::involution::{enumerate_cayley_involutions, strongly_orthogonal};
use crflag::linalg::SparseVec;
use crflag::rootset::is_bracket_closed;
use crflag::{
    ChevalleyAlgebra, CrAlgebra, Family, InvolutionData, ParabolicData, Provenance, Rational,
    RootSystem,
};
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=4).prop_map(|n| (Family::A, n)),
        (2usize..=4).prop_map(|n| (Family::B, n)),
        (3usize..=4).prop_map(|n| (Family::C, n)),
        Just((Family::D, 4)),
        Just((Family::G, 2)),
    ]
}

fn qr_from_mask(rank: usize, mask: u32) -> Vec<usize> {
    (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parabolics_are_bracket_closed((family, rank) in small_type(), mask in any::<u32>()) {
        let rs = RootSystem::new(family, rank).unwrap();
        let q = ParabolicData::from_subset(&rs, &qr_from_mask(rank, mask)).unwrap();
        prop_assert!(is_bracket_closed(&rs, q.root_set()));
    }

    #[test]
    fn filtration_levels_nest_and_close(
        (family, rank) in small_type(),
        mask in any::<u32>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::new(family, rank).unwrap();
        let sigmas = enumerate_cayley_involutions(&rs, 3);
        let sigma = sigmas[pick.index(sigmas.len())].clone();
        let q = ParabolicData::from_subset(&rs, &qr_from_mask(rank, mask)).unwrap();
        let cr = CrAlgebra::analyze(&rs, q, sigma).unwrap();
        let f = cr.filtration().unwrap();
        for w in f.levels.windows(2) {
            prop_assert!(w[1].is_subset(&w[0]));
        }
        for l in &f.levels {
            prop_assert!(is_bracket_closed(&rs, l));
            prop_assert!(cr.q_infty().is_subset(l));
        }
    }

    #[test]
    fn cayley_involutions_validate((family, rank) in small_type(), depth in 0usize..=3) {
        let rs = RootSystem::new(family, rank).unwrap();
        for s in enumerate_cayley_involutions(&rs, depth) {
            let again = InvolutionData::from_matrix(&rs, s.matrix().to_vec()).unwrap();
            prop_assert_eq!(&again, &s);
            for id in 0..rs.num_roots() {
                prop_assert_eq!(s.apply_id(s.apply_id(id)), id);
            }
        }
    }

    #[test]
    fn strongly_orthogonal_steps_commute(
        (family, rank) in small_type(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::new(family, rank).unwrap();
        let g1 = i.index(rs.num_positive());
        let g2 = j.index(rs.num_positive());
        prop_assume!(strongly_orthogonal(&rs, g1, g2));
        let (r1, r2) = (rs.root(g1).clone(), rs.root(g2).clone());
        let a = InvolutionData::from_cayley_chain(&rs, &[r1.clone(), r2.clone()]).unwrap();
        let b = InvolutionData::from_cayley_chain(&rs, &[r2, r1]).unwrap();
        prop_assert_eq!(a.matrix(), b.matrix());
        prop_assert!(matches!(a.provenance(), Provenance::Cayley(c) if c.len() == 2));
    }

    #[test]
    fn jacobi_on_random_vectors(
        (family, rank) in small_type(),
        coeffs in prop::collection::vec((any::<prop::sample::Index>(), -3i64..=3), 9),
    ) {
        let rs = RootSystem::new(family, rank).unwrap();
        let ca = ChevalleyAlgebra::new(&rs).unwrap();
        let dim = ca.dim();
        let vec_of = |chunk: &[(prop::sample::Index, i64)]| {
            SparseVec::from_entries(
                chunk.iter().map(|(ix, c)| (ix.index(dim), Rational::from_integer(*c))).collect(),
            )
        };
        let (x, y, z) = (vec_of(&coeffs[0..3]), vec_of(&coeffs[3..6]), vec_of(&coeffs[6..9]));
        let t1 = ca.bracket(&x, &ca.bracket(&y, &z));
        let t2 = ca.bracket(&y, &ca.bracket(&z, &x));
        let t3 = ca.bracket(&z, &ca.bracket(&x, &y));
        let one = Rational::from_integer(1);
        prop_assert!(t1.add_scaled(&t2, &one).add_scaled(&t3, &one).is_zero());
    }
}
