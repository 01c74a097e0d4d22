use proptest::prelude::*;
use torskit_core::catalog::Catalog;
use torskit_core::quiver::{euler_form, ext_dim, hom_dim};
use torskit_core::{AlgebraSpec, Arrow, Bits, Budget, Fp, Lattice, Matrix, Rep};

const PRIMES: [u32; 4] = [2, 3, 5, 7];

fn fp_strategy() -> impl Strategy<Value = Fp> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Fp::new(p).unwrap())
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = (Fp, Matrix)> {
    (fp_strategy(), 1..=max, 1..=max).prop_flat_map(|(fp, r, c)| {
        prop::collection::vec(0..fp.p(), r * c).prop_map(move |d| (fp, Matrix::from_data(r, c, d)))
    })
}

/// Intersection-closed families with the full set on a small universe:
/// every such family is a lattice under inclusion.
fn closure_system() -> impl Strategy<Value = Lattice> {
    (3usize..=5).prop_flat_map(|u| {
        prop::collection::vec(0u32..(1 << u), 0..7).prop_map(move |gens| {
            let mut sets: Vec<u32> = vec![(1 << u) - 1];
            for g in gens {
                if !sets.contains(&g) {
                    sets.push(g);
                }
            }
            loop {
                let mut grown = false;
                for i in 0..sets.len() {
                    for j in 0..sets.len() {
                        let m = sets[i] & sets[j];
                        if !sets.contains(&m) {
                            sets.push(m);
                            grown = true;
                        }
                    }
                }
                if !grown {
                    break;
                }
            }
            let bits: Vec<Bits> =
                sets.iter().map(|&s| Bits::from_indices((0..u).filter(|i| s >> i & 1 == 1))).collect();
            Lattice::from_sets(&bits).unwrap()
        })
    })
}

fn a3(fp: Fp) -> AlgebraSpec {
    let names = (1..=3).map(|i| i.to_string()).collect();
    let arrows =
        vec![Arrow { name: "b".into(), source: 2, target: 1 }, Arrow { name: "a".into(), source: 1, target: 0 }];
    AlgebraSpec::path_algebra(names, arrows, fp).unwrap()
}

fn a3_rep(max_dim: usize) -> impl Strategy<Value = (Fp, Rep)> {
    (prop::sample::select(vec![2u32, 3]), prop::collection::vec(0..=max_dim, 3)).prop_flat_map(|(p, dims)| {
        let fp = Fp::new(p).unwrap();
        let spec = a3(fp);
        let shapes: Vec<(usize, usize)> = spec.arrows().iter().map(|a| (dims[a.target], dims[a.source])).collect();
        let mats = shapes
            .into_iter()
            .map(|(r, c)| prop::collection::vec(0..p, r * c).prop_map(move |d| Matrix::from_data(r, c, d)))
            .collect::<Vec<_>>();
        let dims2 = dims.clone();
        mats.prop_map(move |m| (fp, Rep::new(&spec, dims2.clone(), m).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(fp in fp_strategy(), a in 0u32..7, b in 0u32..7, c in 0u32..7) {
        let (a, b, c) = (a % fp.p(), b % fp.p(), c % fp.p());
        prop_assert_eq!(fp.mul(a, fp.add(b, c)), fp.add(fp.mul(a, b), fp.mul(a, c)));
        prop_assert_eq!(fp.add(fp.sub(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(fp.mul(a, fp.inv(a)), 1);
        }
    }

    #[test]
    fn rank_nullity((fp, m) in matrix_strategy(5)) {
        let ns = m.nullspace(fp);
        prop_assert_eq!(m.rank(fp) + ns.len(), m.cols());
        for v in &ns {
            prop_assert!(m.apply(v, fp).iter().all(|&x| x == 0));
        }
        let (r, _) = m.rref(fp);
        prop_assert_eq!(r.rref(fp).0, r);
    }

    #[test]
    fn inverse_is_two_sided((fp, m) in matrix_strategy(4)) {
        if let Some(inv) = m.inverse(fp) {
            let n = m.rows();
            prop_assert_eq!(m.mul(&inv, fp), Matrix::identity(n));
            prop_assert_eq!(inv.mul(&m, fp), Matrix::identity(n));
        } else {
            prop_assert!(!m.is_square() || m.rank(fp) < m.rows());
        }
    }

    #[test]
    fn lattice_axioms(l in closure_system()) {
        let n = l.len();
        for x in 0..n {
            prop_assert_eq!(l.meet(x, x), x);
            for y in 0..n {
                prop_assert_eq!(l.meet(x, y), l.meet(y, x));
                prop_assert_eq!(l.join(x, y), l.join(y, x));
                prop_assert_eq!(l.meet(x, l.join(x, y)), x);
                prop_assert_eq!(l.join(x, l.meet(x, y)), x);
                prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
                for z in 0..n {
                    prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                    prop_assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                }
            }
        }
    }

    #[test]
    fn cjr_exists_iff_join_semidistributive(l in closure_system()) {
        let all = (0..l.len()).all(|x| l.cjr(x).is_ok());
        prop_assert_eq!(all, l.is_join_semidistributive());
        let all_meet = (0..l.len()).all(|x| l.cmr(x).is_ok());
        prop_assert_eq!(all_meet, l.is_meet_semidistributive());
    }

    #[test]
    fn cjr_matches_brute_force(l in closure_system()) {
        prop_assume!(l.len() <= 20);
        for x in 0..l.len() {
            prop_assert_eq!(l.cjr(x).ok(), l.brute_force_cjr(x));
            prop_assert_eq!(l.cmr(x).ok(), l.brute_force_cmr(x));
        }
    }

    #[test]
    fn kappa_is_a_bijection_on_semidistributive(l in closure_system()) {
        prop_assume!(l.is_semidistributive());
        let mut images = Vec::new();
        for j in l.cji_elements() {
            let k = l.kappa(j).unwrap();
            prop_assert_eq!(l.kappa_star(k).unwrap(), j);
            images.push(k);
        }
        images.sort_unstable();
        prop_assert_eq!(images, l.cmi_elements());
        let mut table = l.kappa_bar_table().unwrap();
        table.sort_unstable();
        prop_assert_eq!(table, (0..l.len()).collect::<Vec<_>>());
    }

    #[test]
    fn dual_swaps_joins_and_meets(l in closure_system()) {
        let d = l.dual();
        prop_assert_eq!(d.cji_elements(), l.cmi_elements());
        prop_assert_eq!(d.is_join_semidistributive(), l.is_meet_semidistributive());
        for x in 0..l.len() {
            prop_assert_eq!(d.cjr(x).ok(), l.cmr(x).ok());
        }
    }

    #[test]
    fn euler_form_on_a3((fp, m) in a3_rep(2), (_, n) in a3_rep(2)) {
        let spec = a3(fp);
        // the second rep may live over a different field; rebuild it over fp
        let n = Rep::new(&spec, n.dims().to_vec(), n.mats().iter().map(|x| {
            Matrix::from_data(x.rows(), x.cols(), x.data().iter().map(|&v| v % fp.p()).collect())
        }).collect()).unwrap();
        let lhs = hom_dim(&spec, &m, &n) as i64 - ext_dim(&spec, &m, &n) as i64;
        prop_assert_eq!(lhs, euler_form(&spec, m.dims(), n.dims()));
    }

    #[test]
    fn decompositions_agree_on_a3((fp, m) in a3_rep(2)) {
        let spec = a3(fp);
        let cat = Catalog::enumerate(&spec, &[1, 1, 1], Budget::default()).unwrap();
        let d = cat.decompose(&m).unwrap();
        prop_assert_eq!(&d, &cat.decompose_by_fingerprint(&m).unwrap());
        let mut dims = vec![0; 3];
        for &(i, k) in &d.parts {
            for (v, x) in cat.rep(i).dims().iter().enumerate() {
                dims[v] += k * x;
            }
        }
        prop_assert_eq!(dims, m.dims().to_vec());
    }
}
