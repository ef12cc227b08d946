use polyhopf::constructions::catalog;
use polyhopf::hopf::{verify_axioms, HopfAlg};
use polyhopf::reptheory::{algebra_type, coalgebra_type, fusion_ring, ModularView};
use polyhopf::scalar::Cyc;
use proptest::prelude::*;

const SMALL: [&str; 9] = ["H8", "A2D3", "B2D3", "A2D4", "B2D5", "A2D6", "A2T", "B2T", "FUN2T"];

fn name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(SMALL.to_vec())
}

fn build(name: &str) -> HopfAlg<Cyc> {
    catalog(name, 0).unwrap().hopf
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn types_do_not_depend_on_seed(n in name(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = build(n);
        let (a1, a2) = (algebra_type(&h, s1).unwrap(), algebra_type(&h, s2).unwrap());
        prop_assert_eq!(&a1, &a2);
        let (c1, c2) = (coalgebra_type(&h, s1).unwrap(), coalgebra_type(&h, s2).unwrap());
        prop_assert_eq!(&c1, &c2);
        prop_assert_eq!(a1.total(), h.dim());
        prop_assert_eq!(c1.total(), h.dim());
    }

    #[test]
    fn fusion_ring_axioms(n in name(), seed in any::<u64>()) {
        let r = fusion_ring(&ModularView::new(&build(n), seed).unwrap()).unwrap();
        prop_assert!(r.is_associative());
        prop_assert!(r.duality_ok());
        prop_assert!(r.degrees_multiplicative());
        let k = r.rank();
        for a in 0..k {
            prop_assert_eq!(r.dual[r.dual[a]], a);
            for b in 0..k {
                prop_assert_eq!(r.n[a][b][r.unit], u32::from(b == r.dual[a]));
            }
        }
    }

    #[test]
    fn dual_is_involutive(n in name()) {
        let h = build(n);
        let dd = h.dual().dual();
        prop_assert_eq!(&dd.basis, &h.basis);
        prop_assert_eq!(&dd.mult, &h.mult);
        prop_assert_eq!(&dd.antipode, &h.antipode);
        for (x, y) in dd.comult.iter().zip(&h.comult) {
            let (mut x, mut y) = (x.clone(), y.clone());
            x.sort_by_key(|t| (t.0, t.1));
            y.sort_by_key(|t| (t.0, t.1));
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn perturbation_breaks_axioms(n in name(), pick in any::<prop::sample::Index>()) {
        let mut h = build(n);
        let nonzero: Vec<usize> = (0..h.mult.len()).filter(|&i| !h.mult[i].is_empty()).collect();
        let i = nonzero[pick.index(nonzero.len())];
        let (k, c) = h.mult[i][0].clone();
        let bumped = c.add(&Cyc::one(h.ctx));
        h.mult[i][0] = (k, bumped.clone());
        if bumped.is_zero() {
            h.mult[i].remove(0);
        }
        prop_assert!(!verify_axioms(&h).hopf());
    }
}
