use polyhopf::cocycle::{extension_cocycle, to_sign_cocycle, PhaseCocycle};
use polyhopf::constructions::*;
use polyhopf::groups::*;
use polyhopf::hopf::*;
use polyhopf::reptheory::{algebra_type, coalgebra_type, decompose, fs_indicator, TypeMultiset};
use polyhopf::scalar::{Cyc, Embedding, Field};

fn ty(s: &str) -> TypeMultiset {
    s.parse().unwrap()
}

fn twisted_degrees(g: &FinGroup, tau: &PhaseCocycle) -> Vec<usize> {
    let a = twisted_group_algebra(g, tau, 4).unwrap();
    let q = 1_000_000_009; // ≡ 1 mod 4
    let emb = Embedding::new(4, q).unwrap();
    let am = a.map_scalars(q, |c| c.reduce(&emb)).unwrap();
    let mut d: Vec<usize> = decompose(&am, 0).unwrap().blocks.iter().map(|b| b.degree).collect();
    d.sort();
    d
}

#[test]
fn bicrossed_h8() {
    let e = catalog("H8", 0).unwrap();
    let Family::Deformation(d) = &e.family else { panic!() };
    let h = bicrossed_build(d.gamma(), &d.theta, &d.tau, d.conductor).unwrap();
    assert_eq!(h.dim(), 8);
    assert!(verify_axioms(&h).all());
    assert_eq!(algebra_type(&h, 0).unwrap(), ty("(1, 4; 2, 1)"));
    assert_eq!(coalgebra_type(&h, 0).unwrap(), ty("(1, 4; 2, 1)"));
}

#[test]
fn trivial_data_give_a_function_algebra() {
    let g = polyhedral(Kind::Dihedral(3)).unwrap();
    let h = bicrossed_build(&g, &GroupAut::identity(6), &PhaseCocycle::trivial(6), 1).unwrap();
    assert!(h.is_commutative() && verify_axioms(&h).all());
    let z2 = polyhedral(Kind::Cyclic(2)).unwrap();
    let gamma = group_reconstruct(&h, 0).unwrap();
    assert_eq!(gamma.iso_invariants(), g.direct_product(&z2).iso_invariants());
}

#[test]
fn bicrossed_b2t() {
    let e = catalog("B2T", 0).unwrap();
    let Family::Deformation(d) = &e.family else { panic!() };
    let h = bicrossed_build(d.gamma(), &d.theta, &d.tau, d.conductor).unwrap();
    assert!(!h.is_commutative());
    assert!(verify_axioms(&h).all());
    assert_eq!((&h.mult, &h.comult, &h.antipode), (&e.hopf.mult, &e.hopf.comult, &e.hopf.antipode));
}

#[test]
fn bicrossed_rejects_bad_input() {
    let g = polyhedral(Kind::Tetra).unwrap();
    let t = find_label(&g, "(1 2 3)").unwrap();
    let not_involution = GroupAut::inner(&g, t);
    assert!(bicrossed_build(&g, &not_involution, &PhaseCocycle::trivial(12), 1).is_err());
    let e = binary_cover(Kind::Tetra, None).unwrap();
    let theta = GroupAut::inner(&g, find_label(&g, "(1 2)(3 4)").unwrap());
    // the unstabilized 2T class is not compatible with this θ
    let tau = to_sign_cocycle(&extension_cocycle(&e));
    assert!(bicrossed_build(&g, &theta, &tau, 4).is_err());
}

#[test]
fn catalog_dimensions_and_types() {
    assert_eq!(catalog("B2I", 0).unwrap().hopf.dim(), 120);
    assert_eq!(coalgebra_type(&catalog("A2T", 0).unwrap().hopf, 0).unwrap(), ty("(1, 3; 2, 3; 3, 1)"));
    for n in 3..=6 {
        let h = catalog(&format!("B2D{n}"), 0).unwrap().hopf;
        assert_eq!(h.dim(), 4 * n);
    }
    assert!(catalog("X9", 0).is_err());
    assert!(catalog("A2I", 0).is_err());
}

#[test]
fn function_algebra_entry() {
    let e = catalog("FUN2T", 0).unwrap();
    assert!(e.hopf.is_commutative());
    let alpha = e.alpha.unwrap();
    let chi: Vec<Cyc> = alpha[0].iter().zip(&alpha[3]).map(|(a, b)| a.add(b)).collect();
    assert_eq!(fs_indicator(&e.hopf, &chi).unwrap(), -1);
}

#[test]
fn distinguished_matrix_is_comultiplicative() {
    for name in ["H8", "A2D5", "B2T", "A2O", "FUN2O"] {
        let e = catalog(name, 0).unwrap();
        let h = &e.hopf;
        let alpha = e.alpha.unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let a = &alpha[2 * i + j];
                let want: Vec<Vec<Cyc>> = (0..h.dim())
                    .map(|x| {
                        (0..h.dim())
                            .map(|y| (0..2).fold(Cyc::zero(h.ctx), |s, k| s.add(&alpha[2 * i + k][x].mul(&alpha[2 * k + j][y]))))
                            .collect()
                    })
                    .collect();
                assert_eq!(h.comul(a), want, "{name} α{i}{j}");
                assert_eq!(h.counit_of(a).is_one(), i == j);
                assert_eq!(h.counit_of(a).is_zero(), i != j);
            }
        }
    }
}

#[test]
fn inclusion_and_projection_are_hopf_maps() {
    for name in ["A2D4", "B2O", "FUN2T"] {
        let e = catalog(name, 0).unwrap();
        let (base, iota) = e.iota.as_ref().unwrap();
        assert!(iota.is_hopf_map(base), "{name}");
        let p = e.projection.as_ref().unwrap();
        assert!(p.is_hopf_map(&e.hopf), "{name}");
        assert!(is_cocentral(&e.hopf, p).unwrap());
    }
}

/// k^Γ#p ≅ (k_τΓ)*: the coproduct on e_s#p is the transposed product of the
/// twisted group algebra.
#[test]
fn second_summand_is_dual_twisted_group_algebra() {
    for name in ["H8", "A2D3", "B2D4", "A2T", "B2O"] {
        let e = catalog(name, 0).unwrap();
        let Family::Deformation(d) = &e.family else { panic!() };
        let g = d.gamma();
        let n = g.order();
        let h = &e.hopf;
        let tw = twisted_group_algebra(g, &d.tau, d.conductor).unwrap();
        for s in 0..n {
            let mut from_h: Vec<(u32, u32, Cyc)> = h.comult[n + s].iter().map(|(a, b, c)| (*a - n as u32, *b - n as u32, c.clone())).collect();
            from_h.sort_by_key(|x| (x.0, x.1));
            let mut from_tw = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for (k, c) in tw.m(a, b) {
                        if *k as usize == s {
                            from_tw.push((a as u32, b as u32, c.clone()));
                        }
                    }
                }
            }
            assert_eq!(from_h, from_tw, "{name} s={s}");
        }
        // k^Γ#1 is the function coalgebra
        assert!((0..n).all(|s| h.comult[s].iter().all(|(a, b, c)| (*a as usize) < n && (*b as usize) < n && c.is_one())));
    }
}

#[test]
fn dual_has_central_grouplike_of_order_two() {
    for name in ["H8", "A2D3", "B2D3", "A2T", "B2I"] {
        let h = catalog(name, 0).unwrap().hopf.dual();
        let gl = grouplikes(&h, 0).unwrap();
        let hm = reduce_mod(&h, &working_embedding(&h).unwrap()).unwrap();
        let found = gl.modular.iter().enumerate().any(|(i, g)| {
            gl.group.elem_order(i) == 2 && (0..hm.dim()).all(|x| hm.mul(g, &hm.basis_vec(x)) == hm.mul(&hm.basis_vec(x), g))
        });
        assert!(found, "{name}");
    }
}

#[test]
fn enumeration_counts() {
    let want = [(Kind::Dihedral(2), 1), (Kind::Dihedral(3), 2), (Kind::Dihedral(4), 2), (Kind::Dihedral(5), 2), (Kind::Dihedral(6), 2), (Kind::Dihedral(7), 2), (Kind::Dihedral(8), 2), (Kind::Tetra, 2), (Kind::Octa, 2), (Kind::Icosa, 1)];
    for (k, n) in want {
        let en = enumerate_deformations(k, 0).unwrap();
        assert_eq!(en.passing().len(), n, "{k}");
    }
    assert!(matches!(enumerate_deformations(Kind::Cyclic(4), 0), Err(ConstructionError::CyclicBase)));
}

#[test]
fn icosahedral_transposition_class_fails_self_duality() {
    let en = enumerate_deformations(Kind::Icosa, 0).unwrap();
    let classes: Vec<usize> = en.candidates.iter().map(|c| c.class_size).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    assert_eq!(classes.len(), 2);
    // Aut(A5) = S5: 10 transpositions, 15 double transpositions
    for c in &en.candidates {
        match c.class_size {
            10 => assert_eq!(c.outcome, Outcome::NoSelfDualTwoDim),
            15 => {}
            s => panic!("class of size {s}"),
        }
    }
    assert!(en.passing().iter().all(|c| c.class_size == 15));
}

#[test]
fn twisted_a5() {
    let h = catalog("TWA5", 0).unwrap().hopf;
    assert!(verify_axioms(&h).hopf());
    assert_eq!(coalgebra_type(&h, 0).unwrap(), ty("(1, 12; 4, 3)"));
    let g = grouplikes(&h, 0).unwrap().group;
    assert_eq!(g.catalog_match().as_deref(), Some("A4"));
    let a5 = polyhedral(Kind::Icosa).unwrap();
    assert_eq!(algebra_type(&h, 0).unwrap(), algebra_type(&group_algebra(&a5, 1), 0).unwrap());
}

#[test]
fn twisted_d3xd5() {
    let h = catalog("TWD3D5", 0).unwrap().hopf;
    assert!(verify_axioms(&h).hopf());
    assert_eq!(coalgebra_type(&h, 0).unwrap(), ty("(1, 4; 2, 6; 4, 2)"));
    let g = grouplikes(&h, 0).unwrap().group;
    assert_eq!(g.order(), 4);
    assert!(!g.is_cyclic());
}

#[test]
fn trivial_twist_changes_nothing() {
    let g = polyhedral(Kind::Dihedral(3)).unwrap().direct_product(&polyhedral(Kind::Dihedral(2)).unwrap());
    let (a1, a2) = (find_label(&g, "(e,r^1)").unwrap(), find_label(&g, "(e,s)").unwrap());
    let h = twist_group_algebra(&g, a1, a2, KleinForm::TRIVIAL, 1).unwrap();
    let kg = group_algebra(&g, 1);
    assert_eq!(h.comult, kg.comult);
    assert_eq!(h.mult, kg.mult);
    assert!(!KleinForm::TRIVIAL.is_nondegenerate() && KleinForm::STANDARD.is_nondegenerate());
    assert!(matches!(twist_group_algebra(&g, a1, a1, KleinForm::STANDARD, 1), Err(ConstructionError::NotKlein)));
}

#[test]
fn projective_representations() {
    let e = binary_cover(Kind::Tetra, None).unwrap();
    let tau = to_sign_cocycle(&extension_cocycle(&e));
    assert_eq!(twisted_degrees(&e.base, &tau), vec![2, 2, 2]);
    let e = binary_cover(Kind::Icosa, None).unwrap();
    let tau = to_sign_cocycle(&extension_cocycle(&e));
    assert_eq!(twisted_degrees(&e.base, &tau), vec![2, 2, 4, 6]);
}
