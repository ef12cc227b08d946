use polyhopf::constructions::catalog;
use polyhopf::groups::*;
use polyhopf::hopf::*;
use polyhopf::reptheory::forms::{classical_fs, dual_integral, fs_indicator_with, is_comultiplicative};
use polyhopf::reptheory::*;
use polyhopf::scalar::{Cyc, Field, Fp};

fn ty(s: &str) -> TypeMultiset {
    s.parse().unwrap()
}

fn distinguished_character(name: &str) -> (HopfAlg<Cyc>, Vec<Cyc>) {
    let e = catalog(name, 0).unwrap();
    let a = e.alpha.unwrap();
    let chi = a[0].iter().zip(&a[3]).map(|(x, y)| x.add(y)).collect();
    (e.hopf, chi)
}

#[test]
fn modularize_preconditions() {
    let h = catalog("A2T", 0).unwrap().hopf;
    assert_eq!(h.conductor(), 12);
    assert!(modularize(&h, 13).is_ok());
    assert!(modularize(&h, 2).is_err());
    assert!(modularize(&h, 7).is_err());
    assert!(modularize(&h, 15).is_err());
    let d3 = polyhedral(Kind::Dihedral(3)).unwrap();
    assert!(modularize(&function_algebra(&d3, 1), 7).is_ok());
    // q = 3 divides dim k^{D3}
    assert!(matches!(modularize(&group_algebra(&d3, 1), 3), Err(RepError::BadPrime(3))));
}

#[test]
fn meataxe_types() {
    let s3 = modularize(&group_algebra(&polyhedral(Kind::Dihedral(3)).unwrap(), 1), 7).unwrap();
    assert_eq!(algebra_type(&s3, 0).unwrap(), ty("(1, 2; 2, 1)"));
    assert_eq!(algebra_type(&catalog("A2O", 0).unwrap().hopf, 0).unwrap(), ty("(1, 8; 2, 10)"));
}

#[test]
fn coalgebra_types() {
    assert_eq!(coalgebra_type(&catalog("B2I", 0).unwrap().hopf, 0).unwrap(), ty("(1, 1; 2, 2; 3, 2; 4, 2; 5, 1; 6, 1)"));
    assert_eq!(coalgebra_type(&catalog("FUN2O", 0).unwrap().hopf, 0).unwrap(), ty("(1, 2; 2, 3; 3, 2; 4, 1)"));
    let s4 = polyhedral(Kind::Octa).unwrap();
    assert_eq!(coalgebra_type(&group_algebra(&s4, 1), 0).unwrap(), ty("(1, 24)"));
    assert_eq!(coalgebra_type(&function_algebra(&s4, 1), 0).unwrap(), ty("(1, 2; 2, 1; 3, 2)"));
}

#[test]
fn characters() {
    let g = polyhedral(Kind::Dihedral(4)).unwrap();
    let h = group_algebra(&g, 1);
    let view = ModularView::new(&h, 0).unwrap();
    let mut chars: Vec<Vec<u64>> = simple_characters(&view).iter().map(|c| c.coords.iter().map(|x| x.v).collect()).collect();
    chars.sort();
    let mut basis: Vec<Vec<u64>> = (0..8).map(|i| (0..8).map(|j| (i == j) as u64).collect()).collect();
    basis.sort();
    assert_eq!(chars, basis);

    // k^G: the characters are the class functions of the irreps of G
    let h = function_algebra(&g, 1);
    let view = ModularView::new(&h, 0).unwrap();
    for c in simple_characters(&view) {
        assert_eq!(c.coords[0].v, c.degree as u64);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(c.coords[g.conj(b, a)], c.coords[a]);
            }
        }
    }

    let view = ModularView::new(&catalog("H8", 0).unwrap().hopf, 0).unwrap();
    let mut degrees: Vec<usize> = simple_characters(&view).iter().map(|c| c.degree).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
}

#[test]
fn dihedral_fusion() {
    let view = ModularView::new(&function_algebra(&polyhedral(Kind::Dihedral(5)).unwrap(), 1), 0).unwrap();
    let r = fusion_ring(&view).unwrap();
    assert_eq!(r.rank(), 4);
    let ones: Vec<usize> = (0..4).filter(|&i| r.degrees[i] == 1).collect();
    let twos: Vec<usize> = (0..4).filter(|&i| r.degrees[i] == 2).collect();
    let a = *ones.iter().find(|&&i| i != r.unit).unwrap();
    let (x, y) = (twos[0], twos[1]);
    for (p, q) in [(x, y), (y, x)] {
        // χ1·χ1 = 1 + a + χ2
        let mut want = vec![0; 4];
        want[r.unit] = 1;
        want[a] = 1;
        want[q] = 1;
        assert_eq!(r.n[p][p], want);
    }
    let mut want = vec![0; 4];
    want[x] = 1;
    want[y] = 1;
    assert_eq!(r.n[x][y], want);
    for c in 0..4 {
        let mut unit = vec![0; 4];
        unit[c] = 1;
        assert_eq!(r.n[r.unit][c], unit);
    }
    assert!(r.render().contains(&format!("{}·{} = ", r.labels[x], r.labels[y])));
}

#[test]
fn fusion_isomorphisms() {
    let ring = |h: &HopfAlg<Cyc>| fusion_ring(&ModularView::new(h, 0).unwrap()).unwrap();
    let b2i = ring(&catalog("B2I", 0).unwrap().hopf);
    let fun = ring(&catalog("FUN2I", 0).unwrap().hopf);
    let iso = fusion_iso(&b2i, &fun).unwrap();
    for a in 0..iso.len() {
        for b in 0..iso.len() {
            for c in 0..iso.len() {
                assert_eq!(b2i.n[a][b][c], fun.n[iso[a]][iso[b]][iso[c]]);
            }
        }
    }
    let z2 = ring(&function_algebra(&polyhedral(Kind::Cyclic(2)).unwrap(), 4));
    let z3 = ring(&function_algebra(&polyhedral(Kind::Cyclic(3)).unwrap(), 12));
    assert!(fusion_iso(&z2, &z3).is_none());
    assert!(fusion_iso(&z2, &z2).is_some());
}

/// The fusion ring of 𝒜[2T] computed here is not commutative, so it cannot
/// match Rep(2T).
#[test]
fn a2t_fusion_is_noncommutative() {
    let ring = |h: &HopfAlg<Cyc>| fusion_ring(&ModularView::new(h, 0).unwrap()).unwrap();
    let a2t = ring(&catalog("A2T", 0).unwrap().hopf);
    assert!(a2t.is_associative() && a2t.duality_ok() && a2t.degrees_multiplicative());
    let r = a2t.rank();
    assert!((0..r).any(|a| (0..r).any(|b| a2t.n[a][b] != a2t.n[b][a])));
    assert!(fusion_iso(&a2t, &ring(&catalog("FUN2T", 0).unwrap().hopf)).is_none());
}

#[test]
fn indicators() {
    let (h, chi) = distinguished_character("FUN2T");
    assert_eq!(fs_indicator(&h, &chi).unwrap(), -1);
    let (h, chi) = distinguished_character("A2O");
    assert_eq!(fs_indicator(&h, &chi).unwrap(), 1);
    // 1-dim comodules of k^{2T} of order 3 are not self-dual
    let h = catalog("FUN2T", 0).unwrap().hopf;
    let view = ModularView::new(&h, 0).unwrap();
    let lam = dual_integral(&view.h).unwrap();
    let mut zeros = 0;
    for (i, b) in view.comodules.blocks.iter().enumerate() {
        if b.degree == 1 && !view.is_self_dual(&view.subcoalgebra(i)) {
            assert_eq!(fs_indicator_with(&view.h, &lam, view.character(i)).unwrap(), 0);
            zeros += 1;
        }
    }
    assert_eq!(zeros, 2);
}

/// Mod-q indicator against (1/|G|) Σ χ(g²) for k^{Γ̃}, and against
/// [g² = 1] for the group-likes of kΓ̃.
#[test]
fn indicator_matches_classical_formula() {
    for k in [Kind::Dihedral(3), Kind::Tetra, Kind::Octa] {
        let ext = binary_cover(k, None).unwrap();
        let g = &ext.cover;
        let view = ModularView::new(&function_algebra(g, ext.conductor), 0).unwrap();
        let lam = dual_integral(&view.h).unwrap();
        let inv_order = Fp::new(g.order() as i64, view.q()).inv().unwrap();
        for i in 0..view.comodules.blocks.len() {
            let chi = view.character(i);
            let mut s = Fp::new(0, view.q());
            for a in g.elements() {
                s = s.add(chi[g.mul(a, a)]);
            }
            let classical = s.mul(inv_order);
            let nu = fs_indicator_with(&view.h, &lam, chi).unwrap();
            assert_eq!(classical, Fp::from_i64(&view.q(), nu as i64), "{k} block {i}");
        }

        let h = group_algebra(g, ext.conductor);
        let view = ModularView::new(&h, 0).unwrap();
        let lam = dual_integral(&view.h).unwrap();
        for i in 0..view.comodules.blocks.len() {
            let chi = view.character(i);
            let a = chi.iter().position(|x| !x.is_zero()).unwrap();
            let want = if g.mul(a, a) == 0 { 1 } else { 0 };
            assert_eq!(fs_indicator_with(&view.h, &lam, chi).unwrap(), want);
        }
    }
    // exact classical formula on the cover's defining representation
    let ext = binary_cover(Kind::Icosa, None).unwrap();
    let chi: Vec<Cyc> = ext.matrices.iter().map(|m| m[0].add(&m[3])).collect();
    assert_eq!(classical_fs(&ext.cover, &chi), Some(-1));
}

#[test]
fn stabilizers() {
    for (name, want) in [("H8", 4), ("A2D5", 2), ("B2I", 1)] {
        let (h, chi) = distinguished_character(name);
        let gl = grouplikes(&h, 0).unwrap();
        let emb = working_embedding(&h).unwrap();
        let hm = reduce_mod(&h, &emb).unwrap();
        let chi: Vec<Fp> = chi.iter().map(|c| c.reduce(&emb).unwrap()).collect();
        assert_eq!(stabilizer_g_chi(&hm, &gl.modular, &chi).len(), want, "{name}");
    }
}

#[test]
fn invariant_forms() {
    let e = catalog("FUN2D3", 0).unwrap();
    let a = e.alpha.unwrap();
    let m = vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]];
    assert!(is_comultiplicative(&e.hopf, &m));
    let f = invariant_form(&e.hopf, &m);
    assert_eq!((f.kind, f.solutions), (FormKind::Skew, 1));

    let e = catalog("A2O", 0).unwrap();
    let a = e.alpha.unwrap();
    let m = vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]];
    assert_eq!(invariant_form(&e.hopf, &m).kind, FormKind::Symmetric);

    let view = ModularView::new(&catalog("FUN2T", 0).unwrap().hopf, 0).unwrap();
    let i = (0..view.comodules.blocks.len()).find(|&i| view.comodules.blocks[i].degree == 1 && !view.is_self_dual(&view.subcoalgebra(i))).unwrap();
    let f = invariant_form(&view.h, &comodule_matrix(&view, i).unwrap());
    assert_eq!((f.kind, f.solutions), (FormKind::None, 0));
}

fn sl2(name: &str) -> Sl2Report {
    let e = catalog(name, 0).unwrap();
    let a = e.alpha.unwrap();
    let m = vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]];
    let f = invariant_form(&e.hopf, &m);
    be_relations_check(&e.hopf, &a, &f.e.unwrap())
}

#[test]
fn sl2_relations() {
    let r = sl2("A2D3");
    assert!(r.be_relations && r.kind == FormKind::Symmetric && r.passed());

    let r = sl2("FUN2T");
    assert_eq!((r.be_relations, r.kind, r.commutative_sl2), (true, FormKind::Skew, Some(true)));

    let r = sl2("B2I");
    assert!(r.passed(), "{r:?}");
    let n = r.normalized.unwrap();
    assert!(n.relations.iter().all(|(_, ok)| *ok));
    assert!(n.relations.iter().any(|(name, _)| name.contains("ad + bc")));
}

/// Every irreducible module of a deformation has dimension 1 or 2, there are
/// 2|Γ^θ| of dimension 1, and every dimension divides dim H.
#[test]
fn module_dimensions() {
    for name in ["H8", "A2D3", "B2D4", "B2D5", "A2T", "B2O", "B2I"] {
        let e = catalog(name, 0).unwrap();
        let t = algebra_type(&e.hopf, 0).unwrap();
        let d = e.hopf.dim();
        assert!(t.degrees().iter().all(|&x| x <= 2 && d % x == 0), "{name}: {t}");
        assert_eq!(t.total(), d);
        let polyhopf::constructions::Family::Deformation(def) = &e.family else { panic!() };
        let p = fixed_points(def.gamma(), &def.theta).len();
        assert_eq!(t.count_of(1), 2 * p, "{name}: {t}");
    }
}

#[test]
fn deformation_coalgebra_matches_binary_group() {
    for (name, k) in [("A2D4", Kind::Dihedral(4)), ("B2T", Kind::Tetra), ("A2O", Kind::Octa)] {
        let ext = binary_cover(k, None).unwrap();
        let want = algebra_type(&group_algebra(&ext.cover, ext.conductor), 0).unwrap();
        assert_eq!(coalgebra_type(&catalog(name, 0).unwrap().hopf, 0).unwrap(), want, "{name}");
    }
}
