use polyhopf::groups::*;
use polyhopf::scalar::Cyc;

#[test]
fn catalog_groups_satisfy_axioms() {
    for k in [Kind::Cyclic(1), Kind::Cyclic(6), Kind::Dihedral(2), Kind::Dihedral(7), Kind::Tetra, Kind::Octa, Kind::Icosa] {
        let g = polyhedral(k).unwrap();
        assert!(g.verify_axioms(), "{k}");
        assert_eq!(g.generate(&g.generators).len(), g.order());
    }
}

#[test]
fn binary_covers_are_central_extensions() {
    let kinds = [Kind::Dihedral(2), Kind::Dihedral(3), Kind::Dihedral(8), Kind::Tetra, Kind::Octa, Kind::Icosa];
    for k in kinds {
        let e = binary_cover(k, None).unwrap();
        assert_eq!(e.cover.order(), 2 * e.base.order(), "{k}");
        assert!(e.cover.verify_axioms());
        assert!(e.verify(), "{k}");
    }
}

#[test]
fn binary_dihedral_two_is_quaternion() {
    let e = binary_cover(Kind::Dihedral(2), None).unwrap();
    let c = &e.cover;
    for a in c.elements() {
        let o = c.elem_order(a);
        if a == 0 {
            assert_eq!(o, 1);
        } else if a == e.z {
            assert_eq!(o, 2);
        } else {
            assert_eq!(o, 4);
        }
    }
}

#[test]
fn binary_tetrahedral_has_order_24() {
    let e = binary_cover(Kind::Tetra, None).unwrap();
    assert_eq!(e.cover.order(), 24);
    // SL(2,3) has one involution and elements of orders 1,2,3,4,6
    let spec = e.cover.spectrum();
    assert_eq!(spec.iter().filter(|&&o| o == 2).count(), 1);
    assert_eq!(spec.iter().filter(|&&o| o == 6).count(), 8);
}

#[test]
fn section_is_normalized_and_picks_smaller_string() {
    let e = binary_cover(Kind::Octa, None).unwrap();
    assert_eq!(e.section[0], 0);
    for s in 1..e.base.order() {
        let u = e.section[s];
        let other = e.cover.mul(u, e.z);
        assert!(mat2_string(&e.matrices[u]) < mat2_string(&e.matrices[other]));
    }
    let one = Cyc::one(e.conductor);
    assert!(e.matrices[0][0] == one && e.matrices[0][3] == one);
}

#[test]
fn automorphism_groups() {
    let a4 = polyhedral(Kind::Tetra).unwrap();
    let auts = automorphisms(&a4).unwrap();
    assert_eq!(auts.len(), 24);
    let a5 = polyhedral(Kind::Icosa).unwrap();
    let auts5 = automorphisms(&a5).unwrap();
    assert_eq!(auts5.len(), 120);
    assert_eq!(order2_classes(&auts5).len(), 2);
    for a in &auts5 {
        assert!(a.is_automorphism_of(&a5));
    }
    // closed under composition
    let set: std::collections::HashSet<_> = auts.iter().cloned().collect();
    for a in &auts {
        for b in &auts {
            assert!(set.contains(&a.compose(b)));
        }
    }
    let d2 = polyhedral(Kind::Dihedral(2)).unwrap();
    let ad2 = automorphisms(&d2).unwrap();
    assert_eq!(ad2.len(), 6);
    assert_eq!(order2_classes(&ad2).len(), 1);
}

#[test]
fn fixed_subgroups() {
    let d = polyhedral(Kind::Dihedral(5)).unwrap();
    let id = GroupAut::identity(d.order());
    assert_eq!(fixed_subgroup(&d, &id).order(), 10);
    let (sp, sm) = (d.generators[0], d.generators[1]);
    let auts = automorphisms(&d).unwrap();
    let swap = auts.iter().find(|a| a.apply(sp) == sm && a.apply(sm) == sp).unwrap();
    assert_eq!(fixed_subgroup(&d, swap).order(), 2);
    let a4 = polyhedral(Kind::Tetra).unwrap();
    let h = find_label(&a4, "(1 2)(3 4)").unwrap();
    assert_eq!(fixed_subgroup(&a4, &GroupAut::inner(&a4, h)).order(), 4);
}

#[test]
fn invariants_separate_catalog() {
    let d3 = polyhedral(Kind::Dihedral(3)).unwrap();
    let z6 = polyhedral(Kind::Cyclic(6)).unwrap();
    assert_eq!(d3.spectrum(), vec![1, 2, 2, 2, 3, 3]);
    assert_eq!(z6.spectrum(), vec![1, 2, 3, 3, 6, 6]);
    assert_eq!(d3.catalog_match().as_deref(), Some("D3"));
    assert_eq!(polyhedral(Kind::Tetra).unwrap().catalog_match().as_deref(), Some("A4"));
    assert_eq!(polyhedral(Kind::Cyclic(1)).unwrap().catalog_match().as_deref(), Some("Z1"));
    assert_eq!(polyhedral(Kind::Dihedral(2)).unwrap().catalog_match().as_deref(), Some("Z2xZ2"));
}

type Quat = [f64; 4];

fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qorder(a: Quat) -> usize {
    let mut x = a;
    let mut k = 1;
    while (x[0] - 1.0).abs() > 1e-9 {
        x = qmul(x, a);
        k += 1;
    }
    k
}

/// Closes the 2I generators as floating-point unit quaternions and compares
/// the order spectrum with the exact cyclotomic construction.
#[test]
fn binary_icosahedral_matches_quaternion_closure() {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let gens: [Quat; 2] = [[0.5, 0.5, 0.5, 0.5], [phi / 2.0, 0.5 / phi, 0.5, 0.0]];
    let mut elems: Vec<Quat> = vec![[1.0, 0.0, 0.0, 0.0]];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p = qmul(elems[i], g);
            if !elems.iter().any(|e| e.iter().zip(&p).all(|(x, y)| (x - y).abs() < 1e-9)) {
                elems.push(p);
            }
        }
        i += 1;
        assert!(elems.len() <= 200);
    }
    assert_eq!(elems.len(), 120);
    let mut numeric: Vec<usize> = elems.iter().map(|&q| qorder(q)).collect();
    numeric.sort();
    let e = binary_cover(Kind::Icosa, None).unwrap();
    let mut exact = e.cover.spectrum();
    exact.sort();
    assert_eq!(numeric, exact);
}

#[test]
fn projection_and_section() {
    for k in [Kind::Dihedral(5), Kind::Tetra, Kind::Octa, Kind::Icosa] {
        let e = binary_cover(k, None).unwrap();
        let (c, b) = (&e.cover, &e.base);
        assert!((0..b.order()).all(|s| e.proj[e.section[s]] == s), "{k}");
        assert!(c.elements().all(|x| c.mul(x, e.z) == c.mul(e.z, x)));
        assert_eq!(e.proj[e.z], 0);
        for x in c.elements() {
            for y in c.elements() {
                assert_eq!(e.proj[c.mul(x, y)], b.mul(e.proj[x], e.proj[y]));
            }
        }
    }
}
