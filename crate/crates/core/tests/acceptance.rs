//! Acceptance run: one line per criterion. The process fails unless the set
//! of failing criteria is exactly the set recorded as findings.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use polyhopf::cocycle::{coboundary_solve, extension_cocycle, theta_stabilize, to_sign_cocycle, h2_f2_dim};
use polyhopf::constructions::*;
use polyhopf::groups::*;
use polyhopf::hopf::*;
use polyhopf::reptheory::forms::{dual_integral, fs_indicator_with};
use polyhopf::reptheory::*;
use polyhopf::scalar::{Cyc, Embedding, Field, Fp};
use rayon::prelude::*;

mod common;

/// Criteria that fail on this implementation, with the analysis in the
/// decisions ledger: algebra types of the even-n dihedral A2 classes (3),
/// fusion of A2T and the odd-n B2 dihedral classes (5), strict F2
/// stabilisation (10).
const KNOWN_FAILING: [usize; 3] = [3, 5, 10];

type Verdict = (bool, String);
type Catalog = HashMap<String, CatalogEntry>;

fn ty(s: &str) -> TypeMultiset {
    s.parse().unwrap()
}

fn dihedral_names() -> Vec<String> {
    let mut v = vec!["A2D2".to_string()];
    v.extend((3..=8).flat_map(|n| [format!("A2D{n}"), format!("B2D{n}")]));
    v
}

fn deformation_names() -> Vec<String> {
    let mut v = vec!["H8".to_string()];
    v.extend(dihedral_names());
    v.extend(["A2T", "B2T", "A2O", "B2O", "B2I"].map(String::from));
    v
}

fn letter(e: &CatalogEntry) -> String {
    e.kind().unwrap().letter()
}

/// Irreducible degrees of Γ̃ as published.
fn cover_type(letter: &str) -> TypeMultiset {
    match letter {
        "T" => ty("(1, 3; 2, 3; 3, 1)"),
        "O" => ty("(1, 2; 2, 3; 3, 2; 4, 1)"),
        "I" => ty("(1, 1; 2, 2; 3, 2; 4, 2; 5, 1; 6, 1)"),
        d => {
            let n: usize = d[1..].parse().unwrap();
            TypeMultiset(vec![(1, 4), (2, n - 1)])
        }
    }
}

fn published_algebra_type(name: &str, e: &CatalogEntry) -> TypeMultiset {
    match name {
        "A2T" => ty("(1, 4; 2, 5)"),
        "B2T" => ty("(1, 8; 2, 4)"),
        "A2O" => ty("(1, 8; 2, 10)"),
        "B2O" => ty("(1, 16; 2, 8)"),
        "B2I" => ty("(1, 8; 2, 28)"),
        _ => cover_type(&letter(e)),
    }
}

fn deformation(e: &CatalogEntry) -> &Deformation {
    match &e.family {
        Family::Deformation(d) => d,
        _ => panic!("{} is not a deformation", e.name),
    }
}

fn summarize(bad: &[String], ok_msg: String) -> Verdict {
    if bad.is_empty() {
        (true, ok_msg)
    } else {
        (false, bad.join("; "))
    }
}

fn distinguished_chi(e: &CatalogEntry) -> Vec<Cyc> {
    let a = e.alpha.as_ref().unwrap();
    a[0].iter().zip(&a[3]).map(|(x, y)| x.add(y)).collect()
}

fn alpha_matrix(e: &CatalogEntry) -> Vec<Vec<Vec<Cyc>>> {
    let a = e.alpha.as_ref().unwrap();
    vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]]
}

fn criterion_1() -> Verdict {
    let mut names = deformation_names();
    names.extend(["FUN2T", "FUN2O", "FUN2I", "GRP2T", "TWA5", "TWD3D5"].map(String::from));
    let mut bad = Vec::new();
    let mut slowest = (String::new(), Duration::ZERO);
    for name in &names {
        let start = Instant::now();
        let h = catalog(name, 0).unwrap().hopf;
        let a = verify_axioms(&h);
        let t = start.elapsed();
        if !a.all() {
            bad.push(format!("{name}: {a:?}"));
        }
        if h.dim() <= 120 && t > Duration::from_secs(60) {
            bad.push(format!("{name}: {t:?}"));
        }
        if t > slowest.1 {
            slowest = (name.clone(), t);
        }
    }
    summarize(&bad, format!("{} instances, all flags; slowest {} in {:.1}s", names.len(), slowest.0, slowest.1.as_secs_f64()))
}

fn criterion_2(cat: &Catalog) -> Verdict {
    let bad: Vec<String> = deformation_names()
        .par_iter()
        .filter_map(|n| {
            let e = &cat[n];
            let got = coalgebra_type(&e.hopf, 0).unwrap();
            let want = cover_type(&letter(e));
            (got != want).then(|| format!("{n}: {got} vs {want}"))
        })
        .collect();
    summarize(&bad, format!("{} deformations match the published coalgebra types", deformation_names().len()))
}

fn criterion_3(cat: &Catalog) -> Verdict {
    let bad: Vec<String> = deformation_names()
        .par_iter()
        .flat_map_iter(|n| {
            let e = &cat[n];
            let got = algebra_type(&e.hopf, 0).unwrap();
            let want = published_algebra_type(n, e);
            let d = deformation(e);
            let p = fixed_points(d.gamma(), &d.theta).len();
            let mut out = Vec::new();
            if got != want {
                out.push(format!("{n}: {got} vs {want}"));
            }
            if got.count_of(1) != 2 * p {
                out.push(format!("{n}: {} one-dims, 2p = {}", got.count_of(1), 2 * p));
            }
            out
        })
        .collect();
    summarize(&bad, "all algebra types match; one-dims = 2|Γ^θ| everywhere".into())
}

fn criterion_4() -> Verdict {
    let mut cases: Vec<(Kind, TypeMultiset)> = (3..=8)
        .map(|n| (Kind::Dihedral(n), if n % 2 == 1 { TypeMultiset(vec![(1, 2), (2, (n - 1) / 2)]) } else { TypeMultiset(vec![(1, 4), (2, n / 2 - 1)]) }))
        .collect();
    cases.push((Kind::Tetra, ty("(1, 3; 3, 1)")));
    cases.push((Kind::Octa, ty("(1, 2; 2, 1; 3, 2)")));
    cases.push((Kind::Icosa, ty("(1, 1; 3, 2; 4, 1; 5, 1)")));
    let bad: Vec<String> = cases
        .iter()
        .filter_map(|(k, want)| {
            let g = polyhedral(*k).unwrap();
            let got = coalgebra_type(&function_algebra(&g, 1), 0).unwrap();
            (got != *want).then(|| format!("k^{k}: {got} vs {want}"))
        })
        .collect();
    summarize(&bad, format!("{} function algebras", cases.len()))
}

fn ring(h: &HopfAlg<Cyc>) -> FusionRing {
    fusion_ring(&ModularView::new(h, 0).unwrap()).unwrap()
}

fn criterion_5(cat: &Catalog) -> Verdict {
    let mut bad: Vec<String> = deformation_names()
        .par_iter()
        .filter_map(|n| {
            let e = &cat[n];
            let reference = catalog(&format!("FUN2{}", letter(e)), 0).unwrap();
            fusion_iso(&ring(&e.hopf), &ring(&reference.hopf)).is_none().then(|| format!("{n} ≇ FUN2{}", letter(e)))
        })
        .collect();
    bad.sort();
    let r = ring(&function_algebra(&polyhedral(Kind::Dihedral(5)).unwrap(), 1));
    let chi1 = r.label_index("χ1").unwrap();
    let chi2 = r.label_index("χ2").unwrap();
    let (one, a) = (r.unit, r.label_index("a").unwrap());
    let mut want_sq = vec![0; 4];
    want_sq[one] = 1;
    want_sq[a] = 1;
    want_sq[chi2] = 1;
    let mut want_mixed = vec![0; 4];
    want_mixed[chi1] = 1;
    want_mixed[chi2] = 1;
    if r.n[chi1][chi1] != want_sq || r.n[chi1][chi2] != want_mixed {
        bad.push(format!("k^D5: {} / {}", r.render_product(chi1, chi1), r.render_product(chi1, chi2)));
    }
    summarize(&bad, format!("all deformations; {}, {}", r.render_product(chi1, chi1), r.render_product(chi1, chi2)))
}

fn criterion_6(cat: &Catalog) -> Verdict {
    let mut bad = Vec::new();
    for n in deformation_names() {
        let e = &cat[&n];
        let nu = fs_indicator(&e.hopf, &distinguished_chi(e)).unwrap();
        if nu != 1 {
            bad.push(format!("{n}: ν = {nu}"));
        }
    }
    for n in ["FUN2T", "FUN2O", "FUN2I"] {
        let e = &cat[n];
        let nu = fs_indicator(&e.hopf, &distinguished_chi(e)).unwrap();
        if nu != -1 {
            bad.push(format!("{n}: ν = {nu}"));
        }
    }
    let names: Vec<&String> = cat.keys().collect();
    let counts: Vec<(usize, usize, Vec<String>)> = names
        .par_iter()
        .map(|n| {
            let view = ModularView::new(&cat[*n].hopf, 0).unwrap();
            let lam = dual_integral(&view.h).unwrap();
            let (mut total, mut agree, mut bad) = (0, 0, Vec::new());
            for i in 0..view.comodules.blocks.len() {
                if !view.is_self_dual(&view.subcoalgebra(i)) {
                    continue;
                }
                total += 1;
                let nu = fs_indicator_with(&view.h, &lam, view.character(i)).unwrap();
                let form = invariant_form(&view.h, &comodule_matrix(&view, i).unwrap());
                if form.kind.indicator() == nu {
                    agree += 1;
                } else {
                    bad.push(format!("{n} block {i}: ν = {nu}, {:?}", form.kind));
                }
            }
            (total, agree, bad)
        })
        .collect();
    let total: usize = counts.iter().map(|c| c.0).sum();
    let agree: usize = counts.iter().map(|c| c.1).sum();
    bad.extend(counts.into_iter().flat_map(|c| c.2));
    summarize(&bad, format!("distinguished ν as expected; forms agree on {agree}/{total} self-dual simple comodules"))
}

fn criterion_7() -> Verdict {
    let want = [(Kind::Dihedral(2), 1), (Kind::Dihedral(3), 2), (Kind::Dihedral(4), 2), (Kind::Dihedral(5), 2), (Kind::Dihedral(6), 2), (Kind::Dihedral(7), 2), (Kind::Dihedral(8), 2), (Kind::Tetra, 2), (Kind::Octa, 2), (Kind::Icosa, 1)];
    let results: Vec<(Kind, usize, Enumeration)> = want.par_iter().map(|&(k, n)| (k, n, enumerate_deformations(k, 0).unwrap())).collect();
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for (k, n, en) in &results {
        let got = en.passing().len();
        counts.push(format!("{k}:{got}"));
        if got != *n {
            bad.push(format!("{k}: {got} passing, expected {n}"));
        }
        if *k == Kind::Icosa {
            let failing: Vec<&Candidate> = en.candidates.iter().filter(|c| c.outcome != Outcome::Pass).collect();
            if failing.len() != 1 || failing[0].class_size != 10 || failing[0].outcome != Outcome::NoSelfDualTwoDim {
                bad.push(format!("A5 failing classes: {:?}", failing.iter().map(|c| (c.class_size, c.outcome.reason())).collect::<Vec<_>>()));
            }
        }
    }
    summarize(&bad, format!("{}; A5 transposition class: no self-dual 2-dim", counts.join(" ")))
}

fn criterion_8(cat: &Catalog) -> Verdict {
    let bad: Vec<String> = deformation_names()
        .par_iter()
        .flat_map_iter(|n| {
            let e = &cat[n];
            let h = &e.hopf;
            let mut out = Vec::new();
            let (_, iota) = e.iota.as_ref().unwrap();
            let p = e.projection.as_ref().unwrap();
            let k = span(h, iota.images.iter().cloned());
            let ex = exactness_check(h, &k, p);
            if !ex.exact() {
                out.push(format!("{n}: {ex:?}"));
            }
            if !is_cocentral(h, p).unwrap() {
                out.push(format!("{n}: p not cocentral"));
            }
            match quotient_group_algebra(h, &k, 0) {
                Ok(m) if m.group.order() == 2 => {}
                Ok(m) => out.push(format!("{n}: |M| = {}", m.group.order())),
                Err(err) => out.push(format!("{n}: {err}")),
            }
            let a = e.alpha.as_ref().unwrap();
            let gens: Vec<Vec<Cyc>> = a.iter().flat_map(|x| a.iter().map(move |y| h.mul(x, &h.antipode_vec(y)))).collect();
            let coad = subalgebra_generated(h, &gens);
            let gamma = e.gamma().unwrap();
            match restrict(h, &coad).and_then(|b| group_reconstruct(&b, 0)) {
                Ok(g) if g.iso_invariants() == gamma.iso_invariants() => {}
                Ok(g) => out.push(format!("{n}: H_coad ≅ k^{}", g.catalog_match().unwrap_or_default())),
                Err(err) => out.push(format!("{n}: H_coad {err}")),
            }
            let dual = h.dual();
            let gl = grouplikes(&dual, 0).unwrap();
            let dm = reduce_mod(&dual, &working_embedding(&dual).unwrap()).unwrap();
            let central = gl.modular.iter().enumerate().any(|(i, g)| gl.group.elem_order(i) == 2 && (0..dm.dim()).all(|x| dm.mul(g, &dm.basis_vec(x)) == dm.mul(&dm.basis_vec(x), g)));
            if !central {
                out.push(format!("{n}: no central order-2 group-like in H*"));
            }
            out
        })
        .collect();
    summarize(&bad, format!("{} deformations: exact, cocentral, M ≅ Z2, H_coad ≅ k^Γ, central z in H*", deformation_names().len()))
}

fn criterion_9(cat: &Catalog) -> Verdict {
    let mut names = deformation_names();
    names.extend(["FUN2T", "FUN2O", "FUN2I"].map(String::from));
    let normalized_required = ["A2D3", "B2O", "B2I"];
    let bad: Vec<String> = names
        .par_iter()
        .flat_map_iter(|n| {
            let e = &cat[n];
            let form = invariant_form(&e.hopf, &alpha_matrix(e));
            let want = if n.starts_with("FUN") { FormKind::Skew } else { FormKind::Symmetric };
            let mut out = Vec::new();
            let Some(mat) = form.e else {
                out.push(format!("{n}: {} invariant forms", form.solutions));
                return out;
            };
            if form.kind != want {
                out.push(format!("{n}: {:?}", form.kind));
            }
            let r = be_relations_check(&e.hopf, e.alpha.as_ref().unwrap(), &mat);
            if !r.be_relations {
                out.push(format!("{n}: ℬ(E) relations"));
            }
            if want == FormKind::Skew && r.commutative_sl2 != Some(true) {
                out.push(format!("{n}: commutative SL2 relations"));
            }
            if normalized_required.contains(&n.as_str()) {
                match &r.normalized {
                    Some(nr) if !nr.relations.is_empty() && nr.relations.iter().all(|(_, ok)| *ok) => {}
                    other => out.push(format!("{n}: normalized relations {other:?} {:?}", r.flag)),
                }
            }
            out
        })
        .collect();
    summarize(&bad, format!("{} distinguished comodules; 𝒪_-1 relations mod q for {}", names.len(), normalized_required.join(", ")))
}

fn criterion_10(cat: &Catalog) -> Verdict {
    let mut bad = Vec::new();
    let kinds = [Kind::Dihedral(2), Kind::Dihedral(3), Kind::Dihedral(4), Kind::Dihedral(5), Kind::Dihedral(6), Kind::Dihedral(7), Kind::Dihedral(8), Kind::Tetra, Kind::Octa, Kind::Icosa];
    for k in kinds {
        let e = binary_cover(k, None).unwrap();
        if coboundary_solve(&e.base, &extension_cocycle(&e)).is_some() {
            bad.push(format!("2{}: extension class splits", k.letter()));
        }
    }
    let mut obstructed = Vec::new();
    let mut stabilized = 0;
    for n in deformation_names() {
        let d = deformation(&cat[&n]);
        match theta_stabilize(d.gamma(), &extension_cocycle(&d.ext), &d.theta) {
            Ok(_) => stabilized += 1,
            Err(_) => obstructed.push(n),
        }
    }
    if !obstructed.is_empty() {
        bad.push(format!("theta_stabilize obstructed for {}", obstructed.join(", ")));
    }
    for (k, want) in [(Kind::Cyclic(2), 1), (Kind::Dihedral(2), 3)] {
        let g = polyhedral(k).unwrap();
        let (got, oracle) = (h2_f2_dim(&g), common::brute_h2(&g));
        if got != want || oracle != want {
            bad.push(format!("{}: h2 {got}, oracle {oracle}, expected {want}", g.name));
        }
    }
    summarize(&bad, format!("covers non-split; {stabilized} pairs stabilized; h2(Z2) = 1, h2(Z2xZ2) = 3"))
}

fn criterion_11(cat: &Catalog) -> Verdict {
    let mut bad = Vec::new();
    let a5 = &cat["TWA5"].hopf;
    let t = coalgebra_type(a5, 0).unwrap();
    if t != ty("(1, 12; 4, 3)") {
        bad.push(format!("TWA5 coalgebra {t}"));
    }
    let g = grouplikes(a5, 0).unwrap().group;
    if g.catalog_match().as_deref() != Some("A4") {
        bad.push(format!("G(TWA5) = {:?}", g.catalog_match()));
    }
    let t = coalgebra_type(&a5.dual(), 0).unwrap();
    if t != ty("(1, 1; 3, 2; 4, 1; 5, 1)") {
        bad.push(format!("TWA5* coalgebra {t}"));
    }
    let b = &cat["TWD3D5"].hopf;
    let t = coalgebra_type(b, 0).unwrap();
    if t != ty("(1, 4; 2, 6; 4, 2)") {
        bad.push(format!("TWD3D5 coalgebra {t}"));
    }
    let g = grouplikes(b, 0).unwrap().group;
    if g.order() != 4 || g.is_cyclic() {
        bad.push(format!("G(TWD3D5) of order {}", g.order()));
    }
    summarize(&bad, "(kA5)^J (1, 12; 4, 3), G = A4, dual (1, 1; 3, 2; 4, 1; 5, 1); (k(D3xD5))^J (1, 4; 2, 6; 4, 2), G = Z2xZ2".into())
}

fn twisted_degrees(kind: Kind) -> Vec<usize> {
    let e = binary_cover(kind, None).unwrap();
    let tau = to_sign_cocycle(&extension_cocycle(&e));
    let a = twisted_group_algebra(&e.base, &tau, 4).unwrap();
    let q = polyhopf::scalar::next_prime_1_mod(120, 1 << 30, e.base.order() as u64);
    let emb = Embedding::new(4, q).unwrap();
    let am = a.map_scalars(q, |c| c.reduce(&emb)).unwrap();
    let mut d = decompose(&am, 0).unwrap().degrees();
    d.sort();
    d
}

fn criterion_12() -> Verdict {
    let (t, i) = (twisted_degrees(Kind::Tetra), twisted_degrees(Kind::Icosa));
    let ok = t == [2, 2, 2] && i == [2, 2, 4, 6];
    (ok, format!("k_τA4 degrees {t:?}; k_τA5 degrees {i:?}"))
}

fn criterion_13(cat: &Catalog) -> Verdict {
    let names: Vec<&String> = cat.keys().collect();
    let mut bad: Vec<String> = names
        .par_iter()
        .flat_map_iter(|n| {
            let h = &cat[*n].hopf;
            let mut out = Vec::new();
            for (kind, a, b) in [
                ("algebra", algebra_type(h, 1), algebra_type(h, 0xfeed)),
                ("coalgebra", coalgebra_type(h, 1), coalgebra_type(h, 0xfeed)),
            ] {
                let (a, b) = (a.unwrap(), b.unwrap());
                if a != b {
                    out.push(format!("{n}: {kind} type depends on seed"));
                }
                if a.total() != h.dim() {
                    out.push(format!("{n}: {kind} Σ n d² = {}", a.total()));
                }
            }
            match fusion_ring(&ModularView::new(h, 0).unwrap()) {
                Ok(r) if r.is_associative() && r.duality_ok() && r.degrees_multiplicative() => {}
                Ok(_) => out.push(format!("{n}: fusion ring axioms")),
                Err(e) => out.push(format!("{n}: {e}")),
            }
            let dd = h.dual().dual();
            let sorted = |c: &Vec<Vec<(u32, u32, Cyc)>>| c.iter().map(|t| { let mut t = t.clone(); t.sort_by_key(|x| (x.0, x.1)); t }).collect::<Vec<_>>();
            if dd.mult != h.mult || dd.antipode != h.antipode || dd.unit != h.unit || dd.counit != h.counit || sorted(&dd.comult) != sorted(&h.comult) {
                out.push(format!("{n}: dual not involutive"));
            }
            out
        })
        .collect();
    for k in [Kind::Tetra, Kind::Octa, Kind::Icosa] {
        let ext = binary_cover(k, None).unwrap();
        let g = &ext.cover;
        for (label, h) in [("FUN", function_algebra(g, ext.conductor)), ("GRP", group_algebra(g, ext.conductor))] {
            let view = ModularView::new(&h, 0).unwrap();
            let lam = dual_integral(&view.h).unwrap();
            let inv = Fp::new(g.order() as i64, view.q()).inv().unwrap();
            for i in 0..view.comodules.blocks.len() {
                let chi = view.character(i);
                let nu = fs_indicator_with(&view.h, &lam, chi).unwrap();
                let classical = if label == "FUN" {
                    g.elements().fold(Fp::new(0, view.q()), |s, a| s.add(chi[g.mul(a, a)])).mul(inv)
                } else {
                    let a = chi.iter().position(|x| !x.is_zero()).unwrap();
                    Fp::from_i64(&view.q(), i64::from(g.mul(a, a) == 0))
                };
                if classical != Fp::from_i64(&view.q(), nu as i64) {
                    bad.push(format!("{label}2{} block {i}: ν = {nu}", k.letter()));
                }
            }
        }
    }
    summarize(&bad, format!("{} instances: seed-independent types, Σ n d² = dim, fusion axioms, dual involutive; classical FS on FUN2G/GRP2G", names.len()))
}

fn main() {
    let start = Instant::now();
    let names = catalog_names();
    let cat: Catalog = names.par_iter().map(|n| (n.clone(), catalog(n, 0).unwrap())).collect();
    let runs: Vec<(usize, Box<dyn Fn() -> Verdict + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(|| criterion_2(&cat))),
        (3, Box::new(|| criterion_3(&cat))),
        (4, Box::new(criterion_4)),
        (5, Box::new(|| criterion_5(&cat))),
        (6, Box::new(|| criterion_6(&cat))),
        (7, Box::new(criterion_7)),
        (8, Box::new(|| criterion_8(&cat))),
        (9, Box::new(|| criterion_9(&cat))),
        (10, Box::new(|| criterion_10(&cat))),
        (11, Box::new(|| criterion_11(&cat))),
        (12, Box::new(criterion_12)),
        (13, Box::new(|| criterion_13(&cat))),
    ];
    let mut failing = BTreeSet::new();
    for (i, f) in runs {
        let (ok, detail) = f();
        println!("criterion {i}: {}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            failing.insert(i);
        }
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    let known: BTreeSet<usize> = KNOWN_FAILING.into_iter().collect();
    if failing != known {
        eprintln!("failing criteria {failing:?} differ from the recorded findings {known:?}");
        std::process::exit(1);
    }
}
