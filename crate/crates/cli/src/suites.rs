//! Verification suites run by `verify`.

use std::fmt;
use std::str::FromStr;

use polyhopf::analyzer::{central_grouplike_checks, degree_two_structure, verify_nr_theorem, verify_short_exact, AnalyzerError, TheoremReport};
use polyhopf::constructions::{catalog, Family};
use polyhopf::hopf::{exactness_check, group_reconstruct, is_cocentral, quotient_group_algebra, restrict, span, verify_axioms, HopfAlg};
use polyhopf::reptheory::forms::{dual_integral, fs_indicator_with};
use polyhopf::reptheory::{algebra_type, be_relations_check, coalgebra_type, comodule_matrix, fs_indicator, fusion_iso, fusion_ring, invariant_form, modularize, FormKind, ModularView};
use polyhopf::scalar::{Cyc, Field};
use serde::Serialize;
use serde_json::json;

use crate::{csv_field, expected, CliError, Format, Instance, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Types,
    Fusion,
    Fs,
    Exact,
    Sl2,
    Theorems,
}

impl Suite {
    pub const ALL: [Suite; 7] = [Suite::Axioms, Suite::Types, Suite::Fusion, Suite::Fs, Suite::Exact, Suite::Sl2, Suite::Theorems];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Axioms => "axioms",
            Suite::Types => "types",
            Suite::Fusion => "fusion",
            Suite::Fs => "fs",
            Suite::Exact => "exact",
            Suite::Sl2 => "sl2",
            Suite::Theorems => "theorems",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Suite, CliError> {
        Suite::ALL.into_iter().find(|x| x.to_string() == s).ok_or_else(|| CliError::Usage(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub instance: String,
    pub checks: Vec<Check>,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    fn push(&mut self, suite: Suite, check: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { suite, check: check.into(), status, detail: detail.into() });
    }

    fn skip(&mut self, suite: Suite, check: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { suite, check: check.into(), status: Status::Skip, detail: detail.into() });
    }

    /// An error inside a suite is a failed check, not an aborted run.
    fn absorb(&mut self, suite: Suite, r: Result<(), CliError>) {
        if let Err(e) = r {
            self.push(suite, "completed", false, e.to_string());
        }
    }
}

/// Runs the selected suites on one instance.
pub fn run(inst: &Instance, suites: &[Suite], cfg: &RunConfig) -> InstanceReport {
    let mut rep = InstanceReport { instance: inst.name.clone(), checks: Vec::new() };
    let hq = match cfg.prime {
        Some(q) => match modularize(&inst.hopf, q) {
            Ok(h) => Some(h),
            Err(e) => {
                rep.push(Suite::Types, "prime", false, e.to_string());
                return rep;
            }
        },
        None => None,
    };
    for &s in suites {
        let r = match s {
            Suite::Axioms => {
                axioms(inst, &mut rep);
                Ok(())
            }
            Suite::Types => match &hq {
                Some(h) => types(inst, h, cfg.seed, &mut rep),
                None => types(inst, &inst.hopf, cfg.seed, &mut rep),
            },
            Suite::Fusion => fusion(inst, cfg, &mut rep),
            Suite::Fs => match &hq {
                Some(h) => fs(inst, h, cfg.seed, &mut rep),
                None => fs(inst, &inst.hopf, cfg.seed, &mut rep),
            },
            Suite::Exact => exact(inst, cfg.seed, &mut rep),
            Suite::Sl2 => sl2(inst, &mut rep),
            Suite::Theorems => match &hq {
                Some(h) => theorems(&inst.name, h, cfg.seed, &mut rep),
                None => theorems(&inst.name, &inst.hopf, cfg.seed, &mut rep),
            },
        };
        rep.absorb(s, r);
    }
    rep
}

fn axioms(inst: &Instance, rep: &mut InstanceReport) {
    let a = verify_axioms(&inst.hopf);
    for (flag, ok) in a.flags() {
        rep.push(Suite::Axioms, flag, ok, "");
    }
}

fn types<F: Field>(inst: &Instance, h: &HopfAlg<F>, seed: u64, rep: &mut InstanceReport) -> Result<(), CliError> {
    let co = coalgebra_type(h, seed)?;
    let al = algebra_type(h, seed)?;
    let d = h.dim();
    for (kind, got, want) in [("coalgebra", &co, expected::coalgebra_type(&inst.name)), ("algebra", &al, expected::algebra_type(&inst.name))] {
        match want {
            Some(w) => rep.push(Suite::Types, format!("{kind} type"), *got == w, format!("{got} vs expected {w}")),
            None => rep.push(Suite::Types, format!("{kind} type"), got.total() == d, format!("{got}, no published value; Σ n d² = {}", got.total())),
        }
    }
    Ok(())
}

fn view_for(h: &HopfAlg<Cyc>, cfg: &RunConfig) -> Result<ModularView, CliError> {
    Ok(match cfg.prime {
        Some(q) => ModularView::new(&modularize(h, q)?, cfg.seed)?,
        None => ModularView::new(h, cfg.seed)?,
    })
}

fn fusion(inst: &Instance, cfg: &RunConfig, rep: &mut InstanceReport) -> Result<(), CliError> {
    let ring = fusion_ring(&view_for(&inst.hopf, cfg)?)?;
    rep.push(Suite::Fusion, "associative", ring.is_associative(), format!("rank {}", ring.rank()));
    rep.push(Suite::Fusion, "duality", ring.duality_ok(), "");
    rep.push(Suite::Fusion, "degrees multiplicative", ring.degrees_multiplicative(), "");
    let kind = match inst.entry.as_ref().map(|e| &e.family) {
        Some(Family::Deformation(d)) => d.ext.kind,
        _ => return Ok(()),
    };
    let reference = catalog(&format!("FUN2{}", kind.letter()), cfg.seed)?;
    let rref = fusion_ring(&view_for(&reference.hopf, cfg)?)?;
    let iso = fusion_iso(&ring, &rref);
    rep.push(Suite::Fusion, format!("isomorphic to FUN2{}", kind.letter()), iso.is_some(), if iso.is_some() { "" } else { "no bijection preserves N_ab^c" });
    Ok(())
}

fn fs<F: Field>(inst: &Instance, h: &HopfAlg<F>, seed: u64, rep: &mut InstanceReport) -> Result<(), CliError> {
    let view = ModularView::new(h, seed)?;
    let lam = dual_integral(&view.h)?;
    let (mut self_dual, mut agree) = (0, 0);
    let mut bad = Vec::new();
    for i in 0..view.comodules.blocks.len() {
        let c = view.subcoalgebra(i);
        let nu = fs_indicator_with(&view.h, &lam, view.character(i))?;
        if !view.is_self_dual(&c) {
            if nu != 0 {
                bad.push(format!("block {i}: non-self-dual with ν = {nu}"));
            }
            continue;
        }
        self_dual += 1;
        let form = invariant_form(&view.h, &comodule_matrix(&view, i)?);
        if form.kind.indicator() == nu {
            agree += 1;
        } else {
            bad.push(format!("block {i}: ν = {nu}, form {:?}", form.kind));
        }
    }
    rep.push(Suite::Fs, "indicator matches invariant form", bad.is_empty(), format!("{agree}/{self_dual} self-dual simple comodules agree{}", if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }));
    let Some(e) = &inst.entry else { return Ok(()) };
    let Some(alpha) = &e.alpha else { return Ok(()) };
    let want = match e.family {
        Family::Deformation(_) => 1,
        Family::Function(_) => -1,
        _ => return Ok(()),
    };
    let chi = alpha[0].iter().zip(&alpha[3]).map(|(a, b)| a.add(b)).collect::<Vec<_>>();
    let nu = fs_indicator(&e.hopf, &chi)?;
    rep.push(Suite::Fs, "distinguished comodule indicator", nu == want, format!("ν = {nu}, expected {want}"));
    Ok(())
}

fn exact(inst: &Instance, seed: u64, rep: &mut InstanceReport) -> Result<(), CliError> {
    let Some(e) = &inst.entry else {
        rep.skip(Suite::Exact, "exact sequence", "imported algebra carries no sequence");
        return Ok(());
    };
    let (Some((base, iota)), Some(p)) = (&e.iota, &e.projection) else {
        rep.skip(Suite::Exact, "exact sequence", "no abelian exact sequence attached");
        return Ok(());
    };
    let h = &e.hopf;
    let k = span(h, iota.images.iter().cloned());
    let ex = exactness_check(h, &k, p);
    rep.push(Suite::Exact, "exactness", ex.exact(), serde_json::to_string(&ex)?);
    rep.push(Suite::Exact, "p cocentral", is_cocentral(h, p)?, "");
    let m = quotient_group_algebra(h, &k, seed)?;
    rep.push(Suite::Exact, "M ≅ Z2", m.group.order() == 2, format!("|M| = {}", m.group.order()));
    let gamma = group_reconstruct(&restrict(h, &k)?, seed)?;
    let want = e.gamma().map(|g| g.order()).unwrap_or(0);
    let iso = base.dim() == gamma.order() && gamma.order() == want && gamma.catalog_match() == e.gamma().and_then(|g| g.catalog_match());
    rep.push(Suite::Exact, "kernel is k^Γ", iso, format!("Γ = {}", gamma.catalog_match().unwrap_or_else(|| format!("order {}", gamma.order()))));
    Ok(())
}

fn sl2(inst: &Instance, rep: &mut InstanceReport) -> Result<(), CliError> {
    let Some((e, alpha)) = inst.entry.as_ref().and_then(|e| e.alpha.as_ref().map(|a| (e, a))) else {
        rep.skip(Suite::Sl2, "ℬ(E) relations", "no distinguished 2-dim comodule");
        return Ok(());
    };
    let h = &e.hopf;
    let a = vec![vec![alpha[0].clone(), alpha[1].clone()], vec![alpha[2].clone(), alpha[3].clone()]];
    let form = invariant_form(h, &a);
    let Some(mat) = form.e.clone() else {
        rep.push(Suite::Sl2, "invariant form", false, format!("{} solutions", form.solutions));
        return Ok(());
    };
    let want = match e.family {
        Family::Function(_) => FormKind::Skew,
        _ => FormKind::Symmetric,
    };
    rep.push(Suite::Sl2, "form kind", form.kind == want, format!("{:?}, expected {want:?}", form.kind));
    let r = be_relations_check(h, alpha, &mat);
    rep.push(Suite::Sl2, "ℬ(E) relations", r.be_relations, "");
    if let Some(c) = r.commutative_sl2 {
        rep.push(Suite::Sl2, "𝒪_1[SL2] relations", c, "");
    }
    if let Some(n) = &r.normalized {
        for (name, ok) in &n.relations {
            rep.push(Suite::Sl2, format!("𝒪_-1: {name}"), *ok, format!("mod {}", n.q));
        }
    }
    if let Some(f) = &r.flag {
        rep.push(Suite::Sl2, "normalization", false, f.clone());
    }
    Ok(())
}

fn theorems<F: Field>(name: &str, h: &HopfAlg<F>, seed: u64, rep: &mut InstanceReport) -> Result<(), CliError> {
    let runs: [(&str, Result<TheoremReport, AnalyzerError>); 4] = [
        ("nr-theorem", verify_nr_theorem(h, name, seed)),
        ("special-situation", verify_short_exact(h, name, seed)),
        ("central-grouplike", central_grouplike_checks(h, name, seed)),
        ("degree-two", degree_two_structure(h, name, seed)),
    ];
    for (id, r) in runs {
        match r {
            Ok(t) => {
                for c in t.claims {
                    rep.push(Suite::Theorems, format!("{id}: {}", c.claim), c.pass, c.witness.to_string());
                }
            }
            Err(e @ (AnalyzerError::Precondition(_) | AnalyzerError::NoFourDimSubcoalgebra)) => rep.skip(Suite::Theorems, id, e.to_string()),
            Err(e) => rep.push(Suite::Theorems, id, false, e.to_string()),
        }
    }
    Ok(())
}

pub fn render(reports: &[InstanceReport], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!(reports))? + "\n",
        Format::Csv => {
            let mut out = String::from("name,suite,check,result,detail\n");
            for r in reports {
                for c in &r.checks {
                    out.push_str(&format!("{},{},{},{},{}\n", csv_field(&r.instance), c.suite, csv_field(&c.check), c.status, csv_field(&c.detail)));
                }
            }
            out
        }
        Format::Md => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!("## {} ({})\n\n| suite | check | result | detail |\n|---|---|---|---|\n", r.instance, if r.passed() { "pass" } else { "FAIL" }));
                for c in &r.checks {
                    out.push_str(&format!("| {} | {} | {} | {} |\n", c.suite, c.check, c.status, c.detail.replace('|', "\\|")));
                }
                out.push('\n');
            }
            out
        }
    })
}
