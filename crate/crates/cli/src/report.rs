//! Tables of coalgebra and algebra types, in the layout of the golden files.

use polyhopf::constructions::catalog;
use polyhopf::groups::{polyhedral, FinGroup, Kind};
use polyhopf::hopf::function_algebra;
use polyhopf::reptheory::{algebra_type, coalgebra_type, TypeMultiset};
use rayon::prelude::*;
use serde::Serialize;

use crate::{csv_field, CliError, Format};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub section: &'static str,
    pub name: String,
    pub kind: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
}

const FUNCTIONS: &str = "Coalgebra types of k^Γ";
const DEFORMATIONS: &str = "Deformations";
const TWISTS: &str = "Twists";

fn exponent(g: &FinGroup) -> u32 {
    g.elements().map(|a| g.elem_order(a) as u32).fold(1, num_integer::lcm)
}

fn function_kinds() -> Vec<Kind> {
    let mut v: Vec<Kind> = (3..=8).map(Kind::Dihedral).collect();
    v.extend([Kind::Tetra, Kind::Octa, Kind::Icosa]);
    v
}

pub fn deformation_names() -> Vec<String> {
    let mut v = vec!["H8".to_string()];
    for n in 3..=8 {
        v.push(format!("A2D{n}"));
        v.push(format!("B2D{n}"));
    }
    v.extend(["A2T", "B2T", "A2O", "B2O", "B2I"].map(String::from));
    v
}

enum Job {
    Function(Kind),
    Deformation(String),
    Twist(&'static str, bool),
}

fn run(job: &Job, seed: u64) -> Result<Vec<Row>, CliError> {
    let row = |section, name: String, kind, ty: TypeMultiset| Row { section, name, kind, ty: ty.to_string() };
    Ok(match job {
        Job::Function(k) => {
            let g = polyhedral(*k)?;
            let h = function_algebra(&g, exponent(&g));
            vec![row(FUNCTIONS, format!("k^{}", k.group_name()), "coalgebra", coalgebra_type(&h, seed)?)]
        }
        Job::Deformation(name) => {
            let h = catalog(name, seed)?.hopf;
            vec![row(DEFORMATIONS, name.clone(), "algebra", algebra_type(&h, seed)?), row(DEFORMATIONS, name.clone(), "coalgebra", coalgebra_type(&h, seed)?)]
        }
        Job::Twist(name, with_dual) => {
            let h = catalog(name, seed)?.hopf;
            let mut v = vec![row(TWISTS, name.to_string(), "coalgebra", coalgebra_type(&h, seed)?)];
            if *with_dual {
                v.push(row(TWISTS, format!("{name}*"), "coalgebra", coalgebra_type(&h.dual(), seed)?));
            }
            v
        }
    })
}

/// Every row of the report, in a fixed order.
pub fn rows(seed: u64) -> Result<Vec<Row>, CliError> {
    let mut jobs: Vec<Job> = function_kinds().into_iter().map(Job::Function).collect();
    jobs.extend(deformation_names().into_iter().map(Job::Deformation));
    jobs.extend([Job::Twist("TWA5", true), Job::Twist("TWD3D5", false)]);
    let parts = jobs.par_iter().map(|j| run(j, seed)).collect::<Result<Vec<_>, _>>()?;
    Ok(parts.into_iter().flatten().collect())
}

pub fn render(rows: &[Row], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(rows)? + "\n",
        Format::Csv => {
            let mut out = String::from("name,kind,type\n");
            for r in rows {
                out.push_str(&format!("{},{},{}\n", csv_field(&r.name), r.kind, csv_field(&r.ty)));
            }
            out
        }
        Format::Md => {
            let mut out = String::new();
            let mut section = "";
            for r in rows {
                if r.section != section {
                    if !section.is_empty() {
                        out.push('\n');
                    }
                    section = r.section;
                    out.push_str(&format!("## {section}\n\n| name | kind | type |\n|---|---|---|\n"));
                }
                out.push_str(&format!("| {} | {} | {} |\n", r.name, r.kind, r.ty));
            }
            out
        }
    })
}
