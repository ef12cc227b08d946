//! θ-class tables for `enumerate`.

use polyhopf::constructions::{enumerate_deformations, Enumeration};
use polyhopf::groups::Kind;
use serde::Serialize;

use crate::{csv_field, CliError, Format};

#[derive(Clone, Debug, Serialize)]
pub struct EnumRow {
    pub theta: usize,
    pub class_size: usize,
    pub fixed_order: usize,
    pub fibre: usize,
    pub orbit_size: usize,
    pub outcome: String,
}

/// Parses "dihedral 5", "D5", "icosa", "A5", …; cyclic groups are rejected.
pub fn parse_gamma(args: &[String]) -> Result<Kind, CliError> {
    let joined = args.join(" ");
    let bad = || CliError::Usage(format!("invalid group {joined:?}"));
    let (word, n) = match args {
        [w] => match w.strip_prefix(['D', 'd']).filter(|r| !r.is_empty()).and_then(|r| r.parse::<usize>().ok()) {
            Some(n) => ("dihedral".to_string(), Some(n)),
            None => (w.clone(), None),
        },
        [w, n] => (w.clone(), Some(n.parse::<usize>().map_err(|_| bad())?)),
        _ => return Err(bad()),
    };
    let kind = Kind::parse(&word, n).map_err(|_| bad())?;
    match kind {
        Kind::Cyclic(_) => Err(CliError::Usage("cyclic groups are excluded: k^Γ has no 2-dim simple comodule to deform".into())),
        Kind::Dihedral(n) if n < 2 => Err(bad()),
        _ => Ok(kind),
    }
}

pub fn rows(en: &Enumeration) -> Vec<EnumRow> {
    let mut thetas: Vec<&polyhopf::groups::GroupAut> = Vec::new();
    let mut fibre_count: Vec<usize> = Vec::new();
    en.candidates
        .iter()
        .map(|c| {
            let t = thetas.iter().position(|x| **x == c.theta).unwrap_or_else(|| {
                thetas.push(&c.theta);
                fibre_count.push(0);
                thetas.len() - 1
            });
            fibre_count[t] += 1;
            EnumRow { theta: t + 1, class_size: c.class_size, fixed_order: c.fixed_order, fibre: fibre_count[t], orbit_size: c.orbit_size, outcome: c.outcome.reason() }
        })
        .collect()
}

pub fn run(kind: Kind, seed: u64) -> Result<(Enumeration, Vec<EnumRow>), CliError> {
    let en = enumerate_deformations(kind, seed)?;
    let r = rows(&en);
    Ok((en, r))
}

pub fn render(kind: Kind, rows: &[EnumRow], format: Format) -> Result<String, CliError> {
    let passing = rows.iter().filter(|r| r.outcome == "pass").count();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({"gamma": kind.group_name(), "passing": passing, "candidates": rows}))? + "\n",
        Format::Csv => {
            let mut out = String::from("theta,class_size,fixed_order,fibre,orbit_size,outcome\n");
            for r in rows {
                out.push_str(&format!("{},{},{},{},{},{}\n", r.theta, r.class_size, r.fixed_order, r.fibre, r.orbit_size, csv_field(&r.outcome)));
            }
            out
        }
        Format::Md => {
            let mut out = format!("## Γ = {}: {passing} passing\n\n| θ | class size | fixed order | fibre | orbit size | outcome |\n|---|---|---|---|---|---|\n", kind.group_name());
            for r in rows {
                out.push_str(&format!("| θ{} | {} | {} | {} | {} | {} |\n", r.theta, r.class_size, r.fixed_order, r.fibre, r.orbit_size, r.outcome));
            }
            out
        }
    })
}
