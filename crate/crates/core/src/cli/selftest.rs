//! Quick engine-versus-oracle checks behind `symchar selftest`.

use crate::error::{Error, Result};
use crate::lambda_ring::plethysm_sym;
use crate::oracle::{brute_plethysm, complete_poly, elementary_poly, evaluate, schur_poly, Specialization};
use crate::partitions::partitions_up_to;
use crate::symfunc::{q_frac, SymFn};
use crate::torelli_chars::{char_a, char_torelli, Object};

use super::golden::{golden_check, GoldenTable};

const DEGREE: usize = 6;

/// Eight fixed rational points in `DEGREE` variables.
fn points() -> Vec<Specialization> {
    (0..8i64)
        .map(|s| {
            let values = (0..DEGREE as i64).map(|i| q_frac(3 * i + s + 1, i + s + 2) - q_frac(s % 3, 1)).collect();
            Specialization::new(values).expect("nonempty")
        })
        .collect()
}

fn agree(name: &str, engine: &SymFn, oracle: impl Fn(&Specialization) -> crate::symfunc::Q) -> Result<()> {
    for x in points() {
        let (a, b) = (evaluate(engine, &x), oracle(&x));
        if a != b {
            return Err(Error::Oracle(format!("{name}: engine {a} vs oracle {b} at {:?}", x.values())));
        }
    }
    Ok(())
}

fn conversions() -> Result<()> {
    for n in 0..=DEGREE {
        agree(&format!("h_{n}"), &SymFn::h(n, DEGREE)?, |x| complete_poly(n as u32, DEGREE).eval(x.values()))?;
        agree(&format!("e_{n}"), &SymFn::e(n, DEGREE)?, |x| elementary_poly(n as u32, DEGREE).eval(x.values()))?;
    }
    for lam in partitions_up_to(DEGREE) {
        let poly = schur_poly(&lam, DEGREE);
        agree(&format!("s_{lam}"), &SymFn::schur(&lam, DEGREE)?, |x| poly.eval(x.values()))?;
    }
    Ok(())
}

fn plethysms() -> Result<()> {
    let pairs: [(SymFn, SymFn); 5] = [
        (SymFn::h(2, 2)?, SymFn::h(2, 2)?),
        (SymFn::e(2, 2)?, SymFn::e(2, 2)?),
        (SymFn::h(2, 2)?, SymFn::e(3, 3)?),
        (SymFn::e(3, 3)?, SymFn::h(2, 2)?),
        (SymFn::p(2, 2)?, SymFn::e(2, 2)?),
    ];
    for (f, g) in &pairs {
        let degree = f.degree().unwrap_or(0) * g.degree().unwrap_or(0);
        let g_room = g.clone().recap(degree);
        let engine = plethysm_sym(f, &g_room)?;
        let oracle = brute_plethysm(f, g, degree)?;
        if engine != oracle {
            return Err(Error::Oracle(format!("plethysm {f} ∘ {g}: {engine} vs {oracle}")));
        }
    }
    Ok(())
}

fn small_tables() -> Result<()> {
    let a = golden_check(&GoldenTable::bundled(Object::A)?, &char_a(2)?);
    let t = golden_check(&GoldenTable::bundled(Object::Torelli)?, &char_torelli(4)?);
    for report in [a, t] {
        if !report.discrepancies.is_empty() {
            return Err(Error::Oracle(report.to_string()));
        }
    }
    Ok(())
}

pub fn run() -> Vec<(&'static str, Result<()>)> {
    vec![
        ("h, e, s against monomial and tableau sums", conversions()),
        ("plethysm against substituted alphabets", plethysms()),
        ("low-degree reference tables", small_tables()),
    ]
}
