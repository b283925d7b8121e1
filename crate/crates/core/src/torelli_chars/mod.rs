//! Characters of the quadratic algebra `A`, its one-pointed variant `A1`, the
//! Torelli Lie algebra, and the stable series built from them.
//!
//! Degree-`n` characters are reported with the sign of the `(-t)^n`
//! convention removed, so genuine modules have nonnegative multiplicities.

mod cache;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::hall_ops::{
    apply_heat_series, from_symplectic_basis, to_symplectic_basis, HeatKind, SpDecomposition,
};
use crate::lambda_ring::{exp_op, log_op, plethysm, plethysm_sym};
use crate::partitions::{partitions_bounded, Bounds, Partition};
use crate::symfunc::{q, SymFn, Q};

pub use cache::ExpCache;

/// Changes whenever a formula feeding cached results changes.
pub const FORMULA_FINGERPRINT: &str = "chv-excl-00-10-11-02;exp-adams-log;v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Object {
    A,
    A1,
    Torelli,
}

impl Object {
    pub fn tag(self) -> &'static str {
        match self {
            Object::A => "A",
            Object::A1 => "A1",
            Object::Torelli => "torelli",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Object> {
        match tag {
            "A" => Some(Object::A),
            "A1" => Some(Object::A1),
            "torelli" => Some(Object::Torelli),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpMethod {
    /// `exp(Σ ψ_k(ch_v)/k)`
    #[default]
    Generic,
    /// sum over `γ_λ`
    Gamma,
}

impl ExpMethod {
    pub fn tag(self) -> &'static str {
        match self {
            ExpMethod::Generic => "generic",
            ExpMethod::Gamma => "gamma",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuliKind {
    M,
    C,
}

fn sign(n: usize) -> Q {
    if n.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

fn h(n: usize, cap: usize) -> SymFn {
    SymFn::h(n, cap).expect("degree within cap")
}

/// `ch_t(V) = Σ t^{2k-2+n} h_n` over `k, n ≥ 0` with `2k-2+n ≥ 0`,
/// omitting `(k, n) ∈ {(0,0), (1,0), (1,1), (0,2)}`.
pub fn ch_v(s: usize, t: usize) -> CharSeries {
    const EXCLUDED: [(usize, usize); 4] = [(0, 0), (1, 0), (1, 1), (0, 2)];
    let mut coeffs = vec![SymFn::zero(s); t + 1];
    for n in 0..=s {
        for k in 0.. {
            let j = 2 * k + n;
            if j < 2 {
                continue;
            }
            let j = j - 2;
            if j > t {
                break;
            }
            if !EXCLUDED.contains(&(k, n)) {
                coeffs[j] += &h(n, s);
            }
        }
    }
    CharSeries::from_coeffs(coeffs, s, t)
}

/// `c_n` of the `γ_λ` expansion, for `n ≥ 1`.
fn shift(n: u32) -> usize {
    match n {
        1 => 3,
        2 => 2,
        n => n as usize - 2,
    }
}

/// `δ(λ) = Σ_n c_n l_n`.
pub fn delta(lam: &Partition) -> usize {
    lam.parts().iter().map(|&p| shift(p)).sum()
}

fn geometric_h(n: usize, s: usize, t: usize) -> CharSeries {
    CharSeries::from_symfn(h(n, s), t).geometric_factor()
}

/// `h_l ∘ (h_n / (1 - t^2))`.
fn block(n: usize, l: usize, s: usize, t: usize) -> Result<CharSeries> {
    let outer = CharSeries::from_symfn(h(l, l), t);
    plethysm(&outer, &geometric_h(n, s, t))
}

/// `γ_λ = t^{δ(λ)} Π_n h_{l_n} ∘ (h_n/(1-t^2))` for `λ` with positive parts.
pub fn gamma_lambda(lam: &Partition, s: usize, t: usize) -> Result<CharSeries> {
    let mut out = CharSeries::one(s, t);
    for (n, l) in lam.multiplicities() {
        out = &out * &block(n as usize, l, s, t)?;
    }
    Ok(out.shift_by_t_power(delta(lam)))
}

/// `Π_{n≥1} (1 - t^{2n})^{-1}`, computed as `Exp(Σ_{n≥1} t^{2n})`.
pub fn gamma_infinity(t: usize) -> CharSeries {
    let evens = CharSeries::t_power(2, q(1), 0, t).geometric_factor();
    exp_op(&evens).expect("positive filtration")
}

fn exp_ch_v_gamma(s: usize, t: usize) -> Result<CharSeries> {
    let mut shapes = Vec::new();
    for w in 1..=s {
        for lam in partitions_bounded(w, Bounds::default()) {
            if delta(&lam) <= t {
                shapes.push(lam);
            }
        }
    }
    // The blocks h_l ∘ (h_n/(1-t^2)) are shared between shapes.
    let mut keys: Vec<(u32, usize)> = shapes.iter().flat_map(|l| l.multiplicities()).collect();
    keys.sort_unstable();
    keys.dedup();
    let blocks: BTreeMap<(u32, usize), CharSeries> = keys
        .into_par_iter()
        .map(|(n, l)| block(n as usize, l, s, t).map(|b| ((n, l), b)))
        .collect::<Result<_>>()?;
    let terms: Vec<CharSeries> = shapes
        .par_iter()
        .map(|lam| {
            let mut out = CharSeries::one(s, t);
            for key in lam.multiplicities() {
                out = &out * &blocks[&key];
            }
            out.shift_by_t_power(delta(lam))
        })
        .collect();
    let mut total = CharSeries::one(s, t);
    for x in &terms {
        total += x;
    }
    // The n = 0 block Exp(t^2/(1-t^2)) carries no symmetric content.
    Ok(&lift_scalars(&gamma_infinity(t), s) * &total)
}

fn lift_scalars(f: &CharSeries, s: usize) -> CharSeries {
    let values = f.scalars();
    CharSeries::from_coeffs(values.into_iter().map(|c| SymFn::constant(c, s)).collect(), s, f.t_cap())
}

/// `Exp(ch_t(V))` at caps `(S, T)` by either method.
pub fn exp_ch_v(s: usize, t: usize, method: ExpMethod) -> Result<CharSeries> {
    match method {
        ExpMethod::Generic => exp_op(&ch_v(s, t)),
        ExpMethod::Gamma => exp_ch_v_gamma(s, t),
    }
}

/// Sp decompositions of each graded piece, per degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub object: Object,
    pub degrees: BTreeMap<usize, SpDecomposition>,
    pub sym_cap: usize,
    pub t_cap: usize,
    pub fingerprint: String,
}

impl CharacterTable {
    pub fn degree(&self, n: usize) -> Option<&SpDecomposition> {
        self.degrees.get(&n)
    }

    /// Fails on the first multiplicity that is not a nonnegative integer.
    pub fn validate(&self) -> Result<()> {
        for d in self.degrees.values() {
            d.as_character()?;
        }
        Ok(())
    }
}

/// Schur expansion of `ω̃ f_n` with the `(-1)^n` sign removed, i.e. the
/// Sp-decomposition of the `t^n` coefficient of `ω̃ exp(-D') f`.
fn sp_table_from_exp(f: &CharSeries, degrees: std::ops::RangeInclusive<usize>) -> Result<BTreeMap<usize, SpDecomposition>> {
    degrees
        .into_par_iter()
        .map(|n| {
            let coeff = f.coefficient_at(n)?.omega_tilde();
            let terms = coeff.to_schur_basis().into_iter().map(|(l, c)| (l, c * sign(n)));
            Ok((n, SpDecomposition::from_terms(terms).with_degree(n)))
        })
        .collect()
}

/// Runs the pipeline with a chosen `Exp` method and an optional disk cache.
#[derive(Debug, Default)]
pub struct Pipeline {
    method: ExpMethod,
    cache: Option<ExpCache>,
    notes: Mutex<Vec<String>>,
}

impl Pipeline {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_method(mut self, method: ExpMethod) -> Self {
        self.method = method;
        self
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache = Some(ExpCache::new(dir.into()));
        self
    }

    pub fn method(&self) -> ExpMethod {
        self.method
    }

    /// Non-fatal problems seen so far, such as an unreadable cache file.
    pub fn diagnostics(&self) -> Vec<String> {
        self.notes.lock().unwrap().clone()
    }

    fn note(&self, msg: String) {
        self.notes.lock().unwrap().push(msg);
    }

    /// `Exp(ch_t(V))`, read from or written to the cache when one is set.
    pub fn exp_ch_v(&self, s: usize, t: usize) -> Result<CharSeries> {
        if let Some(cache) = &self.cache {
            match cache.load(s, t, self.method) {
                Ok(Some(hit)) => return Ok(hit),
                Ok(None) => {}
                Err(e) => self.note(format!("{e}; recomputing")),
            }
        }
        let value = exp_ch_v(s, t, self.method)?;
        if let Some(cache) = &self.cache {
            if let Err(e) = cache.store(s, t, self.method, &value) {
                self.note(e.to_string());
            }
        }
        Ok(value)
    }

    fn table(&self, object: Object, degrees: BTreeMap<usize, SpDecomposition>, s: usize, t: usize) -> Result<CharacterTable> {
        let table = CharacterTable {
            object,
            degrees,
            sym_cap: s,
            t_cap: t,
            fingerprint: format!("{FORMULA_FINGERPRINT};{}", self.method.tag()),
        };
        table.validate()?;
        Ok(table)
    }

    /// `cch_t(A) = ω̃ exp(-D') Exp(ch_t V)` at caps `(3n, n)`.
    pub fn cch_a(&self, n_max: usize) -> Result<CharSeries> {
        let e = self.exp_ch_v(3 * n_max, n_max)?;
        Ok(apply_heat_series(HeatKind::DPrime, true, &e).map(|c| c.omega_tilde()))
    }

    pub fn char_a(&self, n_max: usize) -> Result<CharacterTable> {
        let (s, t) = (3 * n_max, n_max);
        let e = self.exp_ch_v(s, t)?;
        self.table(Object::A, sp_table_from_exp(&e, 0..=n_max)?, s, t)
    }

    /// Same as [`Pipeline::char_a`] with `Exp(t h_1) = Σ t^n h_n` multiplied in.
    pub fn char_a1(&self, n_max: usize) -> Result<CharacterTable> {
        let (s, t) = (3 * n_max, n_max);
        let e = self.exp_ch_v(s, t)?;
        let marked = CharSeries::from_coeffs((0..=t).map(|n| h(n, s)).collect(), s, t);
        let f = &e * &marked;
        self.table(Object::A1, sp_table_from_exp(&f, 0..=n_max)?, s, t)
    }

    /// `cch_t(t) = t^2 - Log(cch_t(A))|_{t ↦ -t}`, truncated to `|λ| ≤ n + 2`.
    ///
    /// The sign flip on `t` is applied after `Log`; flipping first does not
    /// commute with the Adams operations inside `Log` and yields negative
    /// multiplicities already in degree 2.
    pub fn cch_torelli(&self, n_max: usize) -> Result<CharSeries> {
        if n_max == 0 {
            return Err(Error::InvalidArgument("torelli character needs max degree >= 1".into()));
        }
        let s = n_max + 2;
        let a = self.cch_a(n_max)?.truncate(s, n_max);
        let log = log_op(&a)?.substitute_neg_t();
        Ok(&CharSeries::t_power(2, q(1), s, n_max) - &log)
    }

    pub fn char_torelli(&self, n_max: usize) -> Result<CharacterTable> {
        let f = self.cch_torelli(n_max)?;
        let degrees = (1..=n_max)
            .into_par_iter()
            .map(|n| {
                let d = to_symplectic_basis(f.coefficient_at(n)?).scale(&sign(n)).with_degree(n);
                Ok((n, d))
            })
            .collect::<Result<_>>()?;
        self.table(Object::Torelli, degrees, n_max + 2, n_max)
    }

    /// The normalized multiplicity series of `⟨λ⟩` in `cch_t(A)`, through `t^T`.
    pub fn poincare_series(&self, lam: &Partition, t: usize) -> Result<CharSeries> {
        if lam.weight() > 3 * t {
            return Err(Error::CapViolation {
                degree: lam.weight(),
                cap: 3 * t,
            });
        }
        // Schur coefficients of degree |λ| only see that homogeneous part.
        let e = self.exp_ch_v(lam.weight(), t)?;
        let values: Vec<Q> = (0..=t)
            .into_par_iter()
            .map(|n| e.coeffs()[n].omega_tilde().schur_coefficient(lam) * sign(n))
            .collect();
        Ok(CharSeries::from_scalars(&values, t))
    }
}

pub fn char_a(n_max: usize) -> Result<CharacterTable> {
    Pipeline::new().char_a(n_max)
}

pub fn char_a1(n_max: usize) -> Result<CharacterTable> {
    Pipeline::new().char_a1(n_max)
}

pub fn char_torelli(n_max: usize) -> Result<CharacterTable> {
    Pipeline::new().char_torelli(n_max)
}

pub fn poincare_series(lam: &Partition, t: usize) -> Result<CharSeries> {
    Pipeline::new().poincare_series(lam, t)
}

/// `ch_t(M) = γ_∞ Exp(h_1/(1-t^2))` or
/// `ch_t(C) = γ_∞ Exp(Σ_{n≥1} t^{2n-2} h_n/(1-t^2))`.
pub fn stable_moduli_series(kind: ModuliKind, s: usize, t: usize) -> Result<CharSeries> {
    let inner = match kind {
        ModuliKind::M => geometric_h(1.min(s), s, t).truncate(s, t),
        ModuliKind::C => {
            let mut acc = CharSeries::zero(s, t);
            for n in 1..=s {
                if 2 * n - 2 > t {
                    break;
                }
                acc += &CharSeries::from_symfn(h(n, s), t).shift_by_t_power(2 * n - 2);
            }
            acc.geometric_factor()
        }
    };
    let inner = if s == 0 { CharSeries::zero(0, t) } else { inner };
    Ok(&lift_scalars(&gamma_infinity(t), s) * &exp_op(&inner)?)
}

/// `Λ^2` of an Sp-module, via `e_2 ∘ f`.
pub fn wedge2_sp(d: &SpDecomposition) -> Result<SpDecomposition> {
    let cap = 2 * d.max_weight();
    let f = from_symplectic_basis(d, cap)?;
    // room above the top degree marks e_2 as exact for plethysm
    let e2 = SymFn::e(2, cap.max(2) + 1)?;
    Ok(to_symplectic_basis(&plethysm_sym(&e2, &f)?))
}

/// `Exp((cch_t(t) - t^2)|_{t ↦ -t}) · cch_t(A)`, identically one when the
/// Koszul stage is wired consistently.
pub fn koszul_residual(n_max: usize) -> Result<CharSeries> {
    let p = Pipeline::new();
    let torelli = p.cch_torelli(n_max)?;
    let s = torelli.sym_cap();
    let a = p.cch_a(n_max)?.truncate(s, n_max);
    let shifted = (&torelli - &CharSeries::t_power(2, q(1), s, n_max)).substitute_neg_t();
    Ok(&exp_op(&shifted)? * &a)
}
