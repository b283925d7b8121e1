//! Truncated power series in `t` with symmetric-function coefficients.
//!
//! A [`CharSeries`] lives in `Λ_Q[[t]]` modulo `t^{T+1}` and symmetric degree
//! above `S`. Binary operations take the componentwise minimum of the caps.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{Q, SymFn};

#[derive(Clone, PartialEq, Eq)]
pub struct CharSeries {
    sym_cap: usize,
    t_cap: usize,
    coeffs: Vec<SymFn>,
}

impl CharSeries {
    pub fn zero(sym_cap: usize, t_cap: usize) -> Self {
        CharSeries {
            sym_cap,
            t_cap,
            coeffs: vec![SymFn::zero(sym_cap); t_cap + 1],
        }
    }

    pub fn one(sym_cap: usize, t_cap: usize) -> Self {
        Self::from_symfn(SymFn::one(sym_cap), t_cap)
    }

    /// The constant series `f · t^0`.
    pub fn from_symfn(f: SymFn, t_cap: usize) -> Self {
        let sym_cap = f.cap();
        let mut out = Self::zero(sym_cap, t_cap);
        out.coeffs[0] = f;
        out
    }

    /// `c · t^j`, zero when `j` exceeds the t-cap.
    pub fn t_power(j: usize, c: Q, sym_cap: usize, t_cap: usize) -> Self {
        let mut out = Self::zero(sym_cap, t_cap);
        if j <= t_cap {
            out.coeffs[j] = SymFn::constant(c, sym_cap);
        }
        out
    }

    /// Builds a series from its t-coefficients; missing tail entries are zero.
    pub fn from_coeffs(coeffs: Vec<SymFn>, sym_cap: usize, t_cap: usize) -> Self {
        let mut out = Self::zero(sym_cap, t_cap);
        for (j, f) in coeffs.into_iter().enumerate().take(t_cap + 1) {
            out.coeffs[j] = f.with_cap(sym_cap);
        }
        out
    }

    /// A pure t-series with rational coefficients.
    pub fn from_scalars(values: &[Q], t_cap: usize) -> Self {
        let coeffs = values.iter().map(|c| SymFn::constant(c.clone(), 0)).collect();
        Self::from_coeffs(coeffs, 0, t_cap)
    }

    pub fn sym_cap(&self) -> usize {
        self.sym_cap
    }

    pub fn t_cap(&self) -> usize {
        self.t_cap
    }

    pub fn coeffs(&self) -> &[SymFn] {
        &self.coeffs
    }

    /// The symmetric function multiplying `t^j`.
    pub fn coefficient_at(&self, j: usize) -> Result<&SymFn> {
        self.coeffs.get(j).ok_or(Error::OutOfRange {
            index: j,
            cap: self.t_cap,
        })
    }

    pub fn set_coefficient(&mut self, j: usize, f: SymFn) -> Result<()> {
        if j > self.t_cap {
            return Err(Error::OutOfRange {
                index: j,
                cap: self.t_cap,
            });
        }
        self.coeffs[j] = f.with_cap(self.sym_cap);
        Ok(())
    }

    /// The rational coefficient of `p_∅ t^j`; zero outside the caps.
    pub fn scalar_at(&self, j: usize) -> Q {
        self.coeffs.get(j).map(|f| f.epsilon()).unwrap_or_else(Q::zero)
    }

    /// Scalar parts of every coefficient, `t^0` first.
    pub fn scalars(&self) -> Vec<Q> {
        self.coeffs.iter().map(|f| f.epsilon()).collect()
    }

    /// Coefficient of `p_∅ t^0`.
    pub fn constant_term(&self) -> Q {
        self.scalar_at(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|f| f.is_zero())
    }

    /// True when no coefficient carries symmetric degree above zero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs.iter().all(|f| f.low_degree().is_none() || f.degree() == Some(0))
    }

    /// Truncates to smaller caps.
    pub fn truncate(&self, sym_cap: usize, t_cap: usize) -> Self {
        let sym_cap = sym_cap.min(self.sym_cap);
        let t_cap = t_cap.min(self.t_cap);
        CharSeries {
            sym_cap,
            t_cap,
            coeffs: self.coeffs[..=t_cap]
                .iter()
                .map(|f| f.clone().with_cap(sym_cap))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map(|f| f.scale(c))
    }

    /// Applies `op` to every t-coefficient.
    pub fn map(&self, op: impl Fn(&SymFn) -> SymFn) -> Self {
        let coeffs: Vec<SymFn> = self.coeffs.iter().map(op).collect();
        CharSeries::from_coeffs(coeffs, self.sym_cap, self.t_cap)
    }

    /// Same as [`CharSeries::map`], running the coefficients in parallel.
    pub fn par_map(&self, op: impl Fn(&SymFn) -> SymFn + Sync + Send) -> Self {
        use rayon::prelude::*;
        let coeffs: Vec<SymFn> = self.coeffs.par_iter().map(op).collect();
        CharSeries::from_coeffs(coeffs, self.sym_cap, self.t_cap)
    }

    /// Multiplication by `t^k`.
    pub fn shift_by_t_power(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sym_cap, self.t_cap);
        for j in 0..=self.t_cap {
            if j + k > self.t_cap {
                break;
            }
            out.coeffs[j + k] = self.coeffs[j].clone();
        }
        out
    }

    /// `t ↦ -t`: the `t^j` coefficient picks up `(-1)^j`.
    pub fn substitute_neg_t(&self) -> Self {
        let mut out = self.clone();
        for (j, f) in out.coeffs.iter_mut().enumerate() {
            if j % 2 == 1 {
                *f = -&*f;
            }
        }
        out
    }

    /// Multiplication by `1/(1 - t^2) = Σ_j t^{2j}`.
    pub fn geometric_factor(&self) -> Self {
        let mut out = self.clone();
        for j in 2..=self.t_cap {
            let prev = out.coeffs[j - 2].clone();
            out.coeffs[j] += &prev;
        }
        out
    }

    /// Terms `c p_λ t^j` in t-order, then canonical partition order.
    pub fn sorted_terms(&self) -> Vec<(usize, Partition, Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(j, f)| f.sorted_terms().into_iter().map(move |(l, c)| (j, l, c)))
            .collect()
    }

    fn mul_impl(&self, rhs: &CharSeries) -> CharSeries {
        let sym_cap = self.sym_cap.min(rhs.sym_cap);
        let t_cap = self.t_cap.min(rhs.t_cap);
        let mut out = CharSeries::zero(sym_cap, t_cap);
        for (i, a) in self.coeffs.iter().enumerate().take(t_cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(t_cap + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &a.mul_truncated(b, sym_cap);
            }
        }
        out
    }
}

impl AddAssign<&CharSeries> for CharSeries {
    fn add_assign(&mut self, rhs: &CharSeries) {
        if rhs.sym_cap < self.sym_cap || rhs.t_cap < self.t_cap {
            *self = self.truncate(rhs.sym_cap, rhs.t_cap);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CharSeries> for CharSeries {
    fn sub_assign(&mut self, rhs: &CharSeries) {
        if rhs.sym_cap < self.sym_cap || rhs.t_cap < self.t_cap {
            *self = self.truncate(rhs.sym_cap, rhs.t_cap);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Add for &CharSeries {
    type Output = CharSeries;
    fn add(self, rhs: &CharSeries) -> CharSeries {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CharSeries {
    type Output = CharSeries;
    fn sub(self, rhs: &CharSeries) -> CharSeries {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CharSeries {
    type Output = CharSeries;
    fn neg(self) -> CharSeries {
        self.scale(&-Q::one())
    }
}

impl Mul for &CharSeries {
    type Output = CharSeries;
    fn mul(self, rhs: &CharSeries) -> CharSeries {
        self.mul_impl(rhs)
    }
}

impl Add for CharSeries {
    type Output = CharSeries;
    fn add(mut self, rhs: CharSeries) -> CharSeries {
        self += &rhs;
        self
    }
}

impl Sub for CharSeries {
    type Output = CharSeries;
    fn sub(mut self, rhs: CharSeries) -> CharSeries {
        self -= &rhs;
        self
    }
}

impl Mul for CharSeries {
    type Output = CharSeries;
    fn mul(self, rhs: CharSeries) -> CharSeries {
        self.mul_impl(&rhs)
    }
}

impl fmt::Debug for CharSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharSeries[S={}, T={}]", self.sym_cap, self.t_cap)?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "\n  t^{j}: {c}")?;
            }
        }
        Ok(())
    }
}
