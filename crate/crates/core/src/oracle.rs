//! Brute-force reference computations in finitely many variables.
//!
//! Nothing here goes through Newton's recursion, determinants, characters or
//! Adams operations: `h`, `e` and `s` are monomial or tableau sums, and
//! plethysm substitutes an explicit monomial alphabet. Everything is
//! exponential in the degree and meant for degree 8 or less.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{SymFn, Q};

/// Values `x_1..x_k` for the variables, plus an optional value for `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct Specialization {
    values: Vec<Q>,
    t: Option<Q>,
}

impl Specialization {
    pub fn new(values: Vec<Q>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Oracle("a specialization needs at least one variable".into()));
        }
        Ok(Specialization { values, t: None })
    }

    pub fn with_t(mut self, t: Q) -> Self {
        self.t = Some(t);
        self
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    fn power_sum(&self, n: u32) -> Q {
        self.values.iter().map(|x| pow(x, n)).sum()
    }
}

fn pow(x: &Q, n: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// `f(x)` with `p_n = Σ_i x_i^n`. Faithful on degrees up to the number of variables.
pub fn evaluate(f: &SymFn, s: &Specialization) -> Q {
    let mut cache: HashMap<u32, Q> = HashMap::new();
    let mut acc = Q::zero();
    for (lam, c) in f.iter() {
        let mut term = c.clone();
        for &part in lam.parts() {
            let v = cache.entry(part).or_insert_with(|| s.power_sum(part));
            term *= &*v;
        }
        acc += term;
    }
    acc
}

/// `Σ_j t^j f_j(x)`; needs a value for `t`.
pub fn evaluate_series(f: &CharSeries, s: &Specialization) -> Result<Q> {
    let t = s
        .t
        .as_ref()
        .ok_or_else(|| Error::Oracle("specialization has no value for t".into()))?;
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| pow(t, j as u32) * evaluate(c, s))
        .sum())
}

/// An explicit polynomial in `k` variables: exponent vector → coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: HashMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly {
            vars,
            terms: HashMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], Q::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: &[u32]) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * pow(xi, k))
            })
            .sum()
    }

    /// Keeps only the terms of total degree `d`.
    fn homogeneous(&self, d: u32) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    fn max_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

/// `Σ_i x_i^n`.
pub fn power_sum_poly(n: u32, vars: usize) -> Poly {
    let mut p = Poly::zero(vars);
    for i in 0..vars {
        let mut e = vec![0; vars];
        e[i] = n;
        p.add_term(e, Q::one());
    }
    p
}

fn exponent_vectors(n: u32, vars: usize, max_each: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if cur.len() == vars {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for a in 0..=n.min(max_each) {
        cur.push(a);
        exponent_vectors(n - a, vars, max_each, out, cur);
        cur.pop();
    }
}

/// Sum of all monomials of degree `n`.
pub fn complete_poly(n: u32, vars: usize) -> Poly {
    let mut exps = Vec::new();
    exponent_vectors(n, vars, n, &mut exps, &mut Vec::new());
    let mut p = Poly::zero(vars);
    for e in exps {
        p.add_term(e, Q::one());
    }
    p
}

/// Sum of all squarefree monomials of degree `n`.
pub fn elementary_poly(n: u32, vars: usize) -> Poly {
    let mut exps = Vec::new();
    exponent_vectors(n, vars, 1, &mut exps, &mut Vec::new());
    let mut p = Poly::zero(vars);
    for e in exps {
        p.add_term(e, Q::one());
    }
    p
}

/// Fills the cells of `shape` row by row with entries in `0..vars`,
/// weakly increasing along rows and strictly down columns.
fn fill_tableaux(shape: &[u32], vars: usize, cells: &mut Vec<Vec<u32>>, row: usize, col: usize, out: &mut Poly) {
    if row == shape.len() {
        let mut e = vec![0; vars];
        for r in cells.iter() {
            for &v in r {
                e[v as usize] += 1;
            }
        }
        out.add_term(e, Q::one());
        return;
    }
    if col == shape[row] as usize {
        cells.push(Vec::new());
        fill_tableaux(shape, vars, cells, row + 1, 0, out);
        cells.pop();
        return;
    }
    let left = if col > 0 { cells[row][col - 1] } else { 0 };
    let above = if row > 0 { Some(cells[row - 1][col]) } else { None };
    let low = match above {
        Some(a) => left.max(a + 1),
        None => left,
    };
    for v in low..vars as u32 {
        cells[row].push(v);
        fill_tableaux(shape, vars, cells, row, col + 1, out);
        cells[row].pop();
    }
}

/// `s_λ` as a sum over semistandard tableaux.
pub fn schur_poly(lam: &Partition, vars: usize) -> Poly {
    let mut out = Poly::zero(vars);
    let mut cells = vec![Vec::new()];
    fill_tableaux(lam.parts(), vars, &mut cells, 0, 0, &mut out);
    out
}

/// The p-monomial `p_λ` as an explicit polynomial.
fn power_monomial_poly(lam: &Partition, vars: usize) -> Poly {
    lam.parts()
        .iter()
        .fold(Poly::one(vars), |acc, &n| acc.mul(&power_sum_poly(n, vars)))
}

/// Exact Gaussian elimination; `None` if the matrix is singular.
fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Q::one() / &a[col][col];
        let pivot = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for (x, p) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *x -= p * &factor;
            }
            let v = &b[col] * &factor;
            b[r] -= v;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Reads a symmetric polynomial back in the p-basis, degree by degree up to `vars`.
pub fn to_power_sums(poly: &Poly) -> Result<SymFn> {
    let k = poly.vars();
    if poly.max_degree() as usize > k {
        return Err(Error::Oracle(format!(
            "degree {} needs at least that many variables, have {k}",
            poly.max_degree()
        )));
    }
    let mut out = SymFn::zero(k);
    for d in 0..=k {
        let part = poly.homogeneous(d as u32);
        if part.is_zero() {
            continue;
        }
        let shapes = partitions_of(d);
        // coefficient of x^ν for each ν ⊢ d, padded to k variables
        let key = |nu: &Partition| {
            let mut e: Vec<u32> = nu.parts().to_vec();
            e.resize(k, 0);
            e
        };
        let basis: Vec<Poly> = shapes.iter().map(|mu| power_monomial_poly(mu, k)).collect();
        let matrix: Vec<Vec<Q>> = shapes
            .iter()
            .map(|nu| basis.iter().map(|p| p.coeff(&key(nu))).collect())
            .collect();
        let rhs: Vec<Q> = shapes.iter().map(|nu| part.coeff(&key(nu))).collect();
        let sol = solve(matrix, rhs).ok_or_else(|| Error::Oracle("singular power-sum system".into()))?;
        for (mu, c) in shapes.into_iter().zip(sol) {
            out.add_term(mu, c);
        }
    }
    Ok(out)
}

/// Expands a p-basis element into `k` explicit variables.
pub fn to_poly(f: &SymFn, vars: usize) -> Poly {
    let mut out = Poly::zero(vars);
    for (lam, c) in f.iter() {
        out = out.add(&power_monomial_poly(lam, vars).scale(c));
    }
    out
}

/// `f ∘ g` by substituting the monomials of `g`, repeated by multiplicity, as the alphabet of `f`.
pub fn brute_plethysm(f: &SymFn, g: &SymFn, vars: usize) -> Result<SymFn> {
    let g_poly = to_poly(g, vars);
    let mut alphabet: Vec<(Vec<u32>, Q)> = Vec::new();
    for (e, c) in g_poly.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Oracle(format!(
                "inner argument has coefficient {c} at {e:?}; need nonnegative integers"
            )));
        }
        alphabet.push((e.clone(), c.clone()));
    }
    alphabet.sort();
    // p_n of the alphabet: Σ_m c_m (x^m)^n
    let mut power_sums: BTreeMap<u32, Poly> = BTreeMap::new();
    let mut out = Poly::zero(vars);
    for (lam, c) in f.iter() {
        let mut term = Poly::one(vars);
        for &n in lam.parts() {
            let pn = power_sums.entry(n).or_insert_with(|| {
                let mut p = Poly::zero(vars);
                for (e, m) in &alphabet {
                    p.add_term(e.iter().map(|a| a * n).collect(), m.clone());
                }
                p
            });
            term = term.mul(pn);
        }
        out = out.add(&term.scale(c));
    }
    to_power_sums(&out)
}
