//! Schur-type generators and the Schur-basis transition.
//!
//! Generators come from Jacobi–Trudi style determinants expanded by Laplace
//! along rows, memoized on the set of still-unused columns. The transition
//! from power sums to Schur functions uses irreducible characters of the
//! symmetric group: `p_μ = Σ_λ χ^λ(μ) s_λ`, with `χ^λ(μ)` from the
//! Murnaghan–Nakayama rule on beta-sets.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use rayon::prelude::*;

use super::{Q, SymFn};
use crate::partitions::{partitions_of, Partition};

fn h_or_zero(k: i64, cap: usize) -> SymFn {
    if k < 0 {
        SymFn::zero(cap)
    } else {
        SymFn::h(k as usize, cap).expect("entry degree within cap")
    }
}

fn e_or_zero(k: i64, cap: usize) -> SymFn {
    if k < 0 {
        SymFn::zero(cap)
    } else {
        SymFn::e(k as usize, cap).expect("entry degree within cap")
    }
}

/// Determinant of a square matrix over Λ by row expansion with memoized minors.
fn determinant(matrix: &[Vec<SymFn>], cap: usize) -> SymFn {
    let n = matrix.len();
    if n == 0 {
        return SymFn::one(cap);
    }
    assert!(n < 64, "determinant too large for column bitmask");
    let mut memo: HashMap<u64, SymFn> = HashMap::new();
    minor(matrix, 0, (1u64 << n) - 1, cap, &mut memo)
}

fn minor(matrix: &[Vec<SymFn>], row: usize, cols: u64, cap: usize, memo: &mut HashMap<u64, SymFn>) -> SymFn {
    if row == matrix.len() {
        return SymFn::one(cap);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = SymFn::zero(cap);
    let mut position = 0;
    for j in 0..matrix.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &matrix[row][j];
        if !entry.is_zero() {
            let sub = minor(matrix, row + 1, cols & !(1 << j), cap, memo);
            let term = entry * &sub;
            if position % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `s_λ = det(h_{λ_i - i + j})`, or the dual `det(e_{λ'_i - i + j})` when that is smaller.
pub fn schur_jacobi_trudi(lam: &Partition) -> SymFn {
    let cap = lam.weight();
    let (rows, use_e) = if lam.len() <= lam.largest() as usize {
        (lam.parts().to_vec(), false)
    } else {
        (lam.conjugate().parts().to_vec(), true)
    };
    let n = rows.len();
    let matrix: Vec<Vec<SymFn>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = rows[i] as i64 - i as i64 + j as i64;
                    if use_e {
                        e_or_zero(k, cap)
                    } else {
                        h_or_zero(k, cap)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix, cap)
}

/// `s_⟨λ⟩ = ½ det(h_{λ_i - i + j} + h_{λ_i - i - j + 2})`, indices from 1.
pub fn sp_schur_jacobi_trudi(lam: &Partition) -> SymFn {
    let cap = lam.weight();
    let n = lam.len();
    if n == 0 {
        return SymFn::one(cap);
    }
    let matrix: Vec<Vec<SymFn>> = (1..=n)
        .map(|i| {
            let li = lam.parts()[i - 1] as i64;
            let i = i as i64;
            (1..=n as i64)
                .map(|j| &h_or_zero(li - i + j, cap) + &h_or_zero(li - i - j + 2, cap))
                .collect()
        })
        .collect();
    determinant(&matrix, cap).scale(&super::q_frac(1, 2))
}

/// The same symplectic Schur function from the conjugate shape:
/// `det(e_{λ'_i - i + j} - e_{λ'_i - i - j})`.
pub fn sp_schur_dual(lam: &Partition) -> SymFn {
    let cap = lam.weight();
    let conj = lam.conjugate();
    let n = conj.len();
    let matrix: Vec<Vec<SymFn>> = (1..=n)
        .map(|i| {
            let ci = conj.parts()[i - 1] as i64;
            let i = i as i64;
            (1..=n as i64)
                .map(|j| &e_or_zero(ci - i + j, cap) - &e_or_zero(ci - i - j, cap))
                .collect()
        })
        .collect();
    determinant(&matrix, cap)
}

type CharKey = (Partition, Partition);

static CHARACTERS: Lazy<RwLock<HashMap<CharKey, i128>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Irreducible character `χ^λ` of the symmetric group at cycle type `μ`.
///
/// Zero when the weights differ.
pub fn sn_character(lam: &Partition, mu: &Partition) -> i128 {
    if lam.weight() != mu.weight() {
        return 0;
    }
    character_rec(lam, mu)
}

fn character_rec(lam: &Partition, mu: &Partition) -> i128 {
    if mu.is_empty() {
        return 1;
    }
    if lam.len() == 1 || mu.len() == 1 && lam.parts().iter().filter(|&&p| p > 1).count() <= 1 {
        // one-row shape, or a hook against a single cycle
        return closed_form(lam);
    }
    let key = (lam.clone(), mu.clone());
    if let Some(&v) = CHARACTERS.read().unwrap().get(&key) {
        return v;
    }
    let r = mu.parts()[0] as i64;
    let rest = Partition::from_sorted(mu.parts()[1..].to_vec());
    let mut total = 0i128;
    for (shape, sign) in remove_rim_hooks(lam, r) {
        total += sign * character_rec(&shape, &rest);
    }
    CHARACTERS.write().unwrap().insert(key, total);
    total
}

fn closed_form(lam: &Partition) -> i128 {
    if lam.len() <= 1 {
        // trivial character
        return 1;
    }
    // hook (a, 1^b) on an n-cycle: (-1)^b
    let b = lam.len() - 1;
    if b.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Shapes obtained by removing a rim hook of length `r`, with the sign `(-1)^{height}`.
fn remove_rim_hooks(lam: &Partition, r: i64) -> Vec<(Partition, i128)> {
    let l = lam.len() as i64;
    // beta-set, strictly decreasing
    let beta: Vec<i64> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + l - 1 - i as i64)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(k, &x)| (x - (l - 1 - k as i64)) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_sorted(parts), sign));
    }
    out
}

pub(super) fn to_schur_basis(f: &SymFn) -> BTreeMap<Partition, Q> {
    let mut out = BTreeMap::new();
    for d in 0..=f.cap() {
        let terms: Vec<(&Partition, &Q)> = f.degree_terms(d).collect();
        if terms.is_empty() {
            continue;
        }
        let shapes = partitions_of(d);
        let coeffs: Vec<(Partition, Q)> = shapes
            .into_par_iter()
            .filter_map(|lam| {
                let c = combine(&lam, &terms);
                (!c.is_zero()).then_some((lam, c))
            })
            .collect();
        out.extend(coeffs);
    }
    out
}

pub(super) fn schur_coefficient(f: &SymFn, lam: &Partition) -> Q {
    let terms: Vec<(&Partition, &Q)> = f.degree_terms(lam.weight()).collect();
    combine(lam, &terms)
}

fn combine(lam: &Partition, terms: &[(&Partition, &Q)]) -> Q {
    let mut acc = Q::zero();
    for (mu, c) in terms {
        let chi = sn_character(lam, mu);
        if chi != 0 {
            acc += *c * Q::from_integer(BigInt::from(chi));
        }
    }
    acc
}
