//! Hall inner product, perp operators, heat operators, and the passage
//! between Schur and symplectic Schur expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{q, q_frac, SymFn, Q};

fn q_big(n: BigUint) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `⟨f, g⟩` with `⟨p_λ, p_μ⟩ = z(λ) δ_{λμ}`.
pub fn hall_pairing(f: &SymFn, g: &SymFn) -> Q {
    let mut acc = Q::zero();
    for (lam, a) in f.iter() {
        let b = g.coeff(lam);
        if !b.is_zero() {
            acc += a * b * q_big(lam.z());
        }
    }
    acc
}

/// `p_μ^⊥ p_λ`: each `p_i` acts as `i ∂/∂p_i`.
fn perp_monomial(mu: &Partition, lam: &Partition) -> Option<(Partition, Q)> {
    let mut coeff = BigUint::one();
    for (part, a) in mu.multiplicities() {
        let b = lam.multiplicity(part);
        if b < a {
            return None;
        }
        for k in 0..a {
            coeff *= BigUint::from(part) * BigUint::from(b - k);
        }
    }
    Some((lam.difference(mu)?, q_big(coeff)))
}

/// `f^⊥ g`, the adjoint of multiplication by `f`.
pub fn perp(f: &SymFn, g: &SymFn) -> SymFn {
    let mut out = SymFn::zero(g.cap());
    for (mu, a) in f.iter() {
        for (lam, b) in g.iter() {
            if let Some((rest, c)) = perp_monomial(mu, lam) {
                out.add_term(rest, a * b * c);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeatKind {
    /// `D = Σ_n (n/2 ∂²/∂p_n² - ∂/∂p_{2n})`
    D,
    /// `D' = Σ_n (n/2 ∂²/∂p_n² + ∂/∂p_{2n})`
    DPrime,
}

/// One application of `D` or `D'`.
pub fn heat_once(kind: HeatKind, f: &SymFn) -> SymFn {
    let odd_sign = match kind {
        HeatKind::D => -Q::one(),
        HeatKind::DPrime => Q::one(),
    };
    let mut out = SymFn::zero(f.cap());
    for (lam, c) in f.iter() {
        for (part, m) in lam.multiplicities() {
            let n = part as usize;
            if m >= 2 {
                let rest = lam.remove_parts(part, 2).expect("multiplicity checked");
                let k = q_frac((n * m * (m - 1)) as i64, 2);
                out.add_term(rest, c * k);
            }
            if n.is_multiple_of(2) {
                let rest = lam.remove_parts(part, 1).expect("multiplicity checked");
                out.add_term(rest, c * &odd_sign * q(m as i64));
            }
        }
    }
    out
}

/// `exp(±kind) f`, a finite sum since each application drops the degree by two.
pub fn apply_heat(kind: HeatKind, negative: bool, f: &SymFn) -> SymFn {
    let mut out = f.clone();
    let mut term = f.clone();
    let mut k = 1i64;
    loop {
        term = heat_once(kind, &term);
        if term.is_zero() {
            break;
        }
        let mut factor = q_frac(1, k);
        if negative && k % 2 == 1 {
            factor = -factor;
        }
        // term holds kind^k f / (k-1)! after this rescale
        let scaled = term.scale(&factor);
        out += &scaled;
        term = term.scale(&q_frac(1, k));
        k += 1;
    }
    out
}

/// Coefficientwise [`apply_heat`] on a series, in parallel over `t`.
pub fn apply_heat_series(kind: HeatKind, negative: bool, f: &CharSeries) -> CharSeries {
    f.par_map(|c| apply_heat(kind, negative, c))
}

/// `Σ m_λ s_⟨λ⟩` for one graded piece.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpDecomposition {
    terms: BTreeMap<Partition, Q>,
    degree: Option<usize>,
}

impl SpDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut d = Self::new();
        for (lam, m) in terms {
            d.add(lam, m);
        }
        d
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = Some(degree);
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn add(&mut self, lam: Partition, m: Q) {
        let entry = self.terms.entry(lam.clone()).or_insert_with(Q::zero);
        *entry += m;
        if entry.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn multiplicity(&self, lam: &Partition) -> Q {
        self.terms.get(lam).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(|l| l.weight()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::from_terms(self.terms.iter().map(|(l, m)| (l.clone(), m * c)));
        out.degree = self.degree;
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|m| m.is_integer())
    }

    /// The multiplicities as nonnegative integers, or the first offending term.
    pub fn as_character(&self) -> Result<BTreeMap<Partition, BigUint>> {
        self.terms
            .iter()
            .map(|(lam, m)| {
                if m.is_integer() && !m.is_negative() {
                    Ok((lam.clone(), m.to_integer().magnitude().clone()))
                } else {
                    Err(Error::NotACharacter {
                        partition: lam.clone(),
                        degree: self.degree.unwrap_or(0),
                        value: m.to_string(),
                    })
                }
            })
            .collect()
    }
}

impl fmt::Display for SpDecomposition {
    /// `2 <1^4> + <2^2,1^2>`; the zero module prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !m.is_one() {
                write!(f, "{m} ")?;
            }
            write!(f, "<{lam}>")?;
        }
        Ok(())
    }
}

/// `f = Σ a_λ s_⟨λ⟩` where `Σ a_λ s_λ = exp(D) f`.
pub fn to_symplectic_basis(f: &SymFn) -> SpDecomposition {
    let lifted = apply_heat(HeatKind::D, false, f);
    SpDecomposition::from_terms(lifted.to_schur_basis())
}

/// A single multiplicity `a_λ`, without expanding the whole Schur basis.
pub fn symplectic_multiplicity(f: &SymFn, lam: &Partition) -> Q {
    apply_heat(HeatKind::D, false, f).schur_coefficient(lam)
}

/// `Σ m_λ s_⟨λ⟩`.
pub fn from_symplectic_basis(d: &SpDecomposition, cap: usize) -> Result<SymFn> {
    let mut out = SymFn::zero(cap);
    for (lam, m) in d.terms() {
        out += &SymFn::sp_schur(lam, cap)?.scale(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_ring::exp_op;
    use crate::partitions::partitions_up_to;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn schur(p: &[u32], cap: usize) -> SymFn {
        SymFn::schur(&part(p), cap).unwrap()
    }

    fn decomp(items: &[(&[u32], i64)]) -> SpDecomposition {
        SpDecomposition::from_terms(items.iter().map(|(p, m)| (part(p), q(*m))))
    }

    #[test]
    fn pairing_examples() {
        let p2 = SymFn::p(2, 4).unwrap();
        assert_eq!(hall_pairing(&p2, &p2), q(2));
        let s21 = schur(&[2, 1], 3);
        assert_eq!(hall_pairing(&s21, &s21), q(1));
        assert_eq!(hall_pairing(&SymFn::h(2, 2).unwrap(), &SymFn::e(2, 2).unwrap()), q(0));
    }

    #[test]
    fn perp_examples() {
        let p1 = SymFn::p(1, 3).unwrap();
        assert_eq!(perp(&p1, &SymFn::h(3, 3).unwrap()), SymFn::h(2, 3).unwrap());
        let p2 = SymFn::p(2, 4).unwrap();
        let p22 = &p2 * &p2;
        assert_eq!(perp(&p2, &p22), p2.scale(&q(4)));
        assert!(perp(&SymFn::p(3, 3).unwrap(), &SymFn::one(3)).is_zero());
    }

    #[test]
    fn perp_is_adjoint_to_multiplication() {
        let cap = 6;
        let f = schur(&[2, 1], cap);
        let h = SymFn::h(3, cap).unwrap();
        for g in [schur(&[3, 2, 1], cap), SymFn::e(6, cap).unwrap(), schur(&[4, 1, 1], cap)] {
            assert_eq!(hall_pairing(&(&f * &h), &g), hall_pairing(&h, &perp(&f, &g)));
        }
    }

    #[test]
    fn heat_examples() {
        let s11 = schur(&[1, 1], 2);
        assert_eq!(apply_heat(HeatKind::D, true, &s11), &s11 - &SymFn::one(2));
        let s111 = schur(&[1, 1, 1], 3);
        assert_eq!(apply_heat(HeatKind::D, true, &s111), &s111 - &schur(&[1], 3));
        let s1 = schur(&[1], 1);
        assert_eq!(apply_heat(HeatKind::D, true, &s1), s1);
        let h2 = SymFn::h(2, 2).unwrap();
        assert_eq!(apply_heat(HeatKind::DPrime, true, &h2), &h2 - &SymFn::one(2));
    }

    #[test]
    fn heat_exponentials_are_inverse() {
        let cap = 10;
        for lam in partitions_up_to(cap) {
            let f = SymFn::monomial(lam, q(1), cap);
            for kind in [HeatKind::D, HeatKind::DPrime] {
                let there = apply_heat(kind, true, &f);
                assert_eq!(apply_heat(kind, false, &there), f);
            }
        }
    }

    #[test]
    fn heat_intertwines_omega_tilde() {
        let cap = 10;
        for lam in partitions_up_to(cap) {
            let f = SymFn::monomial(lam, q(1), cap);
            let lhs = apply_heat(HeatKind::D, true, &f.omega_tilde());
            let rhs = apply_heat(HeatKind::DPrime, true, &f).omega_tilde();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn determinant_matches_heat_kernel() {
        for lam in partitions_up_to(8) {
            let cap = lam.weight();
            let via_heat = apply_heat(HeatKind::D, true, &SymFn::schur(&lam, cap).unwrap());
            assert_eq!(SymFn::sp_schur(&lam, cap).unwrap(), via_heat, "λ = {lam:?}");
        }
    }

    #[test]
    fn exp_e2_perp_is_heat() {
        let cap = 8;
        let e2 = CharSeries::from_symfn(SymFn::e(2, cap).unwrap(), 0);
        let kernel = exp_op(&e2).unwrap().coefficient_at(0).unwrap().clone();
        for lam in partitions_up_to(cap) {
            let g = SymFn::monomial(lam, q(1), cap);
            assert_eq!(perp(&kernel, &g), apply_heat(HeatKind::D, false, &g));
        }
    }

    #[test]
    fn symplectic_basis_examples() {
        let p11 = &SymFn::p(1, 2).unwrap() * &SymFn::p(1, 2).unwrap();
        assert_eq!(to_symplectic_basis(&p11), decomp(&[(&[2], 1), (&[1, 1], 1), (&[], 1)]));
        assert_eq!(
            to_symplectic_basis(&schur(&[1, 1], 2)),
            decomp(&[(&[1, 1], 1), (&[], 1)])
        );
        let sp22 = SymFn::sp_schur(&part(&[2, 2]), 4).unwrap();
        assert_eq!(to_symplectic_basis(&sp22), decomp(&[(&[2, 2], 1)]));

        assert_eq!(from_symplectic_basis(&decomp(&[(&[], 1)]), 3).unwrap(), SymFn::one(3));
        assert_eq!(
            from_symplectic_basis(&decomp(&[(&[1, 1, 1], 1)]), 3).unwrap(),
            &schur(&[1, 1, 1], 3) - &schur(&[1], 3)
        );
        assert!(matches!(
            from_symplectic_basis(&decomp(&[(&[2, 2], 1)]), 3),
            Err(Error::CapViolation { .. })
        ));
    }

    #[test]
    fn symplectic_basis_roundtrip() {
        let cap = 8;
        for lam in partitions_up_to(cap) {
            let f = SymFn::monomial(lam, q(1), cap);
            let d = to_symplectic_basis(&f);
            assert_eq!(from_symplectic_basis(&d, cap).unwrap(), f);
        }
    }

    #[test]
    fn tensor_powers_branch_positively() {
        let cap = 6;
        let h1 = SymFn::h(1, cap).unwrap();
        let mut power = SymFn::one(cap);
        for _ in 1..=6 {
            power = &power * &h1;
            let d = to_symplectic_basis(&power);
            assert!(d.as_character().is_ok(), "{d}");
        }
        let cube = &(&h1 * &h1) * &h1;
        assert_eq!(
            to_symplectic_basis(&cube),
            decomp(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1), (&[1], 3)])
        );
    }

    #[test]
    fn character_check_flags_bad_terms() {
        let d = SpDecomposition::from_terms([(part(&[2]), q_frac(1, 2))]).with_degree(3);
        assert!(matches!(d.as_character(), Err(Error::NotACharacter { degree: 3, .. })));
        let d = decomp(&[(&[2], -1)]);
        assert!(d.as_character().is_err());
    }

    #[test]
    fn display() {
        let d = decomp(&[(&[1, 1, 1, 1], 2), (&[2, 2, 1, 1], 1), (&[], 1)]);
        assert_eq!(d.to_string(), "<0> + 2 <1^4> + <2^2,1^2>");
    }
}
