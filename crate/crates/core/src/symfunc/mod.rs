//! Exact arithmetic in the ring of symmetric functions over the rationals.
//!
//! Elements are stored in the power-sum basis: a [`SymFn`] is a sparse map
//! from partitions λ to the rational coefficient of `p_λ = p_{λ1} p_{λ2} ...`,
//! grouped by homogeneous degree and truncated above a symmetric-degree cap.
//! The complete, elementary, Schur and symplectic Schur functions are
//! expanded into this basis on construction.

mod schur;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use schur::{schur_jacobi_trudi, sp_schur_dual, sp_schur_jacobi_trudi, sn_character};

/// Exact rational coefficients.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An element of Λ⊗Q truncated above symmetric degree `cap`.
#[derive(Clone)]
pub struct SymFn {
    cap: usize,
    by_degree: Vec<HashMap<Partition, Q>>,
}

/// The named bases accepted by [`generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    P,
    H,
    E,
    Schur,
    SpSchur,
}

/// Index of a generator: a degree for `p`, `h`, `e`; a shape for the Schur types.
#[derive(Clone, Debug)]
pub enum GenIndex {
    Degree(usize),
    Shape(Partition),
}

/// Builds a named generator expanded in the power-sum basis.
pub fn generator(basis: Basis, index: GenIndex, cap: usize) -> Result<SymFn> {
    match (basis, index) {
        (Basis::P, GenIndex::Degree(n)) => SymFn::p(n, cap),
        (Basis::H, GenIndex::Degree(n)) => SymFn::h(n, cap),
        (Basis::E, GenIndex::Degree(n)) => SymFn::e(n, cap),
        (Basis::Schur, GenIndex::Shape(lam)) => SymFn::schur(&lam, cap),
        (Basis::SpSchur, GenIndex::Shape(lam)) => SymFn::sp_schur(&lam, cap),
        (Basis::Schur | Basis::SpSchur, GenIndex::Degree(n)) => {
            generator(basis, GenIndex::Shape(Partition::row(n as u32)), cap)
        }
        (b, GenIndex::Shape(lam)) => Err(Error::InvalidArgument(format!(
            "{b:?} generators are indexed by degree, got shape {lam:?}"
        ))),
    }
}

// h_n with cap n, filled lazily by Newton's recursion.
static COMPLETE: Lazy<RwLock<Vec<SymFn>>> = Lazy::new(|| RwLock::new(vec![SymFn::one(0)]));

fn check_cap(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        Err(Error::CapViolation { degree, cap })
    } else {
        Ok(())
    }
}

impl SymFn {
    pub fn zero(cap: usize) -> Self {
        SymFn {
            cap,
            by_degree: vec![HashMap::new(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(Q::one(), cap)
    }

    pub fn constant(c: Q, cap: usize) -> Self {
        Self::monomial(Partition::empty(), c, cap)
    }

    /// `c · p_λ`, or zero when `|λ|` exceeds the cap.
    pub fn monomial(lam: Partition, c: Q, cap: usize) -> Self {
        let mut f = Self::zero(cap);
        f.add_term(lam, c);
        f
    }

    /// The power sum `p_n`, `n ≥ 1`.
    pub fn p(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("p_0 is not a generator".into()));
        }
        check_cap(n, cap)?;
        Ok(Self::monomial(Partition::row(n as u32), Q::one(), cap))
    }

    /// The complete symmetric function `h_n`, via `n h_n = Σ_k h_{n-k} p_k`.
    pub fn h(n: usize, cap: usize) -> Result<Self> {
        check_cap(n, cap)?;
        {
            let cache = COMPLETE.read().unwrap();
            if let Some(h) = cache.get(n) {
                return Ok(h.clone().recap(cap));
            }
        }
        let mut cache = COMPLETE.write().unwrap();
        while cache.len() <= n {
            let m = cache.len();
            let mut acc = SymFn::zero(m);
            for k in 1..=m {
                let pk = SymFn::monomial(Partition::row(k as u32), Q::one(), m);
                acc += &(&cache[m - k].clone().recap(m) * &pk);
            }
            cache.push(acc.scale(&q_frac(1, m as i64)));
        }
        Ok(cache[n].clone().recap(cap))
    }

    /// The elementary symmetric function `e_n = ω(h_n)`.
    pub fn e(n: usize, cap: usize) -> Result<Self> {
        Ok(Self::h(n, cap)?.omega())
    }

    /// The Schur function `s_λ` by the Jacobi–Trudi determinant.
    pub fn schur(lam: &Partition, cap: usize) -> Result<Self> {
        check_cap(lam.weight(), cap)?;
        Ok(schur_jacobi_trudi(lam).recap(cap))
    }

    /// The symplectic Schur function `s_⟨λ⟩`.
    pub fn sp_schur(lam: &Partition, cap: usize) -> Result<Self> {
        check_cap(lam.weight(), cap)?;
        // Pick the determinant with fewer rows.
        let f = if lam.len() <= lam.largest() as usize {
            sp_schur_jacobi_trudi(lam)
        } else {
            sp_schur_dual(lam)
        };
        Ok(f.recap(cap))
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Drops every term above `cap`; the cap only ever decreases.
    pub fn with_cap(mut self, cap: usize) -> Self {
        if cap < self.cap {
            self.by_degree.truncate(cap + 1);
            self.cap = cap;
        }
        self
    }

    /// Sets the cap exactly. Raising it is only meaningful for values known
    /// to be exact polynomials, such as generators.
    pub(crate) fn recap(mut self, cap: usize) -> Self {
        if cap < self.cap {
            return self.with_cap(cap);
        }
        self.by_degree.resize(cap + 1, HashMap::new());
        self.cap = cap;
        self
    }

    /// Adds `c · p_λ` in place, ignoring terms above the cap.
    pub fn add_term(&mut self, lam: Partition, c: Q) {
        let d = lam.weight();
        if d > self.cap || c.is_zero() {
            return;
        }
        let slot = &mut self.by_degree[d];
        match slot.get_mut(&lam) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    slot.remove(&lam);
                }
            }
            None => {
                slot.insert(lam, c);
            }
        }
    }

    pub fn coeff(&self, lam: &Partition) -> Q {
        self.by_degree
            .get(lam.weight())
            .and_then(|m| m.get(lam))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.iter().all(|m| m.is_empty())
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(|m| m.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Highest degree carrying a nonzero term.
    pub fn degree(&self) -> Option<usize> {
        self.by_degree.iter().rposition(|m| !m.is_empty())
    }

    /// Lowest degree carrying a nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.by_degree.iter().position(|m| !m.is_empty())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.by_degree.iter().flat_map(|m| m.iter())
    }

    /// Terms of degree `d`, unordered.
    pub fn degree_terms(&self, d: usize) -> impl Iterator<Item = (&Partition, &Q)> {
        self.by_degree.get(d).into_iter().flat_map(|m| m.iter())
    }

    /// Terms in canonical partition order.
    pub fn sorted_terms(&self) -> Vec<(Partition, Q)> {
        let mut v: Vec<_> = self.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Degree-`d` homogeneous component.
    pub fn homogeneous(&self, d: usize) -> SymFn {
        let mut out = SymFn::zero(self.cap);
        if d <= self.cap {
            out.by_degree[d] = self.by_degree[d].clone();
        }
        out
    }

    /// Applies `f` to every term; the image keeps this cap.
    pub fn map_terms<F>(&self, mut f: F) -> SymFn
    where
        F: FnMut(&Partition, &Q) -> Option<(Partition, Q)>,
    {
        let mut out = SymFn::zero(self.cap);
        for (lam, c) in self.iter() {
            if let Some((mu, d)) = f(lam, c) {
                out.add_term(mu, d);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> SymFn {
        if c.is_zero() {
            return SymFn::zero(self.cap);
        }
        let mut out = self.clone();
        for m in &mut out.by_degree {
            for v in m.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// `ω`: `p_λ ↦ (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> SymFn {
        self.sign_twist(|lam| (lam.weight() - lam.len()) % 2 == 1)
    }

    /// `ω̃`: `p_λ ↦ (-1)^{ℓ(λ)} p_λ`.
    pub fn omega_tilde(&self) -> SymFn {
        self.sign_twist(|lam| lam.len() % 2 == 1)
    }

    fn sign_twist(&self, flip: impl Fn(&Partition) -> bool) -> SymFn {
        let mut out = self.clone();
        for m in &mut out.by_degree {
            for (lam, v) in m.iter_mut() {
                if flip(lam) {
                    *v = -v.clone();
                }
            }
        }
        out
    }

    /// The augmentation `f(0)`: the constant coefficient.
    pub fn epsilon(&self) -> Q {
        self.coeff(&Partition::empty())
    }

    /// Coefficients in the Schur basis, via irreducible symmetric group characters.
    pub fn to_schur_basis(&self) -> BTreeMap<Partition, Q> {
        schur::to_schur_basis(self)
    }

    /// Schur coefficient of a single `s_λ`.
    pub fn schur_coefficient(&self, lam: &Partition) -> Q {
        schur::schur_coefficient(self, lam)
    }

    pub fn mul_truncated(&self, other: &SymFn, cap: usize) -> SymFn {
        let cap = cap.min(self.cap).min(other.cap);
        let mut out = SymFn::zero(cap);
        for (da, ma) in self.by_degree.iter().enumerate() {
            if ma.is_empty() {
                continue;
            }
            for (db, mb) in other.by_degree.iter().enumerate().take(cap.saturating_sub(da) + 1) {
                if da + db > cap || mb.is_empty() {
                    continue;
                }
                let slot = &mut out.by_degree[da + db];
                for (la, ca) in ma {
                    for (lb, cb) in mb {
                        let prod = ca * cb;
                        let key = la.union(lb);
                        match slot.get_mut(&key) {
                            Some(v) => *v += prod,
                            None => {
                                slot.insert(key, prod);
                            }
                        }
                    }
                }
                slot.retain(|_, v| !v.is_zero());
            }
        }
        out
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.iter().all(|(_, c)| c.is_integer())
    }

    /// Largest absolute coefficient, for diagnostics.
    pub fn max_abs_coeff(&self) -> Q {
        self.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl PartialEq for SymFn {
    /// Coefficientwise equality; caps are not compared.
    fn eq(&self, other: &Self) -> bool {
        let n = self.by_degree.len().max(other.by_degree.len());
        let empty = HashMap::new();
        (0..n).all(|d| {
            self.by_degree.get(d).unwrap_or(&empty) == other.by_degree.get(d).unwrap_or(&empty)
        })
    }
}

impl Eq for SymFn {}

impl AddAssign<&SymFn> for SymFn {
    fn add_assign(&mut self, rhs: &SymFn) {
        if rhs.cap < self.cap {
            *self = std::mem::replace(self, SymFn::zero(0)).with_cap(rhs.cap);
        }
        for (lam, c) in rhs.iter() {
            self.add_term(lam.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFn> for SymFn {
    fn sub_assign(&mut self, rhs: &SymFn) {
        if rhs.cap < self.cap {
            *self = std::mem::replace(self, SymFn::zero(0)).with_cap(rhs.cap);
        }
        for (lam, c) in rhs.iter() {
            self.add_term(lam.clone(), -c.clone());
        }
    }
}

impl Add for &SymFn {
    type Output = SymFn;
    fn add(self, rhs: &SymFn) -> SymFn {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SymFn {
    type Output = SymFn;
    fn sub(self, rhs: &SymFn) -> SymFn {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SymFn {
    type Output = SymFn;
    fn neg(self) -> SymFn {
        self.scale(&-Q::one())
    }
}

impl Mul for &SymFn {
    type Output = SymFn;
    fn mul(self, rhs: &SymFn) -> SymFn {
        self.mul_truncated(rhs, usize::MAX)
    }
}

impl Add for SymFn {
    type Output = SymFn;
    fn add(mut self, rhs: SymFn) -> SymFn {
        self += &rhs;
        self
    }
}

impl Sub for SymFn {
    type Output = SymFn;
    fn sub(mut self, rhs: SymFn) -> SymFn {
        self -= &rhs;
        self
    }
}

impl Mul for SymFn {
    type Output = SymFn;
    fn mul(self, rhs: SymFn) -> SymFn {
        &self * &rhs
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if lam.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} p{lam:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFn[cap {}]({})", self.cap, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, partitions_up_to};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pm(parts: &[u32], c: Q, cap: usize) -> SymFn {
        SymFn::monomial(part(parts), c, cap)
    }

    #[test]
    fn h2_from_newton() {
        let h2 = SymFn::h(2, 4).unwrap();
        let expected = &pm(&[1, 1], q_frac(1, 2), 4) + &pm(&[2], q_frac(1, 2), 4);
        assert_eq!(h2, expected);
        assert_eq!(SymFn::h(0, 3).unwrap(), SymFn::one(3));
    }

    #[test]
    fn schur_111_in_power_sums() {
        let s = SymFn::schur(&part(&[1, 1, 1]), 3).unwrap();
        let expected = &(&pm(&[1, 1, 1], q_frac(1, 6), 3) + &pm(&[2, 1], q_frac(-1, 2), 3))
            + &pm(&[3], q_frac(1, 3), 3);
        assert_eq!(s, expected);
        let h1 = SymFn::h(1, 3).unwrap();
        let h2 = SymFn::h(2, 3).unwrap();
        let h3 = SymFn::h(3, 3).unwrap();
        let jt = &(&(&h1 * &h1) * &h1) - &(&(&h1 * &h2).scale(&q(2)) - &h3);
        assert_eq!(s, jt);
    }

    #[test]
    fn sp_schur_111() {
        let sp = SymFn::sp_schur(&part(&[1, 1, 1]), 3).unwrap();
        let expected = &SymFn::schur(&part(&[1, 1, 1]), 3).unwrap() - &SymFn::schur(&part(&[1]), 3).unwrap();
        assert_eq!(sp, expected);
    }

    #[test]
    fn cap_errors() {
        assert!(matches!(SymFn::h(5, 4), Err(Error::CapViolation { degree: 5, cap: 4 })));
        assert!(SymFn::p(0, 4).is_err());
        assert!(SymFn::schur(&part(&[3, 2]), 4).is_err());
        assert!(generator(Basis::H, GenIndex::Shape(part(&[1])), 3).is_err());
    }

    #[test]
    fn ring_examples() {
        let p1 = SymFn::p(1, 4).unwrap();
        assert_eq!(&p1 * &p1, pm(&[1, 1], q(1), 4));
        let h1 = SymFn::h(1, 4).unwrap();
        let e2 = &(&h1 * &h1) - &SymFn::h(2, 4).unwrap();
        assert_eq!(e2, SymFn::e(2, 4).unwrap());
        assert_eq!(e2, &pm(&[1, 1], q_frac(1, 2), 4) + &pm(&[2], q_frac(-1, 2), 4));
        let p2 = SymFn::p(2, 2).unwrap();
        let p1c = SymFn::p(1, 2).unwrap();
        assert!((&p2 * &p1c).is_zero());
    }

    #[test]
    fn mixed_caps_take_minimum() {
        let a = SymFn::h(3, 5).unwrap();
        let b = SymFn::h(2, 3).unwrap();
        let s = &a + &b;
        assert_eq!(s.cap(), 3);
        assert_eq!(s, &SymFn::h(3, 3).unwrap() + &b);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFn::h(2, 2).unwrap().omega(), SymFn::e(2, 2).unwrap());
        assert_eq!(SymFn::p(3, 3).unwrap().omega(), SymFn::p(3, 3).unwrap());
        assert_eq!(SymFn::p(2, 3).unwrap().omega(), -&SymFn::p(2, 3).unwrap());
        assert_eq!(SymFn::p(2, 3).unwrap().omega_tilde(), -&SymFn::p(2, 3).unwrap());
        assert_eq!(SymFn::h(3, 3).unwrap().omega_tilde(), -&SymFn::e(3, 3).unwrap());
        assert_eq!(SymFn::one(3).omega_tilde(), SymFn::one(3));
    }

    #[test]
    fn involutions_on_generators() {
        for n in 0..=10 {
            for f in [SymFn::h(n, 10).unwrap(), SymFn::e(n, 10).unwrap()] {
                assert_eq!(f.omega().omega(), f);
                assert_eq!(f.omega_tilde().omega_tilde(), f);
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        let f = &SymFn::one(4) + &SymFn::h(2, 4).unwrap();
        assert_eq!(f.epsilon(), q(1));
        assert_eq!(SymFn::p(3, 4).unwrap().epsilon(), q(0));
        assert_eq!(SymFn::constant(q_frac(5, 2), 4).epsilon(), q_frac(5, 2));
    }

    #[test]
    fn newton_recursion_consistency() {
        let cap = 12;
        for n in 1..=cap {
            let mut rhs = SymFn::zero(cap);
            for k in 1..=n {
                rhs += &(&SymFn::h(n - k, cap).unwrap() * &SymFn::p(k, cap).unwrap());
            }
            assert_eq!(SymFn::h(n, cap).unwrap().scale(&q(n as i64)), rhs, "n = {n}");
        }
    }

    #[test]
    fn schur_basis_examples() {
        let h2 = SymFn::h(2, 4).unwrap().to_schur_basis();
        assert_eq!(h2, BTreeMap::from([(part(&[2]), q(1))]));
        let p11 = pm(&[1, 1], q(1), 4).to_schur_basis();
        assert_eq!(p11, BTreeMap::from([(part(&[2]), q(1)), (part(&[1, 1]), q(1))]));
        let e3 = SymFn::e(3, 4).unwrap().to_schur_basis();
        assert_eq!(e3, BTreeMap::from([(part(&[1, 1, 1]), q(1))]));
    }

    #[test]
    fn schur_generators_are_unit_vectors() {
        for lam in partitions_up_to(8) {
            let s = SymFn::schur(&lam, 8).unwrap();
            assert_eq!(s.to_schur_basis(), BTreeMap::from([(lam.clone(), q(1))]), "{lam:?}");
        }
    }

    #[test]
    fn h_products_are_schur_positive() {
        for n in 0..=8 {
            for mu in partitions_of(n) {
                let mut f = SymFn::one(8);
                for &m in mu.parts() {
                    f = &f * &SymFn::h(m as usize, 8).unwrap();
                }
                for (lam, c) in f.to_schur_basis() {
                    assert!(c.is_integer() && c > q(0), "h_{mu:?} has {c} s_{lam:?}");
                }
            }
        }
    }

    #[test]
    fn dual_schur_routes_agree() {
        for lam in partitions_up_to(8) {
            assert_eq!(sp_schur_jacobi_trudi(&lam), sp_schur_dual(&lam), "{lam:?}");
        }
    }

    #[test]
    fn display_is_canonical() {
        let f = SymFn::h(2, 2).unwrap();
        assert_eq!(f.to_string(), "1/2 p(2) + 1/2 p(1,1)");
    }
}
