//! Adams operations, plethysm, and the plethystic `Exp` / `Log` on [`CharSeries`].
//!
//! The filtration weight of `p_λ t^j` is `|λ| + j`. `Exp` and `Log` are only
//! defined on series whose weight-zero part vanishes (resp. equals one).

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::partitions::mobius;
use crate::symfunc::{q, q_frac, SymFn, Q};

/// `ψ_n` on a symmetric function: `p_k ↦ p_{nk}`.
pub fn adams_sym(n: usize, f: &SymFn) -> Result<SymFn> {
    if n == 0 {
        return Err(Error::InvalidArgument("adams operation needs n >= 1".into()));
    }
    Ok(f.map_terms(|lam, c| Some((lam.scaled(n as u32), c.clone()))))
}

/// `ψ_n` on a series: `p_k ↦ p_{nk}` and `t ↦ t^n`.
pub fn adams(n: usize, f: &CharSeries) -> Result<CharSeries> {
    if n == 0 {
        return Err(Error::InvalidArgument("adams operation needs n >= 1".into()));
    }
    let mut out = CharSeries::zero(f.sym_cap(), f.t_cap());
    for (j, c) in f.coeffs().iter().enumerate() {
        if j * n > f.t_cap() {
            break;
        }
        if !c.is_zero() {
            out.set_coefficient(j * n, adams_sym(n, c)?)?;
        }
    }
    Ok(out)
}

fn has_constant(f: &CharSeries) -> bool {
    !f.constant_term().is_zero()
}

/// Plethysm `f ∘ g`. Occurrences of `t` in `f` are inert scalars.
///
/// `f` is read as an exact polynomial. If `g` has a nonzero constant term,
/// every term of `f` feeds the low degrees, so `f` must sit strictly below
/// its symmetric cap; otherwise the result would silently depend on what
/// the cap dropped.
pub fn plethysm(f: &CharSeries, g: &CharSeries) -> Result<CharSeries> {
    if has_constant(g) {
        let top = f.coeffs().iter().filter_map(|c| c.degree()).max().unwrap_or(0);
        if top > 0 && top >= f.sym_cap() {
            return Err(Error::Divergent(format!(
                "inner argument has constant term {} and the outer one reaches its cap {}",
                g.constant_term(),
                f.sym_cap()
            )));
        }
    }
    let t_cap = f.t_cap().min(g.t_cap());
    let g = g.truncate(g.sym_cap(), t_cap);
    let max_part = f
        .coeffs()
        .iter()
        .flat_map(|c| c.iter().map(|(lam, _)| lam.largest() as usize))
        .max()
        .unwrap_or(0);
    let images: Vec<CharSeries> = (1..=max_part)
        .into_par_iter()
        .map(|k| adams(k, &g))
        .collect::<Result<_>>()?;
    let mut powers: HashMap<(usize, usize), CharSeries> = HashMap::new();
    let mut out = CharSeries::zero(g.sym_cap(), t_cap);
    for (j, c) in f.coeffs().iter().enumerate().take(t_cap + 1) {
        let mut block = CharSeries::zero(g.sym_cap(), t_cap);
        for (lam, coeff) in c.sorted_terms() {
            let mut term = CharSeries::one(g.sym_cap(), t_cap);
            for (part, mult) in lam.multiplicities() {
                let key = (part as usize, mult);
                powers.entry(key).or_insert_with(|| {
                    let base = &images[part as usize - 1];
                    let mut acc = CharSeries::one(g.sym_cap(), t_cap);
                    for _ in 0..mult {
                        acc = &acc * base;
                    }
                    acc
                });
                term = &term * &powers[&key];
            }
            block += &term.scale(&coeff);
        }
        out += &block.shift_by_t_power(j);
    }
    Ok(out)
}

/// Plethysm of symmetric functions without `t`.
pub fn plethysm_sym(f: &SymFn, g: &SymFn) -> Result<SymFn> {
    let out = plethysm(&CharSeries::from_symfn(f.clone(), 0), &CharSeries::from_symfn(g.clone(), 0))?;
    Ok(out.coefficient_at(0)?.clone())
}

/// The pieces of `f` of filtration weight `0..=S+T`.
fn by_weight(f: &CharSeries) -> Vec<CharSeries> {
    let (s, t) = (f.sym_cap(), f.t_cap());
    let mut pieces = vec![CharSeries::zero(s, t); s + t + 1];
    for (j, c) in f.coeffs().iter().enumerate() {
        for d in 0..=s {
            let h = c.homogeneous(d);
            if !h.is_zero() {
                pieces[d + j].set_coefficient(j, h).expect("index within t-cap");
            }
        }
    }
    pieces
}

fn sum_all(items: Vec<CharSeries>, s: usize, t: usize) -> CharSeries {
    items.into_iter().fold(CharSeries::zero(s, t), |mut acc, x| {
        acc += &x;
        acc
    })
}

/// Ordinary `exp(l)` for `l` with vanishing weight-zero part, by
/// `w E_w = Σ_k k L_k E_{w-k}`.
pub fn series_exp(l: &CharSeries) -> Result<CharSeries> {
    if has_constant(l) {
        return Err(Error::Divergent(format!(
            "exp of a series with constant term {}",
            l.constant_term()
        )));
    }
    let (s, t) = (l.sym_cap(), l.t_cap());
    let pieces = by_weight(l);
    let mut e: Vec<CharSeries> = vec![CharSeries::one(s, t)];
    for w in 1..=s + t {
        let terms: Vec<CharSeries> = (1..=w)
            .into_par_iter()
            .filter(|&k| !pieces[k].is_zero() && !e[w - k].is_zero())
            .map(|k| (&pieces[k] * &e[w - k]).scale(&q(k as i64)))
            .collect();
        e.push(sum_all(terms, s, t).scale(&q_frac(1, w as i64)));
    }
    Ok(sum_all(e, s, t))
}

/// Ordinary `log(g)` for `g` with weight-zero part one, by
/// `w L_w = w G_w - Σ_{k<w} k L_k G_{w-k}`.
pub fn series_log(g: &CharSeries) -> Result<CharSeries> {
    if g.constant_term() != Q::one() {
        return Err(Error::Divergent(format!(
            "log of a series with constant term {}",
            g.constant_term()
        )));
    }
    let (s, t) = (g.sym_cap(), g.t_cap());
    let pieces = by_weight(g);
    let mut l: Vec<CharSeries> = vec![CharSeries::zero(s, t)];
    for w in 1..=s + t {
        let terms: Vec<CharSeries> = (1..w)
            .into_par_iter()
            .filter(|&k| !l[k].is_zero() && !pieces[w - k].is_zero())
            .map(|k| (&l[k] * &pieces[w - k]).scale(&q(k as i64)))
            .collect();
        let correction = sum_all(terms, s, t).scale(&q_frac(1, w as i64));
        l.push(&pieces[w] - &correction);
    }
    Ok(sum_all(l, s, t))
}

/// `Exp(f) = Σ_n h_n ∘ f = exp(Σ_k ψ_k(f)/k)`.
pub fn exp_op(f: &CharSeries) -> Result<CharSeries> {
    if has_constant(f) {
        return Err(Error::Divergent(format!(
            "Exp needs positive filtration; the p_∅ t^0 coefficient is {}",
            f.constant_term()
        )));
    }
    let (s, t) = (f.sym_cap(), f.t_cap());
    let images: Vec<CharSeries> = (1..=s + t)
        .into_par_iter()
        .map(|k| adams(k, f).map(|a| a.scale(&q_frac(1, k as i64))))
        .collect::<Result<_>>()?;
    series_exp(&sum_all(images, s, t))
}

/// `Log(1 + a) = Σ_n μ(n)/n · log(1 + ψ_n(a))`, the inverse of [`exp_op`].
pub fn log_op(g: &CharSeries) -> Result<CharSeries> {
    if g.constant_term() != Q::one() {
        return Err(Error::Divergent(format!(
            "Log needs constant term 1, found {}",
            g.constant_term()
        )));
    }
    let (s, t) = (g.sym_cap(), g.t_cap());
    // ψ_n is a ring map, so log(1 + ψ_n(a)) = ψ_n(log(1 + a)).
    let l = series_log(g)?;
    let terms: Vec<CharSeries> = (1..=s + t)
        .into_par_iter()
        .map(|n| -> Result<CharSeries> {
            let mu = mobius(n as u64)?;
            if mu == 0 {
                return Ok(CharSeries::zero(s, t));
            }
            Ok(adams(n, &l)?.scale(&q_frac(i64::from(mu), n as i64)))
        })
        .collect::<Result<_>>()?;
    Ok(sum_all(terms, s, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn sym(f: SymFn, t: usize) -> CharSeries {
        CharSeries::from_symfn(f, t)
    }

    #[test]
    fn adams_examples() {
        let (s, t) = (6, 4);
        let f = &sym(SymFn::p(1, s).unwrap(), t) + &CharSeries::t_power(1, q(1), s, t);
        let expected = &sym(SymFn::p(2, s).unwrap(), t) + &CharSeries::t_power(2, q(1), s, t);
        assert_eq!(adams(2, &f).unwrap(), expected);

        let h2 = SymFn::h(2, s).unwrap();
        let mut want = SymFn::zero(s);
        want.add_term(part(&[3, 3]), q_frac(1, 2));
        want.add_term(part(&[6]), q_frac(1, 2));
        assert_eq!(adams_sym(3, &h2).unwrap(), want);

        let p1 = sym(SymFn::p(1, s).unwrap(), t);
        assert_eq!(
            adams(2, &adams(3, &p1).unwrap()).unwrap(),
            adams(6, &p1).unwrap()
        );
        assert!(matches!(adams(0, &p1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn adams_drops_terms_past_caps() {
        let f = &sym(SymFn::p(2, 4).unwrap(), 3) + &CharSeries::t_power(2, q(1), 4, 3);
        assert!(adams(3, &f).unwrap().is_zero());
    }

    #[test]
    fn plethysm_examples() {
        let s = 4;
        let h2 = SymFn::h(2, s).unwrap();
        let e2 = SymFn::e(2, s).unwrap();
        let hh = plethysm_sym(&h2, &h2).unwrap();
        let want = &SymFn::schur(&part(&[4]), s).unwrap() + &SymFn::schur(&part(&[2, 2]), s).unwrap();
        assert_eq!(hh, want);
        let ee = plethysm_sym(&e2, &e2).unwrap();
        assert_eq!(ee, SymFn::schur(&part(&[2, 1, 1]), s).unwrap());

        let t = 4;
        let g = &sym(SymFn::p(1, s).unwrap(), t) + &CharSeries::t_power(1, q(1), s, t);
        let p2 = sym(SymFn::p(2, s).unwrap(), t);
        assert_eq!(plethysm(&p2, &g).unwrap(), adams(2, &g).unwrap());
    }

    #[test]
    fn plethysm_keeps_t_in_outer_argument_inert() {
        let (s, t) = (4, 4);
        let f = sym(SymFn::p(2, s).unwrap(), t).shift_by_t_power(1);
        let g = sym(SymFn::p(1, s).unwrap(), t);
        let want = sym(SymFn::p(2, s).unwrap(), t).shift_by_t_power(1);
        assert_eq!(plethysm(&f, &g).unwrap(), want);
    }

    #[test]
    fn plethysm_guards_truncated_outer_argument() {
        let g = &CharSeries::one(3, 0) + &sym(SymFn::p(1, 3).unwrap(), 0);
        let f = sym(SymFn::h(3, 3).unwrap(), 0);
        assert!(matches!(plethysm(&f, &g), Err(Error::Divergent(_))));
        let f = sym(SymFn::h(2, 3).unwrap(), 0);
        // h_2[1 + p_1] = 1 + h_1 + h_2
        let want = sym(
            &(&SymFn::one(3) + &SymFn::h(1, 3).unwrap()) + &SymFn::h(2, 3).unwrap(),
            0,
        );
        assert_eq!(plethysm(&f, &g).unwrap(), want);
    }

    #[test]
    fn exp_examples() {
        let t = 8;
        let e = exp_op(&CharSeries::t_power(2, q(1), 0, t)).unwrap();
        assert_eq!(e, CharSeries::one(0, t).geometric_factor());

        let (s, t) = (6, 6);
        let th1 = sym(SymFn::h(1, s).unwrap(), t).shift_by_t_power(1);
        let e = exp_op(&th1).unwrap();
        for n in 0..=6 {
            assert_eq!(e.coefficient_at(n).unwrap(), &SymFn::h(n, s).unwrap(), "n = {n}");
        }
        assert_eq!(exp_op(&CharSeries::zero(s, t)).unwrap(), CharSeries::one(s, t));
        assert!(matches!(exp_op(&CharSeries::one(s, t)), Err(Error::Divergent(_))));
    }

    #[test]
    fn log_examples() {
        let t = 8;
        let geo: Vec<Q> = vec![q(1); t + 1];
        let g = CharSeries::from_scalars(&geo, t);
        assert_eq!(log_op(&g).unwrap(), CharSeries::t_power(1, q(1), 0, t));

        let s = 7;
        let mut total = SymFn::zero(s);
        for n in 0..=s {
            total += &SymFn::h(n, s).unwrap();
        }
        let l = log_op(&sym(total, 0)).unwrap();
        assert_eq!(l, sym(SymFn::h(1, s).unwrap(), 0));
        assert!(log_op(&CharSeries::one(4, 4)).unwrap().is_zero());
        assert!(matches!(
            log_op(&CharSeries::t_power(0, q(2), 2, 2)),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn series_exp_log_roundtrip() {
        let (s, t) = (5, 4);
        let f = &sym(SymFn::h(2, s).unwrap(), t).shift_by_t_power(1)
            + &sym(SymFn::e(3, s).unwrap(), t);
        let e = series_exp(&f).unwrap();
        assert_eq!(series_log(&e).unwrap(), f);
    }
}
