//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive primitive polynomial remainder sequences: the polynomial is
//! viewed as univariate in its first occurring symbol with coefficients in
//! the remaining symbols, and contents are taken recursively.

use std::collections::BTreeMap;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::symbol::Symbol;
use super::Rational;

use num_traits::Zero;

/// Gcd of two Laurent polynomials up to monomial units.
///
/// The result has non-negative exponents, no monomial factor, integer
/// coefficients with gcd 1 and a positive lex-leading coefficient. The gcd
/// of two zeros is zero.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let pa = strip(a);
    let pb = strip(b);
    poly_gcd(&pa, &pb)
}

fn strip(p: &LaurentPoly) -> LaurentPoly {
    p.split_monomial()
        .map(|(_, q)| q)
        .expect("Laurent exponent overflow")
}

fn normalize(p: &LaurentPoly) -> LaurentPoly {
    strip(&p.primitive_integer().1)
}

fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    if certified_coprime(a, b) {
        return LaurentPoly::one();
    }
    // Main variable of least degree keeps the remainder sequence short.
    let var = match Symbol::ALL
        .iter()
        .copied()
        .filter(|s| a.contains(*s) || b.contains(*s))
        .min_by_key(|s| a.degree_in(*s).max(b.degree_in(*s)))
    {
        Some(v) => v,
        None => return LaurentPoly::one(),
    };
    if !a.contains(var) {
        return poly_gcd(a, &content_in(b, var));
    }
    if !b.contains(var) {
        return poly_gcd(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = poly_gcd(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(var) < pb.degree_in(var) {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let rem = pseudo_rem(&pa, &pb, var);
        if rem.is_zero() {
            break;
        }
        if rem.degree_in(var) == 0 {
            pb = LaurentPoly::one();
            break;
        }
        pa = pb;
        pb = primitive_in(&rem, var);
    }
    normalize(&c.mul(&primitive_in(&pb, var)))
}

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
const IMAGE_ATTEMPTS: usize = 6;

/// Proves `gcd(a, b) = 1` through univariate images, or gives up.
///
/// If a variable `x` occurs in the gcd `g`, then at every point where the
/// leading coefficients of `a` and `b` in `x` do not vanish the images keep
/// the `x`-degree of `g`. A constant univariate gcd therefore shows that `x`
/// does not occur in `g`.
fn certified_coprime(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    for (idx, var) in Symbol::ALL.iter().copied().enumerate() {
        if !(a.contains(var) && b.contains(var)) {
            continue;
        }
        let lca = lead_coeff_in(a, var);
        let lcb = lead_coeff_in(b, var);
        let mut decided = false;
        for attempt in 0..IMAGE_ATTEMPTS {
            let point = |s: Symbol| -> Option<Rational> {
                if s == var {
                    return None;
                }
                let k = (s.index() * 5 + idx * 3 + attempt * 7) % PRIMES.len();
                let v = PRIMES[k] + 6 * attempt as i64;
                Some(Rational::from_integer(if s.index().is_multiple_of(2) { v } else { -v }.into()))
            };
            let vanishes = |p: &LaurentPoly| p.substitute(&point).map_or(true, |v| v.is_zero());
            if vanishes(&lca) || vanishes(&lcb) {
                continue;
            }
            let (Ok(ia), Ok(ib)) = (a.substitute(&point), b.substitute(&point)) else {
                return false;
            };
            if univariate_gcd_degree(&ia, &ib, var) == 0 {
                decided = true;
                break;
            }
            return false;
        }
        if !decided {
            return false;
        }
    }
    true
}

fn dense(p: &LaurentPoly, var: Symbol) -> Vec<Rational> {
    let deg = p.degree_in(var).max(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp(var);
        if e >= 0 {
            out[e as usize] += c;
        }
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn univariate_gcd_degree(a: &LaurentPoly, b: &LaurentPoly, var: Symbol) -> usize {
    let mut x = dense(a, var);
    let mut y = dense(b, var);
    let is_zero = |v: &[Rational]| v.iter().all(|c| c.is_zero());
    if is_zero(&x) {
        return y.len() - 1;
    }
    while !is_zero(&y) {
        // x mod y
        let ly = y.last().expect("nonempty").clone();
        while x.len() >= y.len() && !is_zero(&x) {
            let f = x.last().expect("nonempty") / &ly;
            let shift = x.len() - y.len();
            for (i, c) in y.iter().enumerate() {
                x[shift + i] -= &f * c;
            }
            x.pop();
            while x.len() > 1 && x.last().is_some_and(|c| c.is_zero()) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() - 1
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &LaurentPoly, var: Symbol) -> LaurentPoly {
    let coeffs = p.coeffs_in(var);
    let mut g = LaurentPoly::zero();
    for c in coeffs.values() {
        g = poly_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_in(p: &LaurentPoly, var: Symbol) -> LaurentPoly {
    let c = content_in(p, var);
    if c.is_zero() {
        return p.clone();
    }
    p.exact_div(&c).expect("content divides")
}

fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly, var: Symbol) -> LaurentPoly {
    let db = b.degree_in(var);
    let lcb = lead_coeff_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lcr = lead_coeff_in(&r, var);
        let shift = Monomial::var(var, dr - db);
        let sub = b
            .checked_mul_monomial(&shift)
            .expect("Laurent exponent overflow")
            .mul(&lcr);
        r = r.mul(&lcb).sub(&sub);
    }
    r
}

fn lead_coeff_in(p: &LaurentPoly, var: Symbol) -> LaurentPoly {
    let coeffs: BTreeMap<i32, LaurentPoly> = p.coeffs_in(var);
    coeffs
        .into_iter()
        .next_back()
        .map(|(_, c)| c)
        .unwrap_or_else(LaurentPoly::zero)
}
