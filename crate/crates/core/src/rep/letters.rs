use crate::algebra::{AlgebraError, Letter, NormalElement, Params, Word, WordSum};
use crate::scalar::Scalar;

use super::matrix::RepMatrix;

fn below(state: usize, alpha: usize) -> i32 {
    (state & ((1 << (alpha - 1)) - 1)).count_ones() as i32
}

fn above(state: usize, alpha: usize) -> i32 {
    (state >> alpha).count_ones() as i32
}

fn pow<S: Scalar>(v: &S, k: i32) -> S {
    v.powi(k).expect("exponent is nonnegative")
}

/// Image of a basis state under one letter, or `None` when it is killed.
pub fn apply_letter<S: Scalar>(
    letter: Letter,
    state: usize,
    params: &Params<S>,
) -> Option<(usize, S)> {
    let alpha = letter.index();
    let bit = 1 << (alpha - 1);
    match letter {
        Letter::Theta(_) => {
            if state & bit != 0 {
                return None;
            }
            let c = pow(&params.theta_swap(), below(state, alpha));
            Some((state | bit, c))
        }
        Letter::Del(_) => {
            if state & bit == 0 {
                return None;
            }
            // one cross factor per smaller index passed, then the diagonal
            // rule contributes r^-2 per larger index still present
            let mut c = params.r_pow(-2 * above(state, alpha));
            for beta in 1..alpha {
                if state & (1 << (beta - 1)) != 0 {
                    c = c.mul_ref(&params.cross(alpha, beta));
                }
            }
            Some((state & !bit, c))
        }
    }
}

fn check(alpha: usize, params: &Params<impl Scalar>) -> Result<(), AlgebraError> {
    params.ctx().check_index(alpha)
}

fn letter_matrix_unchecked<S: Scalar>(letter: Letter, params: &Params<S>) -> RepMatrix<S> {
    let dim = params.ctx().dim();
    let mut m = RepMatrix::zeros(dim);
    for s in 0..dim {
        if let Some((t, c)) = apply_letter(letter, s, params) {
            m.set(t, s, c);
        }
    }
    m
}

pub fn letter_matrix<S: Scalar>(letter: Letter, params: &Params<S>) -> Result<RepMatrix<S>, AlgebraError> {
    check(letter.index(), params)?;
    Ok(letter_matrix_unchecked(letter, params))
}

pub fn theta_matrix<S: Scalar>(alpha: usize, params: &Params<S>) -> Result<RepMatrix<S>, AlgebraError> {
    letter_matrix(Letter::Theta(alpha), params)
}

pub fn del_matrix<S: Scalar>(alpha: usize, params: &Params<S>) -> Result<RepMatrix<S>, AlgebraError> {
    letter_matrix(Letter::Del(alpha), params)
}

fn check_word(w: &Word, params: &Params<impl Scalar>) -> Result<(), AlgebraError> {
    w.letters().iter().try_for_each(|l| check(l.index(), params))
}

fn accumulate<S: Scalar>(m: &mut RepMatrix<S>, w: &Word, coeff: &S, params: &Params<S>) {
    for s in 0..m.dim() {
        let mut state = s;
        let mut c = coeff.clone();
        let mut alive = true;
        for &l in w.letters().iter().rev() {
            match apply_letter(l, state, params) {
                Some((t, f)) => {
                    state = t;
                    c = c.mul_ref(&f);
                }
                None => {
                    alive = false;
                    break;
                }
            }
        }
        if alive {
            let v = m.get(state, s).add_ref(&c);
            m.set(state, s, v);
        }
    }
}

/// Letter-by-letter matrix of a combination of (unordered) words.
pub fn word_sum_matrix<S: Scalar>(
    sum: &WordSum<S>,
    params: &Params<S>,
) -> Result<RepMatrix<S>, AlgebraError> {
    let mut m = RepMatrix::zeros(params.ctx().dim());
    for (w, c) in sum.terms() {
        check_word(w, params)?;
        accumulate(&mut m, w, c, params);
    }
    Ok(m)
}

pub fn word_matrix<S: Scalar>(w: &Word, params: &Params<S>) -> Result<RepMatrix<S>, AlgebraError> {
    word_sum_matrix(&WordSum::word(w.clone()), params)
}

/// Matrix of a normal-ordered element.
pub fn matrix_of<S: Scalar>(
    u: &NormalElement<S>,
    params: &Params<S>,
) -> Result<RepMatrix<S>, AlgebraError> {
    let n = params.n();
    if u.max_index() > n {
        return Err(AlgebraError::IndexOutOfRange {
            index: u.max_index(),
            n,
        });
    }
    let mut m = RepMatrix::zeros(params.ctx().dim());
    for (mono, c) in u.terms() {
        accumulate(&mut m, &mono.to_word(), c, params);
    }
    Ok(m)
}

fn diag_by<S: Scalar>(params: &Params<S>, f: impl Fn(usize) -> S) -> RepMatrix<S> {
    RepMatrix::diagonal((0..params.ctx().dim()).map(f).collect())
}

/// `μ_α`: eigenvalue `r^(-2k)` with `k` the number of occupied indices above `α`.
pub fn mu_matrix<S: Scalar>(alpha: usize, params: &Params<S>) -> Result<RepMatrix<S>, AlgebraError> {
    check(alpha, params)?;
    Ok(diag_by(params, |s| params.r_pow(-2 * above(s, alpha))))
}

/// `μ_α^{-1/2}`: eigenvalue `r^k`.
pub fn mu_inv_sqrt_matrix<S: Scalar>(
    alpha: usize,
    params: &Params<S>,
) -> Result<RepMatrix<S>, AlgebraError> {
    check(alpha, params)?;
    Ok(diag_by(params, |s| params.r_pow(above(s, alpha))))
}

/// `μ'_α`: eigenvalue `r^-1` on states containing `α+1`, else `1`.
pub fn mu_prime_matrix<S: Scalar>(
    alpha: usize,
    params: &Params<S>,
) -> Result<RepMatrix<S>, AlgebraError> {
    check(alpha, params)?;
    check(alpha + 1, params)?;
    Ok(diag_by(params, |s| {
        if s >> alpha & 1 == 1 {
            params.r_pow(-1)
        } else {
            S::one()
        }
    }))
}

/// Dressed letters of the block `(α, α+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DressedQuadruple<S> {
    pub theta_a: RepMatrix<S>,
    pub theta_b: RepMatrix<S>,
    pub del_a: RepMatrix<S>,
    pub del_b: RepMatrix<S>,
}

pub fn dressed_letters<S: Scalar>(
    alpha: usize,
    params: &Params<S>,
) -> Result<DressedQuadruple<S>, AlgebraError> {
    let left_a = mu_prime_matrix(alpha, params)?.mul(&mu_inv_sqrt_matrix(alpha, params)?);
    let left_b = mu_inv_sqrt_matrix(alpha + 1, params)?;
    Ok(DressedQuadruple {
        theta_a: left_a.mul(&theta_matrix(alpha, params)?),
        theta_b: left_b.mul(&theta_matrix(alpha + 1, params)?),
        del_a: left_a.mul(&del_matrix(alpha, params)?),
        del_b: left_b.mul(&del_matrix(alpha + 1, params)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{normal_form_word, AlgebraContext, NormalMonomial};
    use crate::ring::{RingElem, Symbol};
    use num_traits::One;

    fn sym(n: usize) -> Params<RingElem> {
        Params::symbolic(AlgebraContext::one_param(n).unwrap())
    }

    fn state_word(state: usize, n: usize) -> Vec<Letter> {
        (1..=n).filter(|i| state >> (i - 1) & 1 == 1).map(Letter::Theta).collect()
    }

    fn oracle_check(p: &Params<RingElem>) {
        let n = p.n();
        for alpha in 1..=n {
            for letter in [Letter::Theta(alpha), Letter::Del(alpha)] {
                let m = letter_matrix(letter, p).unwrap();
                for s in 0..1usize << n {
                    let mut w = vec![letter];
                    w.extend(state_word(s, n));
                    let img = normal_form_word(&Word(w), p).vacuum_action();
                    for t in 0..1usize << n {
                        let mono = NormalMonomial::from_normal_word(&Word(state_word(t, n))).unwrap();
                        assert_eq!(*m.get(t, s), img.coeff(&mono), "{letter} on {s:b} -> {t:b}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_rewriting_oracle() {
        for n in 1..=4 {
            oracle_check(&sym(n));
        }
        oracle_check(&Params::symbolic(AlgebraContext::two_param()));
    }

    #[test]
    fn del_one_on_full_state() {
        let p = sym(2);
        let d1 = del_matrix(1, &p).unwrap();
        assert_eq!(*d1.get(0b10, 0b11), RingElem::monomial(Symbol::R, -2));
        let d2 = del_matrix(2, &p).unwrap();
        assert_eq!(*d2.get(0b01, 0b11), -&RingElem::monomial(Symbol::R, -1));
    }

    #[test]
    fn mu_matches_defining_sum() {
        let p = sym(3);
        for alpha in 1..=3 {
            let mut text = String::from("1");
            for beta in alpha + 1..=3 {
                text.push_str(&format!(" + (r^-2 - 1)*th{beta}*d{beta}"));
            }
            let e = crate::algebra::parse(&text, p.ctx()).unwrap();
            assert_eq!(matrix_of(&e, &p).unwrap(), mu_matrix(alpha, &p).unwrap());
        }
        let mu1 = mu_matrix(1, &p).unwrap();
        assert_eq!(*mu1.get(0b110, 0b110), RingElem::monomial(Symbol::R, -4));
        assert_eq!(mu_matrix(3, &p).unwrap(), RepMatrix::identity(8));
    }

    #[test]
    fn mu_inv_sqrt_squares_to_inverse() {
        let p = sym(4);
        for alpha in 1..=4 {
            let h = mu_inv_sqrt_matrix(alpha, &p).unwrap();
            let mu = mu_matrix(alpha, &p).unwrap();
            assert_eq!(h.mul(&h).mul(&mu), RepMatrix::identity(16));
        }
        let mp = mu_prime_matrix(1, &p).unwrap();
        assert_eq!(*mp.get(0b10, 0b10), RingElem::monomial(Symbol::R, -1));
    }

    #[test]
    fn dressed_theta_on_vacuum() {
        let p = sym(2);
        let q = dressed_letters(1, &p).unwrap();
        assert!(q.theta_a.get(1, 0).is_one());
    }

    #[test]
    fn dressing_trivial_at_r_one() {
        let ctx = AlgebraContext::one_param(3).unwrap();
        let p = Params::new(ctx, crate::ring::rat(1, 1), crate::ring::rat(1, 1)).unwrap();
        let q = dressed_letters(1, &p).unwrap();
        assert_eq!(q.theta_a, theta_matrix(1, &p).unwrap());
        assert_eq!(q.del_b, del_matrix(2, &p).unwrap());
    }

    #[test]
    fn out_of_range() {
        let p = sym(2);
        assert!(theta_matrix(3, &p).is_err());
        assert!(mu_prime_matrix(2, &p).is_err());
    }
}
