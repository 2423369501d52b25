use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::{RingElem, Symbol};
use crate::scalar::Scalar;

use super::AlgebraError;

/// Largest dimension accepted anywhere in the crate.
pub const MAX_DIMENSION: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Relations with the single parameter `r`, any dimension.
    OneParam,
    /// Relations with parameters `r` and `q`; dimension 2 only.
    TwoParam,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::OneParam => "one-param",
            Mode::TwoParam => "two-param",
        })
    }
}

impl FromStr for Mode {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "one" | "one-param" | "one-parameter" => Ok(Mode::OneParam),
            "two" | "two-param" | "two-parameter" => Ok(Mode::TwoParam),
            other => Err(AlgebraError::InvalidContext(format!("unknown mode `{other}`"))),
        }
    }
}

/// Dimension and relation family of a quantum space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraContext {
    n: usize,
    mode: Mode,
}

impl AlgebraContext {
    pub fn new(n: usize, mode: Mode) -> Result<Self, AlgebraError> {
        if n == 0 || n > MAX_DIMENSION {
            return Err(AlgebraError::InvalidContext(format!(
                "dimension {n} outside 1..={MAX_DIMENSION}"
            )));
        }
        if mode == Mode::TwoParam && n != 2 {
            return Err(AlgebraError::InvalidContext(
                "two-parameter relations exist only for n = 2".into(),
            ));
        }
        Ok(AlgebraContext { n, mode })
    }

    pub fn one_param(n: usize) -> Result<Self, AlgebraError> {
        Self::new(n, Mode::OneParam)
    }

    pub fn two_param() -> Self {
        AlgebraContext {
            n: 2,
            mode: Mode::TwoParam,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn check_index(&self, index: usize) -> Result<(), AlgebraError> {
        if index == 0 || index > self.n {
            return Err(AlgebraError::IndexOutOfRange { index, n: self.n });
        }
        Ok(())
    }
}

/// Values of the deformation parameters together with the context.
///
/// In one-parameter mode `q` is tied to `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    ctx: AlgebraContext,
    r: S,
    r_inv: S,
    q: S,
    q_inv: S,
}

impl<S: Scalar> Params<S> {
    pub fn new(ctx: AlgebraContext, r: S, q: S) -> Result<Self, AlgebraError> {
        let q = match ctx.mode {
            Mode::OneParam => r.clone(),
            Mode::TwoParam => q,
        };
        let r_inv = r
            .try_inv()
            .ok_or_else(|| AlgebraError::InvalidContext("parameter r must be nonzero".into()))?;
        let q_inv = q
            .try_inv()
            .ok_or_else(|| AlgebraError::InvalidContext("parameter q must be nonzero".into()))?;
        Ok(Params {
            ctx,
            r,
            r_inv,
            q,
            q_inv,
        })
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn r(&self) -> &S {
        &self.r
    }

    pub fn r_inv(&self) -> &S {
        &self.r_inv
    }

    pub fn q(&self) -> &S {
        &self.q
    }

    pub fn q_inv(&self) -> &S {
        &self.q_inv
    }

    /// `r^k` for any integer `k`.
    pub fn r_pow(&self, k: i32) -> S {
        if k >= 0 {
            self.r.powi(k).expect("nonnegative power")
        } else {
            self.r_inv.powi(-k).expect("nonnegative power")
        }
    }

    /// Factor `c` in `θ^β θ^α → c θ^α θ^β` for `β > α`.
    pub fn theta_swap(&self) -> S {
        match self.ctx.mode {
            Mode::OneParam => self.r.neg_ref(),
            Mode::TwoParam => self.q.neg_ref(),
        }
    }

    /// Factor `c` in `∂_β ∂_α → c ∂_α ∂_β` for `β > α`.
    pub fn del_swap(&self) -> S {
        match self.ctx.mode {
            Mode::OneParam => self.r_inv.neg_ref(),
            Mode::TwoParam => self.q.mul_ref(&self.r_pow(-2)).neg_ref(),
        }
    }

    /// Factor `c` in `∂_α θ^β → c θ^β ∂_α` for `α ≠ β`.
    pub fn cross(&self, del: usize, theta: usize) -> S {
        debug_assert_ne!(del, theta);
        match self.ctx.mode {
            Mode::OneParam => self.r_inv.neg_ref(),
            Mode::TwoParam => {
                if del > theta {
                    // q ∂_2 θ^1 = -θ^1 ∂_2
                    self.q_inv.neg_ref()
                } else {
                    // ∂_1 θ^2 = -(q/r^2) θ^2 ∂_1
                    self.q.mul_ref(&self.r_pow(-2)).neg_ref()
                }
            }
        }
    }

    /// The coefficient `r^-2 - 1` of the diagonal rule.
    pub fn diagonal_shift(&self) -> S {
        self.r_pow(-2).sub_ref(&S::one())
    }
}

impl Params<RingElem> {
    /// Symbolic parameters: `r` and (two-parameter mode) `q`.
    pub fn symbolic(ctx: AlgebraContext) -> Self {
        Self::new(ctx, RingElem::symbol(Symbol::R), RingElem::symbol(Symbol::Q))
            .expect("symbols are invertible")
    }

    /// One-parameter relations whose deformation parameter is the given
    /// symbol (the Castellani bridge uses `q` here).
    pub fn one_param_in(n: usize, sym: Symbol) -> Result<Self, AlgebraError> {
        let ctx = AlgebraContext::one_param(n)?;
        let v = RingElem::symbol(sym);
        Self::new(ctx, v.clone(), v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_validation() {
        assert!(AlgebraContext::new(3, Mode::TwoParam).is_err());
        assert!(AlgebraContext::new(0, Mode::OneParam).is_err());
        assert!(AlgebraContext::new(7, Mode::OneParam).is_err());
        assert!(AlgebraContext::new(1, Mode::OneParam).is_ok());
        assert_eq!(AlgebraContext::two_param().dim(), 4);
    }

    #[test]
    fn one_param_rules_equal_two_param_rules_at_q_equal_r() {
        let one = Params::symbolic(AlgebraContext::one_param(2).unwrap());
        let two = Params::symbolic(AlgebraContext::two_param());
        let at = |v: RingElem| v.substitute_symbol(Symbol::Q, &RingElem::symbol(Symbol::R)).unwrap();
        assert_eq!(at(two.theta_swap()), one.theta_swap());
        assert_eq!(at(two.del_swap()), one.del_swap());
        assert_eq!(at(two.cross(2, 1)), one.cross(2, 1));
        assert_eq!(at(two.cross(1, 2)), one.cross(1, 2));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("two-param".parse::<Mode>().unwrap(), Mode::TwoParam);
        assert!("three".parse::<Mode>().is_err());
    }
}
