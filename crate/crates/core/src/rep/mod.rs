//! The `2^n`-dimensional Grassmann module. Basis state `S` (a bitmask, bit
//! `i-1` for index `i`) is the ascending product `θ^S` applied to the vacuum;
//! index 0 is the vacuum.

mod letters;
mod matrix;

pub use letters::{
    apply_letter, del_matrix, dressed_letters, letter_matrix, matrix_of, mu_inv_sqrt_matrix,
    mu_matrix, mu_prime_matrix, theta_matrix, word_matrix, word_sum_matrix, DressedQuadruple,
};
pub use matrix::RepMatrix;

