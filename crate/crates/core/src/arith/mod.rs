//! Integer and arithmetic-function substrate.

pub mod chars;
pub mod consts;
pub mod factor;
pub mod series;
pub mod sieve;
pub mod sum;

pub type C64 = rustfft::num_complex::Complex<f64>;

pub use chars::{phi1_star, phi_star, CharacterGroup, DirichletCharacter};
pub use factor::{euler_phi, factorize, is_prime, moebius, small_multiplicative, Factorization, Multiplicative};
pub use series::{hardy_littlewood_j, j_table, singular_series};
pub use sieve::SieveTable;
pub use sum::{ComplexSum, Neumaier};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
