//! Characteristic polynomials and rational root extraction.
//!
//! Root finding is deliberately bounded: it either returns the complete set
//! of rational roots or `None` when the search would exceed its caps, so
//! callers can fall back to an honest "undetermined" answer.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMatrix;
use super::rat::Rat;

/// Coefficients of det(xI - M) by the Faddeev-LeVerrier recurrence;
/// index i holds the coefficient of x^i, index n is 1.
pub fn charpoly(m: &RatMatrix) -> Vec<Rat> {
    assert_eq!(
        m.rows(),
        m.cols(),
        "characteristic polynomial of non-square"
    );
    let n = m.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    if n == 0 {
        return coeffs;
    }
    let mut mk = m.clone();
    coeffs[n - 1] = -mk.trace();
    for k in 2..=n {
        mk.add_diag(&coeffs[n - k + 1]);
        mk = m.mul(&mk);
        coeffs[n - k] = -(&mk.trace() / &Rat::from(k as i64));
    }
    coeffs
}

pub fn eval_poly(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

const TRIAL_DIVISION_CAP: u64 = 1_000_000;
const CANDIDATE_CAP: usize = 4096;

/// All positive divisors, or `None` when trial division would exceed the cap.
fn divisors_capped(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0u64;
    while &d * &d <= n {
        steps += 1;
        if steps > TRIAL_DIVISION_CAP {
            return None;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// The complete set of rational roots of `p` (no multiplicities), or `None`
/// when the bounded divisor search gives up. A zero polynomial is rejected.
pub fn rational_roots(p: &[Rat]) -> Option<Vec<Rat>> {
    let deg = p
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("zero polynomial");
    let mut roots = Vec::new();
    if deg == 0 {
        return Some(roots);
    }
    let low = p.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rat::zero());
    }
    let q = &p[low..=deg];
    if q.len() == 1 {
        return Some(roots);
    }
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in q {
        let d = c.denom();
        let g = gcd(&lcm, d);
        lcm = &lcm / &g * d;
    }
    let ints: Vec<BigInt> = q.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let d0 = divisors_capped(&ints[0])?;
    let dn = divisors_capped(ints.last().unwrap())?;
    if d0.len().checked_mul(dn.len())? > CANDIDATE_CAP {
        return None;
    }
    for a in &d0 {
        for b in &dn {
            for sign in [1i64, -1] {
                let cand = Rat::from_big(a * BigInt::from(sign), b.clone());
                if roots.contains(&cand) {
                    continue;
                }
                if eval_poly(q, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_trace_and_det() {
        let m = RatMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        // x^2 - 5x - 2
        let p = charpoly(&m);
        assert_eq!(p, vec![Rat::from(-2), Rat::from(-5), Rat::one()]);
    }

    #[test]
    fn roots_of_diagonalizable() {
        let m = RatMatrix::from_int_rows(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        let mut roots = rational_roots(&charpoly(&m)).unwrap();
        roots.sort();
        assert_eq!(roots, vec![Rat::from(-3), Rat::zero(), Rat::from(2)]);
    }

    #[test]
    fn irrational_spectrum_yields_no_roots() {
        // x^2 - 2
        let p = vec![Rat::from(-2), Rat::zero(), Rat::one()];
        assert_eq!(rational_roots(&p), Some(alloc::vec::Vec::new()));
    }

    #[test]
    fn fractional_roots_found() {
        // (2x - 1)(3x + 2) = 6x^2 + x - 2
        let p = vec![Rat::from(-2), Rat::one(), Rat::from(6)];
        let mut roots = rational_roots(&p).unwrap();
        roots.sort();
        assert_eq!(roots, vec![Rat::new(-2, 3), Rat::new(1, 2)]);
    }
}
