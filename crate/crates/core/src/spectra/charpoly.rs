//! Exact characteristic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::limits::{self, MAX_CHARPOLY_ORDER};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::spectra::poly::RationalPoly;

/// `det(xI - M)`, monic, by the Faddeev-LeVerrier recursion.
///
/// The matrix is first scaled by the lcm `d` of its denominators so the
/// recursion runs over the integers with exact divisions; the coefficient
/// of `x^k` is then rescaled by `d^(k-n)`.
pub fn charpoly_exact(m: &RationalMatrix) -> Result<RationalPoly> {
    let n = m.order();
    limits::check("charpoly order", n, MAX_CHARPOLY_ORDER)?;
    if n == 0 {
        return Ok(RationalPoly::one());
    }
    let mut d = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            d = d.lcm(m.get(i, j).denom());
        }
    }
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = m.get(i, j);
                    e.numer() * (&d / e.denom())
                })
                .collect()
        })
        .collect();

    // c[k] is the coefficient of x^k in det(xI - A).
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        c[n - k] = q;
    }

    let mut coeffs = Vec::with_capacity(n + 1);
    for (k, ck) in c.into_iter().enumerate() {
        let denom = num_traits::pow(d.clone(), n - k);
        coeffs.push(Rational::new(ck, denom));
    }
    Ok(RationalPoly::from_coeffs(coeffs))
}

fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}
