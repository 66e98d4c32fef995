//! Dense integer polynomial products: schoolbook below a threshold,
//! Karatsuba above it.

use num_bigint::BigInt;
use num_traits::Zero;

const KARATSUBA_THRESHOLD: usize = 24;

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    mul_into(a, b, &mut out);
    out
}

fn schoolbook_into(a: &[BigInt], b: &[BigInt], out: &mut [BigInt]) {
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
}

/// Adds `a * b` into `out`.
fn mul_into(a: &[BigInt], b: &[BigInt], out: &mut [BigInt]) {
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        schoolbook_into(a, b, out);
        return;
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    if a1.is_empty() || b1.is_empty() {
        // Unbalanced operands: split only the longer side.
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        for (k, chunk) in long.chunks(short.len()).enumerate() {
            mul_into(chunk, short, &mut out[k * short.len()..]);
        }
        return;
    }
    let z0 = mul(a0, b0);
    let z2 = mul(a1, b1);
    let sa = add(a0, a1);
    let sb = add(b0, b1);
    let mut z1 = mul(&sa, &sb);
    for (i, c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + half] += c;
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[i + 2 * half] += c;
    }
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        schoolbook_into(a, b, &mut out);
        out
    }

    proptest! {
        #[test]
        fn karatsuba_matches_schoolbook(
            a in prop::collection::vec(-1000i64..1000, 1..120),
            b in prop::collection::vec(-1000i64..1000, 1..120),
        ) {
            let a: Vec<BigInt> = a.into_iter().map(BigInt::from).collect();
            let b: Vec<BigInt> = b.into_iter().map(BigInt::from).collect();
            prop_assert_eq!(mul(&a, &b), naive(&a, &b));
        }
    }
}
