use num_bigint::BigUint;

use super::PolyModP;

const MATRIX_LIMIT: usize = 4096;

/// The `p`-power map `h ↦ h^p mod f` as a linear operator on `F_p[x]/(f)`.
///
/// Stored transposed so that applying it is a sequence of dot products.
/// Above `MATRIX_LIMIT` the map falls back to repeated squaring.
pub(crate) struct FrobeniusMap {
    modulus: PolyModP,
    n: usize,
    columns: Option<Vec<u64>>,
}

impl FrobeniusMap {
    /// `f` must be monic of degree at least 1.
    pub(crate) fn new(f: &PolyModP) -> Self {
        let n = f.degree().expect("nonzero modulus");
        debug_assert_eq!(f.leading(), 1);
        if n > MATRIX_LIMIT {
            return FrobeniusMap {
                modulus: f.clone(),
                n,
                columns: None,
            };
        }
        let p = f.modulus();
        let rows = if (p as usize) <= 2 * n {
            rows_by_shifting(f, n)
        } else {
            rows_by_multiplying(f, n)
        };
        let mut columns = vec![0u64; n * n];
        for (j, row) in rows.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                columns[k * n + j] = v;
            }
        }
        FrobeniusMap {
            modulus: f.clone(),
            n,
            columns: Some(columns),
        }
    }

    pub(crate) fn apply(&self, h: &PolyModP) -> PolyModP {
        let p = self.modulus.modulus();
        let Some(columns) = &self.columns else {
            return h.pow_mod(&BigUint::from(p), &self.modulus);
        };
        let h = h.rem(&self.modulus);
        let hc = h.residues();
        let pp = p as u128;
        let out = (0..self.n)
            .map(|k| {
                let col = &columns[k * self.n..k * self.n + hc.len()];
                let s: u128 = hc.iter().zip(col).map(|(&a, &b)| (a * b) as u128).sum();
                (s % pp) as u64
            })
            .collect();
        PolyModP::from_raw(p, out)
    }
}

/// Row `j` holds `x^{pj} mod f`, built by multiplying by `x` one step at a time.
fn rows_by_shifting(f: &PolyModP, n: usize) -> Vec<Vec<u64>> {
    let p = f.modulus();
    let fc = f.residues();
    let mut row = vec![0u64; n];
    row[0] = 1;
    let mut rows = vec![row.clone()];
    for _ in 1..n {
        for _ in 0..p {
            let carry = row[n - 1];
            row.copy_within(0..n - 1, 1);
            row[0] = 0;
            if carry != 0 {
                for i in 0..n {
                    row[i] = (row[i] + p - carry * fc[i] % p) % p;
                }
            }
        }
        rows.push(row.clone());
    }
    rows
}

fn rows_by_multiplying(f: &PolyModP, n: usize) -> Vec<Vec<u64>> {
    let p = f.modulus();
    let xp = PolyModP::x(p).pow_mod(&BigUint::from(p), f);
    let mut cur = PolyModP::constant(p, 1);
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = cur.residues().to_vec();
        row.resize(n, 0);
        rows.push(row);
        cur = cur.mul_mod(&xp, f);
    }
    rows
}
