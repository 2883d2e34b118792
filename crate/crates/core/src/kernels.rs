//! Constructors for standard polarization kernels.

use crate::gf2::{BinMatrix, BinVector};
use crate::{Error, Result};

/// The 2x2 lower-triangular kernel `[[1,0],[1,1]]`.
pub fn f2() -> BinMatrix {
    BinMatrix::from_text("10\n11\n").expect("static kernel")
}

/// Kronecker product `a (x) b` over GF(2).
pub fn kron(a: &BinMatrix, b: &BinMatrix) -> BinMatrix {
    let mut out = BinMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for ra in 0..a.rows() {
        for ca in 0..a.cols() {
            if !a.get(ra, ca) {
                continue;
            }
            for rb in 0..b.rows() {
                for cb in 0..b.cols() {
                    if b.get(rb, cb) {
                        out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
                    }
                }
            }
        }
    }
    out
}

/// `m`-fold Kronecker power of a kernel; `kron_power(k, 0)` is `[[1]]`.
pub fn kron_power(k: &BinMatrix, m: usize) -> BinMatrix {
    let mut out = BinMatrix::identity(1);
    for _ in 0..m {
        out = kron(&out, k);
    }
    out
}

/// The size-`2^m` kernel `F2^(x)m`.
pub fn arikan(m: usize) -> BinMatrix {
    kron_power(&f2(), m)
}

/// Sorted variant of `F2^(x)m`: rows ordered by ascending Hamming weight,
/// ties broken by ascending integer value of the row read with column 0 as
/// the most significant bit. `l` must be a power of two with `4 <= l <= 64`.
///
/// For `l = 4` this yields rows (1000, 1010, 1100, 1111).
pub fn sorted_arikan(l: usize) -> Result<BinMatrix> {
    if !l.is_power_of_two() || !(4..=64).contains(&l) {
        return Err(Error::UnsupportedSize {
            got: l,
            supported: "powers of two in [4, 64]".to_string(),
        });
    }
    let m = arikan(l.trailing_zeros() as usize);
    let mut rows: Vec<BinVector> = (0..l).map(|r| m.row(r)).collect();
    rows.sort_by_key(|r| (r.weight(), msb_first_value(r)));
    BinMatrix::from_rows(&rows)
}

/// Integer value of a row read leftmost-column-first as the MSB.
fn msb_first_value(v: &BinVector) -> u64 {
    let mut x = 0u64;
    for j in 0..v.len() {
        x = (x << 1) | v.get(j) as u64;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arikan_squared_matches_manual_kronecker() {
        assert_eq!(arikan(2).to_text(), "1000\n1100\n1010\n1111\n");
    }

    #[test]
    fn sorted_arikan_4_row_order() {
        assert_eq!(
            sorted_arikan(4).unwrap().to_text(),
            "1000\n1010\n1100\n1111\n"
        );
    }

    #[test]
    fn sorted_arikan_16_bottom_rows() {
        let s16 = sorted_arikan(16).unwrap();
        let texts: Vec<String> = (11..16).map(|r| s16.row(r).to_text()).collect();
        assert_eq!(
            texts,
            vec![
                "1010101010101010",
                "1100110011001100",
                "1111000011110000",
                "1111111100000000",
                "1111111111111111",
            ]
        );
    }

    #[test]
    fn sorted_arikan_rejects_odd_sizes() {
        assert!(sorted_arikan(12).is_err());
        assert!(sorted_arikan(2).is_err());
    }

    #[test]
    fn kron_power_identity_base() {
        let k = f2();
        assert_eq!(kron_power(&k, 0), BinMatrix::identity(1));
        assert_eq!(kron_power(&k, 1), k);
        assert_eq!(kron_power(&k, 3).rows(), 8);
    }
}
