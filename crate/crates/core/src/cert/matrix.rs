//! Square matrices over GF(2), used to test the four-generator relations
//! in finite dimensions.
//!
//! `ca = 1` and `bd = 1` force `a, d` to be invertible with `c = a^-1`
//! and `b = d^-1`; then `ac + db = 1 + 1 = 0`. So no finite model exists,
//! and only an infinite-dimensional space such as ℋ can carry the action.

use std::fmt;

/// An `n × n` matrix over GF(2), `n ≤ 8`, rows stored as bit masks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    rows: [u8; 8],
}

impl BitMatrix {
    pub fn zero(n: usize) -> Self {
        assert!((1..=8).contains(&n), "matrix size {n} not in 1..=8");
        BitMatrix { n, rows: [0; 8] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    /// The matrix whose entries are the bits of `code`, row-major.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut m = BitMatrix::zero(n);
        let mask = ((1u16 << n) - 1) as u64;
        for i in 0..n {
            m.rows[i] = ((code >> (i * n)) & mask) as u8;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        let mut m = *self;
        for i in 0..self.n {
            m.rows[i] ^= other.rows[i];
        }
        m
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        let mut m = BitMatrix::zero(self.n);
        for i in 0..self.n {
            let mut acc = 0u8;
            for k in 0..self.n {
                if self.get(i, k) {
                    acc ^= other.rows[k];
                }
            }
            m.rows[i] = acc;
        }
        m
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.n;
        let mut a = *self;
        let mut inv = BitMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col))?;
            a.rows.swap(col, pivot);
            inv.rows.swap(col, pivot);
            for r in 0..n {
                if r != col && a.get(r, col) {
                    a.rows[r] ^= a.rows[col];
                    inv.rows[r] ^= inv.rows[col];
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            (0..self.n).map(|i| (0..self.n).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()).collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

/// Whether `ac + db = 1, ba = 0, bd = 1, ca = 1, cd = 0` hold.
pub fn satisfies_four_relations(a: &BitMatrix, b: &BitMatrix, c: &BitMatrix, d: &BitMatrix) -> bool {
    let n = a.size();
    let (one, zero) = (BitMatrix::identity(n), BitMatrix::zero(n));
    a.mul(c).add(&d.mul(b)) == one && b.mul(a) == zero && b.mul(d) == one && c.mul(a) == one && c.mul(d) == zero
}

/// All pairs `(x, y)` of `n × n` matrices with `y x = 1`, by exhaustive
/// enumeration of `x` (and solving for `y`).
pub fn left_inverse_pairs(n: usize) -> Vec<(BitMatrix, BitMatrix)> {
    assert!(n <= 4, "exhaustive enumeration is limited to n <= 4");
    (0..1u64 << (n * n))
        .filter_map(|code| {
            let x = BitMatrix::from_code(n, code);
            x.inverse().map(|y| (x, y))
        })
        .collect()
}

/// Search all of `{(a, c) : ca = 1} × {(d, b) : bd = 1}` for a model of the
/// four relations. Feasible for `n ≤ 3`.
pub fn exhaustive_finite_model(n: usize) -> Option<[BitMatrix; 4]> {
    assert!(n <= 3, "exhaustive search is limited to n <= 3");
    let pairs = left_inverse_pairs(n);
    for (a, c) in &pairs {
        for (d, b) in &pairs {
            if satisfies_four_relations(a, b, c, d) {
                return Some([*a, *b, *c, *d]);
            }
        }
    }
    None
}
