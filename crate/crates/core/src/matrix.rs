//! Small dense integer matrices with checked arithmetic.

use alloc::vec;
use alloc::vec::Vec;

/// Square integer matrix indexed by quiver vertices. All arithmetic is
/// checked; an overflow is a bug in the caller and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc: i64 = 0;
                for k in 0..self.n {
                    acc = acc
                        .checked_add(self[(i, k)].checked_mul(other[(k, j)]).expect("overflow"))
                        .expect("overflow");
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.checked_neg().expect("overflow");
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n, "vector size mismatch");
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(0i64, |acc, j| {
                    acc.checked_add(self[(i, j)].checked_mul(v[j]).expect("overflow"))
                        .expect("overflow")
                })
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i * self.n + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.entries[i * self.n + j]
    }
}
