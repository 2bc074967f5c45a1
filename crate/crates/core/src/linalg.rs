//! Exact integer linear algebra for the homomorphism-space oracles.
//!
//! Fraction-free Gaussian elimination over checked `i128`. The intertwiner
//! systems solved here are incidence-like (each row carries one +1 and one
//! −1), so intermediate values stay tiny; rows are renormalized by their gcd
//! after each elimination step and any overflow aborts rather than
//! approximating.

use alloc::vec::Vec;

fn gcd_i128(mut x: i128, mut y: i128) -> i128 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

fn normalize_row(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |acc, &x| gcd_i128(acc, x));
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

fn eliminate(rows: &mut [Vec<i128>], cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let a = pivot_row[c];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let b = row[c];
            for (x, &p) in row.iter_mut().zip(pivot_row) {
                let lhs = x.checked_mul(a).expect("overflow");
                let rhs = p.checked_mul(b).expect("overflow");
                *x = lhs.checked_sub(rhs).expect("overflow");
            }
            normalize_row(row);
        }
        pivots.push((r, c));
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of an integer matrix given as rows.
pub fn int_rank(rows: &[Vec<i128>], cols: usize) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    for row in &mut m {
        debug_assert_eq!(row.len(), cols);
        normalize_row(row);
    }
    eliminate(&mut m, cols).len()
}

/// Integer basis of the right nullspace {x : Mx = 0}: one primitive vector
/// per free column, obtained by exact back-substitution.
pub fn int_nullspace(rows: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    for row in &mut m {
        normalize_row(row);
    }
    let pivots = eliminate(&mut m, cols);
    let mut is_pivot = alloc::vec![false; cols];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }

    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        // Solve bottom-up with rational coordinates x_c = num_c / den_c.
        let mut num = alloc::vec![0i128; cols];
        let mut den = alloc::vec![1i128; cols];
        num[free] = 1;
        for &(r, c) in pivots.iter().rev() {
            // row r: m[r][c]·x_c + Σ_{j>c} m[r][j]·x_j = 0.
            let (mut acc_n, mut acc_d) = (0i128, 1i128);
            for j in (c + 1)..cols {
                if m[r][j] == 0 || num[j] == 0 {
                    continue;
                }
                let term_n = m[r][j].checked_mul(num[j]).expect("overflow");
                let term_d = den[j];
                acc_n = acc_n
                    .checked_mul(term_d)
                    .and_then(|l| term_n.checked_mul(acc_d).and_then(|r| l.checked_add(r)))
                    .expect("overflow");
                acc_d = acc_d.checked_mul(term_d).expect("overflow");
                let g = gcd_i128(acc_n, acc_d);
                if g > 1 {
                    acc_n /= g;
                    acc_d /= g;
                }
            }
            // x_c = −acc / m[r][c].
            let mut n = -acc_n;
            let mut d = acc_d.checked_mul(m[r][c]).expect("overflow");
            if d < 0 {
                n = -n;
                d = -d;
            }
            let g = gcd_i128(n, d).max(1);
            num[c] = n / g;
            den[c] = d / g;
        }
        // Clear denominators.
        let mut scale = 1i128;
        for &d in &den {
            scale = scale
                .checked_mul(d / gcd_i128(scale, d).max(1))
                .expect("overflow");
        }
        let mut vec: Vec<i128> = (0..cols)
            .map(|j| num[j].checked_mul(scale / den[j]).expect("overflow"))
            .collect();
        normalize_row(&mut vec);
        basis.push(vec);
    }
    basis
}
