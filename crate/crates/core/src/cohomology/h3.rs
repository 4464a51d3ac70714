//! `|H^3(G, k^×)|` as the order of the torsion in `H_3(G; Z)`.
//!
//! The coefficient group is divisible, so `H^3(G, k^×)` is dual to `H_3(G; Z)`,
//! whose order is the product of the nonzero invariant factors of the bar
//! boundary `∂_4`. Each `p`-part is read off a Smith reduction over
//! `Z/p^k` with `k = v_p(|G|) + 1`; since `|G|` annihilates `H_3`, no
//! invariant factor can vanish modulo `p^k` unless it is zero over `Z`, which
//! is cross-checked against the rational rank of `∂_4`.

use crate::error::{Error, Result};
use crate::group::{ElemId, GroupTable};

pub const DEFAULT_H3_CAP: usize = 8;

fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `∂_4` on normalized chains: rows indexed by 4-tuples, columns by 3-tuples,
/// both over non-identity elements in mixed radix `n − 1`.
fn boundary4(g: &GroupTable) -> (Vec<Vec<i64>>, usize) {
    let n = g.order();
    let m = n - 1;
    let col = |t: [ElemId; 3]| -> Option<usize> {
        if t.iter().any(|x| x.is_identity()) {
            None
        } else {
            Some(((t[0].0 - 1) * m + t[1].0 - 1) * m + t[2].0 - 1)
        }
    };
    let mut rows = Vec::with_capacity(m.pow(4));
    for idx in 0..m.pow(4) {
        let [a, b, c, d] = [idx / (m * m * m), idx / (m * m) % m, idx / m % m, idx % m].map(|i| ElemId(i + 1));
        let mut row = vec![0i64; m.pow(3)];
        let faces = [
            ([b, c, d], 1),
            ([g.mul(a, b), c, d], -1),
            ([a, g.mul(b, c), d], 1),
            ([a, b, g.mul(c, d)], -1),
            ([a, b, c], 1),
        ];
        for (t, s) in faces {
            if let Some(j) = col(t) {
                row[j] += s;
            }
        }
        rows.push(row);
    }
    (rows, m.pow(3))
}

fn valuation(mut x: u64, p: u64, k: u32) -> u32 {
    if x == 0 {
        return k;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

fn inverse_mod(a: u64, modulus: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (modulus as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not a unit");
    t.rem_euclid(modulus as i128) as u64
}

/// Valuations of the diagonal of a Smith form over `Z/p^k`, zeros excluded.
fn local_invariants(rows: &[Vec<i64>], cols: usize, p: u64, k: u32) -> Vec<u32> {
    let q = p.pow(k);
    let mut a: Vec<Vec<u64>> =
        rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(q as i64) as u64).collect()).collect();
    a.retain(|r| r.iter().any(|&x| x != 0));
    let mut live_cols: Vec<usize> = (0..cols).collect();
    let mut out = Vec::new();
    loop {
        // pivot of least valuation among the remaining block
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for (i, row) in a.iter().enumerate() {
            for (jj, &j) in live_cols.iter().enumerate() {
                let x = row[j];
                if x == 0 {
                    continue;
                }
                let v = valuation(x, p, k);
                if best.is_none_or(|b| v < b.2) {
                    best = Some((i, jj, v));
                    if v == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((pi, pjj, v)) = best else { break };
        out.push(v);
        let pj = live_cols[pjj];
        let pivot_row = a.swap_remove(pi);
        let pv = p.pow(v);
        let unit_inv = inverse_mod(pivot_row[pj] / pv, q);
        for row in a.iter_mut() {
            let x = row[pj];
            if x == 0 {
                continue;
            }
            // x = pivot · c with c = (x / p^v) · unit⁻¹
            let c = ((x / pv) as u128 * unit_inv as u128 % q as u128) as u64;
            for &j in &live_cols {
                if pivot_row[j] != 0 {
                    let sub = (pivot_row[j] as u128 * c as u128 % q as u128) as u64;
                    row[j] = (row[j] + q - sub) % q;
                }
            }
            debug_assert_eq!(row[pj], 0);
        }
        live_cols.swap_remove(pjj);
        a.retain(|r| live_cols.iter().any(|&j| r[j] != 0));
    }
    out
}

/// Order of `H^3(G, k^×)`; refuses groups above `cap`.
pub fn h3_order(g: &GroupTable, cap: usize) -> Result<u64> {
    let n = g.order();
    if n > cap {
        return Err(Error::CapExceeded { order: n, cap });
    }
    if n == 1 {
        return Ok(1);
    }
    let m = (n - 1) as u64;
    let rank = (m * m * m - m * m + m) as usize;
    let (rows, cols) = boundary4(g);
    let mut order = 1u64;
    for (p, e) in prime_powers(n as u64) {
        let k = e + 1;
        let vals = local_invariants(&rows, cols, p, k);
        if vals.len() != rank {
            return Err(Error::Solver(format!("local rank {} differs from rational rank {rank} at p={p}", vals.len())));
        }
        let total: u32 = vals.iter().sum();
        if vals.iter().any(|&v| v >= k) {
            return Err(Error::Solver(format!("invariant factor not annihilated by |G| at p={p}")));
        }
        order *= p.pow(total);
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;
    use crate::group::{builtin_group, make_cyclic};

    /// `|H_3(C_a × C_b)|` from Künneth: `H_3 ⊗ H_0`, `H_0 ⊗ H_3` and
    /// `Tor(H_1, H_1)` survive, giving `a·b·gcd(a, b)`.
    fn kunneth_two_cyclic(a: u64, b: u64) -> u64 {
        let h = |i: u32, n: u64| -> Vec<u64> {
            // integral homology of C_n: Z, Z_n, 0, Z_n (0 stands for Z)
            match i {
                0 => vec![0],
                1 | 3 => vec![n],
                _ => vec![],
            }
        };
        let tensor = |x: u64, y: u64| if x == 0 { y } else if y == 0 { x } else { x.gcd(&y) };
        let tor = |x: u64, y: u64| if x == 0 || y == 0 { 1 } else { x.gcd(&y) };
        let mut total = 1;
        for i in 0..=3 {
            for x in h(i, a) {
                for y in h(3 - i, b) {
                    total *= tensor(x, y);
                }
            }
        }
        for i in 0..=2 {
            for x in h(i, a) {
                for y in h(2 - i, b) {
                    total *= tor(x, y);
                }
            }
        }
        total
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(h3_order(&make_cyclic(1), 8).unwrap(), 1);
        for n in 2..=6 {
            assert_eq!(h3_order(&make_cyclic(n), 8).unwrap(), n as u64);
        }
    }

    #[test]
    fn products_of_cyclic_groups() {
        assert_eq!(h3_order(&builtin_group("c2xc2").unwrap(), 8).unwrap(), kunneth_two_cyclic(2, 2));
        assert_eq!(kunneth_two_cyclic(2, 2), 8);
        assert_eq!(h3_order(&builtin_group("c2xc4").unwrap(), 8).unwrap(), kunneth_two_cyclic(2, 4));
        assert_eq!(h3_order(&builtin_group("c2xc3").unwrap(), 8).unwrap(), kunneth_two_cyclic(2, 3));
    }

    #[test]
    fn s3_and_cap() {
        // H_3(S3) = Z_6
        assert_eq!(h3_order(&builtin_group("s3").unwrap(), 8).unwrap(), 6);
        assert!(matches!(h3_order(&make_cyclic(9), 8), Err(Error::CapExceeded { .. })));
    }
}
