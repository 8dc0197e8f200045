//! Counting machinery behind dimension lower bounds for lifted codes.
//!
//! A lifted degree set contains many translated copies ("blocks") of small
//! weighted Reed-Muller degree sets. Counting maximal blocks at every scale
//! yields an exact lower bound on the lifted dimension and, in the limit, a
//! lower bound on the asymptotic information rate.
//!
//! All sequence values are exact integers in u128 (checked arithmetic);
//! floating point appears only in the final rate division. The supported
//! parameter ranges (p <= 5, m <= 12 and table exponents e <= 10) stay far
//! below the u128 limit.

use crate::error::Error;

fn pow128(p: u32, m: u32) -> u128 {
    (p as u128)
        .checked_pow(m)
        .expect("p^m overflows u128")
}

/// T_m: the number of pairs (u, v) of non-negative integers with
/// u + eta*v <= p^m - 1, in closed form.
pub fn lattice_triangle_count(p: u32, eta: u32, m: u32) -> u128 {
    let pm = pow128(p, m);
    let v = (pm - 1) / eta as u128;
    // sum_{v'=0..v} (pm - eta v') = (v+1) pm - eta v(v+1)/2
    (v + 1) * pm - eta as u128 * (v * (v + 1) / 2)
}

/// W_m(alpha): the size of the weighted Reed-Muller degree set at degree
/// p^m - alpha - eta, computed as an exact lattice count (zero when the
/// degree is negative).
pub fn wrm_block_size(p: u32, eta: u32, alpha: u64, m: u32) -> u128 {
    let pm = pow128(p, m);
    let Some(d) = pm.checked_sub(alpha as u128 + eta as u128) else {
        return 0;
    };
    let mut total = 0u128;
    let mut j = 0u128;
    while eta as u128 * j <= d {
        total += d - eta as u128 * j + 1;
        j += 1;
    }
    total
}

/// The closed form of W_m(alpha):
/// V (p^m - alpha + 1) - eta V (V + 1) / 2 with V = floor((p^m - alpha)/eta).
/// Evaluated separately so it can be checked against the lattice count.
pub fn wrm_block_size_closed_form(p: u32, eta: u32, alpha: u64, m: u32) -> u128 {
    let pm = pow128(p, m);
    if pm < alpha as u128 {
        return 0;
    }
    let v = (pm - alpha as u128) / eta as u128;
    v * (pm - alpha as u128 + 1) - eta as u128 * (v * (v + 1) / 2)
}

/// N_0, ..., N_m: the number of blocks at each scale that are not contained
/// in a block of a larger scale, via the recursion
/// N_m = p^(2m) - sum_{nu < m} N_nu T_(m - nu), N_0 = 1.
pub fn maximal_block_counts(p: u32, eta: u32, max_m: u32) -> Result<Vec<u128>, Error> {
    let mut n = Vec::with_capacity(max_m as usize + 1);
    n.push(1u128);
    for m in 1..=max_m {
        let mut acc = pow128(p, 2 * m);
        for (nu, &n_nu) in n.iter().enumerate() {
            let t = lattice_triangle_count(p, eta, m - nu as u32);
            acc = acc
                .checked_sub(n_nu * t)
                .ok_or(Error::Overflow("maximal block count went negative"))?;
        }
        n.push(acc);
    }
    Ok(n)
}

/// N_m for a single m.
pub fn maximal_block_count(p: u32, eta: u32, m: u32) -> u128 {
    maximal_block_counts(p, eta, m).expect("block counts stay non-negative")[m as usize]
}

/// floor(log_p alpha) for alpha >= 1.
pub fn e_alpha(p: u32, alpha: u64) -> u32 {
    assert!(alpha >= 1);
    let mut e = 0;
    let mut pw = p as u128;
    while pw <= alpha as u128 {
        e += 1;
        pw *= p as u128;
    }
    e
}

/// Exact lower bound on the dimension of the eta-lifting of RS_q(q - alpha)
/// for q = p^e: sum over scales of W_(e-eps)(alpha) * N_eps.
///
/// Requires e > floor(log_p alpha).
pub fn dim_lower_bound(p: u32, eta: u32, alpha: u64, e: u32) -> u128 {
    let ea = e_alpha(p, alpha);
    assert!(e > ea, "need e > floor(log_p alpha) = {ea}");
    let n = maximal_block_counts(p, eta, e).expect("block counts stay non-negative");
    (0..=e - ea - 1)
        .map(|eps| wrm_block_size(p, eta, alpha, e - eps) * n[eps as usize])
        .sum()
}

/// Lower bound on the limit information rate of eta-lifted RS codes at
/// degree d = q - p^(e-c) (that is, d/q -> 1 - p^-c):
/// (1 / 2 eta) sum_{eps < c} (p^-eps - p^-c)^2 N_eps.
///
/// The sum is evaluated exactly; only the final division is floating point.
pub fn asymptotic_rate_lower_bound(p: u32, eta: u32, c: u32) -> f64 {
    assert!(c >= 1);
    let n = maximal_block_counts(p, eta, c).expect("block counts stay non-negative");
    let mut numerator = 0u128;
    for eps in 0..c {
        let diff = pow128(p, c - eps) - 1;
        numerator += n[eps as usize] * diff * diff;
    }
    let denominator = 2 * eta as u128 * pow128(p, 2 * c);
    numerator as f64 / denominator as f64
}

/// Number of translated blocks of scale eps1 contained in one block of
/// scale eps2, counted by direct set inclusion of the translated cells.
///
/// Requires p^eps1 >= alpha + eta (a nonempty small block); the count then
/// equals T_(eps2 - eps1).
pub fn nested_block_count(p: u32, eta: u32, alpha: u64, eps1: u32, eps2: u32) -> u128 {
    assert!(eps1 <= eps2);
    let small_scale = pow128(p, eps1);
    assert!(
        small_scale >= alpha as u128 + eta as u128,
        "small block must be nonempty"
    );
    let big_d = pow128(p, eps2) - alpha as u128 - eta as u128;
    let small_d = (small_scale - alpha as u128 - eta as u128) as u64;
    let span = pow128(p, eps2 - eps1) as u64;
    let mut count = 0u128;
    for u in 0..=span {
        for v in 0..=span {
            let mut inside = true;
            'cells: for j in 0..=(small_d / eta as u64) {
                for i in 0..=(small_d - eta as u64 * j) {
                    let ti = i as u128 + u as u128 * small_scale;
                    let tj = j as u128 + v as u128 * small_scale;
                    if ti + eta as u128 * tj > big_d {
                        inside = false;
                        break 'cells;
                    }
                }
            }
            if inside {
                count += 1;
            }
        }
    }
    count
}
