//! The counting sequences behind the dimension lower bounds.
//!
//! T_m counts lattice points under u + eta*v <= p^m - 1; W_m(alpha) is the
//! size of a weighted Reed-Muller degree set at degree p^m - alpha - eta;
//! N_m counts blocks of scale m not swallowed by a larger block. They tie
//! together through the exact identity p^(2m) = sum_nu N_nu T_(m-nu), and
//! yield both finite lower bounds and the asymptotic-rate bound.
//!
//! Run with: cargo run --release --example rate_bounds

use etalift::bounds::{
    asymptotic_rate_lower_bound, dim_lower_bound, lattice_triangle_count, maximal_block_counts,
    wrm_block_size,
};
use etalift::gf::Field;
use etalift::lift::lift_degree_set;

fn main() {
    let (p, eta) = (3u32, 2u32);
    println!("p = {p}, eta = {eta}:");
    println!("  m    T_m  W_m(2)    N_m");
    let n = maximal_block_counts(p, eta, 5).unwrap();
    for m in 0..=5u32 {
        println!(
            "  {m}  {:>5}  {:>6}  {:>5}",
            lattice_triangle_count(p, eta, m),
            wrm_block_size(p, eta, 2, m),
            n[m as usize]
        );
    }
    let check: u128 = (0..=4u32)
        .map(|nu| n[nu as usize] * lattice_triangle_count(p, eta, 4 - nu))
        .sum();
    println!("  identity at m = 4: sum N_nu T_(4-nu) = {check} = p^8");

    println!("\nLower bound vs exact dimension (p = 2, eta = 2, d = q - 2):");
    println!("  e     bound     exact");
    for e in 3..=8u32 {
        let field = Field::new(2, e).unwrap();
        let exact = lift_degree_set(&field, 2, field.q() - 2).unwrap().len();
        let bound = dim_lower_bound(2, 2, 2, e);
        println!("  {e}  {bound:>8}  {exact:>8}");
    }

    println!("\nAsymptotic-rate lower bounds (d/q -> 1 - p^-c):");
    for (p, eta, c) in [(2, 2, 4), (2, 2, 6), (2, 4, 3), (5, 2, 2)] {
        println!(
            "  p={p} eta={eta} c={c}: limit rate >= {:.4}",
            asymptotic_rate_lower_bound(p, eta, c)
        );
    }
}
