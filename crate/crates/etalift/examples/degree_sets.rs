//! Degree sets of weighted Reed-Muller codes and their eta-liftings.
//!
//! Run with: cargo run --release --example degree_sets

use etalift::code::wrm_degree_set;
use etalift::gf::{Fe, Field};
use etalift::lift::{lift_degree_set, lift_membership_oracle};
use etalift::poly::BiPoly;
use etalift::viz::ascii_grid;

fn main() {
    // The q = 4 story: with weight (1, 2) and degree bound 2, the weighted
    // Reed-Muller code is spanned by 1, Y, X, X^2. Lifting adds Y^2, whose
    // restriction to every 2-line drops to degree <= 2 over GF(4).
    let f4 = Field::new(2, 2).unwrap();
    let wrm = wrm_degree_set(&f4, 2, 2).unwrap();
    let lift = lift_degree_set(&f4, 2, 2).unwrap();
    println!("q = 4, eta = 2, d = 2");
    println!("  weighted Reed-Muller degree set {:?}", wrm.members());
    println!("  lifted degree set               {:?}", lift.members());
    println!(
        "  Y^2 in the lift per the exhaustive line oracle: {}",
        lift_membership_oracle(&f4, 2, 2, 0, 2).unwrap()
    );
    let y2 = BiPoly::monomial(0, 2, Fe::ONE);
    let line = etalift::poly::EtaLine::new(vec![Fe(3), Fe(2), Fe(1)]);
    println!(
        "  example restriction of Y^2 along phi = T^2 + 2T + 3: {:?} (degree <= 2)",
        y2.restrict(&f4, &line).coeffs().iter().map(|c| c.0).collect::<Vec<_>>()
    );

    // A medium field, drawn. '#' marks monomials that span the code.
    let f8 = Field::new(2, 3).unwrap();
    println!("\nDeg Lift^2(RS_8(5)), origin bottom-left:");
    print!("{}", ascii_grid(&lift_degree_set(&f8, 2, 5).unwrap()));

    // Lifting beats the weighted Reed-Muller dimension at every eta.
    let f16 = Field::new(2, 4).unwrap();
    println!("\nq = 16, d = 14: dimensions by eta");
    println!("  eta   wrm  lift");
    for eta in 1..=6 {
        let w = wrm_degree_set(&f16, eta, 14).unwrap().len();
        let l = lift_degree_set(&f16, eta, 14).unwrap().len();
        println!("  {eta:3} {w:5} {l:5}");
    }
    println!("\n(lifted sets shrink as eta grows, and grow with d)");
}
