//! Exact dimensions of eta-lifted Reed-Solomon codes over growing fields.
//!
//! Two regimes: d = q - alpha (rate tends to 1) and d = q(1 - p^-c)
//! (rate stays above a positive constant). The last CSV column is the
//! block-counting lower bound, always at most the exact dimension.
//!
//! Run with: cargo run --release --example dimension_tables

use etalift::viz::{dim_table, dim_table_csv, DegreeFamily};

fn main() {
    println!("d = q - 2, eta = 2 (rate approaches 1):");
    let rows = dim_table(2, 2, DegreeFamily::Alpha(2), 3..=10).unwrap();
    print!("{}", dim_table_csv(&rows));

    println!("\nd = q - 16, eta = 2:");
    let rows = dim_table(2, 2, DegreeFamily::Alpha(16), 6..=10).unwrap();
    print!("{}", dim_table_csv(&rows));

    println!("\nd = q(1 - 2^-4), eta = 2 (asymptotically good):");
    let rows = dim_table(2, 2, DegreeFamily::C(4), 5..=10).unwrap();
    print!("{}", dim_table_csv(&rows));

    println!("\nd = q(1 - 5^-2), eta = 2, p = 5:");
    let rows = dim_table(5, 2, DegreeFamily::C(2), 3..=5).unwrap();
    print!("{}", dim_table_csv(&rows));
}
