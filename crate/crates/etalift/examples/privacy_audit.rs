//! Collusion privacy of the PIR protocol, audited by exact enumeration.
//!
//! For every collusion set T of size tau and every pair of database
//! indices, the joint distribution of the queries seen by T is computed
//! over all q^(eta+1) equally likely randomness states. With tau <= eta
//! every distribution is exactly uniform; eta + 1 colluders pin down the
//! query line and the distributions separate.
//!
//! Run with: cargo run --release --example privacy_audit

use etalift::code::MonomialCode;
use etalift::gf::{Fe, Field};
use etalift::pir::{AuditMode, AuditReport, PirSystem};

fn main() {
    let field = Field::new(2, 3).unwrap();
    let code = MonomialCode::wrm(&field, 2, 6).unwrap();
    let sys = PirSystem::init(code, &vec![Fe::ZERO; 16][..]).unwrap();
    println!("q = 8 servers, eta = 2, database of {} entries", sys.dim());
    println!("{}", AuditReport::csv_header());
    for tau in 1..=3 {
        let report = sys.privacy_audit(tau, AuditMode::Exact).unwrap();
        let verdict = if report.max_tv == 0.0 {
            "private"
        } else {
            "leaks (expected beyond eta)"
        };
        println!("{}  # {verdict}", report.csv_row());
    }

    // A prime-field instance, and the sampled (non-certifying) mode.
    let field5 = Field::new(5, 1).unwrap();
    let code5 = MonomialCode::wrm(&field5, 1, 3).unwrap();
    let sys5 = PirSystem::init(code5, &vec![Fe::ZERO; 10][..]).unwrap();
    println!("\nq = 5 servers, eta = 1:");
    println!("{}", AuditReport::csv_header());
    let exact = sys5.privacy_audit(1, AuditMode::Exact).unwrap();
    println!("{}", exact.csv_row());
    let sampled = sys5
        .privacy_audit(
            1,
            AuditMode::Sampled {
                samples: 4000,
                seed: 11,
            },
        )
        .unwrap();
    println!("{}  # sampled: estimates only", sampled.csv_row());
}
