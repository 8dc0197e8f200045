//! Private information retrieval over q servers, robust to byzantine and
//! unresponsive servers.
//!
//! Sixteen servers each hold one 16-symbol column of the encoded database.
//! Retrieving an entry sends one field element per server; the answers sit
//! on an eta-line whose restriction decodes in RS_q(d) even with one lying
//! and one silent server (d = q - u - 2b - 2 = 11).
//!
//! Run with: cargo run --release --example pir_demo

use etalift::code::MonomialCode;
use etalift::gf::{mul_ops, Fe, Field};
use etalift::local::trial_rng;
use etalift::pir::{AdversaryConfig, ByzantineStrategy, PirSystem};
use rand::Rng;

fn main() {
    let field = Field::new(2, 4).unwrap();
    let code = MonomialCode::wrm(&field, 2, 11).unwrap();
    let mut rng = trial_rng(7, 0);
    let database: Vec<Fe> = (0..code.dim()).map(|_| Fe(rng.random_range(0..16))).collect();
    let sys = PirSystem::init(code, &database).unwrap();
    println!(
        "database of {} symbols over GF(16), {} servers x {} symbols, storage rate {:.3}",
        sys.dim(),
        sys.servers().len(),
        sys.q(),
        sys.storage_rate()
    );
    let (up, down) = sys.comm_bits();
    println!("communication per retrieval: {up} bits up + {down} bits down");

    // One instrumented retrieval with a byzantine and an unresponsive server.
    let adversary = AdversaryConfig {
        byzantine: vec![5],
        strategy: ByzantineStrategy::ConstantOffset(Fe(3)),
        unresponsive: vec![12],
    };
    let index = 17;
    let before = mul_ops();
    let transcript = sys.retrieve(index, &adversary, 123).unwrap();
    println!(
        "\nretrieved index {index}: ok = {}, recovered = {:?}, true value = {}",
        transcript.ok,
        transcript.recovered,
        database[index].0
    );
    println!(
        "server reads so far: {:?} (field mults during the whole retrieval, \
         user side included: {})",
        sys.read_counts(),
        mul_ops() - before
    );
    println!("\nfull JSON transcript:\n{}", transcript.to_json());

    // The worst-case adversary search proves no substitution helps.
    let worst = AdversaryConfig {
        byzantine: vec![2],
        strategy: ByzantineStrategy::WorstCaseSearch,
        unresponsive: vec![9],
    };
    let t = sys.retrieve(3, &worst, 5).unwrap();
    println!(
        "worst-case search over all 16 byzantine substitutions at index 3: ok = {}",
        t.ok
    );
}
