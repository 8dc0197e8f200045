//! Local correction: recover one coordinate of a corrupted codeword with
//! q - 1 queries along a random eta-line.
//!
//! Run with: cargo run --release --example local_correction

use etalift::code::MonomialCode;
use etalift::gf::{Fe, Field};
use etalift::local::{
    success_rate_experiment, trial_rng, ErrorModel, ExperimentResult, LocalDecoder,
};
use etalift::poly::point_index;
use rand::Rng;

fn main() {
    let field = Field::new(2, 4).unwrap();
    let code = MonomialCode::wrm(&field, 2, 8).unwrap();
    println!(
        "WRM code over GF(16): eta = 2, d = 8, dimension {} of length 256",
        code.dim()
    );

    // Corrupt 5% of the plane and recover a single coordinate.
    let mut rng = trial_rng(2024, 0);
    let message: Vec<Fe> = (0..code.dim()).map(|_| Fe(rng.random_range(0..16))).collect();
    let codeword = code.encode(&message).unwrap();
    let mut word = codeword.clone();
    for _ in 0..12 {
        let idx = rng.random_range(0..word.len());
        word[idx] = field.add(word[idx], Fe(rng.random_range(1..16)));
    }
    let decoder = LocalDecoder::new(code.clone()).unwrap();
    let target = (Fe(6), Fe(11));
    let truth = codeword[point_index(16, target.0, target.1)];
    let mut queries = 0;
    let got = decoder.correct(
        target,
        &mut |pt| {
            queries += 1;
            word[point_index(16, pt.0, pt.1)]
        },
        &mut rng,
    );
    println!(
        "corrected coordinate {:?} with {queries} queries: got {:?}, truth {}",
        (target.0 .0, target.1 .0),
        got.map(|v| v.0),
        truth.0
    );

    // Failure-rate estimates under three error models, against the bound
    // 2*delta/(1 - gamma) with gamma = d/q.
    println!("\nseeded experiments, 2000 trials each:");
    println!("{}", ExperimentResult::csv_header());
    for delta in [0.05, 0.10] {
        for model in [
            ErrorModel::Uniform,
            ErrorModel::ColumnBurst,
            ErrorModel::LineAdversarial,
        ] {
            let r = success_rate_experiment(&code, delta, 2000, model, 99).unwrap();
            println!("{}  # {}", r.csv_row(), r.model.as_str());
        }
    }
}
