//! Error-and-erasure decoding of full-length Reed-Solomon codes.
//!
//! RS_q(d) has length q and dimension d + 1; it corrects e errors and s
//! erasures whenever 2e + s <= q - d - 1, and the decoder reports failure
//! rather than guessing beyond that budget.
//!
//! Run with: cargo run --release --example rs_decoding

use etalift::gf::{Fe, Field};
use etalift::poly::UniPoly;
use etalift::rs::{ReceivedWord, RsCode};

fn show(word: &ReceivedWord) -> String {
    word.symbols()
        .iter()
        .enumerate()
        .map(|(t, v)| {
            if word.is_erased(t) {
                "?".to_string()
            } else {
                v.0.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let field = Field::new(2, 4).unwrap();
    let code = RsCode::new(field.clone(), 11).unwrap();
    println!(
        "RS_16(11): length {}, dimension {}, distance {}",
        code.len(),
        code.dim(),
        code.min_distance()
    );

    let poly = UniPoly::from_coeffs((1..=12).map(Fe).collect());
    let clean = code.encode(&poly).unwrap();
    println!("codeword      {}", show(&ReceivedWord::new(clean.clone())));

    // One error plus one erasure: 2*1 + 1 <= 16 - 11 - 1.
    let mut word = ReceivedWord::new(clean.clone());
    word.set(3, field.add(clean[3], Fe(7)));
    word.set(10, Fe(0));
    word.erase(10);
    println!("received      {}", show(&word));
    let decoded = code.decode(&word).expect("within capacity");
    assert_eq!(decoded, poly);
    println!("decoded back to the original polynomial");

    // Three errors exceed the budget: the decoder refuses to guess.
    let mut word = ReceivedWord::new(clean.clone());
    for t in [0usize, 5, 9] {
        word.set(t, field.add(clean[t], Fe(1)));
    }
    println!("\nreceived      {}", show(&word));
    match code.decode(&word) {
        Some(_) => println!("decoded (the word happened to stay within some ball)"),
        None => println!("decode failure reported: 3 errors exceed 2e + s <= 4"),
    }
}
