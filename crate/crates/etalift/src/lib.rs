//! Weighted Reed-Muller codes and eta-lifted Reed-Solomon codes over GF(p^e).
//!
//! The crate provides:
//!
//! * [`gf`]: finite-field arithmetic with deterministic element enumeration;
//! * [`poly`]: univariate/bivariate polynomials, evaluation maps and
//!   restriction to eta-lines (graphs of degree-`eta` univariate polynomials);
//! * [`rs`]: full-length Reed-Solomon codes with error-and-erasure decoding;
//! * [`code`]: monomial codes (weighted Reed-Muller and lifted), degree
//!   sets, plain and systematic encoders;
//! * [`lift`]: eta-lifted Reed-Solomon degree sets via a digit-level
//!   characterization, plus the exhaustive line-enumeration oracle;
//! * [`local`]: local correction along random eta-lines and a seeded
//!   Monte-Carlo harness;
//! * [`pir`]: a q-server private-information-retrieval simulator with
//!   byzantine/unresponsive fault injection and an exact privacy audit;
//! * [`bounds`]: the combinatorial sequences behind dimension lower bounds
//!   and asymptotic-rate estimates;
//! * [`viz`]: degree-set rendering (ASCII/PGM) and CSV table emission.
//!
//! Run `cargo run --example pir_demo` (or any of the other examples) for a
//! guided tour; the `etalift` binary exposes the same functionality as CLI
//! subcommands.

mod bits;
mod error;

pub mod bounds;
pub mod code;
pub mod gf;
pub mod lift;
pub mod local;
pub mod pir;
pub mod poly;
pub mod rs;
pub mod viz;

pub use code::{CodeKind, DegreeSet, MonomialCode, SystematicEncoder};
pub use error::Error;
pub use gf::{Fe, Field};
pub use lift::{lift_code, lift_degree_set};
pub use poly::{BiPoly, Codeword, EtaLine, UniPoly};
pub use rs::{ReceivedWord, RsCode};
