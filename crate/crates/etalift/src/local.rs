//! Local correction of monomial codewords along random eta-lines.
//!
//! To recover coordinate x of a corrupted word, pick a random eta-line
//! through x, read the q - 1 other points on the line, mark the target
//! position as an erasure and decode the restriction in RS_q(d). The
//! decoder reads exactly q - 1 coordinates and never the target itself.
//!
//! [`success_rate_experiment`] estimates the failure rate over seeded
//! Monte-Carlo trials under several error models and reports it next to
//! the failure bound 2*delta/(1 - gamma), gamma = d/q.

use crate::code::MonomialCode;
use crate::error::Error;
use crate::gf::{Fe, Field};
use crate::poly::{point_index, EtaLine};
use crate::rs::{ReceivedWord, RsCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A deterministic per-trial RNG: stream `trial` of the master seed.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Uniformly samples an eta-line through `x`: the upper coefficients
/// a_1..a_eta are uniform and a_0 is solved from the incidence constraint.
pub fn sample_line_through(
    field: &Field,
    eta: u32,
    x: (Fe, Fe),
    rng: &mut impl Rng,
) -> EtaLine {
    let high: Vec<Fe> = (0..eta)
        .map(|_| Fe(rng.random_range(0..field.q())))
        .collect();
    EtaLine::through_point(field, x, &high)
}

/// Local corrector for a monomial code whose line restrictions lie in
/// RS_q(d).
#[derive(Clone, Debug)]
pub struct LocalDecoder {
    code: MonomialCode,
    rs: RsCode,
}

impl LocalDecoder {
    pub fn new(code: MonomialCode) -> Result<Self, Error> {
        let d = code.d();
        if d < 0 || d >= code.field().q() as i64 {
            return Err(Error::DegreeOutOfRange {
                d,
                q: code.field().q(),
            });
        }
        let rs = RsCode::new(code.field().clone(), d as u32)?;
        Ok(LocalDecoder { code, rs })
    }

    pub fn code(&self) -> &MonomialCode {
        &self.code
    }

    pub fn rs(&self) -> &RsCode {
        &self.rs
    }

    /// Corrects coordinate `x` along the given line through `x`. Reads the
    /// q - 1 points of the line other than x itself, decodes with the
    /// target position erased, and evaluates the decoded polynomial at the
    /// target parameter.
    pub fn correct_with_line(
        &self,
        x: (Fe, Fe),
        line: &EtaLine,
        read: &mut dyn FnMut((Fe, Fe)) -> Fe,
    ) -> Option<Fe> {
        let field = self.code.field();
        debug_assert_eq!(line.point(field, x.0), x, "line must pass through x");
        let t0 = x.0;
        let mut symbols = vec![Fe::ZERO; field.q() as usize];
        for t in field.elements() {
            if t != t0 {
                symbols[t.0 as usize] = read(line.point(field, t));
            }
        }
        let word = ReceivedWord::with_erasures(symbols, &[t0.0 as usize]);
        let f = self.rs.decode(&word)?;
        Some(f.eval(field, t0))
    }

    /// Corrects coordinate `x` along a freshly sampled random line.
    pub fn correct(
        &self,
        x: (Fe, Fe),
        read: &mut dyn FnMut((Fe, Fe)) -> Fe,
        rng: &mut impl Rng,
    ) -> Option<Fe> {
        let line = sample_line_through(self.code.field(), self.code.eta(), x, rng);
        self.correct_with_line(x, &line, read)
    }

    /// Convenience wrapper reading from a full point-indexed word.
    pub fn correct_in_word(&self, x: (Fe, Fe), word: &[Fe], rng: &mut impl Rng) -> Option<Fe> {
        let q = self.code.field().q();
        self.correct(x, &mut |pt| word[point_index(q, pt.0, pt.1)], rng)
    }
}

/// How the Monte-Carlo harness plants errors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ErrorModel {
    /// Uniformly random support with random nonzero offsets.
    Uniform,
    /// Whole columns corrupted one after another (the last one partially).
    ColumnBurst,
    /// Support planted on random eta-lines through the target coordinate.
    LineAdversarial,
}

impl ErrorModel {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorModel::Uniform => "uniform",
            ErrorModel::ColumnBurst => "column-burst",
            ErrorModel::LineAdversarial => "line-adversarial",
        }
    }
}

/// Samples a distinct error support of the given size. `eta` is the line
/// family used by the adversarial model.
pub fn sample_error_support(
    field: &Field,
    model: ErrorModel,
    eta: u32,
    target: (Fe, Fe),
    size: usize,
    rng: &mut impl Rng,
) -> Vec<usize> {
    let q = field.q() as usize;
    let n = q * q;
    assert!(size <= n, "support larger than the plane");
    match model {
        ErrorModel::Uniform => {
            let mut positions: Vec<usize> = (0..n).collect();
            for k in 0..size {
                let j = rng.random_range(k..n);
                positions.swap(k, j);
            }
            positions.truncate(size);
            positions
        }
        ErrorModel::ColumnBurst => {
            let mut columns: Vec<usize> = (0..q).collect();
            for k in 0..q {
                let j = rng.random_range(k..q);
                columns.swap(k, j);
            }
            let mut out = Vec::with_capacity(size);
            'outer: for &col in &columns {
                let mut ys: Vec<usize> = (0..q).collect();
                for k in 0..q {
                    let j = rng.random_range(k..q);
                    ys.swap(k, j);
                }
                for &y in &ys {
                    if out.len() == size {
                        break 'outer;
                    }
                    out.push(col * q + y);
                }
            }
            out
        }
        ErrorModel::LineAdversarial => {
            assert!(
                size <= n - q,
                "line-planted support cannot exceed the off-column points"
            );
            let mut seen = vec![false; n];
            let mut out = Vec::with_capacity(size);
            while out.len() < size {
                let line = sample_line_through(field, eta, target, rng);
                for t in field.elements() {
                    if t == target.0 || out.len() == size {
                        continue;
                    }
                    let pt = line.point(field, t);
                    let idx = point_index(field.q(), pt.0, pt.1);
                    if !seen[idx] {
                        seen[idx] = true;
                        out.push(idx);
                    }
                }
            }
            out
        }
    }
}

/// Outcome of a seeded local-correction experiment.
#[derive(Clone, Debug)]
pub struct ExperimentResult {
    pub model: ErrorModel,
    pub q: u32,
    pub p: u32,
    pub e: u32,
    pub eta: u32,
    pub d: i64,
    pub delta: f64,
    pub trials: u64,
    pub failures: u64,
    pub rate: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub bound: f64,
}

impl ExperimentResult {
    pub fn csv_header() -> &'static str {
        "q,p,e,eta,d,delta,trials,failures,rate,ci_lo,ci_hi,bound"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
            self.q,
            self.p,
            self.e,
            self.eta,
            self.d,
            self.delta,
            self.trials,
            self.failures,
            self.rate,
            self.ci_lo,
            self.ci_hi,
            self.bound
        )
    }
}

/// 95% Wilson score interval for a binomial proportion.
fn wilson_interval(failures: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054_f64;
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    (
        ((center - half) / denom).max(0.0),
        ((center + half) / denom).min(1.0),
    )
}

/// Runs `trials` seeded local-correction attempts on random codewords with
/// floor(delta * q^2) planted errors each, and estimates the failure rate.
///
/// Trial t uses RNG stream t of the master seed, so results do not depend
/// on execution order. A trial fails when the corrected symbol differs
/// from the true codeword coordinate (including decode failures).
pub fn success_rate_experiment(
    code: &MonomialCode,
    delta: f64,
    trials: u64,
    model: ErrorModel,
    seed: u64,
) -> Result<ExperimentResult, Error> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::InvalidParameter(format!(
            "delta must be in [0, 1], got {delta}"
        )));
    }
    let decoder = LocalDecoder::new(code.clone())?;
    let field = code.field();
    let q = field.q();
    let n = q as usize * q as usize;
    let budget = (delta * n as f64).floor() as usize;
    let mut failures = 0u64;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let message: Vec<Fe> = (0..code.dim())
            .map(|_| Fe(rng.random_range(0..q)))
            .collect();
        let codeword = code.encode(&message)?;
        let target = (
            Fe(rng.random_range(0..q)),
            Fe(rng.random_range(0..q)),
        );
        let mut word = codeword.clone();
        for idx in sample_error_support(field, model, code.eta(), target, budget, &mut rng) {
            let offset = Fe(rng.random_range(1..q));
            word[idx] = field.add(word[idx], offset);
        }
        let truth = codeword[point_index(q, target.0, target.1)];
        if decoder.correct_in_word(target, &word, &mut rng) != Some(truth) {
            failures += 1;
        }
    }
    let rate = if trials == 0 {
        0.0
    } else {
        failures as f64 / trials as f64
    };
    let (ci_lo, ci_hi) = wilson_interval(failures, trials);
    let gamma = code.d() as f64 / q as f64;
    Ok(ExperimentResult {
        model,
        q,
        p: field.p(),
        e: field.e(),
        eta: code.eta(),
        d: code.d(),
        delta,
        trials,
        failures,
        rate,
        ci_lo,
        ci_hi,
        bound: 2.0 * delta / (1.0 - gamma),
    })
}
