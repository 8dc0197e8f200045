//! Full-length Reed-Solomon codes RS_q(d) = { ev(f) : deg f <= d } with
//! bounded-distance error-and-erasure decoding.
//!
//! The decoder interpolates on the non-erased positions and runs the
//! partial-GCD step of Gao's algorithm, then verifies the result against the
//! received word. It returns a polynomial exactly when some codeword lies
//! within capacity (e errors, s erasures, 2e + s <= q - d - 1); a word
//! beyond capacity is reported as a failure, never silently miscorrected.

use crate::error::Error;
use crate::gf::{Fe, Field};
use crate::poly::UniPoly;

/// Full-length Reed-Solomon code of length q and dimension d + 1.
#[derive(Clone, Debug)]
pub struct RsCode {
    field: Field,
    d: u32,
}

/// A length-q word with an erasure mask.
#[derive(Clone, Debug)]
pub struct ReceivedWord {
    symbols: Vec<Fe>,
    erased: Vec<bool>,
}

impl ReceivedWord {
    pub fn new(symbols: Vec<Fe>) -> Self {
        let erased = vec![false; symbols.len()];
        ReceivedWord { symbols, erased }
    }

    pub fn with_erasures(symbols: Vec<Fe>, erasures: &[usize]) -> Self {
        let mut w = Self::new(symbols);
        for &pos in erasures {
            w.erase(pos);
        }
        w
    }

    pub fn erase(&mut self, pos: usize) {
        self.erased[pos] = true;
    }

    pub fn set(&mut self, pos: usize, value: Fe) {
        self.symbols[pos] = value;
    }

    pub fn symbols(&self) -> &[Fe] {
        &self.symbols
    }

    pub fn is_erased(&self, pos: usize) -> bool {
        self.erased[pos]
    }

    pub fn erasure_count(&self) -> usize {
        self.erased.iter().filter(|&&e| e).count()
    }
}

impl RsCode {
    pub fn new(field: Field, d: u32) -> Result<Self, Error> {
        if d >= field.q() {
            return Err(Error::DegreeOutOfRange {
                d: d as i64,
                q: field.q(),
            });
        }
        Ok(RsCode { field, d })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.field.q() as usize
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.d as usize + 1
    }

    /// Minimum distance q - d (the code is MDS).
    pub fn min_distance(&self) -> u32 {
        self.field.q() - self.d
    }

    /// Evaluation of `poly` at every field element in enumeration order.
    pub fn encode(&self, poly: &UniPoly) -> Result<Vec<Fe>, Error> {
        if poly.degree().is_some_and(|deg| deg > self.d as usize) {
            return Err(Error::DegreeOutOfRange {
                d: poly.degree().unwrap() as i64,
                q: self.field.q(),
            });
        }
        Ok(poly.eval_all(&self.field))
    }

    /// Bounded-distance error-and-erasure decoding.
    ///
    /// Returns the unique f with deg f <= d whose codeword differs from the
    /// word in e non-erased positions and s erased positions with
    /// 2e + s <= q - d - 1, or None when no such codeword exists.
    pub fn decode(&self, word: &ReceivedWord) -> Option<UniPoly> {
        let field = &self.field;
        let q = field.q() as usize;
        assert_eq!(word.symbols().len(), q, "received word has wrong length");
        let points: Vec<(Fe, Fe)> = (0..q)
            .filter(|&t| !word.is_erased(t))
            .map(|t| (Fe(t as u32), word.symbols()[t]))
            .collect();
        let s = q - points.len();
        let k = self.d as usize + 1;
        if points.len() < k {
            return None;
        }

        // Gao: g0 = prod (X - x_i), g1 = interpolant; partial GCD down to
        // degree < (n' + k) / 2, then divide.
        let mut g0 = UniPoly::one();
        for &(x, _) in &points {
            g0 = g0.mul(field, &UniPoly::from_coeffs(vec![field.neg(x), Fe::ONE]));
        }
        let g1 = UniPoly::interpolate(field, &points);

        let stop = points.len() + k; // continue while 2*deg >= stop
        let (mut r0, mut r1) = (g0, g1);
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while r1.degree().is_some_and(|deg| 2 * deg >= stop) {
            let (quot, rem) = r0.divmod(field, &r1);
            let t2 = t0.sub(field, &quot.mul(field, &t1));
            (r0, r1) = (r1, rem);
            (t0, t1) = (t1, t2);
        }
        if t1.is_zero() {
            return None;
        }
        let (f, rem) = r1.divmod(field, &t1);
        if !rem.is_zero() || f.degree().is_some_and(|deg| deg > self.d as usize) {
            return None;
        }

        // Verify the bounded-distance contract on the actual word.
        let errors = points
            .iter()
            .filter(|&&(x, y)| f.eval(field, x) != y)
            .count();
        if 2 * errors + s <= (self.field.q() - self.d - 1) as usize {
            Some(f)
        } else {
            None
        }
    }
}
