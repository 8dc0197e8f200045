//! Monomial codes over F_q^2: degree sets, weighted Reed-Muller
//! construction, plain and systematic encoders, membership.
//!
//! A monomial code is spanned by evaluation vectors of monomials X^i Y^j
//! with (i, j) ranging over a degree set inside [0, q-1]^2. Since the
//! evaluation map is injective on such supports, the cardinality of the
//! degree set is the code dimension.

use crate::bits::BitVec64;
use crate::error::Error;
use crate::gf::{Fe, Field};
use crate::poly::{point_at, point_index, BiPoly, Codeword};

/// A subset of [0, q-1]^2 recording which monomials span a code.
#[derive(Clone, PartialEq, Eq)]
pub struct DegreeSet {
    q: u32,
    bits: BitVec64,
}

impl DegreeSet {
    pub fn empty(q: u32) -> Self {
        DegreeSet {
            q,
            bits: BitVec64::new(q as usize * q as usize),
        }
    }

    pub fn full(q: u32) -> Self {
        let mut ds = Self::empty(q);
        for i in 0..q {
            for j in 0..q {
                ds.insert(i, j);
            }
        }
        ds
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    fn index(&self, i: u32, j: u32) -> usize {
        debug_assert!(i < self.q && j < self.q);
        i as usize * self.q as usize + j as usize
    }

    pub fn insert(&mut self, i: u32, j: u32) {
        let idx = self.index(i, j);
        self.bits.set(idx);
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        self.bits.get(self.index(i, j))
    }

    /// Cardinality, i.e. the dimension of the spanned code.
    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Members in lexicographic (i, j) order.
    pub fn members(&self) -> Vec<(u32, u32)> {
        self.bits
            .ones()
            .map(|idx| ((idx / self.q as usize) as u32, (idx % self.q as usize) as u32))
            .collect()
    }

    pub fn is_subset(&self, other: &DegreeSet) -> bool {
        assert_eq!(self.q, other.q);
        self.bits.is_subset(&other.bits)
    }
}

impl std::fmt::Debug for DegreeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DegreeSet(q={}, |D|={})", self.q, self.len())
    }
}

/// Degree set of the weighted Reed-Muller code with weight (1, eta):
/// all (i, j) in [0, q-1]^2 with i + eta*j <= d. Negative d yields the
/// zero code; d above q-1 is rejected.
pub fn wrm_degree_set(field: &Field, eta: u32, d: i64) -> Result<DegreeSet, Error> {
    let q = field.q();
    if d > (q - 1) as i64 {
        return Err(Error::DegreeOutOfRange { d, q });
    }
    let mut ds = DegreeSet::empty(q);
    if d < 0 {
        return Ok(ds);
    }
    let d = d as u64;
    let mut j = 0u64;
    while eta as u64 * j <= d && j < q as u64 {
        let imax = d - eta as u64 * j;
        for i in 0..=imax.min((q - 1) as u64) {
            ds.insert(i as u32, j as u32);
        }
        j += 1;
    }
    Ok(ds)
}

/// Which family a monomial code was built from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeKind {
    Wrm,
    Lift,
}

impl CodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CodeKind::Wrm => "wrm",
            CodeKind::Lift => "lift",
        }
    }
}

/// A code spanned by monomial evaluation vectors, with a fixed basis order
/// (lexicographic on the exponent pairs).
#[derive(Clone, Debug)]
pub struct MonomialCode {
    field: Field,
    eta: u32,
    d: i64,
    kind: CodeKind,
    degset: DegreeSet,
    basis: Vec<(u32, u32)>,
}

impl MonomialCode {
    /// The weighted Reed-Muller code WRM_q^eta(d).
    pub fn wrm(field: &Field, eta: u32, d: i64) -> Result<Self, Error> {
        let degset = wrm_degree_set(field, eta, d)?;
        Ok(Self::from_parts(field.clone(), eta, d, CodeKind::Wrm, degset))
    }

    pub(crate) fn from_parts(
        field: Field,
        eta: u32,
        d: i64,
        kind: CodeKind,
        degset: DegreeSet,
    ) -> Self {
        let basis = degset.members();
        MonomialCode {
            field,
            eta,
            d,
            kind,
            degset,
            basis,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn degree_set(&self) -> &DegreeSet {
        &self.degset
    }

    /// Basis monomials in the fixed order.
    pub fn basis(&self) -> &[(u32, u32)] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> usize {
        let q = self.field.q() as usize;
        q * q
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    /// Sum of `message[k] * ev(X^i Y^j)` over the basis.
    pub fn encode(&self, message: &[Fe]) -> Result<Codeword, Error> {
        if message.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: message.len(),
            });
        }
        let field = &self.field;
        let q = field.q();
        let mut out = vec![Fe::ZERO; self.len()];
        for (&(i, j), &m) in self.basis.iter().zip(message) {
            if m == Fe::ZERO {
                continue;
            }
            for x in field.elements() {
                let xi = field.pow(x, i as u64);
                let mxi = field.mul(m, xi);
                if mxi == Fe::ZERO {
                    continue;
                }
                for y in field.elements() {
                    let idx = point_index(q, x, y);
                    let term = field.mul(mxi, field.pow(y, j as u64));
                    out[idx] = field.add(out[idx], term);
                }
            }
        }
        Ok(out)
    }

    /// Evaluation vector of a single basis monomial.
    pub fn monomial_codeword(&self, i: u32, j: u32) -> Codeword {
        BiPoly::monomial(i, j, Fe::ONE).ev_full(&self.field)
    }

    /// Row-reduces the monomial generator matrix once, yielding a systematic
    /// encoder. Costs O(dim^2 * q^2) time and O(dim * q^2) space, which is
    /// the scaling limit of the systematic machinery (fine up to q = 64).
    pub fn systematic_encoder(&self) -> SystematicEncoder {
        let field = &self.field;
        let n = self.len();
        let dim = self.dim();
        let mut rows: Vec<Vec<Fe>> = self
            .basis
            .iter()
            .map(|&(i, j)| self.monomial_codeword(i, j))
            .collect();
        // Track the basis change: transform[r] expresses row r in monomial
        // coordinates, so coefficient recovery is a dim x dim product.
        let mut transform: Vec<Vec<Fe>> = (0..dim)
            .map(|r| {
                let mut row = vec![Fe::ZERO; dim];
                row[r] = Fe::ONE;
                row
            })
            .collect();
        let mut info_set = Vec::with_capacity(dim);
        let mut r = 0;
        for col in 0..n {
            let Some(pivot) = (r..dim).find(|&k| rows[k][col] != Fe::ZERO) else {
                continue;
            };
            rows.swap(r, pivot);
            transform.swap(r, pivot);
            let inv = field.inv(rows[r][col]);
            scale_row(field, &mut rows[r], &mut transform[r], inv);
            for k in 0..dim {
                if k != r && rows[k][col] != Fe::ZERO {
                    let factor = rows[k][col];
                    let (rk, tk, rr, tr) = if k < r {
                        let (a, b) = rows.split_at_mut(r);
                        let (ta, tb) = transform.split_at_mut(r);
                        (&mut a[k], &mut ta[k], &b[0], &tb[0])
                    } else {
                        let (a, b) = rows.split_at_mut(k);
                        let (ta, tb) = transform.split_at_mut(k);
                        (&mut b[0], &mut tb[0], &a[r], &ta[r])
                    };
                    eliminate(field, rk, tk, rr, tr, factor);
                }
            }
            info_set.push(col);
            r += 1;
            if r == dim {
                break;
            }
        }
        assert_eq!(r, dim, "monomial generator matrix must have full rank");
        SystematicEncoder {
            field: field.clone(),
            rows,
            transform,
            info_set,
        }
    }

    /// Whether `word` lies in the span of the basis monomials.
    ///
    /// Builds the systematic encoder internally; callers testing many words
    /// should hold a [`SystematicEncoder`] and use
    /// [`SystematicEncoder::contains`].
    pub fn membership(&self, word: &[Fe]) -> Result<bool, Error> {
        if word.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: word.len(),
            });
        }
        Ok(self.systematic_encoder().contains(word))
    }
}

fn scale_row(field: &Field, row: &mut [Fe], transform: &mut [Fe], c: Fe) {
    for v in row.iter_mut() {
        *v = field.mul(*v, c);
    }
    for v in transform.iter_mut() {
        *v = field.mul(*v, c);
    }
}

fn eliminate(
    field: &Field,
    row: &mut [Fe],
    row_t: &mut [Fe],
    pivot: &[Fe],
    pivot_t: &[Fe],
    factor: Fe,
) {
    for (v, &pv) in row.iter_mut().zip(pivot) {
        *v = field.sub(*v, field.mul(factor, pv));
    }
    for (v, &pv) in row_t.iter_mut().zip(pivot_t) {
        *v = field.sub(*v, field.mul(factor, pv));
    }
}

/// Systematic encoder built from the row-reduced generator of a
/// [`MonomialCode`]. Position `info_set[k]` of every encoding carries
/// message symbol k verbatim.
#[derive(Clone, Debug)]
pub struct SystematicEncoder {
    field: Field,
    rows: Vec<Vec<Fe>>,
    transform: Vec<Vec<Fe>>,
    info_set: Vec<usize>,
}

impl SystematicEncoder {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    /// Pivot coordinates, ordered so that `encode(db)[info_set[k]] = db[k]`.
    pub fn info_set(&self) -> &[usize] {
        &self.info_set
    }

    /// The pivot coordinates as points of F_q^2.
    pub fn info_points(&self) -> Vec<(Fe, Fe)> {
        self.info_set
            .iter()
            .map(|&idx| point_at(self.field.q(), idx))
            .collect()
    }

    pub fn encode(&self, database: &[Fe]) -> Result<Codeword, Error> {
        if database.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: database.len(),
            });
        }
        let field = &self.field;
        let mut out = vec![Fe::ZERO; self.len()];
        for (row, &m) in self.rows.iter().zip(database) {
            if m == Fe::ZERO {
                continue;
            }
            for (o, &v) in out.iter_mut().zip(row) {
                *o = field.add(*o, field.mul(m, v));
            }
        }
        Ok(out)
    }

    /// Reads the information coordinates back out of a codeword.
    pub fn extract(&self, word: &[Fe]) -> Vec<Fe> {
        self.info_set.iter().map(|&idx| word[idx]).collect()
    }

    /// Membership via re-encoding the extracted information symbols.
    pub fn contains(&self, word: &[Fe]) -> bool {
        assert_eq!(word.len(), self.len());
        let msg = self.extract(word);
        self.encode(&msg).expect("length checked") == word
    }

    /// Monomial-basis coefficients of a codeword, or None if the word is
    /// not in the code.
    pub fn coefficients_of(&self, word: &[Fe]) -> Option<Vec<Fe>> {
        if !self.contains(word) {
            return None;
        }
        let field = &self.field;
        let msg = self.extract(word);
        let dim = self.dim();
        let mut coeffs = vec![Fe::ZERO; dim];
        for (k, &m) in msg.iter().enumerate() {
            if m == Fe::ZERO {
                continue;
            }
            for (c, &t) in coeffs.iter_mut().zip(&self.transform[k]) {
                *c = field.add(*c, field.mul(m, t));
            }
        }
        Some(coeffs)
    }
}
