//! Univariate and bivariate polynomials over GF(q).
//!
//! Bivariate polynomials evaluate over the full plane F_q^2 in a fixed
//! lexicographic coordinate order shared by every module: the codeword
//! position of the point (x, y) is `x.0 * q + y.0`. Restriction to an
//! eta-line (the graph of a univariate phi of degree at most eta) turns a
//! bivariate polynomial into the univariate f(T, phi(T)).

use crate::gf::{Fe, Field};
use crate::lift::reduce_exponent;
use std::collections::BTreeMap;

/// A length-q^2 evaluation vector, indexed by points of F_q^2 in
/// lexicographic order.
pub type Codeword = Vec<Fe>;

/// Codeword position of the point (x, y).
pub fn point_index(q: u32, x: Fe, y: Fe) -> usize {
    x.0 as usize * q as usize + y.0 as usize
}

/// The point stored at a codeword position.
pub fn point_at(q: u32, index: usize) -> (Fe, Fe) {
    (
        Fe((index / q as usize) as u32),
        Fe((index % q as usize) as u32),
    )
}

/// Dense univariate polynomial; `coeffs[k]` multiplies T^k. The zero
/// polynomial has no coefficients and the leading coefficient is nonzero
/// otherwise.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Fe>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![Fe::ONE] }
    }

    /// Builds from low-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last() == Some(&Fe::ZERO) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn monomial(degree: usize, coeff: Fe) -> Self {
        if coeff == Fe::ZERO {
            return Self::zero();
        }
        let mut coeffs = vec![Fe::ZERO; degree + 1];
        coeffs[degree] = coeff;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs.get(k).copied().unwrap_or(Fe::ZERO)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn eval(&self, field: &Field, t: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, t), c);
        }
        acc
    }

    pub fn add(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| field.add(self.coeff(k), other.coeff(k)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| field.sub(self.coeff(k), other.coeff(k)))
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, field: &Field, c: Fe) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == Fe::ZERO {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Euclidean division: returns (quotient, remainder). Panics if `other`
    /// is zero.
    pub fn divmod(&self, field: &Field, other: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = other.degree().expect("division by the zero polynomial");
        let lead_inv = field.inv(other.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; rem.len().saturating_sub(dd)];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c == Fe::ZERO {
                continue;
            }
            let factor = field.mul(c, lead_inv);
            quot[k - dd] = factor;
            for (r, &m) in other.coeffs.iter().enumerate() {
                rem[k - dd + r] = field.sub(rem[k - dd + r], field.mul(factor, m));
            }
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Reduces modulo T^q - T: exponents are folded by [`reduce_exponent`]
    /// with coefficient accumulation. Evaluation on F_q is unchanged.
    pub fn reduce_q(&self, field: &Field) -> UniPoly {
        let q = field.q();
        let mut coeffs = vec![Fe::ZERO; (q as usize).min(self.coeffs.len())];
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == Fe::ZERO {
                continue;
            }
            let r = reduce_exponent(k as u64, q) as usize;
            coeffs[r] = field.add(coeffs[r], c);
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// self^n modulo T^q - T.
    pub fn pow_reduce_q(&self, field: &Field, mut n: u64) -> UniPoly {
        let mut base = self.reduce_q(field);
        let mut acc = UniPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(field, &base).reduce_q(field);
            }
            base = base.mul(field, &base).reduce_q(field);
            n >>= 1;
        }
        acc
    }

    /// Unique interpolant of degree < points.len() through distinct points.
    pub fn interpolate(field: &Field, points: &[(Fe, Fe)]) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if yi == Fe::ZERO {
                continue;
            }
            let mut basis = UniPoly::one();
            let mut denom = Fe::ONE;
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(field, &UniPoly::from_coeffs(vec![field.neg(xj), Fe::ONE]));
                denom = field.mul(denom, field.sub(xi, xj));
            }
            acc = acc.add(field, &basis.scale(field, field.div(yi, denom)));
        }
        acc
    }

    /// Evaluation at every field element in enumeration order.
    pub fn eval_all(&self, field: &Field) -> Vec<Fe> {
        field.elements().map(|t| self.eval(field, t)).collect()
    }
}

/// Sparse bivariate polynomial: map from exponent pairs (i, j) to nonzero
/// coefficients of X^i Y^j.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Fe>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn monomial(i: u32, j: u32, coeff: Fe) -> Self {
        let mut p = BiPoly::default();
        p.add_term(i, j, coeff);
        p
    }

    /// Adds `coeff * X^i Y^j`; the coefficient addition is plain insertion,
    /// so call sites accumulating into the same exponent must pre-add in the
    /// field. Zero coefficients are dropped.
    pub fn add_term(&mut self, i: u32, j: u32, coeff: Fe) {
        if coeff != Fe::ZERO {
            self.terms.insert((i, j), coeff);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Fe)> + '_ {
        self.terms.iter().map(|(&ij, &c)| (ij, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Fe {
        self.terms.get(&(i, j)).copied().unwrap_or(Fe::ZERO)
    }

    /// Weighted degree max(i + eta*j) over the support; None for zero.
    pub fn wdeg(&self, eta: u32) -> Option<u64> {
        self.terms
            .keys()
            .map(|&(i, j)| i as u64 + eta as u64 * j as u64)
            .max()
    }

    pub fn eval(&self, field: &Field, x: Fe, y: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        for (&(i, j), &c) in &self.terms {
            let term = field.mul(c, field.mul(field.pow(x, i as u64), field.pow(y, j as u64)));
            acc = field.add(acc, term);
        }
        acc
    }

    /// Evaluation over all of F_q^2 in the fixed coordinate order.
    pub fn ev_full(&self, field: &Field) -> Codeword {
        let q = field.q();
        let mut out = vec![Fe::ZERO; q as usize * q as usize];
        for x in field.elements() {
            for y in field.elements() {
                out[point_index(q, x, y)] = self.eval(field, x, y);
            }
        }
        out
    }

    /// Reduces modulo the ideal (X^q - X, Y^q - Y): both exponents are
    /// folded by [`reduce_exponent`] with coefficient accumulation.
    /// Evaluation over F_q^2 is unchanged.
    pub fn reduce_q(&self, field: &Field) -> BiPoly {
        let q = field.q();
        let mut out = BiPoly::default();
        for (&(i, j), &c) in &self.terms {
            let key = (reduce_exponent(i as u64, q), reduce_exponent(j as u64, q));
            let prev = out.terms.get(&key).copied().unwrap_or(Fe::ZERO);
            let sum = field.add(prev, c);
            if sum == Fe::ZERO {
                out.terms.remove(&key);
            } else {
                out.terms.insert(key, sum);
            }
        }
        out
    }

    /// The composition f(T, phi(T)) reduced modulo T^q - T.
    pub fn restrict(&self, field: &Field, line: &EtaLine) -> UniPoly {
        let q = field.q() as usize;
        let phi = line.phi_poly();
        let mut acc = vec![Fe::ZERO; q];
        // Group terms by j so each power of phi is computed once.
        let mut by_j: BTreeMap<u32, Vec<(u32, Fe)>> = BTreeMap::new();
        for (&(i, j), &c) in &self.terms {
            by_j.entry(j).or_default().push((i, c));
        }
        for (j, terms) in by_j {
            let pw = phi.pow_reduce_q(field, j as u64);
            for (i, c) in terms {
                for (s, &ps) in pw.coeffs().iter().enumerate() {
                    if ps == Fe::ZERO {
                        continue;
                    }
                    let r = reduce_exponent(i as u64 + s as u64, field.q()) as usize;
                    acc[r] = field.add(acc[r], field.mul(c, ps));
                }
            }
        }
        UniPoly::from_coeffs(acc)
    }
}

/// An eta-line: coefficients (a_0, ..., a_eta) of phi(T), parametrizing the
/// graph t -> (t, phi(t)). Individual coefficients may be zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaLine {
    coeffs: Vec<Fe>,
}

impl EtaLine {
    /// `coeffs` holds a_0..a_eta low-first; its length is eta + 1 >= 2.
    pub fn new(coeffs: Vec<Fe>) -> Self {
        assert!(coeffs.len() >= 2, "an eta-line needs eta >= 1");
        EtaLine { coeffs }
    }

    pub fn eta(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn phi(&self, field: &Field, t: Fe) -> Fe {
        let mut acc = Fe::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, t), c);
        }
        acc
    }

    pub fn point(&self, field: &Field, t: Fe) -> (Fe, Fe) {
        (t, self.phi(field, t))
    }

    pub fn phi_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// The line with upper coefficients `high = [a_1, ..., a_eta]` passing
    /// through `x`: a_0 is solved from phi(x.0) = x.1.
    pub fn through_point(field: &Field, x: (Fe, Fe), high: &[Fe]) -> EtaLine {
        let mut shifted = Fe::ZERO;
        for &c in high.iter().rev() {
            shifted = field.mul(field.add(shifted, c), x.0);
        }
        let a0 = field.sub(x.1, shifted);
        let mut coeffs = Vec::with_capacity(high.len() + 1);
        coeffs.push(a0);
        coeffs.extend_from_slice(high);
        EtaLine::new(coeffs)
    }
}

/// All q^(eta+1) eta-lines, enumerated in lexicographic coefficient order
/// (a_0 fastest).
pub fn all_lines(field: &Field, eta: u32) -> impl Iterator<Item = EtaLine> + '_ {
    let q = field.q() as u64;
    let count = q.checked_pow(eta + 1).expect("line count overflows u64");
    (0..count).map(move |n| {
        let coeffs = (0..=eta)
            .map(|m| Fe((n / q.pow(m) % q) as u32))
            .collect();
        EtaLine::new(coeffs)
    })
}
