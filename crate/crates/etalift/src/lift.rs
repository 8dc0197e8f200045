//! Eta-lifted Reed-Solomon codes.
//!
//! The lifted code consists of all bivariate evaluation vectors whose
//! restriction to every eta-line lies in RS_q(d). Membership of a monomial
//! X^i Y^j is decided digit by digit: the exponents that can appear in
//! phi(T)^j for deg phi <= eta form a sumset determined by the base-p
//! digits of j (see [`power_support`]), and the monomial belongs to the
//! lifted code exactly when every shifted exponent folds below d modulo
//! T^q - T. An exhaustive line-enumeration oracle provides the definitional
//! membership test for validation at small parameters.

use crate::bits::BitVec64;
use crate::code::{CodeKind, DegreeSet, MonomialCode};
use crate::error::Error;
use crate::gf::{digits, Field};
use crate::poly::{all_lines, BiPoly, UniPoly};

/// Budget for exhaustive line enumeration: q^(eta+1) tuples at most.
const ORACLE_BUDGET: u64 = 1_000_000;

/// The canonical exponent in [0, q-1] with T^a = T^red(a) mod T^q - T:
/// 0 maps to 0, and a > 0 maps into [1, q-1] with (q-1) | (a - red(a)).
pub fn reduce_exponent(a: u64, q: u32) -> u32 {
    if a == 0 {
        0
    } else {
        ((a - 1) % (q - 1) as u64 + 1) as u32
    }
}

/// The set of exponents that occur in some phi(T)^j with deg phi <= eta,
/// over a field of characteristic p. A subset of [0, eta*j].
#[derive(Clone, Debug)]
pub struct PowerSupport {
    j: u32,
    eta: u32,
    bits: BitVec64,
}

impl PowerSupport {
    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// Largest possible member, eta * j (always present).
    pub fn max_value(&self) -> u64 {
        self.eta as u64 * self.j as u64
    }

    pub fn contains(&self, alpha: u64) -> bool {
        alpha <= self.max_value() && self.bits.get(alpha as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones().map(|v| v as u64)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        false // 0 is always a member
    }

    pub(crate) fn bits(&self) -> &BitVec64 {
        &self.bits
    }
}

/// Computes the exponent support of { phi^j : deg phi <= eta } by a
/// digit-level dynamic program.
///
/// Writing exponent tuples digit by digit, the multinomial constraint
/// decouples: per base-p digit r of j, the contribution is c_r * p^r with
/// c_r ranging over [0, eta * j_r]. The support is the sumset of those
/// ranges, accumulated in a bitset. The derivation is validated against
/// direct tuple enumeration in the test suite.
pub fn power_support(j: u32, eta: u32, p: u32) -> PowerSupport {
    let width = eta as usize * j as usize + 1;
    let mut bits = BitVec64::new(width);
    bits.set(0);
    let mut scale = 1u64; // p^r
    for jr in digits(j as u64, p) {
        if jr > 0 {
            let mut next = BitVec64::new(width);
            for c in 0..=(eta * jr) as u64 {
                next.or_shifted(&bits, (c * scale) as i64);
            }
            bits = next;
        }
        scale *= p as u64;
    }
    PowerSupport { j, eta, bits }
}

/// Degree set of the eta-lifting of RS_q(d).
///
/// For d = q-1 the lifted code is the full space; otherwise a pair
/// (i, j) in [0, d]^2 belongs exactly when every exponent shift alpha in
/// the power support of j keeps reduce_exponent(i + alpha) at most d.
pub fn lift_degree_set(field: &Field, eta: u32, d: u32) -> Result<DegreeSet, Error> {
    let q = field.q();
    if d >= q {
        return Err(Error::DegreeOutOfRange { d: d as i64, q });
    }
    if d == q - 1 {
        return Ok(DegreeSet::full(q));
    }
    let p = field.p();
    let mut ds = DegreeSet::empty(q);
    for j in 0..=d {
        let support = power_support(j, eta, p);
        let width_max = support.max_value();

        // Positions s in [0, d + eta*j] whose folded exponent exceeds d:
        // s = 1 + m(q-1) + u with u in [d, q-2].
        let limit = d as u64 + width_max;
        let mut bad = BitVec64::new(limit as usize + 1);
        let mut bad_count = 0usize;
        let mut block = 0u64;
        loop {
            let lo = block * (q - 1) as u64 + d as u64 + 1;
            if lo > limit {
                break;
            }
            let hi = (block * (q - 1) as u64 + (q - 1) as u64).min(limit);
            for s in lo..=hi {
                bad.set(s as usize);
                bad_count += 1;
            }
            block += 1;
        }

        // excluded[i] <=> exists alpha in support with bad[i + alpha].
        let mut excluded = BitVec64::new(d as usize + 1);
        if bad_count <= support.len() {
            let rev = support.bits().reversed();
            for s in bad.ones() {
                excluded.or_shifted(&rev, s as i64 - width_max as i64);
            }
        } else {
            for alpha in support.iter() {
                excluded.or_shifted(&bad, -(alpha as i64));
            }
        }
        for i in 0..=d {
            if !excluded.get(i as usize) {
                ds.insert(i, j);
            }
        }
    }
    Ok(ds)
}

/// The eta-lifted Reed-Solomon code as a monomial code.
pub fn lift_code(field: &Field, eta: u32, d: u32) -> Result<MonomialCode, Error> {
    let degset = lift_degree_set(field, eta, d)?;
    Ok(MonomialCode::from_parts(
        field.clone(),
        eta,
        d as i64,
        CodeKind::Lift,
        degset,
    ))
}

fn check_oracle_budget(field: &Field, eta: u32) -> Result<u64, Error> {
    let lines = (field.q() as u64).checked_pow(eta + 1);
    match lines {
        Some(n) if n <= ORACLE_BUDGET => Ok(n),
        _ => Err(Error::BudgetExceeded(format!(
            "q^(eta+1) = {}^{} exceeds {} lines",
            field.q(),
            eta + 1,
            ORACLE_BUDGET
        ))),
    }
}

/// Definitional membership test for the monomial X^i Y^j: restricts it to
/// all q^(eta+1) eta-lines and checks each folded degree against d.
///
/// This is the brute-force oracle; it shares nothing with the digit-level
/// characterization behind [`lift_degree_set`].
pub fn lift_membership_oracle(
    field: &Field,
    eta: u32,
    d: u32,
    i: u32,
    j: u32,
) -> Result<bool, Error> {
    check_oracle_budget(field, eta)?;
    let monomial = BiPoly::monomial(i, j, crate::gf::Fe::ONE);
    for line in all_lines(field, eta) {
        let restricted = monomial.restrict(field, &line);
        if restricted.degree().is_some_and(|deg| deg > d as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every (i, j) in [0, q-1]^2, the maximum folded degree of the
/// restriction of X^i Y^j over all eta-lines (-1 when every restriction is
/// identically zero). The oracle degree set for any d is then
/// `{ (i, j) : max_degree[i][j] <= d }`.
#[allow(clippy::needless_range_loop)]
pub fn oracle_max_degrees(field: &Field, eta: u32) -> Result<Vec<Vec<i64>>, Error> {
    check_oracle_budget(field, eta)?;
    let q = field.q() as usize;
    let mut max_deg = vec![vec![-1i64; q]; q];
    let red: Vec<usize> = (0..2 * q - 1)
        .map(|s| reduce_exponent(s as u64, field.q()) as usize)
        .collect();
    let mut acc = vec![crate::gf::Fe::ZERO; q];
    let mut touched: Vec<usize> = Vec::with_capacity(q);
    for line in all_lines(field, eta) {
        let phi = line.phi_poly();
        let mut power = UniPoly::one();
        for j in 0..q {
            if j > 0 {
                power = power.mul(field, &phi).reduce_q(field);
            }
            if power.is_zero() {
                continue;
            }
            let support: Vec<(usize, crate::gf::Fe)> = power
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != crate::gf::Fe::ZERO)
                .map(|(s, &c)| (s, c))
                .collect();
            for i in 0..q {
                for &(s, c) in &support {
                    let r = red[i + s];
                    if acc[r] == crate::gf::Fe::ZERO {
                        touched.push(r);
                    }
                    acc[r] = field.add(acc[r], c);
                }
                let mut deg = -1i64;
                for &r in &touched {
                    if acc[r] != crate::gf::Fe::ZERO {
                        deg = deg.max(r as i64);
                    }
                    acc[r] = crate::gf::Fe::ZERO;
                }
                touched.clear();
                let slot = &mut max_deg[i][j];
                *slot = (*slot).max(deg);
            }
        }
    }
    Ok(max_deg)
}
