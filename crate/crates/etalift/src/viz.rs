//! Degree-set rendering and table emission.
//!
//! Degree sets render with the origin at the bottom-left: cell (i, j) is
//! filled when the monomial X^i Y^j spans the code. PGM output uses one
//! pixel per cell, 0 for filled and 255 for empty; the shaded mode colors
//! each cell by the smallest scale of translated Reed-Muller block that
//! covers it, cells covered by no block staying plain black.

use crate::bounds::{dim_lower_bound, e_alpha, lattice_triangle_count, maximal_block_count, wrm_block_size};
use crate::code::DegreeSet;
use crate::error::Error;
use crate::gf::Field;
use crate::lift::lift_degree_set;

pub const EMPTY: u8 = 255;
pub const FILLED: u8 = 0;

/// A per-cell byte grid over [0, q-1]^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGrid {
    q: u32,
    cells: Vec<u8>,
}

impl CellGrid {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn get(&self, i: u32, j: u32) -> u8 {
        self.cells[(i * self.q + j) as usize]
    }

    fn set(&mut self, i: u32, j: u32, v: u8) {
        self.cells[(i * self.q + j) as usize] = v;
    }

    /// Distinct grey values, excluding pure black and white.
    pub fn grey_levels(&self) -> Vec<u8> {
        let mut levels: Vec<u8> = self
            .cells
            .iter()
            .copied()
            .filter(|&v| v != EMPTY && v != FILLED)
            .collect();
        levels.sort_unstable();
        levels.dedup();
        levels
    }
}

/// Black-or-white grid of a degree set.
pub fn plain_grid(ds: &DegreeSet) -> CellGrid {
    let q = ds.q();
    let mut grid = CellGrid {
        q,
        cells: vec![EMPTY; (q * q) as usize],
    };
    for (i, j) in ds.members() {
        grid.set(i, j, FILLED);
    }
    grid
}

/// Grid colored by block scale: each filled cell gets a grey level for the
/// smallest eps in [e_alpha + 1, e] such that the cell lies in a translated
/// Reed-Muller block of scale p^eps; uncovered cells stay black.
///
/// For alpha = p^(e-c) there are exactly c candidate scales, hence at most
/// c grey levels.
pub fn shaded_grid(ds: &DegreeSet, p: u32, e: u32, eta: u32, alpha: u64) -> CellGrid {
    let ea = e_alpha(p, alpha);
    let scales: Vec<u32> = (ea + 1..=e).collect();
    let count = scales.len().max(1);
    let mut grid = plain_grid(ds);
    for (i, j) in ds.members() {
        let mut level = FILLED;
        for (rank, &eps) in scales.iter().enumerate() {
            let scale = (p as u64).pow(eps);
            let (ri, rj) = (i as u64 % scale, j as u64 % scale);
            if scale >= alpha + eta as u64 && ri + eta as u64 * rj <= scale - alpha - eta as u64 {
                level = 64 + (rank * 160 / count.max(2).saturating_sub(1)) as u8;
                break;
            }
        }
        grid.set(i, j, level);
    }
    grid
}

/// ASCII art: '#' for filled cells, '.' for empty, top row j = q-1.
pub fn ascii_grid(ds: &DegreeSet) -> String {
    let q = ds.q();
    let mut out = String::with_capacity((q * (q + 1)) as usize);
    for row in 0..q {
        let j = q - 1 - row;
        for i in 0..q {
            out.push(if ds.contains(i, j) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Plain-text PGM (P2), one pixel per cell, top row j = q-1.
pub fn pgm_p2(grid: &CellGrid) -> String {
    let q = grid.q();
    let mut out = format!("P2\n{q} {q}\n255\n");
    for row in 0..q {
        let j = q - 1 - row;
        let line: Vec<String> = (0..q).map(|i| grid.get(i, j).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Binary PGM (P5).
pub fn pgm_p5(grid: &CellGrid) -> Vec<u8> {
    let q = grid.q();
    let mut out = format!("P5\n{q} {q}\n255\n").into_bytes();
    for row in 0..q {
        let j = q - 1 - row;
        for i in 0..q {
            out.push(grid.get(i, j));
        }
    }
    out
}

/// Degree family for dimension tables: d = q - alpha with alpha fixed, or
/// d = q - p^(e-c) with c fixed.
#[derive(Clone, Copy, Debug)]
pub enum DegreeFamily {
    Alpha(u64),
    C(u32),
}

/// One row of a dimension table.
#[derive(Clone, Debug)]
pub struct DimRow {
    pub p: u32,
    pub eta: u32,
    pub alpha: u64,
    pub c: Option<u32>,
    pub e: u32,
    pub n: u128,
    pub k: u128,
    pub rate: f64,
    pub lower_bound: u128,
}

/// Computes exact lifted-code dimensions over a range of field exponents,
/// next to the block-counting lower bound.
pub fn dim_table(
    p: u32,
    eta: u32,
    family: DegreeFamily,
    e_range: std::ops::RangeInclusive<u32>,
) -> Result<Vec<DimRow>, Error> {
    let mut rows = Vec::new();
    for e in e_range {
        let (alpha, c) = match family {
            DegreeFamily::Alpha(a) => (a, None),
            DegreeFamily::C(c) => {
                if e <= c {
                    return Err(Error::InvalidParameter(format!(
                        "need e > c, got e={e} c={c}"
                    )));
                }
                ((p as u64).pow(e - c), Some(c))
            }
        };
        let field = Field::new(p, e)?;
        let q = field.q();
        if alpha == 0 || alpha > q as u64 {
            return Err(Error::InvalidParameter(format!(
                "alpha={alpha} out of range for q={q}"
            )));
        }
        if e <= e_alpha(p, alpha) {
            return Err(Error::InvalidParameter(format!(
                "need e > floor(log_p alpha) for the lower bound, got e={e}"
            )));
        }
        let d = (q as u64 - alpha) as u32;
        let k = lift_degree_set(&field, eta, d)?.len() as u128;
        let n = (q as u128) * (q as u128);
        rows.push(DimRow {
            p,
            eta,
            alpha,
            c,
            e,
            n,
            k,
            rate: k as f64 / n as f64,
            lower_bound: dim_lower_bound(p, eta, alpha, e),
        });
    }
    Ok(rows)
}

pub fn dim_table_csv(rows: &[DimRow]) -> String {
    let mut out = String::from("p,eta,alpha,c,e,n,k,rate,dim_lower_bound\n");
    for r in rows {
        let c = r.c.map_or(String::new(), |c| c.to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{:.4},{}\n",
            r.p, r.eta, r.alpha, c, r.e, r.n, r.k, r.rate, r.lower_bound
        ));
    }
    out
}

/// CSV of the counting sequences T_m, W_m(alpha), N_m for m up to m_max.
pub fn sequence_table_csv(p: u32, eta: u32, alpha: u64, m_max: u32) -> String {
    let mut out = String::from("m,triangle_count,wrm_block_size,maximal_block_count\n");
    for m in 0..=m_max {
        out.push_str(&format!(
            "{},{},{},{}\n",
            m,
            lattice_triangle_count(p, eta, m),
            wrm_block_size(p, eta, alpha, m),
            maximal_block_count(p, eta, m)
        ));
    }
    out
}

/// CSV row with the asymptotic-rate lower bound for d/q -> 1 - p^-c.
pub fn rate_bound_csv(p: u32, eta: u32, c: u32) -> String {
    let rate = crate::bounds::asymptotic_rate_lower_bound(p, eta, c);
    format!("p,eta,c,asymptotic_rate_lower_bound\n{p},{eta},{c},{rate:.4}\n")
}
