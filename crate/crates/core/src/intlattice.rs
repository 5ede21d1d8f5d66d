//! Exact linear algebra over the rationals and integers.
//!
//! Everything here is arbitrary precision. The Hermite normal form is the
//! row-style one: generators are rows, pivots are positive, and entries
//! above each pivot are reduced into `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| BigRational::from_integer(v.into())));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given integer vectors.
    pub fn from_columns<T: Into<BigInt> + Copy>(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let mut m = RationalMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(v.into()));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Submatrix keeping the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn negate_column(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }

    /// Rows scaled by the lcm of their denominators, so every entry is an integer.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.entries[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    /// Columns scaled by the (positive) lcm of their denominators.
    pub fn integer_columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols)
            .map(|c| {
                let col = self.column(c);
                let lcm = col.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                col.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    /// Basis of the right null space `{x : A x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<BigRational>> {
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -rref.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.entries.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &f * m.get(row, c);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }
}

/// Rank over the rationals, via fraction-free (Bareiss) elimination.
pub fn rational_rank(m: &RationalMatrix) -> usize {
    integer_rank(m.integer_rows())
}

/// Rank of an integer matrix by Bareiss elimination; consumes the rows.
pub fn integer_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

const MOD_P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

/// Reduces an integer into the field of order `2^61 - 1`.
pub(crate) fn to_mod_p(v: &BigInt) -> u64 {
    let p = BigInt::from(MOD_P);
    v.mod_floor(&p).to_u64().expect("reduced value fits")
}

/// Rank over GF(2^61 - 1). Never exceeds the rational rank.
pub(crate) fn modular_rank(mut a: Vec<Vec<u64>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(p, rank);
        let inv = powmod(a[rank][col], MOD_P - 2);
        for r in rank + 1..rows {
            if a[r][col] == 0 {
                continue;
            }
            let f = mulmod(a[r][col], inv);
            for c in col..cols {
                let sub = mulmod(f, a[rank][c]);
                a[r][c] = (a[r][c] + MOD_P - sub) % MOD_P;
            }
        }
        rank += 1;
    }
    rank
}

/// Output of [`hermite_normal_form`]: the nonzero HNF rows, their pivot
/// columns, and for every row its integer coefficients over the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub transform: Vec<Vec<BigInt>>,
}

struct HnfRow {
    v: Vec<BigInt>,
    pivot: usize,
    coef: Vec<BigInt>,
}

fn leading(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // dst -= q * src
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Row-style Hermite normal form of the given generators.
///
/// Generators are folded in one at a time. A generator that reduces to zero
/// against the current basis is discarded without ever materialising its
/// coefficient vector, so the cost stays near `O(m n^2)` for `m` generators
/// of length `n` even though every output row carries coefficients of
/// length `m`.
pub fn hermite_normal_form(gens: &[Vec<BigInt>]) -> Result<Hnf> {
    let m = gens.len();
    let n = gens.first().map_or(0, Vec::len);
    if let Some(bad) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: bad.len(),
        });
    }
    let mut basis: Vec<HnfRow> = Vec::new();

    for (gi, g) in gens.iter().enumerate() {
        let mut cur = g.clone();
        // Coefficients of `cur`: either implicit (unit vector minus recorded
        // multiples of basis rows) or explicit once a gcd step needs them.
        let mut pending: Vec<(usize, BigInt)> = Vec::new();
        let mut explicit: Option<Vec<BigInt>> = None;

        let materialize = |pending: &mut Vec<(usize, BigInt)>, basis: &[HnfRow]| {
            let mut c = vec![BigInt::zero(); m];
            c[gi] = BigInt::one();
            for (idx, q) in pending.drain(..) {
                axpy(&mut c, &q, &basis[idx].coef);
            }
            c
        };

        loop {
            let Some(col) = leading(&cur) else { break };
            match basis.binary_search_by_key(&col, |r| r.pivot) {
                Err(pos) => {
                    let coef = match explicit.take() {
                        Some(c) => c,
                        None => materialize(&mut pending, &basis),
                    };
                    // Indices recorded in `pending` refer to the old layout,
                    // but `pending` is empty once materialised.
                    basis.insert(
                        pos,
                        HnfRow {
                            v: cur,
                            pivot: col,
                            coef,
                        },
                    );
                    break;
                }
                Ok(idx) => {
                    let a = basis[idx].v[col].clone();
                    let b = cur[col].clone();
                    if (&b % &a).is_zero() {
                        let q = &b / &a;
                        axpy(&mut cur, &q, &basis[idx].v);
                        match explicit.as_mut() {
                            Some(c) => axpy(c, &q, &basis[idx].coef),
                            None => pending.push((idx, q)),
                        }
                        continue;
                    }
                    let cur_coef = match explicit.take() {
                        Some(c) => c,
                        None => materialize(&mut pending, &basis),
                    };
                    let eg = a.extended_gcd(&b);
                    let (gcd, s, t) = (eg.gcd, eg.x, eg.y);
                    let a_g = &a / &gcd;
                    let b_g = &b / &gcd;
                    let row = &basis[idx];
                    let new_v: Vec<BigInt> = row.v.iter().zip(&cur).map(|(r, c)| &s * r + &t * c).collect();
                    let new_coef: Vec<BigInt> = row.coef.iter().zip(&cur_coef).map(|(r, c)| &s * r + &t * c).collect();
                    let rest_v: Vec<BigInt> = row.v.iter().zip(&cur).map(|(r, c)| &b_g * r - &a_g * c).collect();
                    let rest_coef: Vec<BigInt> = row
                        .coef
                        .iter()
                        .zip(&cur_coef)
                        .map(|(r, c)| &b_g * r - &a_g * c)
                        .collect();
                    basis[idx].v = new_v;
                    basis[idx].coef = new_coef;
                    cur = rest_v;
                    explicit = Some(rest_coef);
                }
            }
        }
        // Keep entries above each pivot small while folding.
        reduce_above(&mut basis);
    }

    Ok(Hnf {
        pivots: basis.iter().map(|r| r.pivot).collect(),
        transform: basis.iter().map(|r| r.coef.clone()).collect(),
        rows: basis.into_iter().map(|r| r.v).collect(),
    })
}

fn reduce_above(basis: &mut [HnfRow]) {
    for i in 0..basis.len() {
        let p = basis[i].pivot;
        if basis[i].v[p].is_negative() {
            for x in basis[i].v.iter_mut() {
                *x = -&*x;
            }
            for x in basis[i].coef.iter_mut() {
                *x = -&*x;
            }
        }
        let (upper, lower) = basis.split_at_mut(i);
        let pivot_row = &lower[0];
        let d = &pivot_row.v[p];
        for row in upper.iter_mut() {
            let q = row.v[p].div_floor(d);
            if !q.is_zero() {
                axpy(&mut row.v, &q, &pivot_row.v);
                axpy(&mut row.coef, &q, &pivot_row.coef);
            }
        }
    }
}

/// Witness that `target` is an integer combination of a lattice's generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    #[serde(serialize_with = "ser_bigints")]
    target: Vec<BigInt>,
    #[serde(serialize_with = "ser_bigints")]
    coefficients: Vec<BigInt>,
}

fn ser_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl MembershipCertificate {
    /// Checks `coefficients · generators = target` exactly.
    pub fn new(target: Vec<BigInt>, coefficients: Vec<BigInt>, generators: &[Vec<BigInt>]) -> Result<Self> {
        if coefficients.len() != generators.len() {
            return Err(Error::DimensionMismatch {
                expected: generators.len(),
                got: coefficients.len(),
            });
        }
        let mut sum = vec![BigInt::zero(); target.len()];
        for (c, g) in coefficients.iter().zip(generators) {
            if c.is_zero() {
                continue;
            }
            if g.len() != target.len() {
                return Err(Error::DimensionMismatch {
                    expected: target.len(),
                    got: g.len(),
                });
            }
            for (s, x) in sum.iter_mut().zip(g) {
                *s += c * x;
            }
        }
        if sum != target {
            return Err(Error::invalid("certificate coefficients do not reproduce the target"));
        }
        Ok(MembershipCertificate { target, coefficients })
    }

    pub fn target(&self) -> &[BigInt] {
        &self.target
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Re-runs the exact check against a generator list.
    pub fn verify(&self, generators: &[Vec<BigInt>]) -> bool {
        MembershipCertificate::new(self.target.clone(), self.coefficients.clone(), generators).is_ok()
    }
}

/// The integer row lattice spanned by a list of generators.
#[derive(Debug, Clone)]
pub struct IntegerLattice {
    dimension: usize,
    generators: Vec<Vec<BigInt>>,
    hnf: Hnf,
    small: Option<SmallHnf>,
}

impl IntegerLattice {
    pub fn new(dimension: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: bad.len(),
            });
        }
        let hnf = hermite_normal_form(&generators)?;
        let small = SmallHnf::try_from_hnf(&hnf, dimension);
        Ok(IntegerLattice {
            dimension,
            generators,
            hnf,
            small,
        })
    }

    pub fn from_i64(dimension: usize, generators: &[Vec<i64>]) -> Result<Self> {
        IntegerLattice::new(
            dimension,
            generators
                .iter()
                .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn hnf(&self) -> &Hnf {
        &self.hnf
    }

    pub fn rank(&self) -> usize {
        self.hnf.rows.len()
    }

    /// Product of the HNF pivots (the index in `Z^n` when full rank).
    pub fn pivot_product(&self) -> BigInt {
        self.hnf
            .rows
            .iter()
            .zip(&self.hnf.pivots)
            .map(|(r, &p)| r[p].clone())
            .product()
    }

    /// True iff the lattice is all of `Z^n`.
    pub fn is_full(&self) -> bool {
        self.rank() == self.dimension && self.pivot_product().is_one()
    }

    /// Membership by back-substitution against the HNF, lifted to a
    /// certificate over the original generators.
    pub fn contains(&self, x: &[BigInt]) -> Result<Option<MembershipCertificate>> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        let mut residual = x.to_vec();
        let mut lambdas = Vec::with_capacity(self.rank());
        for (row, &p) in self.hnf.rows.iter().zip(&self.hnf.pivots) {
            let (q, r) = residual[p].div_rem(&row[p]);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                axpy(&mut residual, &q, row);
            }
            lambdas.push(q);
        }
        if residual.iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let mut coefficients = vec![BigInt::zero(); self.generators.len()];
        for (lambda, coef) in lambdas.iter().zip(&self.hnf.transform) {
            if lambda.is_zero() {
                continue;
            }
            for (c, t) in coefficients.iter_mut().zip(coef) {
                *c += lambda * t;
            }
        }
        MembershipCertificate::new(x.to_vec(), coefficients, &self.generators).map(Some)
    }

    pub fn contains_i64(&self, x: &[i64]) -> Result<Option<MembershipCertificate>> {
        let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.contains(&big)
    }

    /// Membership test without a certificate, on machine integers when the
    /// HNF is small enough. Agrees with [`IntegerLattice::contains`].
    pub fn quick_contains(&self, x: &[i64]) -> bool {
        match &self.small {
            Some(s) if x.len() == self.dimension => s.contains(x),
            _ => matches!(self.contains_i64(x), Ok(Some(_))),
        }
    }

    /// Machine-integer copy of the HNF, if every entry fits comfortably.
    pub fn small_hnf(&self) -> Option<&SmallHnf> {
        self.small.as_ref()
    }
}

/// Checks membership directly; the free-function form of
/// [`IntegerLattice::contains`].
pub fn lattice_contains(l: &IntegerLattice, x: &[BigInt]) -> Result<Option<MembershipCertificate>> {
    l.contains(x)
}

pub fn lattice_is_full(l: &IntegerLattice) -> bool {
    l.is_full()
}

/// HNF with `i64` entries, supporting column-by-column prefix checks for
/// pruned searches.
#[derive(Debug, Clone)]
pub struct SmallHnf {
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    /// For each column, the row whose pivot sits there.
    pivot_row: Vec<Option<usize>>,
}

impl SmallHnf {
    fn try_from_hnf(h: &Hnf, dimension: usize) -> Option<Self> {
        const LIMIT: i64 = 1 << 24;
        let mut rows = Vec::with_capacity(h.rows.len());
        for r in &h.rows {
            let mut out = Vec::with_capacity(r.len());
            for v in r {
                let v = v.to_i64()?;
                if v.abs() > LIMIT {
                    return None;
                }
                out.push(v);
            }
            rows.push(out);
        }
        let mut pivot_row = vec![None; dimension];
        for (i, &p) in h.pivots.iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        Some(SmallHnf {
            rows,
            pivots: h.pivots.clone(),
            pivot_row,
        })
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let mut lambdas = vec![0i128; self.rows.len()];
        (0..x.len()).all(|c| self.step(x, c, &mut lambdas))
    }

    /// Processes column `c` given `x[..=c]` and the multipliers already fixed
    /// for pivots left of `c`. Returns false if no lattice vector can agree
    /// with `x` on the first `c + 1` coordinates.
    pub fn step(&self, x: &[i64], c: usize, lambdas: &mut [i128]) -> bool {
        let mut r = x[c] as i128;
        for (i, row) in self.rows.iter().enumerate() {
            if self.pivots[i] >= c {
                break;
            }
            r -= lambdas[i] * row[c] as i128;
        }
        match self.pivot_row[c] {
            Some(i) => {
                let d = self.rows[i][c] as i128;
                if r % d != 0 {
                    return false;
                }
                lambdas[i] = r / d;
                true
            }
            None => r == 0,
        }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn rational_rank_examples() {
        let id = RationalMatrix::from_rows(&[vec![1i64, 0], vec![0, 1]]).unwrap();
        assert_eq!(rational_rank(&id), 2);
        assert_eq!(rational_rank(&RationalMatrix::zeros(3, 3)), 0);
        let m = RationalMatrix::from_rows(&[vec![1i64, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(rational_rank(&m), 2);
    }

    #[test]
    fn rational_rank_with_fractions() {
        let half = BigRational::new(1.into(), 2.into());
        let m = RationalMatrix::new(
            2,
            2,
            vec![
                half.clone(),
                BigRational::one(),
                BigRational::one(),
                BigRational::from_integer(2.into()),
            ],
        )
        .unwrap();
        assert_eq!(rational_rank(&m), 1);
        assert!(RationalMatrix::new(2, 2, vec![half]).is_err());
    }

    #[test]
    fn null_space_of_rank_deficient() {
        let m = RationalMatrix::from_rows(&[vec![1i64, 0, 1], vec![0, 1, 1]]).unwrap();
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        let v: Vec<i64> = ns[0].iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
        assert_eq!(v, vec![-1, -1, 1]);
    }

    #[test]
    fn hnf_examples() {
        let h = hermite_normal_form(&big(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(h.rows, big(&[&[1, 0], &[0, 1]]));
        let h = hermite_normal_form(&big(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(h.rows, big(&[&[1, 1], &[0, 2]]));
        let h = hermite_normal_form(&big(&[&[2, 4]])).unwrap();
        assert_eq!(h.rows, big(&[&[2, 4]]));
    }

    #[test]
    fn hnf_transform_reproduces_rows() {
        let gens = big(&[&[4, 6, 2], &[6, 9, 3], &[2, 1, 7], &[0, 3, 3], &[8, 2, -4]]);
        let h = hermite_normal_form(&gens).unwrap();
        for (row, coef) in h.rows.iter().zip(&h.transform) {
            let mut sum = vec![BigInt::zero(); 3];
            for (c, g) in coef.iter().zip(&gens) {
                for (s, x) in sum.iter_mut().zip(g) {
                    *s += c * x;
                }
            }
            assert_eq!(&sum, row);
        }
    }

    #[test]
    fn hnf_dimension_mismatch() {
        assert!(hermite_normal_form(&big(&[&[1, 2], &[1]])).is_err());
    }

    #[test]
    fn membership_examples() {
        let l = IntegerLattice::from_i64(2, &[vec![1, 1], vec![1, -1]]).unwrap();
        assert!(l.contains_i64(&[1, 0]).unwrap().is_none());
        let cert = l.contains_i64(&[2, 0]).unwrap().unwrap();
        assert_eq!(cert.coefficients(), &[BigInt::from(1), BigInt::from(1)]);
        let cert = l.contains_i64(&[1, -1]).unwrap().unwrap();
        assert_eq!(cert.coefficients(), &[BigInt::from(0), BigInt::from(1)]);
        assert!(matches!(
            l.contains_i64(&[1, 0, 0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn full_lattice_examples() {
        let e3 = IntegerLattice::from_i64(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(e3.is_full());
        let idx2 = IntegerLattice::from_i64(2, &[vec![1, 1], vec![1, -1]]).unwrap();
        assert!(!idx2.is_full());
        assert_eq!(idx2.pivot_product(), BigInt::from(2));
        let unimod = IntegerLattice::from_i64(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(unimod.is_full());
    }

    #[test]
    fn certificate_rejects_wrong_coefficients() {
        let gens = big(&[&[1, 1], &[1, -1]]);
        let bad = MembershipCertificate::new(
            vec![BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(0)],
            &gens,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn modular_rank_matches() {
        let rows = vec![vec![1u64, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(modular_rank(rows), 2);
        assert_eq!(to_mod_p(&BigInt::from(-1)), MOD_P - 1);
    }
}
