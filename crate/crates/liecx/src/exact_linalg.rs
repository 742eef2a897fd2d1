//! Exact linear algebra over the rationals.
//!
//! Everything in this crate that feeds a verdict is computed here without
//! floating point: matrix ranks and nullspaces via fraction-free (Bareiss)
//! elimination, signatures of symmetric forms via congruence
//! diagonalization, and limits of rational functions in `u = e^t` via
//! degree comparison of Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `p/q`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (used by every on-disk format).
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator: {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Parses a scalar that may also be written in decimal form
/// (`"-0.5"` means `-1/2`).  Decimal coefficients appear only in curves
/// flagged as numeric-only, where they stand for irrational constants.
pub fn parse_number(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    match s.split_once('.') {
        None => parse_rat(s),
        Some((int, fract)) => {
            if fract.is_empty() || !fract.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("invalid decimal: {s:?}"));
            }
            let negative = int.starts_with('-');
            let whole = parse_rat(if int.is_empty() || int == "-" { "0" } else { int })?;
            let num: BigInt = fract.parse().map_err(|_| format!("invalid decimal: {s:?}"))?;
            let den = BigInt::from(10).pow(fract.len() as u32);
            let part = Rat::new(num, den);
            Ok(if negative { whole - part } else { whole + part })
        }
    }
}

/// Renders a rational as `"p"` or `"p/q"` in lowest terms.
pub fn rat_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Converts to `f64` (used only by the numeric verification mode).
pub fn rat_to_f64(x: &Rat) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Split into quotient and remainder so huge numerators stay accurate.
    let q = n / d;
    let r = n - &q * d;
    let qf = q.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let rf = r.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    qf + rf / df
}

// ----------------------------------------------------------------------
// dense rational matrices
// ----------------------------------------------------------------------

/// Dense matrix of rationals (row major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = &self[(i, k)] * &other[(k, j)];
                    m[(i, j)] += prod;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, x.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| &self[(i, j)] * &x[j])
                    .fold(Rat::zero(), |acc, v| acc + v)
            })
            .collect()
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (x, y) in m.a.iter_mut().zip(&other.a) {
            *x -= y;
        }
        m
    }

    /// Clears denominators row by row, returning an integer matrix with the
    /// same row space (input to the fraction-free routines below).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let lcm = self.row(i).iter().fold(BigInt::one(), |acc, x| {
                    num_integer::lcm(acc, x.denom().clone())
                });
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Rank via fraction-free Gaussian elimination (Bareiss): all
    /// intermediate entries stay integral, so no rounding can occur.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        if m.is_empty() || self.cols == 0 {
            return 0;
        }
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero())
            else {
                continue;
            };
            m.swap(rank, piv);
            for r in rank + 1..m.len() {
                for c in col + 1..self.cols {
                    let t = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    m[r][c] = &t / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }

    /// Determinant via Bareiss elimination on the denominator-cleared
    /// matrix, with the scaling factors divided back out at the end.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        // Track the per-row scaling applied by integer_rows.
        let mut scale = Rat::one();
        for i in 0..n {
            let lcm = self.row(i).iter().fold(BigInt::one(), |acc, x| {
                num_integer::lcm(acc, x.denom().clone())
            });
            scale *= Rat::from_integer(lcm);
        }
        let mut m = self.integer_rows();
        let mut prev = BigInt::one();
        let mut sign = 1i64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rat::zero();
            };
            if piv != col {
                m.swap(col, piv);
                sign = -sign;
            }
            for r in col + 1..n {
                for c in col + 1..n {
                    let t = &m[col][col] * &m[r][c] - &m[r][col] * &m[col][c];
                    m[r][c] = &t / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[col][col].clone();
        }
        Rat::from_integer(m[n - 1][n - 1].clone() * BigInt::from(sign)) / scale
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero())
            else {
                continue;
            };
            m.swap_rows(rank, piv);
            let inv = m[(rank, col)].recip();
            for c in 0..m.cols {
                let v = &m[(rank, c)] * &inv;
                m[(rank, c)] = v;
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in 0..m.cols {
                        let v = &m[(r, c)] - &f * &m[(rank, c)];
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the right nullspace `{x : Mx = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> =
            (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rat::zero(); self.cols];
                v[fc] = Rat::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Inverse via Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[(r, col)].is_zero())?;
            m.swap_rows(col, piv);
            inv.swap_rows(col, piv);
            let f = m[(col, col)].recip();
            for c in 0..n {
                let (a, b) = (&m[(col, c)] * &f, &inv[(col, c)] * &f);
                m[(col, c)] = a;
                inv[(col, c)] = b;
            }
            for r in 0..n {
                if r != col && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in 0..n {
                        let (a, b) = (
                            &m[(r, c)] - &f * &m[(col, c)],
                            &inv[(r, c)] - &f * &inv[(col, c)],
                        );
                        m[(r, c)] = a;
                        inv[(r, c)] = b;
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Signature `(n_plus, n_zero, n_minus)` of a symmetric matrix,
    /// computed by simultaneous row/column (congruence) reduction.
    pub fn symmetric_signature(&self) -> Signature {
        assert!(self.is_square());
        assert_eq!(self, &self.transpose(), "matrix is not symmetric");
        let n = self.rows;
        let mut m = self.clone();
        let mut sig = Signature::default();
        let mut done = vec![false; n];
        for _ in 0..n {
            // Find an untreated index with a nonzero diagonal entry,
            // manufacturing one from an off-diagonal entry if needed.
            let mut idx = (0..n).find(|&i| !done[i] && !m[(i, i)].is_zero());
            if idx.is_none() {
                if let Some((i, j)) = Self::offdiag_nonzero(&m, &done) {
                    // e_i := e_i + e_j makes the (i,i) entry 2*m[i][j] +
                    // m[j][j], which is nonzero because m[j][j] = 0 here.
                    m.congruence_add(i, j, &Rat::one());
                    idx = Some(i);
                }
            }
            let Some(p) = idx else {
                break;
            };
            done[p] = true;
            let d = m[(p, p)].clone();
            match d.numer().sign() {
                num_bigint::Sign::Plus => sig.n_plus += 1,
                num_bigint::Sign::Minus => sig.n_minus += 1,
                num_bigint::Sign::NoSign => unreachable!(),
            }
            // Clear row/column p against every untreated index.
            for i in 0..n {
                if i != p && !done[i] && !m[(i, p)].is_zero() {
                    let f = -&m[(i, p)] / &d;
                    m.congruence_add(i, p, &f);
                }
            }
        }
        sig.n_zero = n - sig.n_plus - sig.n_minus;
        sig
    }

    fn offdiag_nonzero(m: &Mat, done: &[bool]) -> Option<(usize, usize)> {
        let n = m.rows;
        for i in 0..n {
            for j in 0..n {
                if i != j && !done[i] && !done[j] && !m[(i, j)].is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Congruence transformation `e_i := e_i + f * e_j` applied
    /// symmetrically to rows and columns.
    fn congruence_add(&mut self, i: usize, j: usize, f: &Rat) {
        let n = self.rows;
        for c in 0..n {
            let v = &self[(i, c)] + f * &self[(j, c)];
            self[(i, c)] = v;
        }
        for r in 0..n {
            let v = &self[(r, i)] + f * &self[(r, j)];
            self[(r, i)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.a[i * self.cols + j]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rat_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Inertia of a symmetric bilinear form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    /// Positive semidefinite (no negative directions).
    pub fn is_psd(&self) -> bool {
        self.n_minus == 0
    }

    /// Negative semidefinite (no positive directions).
    pub fn is_nsd(&self) -> bool {
        self.n_plus == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_zero, self.n_minus)
    }
}

// ----------------------------------------------------------------------
// Laurent polynomials in u = e^t
// ----------------------------------------------------------------------

/// Laurent polynomial with rational coefficients, indexed by exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Rat>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: Rat) -> Self {
        Laurent::term(c, 0)
    }

    pub fn one() -> Self {
        Laurent::constant(Rat::one())
    }

    /// The monomial `c * u^p`.
    pub fn term(c: Rat, p: i64) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(p, c);
        }
        Laurent { terms: t }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, i64)>) -> Self {
        let mut l = Laurent::zero();
        for (c, p) in terms {
            l.add_term(c, p);
        }
        l
    }

    pub fn add_term(&mut self, c: Rat, p: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&p| p == 0)
    }

    /// Iterates `(coefficient, exponent)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rat, i64)> {
        self.terms.iter().map(|(&p, c)| (c, p))
    }

    /// Highest exponent, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest-degree term.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, p: i64) -> Rat {
        self.terms.get(&p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (c, p) in other.terms() {
            out.add_term(c.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (c, p) in other.terms() {
            out.add_term(-c.clone(), p);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (c, p) in self.terms() {
            out.add_term(-c.clone(), p);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (c1, p1) in self.terms() {
            for (c2, p2) in other.terms() {
                out.add_term(c1 * c2, p1 + p2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Laurent {
        let mut out = Laurent::zero();
        for (c0, p) in self.terms() {
            out.add_term(c0 * c, p);
        }
        out
    }

    /// Substitutes `u -> u^k` (reparametrizes the curve speed).
    pub fn scale_exponents(&self, k: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (c, p) in self.terms() {
            out.add_term(c.clone(), p * k);
        }
        out
    }

    /// Multiplies by `u^s` (shifts every exponent by `s`).
    pub fn shift_exponents(&self, s: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (c, p) in self.terms() {
            out.add_term(c.clone(), p + s);
        }
        out
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_rat(&self, x: &Rat) -> Rat {
        assert!(!x.is_zero() || self.terms.keys().all(|&p| p >= 0));
        let mut acc = Rat::zero();
        for (c, p) in self.terms() {
            acc += c * pow_rat(x, p);
        }
        acc
    }

    /// Floating-point evaluation at `u = e^t`.
    pub fn eval_exp(&self, t: f64) -> f64 {
        self.terms()
            .map(|(c, p)| rat_to_f64(c) * (t * p as f64).exp())
            .sum()
    }
}

fn pow_rat(x: &Rat, p: i64) -> Rat {
    if p >= 0 {
        num_traits::pow::pow(x.clone(), p as usize)
    } else {
        num_traits::pow::pow(x.recip(), (-p) as usize)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&p, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let mag = c.abs();
            match (mag.is_one(), p) {
                (true, 0) => write!(f, "1")?,
                (false, 0) => write!(f, "{}", rat_string(&mag))?,
                (true, 1) => write!(f, "u")?,
                (false, 1) => write!(f, "{} u", rat_string(&mag))?,
                (true, _) => write!(f, "u^{p}")?,
                (false, _) => write!(f, "{} u^{p}", rat_string(&mag))?,
            }
        }
        Ok(())
    }
}

// ----------------------------------------------------------------------
// rational functions and limits
// ----------------------------------------------------------------------

/// Quotient of Laurent polynomials (not reduced; all the questions we ask
/// of it — limits, evaluation, exact zero tests — don't need a gcd).
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: Laurent,
    pub den: Laurent,
}

/// Limit of a rational function as `u -> +infinity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    Scalar(Rat),
    Infinite,
    Undefined,
}

impl RationalFunction {
    pub fn from_laurent(l: Laurent) -> Self {
        RationalFunction {
            num: l,
            den: Laurent::one(),
        }
    }

    pub fn new(num: Laurent, den: Laurent) -> Self {
        RationalFunction { num, den }
    }

    /// Limit as `u -> +infinity`, by comparing top degrees.  Laurent
    /// polynomials have a well-defined leading term, so the quotient's
    /// behaviour at infinity is decided by `deg(num) - deg(den)`.
    pub fn limit_at_infinity(&self) -> Limit {
        if self.den.is_zero() {
            return Limit::Undefined;
        }
        let Some(dn) = self.num.degree() else {
            return Limit::Scalar(Rat::zero());
        };
        let dd = self.den.degree().expect("nonzero denominator");
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Limit::Scalar(Rat::zero()),
            std::cmp::Ordering::Greater => Limit::Infinite,
            std::cmp::Ordering::Equal => Limit::Scalar(
                self.num.leading_coeff().unwrap()
                    / self.den.leading_coeff().unwrap(),
            ),
        }
    }

    /// Floating-point evaluation at `u = e^t`.
    ///
    /// Numerator and denominator are first divided by the denominator's
    /// leading power, so quotients that stay bounded as `t -> oo`
    /// evaluate without overflowing even when both polynomials have
    /// degrees in the dozens (`e^{41 * 20}` would not fit in binary64).
    pub fn eval_exp(&self, t: f64) -> f64 {
        match self.den.degree() {
            None => f64::NAN,
            Some(d) => {
                self.num.shift_exponents(-d).eval_exp(t) / self.den.shift_exponents(-d).eval_exp(t)
            }
        }
    }

    /// Exact evaluation at a nonzero rational point (used by the exact
    /// replay transcripts).
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval_rat(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_rat(x) / d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det_of_small_matrices() {
        let m = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert!(m.det().is_zero());

        let m = Mat::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), rat(1));

        let m = Mat::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(1, 5), frac(2, 7)],
        ]);
        assert_eq!(m.det(), frac(1, 2) * frac(2, 7) - frac(1, 3) * frac(1, 5));
    }

    #[test]
    fn nullspace_matches_rank() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 3 - m.rank());
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn inverse_round_trips() {
        let m = Mat::from_i64(&[&[2, 1, 0], &[0, 1, -1], &[1, 0, 3]]);
        let inv = m.inverse().expect("invertible");
        assert_eq!(m.mul(&inv), Mat::identity(3));
        let sing = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn signature_of_indefinite_form() {
        let m = Mat::from_i64(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        assert_eq!(
            m.symmetric_signature(),
            Signature { n_plus: 1, n_zero: 1, n_minus: 1 }
        );
        // Hyperbolic plane: zero diagonal, signature (1,0,1).
        let m = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            m.symmetric_signature(),
            Signature { n_plus: 1, n_zero: 0, n_minus: 1 }
        );
    }

    #[test]
    fn laurent_arithmetic_and_display() {
        let p = Laurent::from_terms([(rat(1), 1), (rat(-2), -1)]);
        let q = Laurent::from_terms([(rat(1), 1), (rat(2), -1)]);
        let prod = p.mul(&q);
        assert_eq!(prod, Laurent::from_terms([(rat(1), 2), (rat(-4), -2)]));
        assert_eq!(format!("{p}"), "u - 2 u^-1");
        assert_eq!(p.sub(&p), Laurent::zero());
    }

    #[test]
    fn limits_at_infinity() {
        let rf = RationalFunction::new(
            Laurent::from_terms([(rat(3), 2), (rat(1), 0)]),
            Laurent::from_terms([(rat(6), 2), (rat(-1), 1)]),
        );
        assert_eq!(rf.limit_at_infinity(), Limit::Scalar(frac(1, 2)));

        let rf = RationalFunction::new(
            Laurent::term(rat(1), 1),
            Laurent::term(rat(1), 2),
        );
        assert_eq!(rf.limit_at_infinity(), Limit::Scalar(rat(0)));

        let rf = RationalFunction::new(
            Laurent::term(rat(1), 3),
            Laurent::term(rat(1), 2),
        );
        assert_eq!(rf.limit_at_infinity(), Limit::Infinite);

        let rf = RationalFunction::new(Laurent::one(), Laurent::zero());
        assert_eq!(rf.limit_at_infinity(), Limit::Undefined);
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["3", "-7/2", "0", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_string(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
