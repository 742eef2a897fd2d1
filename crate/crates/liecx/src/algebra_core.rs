//! Four-dimensional skew brackets and the fixed complex structure.
//!
//! A bracket is stored by its structure constants `c[i][j][k]` with
//! `[e_i, e_j] = sum_k c[i][j][k] e_k` (indices 0..4 internally, 1..4 in
//! print and on disk).  The complex structure is the block one:
//!
//! ```text
//! J e1 = e3,  J e2 = e4,  J e3 = -e1,  J e4 = -e2.
//! ```
//!
//! The general linear group acts by push-forward,
//! `(g . mu)(x, y) = g mu(g^-1 x, g^-1 y)`, and the subgroup commuting
//! with `J` consists of the block matrices `[[A, -B], [B, A]]`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact_linalg::{rat, rat_string, Mat, Rat};

pub const DIM: usize = 4;

/// Skew-symmetric bilinear bracket on R^4 given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    c: Vec<Rat>, // flat [i][j][k], length 64
}

fn idx(i: usize, j: usize, k: usize) -> usize {
    16 * i + 4 * j + k
}

impl Bracket {
    pub fn zero() -> Self {
        Bracket {
            c: vec![Rat::zero(); DIM * DIM * DIM],
        }
    }

    /// Builds from a list of `(i, j, k, coeff)` with `i < j` (0-based);
    /// the skew-symmetric mirror entries are filled in automatically.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, Rat)>,
    {
        let mut b = Bracket::zero();
        for (i, j, k, v) in terms {
            assert!(i < j && j < DIM && k < DIM, "bad structure term");
            b.c[idx(i, j, k)] += &v;
            b.c[idx(j, i, k)] -= &v;
        }
        b
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[idx(i, j, k)]
    }

    /// The vector `[e_i, e_j]`.
    pub fn pair(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..DIM).map(|k| self.c[idx(i, j, k)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    /// Bilinear evaluation on arbitrary vectors.
    pub fn apply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); DIM];
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let f = &x[i] * &y[j];
                for k in 0..DIM {
                    let c = &self.c[idx(i, j, k)];
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, .]` for a basis vector `e_a`.
    pub fn ad(&self, a: usize) -> Mat {
        let mut m = Mat::zero(DIM, DIM);
        for j in 0..DIM {
            for k in 0..DIM {
                m[(k, j)] = self.c[idx(a, j, k)].clone();
            }
        }
        m
    }

    pub fn trace_ad(&self, a: usize) -> Rat {
        (0..DIM).map(|k| self.c[idx(a, k, k)].clone()).sum()
    }

    /// Jacobi cyclic sum `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis
    /// vectors.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rat> {
        let e = basis();
        let t1 = self.apply(&self.pair(i, j), &e[k]);
        let t2 = self.apply(&self.pair(j, k), &e[i]);
        let t3 = self.apply(&self.pair(k, i), &e[j]);
        (0..DIM).map(|m| &t1[m] + &t2[m] + &t3[m]).collect()
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..DIM {
            for j in i + 1..DIM {
                for k in j + 1..DIM {
                    if !self.jacobiator(i, j, k).iter().all(Rat::is_zero) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_lie_bracket(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// Nijenhuis-type integrability tensor
    /// `N(x,y) = mu(x,y) + J mu(Jx,y) + J mu(x,Jy) - mu(Jx,Jy)`.
    pub fn nijenhuis(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let jx = j_apply(x);
        let jy = j_apply(y);
        let mut out = self.apply(x, y);
        let t2 = j_apply(&self.apply(&jx, y));
        let t3 = j_apply(&self.apply(x, &jy));
        let t4 = self.apply(&jx, &jy);
        for k in 0..DIM {
            out[k] += &t2[k] + &t3[k] - &t4[k];
        }
        out
    }

    /// Whether the fixed complex structure is integrable for this bracket.
    pub fn nijenhuis_vanishes(&self) -> bool {
        let e = basis();
        for i in 0..DIM {
            for j in i + 1..DIM {
                if !self.nijenhuis(&e[i], &e[j]).iter().all(Rat::is_zero) {
                    return false;
                }
            }
        }
        true
    }

    /// Classification of how the bracket interacts with `J`.
    pub fn j_class(&self) -> JClass {
        let e = basis();
        let mut abelian = true;
        let mut bi_invariant = true;
        for i in 0..DIM {
            for j in i + 1..DIM {
                let ji = j_apply(&e[i]);
                let jj = j_apply(&e[j]);
                if self.apply(&ji, &jj) != self.pair(i, j) {
                    abelian = false;
                }
                if self.apply(&ji, &e[j]) != j_apply(&self.pair(i, j)) {
                    bi_invariant = false;
                }
            }
        }
        if abelian {
            JClass::Abelian
        } else if bi_invariant {
            JClass::BiInvariant
        } else {
            JClass::Generic
        }
    }

    /// All traces of `ad` vanish.
    pub fn is_unimodular(&self) -> bool {
        (0..DIM).all(|a| self.trace_ad(a).is_zero())
    }

    /// Dimension of the derived subalgebra (span of all brackets).
    pub fn derived_dim(&self) -> usize {
        let rows: Vec<Vec<Rat>> = (0..DIM)
            .flat_map(|i| (i + 1..DIM).map(move |j| (i, j)))
            .map(|(i, j)| self.pair(i, j))
            .collect();
        Mat::from_rows(rows).rank()
    }

    /// Push-forward action `(g . mu)(x,y) = g mu(g^-1 x, g^-1 y)`;
    /// `None` when `g` is singular.
    pub fn gl_action(&self, g: &Mat) -> Option<Bracket> {
        let h = g.inverse()?;
        let mut out = Bracket::zero();
        for i in 0..DIM {
            for j in i + 1..DIM {
                let hx: Vec<Rat> = (0..DIM).map(|r| h[(r, i)].clone()).collect();
                let hy: Vec<Rat> = (0..DIM).map(|r| h[(r, j)].clone()).collect();
                let v = g.mul_vec(&self.apply(&hx, &hy));
                for (k, c) in v.into_iter().enumerate() {
                    out.c[idx(i, j, k)] = c.clone();
                    out.c[idx(j, i, k)] = -c;
                }
            }
        }
        Some(out)
    }

    /// The eight-parameter linear transform
    /// `a0 mu + a1 J mu + a2 mu(J.,.) + a3 mu(.,J.) + a4 J mu(J.,.)
    ///  + a5 J mu(.,J.) + a6 mu(J.,J.) + a7 J mu(J.,J.)`.
    pub fn phi_transform(&self, a: &[Rat; 8]) -> Bracket {
        let e = basis();
        let mut out = Bracket::zero();
        for i in 0..DIM {
            for j in i + 1..DIM {
                let jx = j_apply(&e[i]);
                let jy = j_apply(&e[j]);
                let m = self.pair(i, j);
                let mjx = self.apply(&jx, &e[j]);
                let mjy = self.apply(&e[i], &jy);
                let mjj = self.apply(&jx, &jy);
                let parts: [Vec<Rat>; 8] = [
                    m.clone(),
                    j_apply(&m),
                    mjx.clone(),
                    mjy.clone(),
                    j_apply(&mjx),
                    j_apply(&mjy),
                    mjj.clone(),
                    j_apply(&mjj),
                ];
                for k in 0..DIM {
                    let mut acc = Rat::zero();
                    for (t, part) in parts.iter().enumerate() {
                        if !a[t].is_zero() {
                            acc += &a[t] * &part[k];
                        }
                    }
                    out.c[idx(i, j, k)] = acc.clone();
                    out.c[idx(j, i, k)] = -acc;
                }
            }
        }
        out
    }

    /// `psi_{a,b} = mu + a J mu + b (mu(J.,.) + mu(.,J.))`.
    pub fn psi_transform(&self, a: &Rat, b: &Rat) -> Bracket {
        self.phi_transform(&[
            Rat::one(),
            a.clone(),
            b.clone(),
            b.clone(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ])
    }

    /// `theta_b = J mu + b (mu(J.,.) + mu(.,J.))`.
    pub fn theta_transform(&self, b: &Rat) -> Bracket {
        self.phi_transform(&[
            Rat::zero(),
            Rat::one(),
            b.clone(),
            b.clone(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ])
    }
}

/// How a bracket interacts with the complex structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum JClass {
    /// `mu(Jx, Jy) = mu(x, y)` (takes precedence when both laws hold).
    Abelian,
    /// `mu(Jx, y) = J mu(x, y)`.
    BiInvariant,
    Generic,
}

impl JClass {
    pub fn as_str(self) -> &'static str {
        match self {
            JClass::Abelian => "abelian",
            JClass::BiInvariant => "bi_invariant",
            JClass::Generic => "generic",
        }
    }
}

impl fmt::Display for JClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Standard basis of R^4.
pub fn basis() -> [Vec<Rat>; 4] {
    std::array::from_fn(|i| {
        (0..DIM)
            .map(|j| if i == j { Rat::one() } else { Rat::zero() })
            .collect()
    })
}

/// The fixed complex structure as a matrix.
pub fn j_matrix() -> Mat {
    let mut j = Mat::zero(DIM, DIM);
    j[(2, 0)] = rat(1);
    j[(3, 1)] = rat(1);
    j[(0, 2)] = rat(-1);
    j[(1, 3)] = rat(-1);
    j
}

/// Applies `J` to a coordinate vector.
pub fn j_apply(x: &[Rat]) -> Vec<Rat> {
    vec![-&x[2], -&x[3], x[0].clone(), x[1].clone()]
}

/// Whether `g` commutes with `J` (i.e. lies in the block subgroup).
pub fn commutes_with_j(g: &Mat) -> bool {
    let j = j_matrix();
    g.mul(&j) == j.mul(g)
}

/// Block matrix `[[A, -B], [B, A]]` from 2x2 blocks.
pub fn block_matrix(a: &Mat, b: &Mat) -> Mat {
    assert!(a.rows() == 2 && a.cols() == 2 && b.rows() == 2 && b.cols() == 2);
    let mut g = Mat::zero(DIM, DIM);
    for i in 0..2 {
        for j in 0..2 {
            g[(i, j)] = a[(i, j)].clone();
            g[(2 + i, 2 + j)] = a[(i, j)].clone();
            g[(i, 2 + j)] = -b[(i, j)].clone();
            g[(2 + i, j)] = b[(i, j)].clone();
        }
    }
    g
}

impl fmt::Display for Bracket {
    /// Renders the nonzero brackets, e.g. `[e1,e2] = e2 + 3/2 e4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                let v = self.pair(i, j);
                if v.iter().all(Rat::is_zero) {
                    continue;
                }
                let mut parts = Vec::new();
                for (k, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mag = c.abs();
                    let coeff = if mag.is_one() {
                        String::new()
                    } else {
                        format!("{} ", rat_string(&mag))
                    };
                    let sign = if c.is_negative() {
                        if parts.is_empty() { "-" } else { "- " }
                    } else if parts.is_empty() {
                        ""
                    } else {
                        "+ "
                    };
                    parts.push(format!("{sign}{coeff}e{}", k + 1));
                }
                lines.push(format!(
                    "[e{},e{}] = {}",
                    i + 1,
                    j + 1,
                    parts.join(" ")
                ));
            }
        }
        if lines.is_empty() {
            lines.push("0 (abelian)".to_string());
        }
        write!(f, "{}", lines.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::frac;

    fn heisenberg() -> Bracket {
        // [e1,e3] = e2, the product of the Heisenberg algebra with a line.
        Bracket::from_terms([(0, 2, 1, rat(1))])
    }

    #[test]
    fn j_squares_to_minus_one() {
        let j = j_matrix();
        let mut minus_id = Mat::identity(DIM);
        for i in 0..DIM {
            minus_id[(i, i)] = rat(-1);
        }
        assert_eq!(j.mul(&j), minus_id);
    }

    #[test]
    fn heisenberg_is_abelian_type() {
        let b = heisenberg();
        assert!(b.is_lie_bracket());
        assert!(b.nijenhuis_vanishes());
        assert_eq!(b.j_class(), JClass::Abelian);
        assert!(b.is_unimodular());
        assert_eq!(b.derived_dim(), 1);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2]=e3, [e1,e3]=e1 fails Jacobi on (e1,e2,e3).
        let b = Bracket::from_terms([(0, 1, 2, rat(1)), (0, 2, 0, rat(1))]);
        assert_eq!(b.jacobi_violation(), Some((0, 1, 2)));
    }

    #[test]
    fn gl_action_is_a_group_action() {
        let b = heisenberg();
        let g = Mat::from_i64(&[
            &[1, 0, 0, 0],
            &[2, 1, 0, 0],
            &[0, 1, 1, 0],
            &[0, 0, 0, 3],
        ]);
        let h = Mat::from_i64(&[
            &[1, 1, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 2, 0],
            &[0, 0, 1, 1],
        ]);
        let lhs = b.gl_action(&h).unwrap().gl_action(&g).unwrap();
        let rhs = b.gl_action(&g.mul(&h)).unwrap();
        assert_eq!(lhs, rhs);
        assert!(b.gl_action(&Mat::zero(4, 4)).is_none());
    }

    #[test]
    fn block_matrices_commute_with_j() {
        let a = Mat::from_i64(&[&[1, 2], &[0, 1]]);
        let bm = Mat::from_i64(&[&[0, 5], &[-1, 3]]);
        let g = block_matrix(&a, &bm);
        assert!(commutes_with_j(&g));
    }

    #[test]
    fn psi_transform_matches_definition() {
        let b = heisenberg();
        let t = b.psi_transform(&frac(1, 2), &rat(0));
        // psi_{1/2,0}(mu) = mu + (1/2) J mu: [e1,e3] = e2 + (1/2) e4.
        let expect = Bracket::from_terms([
            (0, 2, 1, rat(1)),
            (0, 2, 3, frac(1, 2)),
        ]);
        assert_eq!(t, expect);
    }

    #[test]
    fn display_renders_signs_and_coefficients() {
        let b = Bracket::from_terms([
            (0, 1, 1, rat(-1)),
            (0, 1, 3, frac(3, 2)),
            (1, 2, 0, rat(1)),
        ]);
        let s = b.to_string();
        assert!(s.contains("[e1,e2] = -e2 + 3/2 e4"), "{s}");
        assert!(s.contains("[e2,e3] = e1"), "{s}");
    }
}
