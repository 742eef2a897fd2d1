//! Deformation cohomology adapted to the complex structure.
//!
//! Cochains: `C^1_J` is the space of endomorphisms commuting with `J`
//! (dimension 8); `C^2_J` is the space of skew bilinear maps with
//! vanishing integrability tensor (dimension 20 inside the 24-dimensional
//! space of all skew maps).  The differentials are the usual
//! Chevalley-Eilenberg ones:
//!
//! ```text
//! (d1 A)(x,y)   = A mu(x,y) - mu(Ax,y) - mu(x,Ay)
//! (d2 l)(x,y,z) = sum_{cyclic} [ mu(l(x,y),z) + l(mu(x,y),z) ]  (signed)
//! ```
//!
//! `b2 = rank d1 = 8 - dim Der_J`, `z2 = dim (ker d2 ∩ C^2_J)`, and
//! `h2 = z2 - b2` counts infinitesimal deformations modulo the block
//! subgroup's motions.  `h2 = 0` certifies local rigidity.

use num_traits::{One, Zero};

use crate::algebra_core::{basis, block_matrix, j_apply, Bracket, DIM};
use crate::exact_linalg::{Mat, Rat};

/// Ordered index pairs `(i, j)`, `i < j`, used as 2-cochain coordinates.
pub fn pairs() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            v.push((i, j));
        }
    }
    v
}

/// Dimension of the full space of skew bilinear maps (24 when n = 4).
pub fn c2_dim() -> usize {
    pairs().len() * DIM
}

/// Encodes a skew bilinear map as a coordinate vector over the pair basis.
pub fn bracket_to_c2(b: &Bracket) -> Vec<Rat> {
    let mut v = Vec::with_capacity(c2_dim());
    for (i, j) in pairs() {
        v.extend(b.pair(i, j));
    }
    v
}

/// Decodes a coordinate vector back into a skew bilinear map.
pub fn c2_to_bracket(v: &[Rat]) -> Bracket {
    assert_eq!(v.len(), c2_dim());
    let mut terms = Vec::new();
    for (p, (i, j)) in pairs().into_iter().enumerate() {
        for k in 0..DIM {
            if !v[DIM * p + k].is_zero() {
                terms.push((i, j, k, v[DIM * p + k].clone()));
            }
        }
    }
    Bracket::from_terms(terms)
}

/// Matrix of the linearized integrability condition on 2-cochains; its
/// nullspace is `C^2_J`.  The operator does not depend on any bracket.
pub fn integrability_operator() -> Mat {
    let e = basis();
    let n = c2_dim();
    let mut m = Mat::zero(n, n);
    for col in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[col] = Rat::one();
        let lam = c2_to_bracket(&unit);
        for (p, (a, b)) in pairs().into_iter().enumerate() {
            let nij = lam.nijenhuis(&e[a], &e[b]);
            for (k, val) in nij.into_iter().enumerate() {
                m[(DIM * p + k, col)] = val;
            }
        }
    }
    m
}

/// Basis of `C^2_J` (dimension 20).
pub fn c2j_basis() -> Vec<Vec<Rat>> {
    integrability_operator().nullspace()
}

/// Basis of `C^1_J = {A : AJ = JA}` as eight 4x4 matrices.
pub fn c1j_basis() -> Vec<Mat> {
    let mut out = Vec::new();
    for r in 0..2 {
        for c in 0..2 {
            let mut p = Mat::zero(2, 2);
            p[(r, c)] = Rat::one();
            out.push(block_matrix(&p, &Mat::zero(2, 2)));
        }
    }
    for r in 0..2 {
        for c in 0..2 {
            let mut q = Mat::zero(2, 2);
            q[(r, c)] = Rat::one();
            out.push(block_matrix(&Mat::zero(2, 2), &q));
        }
    }
    out
}

/// First differential of `mu` on an endomorphism, in 2-cochain
/// coordinates.
pub fn delta1(mu: &Bracket, a: &Mat) -> Vec<Rat> {
    let e = basis();
    let mut out = Vec::with_capacity(c2_dim());
    for (i, j) in pairs() {
        let aei: Vec<Rat> = (0..DIM).map(|r| a[(r, i)].clone()).collect();
        let aej: Vec<Rat> = (0..DIM).map(|r| a[(r, j)].clone()).collect();
        let t1 = a.mul_vec(&mu.pair(i, j));
        let t2 = mu.apply(&aei, &e[j]);
        let t3 = mu.apply(&e[i], &aej);
        for k in 0..DIM {
            out.push(&t1[k] - &t2[k] - &t3[k]);
        }
    }
    out
}

/// Second differential of `mu` on a 2-cochain, as the list of values of
/// the resulting alternating trilinear map on ordered basis triples.
pub fn delta2(mu: &Bracket, lam: &Bracket) -> Vec<Rat> {
    let e = basis();
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                let mut acc = vec![Rat::zero(); DIM];
                // Alternating sum over S3; even permutations first.
                let perms = [
                    (i, j, k, 1),
                    (j, k, i, 1),
                    (k, i, j, 1),
                    (j, i, k, -1),
                    (i, k, j, -1),
                    (k, j, i, -1),
                ];
                for (x, y, z, sgn) in perms {
                    let v1 = mu.apply(&lam.apply(&e[x], &e[y]), &e[z]);
                    let v2 = lam.apply(&mu.apply(&e[x], &e[y]), &e[z]);
                    for m in 0..DIM {
                        let term = &v1[m] + &v2[m];
                        if sgn > 0 {
                            acc[m] += term;
                        } else {
                            acc[m] -= term;
                        }
                    }
                }
                out.extend(acc);
            }
        }
    }
    out
}

/// Matrix of `delta2` restricted to a given basis of `C^2_J`.
fn delta2_on(mu: &Bracket, basis_c2j: &[Vec<Rat>]) -> Mat {
    let cols: Vec<Vec<Rat>> = basis_c2j
        .iter()
        .map(|v| delta2(mu, &c2_to_bracket(v)))
        .collect();
    let rows = cols[0].len();
    let mut m = Mat::zero(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, val) in col.iter().enumerate() {
            m[(r, c)] = val.clone();
        }
    }
    m
}

/// The three cohomology dimensions `(z2, b2, h2)` of a bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

/// Computes `z2 = dim(ker d2 ∩ C^2_J)`, `b2 = rank d1` and their
/// difference for the given bracket.
pub fn cohomology(mu: &Bracket) -> Cohomology {
    let basis_c2j = c2j_basis();
    let z2 = basis_c2j.len() - delta2_on(mu, &basis_c2j).rank();
    let cols: Vec<Vec<Rat>> = c1j_basis().iter().map(|a| delta1(mu, a)).collect();
    let mut m = Mat::zero(c2_dim(), cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, val) in col.iter().enumerate() {
            m[(r, c)] = val.clone();
        }
    }
    let b2 = m.rank();
    Cohomology { z2, b2, h2: z2 - b2 }
}

/// Checks that a candidate direction `lam` is a genuine linear
/// deformation of `mu`: it must be a 2-cocycle for `mu`, satisfy the
/// Jacobi identity on its own, and be compatible with `J`.  When all
/// three hold, `mu + t lam` is an integrable Lie bracket for every `t`.
pub fn linear_deformation_check(mu: &Bracket, lam: &Bracket) -> Result<(), String> {
    if !delta2(mu, lam).iter().all(Rat::is_zero) {
        return Err("not a 2-cocycle".into());
    }
    if !lam.is_lie_bracket() {
        return Err("deformation direction violates Jacobi".into());
    }
    if !lam.nijenhuis_vanishes() {
        return Err("deformation direction not compatible with J".into());
    }
    Ok(())
}

/// Dimension of the space of skew maps satisfying the abelian-type law
/// `lam(Jx, Jy) = lam(x, y)` (a distinguished subspace of `C^2_J`).
pub fn abelian_cochain_dim() -> usize {
    let e = basis();
    let n = c2_dim();
    let mut m = Mat::zero(n, n);
    for col in 0..n {
        let mut unit = vec![Rat::zero(); n];
        unit[col] = Rat::one();
        let lam = c2_to_bracket(&unit);
        for (p, (a, b)) in pairs().into_iter().enumerate() {
            let t1 = lam.apply(&j_apply(&e[a]), &j_apply(&e[b]));
            let t2 = lam.pair(a, b);
            for k in 0..DIM {
                m[(DIM * p + k, col)] = &t1[k] - &t2[k];
            }
        }
    }
    n - m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact_linalg::rat;
    use crate::invariants::j_derivation_dim;

    fn sample(id: &str) -> Bracket {
        catalog::parse_id(id).unwrap().bracket().unwrap()
    }

    #[test]
    fn cochain_space_dimensions() {
        assert_eq!(c2_dim(), 24);
        assert_eq!(c2j_basis().len(), 20);
        assert_eq!(abelian_cochain_dim(), 16);
        assert_eq!(c1j_basis().len(), 8);
    }

    #[test]
    fn rigidity_of_mu4_and_freedom_of_mu0() {
        let c = cohomology(&sample("mu4"));
        assert_eq!((c.z2, c.b2, c.h2), (8, 8, 0));
        let c = cohomology(&sample("mu0"));
        assert_eq!((c.z2, c.b2, c.h2), (20, 0, 20));
    }

    #[test]
    fn b2_complements_the_j_derivations() {
        for id in ["mu1", "mu4", "mu12", "mu14", "mu8-[t=0]", "mu10[a=1]"] {
            let b = sample(id);
            let c = cohomology(&b);
            assert_eq!(c.b2, 8 - j_derivation_dim(&b), "{id}");
        }
    }

    #[test]
    fn d2_after_d1_vanishes() {
        let mu = sample("mu14");
        for a in c1j_basis() {
            let img = c2_to_bracket(&delta1(&mu, &a));
            assert!(delta2(&mu, &img).iter().all(Rat::is_zero));
            // Coboundaries stay inside C^2_J.
            assert!(img.nijenhuis_vanishes());
        }
    }

    #[test]
    fn the_one_parameter_family_through_sl2() {
        // lambda(e1,e3) = e4 deforms mu8-[t=0] into mu8-[t=1]:
        // it is a cocycle, a Lie bracket, and J-compatible.
        let mu = sample("mu8-[t=0]");
        let lam = Bracket::from_terms([(0, 2, 3, rat(1))]);
        linear_deformation_check(&mu, &lam).expect("valid deformation");
        let c = cohomology(&mu);
        assert_eq!(c.h2, 1);
    }
}
