//! Degeneration invariants.
//!
//! All of these are either upper semicontinuous (dimensions of derivation
//! spaces), lower semicontinuous (dimension of the derived subalgebra,
//! rank and inertia of trace forms), or closed conditions (vanishing of a
//! trace form, unimodularity).  Together they decide every
//! non-degeneration in the corpus.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra_core::{basis, Bracket, JClass, DIM};
use crate::exact_linalg::{rat_string, Mat, Rat, Signature};

/// Dimension of the space of `(alpha, beta, gamma)`-derivations:
/// matrices `D` with `alpha D mu(x,y) = beta mu(Dx,y) + gamma mu(x,Dy)`.
pub fn abg_derivation_dim(b: &Bracket, alpha: &Rat, beta: &Rat, gamma: &Rat) -> usize {
    let rows = derivation_system(b, alpha, beta, gamma, false);
    DIM * DIM - Mat::from_rows(rows).rank()
}

/// Dimension of the ordinary derivation algebra.
pub fn derivation_dim(b: &Bracket) -> usize {
    let one = Rat::from_integer(1.into());
    abg_derivation_dim(b, &one, &one, &one)
}

/// Dimension of the derivations commuting with the complex structure.
pub fn j_derivation_dim(b: &Bracket) -> usize {
    let one = Rat::from_integer(1.into());
    let rows = derivation_system(b, &one, &one, &one, true);
    DIM * DIM - Mat::from_rows(rows).rank()
}

/// Orbit dimension under the block subgroup (which has dimension 8):
/// `8 - dim Der_J`.
pub fn orbit_dim(b: &Bracket) -> usize {
    8 - j_derivation_dim(b)
}

/// Linear system on the 16 unknowns `D[k][m]`; one row per bracket pair
/// and component, plus (optionally) the rows of `DJ - JD = 0`.
fn derivation_system(
    b: &Bracket,
    alpha: &Rat,
    beta: &Rat,
    gamma: &Rat,
    j_commuting: bool,
) -> Vec<Vec<Rat>> {
    let unknown = |k: usize, m: usize| DIM * k + m;
    let mut rows = Vec::new();
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in 0..DIM {
                let mut row = vec![Rat::zero(); DIM * DIM];
                for q in 0..DIM {
                    row[unknown(k, q)] += alpha * b.coeff(i, j, q);
                }
                for m in 0..DIM {
                    row[unknown(m, i)] -= beta * b.coeff(m, j, k);
                    row[unknown(m, j)] -= gamma * b.coeff(i, m, k);
                }
                rows.push(row);
            }
        }
    }
    if j_commuting {
        let jm = crate::algebra_core::j_matrix();
        for k in 0..DIM {
            for i in 0..DIM {
                let mut row = vec![Rat::zero(); DIM * DIM];
                for m in 0..DIM {
                    row[unknown(k, m)] += &jm[(m, i)];
                    row[unknown(m, i)] -= &jm[(k, m)];
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// One-parameter family of trace forms
/// `kappa_g(x, y) = tr(ad_x ad_y) + g tr(ad_x) tr(ad_y)`.
pub fn kappa(b: &Bracket, g: &Rat) -> Mat {
    let ads: Vec<Mat> = (0..DIM).map(|a| b.ad(a)).collect();
    let trs: Vec<Rat> = (0..DIM).map(|a| b.trace_ad(a)).collect();
    let mut k = Mat::zero(DIM, DIM);
    for a in 0..DIM {
        for c in 0..DIM {
            let prod = ads[a].mul(&ads[c]);
            let mut tr = Rat::zero();
            for m in 0..DIM {
                tr += prod[(m, m)].clone();
            }
            k[(a, c)] = tr + g * &trs[a] * &trs[c];
        }
    }
    k
}

/// Inertia of `kappa_g`.
pub fn kappa_signature(b: &Bracket, g: &Rat) -> Signature {
    kappa(b, g).symmetric_signature()
}

/// Symmetric cubic form indexed by ordered triples `a <= b <= c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    vals: BTreeMap<(usize, usize, usize), Rat>,
}

impl CubicForm {
    pub fn is_zero(&self) -> bool {
        self.vals.values().all(Rat::is_zero)
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> Rat {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.vals
            .get(&(key[0], key[1], key[2]))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Nonzero entries as `(a, b, c, value)` with `a <= b <= c` (0-based).
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, Rat)> {
        self.vals
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&(a, b, c), v)| (a, b, c, v.clone()))
            .collect()
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz = self.nonzero();
        if nz.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = nz
            .iter()
            .map(|(a, b, c, v)| {
                format!("(e{},e{},e{}) -> {}", a + 1, b + 1, c + 1, rat_string(v))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Two-parameter family of symmetric cubic trace forms:
/// the symmetrized `tr(ad ad ad)` plus `f` times the Killing-trace mixed
/// term plus `g` times the product of traces.
pub fn psi(b: &Bracket, f: &Rat, g: &Rat) -> CubicForm {
    let ads: Vec<Mat> = (0..DIM).map(|a| b.ad(a)).collect();
    let trs: Vec<Rat> = (0..DIM).map(|a| b.trace_ad(a)).collect();
    let zero = Rat::zero();
    let killing = kappa(b, &zero);

    let tr3 = |x: usize, y: usize, z: usize| -> Rat {
        let prod = ads[x].mul(&ads[y]).mul(&ads[z]);
        let mut tr = Rat::zero();
        for m in 0..DIM {
            tr += prod[(m, m)].clone();
        }
        tr
    };

    let mut vals = BTreeMap::new();
    for a in 0..DIM {
        for c in a..DIM {
            for d in c..DIM {
                // Sum over all six orderings; only two traces differ.
                let mut s = Rat::zero();
                for (x, y, z) in [
                    (a, c, d),
                    (a, d, c),
                    (c, a, d),
                    (c, d, a),
                    (d, a, c),
                    (d, c, a),
                ] {
                    s += tr3(x, y, z);
                }
                s += f * (&killing[(a, c)] * &trs[d]
                    + &killing[(c, d)] * &trs[a]
                    + &killing[(d, a)] * &trs[c]);
                s += g * &trs[a] * &trs[c] * &trs[d];
                if !s.is_zero() {
                    vals.insert((a, c, d), s);
                }
            }
        }
    }
    CubicForm { vals }
}

/// Everything the invariant table needs about one bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub der_dim: usize,
    pub j_der_dim: usize,
    pub unimodular: bool,
    pub j_class: JClass,
    pub derived_dim: usize,
}

impl InvariantProfile {
    pub fn of(b: &Bracket) -> Self {
        InvariantProfile {
            der_dim: derivation_dim(b),
            j_der_dim: j_derivation_dim(b),
            unimodular: b.is_unimodular(),
            j_class: b.j_class(),
            derived_dim: b.derived_dim(),
        }
    }

    /// Column of the invariant table this bracket belongs to: abelian-type
    /// brackets take precedence, then unimodular ones, then the rest.
    pub fn column(&self) -> &'static str {
        if self.j_class == JClass::Abelian {
            "abelian"
        } else if self.unimodular {
            "unimodular"
        } else {
            "plain"
        }
    }
}

/// Numeric (f64) variants of the invariants that have them, used to
/// cross-check the exact path in numeric mode.
pub fn kappa_f64(b: &Bracket, g: f64) -> [[f64; DIM]; DIM] {
    let mut ads = [[[0f64; DIM]; DIM]; DIM];
    for a in 0..DIM {
        let m = b.ad(a);
        for i in 0..DIM {
            for j in 0..DIM {
                ads[a][i][j] = crate::exact_linalg::rat_to_f64(&m[(i, j)]);
            }
        }
    }
    let tr = |a: usize| -> f64 { (0..DIM).map(|k| ads[a][k][k]).sum() };
    let mut k = [[0f64; DIM]; DIM];
    for a in 0..DIM {
        for c in 0..DIM {
            let mut t = 0.0;
            for i in 0..DIM {
                for m in 0..DIM {
                    t += ads[a][i][m] * ads[c][m][i];
                }
            }
            k[a][c] = t + g * tr(a) * tr(c);
        }
    }
    k
}

/// Kills the bracket's mixed terms on the standard basis and reports the
/// diagonal `kappa_g` values (helper for quick human inspection).
pub fn kappa_diagonal(b: &Bracket, g: &Rat) -> Vec<Rat> {
    let k = kappa(b, g);
    (0..DIM).map(|i| k[(i, i)].clone()).collect()
}

/// Jacobi and integrability check bundled for input validation; reports
/// the first violating triple (1-based) on failure.
pub fn validate_bracket(b: &Bracket) -> Result<(), String> {
    if let Some((i, j, k)) = b.jacobi_violation() {
        return Err(format!(
            "Jacobi identity fails on (e{}, e{}, e{})",
            i + 1,
            j + 1,
            k + 1
        ));
    }
    let e = basis();
    for i in 0..DIM {
        for j in i + 1..DIM {
            if !b.nijenhuis(&e[i], &e[j]).iter().all(Rat::is_zero) {
                return Err(format!(
                    "integrability tensor does not vanish on (e{}, e{})",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    Ok(())
}
