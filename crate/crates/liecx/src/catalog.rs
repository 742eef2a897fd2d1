//! The catalog of normal forms.
//!
//! Seventeen families `mu0 .. mu14` (with `+`/`-` variants for `mu8`,
//! `mu11`, `mu13`) cover, up to the block subgroup, every Lie bracket on
//! R^4 compatible with the fixed complex structure.  Families take up to
//! two rational parameters; [`default_samples`] returns the parameter
//! choices exercised by the test corpus, each tagged with the classical
//! name of the underlying Lie algebra.

use std::fmt;

use once_cell::sync::Lazy;

use crate::algebra_core::Bracket;
use crate::exact_linalg::{parse_rat, rat, rat_string, Rat};

/// Number of parameters and builder for one normal-form family.
struct Family {
    name: &'static str,
    params: &'static [&'static str],
    build: fn(&[Rat]) -> Bracket,
}

fn t(i: usize, j: usize, k: usize, c: Rat) -> (usize, usize, usize, Rat) {
    (i - 1, j - 1, k - 1, c)
}

static FAMILIES: Lazy<Vec<Family>> = Lazy::new(|| {
    vec![
        Family {
            name: "mu0",
            params: &[],
            build: |_| Bracket::zero(),
        },
        Family {
            name: "mu1",
            params: &[],
            build: |_| Bracket::from_terms([t(1, 3, 2, rat(1))]),
        },
        Family {
            name: "mu2",
            params: &[],
            build: |_| {
                Bracket::from_terms([t(1, 3, 3, rat(1)), t(2, 4, 4, rat(1))])
            },
        },
        Family {
            name: "mu3",
            params: &["a", "b"],
            build: |p| {
                let (a, b) = (&p[0], &p[1]);
                Bracket::from_terms([
                    t(1, 2, 2, rat(1)),
                    t(1, 4, 4, rat(1)),
                    t(2, 3, 2, a.clone()),
                    t(2, 3, 4, b.clone()),
                    t(3, 4, 2, b.clone()),
                    t(3, 4, 4, -a.clone()),
                ])
            },
        },
        Family {
            name: "mu4",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 3, 3, rat(1)),
                    t(1, 4, 4, rat(1)),
                    t(2, 3, 4, rat(1)),
                    t(2, 4, 3, rat(-1)),
                ])
            },
        },
        Family {
            name: "mu5",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, rat(1)),
                    t(1, 3, 4, rat(1)),
                    t(1, 4, 4, rat(1)),
                    t(2, 3, 4, rat(-1)),
                    t(3, 4, 2, rat(-1)),
                ])
            },
        },
        Family {
            name: "mu6",
            params: &["a", "b"],
            build: |p| {
                let (a, b) = (&p[0], &p[1]);
                Bracket::from_terms([
                    t(1, 2, 2, a.clone()),
                    t(1, 2, 4, b.clone()),
                    t(1, 3, 3, rat(1)),
                    t(1, 4, 2, -b.clone()),
                    t(1, 4, 4, a.clone()),
                ])
            },
        },
        Family {
            name: "mu7",
            params: &["a"],
            build: |p| {
                let a = &p[0];
                Bracket::from_terms([
                    t(1, 2, 2, a.clone()),
                    t(1, 2, 4, rat(1)),
                    t(1, 4, 2, rat(-1)),
                    t(1, 4, 4, a.clone()),
                ])
            },
        },
        Family {
            name: "mu8+",
            params: &["t"],
            build: |p| {
                Bracket::from_terms([
                    t(1, 2, 3, rat(1)),
                    t(1, 3, 2, rat(-1)),
                    t(1, 3, 4, p[0].clone()),
                    t(2, 3, 1, rat(1)),
                ])
            },
        },
        Family {
            name: "mu8-",
            params: &["t"],
            build: |p| {
                Bracket::from_terms([
                    t(1, 2, 3, rat(1)),
                    t(1, 3, 2, rat(1)),
                    t(1, 3, 4, p[0].clone()),
                    t(2, 3, 1, rat(1)),
                ])
            },
        },
        Family {
            name: "mu9",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, rat(1)),
                    t(1, 3, 3, rat(1)),
                    t(1, 3, 4, rat(1)),
                    t(1, 4, 4, rat(1)),
                ])
            },
        },
        Family {
            name: "mu10",
            params: &["a"],
            build: |p| {
                let a = &p[0];
                Bracket::from_terms([
                    t(1, 2, 2, a - rat(1)),
                    t(1, 3, 3, rat(1)),
                    t(1, 4, 4, a.clone()),
                    t(2, 3, 4, rat(1)),
                ])
            },
        },
        Family {
            name: "mu11+",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, frac_half()),
                    t(1, 3, 3, rat(1)),
                    t(1, 4, 4, frac_half()),
                    t(2, 4, 3, rat(1)),
                ])
            },
        },
        Family {
            name: "mu11-",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, -frac_half()),
                    t(1, 3, 3, rat(-1)),
                    t(1, 4, 4, -frac_half()),
                    t(2, 4, 3, rat(1)),
                ])
            },
        },
        Family {
            name: "mu12",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, rat(-1)),
                    t(1, 3, 3, rat(1)),
                    t(1, 3, 4, rat(1)),
                    t(2, 3, 4, rat(1)),
                ])
            },
        },
        Family {
            name: "mu13+",
            params: &["a"],
            build: |p| {
                let a = &p[0];
                Bracket::from_terms([
                    t(1, 2, 2, a.clone()),
                    t(1, 2, 4, rat(1)),
                    t(1, 3, 3, a * rat(2)),
                    t(1, 4, 2, rat(-1)),
                    t(1, 4, 4, a.clone()),
                    t(2, 4, 3, rat(1)),
                ])
            },
        },
        Family {
            name: "mu13-",
            params: &["a"],
            build: |p| {
                let a = &p[0];
                Bracket::from_terms([
                    t(1, 2, 2, a.clone()),
                    t(1, 2, 4, rat(-1)),
                    t(1, 3, 3, a * rat(2)),
                    t(1, 4, 2, rat(1)),
                    t(1, 4, 4, a.clone()),
                    t(2, 4, 3, rat(1)),
                ])
            },
        },
        Family {
            name: "mu14",
            params: &[],
            build: |_| {
                Bracket::from_terms([
                    t(1, 2, 2, rat(1)),
                    t(1, 3, 2, rat(1)),
                    t(1, 3, 3, rat(1)),
                    t(1, 4, 4, rat(2)),
                    t(2, 3, 4, rat(1)),
                ])
            },
        },
    ]
});

fn frac_half() -> Rat {
    crate::exact_linalg::frac(1, 2)
}

/// A concrete member of a family: family name plus parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub family: String,
    pub params: Vec<(String, Rat)>,
    /// Classical name of the Lie algebra this member represents
    /// (empty for ad-hoc samples).
    pub label: String,
}

impl Sample {
    pub fn new(family: &str, params: &[(&str, Rat)]) -> Self {
        Sample {
            family: family.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            label: String::new(),
        }
    }

    /// Canonical identifier, e.g. `mu6[a=-1/2,b=1]`.
    pub fn id(&self) -> String {
        if self.params.is_empty() {
            self.family.clone()
        } else {
            let inner: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={}", rat_string(v)))
                .collect();
            format!("{}[{}]", self.family, inner.join(","))
        }
    }

    pub fn bracket(&self) -> Result<Bracket, CatalogError> {
        build(&self.family, &self.params)
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Errors from catalog lookup.
#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family:?} expects parameters {expected:?}, got {got:?}")]
    BadParams {
        family: String,
        expected: Vec<String>,
        got: Vec<String>,
    },
    #[error("malformed sample id {0:?}")]
    BadId(String),
}

/// Names of all families, in catalog order.
pub fn family_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.name).collect()
}

/// Parameter names a family expects.
pub fn family_params(family: &str) -> Option<&'static [&'static str]> {
    FAMILIES.iter().find(|f| f.name == family).map(|f| f.params)
}

/// Builds the bracket for a family member.
pub fn build(
    family: &str,
    params: &[(String, Rat)],
) -> Result<Bracket, CatalogError> {
    let fam = FAMILIES
        .iter()
        .find(|f| f.name == family)
        .ok_or_else(|| CatalogError::UnknownFamily(family.to_string()))?;
    let got: Vec<String> = params.iter().map(|(k, _)| k.clone()).collect();
    if got != fam.params {
        return Err(CatalogError::BadParams {
            family: family.to_string(),
            expected: fam.params.iter().map(|s| s.to_string()).collect(),
            got,
        });
    }
    let values: Vec<Rat> = params.iter().map(|(_, v)| v.clone()).collect();
    Ok((fam.build)(&values))
}

/// Parses a sample id like `mu6[a=-1/2,b=1]` back into a [`Sample`].
pub fn parse_id(id: &str) -> Result<Sample, CatalogError> {
    let (family, rest) = match id.find('[') {
        None => (id, None),
        Some(pos) => {
            let inner = id[pos..]
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| CatalogError::BadId(id.to_string()))?;
            (&id[..pos], Some(inner))
        }
    };
    let mut params = Vec::new();
    if let Some(inner) = rest {
        for piece in inner.split(',') {
            let (k, v) = piece
                .split_once('=')
                .ok_or_else(|| CatalogError::BadId(id.to_string()))?;
            let val = parse_rat(v).map_err(|_| CatalogError::BadId(id.to_string()))?;
            params.push((k.to_string(), val));
        }
    }
    let sample = Sample {
        family: family.to_string(),
        params,
        label: String::new(),
    };
    // Validate against the family signature.
    sample.bracket()?;
    Ok(sample)
}

fn labelled(family: &str, params: &[(&str, &str)], label: &str) -> Sample {
    Sample {
        family: family.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), parse_rat(v).expect("literal")))
            .collect(),
        label: label.to_string(),
    }
}

/// The default sample set: every family, with parameter choices that cover
/// all the qualitative regimes (unimodular or not, each derivation-algebra
/// dimension, every named real form).
pub fn default_samples() -> Vec<Sample> {
    vec![
        labelled("mu0", &[], "R^4 (abelian)"),
        labelled("mu1", &[], "h3 x R"),
        labelled("mu2", &[], "r2 x r2"),
        labelled("mu3", &[("a", "1"), ("b", "1")], "r2' (generic)"),
        labelled("mu3", &[("a", "0"), ("b", "2")], "r2' (a=0)"),
        labelled("mu3", &[("a", "2"), ("b", "-1")], "r2' (generic)"),
        labelled("mu3", &[("a", "0"), ("b", "1")], "r2' (abelian point)"),
        labelled("mu3", &[("a", "0"), ("b", "-1")], "r2' (bi-invariant point)"),
        labelled("mu3", &[("a", "0"), ("b", "0")], "rr3,1 x R"),
        labelled("mu4", &[], "r2' (second structure)"),
        labelled("mu5", &[], "r2' (third structure)"),
        labelled("mu6", &[("a", "0"), ("b", "0")], "r2 x R^2"),
        labelled("mu6", &[("a", "1/3"), ("b", "0")], "r4,a,a (a=1/3)"),
        labelled("mu6", &[("a", "2"), ("b", "0")], "r4,a,1 (a=1/2)"),
        labelled("mu6", &[("a", "5/2"), ("b", "0")], "r4,a,1 (a=2/5)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "0")], "r4,-1/2,-1/2"),
        labelled("mu6", &[("a", "1"), ("b", "0")], "r4,1,1"),
        labelled("mu6", &[("a", "-1/2"), ("b", "3/8")], "r4',-1/2,3/8 (J2)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "-3/8")], "r4',-1/2,3/8 (J1)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "1")], "r4',-1/2,1 (J2)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "-1")], "r4',-1/2,1 (J1)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "2")], "r4',-1/2,2 (J2)"),
        labelled("mu6", &[("a", "-1/2"), ("b", "-2")], "r4',-1/2,2 (J1)"),
        labelled("mu6", &[("a", "1"), ("b", "1")], "r4',1,1 (J2)"),
        labelled("mu6", &[("a", "1"), ("b", "-1")], "r4',1,1 (J1)"),
        labelled("mu6", &[("a", "1/2"), ("b", "1")], "r4',1/2,1 (J2)"),
        labelled("mu6", &[("a", "1/2"), ("b", "-1")], "r4',1/2,1 (J1)"),
        labelled("mu7", &[("a", "0")], "rr3',0 x R"),
        labelled("mu7", &[("a", "1/3")], "rr3',a x R (J1, a=1/3)"),
        labelled("mu7", &[("a", "2")], "rr3',a x R (J1, a=2)"),
        labelled("mu7", &[("a", "8/5")], "rr3',a x R (J1, a=8/5)"),
        labelled("mu7", &[("a", "-1/3")], "rr3',a x R (J2, a=1/3)"),
        labelled("mu7", &[("a", "-2")], "rr3',a x R (J2, a=2)"),
        labelled("mu7", &[("a", "-1/2")], "rr3',a x R (J2, a=1/2)"),
        labelled("mu8+", &[("t", "0")], "so3 x R (J(0))"),
        labelled("mu8+", &[("t", "1")], "so3 x R (J(1))"),
        labelled("mu8-", &[("t", "0")], "sl2 x R (J(0))"),
        labelled("mu8-", &[("t", "1")], "sl2 x R (J(1))"),
        labelled("mu9", &[], "r4,1"),
        labelled("mu10", &[("a", "0")], "d4 (J1)"),
        labelled("mu10", &[("a", "1")], "d4,1"),
        labelled("mu10", &[("a", "2")], "d4,1/2 (J1)"),
        labelled("mu10", &[("a", "4/3")], "d4,3/4 (J1)"),
        labelled("mu10", &[("a", "4")], "d4,3/4 (J2)"),
        labelled("mu10", &[("a", "1/2")], "d4,2 (J1)"),
        labelled("mu10", &[("a", "-1")], "d4,2 (J2)"),
        labelled("mu11+", &[], "d4,1/2 (J2)"),
        labelled("mu11-", &[], "d4,1/2 (J3)"),
        labelled("mu12", &[], "d4 (J2)"),
        labelled("mu13+", &[("a", "0")], "d4',0 (J1)"),
        labelled("mu13-", &[("a", "0")], "d4',0 (J2)"),
        labelled("mu13-", &[("a", "-1/2")], "d4',1 (J1)"),
        labelled("mu13+", &[("a", "-1/2")], "d4',1 (J2)"),
        labelled("mu13-", &[("a", "1/2")], "d4',1 (J3)"),
        labelled("mu13+", &[("a", "1/2")], "d4',1 (J4)"),
        labelled("mu13-", &[("a", "-4/3")], "d4',3/8 (J1)"),
        labelled("mu13+", &[("a", "-4/3")], "d4',3/8 (J2)"),
        labelled("mu13-", &[("a", "4/3")], "d4',3/8 (J3)"),
        labelled("mu13+", &[("a", "4/3")], "d4',3/8 (J4)"),
        labelled("mu13-", &[("a", "-1/4")], "d4',2 (J1)"),
        labelled("mu13+", &[("a", "-1/4")], "d4',2 (J2)"),
        labelled("mu13-", &[("a", "1/4")], "d4',2 (J3)"),
        labelled("mu13+", &[("a", "1/4")], "d4',2 (J4)"),
        labelled("mu14", &[], "h4"),
    ]
}
