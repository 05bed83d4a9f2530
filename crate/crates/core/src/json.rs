//! JSON forms of fields, elements, codes, forms and bases.
//!
//! A base-field element is an integer when `e = 1` (negative values are
//! reduced mod `p` on input) and an array of `e` digits otherwise. A top
//! element is an array of `m` base elements, constant term first.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldElement, FieldTower, GfError, Level};
use crate::linalg::{LinalgError, Matrix};
use crate::rankcodes::{BilinearForm, DelsarteCode, FormTag, GabidulinCode, LBasis, RankCodeError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] RankCodeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
}

type Result<T> = std::result::Result<T, JsonError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseJson {
    Int(i64),
    Digits(Vec<u32>),
}

pub type TopJson = Vec<BaseJson>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub e: usize,
    pub m: usize,
    pub base_poly: Vec<u32>,
    pub top_poly: Vec<BaseJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub n: usize,
    pub generators: Vec<Vec<TopJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelsarteJson {
    pub field: FieldJson,
    pub m: usize,
    pub n: usize,
    pub basis: Vec<Vec<Vec<BaseJson>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub tag: FormTag,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<BaseJson>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorJson {
    pub field: FieldJson,
    pub vector: Vec<TopJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub field: FieldJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<TopJson>,
    pub alpha: Vec<TopJson>,
}

// ---- fields and elements ------------------------------------------------

pub fn field_to_json(t: &FieldTower) -> FieldJson {
    FieldJson {
        p: t.p() as u64,
        e: t.e(),
        m: t.m(),
        base_poly: t.base_poly().to_vec(),
        top_poly: t.top_poly().iter().map(|&i| base_to_json(t, &t.base_from_index(i))).collect(),
    }
}

pub fn field_from_json(f: &FieldJson) -> Result<FieldTower> {
    field_from_parts(f.p, f.e, f.m, Some(&f.base_poly), Some(&f.top_poly))
}

/// Tower from optional polynomials; missing ones are chosen automatically.
pub fn field_from_parts(
    p: u64,
    e: usize,
    m: usize,
    base_poly: Option<&[u32]>,
    top_poly: Option<&[BaseJson]>,
) -> Result<FieldTower> {
    let Some(top_poly) = top_poly else {
        return Ok(FieldTower::build(p, e, m, base_poly, None)?);
    };
    let probe = FieldTower::build(p, e, 1, base_poly, None)?;
    let top: Vec<Vec<u32>> = top_poly
        .iter()
        .map(|c| base_from_json(&probe, c).map(|x| x.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    Ok(FieldTower::build(p, e, m, Some(probe.base_poly()), Some(&top))?)
}

pub fn base_to_json(t: &FieldTower, x: &FieldElement) -> BaseJson {
    if t.e() == 1 {
        BaseJson::Int(x.coeffs()[0] as i64)
    } else {
        BaseJson::Digits(x.coeffs().to_vec())
    }
}

pub fn base_from_json(t: &FieldTower, x: &BaseJson) -> Result<FieldElement> {
    match x {
        BaseJson::Int(v) if t.e() == 1 => Ok(t.from_int(Level::Base, *v)),
        BaseJson::Int(v) => Err(JsonError::Malformed(format!(
            "base element {v} must be an array of {} digits",
            t.e()
        ))),
        BaseJson::Digits(d) => Ok(t.element(Level::Base, d.clone())?),
    }
}

pub fn top_to_json(t: &FieldTower, x: &FieldElement) -> TopJson {
    t.top_coords(x)
        .iter()
        .map(|&i| base_to_json(t, &t.base_from_index(i)))
        .collect()
}

pub fn top_from_json(t: &FieldTower, x: &TopJson) -> Result<FieldElement> {
    if x.len() != t.m() {
        return Err(JsonError::Malformed(format!(
            "top element needs {} coordinates, got {}",
            t.m(),
            x.len()
        )));
    }
    let coords = x
        .iter()
        .map(|c| base_from_json(t, c).map(|b| t.base_index(&b)))
        .collect::<Result<_>>()?;
    Ok(t.top_from_coords(coords))
}

fn base_matrix_from_json(t: &FieldTower, rows: &[Vec<BaseJson>], cols: usize) -> Result<Matrix> {
    let entries = rows
        .iter()
        .map(|r| {
            if r.len() != cols {
                return Err(JsonError::Malformed(format!("row has {} entries, expected {cols}", r.len())));
            }
            r.iter().map(|x| base_from_json(t, x)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(Matrix::from_rows(Level::Base, cols, entries)?)
}

fn base_matrix_to_json(t: &FieldTower, m: &Matrix) -> Vec<Vec<BaseJson>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| base_to_json(t, x)).collect())
        .collect()
}

// ---- codes, forms, vectors, bases ---------------------------------------

pub fn code_to_json(c: &GabidulinCode) -> CodeJson {
    let t = c.tower();
    CodeJson {
        field: field_to_json(t),
        n: c.n(),
        generators: c
            .generator()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| top_to_json(t, x)).collect())
            .collect(),
    }
}

pub fn code_from_json(c: &CodeJson) -> Result<GabidulinCode> {
    let t = Arc::new(field_from_json(&c.field)?);
    let rows = c
        .generators
        .iter()
        .map(|r| {
            if r.len() != c.n {
                return Err(JsonError::Malformed(format!("generator has length {}, expected {}", r.len(), c.n)));
            }
            r.iter().map(|x| top_from_json(&t, x)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(GabidulinCode::new(t, Matrix::from_rows(Level::Top, c.n, rows)?)?)
}

pub fn delsarte_to_json(d: &DelsarteCode) -> DelsarteJson {
    let t = d.tower();
    let (m, n) = d.shape();
    DelsarteJson {
        field: field_to_json(t),
        m,
        n,
        basis: d.basis().iter().map(|b| base_matrix_to_json(t, b)).collect(),
    }
}

pub fn delsarte_from_json(d: &DelsarteJson) -> Result<DelsarteCode> {
    let t = Arc::new(field_from_json(&d.field)?);
    let basis = d
        .basis
        .iter()
        .map(|b| {
            if b.len() != d.m {
                return Err(JsonError::Malformed(format!("basis matrix has {} rows, expected {}", b.len(), d.m)));
            }
            base_matrix_from_json(&t, b, d.n)
        })
        .collect::<Result<_>>()?;
    Ok(DelsarteCode::new(t, d.m, d.n, basis)?)
}

pub fn form_to_json(t: &FieldTower, f: &BilinearForm) -> FormJson {
    FormJson {
        tag: f.tag(),
        b: (f.tag() == FormTag::Custom).then(|| base_matrix_to_json(t, f.matrix())),
    }
}

/// Form of size `n` over the base field of `t`.
pub fn form_from_json(t: &FieldTower, n: usize, f: &FormJson) -> Result<BilinearForm> {
    let b = match (&f.b, f.tag) {
        (Some(rows), FormTag::Custom) => Some(base_matrix_from_json(t, rows, n)?),
        (None, FormTag::Custom) => return Err(JsonError::Malformed("custom form needs \"B\"".into())),
        (Some(_), _) => return Err(JsonError::Malformed("\"B\" is only allowed with tag \"custom\"".into())),
        (None, _) => None,
    };
    Ok(BilinearForm::from_tag(t, f.tag, n, b)?)
}

pub fn vector_to_json(t: &FieldTower, v: &[FieldElement]) -> VectorJson {
    VectorJson {
        field: field_to_json(t),
        vector: v.iter().map(|x| top_to_json(t, x)).collect(),
    }
}

pub fn vector_from_json(v: &VectorJson) -> Result<(FieldTower, Vec<FieldElement>)> {
    let t = field_from_json(&v.field)?;
    let elems = v.vector.iter().map(|x| top_from_json(&t, x)).collect::<Result<_>>()?;
    Ok((t, elems))
}

pub fn basis_to_json(t: &FieldTower, lambda: Option<&FieldElement>, alpha: &LBasis) -> BasisJson {
    BasisJson {
        field: field_to_json(t),
        lambda: lambda.map(|l| top_to_json(t, l)),
        alpha: alpha.elements().iter().map(|x| top_to_json(t, x)).collect(),
    }
}

pub fn basis_from_json(b: &BasisJson) -> Result<(FieldTower, Option<FieldElement>, LBasis)> {
    let t = field_from_json(&b.field)?;
    let lambda = b.lambda.as_ref().map(|l| top_from_json(&t, l)).transpose()?;
    let alpha = b.alpha.iter().map(|x| top_from_json(&t, x)).collect::<Result<_>>()?;
    let alpha = LBasis::new(&t, alpha)?;
    Ok((t, lambda, alpha))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::sample;

    #[test]
    fn field_json_shape() {
        let t = FieldTower::new(3, 1, 2).unwrap();
        let v = serde_json::to_value(field_to_json(&t)).unwrap();
        assert_eq!(v, serde_json::json!({"p": 3, "e": 1, "m": 2, "base_poly": [0, 1], "top_poly": [1, 0, 1]}));
        let t3 = FieldTower::new(3, 1, 3).unwrap();
        assert_eq!(serde_json::to_value(field_to_json(&t3)).unwrap()["top_poly"], serde_json::json!([1, 2, 0, 1]));
        let t4 = FieldTower::new(2, 2, 2).unwrap();
        let j = field_to_json(&t4);
        assert_eq!(j.base_poly, vec![1, 1, 1]);
        assert_eq!(field_from_json(&j).unwrap(), t4);
    }

    #[test]
    fn leading_coefficient_may_be_omitted() {
        let j: FieldJson = serde_json::from_str(r#"{"p":3,"e":1,"m":3,"base_poly":[0],"top_poly":[1,2,0]}"#).unwrap();
        let t = field_from_json(&j).unwrap();
        assert_eq!(t.top_poly(), &[1, 2, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        let j: FieldJson = serde_json::from_str(r#"{"p":3,"e":1,"m":2,"base_poly":[0,1],"top_poly":[2,0,1]}"#).unwrap();
        assert!(matches!(field_from_json(&j), Err(JsonError::Field(GfError::ReduciblePolynomial { .. }))));
        let t = FieldTower::new(2, 2, 2).unwrap();
        assert!(base_from_json(&t, &BaseJson::Int(1)).is_err());
        assert!(top_from_json(&t, &vec![BaseJson::Digits(vec![1, 0])]).is_err());
        let f = FormJson { tag: FormTag::Custom, b: None };
        assert!(form_from_json(&t, 2, &f).is_err());
    }

    #[test]
    fn negative_entries_are_reduced() {
        let t = FieldTower::new(5, 1, 1).unwrap();
        assert_eq!(base_from_json(&t, &BaseJson::Int(-2)).unwrap(), t.from_int(Level::Base, 3));
    }

    fn towers() -> Vec<Arc<FieldTower>> {
        vec![
            Arc::new(FieldTower::new(3, 1, 2).unwrap()),
            Arc::new(FieldTower::new(2, 2, 3).unwrap()),
            Arc::new(FieldTower::new(5, 1, 3).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn round_trips(which in 0usize..3, seed in any::<u64>()) {
            let t = &towers()[which];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=t.m());
            let k = rng.gen_range(0..=n);
            let code = sample::code(&mut rng, t, n, k);
            let text = serde_json::to_string(&code_to_json(&code)).unwrap();
            let back = code_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(back.generator(), code.generator());
            prop_assert_eq!(serde_json::to_string(&code_to_json(&back)).unwrap(), text);

            let alpha = sample::basis(&mut rng, t);
            let d = code.to_delsarte(&alpha).unwrap();
            let text = serde_json::to_string(&delsarte_to_json(&d)).unwrap();
            let back = delsarte_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(back.basis(), d.basis());

            let lambda = sample::nonzero_element(&mut rng, t, Level::Top);
            let text = serde_json::to_string(&basis_to_json(t, Some(&lambda), &alpha)).unwrap();
            let (_, l2, a2) = basis_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(l2, Some(lambda));
            prop_assert_eq!(a2, alpha);

            let form = BilinearForm::custom(t, sample::invertible_symmetric(&mut rng, t, n)).unwrap();
            let text = serde_json::to_string(&form_to_json(t, &form)).unwrap();
            let back = form_from_json(t, n, &serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(back, form);
        }
    }
}
