use std::collections::BTreeMap;

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::geometry::{integrate, model_components, taut_classes_on_component, CohClass, ModelSpace};
use crate::symfunc::{chern_to_ch, chern_to_segre, ClassExpr, ClassKind};

/// Disjoint union of `m` projective lines with a line bundle of degree `d_i`
/// on each. Arithmetic genus `1 - m`, total degree `Σ d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineUnion {
    degrees: Vec<i64>,
}

impl LineUnion {
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSpace("a union needs at least one line".into()));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn lines(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn genus(&self) -> i64 {
        1 - self.degrees.len() as i64
    }

    pub fn components(&self, k: u32) -> Vec<ModelSpace> {
        model_components(&self.degrees, k)
    }

    pub fn eval<S: Scalar>(&self, expr: &ClassExpr<S>, k: u32) -> Result<S> {
        eval_expr_on_union(expr, &self.degrees, k)
    }
}

/// Substitutes the component's tautological classes into `expr`.
pub fn instantiate<S: Scalar>(expr: &ClassExpr<S>, space: &ModelSpace) -> Result<CohClass<S>> {
    let dim = space.dimension();
    let chern = taut_classes_on_component::<S>(space, dim)?;
    let segre = if expr.uses_kind(ClassKind::Segre) {
        Some(chern_to_segre(&chern)?)
    } else {
        None
    };
    let ch = if expr.uses_kind(ClassKind::Ch) {
        Some(chern_to_ch(&chern, S::from_int(dim as i64))?)
    } else {
        None
    };
    Ok(expr.eval(|g| {
        let i = g.degree as usize;
        match g.kind {
            ClassKind::Chern => chern.get(i),
            ClassKind::Segre => segre.as_ref().expect("segre vector").get(i),
            ClassKind::Ch => ch.as_ref().expect("ch vector").get(i),
        }
    }))
}

/// `∫ expr` over `(P^1 ⊔ ... ⊔ P^1)^{[k]}`, summed over all components.
///
/// Components that differ by permuting lines are integrated once; factors
/// with no points are dropped.
pub fn eval_expr_on_union<S: Scalar>(expr: &ClassExpr<S>, degrees: &[i64], k: u32) -> Result<S> {
    if degrees.is_empty() {
        return Err(Error::InvalidSpace("a union needs at least one line".into()));
    }
    if !expr.has_weight(k) {
        return Err(Error::WeightMismatch {
            expected: k,
            found: expr.weight(),
        });
    }
    let mut orbits: BTreeMap<Vec<(u32, i64)>, u64> = BTreeMap::new();
    for space in model_components(degrees, k) {
        let mut key: Vec<(u32, i64)> = space
            .factor_dims()
            .iter()
            .zip(space.factor_degrees())
            .filter(|(&ki, _)| ki > 0)
            .map(|(&ki, &di)| (ki, di))
            .collect();
        key.sort_unstable();
        *orbits.entry(key).or_default() += 1;
    }
    let mut total = S::zero();
    for (key, count) in orbits {
        let space = if key.is_empty() {
            ModelSpace::new(vec![0], vec![0])?
        } else {
            ModelSpace::new(key.iter().map(|p| p.0).collect(), key.iter().map(|p| p.1).collect())?
        };
        let value = integrate(&instantiate(expr, &space)?, &space);
        total += &(value * S::from_int(count as i64));
    }
    Ok(total)
}
