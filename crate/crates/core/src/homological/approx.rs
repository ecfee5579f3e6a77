use super::Engine;
use crate::linalg::{Matrix, Scalar};
use crate::module::{direct_sum, dualize, dualize_map, hom_basis, ModuleError, ModuleMap, Rep};

/// A minimal approximation together with the indecomposable summands of its
/// `add`-side, listed with repetition.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    pub summands: Vec<Rep>,
}

impl Approximation {
    /// The module on the `add`-side (target of a left, source of a right approximation).
    pub fn add_side(&self, left: bool) -> &Rep {
        if left {
            &self.map.target
        } else {
            &self.map.source
        }
    }
}

fn rank_of(field: crate::linalg::FieldSpec, rows: usize, columns: &[&Vec<Scalar>]) -> usize {
    if columns.is_empty() || rows == 0 {
        return 0;
    }
    let owned: Vec<Vec<Scalar>> = columns.iter().map(|c| (*c).clone()).collect();
    Matrix::from_columns(field, rows, &owned).rank()
}

impl Engine {
    /// Minimal left `add(generators)`-approximation `x -> C`.
    pub fn minimal_left_approximation(&self, x: &Rep, generators: &[Rep]) -> Result<Approximation, ModuleError> {
        let alg = x.algebra();
        let field = x.field();
        let blocks = self.distinct_summands(generators)?;
        let homs: Vec<Vec<ModuleMap>> = blocks.iter().map(|g| hom_basis(x, g)).collect();
        let candidates: Vec<(usize, ModuleMap)> =
            homs.iter().enumerate().flat_map(|(k, hs)| hs.iter().map(move |h| (k, h.clone()))).collect();
        // images[c][j]: flattened composites ψ∘h_c for ψ in Hom(G_k, G_j)
        let images: Vec<Vec<Vec<Vec<Scalar>>>> = candidates
            .iter()
            .map(|(k, h)| {
                blocks
                    .iter()
                    .map(|gj| hom_basis(&blocks[*k], gj).iter().map(|psi| psi.compose(h).flatten()).collect())
                    .collect()
            })
            .collect();
        let rows: Vec<usize> =
            blocks.iter().map(|g| (0..alg.num_vertices()).map(|v| g.dim(v) * x.dim(v)).sum()).collect();
        let mut kept = vec![true; candidates.len()];
        let spans = |kept: &[bool]| {
            (0..blocks.len()).all(|j| {
                let cols: Vec<&Vec<Scalar>> =
                    (0..candidates.len()).filter(|&c| kept[c]).flat_map(|c| images[c][j].iter()).collect();
                rank_of(field, rows[j], &cols) == homs[j].len()
            })
        };
        for c in (0..candidates.len()).rev() {
            kept[c] = false;
            if !spans(&kept) {
                kept[c] = true;
            }
        }
        let chosen: Vec<&(usize, ModuleMap)> = candidates.iter().zip(&kept).filter(|(_, &k)| k).map(|(c, _)| c).collect();
        let summands: Vec<Rep> = chosen.iter().map(|(k, _)| blocks[*k].clone()).collect();
        let sum = direct_sum(alg, &summands);
        let mut map = ModuleMap::zero(x, &sum.module);
        for ((_, h), inj) in chosen.iter().zip(&sum.injections) {
            map = map.add(&inj.compose(h));
        }
        Ok(Approximation { map, summands })
    }

    /// Minimal right `add(generators)`-approximation `C -> x`, dual to the left case.
    pub fn minimal_right_approximation(&self, x: &Rep, generators: &[Rep]) -> Result<Approximation, ModuleError> {
        let duals: Vec<Rep> = generators.iter().map(dualize).collect();
        let left = self.minimal_left_approximation(&dualize(x), &duals)?;
        Ok(Approximation { map: dualize_map(&left.map), summands: left.summands.iter().map(dualize).collect() })
    }
}
