use serde::{Deserialize, Serialize};

use super::resolution::{hom_from_term, pullback_matrix};
use super::Engine;
use crate::linalg::Matrix;
use crate::module::{hom_basis, Rep};

/// `dim Ext^i(M, N)` for `i = 0..=max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTable {
    pub values: Vec<usize>,
}

impl ExtTable {
    pub fn get(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Whether `Ext^i` vanishes for every `i` in the range.
    pub fn vanishes(&self, range: std::ops::RangeInclusive<usize>) -> bool {
        range.into_iter().all(|i| self.get(i) == 0)
    }
}

impl Engine {
    /// Ext through the projective resolution of `m`.
    pub fn ext_dims(&self, m: &Rep, n: &Rep, max: usize) -> ExtTable {
        let res = self.resolution(m, max + 1);
        let ranks: Vec<usize> = (0..=max + 1).map(|k| pullback_matrix(&res, k, n).rank()).collect();
        let values = (0..=max).map(|k| hom_from_term(&res, k, n) - ranks[k + 1] - ranks[k]).collect();
        ExtTable { values }
    }

    pub fn ext(&self, m: &Rep, n: &Rep, i: usize) -> usize {
        self.ext_dims(m, n, i).get(i)
    }

    /// Ext through the injective coresolution of `n`; an independent route used for cross-checks.
    pub fn ext_via_injective(&self, m: &Rep, n: &Rep, max: usize) -> ExtTable {
        let alg = m.algebra();
        let cores = self.coresolution(n, max + 1);
        let bases: Vec<_> = (0..=max + 1).map(|k| hom_basis(m, &cores.term(alg, k))).collect();
        // rank of Hom(m, I^{k-1}) -> Hom(m, I^k)
        let rank_into = |k: usize| -> usize {
            if k == 0 || bases[k - 1].is_empty() || k >= cores.maps.len() {
                return 0;
            }
            let columns: Vec<_> = bases[k - 1].iter().map(|f| cores.maps[k].compose(f).flatten()).collect();
            let rows = columns[0].len();
            Matrix::from_columns(m.field(), rows, &columns).rank()
        };
        let values = (0..=max).map(|k| bases[k].len() - rank_into(k + 1) - rank_into(k)).collect();
        ExtTable { values }
    }
}
