use super::free::{injective, projective};
use super::{ModuleError, Rep};
use crate::algebra::Algebra;

/// Uniserial: every radical layer is simple or zero.
pub fn is_uniserial(m: &Rep) -> bool {
    let mut current = m.clone();
    while !current.is_zero() {
        if current.top_dims().iter().sum::<usize>() != 1 {
            return false;
        }
        current = current.radical().0;
    }
    true
}

/// All indecomposables of a Nakayama algebra: the nonzero quotients
/// `P(i)/rad^k P(i)`, listed vertex by vertex starting with `P(i)` itself.
pub fn nakayama_indecomposables(algebra: &Algebra) -> Result<Vec<Rep>, ModuleError> {
    let n = algebra.num_vertices();
    for v in 0..n {
        if !is_uniserial(&projective(algebra, v)) {
            return Err(ModuleError::NotNakayama(format!("P({}) is not uniserial", algebra.vertex_label(v))));
        }
        if !is_uniserial(&injective(algebra, v)) {
            return Err(ModuleError::NotNakayama(format!("I({}) is not uniserial", algebra.vertex_label(v))));
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        let p = projective(algebra, v);
        let length = p.total_dim();
        for k in (1..=length).rev() {
            let (q, _) = p.quotient(&p.radical_power_spaces(k));
            out.push(q);
        }
    }
    Ok(out)
}
