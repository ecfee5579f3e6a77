use super::{Engine, GeneratorImage};
use crate::module::{dualize, projective_map, FreeModule, Rep};

impl Engine {
    /// The Auslander-Bridger transpose `Tr m`, a left module over the opposite algebra.
    pub fn transpose(&self, m: &Rep) -> Rep {
        let alg = m.algebra();
        let op = alg.opposite();
        let res = self.resolution(m, 1);
        let (Some(p0), Some(p1)) = (res.terms.first(), res.terms.get(1)) else {
            return Rep::zero(&op);
        };
        let f0 = FreeModule::new(&op, p0.generators.clone());
        let f1 = FreeModule::new(&op, p1.generators.clone());
        let mut images: Vec<GeneratorImage> = vec![Vec::new(); p0.generators.len()];
        for (h, terms) in res.images[1].iter().enumerate() {
            for (h0, p, c) in terms {
                images[*h0].push((h, *p, c.clone()));
            }
        }
        projective_map(&f0, &f1, &images).cokernel().0
    }

    /// `τ m = D Tr m`.
    pub fn ar_translate(&self, m: &Rep) -> Rep {
        dualize(&self.transpose(m))
    }

    /// `τ^- m = Tr D m`.
    pub fn ar_translate_inverse(&self, m: &Rep) -> Rep {
        self.transpose(&dualize(m))
    }
}
