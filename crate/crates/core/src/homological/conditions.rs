//! Decision procedures for the injective-coresolution conditions on an algebra
//! and for the standard vanishing facts that follow from them.

use super::{describe, is_injective, is_projective, Engine, HomDim, Side};
use crate::algebra::Algebra;
use crate::module::{dual_regular, hom_basis, regular, simple, Named};
use crate::verdict::{Outcome, Verdict, Witness};

fn witness(name: impl Into<String>, rep: &crate::module::Rep) -> Witness {
    Witness { name: name.into(), dims: rep.dims().to_vec() }
}

fn simple_named(alg: &Algebra, v: usize) -> Named {
    Named::simple(alg, v)
}

impl Engine {
    /// Checks `pd I^i ≤ bound(i)` for `i < terms` on the coresolution of the
    /// regular module on `side`, failing with the offending indecomposable injective.
    fn coresolution_pd_bound(
        &self,
        verdict: &mut Verdict,
        alg: &Algebra,
        side: Side,
        terms: usize,
        bound: impl Fn(usize) -> usize,
    ) {
        let a = side.algebra(alg);
        let cores = self.coresolution(&regular(&a), terms.saturating_sub(1));
        let mut pds = Vec::new();
        for i in 0..terms {
            let term = cores.term(&a, i);
            let pd = self.pd(&term);
            pds.push(pd);
            match pd.at_most(bound(i)) {
                Some(true) => {}
                Some(false) => {
                    let mult = cores.multiplicities.get(i).cloned().unwrap_or_default();
                    let bad = mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, _)| v).find(|&v| {
                        self.pd(&crate::module::injective(&a, v)).at_most(bound(i)) != Some(true)
                    });
                    let name = match bad {
                        Some(v) => format!("I({})", a.vertex_label(v)),
                        None => format!("I^{i}(Lambda)"),
                    };
                    let rep = bad.map_or(term.clone(), |v| crate::module::injective(&a, v));
                    verdict.fail(witness(name, &rep), format!("pd I^{i}(Lambda) = {pd} exceeds {}", bound(i)));
                }
                None => verdict.undecided(format!("pd I^{i}(Lambda) not decided within cutoff")),
            }
        }
        verdict.record("pd I^i(Lambda)", pds);
        if side == Side::Right {
            verdict.note("computed over the opposite algebra");
        }
    }

    /// `(m,n)`-condition: `pd I^i(Λ) ≤ m - 1` for `0 ≤ i ≤ n - 1`, flat dimension read as `pd`.
    pub fn check_mn_condition(&self, alg: &Algebra, m: usize, n: usize, side: Side) -> Verdict {
        let check = format!("({m},{n})-condition");
        if m == 0 {
            return Verdict::premise_not_met(check, "m must be positive");
        }
        let mut v = Verdict::new(check);
        self.coresolution_pd_bound(&mut v, alg, side, n, |_| m - 1);
        v.note("flat dimension computed as projective dimension");
        v
    }

    /// `n`-Gorenstein: `pd I^i(Λ) ≤ i` for `0 ≤ i ≤ n - 1`.
    pub fn check_gorenstein(&self, alg: &Algebra, n: usize) -> Verdict {
        let mut v = Verdict::new(format!("{n}-Gorenstein"));
        self.coresolution_pd_bound(&mut v, alg, Side::Left, n, |i| i);
        v
    }

    /// Auslander-Gorenstein: finite self-injective dimension on both sides and
    /// `pd I^i(Λ) ≤ i` for every `i`.
    pub fn check_auslander_gorenstein(&self, alg: &Algebra) -> Verdict {
        let mut v = Verdict::new("Auslander-Gorenstein");
        let left = self.self_injective_dim(alg, Side::Left);
        let right = self.self_injective_dim(alg, Side::Right);
        v.record("id Lambda (left, right)", [left, right]);
        match (left.finite(), right.finite()) {
            (Some(d), Some(_)) => self.coresolution_pd_bound(&mut v, alg, Side::Left, d + 1, |i| i),
            _ if matches!(left, HomDim::BeyondCutoff(_)) || matches!(right, HomDim::BeyondCutoff(_)) => {
                v.undecided("self-injective dimension not decided within cutoff")
            }
            _ => {
                let reg = Named::regular(alg);
                v.fail(Witness::from(&reg), "self-injective dimension is infinite")
            }
        }
        v
    }

    /// `n`-Auslander: `gl.dim ≤ n + 1` and `I^0(Λ), ..., I^n(Λ)` projective.
    pub fn check_n_auslander(&self, alg: &Algebra, n: usize) -> Verdict {
        let mut v = Verdict::new(format!("{n}-Auslander"));
        let gl = self.gldim(alg);
        v.record("gl.dim", [gl]);
        match gl.at_most(n + 1) {
            Some(true) => {}
            Some(false) => {
                let bad = (0..alg.num_vertices())
                    .find(|&s| self.pd(&simple(alg, s)).at_most(n + 1) == Some(false))
                    .expect("some simple realises the global dimension");
                v.fail(Witness::from(&simple_named(alg, bad)), format!("gl.dim {gl} exceeds {}", n + 1));
            }
            None => v.undecided("global dimension not decided within cutoff"),
        }
        let cores = self.coresolution(&regular(alg), n);
        let mut flags = Vec::new();
        for i in 0..=n {
            let term = cores.term(alg, i);
            let proj = is_projective(&term);
            flags.push(usize::from(proj));
            if !proj {
                let mult = &cores.multiplicities[i];
                let bad = (0..alg.num_vertices())
                    .find(|&u| mult[u] > 0 && !is_projective(&crate::module::injective(alg, u)))
                    .expect("a non-projective summand");
                v.fail(Witness::from(&Named::injective(alg, bad)), format!("I^{i}(Lambda) is not projective"));
            }
        }
        v.record("I^i(Lambda) projective", flags);
        v
    }

    /// Whether `alg` is `(n-1)`-Auslander with `gl.dim = n ≥ 2`; the error explains why not.
    pub fn auslander_premise(&self, alg: &Algebra, n: usize) -> Result<(), String> {
        if n < 2 {
            return Err(format!("n = {n} is below 2"));
        }
        let gl = self.gldim(alg);
        if !gl.is(n) {
            return Err(format!("gl.dim is {gl}, not {n}"));
        }
        let v = self.check_n_auslander(alg, n - 1);
        if v.outcome != Outcome::Pass {
            return Err(format!("not {}-Auslander", n - 1));
        }
        Ok(())
    }

    /// For Auslander-Gorenstein algebras with `id Λ = id Λ^op = n`, the terms
    /// `I^0 ⊕ ... ⊕ I^{n-1}` and `I^n` of the coresolution of `Λ` share no summand.
    pub fn no_common_summand_check(&self, alg: &Algebra) -> Verdict {
        let check = "no common injective summand";
        let ag = self.check_auslander_gorenstein(alg);
        if ag.outcome != Outcome::Pass {
            return Verdict::premise_not_met(check, "algebra is not Auslander-Gorenstein");
        }
        let left = self.self_injective_dim(alg, Side::Left);
        let right = self.self_injective_dim(alg, Side::Right);
        let Some(n) = left.finite().filter(|_| left == right) else {
            return Verdict::premise_not_met(check, "left and right self-injective dimensions differ");
        };
        let mut v = Verdict::new(check);
        v.record("n", [n]);
        if n == 0 {
            v.note("n = 0: nothing to compare");
            return v;
        }
        let cores = self.coresolution(&regular(alg), n);
        let low: Vec<bool> = (0..alg.num_vertices()).map(|u| (0..n).any(|i| cores.multiplicities[i][u] > 0)).collect();
        let top = &cores.multiplicities[n];
        for u in 0..alg.num_vertices() {
            if low[u] && top[u] > 0 {
                v.fail(Witness::from(&Named::injective(alg, u)), "summand of both I^{<n}(Lambda) and I^n(Lambda)");
            }
        }
        v
    }

    /// If `pd m = n` is finite then `Ext^n(m, Λ) ≠ 0`.
    pub fn check_top_ext_nonvanishing(&self, m: &Named) -> Verdict {
        let check = "top Ext against Lambda nonvanishing";
        let pd = self.pd(&m.rep);
        let Some(n) = pd.finite() else {
            return Verdict::premise_not_met(check, format!("pd {} is {pd}", m.name));
        };
        let mut v = Verdict::new(check);
        let e = self.ext(&m.rep, &regular(m.rep.algebra()), n);
        v.record(format!("pd {}", m.name), [n]);
        v.record(format!("dim Ext^{n}({}, Lambda)", m.name), [e]);
        if e == 0 {
            v.fail(Witness::from(m), "top Ext vanishes");
        }
        v
    }

    /// For Auslander-Gorenstein algebras with `id Λ = id Λ^op = n`, every
    /// simple of projective dimension `n` embeds in `I^n(Λ)` and in no earlier term.
    pub fn check_simple_socle_placement(&self, alg: &Algebra) -> Verdict {
        let check = "simple socle placement";
        if self.check_auslander_gorenstein(alg).outcome != Outcome::Pass {
            return Verdict::premise_not_met(check, "algebra is not Auslander-Gorenstein");
        }
        let left = self.self_injective_dim(alg, Side::Left);
        let Some(n) = left.finite().filter(|_| left == self.self_injective_dim(alg, Side::Right)) else {
            return Verdict::premise_not_met(check, "left and right self-injective dimensions differ");
        };
        let mut v = Verdict::new(check);
        let cores = self.coresolution(&regular(alg), n);
        for s in 0..alg.num_vertices() {
            let sn = simple_named(alg, s);
            if !self.pd(&sn.rep).is(n) {
                continue;
            }
            let homs: Vec<usize> = (0..=n).map(|i| hom_basis(&sn.rep, &cores.term(alg, i)).len()).collect();
            v.record(format!("dim Hom({}, I^i(Lambda))", sn.name), homs.clone());
            if homs[n] == 0 || homs[..n].iter().any(|&h| h != 0) {
                v.fail(Witness::from(&sn), format!("{} is not placed in I^{n}(Lambda) alone", sn.name));
            }
        }
        v
    }

    /// For `(n-1)`-Auslander algebras of `gl.dim n`: no injective simple has
    /// `1 ≤ pd ≤ n-1`, no projective simple has `1 ≤ id ≤ n-1`, and a projective
    /// simple `S` has `Hom(I^0(Λ), S) ≠ 0` iff `S` is injective, `= 0` iff `id S = n`.
    pub fn check_injective_simple_band(&self, alg: &Algebra, n: usize) -> Verdict {
        let check = "injective simples avoid the middle band";
        if let Err(why) = self.auslander_premise(alg, n) {
            return Verdict::premise_not_met(check, why);
        }
        let mut v = Verdict::new(check);
        let i0 = self.coresolution(&regular(alg), 0).term(alg, 0);
        let band = |d: HomDim| d.finite().is_some_and(|d| (1..n).contains(&d));
        for s in 0..alg.num_vertices() {
            let sn = simple_named(alg, s);
            let (pd, id) = (self.pd(&sn.rep), self.id(&sn.rep));
            let (inj, proj) = (is_injective(&sn.rep), is_projective(&sn.rep));
            if inj && band(pd) {
                v.fail(Witness::from(&sn), format!("{} is injective with pd {pd}", sn.name));
            }
            if proj && band(id) {
                v.fail(Witness::from(&sn), format!("{} is projective with id {id}", sn.name));
            }
            if proj {
                let h = hom_basis(&i0, &sn.rep).len();
                v.record(format!("dim Hom(I^0(Lambda), {})", sn.name), [h]);
                if (h != 0) != inj || (h == 0) != id.is(n) {
                    v.fail(Witness::from(&sn), format!("Hom(I^0(Lambda), {}) disagrees with its injectivity", sn.name));
                }
            }
        }
        v
    }

    /// If `id Λ = n ≥ 1` then `Ext^n(DΛ, Λ) ≠ 0`, so no maximal `n`-orthogonal subcategory exists.
    pub fn check_cogenerator_ext(&self, alg: &Algebra) -> Verdict {
        let check = "Ext^n(DLambda, Lambda) nonvanishing";
        let id = self.self_injective_dim(alg, Side::Left);
        let n = match id.finite() {
            Some(n) if n >= 1 => n,
            _ => return Verdict::premise_not_met(check, format!("id Lambda is {id}")),
        };
        let mut v = Verdict::new(check);
        let e = self.ext(&dual_regular(alg), &regular(alg), n);
        v.record("id Lambda", [n]);
        v.record(format!("dim Ext^{n}(DLambda, Lambda)"), [e]);
        if e == 0 {
            v.fail(Witness::from(&Named::dual_regular(alg)), "Ext vanishes in the top degree");
        } else {
            v.note(format!("no maximal {n}-orthogonal subcategory exists"));
        }
        v
    }

    /// The cokernel `Z` of a minimal left `add(generators)`-approximation of `x`
    /// satisfies `Ext^1(Z, generators) = 0` when `add(generators)` is extension closed.
    pub fn check_approximation_cokernel(&self, x: &Named, generators: &[Named]) -> Result<Verdict, crate::module::ModuleError> {
        let mut v = Verdict::new("approximation cokernel is Ext^1-orthogonal");
        let reps: Vec<_> = generators.iter().map(|g| g.rep.clone()).collect();
        let approx = self.minimal_left_approximation(&x.rep, &reps)?;
        let (z, _) = approx.map.cokernel();
        v.record("dims Z", [z.dims().to_vec()]);
        for g in generators {
            let e = self.ext(&z, &g.rep, 1);
            if e != 0 {
                v.fail(Witness::from(g), format!("Ext^1(Z, {}) = {e}", g.name));
            }
        }
        v.note(format!("cokernel of the approximation of {} is {}", x.name, describe(&z)));
        Ok(v)
    }
}
