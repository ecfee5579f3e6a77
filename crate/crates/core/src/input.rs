//! Module and subcategory blocks of an input document, and the symbolic
//! module expressions used on the command line.
//!
//! ```text
//! module M
//! dim 2 1
//! dim 3 1
//! map b2 1
//! subcategory C generators = Lambda + S(3) ambient = nakayama
//! ```
//!
//! Expressions are sums (`+` or `⊕`) of `P(v)`, `I(v)`, `S(v)`, `Lambda`,
//! `DLambda`, `P(v)/rad^k` and declared module names, each optionally raised
//! to a power `X^k` meaning `k` copies.

use thiserror::Error;

use crate::algebra::{parse_algebra_with_field, Algebra, AlgebraError, Pos};
use crate::linalg::{FieldSpec, Matrix};
use crate::module::{
    direct_sum, dual_regular, injective, projective, regular, simple, ModuleError, Named, Rep,
};
use crate::orthogonal::{nakayama_ambient, standard_ambient, Provenance, SubcategorySpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: unknown vertex `{label}`")]
    UnknownVertex { pos: Pos, label: String },
    #[error("{pos}: unknown arrow `{label}`")]
    UnknownArrow { pos: Pos, label: String },
    #[error("{pos}: unknown module `{name}`")]
    UnknownModule { pos: Pos, name: String },
    #[error("{pos}: {source}")]
    Module { pos: Pos, source: ModuleError },
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> InputError {
    InputError::Syntax { pos: Pos { line, col }, msg: msg.into() }
}

#[derive(Clone, Debug)]
pub enum AmbientDecl {
    Nakayama,
    Standard,
    List(Vec<Named>),
}

#[derive(Clone, Debug)]
pub struct SubcategoryDecl {
    pub name: String,
    pub generators: Vec<Named>,
    pub ambient: AmbientDecl,
    pub pos: Pos,
}

impl SubcategoryDecl {
    /// Resolves the ambient declaration against the algebra.
    pub fn to_subcategory(&self, alg: &Algebra) -> Result<SubcategorySpec, InputError> {
        let (ambient, provenance) = match &self.ambient {
            AmbientDecl::Nakayama => (
                nakayama_ambient(alg).map_err(|e| match e {
                    crate::homological::AnalysisError::Module(source) => InputError::Module { pos: self.pos, source },
                    other => syntax(self.pos.line, self.pos.col, other.to_string()),
                })?,
                Provenance::NakayamaEnumerated,
            ),
            AmbientDecl::Standard => (standard_ambient(alg), Provenance::UserSupplied),
            AmbientDecl::List(list) => (list.clone(), Provenance::UserSupplied),
        };
        Ok(SubcategorySpec::new(self.name.clone(), self.generators.clone(), ambient, provenance))
    }
}

#[derive(Clone, Debug)]
pub struct Document {
    pub algebra: Algebra,
    pub modules: Vec<Named>,
    pub subcategories: Vec<SubcategoryDecl>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, InputError> {
        Document::parse_with_field(text, None)
    }

    pub fn parse_with_field(text: &str, field: Option<FieldSpec>) -> Result<Document, InputError> {
        let algebra = parse_algebra_with_field(text, field)?;
        let mut doc = Document { algebra, modules: Vec::new(), subcategories: Vec::new() };
        let mut block: Option<ModuleBlock> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            let indent = content.len() - trimmed.len();
            let Some(keyword) = trimmed.split_whitespace().next() else { continue };
            let rest = &trimmed[keyword.len()..];
            let rest_col = indent + keyword.len() + 1;
            match keyword {
                "module" => {
                    if let Some(b) = block.take() {
                        doc.modules.push(b.finish(&doc.algebra)?);
                    }
                    let name = rest.trim();
                    if name.is_empty() || name.contains(char::is_whitespace) {
                        return Err(syntax(line, rest_col, "expected `module <name>`"));
                    }
                    if doc.modules.iter().any(|m| m.name == name) {
                        return Err(syntax(line, rest_col, format!("module `{name}` declared twice")));
                    }
                    block = Some(ModuleBlock::new(&doc.algebra, name, Pos { line, col: indent + 1 }));
                }
                "dim" | "map" => {
                    let Some(b) = block.as_mut() else {
                        return Err(syntax(line, indent + 1, format!("`{keyword}` outside a module block")));
                    };
                    if keyword == "dim" {
                        b.dim(&doc.algebra, rest, line, rest_col)?;
                    } else {
                        b.map(&doc.algebra, rest, line, rest_col)?;
                    }
                }
                "subcategory" => {
                    if let Some(b) = block.take() {
                        doc.modules.push(b.finish(&doc.algebra)?);
                    }
                    let decl = doc.subcategory(rest, line, rest_col)?;
                    doc.subcategories.push(decl);
                }
                _ => {
                    if let Some(b) = block.take() {
                        doc.modules.push(b.finish(&doc.algebra)?);
                    }
                }
            }
        }
        if let Some(b) = block.take() {
            doc.modules.push(b.finish(&doc.algebra)?);
        }
        Ok(doc)
    }

    fn subcategory(&self, rest: &str, line: usize, col: usize) -> Result<SubcategoryDecl, InputError> {
        let usage = "expected `subcategory <name> generators = <expr> [ambient = nakayama | standard | <expr>]`";
        let trimmed = rest.trim_start();
        let lead = rest.len() - trimmed.len();
        let name = trimmed.split_whitespace().next().ok_or_else(|| syntax(line, col, usage))?;
        let after_name = &trimmed[name.len()..];
        let Some(g) = after_name.find("generators") else { return Err(syntax(line, col, usage)) };
        let gen_start = lead + name.len() + g + "generators".len();
        let body = &rest[gen_start..];
        let eq = body.trim_start();
        if !eq.starts_with('=') {
            return Err(syntax(line, col + gen_start, usage));
        }
        let expr_start = gen_start + (body.len() - eq.len()) + 1;
        let tail = &rest[expr_start..];
        let (gen_text, amb) = match tail.find("ambient") {
            Some(a) => (&tail[..a], Some(a)),
            None => (tail, None),
        };
        let generators = self.expression_terms(gen_text, line, col + expr_start)?;
        let ambient = match amb {
            None => AmbientDecl::Standard,
            Some(a) => {
                let after = &tail[a + "ambient".len()..];
                let t = after.trim_start();
                if !t.starts_with('=') {
                    return Err(syntax(line, col + expr_start + a, usage));
                }
                let list = &t[1..];
                let list_col = col + expr_start + a + "ambient".len() + (after.len() - t.len()) + 1;
                match list.trim() {
                    "nakayama" => AmbientDecl::Nakayama,
                    "standard" => AmbientDecl::Standard,
                    _ => AmbientDecl::List(self.expression_terms(list, line, list_col)?),
                }
            }
        };
        Ok(SubcategoryDecl { name: name.to_string(), generators, ambient, pos: Pos { line, col } })
    }

    /// Evaluates an expression to a single module named by its normalised text.
    pub fn module(&self, text: &str) -> Result<Named, InputError> {
        let terms = self.expression_terms(text, 1, 1)?;
        if terms.len() == 1 {
            return Ok(terms.into_iter().next().expect("one term"));
        }
        let name = terms.iter().map(|t| t.name.as_str()).collect::<Vec<_>>().join(" + ");
        let reps: Vec<Rep> = terms.into_iter().map(|t| t.rep).collect();
        Ok(Named::new(name, direct_sum(&self.algebra, &reps).module))
    }

    pub fn subcategory_named(&self, name: &str) -> Option<&SubcategoryDecl> {
        self.subcategories.iter().find(|s| s.name == name)
    }

    /// The summands of an expression, powers expanded to repeated terms.
    pub fn expression_terms(&self, text: &str, line: usize, col: usize) -> Result<Vec<Named>, InputError> {
        let mut out = Vec::new();
        let mut offset = 0;
        for piece in text.split(['+', '⊕']) {
            let t = piece.trim();
            let pcol = col + offset + (piece.len() - piece.trim_start().len());
            offset += piece.len() + 1;
            if t.is_empty() {
                return Err(syntax(line, pcol, "empty summand"));
            }
            let (atom, power) = split_power(t).ok_or_else(|| syntax(line, pcol, format!("bad exponent in `{t}`")))?;
            let named = self.atom(atom, line, pcol)?;
            for _ in 0..power {
                out.push(named.clone());
            }
        }
        Ok(out)
    }

    fn atom(&self, t: &str, line: usize, col: usize) -> Result<Named, InputError> {
        let alg = &self.algebra;
        match t {
            "Lambda" | "Λ" => return Ok(Named::new("Lambda", regular(alg))),
            "DLambda" | "DΛ" => return Ok(Named::new("DLambda", dual_regular(alg))),
            _ => {}
        }
        if let Some((head, rad)) = t.split_once("/rad^") {
            let k: usize = rad.trim().parse().map_err(|_| syntax(line, col, format!("bad radical power in `{t}`")))?;
            let v = self.standard_vertex(head.trim(), 'P', line, col)?;
            let p = projective(alg, v);
            let q = p.quotient(&p.radical_power_spaces(k)).0;
            return Ok(Named::new(format!("P({})/rad^{k}", alg.vertex_label(v)), q));
        }
        for kind in ['P', 'I', 'S'] {
            if t.starts_with(kind) && t[1..].trim_start().starts_with('(') {
                let v = self.standard_vertex(t, kind, line, col)?;
                let rep = match kind {
                    'P' => projective(alg, v),
                    'I' => injective(alg, v),
                    _ => simple(alg, v),
                };
                return Ok(Named::new(format!("{kind}({})", alg.vertex_label(v)), rep));
            }
        }
        self.modules
            .iter()
            .find(|m| m.name == t)
            .cloned()
            .ok_or_else(|| InputError::UnknownModule { pos: Pos { line, col }, name: t.to_string() })
    }

    fn standard_vertex(&self, t: &str, kind: char, line: usize, col: usize) -> Result<usize, InputError> {
        let bad = || syntax(line, col, format!("expected `{kind}(<vertex>)`, found `{t}`"));
        let inner = t
            .strip_prefix(kind)
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('('))
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?
            .trim();
        self.algebra
            .vertex_index(inner)
            .ok_or_else(|| InputError::UnknownVertex { pos: Pos { line, col }, label: inner.to_string() })
    }
}

fn split_power(t: &str) -> Option<(&str, usize)> {
    match t.rsplit_once('^') {
        Some((base, exp)) if !base.ends_with("/rad") => {
            let k: usize = exp.trim().parse().ok()?;
            Some((base.trim(), k))
        }
        _ => Some((t, 1)),
    }
}

struct ModuleBlock {
    name: String,
    pos: Pos,
    dims: Vec<Option<usize>>,
    maps: Vec<Option<(Vec<String>, Pos)>>,
}

impl ModuleBlock {
    fn new(alg: &Algebra, name: &str, pos: Pos) -> ModuleBlock {
        ModuleBlock { name: name.to_string(), pos, dims: vec![None; alg.num_vertices()], maps: vec![None; alg.arrows().len()] }
    }

    fn dim(&mut self, alg: &Algebra, rest: &str, line: usize, col: usize) -> Result<(), InputError> {
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [label, d] = parts[..] else { return Err(syntax(line, col, "expected `dim <vertex> <dimension>`")) };
        let v = alg
            .vertex_index(label)
            .ok_or_else(|| InputError::UnknownVertex { pos: Pos { line, col }, label: label.to_string() })?;
        let d: usize = d.parse().map_err(|_| syntax(line, col, format!("`{d}` is not a dimension")))?;
        if self.dims[v].replace(d).is_some() {
            return Err(syntax(line, col, format!("dimension at `{label}` given twice")));
        }
        Ok(())
    }

    fn map(&mut self, alg: &Algebra, rest: &str, line: usize, col: usize) -> Result<(), InputError> {
        let mut parts = rest.split_whitespace();
        let Some(label) = parts.next() else { return Err(syntax(line, col, "expected `map <arrow> <entries>`")) };
        let a = alg
            .quiver()
            .arrow_index(label)
            .ok_or_else(|| InputError::UnknownArrow { pos: Pos { line, col }, label: label.to_string() })?;
        let entries: Vec<String> = parts.map(str::to_string).collect();
        if self.maps[a].replace((entries, Pos { line, col })).is_some() {
            return Err(syntax(line, col, format!("map for `{label}` given twice")));
        }
        Ok(())
    }

    fn finish(self, alg: &Algebra) -> Result<Named, InputError> {
        let field = alg.field();
        let dims: Vec<usize> = self.dims.iter().map(|d| d.unwrap_or(0)).collect();
        let mut maps = Vec::with_capacity(alg.arrows().len());
        for (a, arrow) in alg.arrows().iter().enumerate() {
            let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
            let m = match &self.maps[a] {
                None => Matrix::zeros(field, rows, cols),
                Some((entries, pos)) => {
                    if entries.len() != rows * cols {
                        let source = ModuleError::Shape { arrow: arrow.label.clone(), rows, cols };
                        return Err(InputError::Module { pos: *pos, source });
                    }
                    let data = entries
                        .iter()
                        .map(|e| field.parse(e).map_err(|err| syntax(pos.line, pos.col, err.to_string())))
                        .collect::<Result<Vec<_>, _>>()?;
                    Matrix::from_entries(field, rows, cols, data).map_err(|err| syntax(pos.line, pos.col, err.to_string()))?
                }
            };
            maps.push(m);
        }
        let rep = Rep::new(alg, dims, maps).map_err(|source| InputError::Module { pos: self.pos, source })?;
        Ok(Named::new(self.name, rep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::indecomposables_isomorphic;

    #[test]
    fn module_blocks_and_expressions() {
        let text = format!("{}\nmodule M\ndim 2 1\ndim 3 1\nmap b2 1\n", fixtures::LINEAR_N2);
        let doc = Document::parse(&text).unwrap();
        assert_eq!(doc.modules.len(), 1);
        let m = doc.module("M").unwrap();
        assert!(indecomposables_isomorphic(&m.rep, &injective(&doc.algebra, 1)));
        let sum = doc.module("P(1) ⊕ S(3)^2").unwrap();
        assert_eq!(sum.rep.dims(), &[1, 0, 2]);
        let q = doc.module("P(3)/rad^1").unwrap();
        assert_eq!(q.rep.dims(), &[0, 0, 1]);
        assert_eq!(doc.module("DLambda").unwrap().rep.total_dim(), 5);
    }

    #[test]
    fn subcategory_lines() {
        let doc = Document::parse(fixtures::LINEAR_N2).unwrap();
        let decl = doc.subcategory_named("tilting").unwrap();
        assert_eq!(decl.generators.len(), 4);
        assert!(matches!(decl.ambient, AmbientDecl::Nakayama));
        let subcat = decl.to_subcategory(&doc.algebra).unwrap();
        assert_eq!(subcat.ambient.len(), 5);
        let text = "field Q\nvertices 1\nsubcategory C generators = Lambda ambient = Lambda + S(1)\n";
        let doc = Document::parse(text).unwrap();
        match &doc.subcategories[0].ambient {
            AmbientDecl::List(l) => assert_eq!(l.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let text = format!("{}\nmodule M\ndim 7 1\n", fixtures::LINEAR_N2);
        let err = Document::parse(&text).unwrap_err();
        assert!(matches!(err, InputError::UnknownVertex { pos: Pos { line: 11, .. }, .. }), "{err}");
        let text = format!("{}\nmodule M\ndim 2 1\ndim 3 1\nmap b2 1 1\n", fixtures::LINEAR_N2);
        let err = Document::parse(&text).unwrap_err();
        assert!(matches!(err, InputError::Module { pos: Pos { line: 13, .. }, .. }), "{err}");
        let doc = Document::parse(fixtures::LINEAR_N2).unwrap();
        assert!(matches!(doc.module("P(9)"), Err(InputError::UnknownVertex { .. })));
        assert!(matches!(doc.module("N"), Err(InputError::UnknownModule { .. })));
        assert!(matches!(doc.module("S(1) + "), Err(InputError::Syntax { .. })));
        let bad_rel = "field Q\nvertices 1\nmodule M\ndim 1 1\nmap x 1\n";
        assert!(Document::parse(bad_rel).is_err());
    }
}
