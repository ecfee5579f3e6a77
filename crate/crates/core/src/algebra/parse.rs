//! Line-oriented algebra description:
//!
//! ```text
//! field Q            # or: field F 7
//! vertices 1 2 3
//! arrow b1 : 2 -> 1
//! arrow b2 : 3 -> 2
//! relation b1*b2     # products in function order: b2 first, then b1
//! ```
//!
//! Lines belonging to module and subcategory blocks are skipped here.

use num_bigint::BigInt;

use super::{Algebra, AlgebraError, Arrow, Pos, Quiver, Relation, DEFAULT_LENGTH_BOUND};
use crate::linalg::{FieldSpec, Scalar};

const MODULE_DIRECTIVES: [&str; 4] = ["module", "dim", "map", "subcategory"];

pub fn parse_algebra(text: &str) -> Result<Algebra, AlgebraError> {
    parse_algebra_with_field(text, None)
}

/// Parses an algebra, optionally overriding the declared field.
pub fn parse_algebra_with_field(text: &str, field_override: Option<FieldSpec>) -> Result<Algebra, AlgebraError> {
    let mut field = None;
    let mut quiver = Quiver { vertices: Vec::new(), arrows: Vec::new() };
    let mut raw_relations: Vec<(Pos, &str, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let Some((kw, kw_col)) = first_word(line) else {
            continue;
        };
        let rest_col = kw_col + kw.len();
        let rest = &line[rest_col..];
        let pos = |col: usize| Pos { line: line_no, col: col + 1 };
        match kw {
            "field" => field = Some(parse_field(rest, pos(rest_col))?),
            "vertices" => {
                for (label, col) in words(rest) {
                    if quiver.vertex_index(label).is_some() {
                        return Err(AlgebraError::DuplicateLabel { pos: pos(rest_col + col), label: label.into() });
                    }
                    quiver.vertices.push(label.to_string());
                }
            }
            "arrow" => {
                let arrow = parse_arrow(rest, rest_col, line_no, &quiver)?;
                if quiver.arrow_index(&arrow.label).is_some() {
                    return Err(AlgebraError::DuplicateLabel { pos: pos(rest_col), label: arrow.label });
                }
                quiver.arrows.push(arrow);
            }
            "relation" => raw_relations.push((pos(rest_col), rest, rest_col)),
            kw if MODULE_DIRECTIVES.contains(&kw) => {}
            other => {
                return Err(AlgebraError::Syntax { pos: pos(kw_col), msg: format!("unknown directive `{other}`") });
            }
        }
    }

    let field = match (field_override, field) {
        (Some(f), _) => f,
        (None, Some(f)) => f,
        (None, None) => return Err(AlgebraError::Syntax { pos: Pos { line: 1, col: 1 }, msg: "missing `field` line".into() }),
    };
    if quiver.vertices.is_empty() {
        return Err(AlgebraError::Syntax { pos: Pos { line: 1, col: 1 }, msg: "no vertices declared".into() });
    }

    let mut relations = Vec::new();
    for (pos, rest, rest_col) in raw_relations {
        if let Some(rel) = parse_relation(rest, rest_col, pos.line, &quiver, field)? {
            relations.push(rel);
        }
    }
    Algebra::from_parts(field, quiver, relations, DEFAULT_LENGTH_BOUND)
}

fn first_word(line: &str) -> Option<(&str, usize)> {
    words(line).next()
}

fn words(s: &str) -> impl Iterator<Item = (&str, usize)> {
    s.split_whitespace().map(move |w| (w, w.as_ptr() as usize - s.as_ptr() as usize))
}

fn parse_field(rest: &str, pos: Pos) -> Result<FieldSpec, AlgebraError> {
    let ws: Vec<&str> = rest.split_whitespace().collect();
    let bad = || AlgebraError::Syntax { pos, msg: format!("expected `Q` or `F <prime>`, found `{}`", rest.trim()) };
    match ws.as_slice() {
        ["Q"] => Ok(FieldSpec::Rationals),
        ["F", p] => Ok(FieldSpec::prime(p.parse().map_err(|_| bad())?)?),
        [fp] if fp.starts_with('F') => Ok(FieldSpec::prime(fp[1..].parse().map_err(|_| bad())?)?),
        _ => Err(bad()),
    }
}

/// Field names as accepted on the command line: `Q`, `F7` or `F 7`.
pub fn parse_field_name(text: &str) -> Option<FieldSpec> {
    parse_field(&text.replacen('F', "F ", 1), Pos { line: 0, col: 0 }).ok()
}

fn parse_arrow(rest: &str, rest_col: usize, line: usize, quiver: &Quiver) -> Result<Arrow, AlgebraError> {
    let pos = |col: usize| Pos { line, col: rest_col + col + 1 };
    let syntax = |col: usize| AlgebraError::Syntax { pos: pos(col), msg: "expected `arrow <label> : <source> -> <target>`".into() };
    let colon = rest.find(':').ok_or_else(|| syntax(0))?;
    let arrow_at = rest.find("->").ok_or_else(|| syntax(colon))?;
    if arrow_at < colon {
        return Err(syntax(arrow_at));
    }
    let field_of = |lo: usize, hi: usize| -> Result<(&str, usize), AlgebraError> {
        let seg = &rest[lo..hi];
        let ws: Vec<_> = words(seg).collect();
        match ws.as_slice() {
            [(w, c)] => Ok((*w, lo + c)),
            _ => Err(syntax(lo)),
        }
    };
    let (label, _) = field_of(0, colon)?;
    let (src, src_col) = field_of(colon + 1, arrow_at)?;
    let (tgt, tgt_col) = field_of(arrow_at + 2, rest.len())?;
    let vertex = |label: &str, col: usize| {
        quiver
            .vertex_index(label)
            .ok_or_else(|| AlgebraError::UndeclaredVertex { pos: pos(col), label: label.into() })
    };
    Ok(Arrow { label: label.into(), source: vertex(src, src_col)?, target: vertex(tgt, tgt_col)? })
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn parse_relation(rest: &str, rest_col: usize, line: usize, quiver: &Quiver, field: FieldSpec) -> Result<Option<Relation>, AlgebraError> {
    let chars: Vec<(usize, char)> = rest.char_indices().collect();
    let pos = |i: usize| Pos { line, col: rest_col + chars.get(i).map_or(rest.len(), |c| c.0) + 1 };
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].1.is_whitespace() {
            *i += 1;
        }
    };
    let mut terms: Vec<(Scalar, Vec<usize>, Pos)> = Vec::new();
    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i >= chars.len() {
            if first {
                return Err(AlgebraError::Syntax { pos: pos(i), msg: "empty relation".into() });
            }
            break;
        }
        let mut sign = 1i64;
        if chars[i].1 == '+' || chars[i].1 == '-' {
            if chars[i].1 == '-' {
                sign = -1;
            }
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(AlgebraError::Syntax { pos: pos(i), msg: "expected `+` or `-` between terms".into() });
        }
        first = false;
        let term_pos = pos(i);
        let mut coef = BigInt::from(sign);
        let mut labels: Vec<(String, Pos)> = Vec::new();
        let mut seen_coef = false;
        loop {
            skip_ws(&mut i);
            let start = i;
            while i < chars.len() && is_ident_char(chars[i].1) {
                i += 1;
            }
            if start == i {
                return Err(AlgebraError::Syntax { pos: pos(i), msg: "expected an arrow label or integer".into() });
            }
            let word: String = chars[start..i].iter().map(|c| c.1).collect();
            if labels.is_empty() && !seen_coef && word.chars().all(|c| c.is_ascii_digit()) {
                let c: BigInt = word.parse().expect("digits");
                coef *= c;
                seen_coef = true;
                skip_ws(&mut i);
                if i < chars.len() && chars[i].1 == '*' {
                    i += 1;
                    continue;
                }
                return Err(AlgebraError::Syntax { pos: pos(i), msg: "a coefficient must be followed by `*` and a path".into() });
            }
            labels.push((word, pos(start)));
            skip_ws(&mut i);
            if i < chars.len() && chars[i].1 == '*' {
                i += 1;
            } else {
                break;
            }
        }
        // Written in function order; store in application order.
        let mut path = Vec::new();
        for (label, p) in labels.iter().rev() {
            path.push(quiver.arrow_index(label).ok_or_else(|| AlgebraError::UndeclaredArrow { pos: *p, label: label.clone() })?);
        }
        let name = labels.iter().map(|l| l.0.as_str()).collect::<Vec<_>>().join("*");
        if path.len() < 2 {
            return Err(AlgebraError::ShortTerm { pos: term_pos, path: name });
        }
        if path.windows(2).any(|w| quiver.arrows[w[0]].target != quiver.arrows[w[1]].source) {
            return Err(AlgebraError::NotComposable { pos: term_pos, path: name });
        }
        let scalar = field.from_ratio(&coef, &BigInt::from(1)).expect("denominator is one");
        terms.push((scalar, path, term_pos));
    }

    let ends = |p: &[usize]| (quiver.arrows[p[0]].source, quiver.arrows[*p.last().unwrap()].target);
    let (_, first_path, _) = &terms[0];
    let want = ends(first_path);
    if let Some((_, _, p)) = terms.iter().find(|(_, path, _)| ends(path) != want) {
        return Err(AlgebraError::NonParallel { pos: *p });
    }

    let mut merged: Vec<(Scalar, Vec<usize>)> = Vec::new();
    for (c, p, _) in terms {
        match merged.iter_mut().find(|(_, q)| *q == p) {
            Some(entry) => entry.0 = &entry.0 + &c,
            None => merged.push((c, p)),
        }
    }
    merged.retain(|(c, _)| !c.is_zero());
    Ok((!merged.is_empty()).then_some(Relation { terms: merged }))
}
