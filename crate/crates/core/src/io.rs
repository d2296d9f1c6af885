//! The `.herg` text format.
//!
//! ```text
//! herg 1
//! # a bridge with a half-ribbon on u
//! vertex u : d1 h
//! vertex v : d2
//! edge e : d1 d2
//! half r : h
//! ```
//!
//! A vertex line lists its darts in cyclic order. Edges take an optional
//! trailing `twisted`. Comments run from `#` to the end of the line.

use std::collections::HashMap;

use crate::error::HergError;
use crate::herg::{EdgeRecord, HalfRibbonRecord, Herg, HergParts, VertexRecord, Violation};

fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn syntax(line: usize, message: impl Into<String>) -> HergError {
    HergError::Syntax { line, message: message.into() }
}

/// Splits `NAME : TOK*` into the name and the tokens after the colon.
fn name_and_body(line: usize, rest: &str, kind: &str) -> Result<(String, Vec<String>), HergError> {
    let (head, body) = match rest.split_once(':') {
        Some((h, b)) => (h, Some(b)),
        None => (rest, None),
    };
    let head: Vec<&str> = head.split_whitespace().collect();
    let name = match head.as_slice() {
        [n] if is_token(n) => n.to_string(),
        [] => return Err(syntax(line, format!("{kind} needs a name"))),
        _ => return Err(syntax(line, format!("bad {kind} name"))),
    };
    let toks: Vec<String> = body.unwrap_or("").split_whitespace().map(str::to_string).collect();
    if body.is_none() && kind != "vertex" {
        return Err(syntax(line, format!("expected ':' after {kind} name")));
    }
    if let Some(bad) = toks.iter().find(|t| !is_token(t)) {
        return Err(syntax(line, format!("bad token '{bad}'")));
    }
    Ok((name, toks))
}

fn note(m: &mut HashMap<String, Vec<usize>>, token: &str, line: usize) {
    m.entry(token.to_string()).or_default().push(line);
}

pub fn parse(text: &str) -> Result<Herg, HergError> {
    let mut parts = HergParts::default();
    let mut seen_header = false;
    // Lines where each token appears, for error attribution: record names,
    // darts in rotations, darts in edge/half records.
    let mut names: HashMap<String, Vec<usize>> = HashMap::new();
    let mut in_rotation: HashMap<String, Vec<usize>> = HashMap::new();
    let mut in_record: HashMap<String, Vec<usize>> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if !seen_header {
            if content.split_whitespace().collect::<Vec<_>>() != ["herg", "1"] {
                return Err(syntax(line, "expected header 'herg 1'"));
            }
            seen_header = true;
            continue;
        }
        let (kw, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        match kw {
            "vertex" => {
                let (name, darts) = name_and_body(line, rest, "vertex")?;
                note(&mut names, &name, line);
                for d in &darts {
                    note(&mut in_rotation, d, line);
                }
                parts.vertices.push(VertexRecord { name, rotation: darts });
            }
            "edge" => {
                let (name, toks) = name_and_body(line, rest, "edge")?;
                let twisted = match toks.len() {
                    2 => false,
                    3 if toks[2] == "twisted" => true,
                    3 => return Err(syntax(line, format!("expected 'twisted', found '{}'", toks[2]))),
                    n => return Err(syntax(line, format!("edge needs two darts, found {n} tokens"))),
                };
                note(&mut names, &name, line);
                note(&mut in_record, &toks[0], line);
                note(&mut in_record, &toks[1], line);
                parts.edges.push(EdgeRecord { name, darts: [toks[0].clone(), toks[1].clone()], twisted });
            }
            "half" => {
                let (name, toks) = name_and_body(line, rest, "half")?;
                if toks.len() != 1 {
                    return Err(syntax(line, format!("half needs one dart, found {}", toks.len())));
                }
                note(&mut names, &name, line);
                note(&mut in_record, &toks[0], line);
                parts.halves.push(HalfRibbonRecord { name, dart: toks[0].clone() });
            }
            other => return Err(syntax(line, format!("unknown keyword '{other}'"))),
        }
    }
    if !seen_header {
        return Err(syntax(1, "missing header 'herg 1'"));
    }

    let report = parts.validate();
    if let Some(first) = report.violations.first() {
        let (table, subject) = match first {
            Violation::DuplicateDart(s) | Violation::OrphanDart(s) => (&in_rotation, s),
            Violation::DartInTwoRecords(s) | Violation::DartNotInRotation(s) => (&in_record, s),
            Violation::EdgeDartsNotDistinct(s) | Violation::HalfRibbonLoop(s) | Violation::DuplicateName(s) => {
                (&names, s)
            }
        };
        // The second mention is the offending one for duplicates.
        let line = table.get(subject).map(|ls| ls[ls.len().min(2) - 1]).unwrap_or(0);
        return Err(HergError::Semantic { line, message: report.to_string() });
    }
    Ok(Herg::from_valid(parts))
}

/// Canonical text: vertices, edges, halves, each sorted by name. Rotations
/// are written as stored.
pub fn serialize(g: &Herg) -> String {
    let mut out = String::from("herg 1\n");
    let mut vs: Vec<&VertexRecord> = g.vertices().iter().collect();
    vs.sort_by(|a, b| a.name.cmp(&b.name));
    for v in vs {
        if v.rotation.is_empty() {
            out.push_str(&format!("vertex {} :\n", v.name));
        } else {
            out.push_str(&format!("vertex {} : {}\n", v.name, v.rotation.join(" ")));
        }
    }
    let mut es: Vec<&EdgeRecord> = g.edges().iter().collect();
    es.sort_by(|a, b| a.name.cmp(&b.name));
    for e in es {
        let tw = if e.twisted { " twisted" } else { "" };
        out.push_str(&format!("edge {} : {} {}{}\n", e.name, e.darts[0], e.darts[1], tw));
    }
    let mut hs: Vec<&HalfRibbonRecord> = g.halves().iter().collect();
    hs.sort_by(|a, b| a.name.cmp(&b.name));
    for h in hs {
        out.push_str(&format!("half {} : {}\n", h.name, h.dart));
    }
    out
}
