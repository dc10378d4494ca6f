//! JSON documents for algebras, ideal sequences, spaces and MV tables.
//!
//! Serialization is canonical: compact, keys sorted, one trailing newline.
//! Parsing separates three failure classes: malformed JSON, a well-formed
//! value of the wrong shape, and a well-shaped value violating an invariant.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use moisil::boolalg::{Elem, FiniteBooleanAlgebra};
use moisil::construct::IdealSequenceObject;
use moisil::lm::{LMAlgebra, Signature};
use moisil::mvn::MVAlgebra;
use moisil::stone::FiniteSpaceWithOpens;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl ParseError {
    pub fn class(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::Schema(_) => "schema",
            ParseError::Invariant(_) => "invariant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Bool(FiniteBooleanAlgebra),
    Lm {
        algebra: LMAlgebra,
        /// Optional display names, one per element.
        labels: Option<Vec<String>>,
    },
    BoolIdeals(IdealSequenceObject),
    Space(FiniteSpaceWithOpens),
    Mv(MVAlgebra),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoolWire {
    atoms: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LmWire {
    signature: Signature,
    n: usize,
    size: usize,
    zero: usize,
    one: usize,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    star: Vec<usize>,
    unary: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoolIdealsWire {
    n: usize,
    atoms: Vec<String>,
    generators: Vec<Elem>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceWire {
    n: usize,
    points: Vec<String>,
    opens: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MvWire {
    size: usize,
    zero: usize,
    oplus: Vec<Vec<usize>>,
    star: Vec<usize>,
}

fn invariant(e: moisil::Error) -> ParseError {
    ParseError::Invariant(e.to_string())
}

fn wire<T: DeserializeOwned>(kind: &str, map: Map<String, Value>) -> Result<T, ParseError> {
    serde_json::from_value(Value::Object(map))
        .map_err(|e| ParseError::Schema(format!("{kind} document: {e}")))
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(mut map) = value else {
        return Err(ParseError::Schema("document must be a JSON object".into()));
    };
    let kind = match map.remove("kind") {
        Some(Value::String(kind)) => kind,
        Some(_) => return Err(ParseError::Schema("`kind` must be a string".into())),
        None => return Err(ParseError::Schema("missing field `kind`".into())),
    };
    match kind.as_str() {
        "bool" => {
            let w: BoolWire = wire(&kind, map)?;
            FiniteBooleanAlgebra::powerset(w.atoms)
                .map(Document::Bool)
                .map_err(invariant)
        }
        "lm" => {
            let w: LmWire = wire(&kind, map)?;
            if w.star.len() != w.size {
                return Err(ParseError::Schema(format!(
                    "`size` is {} but `star` has {} entries",
                    w.size,
                    w.star.len()
                )));
            }
            if let Some(labels) = &w.labels {
                if labels.len() != w.size {
                    return Err(ParseError::Schema(format!(
                        "`labels` has {} entries for size {}",
                        labels.len(),
                        w.size
                    )));
                }
            }
            let algebra = LMAlgebra::from_tables(
                w.signature,
                w.n,
                w.zero,
                w.one,
                w.join,
                w.meet,
                w.star,
                w.unary,
            )
            .map_err(invariant)?;
            Ok(Document::Lm {
                algebra,
                labels: w.labels,
            })
        }
        "boolideals" => {
            let w: BoolIdealsWire = wire(&kind, map)?;
            let base = FiniteBooleanAlgebra::powerset(w.atoms).map_err(invariant)?;
            IdealSequenceObject::new(base, w.n, &w.generators)
                .map(Document::BoolIdeals)
                .map_err(invariant)
        }
        "space" => {
            let w: SpaceWire = wire(&kind, map)?;
            let count = w.points.len();
            let mut opens = Vec::with_capacity(w.opens.len());
            for set in &w.opens {
                if !set.windows(2).all(|p| p[0] < p[1]) {
                    return Err(ParseError::Schema(
                        "open sets must list point indices in strictly increasing order".into(),
                    ));
                }
                if let Some(&bad) = set.iter().find(|&&p| p >= count) {
                    return Err(ParseError::Invariant(format!(
                        "point {bad} is outside a space of {count} points"
                    )));
                }
                opens.push(set.iter().fold(0, |acc, &p| acc | (1 << p)));
            }
            FiniteSpaceWithOpens::new(w.points, w.n, opens)
                .map(Document::Space)
                .map_err(invariant)
        }
        "mv" => {
            let w: MvWire = wire(&kind, map)?;
            if w.star.len() != w.size {
                return Err(ParseError::Schema(format!(
                    "`size` is {} but `star` has {} entries",
                    w.size,
                    w.star.len()
                )));
            }
            MVAlgebra::from_tables(w.zero, w.oplus, w.star)
                .map(Document::Mv)
                .map_err(invariant)
        }
        other => Err(ParseError::Schema(format!("unknown kind `{other}`"))),
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Bool(_) => "bool",
            Document::Lm { .. } => "lm",
            Document::BoolIdeals(_) => "boolideals",
            Document::Space(_) => "space",
            Document::Mv(_) => "mv",
        }
    }

    pub fn lm(algebra: LMAlgebra) -> Self {
        Document::Lm {
            algebra,
            labels: None,
        }
    }

    pub fn to_value(&self) -> Value {
        let body = match self {
            Document::Bool(b) => serde_json::to_value(BoolWire {
                atoms: b.atom_names().to_vec(),
            }),
            Document::Lm { algebra, labels } => serde_json::to_value(LmWire {
                signature: algebra.signature(),
                n: algebra.n(),
                size: algebra.size(),
                zero: algebra.zero(),
                one: algebra.one(),
                join: algebra.join_rows(),
                meet: algebra.meet_rows(),
                star: algebra.star_table().to_vec(),
                unary: algebra.unary_tables().to_vec(),
                labels: labels.clone(),
            }),
            Document::BoolIdeals(obj) => serde_json::to_value(BoolIdealsWire {
                n: obj.n(),
                atoms: obj.base().atom_names().to_vec(),
                generators: obj.generators(),
            }),
            Document::Space(x) => serde_json::to_value(SpaceWire {
                n: x.n(),
                points: x.point_names().to_vec(),
                opens: x
                    .opens()
                    .iter()
                    .map(|&o| {
                        (0..x.point_count())
                            .filter(|&p| o & (1 << p) != 0)
                            .collect()
                    })
                    .collect(),
            }),
            Document::Mv(a) => serde_json::to_value(MvWire {
                size: a.size(),
                zero: a.zero(),
                oplus: a.oplus_rows(),
                star: a.star_table().to_vec(),
            }),
        };
        let mut body = body.expect("wire types serialize");
        body.as_object_mut()
            .expect("wire types are objects")
            .insert("kind".into(), Value::String(self.kind().into()));
        body
    }

    /// Canonical text: compact JSON with sorted keys and a trailing newline.
    pub fn serialize(&self) -> String {
        canonical_json(&self.to_value())
    }

    /// A display name for element `x` of the document's carrier.
    pub fn render_element(&self, x: usize) -> String {
        match self {
            Document::Lm {
                labels: Some(labels),
                ..
            } => labels.get(x).cloned().unwrap_or_else(|| format!("#{x}")),
            Document::Bool(b) => b.render(x as Elem),
            Document::BoolIdeals(obj) => obj.base().render(x as Elem),
            _ => format!("#{x}"),
        }
    }
}

/// `serde_json` keeps object keys in a `BTreeMap`, so compact output is
/// already sorted.
pub fn canonical_json(value: &Value) -> String {
    let mut text = serde_json::to_string(value).expect("values serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use moisil::lm::canonical;

    #[test]
    fn parses_the_basic_kinds() {
        let Document::Bool(b) = parse_document(r#"{"kind":"bool","atoms":["p","q"]}"#).unwrap()
        else {
            panic!("expected a Boolean algebra");
        };
        assert_eq!(b.size(), 4);
        let Document::BoolIdeals(obj) =
            parse_document(r#"{"kind":"boolideals","n":3,"atoms":["p"],"generators":[1,1]}"#)
                .unwrap()
        else {
            panic!("expected an ideal sequence");
        };
        assert_eq!(obj.ideal(1).generator(), obj.base().top());
    }

    #[test]
    fn error_classes_are_distinct() {
        let asym =
            parse_document(r#"{"kind":"boolideals","n":3,"atoms":["p"],"generators":[1,0]}"#);
        assert!(matches!(asym, Err(ParseError::Invariant(_))));
        let syntax = parse_document("{\"kind\":\n \"bool\",");
        assert!(matches!(syntax, Err(ParseError::Syntax { line: 2, .. })));
        let schema = parse_document(r#"{"kind":"bool","atoms":["p"],"extra":1}"#);
        assert!(matches!(schema, Err(ParseError::Schema(_))));
        let unknown = parse_document(r#"{"kind":"ring"}"#);
        assert!(matches!(unknown, Err(ParseError::Schema(_))));
    }

    #[test]
    fn canonical_text_round_trips() {
        let doc = Document::lm(canonical(3).unwrap());
        let text = doc.serialize();
        assert!(text.starts_with(r#"{"join":"#));
        assert!(text.ends_with("\"zero\":0}\n"));
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.serialize(), text);
    }

    #[test]
    fn space_opens_use_point_indices() {
        let text = r#"{"kind":"space","n":3,"opens":[[0],[0]],"points":["x1","x2"]}"#;
        let doc = parse_document(text).unwrap();
        assert_eq!(doc.serialize(), format!("{text}\n"));
        let unsorted = r#"{"kind":"space","n":3,"opens":[[1,0],[1,0]],"points":["x1","x2"]}"#;
        assert!(matches!(
            parse_document(unsorted),
            Err(ParseError::Schema(_))
        ));
    }
}
