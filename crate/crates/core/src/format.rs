//! JSON interchange files.
//!
//! * poset: `{"name": ..., "elements": [...], "covers": [[lower, upper], ...]}`
//! * function: `{"poset": ..., "values": {element: n | "inf"}}`, with an
//!   optional `"role": "profile"` for depth profiles
//! * sequence: `{"poset": ..., "phi": [[element, ...], ...]}`
//!
//! Output always lists elements in poset order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::depth::Depth;
use crate::error::{Error, Result};
use crate::function::SpecFunction;
use crate::poset::{ElementSet, SpectralPoset};
use crate::profile::DepthProfile;
use crate::sequence::BassSequence;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    name: String,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FunctionFile {
    poset: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<Role>,
    values: Map<String, Value>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Function,
    Profile,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceFile {
    poset: String,
    phi: Vec<Vec<String>>,
}

pub fn parse_poset(text: &str) -> Result<SpectralPoset> {
    let file: PosetFile = serde_json::from_str(text)?;
    let covers: Vec<(&str, &str)> = file
        .covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    SpectralPoset::new(file.name, &file.elements, &covers)
}

pub fn poset_to_json(poset: &SpectralPoset) -> String {
    let file = PosetFile {
        name: poset.name().to_owned(),
        elements: poset.elements().map(|e| poset.name_of(e).to_owned()).collect(),
        covers: poset
            .covers()
            .iter()
            .map(|&(a, b)| (poset.name_of(a).to_owned(), poset.name_of(b).to_owned()))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

fn check_poset_name(poset: &SpectralPoset, found: &str) -> Result<()> {
    if poset.name() == found {
        Ok(())
    } else {
        Err(Error::PosetNameMismatch {
            expected: poset.name().to_owned(),
            found: found.to_owned(),
        })
    }
}

/// Parses a function file against `poset`; returns the declared role too.
pub fn parse_function_with_role(
    poset: &Arc<SpectralPoset>,
    text: &str,
) -> Result<(SpecFunction, Option<Role>)> {
    let file: FunctionFile = serde_json::from_str(text)?;
    check_poset_name(poset, &file.poset)?;
    let mut values = vec![None; poset.len()];
    for (id, raw) in &file.values {
        let e = poset.element(id)?;
        let depth = Depth::deserialize(raw).map_err(|err| Error::Parse(format!("`{id}`: {err}")))?;
        values[e.index()] = Some(depth);
    }
    let values = values
        .into_iter()
        .zip(poset.elements())
        .map(|(v, e)| v.ok_or_else(|| Error::MissingValue(poset.name_of(e).to_owned())))
        .collect::<Result<Vec<_>>>()?;
    Ok((SpecFunction::new(poset, values)?, file.role))
}

pub fn parse_function(poset: &Arc<SpectralPoset>, text: &str) -> Result<SpecFunction> {
    parse_function_with_role(poset, text).map(|(f, _)| f)
}

/// A function file read as a depth profile; it must be a Bass function.
pub fn parse_profile(poset: &Arc<SpectralPoset>, text: &str) -> Result<DepthProfile> {
    DepthProfile::new(parse_function(poset, text)?)
}

pub fn function_to_json(f: &SpecFunction, role: Option<Role>) -> String {
    serde_json::to_string_pretty(&function_value(f, role)).expect("serializable") + "\n"
}

/// The function file as a JSON value, for embedding in larger documents.
pub fn function_value(f: &SpecFunction, role: Option<Role>) -> Value {
    let poset = f.poset();
    let values: Map<String, Value> = poset
        .elements()
        .map(|e| {
            let v = serde_json::to_value(f.get(e)).expect("serializable");
            (poset.name_of(e).to_owned(), v)
        })
        .collect();
    let file = FunctionFile {
        poset: poset.name().to_owned(),
        role,
        values,
    };
    serde_json::to_value(file).expect("serializable")
}

pub fn parse_sequence(poset: &Arc<SpectralPoset>, text: &str) -> Result<BassSequence> {
    let file: SequenceFile = serde_json::from_str(text)?;
    check_poset_name(poset, &file.poset)?;
    let sets = file
        .phi
        .iter()
        .map(|ids| poset.set(ids))
        .collect::<Result<Vec<_>>>()?;
    BassSequence::new(poset, sets)
}

pub fn sequence_to_json(s: &BassSequence) -> String {
    serde_json::to_string_pretty(&sequence_value(s)).expect("serializable") + "\n"
}

pub fn sequence_value(s: &BassSequence) -> Value {
    let poset = s.poset();
    let file = SequenceFile {
        poset: poset.name().to_owned(),
        phi: s.prefix().iter().map(|set| set_names(poset, set)).collect(),
    };
    serde_json::to_value(file).expect("serializable")
}

pub fn set_names(poset: &SpectralPoset, set: &ElementSet) -> Vec<String> {
    poset.names_of(set).map(str::to_owned).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depth::INF;
    use crate::fixtures;
    use crate::function::values;

    #[test]
    fn poset_round_trip() {
        let v = fixtures::vee();
        let text = poset_to_json(&v);
        assert_eq!(parse_poset(&text).unwrap(), *v);
        let c3 = parse_poset(r#"{"name":"C3","elements":["a","b","c"],"covers":[["a","b"],["b","c"]]}"#)
            .unwrap();
        assert_eq!(c3, *fixtures::chain3());
    }

    #[test]
    fn poset_errors() {
        assert!(matches!(
            parse_poset(r#"{"name":"x","elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(parse_poset("{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_poset(r#"{"name":"x","elements":["a"],"covers":[["a"]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_poset(r#"{"name":"x","elements":["a"],"covers":[],"extra":1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn function_files() {
        let c3 = fixtures::chain3();
        let f = parse_function(&c3, r#"{"poset":"C3","values":{"c":2,"a":"inf","b":1}}"#).unwrap();
        assert_eq!(f, values(&c3, &[INF, Depth::Finite(1), Depth::Finite(2)]));
        let text = function_to_json(&f, None);
        assert!(text.find("\"a\"").unwrap() < text.find("\"c\"").unwrap());
        assert_eq!(parse_function(&c3, &text).unwrap(), f);

        let (_, role) =
            parse_function_with_role(&c3, r#"{"poset":"C3","role":"profile","values":{"a":0,"b":1,"c":2}}"#)
                .unwrap();
        assert_eq!(role, Some(Role::Profile));
    }

    #[test]
    fn function_file_errors() {
        let c3 = fixtures::chain3();
        let cases = [
            r#"{"poset":"V","values":{"a":0,"b":0,"c":0}}"#,
            r#"{"poset":"C3","values":{"a":0,"b":0}}"#,
            r#"{"poset":"C3","values":{"a":0,"b":0,"c":0,"z":1}}"#,
            r#"{"poset":"C3","values":{"a":0,"b":0,"c":"infinity"}}"#,
            r#"{"poset":"C3","values":{"a":0,"b":0,"c":-1}}"#,
            r#"{"poset":"C3","role":"module","values":{"a":0,"b":0,"c":0}}"#,
        ];
        for text in cases {
            assert!(parse_function(&c3, text).is_err(), "{text}");
        }
        assert!(matches!(
            parse_profile(&c3, r#"{"poset":"C3","values":{"a":"inf","b":1,"c":1}}"#),
            Err(Error::NotBass(_))
        ));
    }

    #[test]
    fn sequence_files() {
        let v = fixtures::vee();
        let s = parse_sequence(&v, r#"{"poset":"V","phi":[["p"],["r","p"]]}"#).unwrap();
        assert_eq!(s, BassSequence::from_names(&v, &[&["p"], &["p", "r"]]).unwrap());
        let text = sequence_to_json(&s);
        assert!(text.contains("\"p\",\n"));
        assert_eq!(parse_sequence(&v, &text).unwrap(), s);
        assert!(parse_sequence(&v, r#"{"poset":"V","phi":[["nope"]]}"#).is_err());
    }
}
