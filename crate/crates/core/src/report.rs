//! Derivation reports with matching text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::{ExactMatrix, ExactSymMatrix};

/// `{rows, cols, entries: [[re_num, re_den, im_num, im_den], …]}` with
/// integers as decimal strings, entries row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixJson<'a>(pub &'a ExactMatrix);

impl Serialize for MatrixJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<[String; 4]> = self
            .0
            .entries()
            .iter()
            .map(|x| x.parts().map(|p| p.to_string()))
            .collect();
        let mut s = serializer.serialize_struct("Matrix", 3)?;
        s.serialize_field("rows", &self.0.rows())?;
        s.serialize_field("cols", &self.0.cols())?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

fn matrix_json<S: Serializer>(m: &ExactMatrix, serializer: S) -> Result<S::Ok, S::Error> {
    MatrixJson(m).serialize(serializer)
}

fn symbolic_json<S: Serializer>(m: &ExactSymMatrix, serializer: S) -> Result<S::Ok, S::Error> {
    let entries: Vec<String> = m.entries().iter().map(ToString::to_string).collect();
    let mut s = serializer.serialize_struct("SymMatrix", 3)?;
    s.serialize_field("rows", &m.rows())?;
    s.serialize_field("cols", &m.cols())?;
    s.serialize_field("entries", &entries)?;
    s.end()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fact {
    Text {
        text: String,
    },
    Value {
        label: String,
        value: String,
    },
    Matrix {
        label: String,
        #[serde(serialize_with = "matrix_json")]
        matrix: ExactMatrix,
    },
    Symbolic {
        label: String,
        #[serde(serialize_with = "symbolic_json")]
        matrix: ExactSymMatrix,
    },
}

impl Fact {
    pub fn text(text: impl Into<String>) -> Self {
        Self::Text { text: text.into() }
    }

    pub fn value(label: impl Into<String>, value: impl ToString) -> Self {
        Self::Value {
            label: label.into(),
            value: value.to_string(),
        }
    }

    pub fn matrix(label: impl Into<String>, matrix: &ExactMatrix) -> Self {
        Self::Matrix {
            label: label.into(),
            matrix: matrix.clone(),
        }
    }

    pub fn symbolic(label: impl Into<String>, matrix: &ExactSymMatrix) -> Self {
        Self::Symbolic {
            label: label.into(),
            matrix: matrix.clone(),
        }
    }

    fn render(&self, out: &mut String, indent: &str) {
        match self {
            Fact::Text { text } => {
                let _ = writeln!(out, "{indent}{text}");
            }
            Fact::Value { label, value } => {
                let _ = writeln!(out, "{indent}{label} = {value}");
            }
            Fact::Matrix { label, matrix } => block(out, indent, label, &matrix.to_string()),
            Fact::Symbolic { label, matrix } => block(out, indent, label, &matrix.to_string()),
        }
    }
}

fn block(out: &mut String, indent: &str, label: &str, body: &str) {
    let _ = writeln!(out, "{indent}{label} =");
    for line in body.lines() {
        let _ = writeln!(out, "{indent}    {line}");
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub title: String,
    pub facts: Vec<Fact>,
}

impl Step {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            facts: Vec::new(),
        }
    }

    pub fn with(mut self, fact: Fact) -> Self {
        self.facts.push(fact);
        self
    }

    pub fn push(&mut self, fact: Fact) {
        self.facts.push(fact);
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(serialize_with = "inputs_json")]
    pub inputs: BTreeMap<String, ExactMatrix>,
    pub steps: Vec<Step>,
    pub result: Vec<Fact>,
    pub verdict: Option<String>,
}

fn inputs_json<S: Serializer>(inputs: &BTreeMap<String, ExactMatrix>, serializer: S) -> Result<S::Ok, S::Error> {
    let view: BTreeMap<&str, MatrixJson<'_>> = inputs.iter().map(|(k, v)| (k.as_str(), MatrixJson(v))).collect();
    view.serialize(serializer)
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: BTreeMap::new(),
            steps: Vec::new(),
            result: Vec::new(),
            verdict: None,
        }
    }

    pub fn input(&mut self, name: &str, m: &ExactMatrix) {
        self.inputs.insert(name.to_string(), m.clone());
    }

    pub fn step(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if !self.inputs.is_empty() {
            out.push_str("inputs:\n");
            for (name, m) in &self.inputs {
                block(&mut out, "  ", name, &m.to_string());
            }
        }
        for (k, step) in self.steps.iter().enumerate() {
            let _ = writeln!(out, "step {}: {}", k + 1, step.title);
            for fact in &step.facts {
                fact.render(&mut out, "  ");
            }
        }
        if !self.result.is_empty() {
            out.push_str("result:\n");
            for fact in &self.result {
                fact.render(&mut out, "  ");
            }
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {v}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
