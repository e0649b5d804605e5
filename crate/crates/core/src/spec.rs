//! Generator specs and the group-spec text format.
//!
//! ```text
//! name <label>
//! degree <n>
//! gen <cycle notation>
//! gen <cycle notation>
//! ```
//!
//! `name` must be the first line and `degree` the second; every further
//! non-blank line must be a `gen` line. Blank lines are allowed only after the
//! last `gen` line. The label is the rest of the first line, trimmed, and may
//! not be empty. Any other content is rejected with its line number.

use std::fmt::Write as _;

use crate::error::{Error, Result, SpecError};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(GroupSpec { name: name.into(), degree, generators })
    }

    /// Builds a spec from cycle-notation strings.
    pub fn from_cycles(name: impl Into<String>, degree: usize, gens: &[&str]) -> Result<Self> {
        let generators = gens
            .iter()
            .map(|g| Permutation::parse(g, degree).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, degree, generators)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Spec(SpecError { line, message });
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

        let (ln, first) = lines.next().ok_or_else(|| err(1, "empty input; expected `name <label>`".into()))?;
        let name = match first.trim_end().strip_prefix("name") {
            Some(rest) if rest.starts_with(char::is_whitespace) && !rest.trim().is_empty() => rest.trim().to_string(),
            _ => return Err(err(ln, format!("expected `name <label>`, found `{first}`"))),
        };

        let (ln, second) = lines.next().ok_or_else(|| err(2, "missing `degree <n>` line".into()))?;
        let degree = match second.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["degree", n] => n.parse::<usize>().ok().filter(|&d| d > 0),
            _ => None,
        }
        .ok_or_else(|| err(ln, format!("expected `degree <n>` with n > 0, found `{second}`")))?;

        let mut generators = Vec::new();
        let mut saw_blank = false;
        for (ln, line) in lines {
            if line.trim().is_empty() {
                saw_blank = true;
                continue;
            }
            if saw_blank {
                return Err(err(ln, format!("trailing content after blank line: `{line}`")));
            }
            let body = line
                .trim_start()
                .strip_prefix("gen")
                .filter(|rest| rest.starts_with(char::is_whitespace))
                .ok_or_else(|| err(ln, format!("expected `gen <cycles>`, found `{line}`")))?;
            let perm = Permutation::parse(body, degree).map_err(|e| err(ln, e.to_string()))?;
            generators.push(perm);
        }
        Self::new(name, degree, generators)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "name {}", self.name).unwrap();
        writeln!(s, "degree {}", self.degree).unwrap();
        for g in &self.generators {
            writeln!(s, "gen {g}").unwrap();
        }
        s
    }

    /// One-line generator list using comma-separated cycles, e.g.
    /// `[(1,2,3),(1,2)]`, which most computer-algebra systems read directly.
    pub fn export_line(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_comma_string()).collect();
        format!("[{}]", gens.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        let text = "name d8\ndegree 4\ngen (1 2 3 4)\ngen (1 3)\n";
        let spec = GroupSpec::parse(text).unwrap();
        assert_eq!(spec.name, "d8");
        assert_eq!(spec.degree, 4);
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.to_text(), text);
        assert_eq!(spec.export_line(), "[(1,2,3,4),(1,3)]");
        assert_eq!(GroupSpec::parse(&spec.to_text()).unwrap(), spec);
    }

    #[test]
    fn empty_generator_list_is_allowed() {
        let spec = GroupSpec::parse("name trivial\ndegree 3\n").unwrap();
        assert!(spec.generators.is_empty());
        assert_eq!(spec.export_line(), "[]");
    }

    fn line_of(text: &str) -> usize {
        match GroupSpec::parse(text) {
            Err(Error::Spec(SpecError { line, .. })) => line,
            other => panic!("expected spec error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("degree 3\nname x\n"), 1);
        assert_eq!(line_of("name x\n"), 2);
        assert_eq!(line_of("name x\ndegree zero\n"), 2);
        assert_eq!(line_of("name x\ndegree 0\n"), 2);
        assert_eq!(line_of("name x\ndegree 3\ngen (1 2)\ngen (1 4)\n"), 4);
        assert_eq!(line_of("name x\ndegree 3\ngen (1 2) junk\n"), 3);
        assert_eq!(line_of("name x\ndegree 3\ngenerator (1 2)\n"), 3);
        assert_eq!(line_of("name x\ndegree 3\ngen (1 2)\n\ngen (2 3)\n"), 5);
        assert_eq!(line_of("name x\ndegree 3 4\n"), 2);
    }
}
