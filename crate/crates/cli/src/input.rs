//! Input files: a `vars:` header line, then one polynomial per line.

use std::fmt;

use tropreal::{Polynomial, Ring, SignVector};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputFile {
    pub ring: Ring,
    pub polys: Vec<Polynomial>,
}

/// Lines with content, numbered from one, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(n: usize, line: &str) -> Result<Ring, CliError> {
    let rest = line
        .strip_prefix("vars:")
        .ok_or_else(|| CliError::Parse(format!("line {n}: expected a `vars:` header")))?;
    let names: Vec<&str> = rest
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    Ring::new(&names).map_err(|e| CliError::Parse(format!("line {n}: {e}")))
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = content_lines(text);
        let (n, head) = lines
            .next()
            .ok_or_else(|| CliError::Parse("empty input file".into()))?;
        let ring = parse_header(n, head)?;
        let polys = lines
            .map(|(n, l)| ring.parse(l).map_err(|e| CliError::Parse(format!("line {n}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if polys.is_empty() {
            return Err(CliError::Parse("no polynomials after the `vars:` line".into()));
        }
        Ok(InputFile { ring, polys })
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        Self::parse(&read_text(path)?)
    }

    pub fn flip(self, orthant: Option<&SignVector>) -> Result<Self, CliError> {
        let Some(pi) = orthant else { return Ok(self) };
        let polys = self
            .polys
            .iter()
            .map(|p| p.orthant_flip(pi))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Precondition(e.to_string()))?;
        Ok(InputFile { polys, ..self })
    }
}

impl fmt::Display for InputFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.ring.names().join(", "))?;
        for p in &self.polys {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Components as `mult: polynomial` lines; a bare polynomial has
/// multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentsFile {
    pub ring: Ring,
    pub components: Vec<(Polynomial, u32)>,
}

impl ComponentsFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = content_lines(text);
        let (n, head) = lines
            .next()
            .ok_or_else(|| CliError::Parse("empty components file".into()))?;
        let ring = parse_header(n, head)?;
        let mut components = Vec::new();
        for (n, line) in lines {
            let (mult, poly) = match line.split_once(':') {
                Some((m, p)) => {
                    let m: u32 = m
                        .trim()
                        .parse()
                        .map_err(|_| CliError::Parse(format!("line {n}: bad multiplicity `{}`", m.trim())))?;
                    if m == 0 {
                        return Err(CliError::Parse(format!("line {n}: multiplicity must be positive")));
                    }
                    (m, p)
                }
                None => (1, line),
            };
            let p = ring
                .parse(poly)
                .map_err(|e| CliError::Parse(format!("line {n}: {e}")))?;
            components.push((p, mult));
        }
        Ok(ComponentsFile { ring, components })
    }

    pub fn read(path: &str) -> Result<Self, CliError> {
        Self::parse(&read_text(path)?)
    }
}

impl fmt::Display for ComponentsFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.ring.names().join(", "))?;
        for (p, m) in &self.components {
            writeln!(f, "{m}: {p}")?;
        }
        Ok(())
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_round_trip() {
        let f = InputFile::parse("# circle\nvars: x, y\n\nx^2 + y^2 - 1  # unit\n").unwrap();
        assert_eq!(f.polys.len(), 1);
        assert_eq!(InputFile::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(InputFile::parse(""), Err(CliError::Parse(_))));
        assert!(matches!(InputFile::parse("x+y"), Err(CliError::Parse(_))));
        assert!(matches!(InputFile::parse("vars: x\nx+y"), Err(CliError::Parse(_))));
        assert!(matches!(InputFile::parse("vars: x"), Err(CliError::Parse(_))));
    }

    #[test]
    fn components() {
        let c = ComponentsFile::parse("vars: x y\n2: x\nx - y^2\n1: x^2+y^4").unwrap();
        assert_eq!(c.components.iter().map(|c| c.1).collect::<Vec<_>>(), vec![2, 1, 1]);
        assert_eq!(ComponentsFile::parse(&c.to_string()).unwrap(), c);
        assert!(ComponentsFile::parse("vars: x\n0: x").is_err());
        assert!(ComponentsFile::parse("vars: x\ntwo: x").is_err());
    }

    #[test]
    fn corpus_round_trip() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");
        let mut seen = 0;
        for entry in std::fs::read_dir(dir).unwrap() {
            let path = entry.unwrap().path();
            if !path.is_file() {
                continue;
            }
            let text = std::fs::read_to_string(&path).unwrap();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            if name.ends_with("_rep.txt") || name.starts_with("bad_") {
                continue;
            }
            if name.contains("components") || name.contains("wrong") {
                let c = ComponentsFile::parse(&text).unwrap();
                assert_eq!(ComponentsFile::parse(&c.to_string()).unwrap(), c, "{name}");
            } else {
                let f = InputFile::parse(&text).unwrap();
                assert_eq!(InputFile::parse(&f.to_string()).unwrap(), f, "{name}");
            }
            seen += 1;
        }
        assert!(seen >= 8);
    }
}
