use std::fmt;

use super::{QMRepresentation, SosError};
use crate::poly::{Polynomial, Ring, WeightVector};

/// Text form of a representation problem:
///
/// ```text
/// vars: x, y
/// f: 2*x - 2*y + 1
/// ideal: x - y
/// weight: (1,1)
/// square 0: x - y + 1
/// h: -x^2 + 2*x*y - y^2
/// ```
///
/// `ideal:` and `generator:` may repeat; `square i:` adds a square to
/// `σ_i`, where `σ_0` has no generator. Blank lines and `#` comments are
/// skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationFile {
    pub ring: Ring,
    pub f: Polynomial,
    pub ideal: Vec<Polynomial>,
    pub weight: Option<WeightVector>,
    pub rep: QMRepresentation,
}

fn err(line: usize, msg: impl fmt::Display) -> SosError {
    SosError::File(format!("line {line}: {msg}"))
}

impl RepresentationFile {
    pub fn parse(text: &str) -> Result<Self, SosError> {
        let mut ring: Option<Ring> = None;
        let mut f = None;
        let mut ideal = Vec::new();
        let mut weight = None;
        let mut generators = Vec::new();
        let mut squares: Vec<(usize, Polynomial)> = Vec::new();
        let mut h = None;
        for (k, raw) in text.lines().enumerate() {
            let n = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once(':').ok_or_else(|| err(n, "expected `key: value`"))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "vars" {
                let names: Vec<&str> = value.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
                ring = Some(Ring::new(&names).map_err(|e| err(n, e))?);
                continue;
            }
            let r = ring.as_ref().ok_or_else(|| err(n, "`vars:` must come first"))?;
            let poly = |s: &str| r.parse(s).map_err(|e| err(n, e));
            match key {
                "f" => f = Some(poly(value)?),
                "ideal" => ideal.push(poly(value)?),
                "generator" => generators.push(poly(value)?),
                "h" => h = Some(poly(value)?),
                "weight" => {
                    let w: WeightVector = value.parse().map_err(|e| err(n, e))?;
                    if w.dim() != r.nvars() {
                        return Err(err(n, format!("weight has {} entries for {} variables", w.dim(), r.nvars())));
                    }
                    weight = Some(w);
                }
                _ => {
                    let idx = key
                        .strip_prefix("square")
                        .and_then(|s| s.trim().parse::<usize>().ok())
                        .ok_or_else(|| err(n, format!("unknown key `{key}`")))?;
                    squares.push((idx, poly(value)?));
                }
            }
        }
        let ring = ring.ok_or_else(|| SosError::File("missing `vars:` line".into()))?;
        let f = f.ok_or_else(|| SosError::File("missing `f:` line".into()))?;
        let h = h.unwrap_or_else(|| Polynomial::zero(&ring));
        let mut lists = vec![Vec::new(); generators.len() + 1];
        for (i, y) in squares {
            lists
                .get_mut(i)
                .ok_or_else(|| SosError::File(format!("square index {i} exceeds the {} generators", generators.len())))?
                .push(y);
        }
        let rep = QMRepresentation::new(generators, lists, h)?;
        Ok(RepresentationFile {
            ring,
            f,
            ideal,
            weight,
            rep,
        })
    }
}

impl fmt::Display for RepresentationFile {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "vars: {}", self.ring.names().join(", "))?;
        writeln!(out, "f: {}", self.f)?;
        for g in &self.ideal {
            writeln!(out, "ideal: {g}")?;
        }
        if let Some(w) = &self.weight {
            writeln!(out, "weight: {w}")?;
        }
        for g in &self.rep.generators {
            writeln!(out, "generator: {g}")?;
        }
        for (i, l) in self.rep.squares.iter().enumerate() {
            for y in l {
                writeln!(out, "square {i}: {y}")?;
            }
        }
        writeln!(out, "h: {}", self.rep.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEXT: &str = "# linear instance
vars: x, y
f: 2*x - 2*y + 1
ideal: x - y
weight: (1,1)
square 0: x - y + 1
h: -(x-y)^2
";

    #[test]
    fn parse_and_round_trip() {
        let rf = RepresentationFile::parse(TEXT).unwrap();
        assert_eq!(rf.rep.squares[0].len(), 1);
        assert_eq!(rf.weight, Some(WeightVector::ones(2)));
        let printed = rf.to_string();
        assert_eq!(RepresentationFile::parse(&printed).unwrap(), rf);
        assert!(printed.contains("h: -x^2 + 2*x*y - y^2"), "{printed}");
    }

    #[test]
    fn errors() {
        assert!(RepresentationFile::parse("f: x").is_err());
        assert!(RepresentationFile::parse("vars: x\nsquare 1: x\nf: x").is_err());
        assert!(RepresentationFile::parse("vars: x\nf: x\nweight: (1,1)").is_err());
        assert!(RepresentationFile::parse("vars: x\nbogus: 1\nf: x").is_err());
    }
}
