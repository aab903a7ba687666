use std::fmt;

use nsl_core::nlogic::{Environment, Semantics};
use nsl_core::nsets::unit_interval;

use super::{is_atom_name, parse_nvalue, ParseError};

/// A parsed environment file.
///
/// ```text
/// # comment
/// @semantics original
/// A := ({1}, {0}, {0})
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnvFile {
    pub bindings: Environment,
    /// Set by an `@semantics NAME` line.
    pub semantics: Option<Semantics>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvError {
    pub line: usize,
    pub error: ParseError,
}

impl fmt::Display for EnvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, {}", self.line, self.error)
    }
}

impl std::error::Error for EnvError {}

fn parse_line(line: &str, env: &mut EnvFile) -> Result<(), ParseError> {
    let offset = line.len() - line.trim_start().len();
    let body = line.trim();
    if let Some(rest) = body.strip_prefix('@') {
        let mut words = rest.split_whitespace();
        return match (words.next(), words.next(), words.next()) {
            (Some("semantics"), Some(name), None) => {
                let sem = name.parse().map_err(|m| ParseError::new(offset + 1, m))?;
                env.semantics = Some(sem);
                Ok(())
            }
            _ => Err(ParseError::new(offset + 1, "expected `@semantics NAME`")),
        };
    }
    let Some(split) = body.find(":=") else {
        return Err(ParseError::new(offset + 1, "expected `Name := (T, I, F)`"));
    };
    let name = body[..split].trim();
    if !is_atom_name(name) {
        return Err(ParseError::new(offset + 1, format!("invalid atom name `{name}`")));
    }
    if env.bindings.contains_key(name) {
        return Err(ParseError::new(offset + 1, format!("`{name}` is bound twice")));
    }
    let value_start = offset + split + 2;
    let value = parse_nvalue(&body[split + 2..]).map_err(|e| ParseError::new(e.col + value_start, e.message))?;
    env.bindings.insert(name.to_string(), value);
    Ok(())
}

/// Parses an environment file. `sem` overrides any `@semantics` line; under
/// the corrected semantics every component must lie in the unit interval.
pub fn parse_env(text: &str, sem: Option<Semantics>) -> Result<EnvFile, EnvError> {
    let mut env = EnvFile::default();
    let mut sites = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let before = env.bindings.len();
        parse_line(line, &mut env).map_err(|error| EnvError { line: n + 1, error })?;
        if env.bindings.len() > before {
            let name = line[..line.find(":=").unwrap()].trim().to_string();
            sites.push((n + 1, line.len() - line.trim_start().len() + 1, name));
        }
    }
    if let Some(s) = sem {
        env.semantics = Some(s);
    }
    if env.semantics.unwrap_or_default() == Semantics::Corrected {
        let unit = unit_interval();
        for (line, col, name) in sites {
            if env.bindings[&name].components().iter().any(|c| !c.is_subset(&unit)) {
                let msg = format!("`{name}` has a component outside the unit interval");
                return Err(EnvError {
                    line,
                    error: ParseError::new(col, msg),
                });
            }
        }
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bindings_and_comments() {
        let text = "# paradox\nA := ({1},{0},{0})\n\nB := ({0}, {0}, {1})  # falsity\n";
        let env = parse_env(text, None).unwrap();
        assert_eq!(env.bindings.len(), 2);
        assert_eq!(env.bindings["B"].to_string(), "({0}, {0}, {1})");
        assert_eq!(env.semantics, None);
    }

    #[test]
    fn semantics_directive_and_override() {
        let text = "@semantics original\nA := ({2},{0},{0})\n";
        assert_eq!(parse_env(text, None).unwrap().semantics, Some(Semantics::Original));
        let err = parse_env(text, Some(Semantics::Corrected)).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn reports_positions() {
        let err = parse_env("A := ({1},{0},{0})\nB := ({1},{0}, {x})\n", None).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.error.col, 17);
        let err = parse_env("A := ({1},{0},{0})\nA := ({1},{0},{0})\n", None).unwrap_err();
        assert!(err.to_string().contains("bound twice"));
        assert!(parse_env("and := ({1},{0},{0})\n", None).is_err());
    }
}
