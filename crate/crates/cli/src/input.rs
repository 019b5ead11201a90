//! Plain-text sequence files: integers separated by whitespace or commas,
//! one period per file, no header.

use std::path::Path;

use lincomp_core::{Error, PeriodicSequence};

use crate::error::{CliError, CliResult};

/// Parses one period from text. Symbols are reduced mod q and the period
/// length is certified against q.
pub fn parse_sequence(text: &str, q: u64) -> lincomp_core::Result<PeriodicSequence> {
    let mut symbols = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for token in line.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                message: format!("`{token}` is not an integer"),
            })?;
            symbols.push(value);
        }
    }
    if symbols.is_empty() {
        return Err(Error::Usage("input contains no symbols".into()));
    }
    PeriodicSequence::new(q, &symbols)
}

pub fn parse_sequence_file(path: &Path, q: u64) -> CliResult<PeriodicSequence> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_sequence(&text, q)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitespace_separated() {
        let s = parse_sequence("0 1 1 0 1 1", 2).unwrap();
        let shape = s.shape();
        assert_eq!(s.len(), 6);
        assert_eq!(
            (shape.q(), shape.n(), shape.p(), shape.m()),
            (2, 1, Some(3), 1)
        );
    }

    #[test]
    fn symbols_are_reduced() {
        let s = parse_sequence("2 2 2", 2).unwrap();
        assert_eq!(s.symbols(), &[0, 0, 0]);
        assert_eq!(
            (s.shape().n(), s.shape().p(), s.shape().m()),
            (0, Some(3), 1)
        );
        let s = parse_sequence("-1, 4\n7", 3).unwrap();
        assert_eq!(s.symbols(), &[2, 1, 1]);
    }

    #[test]
    fn commas_and_newlines_mix() {
        let s = parse_sequence("1,0,\n0 ,1\n\n1,1\n", 2).unwrap();
        assert_eq!(s.symbols(), &[1, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn bad_token_reports_its_line() {
        let err = parse_sequence("0 1\n1 x 0\n", 2).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "`x` is not an integer".into()
            }
        );
        assert!(matches!(
            parse_sequence("1.5", 2),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn empty_input_is_usage_error() {
        assert!(matches!(parse_sequence("", 2), Err(Error::Usage(_))));
        assert!(matches!(parse_sequence(" ,\n ", 2), Err(Error::Usage(_))));
    }

    #[test]
    fn shape_failures_pass_through() {
        assert!(matches!(
            parse_sequence("1,0,0,0", 3),
            Err(Error::Precondition(_))
        ));
        let err = parse_sequence(&"0 ".repeat(28), 2).unwrap_err();
        assert_eq!(
            err.to_string(),
            "precondition failed: 2 is not a primitive root modulo 49"
        );
        assert!(matches!(
            parse_sequence("0 0 0 0 0 0", 4),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = parse_sequence_file(Path::new("/nonexistent/seq.txt"), 2).unwrap_err();
        assert!(matches!(err, CliError::Io { .. }));
        assert_eq!(err.exit_code(), 1);
    }
}
