//! Matrix files: the native `cmat` text format and Matrix Market
//! `array complex general`.
//!
//! Native format: a `cmat <rows> <cols>` line followed by one line per row
//! of whitespace-separated literals `[+-]?<float>[+-]<float>i`, e.g.
//! `2+0i` or `-1.5-0.25e-3i`. Both formats are written with 17 significant
//! digits, which round-trips every double exactly.

use std::fs;
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

const MM_HEADER: &str = "%%MatrixMarket matrix array complex general";

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Decimal float: digits with an optional fraction and exponent. Rejects
/// `inf`, `nan` and other spellings `f64::from_str` would accept.
fn is_decimal(s: &str) -> bool {
    let b = s.as_bytes();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        *i - start
    };
    let mut mantissa = digits(&mut i);
    if i < b.len() && b[i] == b'.' {
        i += 1;
        mantissa += digits(&mut i);
    }
    if mantissa == 0 {
        return false;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        if digits(&mut i) == 0 {
            return false;
        }
    }
    i == b.len()
}

fn finite(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Parses one complex literal `[+-]?<float>[+-]<float>i`.
pub fn parse_complex(token: &str) -> std::result::Result<C64, String> {
    let body = token
        .strip_suffix('i')
        .ok_or_else(|| format!("complex literal {token:?} must end in 'i'"))?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(|| format!("complex literal {token:?} needs both a real and an imaginary part"))?;
    let (re_s, im_s) = body.split_at(split);
    let unsigned_re = re_s.strip_prefix(['+', '-']).unwrap_or(re_s);
    let unsigned_im = &im_s[1..];
    if !is_decimal(unsigned_re) || !is_decimal(unsigned_im) {
        return Err(format!("malformed complex literal {token:?}"));
    }
    let re = finite(re_s).ok_or_else(|| format!("real part of {token:?} is not finite"))?;
    let im = finite(im_s).ok_or_else(|| format!("imaginary part of {token:?} is not finite"))?;
    Ok(C64::new(re, im))
}

fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

/// `re±imi` with 17 significant digits; the sign of zero is preserved.
pub fn format_complex(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_real(z.re), sign, format_real(z.im.abs()))
}

/// Tokens of a line with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

fn parse_dims(line_no: usize, toks: &[(usize, &str)], skip: usize) -> Result<(usize, usize)> {
    let dims = &toks[skip.min(toks.len())..];
    if dims.len() != 2 {
        let col = toks.first().map_or(1, |t| t.0);
        return Err(parse_error(line_no, col, "expected exactly two dimensions"));
    }
    let mut parsed = [0usize; 2];
    for (k, &(col, t)) in dims.iter().enumerate() {
        parsed[k] = t
            .parse()
            .map_err(|_| parse_error(line_no, col, format!("invalid dimension {t:?}")))?;
    }
    let (rows, cols) = (parsed[0], parsed[1]);
    if rows == 0 || cols == 0 {
        return Err(parse_error(line_no, dims[0].0, "dimensions must be positive"));
    }
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    Ok((rows, cols))
}

fn parse_cmat(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let htoks = tokens(header);
    if htoks.first().map(|t| t.1) != Some("cmat") {
        return Err(parse_error(hline, htoks.first().map_or(1, |t| t.0), "expected header 'cmat <rows> <cols>'"));
    }
    let (n, _) = parse_dims(hline, &htoks, 1)?;
    let mut m = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    let mut last_line = hline;
    for i in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_error(last_line + 1, 1, format!("expected {n} rows, found {i}")))?;
        last_line = line_no;
        let toks = tokens(line);
        if toks.len() != n {
            let col = toks.get(n).map_or(line.chars().count() + 1, |t| t.0);
            return Err(parse_error(line_no, col, format!("expected {n} entries, found {}", toks.len())));
        }
        for (j, &(col, t)) in toks.iter().enumerate() {
            m[(i, j)] = parse_complex(t).map_err(|msg| parse_error(line_no, col, msg))?;
        }
    }
    if let Some((line_no, line)) = lines.next() {
        let col = tokens(line).first().map_or(1, |t| t.0);
        return Err(parse_error(line_no, col, "unexpected content after the last row"));
    }
    ComplexMatrix::new(m)
}

fn parse_matrix_market(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let words: Vec<String> = header.split_whitespace().map(|w| w.to_ascii_lowercase()).collect();
    let expected: Vec<String> = MM_HEADER.split_whitespace().map(|w| w.to_ascii_lowercase()).collect();
    if words != expected {
        return Err(parse_error(1, 1, format!("only '{MM_HEADER}' is supported")));
    }
    let mut body = lines.filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('%'));
    let (dline, dims) = body.next().ok_or_else(|| parse_error(2, 1, "missing size line"))?;
    let (n, _) = parse_dims(dline, &tokens(dims), 0)?;
    let mut m = DMatrix::from_element(n, n, C64::new(0.0, 0.0));
    let mut last_line = dline;
    for k in 0..n * n {
        let (line_no, line) = body
            .next()
            .ok_or_else(|| parse_error(last_line + 1, 1, format!("expected {} values, found {k}", n * n)))?;
        last_line = line_no;
        let toks = tokens(line);
        if toks.len() != 2 {
            return Err(parse_error(line_no, toks.first().map_or(1, |t| t.0), "expected 're im'"));
        }
        let mut parts = [0.0; 2];
        for (p, &(col, t)) in toks.iter().enumerate() {
            let unsigned = t.strip_prefix(['+', '-']).unwrap_or(t);
            parts[p] = if is_decimal(unsigned) { finite(t) } else { None }
                .ok_or_else(|| parse_error(line_no, col, format!("invalid number {t:?}")))?;
        }
        // Column-major order.
        m[(k % n, k / n)] = C64::new(parts[0], parts[1]);
    }
    if let Some((line_no, _)) = body.next() {
        return Err(parse_error(line_no, 1, "unexpected content after the last value"));
    }
    ComplexMatrix::new(m)
}

/// Parses either supported format, chosen by the first line.
pub fn parse_matrix_str(text: &str) -> Result<ComplexMatrix> {
    if text.trim_start().starts_with("%%MatrixMarket") {
        parse_matrix_market(text)
    } else {
        parse_cmat(text)
    }
}

pub fn parse_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    parse_matrix_str(&fs::read_to_string(path)?)
}

pub fn format_cmat(a: &ComplexMatrix) -> String {
    let n = a.dim();
    let mut out = format!("cmat {n} {n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| format_complex(a.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_matrix_market(a: &ComplexMatrix) -> String {
    let n = a.dim();
    let mut out = format!("{MM_HEADER}\n{n} {n}\n");
    for j in 0..n {
        for i in 0..n {
            let z = a.get(i, j);
            out.push_str(&format!("{} {}\n", format_real(z.re), format_real(z.im)));
        }
    }
    out
}

/// Writes the native format.
pub fn write_matrix(path: impl AsRef<Path>, a: &ComplexMatrix) -> Result<()> {
    fs::write(path, format_cmat(a))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn parses_native_diagonal() {
        let a = parse_matrix_str("cmat 2 2\n1+0i 0+0i\n0+0i 0+1i\n").unwrap();
        assert_eq!(a, ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap());
    }

    #[test]
    fn parses_matrix_market() {
        let text = "%%MatrixMarket matrix array complex general\n% comment\n2 2\n1 0\n0 0\n0 0\n0 1\n";
        let a = parse_matrix_str(text).unwrap();
        assert_eq!(a, ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap());
        let text = "%%MatrixMarket matrix array complex general\n2 2\n1 0\n2 0\n3 0\n4 0\n";
        let a = parse_matrix_str(text).unwrap();
        assert_eq!(a.get(1, 0), c(2.0, 0.0));
        assert_eq!(a.get(0, 1), c(3.0, 0.0));
    }

    #[test]
    fn literal_grammar() {
        assert_eq!(parse_complex("-1.5-0.25i").unwrap(), c(-1.5, -0.25));
        assert_eq!(parse_complex("2e-3+1E+2i").unwrap(), c(2e-3, 100.0));
        assert_eq!(parse_complex("+.5-3.i").unwrap(), c(0.5, -3.0));
        for bad in ["1+i+", "1+i", "1", "1+2", "inf+0i", "nan+0i", "1e999+0i", "+1i", "1++2i", "1e+2i"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn malformed_entry_position() {
        match parse_matrix_str("cmat 2 2\n1+0i 1+i+\n0+0i 0+1i\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 6)),
            other => panic!("{other:?}"),
        }
        match parse_matrix_str("cmat 2 2\n1+0i\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_matrix_str("cmat 2 3\n"), Err(Error::NotSquare { .. })));
        assert!(parse_matrix_str("mat 2 2\n").is_err());
    }

    #[test]
    fn signed_zero_round_trips() {
        let a = ComplexMatrix::from_rows(&[vec![c(-0.0, -0.0)]]).unwrap();
        let b = parse_matrix_str(&format_cmat(&a)).unwrap();
        assert!(a.bits_eq(&b));
        let b = parse_matrix_str(&format_matrix_market(&a)).unwrap();
        assert!(a.bits_eq(&b));
    }
}
