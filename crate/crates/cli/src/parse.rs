//! Value parsers for complex numbers and sparse vectors on the command line.

use num_complex::Complex64;

/// Accepts `a`, `bi`, `a+bi`, `a-bi` and `re,im`. `i` alone means `0+1i`.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    if let Some((re, im)) = t.split_once(',') {
        return Ok(Complex64::new(real(re)?, real(im)?));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(real(&t)?, 0.0));
    };
    // the split is the last sign that is not the sign of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (real(&body[..i])?, imaginary(&body[i..])?),
        None => (0.0, imaginary(body)?),
    };
    Ok(Complex64::new(re, im))
}

fn imaginary(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => real(s),
    }
}

fn real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not finite: {s:?}"))
    }
}

/// `k:v` pairs separated by commas, e.g. `1:0.5,4:0.1-0.2i`. The empty
/// string is the zero vector.
pub fn sparse(s: &str) -> Result<Vec<(u64, Complex64)>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty() && *p != "0")
        .map(|p| {
            let (k, v) = p.split_once(':').ok_or_else(|| format!("expected index:value, got {p:?}"))?;
            let k: u64 = k.trim().parse().map_err(|_| format!("bad index {k:?}"))?;
            if k == 0 {
                return Err("indices start at 1".into());
            }
            Ok((k, complex(v)?))
        })
        .collect()
}
