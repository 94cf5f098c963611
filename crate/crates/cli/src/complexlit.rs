//! Complex literal grammar: `[-]ddd[.ddd][+|-ddd[.ddd]i]`, no spaces.
//! A bare `[-]ddd[.ddd]i` is also accepted for purely imaginary values.

use qdilog::{c64, C64};

pub fn parse_complex(s: &str) -> Result<C64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = |m: &str| Err(format!("bad complex literal '{s}': {m}"));
    if s.contains(' ') {
        return bad("no spaces allowed");
    }
    // split at the last +/- that is not the leading sign and not part of
    // an exponent (exponents are not part of the grammar)
    let bytes = s.as_bytes();
    let mut split = None;
    for (i, &c) in bytes.iter().enumerate().skip(1) {
        if c == b'+' || c == b'-' {
            split = Some(i);
        }
    }
    if s.ends_with('i') {
        let body = &s[..s.len() - 1];
        match split {
            Some(i) if i > 0 && i < s.len() - 1 => {
                let re: f64 = s[..i].parse().map_err(|_| format!("bad real part in '{s}'"))?;
                let ims = &body[i..];
                let im: f64 = if ims == "+" || ims == "-" {
                    return bad("missing digits in imaginary part");
                } else {
                    ims.parse().map_err(|_| format!("bad imaginary part in '{s}'"))?
                };
                Ok(c64(re, im))
            }
            _ => {
                let im: f64 = if body.is_empty() || body == "-" || body == "+" {
                    return bad("missing digits in imaginary part");
                } else {
                    body.parse().map_err(|_| format!("bad imaginary part in '{s}'"))?
                };
                Ok(c64(0.0, im))
            }
        }
    } else {
        if split.is_some() {
            return bad("trailing 'i' required when an imaginary part is present");
        }
        let re: f64 = s.parse().map_err(|_| format!("bad real literal '{s}'"))?;
        Ok(c64(re, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_complex("1.5").unwrap(), c64(1.5, 0.0));
        assert_eq!(parse_complex("-2").unwrap(), c64(-2.0, 0.0));
        assert_eq!(parse_complex("1.0326+0i").unwrap(), c64(1.0326, 0.0));
        assert_eq!(parse_complex("0.3-0.25i").unwrap(), c64(0.3, -0.25));
        assert_eq!(parse_complex("-0.5+2i").unwrap(), c64(-0.5, 2.0));
        assert_eq!(parse_complex("2i").unwrap(), c64(0.0, 2.0));
        assert!(parse_complex("1 + 2i").is_err());
        assert!(parse_complex("1+i").is_err());
        assert!(parse_complex("").is_err());
    }
}
