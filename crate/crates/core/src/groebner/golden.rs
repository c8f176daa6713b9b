//! Golden-basis files: a header line
//! `# order=degrevlex modulus=32003 nvars=8` followed by one polynomial per
//! line. Blank lines are ignored.

use crate::algebra::{MonomialOrder, Polynomial, PrimeField, Ring};

use super::GroebnerError;

pub fn write_golden(ring: Ring, basis: &[Polynomial]) -> String {
    let mut out = format!(
        "# order={} modulus={} nvars={}\n",
        ring.order(),
        ring.field().modulus(),
        ring.nvars()
    );
    for g in basis {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parses a golden file. The ring has `nvars / 2` vertices and, when
/// `nvars` is odd, one auxiliary variable.
pub fn read_golden(text: &str) -> Result<(Ring, Vec<Polynomial>), GroebnerError> {
    let bad = |s: &str| GroebnerError::Golden(s.to_string());
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .and_then(|h| h.strip_prefix('#'))
        .ok_or_else(|| bad("missing header line"))?;
    let (mut order, mut modulus, mut nvars) = (None, None, None);
    for field in header.split_whitespace() {
        let (k, v) = field
            .split_once('=')
            .ok_or_else(|| bad(&format!("header field '{field}'")))?;
        match k {
            "order" => order = MonomialOrder::parse(v),
            "modulus" => modulus = v.parse::<u32>().ok(),
            "nvars" => nvars = v.parse::<usize>().ok(),
            _ => return Err(bad(&format!("unknown header key '{k}'"))),
        }
    }
    let (Some(order), Some(modulus), Some(nvars)) = (order, modulus, nvars) else {
        return Err(bad("header needs order, modulus and nvars"));
    };
    let field = PrimeField::new(modulus)?;
    let ring = Ring::with_aux(nvars / 2, nvars % 2, field, order)?;
    let basis = lines
        .map(|l| Polynomial::parse(ring, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ring, basis))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        let basis = vec![Polynomial::parse(r, "x1*x2 - y1*y2").unwrap()];
        let text = write_golden(r, &basis);
        assert!(text.starts_with("# order=degrevlex modulus=32003 nvars=4\n"));
        assert_eq!(read_golden(&text).unwrap(), (r, basis));
    }

    #[test]
    fn rejects_bad_headers() {
        assert!(read_golden("x1").is_err());
        assert!(read_golden("# order=degrevlex nvars=4\nx1").is_err());
        assert!(read_golden("# order=degrevlex modulus=2 nvars=4\nx1").is_err());
        assert!(read_golden("# order=degrevlex modulus=7 nvars=2\nx3").is_err());
    }
}
